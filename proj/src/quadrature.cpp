#include "tukey/quadrature.hpp"

#include <array>
#include <cmath>

namespace tukey::quad {

namespace {

// QUADPACK qk15 nodes (x >= 0) and weights; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

Estimate refine(const std::function<double(double)>& f, double a, double b, double abs_tol, int depth,
                const Estimate& panel) {
    if (panel.error <= abs_tol || depth <= 0) {
        return panel;
    }
    const double mid = 0.5 * (a + b);
    const Estimate left_panel = kronrod15(f, a, mid);
    const Estimate right_panel = kronrod15(f, mid, b);
    const Estimate left = refine(f, a, mid, 0.5 * abs_tol, depth - 1, left_panel);
    const Estimate right = refine(f, mid, b, 0.5 * abs_tol, depth - 1, right_panel);
    return {left.value + right.value, left.error + right.error,
            panel.evaluations + left.evaluations + right.evaluations};
}

}  // namespace

Estimate kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * pair;
        }
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half), 15};
}

Estimate adaptive_kronrod(const std::function<double(double)>& f, double a, double b, double abs_tol,
                          int max_depth) {
    return refine(f, a, b, abs_tol, max_depth, kronrod15(f, a, b));
}

}  // namespace tukey::quad
