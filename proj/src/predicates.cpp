#include "tukey/predicates.hpp"

#include <cmath>
#include <cstddef>

namespace tukey::geom {

namespace {

constexpr double kEpsilon = 0x1p-53;
constexpr double kFilterBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

struct Pair {
    double hi;
    double lo;
};

Pair two_product(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

Pair two_sum(double a, double b) {
    const double s = a + b;
    const double bv = s - a;
    const double av = s - bv;
    return {s, (a - av) + (b - bv)};
}

// Shewchuk's Grow-Expansion over a small fixed buffer. `terms` holds a
// nonoverlapping expansion in increasing magnitude; after the call it holds the
// exact sum with b added, one component longer.
void grow_expansion(double* terms, std::size_t& length, double b) {
    double q = b;
    for (std::size_t i = 0; i < length; ++i) {
        const Pair s = two_sum(q, terms[i]);
        terms[i] = s.lo;
        q = s.hi;
    }
    terms[length++] = q;
}

}  // namespace

int orientation_exact(const Point2& origin, const Point2& p, const Point2& q) {
    // cross(p - o, q - o) expanded into the six products that do not cancel.
    const Pair products[6] = {
        two_product(p[0], q[1]),       two_product(-p[0], origin[1]), two_product(-origin[0], q[1]),
        two_product(-p[1], q[0]),      two_product(p[1], origin[0]),  two_product(origin[1], q[0]),
    };
    double terms[12];
    std::size_t length = 0;
    for (const Pair& product : products) {
        grow_expansion(terms, length, product.lo);
        grow_expansion(terms, length, product.hi);
    }
    for (std::size_t i = length; i-- > 0;) {
        if (terms[i] > 0.0) {
            return 1;
        }
        if (terms[i] < 0.0) {
            return -1;
        }
    }
    return 0;
}

int orientation(const Point2& origin, const Point2& p, const Point2& q) {
    // Shewchuk's orient2d filter with (a, b, c) = (p, q, origin).
    const double left = (p[0] - origin[0]) * (q[1] - origin[1]);
    const double right = (p[1] - origin[1]) * (q[0] - origin[0]);
    const double det = left - right;
    double detsum;
    if (left > 0.0) {
        if (right <= 0.0) {
            return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        }
        detsum = left + right;
    } else if (left < 0.0) {
        if (right >= 0.0) {
            return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        }
        detsum = -left - right;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    const double bound = kFilterBound * detsum;
    if (det >= bound || -det >= bound) {
        return det > 0.0 ? 1 : -1;
    }
    return orientation_exact(origin, p, q);
}

}  // namespace tukey::geom
