#include "tukey/alpha_symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tukey/errors.hpp"

namespace tukey {

std::string to_string(LawKind kind) {
    return kind == LawKind::Coupled ? "coupled" : "independent";
}

LawKind parse_law_kind(const std::string& text) {
    if (text == "coupled" || text == "P") {
        return LawKind::Coupled;
    }
    if (text == "independent" || text == "Q") {
        return LawKind::Independent;
    }
    throw ValidationError("unknown law '" + text + "' (expected coupled or independent)");
}

Direction::Direction(std::vector<double> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw ValidationError("direction must have at least one component");
    }
    bool nonzero = false;
    for (const double c : components_) {
        if (!std::isfinite(c)) {
            throw ValidationError("direction components must be finite");
        }
        nonzero = nonzero || c != 0.0;
    }
    if (!nonzero) {
        throw ValidationError("direction must be nonzero");
    }
}

double lp_norm(std::span<const double> u, double index) {
    double scale = 0.0;
    for (const double c : u) {
        scale = std::max(scale, std::abs(c));
    }
    if (scale == 0.0 || std::isinf(index)) {
        return scale;
    }
    double sum = 0.0;
    if (index == 1.0) {
        for (const double c : u) {
            sum += std::abs(c) / scale;
        }
        return scale * sum;
    }
    if (index == 0.5) {
        for (const double c : u) {
            sum += std::sqrt(std::abs(c) / scale);
        }
        return scale * (sum * sum);
    }
    for (const double c : u) {
        sum += std::pow(std::abs(c) / scale, index);
    }
    return scale * std::pow(sum, 1.0 / index);
}

AlphaSymmetricLaw::AlphaSymmetricLaw(LawKind kind, std::size_t dim, double alpha)
    : kind_(kind), dim_(dim), alpha_(alpha) {
    if (dim_ == 0) {
        throw ValidationError("law dimension must be at least 1");
    }
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
        throw ValidationError("alpha-symmetric index must lie in (0, 1], got " + std::to_string(alpha_));
    }
}

double AlphaSymmetricLaw::projection_norm_index() const {
    return kind_ == LawKind::Coupled ? 1.0 : alpha_;
}

double AlphaSymmetricLaw::cf(std::span<const double> t) const {
    if (t.size() != dim_) {
        throw ValidationError("cf argument has wrong dimension");
    }
    double exponent = 0.0;
    if (kind_ == LawKind::Coupled) {
        double l1 = 0.0;
        for (const double c : t) {
            l1 += std::abs(c);
        }
        exponent = std::pow(l1, alpha_);
    } else {
        for (const double c : t) {
            exponent += std::pow(std::abs(c), alpha_);
        }
    }
    return std::exp(-exponent);
}

SampleMatrix AlphaSymmetricLaw::sample(std::size_t n, Seed seed) const {
    if (n == 0) {
        throw ValidationError("sample size must be at least 1");
    }
    if (kind_ == LawKind::Coupled && alpha_ != 0.5) {
        throw UnsupportedParameter("coupled law sampling is only available for alpha = 0.5, got " +
                                   std::to_string(alpha_));
    }
    Rng rng(seed);
    std::vector<double> data(n * dim_);
    if (kind_ == LawKind::Independent) {
        marginal().fill(rng, data);
    } else {
        const PositiveStableLaw mixing(0.5);
        const StableLaw1D cauchy(1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double v = mixing.draw(rng);
            for (std::size_t j = 0; j < dim_; ++j) {
                data[i * dim_ + j] = v * cauchy.draw(rng);
            }
        }
    }
    return SampleMatrix(n, dim_, std::move(data), Provenance{describe(), seed});
}

std::string AlphaSymmetricLaw::describe() const {
    return to_string(kind_) + "(d=" + std::to_string(dim_) + ", alpha=" + format_double(alpha_) + ")";
}

DualNormResult dual_norm_inf(std::span<const double> x, double alpha) {
    if (x.empty()) {
        throw ValidationError("dual norm argument must be nonempty");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ValidationError("dual norm index must lie in (0, 1]");
    }
    std::size_t best = 0;
    for (std::size_t j = 1; j < x.size(); ++j) {
        if (std::abs(x[j]) > std::abs(x[best])) {
            best = j;
        }
    }
    std::vector<double> witness(x.size(), 0.0);
    witness[best] = x[best] > 0.0 ? -1.0 : 1.0;
    return {-std::abs(x[best]), Direction(std::move(witness))};
}

double closed_form_depth(const AlphaSymmetricLaw& law, std::span<const double> x,
                         const InversionOptions& options) {
    if (x.size() != law.dim()) {
        throw ValidationError("query point has wrong dimension");
    }
    const double sup = -dual_norm_inf(x, law.alpha()).value;
    return law.marginal().cdf(-sup, options);
}

std::vector<double> project_scaled(const SampleMatrix& sample, const Direction& u, double norm_index) {
    if (u.dim() != sample.dim()) {
        throw ValidationError("direction dimension does not match sample");
    }
    const double norm = lp_norm(u.components(), norm_index);
    std::vector<double> unit(u.components().begin(), u.components().end());
    for (double& c : unit) {
        c /= norm;
    }
    std::vector<double> out(sample.rows());
    for (std::size_t i = 0; i < sample.rows(); ++i) {
        const auto row = sample.row(i);
        double dot = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            dot += unit[j] * row[j];
        }
        out[i] = dot;
    }
    return out;
}

}  // namespace tukey
