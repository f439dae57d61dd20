#include "tukey/stable.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tukey/errors.hpp"
#include "tukey/quadrature.hpp"

namespace tukey {

namespace {

constexpr double kPi = std::numbers::pi;

// Share of the error budget granted to each oscillation segment, and the
// bisection depth allowed there.
constexpr double kSegmentShare = 1e-3;
constexpr int kSegmentMaxDepth = 12;
// Depth of the repeated-averaging transform applied to the partial sums.
constexpr int kAveragingDepth = 16;

// Repeated averaging of the last depth+1 partial sums of an alternating series.
double averaged_limit(const std::vector<double>& partial, int depth) {
    const auto count = static_cast<int>(partial.size());
    depth = std::min(depth, count - 1);
    std::array<double, kAveragingDepth + 1> level{};
    for (int j = 0; j <= depth; ++j) {
        level[j] = partial[count - 1 - depth + j];
    }
    for (int round = 0; round < depth; ++round) {
        for (int j = 0; j < depth - round; ++j) {
            level[j] = 0.5 * (level[j] + level[j + 1]);
        }
    }
    return level[0];
}

}  // namespace

StableLaw1D::StableLaw1D(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0)) {
        throw ValidationError("stable index alpha must lie in (0, 2], got " + std::to_string(alpha));
    }
}

double StableLaw1D::cf(double t) const { return std::exp(-std::pow(std::abs(t), alpha_)); }

double StableLaw1D::tail_estimate(double x) const {
    x = std::abs(x);
    if (alpha_ == 2.0) {
        // N(0, 2) Mills-ratio bound.
        return std::exp(-0.25 * x * x) / (x * std::sqrt(kPi));
    }
    // Leading term of the power-law tail, doubled to stay on the safe side.
    const double amplitude = std::tgamma(alpha_) * std::sin(0.5 * kPi * alpha_) / kPi;
    return 2.0 * amplitude * std::pow(x, -alpha_);
}

double StableLaw1D::cdf(double x, const InversionOptions& options) const {
    if (!(options.tol > 0.0)) {
        throw ValidationError("cdf tolerance must be positive");
    }
    if (!std::isfinite(x)) {
        throw ValidationError("cdf argument must be finite");
    }
    if (x == 0.0) {
        return 0.5;
    }
    const double upper = upper_tail(std::abs(x), options);
    return x > 0.0 ? 1.0 - upper : upper;
}

// 1 - F(x) = 1/2 - (1/pi) * integral_0^inf sin(t x) exp(-t^alpha) / t dt, x > 0.
//
// For alpha <= 1 the substitution t = s^(1/alpha) turns the integrand into
// (1/alpha) sin(x s^(1/alpha)) exp(-s) / s, with no singular factor at 0 and an
// exponential envelope. Otherwise t is kept, since exp(-t^alpha) already decays
// fast. Integration runs between consecutive zeros of the sine; the alternating
// segment sums are accelerated by repeated averaging.
double StableLaw1D::upper_tail(double x, const InversionOptions& options) const {
    if (tail_estimate(x) < 0.1 * options.tol) {
        return 0.0;
    }

    const bool substituted = alpha_ <= 1.0;
    const double inv_alpha = 1.0 / alpha_;
    auto integrand = [&](double v) {
        if (v <= 0.0) {
            return substituted ? (alpha_ == 1.0 ? x : 0.0) : x;
        }
        if (substituted) {
            return inv_alpha * std::sin(x * std::pow(v, inv_alpha)) * std::exp(-v) / v;
        }
        return std::sin(x * v) * std::exp(-std::pow(v, alpha_)) / v;
    };
    auto zero = [&](int k) {
        const double t = k * kPi / x;
        return substituted ? std::pow(t, alpha_) : t;
    };

    // Error budget in integral units: F = 1/2 - I/pi.
    const double target = kPi * options.tol;
    const double term_floor = target * 1e-3;

    std::vector<double> partial;
    partial.reserve(256);
    double sum = 0.0;
    double previous_estimate = 0.0;
    int agreeing = 0;
    double lo = 0.0;
    for (int k = 0; k < options.segment_budget; ++k) {
        const double hi = zero(k + 1);
        const double piece =
            quad::adaptive_kronrod(integrand, lo, hi, kSegmentShare * target, kSegmentMaxDepth).value;
        lo = hi;
        sum += piece;
        partial.push_back(sum);

        if (k >= 1 && std::abs(piece) < term_floor) {
            return std::clamp(0.5 - sum / kPi, 0.0, 0.5);
        }
        if (k >= 4) {
            const double estimate = averaged_limit(partial, kAveragingDepth);
            if (std::abs(estimate - previous_estimate) < 0.02 * target) {
                if (++agreeing >= 3) {
                    return std::clamp(0.5 - estimate / kPi, 0.0, 0.5);
                }
            } else {
                agreeing = 0;
            }
            previous_estimate = estimate;
        }
    }
    throw NumericalError("cdf inversion did not converge within " +
                         std::to_string(options.segment_budget) + " segments at |x| = " +
                         std::to_string(x) + " (alpha = " + std::to_string(alpha_) + ")");
}

double StableLaw1D::draw(Rng& rng) const {
    const double u = kPi * (rng.uniform_open() - 0.5);
    if (alpha_ == 1.0) {
        return std::tan(u);
    }
    const double w = rng.exponential();
    const double head = std::sin(alpha_ * u) / std::pow(std::cos(u), 1.0 / alpha_);
    return head * std::pow(std::cos((1.0 - alpha_) * u) / w, (1.0 - alpha_) / alpha_);
}

void StableLaw1D::fill(Rng& rng, std::span<double> out) const {
    for (double& v : out) {
        v = draw(rng);
    }
}

std::vector<double> StableLaw1D::sample(std::size_t n, Seed seed) const {
    if (n == 0) {
        throw ValidationError("sample size must be at least 1");
    }
    Rng rng(seed);
    std::vector<double> out(n);
    fill(rng, out);
    return out;
}

PositiveStableLaw::PositiveStableLaw(double beta) : beta_(beta) {
    if (!(beta > 0.0 && beta < 1.0)) {
        throw ValidationError("positive stable index beta must lie in (0, 1), got " +
                              std::to_string(beta));
    }
}

double PositiveStableLaw::laplace(double lambda) const {
    if (lambda < 0.0) {
        throw ValidationError("Laplace transform argument must be nonnegative");
    }
    return std::exp(-std::pow(lambda, beta_));
}

double PositiveStableLaw::draw(Rng& rng) const {
    if (beta_ == 0.5) {
        double z = 0.0;
        do {
            z = rng.normal();
        } while (z == 0.0);
        return 0.5 / (z * z);
    }
    const double u = kPi * rng.uniform_open();
    const double w = rng.exponential();
    const double a = std::pow(std::sin(beta_ * u), beta_ / (1.0 - beta_)) *
                     std::sin((1.0 - beta_) * u) / std::pow(std::sin(u), 1.0 / (1.0 - beta_));
    return std::pow(a / w, (1.0 - beta_) / beta_);
}

std::vector<double> PositiveStableLaw::sample(std::size_t n, Seed seed) const {
    if (n == 0) {
        throw ValidationError("sample size must be at least 1");
    }
    Rng rng(seed);
    std::vector<double> out(n);
    for (double& v : out) {
        v = draw(rng);
    }
    return out;
}

namespace {
constexpr double kTableDirectBelow = 0.25;
}  // namespace

CdfTable::CdfTable(const StableLaw1D& law, double tol, double step, double x_max)
    : law_(law), options_{.tol = tol}, step_(step), w_max_(std::log1p(x_max)) {
    const auto nodes = static_cast<std::size_t>(std::ceil(w_max_ / step_)) + 1;
    w_max_ = static_cast<double>(nodes - 1) * step_;
    upper_.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const double x = std::expm1(static_cast<double>(i) * step_);
        upper_[i] = i == 0 ? 0.5 : 1.0 - law_.cdf(x, options_);
    }
}

double CdfTable::operator()(double x) const {
    const double w = std::log1p(std::abs(x));
    double upper;
    // F is not smooth at 0 for alpha < 1, so small |x| bypasses the grid.
    if (w >= w_max_ - 2.0 * step_ || std::abs(x) < kTableDirectBelow) {
        upper = x == 0.0 ? 0.5 : 1.0 - law_.cdf(std::abs(x), options_);
    } else {
        const double pos = w / step_;
        auto base = static_cast<std::ptrdiff_t>(std::floor(pos)) - 1;
        base = std::clamp<std::ptrdiff_t>(base, 0, static_cast<std::ptrdiff_t>(upper_.size()) - 4);
        const double r = pos - static_cast<double>(base);
        // Lagrange weights for nodes at offsets 0..3.
        const double l0 = -(r - 1.0) * (r - 2.0) * (r - 3.0) / 6.0;
        const double l1 = r * (r - 2.0) * (r - 3.0) / 2.0;
        const double l2 = -r * (r - 1.0) * (r - 3.0) / 2.0;
        const double l3 = r * (r - 1.0) * (r - 2.0) / 6.0;
        upper = l0 * upper_[base] + l1 * upper_[base + 1] + l2 * upper_[base + 2] +
                l3 * upper_[base + 3];
    }
    return x >= 0.0 ? 1.0 - upper : upper;
}

}  // namespace tukey
