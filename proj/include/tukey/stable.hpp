#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tukey/rng.hpp"

namespace tukey {

/// Controls the characteristic-function inversion behind StableLaw1D::cdf.
struct InversionOptions {
    double tol = 1e-8;           // absolute error target on F(x)
    int segment_budget = 10000;  // oscillation segments before giving up
};

/// Univariate symmetric alpha-stable law with characteristic function
/// exp(-|t|^alpha), 0 < alpha <= 2. alpha = 1 is the standard Cauchy law and
/// alpha = 2 is N(0, 2).
///
/// Tolerances of cdf() are guaranteed for alpha in [1/4, 2]; smaller indices
/// are accepted but the oscillatory scheme may exhaust its segment budget.
class StableLaw1D {
public:
    explicit StableLaw1D(double alpha);

    double alpha() const { return alpha_; }

    double cf(double t) const;

    /// Distribution function by Gil-Pelaez inversion. Throws NumericalError
    /// when the segment budget is exhausted.
    double cdf(double x, const InversionOptions& options = {}) const;

    /// Chambers-Mallows-Stuck variate; the alpha = 1 branch is tan(U).
    double draw(Rng& rng) const;
    void fill(Rng& rng, std::span<double> out) const;
    std::vector<double> sample(std::size_t n, Seed seed) const;

    /// Order-of-magnitude estimate of the upper tail 1 - F(x) for x > 0, used
    /// to short-circuit the far tails.
    double tail_estimate(double x) const;

private:
    double upper_tail(double x, const InversionOptions& options) const;

    double alpha_;
};

/// Positive beta-stable law with Laplace transform exp(-lambda^beta),
/// 0 < beta < 1. beta = 1/2 is the Levy law, sampled as 1 / (2 Z^2).
class PositiveStableLaw {
public:
    explicit PositiveStableLaw(double beta);

    double beta() const { return beta_; }
    double laplace(double lambda) const;

    /// beta = 1/2: 1/(2 Z^2) with Z redrawn on an exact zero. Otherwise
    /// Kanter's representation.
    double draw(Rng& rng) const;
    std::vector<double> sample(std::size_t n, Seed seed) const;

private:
    double beta_;
};

/// Tabulated F for bulk evaluation (KS statistics over large samples).
///
/// Stores the upper tail on a uniform grid in w = log1p(|x|) and interpolates
/// with four-point Lagrange stencils. Near 0, where F is not smooth for
/// alpha < 1, and beyond the table the exact evaluator is called directly.
class CdfTable {
public:
    explicit CdfTable(const StableLaw1D& law, double tol = 1e-10, double step = 0.005,
                      double x_max = 1e9);

    double operator()(double x) const;
    const StableLaw1D& law() const { return law_; }

private:
    StableLaw1D law_;
    InversionOptions options_;
    double step_;
    double w_max_;
    std::vector<double> upper_;  // 1 - F(expm1(i * step))
};

}  // namespace tukey
