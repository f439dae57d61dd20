#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tukey/alpha_symmetric.hpp"
#include "tukey/rng.hpp"
#include "tukey/sample_matrix.hpp"

namespace tukey {

enum class DepthMethod { Exact1D, Exact2D, Brute, Approx };

std::string to_string(DepthMethod method);

/// Empirical halfspace depth as the exact fraction count / total.
struct DepthResult {
    std::size_t count = 0;
    std::size_t total = 1;
    DepthMethod method = DepthMethod::Exact1D;
    // For the exact sweep this is one representative of an open cone of
    // minimizing directions.
    std::optional<Direction> witness;

    double value() const { return static_cast<double>(count) / static_cast<double>(total); }
    /// "count/total (value)".
    std::string fraction() const;
};

/// Number of rows with u'(X_i - x) <= 0.
std::size_t halfspace_count(const SampleMatrix& sample, std::span<const double> x,
                            std::span<const double> u);

/// min(#{X_i <= x}, #{X_i >= x}).
DepthResult depth_1d(std::span<const double> sample, double x);

/// Exact bivariate depth by an angular sweep with exact orientation tests.
/// O(n log n).
DepthResult depth_2d_exact(const SampleMatrix& sample, std::span<const double> x);

/// Exact depth by enumerating every hyperplane through x and d - 1 sample
/// points, in exact integer arithmetic. An oracle: d <= 3 and n <= 200 only.
DepthResult depth_bruteforce(const SampleMatrix& sample, std::span<const double> x);

struct ApproxOptions {
    std::size_t directions = 5000;
    Seed seed = 0;
    bool refine = true;
    int refine_budget = 200;
};

/// Unit directions used by depth_approx: normalized Gaussian vectors drawn
/// sequentially from Rng(seed), so every k-prefix is the k-direction set.
std::vector<std::vector<double>> approx_directions(std::size_t dim, std::size_t count, Seed seed);

/// Upper bound on the depth: the smallest weak-side count over random
/// directions, optionally sharpened by coordinate-wise descent on the sphere
/// with step halving.
DepthResult depth_approx(const SampleMatrix& sample, std::span<const double> x,
                         const ApproxOptions& options = {});

}  // namespace tukey
