#include <cmath>

#include "tukey/depth.hpp"
#include "tukey/errors.hpp"

namespace tukey {

namespace {

bool normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (const double c : v) {
        norm += c * c;
    }
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        return false;
    }
    for (double& c : v) {
        c /= norm;
    }
    return true;
}

constexpr double kInitialStep = 0.25;
constexpr double kMinimumStep = 1e-12;

}  // namespace

std::vector<std::vector<double>> approx_directions(std::size_t dim, std::size_t count, Seed seed) {
    if (dim == 0) {
        throw ValidationError("direction dimension must be at least 1");
    }
    Rng rng(seed);
    std::vector<std::vector<double>> out;
    out.reserve(count);
    std::vector<double> u(dim);
    while (out.size() < count) {
        for (double& c : u) {
            c = rng.normal();
        }
        if (normalize(u)) {
            out.push_back(u);
        }
    }
    return out;
}

DepthResult depth_approx(const SampleMatrix& sample, std::span<const double> x,
                         const ApproxOptions& options) {
    if (options.directions == 0) {
        throw ValidationError("depth_approx needs at least one direction");
    }
    if (x.size() != sample.dim()) {
        throw ValidationError("query point has wrong dimension");
    }
    const std::size_t d = sample.dim();

    std::vector<double> best_u;
    std::size_t best = sample.rows() + 1;
    for (const auto& u : approx_directions(d, options.directions, options.seed)) {
        const std::size_t count = halfspace_count(sample, x, u);
        if (count < best) {
            best = count;
            best_u = u;
        }
    }

    if (options.refine) {
        double step = kInitialStep;
        int evaluations = 0;
        std::vector<double> candidate(d);
        while (evaluations < options.refine_budget && step > kMinimumStep && best > 0) {
            bool improved = false;
            for (std::size_t j = 0; j < d && evaluations < options.refine_budget; ++j) {
                for (const double sign : {1.0, -1.0}) {
                    if (evaluations >= options.refine_budget) {
                        break;
                    }
                    candidate = best_u;
                    candidate[j] += sign * step;
                    if (!normalize(candidate)) {
                        continue;
                    }
                    ++evaluations;
                    const std::size_t count = halfspace_count(sample, x, candidate);
                    if (count < best) {
                        best = count;
                        best_u = candidate;
                        improved = true;
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
            }
        }
    }

    DepthResult result;
    result.total = sample.rows();
    result.method = DepthMethod::Approx;
    result.count = best;
    result.witness = Direction(best_u);
    return result;
}

}  // namespace tukey
