#include "tukey/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "tukey/errors.hpp"
#include "tukey/ks.hpp"

namespace tukey {

void ExperimentConfig::validate() const {
    if (dim < 2) {
        throw ValidationError("experiment dimension must be at least 2, got " + std::to_string(dim));
    }
    if (n < 100) {
        throw ValidationError("experiment sample size must be at least 100, got " + std::to_string(n));
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ValidationError("experiment alpha must lie in (0, 1]");
    }
    if (!(tol > 0.0)) {
        throw ValidationError("experiment tolerance must be positive");
    }
    if (directions == 0) {
        throw ValidationError("experiment needs at least one approximation direction");
    }
    for (const auto& x : grid) {
        if (x.size() != dim) {
            throw ValidationError("grid point has dimension " + std::to_string(x.size()) + ", expected " +
                                  std::to_string(dim));
        }
    }
    if (grid.empty()) {
        if (!(box.step > 0.0) || !(box.hi >= box.lo)) {
            throw ValidationError("grid box needs step > 0 and hi >= lo");
        }
        if (dim >= 3 && random_points == 0) {
            throw ValidationError("grid is empty");
        }
    }
    if (cf_probe && cf_probe->size() != dim) {
        throw ValidationError("cf probe has wrong dimension");
    }
}

StreamSeeds StreamSeeds::derive(Seed master) {
    return {derive_seed(master, "sample/coupled"), derive_seed(master, "sample/independent"),
            derive_seed(master, "depth/directions"), derive_seed(master, "grid"),
            derive_seed(master, "projection/directions")};
}

std::vector<Point> box_grid(std::size_t dim, const BoxGrid& box) {
    if (!(box.step > 0.0) || !(box.hi >= box.lo)) {
        throw ValidationError("grid box needs step > 0 and hi >= lo");
    }
    const auto per_axis = static_cast<std::size_t>(std::floor((box.hi - box.lo) / box.step + 1e-9)) + 1;
    std::vector<double> axis(per_axis);
    for (std::size_t i = 0; i < per_axis; ++i) {
        axis[i] = box.lo + static_cast<double>(i) * box.step;
    }
    std::vector<Point> out;
    std::vector<std::size_t> index(dim, 0);
    while (true) {
        Point p(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            p[j] = axis[index[j]];
        }
        out.push_back(std::move(p));
        std::size_t j = dim;
        while (j > 0 && ++index[j - 1] == per_axis) {
            index[--j] = 0;
        }
        if (j == 0) {
            break;
        }
    }
    return out;
}

std::vector<Point> cube_points(std::size_t dim, std::size_t count, double radius, Seed seed) {
    Rng rng(seed);
    std::vector<Point> out(count, Point(dim));
    for (auto& p : out) {
        for (double& c : p) {
            c = radius * (2.0 * rng.uniform_open() - 1.0);
        }
    }
    return out;
}

std::vector<Point> resolve_grid(const ExperimentConfig& cfg) {
    if (!cfg.grid.empty()) {
        return cfg.grid;
    }
    if (cfg.dim == 2) {
        return box_grid(2, cfg.box);
    }
    const double radius = std::max(std::abs(cfg.box.lo), std::abs(cfg.box.hi));
    return cube_points(cfg.dim, cfg.random_points, radius, StreamSeeds::derive(cfg.seed).grid);
}

namespace {

unsigned worker_count(unsigned requested, std::size_t tasks) {
    unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
}

std::string describe_point(const Point& x) {
    std::string text = "(";
    for (std::size_t j = 0; j < x.size(); ++j) {
        text += (j ? "," : "") + format_double(x[j]);
    }
    return text + ")";
}

// Runs task(i) for i in [0, count) on a few threads. A failure at index i is
// rethrown with the grid point attached; the lowest failing index wins.
template <typename Task>
void for_each_point(const std::vector<Point>& grid, unsigned threads, Task task) {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(grid.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                task(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const unsigned count = worker_count(threads, grid.size());
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!failures[i]) {
            continue;
        }
        const std::string where = "grid point " + describe_point(grid[i]) + ": ";
        try {
            std::rethrow_exception(failures[i]);
        } catch (const NumericalError& e) {
            throw NumericalError(where + e.what());
        } catch (const ValidationError& e) {
            throw ValidationError(where + e.what());
        }
    }
}

Point default_probe(std::size_t dim) {
    Point t(dim, 0.0);
    t[0] = 1.0;
    t[1] = 1.0;
    return t;
}

}  // namespace

CfGap cf_gap(const SampleMatrix& p, const SampleMatrix& q, const Point& t) {
    if (t.size() != p.dim() || t.size() != q.dim()) {
        throw ValidationError("cf probe has wrong dimension");
    }
    auto moments = [&](const SampleMatrix& sample) {
        double sum = 0.0, sum_sq = 0.0;
        for (std::size_t i = 0; i < sample.rows(); ++i) {
            const auto row = sample.row(i);
            double dot = 0.0;
            for (std::size_t j = 0; j < t.size(); ++j) {
                dot += t[j] * row[j];
            }
            const double c = std::cos(dot);
            sum += c;
            sum_sq += c * c;
        }
        const auto n = static_cast<double>(sample.rows());
        const double mean = sum / n;
        const double variance = std::max(0.0, sum_sq / n - mean * mean) * n / (n - 1.0);
        return std::pair{mean, variance / n};
    };
    const auto [mean_p, var_p] = moments(p);
    const auto [mean_q, var_q] = moments(q);
    CfGap out;
    out.t = t;
    out.cf_p = mean_p;
    out.cf_q = mean_q;
    out.gap = mean_p - mean_q;
    out.standard_error = std::sqrt(var_p + var_q);
    return out;
}

ExperimentReport run_counterexample(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    cfg.validate();
    const auto grid = resolve_grid(cfg);
    if (grid.empty()) {
        throw ValidationError("grid is empty");
    }
    const auto seeds = StreamSeeds::derive(cfg.seed);
    const AlphaSymmetricLaw law_p(LawKind::Coupled, cfg.dim, cfg.alpha);
    const AlphaSymmetricLaw law_q(LawKind::Independent, cfg.dim, cfg.alpha);
    const SampleMatrix sample_p = law_p.sample(cfg.n, seeds.coupled);
    const SampleMatrix sample_q = law_q.sample(cfg.n, seeds.independent);

    ExperimentReport report;
    report.config = cfg;
    report.engine = cfg.dim == 2 ? DepthMethod::Exact2D : DepthMethod::Approx;
    report.rows.resize(grid.size());

    const ApproxOptions approx{cfg.directions, seeds.directions, cfg.refine};
    const InversionOptions inversion{.tol = cfg.tol};
    auto evaluate = [&](const SampleMatrix& sample, const Point& x) {
        return report.engine == DepthMethod::Exact2D ? depth_2d_exact(sample, x)
                                                     : depth_approx(sample, x, approx);
    };
    for_each_point(grid, cfg.threads, [&](std::size_t i) {
        GridRow& row = report.rows[i];
        row.x = grid[i];
        row.closed_form = closed_form_depth(law_p, row.x, inversion);
        row.depth_p = evaluate(sample_p, row.x);
        row.depth_q = evaluate(sample_q, row.x);
        row.err_p = std::abs(row.depth_p.value() - row.closed_form);
        row.err_q = std::abs(row.depth_q.value() - row.closed_form);
        row.err_pq = std::abs(row.depth_p.value() - row.depth_q.value());
    });
    for (const auto& row : report.rows) {
        report.sup_err_p = std::max(report.sup_err_p, row.err_p);
        report.sup_err_q = std::max(report.sup_err_q, row.err_q);
        report.sup_err_pq = std::max(report.sup_err_pq, row.err_pq);
    }

    report.cf_gap = cf_gap(sample_p, sample_q, cfg.cf_probe.value_or(default_probe(cfg.dim)));
    report.cf_gap.target_p = law_p.cf(report.cf_gap.t);
    report.cf_gap.target_q = law_q.cf(report.cf_gap.t);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool ProjectionSummary::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [&](const ProjectionCheck& c) { return c.ks <= threshold; });
}

ProjectionSummary projection_suite(const ExperimentConfig& cfg, const std::vector<Direction>& directions) {
    cfg.validate();
    const auto seeds = StreamSeeds::derive(cfg.seed);
    const AlphaSymmetricLaw law_p(LawKind::Coupled, cfg.dim, cfg.alpha);
    const AlphaSymmetricLaw law_q(LawKind::Independent, cfg.dim, cfg.alpha);
    const SampleMatrix sample_p = law_p.sample(cfg.n, seeds.coupled);
    const SampleMatrix sample_q = law_q.sample(cfg.n, seeds.independent);
    const CdfTable marginal(law_p.marginal(), std::min(cfg.tol, 1e-10));
    auto cdf = [&](double v) { return marginal(v); };

    ProjectionSummary summary;
    summary.n = cfg.n;
    summary.threshold = 2.0 / std::sqrt(static_cast<double>(cfg.n));
    for (const auto& u : directions) {
        if (u.dim() != cfg.dim) {
            throw ValidationError("projection direction has wrong dimension");
        }
        for (const auto* law : {&law_p, &law_q}) {
            const SampleMatrix& sample = law == &law_p ? sample_p : sample_q;
            const double index = law->projection_norm_index();
            summary.checks.push_back(
                {law->kind(), u, index, ks_distance(project_scaled(sample, u, index), cdf)});
        }
    }
    return summary;
}

ProjectionSummary projection_suite(const ExperimentConfig& cfg, std::size_t count) {
    std::vector<Direction> directions;
    for (auto& u : approx_directions(cfg.dim, count, StreamSeeds::derive(cfg.seed).projection)) {
        directions.emplace_back(std::move(u));
    }
    return projection_suite(cfg, directions);
}

std::vector<ConvergenceRow> convergence_table(const ExperimentConfig& cfg, const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) {
        throw ValidationError("convergence table needs at least one sample size");
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) {
            throw ValidationError("convergence sample sizes must be strictly increasing");
        }
    }
    std::vector<ConvergenceRow> rows;
    for (const std::size_t n : sizes) {
        ExperimentConfig run = cfg;
        run.n = n;
        const auto report = run_counterexample(run);
        rows.push_back({n, report.sup_err_p, report.sup_err_q, report.sup_err_pq});
    }
    return rows;
}

}  // namespace tukey
