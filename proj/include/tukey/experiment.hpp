#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tukey/alpha_symmetric.hpp"
#include "tukey/depth.hpp"
#include "tukey/rng.hpp"
#include "tukey/stable.hpp"

namespace tukey {

using Point = std::vector<double>;

/// Axis-aligned box grid lo:step:hi in every coordinate, last axis fastest.
struct BoxGrid {
    double lo = -2.0;
    double hi = 2.0;
    double step = 0.5;
};

struct ExperimentConfig {
    std::size_t dim = 2;
    double alpha = 0.5;
    std::size_t n = 200000;
    // Explicit query points; when empty the default grid is used: the box for
    // d = 2 and `random_points` uniform points of the cube |x|_inf <= box.hi
    // for d >= 3.
    std::vector<Point> grid;
    BoxGrid box;
    std::size_t random_points = 50;
    std::size_t directions = 5000;
    bool refine = true;
    Seed seed = 1;
    double tol = 1e-8;
    unsigned threads = 0;  // 0: hardware concurrency
    // cf probe for the P != Q check; default (1, 1, 0, ..., 0).
    std::optional<Point> cf_probe;

    /// Throws ValidationError on n < 100, d < 2, bad alpha or grid dimension.
    void validate() const;
};

/// Seeds of the independent streams derived from a master seed; the labels
/// are "sample/coupled", "sample/independent", "depth/directions", "grid" and
/// "projection/directions".
struct StreamSeeds {
    Seed coupled;
    Seed independent;
    Seed directions;
    Seed grid;
    Seed projection;

    static StreamSeeds derive(Seed master);
};

std::vector<Point> box_grid(std::size_t dim, const BoxGrid& box);
std::vector<Point> cube_points(std::size_t dim, std::size_t count, double radius, Seed seed);
std::vector<Point> resolve_grid(const ExperimentConfig& cfg);

struct GridRow {
    Point x;
    double closed_form = 0.0;
    DepthResult depth_p;
    DepthResult depth_q;
    double err_p = 0.0;
    double err_q = 0.0;
    double err_pq = 0.0;
};

/// Empirical cf contrast mean cos(t'X) - mean cos(t'Y) with its standard error.
struct CfGap {
    Point t;
    double cf_p = 0.0;
    double cf_q = 0.0;
    double target_p = 0.0;
    double target_q = 0.0;
    double gap = 0.0;
    double standard_error = 0.0;
    double z_score() const { return standard_error > 0.0 ? gap / standard_error : 0.0; }
    bool significant() const { return std::abs(gap) > 3.0 * standard_error; }
};

struct ExperimentReport {
    ExperimentConfig config;
    DepthMethod engine = DepthMethod::Exact2D;
    std::vector<GridRow> rows;
    double sup_err_p = 0.0;
    double sup_err_q = 0.0;
    double sup_err_pq = 0.0;
    CfGap cf_gap;
    double wall_seconds = 0.0;
};

CfGap cf_gap(const SampleMatrix& p, const SampleMatrix& q, const Point& t);

/// Samples COUPLED (P) and INDEPENDENT (Q) laws, evaluates both empirical
/// depths and F(-|x|_inf) on the grid, and records sup errors and the cf gap.
/// d = 2 uses the exact sweep, d >= 3 depth_approx with shared directions.
ExperimentReport run_counterexample(const ExperimentConfig& cfg);

struct ProjectionCheck {
    LawKind kind;
    Direction direction;
    double norm_index;
    double ks = 0.0;
};

struct ProjectionSummary {
    std::size_t n = 0;
    double threshold = 0.0;  // 2 / sqrt(n)
    std::vector<ProjectionCheck> checks;
    bool passed() const;
};

/// KS distance of ||u||-scaled projections of both laws to the marginal F,
/// for each of the given directions.
ProjectionSummary projection_suite(const ExperimentConfig& cfg, const std::vector<Direction>& directions);
/// Same with `count` Gaussian directions drawn from the projection stream.
ProjectionSummary projection_suite(const ExperimentConfig& cfg, std::size_t count = 20);

struct ConvergenceRow {
    std::size_t n;
    double sup_err_p;
    double sup_err_q;
    double sup_err_pq;
};

/// One run_counterexample per sample size; sizes must be strictly increasing.
std::vector<ConvergenceRow> convergence_table(const ExperimentConfig& cfg, const std::vector<std::size_t>& sizes);

/// Header x_1..x_d,depth_closed_form,depth_P,depth_Q,err_P,err_Q,err_PQ.
void write_report_csv(std::ostream& out, const ExperimentReport& report);
/// Summary JSON; the runtime field is only written when requested so that
/// repeated runs stay byte-identical.
void write_summary_json(std::ostream& out, const ExperimentReport& report, bool include_runtime = false);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

}  // namespace tukey
