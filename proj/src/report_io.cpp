#include <ostream>

#include <json.hpp>

#include "tukey/experiment.hpp"

namespace tukey {

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
    const std::size_t d = report.config.dim;
    for (std::size_t j = 0; j < d; ++j) {
        out << "x_" << (j + 1) << ',';
    }
    out << "depth_closed_form,depth_P,depth_Q,err_P,err_Q,err_PQ\n";
    for (const auto& row : report.rows) {
        for (const double c : row.x) {
            out << format_double(c) << ',';
        }
        out << format_double(row.closed_form) << ',' << format_double(row.depth_p.value()) << ','
            << format_double(row.depth_q.value()) << ',' << format_double(row.err_p) << ','
            << format_double(row.err_q) << ',' << format_double(row.err_pq) << '\n';
    }
}

void write_summary_json(std::ostream& out, const ExperimentReport& report, bool include_runtime) {
    const auto& cfg = report.config;
    nlohmann::ordered_json config = {
        {"d", cfg.dim},
        {"alpha", cfg.alpha},
        {"n", cfg.n},
        {"seed", cfg.seed},
        {"tol", cfg.tol},
        {"directions", cfg.directions},
        {"refine", cfg.refine},
        {"grid_points", report.rows.size()},
    };
    if (cfg.grid.empty()) {
        config["box"] = {{"lo", cfg.box.lo}, {"hi", cfg.box.hi}, {"step", cfg.box.step}};
    }
    const auto& gap = report.cf_gap;
    nlohmann::ordered_json summary = {
        {"config", config},
        {"engine", to_string(report.engine)},
        {"n_P", cfg.n},
        {"n_Q", cfg.n},
        {"sup_err_P", report.sup_err_p},
        {"sup_err_Q", report.sup_err_q},
        {"sup_err_PQ", report.sup_err_pq},
        {"cf_gap",
         {{"t", gap.t},
          {"cf_P", gap.cf_p},
          {"cf_Q", gap.cf_q},
          {"target_P", gap.target_p},
          {"target_Q", gap.target_q},
          {"gap", gap.gap},
          {"standard_error", gap.standard_error},
          {"z_score", gap.z_score()},
          {"significant", gap.significant()}}},
    };
    if (report.engine == DepthMethod::Approx) {
        summary["engine_note"] = "direction-sampling depths are upper bounds on the empirical depth";
    }
    if (include_runtime) {
        summary["runtime_seconds"] = report.wall_seconds;
    }
    out << summary.dump(2) << '\n';
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
    out << "n,sup_err_P,sup_err_Q,sup_err_PQ\n";
    for (const auto& row : rows) {
        out << row.n << ',' << format_double(row.sup_err_p) << ',' << format_double(row.sup_err_q) << ','
            << format_double(row.sup_err_pq) << '\n';
    }
}

}  // namespace tukey
