#pragma once

#include <iosfwd>
#include <string>

#include "tukey/experiment.hpp"

namespace tukey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitValidation = 2;

/// Applies flat key=value lines (blank lines and '#' comments ignored) to cfg.
/// Keys: d, alpha, n, seed, k, tol, refine, threads, grid_lo, grid_hi,
/// grid_step, grid_points. Output keys csv and json are returned through the
/// pointers when given.
void apply_config_text(const std::string& text, ExperimentConfig& cfg, std::string* csv_path = nullptr,
                       std::string* json_path = nullptr);

/// Parses argv and runs one subcommand: sample, cdf, depth, verify, converge.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tukey::cli
