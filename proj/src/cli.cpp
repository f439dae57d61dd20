#include "tukey/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tukey/alpha_symmetric.hpp"
#include "tukey/depth.hpp"
#include "tukey/errors.hpp"
#include "tukey/stable.hpp"

namespace tukey::cli {

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
        throw ValidationError("config key '" + key + "': malformed value '" + text + "'");
    }
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ValidationError("config key '" + key + "': expected true or false, got '" + text + "'");
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        sizes.push_back(parse_number<std::size_t>("sizes", trim(item)));
    }
    if (sizes.empty()) {
        throw ValidationError("--sizes: expected a comma-separated list of sample sizes");
    }
    return sizes;
}

// Experiment flags shared by verify and converge. Values only override the
// config when the flag was given on the command line.
struct ExperimentFlags {
    std::string config_path;
    std::size_t dim = 0;
    double alpha = 0.0;
    std::size_t n = 0;
    Seed seed = 0;
    std::size_t directions = 0;
    double tol = 0.0;
    double grid_lo = 0.0, grid_hi = 0.0, grid_step = 0.0;
    std::size_t grid_points = 0;
    bool no_refine = false;
    unsigned threads = 0;
    std::string csv_path;
    std::string json_path;

    std::vector<std::pair<CLI::Option*, std::function<void(ExperimentConfig&)>>> setters;

    void attach(CLI::App& app, bool with_outputs) {
        app.add_option("--config", config_path, "key=value config file (flags override it)");
        bind(app.add_option("--d", dim, "dimension (>= 2)"), [this](auto& c) { c.dim = dim; });
        bind(app.add_option("--alpha", alpha, "stable index (coupled law needs 0.5)"),
             [this](auto& c) { c.alpha = alpha; });
        bind(app.add_option("--n", n, "sample size per law (>= 100)"), [this](auto& c) { c.n = n; });
        bind(app.add_option("--seed", seed, "master seed"), [this](auto& c) { c.seed = seed; });
        bind(app.add_option("--k", directions, "random directions for the approximate engine (d >= 3)"),
             [this](auto& c) { c.directions = directions; });
        bind(app.add_option("--tol", tol, "cdf tolerance"), [this](auto& c) { c.tol = tol; });
        bind(app.add_option("--grid-lo", grid_lo, "grid box lower bound"), [this](auto& c) { c.box.lo = grid_lo; });
        bind(app.add_option("--grid-hi", grid_hi, "grid box upper bound"), [this](auto& c) { c.box.hi = grid_hi; });
        bind(app.add_option("--grid-step", grid_step, "grid box step (d = 2)"),
             [this](auto& c) { c.box.step = grid_step; });
        bind(app.add_option("--grid-points", grid_points, "random query points (d >= 3)"),
             [this](auto& c) { c.random_points = grid_points; });
        bind(app.add_flag("--no-refine", no_refine, "skip local refinement of the approximate engine"),
             [this](auto& c) { c.refine = !no_refine; });
        bind(app.add_option("--threads", threads, "worker threads (0 = all cores)"),
             [this](auto& c) { c.threads = threads; });
        if (with_outputs) {
            app.add_option("--csv", csv_path, "report CSV path (default verify_report.csv)");
            app.add_option("--json", json_path, "summary JSON path (default verify_report.json)");
        }
    }

    void bind(CLI::Option* option, std::function<void(ExperimentConfig&)> setter) {
        setters.emplace_back(option, std::move(setter));
    }

    ExperimentConfig build(std::string* csv_file, std::string* json_file) const {
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            apply_config_text(read_file(config_path), cfg, csv_file, json_file);
        }
        for (const auto& [option, setter] : setters) {
            if (option->count() > 0) {
                setter(cfg);
            }
        }
        if (csv_file && !csv_path.empty()) {
            *csv_file = csv_path;
        }
        if (json_file && !json_path.empty()) {
            *json_file = json_path;
        }
        return cfg;
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open output file '" + path + "'");
    }
    out << content;
}

}  // namespace

void apply_config_text(const std::string& text, ExperimentConfig& cfg, std::string* csv_path,
                       std::string* json_path) {
    std::stringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string content = trim(line.substr(0, line.find('#')));
        if (content.empty()) {
            continue;
        }
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key == "d") {
            cfg.dim = parse_number<std::size_t>(key, value);
        } else if (key == "alpha") {
            cfg.alpha = parse_number<double>(key, value);
        } else if (key == "n") {
            cfg.n = parse_number<std::size_t>(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_number<Seed>(key, value);
        } else if (key == "k") {
            cfg.directions = parse_number<std::size_t>(key, value);
        } else if (key == "tol") {
            cfg.tol = parse_number<double>(key, value);
        } else if (key == "refine") {
            cfg.refine = parse_bool(key, value);
        } else if (key == "threads") {
            cfg.threads = parse_number<unsigned>(key, value);
        } else if (key == "grid_lo") {
            cfg.box.lo = parse_number<double>(key, value);
        } else if (key == "grid_hi") {
            cfg.box.hi = parse_number<double>(key, value);
        } else if (key == "grid_step") {
            cfg.box.step = parse_number<double>(key, value);
        } else if (key == "grid_points") {
            cfg.random_points = parse_number<std::size_t>(key, value);
        } else if (key == "csv" && csv_path) {
            *csv_path = value;
        } else if (key == "json" && json_path) {
            *json_path = value;
        } else {
            throw ValidationError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Halfspace depth toolkit: stable laws, exact and approximate depth, counterexample checks",
                 "tukeydepth"};
    app.require_subcommand(1);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "draw a coupled or independent sample and write CSV");
    std::string law_name;
    double sample_alpha = 0.5;
    std::size_t sample_dim = 2;
    std::size_t sample_n = 0;
    Seed sample_seed = 1;
    std::string sample_out;
    sample_cmd->add_option("--law", law_name, "coupled | independent")->required();
    sample_cmd->add_option("--alpha", sample_alpha, "stable index in (0, 1]");
    sample_cmd->add_option("--d", sample_dim, "dimension");
    sample_cmd->add_option("--n", sample_n, "number of rows")->required();
    sample_cmd->add_option("--seed", sample_seed, "seed");
    sample_cmd->add_option("--out", sample_out, "output CSV path")->required();

    // cdf
    auto* cdf_cmd = app.add_subcommand("cdf", "evaluate the symmetric stable distribution function");
    double cdf_alpha = 0.5;
    double cdf_x = 0.0;
    InversionOptions inversion;
    cdf_cmd->add_option("--alpha", cdf_alpha, "stable index in (0, 2]")->required();
    cdf_cmd->add_option("--x", cdf_x, "evaluation point")->required();
    cdf_cmd->add_option("--tol", inversion.tol, "absolute tolerance");
    cdf_cmd->add_option("--segments", inversion.segment_budget, "oscillation segment budget");

    // depth
    auto* depth_cmd = app.add_subcommand("depth", "halfspace depth of a query point in a CSV sample");
    std::string points_path;
    std::string query_text;
    std::string method = "auto";
    ApproxOptions approx;
    bool depth_no_refine = false;
    depth_cmd->add_option("--points", points_path, "headerless CSV sample")->required();
    depth_cmd->add_option("--query", query_text, "query point \"x1,x2,...\"")->required();
    depth_cmd->add_option("--method", method, "exact | approx | brute (default: exact for d <= 2)")
        ->check(CLI::IsMember({"auto", "exact", "approx", "brute"}));
    depth_cmd->add_option("--k", approx.directions, "random directions for approx");
    depth_cmd->add_option("--seed", approx.seed, "direction seed for approx");
    depth_cmd->add_flag("--no-refine", depth_no_refine, "skip refinement for approx");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the depth-coincidence experiment");
    ExperimentFlags verify_flags;
    verify_flags.attach(*verify_cmd, true);
    bool timing = false;
    verify_cmd->add_flag("--timing", timing, "include runtime in the JSON summary");

    // converge
    auto* converge_cmd = app.add_subcommand("converge", "sup errors of the experiment across sample sizes");
    ExperimentFlags converge_flags;
    converge_flags.attach(*converge_cmd, false);
    std::string sizes_text;
    std::string converge_out;
    converge_cmd->add_option("--sizes", sizes_text, "increasing sizes \"1000,10000,...\"")->required();
    converge_cmd->add_option("--out", converge_out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (*sample_cmd) {
            const AlphaSymmetricLaw law(parse_law_kind(law_name), sample_dim, sample_alpha);
            write_csv(sample_out, law.sample(sample_n, sample_seed));
        } else if (*cdf_cmd) {
            out << format_double(StableLaw1D(cdf_alpha).cdf(cdf_x, inversion)) << '\n';
        } else if (*depth_cmd) {
            const SampleMatrix sample = read_csv(points_path);
            const auto query = parse_vector(query_text);
            if (query.size() != sample.dim()) {
                throw ValidationError("--query has " + std::to_string(query.size()) +
                                      " coordinates but the points file has d = " + std::to_string(sample.dim()));
            }
            if (method == "auto") {
                method = sample.dim() <= 2 ? "exact" : "approx";
            }
            DepthResult result;
            if (method == "exact") {
                if (sample.dim() > 2) {
                    throw ValidationError("--method exact needs d <= 2; use approx or brute");
                }
                result = sample.dim() == 1 ? depth_1d(sample.column(0), query[0]) : depth_2d_exact(sample, query);
            } else if (method == "brute") {
                result = depth_bruteforce(sample, query);
            } else {
                approx.refine = !depth_no_refine;
                result = depth_approx(sample, query, approx);
            }
            out << result.fraction() << '\n';
        } else if (*verify_cmd) {
            std::string csv_path = "verify_report.csv";
            std::string json_path = "verify_report.json";
            const ExperimentConfig cfg = verify_flags.build(&csv_path, &json_path);
            const ExperimentReport report = run_counterexample(cfg);
            std::ostringstream csv;
            write_report_csv(csv, report);
            std::ostringstream json;
            write_summary_json(json, report, timing);
            write_file(csv_path, csv.str());
            write_file(json_path, json.str());
            out << json.str();
        } else if (*converge_cmd) {
            const ExperimentConfig cfg = converge_flags.build(nullptr, nullptr);
            const auto rows = convergence_table(cfg, parse_sizes(sizes_text));
            std::ostringstream table;
            write_convergence_csv(table, rows);
            if (converge_out.empty()) {
                out << table.str();
            } else {
                write_file(converge_out, table.str());
            }
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace tukey::cli
