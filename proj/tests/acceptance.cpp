// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "tukey/alpha_symmetric.hpp"
#include "tukey/depth.hpp"
#include "tukey/experiment.hpp"
#include "tukey/ks.hpp"
#include "tukey/rng.hpp"
#include "tukey/stable.hpp"

using namespace tukey;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, const std::string& title, double limit_seconds,
            const std::function<Verdict()>& body) {
    const auto start = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0.0 && seconds >= limit_seconds) {
        v.pass = false;
        v.detail += " [runtime limit " + std::to_string(limit_seconds) + " s exceeded]";
    }
    failures += v.pass ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << id << ' ' << (v.pass ? "PASS" : "FAIL") << "  " << title << " | " << v.detail << " | " << timing
              << std::endl;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------- AC1
SampleMatrix mixed_cloud(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> normal;
    std::cauchy_distribution<double> cauchy;
    std::vector<double> data;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && gen() % 4 == 0) {
            const std::size_t j = gen() % i;
            data.push_back(data[2 * j]);
            data.push_back(data[2 * j + 1]);
            continue;
        }
        const bool heavy = gen() % 2 == 0;
        data.push_back(heavy ? cauchy(gen) : normal(gen));
        data.push_back(heavy ? cauchy(gen) : normal(gen));
    }
    return SampleMatrix(n, 2, std::move(data));
}

Verdict ac1() {
    std::mt19937_64 gen(20240601);
    int agree = 0, on_sample = 0;
    const int instances = 200;
    std::string mismatch;
    for (int rep = 0; rep < instances; ++rep) {
        const std::size_t n = 3 + gen() % 48;
        const auto sample = mixed_cloud(gen, n);
        std::vector<double> x(2);
        if (gen() % 2 == 0) {
            const auto row = sample.row(gen() % n);
            x.assign(row.begin(), row.end());
            ++on_sample;
        } else {
            std::normal_distribution<double> normal;
            x = {normal(gen), normal(gen)};
        }
        const auto exact = depth_2d_exact(sample, x);
        const auto brute = depth_bruteforce(sample, x);
        if (exact.count == brute.count) {
            ++agree;
        } else if (mismatch.empty()) {
            mismatch = "; first mismatch at instance " + std::to_string(rep);
        }
    }
    return {agree == instances, std::to_string(agree) + "/" + std::to_string(instances) +
                                    " exact counts equal (" + std::to_string(on_sample) + " queries on the sample)" +
                                    mismatch};
}

// ---------------------------------------------------------------- AC2
Verdict ac2() {
    Rng rng(77);
    std::size_t points = 0, witness_ok = 0;
    double worst_gap = INFINITY;  // min over directions of value - (-|x|_inf)
    for (double alpha : {0.25, 0.5, 1.0}) {
        for (std::size_t dim : {2u, 3u, 5u}) {
            for (int rep = 0; rep < 1000; ++rep) {
                std::vector<double> x(dim);
                for (auto& c : x) {
                    c = 3.0 * rng.normal();
                }
                double inf_norm = 0.0;
                for (double c : x) {
                    inf_norm = std::max(inf_norm, std::abs(c));
                }
                const auto result = dual_norm_inf(x, alpha);
                double attained = 0.0;
                for (std::size_t j = 0; j < dim; ++j) {
                    attained += result.witness[j] * x[j];
                }
                attained /= lp_norm(result.witness.components(), alpha);
                witness_ok += (result.value == -inf_norm && attained == -inf_norm) ? 1 : 0;
                ++points;
                std::vector<double> u(dim);
                for (int k = 0; k < 10000; ++k) {
                    double dot = 0.0;
                    for (std::size_t j = 0; j < dim; ++j) {
                        u[j] = rng.normal();
                        dot += u[j] * x[j];
                    }
                    worst_gap = std::min(worst_gap, dot / lp_norm(u, alpha) + inf_norm);
                }
            }
        }
    }
    const bool pass = witness_ok == points && worst_gap >= -1e-12;
    return {pass, std::to_string(witness_ok) + "/" + std::to_string(points) +
                      " witnesses exact (1000 x per (d, alpha)); min over 1e4 directions of value + |x|_inf = " +
                      fmt(worst_gap) + " (bound -1e-12)"};
}

// ---------------------------------------------------------------- AC3
Verdict ac3() {
    const StableLaw1D half(0.5);
    const StableLaw1D cauchy(1.0);
    bool pass = true;
    const double center = std::abs(half.cdf(0.0) - 0.5);
    pass &= center <= 1e-10;

    double symmetry = 0.0;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        symmetry = std::max(symmetry, std::abs(half.cdf(x) + half.cdf(-x) - 1.0));
    }
    pass &= symmetry <= 1e-8;

    double closed = 0.0;
    for (int i = -1000; i <= 1000; ++i) {
        const double x = i / 100.0;
        closed = std::max(closed, std::abs(cauchy.cdf(x) - (0.5 + std::atan(x) / std::numbers::pi)));
    }
    pass &= closed <= 1e-8;

    const auto draws = half.sample(10000000, 31337);
    double mc = 0.0;
    for (double x : {-2.0, -1.0, -0.5}) {
        const auto below = std::count_if(draws.begin(), draws.end(), [x](double v) { return v <= x; });
        mc = std::max(mc, std::abs(static_cast<double>(below) / 1e7 - half.cdf(x)));
    }
    pass &= mc <= 1e-3;
    return {pass, "|F(0)-1/2| = " + fmt(center) + " (<= 1e-10), symmetry " + fmt(symmetry) +
                      " (<= 1e-8), Cauchy closed form on [-10,10] " + fmt(closed) + " (<= 1e-8), 1e7-draw MC " +
                      fmt(mc) + " (<= 1e-3)"};
}

// ---------------------------------------------------------------- AC4
Verdict ac4() {
    const std::vector<std::vector<double>> probes{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.5, 2.0}};
    double worst = 0.0;
    const auto seeds = StreamSeeds::derive(4);
    for (const auto kind : {LawKind::Coupled, LawKind::Independent}) {
        const AlphaSymmetricLaw law(kind, 2, 0.5);
        const auto sample = law.sample(1000000, kind == LawKind::Coupled ? seeds.coupled : seeds.independent);
        for (const auto& t : probes) {
            double sum = 0.0;
            for (std::size_t i = 0; i < sample.rows(); ++i) {
                sum += std::cos(t[0] * sample.row(i)[0] + t[1] * sample.row(i)[1]);
            }
            worst = std::max(worst, std::abs(sum / 1e6 - law.cf(t)));
        }
    }
    return {worst <= 0.01, "max |empirical cf - cf| over 4 probes x 2 laws = " + fmt(worst) + " (<= 0.01)"};
}

// ---------------------------------------------------------------- AC5
Verdict ac5() {
    ExperimentConfig cfg;
    cfg.n = 100000;
    cfg.seed = 5;
    const auto summary = projection_suite(cfg, 20);
    double worst = 0.0;
    for (const auto& check : summary.checks) {
        worst = std::max(worst, check.ks);
    }
    return {summary.passed() && summary.checks.size() == 40,
            std::to_string(summary.checks.size()) + " projections, max KS = " + fmt(worst) +
                " (<= 2/sqrt(n) = " + fmt(summary.threshold) + ")"};
}

// ---------------------------------------------------------------- AC6
Verdict ac6() {
    ExperimentConfig cfg;  // d = 2, alpha = 1/2, n = 2e5, box [-2, 2]^2 step 0.5
    cfg.seed = 7;
    const auto report = run_counterexample(cfg);
    const bool pass = report.rows.size() == 81 && report.sup_err_p <= 0.015 && report.sup_err_q <= 0.015 &&
                      report.sup_err_pq <= 0.02 && report.cf_gap.gap >= 0.09;
    return {pass, "81-point grid: sup|P-F| = " + fmt(report.sup_err_p) + ", sup|Q-F| = " + fmt(report.sup_err_q) +
                      " (<= 0.015), sup|P-Q| = " + fmt(report.sup_err_pq) + " (<= 0.02), cf gap = " +
                      fmt(report.cf_gap.gap) + " (>= 0.09, z = " + fmt(report.cf_gap.z_score()) + ")"};
}

// ---------------------------------------------------------------- AC7
Verdict ac7() {
    ExperimentConfig cfg;
    cfg.dim = 3;
    cfg.n = 100000;
    cfg.random_points = 50;
    cfg.directions = 5000;
    cfg.seed = 7;
    const auto report = run_counterexample(cfg);
    const bool pass = report.rows.size() == 50 && report.sup_err_pq <= 0.03 && report.sup_err_p <= 0.03 &&
                      report.sup_err_q <= 0.03;
    return {pass, "50 points, k = 5000: sup|P-Q| = " + fmt(report.sup_err_pq) + ", sup|P-F| = " +
                      fmt(report.sup_err_p) + ", sup|Q-F| = " + fmt(report.sup_err_q) + " (all <= 0.03)"};
}

// ---------------------------------------------------------------- AC8
Verdict ac8() {
    ExperimentConfig cfg;
    cfg.seed = 7;
    const auto rows = convergence_table(cfg, {1000, 10000, 100000});
    const bool pass = rows.back().sup_err_p < rows.front().sup_err_p && rows.back().sup_err_q < rows.front().sup_err_q;
    std::string detail = "sup errors (P, Q) by n:";
    for (const auto& r : rows) {
        detail += " " + std::to_string(r.n) + ": (" + fmt(r.sup_err_p) + ", " + fmt(r.sup_err_q) + ")";
    }
    return {pass, detail};
}

// ---------------------------------------------------------------- AC9
std::string slurp(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Verdict ac9() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "tukeydepth_acceptance_ac9";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto run = [&](const std::string& tag) {
        const std::string cmd = std::string(TUKEYDEPTH_CLI) + " verify --d 2 --n 200000 --seed 7 --csv " +
                                (dir / (tag + ".csv")).string() + " --json " + (dir / (tag + ".json")).string() +
                                " > " + (dir / (tag + ".out")).string();
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    const int first = run("a");
    const int second = run("b");
    const auto csv_a = slurp(dir / "a.csv");
    const auto json_a = slurp(dir / "a.json");
    const bool same_csv = !csv_a.empty() && csv_a == slurp(dir / "b.csv");
    const bool same_json = !json_a.empty() && json_a == slurp(dir / "b.json");
    const bool same_stdout = slurp(dir / "a.out") == slurp(dir / "b.out");
    double sup_err_p = NAN;
    if (!json_a.empty()) {
        sup_err_p = nlohmann::json::parse(json_a)["sup_err_P"].get<double>();
    }
    fs::remove_all(dir);
    const bool pass = first == 0 && second == 0 && same_csv && same_json && same_stdout;
    return {pass, std::string("exit codes ") + std::to_string(first) + "," + std::to_string(second) +
                      "; CSV " + (same_csv ? "identical" : "DIFFERENT") + " (" + std::to_string(csv_a.size()) +
                      " bytes), JSON " + (same_json ? "identical" : "DIFFERENT") + ", stdout " +
                      (same_stdout ? "identical" : "DIFFERENT") + "; sup_err_P = " + fmt(sup_err_p)};
}

}  // namespace

int main() {
    report("AC1", "exact 2D sweep equals brute-force oracle", 10.0, ac1);
    report("AC2", "dual-norm identity", 30.0, ac2);
    report("AC3", "marginal CDF", 0.0, ac3);
    report("AC4", "sampler validity via empirical cf", 60.0, ac4);
    report("AC5", "projection property", 0.0, ac5);
    report("AC6", "counterexample reproduction, d = 2", 300.0, ac6);
    report("AC7", "d = 3 spot check", 600.0, ac7);
    report("AC8", "convergence trend", 0.0, ac8);
    report("AC9", "verify determinism", 0.0, ac9);
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
