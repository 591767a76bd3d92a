// Acceptance suite: one PASS/FAIL line per criterion.
//   qpr_acceptance                 run every criterion
//   qpr_acceptance --criterion 4   run one; exit status 1 if it fails

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "qpr/experiment.hpp"
#include "qpr/parallel.hpp"

using namespace qpr;
namespace fs = std::filesystem;

namespace {

const std::vector<double> kThetaObj{0.0, 3.22, 4.10, 4.57, 1.35, 4.11};
constexpr std::uint64_t kMasterSeed = 2016;
unsigned g_jobs = 1;

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ExperimentConfig psi6_batch_config(int runs) {
    ExperimentConfig c;
    c.theta_obj = kThetaObj;
    c.runs = runs;
    c.seed = kMasterSeed;
    return c;
}

std::optional<double> median_iterations(const BatchSummary& s, const std::function<bool(const RunRecord&)>& keep) {
    std::vector<int> it;
    for (const auto& r : s.records) {
        if (keep(r)) it.push_back(r.iterations);
    }
    if (it.empty()) return std::nullopt;
    std::sort(it.begin(), it.end());
    const std::size_t mid = it.size() / 2;
    return it.size() % 2 ? it[mid] : 0.5 * (it[mid - 1] + it[mid]);
}

// Shared by criteria 1 to 3.
struct Psi6Batches {
    BatchSummary quantum;
    BatchSummary classical;
    double quantum_seconds = 0.0;
};

const Psi6Batches& psi6_batches() {
    static const Psi6Batches batches = [] {
        Psi6Batches b;
        const auto config = psi6_batch_config(1000);
        const auto state = psi6();
        const auto u = dft_matrix(6);
        const auto theta = theta_obj_of(config);
        const auto start = Clock::now();
        b.quantum = run_quantum_batch(state, u, theta, config, g_jobs);
        b.quantum_seconds = seconds_since(start);
        b.classical = run_classical_batch(state, u, theta, config, g_jobs);
        return b;
    }();
    return batches;
}

Verdict criterion_1() {
    const auto& b = psi6_batches();
    const double success = b.quantum.success_fraction;
    const bool pass = success == 1.0 && b.quantum_seconds < 120.0;
    return {pass, fmt::format("quantum psi6 1000 restarts: success {} (need 1.0), {:.1f} s (need < 120 s), "
                              "converged {}",
                              success, b.quantum_seconds, b.quantum.converged_fraction)};
}

Verdict criterion_2() {
    const auto& c = psi6_batches().classical;
    std::size_t correct_clusters = 0;
    for (const auto& cl : c.clusters) correct_clusters += cl.correct.value_or(false) ? 1 : 0;
    const bool pass = c.success_fraction >= 0.08 && c.success_fraction <= 0.24 && c.clusters.size() >= 6 &&
                      c.clusters.size() <= 10 && correct_clusters == 1;
    return {pass, fmt::format("classical 1000 restarts: success {} (need [0.08, 0.24]), clusters {} (need [6, 10]), "
                              "correct clusters {} (need 1)",
                              c.success_fraction, c.clusters.size(), correct_clusters)};
}

Verdict criterion_3() {
    const auto& b = psi6_batches();
    const auto q = median_iterations(b.quantum, [](const RunRecord& r) { return r.converged; });
    const auto c = median_iterations(b.classical, [](const RunRecord& r) {
        return r.converged && r.ambiguity == Ambiguity::correct;
    });
    const bool pass = q && c && *q < *c;
    return {pass, fmt::format("median iterations to tolerance: quantum {}, correct classical {}",
                              q ? fmt::format("{}", *q) : "n/a", c ? fmt::format("{}", *c) : "n/a")};
}

Verdict criterion_4() {
    const std::vector<std::uint64_t> budgets{1000, 10000, 100000, 1000000};
    SweepOptions options;
    options.jobs = g_jobs;
    const auto start = Clock::now();
    const auto sweep = run_sensitivity_sweep(psi6(), PhaseVector::from_raw(kThetaObj), dft_matrix(6), budgets, 200,
                                             options, kMasterSeed);
    const double elapsed = seconds_since(start);

    std::vector<std::pair<double, double>> q_rows, c_rows;
    bool ordered = true;
    bool classical_defined = true;
    std::string per_budget;
    for (const auto& r : sweep.rows) {
        q_rows.emplace_back(static_cast<double>(r.n_total), r.q_mean_err);
        c_rows.emplace_back(static_cast<double>(r.n_total), r.cl_mean_err_correct);
        if (!std::isfinite(r.cl_mean_err_correct)) classical_defined = false;
        if (!(r.q_mean_err < r.cl_mean_err_correct)) ordered = false;
        per_budget += fmt::format(" [N_T={} q={:.4g} cl={:.4g} cl_ok={:.3f} q_ok={:.3f} q_ok_err={:.4g}]", r.n_total,
                                  r.q_mean_err, r.cl_mean_err_correct, r.cl_success_frac, r.q_success_frac,
                                  r.q_mean_err_correct);
    }
    const double q_coef = fit_inverse_sqrt(q_rows);
    const double q_slope = fit_log_log_slope(q_rows);
    const double c_coef = classical_defined ? fit_inverse_sqrt(c_rows) : std::nan("");
    const double c_slope = classical_defined ? fit_log_log_slope(c_rows) : std::nan("");
    const bool pass = std::abs(q_coef - 8.0) <= 0.2 * 8.0 && std::abs(c_coef - 11.8) <= 0.25 * 11.8 && ordered &&
                      std::abs(q_slope + 0.5) <= 0.1 && std::abs(c_slope + 0.5) <= 0.1 && elapsed <= 1800.0;
    return {pass, fmt::format("quantum coef {:.3f} (need 8.0 +-20%), classical coef {:.3f} (need 11.8 +-25%), "
                              "slopes {:.3f} / {:.3f} (need -0.5 +-0.1), quantum < classical at every budget: {}, "
                              "{:.0f} s (need <= 1800 s);{}",
                              q_coef, c_coef, q_slope, c_slope, ordered ? "yes" : "no", elapsed, per_budget)};
}

Verdict criterion_5() {
    const std::vector<std::uint64_t> budgets{1000, 10000, 100000, 1000000};
    SweepOptions options;
    options.jobs = g_jobs;
    options.reference_restarts = 5;
    options.gs.max_iterations = 50;
    const auto sweep = run_sensitivity_sweep(psi6(), PhaseVector::from_raw(kThetaObj), dft_matrix(6), budgets, 1,
                                             options, kMasterSeed);
    std::ostringstream csv;
    write_sweep_csv(csv, sweep);

    // Read the emitted column back from the CSV text.
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    double worst = 0.0;
    double at_1e4 = std::nan("");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        const double n = std::stod(cells.at(0));
        const double bound = std::stod(cells.at(5));
        worst = std::max(worst, std::abs(bound - 5.0 / std::sqrt(n)) / (5.0 / std::sqrt(n)));
        if (n == 1e4) at_1e4 = bound;
        ++rows;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const bool pass = rows == budgets.size() && worst <= eps && std::abs(at_1e4 - 0.05) <= eps;
    return {pass, fmt::format("bound column max relative deviation {:.3g} (need <= {:.3g}), value at N_T=1e4: {}",
                              worst, eps, at_1e4)};
}

Verdict criterion_6() {
    std::string detail;
    bool pass = true;
    for (int m : {10, 20, 30}) {
        const auto state = generalized_state(m);
        const auto theta = random_initial_theta(m, kMasterSeed ^ 0x9E3779B97F4A7C15ULL);
        ExperimentConfig config;
        config.mode_count = m;
        config.theta_obj.emplace(theta.values().begin(), theta.values().end());
        config.seed = kMasterSeed;
        config.runs = 200;
        const auto u = dft_matrix(m);
        const auto start = Clock::now();
        const auto q = run_quantum_batch(state, u, theta, config, g_jobs);
        const double elapsed = seconds_since(start);
        pass = pass && q.success_fraction == 1.0;
        if (m == 30) pass = pass && elapsed <= 900.0;
        detail += fmt::format(" m={} quantum success {} over 200 ({:.1f} s);", m, q.success_fraction, elapsed);
        if (m == 10) {
            config.runs = 500;
            const auto c = run_classical_batch(state, u, theta, config, g_jobs);
            pass = pass && c.success_fraction < 0.05;
            detail += fmt::format(" m=10 classical success {} over 500 (need < 0.05);", c.success_fraction);
        }
    }
    return {pass, "generalization (quantum needs 1.0, m=30 within 900 s):" + detail};
}

Verdict criterion_7() {
    std::mt19937_64 engine(kMasterSeed);
    std::uniform_int_distribution<int> pick_m(1, 5);
    std::uniform_int_distribution<int> pick_n(1, 3);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    auto compare = [&](const QuantumState& state, const UnitaryMatrix& u) {
        std::map<oracle::Occupations, Complex> input;
        for (std::size_t k = 0; k < state.size(); ++k) input[state.basis()[k].occupations] = state[k];
        const auto expected = oracle::brute_force_transform(input, u);
        const auto out = multiphoton_transform(state, u);
        for (std::size_t t = 0; t < out.size(); ++t) {
            worst = std::max(worst, std::abs(out[t] - expected.at(out.basis()[t].occupations)));
        }
    };
    for (int c = 0; c < 50; ++c) {
        const int m = pick_m(engine);
        const int n = pick_n(engine);
        auto basis = enumerate_basis(m, n);
        std::vector<Complex> amps(basis->size());
        for (auto& a : amps) a = {gauss(engine), gauss(engine)};
        compare(QuantumState::normalized(basis, amps), oracle::random_unitary(m, engine()));
    }
    compare(psi6(), dft_matrix(6));
    return {worst <= 1e-10, fmt::format("max |amplitude - oracle| over 50 random cases and psi6/DFT(6): {:.3g} "
                                        "(need <= 1e-10)",
                                        worst)};
}

Verdict criterion_8() {
    double unitarity = 0.0;
    for (int m = 2; m <= 30; ++m) unitarity = std::max(unitarity, dft_matrix(m).unitarity_defect());

    std::mt19937_64 engine(kMasterSeed + 1);
    std::normal_distribution<double> gauss;
    double normalization = 0.0;
    double phase_invariance = 0.0;
    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 3; ++n) {
            auto basis = enumerate_basis(m, n);
            std::vector<Complex> amps(basis->size());
            for (auto& a : amps) a = {gauss(engine), gauss(engine)};
            const auto state = QuantumState::normalized(basis, amps);
            for (const auto& u : {dft_matrix(m), oracle::random_unitary(m, engine())}) {
                const auto out = multiphoton_transform(state, u);
                normalization = std::max(normalization, std::abs(out.norm() - 1.0));
                // Global phase on the input, and the same phase on every mode.
                const Complex g = std::polar(1.0, 1.234);
                std::vector<Complex> rotated(amps.size());
                for (std::size_t k = 0; k < amps.size(); ++k) rotated[k] = state[k] * g;
                const auto out_g = multiphoton_transform(QuantumState(basis, rotated), u);
                const auto out_u =
                    multiphoton_transform(apply_phase_object(state, std::vector<double>(m, 0.77)), u);
                for (std::size_t t = 0; t < out.size(); ++t) {
                    phase_invariance = std::max(phase_invariance, std::abs(std::norm(out_g[t]) - std::norm(out[t])));
                    phase_invariance = std::max(phase_invariance, std::abs(std::norm(out_u[t]) - std::norm(out[t])));
                }
            }
        }
    }
    auto hom_basis = enumerate_basis(2, 2);
    std::vector<Complex> hom(3, 0.0);
    hom[hom_basis->index_of({{1, 1}})] = 1.0;
    const auto hom_out = multiphoton_transform(QuantumState(hom_basis, hom), dft_matrix(2));
    const double hom_amp = std::abs(hom_out[hom_basis->index_of({{1, 1}})]);

    const bool pass = unitarity <= 1e-12 && normalization <= 1e-10 && hom_amp < 1e-14 && phase_invariance <= 1e-12;
    return {pass, fmt::format("DFT unitarity defect {:.3g} (<= 1e-12), normalization {:.3g} (<= 1e-10), "
                              "HOM |beta_11| {:.3g} (< 1e-14), global phase |dP| {:.3g} (<= 1e-12)",
                              unitarity, normalization, hom_amp, phase_invariance)};
}

Verdict criterion_9() {
    const auto psi = validate_state(psi6());
    const bool psi_ok = psi.valid() && !psi.translation_symmetric && !psi.reflection_symmetric &&
                        std::abs(integer_determinant(psi.extractor->reduced_matrix(), 5)) == 1;

    auto basis = enumerate_basis(6, 2);
    const auto uniform = validate_state(QuantumState::normalized(basis, std::vector<Complex>(basis->size(), 1.0)));
    const bool uniform_ok = uniform.translation_symmetric && !uniform.valid();

    std::vector<Complex> amps(basis->size(), 0.0);
    amps[basis->index_of({{2, 0, 0, 0, 0, 0}})] = std::sqrt(0.5);
    amps[basis->index_of({{1, 1, 0, 0, 0, 0}})] = std::sqrt(0.3);
    amps[basis->index_of({{0, 0, 1, 1, 0, 0}})] = std::sqrt(0.2);
    const auto sparse = validate_state(QuantumState(basis, amps));
    const bool sparse_ok = !sparse.translation_symmetric && !sparse.reflection_symmetric && !sparse.valid();

    return {psi_ok && uniform_ok && sparse_ok,
            fmt::format("psi6 passes with unimodular extractor: {}; equal amplitudes fail symmetry: {}; "
                        "3-config support fails extractor: {}",
                        psi_ok, uniform_ok, sparse_ok)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict criterion_10() {
    const fs::path root = fs::temp_directory_path() / "qpr_acceptance_determinism";
    fs::remove_all(root);
    fs::create_directories(root);

    Json config = to_json(psi6_batch_config(40));
    config["noise"] = {{"budgets", {1000, 100000}}, {"trials", 5}, {"reference_restarts", 10}};
    const fs::path config_path = root / "config.json";
    std::ofstream(config_path) << config.dump(2);

    auto run = [&](std::vector<std::string> args, const fs::path& out, unsigned jobs) {
        args.insert(args.begin(), "qpr");
        args.insert(args.end(), {"--out", out.string(), "--jobs", std::to_string(jobs)});
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out_text, err_text;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out_text, err_text);
        std::ofstream(out / "stdout.txt", std::ios::binary) << out_text.str();
        return code;
    };
    const std::vector<std::vector<std::string>> commands{
        {"check-state", "--config", config_path.string()},
        {"retrieve", "--config", config_path.string()},
        {"sweep-noise", "--config", config_path.string()},
        {"generalize", "--modes", "8", "--runs", "20"}};
    bool pass = true;
    std::size_t files = 0;
    std::string mismatches;
    for (std::size_t c = 0; c < commands.size(); ++c) {
        // Same output directory both times, so the effective config is identical too.
        const fs::path out = root / fmt::format("{}", c);
        fs::create_directories(out);
        const int code_a = run(commands[c], out, std::max(2U, g_jobs));
        std::map<std::string, std::string> first;
        for (const auto& entry : fs::directory_iterator(out)) first[entry.path().filename().string()] = slurp(entry.path());
        fs::remove_all(out);
        fs::create_directories(out);
        const int code_b = run(commands[c], out, 1);
        if (code_a != 0 || code_a != code_b) {
            pass = false;
            mismatches += fmt::format(" {} exit {}/{}", commands[c][0], code_a, code_b);
        }
        for (const auto& [name, text] : first) {
            ++files;
            if (!fs::exists(out / name) || slurp(out / name) != text) {
                pass = false;
                mismatches += " " + commands[c][0] + "/" + name;
            }
        }
    }
    fs::remove_all(root);
    return {pass, fmt::format("{} artifacts from 4 commands compared across reruns with different --jobs; "
                              "mismatches:{}",
                              files, mismatches.empty() ? " none" : mismatches)};
}

const std::map<int, std::pair<const char*, Verdict (*)()>> kCriteria{
    {1, {"quantum uniqueness", criterion_1}},         {2, {"classical ambiguity", criterion_2}},
    {3, {"convergence-speed ordering", criterion_3}}, {4, {"sensitivity scaling", criterion_4}},
    {5, {"bound line", criterion_5}},                 {6, {"generalization", criterion_6}},
    {7, {"oracle equivalence", criterion_7}},         {8, {"physics invariants", criterion_8}},
    {9, {"uniqueness validators", criterion_9}},      {10, {"determinism", criterion_10}},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    g_jobs = default_jobs();
    app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--jobs", g_jobs, "Worker threads")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (const auto& [id, entry] : kCriteria) {
        if (only != 0 && id != only) continue;
        Verdict v;
        try {
            v = entry.second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << entry.first << "): " << v.detail
                  << std::endl;
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
