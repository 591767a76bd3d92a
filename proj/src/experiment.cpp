#include "qpr/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qpr/parallel.hpp"

namespace qpr {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::quantum: return "quantum";
        case Algorithm::classical: return "classical";
        case Algorithm::both: return "both";
    }
    return "both";
}

void reject_unknown_keys(const Json& j, const std::string& where, std::initializer_list<const char*> known) {
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& item : j.items()) {
        if (!allowed.contains(item.key())) throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
}

template <typename T>
T field(const Json& j, const char* key, const std::string& where) {
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

template <typename T>
void optional_field(const Json& j, const char* key, const std::string& where, T& target) {
    if (j.contains(key)) target = field<T>(j, key, where);
}

void require_object(const Json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
}

}  // namespace

ExperimentConfig parse_config(const Json& j) {
    require_object(j, "config");
    reject_unknown_keys(j, "config",
                        {"mode_count", "photon_number", "state", "theta_obj", "algorithm", "runs", "seed", "gs",
                         "analysis", "noise", "output_dir"});
    ExperimentConfig c;
    c.mode_count = field<int>(j, "mode_count", "config");
    c.photon_number = field<int>(j, "photon_number", "config");
    if (c.mode_count < 1) throw ConfigError("config.mode_count must be >= 1");
    if (c.photon_number < 1) throw ConfigError("config.photon_number must be >= 1");

    if (j.contains("state")) {
        const Json& s = j.at("state");
        require_object(s, "config.state");
        reject_unknown_keys(s, "config.state", {"builder", "amplitudes"});
        c.state.builder = field<std::string>(s, "builder", "config.state");
        if (c.state.builder == "explicit") {
            if (!s.contains("amplitudes")) throw ConfigError("config.state: explicit builder needs amplitudes");
            try {
                c.state.amplitudes = complex_vector_from_json(s.at("amplitudes"));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config.state.amplitudes: ") + e.what());
            }
        } else if (c.state.builder == "psi6" || c.state.builder == "generalized") {
            if (s.contains("amplitudes")) throw ConfigError("config.state: amplitudes only apply to the explicit builder");
        } else {
            throw ConfigError("config.state.builder must be psi6, generalized or explicit");
        }
    }

    if (j.contains("theta_obj")) {
        auto theta = field<std::vector<double>>(j, "theta_obj", "config");
        if (static_cast<int>(theta.size()) != c.mode_count) {
            throw ConfigError("config.theta_obj must hold mode_count entries");
        }
        if (theta[0] != 0.0) throw ConfigError("config.theta_obj[0] must be 0 (gauge)");
        for (double t : theta) {
            if (!std::isfinite(t)) throw ConfigError("config.theta_obj entries must be finite");
        }
        c.theta_obj = std::move(theta);
    }

    if (j.contains("algorithm")) {
        const auto a = field<std::string>(j, "algorithm", "config");
        if (a == "quantum") c.algorithm = Algorithm::quantum;
        else if (a == "classical") c.algorithm = Algorithm::classical;
        else if (a == "both") c.algorithm = Algorithm::both;
        else throw ConfigError("config.algorithm must be quantum, classical or both");
    }
    optional_field(j, "runs", "config", c.runs);
    if (c.runs < 0) throw ConfigError("config.runs must be >= 0");
    optional_field(j, "seed", "config", c.seed);

    if (j.contains("gs")) {
        const Json& g = j.at("gs");
        require_object(g, "config.gs");
        reject_unknown_keys(g, "config.gs", {"max_iterations", "fourier_tolerance"});
        optional_field(g, "max_iterations", "config.gs", c.max_iterations);
        optional_field(g, "fourier_tolerance", "config.gs", c.fourier_tolerance);
        if (c.max_iterations < 1) throw ConfigError("config.gs.max_iterations must be >= 1");
        if (!(c.fourier_tolerance >= 0.0)) throw ConfigError("config.gs.fourier_tolerance must be >= 0");
    }
    if (j.contains("analysis")) {
        const Json& a = j.at("analysis");
        require_object(a, "config.analysis");
        reject_unknown_keys(a, "config.analysis", {"cluster_tolerance", "correct_tolerance"});
        optional_field(a, "cluster_tolerance", "config.analysis", c.cluster_tolerance);
        optional_field(a, "correct_tolerance", "config.analysis", c.correct_tolerance);
        if (!(c.cluster_tolerance > 0.0) || !(c.correct_tolerance > 0.0)) {
            throw ConfigError("config.analysis tolerances must be positive");
        }
    }
    if (j.contains("noise")) {
        const Json& n = j.at("noise");
        require_object(n, "config.noise");
        reject_unknown_keys(n, "config.noise", {"budgets", "trials", "reference_restarts"});
        NoiseSpec noise;
        noise.budgets = field<std::vector<std::uint64_t>>(n, "budgets", "config.noise");
        optional_field(n, "trials", "config.noise", noise.trials);
        optional_field(n, "reference_restarts", "config.noise", noise.reference_restarts);
        if (noise.budgets.empty()) throw ConfigError("config.noise.budgets must not be empty");
        for (std::size_t i = 0; i < noise.budgets.size(); ++i) {
            if (noise.budgets[i] < static_cast<std::uint64_t>(c.photon_number) ||
                (i > 0 && noise.budgets[i] <= noise.budgets[i - 1])) {
                throw ConfigError("config.noise.budgets must be ascending and at least photon_number");
            }
        }
        if (noise.trials < 1) throw ConfigError("config.noise.trials must be >= 1");
        if (noise.reference_restarts < 1) throw ConfigError("config.noise.reference_restarts must be >= 1");
        c.noise = std::move(noise);
    }
    optional_field(j, "output_dir", "config", c.output_dir);
    return c;
}

ExperimentConfig load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_config(j);
}

Json to_json(const ExperimentConfig& c) {
    Json j;
    j["mode_count"] = c.mode_count;
    j["photon_number"] = c.photon_number;
    Json state;
    state["builder"] = c.state.builder;
    if (c.state.builder == "explicit") state["amplitudes"] = complex_array(c.state.amplitudes);
    j["state"] = std::move(state);
    if (c.theta_obj) j["theta_obj"] = *c.theta_obj;
    j["algorithm"] = std::string(to_string(c.algorithm));
    j["runs"] = c.runs;
    j["seed"] = c.seed;
    j["gs"] = {{"max_iterations", c.max_iterations}, {"fourier_tolerance", c.fourier_tolerance}};
    j["analysis"] = {{"cluster_tolerance", c.cluster_tolerance}, {"correct_tolerance", c.correct_tolerance}};
    if (c.noise) {
        j["noise"] = {{"budgets", c.noise->budgets},
                      {"trials", c.noise->trials},
                      {"reference_restarts", c.noise->reference_restarts}};
    }
    j["output_dir"] = c.output_dir;
    return j;
}

QuantumState build_state(const ExperimentConfig& c) {
    if (c.state.builder == "psi6") {
        if (c.mode_count != 6 || c.photon_number != 2) {
            throw ConfigError("the psi6 state needs mode_count 6 and photon_number 2");
        }
        return psi6();
    }
    if (c.state.builder == "generalized") {
        if (c.photon_number != 2) throw ConfigError("the generalized state needs photon_number 2");
        if (c.mode_count < 6) throw ConfigError("the generalized state needs mode_count >= 6");
        return generalized_state(c.mode_count);
    }
    auto basis = enumerate_basis(c.mode_count, c.photon_number);
    if (c.state.amplitudes.size() != basis->size()) {
        throw ConfigError("config.state.amplitudes: expected " + std::to_string(basis->size()) + " entries, got " +
                          std::to_string(c.state.amplitudes.size()));
    }
    try {
        return QuantumState::normalized(std::move(basis), c.state.amplitudes);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config.state.amplitudes: ") + e.what());
    }
}

PhaseVector theta_obj_of(const ExperimentConfig& c) {
    if (!c.theta_obj) throw ConfigError("config.theta_obj is required for this command");
    return PhaseVector::from_raw(*c.theta_obj);
}

// ---------------------------------------------------------------------------
// Batches

namespace {

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string runs_csv(std::span<const RunRecord> records) {
    std::ostringstream os;
    write_runs_csv(os, records);
    return os.str();
}

std::optional<double> median(std::vector<int> values) {
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

// Only the last trace entries are kept; full traces of a 1000-run batch are
// not needed for the summary.
void trim_traces(GsResult& r) {
    if (r.fourier_error_trace.size() > 1) r.fourier_error_trace.erase(r.fourier_error_trace.begin(), r.fourier_error_trace.end() - 1);
    if (r.phase_error_trace.size() > 1) r.phase_error_trace.erase(r.phase_error_trace.begin(), r.phase_error_trace.end() - 1);
}

template <typename Solver>
BatchSummary run_batch(const Solver& solver, int modes, const PhaseVector& theta_obj, const ExperimentConfig& c,
                       unsigned jobs) {
    BatchSummary summary;
    const auto runs = static_cast<std::size_t>(c.runs);
    summary.results.resize(runs);
    parallel_for(runs, jobs, [&](std::size_t i) {
        GsOptions options;
        options.max_iterations = c.max_iterations;
        options.fourier_tolerance = c.fourier_tolerance;
        options.rng_seed = derive_seed(c.seed, i);
        GsResult r = solver.run(options, theta_obj);
        trim_traces(r);
        summary.results[i] = std::move(r);
    });
    if (runs == 0) return summary;

    std::vector<long> assignment;
    summary.clusters = cluster_solutions(summary.results, c.cluster_tolerance, theta_obj, false, &assignment);
    std::size_t correct = 0;
    std::size_t converged = 0;
    std::vector<int> converged_iterations;
    for (std::size_t i = 0; i < runs; ++i) {
        const GsResult& r = summary.results[i];
        RunRecord rec;
        rec.run_id = i;
        rec.seed = derive_seed(c.seed, i);
        rec.converged = r.converged;
        rec.iterations = r.iterations;
        rec.final_fourier_error = r.final_fourier_error();
        rec.final_phase_error = r.final_phase_error().value();
        rec.cluster_id = assignment[i];
        rec.ambiguity = classify_ambiguity(r.retrieved_theta, theta_obj, c.correct_tolerance);
        if (rec.final_phase_error < c.correct_tolerance) ++correct;
        if (r.converged) {
            ++converged;
            converged_iterations.push_back(r.iterations);
        }
        summary.records.push_back(rec);
    }
    (void)modes;
    summary.success_fraction = static_cast<double>(correct) / static_cast<double>(runs);
    summary.converged_fraction = static_cast<double>(converged) / static_cast<double>(runs);
    summary.median_iterations_converged = median(std::move(converged_iterations));
    return summary;
}

StateReport require_valid(const QuantumState& state) {
    StateReport report = validate_state(state);
    if (!report.valid()) {
        throw std::runtime_error("input state fails the uniqueness checks: " + report.failure_reason.value_or(""));
    }
    return report;
}

}  // namespace

BatchSummary run_quantum_batch(const QuantumState& state, const UnitaryMatrix& u, const PhaseVector& theta_obj,
                               const ExperimentConfig& c, unsigned jobs) {
    const StateReport report = require_valid(state);
    const auto measured = MeasuredDistribution::exact(multiphoton_transform(apply_phase_object(state, theta_obj), u));
    const QuantumGs solver(state, u, measured, *report.extractor);
    return run_batch(solver, state.modes(), theta_obj, c, jobs);
}

BatchSummary run_classical_batch(const QuantumState& state, const UnitaryMatrix& u, const PhaseVector& theta_obj,
                                 const ExperimentConfig& c, unsigned jobs) {
    const auto magnitudes = matched_classical_field(state).magnitudes();
    const ClassicalGs solver(magnitudes, u, far_field_intensities(magnitudes, theta_obj.values(), u));
    return run_batch(solver, state.modes(), theta_obj, c, jobs);
}

Json to_json(const BatchSummary& s, const PhaseVector& theta_obj, double correct_tolerance) {
    Json j;
    j["runs"] = s.results.size();
    j["success_fraction"] = s.results.empty() ? Json(nullptr) : Json(s.success_fraction);
    j["converged_fraction"] = s.results.empty() ? Json(nullptr) : Json(s.converged_fraction);
    j["median_iterations_converged"] =
        s.median_iterations_converged ? Json(*s.median_iterations_converged) : Json(nullptr);
    std::size_t correct_clusters = 0;
    Json clusters = Json::array();
    for (std::size_t i = 0; i < s.clusters.size(); ++i) {
        const SolutionCluster& c = s.clusters[i];
        if (c.correct.value_or(false)) ++correct_clusters;
        clusters.push_back({{"cluster_id", i},
                            {"count", c.count},
                            {"correct", c.correct.value_or(false)},
                            {"ambiguity_class",
                             std::string(to_string(classify_ambiguity(c.representative, theta_obj, correct_tolerance)))},
                            {"theta", to_json(c.representative)}});
    }
    j["cluster_count"] = s.clusters.size();
    j["correct_clusters"] = correct_clusters;
    j["clusters"] = std::move(clusters);
    return j;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_check_state(const ExperimentConfig& config, CommandContext& ctx) {
    const QuantumState state = build_state(config);
    const StateReport report = validate_state(state);
    ctx.out << dump_pretty(to_json(report, state.basis()));
    return report.valid() ? kExitOk : kExitFailure;
}

int cmd_retrieve(const ExperimentConfig& config, CommandContext& ctx) {
    const QuantumState state = build_state(config);
    const PhaseVector theta_obj = theta_obj_of(config);
    const UnitaryMatrix u = dft_matrix(config.mode_count);

    Json summary;
    summary["theta_obj"] = to_json(theta_obj);
    if (config.algorithm != Algorithm::classical) {
        const BatchSummary q = run_quantum_batch(state, u, theta_obj, config, ctx.jobs);
        write_file(ctx.out_dir / "quantum_runs.csv", runs_csv(q.records));
        summary["quantum"] = to_json(q, theta_obj, config.correct_tolerance);
    }
    if (config.algorithm != Algorithm::quantum) {
        const BatchSummary c = run_classical_batch(state, u, theta_obj, config, ctx.jobs);
        write_file(ctx.out_dir / "classical_runs.csv", runs_csv(c.records));
        Json cj = to_json(c, theta_obj, config.correct_tolerance);
        cj["input_magnitudes"] = matched_classical_field(state).magnitudes();
        summary["classical"] = std::move(cj);
    }
    write_file(ctx.out_dir / "clusters.json", dump_pretty(summary));
    write_file(ctx.out_dir / "config.effective.json", dump_pretty(to_json(config)));

    for (const char* key : {"quantum", "classical"}) {
        if (!summary.contains(key)) continue;
        const Json& s = summary[key];
        ctx.out << key << ": runs=" << s["runs"].get<std::size_t>()
                << " success_fraction=" << (s["success_fraction"].is_null() ? std::string("n/a") : format_double(s["success_fraction"].get<double>()))
                << " clusters=" << s["cluster_count"].get<std::size_t>() << '\n';
    }
    return kExitOk;
}

int cmd_sweep_noise(const ExperimentConfig& config, CommandContext& ctx) {
    if (!config.noise) throw ConfigError("sweep-noise needs a noise block in the config");
    const QuantumState state = build_state(config);
    const PhaseVector theta_obj = theta_obj_of(config);
    const UnitaryMatrix u = dft_matrix(config.mode_count);

    SweepOptions options;
    options.gs.max_iterations = config.max_iterations;
    options.gs.fourier_tolerance = config.fourier_tolerance;
    options.reference_restarts = config.noise->reference_restarts;
    options.cluster_tolerance = config.cluster_tolerance;
    options.jobs = ctx.jobs;
    const SensitivitySweep sweep =
        run_sensitivity_sweep(state, theta_obj, u, config.noise->budgets, config.noise->trials, options, config.seed);

    std::ostringstream csv;
    write_sweep_csv(csv, sweep);
    write_file(ctx.out_dir / "sensitivity.csv", csv.str());

    auto fit = [&](auto pick, bool slope) -> Json {
        std::vector<std::pair<double, double>> rows;
        for (const SweepRow& r : sweep.rows) {
            const double e = pick(r);
            if (!std::isfinite(e) || !(e > 0.0)) return nullptr;
            rows.emplace_back(static_cast<double>(r.n_total), e);
        }
        if (rows.size() < 2) return nullptr;
        return slope ? fit_log_log_slope(rows) : fit_inverse_sqrt(rows);
    };
    auto q_all = [](const SweepRow& r) { return r.q_mean_err; };
    auto q_ok = [](const SweepRow& r) { return r.q_mean_err_correct; };
    auto cl_ok = [](const SweepRow& r) { return r.cl_mean_err_correct; };

    Json summary;
    summary["modes"] = sweep.modes;
    summary["trials_per_budget"] = sweep.trials_per_budget;
    summary["quantum_coefficient"] = fit(q_all, false);
    summary["quantum_slope"] = fit(q_all, true);
    summary["classical_correct_coefficient"] = fit(cl_ok, false);
    summary["classical_correct_slope"] = fit(cl_ok, true);
    summary["quantum_correct_coefficient"] = fit(q_ok, false);
    summary["quantum_correct_slope"] = fit(q_ok, true);
    Json rows = Json::array();
    for (const SweepRow& r : sweep.rows) {
        rows.push_back({{"n_total", r.n_total},
                        {"q_mean_err", r.q_mean_err},
                        {"q_std_err", r.q_std_err},
                        {"q_success_frac", r.q_success_frac},
                        {"q_mean_err_correct", r.q_mean_err_correct},
                        {"cl_mean_err_correct", r.cl_mean_err_correct},
                        {"cl_success_frac", r.cl_success_frac},
                        {"cl_min_bound", r.cl_min_bound}});
    }
    summary["rows"] = std::move(rows);
    write_file(ctx.out_dir / "sweep_summary.json", dump_pretty(summary));
    write_file(ctx.out_dir / "config.effective.json", dump_pretty(to_json(config)));
    ctx.out << csv.str();
    return kExitOk;
}

namespace {

// Keeps the drawn object apart from the restart seeds master ^ i.
constexpr std::uint64_t kObjectSeedSalt = 0x9E3779B97F4A7C15ULL;

}  // namespace

int cmd_generalize(const GeneralizeRequest& request, CommandContext& ctx) {
    if (request.modes < 6) throw ConfigError("generalize needs --modes >= 6");
    if (request.runs < 0 || request.classical_runs.value_or(0) < 0) throw ConfigError("run counts must be >= 0");

    QuantumState state = [&] {
        try {
            return generalized_state(request.modes);
        } catch (const std::runtime_error& e) {
            ctx.err << e.what() << '\n';
            throw;
        }
    }();
    const PhaseVector theta_obj = random_initial_theta(request.modes, request.seed ^ kObjectSeedSalt);
    const UnitaryMatrix u = dft_matrix(request.modes);

    ExperimentConfig config;
    config.mode_count = request.modes;
    config.photon_number = 2;
    config.state.builder = "generalized";
    config.theta_obj = std::vector<double>(theta_obj.values().begin(), theta_obj.values().end());
    config.seed = request.seed;
    config.max_iterations = request.max_iterations;
    config.fourier_tolerance = request.fourier_tolerance;

    config.runs = request.runs;
    const BatchSummary q = run_quantum_batch(state, u, theta_obj, config, ctx.jobs);
    ExperimentConfig classical_config = config;
    classical_config.runs = request.classical_runs.value_or(request.runs);
    const BatchSummary c = run_classical_batch(state, u, theta_obj, classical_config, ctx.jobs);

    Json summary;
    summary["modes"] = request.modes;
    summary["seed"] = request.seed;
    summary["theta_obj"] = to_json(theta_obj);
    summary["input_magnitudes"] = matched_classical_field(state).magnitudes();
    summary["quantum"] = to_json(q, theta_obj, config.correct_tolerance);
    summary["classical"] = to_json(c, theta_obj, config.correct_tolerance);
    const std::string text = dump_pretty(summary);
    write_file(ctx.out_dir / ("generalize_m" + std::to_string(request.modes) + ".json"), text);
    ctx.out << "m=" << request.modes << " quantum success_fraction="
            << (q.results.empty() ? "n/a" : format_double(q.success_fraction))
            << " classical success_fraction=" << (c.results.empty() ? "n/a" : format_double(c.success_fraction))
            << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Entry point

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum and classical Gerchberg-Saxton phase retrieval simulator", "qpr"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    unsigned jobs = default_jobs();
    std::string out_dir;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Override the master seed");
        sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", out_dir, "Output directory");
    };
    auto* check = app.add_subcommand("check-state", "Validate the uniqueness conditions of an input state");
    check->add_option("--config", config_path, "Experiment config (JSON)")->required();
    add_common(check);
    auto* retrieve = app.add_subcommand("retrieve", "Run batches of GS restarts and cluster the solutions");
    retrieve->add_option("--config", config_path, "Experiment config (JSON)")->required();
    add_common(retrieve);
    auto* sweep = app.add_subcommand("sweep-noise", "Monte-Carlo shot-noise sensitivity sweep");
    sweep->add_option("--config", config_path, "Experiment config (JSON)")->required();
    add_common(sweep);
    GeneralizeRequest gen;
    int classical_runs = -1;
    auto* generalize = app.add_subcommand("generalize", "Quantum vs classical success for the m-mode state family");
    generalize->add_option("--modes", gen.modes, "Number of modes (>= 6)")->required();
    generalize->add_option("--runs", gen.runs, "Quantum restarts");
    generalize->add_option("--classical-runs", classical_runs, "Classical restarts (default: --runs)");
    generalize->add_option("--max-iterations", gen.max_iterations, "GS iteration cap");
    add_common(generalize);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CommandContext ctx{out, err, jobs, "."};
        if (generalize->parsed()) {
            if (seed) gen.seed = *seed;
            if (classical_runs >= 0) gen.classical_runs = classical_runs;
            ctx.out_dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
            return cmd_generalize(gen, ctx);
        }
        ExperimentConfig config = load_config(config_path);
        if (seed) config.seed = *seed;
        if (!out_dir.empty()) config.output_dir = out_dir;
        ctx.out_dir = config.output_dir;
        if (check->parsed()) return cmd_check_state(config, ctx);
        if (retrieve->parsed()) return cmd_retrieve(config, ctx);
        return cmd_sweep_noise(config, ctx);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace qpr
