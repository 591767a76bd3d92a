#include "qpr/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qpr/rng.hpp"

namespace qpr {

double wrap_phase_distance(double a) { return std::abs(a - kTwoPi * std::round(a / kTwoPi)); }

double phase_error(const PhaseVector& estimate, const PhaseVector& truth) {
    if (estimate.modes() != truth.modes()) {
        throw std::invalid_argument("phase_error: estimate has " + std::to_string(estimate.modes()) +
                                    " modes, truth has " + std::to_string(truth.modes()));
    }
    double sum = 0.0;
    for (int x = 1; x < estimate.modes(); ++x) {
        const double d = wrap_phase_distance(estimate[x] - truth[x]);
        sum += d * d;
    }
    return std::sqrt(sum);
}

// ---------------------------------------------------------------------------
// Measured data

MeasuredDistribution::MeasuredDistribution(BasisPtr basis, std::vector<double> probabilities,
                                           std::optional<std::vector<std::uint64_t>> counts)
    : basis_(std::move(basis)), probabilities_(std::move(probabilities)), counts_(std::move(counts)) {
    if (!basis_) throw std::invalid_argument("MeasuredDistribution: null basis");
    if (probabilities_.size() != basis_->size()) {
        throw std::invalid_argument("MeasuredDistribution: " + std::to_string(probabilities_.size()) +
                                    " probabilities for a basis of size " + std::to_string(basis_->size()));
    }
    double sum = 0.0;
    for (double p : probabilities_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("MeasuredDistribution: probabilities must be finite and nonnegative");
        }
        sum += p;
    }
    if (!(std::abs(sum - 1.0) <= kSumTolerance)) {
        throw std::invalid_argument("MeasuredDistribution: probabilities sum to " + std::to_string(sum));
    }
}

MeasuredDistribution MeasuredDistribution::from_probabilities(BasisPtr basis, std::vector<double> probabilities) {
    return MeasuredDistribution(std::move(basis), std::move(probabilities), std::nullopt);
}

MeasuredDistribution MeasuredDistribution::from_counts(BasisPtr basis, std::vector<std::uint64_t> counts) {
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) throw std::invalid_argument("MeasuredDistribution: no counts");
    std::vector<double> probabilities(counts.size());
    for (std::size_t t = 0; t < counts.size(); ++t) {
        probabilities[t] = static_cast<double>(counts[t]) / static_cast<double>(total);
    }
    return MeasuredDistribution(std::move(basis), std::move(probabilities), std::move(counts));
}

MeasuredDistribution MeasuredDistribution::exact(const QuantumState& output) {
    std::vector<double> probabilities(output.size());
    for (std::size_t t = 0; t < output.size(); ++t) probabilities[t] = std::norm(output[t]);
    return from_probabilities(output.basis_ptr(), std::move(probabilities));
}

ClassicalField::ClassicalField(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (std::all_of(amplitudes_.begin(), amplitudes_.end(), [](Complex a) { return a == Complex(0.0); })) {
        throw std::invalid_argument("ClassicalField: all amplitudes are zero");
    }
}

std::vector<double> ClassicalField::magnitudes() const {
    std::vector<double> out(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), out.begin(), [](Complex a) { return std::abs(a); });
    return out;
}

std::vector<double> ClassicalField::intensities() const {
    std::vector<double> out(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), out.begin(), [](Complex a) { return std::norm(a); });
    return out;
}

std::vector<double> far_field_intensities(std::span<const double> magnitudes,
                                          std::span<const double> phases, const UnitaryMatrix& u) {
    const auto m = static_cast<std::size_t>(u.modes());
    if (magnitudes.size() != m || phases.size() != m) {
        throw std::invalid_argument("far_field_intensities: field and unitary sizes differ");
    }
    std::vector<double> out(m);
    for (std::size_t y = 0; y < m; ++y) {
        Complex acc(0.0);
        for (std::size_t x = 0; x < m; ++x) acc += u(x, y) * std::polar(magnitudes[x], phases[x]);
        out[y] = std::norm(acc);
    }
    return out;
}

double fourier_error(std::span<const Complex> beta, const MeasuredDistribution& measured) {
    if (beta.size() != measured.size()) {
        throw std::invalid_argument("fourier_error: " + std::to_string(beta.size()) +
                                    " amplitudes against " + std::to_string(measured.size()) + " probabilities");
    }
    const auto p = measured.probabilities();
    double sum = 0.0;
    for (std::size_t t = 0; t < beta.size(); ++t) {
        const double d = std::norm(beta[t]) - p[t];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double classical_fourier_error(std::span<const Complex> far_field,
                               std::span<const double> measured_intensities) {
    if (far_field.size() != measured_intensities.size()) {
        throw std::invalid_argument("classical_fourier_error: dimension mismatch");
    }
    double sum = 0.0;
    double total = 0.0;
    for (std::size_t x = 0; x < far_field.size(); ++x) {
        const double d = std::norm(far_field[x]) - measured_intensities[x];
        sum += d * d;
        total += measured_intensities[x];
    }
    if (!(total > 0.0)) throw std::invalid_argument("classical_fourier_error: measured intensities are all zero");
    return std::sqrt(sum / total);
}

// ---------------------------------------------------------------------------
// Phase extraction

long long integer_determinant(std::vector<long long> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("integer_determinant: size mismatch");
    if (n == 0) return 1;
    long long sign = 1;
    long long previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap * n + k] == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: the division is exact.
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / previous;
            }
        }
        previous = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

namespace {

// Inverse of a unimodular integer matrix: floating Gauss-Jordan, rounded, then
// verified exactly in integer arithmetic.
std::optional<std::vector<long long>> unimodular_inverse(const std::vector<long long>& m, std::size_t n) {
    std::vector<long double> a(n * 2 * n, 0.0L);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r * 2 * n + c] = static_cast<long double>(m[r * n + c]);
        a[r * 2 * n + n + r] = 1.0L;
    }
    const std::size_t w = 2 * n;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * w + col]) > std::abs(a[pivot * w + col])) pivot = r;
        }
        if (a[pivot * w + col] == 0.0L) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < w; ++c) std::swap(a[col * w + c], a[pivot * w + c]);
        }
        const long double inv = 1.0L / a[col * w + col];
        for (std::size_t c = 0; c < w; ++c) a[col * w + c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * w + col] == 0.0L) continue;
            const long double f = a[r * w + col];
            for (std::size_t c = 0; c < w; ++c) a[r * w + c] -= f * a[col * w + c];
        }
    }
    std::vector<long long> out(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out[r * n + c] = std::llround(a[r * w + n + c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            long long acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += m[r * n + k] * out[k * n + c];
            if (acc != (r == c ? 1 : 0)) return std::nullopt;
        }
    }
    return out;
}

}  // namespace

std::optional<PhaseExtractor> PhaseExtractor::build(const FockBasis& basis, std::vector<std::size_t> subset) {
    const auto m = static_cast<std::size_t>(basis.modes());
    if (subset.size() != m) {
        throw std::invalid_argument("PhaseExtractor: need exactly " + std::to_string(m) +
                                    " configurations, got " + std::to_string(subset.size()));
    }
    for (std::size_t k : subset) {
        if (k >= basis.size()) throw std::out_of_range("PhaseExtractor: config index out of range");
    }
    {
        auto sorted = subset;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("PhaseExtractor: repeated configuration in subset");
        }
    }

    PhaseExtractor ex;
    ex.modes_ = static_cast<int>(m);
    ex.basis_size_ = basis.size();
    ex.subset_ = std::move(subset);
    ex.occupations_.reserve(m * m);
    for (std::size_t k : ex.subset_) {
        const auto& occ = basis[k].occupations;
        ex.occupations_.insert(ex.occupations_.end(), occ.begin(), occ.end());
    }
    const std::size_t n = m - 1;
    ex.reduced_.resize(n * n);
    const auto& ref = basis[ex.subset_[0]].occupations;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& occ = basis[ex.subset_[r + 1]].occupations;
        for (std::size_t c = 0; c < n; ++c) ex.reduced_[r * n + c] = occ[c + 1] - ref[c + 1];
    }
    const long long det = integer_determinant(ex.reduced_, n);
    if (det != 1 && det != -1) return std::nullopt;
    auto inverse = unimodular_inverse(ex.reduced_, n);
    if (!inverse) return std::nullopt;
    ex.inverse_ = std::move(*inverse);
    return ex;
}

PhaseVector extract_phases(std::span<const double> config_phases, const PhaseExtractor& extractor) {
    if (config_phases.size() != extractor.basis_size()) {
        throw std::invalid_argument("extract_phases: " + std::to_string(config_phases.size()) +
                                    " configuration phases for an extractor over " +
                                    std::to_string(extractor.basis_size()) + " configurations");
    }
    const auto m = static_cast<std::size_t>(extractor.modes());
    const std::size_t n = m - 1;
    const auto& subset = extractor.subset_indices();
    const auto& inverse = extractor.reduced_inverse();
    const double reference = config_phases[subset[0]];
    std::vector<double> deltas(n);
    for (std::size_t r = 0; r < n; ++r) {
        deltas[r] = std::remainder(config_phases[subset[r + 1]] - reference, kTwoPi);
    }
    std::vector<double> thetas(m, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        double acc = 0.0;
        for (std::size_t r = 0; r < n; ++r) acc += static_cast<double>(inverse[x * n + r]) * deltas[r];
        thetas[x + 1] = acc;
    }
    return PhaseVector::from_raw(thetas);
}

// ---------------------------------------------------------------------------
// Gerchberg-Saxton

double GsResult::final_fourier_error() const {
    if (fourier_error_trace.empty()) throw std::logic_error("GsResult: empty trace");
    return fourier_error_trace.back();
}

std::optional<double> GsResult::final_phase_error() const {
    if (phase_error_trace.empty()) return std::nullopt;
    return phase_error_trace.back();
}

PhaseVector random_initial_theta(int modes, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> thetas(static_cast<std::size_t>(modes), 0.0);
    for (std::size_t x = 1; x < thetas.size(); ++x) thetas[x] = rng.uniform(0.0, kTwoPi);
    return PhaseVector::from_raw(thetas);
}

namespace {

PhaseVector starting_theta(const GsOptions& options, int modes) {
    if (options.max_iterations < 1) throw std::invalid_argument("GsOptions: max_iterations must be >= 1");
    if (!(options.fourier_tolerance >= 0.0)) throw std::invalid_argument("GsOptions: negative tolerance");
    if (options.initial_theta) {
        if (options.initial_theta->modes() != modes) {
            throw std::invalid_argument("GsOptions: initial theta has the wrong number of modes");
        }
        return *options.initial_theta;
    }
    return random_initial_theta(modes, options.rng_seed);
}

// Keeps arg(v), replaces |v| by `magnitude`; arg(0) is taken as 0.
Complex with_magnitude(Complex v, double magnitude) {
    const double a = std::abs(v);
    if (a == 0.0) return {magnitude, 0.0};
    return v * (magnitude / a);
}

double phase_of(Complex v) { return v == Complex(0.0) ? 0.0 : std::arg(v); }

}  // namespace

QuantumGs::QuantumGs(const QuantumState& input_state, const UnitaryMatrix& u, MeasuredDistribution measured,
                     PhaseExtractor extractor)
    : basis_(input_state.basis_ptr()),
      transfer_(input_state.basis_ptr(), u, input_state.support()),
      measured_(std::move(measured)),
      extractor_(std::move(extractor)) {
    if (!(measured_.basis() == input_state.basis())) {
        throw std::invalid_argument("quantum_gs: measured distribution is over a different basis");
    }
    if (extractor_.modes() != input_state.modes() || extractor_.basis_size() != input_state.size()) {
        throw std::invalid_argument("quantum_gs: extractor does not match the input state");
    }
    for (std::size_t k : extractor_.subset_indices()) {
        if (input_state[k] == Complex(0.0)) {
            throw std::invalid_argument("quantum_gs: extractor uses configuration " +
                                        to_string(input_state.basis()[k]) + " outside the state's support");
        }
    }
    for (std::size_t k : transfer_.inputs()) magnitudes_.push_back(std::abs(input_state[k]));
    known_phases_.reserve(transfer_.input_size());
    for (std::size_t k : transfer_.inputs()) known_phases_.push_back(std::arg(input_state[k]));
    sqrt_probabilities_.reserve(measured_.size());
    for (double p : measured_.probabilities()) sqrt_probabilities_.push_back(std::sqrt(p));
}

void QuantumGs::forward(const PhaseVector& theta, std::span<Complex> beta) const {
    const auto& inputs = transfer_.inputs();
    std::vector<Complex> in(inputs.size());
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const auto& occ = basis_->configs()[inputs[j]].occupations;
        double phi = known_phases_[j];
        for (int x = 0; x < theta.modes(); ++x) phi += theta[x] * occ[x];
        in[j] = std::polar(magnitudes_[j], phi);
    }
    transfer_.forward(in, beta);
}

double QuantumGs::fourier_error_of(const PhaseVector& theta) const {
    std::vector<Complex> beta(basis_->size());
    forward(theta, beta);
    return fourier_error(beta, measured_);
}

GsResult QuantumGs::run(const GsOptions& options, const std::optional<PhaseVector>& truth) const {
    const int m = basis_->modes();
    if (truth && truth->modes() != m) throw std::invalid_argument("quantum_gs: truth has the wrong number of modes");

    GsResult result;
    result.initial_theta = starting_theta(options, m);
    PhaseVector theta = result.initial_theta;

    const auto& inputs = transfer_.inputs();
    std::vector<Complex> beta(basis_->size());
    std::vector<Complex> recovered(inputs.size());
    std::vector<double> config_phases(basis_->size(), 0.0);

    for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
        forward(theta, beta);
        const double err = fourier_error(beta, measured_);
        result.fourier_error_trace.push_back(err);
        if (truth) result.phase_error_trace.push_back(phase_error(theta, *truth));
        if (err < options.fourier_tolerance) {
            result.converged = true;
            break;
        }
        if (iteration == options.max_iterations) break;

        for (std::size_t t = 0; t < beta.size(); ++t) beta[t] = with_magnitude(beta[t], sqrt_probabilities_[t]);
        transfer_.adjoint(beta, recovered);
        // Only the phases of the recovered input amplitudes are kept; the
        // magnitudes are reset to |alpha_k| on the next forward pass.
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            config_phases[inputs[j]] = phase_of(recovered[j]) - known_phases_[j];
        }
        theta = extract_phases(config_phases, extractor_);
    }
    result.retrieved_theta = theta;
    result.iterations = static_cast<int>(result.fourier_error_trace.size());
    return result;
}

GsResult quantum_gs(const QuantumState& input_state, const UnitaryMatrix& u, const MeasuredDistribution& measured,
                    const PhaseExtractor& extractor, const GsOptions& options, const std::optional<PhaseVector>& truth) {
    return QuantumGs(input_state, u, measured, extractor).run(options, truth);
}

ClassicalGs::ClassicalGs(std::vector<double> input_magnitudes, const UnitaryMatrix& u,
                         std::vector<double> measured_intensities)
    : magnitudes_(std::move(input_magnitudes)), u_(u.matrix()), intensities_(std::move(measured_intensities)) {
    const auto m = static_cast<std::size_t>(u.modes());
    if (magnitudes_.size() != m || intensities_.size() != m) {
        throw std::invalid_argument("classical_gs: field, intensities and unitary sizes differ");
    }
    if (std::none_of(magnitudes_.begin(), magnitudes_.end(), [](double a) { return a > 0.0; })) {
        throw std::invalid_argument("classical_gs: input magnitudes are all zero");
    }
    for (double a : magnitudes_) {
        if (!(a >= 0.0)) throw std::invalid_argument("classical_gs: negative input magnitude");
    }
    double total = 0.0;
    for (double i : intensities_) {
        if (!(i >= 0.0)) throw std::invalid_argument("classical_gs: negative measured intensity");
        total += i;
        sqrt_intensities_.push_back(std::sqrt(i));
    }
    if (!(total > 0.0)) throw std::invalid_argument("classical_gs: measured intensities are all zero");
}

void ClassicalGs::forward(const PhaseVector& theta, std::span<Complex> far) const {
    const std::size_t m = magnitudes_.size();
    std::vector<Complex> field(m);
    for (std::size_t x = 0; x < m; ++x) field[x] = std::polar(magnitudes_[x], theta[x]);
    for (std::size_t y = 0; y < m; ++y) {
        Complex acc(0.0);
        for (std::size_t x = 0; x < m; ++x) acc += u_(x, y) * field[x];
        far[y] = acc;
    }
}

double ClassicalGs::fourier_error_of(const PhaseVector& theta) const {
    std::vector<Complex> far(magnitudes_.size());
    forward(theta, far);
    return classical_fourier_error(far, intensities_);
}

GsResult ClassicalGs::run(const GsOptions& options, const std::optional<PhaseVector>& truth) const {
    const int m = static_cast<int>(magnitudes_.size());
    if (truth && truth->modes() != m) throw std::invalid_argument("classical_gs: truth has the wrong number of modes");

    GsResult result;
    result.initial_theta = starting_theta(options, m);
    PhaseVector theta = result.initial_theta;

    const auto size = static_cast<std::size_t>(m);
    std::vector<Complex> far(size);
    std::vector<double> back_phases(size);

    for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
        forward(theta, far);
        const double err = classical_fourier_error(far, intensities_);
        result.fourier_error_trace.push_back(err);
        if (truth) result.phase_error_trace.push_back(phase_error(theta, *truth));
        if (err < options.fourier_tolerance) {
            result.converged = true;
            break;
        }
        if (iteration == options.max_iterations) break;

        for (std::size_t y = 0; y < size; ++y) far[y] = with_magnitude(far[y], sqrt_intensities_[y]);
        for (std::size_t x = 0; x < size; ++x) {
            Complex acc(0.0);
            for (std::size_t y = 0; y < size; ++y) acc += std::conj(u_(x, y)) * far[y];
            back_phases[x] = phase_of(acc);
        }
        theta = PhaseVector::from_raw(back_phases);
    }
    result.retrieved_theta = theta;
    result.iterations = static_cast<int>(result.fourier_error_trace.size());
    return result;
}

GsResult classical_gs(std::span<const double> input_magnitudes, const UnitaryMatrix& u,
                      std::span<const double> measured_intensities, const GsOptions& options,
                      const std::optional<PhaseVector>& truth) {
    return ClassicalGs({input_magnitudes.begin(), input_magnitudes.end()}, u,
                       {measured_intensities.begin(), measured_intensities.end()})
        .run(options, truth);
}

// ---------------------------------------------------------------------------
// Solution analysis

std::vector<SolutionCluster> cluster_solutions(std::span<const GsResult> results, double tolerance,
                                               const std::optional<PhaseVector>& truth, bool include_unconverged,
                                               std::vector<long>* assignment) {
    if (results.empty()) throw std::invalid_argument("cluster_solutions: no results");
    const int m = results.front().retrieved_theta.modes();
    std::vector<SolutionCluster> clusters;
    std::vector<long> created(results.size(), -1);
    for (std::size_t i = 0; i < results.size(); ++i) {
        const GsResult& r = results[i];
        if (r.retrieved_theta.modes() != m) throw std::invalid_argument("cluster_solutions: mixed mode counts");
        if (!r.converged && !include_unconverged) continue;
        auto hit = std::find_if(clusters.begin(), clusters.end(), [&](const SolutionCluster& c) {
            return phase_error(r.retrieved_theta, c.representative) < tolerance;
        });
        if (hit != clusters.end()) {
            ++hit->count;
            created[i] = hit - clusters.begin();
        } else {
            created[i] = static_cast<long>(clusters.size());
            clusters.push_back({r.retrieved_theta, 1, std::nullopt});
        }
    }
    if (truth) {
        for (auto& c : clusters) c.correct = phase_error(c.representative, *truth) < tolerance;
    }
    std::vector<std::size_t> order(clusters.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return clusters[a].count > clusters[b].count; });
    std::vector<long> rank(clusters.size());
    std::vector<SolutionCluster> sorted;
    sorted.reserve(clusters.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = static_cast<long>(i);
        sorted.push_back(std::move(clusters[order[i]]));
    }
    if (assignment) {
        assignment->assign(results.size(), -1);
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (created[i] >= 0) (*assignment)[i] = rank[static_cast<std::size_t>(created[i])];
        }
    }
    return sorted;
}

std::size_t nearest_cluster(const PhaseVector& theta, std::span<const SolutionCluster> clusters) {
    if (clusters.empty()) throw std::invalid_argument("nearest_cluster: no clusters");
    std::size_t best = 0;
    double best_distance = phase_error(theta, clusters[0].representative);
    for (std::size_t i = 1; i < clusters.size(); ++i) {
        const double d = phase_error(theta, clusters[i].representative);
        if (d < best_distance) {
            best = i;
            best_distance = d;
        }
    }
    return best;
}

std::string_view to_string(Ambiguity ambiguity) {
    switch (ambiguity) {
        case Ambiguity::correct: return "correct";
        case Ambiguity::translation: return "translation";
        case Ambiguity::reflection: return "reflection";
        case Ambiguity::nontrivial: return "nontrivial";
    }
    return "nontrivial";
}

PhaseVector translated(const PhaseVector& theta, int shift) {
    const int m = theta.modes();
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) out[x] = theta[((x + shift) % m + m) % m];
    return PhaseVector::from_raw(out);
}

PhaseVector reflected(const PhaseVector& theta, int shift) {
    const int m = theta.modes();
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) out[x] = -theta[((shift - x) % m + m) % m];
    return PhaseVector::from_raw(out);
}

Ambiguity classify_ambiguity(const PhaseVector& candidate, const PhaseVector& truth, double tolerance) {
    if (phase_error(candidate, truth) < tolerance) return Ambiguity::correct;
    for (int s = 1; s < truth.modes(); ++s) {
        if (phase_error(candidate, translated(truth, s)) < tolerance) return Ambiguity::translation;
    }
    for (int s = 0; s < truth.modes(); ++s) {
        if (phase_error(candidate, reflected(truth, s)) < tolerance) return Ambiguity::reflection;
    }
    return Ambiguity::nontrivial;
}

}  // namespace qpr
