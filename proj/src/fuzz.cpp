#include "semichord/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "semichord/diameter.hpp"
#include "semichord/error.hpp"
#include "semichord/identity.hpp"

namespace semichord {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;
constexpr int kHistogramFloor = -20;

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double exponential(SplitMix64& rng) noexcept { return -std::log(rng.uniform()); }

// Scales positive weights to arcs summing to `total`; the final arc closes
// the sum so that sum_arcs reproduces pi to within one rounding.
std::vector<double> close_arcs(const std::vector<double>& weights, double total) {
    double weight_sum = 0.0;
    for (double w : weights) weight_sum += w;
    std::vector<double> arcs;
    arcs.reserve(weights.size());
    double partial = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        arcs.push_back(total * (weights[i] / weight_sum));
        partial += arcs.back();
    }
    double last = total - partial;
    if (!(last > 0.0)) last = total * (weights.back() / weight_sum);
    arcs.push_back(last);
    return arcs;
}

void record(FuzzCaseOutcome& out, const FuzzConfig& config, const char* check, std::size_t index,
            double residual) {
    if (!(residual <= out.worst_residual)) out.worst_residual = residual;
    auto [it, inserted] = out.worst_by_check.try_emplace(check, residual);
    if (!inserted && !(residual <= it->second)) it->second = residual;
    if (!(residual <= config.tolerance_rel)) {
        out.failures.push_back(FuzzFailure{out.trial, out.state, out.n, out.radius, check, index, residual});
    }
}

int histogram_bucket(double residual) {
    if (!(residual > 0.0)) return kHistogramFloor;
    if (!std::isfinite(residual)) return 0;
    return std::max(kHistogramFloor, static_cast<int>(std::floor(std::log10(residual))));
}

void merge(FuzzReport& into, FuzzReport&& part) {
    if (part.trials_run == 0) return;
    if (into.trials_run == 0 || part.worst_residual_rel > into.worst_residual_rel) {
        into.worst_residual_rel = part.worst_residual_rel;
        into.worst_case = std::move(part.worst_case);
    }
    into.trials_run += part.trials_run;
    for (const auto& [check, value] : part.worst_by_check) {
        auto [it, inserted] = into.worst_by_check.try_emplace(check, value);
        if (!inserted) it->second = std::max(it->second, value);
    }
    for (auto& f : part.failures) into.failures.push_back(std::move(f));
    for (const auto& [bucket, count] : part.histogram) into.histogram[bucket] += count;
}

FuzzReport run_range(const FuzzConfig& config, std::size_t begin, std::size_t end) {
    FuzzReport report;
    report.config = config;
    for (std::size_t trial = begin; trial < end; ++trial) {
        FuzzCaseOutcome outcome = run_fuzz_case(trial_state(config.seed, trial), trial, config);
        ++report.histogram[histogram_bucket(outcome.worst_residual)];
        for (const auto& [check, value] : outcome.worst_by_check) {
            auto [it, inserted] = report.worst_by_check.try_emplace(check, value);
            if (!inserted) it->second = std::max(it->second, value);
        }
        for (auto& f : outcome.failures) report.failures.push_back(std::move(f));
        outcome.failures.clear();
        // strict comparison keeps the earliest trial on ties
        if (report.trials_run == 0 || outcome.worst_residual > report.worst_residual_rel) {
            report.worst_residual_rel = outcome.worst_residual;
            report.worst_case = std::move(outcome);
        }
        ++report.trials_run;
    }
    return report;
}

}  // namespace

std::uint64_t SplitMix64::next() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
}

double SplitMix64::uniform() noexcept {
    // (k + 0.5) / 2^53 for a 53-bit k: never 0, never 1
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t SplitMix64::uniform_int(std::uint64_t low, std::uint64_t high) noexcept {
    const std::uint64_t span = high - low + 1;
    if (span == 0) return next();
    return low + next() % span;
}

std::uint64_t trial_state(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index + kGoldenGamma));
}

CentralAngles random_angles(std::size_t n, SplitMix64& rng) {
    if (n < 3) throw Error(ErrorCode::invalid_input, "random polygons need n >= 3");
    std::vector<double> weights(n - 1);
    for (double& w : weights) w = exponential(rng);
    return CentralAngles::from_radians(close_arcs(weights, kPi));
}

void FuzzConfig::validate() const {
    if (trials < 1) throw Error(ErrorCode::invalid_input, "trials must be at least 1");
    if (n_min < 3 || n_min > n_max || n_max > 64) {
        throw Error(ErrorCode::invalid_input, "vertex counts must satisfy 3 <= n_min <= n_max <= 64");
    }
    if (!(radius_min > 0.0) || !(radius_min <= radius_max) || !std::isfinite(radius_max)) {
        throw Error(ErrorCode::invalid_input, "radii must satisfy 0 < radius_min <= radius_max");
    }
    if (!(tolerance_rel > 0.0)) throw Error(ErrorCode::invalid_input, "tolerance must be positive");
    if (!(stress_probability >= 0.0 && stress_probability <= 1.0)) {
        throw Error(ErrorCode::invalid_input, "stress probability must lie in [0, 1]");
    }
}

FuzzCaseOutcome run_fuzz_case(std::uint64_t state, std::size_t trial, const FuzzConfig& config) {
    SplitMix64 rng(state);
    FuzzCaseOutcome out;
    out.trial = trial;
    out.state = state;
    out.n = static_cast<std::size_t>(rng.uniform_int(config.n_min, config.n_max));
    out.radius = config.radius_min + rng.uniform() * (config.radius_max - config.radius_min);
    out.stressed = rng.uniform() < config.stress_probability;

    std::vector<double> arcs;
    if (out.stressed) {
        // one arc in [1e-12, 1e-6), log-uniform; the rest share the remainder
        const auto tiny_at = static_cast<std::size_t>(rng.uniform_int(0, out.n - 2));
        const double tiny = std::pow(10.0, -12.0 + 6.0 * rng.uniform());
        std::vector<double> weights(out.n - 2);
        for (double& w : weights) w = exponential(rng);
        arcs = close_arcs(weights, kPi - tiny);
        arcs.insert(arcs.begin() + static_cast<std::ptrdiff_t>(tiny_at), tiny);
        double partial = 0.0;
        for (std::size_t i = 0; i + 1 < arcs.size(); ++i) partial += arcs[i];
        if (kPi - partial > 0.0) arcs.back() = kPi - partial;
    } else {
        const CentralAngles drawn = random_angles(out.n, rng);
        arcs.assign(drawn.arcs().begin(), drawn.arcs().end());
    }
    out.arcs = arcs;

    const InscribedPolygon poly = vertices_from_angles(CentralAngles::from_radians(arcs), out.radius);

    record(out, config, "general", 0, evaluate_general(poly).residual_rel);
    for (std::size_t k = 1; k + 3 <= out.n; ++k) {
        record(out, config, "nested_quadrilateral", k, nested_quadrilateral_check(poly, k).residual_rel);
    }
    for (std::size_t p = 0; p + 3 <= out.n; ++p) {
        record(out, config, "induction_step", p, induction_step_check(poly, p).residual_rel);
    }
    double round_trip = std::numeric_limits<double>::infinity();
    try {
        const DiameterSolution solved = solve_diameter(side_lengths(poly));
        round_trip = std::abs(solved.diameter - poly.diameter()) / poly.diameter();
    } catch (const Error&) {
        // reported as an infinite residual
    }
    record(out, config, "solver_round_trip", 0, round_trip);
    return out;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
    config.validate();
    const std::size_t workers = std::clamp<std::size_t>(config.threads, 1, config.trials);

    std::vector<FuzzReport> parts(workers);
    if (workers == 1) {
        parts[0] = run_range(config, 0, config.trials);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = config.trials * w / workers;
            const std::size_t end = config.trials * (w + 1) / workers;
            pool.emplace_back([&parts, &config, w, begin, end] { parts[w] = run_range(config, begin, end); });
        }
    }

    FuzzReport report;
    report.config = config;
    for (auto& part : parts) merge(report, std::move(part));
    return report;
}

}  // namespace semichord
