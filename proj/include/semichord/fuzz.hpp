#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semichord/geometry.hpp"

namespace semichord {

/// SplitMix64 (Steele, Lea & Flood 2014): 64-bit Weyl counter plus a
/// fixed output mix. Portable and fully described by one integer, which is
/// what the fuzz report records for replay.
class SplitMix64 {
public:
    static constexpr const char* kName = "splitmix64";

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    std::uint64_t next() noexcept;
    /// Uniform in the open interval (0, 1), 53 random bits.
    double uniform() noexcept;
    /// Uniform integer in [low, high].
    std::uint64_t uniform_int(std::uint64_t low, std::uint64_t high) noexcept;

    [[nodiscard]] std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Generator state for trial `index` of a run seeded with `seed`.
[[nodiscard]] std::uint64_t trial_state(std::uint64_t seed, std::uint64_t index) noexcept;

/// n-1 positive arcs summing to pi: exponential variates, normalised.
[[nodiscard]] CentralAngles random_angles(std::size_t n, SplitMix64& rng);

struct FuzzConfig {
    std::size_t trials = 1000;
    std::size_t n_min = 3;
    std::size_t n_max = 12;
    double radius_min = 0.5;
    double radius_max = 50.0;
    std::uint64_t seed = 42;
    double tolerance_rel = 1e-9;
    double stress_probability = 0.1;
    /// Worker threads; does not affect the report.
    std::size_t threads = 1;

    /// Throws Error(invalid_input) when a field is out of range.
    void validate() const;
};

struct FuzzFailure {
    std::size_t trial = 0;
    std::uint64_t state = 0;
    std::size_t n = 0;
    double radius = 0.0;
    std::string check;
    std::size_t index = 0;  // k or P index where applicable
    double residual = 0.0;
};

struct FuzzCaseOutcome {
    std::size_t trial = 0;
    std::uint64_t state = 0;
    std::size_t n = 0;
    double radius = 0.0;
    bool stressed = false;
    std::vector<double> arcs;
    double worst_residual = 0.0;
    std::map<std::string, double> worst_by_check;
    std::vector<FuzzFailure> failures;
};

struct FuzzReport {
    std::string generator = SplitMix64::kName;
    FuzzConfig config;
    std::size_t trials_run = 0;
    double worst_residual_rel = 0.0;
    FuzzCaseOutcome worst_case;  // replay with run_fuzz_case(worst_case.state, ...)
    std::map<std::string, double> worst_by_check;
    std::vector<FuzzFailure> failures;
    /// Trials bucketed by floor(log10(worst residual)), clamped at -20.
    std::map<int, std::size_t> histogram;
};

/// Runs one trial from its generator state; every check of run_fuzz.
[[nodiscard]] FuzzCaseOutcome run_fuzz_case(std::uint64_t state, std::size_t trial,
                                            const FuzzConfig& config);

[[nodiscard]] FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace semichord
