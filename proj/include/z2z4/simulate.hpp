// Seeded Monte-Carlo channel simulator: random codewords, injected errors
// (fixed weight or iid bit flips), decoded with the alternative algorithm.
// Trials draw from per-trial streams derived from (seed, trial index), so
// reports are reproducible regardless of evaluation order.

#ifndef Z2Z4_SIMULATE_HPP
#define Z2Z4_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "z2z4/code.hpp"
#include "z2z4/decode.hpp"

namespace z2z4 {

struct SimParams {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::optional<int> weight;     // fixed-weight error model
    std::optional<double> flip_p;  // iid bit-flip model; exactly one must be set
};

struct SimReport {
    std::size_t trials = 0;
    std::size_t successes = 0;       // decoded to the transmitted codeword
    std::size_t failures = 0;        // decoder reported more than t errors
    std::size_t miscorrections = 0;  // decoded to a different codeword
    std::uint64_t seed = 0;
    std::string error_model;
};

SimReport simulate(const Z2Z4Code& C, const PDSet& S, const SimParams& params);

/// splitmix64 step; the simulator's only source of randomness.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace z2z4

#endif
