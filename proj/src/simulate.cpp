#include "z2z4/simulate.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "z2z4/encode.hpp"

namespace z2z4 {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

// Unbiased bounded draw by rejection.
std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t x;
    do {
        x = splitmix64(state);
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

SimReport simulate(const Z2Z4Code& C, const PDSet& S, const SimParams& params) {
    if (params.trials == 0) throw std::invalid_argument("simulate: need at least one trial");
    if (params.weight.has_value() == params.flip_p.has_value())
        throw std::invalid_argument("simulate: choose exactly one of weight / flip probability");
    const std::size_t n = C.length();
    if (params.weight && (*params.weight < 0 || static_cast<std::size_t>(*params.weight) > n))
        throw std::invalid_argument("simulate: error weight out of range");
    if (params.flip_p && (*params.flip_p < 0.0 || *params.flip_p > 1.0))
        throw std::invalid_argument("simulate: flip probability out of [0,1]");

    const std::size_t k = C.type().gamma + 2 * C.type().delta;
    SimReport rep;
    rep.trials = params.trials;
    rep.seed = params.seed;
    std::ostringstream model;
    if (params.weight)
        model << "fixed-weight " << *params.weight;
    else
        model << "iid-flip p=" << *params.flip_p;
    rep.error_model = model.str();

    std::vector<int> positions(n);
    for (std::size_t trial = 0; trial < params.trials; ++trial) {
        // Per-trial stream keyed on (seed, trial).
        std::uint64_t state = params.seed ^ (0x6a09e667f3bcc909ull * (trial + 1));

        BinaryVector a(k);
        for (auto& bit : a) bit = static_cast<std::uint8_t>(splitmix64(state) & 1);
        BinaryVector x = encode(a, C);

        BinaryVector y = x;
        if (params.weight) {
            std::iota(positions.begin(), positions.end(), 0);
            for (int i = 0; i < *params.weight; ++i) {
                std::size_t j = static_cast<std::size_t>(i) +
                                uniform_below(state, n - static_cast<std::size_t>(i));
                std::swap(positions[static_cast<std::size_t>(i)], positions[j]);
                y[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] ^= 1;
            }
        } else {
            for (auto& bit : y)
                if (uniform_unit(state) < *params.flip_p) bit ^= 1;
        }

        DecodeOutcome out = decode_alternative(C, S, y);
        if (out.status == DecodeStatus::failure)
            ++rep.failures;
        else if (out.codeword == x)
            ++rep.successes;
        else
            ++rep.miscorrections;
    }
    return rep;
}

}  // namespace z2z4
