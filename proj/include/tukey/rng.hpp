#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tukey {

using Seed = std::uint64_t;

/// Seedable random stream with bit-exact output for a given seed.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The variate transforms are implemented here rather than taken from
/// <random>'s distributions, which are implementation-defined:
///   - uniform_open(): (bits >> 11) + 0.5, scaled by 2^-53; lies in (0, 1).
///   - normal(): Box-Muller on two uniform_open() draws, both outputs used.
///   - exponential(): -log(uniform_open()).
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform_open();
    double normal();
    double exponential();

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a master seed and a role label:
/// mix64(master ^ mix64(fnv1a64(label))).
Seed derive_seed(Seed master, std::string_view label);

}  // namespace tukey
