#pragma once

#include "zeproc/params.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>

namespace zeproc {

// A prefix of a point drawn from the non-stationary measure: the least level
// k with a_k >= length is chosen and one A_k element is sampled uniformly by
// independent uniform sub-block choices, materializing only the requested
// prefix. Second halves are mirrored from the already-written first halves,
// so memory stays O(length).
struct SampledPoint {
    std::string prefix;
    std::size_t level = 0;
    std::uint64_t seed = 0;
};

// Deterministic given (pp, length, engine state). Draws raw bits from the
// engine directly; no distribution adapters, so output is reproducible
// across platforms.
SampledPoint sample_point(const ProcessParams& pp, std::size_t length, std::mt19937_64& rng);

inline SampledPoint sample_point(const ProcessParams& pp, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SampledPoint s = sample_point(pp, length, rng);
    s.seed = seed;
    return s;
}

// Smallest offset N with x_N != 0 plus the shifted prefix; rejects all-zero
// input. Support points start with a nonzero symbol, so sampled prefixes
// always return offset 0.
std::pair<std::size_t, std::string> shift_to_nonzero(const std::string& prefix);

} // namespace zeproc
