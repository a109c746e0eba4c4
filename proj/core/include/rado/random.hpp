#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rado/rational.hpp"

namespace rado {

// Counter-based stream: draw(seed, i) = mix(seed + i * golden), where mix is
// the splitmix64 finalizer. Platform independent and random-access.
inline constexpr const char* kStreamName = "splitmix64-ctr/1";

std::uint64_t splitmix64_mix(std::uint64_t z);

inline std::uint64_t stream_draw(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64_mix(seed + index * 0x9E3779B97F4A7C15ULL);
}

// floor(p * 2^64) for p in [0,1); p == 1 is reported via `always`.
struct Threshold {
    UInt128 scaled = 0;  // compare draw < scaled
    bool always = false;
};

Threshold probability_threshold(const Rational& p);

struct SampledSet {
    long long n = 0;
    Rational p;
    std::string p_text;  // exact decimal or fraction used in provenance
    std::uint64_t seed = 0;
    std::vector<long long> members;  // strictly increasing, within [1, n]
    std::vector<bool> present;       // index 0..n

    bool contains(long long x) const { return x >= 1 && x <= n && present[static_cast<std::size_t>(x)]; }
};

// Element x in [n] is drawn with counter x - 1.
SampledSet sample_set(long long n, const Rational& p, std::uint64_t seed);

SampledSet explicit_set(long long n, std::vector<long long> members);

}  // namespace rado
