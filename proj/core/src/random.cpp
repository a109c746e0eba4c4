#include "rado/random.hpp"

#include "rado/errors.hpp"

#include <algorithm>

namespace rado {

std::uint64_t splitmix64_mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Threshold probability_threshold(const Rational& p)
{
    if (p < 0 || p > 1)
        throw PreconditionError("probability " + to_string(p) + " outside [0,1]");
    Threshold t;
    if (p == 1) {
        t.always = true;
        return t;
    }
    Integer scaled = (boost::multiprecision::numerator(p) << 64) / boost::multiprecision::denominator(p);
    t.scaled = static_cast<UInt128>(scaled.convert_to<unsigned long long>());
    // scaled < 2^64 since p < 1
    return t;
}

SampledSet sample_set(long long n, const Rational& p, std::uint64_t seed)
{
    if (n < 1)
        throw PreconditionError("n must be positive");
    const Threshold t = probability_threshold(p);
    SampledSet s;
    s.n = n;
    s.p = p;
    s.p_text = to_string(p);
    s.seed = seed;
    s.present.assign(static_cast<std::size_t>(n) + 1, false);
    for (long long x = 1; x <= n; ++x) {
        bool keep = t.always ||
                    static_cast<UInt128>(stream_draw(seed, static_cast<std::uint64_t>(x - 1))) < t.scaled;
        if (keep) {
            s.members.push_back(x);
            s.present[static_cast<std::size_t>(x)] = true;
        }
    }
    return s;
}

SampledSet explicit_set(long long n, std::vector<long long> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && (members.front() < 1 || members.back() > n))
        throw PreconditionError("set member outside [1, n]");
    SampledSet s;
    s.n = n;
    s.p = 0;
    s.p_text = "explicit";
    s.present.assign(static_cast<std::size_t>(n) + 1, false);
    for (long long x : members)
        s.present[static_cast<std::size_t>(x)] = true;
    s.members = std::move(members);
    return s;
}

}  // namespace rado
