#pragma once
// Counter-based SplitMix64 stream.
//
// Draw i (0-based) of a stream with seed s is mix(s + (i + 1) * 0x9e3779b97f4a7c15)
// where mix is the SplitMix64 finaliser. Uniform integers in [lo, hi] use
// rejection on the top of the 64-bit range, so the sequence of accepted values
// is the same in any language with wrapping 64-bit arithmetic.
#include <cstdint>
#include <stdexcept>

namespace qfree {

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

    static std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next()
    {
        ++counter_;
        return mix(seed_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on [lo, hi], lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (hi < lo) {
            throw std::invalid_argument("empty range");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) {
            return static_cast<std::int64_t>(next());
        }
        // 2^64 - (2^64 mod span), wrapping to 0 when span divides 2^64.
        const std::uint64_t rem = (~std::uint64_t(0) % span + 1) % span;
        const std::uint64_t limit = std::uint64_t(0) - rem;
        std::uint64_t r = next();
        while (r >= limit && limit != 0) {
            r = next();
        }
        return lo + static_cast<std::int64_t>(r % span);
    }

    /// A child stream whose seed is the next draw of this one.
    CounterRng split() { return CounterRng(next()); }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace qfree
