#pragma once

#include "quadring/ring.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace quadring::testing {

inline constexpr std::uint64_t kSeed = 20240917;

class Generator {
public:
    explicit Generator(std::uint64_t seed = kSeed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    RingElement element(long bound) { return {uniform(-bound, bound), uniform(-bound, bound)}; }

    RingElement nonzero(long bound) {
        for (;;) {
            RingElement u = element(bound);
            if (!u.is_zero()) return u;
        }
    }

    /// Multi-limb integer of roughly `bits` bits with random sign.
    Integer big(unsigned bits) {
        Integer v = 0;
        for (unsigned done = 0; done < bits; done += 32) {
            v <<= 32;
            v += static_cast<unsigned long>(rng_() & 0xffffffffu);
        }
        return (rng_() & 1) ? Integer(-v) : v;
    }

    RingElement big_element(unsigned bits) { return {big(bits), big(bits)}; }

private:
    std::mt19937_64 rng_;
};

/// Square root by enumerating divisor pairs p·q = y/2; canonical sign (p > 0, or p = 0 and q ≥ 0).
inline std::optional<RingElement> reference_sqrt(const Integer& d, const RingElement& z) {
    auto canonical = [](RingElement s) {
        if (s.x < 0 || (s.x == 0 && s.y < 0)) s = -s;
        return s;
    };
    if (z.y == 0) {
        if (z.x >= 0 && is_perfect_square(z.x)) return canonical({isqrt(z.x), Integer(0)});
        if (z.x >= 0 && z.x % d == 0 && is_perfect_square(Integer(z.x / d))) {
            return canonical({Integer(0), isqrt(Integer(z.x / d))});
        }
        return std::nullopt;
    }
    if (z.y % 2 != 0) return std::nullopt;
    const Integer h = abs(Integer(z.y / 2));
    for (Integer p = 1; p <= h; ++p) {
        if (h % p != 0) continue;
        const Integer q = h / p;
        if (p * p + d * q * q == z.x) {
            return canonical({p, z.y > 0 ? q : Integer(-q)});
        }
    }
    return std::nullopt;
}

/// Smallest y > 0 with d·y² + target a perfect square, scanning y up to `limit`.
inline std::optional<RingElement> pell_scan(const Integer& d, long target, long limit) {
    for (long y = 1; y <= limit; ++y) {
        const Integer v = d * y * y + target;
        if (v > 0 && is_perfect_square(v)) return RingElement(isqrt(v), Integer(y));
    }
    return std::nullopt;
}

}  // namespace quadring::testing
