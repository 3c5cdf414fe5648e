#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace quadring {

using Integer = mpz_class;

/// Non-negative remainder of a modulo m (m > 0).
Integer floor_mod(const Integer& a, const Integer& m);
long floor_mod(const Integer& a, long m);

/// Floor of the square root; a must be non-negative.
Integer isqrt(const Integer& a);
bool is_perfect_square(const Integer& a);

/// Parse a decimal string (optional leading '-'); throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// x + y*sqrt(d). The ambient d lives in RingContext, never in the element.
struct RingElement {
    Integer x;
    Integer y;

    RingElement() = default;
    RingElement(Integer x_, Integer y_) : x(std::move(x_)), y(std::move(y_)) {}
    RingElement(long x_, long y_) : x(x_), y(y_) {}

    bool is_zero() const { return x == 0 && y == 0; }

    friend bool operator==(const RingElement& u, const RingElement& v) {
        return u.x == v.x && u.y == v.y;
    }
};

RingElement operator+(const RingElement& u, const RingElement& v);
RingElement operator-(const RingElement& u, const RingElement& v);
RingElement operator-(const RingElement& u);
RingElement operator*(const Integer& k, const RingElement& u);

inline RingElement conj(const RingElement& u) { return {u.x, -u.y}; }

/// Componentwise exact halving; absent when either component is odd.
std::optional<RingElement> halve(const RingElement& u);

/// Componentwise division by a rational integer; absent when inexact.
std::optional<RingElement> divide_exact(const RingElement& u, const Integer& k);

/// Total order used wherever outputs must be reproducible:
/// by |y|, then |x|, then non-negative y first, then non-negative x first.
std::strong_ordering canonical_compare(const RingElement& u, const RingElement& v);

struct CanonicalLess {
    bool operator()(const RingElement& u, const RingElement& v) const {
        return canonical_compare(u, v) < 0;
    }
};

/// x ≡ a (mod c) and y ≡ b (mod e), stored normalized to [0, modulus).
struct ResidueClass {
    Integer a;
    Integer c;
    Integer b;
    Integer e;

    ResidueClass(const Integer& a_, const Integer& c_, const Integer& b_, const Integer& e_);

    bool contains(const RingElement& u) const;
};

inline bool congruent(const RingElement& u, const ResidueClass& cls) { return cls.contains(u); }

enum class STClass { SMember, TMember };

/// Componentwise mod-4 partition of Z[sqrt d]; nine classes go to S, seven to T.
STClass classify_ST(const RingElement& n);
bool is_S_pattern(long x_mod4, long y_mod4);

/// Arithmetic in Z[sqrt d] for a fixed square-free d ≡ 2 (mod 4).
class RingContext {
public:
    /// Throws std::invalid_argument unless d > 0, d ≡ 2 (mod 4), and d square-free.
    explicit RingContext(const Integer& d);
    explicit RingContext(long d) : RingContext(Integer(d)) {}

    const Integer& d() const { return d_; }

    RingElement mul(const RingElement& u, const RingElement& v) const;
    RingElement square(const RingElement& u) const { return mul(u, u); }
    RingElement pow(const RingElement& u, unsigned long exponent) const;
    Integer norm(const RingElement& u) const;

    /// q with q*v == u, or absent if u*conj(v) is not divisible by norm(v).
    /// Throws std::domain_error when v is zero.
    std::optional<RingElement> exact_div(const RingElement& u, const RingElement& v) const;

    /// Canonical square root (p > 0, or p == 0 and q >= 0) when z is a square.
    std::optional<RingElement> is_square(const RingElement& z) const;

    /// "x+y*sqrt(d)" display form.
    std::string format(const RingElement& u) const;

    friend bool operator==(const RingContext& a, const RingContext& b) { return a.d_ == b.d_; }

private:
    Integer d_;
};

bool is_square_free(const Integer& d);

/// Interchange form: two decimal strings.
std::array<std::string, 2> to_strings(const RingElement& u);
RingElement from_strings(std::string_view x, std::string_view y);

}  // namespace quadring
