#include "quadring/ring.hpp"

#include <stdexcept>

namespace quadring {

Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long floor_mod(const Integer& a, long m) {
    return static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

Integer isqrt(const Integer& a) {
    if (a < 0) throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Integer parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

RingElement operator+(const RingElement& u, const RingElement& v) { return {u.x + v.x, u.y + v.y}; }
RingElement operator-(const RingElement& u, const RingElement& v) { return {u.x - v.x, u.y - v.y}; }
RingElement operator-(const RingElement& u) { return {-u.x, -u.y}; }
RingElement operator*(const Integer& k, const RingElement& u) { return {k * u.x, k * u.y}; }

std::optional<RingElement> halve(const RingElement& u) {
    return divide_exact(u, Integer(2));
}

std::optional<RingElement> divide_exact(const RingElement& u, const Integer& k) {
    if (k == 0) throw std::domain_error("division by zero");
    if (!mpz_divisible_p(u.x.get_mpz_t(), k.get_mpz_t()) ||
        !mpz_divisible_p(u.y.get_mpz_t(), k.get_mpz_t())) {
        return std::nullopt;
    }
    RingElement q;
    mpz_divexact(q.x.get_mpz_t(), u.x.get_mpz_t(), k.get_mpz_t());
    mpz_divexact(q.y.get_mpz_t(), u.y.get_mpz_t(), k.get_mpz_t());
    return q;
}

std::strong_ordering canonical_compare(const RingElement& u, const RingElement& v) {
    auto cmp_abs = [](const Integer& a, const Integer& b) {
        int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
        return c <=> 0;
    };
    if (auto c = cmp_abs(u.y, v.y); c != 0) return c;
    if (auto c = cmp_abs(u.x, v.x); c != 0) return c;
    // Equal magnitudes: non-negative component sorts first.
    if (auto c = (u.y < 0) <=> (v.y < 0); c != 0) return c;
    return (u.x < 0) <=> (v.x < 0);
}

ResidueClass::ResidueClass(const Integer& a_, const Integer& c_, const Integer& b_, const Integer& e_)
    : c(c_), e(e_) {
    if (c <= 0 || e <= 0) throw std::invalid_argument("residue class modulus must be positive");
    a = floor_mod(a_, c);
    b = floor_mod(b_, e);
}

bool ResidueClass::contains(const RingElement& u) const {
    return floor_mod(u.x, c) == a && floor_mod(u.y, e) == b;
}

bool is_S_pattern(long xm, long ym) {
    // S: (0,1) (0,2) (0,3) (1,1) (1,3) (2,1) (2,3) (3,1) (3,3)
    if (ym % 2 == 1) return true;
    return xm == 0 && ym == 2;
}

STClass classify_ST(const RingElement& n) {
    return is_S_pattern(floor_mod(n.x, 4L), floor_mod(n.y, 4L)) ? STClass::SMember : STClass::TMember;
}

bool is_square_free(const Integer& d) {
    if (d <= 0) return false;
    Integer rest = d;
    for (Integer p = 2; p * p <= rest; ++p) {
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) return false;
        }
    }
    return true;
}

RingContext::RingContext(const Integer& d) : d_(d) {
    if (d <= 0) throw std::invalid_argument("d must be positive");
    if (floor_mod(d, 4L) != 2) throw std::invalid_argument("d must be congruent to 2 mod 4");
    if (!is_square_free(d)) throw std::invalid_argument("d must be square-free");
}

RingElement RingContext::mul(const RingElement& u, const RingElement& v) const {
    return {u.x * v.x + d_ * u.y * v.y, u.x * v.y + u.y * v.x};
}

RingElement RingContext::pow(const RingElement& u, unsigned long exponent) const {
    RingElement result(1, 0);
    RingElement base = u;
    while (exponent > 0) {
        if (exponent & 1UL) result = mul(result, base);
        exponent >>= 1;
        if (exponent > 0) base = mul(base, base);
    }
    return result;
}

Integer RingContext::norm(const RingElement& u) const {
    return u.x * u.x - d_ * u.y * u.y;
}

std::optional<RingElement> RingContext::exact_div(const RingElement& u, const RingElement& v) const {
    if (v.is_zero()) throw std::domain_error("division by the zero element");
    auto q = divide_exact(mul(u, conj(v)), norm(v));
    if (q && mul(*q, v) == u) return q;
    return std::nullopt;
}

// (p + q√d)² = (p² + d q²) + 2pq√d and norm(s)² = norm(z), so p² = (x ± √norm)/2
// and d q² = (x ∓ √norm)/2. Each candidate is confirmed by squaring.
std::optional<RingElement> RingContext::is_square(const RingElement& z) const {
    if (z.is_zero()) return RingElement(0, 0);
    const Integer nz = norm(z);
    if (!is_perfect_square(nz)) return std::nullopt;
    if (z.x < 0) return std::nullopt;
    const Integer root_norm = isqrt(nz);
    for (int sign : {1, -1}) {
        Integer twice_p2 = z.x + sign * root_norm;
        if (twice_p2 < 0 || mpz_odd_p(twice_p2.get_mpz_t())) continue;
        Integer p2 = twice_p2 / 2;
        Integer dq2 = z.x - p2;
        if (dq2 < 0 || !mpz_divisible_p(dq2.get_mpz_t(), d_.get_mpz_t())) continue;
        Integer q2 = dq2 / d_;
        if (!is_perfect_square(p2) || !is_perfect_square(q2)) continue;
        Integer p = isqrt(p2);
        Integer q = isqrt(q2);
        for (const RingElement& s : {RingElement(p, q), RingElement(p, Integer(-q))}) {
            if (square(s) == z) {
                if (s.x > 0 || (s.x == 0 && s.y >= 0)) return s;
                return -s;
            }
        }
    }
    return std::nullopt;
}

std::string RingContext::format(const RingElement& u) const {
    std::string out = u.x.get_str();
    if (u.y < 0) {
        out += "-" + Integer(-u.y).get_str();
    } else {
        out += "+" + u.y.get_str();
    }
    out += "*sqrt(" + d_.get_str() + ")";
    return out;
}

std::array<std::string, 2> to_strings(const RingElement& u) { return {u.x.get_str(), u.y.get_str()}; }

RingElement from_strings(std::string_view x, std::string_view y) {
    return {parse_integer(x), parse_integer(y)};
}

}  // namespace quadring
