#pragma once

#include "quadring/case_table.hpp"
#include "quadring/certificate.hpp"
#include "quadring/ring.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace quadring {

inline constexpr std::size_t kDefaultRetryBudget = 64;

/// Limits for the generic factorization search.
struct SearchBounds {
    long factor_norm_bound = 1000;  // |norm(α₁)| ≤ this
    long a_norm_bound = 100;        // |norm(a)| ≤ this
    unsigned unit_power_bound = 2;  // α₁ and a range over reps·εʲ with |j| ≤ this
};

struct ExcludedError : std::runtime_error {
    SupportStatus status;
    ExcludedError(SupportStatus s, const std::string& what) : std::runtime_error(what), status(std::move(s)) {}
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WrongResidueClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {a, b, a+b+2r, a+4b+4r} with b = (r² − n)/a. Absent when b is not integral, an element is zero,
/// two elements coincide, or a pair fails. `alpha` (a root of a(a+4b+4r)+n) is used when it squares
/// correctly; otherwise the canonical root is taken.
std::optional<QuadrupleCertificate> assemble(const RingContext& ctx, const RingElement& a, const RingElement& r,
                                             const RingElement& n,
                                             const std::optional<RingElement>& alpha = std::nullopt);

/// D(w²n) certificate with elements w·aᵢ and witnesses w·sᵢ. Throws std::invalid_argument for w = 0.
QuadrupleCertificate scale(const RingContext& ctx, const RingElement& w, const QuadrupleCertificate& cert);

/// Support status of n. Throws std::invalid_argument for n = 0.
SupportStatus classify_support(const RingContext& ctx, const RingElement& n);

/// For d = 10 and n in one of the four residual families not covered by the (4m, 4k) and (4m+2, 4k) constructions:
/// ConstructibleHere ("ex3"/"ex4"), DelegatedPriorWork ("reduction"), or OpenS0. Absent otherwise.
std::optional<SupportStatus> classify_exceptional(const RingContext& ctx, const RingElement& n);

/// {1, 3, 8, 120} for n = 1 and its scalings by 2 and 6 for n = 4 and n = 36.
std::optional<QuadrupleCertificate> known_certificate(const RingContext& ctx, const RingElement& n);

/// n = (4m, 4k). Throws WrongResidueClass, ExcludedError (excluded or delegated cells), BudgetExhausted.
QuadrupleCertificate construct_thm12(const RingContext& ctx, const RingElement& n,
                                     std::size_t budget = kDefaultRetryBudget);

/// n = (4m+2, 4k). Same errors as construct_thm12.
QuadrupleCertificate construct_thm13(const RingContext& ctx, const RingElement& n,
                                     std::size_t budget = kDefaultRetryBudget);

/// Which d = 10 family an n belongs to.
enum class D10Family { Ex3First, Ex3Second, Ex4First, Ex4Second };

struct D10Member {
    D10Family family;
    Integer m;
    Integer k;
};

/// Membership in 4(12m+5, 6k+3), 4(12m+11, 6k+3), (48m+38, 24k+12), (48m+2, 24k).
std::optional<D10Member> d10_family(const RingElement& n);

/// Explicit d = 10 constructions: a = (19,6)ᵗ·(0,1) with t odd or a = (19,6)ᵗ·(10,3) with t even,
/// depending on the family. Throws PreconditionError on wrong d, family, residue of m, or parity of t.
QuadrupleCertificate construct_d10(const RingContext& ctx, const RingElement& n, unsigned long t);

struct Reduction {
    RingElement w;        // (0, 1), so w² = (d, 0)
    RingElement reduced;  // n / d
    SupportStatus status;  // classification of the reduced n
};

/// Absent unless d divides both components of n.
std::optional<Reduction> reduce_by_d(const RingContext& ctx, const RingElement& n);

/// Generic search over 3n = α₁α₂, s = (α₁+α₂)/2, r = (s − a)/2. α₁ runs through divisor norms by
/// |norm|, then unit power 0, 1, −1, 2, ..., then sign; a by |norm|, then canonical order.
std::optional<QuadrupleCertificate> lemma21_search(const RingContext& ctx, const RingElement& n,
                                                   const SearchBounds& bounds = {});

/// Fixed routing: known certificates, residue-class constructions, d = 10 families, reduction by d, search.
/// Throws ExcludedError for n in S and for excluded residue classes with no route, NotFound otherwise.
QuadrupleCertificate construct_auto(const RingContext& ctx, const RingElement& n,
                                    std::size_t budget = kDefaultRetryBudget, const SearchBounds& bounds = {});

}  // namespace quadring
