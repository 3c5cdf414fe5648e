#pragma once

#include "quadring/ring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadring {

/// A solution of x² − d y² = target_norm.
struct PellSolution {
    RingElement value;
    Integer target_norm;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Periodic continued fraction of √d: [a0; period...], the period ending in 2·a0.
struct CFExpansion {
    Integer a0;
    std::vector<Integer> period;
    /// Q_1..Q_L of the (P, Q) recurrence, aligned with `period`.
    std::vector<Integer> denominators;

    std::size_t period_length() const { return period.size(); }
};

CFExpansion cf_expand(const RingContext& ctx);

/// Minimal x, y > 0 with x² − d y² = 1.
PellSolution fundamental_unit(const RingContext& ctx);

/// Minimal x, y > 0 with x² − d y² = −1; present iff the period length is odd.
std::optional<PellSolution> fundamental_neg(const RingContext& ctx);

/// Representatives of x² − d y² = N of minimal |y| in their unit orbit, as (x, y) and (x, −y) with x ≥ 0.
/// Scans 0 ≤ y ≤ isqrt(|N|(x1+1)/(2d)) + 1 when that range is small; otherwise reads the
/// solutions off the convergents of √d, which requires N² < d.
std::vector<RingElement> norm_representatives(const RingContext& ctx, const Integer& target,
                                              const RingElement& unit);
std::vector<RingElement> norm_representatives(const RingContext& ctx, const Integer& target);

/// All representatives of norm +6 (sign > 0) or −6 (sign < 0); empty when unsolvable.
std::vector<PellSolution> solve_norm6(const RingContext& ctx, int sign);

/// The first `count` elements of the orbit {±r·εᵏ, ±conj(r)·εᵏ} of the given representatives,
/// ordered by canonical_compare (|y|, then |x|, then signs).
std::vector<RingElement> orbit_elements(const RingContext& ctx, const std::vector<RingElement>& reps,
                                        const RingElement& unit, std::size_t count);

struct EmptyNormClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// First `count` elements of norm target ∈ {1, −1, 6, −6}; throws EmptyNormClass when none exist.
std::vector<RingElement> enumerate_norm_class(const RingContext& ctx, long target, std::size_t count);

enum class FormKind { FormI, FormII, FormIV, FormV };

std::string to_string(FormKind kind);

/// Component pattern of an element of norm ±1 or ±6:
///   FormI  (6a1 ± 1, 6b1)        norm 1
///   FormII (6a1 ± 3, 6b1 ± 1)    norm −1
///   FormIV (12M ± 4, 6N ± 1)     norm 6
///   FormV  (12M ± 2, 6N ± 1)     norm −6
/// `first`/`second` are a1, b1 (or M, N); the signs are the chosen ± (+1 preferred on ties).
struct NormForm {
    FormKind kind;
    Integer first;
    int first_sign;
    Integer second;
    int second_sign;
};

struct FormViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Absent for norms outside {±1, ±6}; throws FormViolation when the norm matches but the pattern does not.
std::optional<NormForm> classify_form(const RingContext& ctx, const RingElement& u);

/// d square-free, d ≡ 2 (mod 4), with x² − dy² = −1 and x² − dy² = 6 both solvable.
bool is_admissible(const Integer& d);

/// Admissible d ≤ limit in increasing order.
std::vector<long> admissible_d_scan(long limit);

}  // namespace quadring
