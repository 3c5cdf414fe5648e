#pragma once

#include "quadring/ring.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace quadring {

/// Elements a = multiplier·u with norm(u) = norm and
/// u = (x_scale·P + x_offset, y_scale·Q + y_offset); P and Q are reported under the given names.
struct ElementForm {
    long norm;
    long multiplier;
    long x_scale, x_offset;
    long y_scale, y_offset;
    std::string first_name;
    std::string second_name;

    bool matches(const RingElement& u) const;
    /// (P, Q) for an element u that matches.
    std::pair<Integer, Integer> params(const RingElement& u) const;
    std::string describe() const;
};

/// 3n = α₁·α₂ with α₁ fixed or drawn from a norm class; a drawn from `a_form`;
/// r = ((α₁ + α₂)/2 − a)/2.
struct CaseRecipe {
    std::string tag;
    std::optional<RingElement> fixed_factor;
    std::optional<ElementForm> factor_form;
    ElementForm a_form;
};

using ResiduePair = std::pair<long, long>;

struct TableRow {
    std::vector<ResiduePair> gate;
    CaseRecipe recipe;
};

/// Residue-gated sub-case table over (m1 mod first_modulus, k1 mod second_modulus).
struct CaseTable {
    std::string name;
    long first_modulus;
    long second_modulus;
    std::vector<TableRow> rows;
    std::vector<ResiduePair> excluded;

    const TableRow* lookup(const Integer& m1, const Integer& k1) const;
    std::set<ResiduePair> covered() const;
    std::set<ResiduePair> uncovered() const;
};

/// n = (8m1+4, 8k1+4): a of norm ±6, α₁ = 6.
const CaseTable& thm12_case_iv_table();
/// n = (16m1+2, 8k1).
const CaseTable& thm13_case_i_m0_table();
/// n = (16m1+6, 8k1+4).
const CaseTable& thm13_case_iv_m1_table();

enum class DispatchKind {
    Recipe,        // run the recipe
    KnownScaled,   // n = 4 or 36: a scaled copy of {1, 3, 8, 120}
    MinusTwelve,   // n = -12: fixed decomposition
    Delegated,     // covered by prior work; only the generic search applies
    Excluded       // residue class outside the construction
};

struct Dispatch {
    DispatchKind kind;
    std::optional<CaseRecipe> recipe;
    std::map<std::string, Integer> cell;  // m, k and the reduced m1, k1 where used
    std::string label;
};

/// Case selection for n = (4m, 4k).
Dispatch dispatch_thm12(const Integer& m, const Integer& k);
/// Case selection for n = (4m+2, 4k).
Dispatch dispatch_thm13(const Integer& m, const Integer& k);

}  // namespace quadring
