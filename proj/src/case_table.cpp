#include "quadring/case_table.hpp"

#include <stdexcept>

namespace quadring {

namespace {

std::string affine(long scale, const std::string& name, long offset) {
    std::string out = scale < 0 ? "-" : "";
    out += std::to_string(scale < 0 ? -scale : scale) + name;
    if (offset > 0) out += "+" + std::to_string(offset);
    if (offset < 0) out += std::to_string(offset);
    return out;
}

// Norm-1 and norm-(−1) element shapes.
ElementForm unit_form(long multiplier) { return {1, multiplier, 6, 1, 6, 0, "a1", "b1"}; }
ElementForm neg_unit_form() { return {-1, 1, 6, 3, 6, 1, "a1", "b1"}; }

ElementForm norm6(long x_offset, long y_offset, const char* p, const char* q) {
    return {6, 1, 12, x_offset, 6, y_offset, p, q};
}
ElementForm norm_minus6(long x_offset, long y_offset, const char* p, const char* q) {
    return {-6, 1, 12, x_offset, 6, y_offset, p, q};
}

// Factor shapes for α₁ in the (4m+2, 4k) constructions.
ElementForm factor_a() { return {6, 1, 12, 4, -6, -1, "M", "N"}; }    // (12M+4, -6N-1)
ElementForm factor_b() { return {-6, 1, -12, -2, 6, 1, "M", "N"}; }   // (-12M-2, 6N+1)
ElementForm factor_c() { return {-6, 1, 12, 2, 6, 1, "M", "N"}; }     // (12M+2, 6N+1)
ElementForm factor_d() { return {6, 1, 12, 4, 6, 1, "M", "N"}; }      // (12M+4, 6N+1)

const RingElement kSix(6, 0);

CaseRecipe fixed_six(std::string tag, ElementForm a) { return {std::move(tag), kSix, std::nullopt, std::move(a)}; }
CaseRecipe factored(std::string tag, ElementForm alpha, ElementForm a) {
    return {std::move(tag), std::nullopt, std::move(alpha), std::move(a)};
}

bool divisible(const Integer& v, long m) { return floor_mod(v, m) == 0; }

}  // namespace

bool ElementForm::matches(const RingElement& u) const {
    const long xm = x_scale < 0 ? -x_scale : x_scale;
    const long ym = y_scale < 0 ? -y_scale : y_scale;
    return floor_mod(Integer(u.x - x_offset), xm) == 0 && floor_mod(Integer(u.y - y_offset), ym) == 0;
}

std::pair<Integer, Integer> ElementForm::params(const RingElement& u) const {
    return {Integer((u.x - x_offset) / x_scale), Integer((u.y - y_offset) / y_scale)};
}

std::string ElementForm::describe() const {
    std::string inner = "(" + affine(x_scale, first_name, x_offset) + "," + affine(y_scale, second_name, y_offset) + ")";
    return multiplier == 1 ? inner : std::to_string(multiplier) + inner;
}

const TableRow* CaseTable::lookup(const Integer& m1, const Integer& k1) const {
    const ResiduePair key{floor_mod(m1, first_modulus), floor_mod(k1, second_modulus)};
    for (const TableRow& row : rows) {
        for (const ResiduePair& g : row.gate) {
            if (g == key) return &row;
        }
    }
    return nullptr;
}

std::set<ResiduePair> CaseTable::covered() const {
    std::set<ResiduePair> out;
    for (const TableRow& row : rows) out.insert(row.gate.begin(), row.gate.end());
    return out;
}

std::set<ResiduePair> CaseTable::uncovered() const {
    const auto have = covered();
    std::set<ResiduePair> out;
    for (long i = 0; i < first_modulus; ++i) {
        for (long j = 0; j < second_modulus; ++j) {
            if (!have.contains({i, j})) out.insert({i, j});
        }
    }
    return out;
}

const CaseTable& thm12_case_iv_table() {
    static const CaseTable table{
        "thm12.caseIV",
        6,
        3,
        {
            {{{0, 0}, {0, 1}, {2, 0}, {2, 2}, {4, 1}, {4, 2}}, fixed_six("thm12.caseIV", norm6(4, 1, "M", "N"))},
            {{{0, 2}, {4, 0}}, fixed_six("thm12.caseIV", norm6(4, -1, "M", "N"))},
            {{{1, 0}, {1, 1}, {3, 2}, {5, 0}, {5, 2}}, fixed_six("thm12.caseIV", norm_minus6(2, 1, "M", "N"))},
            {{{1, 2}, {3, 0}, {3, 1}}, fixed_six("thm12.caseIV", norm_minus6(2, -1, "M", "N"))},
        },
        {{2, 1}, {5, 1}},
    };
    return table;
}

const CaseTable& thm13_case_i_m0_table() {
    static const CaseTable table{
        "thm13.caseI.m0mod4",
        3,
        3,
        {
            {{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 2}},
             factored("thm13.caseI.m0mod4", factor_b(), norm6(4, 1, "a1", "b1"))},
            {{{1, 2}}, factored("thm13.caseI.m0mod4", factor_b(), norm6(-4, 1, "a1", "b1"))},
            {{{2, 1}}, factored("thm13.caseI.m0mod4", factor_c(), norm6(4, -1, "a1", "b1"))},
        },
        {{0, 0}},
    };
    return table;
}

const CaseTable& thm13_case_iv_m1_table() {
    // (1, 2) sits in the first row: that recipe yields an integral b there as well.
    static const CaseTable table{
        "thm13.caseIV.m1mod4",
        3,
        3,
        {
            {{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 2}},
             factored("thm13.caseIV.m1mod4", factor_a(), norm_minus6(2, 1, "a1", "b1"))},
            {{{0, 2}}, factored("thm13.caseIV.m1mod4", factor_a(), norm_minus6(-2, 1, "a1", "b1"))},
            {{{1, 0}}, factored("thm13.caseIV.m1mod4", factor_d(), norm_minus6(2, -1, "a1", "b1"))},
        },
        {{2, 1}},
    };
    return table;
}

Dispatch dispatch_thm12(const Integer& m, const Integer& k) {
    Dispatch out{DispatchKind::Recipe, std::nullopt, {{"m", m}, {"k", k}}, ""};
    const bool m_even = divisible(m, 2);
    const bool k_even = divisible(k, 2);

    if (m_even && k_even) {
        out.label = "thm12.caseI";
        out.recipe = fixed_six(out.label, unit_form(1));
        return out;
    }
    if (!m_even && k_even) {
        const Integer m1 = (m - 1) / 2;
        const Integer k1 = k / 2;
        out.cell["m1"] = m1;
        out.cell["k1"] = k1;
        out.label = "thm12.caseII";
        if (m == -3 && k == 0) {
            out.kind = DispatchKind::MinusTwelve;
            out.label = "thm12.caseII.n-12";
        } else if ((m == 1 || m == 9) && k == 0) {
            out.kind = DispatchKind::KnownScaled;
            out.label = "thm12.caseII.known";
        } else if (!divisible(m1, 2)) {
            out.recipe = fixed_six(out.label, unit_form(2));
        } else if (divisible(k1, 2)) {
            out.recipe = fixed_six(out.label, unit_form(4));
        } else {
            out.kind = DispatchKind::Delegated;
            out.label = "thm12.caseII.delegated";
        }
        return out;
    }
    if (m_even) {
        out.label = "thm12.caseIII";
        out.recipe = fixed_six(out.label, neg_unit_form());
        return out;
    }
    const Integer m1 = (m - 1) / 2;
    const Integer k1 = (k - 1) / 2;
    out.cell["m1"] = m1;
    out.cell["k1"] = k1;
    out.label = "thm12.caseIV";
    if (const TableRow* row = thm12_case_iv_table().lookup(m1, k1)) {
        out.recipe = row->recipe;
    } else {
        out.kind = DispatchKind::Excluded;
    }
    return out;
}

Dispatch dispatch_thm13(const Integer& m, const Integer& k) {
    Dispatch out{DispatchKind::Recipe, std::nullopt, {{"m", m}, {"k", k}}, ""};
    const bool m_even = divisible(m, 2);
    const bool k_even = divisible(k, 2);
    const long m4 = floor_mod(m, 4L);

    auto from_table = [&](const CaseTable& table, const Integer& m1, const Integer& k1) {
        out.cell["m1"] = m1;
        out.cell["k1"] = k1;
        out.label = table.name;
        if (const TableRow* row = table.lookup(m1, k1)) {
            out.recipe = row->recipe;
        } else {
            out.kind = DispatchKind::Excluded;
        }
    };

    if (m_even && k_even) {
        if (m4 == 2) {
            out.label = "thm13.caseI.m2mod4";
            out.recipe = factored(out.label, factor_a(), unit_form(4));
        } else {
            from_table(thm13_case_i_m0_table(), Integer(m / 4), Integer(k / 2));
        }
    } else if (m_even) {
        out.label = "thm13.caseII";
        out.recipe = factored(out.label, factor_a(), unit_form(2));
    } else if (k_even) {
        out.label = "thm13.caseIII";
        out.recipe = factored(out.label, factor_b(), unit_form(2));
    } else if (m4 == 3) {
        out.label = "thm13.caseIV.m3mod4";
        out.recipe = factored(out.label, factor_b(), unit_form(4));
    } else {
        from_table(thm13_case_iv_m1_table(), Integer((m - 1) / 4), Integer((k - 1) / 2));
    }
    return out;
}

}  // namespace quadring
