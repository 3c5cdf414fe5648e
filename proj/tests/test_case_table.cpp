#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadring/builder.hpp"
#include "quadring/case_table.hpp"

#include <set>

using namespace quadring;

namespace {

std::set<ResiduePair> pairs(std::initializer_list<ResiduePair> list) { return {list}; }

std::set<ResiduePair> listed_exclusions(const CaseTable& t) { return {t.excluded.begin(), t.excluded.end()}; }

}  // namespace

TEST_CASE("(8m1+4, 8k1+4) table coverage") {
    const CaseTable& t = thm12_case_iv_table();
    CHECK(t.covered().size() == 16);
    CHECK(t.uncovered() == pairs({{2, 1}, {5, 1}}));
    CHECK(listed_exclusions(t) == t.uncovered());
}

TEST_CASE("(16m1+2, 8k1) and (16m1+6, 8k1+4) table coverage") {
    CHECK(thm13_case_i_m0_table().uncovered() == pairs({{0, 0}}));
    CHECK(thm13_case_iv_m1_table().uncovered() == pairs({{2, 1}}));
    CHECK(listed_exclusions(thm13_case_i_m0_table()) == thm13_case_i_m0_table().uncovered());
    CHECK(listed_exclusions(thm13_case_iv_m1_table()) == thm13_case_iv_m1_table().uncovered());
}

TEST_CASE("gates never overlap") {
    for (const CaseTable* t : {&thm12_case_iv_table(), &thm13_case_i_m0_table(), &thm13_case_iv_m1_table()}) {
        std::size_t total = 0;
        for (const auto& row : t->rows) total += row.gate.size();
        CHECK(total == t->covered().size());
    }
}

TEST_CASE("table gaps are exactly the excluded (m, k) classes") {
    for (long m = 0; m < 12; ++m) {
        for (long k = 0; k < 6; ++k) {
            const bool excluded12 = dispatch_thm12(Integer(m), Integer(k)).kind == DispatchKind::Excluded;
            CHECK(excluded12 == (m % 6 == 5 && k % 6 == 3));
            const bool excluded13 = dispatch_thm13(Integer(m), Integer(k)).kind == DispatchKind::Excluded;
            CHECK(excluded13 == ((m == 0 && k == 0) || (m == 9 && k == 3)));
        }
    }
}

TEST_CASE("dispatch for (4m, 4k)") {
    CHECK(dispatch_thm12(Integer(2), Integer(0)).label == "thm12.caseI");
    CHECK(dispatch_thm12(Integer(3), Integer(0)).label == "thm12.caseII");
    CHECK(dispatch_thm12(Integer(3), Integer(0)).recipe->a_form.multiplier == 2);
    CHECK(dispatch_thm12(Integer(5), Integer(0)).recipe->a_form.multiplier == 4);
    CHECK(dispatch_thm12(Integer(5), Integer(2)).kind == DispatchKind::Delegated);
    CHECK(dispatch_thm12(Integer(-3), Integer(0)).kind == DispatchKind::MinusTwelve);
    CHECK(dispatch_thm12(Integer(1), Integer(0)).kind == DispatchKind::KnownScaled);
    CHECK(dispatch_thm12(Integer(9), Integer(0)).kind == DispatchKind::KnownScaled);
    CHECK(dispatch_thm12(Integer(0), Integer(1)).label == "thm12.caseIII");
    CHECK(dispatch_thm12(Integer(0), Integer(1)).recipe->a_form.norm == -1);
    const Dispatch iv = dispatch_thm12(Integer(1), Integer(1));
    CHECK(iv.label == "thm12.caseIV");
    CHECK(iv.cell.at("m1") == 0);
    CHECK(iv.recipe->a_form.describe() == "(12M+4,6N+1)");
}

TEST_CASE("dispatch for (4m+2, 4k)") {
    CHECK(dispatch_thm13(Integer(2), Integer(0)).label == "thm13.caseI.m2mod4");
    CHECK(dispatch_thm13(Integer(4), Integer(0)).label == "thm13.caseI.m0mod4");
    CHECK(dispatch_thm13(Integer(2), Integer(1)).label == "thm13.caseII");
    CHECK(dispatch_thm13(Integer(1), Integer(0)).label == "thm13.caseIII");
    CHECK(dispatch_thm13(Integer(3), Integer(1)).label == "thm13.caseIV.m3mod4");
    CHECK(dispatch_thm13(Integer(1), Integer(1)).label == "thm13.caseIV.m1mod4");
    const Dispatch a = dispatch_thm13(Integer(2), Integer(0));
    REQUIRE(a.recipe->factor_form.has_value());
    CHECK(a.recipe->factor_form->describe() == "(12M+4,-6N-1)");
    CHECK(a.recipe->a_form.describe() == "4(6a1+1,6b1)");
}

TEST_CASE("element form matching") {
    const ElementForm f{6, 1, 12, 4, -6, -1, "M", "N"};
    CHECK(f.matches({4, -1}));
    CHECK(f.matches({16, 5}));
    CHECK_FALSE(f.matches({4, 1}));
    const auto [M, N] = f.params({16, 5});
    CHECK(M == 1);
    CHECK(N == -1);
}

TEST_CASE("every tabulated recipe builds on a sample cell") {
    const RingContext ten(10);
    for (long m1 = 0; m1 < 6; ++m1) {
        for (long k1 = 0; k1 < 3; ++k1) {
            if (!thm12_case_iv_table().lookup(Integer(m1), Integer(k1))) continue;
            const RingElement n(8 * m1 + 4, 8 * k1 + 4);
            CAPTURE(m1);
            CAPTURE(k1);
            CHECK(construct_thm12(ten, n).provenance.tag == "thm12.caseIV");
        }
    }
    for (long m1 = 0; m1 < 3; ++m1) {
        for (long k1 = 0; k1 < 3; ++k1) {
            CAPTURE(m1);
            CAPTURE(k1);
            if (thm13_case_i_m0_table().lookup(Integer(m1), Integer(k1))) {
                CHECK(construct_thm13(ten, {16 * m1 + 2, 8 * k1}).provenance.tag == "thm13.caseI.m0mod4");
            }
            if (thm13_case_iv_m1_table().lookup(Integer(m1), Integer(k1))) {
                CHECK(construct_thm13(ten, {16 * m1 + 6, 8 * k1 + 4}).provenance.tag == "thm13.caseIV.m1mod4");
            }
        }
    }
}
