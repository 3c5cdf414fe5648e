#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadring/builder.hpp"
#include "quadring/oracle.hpp"
#include "support/goldens.hpp"

using namespace quadring;

namespace {
const RingContext ten(10);

void check_witness_identities(const QuadrupleCertificate& c) {
    for (std::size_t s = 0; s < 6; ++s) {
        const auto [i, j] = kPairs[s];
        CHECK(ten.square(c.witnesses[s]) == ten.mul(c.elements[i], c.elements[j]) + c.n);
    }
}
}  // namespace

TEST_CASE("golden certificates") {
    for (const auto& g : testing::goldens()) {
        CAPTURE(g.name);
        const QuadrupleCertificate c = testing::build_golden(ten, g);
        CHECK(c.d == 10);
        CHECK(c.n == g.n);
        CHECK(c.elements == g.elements);
        CHECK(c.witnesses == g.witnesses);
        CHECK(certificate_holds(ten, c));
        CHECK(verify_quadruple(ten, c.elements, c.n).has_value());
        check_witness_identities(c);
    }
}

TEST_CASE("golden provenance") {
    const auto c8 = construct_auto(ten, {8, 0});
    CHECK(c8.provenance.tag == "thm12.caseI");
    CHECK(c8.provenance.params.at("m") == 2);
    CHECK(c8.provenance.params.at("k") == 0);
    const auto c10 = construct_auto(ten, {10, 0});
    CHECK(c10.provenance.tag.rfind("thm13.", 0) == 0);
    const auto cm12 = construct_auto(ten, {-12, 0});
    CHECK(cm12.provenance.tag == "thm12.caseII.n-12");
    const auto e3 = construct_d10(ten, {116, 12}, 1);
    CHECK(e3.provenance.tag == "ex3");
    CHECK(e3.provenance.params.at("t") == 1);
    const auto e4 = construct_d10(ten, {86, 12}, 0);
    CHECK(e4.provenance.tag == "ex4");
}

TEST_CASE("assemble") {
    // a = 19+6√10, r = −7−3√10, n = 8 reproduces the (8, 0) golden.
    const auto c = assemble(ten, {19, 6}, {-7, -3}, {8, 0});
    REQUIRE(c.has_value());
    CHECK(c->elements == std::array<RingElement, 4>{{{19, 6}, {-31, 12}, {-26, 12}, {-133, 42}}});
    check_witness_identities(*c);
    // a = 1, r = 2, n = 1: {1, 3, 8, 21} and 1·21 + 1 = 22.
    CHECK_FALSE(assemble(ten, {1, 0}, {2, 0}, {1, 0}).has_value());
    // a = 1, r = 1, n = 1: b = 0.
    CHECK_FALSE(assemble(ten, {1, 0}, {1, 0}, {1, 0}).has_value());
    // b = (r² − n)/a not integral.
    CHECK_FALSE(assemble(ten, {2, 0}, {0, 0}, {1, 0}).has_value());
    // a = 1, r = 0, n = 8: {1, −8, −7, −31} and 1·(−31) + 8 = −23.
    CHECK_FALSE(assemble(ten, {1, 0}, {0, 0}, {8, 0}).has_value());
    // a wrong alpha hint falls back to the canonical root.
    const auto e = assemble(ten, {19, 6}, {-7, -3}, {8, 0}, RingElement(5, 5));
    REQUIRE(e.has_value());
    CHECK(certificate_holds(ten, *e));
}

TEST_CASE("scaling") {
    const auto fermat = known_certificate(ten, {1, 0});
    REQUIRE(fermat.has_value());
    const auto six = scale(ten, {6, 0}, *fermat);
    CHECK(six.n == RingElement(36, 0));
    CHECK(six.elements == std::array<RingElement, 4>{{{6, 0}, {18, 0}, {48, 0}, {720, 0}}});
    CHECK(certificate_holds(ten, six));
    CHECK(six.provenance.tag == "scaled");
    const auto same = scale(ten, {1, 0}, *fermat);
    CHECK(same.elements == fermat->elements);
    CHECK(same.witnesses == fermat->witnesses);
    CHECK_THROWS_AS((void)scale(ten, {0, 0}, *fermat), std::invalid_argument);
    const auto root = scale(ten, {0, 1}, *fermat);
    CHECK(root.n == RingElement(10, 0));
    CHECK(certificate_holds(ten, root));
}

TEST_CASE("known certificates") {
    const auto one = known_certificate(ten, {1, 0});
    REQUIRE(one.has_value());
    CHECK(one->elements == std::array<RingElement, 4>{{{1, 0}, {3, 0}, {8, 0}, {120, 0}}});
    CHECK(one->provenance.tag == "known");
    const auto four = known_certificate(ten, {4, 0});
    REQUIRE(four.has_value());
    CHECK(four->elements == std::array<RingElement, 4>{{{2, 0}, {6, 0}, {16, 0}, {240, 0}}});
    const auto thirtysix = known_certificate(ten, {36, 0});
    REQUIRE(thirtysix.has_value());
    CHECK(thirtysix->elements == std::array<RingElement, 4>{{{6, 0}, {18, 0}, {48, 0}, {720, 0}}});
    for (const auto& c : {*one, *four, *thirtysix}) CHECK(verify_quadruple(ten, c.elements, c.n).has_value());
    CHECK_FALSE(known_certificate(ten, {9, 0}).has_value());
    CHECK(construct_auto(ten, {36, 0}).elements == thirtysix->elements);
}

TEST_CASE("support classification") {
    CHECK(classify_support(ten, {20, 12}).tag == SupportTag::ExcludedResidue);
    CHECK(classify_support(ten, {1, 1}).tag == SupportTag::ExcludedS);
    CHECK(classify_support(ten, {3, 2}).tag == SupportTag::DelegatedPriorWork);
    CHECK(classify_support(ten, {26, 6}).tag == SupportTag::DelegatedPriorWork);
    CHECK(classify_support(ten, {8, 0}).tag == SupportTag::ConstructibleHere);
    CHECK(classify_support(ten, {8, 0}).detail == "thm12.caseI");
    CHECK(classify_support(ten, {2, 0}).tag == SupportTag::ExcludedResidue);   // (m,k) = (0,0)
    CHECK(classify_support(ten, {38, 12}).tag == SupportTag::ExcludedResidue);  // (m,k) = (9,3)
    CHECK(classify_support(ten, {10, 0}).tag == SupportTag::ConstructibleHere);
    CHECK_THROWS_AS((void)classify_support(ten, {0, 0}), std::invalid_argument);
    // every S residue pattern
    for (long x = 0; x < 4; ++x) {
        for (long y = 0; y < 4; ++y) {
            const auto tag = classify_support(ten, {x + 4, y + 8}).tag;
            CHECK((tag == SupportTag::ExcludedS) == is_S_pattern(x, y));
        }
    }
}

TEST_CASE("exceptional families") {
    const auto f1 = d10_family({116, 12});
    REQUIRE(f1.has_value());
    CHECK(f1->family == D10Family::Ex3First);
    CHECK(d10_family({86, 12})->family == D10Family::Ex4First);
    CHECK(d10_family({44, 12})->family == D10Family::Ex3Second);
    CHECK(d10_family({2, 0})->family == D10Family::Ex4Second);
    CHECK_FALSE(d10_family({8, 0}).has_value());

    const auto s = classify_exceptional(ten, {116, 12});
    REQUIRE(s.has_value());
    CHECK(s->tag == SupportTag::ConstructibleHere);
    CHECK_FALSE(classify_exceptional(ten, {8, 0}).has_value());
    CHECK_FALSE(classify_exceptional(RingContext(58), {116, 12}).has_value());

    // every cell of each family over one period lands in exactly one bucket
    int open = 0;
    for (long m = 0; m < 5; ++m) {
        for (long k = 0; k < 5; ++k) {
            const RingElement n{48 * m + 20, 24 * k + 12};
            const auto st = classify_exceptional(ten, n);
            REQUIRE(st.has_value());
            if (st->tag == SupportTag::OpenS0) ++open;
            if (st->tag == SupportTag::ConstructibleHere) {
                const unsigned long t = 1;
                CHECK(certificate_holds(ten, construct_d10(ten, n, t)));
            }
        }
    }
    CHECK(open > 0);
}

TEST_CASE("explicit d = 10 preconditions") {
    CHECK_THROWS_AS((void)construct_d10(ten, {68, 12}, 1), PreconditionError);   // 4(17,3): m residue 1
    CHECK_THROWS_AS((void)construct_d10(ten, {116, 12}, 2), PreconditionError);  // t must be odd
    CHECK_THROWS_AS((void)construct_d10(ten, {86, 12}, 1), PreconditionError);   // t must be even
    CHECK_THROWS_AS((void)construct_d10(ten, {8, 0}, 1), PreconditionError);
    CHECK_THROWS_AS((void)construct_d10(RingContext(58), {116, 12}, 1), PreconditionError);
    const auto t3 = construct_d10(ten, {116, 12}, 3);
    CHECK(certificate_holds(ten, t3));
    CHECK(verify_quadruple(ten, t3.elements, t3.n).has_value());
}

TEST_CASE("reduction by d") {
    const auto r = reduce_by_d(ten, {20, 60});
    REQUIRE(r.has_value());
    CHECK(r->w == RingElement(0, 1));
    CHECK(r->reduced == RingElement(2, 6));
    CHECK(r->status.tag == SupportTag::DelegatedPriorWork);
    CHECK_FALSE(reduce_by_d(ten, {8, 0}).has_value());
    const auto s = reduce_by_d(ten, {190, 60});
    REQUIRE(s.has_value());
    CHECK(s->reduced == RingElement(19, 6));
    CHECK(s->status.tag == SupportTag::DelegatedPriorWork);
    const auto t = reduce_by_d(ten, {80, 40});
    REQUIRE(t.has_value());
    CHECK(t->reduced == RingElement(8, 4));
    CHECK(t->status.tag == SupportTag::ConstructibleHere);
}

TEST_CASE("factorization search") {
    const auto c = lemma21_search(ten, {26, 6});
    REQUIRE(c.has_value());
    CHECK(c->provenance.tag == "search");
    CHECK(verify_quadruple(ten, c->elements, c->n).has_value());
    const auto m12 = lemma21_search(ten, {-12, 0});
    REQUIRE(m12.has_value());
    CHECK(certificate_holds(ten, *m12));
    const auto e = lemma21_search(ten, {8, 0});
    REQUIRE(e.has_value());
    CHECK(certificate_holds(ten, *e));
    // deterministic
    CHECK(*lemma21_search(ten, {26, 6}) == *c);
    CHECK_FALSE(lemma21_search(ten, {26, 6}, SearchBounds{1, 1, 0}).has_value());
}

TEST_CASE("automatic routing") {
    CHECK_THROWS_AS((void)construct_auto(ten, {1, 1}), ExcludedError);
    try {
        (void)construct_auto(ten, {1, 1});
    } catch (const ExcludedError& e) {
        CHECK(e.status.tag == SupportTag::ExcludedS);
    }
    CHECK(construct_auto(ten, {20, 60}).provenance.tag == "scaled");
    const auto s = construct_auto(ten, {26, 6});
    CHECK(certificate_holds(ten, s));
    const auto ex = construct_auto(ten, {116, 12});
    CHECK(ex.provenance.tag == "ex3");
    CHECK(certificate_holds(ten, construct_auto(ten, {3, 2})));
}

TEST_CASE("residue-class constructors reject other classes") {
    CHECK_THROWS_AS((void)construct_thm12(ten, {10, 0}), WrongResidueClass);
    CHECK_THROWS_AS((void)construct_thm12(ten, {8, 2}), WrongResidueClass);
    CHECK_THROWS_AS((void)construct_thm13(ten, {8, 0}), WrongResidueClass);
    CHECK_THROWS_AS((void)construct_thm13(ten, {38, 12}), ExcludedError);
    CHECK_THROWS_AS((void)construct_thm13(ten, {2, 0}), ExcludedError);
    CHECK_THROWS_AS((void)construct_thm12(ten, {20, 12}), ExcludedError);
}

TEST_CASE("other admissible rings") {
    const RingContext r58(58);
    for (const RingElement n : {RingElement(8, 0), RingElement(4, 4), RingElement(-12, 0), RingElement(10, 0),
                                RingElement(6, 4)}) {
        CAPTURE(r58.format(n));
        const auto c = construct_auto(r58, n);
        CHECK(certificate_holds(r58, c));
        CHECK(verify_quadruple(r58, c.elements, n).has_value());
    }
}
