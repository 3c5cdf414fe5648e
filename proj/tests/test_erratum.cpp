#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadring/builder.hpp"
#include "quadring/oracle.hpp"
#include "quadring/pell.hpp"

// Quarantined: the n = −12 recipe, a = 4u and r = −2u with u a norm −1 unit.
// It is kept only to document that it collapses to a repeated element.

using namespace quadring;

TEST_CASE("a=4u, r=-2u recipe for n = -12 repeats an element") {
    for (long d : {10L, 58L, 202L}) {
        const RingContext ctx(d);
        const auto neg = fundamental_neg(ctx);
        REQUIRE(neg.has_value());
        const RingElement n{-12, 0};
        for (const RingElement u : {neg->value, -neg->value, conj(neg->value), ctx.pow(neg->value, 3)}) {
            CAPTURE(ctx.format(u));
            REQUIRE(ctx.norm(u) == -1);
            const RingElement a = Integer(4) * u;
            const RingElement r = Integer(-2) * u;
            const auto b = ctx.exact_div(ctx.square(r) - n, a);
            REQUIRE(b.has_value());
            const RingElement third = a + *b + Integer(2) * r;
            CHECK(third == *b);
            CHECK_FALSE(assemble(ctx, a, r, n).has_value());
            const std::array<RingElement, 4> elements{a, *b, third, a + Integer(4) * *b + Integer(4) * r};
            CHECK(verify_report(ctx, elements, n).failure == "not distinct");
        }
    }
}

TEST_CASE("shipped n = -12 path yields a genuine quadruple") {
    const RingContext ten(10);
    const auto c = construct_auto(ten, {-12, 0});
    CHECK(c.provenance.tag == "thm12.caseII.n-12");
    CHECK(c.elements == std::array<RingElement, 4>{{{2, 0}, {56, 0}, {38, 0}, {186, 0}}});
    CHECK(verify_quadruple(ten, c.elements, c.n).has_value());
}
