#include "quadring/builder.hpp"

#include "quadring/pell.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace quadring {

namespace {

std::string residue_text(const Integer& x, const Integer& y) {
    return "(" + std::to_string(floor_mod(x, 4L)) + "," + std::to_string(floor_mod(y, 4L)) + ") mod 4";
}

void require_nonzero(const RingElement& n) {
    if (n.is_zero()) throw std::invalid_argument("n must be non-zero");
}

// Elements u of the form's norm class that match its component pattern, in canonical order.
std::vector<RingElement> form_elements(const RingContext& ctx, const ElementForm& form, std::size_t want) {
    std::vector<RingElement> out;
    std::vector<RingElement> pool;
    try {
        pool = enumerate_norm_class(ctx, form.norm, 4 * want + 8);
    } catch (const EmptyNormClass&) {
        return out;
    }
    for (RingElement& u : pool) {
        if (out.size() == want) break;
        if (form.matches(u)) out.push_back(std::move(u));
    }
    return out;
}

// 3n = α₁α₂, s = (α₁+α₂)/2, r = (s − a)/2, α = (α₁−α₂)/2.
std::optional<QuadrupleCertificate> try_factorization(const RingContext& ctx, const RingElement& n,
                                                      const RingElement& alpha1, const RingElement& a) {
    const auto alpha2 = ctx.exact_div(Integer(3) * n, alpha1);
    if (!alpha2) return std::nullopt;
    const auto s = halve(alpha1 + *alpha2);
    if (!s) return std::nullopt;
    const auto r = halve(*s - a);
    if (!r) return std::nullopt;
    return assemble(ctx, a, *r, n, halve(alpha1 - *alpha2));
}

void put_params(std::map<std::string, Integer>& params, const ElementForm& form, const RingElement& u) {
    auto [p, q] = form.params(u);
    params[form.first_name] = std::move(p);
    params[form.second_name] = std::move(q);
}

// Diagonal walk over (factor index, a index) pairs, at most `budget` attempts.
QuadrupleCertificate run_recipe(const RingContext& ctx, const RingElement& n, const CaseRecipe& recipe,
                                const std::map<std::string, Integer>& cell, std::size_t budget) {
    std::vector<RingElement> factors;
    if (recipe.fixed_factor) {
        factors.push_back(*recipe.fixed_factor);
    } else {
        factors = form_elements(ctx, *recipe.factor_form, budget);
    }
    const std::vector<RingElement> units = form_elements(ctx, recipe.a_form, budget);
    const Integer multiplier(recipe.a_form.multiplier);

    std::size_t attempts = 0;
    const std::size_t diagonals = factors.size() + units.size();
    for (std::size_t sum = 0; sum + 1 < diagonals && attempts < budget; ++sum) {
        for (std::size_t i = 0; i <= sum && attempts < budget; ++i) {
            const std::size_t j = sum - i;
            if (i >= factors.size() || j >= units.size()) continue;
            ++attempts;
            const RingElement a = multiplier * units[j];
            auto cert = try_factorization(ctx, n, factors[i], a);
            if (!cert) continue;
            cert->provenance.tag = recipe.tag;
            cert->provenance.params = cell;
            if (recipe.factor_form) put_params(cert->provenance.params, *recipe.factor_form, factors[i]);
            put_params(cert->provenance.params, recipe.a_form, units[j]);
            cert->provenance.params["attempt"] = Integer(static_cast<unsigned long>(attempts - 1));
            return *cert;
        }
    }
    throw BudgetExhausted(recipe.tag + ": no verified quadruple for n=" + ctx.format(n) + " within " +
                          std::to_string(attempts) + " attempts");
}

QuadrupleCertificate fermat(const RingContext& ctx) {
    QuadrupleCertificate cert;
    cert.d = ctx.d();
    cert.n = RingElement(1, 0);
    cert.elements = {RingElement(1, 0), RingElement(3, 0), RingElement(8, 0), RingElement(120, 0)};
    cert.witnesses = {RingElement(2, 0),  RingElement(3, 0),  RingElement(11, 0),
                      RingElement(5, 0),  RingElement(19, 0), RingElement(31, 0)};
    cert.provenance = {"known", {}, "fermat"};
    return cert;
}

}  // namespace

std::optional<QuadrupleCertificate> assemble(const RingContext& ctx, const RingElement& a, const RingElement& r,
                                             const RingElement& n, const std::optional<RingElement>& alpha) {
    if (a.is_zero()) return std::nullopt;
    const auto b = ctx.exact_div(ctx.square(r) - n, a);
    if (!b) return std::nullopt;

    QuadrupleCertificate cert;
    cert.d = ctx.d();
    cert.n = n;
    const RingElement two_r = Integer(2) * r;
    cert.elements = {a, *b, a + *b + two_r, a + Integer(4) * *b + Integer(2) * two_r};
    for (std::size_t i = 0; i < 4; ++i) {
        if (cert.elements[i].is_zero()) return std::nullopt;
        for (std::size_t j = 0; j < i; ++j) {
            if (cert.elements[i] == cert.elements[j]) return std::nullopt;
        }
    }

    const RingElement target14 = ctx.mul(a, cert.elements[3]) + n;
    RingElement w14;
    if (alpha && ctx.square(*alpha) == target14) {
        w14 = *alpha;
    } else if (auto root = ctx.is_square(target14)) {
        w14 = *root;
    } else {
        return std::nullopt;
    }
    cert.witnesses = {r, a + r, w14, *b + r, Integer(2) * *b + r, a + Integer(2) * *b + Integer(3) * r};
    if (!certificate_holds(ctx, cert)) return std::nullopt;
    return cert;
}

QuadrupleCertificate scale(const RingContext& ctx, const RingElement& w, const QuadrupleCertificate& cert) {
    if (w.is_zero()) throw std::invalid_argument("scale factor must be non-zero");
    QuadrupleCertificate out;
    out.d = cert.d;
    out.n = ctx.mul(ctx.square(w), cert.n);
    for (std::size_t i = 0; i < 4; ++i) out.elements[i] = ctx.mul(w, cert.elements[i]);
    for (std::size_t i = 0; i < 6; ++i) out.witnesses[i] = ctx.mul(w, cert.witnesses[i]);
    out.provenance.tag = "scaled";
    out.provenance.params = cert.provenance.params;
    out.provenance.params["w_x"] = w.x;
    out.provenance.params["w_y"] = w.y;
    out.provenance.detail = cert.provenance.tag;
    if (!certificate_holds(ctx, out)) throw std::logic_error("scaled certificate failed verification");
    return out;
}

SupportStatus classify_support(const RingContext& ctx, const RingElement& n) {
    (void)ctx;
    require_nonzero(n);
    if (classify_ST(n) == STClass::SMember) return {SupportTag::ExcludedS, "n ∈ S: " + residue_text(n.x, n.y)};

    const long xm = floor_mod(n.x, 4L);
    const long ym = floor_mod(n.y, 4L);
    if (xm == 0 && ym == 0) {
        const Dispatch dsp = dispatch_thm12(Integer(n.x / 4), Integer(n.y / 4));
        switch (dsp.kind) {
            case DispatchKind::Excluded: return {SupportTag::ExcludedResidue, "(m,k) = (5,3) mod (6,6)"};
            case DispatchKind::Delegated: return {SupportTag::DelegatedPriorWork, dsp.label};
            default: return {SupportTag::ConstructibleHere, dsp.label};
        }
    }
    if (xm == 2 && ym == 0) {
        const Integer m = (n.x - 2) / 4;
        const Dispatch dsp = dispatch_thm13(m, Integer(n.y / 4));
        if (dsp.kind == DispatchKind::Excluded) {
            const char* cls = floor_mod(m, 12L) == 0 ? "(0,0)" : "(9,3)";
            return {SupportTag::ExcludedResidue, std::string("(m,k) = ") + cls + " mod (12,6)"};
        }
        return {SupportTag::ConstructibleHere, dsp.label};
    }
    return {SupportTag::DelegatedPriorWork, "prior-work class " + residue_text(n.x, n.y)};
}

std::optional<D10Member> d10_family(const RingElement& n) {
    const long x48 = floor_mod(n.x, 48L);
    const long y24 = floor_mod(n.y, 24L);
    auto member = [&](D10Family f, long x_off, long y_off) {
        return D10Member{f, Integer((n.x - x_off) / 48), Integer((n.y - y_off) / 24)};
    };
    if (y24 == 12) {
        if (x48 == 20) return member(D10Family::Ex3First, 20, 12);
        if (x48 == 44) return member(D10Family::Ex3Second, 44, 12);
        if (x48 == 38) return member(D10Family::Ex4First, 38, 12);
    } else if (y24 == 0 && x48 == 2) {
        return member(D10Family::Ex4Second, 2, 0);
    }
    return std::nullopt;
}

namespace {

struct FamilyRule {
    const char* tag;
    const char* label;
    const char* open_set;
    long ex_first, ex_second;   // m mod 5 handled by the explicit construction
    long red_m, red_k;          // (m, k) mod 5 handled by reduction
    bool odd_t;
    RingElement alpha1;
    RingElement base;
};

FamilyRule rule_for(D10Family f) {
    switch (f) {
        case D10Family::Ex3First:
            return {"ex3", "4(12m+5,6k+3)", "S1", 2, 3, 0, 2, true, RingElement(-18, 6), RingElement(0, 1)};
        case D10Family::Ex3Second:
            return {"ex3", "4(12m+11,6k+3)", "S2", 0, 4, 2, 2, false, RingElement(-18, 6), RingElement(10, 3)};
        case D10Family::Ex4First:
            return {"ex4", "(48m+38,24k+12)", "S3", 1, 2, 4, 2, false, RingElement(4, 1), RingElement(10, 3)};
        case D10Family::Ex4Second:
            return {"ex4", "(48m+2,24k)", "S4", 3, 4, 1, 0, true, RingElement(2, 1), RingElement(0, 1)};
    }
    throw std::logic_error("unknown family");
}

}  // namespace

std::optional<SupportStatus> classify_exceptional(const RingContext& ctx, const RingElement& n) {
    if (ctx.d() != 10) return std::nullopt;
    const auto member = d10_family(n);
    if (!member) return std::nullopt;
    const FamilyRule rule = rule_for(member->family);
    const long m5 = floor_mod(member->m, 5L);
    const long k5 = floor_mod(member->k, 5L);
    if (m5 == rule.ex_first || m5 == rule.ex_second) {
        return SupportStatus{SupportTag::ConstructibleHere, std::string(rule.tag) + " " + rule.label};
    }
    if (m5 == rule.red_m && k5 == rule.red_k) {
        return SupportStatus{SupportTag::DelegatedPriorWork, std::string("reduction ") + rule.label};
    }
    return SupportStatus{SupportTag::OpenS0, std::string(rule.open_set) + " " + rule.label};
}

std::optional<QuadrupleCertificate> known_certificate(const RingContext& ctx, const RingElement& n) {
    if (n.y != 0) return std::nullopt;
    if (n.x == 1) return fermat(ctx);
    if (n.x == 4) return scale(ctx, RingElement(2, 0), fermat(ctx));
    if (n.x == 36) return scale(ctx, RingElement(6, 0), fermat(ctx));
    return std::nullopt;
}

QuadrupleCertificate construct_thm12(const RingContext& ctx, const RingElement& n, std::size_t budget) {
    require_nonzero(n);
    if (floor_mod(n.x, 4L) != 0 || floor_mod(n.y, 4L) != 0) {
        throw WrongResidueClass("expected n = (4m, 4k), got " + ctx.format(n));
    }
    const Dispatch dsp = dispatch_thm12(Integer(n.x / 4), Integer(n.y / 4));
    switch (dsp.kind) {
        case DispatchKind::Excluded:
            throw ExcludedError({SupportTag::ExcludedResidue, "(m,k) = (5,3) mod (6,6)"},
                                "n=" + ctx.format(n) + " is excluded: (m,k) = (5,3) mod (6,6)");
        case DispatchKind::Delegated:
            throw ExcludedError({SupportTag::DelegatedPriorWork, dsp.label},
                                "n=" + ctx.format(n) + " lies in a class covered by prior work");
        case DispatchKind::KnownScaled:
            return *known_certificate(ctx, n);
        case DispatchKind::MinusTwelve: {
            const auto neg = fundamental_neg(ctx);
            if (!neg) throw PreconditionError("n = -12 needs a solution of x^2 - d*y^2 = -1");
            const RingElement alpha1(Integer(-6 * neg->value.x), Integer(6 * neg->value.y));
            const CaseRecipe recipe{dsp.label, alpha1, std::nullopt, ElementForm{1, 2, 6, 1, 6, 0, "a1", "b1"}};
            return run_recipe(ctx, n, recipe, dsp.cell, budget);
        }
        case DispatchKind::Recipe:
            break;
    }
    return run_recipe(ctx, n, *dsp.recipe, dsp.cell, budget);
}

QuadrupleCertificate construct_thm13(const RingContext& ctx, const RingElement& n, std::size_t budget) {
    if (floor_mod(n.x, 4L) != 2 || floor_mod(n.y, 4L) != 0) {
        throw WrongResidueClass("expected n = (4m+2, 4k), got " + ctx.format(n));
    }
    const Integer m = (n.x - 2) / 4;
    const Dispatch dsp = dispatch_thm13(m, Integer(n.y / 4));
    if (dsp.kind == DispatchKind::Excluded) {
        const std::string cls = floor_mod(m, 12L) == 0 ? "(0,0)" : "(9,3)";
        throw ExcludedError({SupportTag::ExcludedResidue, "(m,k) = " + cls + " mod (12,6)"},
                            "n=" + ctx.format(n) + " is excluded: (m,k) = " + cls + " mod (12,6)");
    }
    return run_recipe(ctx, n, *dsp.recipe, dsp.cell, budget);
}

QuadrupleCertificate construct_d10(const RingContext& ctx, const RingElement& n, unsigned long t) {
    if (ctx.d() != 10) throw PreconditionError("the explicit examples need d = 10");
    const auto member = d10_family(n);
    if (!member) throw PreconditionError("n=" + ctx.format(n) + " is in none of the example families");
    const FamilyRule rule = rule_for(member->family);
    const long m5 = floor_mod(member->m, 5L);
    if (m5 != rule.ex_first && m5 != rule.ex_second) {
        throw PreconditionError(std::string(rule.tag) + " needs m = " + std::to_string(rule.ex_first) + " or " +
                                std::to_string(rule.ex_second) + " mod 5 for n = " + rule.label + ", got m = " +
                                member->m.get_str());
    }
    if ((t % 2 == 1) != rule.odd_t) {
        throw PreconditionError(std::string(rule.tag) + " for n = " + rule.label + " needs " +
                                (rule.odd_t ? "odd" : "even") + " t");
    }
    const RingElement unit = fundamental_unit(ctx).value;
    const RingElement a = ctx.mul(ctx.pow(unit, t), rule.base);
    // (20α, 10β−1) for odd powers on (0,1); (20α+10, 10β+3) for even powers on (10,3).
    const bool shaped = rule.odd_t ? (floor_mod(a.x, 20L) == 0 && floor_mod(a.y, 10L) == 9)
                                   : (floor_mod(a.x, 20L) == 10 && floor_mod(a.y, 10L) == 3);
    if (!shaped) throw std::logic_error("example element has the wrong shape: " + ctx.format(a));

    auto cert = try_factorization(ctx, n, rule.alpha1, a);
    if (!cert) throw BudgetExhausted(std::string(rule.tag) + ": construction failed for n=" + ctx.format(n));
    cert->provenance.tag = rule.tag;
    cert->provenance.params = {{"m", member->m}, {"k", member->k}, {"t", Integer(t)}};
    cert->provenance.detail = rule.label;
    return *cert;
}

std::optional<Reduction> reduce_by_d(const RingContext& ctx, const RingElement& n) {
    require_nonzero(n);
    const auto reduced = divide_exact(n, ctx.d());
    if (!reduced) return std::nullopt;
    return Reduction{RingElement(0, 1), *reduced, classify_support(ctx, *reduced)};
}

std::optional<QuadrupleCertificate> lemma21_search(const RingContext& ctx, const RingElement& n,
                                                   const SearchBounds& bounds) {
    require_nonzero(n);
    const RingElement three_n = Integer(3) * n;
    const Integer big_norm = abs(ctx.norm(three_n));
    const RingElement unit = fundamental_unit(ctx).value;
    const RingElement inverse = conj(unit);
    const long U = static_cast<long>(bounds.unit_power_bound);

    std::vector<RingElement> powers;  // ε^j for j = 0, 1, −1, 2, −2, ...
    std::vector<long> exponents{0};
    powers.push_back(RingElement(1, 0));
    {
        RingElement up(1, 0), down(1, 0);
        for (long j = 1; j <= U; ++j) {
            up = ctx.mul(up, unit);
            down = ctx.mul(down, inverse);
            powers.push_back(up);
            exponents.push_back(j);
            powers.push_back(down);
            exponents.push_back(-j);
        }
    }

    auto reps_of = [&](long target) -> std::vector<RingElement> {
        try {
            return norm_representatives(ctx, Integer(target), unit);
        } catch (const std::domain_error&) {
            return {};
        }
    };

    // a candidates by |norm|, positive before negative, then canonical order; bucketed by parity.
    std::vector<RingElement> by_parity[2][2];
    {
        std::set<RingElement, CanonicalLess> seen;
        for (long mag = 1; mag <= bounds.a_norm_bound; ++mag) {
            for (long target : {mag, -mag}) {
                std::set<RingElement, CanonicalLess> level;
                for (const RingElement& rep : reps_of(target)) {
                    for (const RingElement& p : powers) {
                        const RingElement e = ctx.mul(rep, p);
                        for (const RingElement& s : {e, -e}) {
                            if (!seen.contains(s)) level.insert(s);
                        }
                    }
                }
                for (const RingElement& e : level) {
                    seen.insert(e);
                    by_parity[floor_mod(e.x, 2L)][floor_mod(e.y, 2L)].push_back(e);
                }
            }
        }
    }

    std::set<RingElement, CanonicalLess> tried;
    for (long mag = 1; mag <= bounds.factor_norm_bound; ++mag) {
        if (Integer(big_norm % mag) != 0) continue;
        for (long target : {mag, -mag}) {
            for (const RingElement& rep : reps_of(target)) {
                for (std::size_t pi = 0; pi < powers.size(); ++pi) {
                    const RingElement p = ctx.mul(rep, powers[pi]);
                    for (const RingElement& alpha1 : {p, -p}) {
                        if (!tried.insert(alpha1).second) continue;
                        const auto alpha2 = ctx.exact_div(three_n, alpha1);
                        if (!alpha2) continue;
                        const auto s = halve(alpha1 + *alpha2);
                        if (!s) continue;
                        const auto alpha = halve(alpha1 - *alpha2);
                        for (const RingElement& a : by_parity[floor_mod(s->x, 2L)][floor_mod(s->y, 2L)]) {
                            const RingElement r = *halve(*s - a);
                            auto cert = assemble(ctx, a, r, n, alpha);
                            if (!cert) continue;
                            cert->provenance.tag = "search";
                            cert->provenance.params = {{"alpha1_x", alpha1.x}, {"alpha1_y", alpha1.y},
                                                       {"alpha1_norm", Integer(target)},
                                                       {"unit_power", Integer(exponents[pi])},
                                                       {"a_x", a.x}, {"a_y", a.y}};
                            return cert;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

QuadrupleCertificate construct_auto(const RingContext& ctx, const RingElement& n, std::size_t budget,
                                    const SearchBounds& bounds) {
    const SupportStatus status = classify_support(ctx, n);
    if (status.tag == SupportTag::ExcludedS) {
        throw ExcludedError(status, "n=" + ctx.format(n) + ": n ∈ S, no D(n)-quadruple exists");
    }
    if (auto known = known_certificate(ctx, n)) return *known;

    if (status.tag == SupportTag::ConstructibleHere) {
        return floor_mod(n.x, 4L) == 0 ? construct_thm12(ctx, n, budget) : construct_thm13(ctx, n, budget);
    }

    auto via_reduction = [&]() -> std::optional<QuadrupleCertificate> {
        const auto red = reduce_by_d(ctx, n);
        if (!red || red->status.tag == SupportTag::ExcludedS) return std::nullopt;
        try {
            return scale(ctx, red->w, construct_auto(ctx, red->reduced, budget, bounds));
        } catch (const ExcludedError&) {
        } catch (const NotFound&) {
        } catch (const BudgetExhausted&) {
        }
        return std::nullopt;
    };

    if (status.tag == SupportTag::ExcludedResidue) {
        const auto exceptional = classify_exceptional(ctx, n);
        if (exceptional && exceptional->tag == SupportTag::ConstructibleHere) {
            const bool odd = rule_for(d10_family(n)->family).odd_t;
            return construct_d10(ctx, n, odd ? 1 : 0);
        }
        if (exceptional && exceptional->tag == SupportTag::OpenS0) {
            throw ExcludedError(*exceptional, "n=" + ctx.format(n) + " is in the open set " + exceptional->detail);
        }
        if (auto cert = via_reduction()) return *cert;
        throw ExcludedError(status, "n=" + ctx.format(n) + " is excluded: " + status.detail);
    }

    if (auto cert = via_reduction()) return *cert;
    if (auto cert = lemma21_search(ctx, n, bounds)) return *cert;
    throw NotFound("no certificate for n=" + ctx.format(n) + " within the search bounds");
}

}  // namespace quadring
