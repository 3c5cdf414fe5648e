#include "quadring/pell.hpp"

#include <algorithm>
#include <set>

namespace quadring {

namespace {

constexpr unsigned long kScanLimit = 1UL << 20;

// Convergents p_k/q_k of √d for k = 0 .. count-1.
std::vector<RingElement> convergents(const CFExpansion& cf, std::size_t count) {
    std::vector<RingElement> out;
    out.reserve(count);
    Integer p_prev = 1, q_prev = 0;
    Integer p = cf.a0, q = 1;
    out.emplace_back(p, q);
    const std::size_t len = cf.period_length();
    for (std::size_t k = 1; k < count; ++k) {
        const Integer& a = cf.period[(k - 1) % len];
        Integer p_next = a * p + p_prev;
        Integer q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.emplace_back(p, q);
    }
    return out;
}

// Multiply by ε or ε⁻¹ while |y| shrinks, then make x ≥ 0.
RingElement orbit_minimal(const RingContext& ctx, RingElement u, const RingElement& unit) {
    const RingElement inverse = conj(unit);
    for (const RingElement& step : {inverse, unit}) {
        for (;;) {
            RingElement next = ctx.mul(u, step);
            if (mpz_cmpabs(next.y.get_mpz_t(), u.y.get_mpz_t()) >= 0) break;
            u = std::move(next);
        }
    }
    if (u.x < 0) u = -u;
    return u;
}

void push_pair(std::vector<RingElement>& out, const Integer& x, const Integer& y) {
    out.emplace_back(x, y);
    if (y != 0) out.emplace_back(x, Integer(-y));
}

std::vector<RingElement> sorted_unique(std::vector<RingElement> v) {
    std::sort(v.begin(), v.end(), CanonicalLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

CFExpansion cf_expand(const RingContext& ctx) {
    const Integer& d = ctx.d();
    CFExpansion cf;
    cf.a0 = isqrt(d);
    Integer m = 0, q = 1, a = cf.a0;
    do {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (cf.a0 + m) / q;
        cf.period.push_back(a);
        cf.denominators.push_back(q);
    } while (a != 2 * cf.a0);
    return cf;
}

PellSolution fundamental_unit(const RingContext& ctx) {
    const CFExpansion cf = cf_expand(ctx);
    const std::size_t len = cf.period_length();
    RingElement last = convergents(cf, len).back();
    if (len % 2 == 1) last = ctx.square(last);
    return {last, Integer(1)};
}

std::optional<PellSolution> fundamental_neg(const RingContext& ctx) {
    const CFExpansion cf = cf_expand(ctx);
    const std::size_t len = cf.period_length();
    if (len % 2 == 0) return std::nullopt;
    return PellSolution{convergents(cf, len).back(), Integer(-1)};
}

std::vector<RingElement> norm_representatives(const RingContext& ctx, const Integer& target,
                                              const RingElement& unit) {
    if (target == 0) throw std::invalid_argument("norm target must be non-zero");
    const Integer& d = ctx.d();
    const Integer magnitude = abs(target);
    const Integer bound = isqrt(magnitude * (unit.x + 1) / (2 * d)) + 1;

    std::vector<RingElement> out;
    if (bound <= kScanLimit) {
        const unsigned long ymax = bound.get_ui();
        for (unsigned long y = 0; y <= ymax; ++y) {
            Integer v = target + d * y * y;
            if (is_perfect_square(v)) push_pair(out, isqrt(v), Integer(y));
        }
        return sorted_unique(std::move(out));
    }

    // Every solution with |N| < √d is (up to sign) a convergent of √d, and a full
    // cycle of the expansion meets every unit orbit of positive solutions.
    if (magnitude * magnitude >= d) {
        throw std::domain_error("norm representatives out of reach for N=" + target.get_str() +
                                " and d=" + d.get_str());
    }
    const CFExpansion cf = cf_expand(ctx);
    const std::size_t len = cf.period_length();
    for (const RingElement& c : convergents(cf, 2 * len)) {
        if (ctx.norm(c) != target) continue;
        RingElement rep = orbit_minimal(ctx, c, unit);
        push_pair(out, rep.x, abs(rep.y));
        RingElement twin = orbit_minimal(ctx, conj(c), unit);
        push_pair(out, twin.x, abs(twin.y));
    }
    return sorted_unique(std::move(out));
}

std::vector<RingElement> norm_representatives(const RingContext& ctx, const Integer& target) {
    return norm_representatives(ctx, target, fundamental_unit(ctx).value);
}

std::vector<PellSolution> solve_norm6(const RingContext& ctx, int sign) {
    const Integer target = sign > 0 ? 6 : -6;
    std::vector<PellSolution> out;
    for (auto& r : norm_representatives(ctx, target)) out.push_back({std::move(r), target});
    return out;
}

std::vector<RingElement> orbit_elements(const RingContext& ctx, const std::vector<RingElement>& reps,
                                        const RingElement& unit, std::size_t count) {
    if (count == 0 || reps.empty()) return {};
    std::vector<RingElement> seeds;
    for (const RingElement& r : reps) {
        for (const RingElement& s : {r, conj(r)}) {
            seeds.push_back(s);
            seeds.push_back(-s);
        }
    }
    seeds = sorted_unique(std::move(seeds));

    const RingElement inverse = conj(unit);
    std::vector<RingElement> forward = seeds, backward = seeds;
    std::set<RingElement, CanonicalLess> found(seeds.begin(), seeds.end());

    auto min_abs_y = [](const std::vector<RingElement>& level) {
        Integer best = abs(level.front().y);
        for (const auto& e : level) best = std::min<Integer>(best, abs(e.y));
        return best;
    };
    auto advance = [&](std::vector<RingElement>& level, const RingElement& step) {
        for (auto& e : level) e = ctx.mul(e, step);
    };

    // Levels grow geometrically in |y|; stop once two further levels lie beyond the count-th element.
    for (;;) {
        advance(forward, unit);
        advance(backward, inverse);
        std::vector<RingElement> level = forward;
        level.insert(level.end(), backward.begin(), backward.end());
        if (found.size() >= count) {
            auto it = std::next(found.begin(), static_cast<std::ptrdiff_t>(count - 1));
            const Integer threshold = abs(it->y);
            std::vector<RingElement> next_fwd = forward, next_bwd = backward;
            advance(next_fwd, unit);
            advance(next_bwd, inverse);
            next_fwd.insert(next_fwd.end(), next_bwd.begin(), next_bwd.end());
            if (min_abs_y(level) > threshold && min_abs_y(next_fwd) > threshold) break;
        }
        found.insert(level.begin(), level.end());
    }
    std::vector<RingElement> out(found.begin(), found.end());
    out.resize(std::min(count, out.size()));
    return out;
}

std::vector<RingElement> enumerate_norm_class(const RingContext& ctx, long target, std::size_t count) {
    const RingElement unit = fundamental_unit(ctx).value;
    std::vector<RingElement> reps;
    switch (target) {
        case 1:
            reps = {RingElement(1, 0)};
            break;
        case -1:
            if (auto neg = fundamental_neg(ctx)) reps = {neg->value};
            break;
        case 6:
        case -6:
            reps = norm_representatives(ctx, Integer(target), unit);
            break;
        default:
            throw std::invalid_argument("norm class must be one of 1, -1, 6, -6");
    }
    if (reps.empty()) {
        throw EmptyNormClass("no element of norm " + std::to_string(target) + " for d=" + ctx.d().get_str());
    }
    return orbit_elements(ctx, reps, unit, count);
}

std::string to_string(FormKind kind) {
    switch (kind) {
        case FormKind::FormI: return "FormI";
        case FormKind::FormII: return "FormII";
        case FormKind::FormIV: return "FormIV";
        case FormKind::FormV: return "FormV";
    }
    return "?";
}

namespace {

// Writes value = modulus*param + sign*offset, preferring sign = +1.
bool split(const Integer& value, long modulus, long offset, Integer& param, int& sign) {
    const long r = floor_mod(value, modulus);
    const long plus = ((offset % modulus) + modulus) % modulus;
    const long minus = ((-offset % modulus) + modulus) % modulus;
    if (r == plus) {
        param = (value - offset) / modulus;
        sign = 1;
        return true;
    }
    if (r == minus) {
        param = (value + offset) / modulus;
        sign = -1;
        return true;
    }
    return false;
}

}  // namespace

std::optional<NormForm> classify_form(const RingContext& ctx, const RingElement& u) {
    const Integer n = ctx.norm(u);
    NormForm f{};
    bool ok = false;
    if (n == 1) {
        f.kind = FormKind::FormI;
        ok = split(u.x, 6, 1, f.first, f.first_sign) && split(u.y, 6, 0, f.second, f.second_sign);
    } else if (n == -1) {
        f.kind = FormKind::FormII;
        ok = split(u.x, 6, 3, f.first, f.first_sign) && split(u.y, 6, 1, f.second, f.second_sign);
    } else if (n == 6) {
        f.kind = FormKind::FormIV;
        ok = split(u.x, 12, 4, f.first, f.first_sign) && split(u.y, 6, 1, f.second, f.second_sign);
    } else if (n == -6) {
        f.kind = FormKind::FormV;
        ok = split(u.x, 12, 2, f.first, f.first_sign) && split(u.y, 6, 1, f.second, f.second_sign);
    } else {
        return std::nullopt;
    }
    if (!ok) {
        throw FormViolation("element " + ctx.format(u) + " of norm " + n.get_str() +
                            " does not match " + to_string(f.kind));
    }
    return f;
}

bool is_admissible(const Integer& d) {
    if (d <= 0 || floor_mod(d, 4L) != 2 || !is_square_free(d)) return false;
    const RingContext ctx(d);
    if (cf_expand(ctx).period_length() % 2 == 0) return false;
    return !solve_norm6(ctx, +1).empty();
}

std::vector<long> admissible_d_scan(long limit) {
    std::vector<long> out;
    for (long d = 2; d <= limit; d += 4) {
        if (is_admissible(Integer(d))) out.push_back(d);
    }
    return out;
}

}  // namespace quadring
