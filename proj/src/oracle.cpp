#include "quadring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace quadring {

VerifyReport verify_report(const RingContext& ctx, const std::array<RingElement, 4>& elements,
                           const RingElement& n) {
    VerifyReport report;
    for (const RingElement& e : elements) {
        if (e.is_zero()) {
            report.failure = "zero element";
            return report;
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (elements[i] == elements[j]) {
                report.failure = "not distinct";
                return report;
            }
        }
    }
    for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
        const auto [i, j] = kPairs[slot];
        report.roots[slot] = ctx.is_square(ctx.mul(elements[i], elements[j]) + n);
        if (!report.roots[slot]) report.failing_slots.push_back(slot);
    }
    if (!report.failing_slots.empty()) {
        const auto [i, j] = kPairs[report.failing_slots.front()];
        report.failure = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        return report;
    }
    QuadrupleCertificate cert;
    cert.d = ctx.d();
    cert.n = n;
    cert.elements = elements;
    for (std::size_t slot = 0; slot < 6; ++slot) cert.witnesses[slot] = *report.roots[slot];
    report.certificate = std::move(cert);
    return report;
}

std::optional<QuadrupleCertificate> verify_quadruple(const RingContext& ctx,
                                                     const std::array<RingElement, 4>& elements,
                                                     const RingElement& n) {
    return verify_report(ctx, elements, n).certificate;
}

std::size_t PairGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adjacency) total += list.size();
    return total / 2;
}

bool PairGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& list = adjacency.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

void PairGraph::remove_edge(std::uint32_t u, std::uint32_t v) {
    auto drop = [](std::vector<std::uint32_t>& list, std::uint32_t w) {
        auto it = std::lower_bound(list.begin(), list.end(), w);
        if (it != list.end() && *it == w) list.erase(it);
    };
    drop(adjacency.at(u), v);
    drop(adjacency.at(v), u);
}

std::optional<RingElement> PairGraph::label(const RingContext& ctx, std::uint32_t u, std::uint32_t v) const {
    if (!has_edge(u, v)) return std::nullopt;
    return ctx.is_square(ctx.mul(vertices[u], vertices[v]) + n);
}

namespace {

constexpr long kModulus = 720;
constexpr long kMaxBound = 5000;

using i128 = __int128;

std::int64_t isqrt_u128(i128 v) {
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return static_cast<std::int64_t>(r);
}

bool is_square_i64(std::int64_t v, std::int64_t& root) {
    if (v < 0) return false;
    root = isqrt_u128(v);
    return static_cast<i128>(root) * root == v;
}

// Exact decision for X + Y√d being a square, in machine integers.
bool small_square(std::int64_t X, std::int64_t Y, std::int64_t d) {
    if (X < 0 || (Y & 1)) return false;
    const i128 xx = static_cast<i128>(X) * X;
    const i128 dyy = static_cast<i128>(d) * Y * Y;
    if (xx < dyy) return false;
    const i128 nrm = xx - dyy;
    const std::int64_t t = isqrt_u128(nrm);
    if (static_cast<i128>(t) * t != nrm) return false;
    const std::int64_t half_y = (Y < 0 ? -Y : Y) / 2;
    for (std::int64_t p2x2 : {X + t, X - t}) {
        if (p2x2 & 1) continue;
        std::int64_t p = 0, q = 0;
        if (!is_square_i64(p2x2 / 2, p)) continue;
        const std::int64_t rest = X - p * p;
        if (rest % d != 0 || !is_square_i64(rest / d, q)) continue;
        if (static_cast<i128>(p) * q == half_y) return true;
    }
    return false;
}

// table[x * M + y] is set iff (x, y) ≡ (p² + d q², 2pq) mod M for some p, q.
std::vector<unsigned char> square_residues(std::int64_t d) {
    std::vector<unsigned char> table(kModulus * kModulus, 0);
    const std::int64_t dm = ((d % kModulus) + kModulus) % kModulus;
    for (std::int64_t p = 0; p < kModulus; ++p) {
        const std::int64_t pp = p * p % kModulus;
        for (std::int64_t q = 0; q < kModulus; ++q) {
            const std::int64_t x = (pp + dm * (q * q % kModulus)) % kModulus;
            const std::int64_t y = 2 * p * q % kModulus;
            table[x * kModulus + y] = 1;
        }
    }
    return table;
}

std::int64_t mod_m(std::int64_t v) {
    const std::int64_t r = v % kModulus;
    return r < 0 ? r + kModulus : r;
}

unsigned worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

PairGraph build_pair_graph(const RingContext& ctx, const RingElement& n, long bound) {
    if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
    if (bound > kMaxBound) throw std::invalid_argument("search bound above " + std::to_string(kMaxBound));
    const Integer box = Integer(bound) * bound;
    const Integer x_max = (ctx.d() + 1) * box + abs(n.x);
    const Integer y_max = 2 * box + abs(n.y);
    const Integer limit62 = Integer(1) << 62;
    if (x_max >= limit62 || ctx.d() * y_max * y_max >= limit62 * limit62 / 2) {
        throw std::invalid_argument("box too large for the fast search path");
    }
    const std::int64_t d = ctx.d().get_si();
    const std::int64_t nx = n.x.get_si();
    const std::int64_t ny = n.y.get_si();
    const long B = bound;
    const long side = 2 * B + 1;

    PairGraph graph;
    graph.n = n;
    graph.bound = bound;

    // Canonical vertex order; grid cell (x, y) lives at (y + B) * side + (x + B).
    std::vector<std::pair<long, long>> points;
    points.reserve(static_cast<std::size_t>(side * side - 1));
    for (long y = -B; y <= B; ++y) {
        for (long x = -B; x <= B; ++x) {
            if (x != 0 || y != 0) points.emplace_back(x, y);
        }
    }
    auto key = [](const std::pair<long, long>& p) {
        return std::make_tuple(std::labs(p.second), std::labs(p.first), p.second < 0, p.first < 0);
    };
    std::sort(points.begin(), points.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    std::vector<std::uint32_t> id_of(static_cast<std::size_t>(side * side), UINT32_MAX);
    graph.vertices.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [x, y] = points[i];
        id_of[static_cast<std::size_t>((y + B) * side + (x + B))] = static_cast<std::uint32_t>(i);
        graph.vertices.emplace_back(x, y);
    }

    const std::vector<unsigned char> table = square_residues(d);
    const unsigned workers = worker_count();
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(workers);

    // Pairs (u, v) with v after u in grid order; X, Y move by (x1, y1) along each row.
    auto work = [&](unsigned w) {
        auto& edges = found[w];
        for (long cell = w; cell < side * side; cell += workers) {
            const long x1 = cell % side - B;
            const long y1 = cell / side - B;
            if (x1 == 0 && y1 == 0) continue;
            const std::uint32_t uid = id_of[static_cast<std::size_t>(cell)];
            const std::int64_t sx = mod_m(x1);
            const std::int64_t sy = mod_m(y1);
            for (long y2 = y1; y2 <= B; ++y2) {
                const long x_start = (y2 == y1) ? x1 + 1 : -B;
                if (x_start > B) continue;
                std::int64_t X = x1 * x_start + d * y1 * y2 + nx;
                std::int64_t Y = x1 * y2 + x_start * y1 + ny;
                std::int64_t rx = mod_m(X);
                std::int64_t ry = mod_m(Y);
                for (long x2 = x_start; x2 <= B; ++x2) {
                    if (table[static_cast<std::size_t>(rx * kModulus + ry)] && (x2 != 0 || y2 != 0) &&
                        small_square(X, Y, d)) {
                        edges.emplace_back(uid, id_of[static_cast<std::size_t>((y2 + B) * side + (x2 + B))]);
                    }
                    X += x1;
                    Y += y1;
                    rx += sx;
                    if (rx >= kModulus) rx -= kModulus;
                    ry += sy;
                    if (ry >= kModulus) ry -= kModulus;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();

    graph.adjacency.assign(graph.vertices.size(), {});
    for (const auto& edges : found) {
        for (const auto& [u, v] : edges) {
            // Exact confirmation in arbitrary precision.
            if (!ctx.is_square(ctx.mul(graph.vertices[u], graph.vertices[v]) + n)) {
                throw std::logic_error("fast square test disagrees with exact test");
            }
            graph.adjacency[u].push_back(v);
            graph.adjacency[v].push_back(u);
        }
    }
    for (auto& list : graph.adjacency) std::sort(list.begin(), list.end());
    return graph;
}

std::vector<std::array<std::uint32_t, 4>> enumerate_cliques(const PairGraph& graph, std::size_t limit) {
    const auto& adj = graph.adjacency;
    auto later = [&](std::uint32_t v) {
        const auto& list = adj[v];
        return std::vector<std::uint32_t>(std::upper_bound(list.begin(), list.end(), v), list.end());
    };
    auto cliques_from = [&](std::uint32_t a, std::vector<std::array<std::uint32_t, 4>>& out) {
        const auto na = later(a);
        std::vector<std::uint32_t> common, last;
        for (std::uint32_t b : na) {
            const auto& nb = adj[b];
            common.clear();
            std::set_intersection(std::upper_bound(na.begin(), na.end(), b), na.end(),
                                  std::upper_bound(nb.begin(), nb.end(), b), nb.end(), std::back_inserter(common));
            for (std::size_t ci = 0; ci < common.size(); ++ci) {
                const std::uint32_t c = common[ci];
                const auto& nc = adj[c];
                last.clear();
                std::set_intersection(common.begin() + static_cast<std::ptrdiff_t>(ci) + 1, common.end(),
                                      std::upper_bound(nc.begin(), nc.end(), c), nc.end(),
                                      std::back_inserter(last));
                for (std::uint32_t e : last) out.push_back({a, b, c, e});
            }
        }
    };

    std::vector<std::array<std::uint32_t, 4>> result;
    const auto total = static_cast<std::uint32_t>(adj.size());
    const unsigned workers = worker_count();
    constexpr std::uint32_t kBlock = 512;
    for (std::uint32_t start = 0; start < total; start += kBlock) {
        const std::uint32_t stop = std::min(total, start + kBlock);
        std::vector<std::vector<std::array<std::uint32_t, 4>>> per(stop - start);
        auto work = [&](unsigned w) {
            for (std::uint32_t a = start + w; a < stop; a += workers) cliques_from(a, per[a - start]);
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
        for (auto& t : pool) t.join();
        for (auto& chunk : per) {
            for (auto& c : chunk) {
                result.push_back(c);
                if (limit != 0 && result.size() == limit) return result;
            }
        }
    }
    return result;
}

std::vector<QuadrupleCertificate> brute_force_search(const RingContext& ctx, const RingElement& n, long bound,
                                                     std::size_t limit) {
    const PairGraph graph = build_pair_graph(ctx, n, bound);
    std::vector<QuadrupleCertificate> out;
    for (const auto& clique : enumerate_cliques(graph, limit)) {
        std::array<RingElement, 4> elements;
        for (std::size_t i = 0; i < 4; ++i) elements[i] = graph.vertices[clique[i]];
        auto cert = verify_quadruple(ctx, elements, n);
        if (!cert) throw std::logic_error("clique failed verification");
        cert->provenance = {"bruteforce", {{"bound", Integer(bound)}}, ""};
        out.push_back(std::move(*cert));
    }
    return out;
}

}  // namespace quadring
