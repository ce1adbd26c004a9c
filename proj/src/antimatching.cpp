#include "antikit/antimatching.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "antikit/antiwalk.hpp"
#include "antikit/matching.hpp"

namespace antikit {

SizeNotReached::SizeNotReached(ConnectedAntiMatching best, int requested)
    : Error(ErrorCode::SizeNotReached, "requested size " + std::to_string(requested) + ", maximum is " +
                                           std::to_string(best.size())),
      best_(std::move(best)) {}

bool is_connected_antimatching(const Digraph& host, const ConnectedAntiMatching& m) {
    if (m.edges.empty()) return false;
    Bitset used(static_cast<std::size_t>(host.order()));
    for (const Edge& e : m.edges) {
        for (Vertex v : {e.from, e.to}) {
            if (v < 0 || v >= host.order() || used.test(static_cast<std::size_t>(v))) return false;
            used.set(static_cast<std::size_t>(v));
        }
        if (!host.has_edge(e.from, e.to)) return false;
    }
    const ReachReport r = reach_from(host, m.anchor());
    for (const Edge& e : m.edges)
        if (!r.out_set.test(static_cast<std::size_t>(e.from))) return false;
    return true;
}

std::optional<long long> ood_potential(const Digraph& host, const ConnectedAntiMatching& m) {
    const ReachReport r = reach_from(host, m.anchor());
    long long total = 0;
    for (std::size_t i = 1; i < m.edges.size(); ++i) {
        const Distance& d = r.ood[m.edges[i].from];
        if (!d) return std::nullopt;
        total += *d;
    }
    return total;
}

ConnectedAntiMatching find_antimatching(const OrientedGraph& g, const AntimatchingRequest& req) {
    const Vertex w = req.anchor;
    const int n = g.order();
    if (w < 0 || w >= n) throw Error(ErrorCode::VertexOutOfRange, "anchor " + std::to_string(w));
    if (req.t < 1) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
    if (g.out_degree(w) == 0) throw Error(ErrorCode::AnchorHasNoOutEdge, "anchor " + std::to_string(w));

    const ReachReport reach = reach_from(g, w);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    reach.out_set.for_each([&](std::size_t tail) {
        g.out_neighbours(static_cast<Vertex>(tail)).for_each([&](std::size_t head) {
            if (static_cast<Vertex>(head) == w) return;
            adj[tail].push_back(static_cast<int>(head));
            adj[head].push_back(static_cast<int>(tail));
        });
    });
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<int> mate = maximum_matching(n, adj);
    if (mate[w] == -1) {
        // Maximality forces every out-neighbour of w to be matched already.
        const auto v = static_cast<Vertex>(g.out_neighbours(w).find_first());
        const int z = mate[v];
        mate[z] = -1;
        mate[v] = w;
        mate[w] = v;
    }

    ConnectedAntiMatching m;
    m.edges.push_back({w, mate[w]});
    std::vector<Edge> rest;
    for (Vertex x = 0; x < n; ++x) {
        const int y = mate[x];
        if (y < x || x == w || y == w) continue;
        rest.push_back(g.has_edge(x, y) ? Edge{x, y} : Edge{y, x});
    }
    std::sort(rest.begin(), rest.end());
    m.edges.insert(m.edges.end(), rest.begin(), rest.end());

    if (static_cast<int>(m.size()) < req.t) throw SizeNotReached(std::move(m), req.t);
    m.edges.resize(static_cast<std::size_t>(req.t));
    return m;
}

ConnectedAntiMatching find_bounded_antimatching(const OrientedGraph& g, const AntimatchingRequest& req,
                                                ExchangeTrace* trace) {
    ConnectedAntiMatching m = find_antimatching(g, req);
    const int bound = req.distance_bound.value_or(8 * req.t);
    const ReachReport reach = reach_from(g, m.anchor());
    const auto ood_of = [&](Vertex v) { return *reach.ood[v]; };

    long long potential = 0;
    for (std::size_t i = 1; i < m.size(); ++i) potential += ood_of(m.edges[i].from);
    if (trace) {
        trace->potentials = {potential};
        trace->exchanges = 0;
    }

    const long long cap = static_cast<long long>(g.order()) * g.order();
    for (long long iter = 0;; ++iter) {
        std::size_t k = 1;
        while (k < m.size() && ood_of(m.edges[k].from) <= bound) ++k;
        if (k == m.size()) return m;
        if (iter >= cap)
            throw Error(ErrorCode::ExchangeStuck, "exchange loop exceeded " + std::to_string(cap) + " iterations");

        const std::vector<Vertex> walk = reach.witness(m.edges[k].from, true);
        Bitset covered(static_cast<std::size_t>(g.order()));
        for (const Edge& e : m.edges) {
            covered.set(static_cast<std::size_t>(e.from));
            covered.set(static_cast<std::size_t>(e.to));
        }
        std::optional<Edge> replacement;
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            const Vertex u = walk[i];
            const Vertex v = walk[i + 1];
            if (covered.test(static_cast<std::size_t>(u)) || covered.test(static_cast<std::size_t>(v))) continue;
            // Tails sit at even positions of an out-walk.
            replacement = (i % 2 == 0) ? Edge{u, v} : Edge{v, u};
            break;
        }
        if (!replacement)
            throw Error(ErrorCode::ExchangeStuck,
                        "no edge avoiding V(M) on the witness walk to " + std::to_string(m.edges[k].from));

        potential += ood_of(replacement->from) - ood_of(m.edges[k].from);
        m.edges[k] = *replacement;
        if (trace) {
            trace->potentials.push_back(potential);
            ++trace->exchanges;
        }
    }
}

namespace {

// Out(g, w) as a closure over the two alternating step relations.
Bitset out_closure(const OrientedGraph& g, Vertex w) {
    const auto n = static_cast<std::size_t>(g.order());
    Bitset out_out(n), out_in(n);
    out_out.set(static_cast<std::size_t>(w));
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (out_out.test(static_cast<std::size_t>(v))) {
                const std::size_t before = out_in.count();
                out_in |= g.out_neighbours(v);
                changed |= out_in.count() != before;
            }
            if (out_in.test(static_cast<std::size_t>(v))) {
                const std::size_t before = out_out.count();
                out_out |= g.in_neighbours(v);
                changed |= out_out.count() != before;
            }
        }
    }
    return out_out;
}

int best_matching(const std::vector<Edge>& candidates, std::size_t from, std::uint32_t used) {
    int best = 0;
    for (std::size_t i = from; i < candidates.size(); ++i) {
        const Edge& e = candidates[i];
        const std::uint32_t mask = (1U << e.from) | (1U << e.to);
        if (used & mask) continue;
        best = std::max(best, 1 + best_matching(candidates, i + 1, used | mask));
    }
    return best;
}

}  // namespace

int oracle_max_antimatching(const OrientedGraph& g, Vertex w) {
    if (g.order() > 12) throw Error(ErrorCode::TooLargeForOracle, "oracle limited to 12 vertices");
    if (w < 0 || w >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "anchor " + std::to_string(w));
    const Bitset out = out_closure(g, w);
    std::vector<Edge> candidates;
    for (const Edge& e : g.edges())
        if (out.test(static_cast<std::size_t>(e.from))) candidates.push_back(e);

    int best = 0;
    g.out_neighbours(w).for_each([&](std::size_t v) {
        const std::uint32_t used = (1U << w) | (1U << v);
        best = std::max(best, 1 + best_matching(candidates, 0, used));
    });
    return best;
}

}  // namespace antikit
