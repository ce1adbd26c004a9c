#include "antikit/antiwalk.hpp"

#include <algorithm>
#include <deque>

namespace antikit {

namespace {

constexpr int state_index(Vertex v, WalkMode mode) { return 2 * v + (mode == WalkMode::needs_in ? 1 : 0); }

}  // namespace

std::string distance_text(const Distance& d) { return d ? std::to_string(*d) : std::string("inf"); }

ReachReport reach_from(const Digraph& g, Vertex a) {
    const int n = g.order();
    if (a < 0 || a >= n) throw Error(ErrorCode::VertexOutOfRange, "source " + std::to_string(a));

    const auto un = static_cast<std::size_t>(n);
    ReachReport r;
    r.source = a;
    r.out_set = Bitset(un);
    r.in_set = Bitset(un);
    r.ood.assign(un, std::nullopt);
    r.oid.assign(un, std::nullopt);
    r.parent_state.assign(2 * un, -1);

    std::vector<int> dist(2 * un, -1);
    std::deque<int> queue;
    const int start = state_index(a, WalkMode::needs_out);
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        const Vertex v = s / 2;
        // needs_out: leave v along v->u, arriving where the next edge must enter u.
        const bool leaving = (s % 2) == 0;
        const Bitset& next = leaving ? g.out_neighbours(v) : g.in_neighbours(v);
        next.for_each([&](std::size_t u) {
            const int t = state_index(static_cast<Vertex>(u), leaving ? WalkMode::needs_in : WalkMode::needs_out);
            if (dist[t] >= 0) return;
            dist[t] = dist[s] + 1;
            r.parent_state[t] = s;
            queue.push_back(t);
        });
    }

    for (Vertex z = 0; z < n; ++z) {
        const int so = dist[state_index(z, WalkMode::needs_out)];
        const int si = dist[state_index(z, WalkMode::needs_in)];
        if (so >= 0) {
            r.ood[z] = so;
            r.out_set.set(static_cast<std::size_t>(z));
        }
        if (si >= 0) {
            r.oid[z] = si;
            r.in_set.set(static_cast<std::size_t>(z));
        }
    }
    return r;
}

std::vector<Vertex> ReachReport::witness(Vertex z, bool out_out) const {
    const int target = state_index(z, out_out ? WalkMode::needs_out : WalkMode::needs_in);
    const int start = state_index(source, WalkMode::needs_out);
    if (target != start && parent_state[target] < 0) return {};
    std::vector<Vertex> walk;
    for (int s = target; s >= 0; s = parent_state[s]) {
        walk.push_back(s / 2);
        if (s == start) break;
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

bool is_antiwalk(const Digraph& g, std::span<const Vertex> seq) {
    if (seq.empty()) return false;
    for (Vertex v : seq)
        if (v < 0 || v >= g.order()) return false;
    // Set of feasible directions for the last edge: bit 0 forward, bit 1
    // backward. Both can be feasible at once only on a 2-cycle.
    unsigned feasible = 3;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const Vertex u = seq[i];
        const Vertex v = seq[i + 1];
        unsigned next = 0;
        if (g.has_edge(u, v) && (feasible & 2U)) next |= 1U;
        if (g.has_edge(v, u) && (feasible & 1U)) next |= 2U;
        if (next == 0) return false;
        feasible = next;
    }
    return true;
}

bool is_anticonnected(const Digraph& g, Vertex a) {
    const ReachReport r = reach_from(g, a);
    return (r.out_set | r.in_set).count() == static_cast<std::size_t>(g.order());
}

}  // namespace antikit
