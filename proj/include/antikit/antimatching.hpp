#pragma once

#include <optional>
#include <vector>

#include "antikit/digraph.hpp"

namespace antikit {

/// Vertex-disjoint host edges (a_i, b_i), a_i -> b_i, where every tail a_i is
/// reachable from a_1 by an out-out-walk in the host. edges[0] is the anchor
/// edge.
struct ConnectedAntiMatching {
    std::vector<Edge> edges;

    std::size_t size() const noexcept { return edges.size(); }
    Vertex anchor() const { return edges.front().from; }
};

struct AntimatchingRequest {
    int t = 1;
    Vertex anchor = 0;
    /// Upper bound on ood(a_1, a_i); find_bounded_antimatching defaults it
    /// to 8t.
    std::optional<int> distance_bound;
};

/// The requested size could not be reached. Only possible when the host's
/// minimum semidegree is below t; `best` is a maximum anchored antimatching.
class SizeNotReached : public Error {
public:
    SizeNotReached(ConnectedAntiMatching best, int requested);
    const ConnectedAntiMatching& best() const noexcept { return best_; }

private:
    ConnectedAntiMatching best_;
};

/// Checks both invariants: disjoint endpoints, real host edges, and every
/// tail in Out(host, a_1).
bool is_connected_antimatching(const Digraph& host, const ConnectedAntiMatching& m);

/// sum over i >= 2 of ood(a_1, a_i). Infinite terms make the matching invalid,
/// so this returns nullopt for them.
std::optional<long long> ood_potential(const Digraph& host, const ConnectedAntiMatching& m);

/// Anchored connected antimatching of size t with a_1 = req.anchor.
///
/// Computes Out(g, w), takes the candidate edges u -> v with u in Out(g, w)
/// and v != w, and runs a maximum matching on them; if w ends up unmatched
/// it is swapped in through one of its out-neighbours (which is then
/// necessarily matched). The result is a maximum anchored antimatching,
/// truncated to t edges.
///
/// Throws Error(AnchorHasNoOutEdge) or SizeNotReached.
ConnectedAntiMatching find_antimatching(const OrientedGraph& g, const AntimatchingRequest& req);

/// Per-iteration record of the exchange loop.
struct ExchangeTrace {
    /// potentials[0] is the starting potential; one entry per exchange after it.
    std::vector<long long> potentials;
    int exchanges = 0;
};

/// As find_antimatching, and additionally ood(a_1, a_i) <= bound for all i.
///
/// While some a_k is too far, walk a shortest out-out-walk to a_k, take the
/// first edge on it with both ends outside V(M) and swap it in for
/// (a_k, b_k). Each swap strictly lowers ood_potential.
///
/// Throws as find_antimatching, plus Error(ExchangeStuck).
ConnectedAntiMatching find_bounded_antimatching(const OrientedGraph& g, const AntimatchingRequest& req,
                                                ExchangeTrace* trace = nullptr);

/// Exhaustive maximum size of an anchored connected antimatching with a_1 = w
/// (0 when w has no out-edge). Throws Error(TooLargeForOracle) for n > 12.
int oracle_max_antimatching(const OrientedGraph& g, Vertex w);

}  // namespace antikit
