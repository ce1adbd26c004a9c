#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antikit/digraph.hpp"

namespace antikit {

/// Direction the next edge of an antiwalk must have relative to its current
/// end vertex.
enum class WalkMode { needs_out, needs_in };

struct WalkState {
    Vertex vertex;
    WalkMode mode;
    friend bool operator==(const WalkState&, const WalkState&) = default;
};

/// Walk length, or nullopt for "no such walk" (infinite distance).
using Distance = std::optional<int>;

std::string distance_text(const Distance& d);

/// Antiwalk reachability from a single source `a`.
///
/// ood[z] is the length of a shortest out-out-walk a..z (the trivial walk
/// counts, so ood[a] == 0); oid[z] the length of a shortest out-in-walk.
/// out_set / in_set hold the vertices with finite ood / oid.
struct ReachReport {
    Vertex source = 0;
    Bitset out_set;
    Bitset in_set;
    std::vector<Distance> ood;
    std::vector<Distance> oid;

    /// One shortest walk from the source to z, as its vertex sequence.
    /// `out_out` selects the ending convention. Empty if z is unreachable that
    /// way.
    std::vector<Vertex> witness(Vertex z, bool out_out) const;

    // BFS parents over the 2n walk states; index = 2 * vertex + mode.
    std::vector<int> parent_state;
};

/// Breadth-first search over (vertex, mode) states from (a, needs_out).
/// Throws Error(VertexOutOfRange).
ReachReport reach_from(const Digraph& g, Vertex a);

/// True iff consecutive pairs are edges of g whose directions alternate. A
/// single vertex is the trivial antiwalk.
bool is_antiwalk(const Digraph& g, std::span<const Vertex> seq);

/// V(g) == In(g, a) u Out(g, a).
bool is_anticonnected(const Digraph& g, Vertex a);

}  // namespace antikit
