#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "antikit/digraph.hpp"

namespace antikit {

OrientedGraph directed_triangle();

/// Each vertex becomes `ell` independent copies and each edge the complete
/// bipartite edge set between the copies, in the original direction. Copy i
/// of vertex v is vertex v * ell + i.
OrientedGraph blowup(const OrientedGraph& g, int ell);

/// K_{k-2,k-2} with a circulant split: part-A vertex i points at the
/// (k-2)/2 cyclically next part-B vertices; everything else points back.
/// Every vertex ends up with in- and out-degree (k-2)/2. Part A is
/// 0..k-3, part B is k-2..2k-5. Throws Error(InfeasibleSplit) for odd k and
/// Error(InvalidArgument) for k < 4.
OrientedGraph burr_graph(int k);

/// Edge i -> j iff i < j.
OrientedGraph transitive_tournament(int h);

/// Antipath with `length` edges on vertices 0..length, first edge 0 -> 1
/// when `first_forward`.
OrientedGraph antipath(int length, bool first_forward = true);
/// Anticycle of even length >= 4 on 0..length-1 with 0 a source.
OrientedGraph anticycle(int length);
/// Star with k edges; centre 0.
OrientedGraph antidirected_star(int k, bool outward);

/// Antisubdivision of K_h: pair {i, j} (i < j) becomes a path with
/// lengths[pair_index(h, i, j)] edges, oriented alternately.
struct AntiSubdivisionSpec {
    int h = 0;
    std::vector<int> lengths;  // pairs in lexicographic order
    /// Source/sink role of each branch vertex. When absent, roles are derived
    /// from the path parities with branch vertex 0 a source.
    std::optional<std::vector<bool>> branch_is_source;

    int total_edges() const;
};

int pair_index(int h, int i, int j);

/// Pairs with length < 3 induce a forest on [h].
bool is_long(const AntiSubdivisionSpec& spec);

struct AntiSubdivision {
    OrientedGraph pattern;
    std::vector<Vertex> branch;                  // images of the h branch vertices
    std::vector<std::vector<Vertex>> paths;      // per pair: vertex sequence from x_i to x_j
    bool is_long = false;
};

/// Branch vertices are 0..h-1; interior path vertices follow pair by pair.
/// Throws Error(NotRealizable) when a path parity contradicts the roles of
/// its two branch vertices, Error(InvalidArgument) for malformed specs.
AntiSubdivision build_antisubdivision(const AntiSubdivisionSpec& spec);

/// Result of peeling: the surviving edges on the vertices that keep at least
/// one edge, with `origin` mapping back to the input's vertices.
struct PeelResult {
    Digraph graph;
    std::vector<Vertex> origin;
};

/// Splits every vertex into an out-copy and an in-copy (the usual bipartite
/// double cover) and repeatedly deletes the lowest-degree copy while its
/// degree is at most (k - 1) / 2, ties by index. Surviving copies have degree
/// >= k / 2, so the output has minimum pseudo-semidegree >= k / 2 whenever it
/// is non-empty; it is non-empty whenever |E| > (k - 1) |V|.
PeelResult peel_pseudo(const Digraph& g, int k);

enum class CopyTag { D1, D2, D3, D4, A12, A34, B14, B23 };
std::string_view to_string(CopyTag tag);

struct GadgetMap {
    std::vector<CopyTag> copy_of;  // per gadget vertex
    std::vector<Vertex> origin;    // per gadget vertex, vertex of d'
    /// The construction ran on the edge-reversed d' (it had fewer sources
    /// than sinks).
    bool reversed = false;

    bool in_d1(Vertex v) const;
};

struct FourCopyGadget {
    OrientedGraph graph;
    GadgetMap map;
    std::vector<Vertex> v_star;  // V(D_1) minus B_1, ascending
};

/// Four copies of d', the second and fourth reversed, glued by identifying
/// sources of copies 1,2 and 3,4 and sinks of copies 1,4 and 2,3. Minimum
/// semidegree of the result is at least the minimum pseudo-semidegree of d'.
/// d' must have no isolated vertices. Throws Error(EmptyInput) when d' has
/// no edges.
FourCopyGadget four_copy(const OrientedGraph& d_prime);

/// Maps gadget vertices back to d'. nullopt if some image lies outside D_1.
std::optional<std::vector<Vertex>> pull_back(const GadgetMap& map, const std::vector<Vertex>& image);

nlohmann::json gadget_map_to_json(const FourCopyGadget& gadget);

}  // namespace antikit
