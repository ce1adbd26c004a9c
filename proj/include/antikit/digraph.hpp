#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "antikit/bitset.hpp"
#include "antikit/errors.hpp"

namespace antikit {

using Vertex = int;

/// Directed edge from -> to.
struct Edge {
    Vertex from;
    Vertex to;
    auto operator<=>(const Edge&) const = default;
};

/// Thrown for edge-level validation failures; carries the offending pair.
class EdgeError : public Error {
public:
    EdgeError(ErrorCode code, Edge edge, const std::string& message)
        : Error(code, message), edge_(edge) {}
    Edge edge() const noexcept { return edge_; }

private:
    Edge edge_;
};

/// Simple digraph on vertices [0, n): no loops, no parallel edges, but a
/// pair may carry both u->v and v->u. Out- and in-adjacency are kept as
/// mirrored bit rows.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    /// Throws EdgeError (LoopEdge, DuplicateEdge, VertexOutOfRange).
    static Digraph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    bool has_edge(Vertex u, Vertex v) const noexcept { return out_[u].test(static_cast<std::size_t>(v)); }
    const Bitset& out_neighbours(Vertex v) const noexcept { return out_[v]; }
    const Bitset& in_neighbours(Vertex v) const noexcept { return in_[v]; }
    int out_degree(Vertex v) const noexcept { return out_deg_[v]; }
    int in_degree(Vertex v) const noexcept { return in_deg_[v]; }

    /// All edges in lexicographic (from, to) order.
    std::vector<Edge> edges() const;

    bool is_oriented() const noexcept;
    Digraph reversed() const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

protected:
    void add_edge_unchecked(Vertex u, Vertex v);

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
    std::vector<int> out_deg_;
    std::vector<int> in_deg_;
};

/// Digraph with at most one edge per vertex pair. Immutable once built; the
/// only way in is through validation.
class OrientedGraph : public Digraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int n) : Digraph(n) {}

    /// Throws EdgeError: LoopEdge, DuplicateEdge, TwoCycle, VertexOutOfRange.
    static OrientedGraph validate(int n, std::span<const Edge> edges);
    /// Throws EdgeError(TwoCycle) if `g` has a 2-cycle.
    static OrientedGraph from_digraph(const Digraph& g);

    OrientedGraph reversed() const;
    /// Relabelled copy: vertex v becomes perm[v].
    OrientedGraph permuted(std::span<const int> perm) const;
    /// Subgraph induced on `keep` (ascending); vertex keep[i] becomes i.
    OrientedGraph induced(std::span<const Vertex> keep) const;
};

struct DegreeProfile {
    int min_out = 0;
    int min_in = 0;
    int min_semidegree = 0;
    int min_pseudo_semidegree = 0;
    std::size_t edge_count = 0;
    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// v_in: vertices without out-edges; v_out: vertices without in-edges.
struct VertexClass {
    std::vector<Vertex> v_in;
    std::vector<Vertex> v_out;
};

DegreeProfile degree_profile(const Digraph& g);
VertexClass vertex_class(const Digraph& g);

/// True iff no vertex has both an in- and an out-edge, i.e. there is no
/// directed 2-edge path.
bool is_antidirected(const Digraph& g);

/// Connectivity of the underlying undirected graph. The empty graph counts as
/// connected.
bool is_weakly_connected(const Digraph& g);

}  // namespace antikit
