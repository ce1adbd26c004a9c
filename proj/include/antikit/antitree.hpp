#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "antikit/digraph.hpp"

namespace antikit {

enum class EdgeDir { toward_parent, toward_child };

/// Rooted tree with one orientation flag per non-root vertex, where every
/// vertex is a source or a sink. Validated on construction.
class RootedAntiTree {
public:
    RootedAntiTree() = default;

    /// parent[root] must be -1 (its dir entry is ignored). Throws
    /// Error(InvalidArgument) if the links do not form a tree rooted at
    /// `root` or the orientation is not antidirected.
    RootedAntiTree(int n, Vertex root, std::vector<int> parent, std::vector<EdgeDir> dir);

    /// Orients an undirected tree by its bipartition, with the root a source
    /// when `root_is_source`.
    static RootedAntiTree from_undirected(int n, std::span<const std::pair<int, int>> edges, Vertex root,
                                          bool root_is_source);

    /// Rooted copy of an antidirected tree given as an oriented graph.
    static RootedAntiTree from_graph(const OrientedGraph& g, Vertex root);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return n_ > 0 ? n_ - 1 : 0; }
    Vertex root() const noexcept { return root_; }
    int parent(Vertex v) const { return parent_[v]; }
    EdgeDir dir(Vertex v) const { return dir_[v]; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
    int depth(Vertex v) const { return depth_[v]; }
    /// Vertices in breadth-first order from the root.
    const std::vector<Vertex>& bfs_order() const noexcept { return bfs_; }

    /// In V_out: no incoming edge. A lone vertex is both source and sink.
    bool is_source(Vertex v) const;
    /// In V_in: no outgoing edge.
    bool is_sink(Vertex v) const;
    bool balanced() const;
    int max_degree() const;

    OrientedGraph to_graph() const;
    /// Same tree with every edge reversed.
    RootedAntiTree reversed() const;

private:
    int n_ = 0;
    Vertex root_ = 0;
    std::vector<int> parent_;
    std::vector<EdgeDir> dir_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> depth_;
    std::vector<Vertex> bfs_;
};

/// {"n": int, "root": int, "parent": [int|null, ...], "dir": ["tp"|"tc"|null, ...]}
nlohmann::json tree_to_json(const RootedAntiTree& t);
RootedAntiTree tree_from_json(const nlohmann::json& j);

}  // namespace antikit
