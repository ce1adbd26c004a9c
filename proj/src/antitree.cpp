#include "antikit/antitree.hpp"

#include <algorithm>
#include <deque>

namespace antikit {

namespace {

[[noreturn]] void bad_tree(const std::string& why) { throw Error(ErrorCode::InvalidArgument, why); }

// +1 if v is the tail of the edge to its parent, -1 if the head.
int parent_edge_sign(EdgeDir d) { return d == EdgeDir::toward_parent ? 1 : -1; }

}  // namespace

RootedAntiTree::RootedAntiTree(int n, Vertex root, std::vector<int> parent, std::vector<EdgeDir> dir)
    : n_(n), root_(root), parent_(std::move(parent)), dir_(std::move(dir)) {
    if (n < 1) bad_tree("a tree needs at least one vertex");
    if (root < 0 || root >= n) bad_tree("root out of range");
    if (static_cast<int>(parent_.size()) != n || static_cast<int>(dir_.size()) != n)
        bad_tree("parent and dir must have n entries");
    if (parent_[root] != -1) bad_tree("root must have no parent");

    children_.assign(static_cast<std::size_t>(n), {});
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        if (parent_[v] < 0 || parent_[v] >= n || parent_[v] == v)
            bad_tree("vertex " + std::to_string(v) + " has invalid parent");
        children_[parent_[v]].push_back(v);
    }

    depth_.assign(static_cast<std::size_t>(n), -1);
    depth_[root] = 0;
    bfs_.reserve(static_cast<std::size_t>(n));
    bfs_.push_back(root);
    for (std::size_t i = 0; i < bfs_.size(); ++i)
        for (Vertex c : children_[bfs_[i]]) {
            depth_[c] = depth_[bfs_[i]] + 1;
            bfs_.push_back(c);
        }
    if (static_cast<int>(bfs_.size()) != n) bad_tree("parent links contain a cycle or do not reach the root");

    // Each vertex needs every incident edge pointing the same way.
    for (Vertex v = 0; v < n; ++v) {
        int sign = 0;
        auto merge = [&](int s) {
            if (sign != 0 && sign != s) bad_tree("vertex " + std::to_string(v) + " is neither a source nor a sink");
            sign = s;
        };
        if (v != root) merge(parent_edge_sign(dir_[v]));
        for (Vertex c : children_[v]) merge(-parent_edge_sign(dir_[c]));
    }
}

RootedAntiTree RootedAntiTree::from_undirected(int n, std::span<const std::pair<int, int>> edges, Vertex root,
                                               bool root_is_source) {
    if (n < 1 || root < 0 || root >= n) bad_tree("bad vertex count or root");
    if (static_cast<int>(edges.size()) != n - 1) bad_tree("a tree on n vertices has n - 1 edges");
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) bad_tree("bad tree edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<EdgeDir> dir(static_cast<std::size_t>(n), EdgeDir::toward_child);
    std::vector<char> source(static_cast<std::size_t>(n), 0);
    parent[root] = -1;
    source[root] = root_is_source;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : adj[v]) {
            if (parent[u] != -2) continue;
            parent[u] = v;
            source[u] = !source[v];
            dir[u] = source[u] ? EdgeDir::toward_parent : EdgeDir::toward_child;
            queue.push_back(u);
        }
    }
    if (std::find(parent.begin(), parent.end(), -2) != parent.end()) bad_tree("edges do not connect all vertices");
    return RootedAntiTree(n, root, std::move(parent), std::move(dir));
}

RootedAntiTree RootedAntiTree::from_graph(const OrientedGraph& g, Vertex root) {
    std::vector<std::pair<int, int>> undirected;
    for (const Edge& e : g.edges()) undirected.emplace_back(e.from, e.to);
    const int n = g.order();
    if (n < 1 || root < 0 || root >= n) bad_tree("bad vertex count or root");
    if (static_cast<int>(undirected.size()) != n - 1) bad_tree("graph is not a tree");
    const bool root_is_source = n == 1 || g.out_degree(root) > 0;
    RootedAntiTree t = from_undirected(n, undirected, root, root_is_source);
    if (!(t.to_graph() == static_cast<const Digraph&>(g))) bad_tree("graph is not antidirected");
    return t;
}

bool RootedAntiTree::is_source(Vertex v) const {
    if (v != root_ && dir_[v] == EdgeDir::toward_child) return false;
    for (Vertex c : children_[v])
        if (dir_[c] == EdgeDir::toward_parent) return false;
    return true;
}

bool RootedAntiTree::is_sink(Vertex v) const {
    if (v != root_ && dir_[v] == EdgeDir::toward_parent) return false;
    for (Vertex c : children_[v])
        if (dir_[c] == EdgeDir::toward_child) return false;
    return true;
}

bool RootedAntiTree::balanced() const {
    int sources = 0;
    int sinks = 0;
    for (Vertex v = 0; v < n_; ++v) {
        sources += is_source(v);
        sinks += is_sink(v);
    }
    return sources == sinks;
}

int RootedAntiTree::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, static_cast<int>(children_[v].size()) + (v == root_ ? 0 : 1));
    return best;
}

OrientedGraph RootedAntiTree::to_graph() const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n_; ++v) {
        if (v == root_) continue;
        edges.push_back(dir_[v] == EdgeDir::toward_parent ? Edge{v, parent_[v]} : Edge{parent_[v], v});
    }
    return OrientedGraph::validate(n_, edges);
}

RootedAntiTree RootedAntiTree::reversed() const {
    std::vector<EdgeDir> flipped = dir_;
    for (Vertex v = 0; v < n_; ++v)
        if (v != root_)
            flipped[v] = dir_[v] == EdgeDir::toward_parent ? EdgeDir::toward_child : EdgeDir::toward_parent;
    return RootedAntiTree(n_, root_, parent_, std::move(flipped));
}

nlohmann::json tree_to_json(const RootedAntiTree& t) {
    nlohmann::json parent = nlohmann::json::array();
    nlohmann::json dir = nlohmann::json::array();
    for (Vertex v = 0; v < t.order(); ++v) {
        if (v == t.root()) {
            parent.push_back(nullptr);
            dir.push_back(nullptr);
        } else {
            parent.push_back(t.parent(v));
            dir.push_back(t.dir(v) == EdgeDir::toward_parent ? "tp" : "tc");
        }
    }
    return {{"n", t.order()}, {"root", t.root()}, {"parent", parent}, {"dir", dir}};
}

RootedAntiTree tree_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        const Vertex root = j.at("root").get<int>();
        const auto& pj = j.at("parent");
        const auto& dj = j.at("dir");
        if (!pj.is_array() || !dj.is_array() || static_cast<int>(pj.size()) != n || static_cast<int>(dj.size()) != n)
            throw Error(ErrorCode::ParseError, "parent and dir must be arrays of length n");
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::vector<EdgeDir> dir(static_cast<std::size_t>(n), EdgeDir::toward_child);
        for (int v = 0; v < n; ++v) {
            if (!pj[v].is_null()) parent[v] = pj[v].get<int>();
            if (dj[v].is_null()) {
                if (v != root) throw Error(ErrorCode::ParseError, "missing dir for vertex " + std::to_string(v));
                continue;
            }
            const auto s = dj[v].get<std::string>();
            if (s == "tp") dir[v] = EdgeDir::toward_parent;
            else if (s == "tc") dir[v] = EdgeDir::toward_child;
            else throw Error(ErrorCode::ParseError, "dir entries must be \"tp\" or \"tc\"");
        }
        return RootedAntiTree(n, root, std::move(parent), std::move(dir));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

}  // namespace antikit
