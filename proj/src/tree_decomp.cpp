#include "antikit/tree_decomp.hpp"

#include <algorithm>

namespace antikit {

BetaDecomposition beta_decompose(const RootedAntiTree& t, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw Error(ErrorCode::InvalidArgument, "beta must lie in (0, 1)");
    const int n = t.order();
    const double limit = beta * t.edge_count();

    std::vector<char> in_w(static_cast<std::size_t>(n), 0);
    std::vector<long long> residual(static_cast<std::size_t>(n), 1);
    const auto& order = t.bfs_order();
    // Reverse BFS order visits children before parents.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        for (Vertex c : t.children(v))
            if (!in_w[c]) residual[v] += residual[c];
        if (v != t.root() && static_cast<double>(residual[v]) > limit) in_w[v] = 1;
    }
    in_w[t.root()] = 1;

    BetaDecomposition d;
    d.beta = beta;
    for (Vertex v = 0; v < n; ++v)
        if (in_w[v]) d.w_set.push_back(v);
    for (Vertex v : order) {
        if (in_w[v] || !in_w[t.parent(v)]) continue;
        Subtree s{v, {}};
        std::vector<Vertex> stack{v};
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            s.vertices.push_back(u);
            for (Vertex c : t.children(u))
                if (!in_w[c]) stack.push_back(c);
        }
        std::sort(s.vertices.begin(), s.vertices.end());
        d.trees.push_back(std::move(s));
    }
    return d;
}

bool is_beta_decomposition(const RootedAntiTree& t, const BetaDecomposition& d, std::string* why) {
    auto fail = [&](const char* clause) {
        if (why) *why = clause;
        return false;
    };
    const int n = t.order();
    std::vector<char> in_w(static_cast<std::size_t>(n), 0);
    for (Vertex w : d.w_set) {
        if (w < 0 || w >= n || in_w[w]) return fail("(ii) W must be a set of tree vertices");
        in_w[w] = 1;
    }
    if (!in_w[t.root()]) return fail("(i) root not in W");

    // (ii): the listed trees are exactly the components of T - W, rooted at
    // their vertex nearest the root.
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < d.trees.size(); ++i) {
        for (Vertex v : d.trees[i].vertices) {
            if (v < 0 || v >= n || in_w[v] || owner[v] != -1) return fail("(ii) trees must partition V(T) - W");
            owner[v] = static_cast<int>(i);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!in_w[v] && owner[v] == -1) return fail("(ii) vertex of T - W not covered");
    std::vector<int> roots_seen(d.trees.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (in_w[v]) continue;
        const int p = t.parent(v);
        if (in_w[p]) {
            if (d.trees[owner[v]].root != v) return fail("(ii) subtree root is not its vertex closest to the root");
            ++roots_seen[owner[v]];
        } else if (owner[p] != owner[v]) {
            return fail("(ii) a tree is not a union of whole components");
        }
    }
    for (int c : roots_seen)
        if (c != 1) return fail("(ii) a listed tree is not connected");

    const double limit = d.beta * t.edge_count();
    for (const Subtree& s : d.trees)
        if (static_cast<double>(s.vertices.size()) > limit) return fail("(iii) a tree exceeds beta * k");
    if (static_cast<double>(d.w_set.size()) > 1.0 / d.beta + 2.0) return fail("(iv) |W| exceeds 1/beta + 2");
    return true;
}

std::vector<char> shaved_levels(const RootedAntiTree& t, const BetaDecomposition& d, int j) {
    if (j < 1) throw Error(ErrorCode::InvalidArgument, "j must be at least 1");
    std::vector<char> shaved(static_cast<std::size_t>(t.order()), 0);
    for (const Subtree& s : d.trees) {
        const int base = t.depth(s.root);
        for (Vertex v : s.vertices)
            if (t.depth(v) - base < j) shaved[v] = 1;
    }
    return shaved;
}

ShavedCounts shaved_counts(const RootedAntiTree& t, const BetaDecomposition& d, int j) {
    const std::vector<char> shaved = shaved_levels(t, d, j);
    ShavedCounts c;
    c.j = j;
    for (Vertex v = 0; v < t.order(); ++v) {
        if (shaved[v]) continue;
        if (t.is_sink(v)) ++c.p;
        if (t.is_source(v)) ++c.q;
    }
    return c;
}

nlohmann::json decomposition_to_json(const BetaDecomposition& d) {
    nlohmann::json trees = nlohmann::json::array();
    for (const Subtree& s : d.trees) trees.push_back({{"root", s.root}, {"vertices", s.vertices}});
    return {{"beta", d.beta}, {"w", d.w_set}, {"trees", trees}};
}

}  // namespace antikit
