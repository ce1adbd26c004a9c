#include "antikit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

namespace antikit {

int pair_count(int n) { return n * (n - 1) / 2; }

long long oriented_count(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
    if (n > 6) throw Error(ErrorCode::TooLarge, "exhaustive enumeration stops at n = 6");
    long long c = 1;
    for (int i = 0; i < pair_count(n); ++i) c *= 3;
    return c;
}

OrientedGraph oriented_from_index(int n, long long index) {
    const long long total = oriented_count(n);
    if (index < 0 || index >= total) throw Error(ErrorCode::InvalidArgument, "index out of range");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long long digit = index % 3;
            index /= 3;
            if (digit == 1) edges.push_back({i, j});
            if (digit == 2) edges.push_back({j, i});
        }
    return OrientedGraph::validate(n, edges);
}

void enumerate_oriented(int n, const std::function<void(const OrientedGraph&)>& visit) {
    const long long total = oriented_count(n);
    for (long long i = 0; i < total; ++i) visit(oriented_from_index(n, i));
}

namespace {

std::uint64_t code_of(const OrientedGraph& g, const std::vector<Vertex>& at) {
    const int n = g.order();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            code *= 3;
            if (g.has_edge(at[i], at[j]))
                code += 1;
            else if (g.has_edge(at[j], at[i]))
                code += 2;
        }
    return code;
}

}  // namespace

std::uint64_t canonical_code(const OrientedGraph& g) {
    const int n = g.order();
    if (n > 9) throw Error(ErrorCode::TooLarge, "canonical codes stop at n = 9");
    std::vector<Vertex> at(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) at[i] = i;
    auto key = [&](Vertex v) { return std::pair{g.out_degree(v), g.in_degree(v)}; };
    std::stable_sort(at.begin(), at.end(), [&](Vertex a, Vertex b) { return key(a) < key(b); });
    // Blocks of equal degree pairs; only permutations inside blocks count.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && key(at[j]) == key(at[i])) ++j;
        blocks.push_back({i, j});
        i = j;
    }
    std::uint64_t best = UINT64_MAX;
    // Odometer over the blocks with next_permutation; each block starts sorted.
    while (true) {
        best = std::min(best, code_of(g, at));
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
            auto first = at.begin() + blocks[b].first;
            auto last = at.begin() + blocks[b].second;
            if (std::next_permutation(first, last)) break;
        }
        if (b == blocks.size()) break;
    }
    return best;
}

OrientedGraph graph_from_code(int n, std::uint64_t code) {
    std::vector<int> digits(static_cast<std::size_t>(pair_count(n)));
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        *it = static_cast<int>(code % 3);
        code /= 3;
    }
    std::vector<Edge> edges;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p) {
            if (digits[p] == 1) edges.push_back({i, j});
            if (digits[p] == 2) edges.push_back({j, i});
        }
    return OrientedGraph::validate(n, edges);
}

const std::vector<OrientedGraph>& oriented_classes(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
    if (n > 6) throw Error(ErrorCode::TooLarge, "isomorphism classes are generated up to n = 6");
    static std::mutex lock;
    static std::map<int, std::vector<OrientedGraph>> cache;
    {
        std::lock_guard guard(lock);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<OrientedGraph> result;
    if (n <= 1) {
        result.push_back(OrientedGraph(n));
    } else {
        const std::vector<OrientedGraph>& smaller = oriented_classes(n - 1);
        long long attachments = 1;
        for (int i = 0; i < n - 1; ++i) attachments *= 3;
        std::set<std::uint64_t> codes;
        for (const OrientedGraph& base : smaller) {
            const std::vector<Edge> base_edges = base.edges();
            for (long long a = 0; a < attachments; ++a) {
                std::vector<Edge> edges = base_edges;
                long long rest = a;
                for (int v = 0; v < n - 1; ++v) {
                    const long long digit = rest % 3;
                    rest /= 3;
                    if (digit == 1) edges.push_back({v, n - 1});
                    if (digit == 2) edges.push_back({n - 1, v});
                }
                codes.insert(canonical_code(OrientedGraph::validate(n, edges)));
            }
        }
        for (std::uint64_t c : codes) result.push_back(graph_from_code(n, c));
    }
    std::lock_guard guard(lock);
    return cache.emplace(n, std::move(result)).first->second;
}

OrientedGraph random_oriented(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (unit(rng) >= p) continue;
            if (unit(rng) < 0.5)
                edges.push_back({i, j});
            else
                edges.push_back({j, i});
        }
    return OrientedGraph::validate(n, edges);
}

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && unit(rng) < p) edges.push_back({i, j});
    return Digraph::from_edges(n, edges);
}

namespace {

std::vector<std::pair<int, int>> tree_from_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int x : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, x});
        if (--degree[x] == 1) leaves.insert(x);
    }
    const int u = *leaves.begin();
    const int w = *std::next(leaves.begin());
    edges.push_back({u, w});
    return edges;
}

OrientedGraph orient_by_sides(int n, const std::vector<std::pair<int, int>>& edges) {
    // 2-colour from vertex 0; colour 0 vertices are sources.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (side[u] < 0) {
                side[u] = 1 - side[v];
                stack.push_back(u);
            }
    }
    std::vector<Edge> out;
    for (auto [a, b] : edges) out.push_back(side[a] == 0 ? Edge{a, b} : Edge{b, a});
    return OrientedGraph::validate(n, out);
}

}  // namespace

std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "a tree needs a vertex");
    if (n == 1) return {};
    if (n == 2) return {{0, 1}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& x : seq) x = pick(rng);
    return tree_from_pruefer(n, seq);
}

std::vector<OrientedGraph> antidirected_trees(int k, bool balanced_only) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative edge count");
    if (k > 7) throw Error(ErrorCode::TooLarge, "tree lists stop at 7 edges");
    const int n = k + 1;
    std::set<std::uint64_t> codes;
    auto consider = [&](const OrientedGraph& g) {
        if (balanced_only) {
            const VertexClass c = vertex_class(g);
            if (c.v_in.size() != c.v_out.size()) return;
        }
        codes.insert(canonical_code(g));
    };
    if (n == 1) {
        consider(OrientedGraph(1));
    } else if (n == 2) {
        consider(orient_by_sides(2, {{0, 1}}));
    } else {
        std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
        while (true) {
            const OrientedGraph g = orient_by_sides(n, tree_from_pruefer(n, seq));
            consider(g);
            consider(g.reversed());
            std::size_t i = 0;
            for (; i < seq.size(); ++i) {
                if (++seq[i] < n) break;
                seq[i] = 0;
            }
            if (i == seq.size()) break;
        }
    }
    std::vector<OrientedGraph> out;
    for (std::uint64_t c : codes) out.push_back(graph_from_code(n, c));
    return out;
}

std::vector<OrientedGraph> connected_antidirected(int n) {
    std::vector<OrientedGraph> out;
    for (const OrientedGraph& g : oriented_classes(n))
        if (g.size() > 0 && is_antidirected(g) && is_weakly_connected(g)) out.push_back(g);
    return out;
}

}  // namespace antikit
