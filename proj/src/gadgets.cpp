#include "antikit/gadgets.hpp"

#include <array>
#include <numeric>
#include <set>
#include <utility>

namespace antikit {

OrientedGraph directed_triangle() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
    return OrientedGraph::validate(3, edges);
}

OrientedGraph blowup(const OrientedGraph& g, int ell) {
    if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(g.size() * static_cast<std::size_t>(ell) * static_cast<std::size_t>(ell));
    for (const Edge& e : g.edges())
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < ell; ++j) edges.push_back({e.from * ell + i, e.to * ell + j});
    return OrientedGraph::validate(g.order() * ell, edges);
}

OrientedGraph burr_graph(int k) {
    if (k < 4) throw Error(ErrorCode::InvalidArgument, "burr_graph needs k >= 4");
    if (k % 2 != 0)
        throw Error(ErrorCode::InfeasibleSplit, "k - 2 = " + std::to_string(k - 2) + " pairs cannot be split evenly");
    const int s = k - 2;
    const int half = s / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < s; ++i)
        for (int l = 0; l < s; ++l) {
            const bool forward = ((l - i) % s + s) % s < half;
            edges.push_back(forward ? Edge{i, s + l} : Edge{s + l, i});
        }
    return OrientedGraph::validate(2 * s, edges);
}

OrientedGraph transitive_tournament(int h) {
    if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be at least 1");
    std::vector<Edge> edges;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) edges.push_back({i, j});
    return OrientedGraph::validate(h, edges);
}

OrientedGraph antipath(int length, bool first_forward) {
    if (length < 0) throw Error(ErrorCode::InvalidArgument, "negative length");
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) {
        const bool forward = (i % 2 == 0) == first_forward;
        edges.push_back(forward ? Edge{i, i + 1} : Edge{i + 1, i});
    }
    return OrientedGraph::validate(length + 1, edges);
}

OrientedGraph anticycle(int length) {
    if (length < 4 || length % 2 != 0) throw Error(ErrorCode::InvalidArgument, "anticycles have even length >= 4");
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) {
        const int j = (i + 1) % length;
        edges.push_back(i % 2 == 0 ? Edge{i, j} : Edge{j, i});
    }
    return OrientedGraph::validate(length, edges);
}

OrientedGraph antidirected_star(int k, bool outward) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative k");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.push_back(outward ? Edge{0, i} : Edge{i, 0});
    return OrientedGraph::validate(k + 1, edges);
}

int pair_index(int h, int i, int j) {
    if (i > j) std::swap(i, j);
    // Pairs (0,1), (0,2), ..., (0,h-1), (1,2), ...
    return i * h - i * (i + 1) / 2 + (j - i - 1);
}

int AntiSubdivisionSpec::total_edges() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void check_spec_shape(const AntiSubdivisionSpec& spec) {
    if (spec.h < 1) throw Error(ErrorCode::InvalidArgument, "h must be at least 1");
    if (static_cast<int>(spec.lengths.size()) != spec.h * (spec.h - 1) / 2)
        throw Error(ErrorCode::InvalidArgument, "need one length per pair of branch vertices");
    for (int g : spec.lengths)
        if (g < 1) throw Error(ErrorCode::InvalidArgument, "path lengths must be at least 1");
    if (spec.branch_is_source && static_cast<int>(spec.branch_is_source->size()) != spec.h)
        throw Error(ErrorCode::InvalidArgument, "need one role per branch vertex");
}

// Branch roles consistent with every path parity: a path of even length joins
// two vertices of equal role.
std::vector<bool> resolve_roles(const AntiSubdivisionSpec& spec) {
    const int h = spec.h;
    auto parity_ok = [&](const std::vector<bool>& roles) {
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                const bool same = spec.lengths[pair_index(h, i, j)] % 2 == 0;
                if ((roles[i] == roles[j]) != same) return false;
            }
        return true;
    };
    if (spec.branch_is_source) {
        if (!parity_ok(*spec.branch_is_source))
            throw Error(ErrorCode::NotRealizable, "branch roles contradict a path parity");
        return *spec.branch_is_source;
    }
    // K_h is connected through vertex 0, so its roles fix everything.
    std::vector<bool> roles(static_cast<std::size_t>(h), true);
    for (int j = 1; j < h; ++j) roles[j] = spec.lengths[pair_index(h, 0, j)] % 2 == 0;
    if (!parity_ok(roles)) throw Error(ErrorCode::NotRealizable, "path parities admit no antidirected orientation");
    return roles;
}

}  // namespace

bool is_long(const AntiSubdivisionSpec& spec) {
    check_spec_shape(spec);
    DisjointSets sets(spec.h);
    for (int i = 0; i < spec.h; ++i)
        for (int j = i + 1; j < spec.h; ++j)
            if (spec.lengths[pair_index(spec.h, i, j)] < 3 && !sets.unite(i, j)) return false;
    return true;
}

AntiSubdivision build_antisubdivision(const AntiSubdivisionSpec& spec) {
    check_spec_shape(spec);
    const std::vector<bool> roles = resolve_roles(spec);
    const int h = spec.h;

    AntiSubdivision out;
    out.is_long = is_long(spec);
    out.branch.resize(static_cast<std::size_t>(h));
    std::iota(out.branch.begin(), out.branch.end(), 0);

    std::vector<Edge> edges;
    int next = h;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            const int len = spec.lengths[pair_index(h, i, j)];
            std::vector<Vertex> path{i};
            for (int s = 1; s < len; ++s) path.push_back(next++);
            path.push_back(j);
            // Position s is a source iff it has the parity of a source start.
            for (int s = 0; s < len; ++s) {
                const bool tail_is_source = (s % 2 == 0) == roles[i];
                edges.push_back(tail_is_source ? Edge{path[s], path[s + 1]} : Edge{path[s + 1], path[s]});
            }
            out.paths.push_back(std::move(path));
        }
    out.pattern = OrientedGraph::validate(next, edges);
    return out;
}

PeelResult peel_pseudo(const Digraph& g, int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    const int n = g.order();
    // Split vertex index: v for the out-copy, n + v for the in-copy.
    std::vector<int> degree(static_cast<std::size_t>(2 * n));
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.out_degree(v);
        degree[n + v] = g.in_degree(v);
    }
    std::vector<char> alive(static_cast<std::size_t>(2 * n), 1);
    std::set<std::pair<int, int>> queue;
    for (int s = 0; s < 2 * n; ++s) queue.insert({degree[s], s});

    while (!queue.empty()) {
        const auto [deg, s] = *queue.begin();
        if (2 * deg > k - 1) break;
        queue.erase(queue.begin());
        alive[s] = 0;
        const bool out_copy = s < n;
        const Vertex v = out_copy ? s : s - n;
        const Bitset& nbrs = out_copy ? g.out_neighbours(v) : g.in_neighbours(v);
        nbrs.for_each([&](std::size_t u) {
            const int t = out_copy ? n + static_cast<int>(u) : static_cast<int>(u);
            if (!alive[t]) return;
            queue.erase({degree[t], t});
            --degree[t];
            queue.insert({degree[t], t});
        });
    }

    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (alive[e.from] && alive[n + e.to]) kept.push_back(e);
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    PeelResult result;
    for (const Edge& e : kept) {
        for (Vertex v : {e.from, e.to})
            if (index[v] < 0) index[v] = 0;
    }
    for (Vertex v = 0; v < n; ++v)
        if (index[v] == 0) {
            index[v] = static_cast<int>(result.origin.size());
            result.origin.push_back(v);
        }
    for (Edge& e : kept) e = {index[e.from], index[e.to]};
    result.graph = Digraph::from_edges(static_cast<int>(result.origin.size()), kept);
    return result;
}

std::string_view to_string(CopyTag tag) {
    switch (tag) {
        case CopyTag::D1: return "D1";
        case CopyTag::D2: return "D2";
        case CopyTag::D3: return "D3";
        case CopyTag::D4: return "D4";
        case CopyTag::A12: return "A12";
        case CopyTag::A34: return "A34";
        case CopyTag::B14: return "B14";
        case CopyTag::B23: return "B23";
    }
    return "?";
}

bool GadgetMap::in_d1(Vertex v) const {
    const CopyTag t = copy_of[v];
    return t == CopyTag::D1 || t == CopyTag::A12 || t == CopyTag::B14;
}

FourCopyGadget four_copy(const OrientedGraph& d_prime) {
    if (d_prime.size() == 0) throw Error(ErrorCode::EmptyInput, "d' has no edges");
    for (Vertex v = 0; v < d_prime.order(); ++v)
        if (d_prime.out_degree(v) == 0 && d_prime.in_degree(v) == 0)
            throw Error(ErrorCode::InvalidArgument, "d' has isolated vertex " + std::to_string(v));

    const VertexClass cls = vertex_class(d_prime);
    const bool reversed = cls.v_out.size() < cls.v_in.size();
    const OrientedGraph base = reversed ? d_prime.reversed() : d_prime;
    const int n = base.order();

    FourCopyGadget out;
    out.map.reversed = reversed;
    // slot[v][c]: gadget vertex of copy c (0-based) of v.
    std::vector<std::array<int, 4>> slot(static_cast<std::size_t>(n));
    auto add = [&](Vertex v, CopyTag tag) {
        out.map.copy_of.push_back(tag);
        out.map.origin.push_back(v);
        return static_cast<int>(out.map.copy_of.size()) - 1;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (base.in_degree(v) == 0) {
            const int a12 = add(v, CopyTag::A12);
            const int a34 = add(v, CopyTag::A34);
            slot[v] = {a12, a12, a34, a34};
        } else if (base.out_degree(v) == 0) {
            const int b14 = add(v, CopyTag::B14);
            const int b23 = add(v, CopyTag::B23);
            slot[v] = {b14, b23, b23, b14};
        } else {
            slot[v] = {add(v, CopyTag::D1), add(v, CopyTag::D2), add(v, CopyTag::D3), add(v, CopyTag::D4)};
        }
    }

    std::vector<Edge> edges;
    for (const Edge& e : base.edges())
        for (int c = 0; c < 4; ++c) {
            const int u = slot[e.from][c];
            const int w = slot[e.to][c];
            edges.push_back(c % 2 == 0 ? Edge{u, w} : Edge{w, u});
        }
    out.graph = OrientedGraph::validate(static_cast<int>(out.map.copy_of.size()), edges);
    for (Vertex v = 0; v < out.graph.order(); ++v) {
        const CopyTag t = out.map.copy_of[v];
        if (t == CopyTag::D1 || t == CopyTag::A12) out.v_star.push_back(v);
    }
    return out;
}

std::optional<std::vector<Vertex>> pull_back(const GadgetMap& map, const std::vector<Vertex>& image) {
    std::vector<Vertex> back;
    back.reserve(image.size());
    for (Vertex v : image) {
        if (v < 0 || v >= static_cast<Vertex>(map.copy_of.size()) || !map.in_d1(v)) return std::nullopt;
        back.push_back(map.origin[v]);
    }
    return back;
}

nlohmann::json gadget_map_to_json(const FourCopyGadget& gadget) {
    nlohmann::json tags = nlohmann::json::array();
    for (CopyTag t : gadget.map.copy_of) tags.push_back(std::string(to_string(t)));
    return {{"copy_of", tags}, {"origin", gadget.map.origin}, {"reversed", gadget.map.reversed},
            {"v_star", gadget.v_star}};
}

}  // namespace antikit
