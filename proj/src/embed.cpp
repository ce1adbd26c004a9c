#include "antikit/embed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <utility>

#include "antikit/antiwalk.hpp"

namespace antikit {

bool is_embedding(const Digraph& pattern, const Digraph& host, const EmbeddingMap& map) {
    if (static_cast<int>(map.image.size()) != pattern.order()) return false;
    Bitset seen(static_cast<std::size_t>(host.order()));
    for (Vertex v : map.image) {
        if (v < 0 || v >= host.order() || seen.test(static_cast<std::size_t>(v))) return false;
        seen.set(static_cast<std::size_t>(v));
    }
    for (const Edge& e : pattern.edges())
        if (!host.has_edge(map.image[e.from], map.image[e.to])) return false;
    return true;
}

namespace {

class ExactSearch {
public:
    ExactSearch(const OrientedGraph& pattern, const OrientedGraph& host, const std::optional<Pin>& pin)
        : np_(pattern.order()), nh_(host.order()) {
        if (pin && (pin->x < 0 || pin->x >= np_)) throw Error(ErrorCode::VertexOutOfRange, "pinned vertex out of range");
        if (np_ > nh_ || pattern.size() > host.size()) {
            hopeless_ = true;
            return;
        }
        // Relabel the host so that ascending index is ascending degree-sum.
        orig_.resize(static_cast<std::size_t>(nh_));
        std::iota(orig_.begin(), orig_.end(), 0);
        std::stable_sort(orig_.begin(), orig_.end(), [&](Vertex a, Vertex b) {
            return host.out_degree(a) + host.in_degree(a) < host.out_degree(b) + host.in_degree(b);
        });
        std::vector<int> rank(static_cast<std::size_t>(nh_));
        for (int r = 0; r < nh_; ++r) rank[orig_[r]] = r;
        host_ = host.permuted(rank);

        order_ = variable_order(pattern, pin ? std::optional<Vertex>(pin->x) : std::nullopt);
        std::vector<int> pos(static_cast<std::size_t>(np_));
        for (int i = 0; i < np_; ++i) pos[order_[i]] = i;

        base_.assign(static_cast<std::size_t>(np_), Bitset(static_cast<std::size_t>(nh_)));
        links_.resize(static_cast<std::size_t>(np_));
        for (int i = 0; i < np_; ++i) {
            const Vertex pv = order_[i];
            for (Vertex hv = 0; hv < nh_; ++hv)
                if (host_.out_degree(hv) >= pattern.out_degree(pv) && host_.in_degree(hv) >= pattern.in_degree(pv))
                    base_[i].set(static_cast<std::size_t>(hv));
            if (pin && pin->x == pv) {
                Bitset allowed(static_cast<std::size_t>(nh_));
                for (Vertex a : pin->allowed) {
                    if (a < 0 || a >= nh_) throw Error(ErrorCode::VertexOutOfRange, "pin set vertex out of range");
                    allowed.set(static_cast<std::size_t>(rank[a]));
                }
                base_[i] &= allowed;
            }
            pattern.out_neighbours(pv).for_each([&](std::size_t u) {
                if (pos[u] < i) links_[i].push_back({pos[u], false});
            });
            pattern.in_neighbours(pv).for_each([&](std::size_t u) {
                if (pos[u] < i) links_[i].push_back({pos[u], true});
            });
        }
        scratch_.assign(static_cast<std::size_t>(np_), Bitset(static_cast<std::size_t>(nh_)));
        used_ = Bitset(static_cast<std::size_t>(nh_));
        img_.assign(static_cast<std::size_t>(np_), -1);
    }

    // Returns the number of embeddings handed to `visit`.
    long long run(const std::function<bool(const EmbeddingMap&)>& visit, SearchStats* stats) {
        visit_ = &visit;
        count_ = 0;
        nodes_ = 0;
        if (!hopeless_) descend(0);
        if (stats) stats->nodes = nodes_;
        return count_;
    }

private:
    struct Link {
        int position;
        bool from_earlier;  // pattern edge earlier -> current
    };

    static std::vector<Vertex> variable_order(const OrientedGraph& p, std::optional<Vertex> first) {
        const int n = p.order();
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> order;
        auto degree = [&](Vertex v) { return p.out_degree(v) + p.in_degree(v); };
        while (static_cast<int>(order.size()) < n) {
            Vertex start = -1;
            if (first && !seen[*first]) {
                start = *first;
            } else {
                for (Vertex v = 0; v < n; ++v)
                    if (!seen[v] && (start < 0 || degree(v) > degree(start))) start = v;
            }
            std::deque<Vertex> queue{start};
            seen[start] = 1;
            while (!queue.empty()) {
                const Vertex v = queue.front();
                queue.pop_front();
                order.push_back(v);
                for (const Bitset* row : {&p.out_neighbours(v), &p.in_neighbours(v)})
                    row->for_each([&](std::size_t u) {
                        if (!seen[u]) {
                            seen[u] = 1;
                            queue.push_back(static_cast<Vertex>(u));
                        }
                    });
            }
        }
        return order;
    }

    // True when the visitor asked to stop.
    bool descend(int i) {
        ++nodes_;
        if (i == np_) {
            EmbeddingMap map;
            map.image.assign(static_cast<std::size_t>(np_), -1);
            for (int k = 0; k < np_; ++k) map.image[order_[k]] = orig_[img_[k]];
            ++count_;
            return !(*visit_)(map);
        }
        Bitset& cand = scratch_[i];
        cand = base_[i];
        cand.subtract(used_);
        for (const Link& l : links_[i]) {
            const Vertex other = img_[l.position];
            cand &= l.from_earlier ? host_.out_neighbours(other) : host_.in_neighbours(other);
        }
        for (std::size_t v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
            used_.set(v);
            img_[i] = static_cast<Vertex>(v);
            if (descend(i + 1)) return true;
            used_.reset(v);
        }
        img_[i] = -1;
        return false;
    }

    int np_;
    int nh_;
    bool hopeless_ = false;
    OrientedGraph host_;
    std::vector<Vertex> orig_;
    std::vector<Vertex> order_;
    std::vector<Bitset> base_;
    std::vector<std::vector<Link>> links_;
    std::vector<Bitset> scratch_;
    Bitset used_;
    std::vector<Vertex> img_;
    const std::function<bool(const EmbeddingMap&)>* visit_ = nullptr;
    long long count_ = 0;
    long long nodes_ = 0;
};

}  // namespace

std::optional<EmbeddingMap> embed_exact(const OrientedGraph& pattern, const OrientedGraph& host,
                                        const std::optional<Pin>& pin, SearchStats* stats) {
    std::optional<EmbeddingMap> found;
    ExactSearch search(pattern, host, pin);
    search.run(
        [&](const EmbeddingMap& m) {
            found = m;
            return false;
        },
        stats);
    return found;
}

long long for_each_embedding(const OrientedGraph& pattern, const OrientedGraph& host, const std::optional<Pin>& pin,
                             const std::function<bool(const EmbeddingMap&)>& visit) {
    ExactSearch search(pattern, host, pin);
    return search.run(visit, nullptr);
}

int longest_antipath(const Digraph& host) {
    const int n = host.order();
    if (n > 20) throw Error(ErrorCode::BudgetExceeded, "longest_antipath is exact only up to 20 vertices");
    if (n == 0) return 0;
    // reach[mask] bit 2v + 0: a path on `mask` ends at v and its next edge
    // must leave v; bit 2v + 1: its next edge must enter v.
    const std::size_t masks = std::size_t{1} << n;
    std::vector<std::uint64_t> reach(masks, 0);
    std::vector<std::uint32_t> out_rows(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> in_rows(static_cast<std::size_t>(n), 0);
    for (const Edge& e : host.edges()) {
        out_rows[e.from] |= 1U << e.to;
        in_rows[e.to] |= 1U << e.from;
    }
    for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = std::uint64_t{3} << (2 * v);
    int best = 1;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        std::uint64_t states = reach[mask];
        if (!states) continue;
        best = std::max(best, std::popcount(mask));
        while (states) {
            const int bit = std::countr_zero(states);
            states &= states - 1;
            const int v = bit / 2;
            const bool leave = bit % 2 == 0;
            std::uint32_t next = (leave ? out_rows[v] : in_rows[v]) & ~static_cast<std::uint32_t>(mask);
            while (next) {
                const int u = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (std::size_t{1} << u)] |= std::uint64_t{1} << (2 * u + (leave ? 1 : 0));
            }
        }
    }
    return best;
}

std::vector<Vertex> BlowupHost::cluster(int i) const {
    std::vector<Vertex> out(static_cast<std::size_t>(cluster_size));
    std::iota(out.begin(), out.end(), i * cluster_size);
    return out;
}

BlowupHost make_blowup_host(const OrientedGraph& reduced, int m, double density, std::uint64_t seed) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "cluster size must be at least 1");
    if (!(density > 0.0 && density <= 1.0)) throw Error(ErrorCode::InvalidArgument, "density must lie in (0, 1]");
    BlowupHost b;
    b.reduced = reduced;
    b.cluster_size = m;
    b.density = density;
    b.seed = seed;

    std::mt19937_64 rng(seed);
    const long long pairs = static_cast<long long>(m) * m;
    const auto want = static_cast<long long>(std::ceil(density * static_cast<double>(pairs) - 1e-9));
    std::vector<Edge> edges;
    std::vector<long long> slots(static_cast<std::size_t>(pairs));
    for (const Edge& e : reduced.edges()) {
        std::iota(slots.begin(), slots.end(), 0LL);
        // Partial Fisher-Yates: the first `want` slots become the edge set.
        for (long long i = 0; i < want && want < pairs; ++i) {
            std::uniform_int_distribution<long long> pick(i, pairs - 1);
            std::swap(slots[i], slots[pick(rng)]);
        }
        for (long long i = 0; i < want; ++i)
            edges.push_back({e.from * m + static_cast<int>(slots[i] / m), e.to * m + static_cast<int>(slots[i] % m)});
    }
    b.graph = OrientedGraph::validate(reduced.order() * m, edges);
    return b;
}

const std::vector<Vertex>& walk_target(const AntiwalkPlan& plan, int level) {
    const int h = static_cast<int>(plan.walk.size()) - 1;
    if (level <= h) return plan.z_sets[level];
    return (level - h) % 2 == 1 ? plan.x_prev : plan.x_last;
}

namespace {

const Bitset& row_toward(const BlowupHost& host, Vertex x, int target_cluster) {
    const int cx = host.cluster_of(x);
    return host.reduced.has_edge(cx, target_cluster) ? host.graph.out_neighbours(x) : host.graph.in_neighbours(x);
}

Bitset as_bitset(const std::vector<Vertex>& set, std::size_t n) {
    Bitset b(n);
    for (Vertex v : set) b.set(static_cast<std::size_t>(v));
    return b;
}

// More than (d - eps)|Y| neighbours in Y; an exhausted Y imposes nothing.
bool typical_against(const BlowupHost& host, Vertex x, const Bitset& y, int y_cluster, double density,
                     double epsilon) {
    const std::size_t size = y.count();
    if (size == 0) return true;
    const std::size_t hits = row_toward(host, x, y_cluster).intersection_count(y);
    return static_cast<double>(hits) > (density - epsilon) * static_cast<double>(size);
}

}  // namespace

bool is_typical(const BlowupHost& host, Vertex x, const std::vector<Vertex>& y, double density, double epsilon) {
    if (y.empty()) return true;
    const Bitset yb = as_bitset(y, static_cast<std::size_t>(host.graph.order()));
    return typical_against(host, x, yb, host.cluster_of(y.front()), density, epsilon);
}

EmbeddingMap embed_along_antiwalk(const BlowupHost& host, const AntiwalkPlan& plan, const RootedAntiTree& s,
                                  const WalkEmbedParams& params) {
    return embed_along_antiwalk(host, plan, s, params, nullptr, std::nullopt, false);
}

EmbeddingMap embed_along_antiwalk(const BlowupHost& host, const AntiwalkPlan& plan, const RootedAntiTree& s,
                                  const WalkEmbedParams& params, const Bitset* used, std::optional<Vertex> anchor,
                                  bool root_to_anchor) {
    const int h = static_cast<int>(plan.walk.size()) - 1;
    const OrientedGraph& r = host.reduced;
    const auto n = static_cast<std::size_t>(host.graph.order());
    const int m = host.cluster_size;
    if (h < 1) throw Error(ErrorCode::InvalidArgument, "the walk needs at least one edge");
    if (static_cast<int>(plan.z_sets.size()) != h + 1) throw Error(ErrorCode::InvalidArgument, "need one Z set per walk vertex");
    for (Vertex q : plan.walk)
        if (q < 0 || q >= r.order()) throw Error(ErrorCode::VertexOutOfRange, "walk leaves the reduced graph");
    if (!is_antiwalk(r, plan.walk)) throw Error(ErrorCode::InvalidArgument, "walk is not an antiwalk of R");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");

    auto inside = [&](const std::vector<Vertex>& set, Vertex q, const std::vector<Vertex>* avoid) {
        Bitset av(n);
        if (avoid)
            for (Vertex v : *avoid) av.set(static_cast<std::size_t>(v));
        for (Vertex v : set)
            if (v < 0 || static_cast<std::size_t>(v) >= n || host.cluster_of(v) != q || av.test(static_cast<std::size_t>(v)))
                return false;
        return true;
    };
    for (int i = 0; i <= h; ++i)
        if (!inside(plan.z_sets[i], plan.walk[i], nullptr))
            throw Error(ErrorCode::InvalidArgument, "Z_" + std::to_string(i) + " is not inside its cluster");
    if (!inside(plan.x_prev, plan.walk[h - 1], &plan.z_sets[h - 1]) || !inside(plan.x_last, plan.walk[h], &plan.z_sets[h]))
        throw Error(ErrorCode::InvalidArgument, "X sets must lie in their clusters outside Z");

    const bool starts_out = r.has_edge(plan.walk[0], plan.walk[1]);
    if (s.order() > 1 && s.is_source(s.root()) != starts_out)
        throw Error(ErrorCode::ConsistencyMismatch, starts_out ? "root of S is a sink but the walk starts with an out-edge"
                                                               : "root of S is a source but the walk starts with an in-edge");

    if (params.enforce_thresholds) {
        const double eps = params.epsilon;
        const double root_eps = std::sqrt(eps);
        auto violated = [](const std::string& what) { throw Error(ErrorCode::ThresholdViolated, what); };
        // Set sizes are integers; a bound within rounding error of one is that integer.
        auto snap = [](double x) {
            const double r = std::round(x);
            return std::abs(x - r) < 1e-9 * std::max(1.0, std::abs(x)) ? r : x;
        };
        const double s_max = snap(eps / 10.0 * m);
        const double z0_min = snap(3.0 * eps * m);
        const double z_min = snap(3.0 * root_eps * m);
        if (!(static_cast<double>(s.order()) < s_max)) violated("|S| must be below (eps / 10) m");
        if (static_cast<double>(plan.z_sets[0].size()) < z0_min) violated("|Z_0| must be at least 3 eps m");
        for (int i = 1; i <= h; ++i)
            if (static_cast<double>(plan.z_sets[i].size()) < z_min)
                violated("|Z_" + std::to_string(i) + "| must be at least 3 sqrt(eps) m");
        if (!(static_cast<double>(plan.x_prev.size()) > z_min) || !(static_cast<double>(plan.x_last.size()) > z_min))
            violated("|X_{h-1}| and |X_h| must exceed 3 sqrt(eps) m");
    }

    Bitset taken = used ? *used : Bitset(n);
    // Membership bitsets, one per distinct target set.
    std::vector<Bitset> z_bits;
    for (const auto& z : plan.z_sets) z_bits.push_back(as_bitset(z, n));
    const Bitset x_prev_bits = as_bitset(plan.x_prev, n);
    const Bitset x_last_bits = as_bitset(plan.x_last, n);
    auto bits_at = [&](int level) -> const Bitset& {
        if (level <= h) return z_bits[level];
        return (level - h) % 2 == 1 ? x_prev_bits : x_last_bits;
    };
    auto cluster_at = [&](int level) {
        if (level <= h) return plan.walk[level];
        return (level - h) % 2 == 1 ? plan.walk[h - 1] : plan.walk[h];
    };

    EmbeddingMap map;
    map.image.assign(static_cast<std::size_t>(s.order()), -1);
    for (Vertex v : s.bfs_order()) {
        const int level = s.depth(v);
        Bitset cand = bits_at(level);
        cand.subtract(taken);
        if (v == s.root()) {
            if (anchor) cand &= root_to_anchor ? host.graph.in_neighbours(*anchor) : host.graph.out_neighbours(*anchor);
        } else {
            const Vertex p = map.image[s.parent(v)];
            cand &= s.dir(v) == EdgeDir::toward_parent ? host.graph.in_neighbours(p) : host.graph.out_neighbours(p);
        }
        std::vector<std::pair<Bitset, int>> toward;
        toward.push_back({bits_at(level + 1), cluster_at(level + 1)});
        if (level == h) toward.push_back({z_bits[h - 1], plan.walk[h - 1]});
        for (auto& [bits, c] : toward) bits.subtract(taken);

        Vertex chosen = -1;
        for (std::size_t y = cand.find_first(); y != Bitset::npos; y = cand.find_next(y)) {
            bool ok = true;
            for (const auto& [bits, c] : toward) {
                // The vertex itself is not a candidate neighbour of itself.
                Bitset rest = bits;
                rest.reset(y);
                if (!typical_against(host, static_cast<Vertex>(y), rest, c, params.density, params.epsilon)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = static_cast<Vertex>(y);
                break;
            }
        }
        if (chosen < 0)
            throw Error(ErrorCode::TypicalityExhausted, "no typical candidate for tree vertex " + std::to_string(v) +
                                                            " at level " + std::to_string(level));
        map.image[v] = chosen;
        taken.set(static_cast<std::size_t>(chosen));
    }
    return map;
}

namespace {

BlowupHost reversed_host(const BlowupHost& b) {
    BlowupHost r = b;
    r.reduced = b.reduced.reversed();
    r.graph = b.graph.reversed();
    return r;
}

// Shortest antiwalk in R from `start` (leaving on an out-edge iff
// `start_out`) that finishes by crossing the edge a -> b, as a vertex list.
std::vector<Vertex> walk_to_edge(const OrientedGraph& r, Vertex start, bool start_out, Edge target) {
    const int n = r.order();
    std::vector<int> parent(static_cast<std::size_t>(2 * n), -2);
    const int first = 2 * start + (start_out ? 0 : 1);
    parent[first] = -1;
    std::deque<int> queue{first};
    int hit = -1;
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        const Vertex v = s / 2;
        const bool leave = s % 2 == 0;
        if ((leave && v == target.from) || (!leave && v == target.to)) {
            hit = s;
            break;
        }
        const Bitset& row = leave ? r.out_neighbours(v) : r.in_neighbours(v);
        row.for_each([&](std::size_t u) {
            const int t = 2 * static_cast<int>(u) + (leave ? 1 : 0);
            if (parent[t] == -2) {
                parent[t] = s;
                queue.push_back(t);
            }
        });
    }
    if (hit < 0) return {};
    std::vector<Vertex> walk;
    for (int s = hit; s != -1; s = parent[s]) walk.push_back(s / 2);
    std::reverse(walk.begin(), walk.end());
    walk.push_back(hit % 2 == 0 ? target.to : target.from);
    return walk;
}

}  // namespace

TreeEmbedReport embed_tree_in_blowup(const BlowupHost& host_in, const RootedAntiTree& tree_in, const TreeEmbedConfig& cfg) {
    if (cfg.x < 0 || cfg.x >= tree_in.order()) throw Error(ErrorCode::VertexOutOfRange, "pinned tree vertex out of range");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.01)) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 0.01)");
    RootedAntiTree tree = RootedAntiTree::from_graph(tree_in.to_graph(), cfg.x);

    TreeEmbedReport report;
    report.reversed = tree.order() > 1 && !tree.is_source(cfg.x);
    const BlowupHost host = report.reversed ? reversed_host(host_in) : host_in;
    if (report.reversed) tree = tree.reversed();

    const OrientedGraph& r = host.reduced;
    const int m = host.cluster_size;
    const auto n = static_cast<std::size_t>(host.graph.order());
    const int t = cfg.t.value_or(degree_profile(r).min_semidegree);
    if (t < 1) throw Error(ErrorCode::InvalidArgument, "the reduced graph needs minimum semidegree at least 1");
    const int h = cfg.levels.value_or(16 * t + 2);
    if (h < 1) throw Error(ErrorCode::InvalidArgument, "levels must be positive");
    report.levels = h;

    const int s1 = std::clamp(static_cast<int>(std::floor(10.0 * std::sqrt(cfg.epsilon) * m)), 1, m - 1);
    auto slice = [&](int cluster, bool first) {
        std::vector<Vertex> out;
        for (int i = first ? 0 : s1; i < (first ? s1 : m); ++i) out.push_back(cluster * m + i);
        return out;
    };

    // Anchor cluster: most of V* among clusters with an out-edge.
    const Bitset vstar = as_bitset(cfg.v_star, n);
    int a1 = -1;
    std::size_t best_share = 0;
    for (int c = 0; c < r.order(); ++c) {
        if (r.out_degree(c) == 0) continue;
        const std::size_t share = cfg.v_star.empty() ? 1 : as_bitset(host.cluster(c), n).intersection_count(vstar);
        if (share > best_share) {
            best_share = share;
            a1 = c;
        }
    }
    if (a1 < 0) throw Error(ErrorCode::InvalidArgument, "no cluster with an out-edge meets V*");
    report.matching = find_bounded_antimatching(r, AntimatchingRequest{t, a1, std::nullopt});

    report.decomposition = beta_decompose(tree, cfg.beta);
    const BetaDecomposition& dec = report.decomposition;
    const int tn = tree.order();
    std::vector<char> in_w(static_cast<std::size_t>(tn), 0);
    for (Vertex w : dec.w_set) in_w[w] = 1;
    // piece[v]: index of the subtree S whose W_S holds v, or -1 for the root part.
    std::vector<int> piece(static_cast<std::size_t>(tn), -1);
    for (std::size_t i = 0; i < dec.trees.size(); ++i)
        for (Vertex v : dec.trees[i].vertices) piece[v] = static_cast<int>(i);
    for (Vertex v : tree.bfs_order()) {
        if (!in_w[v] || v == tree.root()) continue;
        piece[v] = piece[tree.parent(v)];
    }
    std::vector<std::vector<Vertex>> members(dec.trees.size());
    std::vector<Vertex> root_part;
    for (Vertex v : tree.bfs_order()) (piece[v] < 0 ? root_part : members[piece[v]]).push_back(v);

    // Deep levels of every piece go to the C^2 slices of its antimatching edge.
    PackingInstance& inst = report.packing;
    inst.m = m - s1;
    inst.t = static_cast<int>(report.matching.size());
    inst.alpha = std::sqrt(cfg.epsilon);
    for (std::size_t i = 0; i < dec.trees.size(); ++i) {
        PackingItem item;
        const int base = tree.depth(dec.trees[i].root);
        for (Vertex v : members[i]) {
            if (tree.depth(v) - base <= h) continue;
            if (tree.is_sink(v)) ++item.p;
            if (tree.is_source(v)) ++item.q;
        }
        inst.items.push_back(item);
    }
    report.plan = pack(inst, PackOptions{false, true});

    Bitset used(n);
    std::vector<Vertex> image(static_cast<std::size_t>(tn), -1);
    const Edge first_edge = report.matching.edges.front();
    const auto c1_a = slice(first_edge.from, true);
    const auto c1_b = slice(first_edge.to, true);
    const Bitset c1_a_bits = as_bitset(c1_a, n);
    const Bitset c1_b_bits = as_bitset(c1_b, n);

    for (Vertex v : root_part) {
        Bitset cand(n);
        if (v == tree.root()) {
            cand = as_bitset(host.cluster(first_edge.from), n);
            if (!cfg.v_star.empty()) cand &= vstar;
        } else {
            cand = tree.is_source(v) ? c1_a_bits : c1_b_bits;
            const Vertex p = image[tree.parent(v)];
            cand &= tree.dir(v) == EdgeDir::toward_parent ? host.graph.in_neighbours(p) : host.graph.out_neighbours(p);
        }
        cand.subtract(used);
        Vertex pick = -1;
        for (std::size_t y = cand.find_first(); y != Bitset::npos; y = cand.find_next(y)) {
            const bool src = tree.is_source(v);
            Bitset other = src ? c1_b_bits : c1_a_bits;
            other.subtract(used);
            if (pick < 0) pick = static_cast<Vertex>(y);
            if (typical_against(host, static_cast<Vertex>(y), other, src ? first_edge.to : first_edge.from, host.density,
                                cfg.epsilon)) {
                pick = static_cast<Vertex>(y);
                break;
            }
        }
        if (pick < 0) throw Error(ErrorCode::TypicalityExhausted, "cannot place separator vertex " + std::to_string(v));
        image[v] = pick;
        used.set(static_cast<std::size_t>(pick));
    }

    std::vector<std::size_t> subtree_order(dec.trees.size());
    std::iota(subtree_order.begin(), subtree_order.end(), std::size_t{0});
    std::stable_sort(subtree_order.begin(), subtree_order.end(), [&](std::size_t a, std::size_t b) {
        return tree.depth(dec.trees[a].root) < tree.depth(dec.trees[b].root);
    });

    const WalkEmbedParams params{cfg.epsilon, host.density, false};
    for (std::size_t si : subtree_order) {
        const Vertex rs = dec.trees[si].root;
        const Edge target = report.matching.edges[report.plan.assignment[si]];
        const Vertex w = image[tree.parent(rs)];
        const int cw = host.cluster_of(w);
        const bool rs_source = tree.is_source(rs);

        // Local copy of the piece rooted at rs.
        const std::vector<Vertex>& verts = members[si];
        std::vector<int> local(static_cast<std::size_t>(tn), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        std::vector<int> parent(verts.size(), -1);
        std::vector<EdgeDir> dir(verts.size(), EdgeDir::toward_parent);
        for (std::size_t i = 1; i < verts.size(); ++i) {
            parent[i] = local[tree.parent(verts[i])];
            dir[i] = tree.dir(verts[i]);
        }
        const RootedAntiTree part(static_cast<int>(verts.size()), 0, parent, dir);

        std::vector<std::pair<std::size_t, Vertex>> starts;
        const Bitset& nbr_clusters = rs_source ? r.in_neighbours(cw) : r.out_neighbours(cw);
        std::vector<std::vector<Vertex>> walks(static_cast<std::size_t>(r.order()));
        nbr_clusters.for_each([&](std::size_t c) {
            walks[c] = walk_to_edge(r, static_cast<Vertex>(c), rs_source, target);
            if (!walks[c].empty() && static_cast<int>(walks[c].size()) - 1 <= h)
                starts.push_back({walks[c].size(), static_cast<Vertex>(c)});
        });
        std::sort(starts.begin(), starts.end());
        if (starts.empty())
            throw Error(ErrorCode::BudgetExceeded, "no antiwalk of at most " + std::to_string(h) +
                                                       " edges reaches the assigned antimatching edge");

        bool placed = false;
        std::string last_error;
        for (const auto& [len, c] : starts) {
            AntiwalkPlan plan;
            plan.walk = walks[c];
            while (static_cast<int>(plan.walk.size()) - 1 < h) plan.walk.push_back(plan.walk[plan.walk.size() - 2]);
            for (Vertex q : plan.walk) plan.z_sets.push_back(slice(q, true));
            plan.x_prev = slice(plan.walk[h - 1], false);
            plan.x_last = slice(plan.walk[h], false);
            try {
                const EmbeddingMap part_map = embed_along_antiwalk(host, plan, part, params, &used, w, rs_source);
                for (std::size_t i = 0; i < verts.size(); ++i) {
                    image[verts[i]] = part_map.image[i];
                    used.set(static_cast<std::size_t>(part_map.image[i]));
                }
                placed = true;
                break;
            } catch (const Error& ex) {
                if (ex.code() != ErrorCode::TypicalityExhausted) throw;
                last_error = ex.what();
            }
        }
        if (!placed) throw Error(ErrorCode::TypicalityExhausted, last_error);
    }

    report.map.image = image;
    if (!is_embedding(tree.to_graph(), host.graph, report.map))
        throw Error(ErrorCode::ConsistencyMismatch, "assembled map is not an embedding");
    if (!cfg.v_star.empty() && !vstar.test(static_cast<std::size_t>(image[cfg.x])))
        throw Error(ErrorCode::ConsistencyMismatch, "pinned vertex left V*");
    return report;
}

std::optional<EmbeddingMap> embed_antisubdivision(const AntiSubdivisionSpec& spec, const OrientedGraph& host) {
    const AntiSubdivision sub = build_antisubdivision(spec);
    return embed_exact(sub.pattern, host);
}

namespace {

struct CutPath {
    Vertex y;      // kept end before the cut
    Vertex gap_a;  // removed
    Vertex gap_b;  // removed
    Vertex y2;     // kept end after the cut
};

}  // namespace

std::optional<EmbeddingMap> embed_antisubdivision_by_restoration(const AntiSubdivisionSpec& spec,
                                                                 const OrientedGraph& host) {
    const AntiSubdivision sub = build_antisubdivision(spec);
    if (!sub.is_long) throw Error(ErrorCode::InvalidArgument, "restoration needs a long antisubdivision");
    const int h = spec.h;
    const OrientedGraph& pat = sub.pattern;

    // Short pairs form a forest; long pairs join it up to a spanning tree and
    // the rest are cut in the middle.
    std::vector<int> dsu(static_cast<std::size_t>(h));
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    std::vector<CutPath> cuts;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                const int idx = pair_index(h, i, j);
                const bool short_pair = spec.lengths[idx] < 3;
                if (short_pair != (pass == 0)) continue;
                const int a = find(i);
                const int b = find(j);
                if (a != b) {
                    dsu[a] = b;
                    continue;
                }
                const auto& path = sub.paths[idx];
                const int len = static_cast<int>(path.size()) - 1;
                const int c = (len - 1) / 2;
                cuts.push_back({path[c - 1], path[c], path[c + 1], path[c + 2]});
            }

    std::vector<char> removed(static_cast<std::size_t>(pat.order()), 0);
    for (const CutPath& cp : cuts) removed[cp.gap_a] = removed[cp.gap_b] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < pat.order(); ++v)
        if (!removed[v]) keep.push_back(v);
    const OrientedGraph tree = pat.induced(keep);

    // Host row that a vertex adjacent to `known` must lie in, following the
    // pattern edge between `known` and `fresh`.
    auto row = [&](Vertex known, Vertex fresh, Vertex known_image) -> const Bitset& {
        return pat.has_edge(known, fresh) ? host.out_neighbours(known_image) : host.in_neighbours(known_image);
    };

    std::optional<EmbeddingMap> result;
    long long budget = 100000;
    for_each_embedding(tree, host, std::nullopt, [&](const EmbeddingMap& tm) {
        std::vector<Vertex> image(static_cast<std::size_t>(pat.order()), -1);
        Bitset used(static_cast<std::size_t>(host.order()));
        for (std::size_t i = 0; i < keep.size(); ++i) {
            image[keep[i]] = tm.image[i];
            used.set(static_cast<std::size_t>(tm.image[i]));
        }
        std::function<bool(std::size_t)> restore = [&](std::size_t k) {
            if (k == cuts.size()) return true;
            const CutPath& cp = cuts[k];
            Bitset first = row(cp.y, cp.gap_a, image[cp.y]);
            first.subtract(used);
            for (std::size_t u = first.find_first(); u != Bitset::npos; u = first.find_next(u)) {
                Bitset second = row(cp.gap_a, cp.gap_b, static_cast<Vertex>(u));
                second &= row(cp.y2, cp.gap_b, image[cp.y2]);
                second.subtract(used);
                second.reset(u);
                for (std::size_t u2 = second.find_first(); u2 != Bitset::npos; u2 = second.find_next(u2)) {
                    image[cp.gap_a] = static_cast<Vertex>(u);
                    image[cp.gap_b] = static_cast<Vertex>(u2);
                    used.set(u);
                    used.set(u2);
                    if (restore(k + 1)) return true;
                    used.reset(u);
                    used.reset(u2);
                }
            }
            return false;
        };
        if (restore(0)) {
            result = EmbeddingMap{image};
            return false;
        }
        return --budget > 0;
    });
    return result;
}

}  // namespace antikit
