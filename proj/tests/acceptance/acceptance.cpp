// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "antikit/antimatching.hpp"
#include "antikit/antitree.hpp"
#include "antikit/antiwalk.hpp"
#include "antikit/embed.hpp"
#include "antikit/enumerate.hpp"
#include "antikit/gadgets.hpp"
#include "antikit/harness.hpp"
#include "antikit/packing.hpp"
#include "antikit/tree_decomp.hpp"
#include "oracles.hpp"

using namespace antikit;

namespace {

struct Outcome {
    long long checked = 0;
    long long failures = 0;
    std::string note;

    void expect(bool ok) {
        ++checked;
        if (!ok) ++failures;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

OrientedGraph drop_isolated(const OrientedGraph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.out_degree(v) + g.in_degree(v) > 0) keep.push_back(v);
    return g.induced(keep);
}

// 1. longest antipath of the triangle blow-up is exactly 2 ell
Outcome tightness() {
    Outcome o;
    for (int ell = 1; ell <= 3; ++ell) {
        const int got = longest_antipath(blowup(directed_triangle(), ell));
        o.expect(got == 2 * ell);
        o.note += "ell=" + std::to_string(ell) + ":" + std::to_string(got) + " ";
    }
    return o;
}

// 2 and 3. every labeled graph n <= 5, every anchor, every t <= min semidegree
Outcome antimatching_sweep(bool bounded) {
    Outcome o;
    for (int n = 1; n <= 5; ++n)
        enumerate_oriented(n, [&](const OrientedGraph& g) {
            const int delta = degree_profile(g).min_semidegree;
            for (Vertex w = 0; w < n; ++w)
                for (int t = 1; t <= delta; ++t) {
                    try {
                        const AntimatchingRequest req{t, w, std::nullopt};
                        const auto m = bounded ? find_bounded_antimatching(g, req) : find_antimatching(g, req);
                        bool ok = static_cast<int>(m.size()) == t && m.anchor() == w && is_connected_antimatching(g, m);
                        if (bounded) {
                            const auto r = reach_from(g, w);
                            for (const Edge& e : m.edges) ok = ok && r.ood[e.from] && *r.ood[e.from] <= 8 * t;
                        }
                        o.expect(ok);
                    } catch (const Error&) {
                        o.expect(false);
                    }
                }
        });
    return o;
}

void compare_walks(Outcome& o, const OrientedGraph& g) {
    for (Vertex a = 0; a < g.order(); ++a) {
        const auto r = reach_from(g, a);
        const auto w = oracle::walk_distances(g, a);
        o.expect(r.ood == w.ood && r.oid == w.oid);
    }
}

// 4. state-BFS distances against the layered walk oracle
Outcome walk_oracle() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) enumerate_oriented(n, [&](const OrientedGraph& g) { compare_walks(o, g); });
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 30);
        compare_walks(o, random_oriented(n, static_cast<double>(rng() % 1000) / 1000.0 * 0.3, rng));
    }
    return o;
}

// 5. peeling keeps a non-empty graph with every nonzero semidegree >= k/2
Outcome peeling() {
    Outcome o;
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 500) {
        const int n = 2 + static_cast<int>(rng() % 59);
        const int k = 1 + static_cast<int>(rng() % std::max(1, n / 3));
        const double p = std::min(1.0, 2.0 * (k - 1) / (n - 1) + 0.02 + 0.2 * static_cast<double>(rng() % 100) / 100.0);
        const Digraph g = random_digraph(n, p, rng);
        if (static_cast<long long>(g.size()) <= static_cast<long long>(k - 1) * n) continue;
        ++done;
        const auto r = peel_pseudo(g, k);
        bool ok = r.graph.size() > 0;
        for (Vertex v = 0; v < r.graph.order(); ++v)
            for (int d : {r.graph.out_degree(v), r.graph.in_degree(v)}) ok = ok && (d == 0 || 2 * d >= k);
        for (const Edge& e : r.graph.edges()) ok = ok && g.has_edge(r.origin[e.from], r.origin[e.to]);
        o.expect(ok);
    }
    return o;
}

// 6. embeddings pinned into v_star stay in D1 and pull back to d'
Outcome pullback() {
    Outcome o;
    std::vector<std::vector<OrientedGraph>> patterns(7);
    for (int v = 2; v <= 6; ++v) patterns[v] = connected_antidirected(v);
    std::mt19937_64 rng(6);
    long long embeddings = 0;
    int pairs = 0;
    while (pairs < 100) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const auto d = drop_isolated(random_oriented(n, 0.2 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng));
        if (d.size() == 0) continue;
        const int pn = 2 + static_cast<int>(rng() % 5);
        const auto& pattern = patterns[pn][rng() % patterns[pn].size()];
        ++pairs;
        const auto gad = four_copy(d);
        const auto base = gad.map.reversed ? d.reversed() : d;
        for (Vertex x = 0; x < pattern.order(); ++x) {
            if (pattern.out_degree(x) == 0) continue;
            bool any = false;
            for_each_embedding(pattern, gad.graph, Pin{x, gad.v_star}, [&](const EmbeddingMap& m) {
                ++embeddings;
                any = true;
                bool ok = true;
                for (Vertex v : m.image) ok = ok && gad.map.in_d1(v);
                const auto back = pull_back(gad.map, m.image);
                ok = ok && back && is_embedding(pattern, base, EmbeddingMap{*back});
                o.expect(ok);
                return true;
            });
            // containment in the gadget implies containment in d'
            if (any) o.expect(embed_exact(pattern, base).has_value());
        }
    }
    o.note = std::to_string(embeddings) + " embeddings";
    return o;
}

// 7. beta-decompositions of random trees, clauses checked from scratch
Outcome decomposition() {
    Outcome o;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 199);
        const auto edges = random_tree_edges(n, rng);
        const auto t = RootedAntiTree::from_undirected(n, edges, static_cast<Vertex>(rng() % n), rng() % 2 == 0);
        for (double beta : {0.1, 0.25, 0.5}) {
            const auto d = beta_decompose(t, beta);
            bool ok = is_beta_decomposition(t, d);
            std::vector<char> removed(n, 0);
            for (Vertex w : d.w_set) removed[w] = 1;
            ok = ok && removed[t.root()];
            auto comps = oracle::components_without(n, edges, removed);
            std::vector<std::vector<Vertex>> listed;
            for (const Subtree& s : d.trees) {
                Vertex top = s.vertices.front();
                for (Vertex v : s.vertices)
                    if (t.depth(v) < t.depth(top)) top = v;
                ok = ok && s.root == top && static_cast<double>(s.vertices.size()) <= beta * (n - 1);
                listed.push_back(s.vertices);
            }
            std::sort(comps.begin(), comps.end());
            std::sort(listed.begin(), listed.end());
            ok = ok && comps == listed && static_cast<double>(d.w_set.size()) <= 1.0 / beta + 2.0;
            o.expect(ok);
        }
    }
    return o;
}

// 8. packer on hypothesis-satisfying instances, oracle agreement on small ones
Outcome packing() {
    Outcome o;
    std::mt19937_64 rng(8);
    int on = 0;
    int small = 0;
    while (on < 200) {
        PackingInstance inst;
        inst.alpha = std::vector<double>{0.01, 0.02, 0.04}[rng() % 3];
        inst.t = 1 + static_cast<int>(rng() % 3);
        inst.m = 100 + static_cast<long long>(rng() % 3000);
        const auto cap = static_cast<long long>(inst.alpha * inst.m);
        if (cap < 1) continue;
        const int count = 1 + static_cast<int>(rng() % (rng() % 2 ? 12 : 100));
        for (int i = 0; i < count; ++i) {
            const long long s = static_cast<long long>(rng() % (cap + 1));
            const long long p = static_cast<long long>(rng() % (s + 1));
            inst.items.push_back({p, s - p});
        }
        if (violated_hypothesis(inst)) continue;
        ++on;
        bool ok = false;
        try {
            ok = plan_feasible(inst, pack(inst));
        } catch (const Error&) {
        }
        if (inst.items.size() <= 12) {
            ++small;
            ok = ok && oracle_pack(inst).has_value();
        }
        o.expect(ok);
    }
    // small instances off the hypotheses: success must match the oracle
    PackOptions loose;
    loose.check_hypotheses = false;
    for (int i = 0; i < 300; ++i) {
        PackingInstance inst;
        inst.alpha = 0.02;
        inst.t = 1 + static_cast<int>(rng() % 3);
        inst.m = 50 + static_cast<long long>(rng() % 400);
        const int count = 1 + static_cast<int>(rng() % 12);
        for (int j = 0; j < count; ++j)
            inst.items.push_back({static_cast<long long>(rng() % 40), static_cast<long long>(rng() % 40)});
        bool packed = false;
        try {
            packed = plan_feasible(inst, pack(inst, loose));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PackingFailed) {
                o.expect(false);
                continue;
            }
        }
        o.expect(packed == oracle_pack(inst).has_value());
        ++small;
    }
    o.note = std::to_string(small) + " oracle comparisons";
    return o;
}

// 9. exact embedder against naive injective maps
Outcome embedder() {
    Outcome o;
    std::vector<OrientedGraph> patterns;
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : oriented_classes(n)) patterns.push_back(p);
    auto check_host = [&](const OrientedGraph& host) {
        for (const auto& p : patterns) {
            const auto m = embed_exact(p, host);
            const bool naive = oracle::embeds(p, host);
            o.expect(m.has_value() == naive && (!m || is_embedding(p, host, *m)));
        }
    };
    for (int n = 1; n <= 5; ++n) enumerate_oriented(n, check_host);
    for (const auto& host : oriented_classes(6)) check_host(host);
    o.note = std::to_string(patterns.size()) + " patterns";
    return o;
}

// 10. path statement at n = 4 over all labeled hosts
Outcome path_check() {
    Outcome o;
    VerificationJob job;
    job.statement = Statement::path_conjecture;
    job.n_range = {4};
    const auto r = run(job);
    o.checked = r.instances_checked;
    o.failures = r.counterexample_total;
    if (o.checked == 0) o.failures = 1;
    return o;
}

struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> body;
    double limit_s;  // 0: no limit
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "blow-up tightness", tightness, 10},
        {"AC2", "antimatching sweep", [] { return antimatching_sweep(false); }, 300},
        {"AC3", "bounded antimatching sweep", [] { return antimatching_sweep(true); }, 0},
        {"AC4", "antiwalk oracle equivalence", walk_oracle, 0},
        {"AC5", "peeling", peeling, 0},
        {"AC6", "four-copy pull-back", pullback, 0},
        {"AC7", "beta-decomposition", decomposition, 0},
        {"AC8", "packer", packing, 0},
        {"AC9", "embedder oracle equivalence", embedder, 0},
        {"AC10", "path statement n=4", path_check, 120},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            error = e.what();
            o.failures = 1;
        }
        const double s = seconds_since(t0);
        const bool slow = c.limit_s > 0 && s >= c.limit_s;
        const bool pass = o.failures == 0 && error.empty() && !slow;
        if (!pass) ++failed;
        std::printf("%-5s %s  %s: %lld checks, %lld failures, %.2f s%s%s%s%s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                    o.checked, o.failures, s, o.note.empty() ? "" : ", ", o.note.c_str(), slow ? ", over time limit" : "",
                    error.empty() ? "" : (", error: " + error).c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
