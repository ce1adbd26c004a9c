#include <cmath>
#include <random>

#include <doctest.h>

#include "antikit/antitree.hpp"
#include "antikit/enumerate.hpp"
#include "antikit/packing.hpp"
#include "antikit/tree_decomp.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace antikit;
using testing::error_of;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Pairs path_edges(int n) {
    Pairs e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

// Clauses checked from scratch: root in W, trees are the components of
// T - W with their top vertex as root, sizes within beta k, |W| bound.
void check_clauses(int n, const Pairs& edges, const RootedAntiTree& t, const BetaDecomposition& d) {
    std::vector<char> removed(n, 0);
    for (Vertex w : d.w_set) removed[w] = 1;
    CHECK(removed[t.root()]);
    auto comps = oracle::components_without(n, edges, removed);
    std::vector<std::vector<Vertex>> listed;
    for (const Subtree& s : d.trees) {
        listed.push_back(s.vertices);
        Vertex top = s.vertices.front();
        for (Vertex v : s.vertices)
            if (t.depth(v) < t.depth(top)) top = v;
        CHECK(s.root == top);
        CHECK(static_cast<double>(s.vertices.size()) <= d.beta * (n - 1));
    }
    std::sort(comps.begin(), comps.end());
    std::sort(listed.begin(), listed.end());
    CHECK(comps == listed);
    CHECK(static_cast<double>(d.w_set.size()) <= 1.0 / d.beta + 2.0);
}

}  // namespace

TEST_CASE("rooted antitrees") {
    const Pairs star{{0, 1}, {0, 2}, {0, 3}};
    const auto t = RootedAntiTree::from_undirected(4, star, 0, true);
    CHECK(t.is_source(0));
    for (Vertex v = 1; v < 4; ++v) CHECK(t.is_sink(v));
    CHECK_FALSE(t.balanced());
    CHECK(t.max_degree() == 3);
    CHECK(t.to_graph().size() == 3);
    CHECK(t.to_graph().has_edge(0, 2));
    CHECK(t.reversed().is_sink(0));
    CHECK(is_antidirected(t.to_graph()));

    const auto back = RootedAntiTree::from_graph(t.to_graph(), 2);
    CHECK(back.root() == 2);
    CHECK(back.to_graph() == t.to_graph());
    CHECK(tree_from_json(tree_to_json(t)).to_graph() == t.to_graph());

    // a directed path is not antidirected
    CHECK(error_of([] {
        RootedAntiTree(3, 0, {-1, 0, 1}, {EdgeDir::toward_child, EdgeDir::toward_child, EdgeDir::toward_child});
    }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { RootedAntiTree(2, 0, {-1, -1}, {EdgeDir::toward_child, EdgeDir::toward_child}); }) ==
          ErrorCode::InvalidArgument);
    CHECK(error_of([&] { RootedAntiTree::from_graph(testing::G(3, {{0, 1}, {1, 2}}), 0); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("beta_decompose examples") {
    const Pairs star{{0, 1}, {0, 2}, {0, 3}};
    const auto t = RootedAntiTree::from_undirected(4, star, 0, true);
    const auto d = beta_decompose(t, 0.9);
    CHECK(d.w_set == std::vector<Vertex>{0});
    REQUIRE(d.trees.size() == 3);
    for (const Subtree& s : d.trees) CHECK(s.vertices.size() == 1);

    const auto path = RootedAntiTree::from_undirected(9, path_edges(9), 0, true);
    const auto dp = beta_decompose(path, 0.5);
    CHECK(is_beta_decomposition(path, dp));
    for (const Subtree& s : dp.trees) CHECK(s.vertices.size() <= 4);
    CHECK(dp.w_set.size() <= 4);

    // A single edge has k = 1, so no component of size 1 fits under beta k:
    // both ends go to W.
    const auto edge = RootedAntiTree::from_undirected(2, Pairs{{0, 1}}, 0, true);
    for (double beta : {0.1, 0.5, 0.9}) {
        const auto de = beta_decompose(edge, beta);
        CHECK(de.w_set == std::vector<Vertex>{0, 1});
        CHECK(de.trees.empty());
        CHECK(is_beta_decomposition(edge, de));
    }

    CHECK(error_of([&] { beta_decompose(t, 0.0); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([&] { beta_decompose(t, 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("is_beta_decomposition rejects broken decompositions") {
    const auto path = RootedAntiTree::from_undirected(9, path_edges(9), 0, true);
    auto d = beta_decompose(path, 0.5);
    std::string why;

    auto no_root = d;
    no_root.w_set.erase(no_root.w_set.begin());
    CHECK_FALSE(is_beta_decomposition(path, no_root, &why));
    CHECK(why.rfind("(i)", 0) == 0);

    BetaDecomposition coarse;
    coarse.beta = 0.5;
    coarse.w_set = {0};
    coarse.trees = {{1, {1, 2, 3, 4, 5, 6, 7, 8}}};
    CHECK_FALSE(is_beta_decomposition(path, coarse, &why));
    CHECK(why.rfind("(iii)", 0) == 0);

    BetaDecomposition all_w;
    all_w.beta = 0.5;
    for (Vertex v = 0; v < 9; ++v) all_w.w_set.push_back(v);
    CHECK_FALSE(is_beta_decomposition(path, all_w, &why));
    CHECK(why.rfind("(iv)", 0) == 0);

    BetaDecomposition split;
    split.beta = 0.5;
    split.w_set = {0, 5};
    split.trees = {{1, {1, 2}}, {3, {3, 4}}, {6, {6, 7, 8}}};
    CHECK_FALSE(is_beta_decomposition(path, split, &why));
    CHECK(why.rfind("(ii)", 0) == 0);
}

TEST_CASE("beta_decompose on random trees") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 199);
        const auto edges = random_tree_edges(n, rng);
        const auto t = RootedAntiTree::from_undirected(n, edges, static_cast<Vertex>(rng() % n), rng() % 2 == 0);
        for (double beta : {0.1, 0.25, 0.5}) {
            const auto d = beta_decompose(t, beta);
            std::string why;
            CHECK_MESSAGE(is_beta_decomposition(t, d, &why), why);
            check_clauses(n, edges, t, d);
        }
    }
}

TEST_CASE("shaved counts") {
    // j beyond every subtree depth leaves only W
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 60);
        const auto edges = random_tree_edges(n, rng);
        const auto t = RootedAntiTree::from_undirected(n, edges, 0, true);
        const auto d = beta_decompose(t, 0.25);
        const auto c = shaved_counts(t, d, n + 1);
        long long p = 0;
        long long q = 0;
        for (Vertex w : d.w_set) (t.is_sink(w) ? p : q) += 1;
        CHECK(c.p == p);
        CHECK(c.q == q);
        for (int j = 1; j <= 4; ++j) {
            const auto cj = shaved_counts(t, d, j);
            CHECK(cj.p >= 0);
            CHECK(cj.q >= 0);
            CHECK(cj.p + cj.q <= n);
        }
    }

    // single edge with W = {root} and the leaf as its own subtree
    const auto edge = RootedAntiTree::from_undirected(2, Pairs{{0, 1}}, 0, true);
    BetaDecomposition d;
    d.w_set = {0};
    d.trees = {{1, {1}}};
    const auto c = shaved_counts(edge, d, 1);
    CHECK(c.p + c.q == 1);
    CHECK(c.q == 1);

    CHECK(error_of([&] { shaved_counts(edge, d, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("shaved balance on a long antipath") {
    const int k = 64;
    const double beta = 0.25;
    const double alpha = 4.0 * 8.0 / (beta * k);
    const auto t = RootedAntiTree::from_undirected(k + 1, path_edges(k + 1), 0, true);
    const auto d = beta_decompose(t, beta);
    CHECK(2.0 <= std::pow(alpha * beta * k / 8.0, 1.0 / 2.0));
    const auto c = shaved_counts(t, d, 1);
    CHECK((1 - alpha) * c.p <= c.q);
    CHECK(c.q <= (1 + alpha) * c.p);
}

TEST_CASE("shaved balance on random balanced trees of small degree") {
    // Degree hypothesis: max degree <= (alpha beta k / 8)^(1 / (j + 1)).
    std::mt19937_64 rng(99);
    const double beta = 0.25;
    const int j = 1;
    const double alpha = 0.5;
    int tested = 0;
    for (int iter = 0; iter < 5000 && tested < 40; ++iter) {
        const int n = 600 + 2 * static_cast<int>(rng() % 300);
        Pairs edges;
        std::vector<int> deg(n, 0);
        std::vector<int> open{0};
        for (int v = 1; v < n; ++v) {
            const std::size_t i = rng() % open.size();
            const int u = open[i];
            edges.emplace_back(u, v);
            if (++deg[u] == 3) open.erase(open.begin() + static_cast<long>(i));
            ++deg[v];
            open.push_back(v);
        }
        const auto t = RootedAntiTree::from_undirected(n, edges, 0, true);
        if (!t.balanced()) continue;
        REQUIRE(t.max_degree() <= std::pow(alpha * beta * (n - 1) / 8.0, 1.0 / (j + 1)));
        ++tested;
        const auto c = shaved_counts(t, beta_decompose(t, beta), j);
        CHECK((1 - alpha) * c.p <= c.q);
        CHECK(c.q <= (1 + alpha) * c.p);
    }
    CHECK(tested > 10);
}

TEST_CASE("pack examples") {
    PackingInstance one{{{1, 1}}, 100, 1, 0.05};
    const auto plan = pack(one);
    CHECK(plan.assignment == std::vector<int>{0});
    CHECK(plan_feasible(one, plan));
    const auto exact = oracle_pack(one);
    REQUIRE(exact);
    CHECK(exact->assignment == plan.assignment);

    PackingInstance two;
    two.m = 100;
    two.t = 2;
    two.alpha = 0.05;
    for (int i = 0; i < 30; ++i) two.items.push_back({2, 1});
    for (int i = 0; i < 30; ++i) two.items.push_back({1, 2});
    CHECK_FALSE(violated_hypothesis(two));
    const auto p2 = pack(two);
    CHECK(plan_feasible(two, p2));
    long long sp[2] = {0, 0};
    long long sq[2] = {0, 0};
    for (std::size_t i = 0; i < two.items.size(); ++i) {
        sp[p2.assignment[i]] += two.items[i].p;
        sq[p2.assignment[i]] += two.items[i].q;
    }
    for (int b = 0; b < 2; ++b) {
        CHECK(sp[b] <= 65);
        CHECK(sq[b] <= 65);
    }

    PackingInstance big{{{3, 3}}, 100, 1, 0.05};
    try {
        pack(big);
        FAIL("expected HypothesisViolated");
    } catch (const HypothesisViolated& e) {
        CHECK(e.clause() == 'b');
        CHECK(e.code() == ErrorCode::HypothesisViolated);
    }
    PackingInstance skew{{{4, 0}}, 100, 1, 0.05};
    CHECK(violated_hypothesis(skew) == 'a');
    PackingInstance full;
    full.m = 100;
    full.t = 1;
    full.alpha = 0.04;
    for (int i = 0; i < 11; ++i) full.items.push_back({5, 0}), full.items.push_back({0, 5});
    CHECK(violated_hypothesis(full) == 'b');
    full.alpha = 0.06;
    CHECK(violated_hypothesis(full) == 'c');
}

TEST_CASE("oracle_pack examples") {
    // one item bigger than a bin can hold: infeasible
    PackingInstance huge{{{90, 0}}, 100, 1, 0.05};
    CHECK_FALSE(oracle_pack(huge));
    PackOptions loose;
    loose.check_hypotheses = false;
    CHECK(error_of([&] { pack(huge, loose); }) == ErrorCode::PackingFailed);

    PackingInstance many;
    many.m = 100;
    many.t = 1;
    for (int i = 0; i < 13; ++i) many.items.push_back({1, 1});
    CHECK(error_of([&] { oracle_pack(many); }) == ErrorCode::TooLargeForOracle);
    many.items.resize(2);
    many.t = 4;
    CHECK(error_of([&] { oracle_pack(many); }) == ErrorCode::TooLargeForOracle);
}

TEST_CASE("pack on random hypothesis-satisfying instances") {
    std::mt19937_64 rng(31);
    int tested = 0;
    int small = 0;
    for (int iter = 0; tested < 300 && iter < 100000; ++iter) {
        PackingInstance inst;
        inst.alpha = std::vector<double>{0.01, 0.02, 0.05}[rng() % 3];
        inst.t = 1 + static_cast<int>(rng() % 3);
        inst.m = 100 + static_cast<long long>(rng() % 2000);
        const auto cap = static_cast<long long>(inst.alpha * inst.m);
        if (cap < 1) continue;
        const int count = 1 + static_cast<int>(rng() % (rng() % 2 ? 12 : 80));
        for (int i = 0; i < count; ++i) {
            const long long s = static_cast<long long>(rng() % (cap + 1));
            const long long p = static_cast<long long>(rng() % (s + 1));
            inst.items.push_back({p, s - p});
        }
        if (violated_hypothesis(inst)) continue;
        ++tested;
        const auto plan = pack(inst);
        CHECK(plan.assignment.size() == inst.items.size());
        CHECK(plan_feasible(inst, plan));
        if (inst.items.size() <= 12) {
            ++small;
            CHECK(oracle_pack(inst).has_value());
        }
    }
    CHECK(tested == 300);
    CHECK(small > 20);
}

TEST_CASE("pack off hypothesis never returns an infeasible plan") {
    std::mt19937_64 rng(37);
    PackOptions loose;
    loose.check_hypotheses = false;
    for (int iter = 0; iter < 500; ++iter) {
        PackingInstance inst;
        inst.alpha = 0.05;
        inst.t = 1 + static_cast<int>(rng() % 3);
        inst.m = 50 + static_cast<long long>(rng() % 100);
        const int count = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < count; ++i)
            inst.items.push_back({static_cast<long long>(rng() % 30), static_cast<long long>(rng() % 30)});
        const auto exact = oracle_pack(inst);
        try {
            const auto plan = pack(inst, loose);
            CHECK(plan_feasible(inst, plan));
            CHECK(exact.has_value());
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PackingFailed);
            CHECK_FALSE(exact.has_value());
        }
    }
}

TEST_CASE("packing json") {
    PackingInstance inst{{{1, 2}, {3, 4}}, 100, 2, 0.05};
    const auto back = packing_instance_from_json(packing_instance_to_json(inst));
    CHECK(back.m == 100);
    CHECK(back.t == 2);
    REQUIRE(back.items.size() == 2);
    CHECK(back.items[1].q == 4);
}
