#include <numeric>
#include <random>
#include <set>

#include <doctest.h>

#include "antikit/embed.hpp"
#include "antikit/enumerate.hpp"
#include "antikit/gadgets.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace antikit;
using testing::error_of;
using testing::G;

namespace {

bool all_degrees(const Digraph& g, int out, int in) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.out_degree(v) != out || g.in_degree(v) != in) return false;
    return true;
}

std::set<std::pair<Vertex, Vertex>> peeled_edges(const PeelResult& r) {
    std::set<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : r.graph.edges()) out.insert({r.origin[e.from], r.origin[e.to]});
    return out;
}

OrientedGraph drop_isolated(const OrientedGraph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.out_degree(v) + g.in_degree(v) > 0) keep.push_back(v);
    return g.induced(keep);
}

}  // namespace

TEST_CASE("blowup examples") {
    const auto tri = directed_triangle();
    CHECK(blowup(tri, 1) == tri);
    const auto b2 = blowup(tri, 2);
    CHECK(b2.order() == 6);
    CHECK(b2.size() == 12);
    CHECK(degree_profile(b2).min_semidegree == 2);
    const auto k33 = blowup(G(2, {{0, 1}}), 3);
    CHECK(k33.order() == 6);
    CHECK(k33.size() == 9);
    CHECK(degree_profile(k33).min_semidegree == 0);
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b) CHECK(k33.has_edge(a, b));
    CHECK(error_of([&] { blowup(tri, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("blowup scales semidegree and edge count") {
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 60; ++iter) {
        const auto g = random_oriented(1 + static_cast<int>(rng() % 7), 0.6, rng);
        const int ell = 1 + static_cast<int>(rng() % 4);
        const auto b = blowup(g, ell);
        CHECK(degree_profile(b).min_semidegree == ell * degree_profile(g).min_semidegree);
        CHECK(b.size() == g.size() * ell * ell);
        CHECK(b.order() == g.order() * ell);
    }
}

TEST_CASE("burr_graph") {
    const auto b4 = burr_graph(4);
    CHECK(b4.order() == 4);
    CHECK(b4.size() == 4);
    CHECK(all_degrees(b4, 1, 1));
    const auto b6 = burr_graph(6);
    CHECK(b6.order() == 8);
    CHECK(b6.size() == 16);
    CHECK(degree_profile(b6).min_semidegree == 2);
    CHECK(all_degrees(b6, 2, 2));
    // bipartite between the parts
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v) {
            CHECK_FALSE(b6.has_edge(u, v));
            CHECK_FALSE(b6.has_edge(4 + u, 4 + v));
        }
    CHECK(error_of([] { burr_graph(5); }) == ErrorCode::InfeasibleSplit);
    CHECK(error_of([] { burr_graph(3); }) == ErrorCode::InvalidArgument);
    for (int k = 8; k <= 14; k += 2) CHECK(all_degrees(burr_graph(k), (k - 2) / 2, (k - 2) / 2));
}

TEST_CASE("transitive tournament") {
    CHECK(transitive_tournament(3) == G(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(transitive_tournament(2) == G(2, {{0, 1}}));
    const auto t4 = transitive_tournament(4);
    CHECK(t4.size() == 6);
    for (const Edge& e : t4.edges()) CHECK(e.from < e.to);
}

TEST_CASE("antipath, anticycle, star") {
    const auto p = antipath(4);
    CHECK(p.order() == 5);
    CHECK(p.has_edge(0, 1));
    CHECK(p.has_edge(2, 1));
    CHECK(is_antidirected(p));
    CHECK(antipath(3, false).has_edge(1, 0));
    const auto c = anticycle(6);
    CHECK(c.size() == 6);
    CHECK(is_antidirected(c));
    CHECK(c.in_degree(0) == 0);
    CHECK(error_of([] { anticycle(5); }) == ErrorCode::InvalidArgument);
    CHECK(antidirected_star(3, true).out_degree(0) == 3);
    CHECK(antidirected_star(3, false).in_degree(0) == 3);
}

TEST_CASE("antisubdivision examples") {
    CHECK(pair_index(3, 0, 1) == 0);
    CHECK(pair_index(3, 0, 2) == 1);
    CHECK(pair_index(3, 1, 2) == 2);

    AntiSubdivisionSpec c6{3, {1, 2, 3}, std::nullopt};
    const auto s = build_antisubdivision(c6);
    CHECK(s.is_long);
    CHECK(is_long(c6));
    CHECK(s.pattern.order() == 6);
    CHECK(s.pattern.size() == 6);
    CHECK(is_antidirected(s.pattern));
    CHECK(is_weakly_connected(s.pattern));
    for (Vertex v = 0; v < 6; ++v) CHECK(s.pattern.out_degree(v) + s.pattern.in_degree(v) == 2);
    CHECK(s.branch == std::vector<Vertex>{0, 1, 2});
    REQUIRE(s.paths.size() == 3);
    CHECK(s.paths[2].size() == 4);
    CHECK(c6.total_edges() == 6);

    AntiSubdivisionSpec even{3, {2, 2, 2}, std::nullopt};
    const auto t = build_antisubdivision(even);
    CHECK_FALSE(t.is_long);
    CHECK(t.pattern.size() == 6);
    CHECK(is_antidirected(t.pattern));

    AntiSubdivisionSpec five{2, {5}, std::nullopt};
    const auto p = build_antisubdivision(five);
    CHECK(p.pattern.order() == 6);
    CHECK(p.pattern.size() == 5);
    CHECK(is_antidirected(p.pattern));
    CHECK(longest_antipath(p.pattern) == 6);

    CHECK(error_of([] { build_antisubdivision({3, {1, 1, 1}, std::nullopt}); }) == ErrorCode::NotRealizable);
    CHECK(error_of([] { build_antisubdivision({3, {1, 2}, std::nullopt}); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { build_antisubdivision({2, {0}, std::nullopt}); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { build_antisubdivision({2, {2}, std::vector<bool>{true, false}}); }) ==
          ErrorCode::NotRealizable);
}

TEST_CASE("long means the short pairs form a forest") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        const int h = 2 + static_cast<int>(rng() % 4);
        AntiSubdivisionSpec spec;
        spec.h = h;
        for (int i = 0; i < h * (h - 1) / 2; ++i) spec.lengths.push_back(1 + static_cast<int>(rng() % 4));
        // forest test by edge counting on each component
        std::vector<int> comp(h);
        std::iota(comp.begin(), comp.end(), 0);
        bool cycle = false;
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                if (spec.lengths[pair_index(h, i, j)] >= 3) continue;
                const int a = comp[i];
                const int b = comp[j];
                if (a == b) cycle = true;
                for (int& c : comp)
                    if (c == b) c = a;
            }
        CHECK(is_long(spec) == !cycle);
        try {
            const auto s = build_antisubdivision(spec);
            CHECK(is_antidirected(s.pattern));
            CHECK(static_cast<int>(s.pattern.size()) == spec.total_edges());
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotRealizable);
        }
    }
}

TEST_CASE("peel examples") {
    const auto tt = transitive_tournament(3);
    const auto r1 = peel_pseudo(tt, 1);
    CHECK(r1.graph == static_cast<const Digraph&>(tt));
    CHECK(r1.origin == std::vector<Vertex>{0, 1, 2});

    const auto tri = directed_triangle();
    CHECK(peel_pseudo(tri, 1).graph.size() == 3);
    CHECK(peel_pseudo(tri, 2).graph.size() == 3);
    CHECK(peel_pseudo(tri, 3).graph.size() == 0);

    const auto b3 = blowup(tri, 3);
    CHECK(b3.size() > 2u * 9u);
    const auto r3 = peel_pseudo(b3, 3);
    CHECK(r3.graph == static_cast<const Digraph&>(b3));
    CHECK(2 * degree_profile(r3.graph).min_pseudo_semidegree >= 3);

    // 2-cycles are fine in the digraph input
    const auto two = testing::D(2, {{0, 1}, {1, 0}});
    CHECK(peel_pseudo(two, 2).graph.size() == 2);
    CHECK(error_of([&] { peel_pseudo(tri, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("peel agrees with the fixpoint oracle") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 25);
        const auto g = random_digraph(n, 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
        const int k = 1 + static_cast<int>(rng() % 8);
        const auto r = peel_pseudo(g, k);
        CHECK(peeled_edges(r) == oracle::peel(g, k));
        if (r.graph.size() > 0) CHECK(2 * degree_profile(r.graph).min_pseudo_semidegree >= k);
        for (Vertex v = 0; v < r.graph.order(); ++v) CHECK(r.graph.out_degree(v) + r.graph.in_degree(v) > 0);
        if (static_cast<long long>(g.size()) > static_cast<long long>(k - 1) * n) CHECK(r.graph.size() > 0);
    }
}

TEST_CASE("four_copy on a single edge") {
    const auto g = four_copy(G(2, {{0, 1}}));
    CHECK(g.graph.order() == 4);
    CHECK(g.graph.size() == 4);
    CHECK(all_degrees(g.graph, 1, 1));
    CHECK(is_weakly_connected(g.graph));
    std::multiset<std::string> tags;
    for (CopyTag t : g.map.copy_of) tags.insert(std::string(to_string(t)));
    CHECK(tags == std::multiset<std::string>{"A12", "A34", "B14", "B23"});
    REQUIRE(g.v_star.size() == 1);
    CHECK(g.map.copy_of[g.v_star[0]] == CopyTag::A12);
    CHECK_FALSE(g.map.reversed);

    CHECK(error_of([] { four_copy(G(3, {})); }) == ErrorCode::EmptyInput);
    CHECK(error_of([] { four_copy(G(3, {{0, 1}})); }) == ErrorCode::InvalidArgument);

    const auto j = gadget_map_to_json(g);
    CHECK(j.at("copy_of").size() == 4);
    CHECK(j.at("reversed") == false);
}

TEST_CASE("four_copy reverses when sinks outnumber sources") {
    const auto g = four_copy(G(3, {{0, 1}, {0, 2}}));
    CHECK(g.map.reversed);
    CHECK(degree_profile(g.graph).min_semidegree >= 1);
}

TEST_CASE("four_copy structure on random peeled graphs") {
    std::mt19937_64 rng(41);
    int tested = 0;
    for (int iter = 0; tested < 50 && iter < 5000; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const auto g = random_oriented(n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
        const int k = 1 + static_cast<int>(rng() % 4);
        const auto peeled = peel_pseudo(g, k);
        if (peeled.graph.size() == 0) continue;
        ++tested;
        const auto d = OrientedGraph::from_digraph(peeled.graph);
        const auto gad = four_copy(d);
        const int ell = degree_profile(d).min_pseudo_semidegree;
        CHECK(degree_profile(gad.graph).min_semidegree >= ell);
        const auto cls = vertex_class(d);
        CHECK(gad.graph.order() ==
              4 * d.order() - 2 * static_cast<int>(cls.v_in.size() + cls.v_out.size()));
        CHECK(gad.graph.size() == 4 * d.size());
        const auto base = gad.map.reversed ? d.reversed() : d;
        for (const Edge& e : gad.graph.edges()) {
            const Vertex a = gad.map.origin[e.from];
            const Vertex b = gad.map.origin[e.to];
            CHECK((base.has_edge(a, b) || base.has_edge(b, a)));
            if (gad.map.in_d1(e.from) && gad.map.in_d1(e.to)) CHECK(base.has_edge(a, b));
        }
        for (Vertex v : gad.v_star) CHECK(gad.map.in_d1(v));
    }
    CHECK(tested == 50);
}

TEST_CASE("pull-back soundness on small instances") {
    std::mt19937_64 rng(43);
    std::vector<OrientedGraph> patterns;
    for (int v = 2; v <= 4; ++v)
        for (const auto& p : connected_antidirected(v)) patterns.push_back(p);
    for (int iter = 0; iter < 40; ++iter) {
        const auto g = drop_isolated(random_oriented(3 + static_cast<int>(rng() % 4), 0.5, rng));
        if (g.size() == 0) continue;
        const auto gad = four_copy(g);
        const auto base = gad.map.reversed ? g.reversed() : g;
        for (const auto& p : patterns)
            for (Vertex x = 0; x < p.order(); ++x) {
                if (p.out_degree(x) == 0) continue;
                for_each_embedding(p, gad.graph, Pin{x, gad.v_star}, [&](const EmbeddingMap& m) {
                    const auto back = pull_back(gad.map, m.image);
                    REQUIRE(back.has_value());
                    CHECK(is_embedding(p, base, EmbeddingMap{*back}));
                    return true;
                });
            }
    }
    CHECK_FALSE(pull_back(four_copy(G(2, {{0, 1}})).map, {0, 1, 2, 3}).has_value());
}
