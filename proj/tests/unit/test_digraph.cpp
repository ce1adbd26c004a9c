#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "antikit/bitset.hpp"
#include "antikit/enumerate.hpp"
#include "antikit/gadgets.hpp"
#include "antikit/graph_io.hpp"
#include "helpers.hpp"

using namespace antikit;
using testing::error_of;
using testing::G;

TEST_CASE("bitset basics") {
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.find_first() == 0);
    CHECK(b.find_next(0) == 64);
    CHECK(b.find_next(64) == 129);
    CHECK(b.find_next(129) == Bitset::npos);
    Bitset c(130);
    c.set_all();
    CHECK(c.count() == 130);
    c.subtract(b);
    CHECK(c.count() == 127);
    CHECK_FALSE(c.intersects(b));
    CHECK(b.to_vector() == std::vector<int>{0, 64, 129});
}

TEST_CASE("validate") {
    const auto tri = G(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.order() == 3);
    CHECK(tri.size() == 3);
    CHECK(error_of([] { G(2, {{0, 1}, {1, 0}}); }) == ErrorCode::TwoCycle);
    CHECK(error_of([] { G(2, {{0, 1}, {0, 1}}); }) == ErrorCode::DuplicateEdge);
    CHECK(error_of([] { G(2, {{1, 1}}); }) == ErrorCode::LoopEdge);
    CHECK(error_of([] { G(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
    CHECK(error_of([] { G(-1, {}); }) == ErrorCode::InvalidArgument);

    try {
        G(3, {{0, 1}, {2, 1}, {1, 0}});
        FAIL("expected TwoCycle");
    } catch (const EdgeError& e) {
        CHECK(e.code() == ErrorCode::TwoCycle);
        CHECK(((e.edge() == Edge{0, 1}) || (e.edge() == Edge{1, 0})));
    }
}

TEST_CASE("degree profile examples") {
    const auto tri = directed_triangle();
    CHECK(degree_profile(tri).min_semidegree == 1);
    CHECK(degree_profile(blowup(tri, 2)).min_semidegree == 2);

    const auto edge = G(2, {{0, 1}});
    const auto p = degree_profile(edge);
    CHECK(p.min_semidegree == 0);
    CHECK(p.min_pseudo_semidegree == 1);
    CHECK(p.edge_count == 1);

    const auto empty = G(4, {});
    CHECK(degree_profile(empty).min_pseudo_semidegree == 0);
    CHECK(degree_profile(G(0, {})).edge_count == 0);

    // out-degrees 2 and 0, in-degrees 1: pseudo = 1
    const auto p2 = degree_profile(G(3, {{0, 1}, {0, 2}}));
    CHECK(p2.min_pseudo_semidegree == 1);
    CHECK(p2.min_out == 0);
    CHECK(p2.min_in == 0);
}

TEST_CASE("is_antidirected examples") {
    CHECK(is_antidirected(G(2, {{0, 1}})));
    CHECK_FALSE(is_antidirected(directed_triangle()));
    CHECK(is_antidirected(G(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}})));
}

TEST_CASE("is_antidirected iff no directed 2-path, all n <= 4") {
    for (int n = 1; n <= 4; ++n)
        enumerate_oriented(n, [&](const OrientedGraph& g) {
            bool two_path = false;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v)
                    for (Vertex w = 0; w < n; ++w)
                        if (g.has_edge(u, v) && g.has_edge(v, w)) two_path = true;
            CHECK(is_antidirected(g) == !two_path);
        });
}

TEST_CASE("degree profile under relabeling and reversal") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto g = random_oriented(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto p = degree_profile(g);
        CHECK(degree_profile(g.permuted(perm)) == p);
        const auto r = degree_profile(g.reversed());
        CHECK(r.min_out == p.min_in);
        CHECK(r.min_in == p.min_out);
        CHECK(r.min_semidegree == p.min_semidegree);
        CHECK(r.min_pseudo_semidegree == p.min_pseudo_semidegree);
        CHECK(g.reversed().reversed() == g);
    }
}

TEST_CASE("pseudo-semidegree against its definition") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto g = random_oriented(n, 0.4, rng);
        int best = 0;
        for (int d = 1; d <= n; ++d) {
            bool ok = true;
            for (Vertex v = 0; v < n; ++v)
                for (int deg : {g.out_degree(v), g.in_degree(v)})
                    if (deg != 0 && deg < d) ok = false;
            if (ok) best = d;
        }
        if (g.size() == 0) best = 0;
        CHECK(degree_profile(g).min_pseudo_semidegree == best);
    }
}

TEST_CASE("oedge text format") {
    const auto tri = directed_triangle();
    const std::string text = write_oedge(tri);
    CHECK(text == "3 3\n0 1\n1 2\n2 0\n");
    CHECK(parse_oedge(text) == tri);
    CHECK(parse_oedge("2 0\n") == G(2, {}));
    CHECK(parse_oedge("2 1\n0 1") == G(2, {{0, 1}}));

    CHECK(error_of([] { parse_oedge(""); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_oedge("2 1\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_oedge("2 1\n0  1\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_oedge("2 1\n0 1\r\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_oedge("2 1\n0 -1\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_oedge("2 1\n0 1\n1 0\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_oedge("2 2\n0 1\n1 0\n"); }) == ErrorCode::TwoCycle);
    CHECK(error_of([] { parse_oedge("2 1\n0 5\n"); }) == ErrorCode::VertexOutOfRange);

    // 2-cycles survive the digraph parser
    CHECK(parse_oedge_digraph("2 2\n0 1\n1 0\n").size() == 2);
}

TEST_CASE("json mirror") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        const auto g = random_oriented(1 + static_cast<int>(rng() % 10), 0.5, rng);
        CHECK(graph_from_json(graph_to_json(g)) == g);
        CHECK(parse_oedge(write_oedge(g)) == g);
    }
    CHECK(graph_to_json(G(2, {{0, 1}})).dump() == R"({"edges":[[0,1]],"n":2})");
    CHECK(error_of([] { graph_from_json(nlohmann::json{{"n", 2}}); }) == ErrorCode::ParseError);
    CHECK(error_of([] { graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0]]})")); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("induced and permuted") {
    const auto g = G(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const std::vector<Vertex> keep{1, 2, 3};
    const auto h = g.induced(keep);
    CHECK(h.order() == 3);
    CHECK(h.size() == 2);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    const std::vector<int> perm{1, 2, 3, 0};
    const auto p = g.permuted(perm);
    CHECK(p.has_edge(1, 2));
    CHECK(p.has_edge(0, 1));
}

TEST_CASE("vertex classes and weak connectivity") {
    const auto g = G(4, {{0, 1}, {2, 1}});
    const auto vc = vertex_class(g);
    CHECK(vc.v_out == std::vector<Vertex>{0, 2, 3});
    CHECK(vc.v_in == std::vector<Vertex>{1, 3});
    CHECK_FALSE(is_weakly_connected(g));
    CHECK(is_weakly_connected(G(3, {{0, 1}, {2, 1}})));
}
