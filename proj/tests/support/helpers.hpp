#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include <doctest.h>

#include "antikit/digraph.hpp"

namespace testing {

inline antikit::OrientedGraph G(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<antikit::Edge> list;
    for (auto [a, b] : edges) list.push_back({a, b});
    return antikit::OrientedGraph::validate(n, list);
}

inline antikit::Digraph D(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<antikit::Edge> list;
    for (auto [a, b] : edges) list.push_back({a, b});
    return antikit::Digraph::from_edges(n, list);
}

template <typename F>
antikit::ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const antikit::Error& e) {
        return e.code();
    }
    FAIL("expected an antikit::Error");
    return antikit::ErrorCode::IoFailure;
}

}  // namespace testing
