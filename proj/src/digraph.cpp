#include "antikit/digraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace antikit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::TwoCycle: return "TwoCycle";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::AnchorHasNoOutEdge: return "AnchorHasNoOutEdge";
        case ErrorCode::SizeNotReached: return "SizeNotReached";
        case ErrorCode::ExchangeStuck: return "ExchangeStuck";
        case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::PackingFailed: return "PackingFailed";
        case ErrorCode::InfeasibleSplit: return "InfeasibleSplit";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::ConsistencyMismatch: return "ConsistencyMismatch";
        case ErrorCode::ThresholdViolated: return "ThresholdViolated";
        case ErrorCode::TypicalityExhausted: return "TypicalityExhausted";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

namespace {

std::string pair_text(Edge e) { return "(" + std::to_string(e.from) + ", " + std::to_string(e.to) + ")"; }

}  // namespace

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    const auto bits = static_cast<std::size_t>(n);
    out_.assign(bits, Bitset(bits));
    in_.assign(bits, Bitset(bits));
    out_deg_.assign(bits, 0);
    in_deg_.assign(bits, 0);
}

void Digraph::add_edge_unchecked(Vertex u, Vertex v) {
    out_[u].set(static_cast<std::size_t>(v));
    in_[v].set(static_cast<std::size_t>(u));
    ++out_deg_[u];
    ++in_deg_[v];
    ++m_;
}

Digraph Digraph::from_edges(int n, std::span<const Edge> edges) {
    Digraph g(n);
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw EdgeError(ErrorCode::VertexOutOfRange, e, "edge " + pair_text(e) + " outside [0, " + std::to_string(n) + ")");
        if (e.from == e.to) throw EdgeError(ErrorCode::LoopEdge, e, "self-loop at " + std::to_string(e.from));
        if (g.has_edge(e.from, e.to)) throw EdgeError(ErrorCode::DuplicateEdge, e, "edge " + pair_text(e) + " listed twice");
        g.add_edge_unchecked(e.from, e.to);
    }
    return g;
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        out_[u].for_each([&](std::size_t v) { out.push_back({u, static_cast<Vertex>(v)}); });
    return out;
}

bool Digraph::is_oriented() const noexcept {
    for (Vertex v = 0; v < n_; ++v)
        if (out_[v].intersects(in_[v])) return false;
    return true;
}

Digraph Digraph::reversed() const {
    Digraph r = *this;
    std::swap(r.out_, r.in_);
    std::swap(r.out_deg_, r.in_deg_);
    return r;
}

OrientedGraph OrientedGraph::validate(int n, std::span<const Edge> edges) {
    return from_digraph(Digraph::from_edges(n, edges));
}

OrientedGraph OrientedGraph::from_digraph(const Digraph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        Bitset both = g.out_neighbours(v) & g.in_neighbours(v);
        if (both.any()) {
            const Edge e{v, static_cast<Vertex>(both.find_first())};
            throw EdgeError(ErrorCode::TwoCycle, e, "both directions present on pair " + pair_text(e));
        }
    }
    OrientedGraph o;
    static_cast<Digraph&>(o) = g;
    return o;
}

OrientedGraph OrientedGraph::reversed() const {
    OrientedGraph r;
    static_cast<Digraph&>(r) = Digraph::reversed();
    return r;
}

OrientedGraph OrientedGraph::permuted(std::span<const int> perm) const {
    OrientedGraph r(n_);
    for (const Edge& e : edges()) r.add_edge_unchecked(perm[e.from], perm[e.to]);
    return r;
}

OrientedGraph OrientedGraph::induced(std::span<const Vertex> keep) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    OrientedGraph r(static_cast<int>(keep.size()));
    for (const Edge& e : edges())
        if (index[e.from] >= 0 && index[e.to] >= 0) r.add_edge_unchecked(index[e.from], index[e.to]);
    return r;
}

DegreeProfile degree_profile(const Digraph& g) {
    DegreeProfile p;
    p.edge_count = g.size();
    if (g.order() == 0) return p;
    p.min_out = std::numeric_limits<int>::max();
    p.min_in = std::numeric_limits<int>::max();
    int pseudo = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.order(); ++v) {
        const int o = g.out_degree(v);
        const int i = g.in_degree(v);
        p.min_out = std::min(p.min_out, o);
        p.min_in = std::min(p.min_in, i);
        if (o > 0) pseudo = std::min(pseudo, o);
        if (i > 0) pseudo = std::min(pseudo, i);
    }
    p.min_semidegree = std::min(p.min_out, p.min_in);
    p.min_pseudo_semidegree = g.size() == 0 ? 0 : pseudo;
    return p;
}

VertexClass vertex_class(const Digraph& g) {
    VertexClass c;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) == 0) c.v_in.push_back(v);
        if (g.in_degree(v) == 0) c.v_out.push_back(v);
    }
    return c;
}

bool is_antidirected(const Digraph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.out_degree(v) > 0 && g.in_degree(v) > 0) return false;
    return true;
}

bool is_weakly_connected(const Digraph& g) {
    const int n = g.order();
    if (n == 0) return true;
    Bitset seen(static_cast<std::size_t>(n));
    std::vector<Vertex> stack{0};
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        Bitset next = g.out_neighbours(v) | g.in_neighbours(v);
        next.subtract(seen);
        next.for_each([&](std::size_t u) {
            seen.set(u);
            ++reached;
            stack.push_back(static_cast<Vertex>(u));
        });
    }
    return reached == n;
}

}  // namespace antikit
