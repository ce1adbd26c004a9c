#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "antikit/antitree.hpp"

namespace antikit {

/// One component of T - W, rooted at its vertex closest to the root of T.
struct Subtree {
    Vertex root = 0;
    std::vector<Vertex> vertices;  // ascending
};

/// Separator W (always containing the root of T) plus the components of
/// T - W, each of size at most beta * k, with |W| <= 1/beta + 2.
struct BetaDecomposition {
    std::vector<Vertex> w_set;  // ascending
    std::vector<Subtree> trees;
    double beta = 0.5;
};

/// Greedy bottom-up separator: in post-order, a non-root vertex whose
/// residual subtree exceeds beta * k joins W and its subtree is detached;
/// the root is added last. Every detachment removes more than beta * k
/// vertices, which bounds |W|. Throws Error(InvalidArgument) unless
/// 0 < beta < 1.
BetaDecomposition beta_decompose(const RootedAntiTree& t, double beta);

/// Checks clauses (i)-(iv) of the definition; on failure writes the first
/// failed clause to `why` when given.
bool is_beta_decomposition(const RootedAntiTree& t, const BetaDecomposition& d, std::string* why = nullptr);

/// Sizes of V_in(T) and V_out(T) once the first j levels of every subtree
/// are shaved off (the subtree root is level 1).
struct ShavedCounts {
    int j = 1;
    long long p = 0;  // |V_in(T) - L_j(T)|
    long long q = 0;  // |V_out(T) - L_j(T)|
};

/// Per-vertex membership in L_j(T) = union of Lev_j(S).
std::vector<char> shaved_levels(const RootedAntiTree& t, const BetaDecomposition& d, int j);

/// Throws Error(InvalidArgument) for j < 1.
ShavedCounts shaved_counts(const RootedAntiTree& t, const BetaDecomposition& d, int j);

nlohmann::json decomposition_to_json(const BetaDecomposition& d);

}  // namespace antikit
