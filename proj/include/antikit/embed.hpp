#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "antikit/antimatching.hpp"
#include "antikit/antitree.hpp"
#include "antikit/digraph.hpp"
#include "antikit/gadgets.hpp"
#include "antikit/packing.hpp"
#include "antikit/tree_decomp.hpp"

namespace antikit {

struct EmbeddingMap {
    std::vector<Vertex> image;  // pattern vertex -> host vertex
};

/// Injective and direction-preserving.
bool is_embedding(const Digraph& pattern, const Digraph& host, const EmbeddingMap& map);

/// Restricts pattern vertex x to the host vertices in `allowed`.
struct Pin {
    Vertex x = 0;
    std::vector<Vertex> allowed;
};

struct SearchStats {
    long long nodes = 0;
};

/// Exact backtracking search. Pattern vertices are placed in BFS order from
/// the pinned vertex (else from a vertex of maximum degree), every component
/// in turn; candidates are the host vertices with large enough in/out-degree,
/// intersected with the adjacency rows of already placed neighbours and
/// tried in ascending host degree-sum. nullopt proves non-containment.
std::optional<EmbeddingMap> embed_exact(const OrientedGraph& pattern, const OrientedGraph& host,
                                        const std::optional<Pin>& pin = std::nullopt, SearchStats* stats = nullptr);

/// Visits every embedding (in search order) until `visit` returns false.
/// Returns the number of embeddings visited.
long long for_each_embedding(const OrientedGraph& pattern, const OrientedGraph& host, const std::optional<Pin>& pin,
                             const std::function<bool(const EmbeddingMap&)>& visit);

/// Vertex count of a longest antidirected path (0 for the empty graph).
/// Exact DP over (vertex set, endpoint, next direction); throws
/// Error(BudgetExceeded) above 20 vertices.
int longest_antipath(const Digraph& host);

/// Host built from a reduced graph R: cluster i is vertices
/// [i * m, (i + 1) * m), and every edge a -> b of R becomes a random
/// bipartite edge set from cluster a to cluster b with exactly
/// ceil(density * m * m) edges. density = 1 gives complete pairs.
struct BlowupHost {
    OrientedGraph reduced;
    int cluster_size = 0;
    double density = 1.0;
    std::uint64_t seed = 0;
    OrientedGraph graph;

    int cluster_of(Vertex v) const { return v / cluster_size; }
    std::vector<Vertex> cluster(int i) const;
};

BlowupHost make_blowup_host(const OrientedGraph& reduced, int m, double density, std::uint64_t seed);

struct AntiwalkPlan {
    std::vector<Vertex> walk;                 // Q_0 .. Q_h in R
    std::vector<std::vector<Vertex>> z_sets;  // Z_0 .. Z_h, Z_i inside cluster Q_i
    std::vector<Vertex> x_prev;               // X_{h-1}, inside Q_{h-1} minus Z_{h-1}
    std::vector<Vertex> x_last;               // X_h, inside Q_h minus Z_h
};

struct WalkEmbedParams {
    double epsilon = 0.025;
    double density = 1.0;
    /// Check the size thresholds on S, Z_i and X_i. The orchestration below
    /// works at desk scale where they cannot hold and turns this off.
    bool enforce_thresholds = true;
};

/// Places level i of s (root = level 0) in Z_i for i <= h and deeper levels
/// alternately in X_{h-1} and X_h, each image typical toward the set its
/// children go to (and level h also toward Z_{h-1}). Candidates are taken in
/// ascending vertex order. Throws Error(ConsistencyMismatch),
/// Error(ThresholdViolated), Error(TypicalityExhausted) or
/// Error(InvalidArgument) for a malformed plan.
EmbeddingMap embed_along_antiwalk(const BlowupHost& host, const AntiwalkPlan& plan, const RootedAntiTree& s,
                                  const WalkEmbedParams& params);

/// Same, excluding `used` host vertices and requiring the root image to be
/// joined to `anchor` by an edge in direction `root_to_anchor` (when given).
EmbeddingMap embed_along_antiwalk(const BlowupHost& host, const AntiwalkPlan& plan, const RootedAntiTree& s,
                                  const WalkEmbedParams& params, const Bitset* used, std::optional<Vertex> anchor,
                                  bool root_to_anchor);

/// Host set a vertex at depth `level` is sent to.
const std::vector<Vertex>& walk_target(const AntiwalkPlan& plan, int level);

/// Typicality test: more than (d - eps)|Y| neighbours in Y, in the direction
/// given by the reduced edge between the two clusters.
bool is_typical(const BlowupHost& host, Vertex x, const std::vector<Vertex>& y, double density, double epsilon);

/// Configuration of the demonstrative tree-into-blow-up pipeline.
struct TreeEmbedConfig {
    double epsilon = 0.0004;  // slices C^1 take floor(10 sqrt(eps) m) per cluster
    double beta = 0.25;
    std::optional<int> t;       // antimatching size, default min semidegree of R
    std::optional<int> levels;  // walk length h, default 16 t + 2
    Vertex x = 0;               // tree vertex to pin
    std::vector<Vertex> v_star; // allowed images of x (empty = anywhere)
};

struct TreeEmbedReport {
    EmbeddingMap map;
    ConnectedAntiMatching matching;
    BetaDecomposition decomposition;
    PackingInstance packing;
    PackingPlan plan;
    int levels = 0;
    bool reversed = false;  // ran on the reversed host and tree
};

/// Antimatching in R, beta-decomposition of the tree rooted at x, packing of
/// the deep levels into the antimatching edges, then a walk embedding of every
/// piece. Throws on any stage failure.
TreeEmbedReport embed_tree_in_blowup(const BlowupHost& host, const RootedAntiTree& tree, const TreeEmbedConfig& config);

/// Builds the pattern and runs embed_exact.
std::optional<EmbeddingMap> embed_antisubdivision(const AntiSubdivisionSpec& spec, const OrientedGraph& host);

/// Cuts two middle interior vertices from enough paths of length >= 3 to
/// leave a tree, embeds the tree exactly and then looks for 3-edge connecting
/// paths through unused vertices. A miss is not a proof of non-containment.
std::optional<EmbeddingMap> embed_antisubdivision_by_restoration(const AntiSubdivisionSpec& spec,
                                                                 const OrientedGraph& host);

}  // namespace antikit
