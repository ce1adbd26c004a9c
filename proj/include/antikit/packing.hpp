#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "antikit/errors.hpp"

namespace antikit {

struct PackingItem {
    long long p = 0;
    long long q = 0;
};

/// Items (p_i, q_i) to be split into t bins of capacity parameter m.
///
/// Hypotheses:
///   (a) (1 - alpha) sum p <= sum q <= (1 + alpha) sum p
///   (b) p_i + q_i <= alpha m for every item
///   (c) max(sum p, sum q) < (1 - 10 alpha) m t
struct PackingInstance {
    std::vector<PackingItem> items;
    long long m = 0;
    int t = 1;
    double alpha = 0.05;
};

/// assignment[i] is the bin of item i, in [0, t).
struct PackingPlan {
    std::vector<int> assignment;
};

class HypothesisViolated : public Error {
public:
    HypothesisViolated(char clause, const std::string& detail);
    char clause() const noexcept { return clause_; }

private:
    char clause_;
};

/// First failed hypothesis ('a', 'b' or 'c'), if any.
std::optional<char> violated_hypothesis(const PackingInstance& inst);

/// Both per-bin sums within (1 - 7 alpha) m.
bool plan_feasible(const PackingInstance& inst, const PackingPlan& plan);

struct PackOptions {
    /// Reject off-hypothesis instances up front with HypothesisViolated.
    bool check_hypotheses = true;
    /// Try oracle_pack (when the instance is small enough) before giving up.
    bool oracle_fallback = true;
};

/// Two phases. First, items sorted by |p - q| descending go greedily into the
/// bin minimising the running |delta| while keeping sum p <= (1 - 9 alpha) m
/// and delta within [-alpha m, alpha m]; a sweep repeats until no leftover
/// fits. On-hypothesis the leftovers then share a sign, and they are topped
/// up under the p-capacity (delta >= 0) or the q-capacity (delta <= 0).
///
/// The returned plan always satisfies plan_feasible. Throws
/// HypothesisViolated or Error(PackingFailed).
PackingPlan pack(const PackingInstance& inst, const PackOptions& options = {});

/// Exhaustive search over all t^|I| assignments. nullopt means infeasible.
/// Throws Error(TooLargeForOracle) for more than 12 items or t > 3.
std::optional<PackingPlan> oracle_pack(const PackingInstance& inst);

nlohmann::json packing_instance_to_json(const PackingInstance& inst);
PackingInstance packing_instance_from_json(const nlohmann::json& j);
nlohmann::json packing_plan_to_json(const PackingInstance& inst, const PackingPlan& plan);

}  // namespace antikit
