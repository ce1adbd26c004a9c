#include "antikit/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace antikit {

HypothesisViolated::HypothesisViolated(char clause, const std::string& detail)
    : Error(ErrorCode::HypothesisViolated, std::string("(") + clause + ") " + detail), clause_(clause) {}

namespace {

void check_shape(const PackingInstance& inst) {
    if (inst.t < 1) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
    if (inst.m < 0) throw Error(ErrorCode::InvalidArgument, "m must be non-negative");
    if (!(inst.alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
    for (const PackingItem& it : inst.items)
        if (it.p < 0 || it.q < 0) throw Error(ErrorCode::InvalidArgument, "item sizes must be non-negative");
}

struct Bins {
    std::vector<long long> p;
    std::vector<long long> q;
    explicit Bins(int t) : p(static_cast<std::size_t>(t), 0), q(static_cast<std::size_t>(t), 0) {}
    long long delta(std::size_t k) const { return p[k] - q[k]; }
    void add(std::size_t k, const PackingItem& it) {
        p[k] += it.p;
        q[k] += it.q;
    }
};

}  // namespace

std::optional<char> violated_hypothesis(const PackingInstance& inst) {
    check_shape(inst);
    long long sp = 0;
    long long sq = 0;
    for (const PackingItem& it : inst.items) {
        sp += it.p;
        sq += it.q;
    }
    const double a = inst.alpha;
    const auto dsp = static_cast<double>(sp);
    const auto dsq = static_cast<double>(sq);
    if (!((1.0 - a) * dsp <= dsq && dsq <= (1.0 + a) * dsp)) return 'a';
    for (const PackingItem& it : inst.items)
        if (static_cast<double>(it.p + it.q) > a * static_cast<double>(inst.m)) return 'b';
    if (!(static_cast<double>(std::max(sp, sq)) < (1.0 - 10.0 * a) * static_cast<double>(inst.m) * inst.t)) return 'c';
    return std::nullopt;
}

bool plan_feasible(const PackingInstance& inst, const PackingPlan& plan) {
    if (plan.assignment.size() != inst.items.size()) return false;
    Bins bins(inst.t);
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const int k = plan.assignment[i];
        if (k < 0 || k >= inst.t) return false;
        bins.add(static_cast<std::size_t>(k), inst.items[i]);
    }
    const double cap = (1.0 - 7.0 * inst.alpha) * static_cast<double>(inst.m);
    for (int k = 0; k < inst.t; ++k)
        if (static_cast<double>(bins.p[k]) > cap || static_cast<double>(bins.q[k]) > cap) return false;
    return true;
}

PackingPlan pack(const PackingInstance& inst, const PackOptions& options) {
    check_shape(inst);
    if (options.check_hypotheses) {
        if (auto clause = violated_hypothesis(inst)) {
            const char* what = *clause == 'a' ? "sum q is not within (1 +- alpha) sum p"
                               : *clause == 'b' ? "an item has p + q > alpha m"
                                                : "max(sum p, sum q) >= (1 - 10 alpha) m t";
            throw HypothesisViolated(*clause, what);
        }
    }

    const std::size_t count = inst.items.size();
    const auto m = static_cast<double>(inst.m);
    const double cap9 = (1.0 - 9.0 * inst.alpha) * m;
    const double slack = inst.alpha * m;
    const auto delta = [&](std::size_t i) { return inst.items[i].p - inst.items[i].q; };

    PackingPlan plan{std::vector<int>(count, -1)};
    Bins bins(inst.t);

    // A bin accepts item i in the first phase iff the p-capacity and the
    // delta window both survive.
    auto best_balanced_bin = [&](std::size_t i) -> int {
        int best = -1;
        long long best_abs = 0;
        for (int k = 0; k < inst.t; ++k) {
            const long long nd = bins.delta(static_cast<std::size_t>(k)) + delta(i);
            if (static_cast<double>(bins.p[k] + inst.items[i].p) > cap9) continue;
            if (static_cast<double>(std::llabs(nd)) > slack) continue;
            if (best == -1 || std::llabs(nd) < best_abs) {
                best = k;
                best_abs = std::llabs(nd);
            }
        }
        return best;
    };

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::llabs(delta(a)) > std::llabs(delta(b)); });

    std::vector<std::size_t> leftover;
    for (std::size_t i : order) {
        const int k = best_balanced_bin(i);
        if (k < 0) {
            leftover.push_back(i);
            continue;
        }
        plan.assignment[i] = k;
        bins.add(static_cast<std::size_t>(k), inst.items[i]);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = leftover.begin(); it != leftover.end();) {
            const int k = best_balanced_bin(*it);
            if (k < 0) {
                ++it;
                continue;
            }
            plan.assignment[*it] = k;
            bins.add(static_cast<std::size_t>(k), inst.items[*it]);
            it = leftover.erase(it);
            changed = true;
        }
    }

    const bool all_nonneg = std::all_of(leftover.begin(), leftover.end(), [&](std::size_t i) { return delta(i) >= 0; });
    const bool all_nonpos = std::all_of(leftover.begin(), leftover.end(), [&](std::size_t i) { return delta(i) <= 0; });
    const double cap7 = (1.0 - 7.0 * inst.alpha) * m;
    // Worst-fit on the governing coordinate.
    auto load = [&](int k) {
        if (all_nonneg) return bins.p[k];
        if (all_nonpos) return bins.q[k];
        return std::max(bins.p[k], bins.q[k]);
    };
    auto fits = [&](int k, const PackingItem& item) {
        if (all_nonneg) return static_cast<double>(bins.p[k] + item.p) <= cap9;
        if (all_nonpos) return static_cast<double>(bins.q[k] + item.q) <= cap9;
        // Mixed signs only happen off-hypothesis.
        return static_cast<double>(bins.p[k] + item.p) <= cap7 && static_cast<double>(bins.q[k] + item.q) <= cap7;
    };
    bool stuck = false;
    for (std::size_t i : leftover) {
        int best = -1;
        for (int k = 0; k < inst.t; ++k)
            if (fits(k, inst.items[i]) && (best < 0 || load(k) < load(best))) best = k;
        if (best < 0) {
            stuck = true;
            break;
        }
        plan.assignment[i] = best;
        bins.add(static_cast<std::size_t>(best), inst.items[i]);
    }

    if (!stuck && plan_feasible(inst, plan)) return plan;
    if (options.oracle_fallback && count <= 12 && inst.t <= 3) {
        if (auto exact = oracle_pack(inst)) return *exact;
    }
    throw Error(ErrorCode::PackingFailed, "no plan within (1 - 7 alpha) m found");
}

namespace {

class PackSearch {
public:
    PackSearch(const PackingInstance& inst, std::vector<std::size_t> order)
        : inst_(inst), order_(std::move(order)), bins_(inst.t),
          cap_((1.0 - 7.0 * inst.alpha) * static_cast<double>(inst.m)), assignment_(inst.items.size(), -1) {}

    bool run() { return place(0, 0); }
    const std::vector<int>& assignment() const { return assignment_; }

private:
    // Bins are interchangeable, so item `depth` may open at most one new bin.
    bool place(std::size_t depth, int bins_used) {
        if (depth == order_.size()) return true;
        const std::size_t i = order_[depth];
        const PackingItem& item = inst_.items[i];
        const int limit = std::min(inst_.t, bins_used + 1);
        for (int k = 0; k < limit; ++k) {
            if (static_cast<double>(bins_.p[k] + item.p) > cap_ || static_cast<double>(bins_.q[k] + item.q) > cap_)
                continue;
            bins_.p[k] += item.p;
            bins_.q[k] += item.q;
            assignment_[i] = k;
            if (place(depth + 1, std::max(bins_used, k + 1))) return true;
            bins_.p[k] -= item.p;
            bins_.q[k] -= item.q;
        }
        assignment_[i] = -1;
        return false;
    }

    const PackingInstance& inst_;
    std::vector<std::size_t> order_;
    Bins bins_;
    double cap_;
    std::vector<int> assignment_;
};

}  // namespace

std::optional<PackingPlan> oracle_pack(const PackingInstance& inst) {
    check_shape(inst);
    if (inst.items.size() > 12 || inst.t > 3)
        throw Error(ErrorCode::TooLargeForOracle, "oracle limited to 12 items and 3 bins");
    std::vector<std::size_t> order(inst.items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return inst.items[a].p + inst.items[a].q > inst.items[b].p + inst.items[b].q;
    });
    PackSearch search(inst, std::move(order));
    if (!search.run()) return std::nullopt;
    return PackingPlan{search.assignment()};
}

nlohmann::json packing_instance_to_json(const PackingInstance& inst) {
    nlohmann::json items = nlohmann::json::array();
    for (const PackingItem& it : inst.items) items.push_back({it.p, it.q});
    return {{"items", items}, {"m", inst.m}, {"t", inst.t}, {"alpha", inst.alpha}};
}

PackingInstance packing_instance_from_json(const nlohmann::json& j) {
    try {
        PackingInstance inst;
        for (const auto& it : j.at("items")) {
            if (!it.is_array() || it.size() != 2) throw Error(ErrorCode::ParseError, "items must be [p, q] pairs");
            inst.items.push_back({it[0].get<long long>(), it[1].get<long long>()});
        }
        inst.m = j.at("m").get<long long>();
        inst.t = j.at("t").get<int>();
        inst.alpha = j.at("alpha").get<double>();
        return inst;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

nlohmann::json packing_plan_to_json(const PackingInstance& inst, const PackingPlan& plan) {
    std::vector<long long> p(static_cast<std::size_t>(inst.t), 0);
    std::vector<long long> q(static_cast<std::size_t>(inst.t), 0);
    for (std::size_t i = 0; i < plan.assignment.size(); ++i) {
        p[plan.assignment[i]] += inst.items[i].p;
        q[plan.assignment[i]] += inst.items[i].q;
    }
    nlohmann::json bins = nlohmann::json::array();
    for (int k = 0; k < inst.t; ++k) bins.push_back({{"p", p[k]}, {"q", q[k]}});
    return {{"assignment", plan.assignment},
            {"bins", bins},
            {"bin_bound", (1.0 - 7.0 * inst.alpha) * static_cast<double>(inst.m)}};
}

}  // namespace antikit
