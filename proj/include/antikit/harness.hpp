#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "antikit/digraph.hpp"

namespace antikit {

enum class Statement {
    path_conjecture,
    antitree_density,
    antimatching_lemma5,
    antimatching_lemma6,
    peel_lemma,
    gadget_pullback,
    blowup_tightness,
};

std::string_view to_string(Statement s);
/// Throws Error(InvalidArgument) for an unknown name.
Statement parse_statement(std::string_view name);

enum class Mode { exhaustive, sampled };

struct VerificationJob {
    Statement statement = Statement::path_conjecture;
    std::vector<int> n_range;
    /// Statement parameter: path length, antimatching size, peeling k,
    /// pattern order (gadget_pullback) or blow-up factor. Empty = all that
    /// apply.
    std::vector<int> k_range;
    Mode mode = Mode::exhaustive;
    std::uint64_t seed = 0;
    int sample_count = 0;
    /// Exhaustive mode walks isomorphism classes instead of labeled graphs.
    bool up_to_isomorphism = false;
    double eta = 0.0;  // antitree_density: |E| > (1 + eta)(k - 1) n
    int workers = 0;   // 0: ANTIKIT_WORKERS or the hardware count
};

struct Counterexample {
    Digraph host;
    std::optional<OrientedGraph> pattern;
    std::string detail;
};

struct VerificationReport {
    VerificationJob job;
    long long instances_checked = 0;
    /// At most 200 are kept; counterexample_total counts all of them.
    std::vector<Counterexample> counterexamples;
    long long counterexample_total = 0;
    long long elapsed_ms = 0;

    bool passed() const { return counterexample_total == 0; }
};

/// Throws Error(InvalidArgument) or Error(TooLarge) for a bad job.
void validate_job(const VerificationJob& job);

/// Worker count for a job: the explicit request, else ANTIKIT_WORKERS, else
/// the hardware concurrency; at least 1.
int worker_count(int requested);

/// Work is split into fixed chunks (index ranges, or batches of samples
/// seeded from the job seed and the chunk index) and merged in chunk order,
/// so the report does not depend on the worker count.
VerificationReport run(const VerificationJob& job);

/// Re-runs the failing check on a single counterexample; true if it still
/// fails. Embedding claims are re-checked with embed_exact.
bool recheck(const VerificationJob& job, const Counterexample& c);

nlohmann::json job_to_json(const VerificationJob& job);
nlohmann::json report_to_json(const VerificationReport& r);

/// Writes report.json, summary.txt (last line PASS or FAIL) and, per
/// counterexample i, cex_<i>_host.oedge and cex_<i>_pattern.oedge into
/// `dir`. Every counterexample is re-checked first. Throws Error(IoFailure).
void report_emit(const VerificationReport& r, const std::filesystem::path& dir);

}  // namespace antikit
