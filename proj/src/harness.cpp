#include "antikit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "antikit/antimatching.hpp"
#include "antikit/antiwalk.hpp"
#include "antikit/embed.hpp"
#include "antikit/enumerate.hpp"
#include "antikit/gadgets.hpp"
#include "antikit/graph_io.hpp"

namespace antikit {

namespace {

constexpr std::pair<Statement, std::string_view> kNames[] = {
    {Statement::path_conjecture, "path_conjecture"},
    {Statement::antitree_density, "antitree_density"},
    {Statement::antimatching_lemma5, "antimatching_lemma5"},
    {Statement::antimatching_lemma6, "antimatching_lemma6"},
    {Statement::peel_lemma, "peel_lemma"},
    {Statement::gadget_pullback, "gadget_pullback"},
    {Statement::blowup_tightness, "blowup_tightness"},
};

constexpr long long kChunk = 512;
constexpr long long kSampleChunk = 16;
constexpr std::size_t kMaxStored = 200;

// Detail prefixes tell recheck how to confirm a failure.
constexpr std::string_view kAbsent = "absent: ";
constexpr std::string_view kPresent = "present: ";

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct ChunkResult {
    long long checked = 0;
    std::vector<Counterexample> found;
};

OrientedGraph path_from_bits(int k, unsigned bits) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back((bits >> i) & 1U ? Edge{i + 1, i} : Edge{i, i + 1});
    return OrientedGraph::validate(k + 1, edges);
}

// The same path read from its other end.
unsigned reverse_bits(int k, unsigned bits) {
    unsigned r = 0;
    for (int j = 0; j < k; ++j)
        if (!((bits >> (k - 1 - j)) & 1U)) r |= 1U << j;
    return r;
}

bool wanted(const std::vector<int>& range, int k) {
    return range.empty() || std::find(range.begin(), range.end(), k) != range.end();
}

std::vector<int> default_or(const std::vector<int>& range, std::vector<int> fallback) {
    return range.empty() ? fallback : range;
}

class Checker {
public:
    explicit Checker(const VerificationJob& job) : job_(job) {
        if (job.statement == Statement::antitree_density)
            for (int k : default_or(job.k_range, {1, 3, 5})) trees_[k] = antidirected_trees(k, true);
        if (job.statement == Statement::gadget_pullback)
            for (int v : default_or(job.k_range, {2, 3, 4})) patterns_[v] = connected_antidirected(v);
    }

    // Hypothesis used to reject sampled hosts.
    bool sample_acceptable(const Digraph& g) const {
        switch (job_.statement) {
            case Statement::path_conjecture:
            case Statement::antimatching_lemma5:
            case Statement::antimatching_lemma6: return degree_profile(g).min_semidegree >= 1;
            case Statement::antitree_density: {
                if (trees_.empty()) return false;
                const int k = trees_.begin()->first;
                return static_cast<double>(g.size()) > (1.0 + job_.eta) * (k - 1) * g.order();
            }
            default: return g.size() > 0;
        }
    }

    void check(const Digraph& host, ChunkResult& out) const {
        switch (job_.statement) {
            case Statement::path_conjecture: return paths(OrientedGraph::from_digraph(host), out);
            case Statement::antitree_density: return antitrees(OrientedGraph::from_digraph(host), out);
            case Statement::antimatching_lemma5: return antimatchings(OrientedGraph::from_digraph(host), false, out);
            case Statement::antimatching_lemma6: return antimatchings(OrientedGraph::from_digraph(host), true, out);
            case Statement::peel_lemma: return peeling(host, out);
            case Statement::gadget_pullback: return gadget(OrientedGraph::from_digraph(host), out);
            case Statement::blowup_tightness: return tightness(host.order() / 3, out);
        }
    }

    void tightness(int ell, ChunkResult& out) const {
        const OrientedGraph g = blowup(directed_triangle(), ell);
        auto fail = [&](const Digraph& host, std::optional<OrientedGraph> pattern, std::string detail) {
            out.found.push_back({host, std::move(pattern), std::move(detail)});
        };
        ++out.checked;
        if (degree_profile(g).min_semidegree != ell) fail(g, std::nullopt, "degree: min semidegree differs from ell");
        ++out.checked;
        if (g.order() <= 20 && longest_antipath(g) != 2 * ell) fail(g, std::nullopt, "antipath: longest antipath is not 2 ell");
        // |E| = (k - 1) n for the k-edge out-star with k = ell + 1.
        ++out.checked;
        if (g.size() != static_cast<std::size_t>(ell) * g.order()) fail(g, std::nullopt, "degree: edge count is not ell n");
        const OrientedGraph long_path = antipath(2 * ell);
        ++out.checked;
        if (embed_exact(long_path, g)) fail(g, long_path, std::string(kPresent) + "antipath on 2 ell + 1 vertices");
        const OrientedGraph short_path = antipath(2 * ell - 1);
        ++out.checked;
        if (!embed_exact(short_path, g)) fail(g, short_path, std::string(kAbsent) + "antipath on 2 ell vertices");
        const OrientedGraph star = antidirected_star(ell + 1, true);
        ++out.checked;
        if (embed_exact(star, g)) fail(g, star, std::string(kPresent) + "out-star with ell + 1 edges");
        const int k = 2 * ell + 2;
        const OrientedGraph burr = burr_graph(k);
        const OrientedGraph burr_star = antidirected_star(k, true);
        ++out.checked;
        if (embed_exact(burr_star, burr))
            fail(burr, burr_star, std::string(kPresent) + "out-star with k = " + std::to_string(k) + " edges");
    }

private:
    void paths(const OrientedGraph& g, ChunkResult& out) const {
        const int d = degree_profile(g).min_semidegree;
        for (int k = 1; 2 * d > k; ++k) {
            if (!wanted(job_.k_range, k)) continue;
            for (unsigned bits = 0; bits < (1U << k); ++bits) {
                if (reverse_bits(k, bits) < bits) continue;
                const OrientedGraph p = path_from_bits(k, bits);
                ++out.checked;
                if (!embed_exact(p, g))
                    out.found.push_back({g, p, std::string(kAbsent) + "path with k = " + std::to_string(k) +
                                                   " edges under min semidegree " + std::to_string(d)});
            }
        }
    }

    void antitrees(const OrientedGraph& g, ChunkResult& out) const {
        const int n = g.order();
        for (const auto& [k, trees] : trees_) {
            if (!(static_cast<double>(g.size()) > (1.0 + job_.eta) * (k - 1) * n)) continue;
            const PeelResult peeled = peel_pseudo(g, k);
            std::optional<FourCopyGadget> gadget;
            OrientedGraph base;
            if (peeled.graph.size() > 0) {
                const OrientedGraph d_prime = OrientedGraph::from_digraph(peeled.graph);
                gadget = four_copy(d_prime);
                base = gadget->map.reversed ? d_prime.reversed() : d_prime;
            }
            for (const OrientedGraph& tree : trees) {
                ++out.checked;
                if (!embed_exact(tree, g)) {
                    out.found.push_back({g, tree, std::string(kAbsent) + "antitree with k = " + std::to_string(k) +
                                                      " edges above the edge bound"});
                    continue;
                }
                if (!gadget) continue;
                const OrientedGraph pattern = gadget->map.reversed ? tree.reversed() : tree;
                Vertex x = 0;
                while (pattern.out_degree(x) == 0) ++x;
                const auto hit = embed_exact(pattern, gadget->graph, Pin{x, gadget->v_star});
                if (!hit) continue;
                const auto back = pull_back(gadget->map, hit->image);
                bool ok = back && is_embedding(pattern, base, EmbeddingMap{*back});
                if (ok) {
                    EmbeddingMap in_host;
                    for (Vertex v : *back) in_host.image.push_back(peeled.origin[v]);
                    ok = is_embedding(tree, g, in_host);
                }
                if (!ok) out.found.push_back({g, tree, "pipeline: gadget embedding did not pull back"});
            }
        }
    }

    void antimatchings(const OrientedGraph& g, bool bounded, ChunkResult& out) const {
        const int d = degree_profile(g).min_semidegree;
        for (Vertex w = 0; w < g.order(); ++w) {
            if (g.out_degree(w) == 0) continue;
            const int best = g.order() <= 12 ? oracle_max_antimatching(g, w) : d;
            for (int t = 1; t <= d; ++t) {
                if (!wanted(job_.k_range, t)) continue;
                ++out.checked;
                std::string why;
                try {
                    const AntimatchingRequest req{t, w, std::nullopt};
                    const ConnectedAntiMatching m = bounded ? find_bounded_antimatching(g, req) : find_antimatching(g, req);
                    if (static_cast<int>(m.size()) != t || m.anchor() != w || !is_connected_antimatching(g, m)) {
                        why = "invalid antimatching";
                    } else if (bounded) {
                        const ReachReport rr = reach_from(g, w);
                        for (const Edge& e : m.edges)
                            if (!rr.ood[e.from] || *rr.ood[e.from] > 8 * t) why = "ood bound 8t exceeded";
                    }
                    if (best < t) why = "oracle maximum below t";
                } catch (const Error& ex) {
                    why = ex.what();
                }
                if (!why.empty())
                    out.found.push_back({g, std::nullopt, "anchor " + std::to_string(w) + ", t = " + std::to_string(t) + ": " + why});
            }
        }
    }

    void peeling(const Digraph& g, ChunkResult& out) const {
        const long long n = g.order();
        const auto e = static_cast<long long>(g.size());
        for (int k = 1; e > static_cast<long long>(k - 1) * n; ++k) {
            if (!wanted(job_.k_range, k)) continue;
            ++out.checked;
            const PeelResult r = peel_pseudo(g, k);
            std::string why;
            if (r.graph.size() == 0) {
                why = "empty";
            } else if (2 * degree_profile(r.graph).min_pseudo_semidegree < k) {
                why = "pseudo-semidegree below k/2";
            } else {
                for (const Edge& x : r.graph.edges())
                    if (!g.has_edge(r.origin[x.from], r.origin[x.to])) why = "edge not in the input";
            }
            if (!why.empty()) out.found.push_back({g, std::nullopt, "k = " + std::to_string(k) + ": " + why});
        }
    }

    void gadget(const OrientedGraph& g, ChunkResult& out) const {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.out_degree(v) + g.in_degree(v) > 0) keep.push_back(v);
        if (keep.empty()) return;
        const OrientedGraph d_prime = g.induced(keep);
        const FourCopyGadget gad = four_copy(d_prime);
        const OrientedGraph base = gad.map.reversed ? d_prime.reversed() : d_prime;
        for (const auto& [order, list] : patterns_)
            for (const OrientedGraph& p : list)
                for (Vertex x = 0; x < p.order(); ++x) {
                    if (p.out_degree(x) == 0) continue;
                    ++out.checked;
                    std::string why;
                    for_each_embedding(p, gad.graph, Pin{x, gad.v_star}, [&](const EmbeddingMap& m) {
                        const auto back = pull_back(gad.map, m.image);
                        if (!back)
                            why = "embedding leaves D1";
                        else if (!is_embedding(p, base, EmbeddingMap{*back}))
                            why = "pull-back is not an embedding";
                        return why.empty();
                    });
                    if (!why.empty())
                        out.found.push_back({d_prime, p, "x = " + std::to_string(x) + ": " + why});
                }
    }

    const VerificationJob& job_;
    std::map<int, std::vector<OrientedGraph>> trees_;
    std::map<int, std::vector<OrientedGraph>> patterns_;
};

struct Unit {
    int n = 0;
    long long begin = 0;
    long long end = 0;
    long long chunk = 0;
};

std::vector<Unit> make_units(const VerificationJob& job) {
    std::vector<Unit> units;
    if (job.statement == Statement::blowup_tightness) {
        for (int ell : default_or(job.k_range, {1, 2, 3})) units.push_back({ell, 0, 1, 0});
        return units;
    }
    if (job.mode == Mode::sampled) {
        for (long long b = 0, c = 0; b < job.sample_count; b += kSampleChunk, ++c)
            units.push_back({0, b, std::min<long long>(b + kSampleChunk, job.sample_count), c});
        return units;
    }
    for (int n : job.n_range) {
        const long long total =
            job.up_to_isomorphism ? static_cast<long long>(oriented_classes(n).size()) : oriented_count(n);
        for (long long b = 0; b < total; b += kChunk) units.push_back({n, b, std::min(b + kChunk, total), 0});
    }
    return units;
}

Digraph sample_host(const VerificationJob& job, const Checker& checker, std::mt19937_64& rng, bool& ok) {
    std::uniform_int_distribution<std::size_t> pick_n(0, job.n_range.size() - 1);
    const bool general = job.statement == Statement::peel_lemma;
    std::uniform_real_distribution<double> density(general ? 0.05 : 0.3, general ? 0.9 : 1.0);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int n = job.n_range[pick_n(rng)];
        const double p = density(rng);
        Digraph g = general ? random_digraph(n, p, rng) : static_cast<Digraph>(random_oriented(n, p, rng));
        if (checker.sample_acceptable(g)) {
            ok = true;
            return g;
        }
    }
    ok = false;
    return Digraph(0);
}

void run_unit(const VerificationJob& job, const Checker& checker, const Unit& u, ChunkResult& out) {
    if (job.statement == Statement::blowup_tightness) {
        checker.tightness(u.n, out);
        return;
    }
    if (job.mode == Mode::sampled) {
        std::mt19937_64 rng(splitmix64(job.seed ^ splitmix64(static_cast<std::uint64_t>(u.chunk))));
        for (long long i = u.begin; i < u.end; ++i) {
            bool ok = false;
            const Digraph g = sample_host(job, checker, rng, ok);
            if (ok) checker.check(g, out);
        }
        return;
    }
    for (long long i = u.begin; i < u.end; ++i) {
        if (job.up_to_isomorphism)
            checker.check(oriented_classes(u.n)[static_cast<std::size_t>(i)], out);
        else
            checker.check(oriented_from_index(u.n, i), out);
    }
}

}  // namespace

std::string_view to_string(Statement s) {
    for (const auto& [st, name] : kNames)
        if (st == s) return name;
    return "?";
}

Statement parse_statement(std::string_view name) {
    for (const auto& [st, n] : kNames)
        if (n == name) return st;
    throw Error(ErrorCode::InvalidArgument, "unknown statement '" + std::string(name) + "'");
}

void validate_job(const VerificationJob& job) {
    const bool tight = job.statement == Statement::blowup_tightness;
    if (!tight && job.n_range.empty()) throw Error(ErrorCode::InvalidArgument, "n range is empty");
    for (int n : job.n_range)
        if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex counts must be positive");
    for (int k : job.k_range)
        if (k < 1) throw Error(ErrorCode::InvalidArgument, "k values must be positive");
    if (job.mode == Mode::exhaustive && !tight)
        for (int n : job.n_range)
            if (n > 6) throw Error(ErrorCode::TooLarge, "exhaustive mode stops at n = 6");
    if (job.mode == Mode::sampled && !tight && job.sample_count < 1)
        throw Error(ErrorCode::InvalidArgument, "sampled mode needs a positive sample count");
    if (job.eta < 0.0) throw Error(ErrorCode::InvalidArgument, "eta must be non-negative");
    if (job.statement == Statement::antitree_density)
        for (int k : job.k_range)
            if (k > 7) throw Error(ErrorCode::TooLarge, "antitrees are listed up to 7 edges");
    if (job.statement == Statement::gadget_pullback)
        for (int k : job.k_range)
            if (k > 6) throw Error(ErrorCode::TooLarge, "patterns are listed up to 6 vertices");
    if (tight)
        for (int k : job.k_range)
            if (k > 6) throw Error(ErrorCode::TooLarge, "exact antipath search stops at 20 host vertices");
    if ((job.statement == Statement::antimatching_lemma5 || job.statement == Statement::antimatching_lemma6))
        for (int n : job.n_range)
            if (n > 12) throw Error(ErrorCode::TooLarge, "the antimatching oracle stops at n = 12");
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ANTIKIT_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

VerificationReport run(const VerificationJob& job) {
    validate_job(job);
    const auto start = std::chrono::steady_clock::now();
    const Checker checker(job);
    const std::vector<Unit> units = make_units(job);
    std::vector<ChunkResult> results(units.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= units.size()) return;
            try {
                run_unit(job, checker, units[i], results[i]);
            } catch (...) {
                std::lock_guard guard(failure_lock);
                if (!failure) failure = std::current_exception();
                next = units.size();
                return;
            }
        }
    };
    const int workers = std::min<int>(worker_count(job.workers), static_cast<int>(std::max<std::size_t>(units.size(), 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    VerificationReport report;
    report.job = job;
    for (ChunkResult& r : results) {
        report.instances_checked += r.checked;
        report.counterexample_total += static_cast<long long>(r.found.size());
        for (Counterexample& c : r.found)
            if (report.counterexamples.size() < kMaxStored) report.counterexamples.push_back(std::move(c));
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool recheck(const VerificationJob& job, const Counterexample& c) {
    const std::string_view detail = c.detail;
    if (c.pattern && detail.starts_with(kAbsent))
        return !embed_exact(*c.pattern, OrientedGraph::from_digraph(c.host)).has_value();
    if (c.pattern && detail.starts_with(kPresent))
        return embed_exact(*c.pattern, OrientedGraph::from_digraph(c.host)).has_value();
    const Checker checker(job);
    ChunkResult out;
    checker.check(c.host, out);
    return !out.found.empty();
}

nlohmann::json job_to_json(const VerificationJob& job) {
    return {{"statement", std::string(to_string(job.statement))},
            {"n_range", job.n_range},
            {"k_range", job.k_range},
            {"mode", job.mode == Mode::exhaustive ? "exhaustive" : "sampled"},
            {"seed", job.seed},
            {"sample_count", job.sample_count},
            {"up_to_isomorphism", job.up_to_isomorphism},
            {"eta", job.eta}};
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json cex = nlohmann::json::array();
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
        const Counterexample& c = r.counterexamples[i];
        char stem[32];
        std::snprintf(stem, sizeof stem, "cex_%04zu", i);
        nlohmann::json entry{{"detail", c.detail},
                             {"host", graph_to_json(c.host)},
                             {"host_file", std::string(stem) + "_host.oedge"}};
        if (c.pattern) {
            entry["pattern"] = graph_to_json(*c.pattern);
            entry["pattern_file"] = std::string(stem) + "_pattern.oedge";
        }
        cex.push_back(std::move(entry));
    }
    return {{"job", job_to_json(r.job)},
            {"instances_checked", r.instances_checked},
            {"counterexample_count", r.counterexample_total},
            {"counterexamples", cex},
            {"verdict", r.passed() ? "PASS" : "FAIL"},
            {"elapsed_ms", r.elapsed_ms}};
}

void report_emit(const VerificationReport& r, const std::filesystem::path& dir) {
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i)
        if (!recheck(r.job, r.counterexamples[i]))
            throw Error(ErrorCode::ConsistencyMismatch, "counterexample " + std::to_string(i) + " did not re-check");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoFailure, "cannot create " + dir.string() + ": " + ec.message());

    write_text_file(dir / "report.json", report_to_json(r).dump(2) + "\n");
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
        char stem[32];
        std::snprintf(stem, sizeof stem, "cex_%04zu", i);
        save_oedge(r.counterexamples[i].host, dir / (std::string(stem) + "_host.oedge"));
        if (r.counterexamples[i].pattern)
            save_oedge(*r.counterexamples[i].pattern, dir / (std::string(stem) + "_pattern.oedge"));
    }
    std::ostringstream s;
    s << "statement: " << to_string(r.job.statement) << "\n"
      << "mode: " << (r.job.mode == Mode::exhaustive ? "exhaustive" : "sampled") << "\n"
      << "instances checked: " << r.instances_checked << "\n"
      << "counterexamples: " << r.counterexample_total << "\n"
      << "elapsed: " << r.elapsed_ms << " ms\n"
      << (r.passed() ? "PASS" : "FAIL") << "\n";
    write_text_file(dir / "summary.txt", s.str());
}

}  // namespace antikit
