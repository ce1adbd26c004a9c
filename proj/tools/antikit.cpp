#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "antikit/antimatching.hpp"
#include "antikit/antitree.hpp"
#include "antikit/antiwalk.hpp"
#include "antikit/embed.hpp"
#include "antikit/gadgets.hpp"
#include "antikit/graph_io.hpp"
#include "antikit/harness.hpp"
#include "antikit/packing.hpp"
#include "antikit/tree_decomp.hpp"

using namespace antikit;

namespace {

// "3", "3..5" or "1,3,5".
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> out;
    auto number = [&](std::string_view s) {
        int v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw Error(ErrorCode::InvalidArgument, "bad number '" + std::string(s) + "' in range");
        return v;
    };
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = number(std::string_view(text).substr(0, dots));
        const int hi = number(std::string_view(text).substr(dots + 2));
        if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty range " + text);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(number(part));
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

std::vector<Vertex> read_vertex_list(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<Vertex> out;
    for (long long v; in >> v;) out.push_back(static_cast<Vertex>(v));
    if (!in.eof()) throw Error(ErrorCode::ParseError, path + ": expected whitespace-separated vertex ids");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"antikit: antidirected subgraph toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string graph_path;
    auto* validate = app.add_subcommand("validate", "Check a graph file and print its degree profile");
    validate->add_option("graph", graph_path, "oedge or JSON graph")->required();

    int source = 0;
    auto* ood = app.add_subcommand("ood", "Antiwalk distances ood/oid from a source");
    ood->add_option("graph", graph_path)->required();
    ood->add_option("source", source)->required();

    int t = 1;
    int anchor = 0;
    int bound = -1;
    bool bounded = false;
    auto* am = app.add_subcommand("antimatching", "Connected antimatching of size t anchored at a vertex");
    am->add_option("graph", graph_path)->required();
    am->add_option("--t", t, "size")->required();
    am->add_option("--anchor", anchor, "tail of the first edge")->required();
    am->add_flag("--bounded", bounded, "run the exchange loop so that ood(a_1, a_i) <= bound");
    am->add_option("--bound", bound, "distance bound (default 8t)");

    std::string tree_path;
    double beta = 0.25;
    int levels = 0;
    auto* decompose = app.add_subcommand("decompose", "beta-decomposition of a rooted antitree (JSON)");
    decompose->add_option("tree", tree_path)->required();
    decompose->add_option("--beta", beta);
    decompose->add_option("--levels", levels, "also report p, q after shaving this many levels");

    std::string instance_path;
    bool no_check = false;
    auto* pack_cmd = app.add_subcommand("pack", "Pack (p, q) items into t bins (JSON instance)");
    pack_cmd->add_option("instance", instance_path)->required();
    pack_cmd->add_flag("--no-check", no_check, "skip the hypothesis check");

    std::string out_path;
    std::string map_path;
    int ell = 1;
    int k = 4;
    int h = 3;
    std::string lengths;
    std::string roles;
    auto* gen = app.add_subcommand("gen", "Generate example graphs and reductions");
    gen->require_subcommand(1);
    auto* g_blowup = gen->add_subcommand("triangle-blowup", "ell-blow-up of the directed triangle");
    g_blowup->add_option("--ell", ell)->required();
    auto* g_burr = gen->add_subcommand("burr", "K_{k-2,k-2} with a balanced split");
    g_burr->add_option("--k", k)->required();
    auto* g_tt = gen->add_subcommand("tt", "transitive tournament");
    g_tt->add_option("--n", h, "number of vertices")->required();
    auto* g_sub = gen->add_subcommand("antisubdivision", "antisubdivision of K_h");
    g_sub->add_option("--branches", h, "h, the order of the complete graph")->required();
    g_sub->add_option("--lengths", lengths, "path lengths per pair, comma separated, lexicographic")->required();
    g_sub->add_option("--roles", roles, "1 = source, 0 = sink per branch vertex, comma separated");
    auto* g_gadget = gen->add_subcommand("gadget", "four-copy gadget of an oriented graph");
    g_gadget->add_option("graph", graph_path)->required();
    g_gadget->add_option("--map", map_path, "GadgetMap JSON (default <out>.map.json)");
    auto* g_peel = gen->add_subcommand("peel", "pseudo-semidegree peeling");
    g_peel->add_option("graph", graph_path)->required();
    g_peel->add_option("--k", k)->required();
    g_peel->add_option("--map", map_path, "origin map JSON");

    for (auto* sub : {g_blowup, g_burr, g_tt, g_sub, g_gadget, g_peel})
        sub->add_option("-o,--out", out_path, "output file (default stdout)");

    std::string pattern_path;
    int pin_x = -1;
    std::string vstar_path;
    auto* embed = app.add_subcommand("embed", "Exact embedding search");
    embed->add_option("pattern", pattern_path)->required();
    embed->add_option("host", graph_path)->required();
    auto* pin_opt = embed->add_option("--pin", pin_x, "pattern vertex to pin");
    embed->add_option("--vstar", vstar_path, "file with the allowed host vertices for the pinned vertex")->needs(pin_opt);

    auto* lap = app.add_subcommand("longest-antipath", "Vertex count of a longest antidirected path (n <= 20)");
    lap->add_option("graph", graph_path)->required();

    std::string statement;
    std::string n_text;
    std::string k_text;
    bool exhaustive = false;
    int samples = 0;
    std::uint64_t seed = 0;
    bool iso = false;
    double eta = 0.0;
    int workers = 0;
    std::string report_dir;
    auto* verify = app.add_subcommand("verify", "Desk-scale verification run");
    verify->add_option("statement", statement)->required();
    verify->add_option("--n", n_text, "vertex counts: 4, 3..5 or 3,5");
    verify->add_option("--k", k_text, "statement parameter range");
    auto* ex_flag = verify->add_flag("--exhaustive", exhaustive);
    auto* samples_opt = verify->add_option("--samples", samples);
    ex_flag->excludes(samples_opt);
    verify->add_option("--seed", seed);
    verify->add_flag("--iso", iso, "exhaustive over isomorphism classes");
    verify->add_option("--eta", eta);
    verify->add_option("--workers", workers);
    verify->add_option("--out", report_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            const Digraph g = load_digraph(graph_path);
            const DegreeProfile p = degree_profile(g);
            std::cout << "n " << g.order() << "\nm " << g.size() << "\noriented " << (g.is_oriented() ? "yes" : "no")
                      << "\nmin_out " << p.min_out << "\nmin_in " << p.min_in << "\nmin_semidegree " << p.min_semidegree
                      << "\nmin_pseudo_semidegree " << p.min_pseudo_semidegree << "\nantidirected "
                      << (is_antidirected(g) ? "yes" : "no") << "\n";
        } else if (*ood) {
            const Digraph g = load_digraph(graph_path);
            const ReachReport r = reach_from(g, source);
            std::cout << "vertex ood oid\n";
            for (Vertex v = 0; v < g.order(); ++v)
                std::cout << v << ' ' << distance_text(r.ood[v]) << ' ' << distance_text(r.oid[v]) << '\n';
        } else if (*am) {
            const OrientedGraph g = load_graph(graph_path);
            AntimatchingRequest req{t, anchor, std::nullopt};
            if (bound >= 0) req.distance_bound = bound;
            const ConnectedAntiMatching m = bounded ? find_bounded_antimatching(g, req) : find_antimatching(g, req);
            const ReachReport r = reach_from(g, anchor);
            std::cout << "tail head ood\n";
            for (const Edge& e : m.edges) std::cout << e.from << ' ' << e.to << ' ' << distance_text(r.ood[e.from]) << '\n';
        } else if (*decompose) {
            const RootedAntiTree tr = tree_from_json(nlohmann::json::parse(read_text_file(tree_path)));
            const BetaDecomposition d = beta_decompose(tr, beta);
            nlohmann::json j = decomposition_to_json(d);
            if (levels > 0) {
                const ShavedCounts c = shaved_counts(tr, d, levels);
                j["shaved"] = {{"j", c.j}, {"p", c.p}, {"q", c.q}};
            }
            std::cout << j.dump(2) << '\n';
        } else if (*pack_cmd) {
            const PackingInstance inst = packing_instance_from_json(nlohmann::json::parse(read_text_file(instance_path)));
            PackOptions opts;
            opts.check_hypotheses = !no_check;
            std::cout << packing_plan_to_json(inst, pack(inst, opts)).dump(2) << '\n';
        } else if (*gen) {
            if (*g_blowup) {
                emit(write_oedge(blowup(directed_triangle(), ell)), out_path);
            } else if (*g_burr) {
                emit(write_oedge(burr_graph(k)), out_path);
            } else if (*g_tt) {
                emit(write_oedge(transitive_tournament(h)), out_path);
            } else if (*g_sub) {
                AntiSubdivisionSpec spec;
                spec.h = h;
                spec.lengths = parse_range(lengths);
                if (!roles.empty()) {
                    std::vector<bool> r;
                    for (int v : parse_range(roles)) r.push_back(v != 0);
                    spec.branch_is_source = r;
                }
                const AntiSubdivision sub = build_antisubdivision(spec);
                emit(write_oedge(sub.pattern), out_path);
                std::cerr << "branch vertices:";
                for (Vertex v : sub.branch) std::cerr << ' ' << v;
                std::cerr << "\nlong: " << (sub.is_long ? "yes" : "no") << '\n';
            } else if (*g_gadget) {
                const FourCopyGadget gad = four_copy(load_graph(graph_path));
                emit(write_oedge(gad.graph), out_path);
                if (map_path.empty() && !out_path.empty() && out_path != "-") map_path = out_path + ".map.json";
                const std::string map_text = gadget_map_to_json(gad).dump(2) + "\n";
                if (map_path.empty())
                    std::cerr << map_text;
                else
                    write_text_file(map_path, map_text);
            } else if (*g_peel) {
                const PeelResult r = peel_pseudo(load_digraph(graph_path), k);
                emit(write_oedge(r.graph), out_path);
                if (!map_path.empty()) write_text_file(map_path, nlohmann::json{{"origin", r.origin}}.dump(2) + "\n");
            }
        } else if (*embed) {
            const OrientedGraph pattern = load_graph(pattern_path);
            const OrientedGraph host = load_graph(graph_path);
            std::optional<Pin> pin;
            if (pin_x >= 0) {
                Pin p;
                p.x = pin_x;
                if (vstar_path.empty()) {
                    p.allowed.resize(static_cast<std::size_t>(host.order()));
                    for (Vertex v = 0; v < host.order(); ++v) p.allowed[v] = v;
                } else {
                    p.allowed = read_vertex_list(vstar_path);
                }
                pin = p;
            }
            if (const auto m = embed_exact(pattern, host, pin)) {
                for (Vertex v = 0; v < pattern.order(); ++v) std::cout << v << ' ' << m->image[v] << '\n';
            } else {
                std::cout << "NOT FOUND\n";
                exit_code = 1;
            }
        } else if (*lap) {
            std::cout << longest_antipath(load_digraph(graph_path)) << '\n';
        } else if (*verify) {
            VerificationJob job;
            job.statement = parse_statement(statement);
            if (!n_text.empty()) job.n_range = parse_range(n_text);
            if (!k_text.empty()) job.k_range = parse_range(k_text);
            job.mode = samples > 0 && !exhaustive ? Mode::sampled : Mode::exhaustive;
            job.sample_count = samples;
            job.seed = seed;
            job.up_to_isomorphism = iso;
            job.eta = eta;
            job.workers = workers;
            const VerificationReport r = run(job);
            report_emit(r, report_dir);
            std::cout << to_string(job.statement) << ": " << r.instances_checked << " instances, "
                      << r.counterexample_total << " counterexamples, " << r.elapsed_ms << " ms\n"
                      << (r.passed() ? "PASS" : "FAIL") << '\n';
            if (!r.passed()) exit_code = 1;
        }
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return exit_code;
}
