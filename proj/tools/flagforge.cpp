// Command-line front end: one JSON verdict per invocation.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagforge/bipartite.hpp"
#include "flagforge/budget.hpp"
#include "flagforge/complex.hpp"
#include "flagforge/decomposability.hpp"
#include "flagforge/errors.hpp"
#include "flagforge/homology.hpp"
#include "flagforge/io.hpp"
#include "flagforge/search.hpp"
#include "flagforge/whiskering.hpp"

using namespace flagforge;
using io::json;

namespace {

enum Exit { Ok = 0, Usage = 1, Parse = 2, Domain = 3, OverBudget = 4, Internal = 5 };

struct Globals {
    bool quiet = false;
    bool pretty = false;
    int jobs = 1;
    std::string verify;
};

struct Args {
    std::string input;
    std::string partition;
    std::string out;
    std::string resume;
    std::string conjecture = "h-is-f";
    std::string naming = "indexed";
    std::vector<std::string> values;
    std::uint32_t characteristic = 0;
    std::uint64_t budget = 0;
    std::uint64_t limit = 0;
    int n = 6;
    int n_max = -1;
    bool all = false;
    bool bipartite = false;
    bool labeled = false;
};

json reduced_betti_json(const IntVector& b) {
    // entry i is the reduced Betti number in degree i - 1
    return b;
}

json cm_witness(const CmReport& r) {
    if (r.cohen_macaulay || !r.face) return nullptr;
    return {{"face", io::vertex_list(*r.face)}, {"degree", r.degree}};
}

// Accepts a bare certificate, or a verdict holding it under one of the given keys.
json certificate_from(const json& j, std::initializer_list<const char*> keys) {
    for (const char* k : keys)
        if (j.is_object() && j.contains(k)) return j.at(k);
    return j;
}

json verified(std::optional<std::string> problem) {
    return {{"verified", !problem}, {"reason", problem ? json(*problem) : json(nullptr)}};
}

CliquePartition partition_for(const Graph& g, const std::string& text) {
    return text.empty() ? trivial_partition(g) : parse_partition(text);
}

IntVector parse_vector(const std::vector<std::string>& values) {
    IntVector out;
    for (const std::string& v : values) {
        std::string s = v;
        for (char& c : s)
            if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
        std::stringstream in(s);
        std::string token;
        while (in >> token) {
            std::size_t used = 0;
            long long x = 0;
            try {
                x = std::stoll(token, &used);
            } catch (const std::exception&) {
                throw ParseError("expected an integer, got '" + token + "'");
            }
            if (used != token.size()) throw ParseError("expected an integer, got '" + token + "'");
            out.push_back(x);
        }
    }
    if (out.empty()) throw ParseError("no entries given");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

void write_graph(const std::string& path, const Graph& g) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        write_text(path, io::graph_to_json(g).dump(2) + "\n");
    else
        write_text(path, io::format_graph_text(g));
}

Budget budget_for(const Args& a) {
    Budget b = Budget::from_env();
    if (a.budget) b.extrusion_candidates = a.budget;
    return b;
}

json run(const std::string& command, const Args& a, const Globals& g) {
    const bool verifying = !g.verify.empty();

    if (command == "fvector") return {{"f", f_vector(io::load_complex(a.input))}};
    if (command == "hvector") return {{"h", h_vector(io::load_complex(a.input))}};

    if (command == "ind") {
        const auto c = independence_complex(io::load_graph(a.input));
        return {{"complex", io::complex_to_json(c)}, {"f", f_vector(c)}};
    }

    if (command == "whisker") {
        const Graph base = io::load_graph(a.input);
        const auto pi = partition_for(base, a.partition);
        const auto w = clique_whisker(base, pi);
        if (!a.out.empty()) write_graph(a.out, w.graph);
        return {{"graph", io::graph_to_json(w.graph)}, {"partition", format_partition(pi)}, {"whiskers", w.whisker}};
    }

    if (command == "whisker-partition") {
        const Graph base = io::load_graph(a.input);
        const auto pi = partition_for(base, a.partition);
        const auto ind = independence_complex(clique_whisker(base, pi).graph);
        if (verifying) {
            const auto p = io::partitioning_from_json(certificate_from(io::load_json(g.verify), {"certificate"}));
            return verified(validate_partitioning(ind, p));
        }
        const auto p = whisker_partitioning(base, pi);
        return {{"partition", format_partition(pi)},
                {"certificate", io::partitioning_to_json(p)},
                {"h", h_from_partitioning(p, pi.block_count())}};
    }

    if (command == "check-vd") {
        const auto c = io::load_complex(a.input);
        if (verifying) {
            const auto tree = io::shed_tree_from_json(certificate_from(io::load_json(g.verify), {"certificate"}));
            if (!tree) return verified("no certificate");
            return verified(verify_shed_tree(c, *tree) ? std::nullopt : std::optional<std::string>("replay failed"));
        }
        const auto tree = vertex_decomposition(c);
        return {{"vertex_decomposable", tree != nullptr}, {"certificate", io::shed_tree_to_json(tree)}};
    }

    if (command == "is-cm") {
        const auto r = cohen_macaulay_report(io::load_complex(a.input), a.characteristic);
        return {{"cohen_macaulay", r.cohen_macaulay}, {"characteristic", a.characteristic}, {"witness", cm_witness(r)}};
    }

    if (command == "is-buchsbaum") {
        const auto r = buchsbaum_report(io::load_complex(a.input), a.characteristic);
        json witness = nullptr;
        if (!r.pure) witness = {{"pure", false}};
        else if (r.vertex) witness = {{"vertex", *r.vertex}};
        return {{"buchsbaum", r.buchsbaum}, {"characteristic", a.characteristic}, {"witness", witness}};
    }

    if (command == "betti") {
        return {{"betti", reduced_betti_json(reduced_betti(io::load_complex(a.input), a.characteristic))},
                {"first_degree", -1},
                {"characteristic", a.characteristic}};
    }

    if (command == "pure-order") {
        const Graph graph = io::load_graph(a.input);
        if (!is_bipartite(graph)) throw DomainError("graph is not bipartite");
        if (verifying) {
            const auto o = io::pure_order_from_json(certificate_from(io::load_json(g.verify), {"certificate"}));
            return verified(is_valid_pure_order(graph, o) ? std::nullopt : std::optional<std::string>("not a pure order"));
        }
        const auto o = find_pure_order(graph);
        return {{"pure", o.has_value()}, {"certificate", o ? io::pure_order_to_json(*o) : json(nullptr)}};
    }

    if (command == "check-cm-bipartite") {
        const Graph graph = io::load_graph(a.input);
        if (!is_bipartite(graph)) throw DomainError("graph is not bipartite");
        if (verifying) {
            const auto o = io::pure_order_from_json(certificate_from(io::load_json(g.verify), {"certificate"}));
            if (!is_valid_pure_order(graph, o)) return verified("not a pure order");
            return verified(is_triangular(graph, o) ? std::nullopt : std::optional<std::string>("order is not triangular"));
        }
        const auto r = is_cm_bipartite(graph);
        return {{"cohen_macaulay", r.cohen_macaulay},
                {"by_triangular_order", r.by_triangular_order},
                {"by_cross_free", r.by_cross_free},
                {"by_homology", r.by_homology},
                {"certificate", r.certificate ? io::pure_order_to_json(*r.certificate) : json(nullptr)}};
    }

    if (command == "check-buchsbaum-bipartite") {
        const Graph graph = io::load_graph(a.input);
        const bool verdict = is_buchsbaum_bipartite(graph);
        return {{"buchsbaum", verdict},
                {"balanced_complete_bipartite", is_balanced_complete_bipartite(graph)},
                {"cohen_macaulay", is_cm_bipartite(graph).cohen_macaulay},
                {"by_homology", is_buchsbaum(independence_complex(graph))}};
    }

    if (command == "compress") {
        const Graph graph = io::load_graph(a.input);
        const auto c = compress(graph);
        if (!a.out.empty()) write_graph(a.out, c.graph);
        return {{"graph", io::graph_to_json(c.graph)},
                {"certificate", io::pure_order_to_json(c.order)},
                {"h", h_vector(independence_complex(graph))},
                {"f_compressed", f_vector(independence_complex(c.graph))}};
    }

    if (command == "extrude-search") {
        const Graph graph = io::load_graph(a.input);
        if (verifying) {
            const json cert = certificate_from(io::load_json(g.verify), {"result", "certificate"});
            if (cert.is_null()) return verified("no extrusion to verify");
            const auto e = make_extrusion(graph, cert.at("orientation").get<std::uint64_t>());
            if (io::graph_from_json(cert.at("graph")) != e.result) return verified("graph does not match the orientation");
            return verified(is_cm(independence_complex(e.result)) ? std::nullopt
                                                                   : std::optional<std::string>("extrusion is not Cohen-Macaulay"));
        }
        const auto s = search_cm_extrusion(graph, budget_for(a), a.all, g.jobs);
        json out = {{"result", s.found ? io::extrusion_to_json(*s.found) : json(nullptr)}, {"candidates_tried", s.candidates_tried}};
        if (a.all) out["pure_orientations"] = s.pure_words;
        return out;
    }

    if (command == "realize-f") {
        const IntVector f = parse_vector(a.values);
        const Budget b = budget_for(a);
        const int n_max = a.n_max >= 0 ? a.n_max : b.dedup_vertices;
        const auto r = realize_f_as_flag(f, n_max, b);
        return {{"f", f}, {"realizer", r ? io::graph_to_json(*r) : json(nullptr)}, {"graph6", r ? json(to_graph6(*r)) : json(nullptr)}};
    }

    if (command == "scan") {
        const Budget b = budget_for(a);
        if (a.conjecture == "h133") {
            const auto r = scan_h133(a.n, b);
            return {{"conjecture", "h133"},
                    {"n_max", r.n_max},
                    {"graphs_checked", r.graphs_checked},
                    {"witness", r.witness ? json(to_graph6(*r.witness)) : json(nullptr)}};
        }
        if (a.conjecture != "h-is-f") throw ParseError("unknown conjecture '" + a.conjecture + "' (h-is-f, h133)");
        ScanReport report;
        if (!a.resume.empty()) {
            report = resume_scan(io::scan_report_from_json(io::load_json(a.resume)), a.limit, g.jobs, b);
        } else {
            ScanOptions o;
            o.n_max = a.n;
            o.dedup = !a.labeled;
            o.bipartite_only = a.bipartite;
            o.jobs = g.jobs;
            o.limit = a.limit;
            report = scan_conjecture(o, b);
        }
        const json full = io::scan_report_to_json(report);
        json counterexamples = json::array();
        for (std::size_t i : report.counterexamples) counterexamples.push_back(to_graph6(report.records[i].graph));
        json out = {{"conjecture", "h-is-f"},
                    {"n_max", report.options.n_max},
                    {"complete", report.complete},
                    {"position", report.position},
                    {"pure_vd", report.pure_vd},
                    {"counterexamples", counterexamples}};
        if (!a.out.empty()) {
            write_text(a.out, full.dump(2) + "\n");
            out["report"] = a.out;
        } else {
            out["report"] = full;
        }
        return out;
    }

    throw ParseError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag complexes, whiskering and Cohen-Macaulay bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    Args a;
    app.add_flag("--quiet,-q", g.quiet, "print only the result fields");
    app.add_flag("--pretty", g.pretty, "indent the JSON output");
    app.add_option("--jobs,-j", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--verify", g.verify, "check a certificate instead of computing one");

    auto input = [&](CLI::App* sub, const char* what) { sub->add_option("input", a.input, what)->required(); };
    auto graph_or_complex = "graph or complex file (.json or text)";

    input(app.add_subcommand("fvector", "f-vector of a complex or of Ind(G)"), graph_or_complex);
    input(app.add_subcommand("hvector", "h-vector of a complex or of Ind(G)"), graph_or_complex);
    input(app.add_subcommand("ind", "independence complex of a graph"), "graph file");

    for (const char* name : {"whisker", "whisker-partition"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "whisker" ? "clique-whisker a graph" : "interval partitioning of a clique-whiskering");
        input(sub, "graph file");
        sub->add_option("--partition", a.partition, "cliques as '0,1|2', '~' for an empty clique (default: singletons)");
        if (std::string(name) == "whisker") sub->add_option("--out", a.out, "also write the whiskered graph to this file");
    }

    input(app.add_subcommand("check-vd", "vertex-decomposability with a shedding certificate"), graph_or_complex);
    for (const char* name : {"is-cm", "is-buchsbaum", "betti"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "betti" ? "reduced Betti numbers" : std::string("Reisner test: ") + name);
        input(sub, graph_or_complex);
        sub->add_option("--char", a.characteristic, "field characteristic: 0 or a prime");
    }

    input(app.add_subcommand("pure-order", "pure order of a bipartite graph"), "graph file");
    input(app.add_subcommand("check-cm-bipartite", "Cohen-Macaulay test for bipartite graphs"), "graph file");
    input(app.add_subcommand("check-buchsbaum-bipartite", "Buchsbaum test for bipartite graphs"), "graph file");
    {
        auto* sub = app.add_subcommand("compress", "compression of a Cohen-Macaulay bipartite graph");
        input(sub, "graph file");
        sub->add_option("--out", a.out, "also write the compressed graph to this file");
    }
    {
        auto* sub = app.add_subcommand("extrude-search", "search the extrusions for a Cohen-Macaulay one");
        input(sub, "graph file");
        sub->add_option("--budget", a.budget, "maximum number of candidates");
        sub->add_flag("--all", a.all, "scan every candidate and list the pure ones");
    }
    {
        auto* sub = app.add_subcommand("realize-f", "find a graph whose independence complex has this f-vector");
        sub->add_option("f", a.values, "entries, e.g. '1,3' or 1 3")->required();
        sub->add_option("--n-max", a.n_max, "largest vertex count to search");
    }
    {
        auto* sub = app.add_subcommand("scan", "exhaustive conjecture scan");
        sub->add_option("--conjecture", a.conjecture, "h-is-f or h133");
        sub->add_option("--n", a.n, "largest vertex count");
        sub->add_option("--out", a.out, "write the scan report here");
        sub->add_option("--resume", a.resume, "continue a partial scan report");
        sub->add_option("--limit", a.limit, "stop after this many graphs");
        sub->add_flag("--bipartite", a.bipartite, "bipartite graphs only");
        sub->add_flag("--labeled", a.labeled, "every labeled graph instead of isomorphism classes");
        sub->add_option("--budget", a.budget, "maximum number of extrusion candidates");
    }
    {
        auto* sub = app.add_subcommand("export-sr", "Stanley-Reisner generators as plain text");
        input(sub, graph_or_complex);
        sub->add_option("--naming", a.naming, "indexed (x0..), shifted (x1..) or labels");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        if (command == "export-sr") {
            const auto in = io::load_input(a.input);
            const auto naming = io::parse_naming(a.naming);
            if (const auto* graph = std::get_if<Graph>(&in))
                std::cout << io::stanley_reisner_text(independence_complex(*graph), naming, graph->labels());
            else
                std::cout << io::stanley_reisner_text(std::get<SimplicialComplex>(in), naming);
            return Ok;
        }
        json payload = run(command, a, g);
        nlohmann::ordered_json out;
        if (g.quiet) {
            for (auto& [k, v] : payload.items()) out[k] = v;
        } else {
            out["command"] = command;
            if (!a.input.empty()) out["input"] = a.input;
            for (auto& [k, v] : payload.items()) out[k] = v;
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            out["elapsed_ms"] = std::round(ms * 1000.0) / 1000.0;
        }
        std::cout << out.dump(g.pretty ? 2 : -1) << "\n";
        return Ok;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Parse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return Domain;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return OverBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Internal;
    }
}
