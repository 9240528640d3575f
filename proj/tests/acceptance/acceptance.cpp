// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "../support.hpp"
#include "flagforge/bipartite.hpp"
#include "flagforge/decomposability.hpp"
#include "flagforge/homology.hpp"
#include "flagforge/io.hpp"
#include "flagforge/search.hpp"

using namespace flagforge;
using namespace testing;
using nlohmann::json;

namespace {

// Collects failures for one criterion; the first few are printed.
struct Check {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (++failures <= 5) notes << "    failed: " << what << "\n";
    }
    void note(const std::string& s) { notes << "    " << s << "\n"; }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > limit_seconds) c.expect(false, "runtime " + std::to_string(seconds) + " s over the limit");
    const bool pass = c.failures == 0 && c.cases > 0;
    if (!pass) ++failed_criteria;
    std::printf("%s  %2d  %-68s %10llu checks  %8.2f s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                static_cast<unsigned long long>(c.cases), seconds);
    std::cout << c.notes.str() << std::flush;
}

std::string show(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string name(const Graph& g) { return to_graph6(g); }

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string command = std::string(FLAGFORGE_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::int64_t alternating_betti(const IntVector& betti) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) s += (i % 2 == 1) ? betti[i] : -betti[i];
    return s;
}

bool boundary_squares_to_zero(const SimplicialComplex& c) {
    for (int k = 0; k + 1 <= c.dimension(); ++k)
        for (auto x : compose(boundary_matrix(c, k), boundary_matrix(c, k + 1)))
            if (x != 0) return false;
    return true;
}

// Every clique vertex-partition without empty blocks, plus the same with one empty clique appended.
std::vector<CliquePartition> partitions_with_empty(const Graph& g) {
    std::vector<CliquePartition> out;
    for (auto pi : clique_partitions(g)) {
        out.push_back(pi);
        pi.cliques.push_back(0);
        out.push_back(pi);
    }
    return out;
}

}  // namespace

int main() {
    std::cout << "acceptance: exact integer arithmetic, tolerance 0\n";

    criterion(1, "h(Ind G^pi) = f(Ind G), all graphs <= 6 vertices", 120, [](Check& c) {
        for (int n = 0; n <= 6; ++n)
            for (const Graph& g : graph_classes(n)) {
                const IntVector f = f_vector(independence_complex(g));
                for (const auto& pi : partitions_with_empty(g)) {
                    const IntVector h = h_vector(independence_complex(clique_whisker(g, pi).graph));
                    c.expect(f.size() <= h.size() && pad_to(f, h.size()) == h,
                             name(g) + " " + format_partition(pi) + ": h=" + show(h) + " f=" + show(f));
                }
            }
    });

    criterion(2, "Ind G^pi pure of dim t-1 and vertex-decomposable; base vertices shed", 300, [](Check& c) {
        for (int n = 0; n <= 6; ++n)
            for (const Graph& g : graph_classes(n))
                for (const auto& pi : partitions_with_empty(g)) {
                    const auto ind = independence_complex(clique_whisker(g, pi).graph);
                    const std::string what = name(g) + " " + format_partition(pi);
                    c.expect(is_pure(ind) && ind.dimension() == pi.block_count() - 1, what + ": purity/dimension");
                    const auto tree = vertex_decomposition(ind);
                    c.expect(tree && verify_shed_tree(ind, *tree), what + ": shedding tree");
                    if (n <= 5)
                        for (int v = 0; v < n; ++v) c.expect(is_shedding_vertex(ind, v), what + ": vertex " + std::to_string(v));
                }
    });

    criterion(3, "no h-vector (1,3,3) on <= 7 vertices; (1,3) realized only by C3", 60, [](Check& c) {
        const auto scan = scan_h133(7);
        c.expect(!scan.witness, scan.witness ? "witness " + name(*scan.witness) : "");
        c.note("graphs checked: " + std::to_string(scan.graphs_checked));
        const auto r = realize_f_as_flag({1, 3}, 9);
        c.expect(r && *r == complete_graph(3), "realize (1,3)");
        int hits = 0;
        for (const Graph& g : labeled_graphs(3)) hits += strip_trailing_zeros(f_vector(independence_complex(g))) == IntVector{1, 3};
        c.expect(hits == 1, "3-vertex graphs with f = (1,3): " + std::to_string(hits));
    });

    criterion(4, "bipartite <= 10: pure order <=> pure; cross-free <=> CM <=> triangular <=> VD", 600, [](Check& c) {
        std::uint64_t graphs = 0, cm = 0;
        for (int n = 0; n <= 10; ++n)
            for (const Graph& g : bipartite_classes(n)) {
                ++graphs;
                const auto ind = independence_complex(g);
                const bool pure = is_pure(ind);
                const bool has_order = find_pure_order(g).has_value();
                c.expect(has_order == pure, name(g) + ": pure order vs purity");
                const bool by_homology = is_cm(ind);
                const bool triangular = find_triangular_order(g).has_value();
                const auto cross_free = is_cross_free(g);
                c.expect(cross_free.has_value() == pure, name(g) + ": cross-freeness defined iff pure");
                if (pure) {
                    const bool vd = is_vertex_decomposable(ind);
                    c.expect(*cross_free == by_homology && by_homology == triangular && triangular == vd,
                             name(g) + ": four-way disagreement");
                } else {
                    c.expect(!by_homology && !triangular, name(g) + ": impure yet Cohen-Macaulay");
                }
                cm += by_homology;
            }
        c.note("bipartite classes: " + std::to_string(graphs) + ", Cohen-Macaulay: " + std::to_string(cm));
    });

    criterion(5, "bipartite Buchsbaum classifier = homology test, <= 8 vertices", 300, [](Check& c) {
        for (int n = 0; n <= 8; ++n)
            for (const Graph& g : bipartite_classes(n))
                c.expect(is_buchsbaum_bipartite(g) == is_buchsbaum(independence_complex(g)), name(g));
        for (int k : {2, 3}) {
            const auto ind = independence_complex(complete_bipartite_graph(k, k));
            c.expect(is_buchsbaum(ind) && !is_cm(ind) && is_buchsbaum_bipartite(complete_bipartite_graph(k, k)),
                     "K" + std::to_string(k) + "," + std::to_string(k));
        }
        c.expect(is_cm(independence_complex(complete_bipartite_graph(1, 1))), "K1,1");
    });

    criterion(6, "h(Ind G) = f(Ind compress G), CM bipartite <= 10 vertices", 300, [](Check& c) {
        std::uint64_t cm = 0;
        for (int n = 0; n <= 10; ++n)
            for (const Graph& g : bipartite_classes(n)) {
                const auto ind = independence_complex(g);
                if (!is_cm(ind)) continue;
                ++cm;
                const IntVector h = h_vector(ind);
                const IntVector f = f_vector(independence_complex(compress(g).graph));
                c.expect(f.size() <= h.size() && pad_to(f, h.size()) == h, name(g) + ": h=" + show(h) + " f=" + show(f));
            }
        c.note("Cohen-Macaulay bipartite classes: " + std::to_string(cm));
        const auto fc = compress(ferrers());
        c.expect(fc.graph == complete_graph(3), "Ferrers compresses to C3");
        c.expect(f_vector(independence_complex(fc.graph)) == IntVector{1, 3}, "f(Ind C3) = (1,3)");
    });

    criterion(7, "extrude-search: H has no CM extrusion after 512; C3 has one", 10, [](Check& c) {
        const std::string fixtures = FLAGFORGE_FIXTURES;
        auto [code, out] = run_cli("extrude-search " + fixtures + "/h6.json --quiet");
        c.expect(code == 0, "exit code " + std::to_string(code));
        if (code == 0) {
            const auto j = json::parse(out);
            c.expect(j.at("result").is_null(), "H: an extrusion was returned (orientation " +
                                                   (j.at("result").is_null() ? std::string("-") : j.at("result").at("orientation").dump()) + ")");
            c.expect(j.at("candidates_tried") == 512, "H: candidates_tried = " + j.at("candidates_tried").dump());
            if (!j.at("result").is_null()) {
                const Graph e = io::graph_from_json(j.at("result").at("graph"));
                c.note("returned extrusion of H is Cohen-Macaulay by the homology oracle: " +
                       std::string(is_cm(independence_complex(e)) ? "yes" : "no"));
            }
        }
        auto [code3, out3] = run_cli("extrude-search " + fixtures + "/c3.json --quiet");
        c.expect(code3 == 0, "C3 exit code " + std::to_string(code3));
        if (code3 == 0) {
            const auto j = json::parse(out3);
            c.expect(!j.at("result").is_null(), "C3: no extrusion");
            if (!j.at("result").is_null()) {
                const Graph e = io::graph_from_json(j.at("result").at("graph"));
                c.expect(is_cm(independence_complex(e)), "C3: extrusion not Cohen-Macaulay");
                c.expect(e == io::load_graph(fixtures + "/c3_extrusion.json"), "C3: differs from {ux,vy,wz,uy,vz,uz}");
            }
        }
    });

    criterion(8, "odd holes: C5, C7 and hole-preserving chords have no pure extrusion", 60, [](Check& c) {
        std::vector<Graph> graphs = {cycle_graph(5), cycle_graph(7)};
        int preserving5 = 0;
        for (int n : {5, 7})
            for (int i = 0; i < n; ++i)
                for (int j = i + 2; j < n; ++j) {
                    if (i == 0 && j == n - 1) continue;
                    const Graph g = with_edge(cycle_graph(n), i, j);
                    if (!has_odd_hole(g)) continue;
                    preserving5 += n == 5;
                    graphs.push_back(g);
                }
        c.expect(preserving5 == 0, "a chord of C5 kept a hole");
        c.note("no chord of C5 preserves a hole; C7 chords kept: " + std::to_string(graphs.size() - 2));
        for (const Graph& g : graphs) {
            const auto s = search_cm_extrusion(g, Budget{}, true);
            c.expect(s.pure_words.empty() && s.candidates_tried == (std::uint64_t{1} << g.size()), name(g));
            c.expect(odd_hole_obstruction(g, Budget{}) == OddHoleVerdict::Confirmed, name(g) + ": verdict");
        }
    });

    criterion(9, "h-is-f scan, n <= 6: zero counterexamples", 900, [](Check& c) {
        ScanOptions o;
        o.n_max = 6;
        const auto r = scan_conjecture(o);
        c.expect(r.complete, "scan incomplete");
        c.expect(r.counterexamples.empty(), std::to_string(r.counterexamples.size()) + " counterexamples");
        for (const auto& rec : r.records) {
            c.expect(rec.cohen_macaulay, name(rec.graph) + ": vertex-decomposable but not Cohen-Macaulay");
            if (rec.realizer)
                c.expect(strip_trailing_zeros(f_vector(independence_complex(*rec.realizer))) == rec.h, name(rec.graph) + ": realizer");
        }
        c.note("graphs: " + std::to_string(r.position) + ", pure vertex-decomposable: " + std::to_string(r.pure_vd));
    });

    criterion(10, "boundary^2 = 0, Euler/Betti, f<->h roundtrip, join multiplicativity", 300, [](Check& c) {
        std::vector<SimplicialComplex> complexes;
        for (int n = 0; n <= 5; ++n)
            for (const auto& x : all_complexes(n))
                if (!x.is_void()) complexes.push_back(x);
        for (int n = 0; n <= 8; ++n)
            for (const Graph& g : graph_classes(n)) complexes.push_back(independence_complex(g));
        complexes.push_back(SimplicialComplex::simplex(8, low_bits(8)));
        for (const auto& x : complexes) {
            c.expect(boundary_squares_to_zero(x), "boundary");
            c.expect(euler_characteristic(x) == 1 + alternating_betti(reduced_betti(x)), "Euler");
            const IntVector f = f_vector(x);
            const IntVector h = h_vector(x);
            c.expect(f_from_h(h) == f && h_from_f(f) == h, "roundtrip " + show(f));
        }
        std::vector<SimplicialComplex> small;
        for (int n = 0; n <= 3; ++n)
            for (const auto& x : all_complexes(n))
                if (!x.is_void()) small.push_back(x);
        for (int n = 0; n <= 5; ++n)
            for (const Graph& g : graph_classes(n)) small.push_back(independence_complex(g));
        for (const auto& a : small)
            for (const auto& b : small) {
                if (a.ground_size() + b.ground_size() > 10) continue;
                c.expect(h_vector(join(a, b)) == polynomial_product(h_vector(a), h_vector(b)), "join");
            }
    });

    std::cout << (failed_criteria == 0 ? "all criteria passed\n" : std::to_string(failed_criteria) + " criteria failed\n");
    return failed_criteria == 0 ? 0 : 1;
}
