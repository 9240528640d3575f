#include "flagforge/io.hpp"

#include <fstream>
#include <sstream>

#include "flagforge/errors.hpp"

namespace flagforge::io {

namespace {

// Lines with comments removed; blank lines dropped.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

std::vector<long long> integers(const std::string& line) {
    std::stringstream in(line);
    std::vector<long long> out;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + token + "'");
        }
        if (used != token.size()) throw ParseError("expected an integer, got '" + token + "'");
        out.push_back(v);
    }
    return out;
}

int checked_order(long long n) {
    if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range: " + std::to_string(n));
    return static_cast<int>(n);
}

template <class Fn>
auto rethrow_as_parse(Fn&& fn) {
    try {
        return fn();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty graph file");
    const auto header = integers(lines[0]);
    if (header.size() != 2) throw ParseError("graph header must be 'n m'");
    const int n = checked_order(header[0]);
    if (header[1] < 0) throw ParseError("negative edge count");
    if (static_cast<long long>(lines.size()) - 1 != header[1])
        throw ParseError("header announces " + std::to_string(header[1]) + " edges, file has " + std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto e = integers(lines[i]);
        if (e.size() != 2) throw ParseError("edge line must be 'u v': " + lines[i]);
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) throw ParseError("edge endpoint out of range: " + lines[i]);
        edges.emplace_back(static_cast<int>(e[0]), static_cast<int>(e[1]));
    }
    return rethrow_as_parse([&] { return Graph::from_edges(n, edges); });
}

std::string format_graph_text(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph graph_from_json(const json& j) {
    return rethrow_as_parse([&] {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ParseError("graph JSON needs 'n' and 'edges'");
        const int n = checked_order(j.at("n").get<long long>());
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
            const long long u = e[0].get<long long>(), v = e[1].get<long long>();
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        std::vector<std::string> labels;
        if (j.contains("labels") && !j.at("labels").is_null()) {
            labels = j.at("labels").get<std::vector<std::string>>();
            if (static_cast<int>(labels.size()) != n) throw ParseError("label count differs from n");
        }
        return Graph::from_edges(n, edges, labels);
    });
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json out = {{"n", g.order()}, {"edges", edges}};
    if (g.has_labels()) out["labels"] = g.labels();
    return out;
}

SimplicialComplex parse_complex_text(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty complex file");
    std::stringstream head(lines[0]);
    std::string tag;
    head >> tag;
    if (tag != "complex") throw ParseError("complex file must start with 'complex n f'");
    std::string rest;
    std::getline(head, rest);
    const auto header = integers(rest);
    if (header.size() != 2) throw ParseError("complex header must be 'complex n f'");
    const int n = checked_order(header[0]);
    if (static_cast<long long>(lines.size()) - 1 != header[1]) throw ParseError("facet count differs from header");
    std::vector<VertexSet> facets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        VertexSet f = 0;
        if (lines[i].find_first_not_of(" \t\r-") != std::string::npos || lines[i].find('-') == std::string::npos) {
            for (long long v : integers(lines[i])) {
                if (v < 0 || v >= n) throw ParseError("facet vertex out of range: " + lines[i]);
                if (contains(f, static_cast<int>(v))) throw ParseError("repeated vertex in facet: " + lines[i]);
                f |= bit(static_cast<int>(v));
            }
        }
        facets.push_back(f);
    }
    return rethrow_as_parse([&] { return SimplicialComplex::from_facets(n, facets); });
}

std::string format_complex_text(const SimplicialComplex& c) {
    std::string out = "complex " + std::to_string(c.ground_size()) + " " + std::to_string(c.facets().size()) + "\n";
    for (VertexSet f : c.facets()) {
        if (f == 0) {
            out += "-\n";
            continue;
        }
        std::string line;
        for_each_vertex(f, [&](int v) { line += (line.empty() ? "" : " ") + std::to_string(v); });
        out += line + "\n";
    }
    return out;
}

SimplicialComplex complex_from_json(const json& j) {
    return rethrow_as_parse([&] {
        if (!j.is_object() || !j.contains("n") || !j.contains("facets")) throw ParseError("complex JSON needs 'n' and 'facets'");
        const int n = checked_order(j.at("n").get<long long>());
        std::vector<VertexSet> facets;
        for (const auto& f : j.at("facets")) facets.push_back(vertex_set_from_json(f, n));
        return SimplicialComplex::from_facets(n, facets);
    });
}

json complex_to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (VertexSet f : c.facets()) facets.push_back(vertex_list(f));
    return {{"n", c.ground_size()}, {"facets", facets}};
}

Input parse_input(const std::string& text, bool as_json) {
    if (as_json) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(e.what());
        }
        if (j.is_object() && j.contains("facets")) return complex_from_json(j);
        if (j.is_object() && j.contains("edges")) return graph_from_json(j);
        throw ParseError("JSON input is neither a graph nor a complex");
    }
    const auto lines = content_lines(text);
    if (!lines.empty() && lines[0].find("complex") != std::string::npos) return parse_complex_text(text);
    return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {
bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}
}  // namespace

Input load_input(const std::string& path) { return parse_input(read_file(path), has_json_extension(path)); }

Graph load_graph(const std::string& path) {
    Input in = load_input(path);
    if (auto* g = std::get_if<Graph>(&in)) return *g;
    throw ParseError(path + " holds a complex, a graph is required");
}

SimplicialComplex load_complex(const std::string& path) {
    Input in = load_input(path);
    if (auto* g = std::get_if<Graph>(&in)) return independence_complex(*g);
    return std::get<SimplicialComplex>(in);
}

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json vertex_list(VertexSet s) { return to_indices(s); }

VertexSet vertex_set_from_json(const json& j, int ground_size) {
    if (!j.is_array()) throw ParseError("vertex list must be an array");
    VertexSet s = 0;
    for (const auto& item : j) {
        const long long v = item.get<long long>();
        if (v < 0 || v >= ground_size) throw ParseError("vertex out of range: " + std::to_string(v));
        if (contains(s, static_cast<int>(v))) throw ParseError("repeated vertex " + std::to_string(v));
        s |= bit(static_cast<int>(v));
    }
    return s;
}

json shed_tree_to_json(const ShedTreePtr& tree) {
    if (!tree) return nullptr;
    if (tree->is_simplex()) return {{"simplex", true}};
    return {{"vertex", tree->vertex}, {"link", shed_tree_to_json(tree->link)}, {"deletion", shed_tree_to_json(tree->deletion)}};
}

ShedTreePtr shed_tree_from_json(const json& j) {
    return rethrow_as_parse([&]() -> ShedTreePtr {
        if (!j.is_object()) throw ParseError("shed tree node must be an object");
        if (j.contains("simplex")) return std::make_shared<const ShedTree>();
        const int v = j.at("vertex").get<int>();
        if (v < 0 || v >= kMaxVertices) throw ParseError("shed tree vertex out of range");
        return std::make_shared<const ShedTree>(ShedTree{v, shed_tree_from_json(j.at("link")), shed_tree_from_json(j.at("deletion"))});
    });
}

json pure_order_to_json(const PureOrder& o) { return {{"x", o.x}, {"y", o.y}, {"z", o.z}}; }

PureOrder pure_order_from_json(const json& j) {
    return rethrow_as_parse([&] {
        PureOrder o;
        o.x = j.at("x").get<std::vector<int>>();
        o.y = j.at("y").get<std::vector<int>>();
        o.z = j.at("z").get<std::vector<int>>();
        return o;
    });
}

json extrusion_to_json(const Extrusion& e) {
    json base_edges = json::array();
    for (auto [u, v] : e.base.edges()) base_edges.push_back({u, v});
    const int n = e.base.order();
    std::vector<int> x, y;
    for (int i = 0; i < n; ++i) {
        x.push_back(i);
        y.push_back(n + i);
    }
    return {{"base_edges", base_edges}, {"orientation", e.orientation}, {"x", x}, {"y", y}, {"graph", graph_to_json(e.result)}};
}

json partitioning_to_json(const IntervalPartitioning& p) {
    json intervals = json::array();
    for (const Interval& iv : p.intervals) intervals.push_back({{"lower", vertex_list(iv.lower)}, {"upper", vertex_list(iv.upper)}});
    return {{"ground_size", p.ground_size}, {"intervals", intervals}};
}

IntervalPartitioning partitioning_from_json(const json& j) {
    return rethrow_as_parse([&] {
        IntervalPartitioning p;
        p.ground_size = checked_order(j.at("ground_size").get<long long>());
        for (const auto& iv : j.at("intervals"))
            p.intervals.push_back({vertex_set_from_json(iv.at("lower"), p.ground_size), vertex_set_from_json(iv.at("upper"), p.ground_size)});
        return p;
    });
}

json scan_report_to_json(const ScanReport& r) {
    json records = json::array();
    for (const ScanRecord& rec : r.records) {
        records.push_back({{"graph", to_graph6(rec.graph)},
                           {"h", rec.h},
                           {"realizer", rec.realizer ? json(to_graph6(*rec.realizer)) : json(nullptr)},
                           {"cohen_macaulay", rec.cohen_macaulay}});
    }
    return {{"schema", "flagforge-scan/1"},
            {"conjecture", "h-is-f"},
            {"options", {{"n_max", r.options.n_max}, {"dedup", r.options.dedup}, {"bipartite_only", r.options.bipartite_only}}},
            {"position", r.position},
            {"last", r.last},
            {"complete", r.complete},
            {"totals", {{"graphs", r.position}, {"pure_vd", r.pure_vd}, {"counterexamples", r.counterexamples.size()}}},
            {"records", records},
            {"counterexamples", r.counterexamples}};
}

ScanReport scan_report_from_json(const json& j) {
    return rethrow_as_parse([&] {
        if (j.value("schema", "") != "flagforge-scan/1") throw ParseError("not a scan report");
        ScanReport r;
        const auto& o = j.at("options");
        r.options.n_max = o.at("n_max").get<int>();
        r.options.dedup = o.at("dedup").get<bool>();
        r.options.bipartite_only = o.at("bipartite_only").get<bool>();
        r.position = j.at("position").get<std::uint64_t>();
        r.last = j.at("last").get<std::string>();
        r.complete = j.at("complete").get<bool>();
        r.pure_vd = j.at("totals").at("pure_vd").get<std::uint64_t>();
        for (const auto& rec : j.at("records")) {
            ScanRecord s{from_graph6(rec.at("graph").get<std::string>()), rec.at("h").get<IntVector>(), std::nullopt,
                         rec.at("cohen_macaulay").get<bool>()};
            if (!rec.at("realizer").is_null()) s.realizer = from_graph6(rec.at("realizer").get<std::string>());
            r.records.push_back(std::move(s));
        }
        r.counterexamples = j.at("counterexamples").get<std::vector<std::size_t>>();
        for (std::size_t i : r.counterexamples)
            if (i >= r.records.size()) throw ParseError("counterexample index out of range");
        return r;
    });
}

Naming parse_naming(const std::string& name) {
    if (name == "indexed") return Naming::Indexed;
    if (name == "shifted") return Naming::Shifted;
    if (name == "labels") return Naming::Labels;
    throw ParseError("unknown naming scheme '" + name + "' (indexed, shifted, labels)");
}

std::string stanley_reisner_text(const SimplicialComplex& c, Naming naming, const std::vector<std::string>& labels) {
    if (naming == Naming::Labels && static_cast<int>(labels.size()) != c.ground_size())
        throw DomainError("label naming needs one label per vertex");
    auto name = [&](int v) {
        switch (naming) {
            case Naming::Indexed: return "x" + std::to_string(v);
            case Naming::Shifted: return "x" + std::to_string(v + 1);
            case Naming::Labels: return labels[static_cast<std::size_t>(v)];
        }
        return std::string{};
    };
    std::string out;
    for (VertexSet m : stanley_reisner_generators(c)) {
        std::string line;
        for_each_vertex(m, [&](int v) { line += (line.empty() ? "" : "*") + name(v); });
        out += (line.empty() ? std::string("1") : line) + "\n";
    }
    return out;
}

}  // namespace flagforge::io
