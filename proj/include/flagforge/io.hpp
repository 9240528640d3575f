#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "flagforge/bipartite.hpp"
#include "flagforge/complex.hpp"
#include "flagforge/decomposability.hpp"
#include "flagforge/graph.hpp"
#include "flagforge/search.hpp"

namespace flagforge::io {

using json = nlohmann::json;

/// "n m" then m lines "u v"; '#' starts a comment.
Graph parse_graph_text(const std::string& text);
std::string format_graph_text(const Graph& g);

/// {"n": int, "edges": [[u, v], ...], "labels": [...]} (labels optional).
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// "complex n f" then f lines of vertices, "-" for the empty facet.
SimplicialComplex parse_complex_text(const std::string& text);
std::string format_complex_text(const SimplicialComplex& c);

/// {"n": int, "facets": [[...], ...]}
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& c);

using Input = std::variant<Graph, SimplicialComplex>;

/// JSON when the extension is .json, text otherwise; graph or complex by content.
Input parse_input(const std::string& text, bool as_json);
Input load_input(const std::string& path);
Graph load_graph(const std::string& path);
/// Graph files are read as their independence complex.
SimplicialComplex load_complex(const std::string& path);
json load_json(const std::string& path);
std::string read_file(const std::string& path);

json vertex_list(VertexSet s);
VertexSet vertex_set_from_json(const json& j, int ground_size);

json shed_tree_to_json(const ShedTreePtr& tree);
ShedTreePtr shed_tree_from_json(const json& j);

json pure_order_to_json(const PureOrder& o);
PureOrder pure_order_from_json(const json& j);

json extrusion_to_json(const Extrusion& e);

json partitioning_to_json(const IntervalPartitioning& p);
IntervalPartitioning partitioning_from_json(const json& j);

json scan_report_to_json(const ScanReport& r);
ScanReport scan_report_from_json(const json& j);

enum class Naming { Indexed, Shifted, Labels };
Naming parse_naming(const std::string& name);

/// One minimal non-face per line, as "x0*x2".
std::string stanley_reisner_text(const SimplicialComplex& c, Naming naming, const std::vector<std::string>& labels = {});

}  // namespace flagforge::io
