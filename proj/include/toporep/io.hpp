#pragma once

// JSON / text formats shared by the CLI, the fixtures and the tests.

#include <json.hpp>

#include <string>
#include <vector>

#include "toporep/algebra.hpp"
#include "toporep/graph.hpp"
#include "toporep/hardness.hpp"
#include "toporep/matroid.hpp"
#include "toporep/representations.hpp"
#include "toporep/topo.hpp"

namespace toporep::io {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);
/// Parses JSON text, mapping syntax errors to parse_error.
Json parse_json(const std::string& text);

// {"vertices":[...], "edges":[["u","v"],...]}; plain edge lists are accepted
// by graph_from_text when the text does not start with '{'.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph graph_from_text(const std::string& text);

// {"vertices":[...], "edges":{"e1":["v1","v2"],...}}
Hypergraph hypergraph_from_json(const Json& j);
Json hypergraph_to_json(const Hypergraph& h);

// graph JSON plus {"colors":{"v":1,...}}
ColoredGraph colored_from_json(const Json& j);
Json colored_to_json(const ColoredGraph& g);

/// {"colors":{...}} or a bare {"v":1,...} object, keyed by the ids of `g`.
std::vector<int> colors_from_json(const Json& j, const Graph& g);
Json colors_to_json(const Graph& g, const std::vector<int>& colors);

/// Strings "p/q" or integers; prime-field values must lie in [0,p).
Rational value_from_json(const Json& j, const FieldSpec& f);
Json value_to_json(const Rational& x, const FieldSpec& f);

// {"field":"Q","dim":3,"vectors":{"v":["1","-1","2"],...}}
VectorAssignment rep_from_json(const Json& j, const Graph& g);
Json rep_to_json(const VectorAssignment& r, const Graph& g);

// {"field":"GF(2)","rows":[[...],...]}, row-major in graph vertex order
ExactMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ExactMatrix& m);

// {"kind":"uniform","m":4,"r":2} | {"kind":"linear","field":..,"columns":[[..],..]}
// | {"kind":"transversal","graph":{..},"side":["u",..]}
RankOracle oracle_from_json(const Json& j);
Json oracle_to_json(const RankOracle& m);

/// {"oracle":{...},"assignment":{"v":element,...}}; elements by ground id or index.
MatroidAssignment assignment_from_json(const Json& j, const Graph& g);
Json assignment_to_json(const MatroidAssignment& a, const Graph& g);

Json ids_of(const Graph& g, VertexMask m);
Json ids_of(const Graph& g, const std::vector<int>& vertices);

/// {"t_hat","chain":[{"X","Y","phi"}],"X_star","Y_star","rank_lower_bound"}
Json chain_report(const Graph& g, const HomPoset& hp, const ExtractionResult& r);

Json witness_to_json(const Graph& g, const BipartiteWitness& w);
BipartiteWitness witness_from_json(const Json& j, const Graph& g);

Json assignment_bits_to_json(const SatAssignment& a);

}  // namespace toporep::io
