#include "toporep/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace toporep::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::invalid_input, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string id_string(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    bad("vertex ids must be strings or integers");
}

int vertex_of(const Graph& g, const Json& j) {
    auto id = id_string(j);
    int v = g.index_of(id);
    if (v < 0) bad("unknown vertex id \"" + id + "\"");
    return v;
}

int int_of(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

Graph graph_from_json(const Json& j) {
    std::vector<std::string> ids;
    for (const auto& v : member(j, "vertices")) ids.push_back(id_string(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : member(j, "edges")) {
        if (!e.is_array() || e.size() != 2) bad("graph edges must be [u, v] pairs");
        edges.emplace_back(id_string(e[0]), id_string(e[1]));
    }
    return Graph::from_id_edges(std::move(ids), edges);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.ids();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({g.id(u), g.id(v)});
    return j;
}

Graph graph_from_text(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json(text));
    return parse_edge_list(text);
}

Hypergraph hypergraph_from_json(const Json& j) {
    std::vector<std::string> vids;
    for (const auto& v : member(j, "vertices")) vids.push_back(id_string(v));
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vids.size()); ++i) index.emplace(vids[i], i);
    std::vector<std::string> eids;
    std::vector<std::vector<int>> edges;
    const auto& je = member(j, "edges");
    if (!je.is_object()) bad("hypergraph edges must be an object keyed by edge id");
    for (const auto& [eid, members] : je.items()) {
        eids.push_back(eid);
        edges.emplace_back();
        for (const auto& v : members) {
            auto it = index.find(id_string(v));
            if (it == index.end()) bad("edge " + eid + " uses an unknown vertex");
            edges.back().push_back(it->second);
        }
    }
    bool multi = j.contains("multi") && j.at("multi").get<bool>();
    return Hypergraph(std::move(vids), std::move(eids), std::move(edges), multi);
}

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["vertices"] = h.vertex_ids();
    j["edges"] = Json::object();
    for (int e = 0; e < h.edge_count(); ++e) {
        Json members = Json::array();
        for (int v : h.edge(e)) members.push_back(h.vertex_ids()[v]);
        j["edges"][h.edge_ids()[e]] = members;
    }
    if (h.is_multi()) j["multi"] = true;
    return j;
}

ColoredGraph colored_from_json(const Json& j) {
    ColoredGraph cg;
    cg.graph = graph_from_json(j);
    cg.colors = colors_from_json(member(j, "colors"), cg.graph);
    return cg;
}

Json colored_to_json(const ColoredGraph& g) {
    Json j = graph_to_json(g.graph);
    j["colors"] = colors_to_json(g.graph, g.colors);
    return j;
}

std::vector<int> colors_from_json(const Json& j, const Graph& g) {
    const Json& c = j.contains("colors") ? j.at("colors") : j;
    if (!c.is_object()) bad("colors must be an object keyed by vertex id");
    std::vector<int> colors(g.size(), 0);
    for (const auto& [id, value] : c.items()) {
        int v = g.index_of(id);
        if (v < 0) bad("color given for unknown vertex \"" + id + "\"");
        colors[v] = int_of(value, "colors");
        if (colors[v] < 1) bad("colors must be positive integers");
    }
    for (int v = 0; v < g.size(); ++v)
        if (!colors[v]) bad("vertex \"" + g.id(v) + "\" has no color");
    return colors;
}

Json colors_to_json(const Graph& g, const std::vector<int>& colors) {
    Json j = Json::object();
    for (int v = 0; v < g.size(); ++v) j[g.id(v)] = colors.at(v);
    return j;
}

Rational value_from_json(const Json& j, const FieldSpec& f) {
    Rational x;
    if (j.is_number_integer()) {
        x = Rational(std::to_string(j.get<long long>()));
    } else if (j.is_string()) {
        x = parse_rational(j.get<std::string>());
    } else {
        bad("field values must be integers or \"p/q\" strings");
    }
    if (f.is_prime() && (x.get_den() != 1 || x < 0 || x >= f.characteristic()))
        bad("GF(" + std::to_string(f.characteristic()) + ") values must be integers in [0,p)");
    return x;
}

Json value_to_json(const Rational& x, const FieldSpec& f) {
    if (f.is_prime()) return x.get_num().get_si();
    return to_string(x);
}

VectorAssignment rep_from_json(const Json& j, const Graph& g) {
    VectorAssignment r;
    r.field = FieldSpec::parse(member(j, "field").get<std::string>());
    r.dim = int_of(member(j, "dim"), "dim");
    if (r.dim < 0) bad("dim must be nonnegative");
    const auto& vs = member(j, "vectors");
    if (!vs.is_object()) bad("vectors must be an object keyed by vertex id");
    std::vector<bool> given(g.size(), false);
    r.vectors.assign(g.size(), ExactVector::zero(r.field, r.dim));
    for (const auto& [id, vec] : vs.items()) {
        int v = g.index_of(id);
        if (v < 0) bad("vector given for unknown vertex \"" + id + "\"");
        if (!vec.is_array() || static_cast<int>(vec.size()) != r.dim)
            fail(ErrorKind::dimension_mismatch, "vector of \"" + id + "\" does not have dim entries");
        std::vector<Rational> e;
        for (const auto& x : vec) e.push_back(value_from_json(x, r.field));
        r.vectors[v] = ExactVector(r.field, std::move(e));
        given[v] = true;
    }
    for (int v = 0; v < g.size(); ++v)
        if (!given[v]) bad("vertex \"" + g.id(v) + "\" has no vector");
    return r;
}

Json rep_to_json(const VectorAssignment& r, const Graph& g) {
    Json j;
    j["field"] = r.field.name();
    j["dim"] = r.dim;
    j["vectors"] = Json::object();
    for (int v = 0; v < g.size(); ++v) {
        Json vec = Json::array();
        for (const auto& x : r.vectors.at(v).entries()) vec.push_back(value_to_json(x, r.field));
        j["vectors"][g.id(v)] = vec;
    }
    return j;
}

ExactMatrix matrix_from_json(const Json& j) {
    auto f = FieldSpec::parse(member(j, "field").get<std::string>());
    const auto& rows = member(j, "rows");
    if (!rows.is_array()) bad("rows must be an array");
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != cols)
            fail(ErrorKind::dimension_mismatch, "matrix rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, value_from_json(rows[r][c], f));
    }
    return m;
}

Json matrix_to_json(const ExactMatrix& m) {
    Json j;
    j["field"] = m.field().name();
    j["rows"] = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(value_to_json(m.at(r, c), m.field()));
        j["rows"].push_back(row);
    }
    return j;
}

RankOracle oracle_from_json(const Json& j) {
    auto kind = member(j, "kind").get<std::string>();
    if (kind == "uniform") return RankOracle::uniform(int_of(member(j, "m"), "m"), int_of(member(j, "r"), "r"));
    if (kind == "linear") {
        auto f = FieldSpec::parse(member(j, "field").get<std::string>());
        const auto& cols = member(j, "columns");
        if (!cols.is_array()) bad("columns must be an array");
        std::size_t dim = cols.empty() ? 0 : cols[0].size();
        ExactMatrix m(f, dim, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!cols[c].is_array() || cols[c].size() != dim)
                fail(ErrorKind::dimension_mismatch, "columns have different lengths");
            for (std::size_t r = 0; r < dim; ++r) m.set(r, c, value_from_json(cols[c][r], f));
        }
        return RankOracle::linear(std::move(m));
    }
    if (kind == "transversal") {
        Graph b = graph_from_json(member(j, "graph"));
        std::vector<int> side;
        for (const auto& v : member(j, "side")) side.push_back(vertex_of(b, v));
        return RankOracle::transversal(std::move(b), std::move(side));
    }
    bad("unknown oracle kind \"" + kind + "\"");
}

Json oracle_to_json(const RankOracle& m) {
    Json j;
    switch (m.kind()) {
    case RankOracle::Kind::uniform:
        j["kind"] = "uniform";
        j["m"] = m.ground_size();
        j["r"] = m.uniform_rank();
        break;
    case RankOracle::Kind::linear: {
        const auto& a = m.matrix();
        j["kind"] = "linear";
        j["field"] = a.field().name();
        j["columns"] = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            Json col = Json::array();
            for (std::size_t r = 0; r < a.rows(); ++r) col.push_back(value_to_json(a.at(r, c), a.field()));
            j["columns"].push_back(col);
        }
        break;
    }
    case RankOracle::Kind::transversal: {
        j["kind"] = "transversal";
        j["graph"] = graph_to_json(m.bipartite_graph());
        Json side = Json::array();
        for (int v : m.side()) side.push_back(m.bipartite_graph().id(v));
        j["side"] = side;
        break;
    }
    }
    return j;
}

MatroidAssignment assignment_from_json(const Json& j, const Graph& g) {
    MatroidAssignment a{oracle_from_json(member(j, "oracle")), std::vector<int>(g.size(), -1)};
    const auto& as = member(j, "assignment");
    if (!as.is_object()) bad("assignment must be an object keyed by vertex id");
    for (const auto& [id, el] : as.items()) {
        int v = g.index_of(id);
        if (v < 0) bad("element given for unknown vertex \"" + id + "\"");
        int e = el.is_string() ? a.oracle.element_index(el.get<std::string>()) : int_of(el, "elements");
        if (e < 0 || e >= a.oracle.ground_size()) bad("vertex \"" + id + "\" maps outside the ground set");
        a.element[v] = e;
    }
    for (int v = 0; v < g.size(); ++v)
        if (a.element[v] < 0) bad("vertex \"" + g.id(v) + "\" has no element");
    return a;
}

Json assignment_to_json(const MatroidAssignment& a, const Graph& g) {
    Json j;
    j["oracle"] = oracle_to_json(a.oracle);
    j["assignment"] = Json::object();
    for (int v = 0; v < g.size(); ++v) j["assignment"][g.id(v)] = a.oracle.ground_ids().at(a.element.at(v));
    return j;
}

Json ids_of(const Graph& g, VertexMask m) {
    Json j = Json::array();
    for (; m; m &= m - 1) j.push_back(g.id(std::countr_zero(m)));
    return j;
}

Json ids_of(const Graph& g, const std::vector<int>& vertices) {
    Json j = Json::array();
    for (int v : vertices) j.push_back(g.id(v));
    return j;
}

Json chain_report(const Graph& g, const HomPoset& hp, const ExtractionResult& r) {
    Json j;
    j["t_hat"] = r.t_hat;
    j["chain"] = Json::array();
    for (int i = 0; i < r.chain.length(); ++i) {
        const auto& e = hp.elements.at(r.chain.elements[i]);
        j["chain"].push_back({{"X", ids_of(g, e.x)}, {"Y", ids_of(g, e.y)}, {"phi", r.chain.phi[i]}});
    }
    j["X_star"] = ids_of(g, r.witness.x);
    j["Y_star"] = ids_of(g, r.witness.y);
    j["rank_lower_bound"] = r.rank_lower_bound;
    return j;
}

Json witness_to_json(const Graph& g, const BipartiteWitness& w) {
    return {{"X", ids_of(g, w.x)}, {"Y", ids_of(g, w.y)}, {"X_cert", w.x_cert}, {"Y_cert", w.y_cert}};
}

BipartiteWitness witness_from_json(const Json& j, const Graph& g) {
    BipartiteWitness w;
    for (const auto& v : member(j, "X")) w.x.push_back(vertex_of(g, v));
    for (const auto& v : member(j, "Y")) w.y.push_back(vertex_of(g, v));
    if (j.contains("X_cert")) w.x_cert = j.at("X_cert").get<std::vector<int>>();
    if (j.contains("Y_cert")) w.y_cert = j.at("Y_cert").get<std::vector<int>>();
    return w;
}

Json assignment_bits_to_json(const SatAssignment& a) {
    Json j = Json::object();
    for (std::size_t v = 1; v < a.size(); ++v) j["z" + std::to_string(v)] = static_cast<bool>(a[v]);
    return j;
}

}  // namespace toporep::io
