// toporep: command-line front end. Every subcommand prints one JSON report on
// stdout; progress and errors go to stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "toporep/hardness.hpp"
#include "toporep/io.hpp"
#include "toporep/representations.hpp"
#include "toporep/solvers.hpp"
#include "toporep/topo.hpp"

using namespace toporep;
using io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, internal = 1, invalid = 2, budget = 3, usage = 64 };

// FNV-1a over the command line and every input file read.
struct Digest {
    std::uint64_t h = 0xcbf29ce484222325ull;
    void add(const std::string& s) {
        for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
        h = (h ^ 0xff) * 0x100000001b3ull;
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

struct Options {
    std::string graph, gen, hypergraph, colored, coloring, rep, oracle, matrix, cnf, report, out;
    std::string field = "GF(2)";
    std::string mode = "all";
    std::string exec = "parallel";
    std::size_t max_poset = kDefaultPosetCap;
    double time_budget = 60.0;
    double core_seconds = 10.0;
    int t_max = -1, s_max = -1, m_max = -1, k = -1, t = 0;
    bool complement = false, balanced = false, allow_empty = false, witness = false, no_timing = false;
    std::uint64_t seed = 1;
    int count = 200, max_vars = 6, max_clauses = 6;
    int balanced_count = 50, max_vertices = 10, max_colors = 4;
};

Digest digest;

std::string load(const std::string& path) {
    auto text = io::read_file(path);
    digest.add(text);
    return text;
}

Json load_json(const std::string& path) { return io::parse_json(load(path)); }

struct Generated {
    Graph graph;
    std::optional<Hypergraph> hypergraph;
};

std::vector<int> gen_args(const std::string& spec, const std::string& body, std::size_t want) {
    std::vector<int> out;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            fail(ErrorKind::invalid_input, "bad generator argument in '" + spec + "'");
        }
    }
    if (out.size() != want) fail(ErrorKind::invalid_input, "generator '" + spec + "' takes " + std::to_string(want) + " argument(s)");
    return out;
}

Generated generate(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon), body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == "h") return {gen_H(gen_args(spec, body, 1)[0]), {}};
    if (name == "cycle") return {gen_cycle(gen_args(spec, body, 1)[0]), {}};
    if (name == "complete") return {gen_complete(gen_args(spec, body, 1)[0]), {}};
    if (name == "empty") return {gen_empty(gen_args(spec, body, 1)[0]), {}};
    if (name == "petersen") {
        auto kp = gen_kneser(5, 2);
        return {kp.graph, kp.hypergraph};
    }
    if (name == "kneser") {
        auto a = gen_args(spec, body, 2);
        auto kp = gen_kneser(a[0], a[1]);
        return {kp.graph, kp.hypergraph};
    }
    fail(ErrorKind::invalid_input, "unknown generator '" + name + "'");
}

Graph input_graph(const Options& o) {
    if (!o.graph.empty() && !o.gen.empty()) fail(ErrorKind::invalid_input, "give either --graph or --gen");
    if (!o.graph.empty()) return io::graph_from_text(load(o.graph));
    if (!o.gen.empty()) return generate(o.gen).graph;
    fail(ErrorKind::invalid_input, "a graph is required (--graph FILE or --gen SPEC)");
}

SearchBudget budget_of(const Options& o) { return SearchBudget::seconds(o.time_budget); }

Exec exec_of(const Options& o) {
    if (o.exec == "serial") return Exec::serial;
    if (o.exec == "parallel") return Exec::parallel;
    fail(ErrorKind::invalid_input, "--exec must be serial or parallel");
}

FieldSpec field_of(const Options& o) { return FieldSpec::parse(o.field); }

// The independent representation to work with: a coloring (U_r^r), a vector
// representation (linear matroid) or an explicit oracle assignment.
MatroidAssignment input_assignment(const Options& o, const Graph& g, Json& described) {
    int given = !o.coloring.empty() + !o.rep.empty() + !o.oracle.empty();
    if (given != 1) fail(ErrorKind::invalid_input, "give exactly one of --coloring, --rep, --oracle");
    if (!o.coloring.empty()) {
        auto colors = io::colors_from_json(load_json(o.coloring), g);
        if (!is_proper_coloring(g, colors)) fail(ErrorKind::invalid_input, "coloring is not proper");
        int r = *std::max_element(colors.begin(), colors.end());
        described = {{"kind", "coloring"}, {"r", r}};
        return coloring_assignment(colors, r);
    }
    if (!o.rep.empty()) {
        auto r = io::rep_from_json(load_json(o.rep), g);
        described = {{"kind", "vectors"}, {"field", r.field.name()}, {"dim", r.dim}};
        return linear_assignment(r);
    }
    auto a = io::assignment_from_json(load_json(o.oracle), g);
    described = {{"kind", "oracle"}, {"oracle", io::oracle_to_json(a.oracle)}};
    return a;
}

Json violations_json(const Graph& g, const CheckResult& c) {
    Json out = Json::array();
    for (const auto& v : c.violations) out.push_back({{"kind", v.kind}, {"vertices", io::ids_of(g, v.vertices)}});
    return out;
}

Json qn_map_json(const Graph& g, const HomPoset& hp, const std::vector<int>& levels) {
    Json out = Json::array();
    for (std::size_t i = 0; i < hp.elements.size(); ++i)
        out.push_back({{"X", io::ids_of(g, hp.elements[i].x)}, {"Y", io::ids_of(g, hp.elements[i].y)}, {"level", levels[i]}});
    return out;
}

// Set when a command produced a partial answer because a budget ran out.
bool partial = false;

// ---- subcommands -----------------------------------------------------------

Json cmd_gen(const Options& o) {
    if (o.gen.empty()) fail(ErrorKind::invalid_input, "gen needs --gen SPEC");
    auto g = generate(o.gen);
    Json r;
    r["graph"] = io::graph_to_json(g.graph);
    if (g.hypergraph) r["hypergraph"] = io::hypergraph_to_json(*g.hypergraph);
    r["vertex_count"] = g.graph.size();
    r["edge_count"] = g.graph.edge_count();
    return r;
}

Json cmd_xind(const Options& o) {
    auto g = input_graph(o);
    auto hp = build_hom_poset(g, o.max_poset);
    std::cerr << "Hom(K2,G): " << hp.elements.size() << " elements\n";
    auto b = xind_bounds(g, hp, budget_of(o), XindOptions{o.core_seconds});
    Json r;
    if (hp.poset.empty()) {
        r["xind"] = -1;
        r["bound_chi"] = 1;
        r["poset_size"] = 0;
        return r;
    }
    r["xind"] = b.exact() ? Json(b.lower) : Json(nullptr);
    r["bound_chi"] = b.lower + 2;
    r["xind_lower"] = b.lower;
    r["xind_upper"] = b.upper;
    r["exact"] = b.exact();
    r["poset_size"] = hp.elements.size();
    if (o.witness) r["qn_map"] = qn_map_json(g, hp, b.levels);
    if (!b.exact()) partial = true;
    return r;
}

Json cmd_cd2(const Options& o) {
    Hypergraph h;
    std::string source;
    if (!o.hypergraph.empty()) {
        h = io::hypergraph_from_json(load_json(o.hypergraph));
        source = "given";
    } else if (!o.gen.empty() && generate(o.gen).hypergraph) {
        h = *generate(o.gen).hypergraph;
        source = "canonical";
    } else {
        h = kneser_representation(input_graph(o));
        source = "maximal-independent-sets";
    }
    auto c = cd2(h, budget_of(o));
    Json r;
    r["cd2"] = c.defect;
    r["representation"] = source;
    Json removed = Json::array(), coloring = Json::object();
    for (int v : c.removed) removed.push_back(h.vertex_ids()[v]);
    for (int v = 0; v < h.vertex_count(); ++v)
        if (c.coloring[v]) coloring[h.vertex_ids()[v]] = c.coloring[v];
    r["removed"] = removed;
    r["coloring"] = coloring;
    return r;
}

Json cmd_chromatic(const Options& o) {
    auto g = input_graph(o);
    auto c = chromatic_number(g, budget_of(o));
    return {{"chi", c.chi}, {"coloring", io::colors_to_json(g, c.witness.colors)}};
}

Json cmd_clique(const Options& o) {
    auto g = input_graph(o);
    auto c = max_clique(g, budget_of(o));
    return {{"omega", c.size}, {"clique", io::ids_of(g, c.vertices)}};
}

Json cmd_orthodim(const Options& o) {
    auto g = input_graph(o);
    int t_max = o.t_max >= 0 ? o.t_max : g.size();
    auto d = orthogonality_dimension(g, field_of(o), t_max, budget_of(o));
    Json r;
    r["field"] = field_of(o).name();
    if (!d) {
        r["orthodim"] = nullptr;
        r["exceeds"] = t_max;
        return r;
    }
    r["orthodim"] = d->dim;
    r["representation"] = io::rep_to_json(d->witness, g);
    return r;
}

Json cmd_minrank(const Options& o) {
    auto g = input_graph(o);
    Graph target = o.complement ? complement(g) : g;
    auto m = minrank_bruteforce(target, field_of(o), {}, budget_of(o));
    return {{"field", field_of(o).name()},
            {"target", o.complement ? "complement" : "graph"},
            {"minrank", m.rank},
            {"matrix", io::matrix_to_json(m.witness)},
            {"witness_symmetric", m.witness.is_symmetric()}};  // recorded only
}

Json cmd_indrep(const Options& o) {
    auto g = input_graph(o);
    int s_max = o.s_max >= 0 ? o.s_max : g.size();
    auto d = min_indrep_dimension(g, field_of(o), s_max, budget_of(o));
    Json r;
    r["field"] = field_of(o).name();
    if (!d) {
        r["min_indrep_dim"] = nullptr;
        r["exceeds"] = s_max;
        return r;
    }
    r["min_indrep_dim"] = d->dim;
    r["representation"] = io::rep_to_json(d->witness, g);
    return r;
}

Json cmd_extract(const Options& o) {
    auto g = input_graph(o);
    Json source;
    auto a = input_assignment(o, g, source);
    auto check = verify_independent_rep(g, a);
    if (!check.ok) fail(ErrorKind::invalid_input, "not an independent representation: " + check.violations[0].kind);
    auto hp = build_hom_poset(g, o.max_poset);
    auto res = extract_colorful_bipartite(g, a, o.max_poset, exec_of(o));
    Json r = io::chain_report(g, hp, res);
    r["X_cert"] = res.witness.x_cert;
    r["Y_cert"] = res.witness.y_cert;
    r["witness_verified"] = verify_bipartite_witness(g, a, res.witness);
    r["source"] = source;
    r["poset_size"] = res.poset_size;
    return r;
}

Json cmd_star_check(const Options& o) {
    auto g = input_graph(o);
    Json source;
    auto a = input_assignment(o, g, source);
    auto s = check_star_condition(g, a, o.balanced, o.max_poset);
    Json r;
    r["holds"] = s.holds;
    r["independent_rep"] = s.independent_rep;
    r["rank"] = s.rank_m;
    r["balanced_only"] = o.balanced;
    if (s.violation)
        r["violation"] = {{"X", io::ids_of(g, s.violation->x)}, {"Y", io::ids_of(g, s.violation->y)}, {"rank_sum", s.violation_sum}};
    else
        r["violation"] = nullptr;
    r["source"] = source;
    return r;
}

Json cmd_local_chromatic(const Options& o) {
    auto g = input_graph(o);
    int m_max = o.m_max >= 0 ? o.m_max : g.size();
    auto l = local_chromatic(g, m_max, budget_of(o));
    return {{"psi", l.psi}, {"m_max", m_max}, {"coloring", io::colors_to_json(g, l.witness.colors)}};
}

Json cmd_reduce_3sat(const Options& o) {
    if (o.cnf.empty()) fail(ErrorKind::invalid_input, "reduce-3sat needs --cnf FILE");
    auto inst = parse_monotone_3sat(load(o.cnf));
    auto gadget = reduce_3sat_to_colorful(inst);
    const auto& g = gadget.graph.graph;
    Json r;
    r["variables"] = inst.variables;
    r["clauses"] = inst.clauses.size();
    r["gadget"] = io::colored_to_json(gadget.graph);
    Json sides = Json::object();
    for (int v = 0; v < g.size(); ++v) sides[g.id(v)] = gadget.side[v] ? "Y" : "X";
    r["gadget"]["sides"] = sides;
    if (o.witness) {
        auto a = brute_force_sat(inst);
        r["satisfiable"] = a.has_value();
        if (a) {
            r["assignment"] = io::assignment_bits_to_json(*a);
            r["witness"] = io::witness_to_json(g, assignment_to_witness(inst, *a));
        }
    }
    return r;
}

Json cmd_colorful(const Options& o) {
    if (o.colored.empty()) fail(ErrorKind::invalid_input, "colorful needs --colored FILE");
    auto j = load_json(o.colored);
    auto cg = io::colored_from_json(j);
    ColorfulQuery q;
    if (o.mode == "balanced") {
        q.mode = ColorfulMode::balanced;
        q.t = o.t;
    } else if (o.mode != "all") {
        fail(ErrorKind::invalid_input, "--mode must be all or balanced");
    }
    q.allow_empty_side = o.allow_empty;
    if (j.contains("sides")) {
        q.sides.assign(cg.graph.size(), 0);
        for (const auto& [id, s] : j.at("sides").items()) {
            int v = cg.graph.index_of(id);
            if (v < 0 || !s.is_string() || (s != "X" && s != "Y")) fail(ErrorKind::invalid_input, "bad sides entry");
            q.sides[v] = s == "Y";
        }
    }
    auto w = colorful_complete_bipartite_exists(cg, q, budget_of(o));
    Json r;
    r["mode"] = o.mode;
    if (q.mode == ColorfulMode::balanced) r["t"] = q.t;
    r["exists"] = w.has_value();
    r["witness"] = w ? io::witness_to_json(cg.graph, *w) : Json(nullptr);
    return r;
}

Json cmd_convert(const Options& o) {
    auto g = input_graph(o);
    if (!o.matrix.empty() == !o.rep.empty()) fail(ErrorKind::invalid_input, "give exactly one of --matrix, --rep");
    Json r;
    if (!o.matrix.empty()) {
        auto m = io::matrix_from_json(load_json(o.matrix));
        auto rep = matrix_to_indrep(g, m);
        r["direction"] = "matrix-to-indrep";
        r["rank"] = rank(m);
        r["dim"] = rep.dim;
        r["representation"] = io::rep_to_json(rep, g);
    } else {
        auto rep = io::rep_from_json(load_json(o.rep), g);
        auto m = indrep_to_matrix(g, rep);
        r["direction"] = "indrep-to-matrix";
        r["dim"] = rep.dim;
        r["rank"] = rank(m);
        r["matrix"] = io::matrix_to_json(m);
    }
    return r;
}

// Re-validates the witness carried by an earlier report.
Json verify_report(const Options& o, const Json& rep) {
    auto cmd = rep.value("command", std::string());
    auto g = input_graph(o);
    Json r;
    r["report_command"] = cmd;
    bool valid = false;
    if (cmd == "chromatic" || cmd == "local-chromatic") {
        auto colors = io::colors_from_json(rep.at("coloring"), g);
        int used = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
        valid = is_proper_coloring(g, colors);
        if (cmd == "chromatic") valid = valid && used <= rep.at("chi").get<int>();
        else valid = valid && local_color_count(g, colors) <= rep.at("psi").get<int>();
    } else if (cmd == "clique") {
        std::vector<int> vs;
        for (const auto& id : rep.at("clique")) vs.push_back(g.index_of(id.get<std::string>()));
        valid = std::find(vs.begin(), vs.end(), -1) == vs.end() && is_clique(g, vs) &&
                static_cast<int>(vs.size()) == rep.at("omega").get<int>();
    } else if (cmd == "orthodim") {
        auto v = io::rep_from_json(rep.at("representation"), g);
        valid = verify_orthogonal_rep(g, v).ok && v.dim == rep.at("orthodim").get<int>();
    } else if (cmd == "indrep" || (cmd == "convert" && rep.contains("representation"))) {
        auto v = io::rep_from_json(rep.at("representation"), g);
        valid = verify_independent_rep(g, v).ok;
    } else if (cmd == "minrank" || (cmd == "convert" && rep.contains("matrix"))) {
        auto m = io::matrix_from_json(rep.at("matrix"));
        Graph target = rep.value("target", std::string("complement")) == "graph" ? g : complement(g);
        valid = m.rows() == static_cast<std::size_t>(g.size()) && represents(m, target) &&
                static_cast<int>(rank(m)) <= rep.at(cmd == "minrank" ? "minrank" : "rank").get<int>();
    } else if (cmd == "extract") {
        Json ignored;
        auto a = input_assignment(o, g, ignored);
        BipartiteWitness w;
        w.x = io::witness_from_json({{"X", rep.at("X_star")}, {"Y", rep.at("Y_star")}}, g).x;
        w.y = io::witness_from_json({{"X", rep.at("X_star")}, {"Y", rep.at("Y_star")}}, g).y;
        int t = rep.at("t_hat").get<int>();
        valid = verify_bipartite_witness(g, a, w) && static_cast<int>(w.x.size()) == t / 2 &&
                static_cast<int>(w.y.size()) == (t + 1) / 2;
    } else if (cmd == "xind") {
        auto hp = build_hom_poset(g, o.max_poset);
        if (!rep.contains("qn_map")) fail(ErrorKind::invalid_input, "xind report carries no qn_map (rerun with --witness)");
        std::vector<int> levels(hp.elements.size(), 0);
        for (const auto& e : rep.at("qn_map")) {
            HomElement he;
            for (const auto& id : e.at("X")) he.x |= VertexMask{1} << g.index_of(id.get<std::string>());
            for (const auto& id : e.at("Y")) he.y |= VertexMask{1} << g.index_of(id.get<std::string>());
            int i = hp.index_of(he);
            if (i < 0) fail(ErrorKind::invalid_input, "qn_map names a pair outside Hom(K2,G)");
            levels[i] = e.at("level").get<int>();
        }
        valid = is_qn_map(hp.poset, rep.at("xind_upper").get<int>(), levels);
    } else {
        fail(ErrorKind::invalid_input, "no witness check for reports of '" + cmd + "'");
    }
    r["valid"] = valid;
    return r;
}

Json cmd_verify(const Options& o) {
    if (!o.report.empty()) return verify_report(o, load_json(o.report));
    auto g = input_graph(o);
    Json r;
    if (!o.rep.empty()) {
        auto v = io::rep_from_json(load_json(o.rep), g);
        auto orth = verify_orthogonal_rep(g, v);
        auto ind = verify_independent_rep(g, v);
        r["orthogonal"] = orth.ok;
        r["dim"] = v.dim;
        r["independent"] = ind.ok;
        r["violations"] = violations_json(g, orth.ok ? ind : orth);
    } else if (!o.coloring.empty()) {
        auto colors = io::colors_from_json(load_json(o.coloring), g);
        r["proper"] = is_proper_coloring(g, colors);
        r["colors_used"] = std::set<int>(colors.begin(), colors.end()).size();
        r["local_color_count"] = local_color_count(g, colors);
    } else if (!o.oracle.empty()) {
        auto a = io::assignment_from_json(load_json(o.oracle), g);
        auto ind = verify_independent_rep(g, a);
        r["independent"] = ind.ok;
        r["rank"] = a.oracle.full_rank();
        r["violations"] = violations_json(g, ind);
    } else if (!o.matrix.empty()) {
        auto m = io::matrix_from_json(load_json(o.matrix));
        if (m.rows() != static_cast<std::size_t>(g.size()) || m.cols() != m.rows())
            fail(ErrorKind::dimension_mismatch, "matrix must be |V| x |V|");
        r["represents"] = represents(m, g);
        r["rank"] = rank(m);
    } else {
        fail(ErrorKind::invalid_input, "verify needs --rep, --coloring, --oracle, --matrix or --report");
    }
    return r;
}

Json fuzz_json(const FuzzReport& f) {
    return {{"instances", f.instances}, {"yes_instances", f.satisfiable}, {"disagreements", f.disagreements}, {"failures", f.failures}};
}

Json cmd_fuzz(const Options& o) {
    Json r;
    r["seed"] = o.seed;
    r["reduction"] = fuzz_json(fuzz_reduction(o.seed, o.count, o.max_vars, o.max_clauses));
    r["balanced"] = fuzz_json(fuzz_balanced(o.seed, o.balanced_count, o.max_vertices, o.max_colors));
    return r;
}

Json cmd_export_cnf(const Options& o, bool& raw) {
    auto g = input_graph(o);
    if (o.k < 1) fail(ErrorKind::invalid_input, "export-cnf needs --k >= 1");
    auto dimacs = export_kcoloring_cnf(g, o.k).to_dimacs();
    if (o.out.empty()) {
        std::cout << dimacs;
        raw = true;
        return {};
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) fail(ErrorKind::invalid_input, "cannot write " + o.out);
    f << dimacs;
    return {{"k", o.k}, {"cnf", o.out}, {"variables", g.size() * o.k}};
}

const std::vector<std::string> kCommands = {"gen",          "xind",      "cd2",        "chromatic", "clique",  "orthodim",
                                            "minrank",      "indrep",    "extract",    "star-check", "local-chromatic",
                                            "reduce-3sat",  "colorful",  "convert",    "verify",    "fuzz",    "export-cnf"};

void print_usage(std::ostream& os) {
    os << "usage: toporep <subcommand> [options]\nsubcommands:";
    for (const auto& c : kCommands) os << ' ' << c;
    os << "\nrun 'toporep <subcommand> --help' for the options of one subcommand\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2 || std::find(kCommands.begin(), kCommands.end(), argv[1]) == kCommands.end()) {
        std::string a = argc >= 2 ? argv[1] : "";
        if (a == "--help" || a == "-h") {
            print_usage(std::cout);
            return Exit::ok;
        }
        if (argc >= 2) std::cerr << "unknown subcommand '" << a << "'\n";
        print_usage(std::cerr);
        return Exit::usage;
    }

    Options o;
    CLI::App app{"exact toolkit for topological and algebraic chromatic bounds", "toporep"};
    app.require_subcommand(1);
    std::map<std::string, CLI::App*> sub;
    for (const auto& name : kCommands) sub[name] = app.add_subcommand(name);

    auto graph_opts = [&](CLI::App* s) {
        s->add_option("--graph", o.graph, "graph file (JSON or edge list)");
        s->add_option("--gen", o.gen, "inline generator: H:t, kneser:n,k, cycle:n, complete:n, empty:n, petersen");
    };
    auto budget_opts = [&](CLI::App* s) {
        s->add_option("--time-budget-sec", o.time_budget, "search time budget in seconds")->capture_default_str();
    };
    auto poset_opts = [&](CLI::App* s) {
        s->add_option("--max-poset", o.max_poset, "cap on the number of Hom(K2,G) elements")->capture_default_str();
    };
    auto source_opts = [&](CLI::App* s) {
        s->add_option("--coloring", o.coloring, "proper coloring, read as an assignment into U_r^r");
        s->add_option("--rep", o.rep, "vector representation (linear matroid)");
        s->add_option("--oracle", o.oracle, "matroid assignment {oracle, assignment}");
    };
    for (auto& [name, s] : sub) {
        s->add_flag("--no-timing", o.no_timing, "omit the timing block (byte-stable output)");
        if (name != "reduce-3sat" && name != "colorful" && name != "fuzz") graph_opts(s);
    }
    for (const char* n : {"xind", "cd2", "chromatic", "clique", "orthodim", "minrank", "indrep", "local-chromatic", "colorful"})
        budget_opts(sub[n]);
    for (const char* n : {"xind", "extract", "star-check", "verify"}) poset_opts(sub[n]);
    for (const char* n : {"orthodim", "minrank", "indrep"}) sub[n]->add_option("--field", o.field, "GF(p) or Q")->capture_default_str();

    sub["xind"]->add_option("--core-seconds", o.core_seconds, "budget for the complete-graph core lower bound")->capture_default_str();
    sub["xind"]->add_flag("--witness", o.witness, "include the Q_n map");
    sub["cd2"]->add_option("--hypergraph", o.hypergraph, "hypergraph file");
    sub["orthodim"]->add_option("--t-max", o.t_max, "largest dimension tried (default |V|)");
    sub["minrank"]->add_flag("--complement", o.complement, "minrank of the complement of the graph");
    sub["indrep"]->add_option("--s-max", o.s_max, "largest dimension tried (default |V|)");
    source_opts(sub["extract"]);
    sub["extract"]->add_option("--exec", o.exec, "serial or parallel")->capture_default_str();
    source_opts(sub["star-check"]);
    sub["star-check"]->add_flag("--balanced", o.balanced, "only balanced complete bipartite subgraphs");
    sub["local-chromatic"]->add_option("--m-max", o.m_max, "palette size (default |V|)");
    sub["reduce-3sat"]->add_option("--cnf", o.cnf, "monotone 3-CNF in DIMACS");
    sub["reduce-3sat"]->add_flag("--witness", o.witness, "solve by enumeration and lift the assignment");
    sub["colorful"]->add_option("--colored", o.colored, "colored graph file (optional \"sides\")");
    sub["colorful"]->add_option("--mode", o.mode, "all or balanced")->capture_default_str();
    sub["colorful"]->add_option("--t", o.t, "total colors for balanced mode");
    sub["colorful"]->add_flag("--allow-empty", o.allow_empty, "allow one empty side");
    sub["convert"]->add_option("--matrix", o.matrix, "matrix representing the complement");
    sub["convert"]->add_option("--rep", o.rep, "independent representation");
    source_opts(sub["verify"]);
    sub["verify"]->add_option("--matrix", o.matrix, "matrix to check against the graph");
    sub["verify"]->add_option("--report", o.report, "earlier report whose witness is re-checked");
    sub["fuzz"]->add_option("--seed", o.seed)->capture_default_str();
    sub["fuzz"]->add_option("--count", o.count, "random monotone instances")->capture_default_str();
    sub["fuzz"]->add_option("--max-vars", o.max_vars)->capture_default_str();
    sub["fuzz"]->add_option("--max-clauses", o.max_clauses)->capture_default_str();
    sub["fuzz"]->add_option("--balanced-count", o.balanced_count, "random colored graphs")->capture_default_str();
    sub["fuzz"]->add_option("--max-vertices", o.max_vertices)->capture_default_str();
    sub["fuzz"]->add_option("--max-colors", o.max_colors)->capture_default_str();
    sub["export-cnf"]->add_option("--k", o.k, "number of colors");
    sub["export-cnf"]->add_option("--out", o.out, "write the CNF here and print a report instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Exit::invalid;
    }

    std::string name = argv[1];
    for (int i = 1; i < argc; ++i) digest.add(argv[i]);

    static const std::map<std::string, std::function<Json(const Options&)>> handlers = {
        {"gen", cmd_gen},
        {"xind", cmd_xind},
        {"cd2", cmd_cd2},
        {"chromatic", cmd_chromatic},
        {"clique", cmd_clique},
        {"orthodim", cmd_orthodim},
        {"minrank", cmd_minrank},
        {"indrep", cmd_indrep},
        {"extract", cmd_extract},
        {"star-check", cmd_star_check},
        {"local-chromatic", cmd_local_chromatic},
        {"reduce-3sat", cmd_reduce_3sat},
        {"colorful", cmd_colorful},
        {"convert", cmd_convert},
        {"verify", cmd_verify},
        {"fuzz", cmd_fuzz},
    };

    auto t0 = std::chrono::steady_clock::now();
    try {
        bool raw = false;
        Json results = name == "export-cnf" ? cmd_export_cnf(o, raw) : handlers.at(name)(o);
        if (raw) return Exit::ok;
        Json report;
        report["command"] = name;
        for (auto& [k, v] : results.items()) report[k] = v;
        report["inputs_digest"] = digest.hex();
        report["version"] = kVersion;
        if (!o.no_timing)
            report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
        std::cout << report.dump(2) << '\n';
        if (name == "fuzz" && (report["reduction"]["disagreements"] != 0 || report["balanced"]["disagreements"] != 0))
            return Exit::internal;
        return partial ? Exit::budget : Exit::ok;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        if (e.is_budget()) return Exit::budget;
        return e.kind() == ErrorKind::internal_error ? Exit::internal : Exit::invalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error (invalid_input): " << e.what() << '\n';
        return Exit::invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::internal;
    }
}
