#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reproduce.hpp"
#include "skewres/bounds.hpp"
#include "skewres/box_complex.hpp"
#include "skewres/errors.hpp"
#include "skewres/io.hpp"
#include "skewres/skew_betti.hpp"

using namespace skewres;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kOracle = 4 };

struct Options {
  std::vector<std::string> fields;
  std::string format = "text";
  int width = 1;
  std::uint64_t seed = 1;
  int max_vertices = 12;
  std::string fixture;
  std::string dsl;
  std::string edges;
  std::string input;
  std::string biadjacency;
  std::string fixture_dir;
};

std::filesystem::path fixture_dir(const Options& o) {
  if (!o.fixture_dir.empty()) return o.fixture_dir;
  if (const char* env = std::getenv("SKEWRES_FIXTURES")) return env;
  return SKEWRES_FIXTURE_DIR;
}

std::vector<Field> fields_of(const Options& o, std::vector<Field> fallback) {
  if (o.fields.empty()) return fallback;
  std::vector<Field> out;
  for (const auto& f : o.fields) out.push_back(Field::parse(f));
  return out;
}

Json read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return parse_json_text(buf.str());
  }
  return read_json_file(path);
}

// The JSON document named by --fixture or --input, if any.
std::optional<Json> document(const Options& o) {
  if (!o.fixture.empty()) return load_fixture(fixture_dir(o), o.fixture).data;
  if (!o.input.empty()) return read_input(o.input);
  return std::nullopt;
}

DiagramInput need_diagram(const Options& o) {
  if (!o.dsl.empty()) {
    auto s = parse_dsl(o.dsl);
    return {s.diagram(), s};
  }
  auto doc = document(o);
  if (!doc) throw ParseError("no diagram given (use --dsl, --fixture or --input)");
  return diagram_input_from_json(*doc);
}

std::vector<Mask> parse_biadjacency_rows(const std::string& text, int& n) {
  std::vector<Mask> rows;
  n = -1;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (n < 0) n = static_cast<int>(tok.size());
    if (static_cast<int>(tok.size()) != n) throw ParseError("biadjacency rows differ in length");
    Mask r = 0;
    for (int c = 0; c < n; ++c) {
      if (tok[c] == '1') r |= bit(c);
      else if (tok[c] != '0') throw ParseError("biadjacency entries must be 0 or 1");
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError("empty biadjacency");
  return rows;
}

struct GraphInput {
  std::optional<BipartiteGraph> bipartite;
  SimpleGraph simple;
  std::optional<DiagramInput> diagram;
};

GraphInput need_graph(const Options& o) {
  GraphInput g;
  if (!o.biadjacency.empty()) {
    int n = 0;
    auto rows = parse_biadjacency_rows(o.biadjacency, n);
    std::vector<int> xs(rows.size()), ys(n);
    std::iota(xs.begin(), xs.end(), 1);
    std::iota(ys.begin(), ys.end(), 1);
    g.bipartite = BipartiteGraph(xs, ys, rows);
    g.simple = g.bipartite->as_simple();
    return g;
  }
  std::optional<Json> doc;
  if (o.dsl.empty()) doc = document(o);
  if (doc && doc->contains("graph")) {
    const Json& gj = doc->at("graph");
    if (gj.contains("biadjacency")) {
      g.bipartite = bipartite_from_json(gj);
      g.simple = g.bipartite->as_simple();
    } else {
      g.simple = simple_graph_from_json(gj);
    }
    return g;
  }
  g.diagram = doc ? diagram_input_from_json(*doc) : need_diagram(o);
  if (g.diagram->diagram.shifted) {
    g.simple = g.diagram->diagram.simple_graph();
  } else {
    g.bipartite = g.diagram->diagram.bipartite_graph();
    g.simple = g.bipartite->as_simple();
  }
  return g;
}

BipartiteGraph need_bipartite(const Options& o) {
  auto g = need_graph(o);
  if (!g.bipartite) throw PreconditionError("this command needs a bipartite graph");
  return *g.bipartite;
}

std::optional<UniformFamily> uniform_family(const Options& o, FamilyKind kind = FamilyKind::Sets) {
  if (!o.edges.empty()) return parse_edges(o.edges, kind);
  auto doc = document(o);
  if (!doc) throw ParseError("no family given (use --edges, --fixture or --input)");
  const Json& fj = doc->contains("family") ? doc->at("family") : *doc;
  if (fj.value("kind", "sets") == "partite") return std::nullopt;
  return family_from_json(fj);
}

UniformFamily need_uniform(const Options& o, FamilyKind kind = FamilyKind::Sets) {
  auto f = uniform_family(o, kind);
  if (!f) throw PreconditionError("this command needs a uniform (non-partite) family");
  return *f;
}

PartiteFamily need_partite(const Options& o) {
  if (o.edges.empty()) {
    auto doc = document(o);
    if (!doc) throw ParseError("no family given (use --edges, --fixture or --input)");
    const Json& fj = doc->contains("family") ? doc->at("family") : *doc;
    if (fj.value("kind", "sets") == "partite") return partite_from_json(fj);
    return partite_expansion(family_from_json(fj));
  }
  return partite_expansion(parse_edges(o.edges));
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join64(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

void emit(const Options& o, const Json& j) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
}

// Betti tables over the requested fields from the Hochster oracle on the edge ideal.
std::vector<BettiTable> oracle_tables(const SimpleGraph& g, const Options& o, const std::vector<Field>& fields) {
  if (g.vertex_count() > o.max_vertices)
    throw OracleLimitError("graph has " + std::to_string(g.vertex_count()) + " vertices, limit " +
                           std::to_string(o.max_vertices));
  if (g.edges.empty()) {
    std::vector<BettiTable> out;
    for (const Field& f : fields) out.push_back(BettiTable{g.names, f, {}});
    return out;
  }
  HochsterOptions opt;
  opt.fields = fields;
  opt.width = o.width;
  return hochster_betti_tables(g.edge_supports(), g.names, opt);
}

void print_table(const Options& o, const BettiTable& t) {
  if (o.format == "tsv") {
    std::cout << "# field " << t.field.name() << "\n" << betti_tsv(t);
  } else {
    std::cout << "field " << t.field.name() << "\n" << betti_text(t);
  }
}

int cmd_decompose(const Options& o, bool ascii) {
  auto in = need_diagram(o);
  auto r = rectangular_decomposition(in.diagram);
  if (o.format == "json") {
    emit(o, {{"diagram", to_json(in)}, {"decomposition", to_json(r)}});
    return kOk;
  }
  const Diagram& d = in.diagram;
  std::cout << "diagram: " << d.rows.size() << " rows, " << d.cols.size() << " cols, " << d.cells.size()
            << " cells" << (d.shifted ? ", shifted" : "") << "\n";
  if (ascii) std::cout << d.ascii();
  for (std::size_t k = 0; k < r.pieces.size(); ++k) {
    const Piece& p = r.pieces[k];
    std::cout << "piece " << k + 1 << ": " << to_string(p.kind) << " rows {" << join(p.rows) << "} cols {"
              << join(p.cols) << "}\n";
  }
  std::cout << "excess:";
  for (const Cell& c : r.excess) std::cout << " (" << c.row << "," << c.col << ")";
  std::cout << "\nrectangularity " << r.rectangularity << "  spherical " << (r.spherical ? "true" : "false")
            << "  staircase " << r.staircase_nonexcess << "\n";
  return kOk;
}

// Entrywise comparison; returns the number of mismatching tables.
int compare_tables(const std::vector<BettiTable>& a, const std::vector<BettiTable>& b) {
  int bad = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    if (!a[k].same_entries(b[k])) ++bad;
  return bad + static_cast<int>(a.size() != b.size());
}

std::vector<BettiTable> relabel(std::vector<BettiTable> tables, const std::vector<std::string>& names) {
  for (auto& t : tables) t.vertex_names = names;
  return tables;
}

std::mt19937_64 seeded(const Options& o) {
  std::cerr << "seed " << o.seed << "\n";
  return std::mt19937_64(o.seed);
}

ShapeSpec random_restriction(std::mt19937_64& rng, int max_vertices, bool bipartite) {
  std::uniform_int_distribution<int> len(1, 5), coin(0, 1);
  std::vector<int> lambda;
  int top = len(rng) + 2;
  for (int v = top; v >= 1; --v)
    if (coin(rng) || v == top) lambda.push_back(v);
  std::vector<int> mu;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    int cap = std::min(lambda[i] - 1, mu.empty() ? lambda[i] - 1 : mu.back() - 1);
    if (cap < 1) break;
    int v = std::uniform_int_distribution<int>(0, cap)(rng);
    if (v == 0) break;
    mu.push_back(v);
  }
  ShapeSpec s{StrictPartition(lambda), StrictPartition(mu), {}, std::nullopt};
  int labels = build_shifted_skew(s.lambda, s.mu).max_label();
  std::vector<int> xs, ys;
  for (int v = 1; v <= labels; ++v) {
    if (coin(rng)) xs.push_back(v);
    if (bipartite && coin(rng)) ys.push_back(v);
  }
  while (static_cast<int>(xs.size() + ys.size()) > max_vertices) {
    auto& v = (ys.size() > xs.size()) ? ys : xs;
    v.erase(v.begin() + std::uniform_int_distribution<int>(0, static_cast<int>(v.size()) - 1)(rng));
  }
  s.xs = xs;
  if (bipartite) s.ys = ys;
  return s;
}

int betti_random(const Options& o, bool bipartite, int count) {
  auto rng = seeded(o);
  const auto fields = fields_of(o, {Field{0}, Field{2}});
  int bad = 0;
  for (int k = 0; k < count; ++k) {
    auto s = random_restriction(rng, o.max_vertices, bipartite);
    Diagram d = s.diagram();
    auto closed = bipartite ? betti_bipartite_closed(d) : betti_nonbipartite(d, NonbipMode::Direct);
    auto sg = bipartite ? d.bipartite_graph().as_simple() : d.simple_graph();
    auto oracle = oracle_tables(sg, o, fields);
    bool ok = true;
    for (auto& t : oracle) {
      BettiTable c = closed;
      c.field = t.field;
      ok = ok && c.same_entries(t);
    }
    if (!ok) {
      ++bad;
      std::cout << "MISMATCH " << to_dsl(s) << "\n";
    }
  }
  std::cout << "random instances " << count << ", mismatches " << bad << "\n";
  return bad ? kFailed : kOk;
}

int cmd_betti(const Options& o, const std::string& mode, const std::string& method, const std::string& lambda,
              int random_count) {
  const auto fields = fields_of(o, {Field{0}});
  if (mode == "bip" || mode == "nonbip") {
    const bool bip = mode == "bip";
    if (random_count > 0) return betti_random(o, bip, random_count);
    GraphInput g = need_graph(o);
    const bool closed_ok = g.diagram && g.diagram->shape && g.diagram->diagram.shifted != bip;
    std::string m = method.empty() ? (closed_ok ? "closed" : "oracle") : method;
    if (m != "closed" && m != "oracle" && m != "both") throw ParseError("--method must be closed, oracle or both");
    if (m != "oracle" && !closed_ok)
      throw PreconditionError("closed form needs a shifted skew restriction of the matching kind");
    if (bip && !g.bipartite) throw PreconditionError("betti bip needs a bipartite input");
    std::vector<BettiTable> tables;
    bool agree = true;
    if (m != "oracle") {
      BettiTable c = bip ? betti_bipartite_closed(g.diagram->diagram)
                         : betti_nonbipartite(g.diagram->diagram, NonbipMode::Direct);
      for (const Field& f : fields) {
        BettiTable t = c;
        t.field = f;
        tables.push_back(t);
      }
    }
    if (m != "closed") {
      auto oracle = oracle_tables(g.simple, o, fields);
      if (m == "both") agree = compare_tables(relabel(tables, oracle[0].vertex_names), oracle) == 0;
      else tables = oracle;
    }
    std::optional<int> reg, pd;
    if (!tables.empty()) {
      reg = tables[0].regularity();
      pd = tables[0].projective_dimension();
    }
    if (o.format == "json") {
      Json j;
      if (g.diagram) j["diagram"] = to_json(*g.diagram);
      else j["graph"] = to_json(g.simple);
      j["method"] = m;
      Json ts = Json::array();
      for (const auto& t : tables) ts.push_back(to_json(t));
      j["tables"] = ts;
      j["regularity"] = reg ? Json(*reg) : Json(nullptr);
      j["projective_dimension"] = pd ? Json(*pd) : Json(nullptr);
      if (m == "both") j["closed_equals_oracle"] = agree;
      emit(o, j);
    } else {
      std::cout << "method " << m << "\n";
      for (const auto& t : tables) print_table(o, t);
      if (o.format == "text") {
        std::cout << "regularity " << (reg ? std::to_string(*reg) : "-") << "  projective-dimension "
                  << (pd ? std::to_string(*pd) : "-") << "\n";
        if (m == "both") std::cout << "closed form equals oracle: " << (agree ? "yes" : "NO") << "\n";
      }
    }
    return agree ? kOk : kFailed;
  }
  if (mode == "ferrers") {
    std::vector<int> parts;
    if (!lambda.empty()) {
      parts = parse_int_list(lambda);
    } else {
      auto doc = document(o);
      if (!doc || !doc->contains("lambda")) throw ParseError("betti ferrers needs --lambda");
      parts = doc->at("lambda").get<std::vector<int>>();
    }
    FerrersShape s(parts);
    auto r = ferrers_betti(s);
    bool ok = r.routes_agree;
    std::optional<bool> oracle_ok;
    if (method == "both" || method == "oracle") {
      auto d = ferrers_diagram(s);
      auto oracle = oracle_tables(d.bipartite_graph().as_simple(), o, fields);
      BettiTable fine = r.fine;
      fine.vertex_names = oracle[0].vertex_names;
      oracle_ok = true;
      for (auto& t : oracle) {
        fine.field = t.field;
        oracle_ok = *oracle_ok && fine.same_entries(t);
      }
      ok = ok && *oracle_ok;
    }
    if (o.format == "json") {
      Json j{{"lambda", parts}, {"alpha", r.alpha}, {"betti", r.coarse}, {"routes_agree", r.routes_agree}};
      Json routes = Json::array();
      for (const auto& v : r.routes) routes.push_back(v);
      j["routes"] = routes;
      j["fine"] = to_json(r.fine);
      if (oracle_ok) j["oracle_agrees"] = *oracle_ok;
      emit(o, j);
    } else {
      std::cout << "alpha " << join64(r.alpha) << "\n";
      for (std::size_t k = 0; k < r.routes.size(); ++k) std::cout << "route " << k + 1 << ": " << join64(r.routes[k]) << "\n";
      std::cout << "routes agree: " << (r.routes_agree ? "yes" : "NO") << "\n";
      if (oracle_ok) std::cout << "oracle agrees: " << (*oracle_ok ? "yes" : "NO") << "\n";
      std::cout << totals_line(r.coarse) << "\n";
    }
    return ok ? kOk : kFailed;
  }
  if (mode == "hypergraph") {
    auto doc_kind = FamilyKind::Sets;
    auto fam = uniform_family(o, doc_kind);
    if (!fam) {
      auto p = need_partite(o);
      auto formula = ferrers_hypergraph_betti(p);
      bool ok = true;
      std::vector<std::int64_t> oracle;
      if (method == "both" || method == "oracle") {
        oracle = oracle_betti(partite_ideal(p), fields[0], o.max_vertices);
        ok = oracle == formula;
      }
      if (o.format == "json") {
        Json j{{"family", to_json(p)}, {"formula", formula}};
        if (!oracle.empty()) j["oracle"] = oracle;
        emit(o, j);
      } else {
        std::cout << "formula " << totals_line(formula) << "\n";
        if (!oracle.empty()) std::cout << "oracle  " << totals_line(oracle) << "\n";
      }
      return ok ? kOk : kFailed;
    }
    auto st = stability_check(*fam);
    std::vector<std::int64_t> formula, oracle;
    std::string m = method.empty() ? (st.strongly_stable ? "formula" : "oracle") : method;
    if (m == "closed") m = "formula";
    if (m != "formula" && m != "oracle" && m != "both") throw ParseError("--method must be closed, oracle or both");
    if (m != "oracle") formula = hypergraph_betti_formula(*fam);
    if (m != "formula") oracle = oracle_betti(family_ideal(*fam), fields[0], o.max_vertices);
    bool ok = m != "both" || formula == oracle;
    if (o.format == "json") {
      Json j{{"family", to_json(*fam)}, {"strongly_stable", st.strongly_stable}};
      if (!formula.empty()) j["formula"] = formula;
      if (!oracle.empty()) j["oracle"] = oracle;
      emit(o, j);
    } else {
      std::cout << "strongly stable: " << (st.strongly_stable ? "yes" : "no") << "\n";
      if (!formula.empty()) std::cout << "formula " << totals_line(formula) << "\n";
      if (!oracle.empty()) std::cout << "oracle  " << totals_line(oracle) << "\n";
    }
    return ok ? kOk : kFailed;
  }
  throw ParseError("betti mode must be bip, nonbip, ferrers or hypergraph");
}

int cmd_homology(const Options& o) {
  GraphInput g = need_graph(o);
  if (g.simple.vertex_count() > o.max_vertices)
    throw OracleLimitError("complex has more than " + std::to_string(o.max_vertices) + " vertices");
  auto delta = independence_complex(g.simple);
  std::vector<int> primes{2, 3};
  for (const Field& f : fields_of(o, {}))
    if (f.characteristic && std::find(primes.begin(), primes.end(), f.characteristic) == primes.end())
      primes.push_back(f.characteristic);
  auto h = reduced_homology(delta, primes);
  if (o.format == "json") {
    Json facets = Json::array();
    for (Mask f : delta.facets()) {
      Json face = Json::array();
      for (int b : bits_of(f)) face.push_back(delta.names()[b]);
      facets.push_back(face);
    }
    Json j{{"graph", to_json(g.simple)}, {"facets", facets}, {"lowest_degree", h.lowest_degree}, {"rational", h.rational}};
    Json mod;
    for (const auto& [p, ranks] : h.modular) mod["F" + std::to_string(p)] = ranks;
    j["modular"] = mod;
    Json tors = Json::array();
    for (const auto& t : h.torsion) {
      Json row = Json::array();
      for (const auto& v : t) row.push_back(v.str());
      tors.push_back(row);
    }
    j["torsion"] = tors;
    emit(o, j);
    return kOk;
  }
  std::cout << "independence complex: " << delta.facets().size() << " facets\n";
  for (Mask f : delta.facets()) {
    std::cout << "  {";
    bool first = true;
    for (int b : bits_of(f)) {
      std::cout << (first ? "" : ",") << delta.names()[b];
      first = false;
    }
    std::cout << "}\n";
  }
  for (std::size_t k = 0; k < h.rational.size(); ++k) {
    int deg = h.lowest_degree + static_cast<int>(k);
    std::cout << "H~_" << deg << ": Q " << h.rational[k];
    for (const auto& [p, ranks] : h.modular) std::cout << "  F" << p << " " << ranks[k];
    if (k < h.torsion.size() && !h.torsion[k].empty()) {
      std::cout << "  torsion";
      for (const auto& v : h.torsion[k]) std::cout << " Z/" << v;
    }
    std::cout << "\n";
  }
  return kOk;
}

Labeling parse_labeling(const std::string& s) {
  if (s == "partite") return Labeling::Partite;
  if (s == "specialized") return Labeling::Specialized;
  throw ParseError("--labeling must be partite or specialized");
}

int cmd_boxes(const Options& o, const std::string& labeling) {
  auto f = need_partite(o);
  auto c = complex_of_boxes(f, parse_labeling(labeling));
  if (o.format == "json") {
    emit(o, {{"family", to_json(f)}, {"complex", to_json(c)}});
    return kOk;
  }
  std::vector<int> fv = c.f_vector();
  std::cout << "f-vector (" << join(fv) << ")\n";
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    const auto& cell = c.cells[k];
    std::cout << "cell " << k << " dim " << cell.dim << " label " << monomial_string(cell.label, c.variables) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, const std::string& labeling, bool allow_nonminimal) {
  auto f = need_partite(o);
  auto c = complex_of_boxes(f, parse_labeling(labeling));
  auto r = verify_cellular_resolution(c, fields_of(o, {Field{0}, Field{2}}));
  if (o.format == "json") {
    emit(o, {{"family", to_json(f)}, {"labeling", labeling}, {"check", to_json(r, c)}});
  } else {
    std::cout << "multidegrees checked " << r.multidegrees_checked << "\n";
    std::cout << "resolution " << (r.is_resolution ? "yes" : "no") << "  minimal " << (r.is_minimal ? "yes" : "no") << "\n";
    if (r.failing_multidegree) {
      std::cout << "failing multidegree " << monomial_string(*r.failing_multidegree, c.variables)
                << "  nonzero reduced homology in degrees " << join(r.failing_degrees) << "\n";
    }
  }
  return r.is_resolution && (allow_nonminimal || r.is_minimal) ? kOk : kFailed;
}

int cmd_colex(const Options& o) {
  auto k = need_uniform(o);
  auto r = check_colex_lower_bound(k, fields_of(o, {Field{0}, Field{2}}), o.max_vertices);
  if (o.format == "json") {
    Json betti;
    for (std::size_t f = 0; f < r.fields.size() && f < r.betti.size(); ++f) betti[r.fields[f].name()] = r.betti[f];
    emit(o, {{"family", to_json(k)}, {"betti", betti}, {"colex_bound", r.bound}, {"verdict", to_string(r.verdict)},
             {"violations", r.violations}});
  } else {
    for (std::size_t f = 0; f < r.betti.size(); ++f)
      std::cout << "betti (" << r.fields[f].name() << "): " << join64(r.betti[f]) << "\n";
    std::cout << "colex bound: " << join64(r.bound) << "\n";
    if (r.verdict == Verdict::Violated) std::cout << "VIOLATED at i=" << join(r.violations) << "\n";
    else std::cout << (r.verdict == Verdict::Holds ? "obeys the colex lower bound" : "oracle too large") << "\n";
  }
  if (r.verdict == Verdict::OracleTooLarge) return kOracle;
  return r.verdict == Verdict::Holds ? kOk : kFailed;
}

std::string rows_string(const BipartiteGraph& g) {
  std::string out;
  for (const auto& row : g.biadjacency()) {
    if (!out.empty()) out += ",";
    for (int v : row) out += static_cast<char>('0' + v);
  }
  return out;
}

std::string flags_string(const GraphClassReport& c) {
  return std::string(c.row_nested ? "RN " : "") + (c.nearly_row_nested ? "NRN " : "") + (c.horizontal ? "H " : "") +
         (c.horizontal_vertical ? "HV" : "");
}

struct ScanOutcome {
  BipartiteGraph graph;
  ConjectureReport report;
  bool classes_agree = true;
};

int cmd_scan(const Options& o, int max_m, int max_n, int random_count) {
  std::vector<BipartiteGraph> graphs;
  bool single = !o.biadjacency.empty() || !o.fixture.empty() || !o.input.empty() || !o.dsl.empty();
  if (single) {
    graphs.push_back(need_bipartite(o));
  } else {
    for (int m = 1; m <= max_m; ++m)
      for (int n = 1; n <= max_n; ++n)
        for (auto& g : enumerate_bipartite(m, n, {.no_isolated_x = true})) graphs.push_back(std::move(g));
  }
  if (random_count > 0) {
    auto rng = seeded(o);
    std::uniform_int_distribution<int> size(1, 5), coin(0, 1);
    for (int k = 0; k < random_count; ++k) {
      int m = size(rng), n = size(rng);
      std::vector<Mask> rows(m);
      for (auto& r : rows) {
        while (r == 0)
          for (int c = 0; c < n; ++c)
            if (coin(rng)) r |= bit(c);
      }
      std::vector<int> xs(m), ys(n);
      std::iota(xs.begin(), xs.end(), 1);
      std::iota(ys.begin(), ys.end(), 1);
      graphs.emplace_back(xs, ys, rows);
    }
  }
  const auto fields = fields_of(o, {Field{0}, Field{2}});
  std::vector<ScanOutcome> outcomes(graphs.size());
  auto work = [&](std::size_t start) {
    for (std::size_t k = start; k < graphs.size(); k += static_cast<std::size_t>(std::max(1, o.width))) {
      outcomes[k].graph = graphs[k];
      outcomes[k].report = check_bipartite_conjecture(graphs[k], fields, o.max_vertices);
      outcomes[k].classes_agree = classify_bipartite(graphs[k], ClassifyMethod::Forbidden)
                                      .same_flags(outcomes[k].report.classes);
    }
  };
  std::vector<std::future<void>> pool;
  for (int t = 0; t < std::max(1, o.width); ++t) pool.push_back(std::async(std::launch::async, work, t));
  for (auto& f : pool) f.get();

  int upper_bad = 0, lower_bad = 0, cumulative_bad = 0, pred_upper_bad = 0, pred_lower_bad = 0, class_bad = 0;
  int skipped = 0, field_diff = 0;
  for (const auto& s : outcomes) {
    const auto& r = s.report;
    if (r.upper == Verdict::OracleTooLarge) {
      ++skipped;
      continue;
    }
    upper_bad += r.upper == Verdict::Violated;
    lower_bad += r.lower == Verdict::Violated;
    cumulative_bad += !r.upper_cumulative_holds;
    pred_upper_bad += !r.upper_prediction_ok;
    pred_lower_bad += !r.lower_prediction_ok;
    class_bad += !s.classes_agree;
    field_diff += !r.fields_agree;
  }
  if (o.format == "json") {
    for (const auto& s : outcomes) {
      Json rec = scan_record(s.graph, s.report);
      rec["classes_agree"] = s.classes_agree;
      std::cout << rec.dump() << "\n";
    }
  } else if (o.format == "tsv") {
    std::cout << "biadjacency\tclasses\tlower\tupper\tlower_tight\tupper_tight\tclasses_agree\n";
    for (const auto& s : outcomes)
      std::cout << rows_string(s.graph) << "\t" << flags_string(s.report.classes) << "\t" << to_string(s.report.lower)
                << "\t" << to_string(s.report.upper) << "\t" << s.report.lower_tight_all << "\t"
                << s.report.upper_tight_all << "\t" << s.classes_agree << "\n";
  } else {
    std::cout << "graphs " << outcomes.size() << "  skipped " << skipped << "\n";
    std::cout << "upper bound violations " << upper_bad << "\n";
    std::cout << "cumulative upper bound violations " << cumulative_bad << "\n";
    std::cout << "lower bound violations " << lower_bad << "\n";
    std::cout << "upper tightness vs horizontal-vertical mismatches " << pred_upper_bad << "\n";
    std::cout << "lower tightness vs nearly-row-nested mismatches " << pred_lower_bad << "\n";
    std::cout << "classification disagreements " << class_bad << "\n";
    std::cout << "graphs with field-dependent values " << field_diff << "\n";
    for (const auto& s : outcomes)
      if (s.report.lower == Verdict::Violated) std::cout << "lower bound violated on " << rows_string(s.graph) << "\n";
  }
  return upper_bad + pred_upper_bad + pred_lower_bad + class_bad ? kFailed : kOk;
}

int cmd_classify(const Options& o, bool models) {
  auto g = need_bipartite(o);
  auto def = classify_bipartite(g, ClassifyMethod::Definition);
  auto forb = classify_bipartite(g, ClassifyMethod::Forbidden);
  auto kr = krull_dimension(g);
  bool agree = def.same_flags(forb);
  if (o.format == "json") {
    Json j{{"graph", to_json(g)}, {"definition", to_json(def)}, {"forbidden", to_json(forb)}, {"agree", agree}};
    j["krull"] = {{"nu", kr.nu}, {"alpha", kr.alpha}, {"rho", kr.rho}, {"tau", kr.tau ? Json(*kr.tau) : Json(nullptr)}};
    if (models) {
      auto md = bipartite_models(g);
      j["models"] = {{"row_nested", to_json(md.row_nested)}, {"horizontal", to_json(md.horizontal)}};
    }
    emit(o, j);
  } else {
    auto line = [](const char* name, bool a, bool b, const std::optional<InducedWitness>& w) {
      std::cout << name << ": " << (a ? "yes" : "no");
      if (a != b) std::cout << " (forbidden-subgraph test says " << (b ? "yes" : "no") << ")";
      if (w) std::cout << "  witness " << w->pattern << " x{" << join(w->xs) << "} y{" << join(w->ys) << "}";
      std::cout << "\n";
    };
    line("row-nested", def.row_nested, forb.row_nested, forb.row_nested_witness);
    line("nearly-row-nested", def.nearly_row_nested, forb.nearly_row_nested, forb.nearly_row_nested_witness);
    line("horizontal", def.horizontal, forb.horizontal, forb.horizontal_witness);
    line("horizontal-vertical", def.horizontal_vertical, forb.horizontal_vertical, forb.horizontal_vertical_witness);
    std::cout << "krull dimension " << kr.alpha << "  matching " << kr.nu << "  vertex cover " << kr.rho
              << "  edge cover " << (kr.tau ? std::to_string(*kr.tau) : "-") << "\n";
    if (models) {
      auto md = bipartite_models(g);
      std::cout << "row-nested model " << rows_string(md.row_nested) << "\n";
      std::cout << "horizontal model " << rows_string(md.horizontal) << "\n";
    }
  }
  return agree ? kOk : kFailed;
}

int cmd_reduce(const Options& o) {
  auto g = need_bipartite(o);
  auto r = reductions(g, o.max_vertices);
  if (o.format == "json") {
    emit(o, {{"graph", to_json(g)}, {"full_column_checks", r.full_column_checks},
             {"nested_row_checks", r.nested_row_checks}, {"failures", r.failures}});
  } else {
    if (!r.applicable()) std::cout << "no reduction applies\n";
    std::cout << "full-column identities checked " << r.full_column_checks << "\n";
    std::cout << "nested-row identities checked " << r.nested_row_checks << "\n";
    for (const auto& f : r.failures) std::cout << "FAILED " << f << "\n";
  }
  return r.ok() ? kOk : kFailed;
}

int cmd_rook(const Options& o, const std::string& a, const std::string& b, int r_max) {
  std::vector<int> pa, pb;
  if (!a.empty() && !b.empty()) {
    pa = parse_int_list(a);
    pb = parse_int_list(b);
  } else {
    auto doc = document(o);
    if (!doc || !doc->contains("a") || !doc->contains("b")) throw ParseError("rook needs --a and --b");
    pa = doc->at("a").get<std::vector<int>>();
    pb = doc->at("b").get<std::vector<int>>();
  }
  FerrersShape sa(pa), sb(pb);
  if (r_max < 0) r_max = std::max(sa.rows(), sb.rows());
  auto r = rook_tools(sa, sb, r_max);
  bool ok = !r.rook_equal || (r.alpha_equal && r.betti_equal);
  if (o.format == "json") {
    emit(o, {{"a", pa}, {"b", pb}, {"rooks_a", r.counts_a}, {"rooks_b", r.counts_b}, {"rook_equivalent", r.rook_equal},
             {"alpha_equal", r.alpha_equal}, {"betti_equal", r.betti_equal}});
  } else {
    std::cout << "rooks a: " << join64(r.counts_a) << "\n";
    std::cout << "rooks b: " << join64(r.counts_b) << "\n";
    std::cout << "rook equivalent " << (r.rook_equal ? "yes" : "no") << "  alpha equal " << (r.alpha_equal ? "yes" : "no")
              << "  betti equal " << (r.betti_equal ? "yes" : "no") << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_enumerate(const Options& o, int m, int n, const EnumerationFilter& filter) {
  auto graphs = enumerate_bipartite(m, n, filter);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& g : graphs) arr.push_back(to_json(g));
    emit(o, {{"m", m}, {"n", n}, {"count", graphs.size()}, {"graphs", arr}});
  } else {
    std::cout << "classes " << graphs.size() << "\n";
    for (const auto& g : graphs) std::cout << rows_string(g) << "\n";
  }
  return kOk;
}

int cmd_reproduce(const Options& o) {
  auto rows = reproduce_fixtures(fixture_dir(o), o.width);
  int failed = 0;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"fixture", r.fixture}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
    emit(o, arr);
  }
  std::size_t w1 = 7, w2 = 5;
  for (const auto& r : rows) {
    w1 = std::max(w1, r.fixture.size());
    w2 = std::max(w2, r.check.size());
  }
  for (const auto& r : rows) {
    failed += !r.pass;
    if (o.format != "json") {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.fixture << std::string(w1 - r.fixture.size() + 2, ' ') << r.check
                << std::string(w2 - r.check.size() + 2, ' ') << r.detail << "\n";
    }
  }
  if (o.format != "json") std::cout << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of shifted skew diagram edge ideals and stable hypergraph ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.fields, "Coefficient field(s): Q, F2, F3, ...");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--width", o.width, "Parallel workers")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for randomized runs");
  app.add_option("--max-vertices", o.max_vertices, "Oracle size guard");
  app.add_option("--fixture", o.fixture, "Fixture name");
  app.add_option("--fixture-dir", o.fixture_dir, "Fixture directory");
  app.add_option("--dsl", o.dsl, "Shifted skew restriction, e.g. \"lambda=4,2; mu=1; X=1,2; Y=3,4\"");
  app.add_option("--edges", o.edges, "Uniform family, e.g. 12,23,34");
  app.add_option("--input", o.input, "JSON input file ('-' for stdin)");
  app.add_option("--biadjacency", o.biadjacency, "Bipartite graph rows, e.g. 110,011");

  bool ascii = false;
  auto* decompose = app.add_subcommand("decompose", "Rectangular decomposition");
  decompose->add_flag("--ascii", ascii, "Print the diagram");

  std::string mode, method, lambda;
  int random_count = 0;
  auto* betti = app.add_subcommand("betti", "Betti tables");
  betti->add_option("mode", mode, "bip | nonbip | ferrers | hypergraph")->required();
  betti->add_option("--method", method, "closed | oracle | both");
  betti->add_option("--lambda", lambda, "Ferrers shape");
  betti->add_option("--random", random_count, "Compare closed form and oracle on random restrictions");

  auto* homology_cmd = app.add_subcommand("homology", "Reduced homology of the independence complex");

  std::string labeling = "partite";
  bool allow_nonminimal = false;
  auto* boxes = app.add_subcommand("boxes", "Complex of boxes");
  boxes->add_option("--labeling", labeling, "partite | specialized");
  auto* verify = app.add_subcommand("verify-resolution", "Check that the complex of boxes is a cellular resolution");
  verify->add_option("--labeling", labeling, "partite | specialized");
  verify->add_flag("--allow-nonminimal", allow_nonminimal, "Accept non-minimal resolutions");

  auto* colex = app.add_subcommand("colex-check", "Compare with the colexsegment Betti numbers");

  int max_m = 3, max_n = 3, scan_random = 0;
  auto* scan = app.add_subcommand("conjecture-scan", "Check the bipartite bounds over enumerated graphs");
  scan->add_option("--m", max_m, "Largest |X|");
  scan->add_option("--n", max_n, "Largest |Y|");
  scan->add_option("--random", scan_random, "Additional random graphs");

  bool models = false;
  auto* classify = app.add_subcommand("classify", "Graph classes with witnesses");
  classify->add_flag("--models", models, "Print the row-nested and horizontal models");

  auto* reduce = app.add_subcommand("reduce", "Verify the reduction identities");

  std::string rook_a, rook_b;
  int r_max = -1;
  auto* rook = app.add_subcommand("rook", "Rook numbers and Betti numbers of two Ferrers boards");
  rook->add_option("--a", rook_a, "First shape");
  rook->add_option("--b", rook_b, "Second shape");
  rook->add_option("--r-max", r_max, "Largest rook count");

  int em = 2, en = 2;
  EnumerationFilter filter;
  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes of bipartite graphs");
  enumerate->add_option("--m", em, "|X|");
  enumerate->add_option("--n", en, "|Y|");
  enumerate->add_flag("--no-isolated-x", filter.no_isolated_x);
  enumerate->add_flag("--no-isolated-y", filter.no_isolated_y);
  enumerate->add_flag("--connected", filter.connected);

  auto* reproduce = app.add_subcommand("reproduce-paper", "Run every fixture check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*decompose) return cmd_decompose(o, ascii);
    if (*betti) return cmd_betti(o, mode, method, lambda, random_count);
    if (*homology_cmd) return cmd_homology(o);
    if (*boxes) return cmd_boxes(o, labeling);
    if (*verify) return cmd_verify(o, labeling, allow_nonminimal);
    if (*colex) return cmd_colex(o);
    if (*scan) return cmd_scan(o, max_m, max_n, scan_random);
    if (*classify) return cmd_classify(o, models);
    if (*reduce) return cmd_reduce(o);
    if (*rook) return cmd_rook(o, rook_a, rook_b, r_max);
    if (*enumerate) return cmd_enumerate(o, em, en, filter);
    if (*reproduce) return cmd_reproduce(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const OracleLimitError& e) {
    std::cerr << "oracle limit: " << e.what() << "\n";
    return kOracle;
  }
  return kParse;
}
