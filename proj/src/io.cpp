#include "skewres/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "skewres/errors.hpp"

namespace skewres {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int(const std::string& raw) {
  std::string t = trim(raw);
  if (t.empty()) throw ParseError("empty integer");
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("not an integer: '" + t + "'");
  return v;
}

// Wraps json access so schema errors surface as ParseError.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<int> int_vector(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const std::string& tok : split(text, ',')) {
    auto dots = tok.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(tok));
      continue;
    }
    int a = parse_int(tok.substr(0, dots));
    int b = parse_int(tok.substr(dots + 2));
    if (b < a) throw ParseError("empty range '" + trim(tok) + "'");
    for (int v = a; v <= b; ++v) out.push_back(v);
  }
  return out;
}

Diagram ShapeSpec::diagram() const { return restrict(build_shifted_skew(lambda, mu), xs, ys); }

ShapeSpec parse_dsl(const std::string& text) {
  ShapeSpec s;
  bool have_lambda = false, have_x = false;
  for (const std::string& raw : split(text, ';')) {
    std::string item = trim(raw);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    std::string value = item.substr(eq + 1);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    try {
      if (key == "lambda") {
        s.lambda = StrictPartition(parse_int_list(value));
        have_lambda = true;
      } else if (key == "mu") {
        s.mu = StrictPartition(parse_int_list(value));
      } else if (key == "x") {
        s.xs = parse_int_list(value);
        have_x = true;
      } else if (key == "y") {
        s.ys = parse_int_list(value);
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid partition: ") + e.what());
    }
  }
  if (!have_lambda) throw ParseError("DSL needs lambda=");
  if (!have_x) {
    for (int v = 1; v <= build_shifted_skew(s.lambda, s.mu).max_label(); ++v) s.xs.push_back(v);
  }
  return s;
}

namespace {
std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}
}  // namespace

std::string to_dsl(const ShapeSpec& s) {
  std::string out = "lambda=" + join_ints(s.lambda.parts) + "; mu=" + join_ints(s.mu.parts) +
                    "; X=" + join_ints(s.xs);
  if (s.ys) out += "; Y=" + join_ints(*s.ys);
  return out;
}

Json to_json(const Diagram& d) {
  Json j;
  j["rows"] = d.rows;
  j["cols"] = d.cols;
  Json cells = Json::array();
  for (const Cell& c : d.cells) cells.push_back({c.row, c.col});
  j["cells"] = cells;
  j["shifted"] = d.shifted;
  return j;
}

Json to_json(const ShapeSpec& s) {
  Json j;
  j["lambda"] = s.lambda.parts;
  j["mu"] = s.mu.parts;
  j["X"] = s.xs;
  if (s.ys) j["Y"] = *s.ys;
  return j;
}

Json to_json(const DiagramInput& d) {
  Json j = to_json(d.diagram);
  if (d.shape) j["shape"] = to_json(*d.shape);
  return j;
}

Diagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("cell must be [row, col]");
      cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    bool shifted = j.contains("shifted") ? j.at("shifted").get<bool>() : false;
    auto rows = int_vector(j.at("rows"));
    auto cols = shifted && !j.contains("cols") ? rows : int_vector(j.at("cols"));
    try {
      return Diagram(rows, cols, cells, shifted);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid diagram: ") + e.what());
    }
  });
}

ShapeSpec shape_from_json(const Json& j) {
  return guarded("shape", [&] {
    ShapeSpec s;
    try {
      s.lambda = StrictPartition(int_vector(j.at("lambda")));
      if (j.contains("mu")) s.mu = StrictPartition(int_vector(j.at("mu")));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid partition: ") + e.what());
    }
    if (j.contains("X")) {
      s.xs = int_vector(j.at("X"));
    } else {
      for (int v = 1; v <= build_shifted_skew(s.lambda, s.mu).max_label(); ++v) s.xs.push_back(v);
    }
    if (j.contains("Y")) s.ys = int_vector(j.at("Y"));
    return s;
  });
}

DiagramInput diagram_input_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("diagram input must be a JSON object");
  if (j.contains("diagram")) return diagram_input_from_json(j.at("diagram"));
  if (j.contains("dsl")) {
    auto s = parse_dsl(guarded("dsl", [&] { return j.at("dsl").get<std::string>(); }));
    return {s.diagram(), s};
  }
  if (j.contains("cells")) {
    DiagramInput in{diagram_from_json(j), std::nullopt};
    if (j.contains("shape")) in.shape = shape_from_json(j.at("shape"));
    return in;
  }
  if (j.contains("lambda")) {
    auto s = shape_from_json(j);
    return {s.diagram(), s};
  }
  throw ParseError("no diagram found in input");
}

Json to_json(const RectDecomposition& r) {
  Json j;
  Json pieces = Json::array();
  for (const Piece& p : r.pieces) {
    Json q;
    q["kind"] = to_string(p.kind);
    q["rows"] = p.rows;
    q["cols"] = p.cols;
    if (p.top_cell) q["top_cell"] = {p.top_cell->row, p.top_cell->col};
    if (p.neck_cell) q["neck_cell"] = {p.neck_cell->row, p.neck_cell->col};
    pieces.push_back(q);
  }
  j["pieces"] = pieces;
  Json excess = Json::array();
  for (const Cell& c : r.excess) excess.push_back({c.row, c.col});
  j["excess"] = excess;
  j["rectangularity"] = r.rectangularity;
  j["spherical"] = r.spherical;
  j["staircase_nonexcess"] = r.staircase_nonexcess;
  j["has_empty_rect"] = r.has_empty_rect();
  j["has_pedestal"] = r.has_pedestal();
  return j;
}

Json to_json(const BettiTable& t) {
  Json j;
  j["convention"] = "ideal";
  j["field"] = t.field.name();
  j["vertices"] = t.vertex_names;
  Json entries = Json::array();
  for (const auto& [key, v] : t.entries) {
    Json support = Json::array();
    for (int b : bits_of(key.second)) support.push_back(t.vertex_names[b]);
    entries.push_back({{"i", key.first}, {"support", support}, {"value", v}});
  }
  j["entries"] = entries;
  j["totals"] = t.totals();
  return j;
}

BettiTable betti_from_json(const Json& j) {
  return guarded("Betti table", [&] {
    if (j.contains("betti") && !j.contains("entries")) return betti_from_json(j.at("betti"));
    if (j.value("convention", "ideal") != "ideal") throw ParseError("only the ideal convention is supported");
    BettiTable t;
    t.field = Field::parse(j.at("field").get<std::string>());
    t.vertex_names = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t v = 0; v < t.vertex_names.size(); ++v) index[t.vertex_names[v]] = static_cast<int>(v);
    for (const auto& e : j.at("entries")) {
      Mask s = 0;
      for (const auto& name : e.at("support")) {
        auto it = index.find(name.get<std::string>());
        if (it == index.end()) throw ParseError("unknown vertex in support");
        s |= bit(it->second);
      }
      t.add(e.at("i").get<int>(), s, e.at("value").get<std::int64_t>());
    }
    return t;
  });
}

namespace {

struct GradedGrid {
  int columns = 0;
  int lo = 0, hi = -1;
  std::map<std::pair<int, int>, std::int64_t> cells;  // (offset, i)
  std::vector<std::int64_t> totals;
};

GradedGrid grid_of(const BettiTable& t) {
  GradedGrid g;
  g.totals = t.totals();
  g.columns = static_cast<int>(g.totals.size());
  bool first = true;
  for (const auto& [key, v] : t.graded()) {
    int off = key.second - key.first;
    g.cells[{off, key.first}] += v;
    if (first) g.lo = g.hi = off;
    g.lo = std::min(g.lo, off);
    g.hi = std::max(g.hi, off);
    first = false;
  }
  return g;
}

}  // namespace

std::string totals_line(const std::vector<std::int64_t>& totals) {
  std::string out = "total:";
  for (auto v : totals) out += " " + std::to_string(v);
  return out;
}

std::string betti_text(const BettiTable& t) {
  GradedGrid g = grid_of(t);
  std::vector<std::size_t> width(g.columns, 1);
  for (int i = 0; i < g.columns; ++i) {
    width[i] = std::max(width[i], std::to_string(i).size());
    width[i] = std::max(width[i], std::to_string(g.totals[i]).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream out;
  out << "       ";
  for (int i = 0; i < g.columns; ++i) out << (i ? " " : "") << pad(std::to_string(i), width[i]);
  out << "\ntotal:";
  for (int i = 0; i < g.columns; ++i) out << " " << pad(std::to_string(g.totals[i]), width[i]);
  out << "\n";
  for (int off = g.lo; off <= g.hi; ++off) {
    out << pad(std::to_string(off), 5) << ":";
    for (int i = 0; i < g.columns; ++i) {
      auto it = g.cells.find({off, i});
      out << " " << pad(it == g.cells.end() ? "." : std::to_string(it->second), width[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string betti_tsv(const BettiTable& t) {
  GradedGrid g = grid_of(t);
  std::ostringstream out;
  out << "strand";
  for (int i = 0; i < g.columns; ++i) out << "\t" << i;
  out << "\n";
  for (int off = g.lo; off <= g.hi; ++off) {
    out << off;
    for (int i = 0; i < g.columns; ++i) {
      auto it = g.cells.find({off, i});
      out << "\t" << (it == g.cells.end() ? 0 : it->second);
    }
    out << "\n";
  }
  out << "total";
  for (auto v : g.totals) out << "\t" << v;
  out << "\n";
  return out.str();
}

Json to_json(const UniformFamily& f) {
  Json j;
  j["d"] = f.d;
  j["kind"] = to_string(f.kind);
  j["members"] = f.members;
  return j;
}

Json to_json(const PartiteFamily& f) {
  Json j;
  j["d"] = f.d;
  j["kind"] = "partite";
  j["members"] = f.members;
  return j;
}

UniformFamily family_from_json(const Json& j) {
  return guarded("family", [&] {
    if (j.contains("family")) return family_from_json(j.at("family"));
    std::string kind = j.value("kind", "sets");
    FamilyKind k;
    if (kind == "sets") k = FamilyKind::Sets;
    else if (kind == "multisets") k = FamilyKind::Multisets;
    else throw ParseError("family kind must be sets or multisets");
    auto members = j.at("members").get<std::vector<Tuple>>();
    int d = j.contains("d") ? j.at("d").get<int>() : (members.empty() ? 1 : static_cast<int>(members[0].size()));
    try {
      return UniformFamily(d, k, members);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid family: ") + e.what());
    }
  });
}

PartiteFamily partite_from_json(const Json& j) {
  return guarded("partite family", [&] {
    if (j.contains("family")) return partite_from_json(j.at("family"));
    if (j.value("kind", "partite") != "partite") throw ParseError("expected a partite family");
    auto members = j.at("members").get<std::vector<Tuple>>();
    int d = j.contains("d") ? j.at("d").get<int>() : (members.empty() ? 1 : static_cast<int>(members[0].size()));
    try {
      return PartiteFamily(d, members);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid partite family: ") + e.what());
    }
  });
}

UniformFamily parse_edges(const std::string& text, FamilyKind kind) {
  std::vector<Tuple> members;
  for (const std::string& raw : split(text, ',')) {
    std::string tok = trim(raw);
    if (tok.empty()) throw ParseError("empty member in list");
    Tuple t;
    if (tok.find('-') != std::string::npos) {
      for (const auto& part : split(tok, '-')) t.push_back(parse_int(part));
    } else {
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad member '" + tok + "'");
        t.push_back(c - '0');
      }
    }
    std::sort(t.begin(), t.end());
    members.push_back(t);
  }
  if (members.empty()) throw ParseError("no members given");
  int d = static_cast<int>(members[0].size());
  for (const auto& m : members)
    if (static_cast<int>(m.size()) != d) throw ParseError("members must all have the same size");
  try {
    return UniformFamily(d, kind, members);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid family: ") + e.what());
  }
}

Json to_json(const BoxComplex& c) {
  Json j;
  j["d"] = c.d;
  j["labeling"] = to_string(c.labeling);
  j["variables"] = c.variables;
  j["f_vector"] = c.f_vector();
  Json cells = Json::array();
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    const BoxCell& cell = c.cells[k];
    Json box = Json::array();
    for (Mask part : cell.box.parts) {
      Json values = Json::array();
      for (int b : bits_of(part)) values.push_back(b + 1);
      box.push_back(values);
    }
    Json boundary = Json::array();
    for (auto [face, sign] : cell.boundary) boundary.push_back({face, sign});
    cells.push_back({{"index", k},
                     {"dim", cell.dim},
                     {"box", box},
                     {"label", monomial_string(cell.label, c.variables)},
                     {"exponents", cell.label},
                     {"boundary", boundary}});
  }
  j["cells"] = cells;
  return j;
}

Json to_json(const ResolutionCheck& r, const BoxComplex& c) {
  Json j;
  j["is_resolution"] = r.is_resolution;
  j["is_minimal"] = r.is_minimal;
  j["multidegrees_checked"] = r.multidegrees_checked;
  if (r.failing_multidegree) {
    j["failing_multidegree"] = monomial_string(*r.failing_multidegree, c.variables);
    j["failing_cells"] = r.failing_cells;
    j["failing_degrees"] = r.failing_degrees;
  }
  if (r.nonminimal_pair) j["nonminimal_pair"] = {r.nonminimal_pair->first, r.nonminimal_pair->second};
  return j;
}

Json to_json(const BipartiteGraph& g) {
  Json j;
  j["x"] = g.x_labels;
  j["y"] = g.y_labels;
  j["biadjacency"] = g.biadjacency();
  return j;
}

BipartiteGraph bipartite_from_json(const Json& j) {
  return guarded("bipartite graph", [&] {
    if (j.contains("graph")) return bipartite_from_json(j.at("graph"));
    auto mat = j.at("biadjacency").get<std::vector<std::vector<int>>>();
    int n = j.contains("y") ? static_cast<int>(j.at("y").size())
                            : (mat.empty() ? 0 : static_cast<int>(mat[0].size()));
    std::vector<Mask> rows;
    for (const auto& r : mat) {
      if (static_cast<int>(r.size()) != n) throw ParseError("ragged biadjacency matrix");
      Mask row = 0;
      for (int c = 0; c < n; ++c)
        if (r[c]) row |= bit(c);
      rows.push_back(row);
    }
    std::vector<int> xs, ys;
    if (j.contains("x")) xs = int_vector(j.at("x"));
    else for (std::size_t i = 0; i < mat.size(); ++i) xs.push_back(static_cast<int>(i) + 1);
    if (j.contains("y")) ys = int_vector(j.at("y"));
    else for (int c = 0; c < n; ++c) ys.push_back(c + 1);
    try {
      return BipartiteGraph(xs, ys, rows);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid bipartite graph: ") + e.what());
    }
  });
}

Json to_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.names;
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({g.names[u], g.names[v]});
  j["edges"] = edges;
  return j;
}

SimpleGraph simple_graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    if (j.contains("graph")) return simple_graph_from_json(j.at("graph"));
    auto names = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t v = 0; v < names.size(); ++v) index[names[v]] = static_cast<int>(v);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
      auto a = index.find(e[0].get<std::string>());
      auto b = index.find(e[1].get<std::string>());
      if (a == index.end() || b == index.end()) throw ParseError("edge uses an unknown vertex");
      edges.push_back({a->second, b->second});
    }
    try {
      return SimpleGraph(names, edges);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("invalid graph: ") + e.what());
    }
  });
}

Json to_json(const GraphClassReport& r) {
  auto witness = [](const std::optional<InducedWitness>& w) -> Json {
    if (!w) return nullptr;
    return {{"pattern", w->pattern}, {"x", w->xs}, {"y", w->ys}};
  };
  Json j;
  j["row_nested"] = r.row_nested;
  j["nearly_row_nested"] = r.nearly_row_nested;
  j["horizontal"] = r.horizontal;
  j["horizontal_vertical"] = r.horizontal_vertical;
  j["witnesses"] = {{"row_nested", witness(r.row_nested_witness)},
                    {"nearly_row_nested", witness(r.nearly_row_nested_witness)},
                    {"horizontal", witness(r.horizontal_witness)},
                    {"horizontal_vertical", witness(r.horizontal_vertical_witness)}};
  return j;
}

Json scan_record(const BipartiteGraph& g, const ConjectureReport& r) {
  Json j;
  j["graph"] = to_json(g);
  j["classes"] = to_json(r.classes);
  j["verdicts"] = {{"lower", to_string(r.lower)},
                   {"upper", to_string(r.upper)},
                   {"upper_cumulative_holds", r.upper_cumulative_holds},
                   {"lower_tight_all", r.lower_tight_all},
                   {"upper_tight_all", r.upper_tight_all},
                   {"lower_prediction_ok", r.lower_prediction_ok},
                   {"upper_prediction_ok", r.upper_prediction_ok},
                   {"fields_agree", r.fields_agree}};
  Json table = Json::array();
  for (const BoundEntry& e : r.entries) {
    bool all_zero = e.lower == 0 && e.upper == 0 &&
                    std::all_of(e.values.begin(), e.values.end(), [](auto v) { return v == 0; });
    if (all_zero) continue;
    Json xs = Json::array();
    for (int b : bits_of(e.xprime)) xs.push_back(g.x_labels[b]);
    Json values;
    for (std::size_t f = 0; f < r.fields.size(); ++f) values[r.fields[f].name()] = e.values[f];
    table.push_back({{"i", e.i},
                     {"x", xs},
                     {"lower", e.lower},
                     {"upper", e.upper},
                     {"upper_cumulative", e.upper_cumulative},
                     {"values", values}});
  }
  j["table"] = table;
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Fixture load_fixture(const std::filesystem::path& dir, const std::string& name) {
  auto path = dir / (name + ".json");
  if (!std::filesystem::exists(path)) throw ParseError("unknown fixture '" + name + "'");
  Json j = read_json_file(path);
  return guarded("fixture", [&] {
    return Fixture{j.value("name", name), j.value("provenance", ""), j};
  });
}

std::vector<std::string> list_fixtures(const std::filesystem::path& dir) {
  std::vector<std::string> out;
  if (!std::filesystem::exists(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skewres
