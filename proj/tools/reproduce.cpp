#include "reproduce.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

#include "skewres/bounds.hpp"
#include "skewres/box_complex.hpp"
#include "skewres/errors.hpp"
#include "skewres/io.hpp"
#include "skewres/skew_betti.hpp"

namespace skewres {

namespace {

using Rows = std::vector<ReproduceRow>;

struct Ctx {
  const Fixture& fx;
  Rows& rows;
  const Json& expected() const { return fx.data.at("expected"); }
  void add(const std::string& check, bool pass, std::string detail = "") {
    rows.push_back({fx.name, check, pass, std::move(detail)});
  }
};

std::string vec(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::vector<Cell> cells_of(const Json& j) {
  std::vector<Cell> out;
  for (const auto& c : j) out.push_back({c[0].get<int>(), c[1].get<int>()});
  return out;
}

BettiTable graph_table(const SimpleGraph& g, Field f) { return hochster_betti_table(g.edge_supports(), g.names, f); }

SimpleGraph fixture_graph(const Json& gj) {
  if (gj.contains("biadjacency")) return bipartite_from_json(gj).as_simple();
  return simple_graph_from_json(gj);
}

void check_tables(Ctx& c, const SimpleGraph& g) {
  for (Field f : {Field{0}, Field{2}}) {
    auto t = graph_table(g, f);
    auto totals = t.totals();
    auto want = c.expected().at("totals").get<std::vector<std::int64_t>>();
    c.add("totals over " + f.name(), totals == want, vec(totals));
    bool strands_ok = true;
    std::string detail;
    for (const auto& [key, value] : c.expected().at("strands").items()) {
      auto s = t.strand(std::stoi(key));
      auto w = value.get<std::vector<std::int64_t>>();
      s.resize(std::max(s.size(), w.size()), 0);
      w.resize(s.size(), 0);
      strands_ok = strands_ok && s == w;
      detail += "degree " + key + " " + vec(s) + " ";
    }
    c.add("strands over " + f.name(), strands_ok, detail);
  }
}

void shifted_skew_shape(Ctx& c) {
  auto s = shape_from_json(c.fx.data.at("shape"));
  auto shape = build_shifted_skew(s.lambda, s.mu);
  auto got = shape.staircase_cells();
  c.add("staircase cells", got == cells_of(c.expected().at("staircase")), std::to_string(got.size()) + " cells");
}

void diagram_cells(Ctx& c) {
  auto in = diagram_input_from_json(c.fx.data.at("diagram"));
  auto want = cells_of(c.expected().at("cells"));
  c.add("restricted cells", in.diagram.cells == want, std::to_string(in.diagram.cells.size()) + " cells");
}

void rect_decomp(Ctx& c) {
  auto in = diagram_input_from_json(c.fx.data.at("diagram"));
  auto r = rectangular_decomposition(in.diagram);
  const auto& want = c.expected().at("pieces");
  bool ok = want.size() == r.pieces.size();
  for (std::size_t k = 0; ok && k < want.size(); ++k) {
    ok = want[k].at("kind").get<std::string>() == to_string(r.pieces[k].kind) &&
         want[k].at("rows").get<std::vector<int>>() == r.pieces[k].rows &&
         want[k].at("cols").get<std::vector<int>>() == r.pieces[k].cols;
  }
  c.add("pieces", ok, std::to_string(r.pieces.size()) + " pieces");
  c.add("rectangularity", r.rectangularity == c.expected().at("rectangularity").get<int>(),
        std::to_string(r.rectangularity));
  c.add("spherical", r.spherical == c.expected().at("spherical").get<bool>(), r.spherical ? "true" : "false");
}

void six_cycle(Ctx& c) {
  auto bg = bipartite_from_json(c.fx.data.at("graph"));
  auto g = bg.as_simple();
  auto delta = independence_complex(g);
  std::vector<Mask> want;
  for (const auto& f : c.expected().at("facets")) {
    Mask m = 0;
    for (const auto& v : f)
      m |= bit(static_cast<int>(std::find(g.names.begin(), g.names.end(), v.get<std::string>()) - g.names.begin()));
    want.push_back(m);
  }
  auto got = delta.facets();
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  c.add("independence complex facets", got == want, std::to_string(got.size()) + " facets");
  auto h = reduced_homology(delta, {2, 3});
  bool hom_ok = true;
  for (Field f : {Field{0}, Field{2}, Field{3}}) {
    for (std::size_t k = 0; k < h.rational.size(); ++k) {
      int deg = h.lowest_degree + static_cast<int>(k);
      auto key = std::to_string(deg);
      std::int64_t want_rank = c.expected().at("reduced_homology").contains(key)
                                   ? c.expected().at("reduced_homology").at(key).get<std::int64_t>()
                                   : 0;
      hom_ok = hom_ok && h.rank(deg, f) == want_rank;
    }
  }
  c.add("reduced homology over Q, F2, F3", hom_ok, "rank 2 in degree 1");
  check_tables(c, g);
  const auto& lb = c.expected().at("lower_bound_example");
  int i = lb.at("i").get<int>();
  Mask xs = 0;
  for (int label : lb.at("X").get<std::vector<int>>())
    xs |= bit(static_cast<int>(std::find(bg.x_labels.begin(), bg.x_labels.end(), label) - bg.x_labels.begin()));
  auto lower = lower_bound_value(bg, i, xs);
  auto partial = x_partial_table(bg, graph_table(g, Field{0}))[i][xs];
  c.add("lower bound strict on the full X-set", lower == lb.at("lower").get<std::int64_t>() &&
                                                    partial == lb.at("beta").get<std::int64_t>() && lower < partial,
        "bound " + std::to_string(lower) + " < " + std::to_string(partial));
}

void six_cycle_specialized(Ctx& c) { check_tables(c, fixture_graph(c.fx.data.at("graph"))); }

void three_edge_path(Ctx& c) {
  auto k = family_from_json(c.fx.data.at("family"));
  auto ideal = family_ideal(k);
  auto t = taylor_analysis(ideal.generators);
  c.add("Taylor resolution minimal", t.minimal == c.expected().at("taylor_minimal").get<bool>(),
        t.minimal ? "minimal" : "not minimal");
}

void ferrers_442(Ctx& c) {
  FerrersShape s(c.fx.data.at("lambda").get<std::vector<int>>());
  auto a = alpha_profile(s);
  c.add("antidiagonal profile", a == c.expected().at("alpha").get<std::vector<std::int64_t>>(), vec(a));
  auto r = ferrers_betti(s);
  auto oracle = graph_table(ferrers_diagram(s).bipartite_graph().as_simple(), Field{0}).totals();
  c.add("four formulas and oracle agree", r.routes_agree && oracle == r.coarse, vec(r.coarse));
}

void rook_pair(Ctx& c) {
  FerrersShape a(c.fx.data.at("a").get<std::vector<int>>());
  FerrersShape b(c.fx.data.at("b").get<std::vector<int>>());
  auto r = rook_tools(a, b, std::max(a.rows(), b.rows()));
  c.add("rook equivalent", r.rook_equal, vec(r.counts_a) + " " + vec(r.counts_b));
  c.add("equal Betti vectors", r.betti_equal && r.alpha_equal);
}

void colexsegment_fixture(Ctx& c) {
  auto seg = colexsegment(c.fx.data.at("g").get<std::int64_t>(), c.fx.data.at("d").get<int>());
  c.add("colexsegment members", seg.members == c.expected().at("members").get<std::vector<Tuple>>(),
        std::to_string(seg.members.size()) + " members");
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators) out.push_back(monomial_string(g, ideal.names));
  return out;
}

bool same_set(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void running_k(Ctx& c) {
  auto k = family_from_json(c.fx.data.at("family"));
  const auto& e = c.expected();
  c.add("strongly stable", stability_check(k).strongly_stable == e.at("strongly_stable").get<bool>());
  auto m = depolarize(k);
  c.add("depolarization", m.members == UniformFamily(3, FamilyKind::Multisets,
                                                      e.at("depolarization").get<std::vector<Tuple>>()).members);
  auto fk = partite_expansion(k);
  auto fm = partite_expansion(m);
  c.add("generators of I(F(K))",
        same_set(generator_strings(partite_ideal(fk)), e.at("partite_generators").get<std::vector<std::string>>()));
  c.add("generators of I(F(M))", same_set(generator_strings(partite_ideal(fm)),
                                         e.at("depolarized_partite_generators").get<std::vector<std::string>>()));
  auto want_f = e.at("f_vector").get<std::vector<int>>();
  for (auto [name, fam] : {std::pair{"F(K)", fk}, std::pair{"F(M)", fm}}) {
    auto bc = complex_of_boxes(fam, Labeling::Partite);
    c.add(std::string("f-vector of ") + name, bc.f_vector() == want_f);
    auto chk = verify_cellular_resolution(bc);
    c.add(std::string("minimal cellular resolution of I(") + name + ")",
          chk.is_resolution == e.at("resolution").get<bool>() && chk.is_minimal == e.at("minimal").get<bool>());
  }
  auto ck = complex_of_boxes(fk, Labeling::Specialized);
  auto cm = complex_of_boxes(fm, Labeling::Specialized);
  // Shifting part j down by j - 1 carries F(K) onto F(M).
  bool iso = ck.cells.size() == cm.cells.size();
  for (std::size_t i = 0; iso && i < ck.cells.size(); ++i) {
    int dk = 0, dm = 0;
    for (int v : ck.cells[i].label) dk += v;
    for (int v : cm.cells[i].label) dm += v;
    bool same_box = true;
    for (std::size_t j = 0; j < ck.cells[i].box.parts.size(); ++j)
      same_box = same_box && (ck.cells[i].box.parts[j] >> j) == cm.cells[i].box.parts[j];
    iso = same_box && ck.cells[i].boundary == cm.cells[i].boundary && dk == dm;
  }
  c.add("F(K) and F(M) complexes match with label degrees", iso);
}

void stable_ideal(Ctx& c) {
  auto k = family_from_json(c.fx.data.at("family"));
  const auto& e = c.expected();
  auto st = stability_check(k);
  bool witness_ok = st.witness && st.witness->first == e.at("witness")[0].get<Tuple>() &&
                    st.witness->second == e.at("witness")[1].get<Tuple>();
  c.add("not strongly stable, witness", !st.strongly_stable && witness_ok);
  auto t = oracle_table(family_ideal(k), Field{0}, 12);
  auto pd = t.projective_dimension();
  c.add("projective dimension", pd && *pd == e.at("projective_dimension").get<int>(), pd ? std::to_string(*pd) : "-");
  auto bc = complex_of_boxes(partite_expansion(k), Labeling::Specialized);
  c.add("naive complex of boxes dimension", bc.max_dim() == e.at("complex_dimension").get<int>(),
        std::to_string(bc.max_dim()));
  auto chk = verify_cellular_resolution(bc);
  std::string fail = chk.failing_multidegree ? monomial_string(*chk.failing_multidegree, bc.variables) : "-";
  c.add("naive complex is not a resolution", !chk.is_resolution && fail == e.at("failing_multidegree").get<std::string>(),
        "fails at " + fail);
}

void five_cycle(Ctx& c) {
  auto k = family_from_json(c.fx.data.at("family"));
  auto r = check_colex_lower_bound(k);
  const auto& e = c.expected();
  bool betti_ok = !r.betti.empty();
  for (const auto& b : r.betti) betti_ok = betti_ok && b == e.at("betti").get<std::vector<std::int64_t>>();
  c.add("Betti numbers over Q and F2", betti_ok, r.betti.empty() ? "-" : vec(r.betti[0]));
  c.add("colexsegment closed form", r.bound == e.at("colex_bound").get<std::vector<std::int64_t>>(), vec(r.bound));
  c.add("violation reported", r.verdict == Verdict::Violated && r.violations == e.at("violations").get<std::vector<int>>());
}

const std::map<std::string, std::function<void(Ctx&)>>& handlers() {
  static const std::map<std::string, std::function<void(Ctx&)>> h{
      {"shifted-skew-shape", shifted_skew_shape},
      {"bipartite-diagram-example", diagram_cells},
      {"nonbipartite-diagram-example", diagram_cells},
      {"rect-decomp-example", rect_decomp},
      {"six-cycle", six_cycle},
      {"six-cycle-specialized", six_cycle_specialized},
      {"three-edge-path", three_edge_path},
      {"ferrers-442", ferrers_442},
      {"ferrers-rook-pair", rook_pair},
      {"colexsegment-6-3", colexsegment_fixture},
      {"running-K", running_k},
      {"stable-ideal-example", stable_ideal},
      {"five-cycle", five_cycle},
  };
  return h;
}

Rows run_one(const std::filesystem::path& dir, const std::string& name) {
  Rows rows;
  try {
    Fixture fx = load_fixture(dir, name);
    Ctx c{fx, rows};
    auto it = handlers().find(name);
    if (it == handlers().end()) {
      c.add("known fixture", false, "no checks registered");
    } else {
      it->second(c);
    }
  } catch (const std::exception& e) {
    rows.push_back({name, "run", false, e.what()});
  }
  return rows;
}

}  // namespace

std::vector<ReproduceRow> reproduce_fixtures(const std::filesystem::path& dir, int width) {
  auto names = list_fixtures(dir);
  std::vector<Rows> results(names.size());
  if (width <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) results[i] = run_one(dir, names[i]);
  } else {
    std::vector<std::future<Rows>> futures;
    for (const auto& n : names) futures.push_back(std::async(std::launch::async, run_one, dir, n));
    for (std::size_t i = 0; i < names.size(); ++i) results[i] = futures[i].get();
  }
  std::vector<ReproduceRow> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  if (names.empty()) out.push_back({"-", "fixtures found", false, dir.string()});
  return out;
}

}  // namespace skewres
