#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "skewres/bounds.hpp"
#include "skewres/box_complex.hpp"
#include "skewres/errors.hpp"
#include "skewres/hypergraph.hpp"
#include "skewres/io.hpp"
#include "skewres/skew_betti.hpp"

using namespace skewres;

namespace {

// Time limits in seconds; all comparisons are exact.
constexpr double kSixCycleLimit = 1.0;
constexpr double kClosedFormLimit = 300.0;
constexpr double kScanLimit = 600.0;
constexpr int kClosedFormInstances = 200;
constexpr int kSpecializationInstances = 50;
constexpr int kCruxInstances = 30;
constexpr int kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  double limit;  // 0 means no limit
  std::function<void(Outcome&)> run;
};

const Field Q{0};
const Field F2{2};

std::vector<Field> both() { return {Q, F2}; }

std::string vec(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::int64_t> padded_strand(const BettiTable& t, int offset, std::size_t len) {
  auto s = t.strand(offset);
  s.resize(len, 0);
  return s;
}

std::vector<std::int64_t> oracle_totals(const SimpleGraph& g, int p) {
  return oracle::totals(oracle::fine_betti(g.vertex_count(), g.edge_supports(), p));
}

void six_cycle(Outcome& o) {
  auto g = BipartiteGraph::from_rows({{1, 2}, {0, 2}, {0, 1}}, 3).as_simple();
  SimpleGraph specialized({"x1", "x2", "x3", "x4", "x5"}, {{0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}});
  HochsterOptions opt;
  opt.fields = both();
  auto tg = hochster_betti_tables(g.edge_supports(), g.names, opt);
  auto ts = hochster_betti_tables(specialized.edge_supports(), specialized.names, opt);
  for (int k = 0; k < 2; ++k) {
    const int p = k == 0 ? 0 : 2;
    o.require(tg[k].totals() == std::vector<std::int64_t>{6, 9, 6, 2}, "6-cycle totals");
    o.require(padded_strand(tg[k], 2, 4) == std::vector<std::int64_t>{6, 6, 0, 0}, "6-cycle strand 2");
    o.require(padded_strand(tg[k], 3, 4) == std::vector<std::int64_t>{0, 3, 6, 2}, "6-cycle strand 3");
    o.require(ts[k].totals() == std::vector<std::int64_t>{6, 9, 5, 1}, "specialized totals");
    o.require(padded_strand(ts[k], 2, 4) == std::vector<std::int64_t>{6, 8, 4, 1}, "specialized strand 2");
    o.require(padded_strand(ts[k], 3, 4) == std::vector<std::int64_t>{0, 1, 1, 0}, "specialized strand 3");
    o.require(oracle_totals(g, p) == tg[k].totals(), "6-cycle brute force");
    o.require(oracle_totals(specialized, p) == ts[k].totals(), "specialized brute force");
  }
  o.note << "totals " << vec(tg[0].totals()) << " and " << vec(ts[0].totals());
}

void five_cycle(Outcome& o) {
  UniformFamily five(2, FamilyKind::Sets, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  auto c = check_colex_lower_bound(five, both());
  for (const auto& b : c.betti) o.require(b == std::vector<std::int64_t>{5, 5, 1}, "5-cycle betti");
  o.require(colex_closed_form(5, 2) == std::vector<std::int64_t>{5, 6, 2}, "colex closed form");
  o.require(oracle_betti(family_ideal(colexsegment(5, 2)), Q, 12) == std::vector<std::int64_t>{5, 6, 2},
            "colexsegment oracle");
  o.require(c.violations == std::vector<int>{1, 2}, "violation indices");
  o.require(c.verdict == Verdict::Violated, "verdict");
  o.note << "beta " << vec(c.betti[0]) << " bound " << vec(c.bound);
}

void running_family(Outcome& o) {
  UniformFamily k(3, FamilyKind::Sets, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}});
  auto m = depolarize(k);
  const std::vector<std::int64_t> want{6, 7, 2};
  for (const auto& fam : {partite_expansion(k), partite_expansion(m)}) {
    auto bc = complex_of_boxes(fam, Labeling::Partite);
    o.require(bc.f_vector() == std::vector<int>{6, 7, 2}, "f-vector");
    auto chk = verify_cellular_resolution(bc, both());
    o.require(chk.is_resolution && chk.is_minimal, "minimal cellular resolution");
    o.require(oracle_betti(partite_ideal(fam), Q, 14) == want, "partite ideal oracle");
  }
  o.require(oracle_betti(family_ideal(k), Q, 14) == want, "I(K) oracle");
  o.require(oracle_betti(family_ideal(m), Q, 14) == want, "I(M) oracle");
  o.require(hypergraph_betti_formula(k) == want, "formula on K");
  o.require(hypergraph_betti_formula(m) == want, "formula on M");
  o.require(colex_closed_form(6, 3) == want, "colex closed form");
  o.note << "betti " << vec(want) << " by oracle, formula and closed form";
}

void stable_negative(Outcome& o) {
  UniformFamily bad(2, FamilyKind::Sets, {{1, 2}, {1, 3}, {2, 3}, {2, 4}});
  auto pd = oracle_table(family_ideal(bad), Q, 12).projective_dimension();
  o.require(pd == 2, "projective dimension");
  auto bc = complex_of_boxes(partite_expansion(bad), Labeling::Specialized);
  auto chk = verify_cellular_resolution(bc, both());
  o.require(!chk.is_resolution, "naive complex rejected");
  o.require(chk.failing_multidegree.has_value(), "failing multidegree reported");
  if (chk.failing_multidegree) {
    auto name = monomial_string(*chk.failing_multidegree, bc.variables);
    o.require(name == "x1x2x4", "failure at x1x2x4");
    o.require(std::find(chk.failing_degrees.begin(), chk.failing_degrees.end(), 0) != chk.failing_degrees.end(),
              "subcomplex disconnected");
    o.note << "fails at " << name;
  }
}

// Bipartite restriction with its empty rows removed and minimum row size k.
Diagram crux_instance(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> coin(0, 2);
  for (;;) {
    auto sample = oracle::random_restriction(rng, 12, true);
    const auto shape = build_shifted_skew(sample.lambda, sample.mu);
    std::vector<int> ys;
    for (int v = 1; v <= shape.max_label(); ++v)
      if (coin(rng)) ys.push_back(v);
    auto d = restrict(shape, sample.xs, ys);
    std::vector<int> xs;
    for (int x : d.rows) {
      bool any = false;
      for (const Cell& c : d.cells) any = any || c.row == x;
      if (any) xs.push_back(x);
    }
    if (xs.empty() || xs.size() + ys.size() > 14) continue;
    auto r = d.restrict_to(xs, d.cols);
    if (minimum_row_size(r) == k) return r;
  }
}

bool homotopy_consistent(const Diagram& d, const RectDecomposition& r) {
  auto g = d.bipartite_graph().as_simple();
  auto h = reduced_homology(independence_complex(g), {2});
  for (const Field& f : both()) {
    auto support = h.support(f);
    if (!r.spherical) {
      if (!support.empty()) return false;
    } else if (support != std::vector<int>{r.rectangularity - 1} || h.rank(r.rectangularity - 1, f) != 1) {
      return false;
    }
  }
  return true;
}

void closed_form(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  int brute = 0, spherical = 0;
  HochsterOptions opt;
  opt.fields = both();
  std::vector<Diagram> extra;
  std::mt19937_64 crux_rng(kSeed + 4);
  while (extra.size() < 50) {
    auto d = crux_instance(crux_rng, 1 + static_cast<int>(extra.size()) % 3);
    auto subs = spherical_column_subsets(d, 1);
    if (subs.empty()) continue;
    auto sub = d.restrict_to(d.rows, subs.front());
    if (sub.rows.size() + sub.cols.size() <= 12) extra.push_back(sub);
  }
  const int total = kClosedFormInstances + static_cast<int>(extra.size());
  for (int t = 0; t < total; ++t) {
    auto d = t < kClosedFormInstances ? oracle::random_restriction(rng, 12, true).diagram()
                                      : extra[t - kClosedFormInstances];
    auto closed = betti_bipartite_closed(d);
    auto g = d.bipartite_graph().as_simple();
    auto tables = hochster_betti_tables(g.edge_supports(), g.names, opt);
    for (const auto& tb : tables) o.require(tb.same_entries(closed), "closed form vs Hochster");
    if (g.vertex_count() <= 9) {
      ++brute;
      o.require(closed.entries == oracle::fine_betti(g.vertex_count(), g.edge_supports(), 0), "brute force Q");
      o.require(closed.entries == oracle::fine_betti(g.vertex_count(), g.edge_supports(), 2), "brute force F2");
    }
    auto r = rectangular_decomposition(d);
    if (r.spherical) ++spherical;
    o.require(homotopy_consistent(d, r), "homotopy type");
  }
  o.note << kClosedFormInstances << " random and " << extra.size() << " sphere-seeking instances, " << brute << " also by brute force, " << spherical
         << " spherical";
}

std::map<std::pair<int, int>, std::int64_t> graded(const oracle::FineTable& t) {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [k, v] : t) out[{k.first, popcount(k.second)}] += v;
  return out;
}

void specialization(Outcome& o) {
  std::mt19937_64 rng(kSeed + 1);
  int count = 0;
  while (count < kSpecializationInstances) {
    auto sample = oracle::random_restriction(rng, 6, false);
    if (sample.xs.empty()) continue;
    auto nonbip = sample.diagram();
    auto bip = nonbip.bipartite_view();
    const int n = static_cast<int>(nonbip.rows.size());
    auto gb = bip.bipartite_graph().as_simple();
    auto gn = nonbip.simple_graph();
    for (int p : {0, 2})
      o.require(graded(oracle::fine_betti(gb.vertex_count(), gb.edge_supports(), p)) ==
                    graded(oracle::fine_betti(gn.vertex_count(), gn.edge_supports(), p)),
                "graded Betti numbers agree");
    auto bt = betti_bipartite_closed(bip, false);
    auto direct = betti_nonbipartite(nonbip, NonbipMode::Direct);
    o.require(specialize_table(bt, n, direct.vertex_names).entries == direct.entries, "fine specialization sum");
    o.require(overlapping_entries(bt, n).empty(), "overlapping supports vanish");
    ++count;
  }
  o.note << count << " instances";
}

void invariants(Outcome& o) {
  std::mt19937_64 rng(kSeed + 2);
  int restrictions = 0;
  for (int t = 0; t < 150; ++t) {
    auto d = oracle::random_restriction(rng, 12, t % 2 == 0).diagram();
    auto rp = regularity_and_pd(d);
    auto g = d.shifted ? d.simple_graph() : d.bipartite_graph().as_simple();
    auto tb = hochster_betti_table(g.edge_supports(), g.names);
    o.require(rp.regularity == tb.regularity(), "regularity");
    o.require(rp.projective_dimension == tb.projective_dimension(), "projective dimension");
    if (!d.shifted && tb.regularity())
      o.require(*tb.regularity() == rectangular_decomposition(d).rectangularity + 1, "regularity = rect + 1");
    ++restrictions;
  }
  int graphs = 0;
  auto check_krull = [&](const BipartiteGraph& g) {
    auto s = g.as_simple();
    auto k = krull_dimension(g);
    o.require(k.alpha == oracle::independence_number(s), "Krull dimension");
    o.require(k.nu == oracle::max_matching(s) && k.rho == oracle::min_vertex_cover(s), "matching and cover");
    o.require(k.nu == k.rho, "Konig");
    o.require(k.alpha + k.rho == k.vertices, "Gallai");
    if (!g.has_isolated_vertex()) o.require(k.tau == oracle::min_edge_cover(s) && k.tau == k.alpha, "edge cover");
    ++graphs;
  };
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& g : enumerate_bipartite(m, n)) check_krull(g);
  for (int t = 0; t < 100; ++t) check_krull(oracle::random_bipartite(rng, 6, 6));
  o.note << restrictions << " restrictions, " << graphs << " graphs";
}

void ferrers_rook(Outcome& o) {
  FerrersShape s({4, 4, 2});
  auto r = ferrers_betti(s);
  o.require(r.alpha == std::vector<std::int64_t>{1, 2, 3, 3, 1}, "alpha profile");
  o.require(r.coarse == std::vector<std::int64_t>{10, 21, 18, 7, 1}, "coarse Betti");
  o.require(r.routes_agree, "routes agree");
  for (const auto& route : r.routes) o.require(route == r.coarse, "each route");
  auto g = ferrers_diagram(s).bipartite_graph().as_simple();
  o.require(oracle_totals(g, 0) == r.coarse, "oracle");
  auto pair = rook_tools(s, FerrersShape({4, 3, 3}), 3);
  o.require(pair.rook_equal && pair.counts_a == pair.counts_b, "rook counts");
  o.require(pair.alpha_equal && pair.betti_equal, "alpha and Betti equal");
  auto g2 = ferrers_diagram(FerrersShape({4, 3, 3})).bipartite_graph().as_simple();
  o.require(oracle_totals(g2, 0) == r.coarse, "oracle on 433");
  o.require(oracle::rook_numbers(ferrers_diagram(s).cells, 3) ==
                oracle::rook_numbers(ferrers_diagram(FerrersShape({4, 3, 3})).cells, 3),
            "brute-force rook counts");
  o.note << "beta " << vec(r.coarse) << ", rook counts " << vec(pair.counts_a);
}

std::vector<BipartiteGraph> scan_graphs() {
  std::vector<BipartiteGraph> out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (auto& g : enumerate_bipartite(m, n, {true, false, false})) out.push_back(g);
  return out;
}

void conjecture_scan(Outcome& o) {
  int count = 0, lower_bad = 0;
  for (const auto& g : scan_graphs()) {
    auto rep = check_bipartite_conjecture(g, both());
    o.require(rep.upper == Verdict::Holds, "upper bound");
    o.require(rep.fields_agree, "fields agree");
    o.require(rep.upper_tight_all == rep.classes.horizontal_vertical, "upper equality iff horizontal-vertical");
    o.require(rep.lower_tight_all == rep.classes.nearly_row_nested, "lower equality iff nearly-row-nested");
    o.require(classify_bipartite(g, ClassifyMethod::Definition)
                  .same_flags(classify_bipartite(g, ClassifyMethod::Forbidden)),
              "classification methods agree");
    if (rep.lower != Verdict::Holds) ++lower_bad;
    ++count;
  }
  o.note << count << " classes, lower bound violations " << lower_bad;
}

void reduction_identities(Outcome& o) {
  int applicable = 0, checks = 0;
  for (const auto& g : scan_graphs()) {
    auto r = reductions(g);
    if (!r.applicable()) continue;
    ++applicable;
    checks += r.full_column_checks + r.nested_row_checks;
    o.require(r.ok(), r.failures.empty() ? "reduction" : r.failures.front());
  }
  o.require(applicable > 0, "some graph applicable");
  o.note << applicable << " graphs, " << checks << " identities";
}

void crux(Outcome& o) {
  std::mt19937_64 rng(kSeed + 3);
  int pairs = 0;
  std::map<int, int> by_k;
  for (int t = 0; t < kCruxInstances; ++t) {
    auto d = crux_instance(rng, 1 + t % 4);
    const int k = minimum_row_size(d);
    ++by_k[k];
    for (int j = 1; j <= k; ++j) {
      auto subs = spherical_column_subsets(d, j);
      o.require(static_cast<std::int64_t>(subs.size()) >= binomial(k, j), "at least C(k,j) subsets");
      for (const auto& y : subs) {
        auto sub = d.restrict_to(d.rows, y);
        auto r = rectangular_decomposition(sub);
        auto h = oracle::homotopy_shape(sub.bipartite_graph().as_simple());
        const int want = static_cast<int>(y.size()) - j + 1;
        o.require(r.spherical && r.rectangularity == want, "decomposition re-check");
        o.require(h.single_sphere && h.sphere_dim == want - 1, "homology re-check");
      }
      ++pairs;
    }
  }
  o.note << kCruxInstances << " diagrams, " << pairs << " (diagram, j) pairs; k counts";
  for (auto [k, c] : by_k) o.note << " " << k << ":" << c;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "six-cycle and specialized Betti tables", kSixCycleLimit, six_cycle},
      {2, "five-cycle colex counterexample", 0, five_cycle},
      {3, "box complexes of the running family", 0, running_family},
      {4, "naive box complex of a non-stable ideal", 0, stable_negative},
      {5, "closed form equals Hochster on random restrictions", kClosedFormLimit, closed_form},
      {6, "specialization identities", 0, specialization},
      {7, "regularity, projective dimension and Krull dimension", 0, invariants},
      {8, "Ferrers shape 442 and rook equivalence", 0, ferrers_rook},
      {9, "bound conjecture scan for |X|,|Y| <= 3", kScanLimit, conjecture_scan},
      {10, "full-column and nested-row reductions", 0, reduction_identities},
      {11, "spherical column subsets", 0, crux},
  };
  int failed = 0;
  std::cout << "seed " << kSeed << "\n";
  for (const auto& c : criteria) {
    Outcome o;
    auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) o.require(false, "time limit exceeded");
    if (!o.pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  [" << timing;
    if (c.limit > 0) std::cout << " / limit " << c.limit << "s";
    std::cout << "]  " << o.note.str() << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
