#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewres/bounds.hpp"
#include "skewres/errors.hpp"

using namespace skewres;

namespace {
BipartiteGraph rows_graph(const std::vector<std::vector<int>>& rows, int n) {
  return BipartiteGraph::from_rows(rows, n);
}

// Edge sets of size i+1 whose X-support is exactly xs.
std::int64_t brute_upper(const BipartiteGraph& g, int i, Mask xs) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < g.m(); ++a)
    for (int b = 0; b < g.n(); ++b)
      if (g.has_edge(a, b)) edges.push_back({a, b});
  std::int64_t count = 0;
  const int e = static_cast<int>(edges.size());
  for (Mask s = 0; s < bit(e); ++s) {
    if (popcount(s) != i + 1) continue;
    Mask support = 0;
    for (int k : bits_of(s)) support |= bit(edges[k].first);
    if (support == xs) ++count;
  }
  return count;
}

std::vector<BipartiteGraph> scan_graphs() {
  std::vector<BipartiteGraph> out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (auto& g : enumerate_bipartite(m, n, {true, false, false})) out.push_back(g);
  return out;
}
}  // namespace

TEST_CASE("class examples") {
  auto two_k2 = classify_bipartite(rows_graph({{0}, {1}}, 2), ClassifyMethod::Forbidden);
  CHECK_FALSE(two_k2.row_nested);
  REQUIRE(two_k2.row_nested_witness.has_value());
  CHECK(two_k2.row_nested_witness->xs.size() == 2);
  CHECK(two_k2.row_nested_witness->ys.size() == 2);
  CHECK(two_k2.nearly_row_nested);
  CHECK(two_k2.horizontal);
  CHECK(two_k2.horizontal_vertical);

  auto c6 = classify_bipartite(rows_graph({{1, 2}, {0, 2}, {0, 1}}, 3), ClassifyMethod::Forbidden);
  CHECK_FALSE(c6.nearly_row_nested);
  REQUIRE(c6.nearly_row_nested_witness.has_value());
  CHECK(c6.nearly_row_nested_witness->pattern == "6-cycle");
  CHECK(c6.nearly_row_nested_witness->xs.size() == 3);

  auto star = classify_bipartite(rows_graph({{0}, {0}}, 1), ClassifyMethod::Definition);
  CHECK(star.row_nested);
  CHECK_FALSE(star.horizontal);
  CHECK(star.horizontal_vertical);

  auto p4 = classify_bipartite(rows_graph({{0, 1}, {1}}, 2), ClassifyMethod::Definition);
  CHECK(p4.row_nested);
  CHECK_FALSE(p4.horizontal_vertical);

  auto split = classify_bipartite(rows_graph({{0, 1}, {2, 3}}, 4), ClassifyMethod::Definition);
  CHECK_FALSE(split.nearly_row_nested);
  CHECK(split.horizontal);
}

TEST_CASE("definition and forbidden patterns agree") {
  int graphs = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& g : enumerate_bipartite(m, n)) {
        auto a = classify_bipartite(g, ClassifyMethod::Definition);
        auto b = classify_bipartite(g, ClassifyMethod::Forbidden);
        CHECK(a.same_flags(b));
        CHECK((!a.row_nested || a.nearly_row_nested));
        CHECK((!a.horizontal || a.horizontal_vertical));
        ++graphs;
      }
  CHECK(graphs > 100);
}

TEST_CASE("isomorphism class counts") {
  const std::vector<std::tuple<int, int, int>> frozen{{1, 1, 2}, {1, 2, 3}, {2, 2, 7}, {2, 3, 13}, {3, 3, 36}};
  for (auto [m, n, want] : frozen) {
    CHECK(oracle::count_classes(m, n, false) == want);
    CHECK(static_cast<int>(enumerate_bipartite(m, n).size()) == want);
  }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(static_cast<int>(enumerate_bipartite(m, n, {true, false, false}).size()) ==
            oracle::count_classes(m, n, true));
  CHECK_THROWS_AS(enumerate_bipartite(5, 5), OracleLimitError);
}

TEST_CASE("enumeration filters") {
  for (const auto& g : enumerate_bipartite(3, 3, {true, true, true})) {
    CHECK_FALSE(g.has_isolated_vertex());
    CHECK(is_connected(g));
  }
  CHECK_FALSE(is_connected(rows_graph({{0}, {1}}, 2)));
}

TEST_CASE("canonical code is a class invariant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_bipartite(rng, 3, 4);
    std::vector<int> rp{0, 1, 2}, cp{0, 1, 2, 3};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::vector<Mask> rows(3, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 4; ++b)
        if (g.has_edge(rp[a], cp[b])) rows[a] |= bit(b);
    CHECK(canonical_code(g) == canonical_code(BipartiteGraph(g.x_labels, g.y_labels, rows)));
  }
}

TEST_CASE("bound values") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_bipartite(rng, 3, 3);
    auto deg = g.x_degrees();
    for (Mask xs = 0; xs < bit(3); ++xs)
      for (int i = 0; i < 6; ++i) {
        CHECK(upper_bound_value(g, i, xs) == brute_upper(g, i, xs));
        std::int64_t d = 0;
        for (int a : bits_of(xs)) d += deg[a];
        CHECK(upper_bound_cumulative(g, i, xs) == binomial(d, i + 1));
        std::int64_t low = 0;
        if (xs != 0 && popcount(xs) < i + 2) {
          int k = 99;
          for (int a : bits_of(xs)) k = std::min(k, deg[a]);
          low = binomial(k, i - popcount(xs) + 2);
        }
        CHECK(lower_bound_value(g, i, xs) == low);
      }
  }
}

TEST_CASE("x-partial Betti numbers") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_bipartite(rng, 3, 3);
    auto s = g.as_simple();
    auto table = hochster_betti_table(s.edge_supports(), s.names);
    auto fine = oracle::fine_betti(s.vertex_count(), s.edge_supports(), 0);
    auto part = x_partial_table(g, table);
    for (int i = 0; i < static_cast<int>(part.size()); ++i)
      for (Mask xs = 0; xs < bit(3); ++xs) {
        std::int64_t want = 0;
        for (const auto& [k, v] : fine)
          if (k.first == i && (k.second & g.x_part()) == g.embed_x(xs)) want += v;
        CHECK(part[i][xs] == want);
      }
  }
}

TEST_CASE("models attain the bounds") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_bipartite(rng, 3, 3);
    if (g.has_isolated_x()) continue;
    auto models = bipartite_models(g);
    CHECK(models.row_nested.x_degrees() == g.x_degrees());
    CHECK(models.horizontal.x_degrees() == g.x_degrees());
    CHECK(classify_bipartite(models.row_nested, ClassifyMethod::Definition).row_nested);
    CHECK(classify_bipartite(models.horizontal, ClassifyMethod::Definition).horizontal);
    if (models.horizontal.n() + g.m() <= 12) CHECK(check_bipartite_conjecture(models.horizontal).upper_tight_all);
    CHECK(check_bipartite_conjecture(models.row_nested).lower_tight_all);
  }
}

TEST_CASE("conjecture scan on small graphs") {
  int lower_violations = 0, instances = 0;
  for (const auto& g : scan_graphs()) {
    auto rep = check_bipartite_conjecture(g);
    ++instances;
    CHECK(rep.upper == Verdict::Holds);
    CHECK(rep.upper_cumulative_holds);
    CHECK(rep.fields_agree);
    CHECK(rep.lower_prediction_ok);
    CHECK(rep.upper_prediction_ok);
    CHECK(rep.upper_tight_all == rep.classes.horizontal_vertical);
    CHECK(rep.lower_tight_all == rep.classes.nearly_row_nested);
    if (rep.lower != Verdict::Holds) ++lower_violations;
  }
  MESSAGE("instances " << instances << ", lower bound violations " << lower_violations);
  CHECK(instances > 40);
}

TEST_CASE("six-cycle lower bound entry") {
  auto g = rows_graph({{1, 2}, {0, 2}, {0, 1}}, 3);
  auto rep = check_bipartite_conjecture(g);
  bool seen = false;
  for (const auto& e : rep.entries)
    if (e.i == 3 && e.xprime == 0b111) {
      seen = true;
      CHECK(e.lower == 1);
      CHECK(e.values == std::vector<std::int64_t>{2, 2});
    }
  CHECK(seen);
  CHECK_FALSE(rep.lower_tight_all);
}

TEST_CASE("reduction identities") {
  int applicable = 0;
  for (const auto& g : scan_graphs()) {
    auto r = reductions(g);
    CHECK(r.ok());
    if (r.applicable()) ++applicable;
  }
  CHECK(applicable > 20);
}

TEST_CASE("colex lower bound checks") {
  UniformFamily five(2, FamilyKind::Sets, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  auto c = check_colex_lower_bound(five);
  CHECK(c.verdict == Verdict::Violated);
  CHECK(c.bound == std::vector<std::int64_t>{5, 6, 2});
  REQUIRE(c.betti.size() == 2);
  CHECK(c.betti[0] == std::vector<std::int64_t>{5, 5, 1});
  CHECK(c.betti[1] == std::vector<std::int64_t>{5, 5, 1});
  CHECK(c.violations == std::vector<int>{1, 2});

  UniformFamily running(3, FamilyKind::Sets, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}});
  auto ok = check_colex_lower_bound(running);
  CHECK(ok.verdict == Verdict::Holds);
  CHECK(ok.violations.empty());

  auto big = colexsegment(91, 2);
  CHECK(check_colex_lower_bound(big).verdict == Verdict::OracleTooLarge);
  CHECK_THROWS_AS(check_colex_lower_bound(depolarize(running)), PreconditionError);
  CHECK(to_string(Verdict::Violated) == "violated");
}
