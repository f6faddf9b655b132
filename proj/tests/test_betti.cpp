#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewres/betti.hpp"
#include "skewres/errors.hpp"
#include "skewres/graph.hpp"

using namespace skewres;

namespace {
SimpleGraph random_graph(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) == 0) edges.push_back({u, v});
  if (edges.empty() && n >= 2) edges.push_back({0, 1});
  return SimpleGraph(names, edges);
}

BettiTable six_cycle_table(Field f) {
  auto g = BipartiteGraph::from_rows({{1, 2}, {0, 2}, {0, 1}}, 3).as_simple();
  return hochster_betti_table(g.edge_supports(), g.names, f);
}
}  // namespace

TEST_CASE("6-cycle Betti table") {
  for (Field f : {Field{0}, Field{2}}) {
    auto t = six_cycle_table(f);
    CHECK(t.totals() == std::vector<std::int64_t>{6, 9, 6, 2});
    CHECK(t.strand(2) == std::vector<std::int64_t>{6, 6, 0, 0});
    CHECK(t.strand(3) == std::vector<std::int64_t>{0, 3, 6, 2});
    CHECK(t.projective_dimension() == 3);
    CHECK(t.regularity() == 3);
  }
}

TEST_CASE("Hochster tables match the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = random_graph(rng, 2 + trial % 7);
    for (int p : {0, 2}) {
      auto t = hochster_betti_table(g.edge_supports(), g.names, Field{p});
      CHECK(t.entries == oracle::fine_betti(g.vertex_count(), g.edge_supports(), p));
    }
  }
}

TEST_CASE("parallel evaluation merges to the sequential table") {
  std::mt19937_64 rng(99);
  auto g = random_graph(rng, 10);
  HochsterOptions seq;
  HochsterOptions par;
  par.width = 4;
  auto a = hochster_betti_tables(g.edge_supports(), g.names, seq);
  auto b = hochster_betti_tables(g.edge_supports(), g.names, par);
  REQUIRE(a.size() == 2);
  CHECK(a[0].entries == b[0].entries);
  CHECK(a[1].entries == b[1].entries);
}

TEST_CASE("restricting to a fixed part sums to the partial Betti numbers") {
  auto bg = BipartiteGraph::from_rows({{0, 1}, {1, 2}, {0, 2, 3}}, 4);
  auto g = bg.as_simple();
  auto full = hochster_betti_table(g.edge_supports(), g.names);
  for (Mask xs = 0; xs < 8; ++xs) {
    HochsterOptions opt;
    opt.fields = {Field{0}};
    opt.fixed_part = std::make_pair(bg.x_part(), xs);
    auto part = hochster_betti_tables(g.edge_supports(), g.names, opt)[0];
    for (int i = 0; i < 7; ++i) CHECK(part.partial(i, bg.x_part(), xs) == full.partial(i, bg.x_part(), xs));
  }
}

TEST_CASE("K-polynomial from the Betti table equals the lcm expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 3 + trial % 5);
    auto t = hochster_betti_table(g.edge_supports(), g.names);
    CHECK(betti_k_polynomial(t) == taylor_k_polynomial(g.edge_supports()));
  }
}

TEST_CASE("non-minimal generators are rejected") {
  CHECK_THROWS_AS(hochster_betti_table({0b011, 0b111}, {"a", "b", "c"}), PreconditionError);
}

TEST_CASE("oracle size guard") {
  std::vector<std::string> names;
  std::vector<Mask> supports;
  for (int i = 0; i < 14; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < 14; ++i) supports.push_back(bit(i) | bit(i + 1));
  CHECK_THROWS_AS(hochster_betti_table(supports, names, Field{0}, 12), OracleLimitError);
}

TEST_CASE("Taylor analysis") {
  // path with three edges x1x2, x2x3, x3x4
  auto path = taylor_analysis({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  CHECK_FALSE(path.minimal);
  REQUIRE(path.witness);
  CHECK(path.upper_bounds == std::vector<std::int64_t>{3, 3, 1});
  // star: every edge has a private vertex
  auto star = taylor_analysis({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}});
  CHECK(star.minimal);
}

TEST_CASE("polarization") {
  auto p = polarize({{2, 1}, {0, 3}}, {"x", "y"});
  // x^2 y and y^3 need x_1 x_2 y_1 y_2 y_3
  CHECK(p.names.size() == 5);
  CHECK(p.supports.size() == 2);
  CHECK(p.depolarize(p.supports[0], 2) == Exponents{2, 1});
  CHECK(p.depolarize(p.supports[1], 2) == Exponents{0, 3});
  auto t = hochster_betti_table(p.supports, p.names);
  CHECK(t.totals() == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("minimalize drops multiples") {
  auto m = minimalize({{1, 1}, {2, 1}, {1, 1}, {0, 2}});
  CHECK(m == std::vector<Exponents>{{0, 2}, {1, 1}});
}

TEST_CASE("table accessors") {
  auto t = six_cycle_table(Field{0});
  auto graded = t.graded();
  CHECK(graded[{0, 2}] == 6);
  CHECK(graded[{2, 5}] == 6);
  CHECK(t.at(3, low_mask(6)) == 2);
  CHECK(BettiTable{}.projective_dimension() == std::nullopt);
  CHECK(BettiTable{}.regularity() == std::nullopt);
}
