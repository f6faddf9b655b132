#include <queue>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "skewres/errors.hpp"
#include "skewres/hypergraph.hpp"
#include "skewres/io.hpp"

using namespace skewres;

namespace {
std::vector<std::string> generator_names(const MonomialIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators) {
    std::string s;
    for (std::size_t k = 0; k < g.size(); ++k)
      for (int e = 0; e < g[k]; ++e) s += I.names[k];
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Tuple> kRunning{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}};
}  // namespace

TEST_CASE("colex order and Gale comparisons") {
  CHECK(colex_less({1, 2, 4}, {1, 3, 4}));
  CHECK(colex_less({2, 3, 4}, {1, 2, 5}));
  CHECK_FALSE(colex_less({1, 2, 5}, {2, 3, 4}));
  CHECK(gale_leq({1, 3}, {2, 3}));
  CHECK_FALSE(gale_leq({1, 4}, {2, 3}));
  auto g = gale_compare({1, 4}, {2, 3}, FamilyKind::Sets);
  CHECK_FALSE(g.leq);
  CHECK(g.meet == Tuple{1, 3});
  CHECK(g.join == Tuple{2, 4});
  CHECK(valid_tuple({1, 1, 2}, 3, FamilyKind::Multisets));
  CHECK_FALSE(valid_tuple({1, 1, 2}, 3, FamilyKind::Sets));
  CHECK_THROWS_AS(gale_compare({1}, {1, 2}, FamilyKind::Sets), PreconditionError);
}

TEST_CASE("colexsegment matches the first g sets in colex order") {
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 20; ++g) CHECK(colexsegment(g, d).members == oracle::colex_first(g, d));
  CHECK(colexsegment(6, 3).members == kRunning);
}

TEST_CASE("colex closed form") {
  CHECK(colex_closed_form(5, 2) == std::vector<std::int64_t>{5, 6, 2});
  CHECK(colex_closed_form(6, 3) == std::vector<std::int64_t>{6, 7, 2});
  for (int d = 2; d <= 3; ++d)
    for (int g = 1; g <= 12; ++g) {
      auto f = colexsegment(g, d);
      if (f.max_entry() > 10) continue;
      CHECK(colex_closed_form(g, d) == oracle_betti(family_ideal(f), Field{0}, 12));
      CHECK(colex_closed_form(g, d) == hypergraph_betti_formula(f));
    }
  CHECK_THROWS_AS(colex_closed_form(-1, 2), PreconditionError);
}

TEST_CASE("strong stability") {
  UniformFamily k(3, FamilyKind::Sets, kRunning);
  CHECK(stability_check(k).strongly_stable);
  UniformFamily bad(2, FamilyKind::Sets, {{1, 2}, {1, 3}, {2, 3}, {2, 4}});
  auto st = stability_check(bad);
  CHECK_FALSE(st.strongly_stable);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->first == Tuple{2, 4});
  CHECK(st.witness->second == Tuple{1, 4});

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Tuple> sets;
    for (const auto& t : oracle::colex_first(10, 2))
      if (coin(rng)) sets.push_back(t);
    if (sets.empty()) continue;
    CHECK(stability_check(UniformFamily(2, FamilyKind::Sets, sets)).strongly_stable ==
          oracle::strongly_stable(sets));
  }
}

TEST_CASE("depolarization and partite expansion of the running family") {
  UniformFamily k(3, FamilyKind::Sets, kRunning);
  auto m = depolarize(k);
  CHECK(m.kind == FamilyKind::Multisets);
  CHECK(m.members == UniformFamily(3, FamilyKind::Multisets,
                                   {{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 3}, {1, 2, 3}})
                         .members);
  CHECK(polarize(m).members == k.members);
  CHECK(generator_names(partite_ideal(partite_expansion(k))) ==
        std::vector<std::string>{"a1b2c3", "a1b2c4", "a1b2c5", "a1b3c4", "a1b3c5", "a2b3c4"});
  CHECK(generator_names(partite_ideal(partite_expansion(m))) ==
        std::vector<std::string>{"a1b1c1", "a1b1c2", "a1b1c3", "a1b2c2", "a1b2c3", "a2b2c2"});
  CHECK_FALSE(ferrers_check(partite_expansion(k)).is_ferrers);
  CHECK(hypergraph_betti_formula(k) == std::vector<std::int64_t>{6, 7, 2});
  CHECK(hypergraph_betti_formula(m) == std::vector<std::int64_t>{6, 7, 2});
  CHECK(oracle_betti(partite_ideal(partite_expansion(k)), Field{0}, 14) == std::vector<std::int64_t>{6, 7, 2});
  CHECK(oracle_betti(partite_ideal(partite_expansion(m)), Field{0}, 14) == std::vector<std::int64_t>{6, 7, 2});
  CHECK_THROWS_AS(depolarize(m), PreconditionError);
  CHECK_THROWS_AS(polarize(k), PreconditionError);
}

TEST_CASE("Betti formula matches the oracle on random strongly stable families") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    auto sets = oracle::random_stable_sets(rng, d, d + 4, 1 + trial % 3);
    UniformFamily k(d, FamilyKind::Sets, sets);
    REQUIRE(stability_check(k).strongly_stable);
    auto want_formula = hypergraph_betti_formula(k);
    if (k.max_entry() <= 9) {
      CHECK(want_formula == oracle_betti(family_ideal(k), Field{0}, 12));
      ++checked;
    }
    auto m = depolarize(k);
    CHECK(hypergraph_betti_formula(m) == want_formula);
    auto fk = partite_expansion(k);
    int vars = 0;
    for (int s : fk.part_sizes()) vars += s;
    if (vars <= 11) CHECK(oracle_betti(partite_ideal(fk), Field{2}, 12) == want_formula);
  }
  CHECK(checked >= 20);
}

TEST_CASE("non-stable families are rejected by the formula") {
  UniformFamily bad(2, FamilyKind::Sets, {{1, 2}, {1, 3}, {2, 3}, {2, 4}});
  CHECK_THROWS_AS(hypergraph_betti_formula(bad), PreconditionError);
  PartiteFamily holes(2, {{1, 2}, {2, 2}});
  CHECK_FALSE(ferrers_check(holes).is_ferrers);
  CHECK_THROWS_AS(ferrers_hypergraph_betti(holes), PreconditionError);
}

TEST_CASE("Ferrers hypergraphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    auto f = oracle::random_order_ideal(rng, d, d == 2 ? 4 : 3);
    REQUIRE(ferrers_check(f).is_ferrers);
    int vars = 0;
    for (int s : f.part_sizes()) vars += s;
    if (vars <= 12) CHECK(ferrers_hypergraph_betti(f) == oracle_betti(partite_ideal(f), Field{0}, 12));
    auto sp = ferrers_skew_pair(f);
    CHECK(sp.K_stable);
    CHECK(sp.K_prime_stable);
    CHECK(sp.isomorphic);
    CHECK(sp.difference.members.size() == f.members.size());
  }
}

TEST_CASE("max profile") {
  UniformFamily k(3, FamilyKind::Sets, kRunning);
  auto p = max_profile(k);
  REQUIRE(p.size() >= 6);
  CHECK(p[3] == 1);
  CHECK(p[4] == 3);
  CHECK(p[5] == 2);
}

TEST_CASE("family validation and parsing") {
  CHECK_THROWS_AS(UniformFamily(2, FamilyKind::Sets, {{2, 1}}), PreconditionError);
  CHECK_THROWS_AS(UniformFamily(2, FamilyKind::Sets, {{1, 2, 3}}), PreconditionError);
  CHECK_THROWS_AS(UniformFamily(0, FamilyKind::Sets, {}), PreconditionError);
  CHECK_THROWS_AS(PartiteFamily(2, {{0, 1}}), PreconditionError);
  CHECK_THROWS(family_from_json(parse_json_text(R"({"d":2,"kind":"bags","members":[[1,2]]})")));
  CHECK_THROWS_AS(parse_json_text("{\"d\":"), ParseError);
  auto f = family_from_json(parse_json_text(R"({"family":{"d":2,"kind":"sets","members":[[2,3],[1,2]]}})"));
  CHECK(f.members == std::vector<Tuple>{{1, 2}, {2, 3}});
}
