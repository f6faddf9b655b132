#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewres/box_complex.hpp"
#include "skewres/errors.hpp"

using namespace skewres;

namespace {
const std::vector<Tuple> kRunning{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}};

int variable_count(const PartiteFamily& f) {
  int v = 0;
  for (int s : f.part_sizes()) v += s;
  return v;
}
}  // namespace

TEST_CASE("boxes of the running family and its depolarization") {
  UniformFamily k(3, FamilyKind::Sets, kRunning);
  for (const auto& fam : {partite_expansion(k), partite_expansion(depolarize(k))}) {
    auto bc = complex_of_boxes(fam, Labeling::Partite);
    CHECK(bc.f_vector() == std::vector<int>{6, 7, 2});
    CHECK(bc.max_dim() == 2);
    CHECK(bc.boundary_squares_to_zero());
    auto chk = verify_cellular_resolution(bc);
    CHECK(chk.is_resolution);
    CHECK(chk.is_minimal);
    CHECK_FALSE(chk.failing_multidegree.has_value());
    CHECK(chk.multidegrees_checked > 0);
    CHECK(box_betti_numbers(bc) == std::vector<std::int64_t>{6, 7, 2});
  }
}

TEST_CASE("specialized labeling resolves I(K) and I(M)") {
  UniformFamily k(3, FamilyKind::Sets, kRunning);
  for (const auto& fam : {partite_expansion(k), partite_expansion(depolarize(k))}) {
    auto bc = complex_of_boxes(fam, Labeling::Specialized);
    CHECK(bc.variables.size() == static_cast<std::size_t>(fam.part_sizes().back()));
    auto chk = verify_cellular_resolution(bc);
    CHECK(chk.is_resolution);
    CHECK(chk.is_minimal);
  }
}

TEST_CASE("naive box complex of a non-stable ideal is not a resolution") {
  UniformFamily bad(2, FamilyKind::Sets, {{1, 2}, {1, 3}, {2, 3}, {2, 4}});
  auto bc = complex_of_boxes(partite_expansion(bad), Labeling::Specialized);
  auto chk = verify_cellular_resolution(bc);
  CHECK_FALSE(chk.is_resolution);
  REQUIRE(chk.failing_multidegree.has_value());
  CHECK(monomial_string(*chk.failing_multidegree, bc.variables) == "x1x2x4");
  CHECK(std::find(chk.failing_degrees.begin(), chk.failing_degrees.end(), 0) != chk.failing_degrees.end());
  auto pd = oracle_table(family_ideal(bad), Field{0}, 12).projective_dimension();
  REQUIRE(pd.has_value());
  CHECK(*pd == 2);
  CHECK(bc.max_dim() == 1);
}

TEST_CASE("box complexes of Ferrers hypergraphs are minimal resolutions") {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    auto f = oracle::random_order_ideal(rng, d, d == 2 ? 4 : 3);
    auto bc = complex_of_boxes(f, Labeling::Partite);
    CHECK(bc.boundary_squares_to_zero());
    auto chk = verify_cellular_resolution(bc, {Field{0}});
    CHECK(chk.is_resolution);
    CHECK(chk.is_minimal);
    auto betti = box_betti_numbers(bc);
    CHECK(betti == ferrers_hypergraph_betti(f));
    if (variable_count(f) <= 11) {
      CHECK(betti == oracle_betti(partite_ideal(f), Field{0}, 12));
      ++compared;
    }
  }
  CHECK(compared >= 20);
}

TEST_CASE("specialized boxes of random strongly stable families") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + trial % 2;
    UniformFamily k(d, FamilyKind::Sets, oracle::random_stable_sets(rng, d, d + 3, 2));
    auto bc = complex_of_boxes(partite_expansion(k), Labeling::Specialized);
    auto chk = verify_cellular_resolution(bc, {Field{0}});
    CHECK(chk.is_resolution);
    CHECK(chk.is_minimal);
    CHECK(box_betti_numbers(bc) == hypergraph_betti_formula(k));
  }
}

TEST_CASE("chain complex needs a face-closed subset") {
  UniformFamily k(3, FamilyKind::Sets, kRunning);
  auto bc = complex_of_boxes(partite_expansion(k), Labeling::Partite);
  std::vector<bool> keep(bc.cells.size(), false);
  keep.back() = true;
  CHECK_THROWS_AS(bc.chain_complex(keep), PreconditionError);
  CHECK_THROWS_AS(complex_of_boxes(PartiteFamily(2, {}), Labeling::Partite), PreconditionError);
}

TEST_CASE("monomial strings") {
  CHECK(monomial_string({0, 2, 1}, {"x1", "x2", "x3"}) == "x2^2x3");
  CHECK(monomial_string({0, 0}, {"a1", "a2"}) == "1");
  CHECK(to_string(Labeling::Partite) != to_string(Labeling::Specialized));
}
