#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewres/combinatorics.hpp"
#include "skewres/smith.hpp"

namespace skewres {

// Finely graded Betti numbers of an ideal (i = 0 counts minimal generators).
struct BettiTable {
  std::vector<std::string> vertex_names;
  Field field;
  std::map<std::pair<int, Mask>, std::int64_t> entries;  // nonzero values only

  void add(int i, Mask support, std::int64_t v);
  std::int64_t at(int i, Mask support) const;
  bool empty() const { return entries.empty(); }

  // (i, j) -> sum over |support| = j.
  std::map<std::pair<int, int>, std::int64_t> graded() const;
  std::vector<std::int64_t> totals() const;
  // beta_{i, i+offset} for i = 0..max i.
  std::vector<std::int64_t> strand(int offset) const;
  // Sum of beta_{i,V'} over V' with V' & part == exact.
  std::int64_t partial(int i, Mask part, Mask exact) const;
  std::optional<int> projective_dimension() const;
  std::optional<int> regularity() const;

  bool same_entries(const BettiTable& o) const { return entries == o.entries; }
};

struct HochsterOptions {
  std::vector<Field> fields{Field{0}, Field{2}};
  int width = 1;
  std::optional<Mask> within;  // only V' contained in this set
  // Only V' with (V' & part) == exact.
  std::optional<std::pair<Mask, Mask>> fixed_part;
  int max_vertices = 63;
};

// Hochster's formula on the Stanley-Reisner complex whose minimal nonfaces are `supports`.
// One table per requested field, in the order given.
std::vector<BettiTable> hochster_betti_tables(const std::vector<Mask>& supports,
                                              const std::vector<std::string>& names,
                                              const HochsterOptions& opt = {});
BettiTable hochster_betti_table(const std::vector<Mask>& supports,
                                const std::vector<std::string>& names, Field f = Field{0},
                                int max_vertices = 63);

using Exponents = std::vector<int>;

struct Polarization {
  std::vector<std::string> names;    // polarized variables
  std::vector<int> original;         // index of the original variable for each polarized variable
  std::vector<Mask> supports;
  // Exponent vector (over the original variables) of a polarized support.
  Exponents depolarize(Mask support, int original_count) const;
};

Polarization polarize(const std::vector<Exponents>& generators,
                      const std::vector<std::string>& names);

// Keeps generators not divisible by another one; sorted and deduplicated.
std::vector<Exponents> minimalize(std::vector<Exponents> generators);

struct TaylorReport {
  std::vector<std::int64_t> upper_bounds;  // C(p, i+1)
  bool minimal = true;
  // A violating pair: generator subset A (indices) and a in A with lcm(A) = lcm(A - a).
  std::optional<std::pair<std::vector<int>, int>> witness;
};

TaylorReport taylor_analysis(const std::vector<Exponents>& generators);

// Signed lcm expansion sum_A (-1)^{|A|} x^{lcm A} over generator subsets (including A = {}).
std::map<Mask, std::int64_t> taylor_k_polynomial(const std::vector<Mask>& supports);
// 1 + sum_i (-1)^{i+1} sum_V' beta_{i,V'} x^{V'}.
std::map<Mask, std::int64_t> betti_k_polynomial(const BettiTable& t);

}  // namespace skewres
