#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewres {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient field: characteristic 0 means the rationals.
struct Field {
  int characteristic = 0;
  std::string name() const;
  static Field parse(const std::string& s);
  bool operator==(const Field&) const = default;
  auto operator<=>(const Field&) const = default;
};

// Integer matrix in coordinate form; duplicate coordinates are summed.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> entries;

  void add(int r, int c, std::int64_t v) { entries.push_back({{r, c}, v}); }
};

// Nonzero invariant factors of m in divisibility order (all positive).
std::vector<BigInt> invariant_factors(const SparseMatrix& m);

// Summary of the invariant factors of one boundary map.
struct RankData {
  std::int64_t rational_rank = 0;
  std::vector<BigInt> nonunit_factors;  // factors > 1

  std::int64_t rank_mod(int p) const;
};

RankData rank_data(const SparseMatrix& m);

// Chain complex C_lo <- C_{lo+1} <- ... with boundary[k]: C_{lo+k} -> C_{lo+k-1}.
// boundary[0] is ignored.
struct ChainComplex {
  int lowest_degree = -1;
  std::vector<int> ranks;
  std::vector<SparseMatrix> boundary;
};

struct HomologyProfile {
  int lowest_degree = -1;
  std::vector<std::int64_t> rational;                 // per degree
  std::map<int, std::vector<std::int64_t>> modular;   // prime -> per degree
  std::vector<std::vector<BigInt>> torsion;           // per degree, factors > 1
  std::vector<int> torsion_primes;

  std::int64_t rank(int degree, const Field& f) const;
  bool acyclic(const Field& f) const;
  // Degrees with nonzero rank over f.
  std::vector<int> support(const Field& f) const;
};

HomologyProfile homology(const ChainComplex& c, const std::vector<int>& primes);

}  // namespace skewres
