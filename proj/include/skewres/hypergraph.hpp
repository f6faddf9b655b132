#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewres/betti.hpp"

namespace skewres {

using Tuple = std::vector<int>;

enum class FamilyKind { Sets, Multisets };
std::string to_string(FamilyKind k);

struct UniformFamily {
  int d = 1;
  FamilyKind kind = FamilyKind::Sets;
  std::vector<Tuple> members;  // deduplicated, in colex order

  UniformFamily() = default;
  UniformFamily(int d, FamilyKind kind, std::vector<Tuple> members);
  int max_entry() const;
  bool contains(const Tuple& t) const;
};

// Sorted d-tuples; coordinate j of a member lives in part j.
struct PartiteFamily {
  int d = 1;
  std::vector<Tuple> members;  // deduplicated, lexicographic

  PartiteFamily() = default;
  PartiteFamily(int d, std::vector<Tuple> members);
  std::vector<int> part_sizes() const;  // largest value per coordinate
  bool contains(const Tuple& t) const;
};

struct GaleResult {
  bool leq = false;
  Tuple meet;
  Tuple join;
};

GaleResult gale_compare(const Tuple& u, const Tuple& v, FamilyKind kind);
bool gale_leq(const Tuple& u, const Tuple& v);
// Colex: the largest entry where the tuples differ decides (reverse lexicographic).
bool colex_less(const Tuple& u, const Tuple& v);
bool valid_tuple(const Tuple& t, int d, FamilyKind kind);

UniformFamily colexsegment(std::int64_t g, int d);

struct StabilityResult {
  bool strongly_stable = true;
  std::optional<std::pair<Tuple, Tuple>> witness;  // member, missing lowered tuple
};

StabilityResult stability_check(const UniformFamily& f);

UniformFamily depolarize(const UniformFamily& sets);
UniformFamily polarize(const UniformFamily& multisets);

PartiteFamily partite_expansion(const UniformFamily& f);

struct FerrersCheck {
  bool is_ferrers = true;
  std::optional<std::pair<Tuple, Tuple>> witness;  // member, missing lowered tuple
};

FerrersCheck ferrers_check(const PartiteFamily& f);

struct SkewPair {
  int N = 0;
  UniformFamily K;
  UniformFamily K_prime;
  UniformFamily difference;
  bool K_stable = false;
  bool K_prime_stable = false;
  bool isomorphic = false;  // F(K - K') agrees with F after shifting part j by (j-1)N
};

SkewPair ferrers_skew_pair(const PartiteFamily& f);

struct MonomialIdeal {
  std::vector<std::string> names;
  std::vector<Exponents> generators;
};

MonomialIdeal family_ideal(const UniformFamily& f);   // variables x1..xN
MonomialIdeal partite_ideal(const PartiteFamily& f);  // variables a1.., b1.., ...
std::string part_variable(int part, int value);

// Number of members S with max(S) = k (multisets use m_d + d - 1), indexed by k.
std::vector<std::int64_t> max_profile(const UniformFamily& f);
std::vector<std::int64_t> hypergraph_betti_formula(const UniformFamily& f);
std::vector<std::int64_t> ferrers_hypergraph_betti(const PartiteFamily& f);

struct ColexDecomposition {
  std::int64_t mu = 0;
  std::int64_t epsilon = 0;
};

ColexDecomposition colex_decomposition(std::int64_t g, int d);
std::vector<std::int64_t> colex_closed_form(std::int64_t g, int d);

// Coarse Betti vector of a possibly non-squarefree monomial ideal via polarization and
// the Hochster oracle.
std::vector<std::int64_t> oracle_betti(const MonomialIdeal& ideal, Field f, int max_vertices);
BettiTable oracle_table(const MonomialIdeal& ideal, Field f, int max_vertices);

}  // namespace skewres
