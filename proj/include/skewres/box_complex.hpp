#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewres/betti.hpp"
#include "skewres/hypergraph.hpp"

namespace skewres {

enum class Labeling { Partite, Specialized };
std::string to_string(Labeling l);

// X_1 x ... x X_d with X_m a nonempty set of values (bit v-1 for value v).
struct Box {
  std::vector<Mask> parts;
  int dim() const;
  auto operator<=>(const Box&) const = default;
};

struct BoxCell {
  Box box;
  int dim = 0;
  Exponents label;
  std::vector<std::pair<int, int>> boundary;  // (face cell index, sign)
};

struct BoxComplex {
  int d = 1;
  Labeling labeling = Labeling::Partite;
  std::vector<std::string> variables;
  std::vector<BoxCell> cells;  // ordered by dimension, then box

  std::vector<int> f_vector() const;
  int max_dim() const;
  // Augmented cellular chain complex on the cells in `keep` (closed under faces).
  ChainComplex chain_complex(const std::vector<bool>& keep) const;
  bool boundary_squares_to_zero() const;
};

BoxComplex complex_of_boxes(const PartiteFamily& f, Labeling labeling);

struct ResolutionCheck {
  bool is_resolution = true;
  bool is_minimal = true;
  std::optional<Exponents> failing_multidegree;
  std::vector<int> failing_cells;        // cells of C_{<=alpha} at the failure
  std::vector<int> failing_degrees;      // degrees with nonzero reduced homology there
  std::optional<std::pair<int, int>> nonminimal_pair;  // (cell, face) sharing a label
  int multidegrees_checked = 0;
};

ResolutionCheck verify_cellular_resolution(const BoxComplex& c,
                                           const std::vector<Field>& fields = {Field{0}, Field{2}});

// Cell counts by dimension, indexed by homological degree, with label degrees dim + d.
std::vector<std::int64_t> box_betti_numbers(const BoxComplex& c);

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names);

}  // namespace skewres
