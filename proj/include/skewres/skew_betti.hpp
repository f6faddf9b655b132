#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewres/betti.hpp"
#include "skewres/diagram.hpp"
#include "skewres/graph.hpp"

namespace skewres {

// Vertex names follow BipartiteGraph::as_simple(): rows first, then columns.
BettiTable betti_bipartite_closed(const Diagram& d, bool prune = true);

enum class NonbipMode { Specialize, Direct };

// Vertex names x<label> over the row labels of a shifted diagram.
BettiTable betti_nonbipartite(const Diagram& d, NonbipMode mode);

// Sums a table of D_{X|X} over (X', Y') with X' and Y' disjoint, keyed by X' u Y'.
BettiTable specialize_table(const BettiTable& bipartite, int n, const std::vector<std::string>& names);
// Nonzero entries of a D_{X|X} table whose row and column parts share a label.
std::vector<std::pair<int, Mask>> overlapping_entries(const BettiTable& bipartite, int n);

struct RegularityPd {
  std::optional<int> regularity;
  std::optional<int> projective_dimension;
};

RegularityPd regularity_and_pd(const Diagram& d);

struct KrullReport {
  int vertices = 0;
  int nu = 0;     // maximum matching
  int alpha = 0;  // maximum independent set, the Krull dimension
  int rho = 0;    // minimum vertex cover
  std::optional<int> tau;  // minimum edge cover; absent with isolated vertices
};

int maximum_matching(const BipartiteGraph& g);
KrullReport krull_dimension(const BipartiteGraph& g);

struct FerrersShape {
  std::vector<int> lambda;

  FerrersShape() = default;
  explicit FerrersShape(std::vector<int> l);  // weakly decreasing, positive
  int rows() const { return static_cast<int>(lambda.size()); }
  int cells() const;
};

Diagram ferrers_diagram(const FerrersShape& s);
// alpha_k for k = 2 .. m + lambda_1, stored from k = 2.
std::vector<std::int64_t> alpha_profile(const FerrersShape& s);

struct FerrersReport {
  BettiTable fine;
  std::vector<std::int64_t> coarse;
  std::array<std::vector<std::int64_t>, 4> routes;
  std::vector<std::int64_t> alpha;
  bool routes_agree = false;
};

FerrersReport ferrers_betti(const FerrersShape& s);
// beta_{i,X',*} for a nonempty row set X' (mask over row indices).
std::int64_t ferrers_partial(const FerrersShape& s, int i, Mask rows);

// Column subsets Y' with D_{X|Y'} spherical and rect = |Y'| - j + 1, following the greedy
// pruning argument; every returned subset has been re-checked by the decomposition.
std::vector<std::vector<int>> spherical_column_subsets(const Diagram& d, int j);
int minimum_row_size(const Diagram& d);

// Non-attacking rook placements on the board of cells, counts for r = 0..r_max.
std::vector<std::int64_t> rook_numbers(const Diagram& board, int r_max);

struct RookReport {
  std::vector<std::int64_t> counts_a;
  std::vector<std::int64_t> counts_b;
  bool rook_equal = false;
  bool alpha_equal = false;
  bool betti_equal = false;
};

RookReport rook_tools(const FerrersShape& a, const FerrersShape& b, int r_max);

}  // namespace skewres
