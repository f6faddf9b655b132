#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "skewres/combinatorics.hpp"
#include "skewres/graph.hpp"

namespace skewres {

struct StrictPartition {
  std::vector<int> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> p);  // throws PreconditionError unless strictly decreasing and positive
  int size() const { return static_cast<int>(parts.size()); }
  // 1-based part, zero past the end.
  int part(int i) const { return i >= 1 && i <= size() ? parts[i - 1] : 0; }
};

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct ShiftedSkewShape {
  StrictPartition lambda;
  StrictPartition mu;
  std::vector<Cell> cells;  // sorted

  bool contains(Cell c) const;
  std::vector<Cell> staircase_cells() const;
  int max_label() const;  // largest column index used (0 if empty)
};

ShiftedSkewShape build_shifted_skew(const StrictPartition& lambda, const StrictPartition& mu);

struct Diagram {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<Cell> cells;  // sorted
  bool shifted = false;     // rows == cols, cells above the diagonal

  Diagram() = default;
  Diagram(std::vector<int> rows, std::vector<int> cols, std::vector<Cell> cells, bool shifted);

  bool has(Cell c) const;
  int row_index(int label) const;  // -1 if absent
  int col_index(int label) const;
  // Row i as a mask over column indices.
  std::vector<Mask> row_masks() const;
  Diagram restrict_to(const std::vector<int>& xs, const std::vector<int>& ys) const;
  Diagram restrict_shifted(const std::vector<int>& xs) const;
  Diagram without_cells(const std::vector<Cell>& drop) const;
  // D_{X|X} view of a shifted diagram (same cells, not shifted).
  Diagram bipartite_view() const;

  BipartiteGraph bipartite_graph() const;
  SimpleGraph simple_graph() const;  // shifted diagrams only
  std::string ascii() const;
};

Diagram restrict(const ShiftedSkewShape& shape, const std::vector<int>& xs,
                 const std::optional<std::vector<int>>& ys);

enum class PieceKind { EmptyRect, FullRect, Pedestal };
std::string to_string(PieceKind k);

struct Piece {
  PieceKind kind = PieceKind::EmptyRect;
  std::vector<int> rows;
  std::vector<int> cols;
  std::optional<Cell> top_cell;
  std::optional<Cell> neck_cell;
};

struct RectDecomposition {
  std::vector<Piece> pieces;
  std::vector<Cell> excess;  // sorted
  int rectangularity = 0;
  bool spherical = true;
  int staircase_nonexcess = 0;

  bool has_empty_rect() const;
  bool has_pedestal() const;
};

// Shifted diagrams use the vertex-identified variant: each iteration removes X' and Y' from
// the single label set.
RectDecomposition rectangular_decomposition(const Diagram& d);

bool has_pedestal_pattern(const Diagram& d);

// Fast statistics on index subsets, used by the closed-form enumerations.
struct DecompStats {
  int rect = 0;
  bool spherical = true;
  bool has_empty = false;
  bool has_pedestal = false;
  int staircase = 0;
};

// Bipartite algorithm on rows `xs` and columns `ys` (masks over indices) of a diagram given
// by row masks.
DecompStats decomposition_stats(const std::vector<Mask>& row_masks, Mask xs, Mask ys);
// Vertex-identified algorithm; adjacency[a] has bit b for each cell (a,b) with a < b.
DecompStats shifted_decomposition_stats(const std::vector<Mask>& upper, Mask vertices);

}  // namespace skewres
