#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewres/combinatorics.hpp"
#include "skewres/simplicial.hpp"

namespace skewres {

struct SimpleGraph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> names, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(names.size()); }
  std::vector<Mask> edge_supports() const;
  std::vector<Mask> neighbourhoods() const;
};

SimplicialComplex independence_complex(const SimpleGraph& g);

// Rows X and columns Y carry integer labels; rows[i] is the set of column indices adjacent to x_i.
struct BipartiteGraph {
  std::vector<int> x_labels;
  std::vector<int> y_labels;
  std::vector<Mask> rows;

  BipartiteGraph() = default;
  BipartiteGraph(std::vector<int> xs, std::vector<int> ys, std::vector<Mask> rows);
  // Rows given as lists of column indices 0..n-1; labels default to 1..m and 1..n.
  static BipartiteGraph from_rows(const std::vector<std::vector<int>>& rows, int n);

  int m() const { return static_cast<int>(x_labels.size()); }
  int n() const { return static_cast<int>(y_labels.size()); }
  bool has_edge(int i, int j) const { return has_bit(rows[i], j); }
  Mask column(int j) const;
  int edge_count() const;
  std::vector<int> x_degrees() const;
  bool has_isolated_x() const;
  bool has_isolated_vertex() const;

  // Vertices x_1..x_m then y_1..y_n, named "x<label>" and "y<label>".
  SimpleGraph as_simple() const;
  // Position of the X-part (resp. Y-part) inside the vertex masks of as_simple().
  Mask x_part() const { return low_mask(m()); }
  Mask y_part() const { return low_mask(m() + n()) & ~low_mask(m()); }
  Mask embed_x(Mask xs) const { return xs; }
  Mask embed_y(Mask ys) const { return ys << m(); }

  BipartiteGraph induced(Mask xs, Mask ys) const;
  BipartiteGraph without_column(int j) const;
  BipartiteGraph without_row(int i) const;
  // Biadjacency matrix as 0/1 rows.
  std::vector<std::vector<int>> biadjacency() const;
};

}  // namespace skewres
