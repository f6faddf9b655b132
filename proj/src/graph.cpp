#include "skewres/graph.hpp"

#include <algorithm>

#include "skewres/errors.hpp"

namespace skewres {

SimpleGraph::SimpleGraph(std::vector<std::string> n, std::vector<std::pair<int, int>> e)
    : names(std::move(n)) {
  const int nv = vertex_count();
  if (nv > 63) throw PreconditionError("at most 63 vertices supported");
  for (auto [u, v] : e) {
    if (u == v) throw PreconditionError("graph has a loop");
    if (u < 0 || v < 0 || u >= nv || v >= nv) throw PreconditionError("edge endpoint out of range");
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<Mask> SimpleGraph::edge_supports() const {
  std::vector<Mask> out;
  for (auto [u, v] : edges) out.push_back(bit(u) | bit(v));
  return out;
}

std::vector<Mask> SimpleGraph::neighbourhoods() const {
  std::vector<Mask> nb(names.size(), 0);
  for (auto [u, v] : edges) {
    nb[u] |= bit(v);
    nb[v] |= bit(u);
  }
  return nb;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
  auto groups = faces_avoiding(low_mask(g.vertex_count()), g.edge_supports());
  // Maximal independent sets: faces that cannot be extended.
  const auto nb = g.neighbourhoods();
  const Mask all = low_mask(g.vertex_count());
  std::vector<Mask> facets;
  for (const auto& grp : groups)
    for (Mask f : grp) {
      Mask blocked = f;
      for (int v : bits_of(f)) blocked |= nb[v];
      if (blocked == all) facets.push_back(f);
    }
  return SimplicialComplex(g.names, std::move(facets));
}

BipartiteGraph::BipartiteGraph(std::vector<int> xs, std::vector<int> ys, std::vector<Mask> r)
    : x_labels(std::move(xs)), y_labels(std::move(ys)), rows(std::move(r)) {
  if (rows.size() != x_labels.size()) throw PreconditionError("row count mismatch");
  if (m() + n() > 63) throw PreconditionError("at most 63 vertices supported");
  const Mask all = low_mask(n());
  for (Mask row : rows)
    if (row & ~all) throw PreconditionError("edge to a column outside Y");
}

BipartiteGraph BipartiteGraph::from_rows(const std::vector<std::vector<int>>& rows, int n) {
  std::vector<int> xs, ys;
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    xs.push_back(static_cast<int>(i) + 1);
    Mask r = 0;
    for (int j : rows[i]) {
      if (j < 0 || j >= n) throw PreconditionError("column index out of range");
      r |= bit(j);
    }
    masks.push_back(r);
  }
  for (int j = 0; j < n; ++j) ys.push_back(j + 1);
  return BipartiteGraph(std::move(xs), std::move(ys), std::move(masks));
}

Mask BipartiteGraph::column(int j) const {
  Mask c = 0;
  for (int i = 0; i < m(); ++i)
    if (has_edge(i, j)) c |= bit(i);
  return c;
}

int BipartiteGraph::edge_count() const {
  int e = 0;
  for (Mask r : rows) e += popcount(r);
  return e;
}

std::vector<int> BipartiteGraph::x_degrees() const {
  std::vector<int> d;
  for (Mask r : rows) d.push_back(popcount(r));
  return d;
}

bool BipartiteGraph::has_isolated_x() const {
  return std::any_of(rows.begin(), rows.end(), [](Mask r) { return r == 0; });
}

bool BipartiteGraph::has_isolated_vertex() const {
  if (has_isolated_x()) return true;
  for (int j = 0; j < n(); ++j)
    if (column(j) == 0) return true;
  return false;
}

SimpleGraph BipartiteGraph::as_simple() const {
  std::vector<std::string> names;
  for (int x : x_labels) names.push_back("x" + std::to_string(x));
  for (int y : y_labels) names.push_back("y" + std::to_string(y));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m(); ++i)
    for (int j : bits_of(rows[i])) edges.emplace_back(i, m() + j);
  return SimpleGraph(std::move(names), std::move(edges));
}

BipartiteGraph BipartiteGraph::induced(Mask xs, Mask ys) const {
  std::vector<int> xl, yl;
  std::vector<int> ycols = bits_of(ys);
  for (int j : ycols) yl.push_back(y_labels[j]);
  std::vector<Mask> r;
  for (int i : bits_of(xs)) {
    xl.push_back(x_labels[i]);
    Mask row = 0;
    for (std::size_t t = 0; t < ycols.size(); ++t)
      if (has_edge(i, ycols[t])) row |= bit(static_cast<int>(t));
    r.push_back(row);
  }
  return BipartiteGraph(std::move(xl), std::move(yl), std::move(r));
}

BipartiteGraph BipartiteGraph::without_column(int j) const {
  return induced(low_mask(m()), low_mask(n()) & ~bit(j));
}

BipartiteGraph BipartiteGraph::without_row(int i) const {
  return induced(low_mask(m()) & ~bit(i), low_mask(n()));
}

std::vector<std::vector<int>> BipartiteGraph::biadjacency() const {
  std::vector<std::vector<int>> out(m(), std::vector<int>(n(), 0));
  for (int i = 0; i < m(); ++i)
    for (int j = 0; j < n(); ++j) out[i][j] = has_edge(i, j) ? 1 : 0;
  return out;
}

}  // namespace skewres
