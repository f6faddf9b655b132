#include "skewres/box_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skewres/errors.hpp"

namespace skewres {

std::string to_string(Labeling l) { return l == Labeling::Partite ? "partite" : "specialized"; }

int Box::dim() const {
  int s = 0;
  for (Mask m : parts) s += popcount(m) - 1;
  return s;
}

namespace {

// Calls f(vertex tuple) for every vertex of the box.
template <class F>
void for_each_vertex(const Box& b, F&& f) {
  std::vector<std::vector<int>> vals;
  for (Mask m : b.parts) {
    std::vector<int> v;
    for (int i : bits_of(m)) v.push_back(i + 1);
    vals.push_back(std::move(v));
  }
  Tuple t(b.parts.size());
  std::vector<std::size_t> idx(b.parts.size(), 0);
  for (;;) {
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = vals[j][idx[j]];
    f(t);
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == vals[j].size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

}  // namespace

std::vector<int> BoxComplex::f_vector() const {
  std::vector<int> f;
  for (const auto& c : cells) {
    if (static_cast<int>(f.size()) <= c.dim) f.resize(c.dim + 1, 0);
    ++f[c.dim];
  }
  return f;
}

int BoxComplex::max_dim() const { return cells.empty() ? -1 : cells.back().dim; }

ChainComplex BoxComplex::chain_complex(const std::vector<bool>& keep) const {
  ChainComplex cc;
  cc.lowest_degree = -1;
  const int top = max_dim();
  std::vector<int> index(cells.size(), -1);
  cc.ranks.assign(top + 2, 0);
  bool any = false;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (keep[k]) {
      index[k] = cc.ranks[cells[k].dim + 1]++;
      any = true;
    }
  cc.boundary.resize(top + 2);
  if (!any) {
    cc.ranks.assign(1, 0);
    cc.boundary.resize(1);
    return cc;
  }
  cc.ranks[0] = 1;
  for (int q = 0; q <= top; ++q) {
    cc.boundary[q + 1].rows = cc.ranks[q];
    cc.boundary[q + 1].cols = cc.ranks[q + 1];
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!keep[k]) continue;
    const int q = cells[k].dim;
    SparseMatrix& m = cc.boundary[q + 1];
    if (q == 0) {
      m.add(0, index[k], 1);
      continue;
    }
    for (auto [face, sign] : cells[k].boundary) {
      if (!keep[face]) throw PreconditionError("subcomplex not closed under faces");
      m.add(index[face], index[k], sign);
    }
  }
  return cc;
}

bool BoxComplex::boundary_squares_to_zero() const {
  for (const auto& c : cells) {
    std::map<int, int> acc;
    for (auto [face, sign] : c.boundary)
      for (auto [ff, s2] : cells[face].boundary) acc[ff] += sign * s2;
    for (auto [k, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

BoxComplex complex_of_boxes(const PartiteFamily& f, Labeling labeling) {
  if (f.members.empty()) throw PreconditionError("complex of boxes needs a nonempty family");
  const int d = f.d;
  const auto sizes = f.part_sizes();
  for (int s : sizes)
    if (s > 62) throw PreconditionError("part values above 62 are not supported");
  BoxComplex bc;
  bc.d = d;
  bc.labeling = labeling;
  std::vector<int> offset(d, 0);
  if (labeling == Labeling::Partite) {
    for (int j = 0; j < d; ++j) {
      offset[j] = static_cast<int>(bc.variables.size());
      for (int v = 1; v <= sizes[j]; ++v) bc.variables.push_back(part_variable(j, v));
    }
  } else {
    const int n = *std::max_element(sizes.begin(), sizes.end());
    for (int v = 1; v <= n; ++v) bc.variables.push_back("x" + std::to_string(v));
  }
  auto vertex_label = [&](const Tuple& t) {
    Exponents e(bc.variables.size(), 0);
    for (int j = 0; j < d; ++j) ++e[(labeling == Labeling::Partite ? offset[j] : 0) + t[j] - 1];
    return e;
  };

  std::set<Box> boxes;
  std::vector<Box> frontier;
  for (const auto& t : f.members) {
    Box b;
    for (int v : t) b.parts.push_back(bit(v - 1));
    if (boxes.insert(b).second) frontier.push_back(b);
  }
  while (!frontier.empty()) {
    std::vector<Box> next;
    for (const Box& b : frontier)
      for (int j = 0; j < d; ++j)
        for (int v = 1; v <= sizes[j]; ++v) {
          if (has_bit(b.parts[j], v - 1)) continue;
          Box g = b;
          g.parts[j] |= bit(v - 1);
          if (boxes.count(g)) continue;
          bool inside = true;
          for_each_vertex(g, [&](const Tuple& t) { inside = inside && f.contains(t); });
          if (inside) {
            boxes.insert(g);
            next.push_back(g);
          }
        }
    frontier = std::move(next);
  }

  std::vector<Box> ordered(boxes.begin(), boxes.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Box& a, const Box& b) { return a.dim() < b.dim(); });
  std::map<Box, int> where;
  for (std::size_t k = 0; k < ordered.size(); ++k) where[ordered[k]] = static_cast<int>(k);
  for (const Box& b : ordered) {
    BoxCell c;
    c.box = b;
    c.dim = b.dim();
    c.label.assign(bc.variables.size(), 0);
    for_each_vertex(b, [&](const Tuple& t) { c.label = lcm(c.label, vertex_label(t)); });
    int before = 0;
    for (int j = 0; j < d; ++j) {
      const std::vector<int> vals = bits_of(b.parts[j]);
      if (vals.size() >= 2) {
        for (std::size_t t = 0; t < vals.size(); ++t) {
          Box face = b;
          face.parts[j] &= ~bit(vals[t]);
          const int sign = ((t + static_cast<std::size_t>(before)) % 2) ? -1 : 1;
          c.boundary.emplace_back(where.at(face), sign);
        }
      }
      before += static_cast<int>(vals.size()) - 1;
    }
    bc.cells.push_back(std::move(c));
  }
  return bc;
}

ResolutionCheck verify_cellular_resolution(const BoxComplex& c, const std::vector<Field>& fields) {
  ResolutionCheck r;
  for (std::size_t k = 0; k < c.cells.size() && r.is_minimal; ++k)
    for (auto [face, sign] : c.cells[k].boundary)
      if (c.cells[face].label == c.cells[k].label) {
        r.is_minimal = false;
        r.nonminimal_pair = std::make_pair(static_cast<int>(k), face);
        break;
      }

  std::vector<Exponents> gens;
  for (const auto& cell : c.cells)
    if (cell.dim == 0) gens.push_back(cell.label);
  std::set<Exponents> lattice(gens.begin(), gens.end());
  std::vector<Exponents> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Exponents> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Exponents l = lcm(a, g);
        if (lattice.insert(l).second) next.push_back(std::move(l));
      }
    frontier = std::move(next);
    if (lattice.size() > 200000) throw OracleLimitError("lcm lattice too large");
  }
  std::vector<Exponents> order(lattice.begin(), lattice.end());
  auto degree = [](const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const Exponents& a, const Exponents& b) { return degree(a) < degree(b); });

  std::vector<int> primes;
  for (const auto& f : fields)
    if (f.characteristic) primes.push_back(f.characteristic);
  for (const auto& alpha : order) {
    std::vector<bool> keep(c.cells.size(), false);
    for (std::size_t k = 0; k < c.cells.size(); ++k) keep[k] = divides(c.cells[k].label, alpha);
    ++r.multidegrees_checked;
    const auto h = homology(c.chain_complex(keep), primes);
    std::set<int> bad;
    for (const auto& f : fields)
      for (int q : h.support(f)) bad.insert(q);
    if (!bad.empty()) {
      r.is_resolution = false;
      r.failing_multidegree = alpha;
      for (std::size_t k = 0; k < keep.size(); ++k)
        if (keep[k]) r.failing_cells.push_back(static_cast<int>(k));
      r.failing_degrees.assign(bad.begin(), bad.end());
      break;
    }
  }
  return r;
}

std::vector<std::int64_t> box_betti_numbers(const BoxComplex& c) {
  std::vector<std::int64_t> b;
  for (int f : c.f_vector()) b.push_back(f);
  return b;
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    s += names[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace skewres
