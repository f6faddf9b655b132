#include "skewres/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "skewres/errors.hpp"

namespace skewres {

namespace {

std::vector<Mask> maximal_only(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : sets)
      if (t != s && (s & t) == s) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> names, std::vector<Mask> facets)
    : names_(std::move(names)), facets_(maximal_only(std::move(facets))) {
  if (names_.size() > 63) throw PreconditionError("at most 63 vertices supported");
  const Mask all = low_mask(static_cast<int>(names_.size()));
  for (Mask f : facets_)
    if (f & ~all) throw PreconditionError("facet uses a vertex outside the vertex set");
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> names) {
  return SimplicialComplex(std::move(names), {});
}

SimplicialComplex SimplicialComplex::empty_face_only(std::vector<std::string> names) {
  return SimplicialComplex(std::move(names), {Mask{0}});
}

SimplicialComplex SimplicialComplex::from_nonfaces(std::vector<std::string> names,
                                                   const std::vector<Mask>& nonfaces) {
  const int n = static_cast<int>(names.size());
  auto groups = faces_avoiding(low_mask(n), nonfaces);
  std::vector<Mask> all;
  for (auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  return SimplicialComplex(std::move(names), std::move(all));
}

bool SimplicialComplex::contains(Mask face) const {
  for (Mask f : facets_)
    if ((face & f) == face) return true;
  return false;
}

std::vector<std::vector<Mask>> SimplicialComplex::faces_by_size() const {
  std::unordered_set<Mask> seen;
  for (Mask f : facets_) for_each_submask_ascending(f, [&](Mask s) { seen.insert(s); });
  std::vector<std::vector<Mask>> groups;
  for (Mask s : seen) {
    std::size_t k = static_cast<std::size_t>(popcount(s));
    if (groups.size() <= k) groups.resize(k + 1);
    groups[k].push_back(s);
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
  if (is_void()) return {Mask{0}};
  const int n = vertex_count();
  std::vector<Mask> out;
  for (const auto& group : faces_by_size())
    for (Mask f : group)
      for (int v = 0; v < n; ++v) {
        if (has_bit(f, v)) continue;
        Mask s = f | bit(v);
        if (contains(s)) continue;
        bool minimal = true;
        for (int u : bits_of(s))
          if (!contains(s & ~bit(u))) {
            minimal = false;
            break;
          }
        if (minimal) out.push_back(s);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(Mask vertices) const {
  std::vector<Mask> f;
  for (Mask g : facets_) f.push_back(g & vertices);
  return SimplicialComplex(names_, std::move(f));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const Mask all = low_mask(c.vertex_count());
  std::vector<Mask> facets;
  for (Mask g : c.minimal_nonfaces()) facets.push_back(all & ~g);
  return SimplicialComplex(c.names(), std::move(facets));
}

std::vector<std::vector<Mask>> faces_avoiding(Mask vertices, const std::vector<Mask>& supports) {
  std::vector<int> verts = bits_of(vertices);
  std::vector<std::vector<Mask>> by_vertex(64);
  for (Mask s : supports) {
    if ((s & ~vertices) != 0) continue;
    if (s == 0) return {};  // the empty set is a nonface: void complex
    for (int v : bits_of(s)) by_vertex[v].push_back(s);
  }
  std::vector<std::vector<Mask>> groups(verts.size() + 1);
  std::function<void(std::size_t, Mask)> grow = [&](std::size_t start, Mask face) {
    groups[static_cast<std::size_t>(popcount(face))].push_back(face);
    for (std::size_t t = start; t < verts.size(); ++t) {
      const int v = verts[t];
      const Mask g = face | bit(v);
      bool ok = true;
      for (Mask s : by_vertex[v])
        if ((s & ~g) == 0) {
          ok = false;
          break;
        }
      if (ok) grow(t + 1, g);
    }
  };
  grow(0, 0);
  while (!groups.empty() && groups.back().empty()) groups.pop_back();
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

ChainComplex simplicial_chain_complex(const std::vector<std::vector<Mask>>& faces) {
  ChainComplex c;
  c.lowest_degree = -1;
  if (faces.empty()) {
    c.ranks = {0};
    c.boundary.resize(1);
    return c;
  }
  const std::size_t n = faces.size();
  c.ranks.resize(n);
  c.boundary.resize(n);
  for (std::size_t k = 0; k < n; ++k) c.ranks[k] = static_cast<int>(faces[k].size());
  for (std::size_t k = 1; k < n; ++k) {
    SparseMatrix& m = c.boundary[k];
    m.rows = c.ranks[k - 1];
    m.cols = c.ranks[k];
    const auto& lower = faces[k - 1];
    for (std::size_t col = 0; col < faces[k].size(); ++col) {
      const Mask f = faces[k][col];
      int pos = 0;
      for (int v : bits_of(f)) {
        const Mask g = f & ~bit(v);
        auto it = std::lower_bound(lower.begin(), lower.end(), g);
        m.add(static_cast<int>(it - lower.begin()), static_cast<int>(col), (pos % 2) ? -1 : 1);
        ++pos;
      }
    }
  }
  return c;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const std::vector<int>& primes) {
  return homology(simplicial_chain_complex(c.faces_by_size()), primes);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  std::vector<Mask> facets;
  const int shift = a.vertex_count();
  for (Mask f : a.facets())
    for (Mask g : b.facets()) facets.push_back(f | (g << shift));
  return SimplicialComplex(std::move(names), std::move(facets));
}

}  // namespace skewres
