#pragma once

#include <string>
#include <vector>

#include "skewres/combinatorics.hpp"
#include "skewres/smith.hpp"

namespace skewres {

// Vertices are indices 0..n-1 with display names; faces are bitmasks.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Keeps only the inclusion-maximal facets; an empty facet list gives the void complex.
  SimplicialComplex(std::vector<std::string> names, std::vector<Mask> facets);

  static SimplicialComplex void_complex(std::vector<std::string> names);
  static SimplicialComplex empty_face_only(std::vector<std::string> names);
  // Faces are the subsets of [n] containing no member of nonfaces.
  static SimplicialComplex from_nonfaces(std::vector<std::string> names,
                                         const std::vector<Mask>& nonfaces);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Mask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(Mask face) const;

  // All faces grouped by cardinality (index = |face|), each group ascending.
  std::vector<std::vector<Mask>> faces_by_size() const;
  std::vector<Mask> minimal_nonfaces() const;
  SimplicialComplex induced(Mask vertices) const;

 private:
  std::vector<std::string> names_;
  std::vector<Mask> facets_;
};

SimplicialComplex alexander_dual(const SimplicialComplex& c);

// Augmented chain complex (degree -1 holds the empty face) from faces grouped by size.
ChainComplex simplicial_chain_complex(const std::vector<std::vector<Mask>>& faces_by_size);

HomologyProfile reduced_homology(const SimplicialComplex& c, const std::vector<int>& primes);

// Faces of the complex on `vertices` whose nonfaces are `supports`, grouped by size.
std::vector<std::vector<Mask>> faces_avoiding(Mask vertices, const std::vector<Mask>& supports);

// Simplicial join; vertex sets are concatenated.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace skewres
