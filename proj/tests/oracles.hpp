#pragma once

// Brute-force reference implementations used to check the library. They share no code
// with the library beyond its plain data types.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "skewres/diagram.hpp"
#include "skewres/graph.hpp"
#include "skewres/hypergraph.hpp"
#include "skewres/io.hpp"

namespace oracle {

using skewres::Mask;
using FineTable = std::map<std::pair<int, Mask>, std::int64_t>;

constexpr int kLargePrime = 2147483629;

// Rank of a dense integer matrix modulo p.
int rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p);

// Hochster's formula evaluated by listing every subset: for each W, the faces of the
// complex on W avoiding all supports, and the reduced homology ranks from dense ranks mod p.
// p = 0 uses a large prime in place of the rationals.
FineTable fine_betti(int n, const std::vector<Mask>& supports, int p);
std::vector<std::int64_t> totals(const FineTable& t);

int independence_number(const skewres::SimpleGraph& g);
int min_vertex_cover(const skewres::SimpleGraph& g);
int min_edge_cover(const skewres::SimpleGraph& g);  // -1 with isolated vertices
int max_matching(const skewres::SimpleGraph& g);

std::vector<std::int64_t> rook_numbers(const std::vector<skewres::Cell>& cells, int r_max);

// All matrices up to independent row and column permutations, via both permutation groups.
std::uint64_t canonical_code(const skewres::BipartiteGraph& g);
int count_classes(int m, int n, bool no_isolated_x);

std::vector<skewres::Tuple> colex_first(std::int64_t g, int d);
bool strongly_stable(const std::vector<skewres::Tuple>& sets);

skewres::ShapeSpec random_restriction(std::mt19937_64& rng, int max_vertices, bool bipartite);
skewres::BipartiteGraph random_bipartite(std::mt19937_64& rng, int m, int n);

// rect and sphericity of a bipartite restriction read off the oracle: the reduced homology
// of the independence complex is either zero or a single rank-one group.
struct HomotopyShape {
  bool contractible = false;
  int sphere_dim = -2;
  bool single_sphere = false;
};
HomotopyShape homotopy_shape(const skewres::SimpleGraph& g);

// Closed under replacing an element by a smaller unused one.
std::vector<skewres::Tuple> random_stable_sets(std::mt19937_64& rng, int d, int n, int seeds);
// Order ideal in [n]^d generated by two random tuples.
skewres::PartiteFamily random_order_ideal(std::mt19937_64& rng, int d, int n);

}  // namespace oracle
