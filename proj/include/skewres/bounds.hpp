#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewres/betti.hpp"
#include "skewres/graph.hpp"
#include "skewres/hypergraph.hpp"

namespace skewres {

struct InducedWitness {
  std::string pattern;
  std::vector<int> xs;  // labels
  std::vector<int> ys;
};

struct GraphClassReport {
  bool row_nested = false;
  bool nearly_row_nested = false;
  bool horizontal = false;
  bool horizontal_vertical = false;
  std::optional<InducedWitness> row_nested_witness;
  std::optional<InducedWitness> nearly_row_nested_witness;
  std::optional<InducedWitness> horizontal_witness;
  std::optional<InducedWitness> horizontal_vertical_witness;

  bool same_flags(const GraphClassReport& o) const;
};

enum class ClassifyMethod { Definition, Forbidden };

GraphClassReport classify_bipartite(const BipartiteGraph& g, ClassifyMethod method);

struct BipartiteModels {
  BipartiteGraph row_nested;   // R_G
  BipartiteGraph horizontal;   // H_G
};

BipartiteModels bipartite_models(const BipartiteGraph& g);

std::int64_t lower_bound_value(const BipartiteGraph& g, int i, Mask xprime);
// Number of (i+1)-edge sets whose X-support is exactly X'.
std::int64_t upper_bound_value(const BipartiteGraph& g, int i, Mask xprime);
// C(|deg X'|, i+1): edge sets whose X-support is contained in X'.
std::int64_t upper_bound_cumulative(const BipartiteGraph& g, int i, Mask xprime);

// beta_{i,X',*} for every i and X' from a Hochster table of g.as_simple().
std::vector<std::vector<std::int64_t>> x_partial_table(const BipartiteGraph& g, const BettiTable& t);

struct BoundEntry {
  int i = 0;
  Mask xprime = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t upper_cumulative = 0;
  std::vector<std::int64_t> values;  // one per field
};

enum class Verdict { Holds, Violated, OracleTooLarge };
std::string to_string(Verdict v);

struct ConjectureReport {
  std::vector<Field> fields;
  std::vector<BoundEntry> entries;
  Verdict lower = Verdict::Holds;
  Verdict upper = Verdict::Holds;
  bool upper_cumulative_holds = true;
  bool lower_tight_all = true;
  bool upper_tight_all = true;
  bool fields_agree = true;
  GraphClassReport classes;
  bool lower_prediction_ok = true;  // lower tight for all iff nearly row-nested
  bool upper_prediction_ok = true;  // upper tight for all iff horizontal-vertical
};

ConjectureReport check_bipartite_conjecture(const BipartiteGraph& g,
                                            const std::vector<Field>& fields = {Field{0}, Field{2}},
                                            int max_vertices = 12);

struct ReductionReport {
  int full_column_checks = 0;
  int nested_row_checks = 0;
  std::vector<std::string> failures;
  bool applicable() const { return full_column_checks + nested_row_checks > 0; }
  bool ok() const { return failures.empty(); }
};

ReductionReport reductions(const BipartiteGraph& g, int max_vertices = 12);

struct ColexCheck {
  std::vector<Field> fields;
  std::vector<std::vector<std::int64_t>> betti;  // per field
  std::vector<std::int64_t> bound;
  std::vector<int> violations;  // indices i with beta_i < bound_i in some field
  Verdict verdict = Verdict::Holds;
};

ColexCheck check_colex_lower_bound(const UniformFamily& k,
                                   const std::vector<Field>& fields = {Field{0}, Field{2}},
                                   int max_vertices = 12);

struct EnumerationFilter {
  bool no_isolated_x = false;
  bool no_isolated_y = false;
  bool connected = false;
};

// Canonical code: minimal row-major biadjacency bits over row and column permutations.
std::uint64_t canonical_code(const BipartiteGraph& g);
std::vector<BipartiteGraph> enumerate_bipartite(int m, int n, const EnumerationFilter& filter = {});
bool is_connected(const BipartiteGraph& g);

}  // namespace skewres
