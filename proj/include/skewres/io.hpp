#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "skewres/betti.hpp"
#include "skewres/bounds.hpp"
#include "skewres/box_complex.hpp"
#include "skewres/diagram.hpp"
#include "skewres/hypergraph.hpp"

namespace skewres {

using Json = nlohmann::ordered_json;

// Comma-separated integers; "a..b" expands to a range.
std::vector<int> parse_int_list(const std::string& text);

struct ShapeSpec {
  StrictPartition lambda;
  StrictPartition mu;
  std::vector<int> xs;
  std::optional<std::vector<int>> ys;  // absent: nonbipartite restriction

  Diagram diagram() const;
};

// "lambda=12,11,7,6,4,2,1; mu=11,9,6,3; X=2,4,5,7; Y=4,6..12"
ShapeSpec parse_dsl(const std::string& text);
std::string to_dsl(const ShapeSpec& s);

// A diagram, plus the shifted skew shape it restricts when that is known.
struct DiagramInput {
  Diagram diagram;
  std::optional<ShapeSpec> shape;
};

Json to_json(const Diagram& d);
Json to_json(const ShapeSpec& s);
Json to_json(const DiagramInput& d);
Diagram diagram_from_json(const Json& j);
ShapeSpec shape_from_json(const Json& j);
// Accepts a diagram object, an object with "dsl", or any document carrying one under "diagram".
DiagramInput diagram_input_from_json(const Json& j);

Json to_json(const RectDecomposition& r);

Json to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);
// Graded view with rows j - i and columns i, "." for zero, and a final "total:" line.
std::string betti_text(const BettiTable& t);
std::string betti_tsv(const BettiTable& t);
std::string totals_line(const std::vector<std::int64_t>& totals);

Json to_json(const UniformFamily& f);
Json to_json(const PartiteFamily& f);
UniformFamily family_from_json(const Json& j);
PartiteFamily partite_from_json(const Json& j);
// Tokens like "12,23" (one digit per entry) or "1-2,2-3".
UniformFamily parse_edges(const std::string& text, FamilyKind kind = FamilyKind::Sets);

Json to_json(const BoxComplex& c);
Json to_json(const ResolutionCheck& r, const BoxComplex& c);

Json to_json(const BipartiteGraph& g);
BipartiteGraph bipartite_from_json(const Json& j);
Json to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const Json& j);

Json to_json(const GraphClassReport& r);
Json scan_record(const BipartiteGraph& g, const ConjectureReport& r);

struct Fixture {
  std::string name;
  std::string provenance;
  Json data;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::filesystem::path& p);
Fixture load_fixture(const std::filesystem::path& dir, const std::string& name);
std::vector<std::string> list_fixtures(const std::filesystem::path& dir);

}  // namespace skewres
