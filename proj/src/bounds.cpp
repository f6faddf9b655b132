#include "skewres/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "skewres/errors.hpp"

namespace skewres {

bool GraphClassReport::same_flags(const GraphClassReport& o) const {
  return row_nested == o.row_nested && nearly_row_nested == o.nearly_row_nested &&
         horizontal == o.horizontal && horizontal_vertical == o.horizontal_vertical;
}

namespace {

InducedWitness make_witness(const BipartiteGraph& g, std::string pattern, Mask xs, Mask ys) {
  InducedWitness w;
  w.pattern = std::move(pattern);
  for (int i : bits_of(xs)) w.xs.push_back(g.x_labels[i]);
  for (int j : bits_of(ys)) w.ys.push_back(g.y_labels[j]);
  return w;
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

std::vector<int> column_degrees(const BipartiteGraph& g) {
  std::vector<int> out(g.n());
  for (int j = 0; j < g.n(); ++j) out[j] = popcount(g.column(j));
  return out;
}

GraphClassReport classify_by_definition(const BipartiteGraph& g) {
  GraphClassReport r;
  const int m = g.m();
  r.row_nested = true;
  for (int a = 0; a < m && r.row_nested; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!subset(g.rows[a], g.rows[b]) && !subset(g.rows[b], g.rows[a])) {
        r.row_nested = false;
        r.row_nested_witness = make_witness(g, "incomparable rows", bit(a) | bit(b), 0);
        break;
      }

  r.nearly_row_nested = true;
  for (int a = 0; a < m && r.nearly_row_nested; ++a)
    for (int b = 0; b < m; ++b) {
      if (popcount(g.rows[a]) < popcount(g.rows[b]) && !subset(g.rows[a], g.rows[b])) {
        r.nearly_row_nested = false;
        r.nearly_row_nested_witness =
            make_witness(g, "smaller row not contained in larger row", bit(a) | bit(b), 0);
        break;
      }
    }
  if (r.nearly_row_nested) {
    std::set<int> sizes;
    for (Mask row : g.rows) sizes.insert(popcount(row));
    for (int c : sizes) {
      Mask inter = ~Mask{0};
      Mask group = 0;
      for (int a = 0; a < m; ++a)
        if (popcount(g.rows[a]) == c) {
          inter &= g.rows[a];
          group |= bit(a);
        }
      int s = popcount(inter);
      if (s != c && s != c - 1) {
        r.nearly_row_nested = false;
        r.nearly_row_nested_witness = make_witness(g, "rows of equal size share too little", group, 0);
        break;
      }
    }
  }

  auto cdeg = column_degrees(g);
  r.horizontal = true;
  for (int j = 0; j < g.n(); ++j)
    if (cdeg[j] > 1) {
      r.horizontal = false;
      r.horizontal_witness = make_witness(g, "column of degree > 1", g.column(j), bit(j));
      break;
    }

  auto xdeg = g.x_degrees();
  r.horizontal_vertical = true;
  for (int a = 0; a < m && r.horizontal_vertical; ++a)
    for (int j : bits_of(g.rows[a]))
      if (xdeg[a] > 1 && cdeg[j] > 1) {
        r.horizontal_vertical = false;
        r.horizontal_vertical_witness =
            make_witness(g, "edge with both ends of degree > 1", bit(a), bit(j));
        break;
      }
  return r;
}

// Calls f(xs, ys) over induced subgraphs with |xs| = a and |ys| = b until f returns true.
template <class F>
bool search_induced(const BipartiteGraph& g, int a, int b, F&& f) {
  if (a > g.m() || b > g.n()) return false;
  for (Mask xs = 0; xs < (Mask{1} << g.m()); ++xs) {
    if (popcount(xs) != a) continue;
    for (Mask ys = 0; ys < (Mask{1} << g.n()); ++ys) {
      if (popcount(ys) != b) continue;
      if (f(xs, ys)) return true;
    }
  }
  return false;
}

struct InducedShape {
  int edges = 0;
  std::vector<int> xdeg, ydeg;
};

InducedShape shape_of(const BipartiteGraph& g, Mask xs, Mask ys) {
  InducedShape s;
  for (int i : bits_of(xs)) {
    int d = popcount(g.rows[i] & ys);
    s.xdeg.push_back(d);
    s.edges += d;
  }
  for (int j : bits_of(ys)) s.ydeg.push_back(popcount(g.column(j) & xs));
  std::sort(s.xdeg.begin(), s.xdeg.end());
  std::sort(s.ydeg.begin(), s.ydeg.end());
  return s;
}

GraphClassReport classify_by_forbidden(const BipartiteGraph& g) {
  GraphClassReport r;
  std::optional<InducedWitness> w;
  auto find = [&](int a, int b, const std::string& name, auto pred) {
    return search_induced(g, a, b, [&](Mask xs, Mask ys) {
      if (!pred(shape_of(g, xs, ys))) return false;
      w = make_witness(g, name, xs, ys);
      return true;
    });
  };
  auto two_k2 = [](const InducedShape& s) {
    return s.edges == 2 && s.xdeg == std::vector<int>{1, 1} && s.ydeg == std::vector<int>{1, 1};
  };
  auto six_cycle = [](const InducedShape& s) {
    return s.edges == 6 && s.xdeg == std::vector<int>{2, 2, 2} && s.ydeg == std::vector<int>{2, 2, 2};
  };
  auto edge_and_y_path = [](const InducedShape& s) {
    return s.edges == 3 && s.xdeg == std::vector<int>{1, 2} && s.ydeg == std::vector<int>{1, 1, 1};
  };
  auto x_path = [](const InducedShape& s) { return s.edges == 2; };
  auto p4_or_c4 = [](const InducedShape& s) { return s.edges >= 3; };

  r.row_nested = !find(2, 2, "2K2", two_k2);
  if (!r.row_nested) r.row_nested_witness = w;

  w.reset();
  bool bad = find(3, 3, "6-cycle", six_cycle) ||
             find(2, 3, "edge plus 2-path with Y endpoints", edge_and_y_path);
  r.nearly_row_nested = !bad;
  if (bad) r.nearly_row_nested_witness = w;

  w.reset();
  r.horizontal = !find(2, 1, "2-path with X endpoints", x_path);
  if (!r.horizontal) r.horizontal_witness = w;

  w.reset();
  r.horizontal_vertical = !find(2, 2, "P4 or C4", p4_or_c4);
  if (!r.horizontal_vertical) r.horizontal_vertical_witness = w;
  return r;
}

std::int64_t degree_of(const BipartiteGraph& g, Mask xs) {
  std::int64_t d = 0;
  for (int i : bits_of(xs)) d += popcount(g.rows[i]);
  return d;
}

}  // namespace

GraphClassReport classify_bipartite(const BipartiteGraph& g, ClassifyMethod method) {
  return method == ClassifyMethod::Definition ? classify_by_definition(g) : classify_by_forbidden(g);
}

BipartiteModels bipartite_models(const BipartiteGraph& g) {
  auto deg = g.x_degrees();
  int maxd = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  int total = std::accumulate(deg.begin(), deg.end(), 0);
  if (total > 63) throw PreconditionError("too many edges for the horizontal model");
  std::vector<int> ry(maxd), hy(total);
  std::iota(ry.begin(), ry.end(), 1);
  std::iota(hy.begin(), hy.end(), 1);
  std::vector<Mask> rrows, hrows;
  int offset = 0;
  for (int d : deg) {
    rrows.push_back(low_mask(d));
    hrows.push_back(low_mask(d) << offset);
    offset += d;
  }
  return {BipartiteGraph(g.x_labels, ry, rrows), BipartiteGraph(g.x_labels, hy, hrows)};
}

std::int64_t lower_bound_value(const BipartiteGraph& g, int i, Mask xprime) {
  if (xprime == 0) return 0;
  int k = popcount(xprime);
  if (k >= i + 2) return 0;
  auto deg = g.x_degrees();
  int mindeg = std::numeric_limits<int>::max();
  for (int a : bits_of(xprime)) mindeg = std::min(mindeg, deg[a]);
  return binomial(mindeg, i - k + 2);
}

std::int64_t upper_bound_value(const BipartiteGraph& g, int i, Mask xprime) {
  std::int64_t total = 0;
  int k = popcount(xprime);
  for_each_submask_ascending(xprime, [&](Mask t) {
    std::int64_t term = binomial(degree_of(g, t), i + 1);
    total += ((k - popcount(t)) % 2 == 0) ? term : -term;
  });
  return total;
}

std::int64_t upper_bound_cumulative(const BipartiteGraph& g, int i, Mask xprime) {
  return binomial(degree_of(g, xprime), i + 1);
}

std::vector<std::vector<std::int64_t>> x_partial_table(const BipartiteGraph& g, const BettiTable& t) {
  const int m = g.m();
  const int levels = g.m() + g.n() + 1;
  std::vector<std::vector<std::int64_t>> out(levels, std::vector<std::int64_t>(std::size_t{1} << m, 0));
  for (const auto& [key, v] : t.entries) {
    auto [i, support] = key;
    if (i >= levels) throw PreconditionError("homological degree beyond the vertex count");
    out[i][support & g.x_part()] += v;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::OracleTooLarge: return "oracle-too-large";
  }
  return "?";
}

namespace {

std::vector<BettiTable> graph_tables(const BipartiteGraph& g, const std::vector<Field>& fields,
                                     int max_vertices) {
  if (g.m() + g.n() > max_vertices)
    throw OracleLimitError("graph has " + std::to_string(g.m() + g.n()) + " vertices, limit " +
                           std::to_string(max_vertices));
  auto sg = g.as_simple();
  if (sg.edges.empty()) {
    std::vector<BettiTable> out;
    for (const Field& f : fields) out.push_back(BettiTable{sg.names, f, {}});
    return out;
  }
  HochsterOptions opt;
  opt.fields = fields;
  return hochster_betti_tables(sg.edge_supports(), sg.names, opt);
}

std::vector<std::vector<std::int64_t>> partial_for(const BipartiteGraph& g, int max_vertices) {
  auto t = graph_tables(g, {Field{0}}, max_vertices);
  return x_partial_table(g, t[0]);
}

std::int64_t lookup(const std::vector<std::vector<std::int64_t>>& p, int i, Mask x) {
  if (i < 0 || i >= static_cast<int>(p.size())) return 0;
  return p[i][x];
}

}  // namespace

ConjectureReport check_bipartite_conjecture(const BipartiteGraph& g, const std::vector<Field>& fields,
                                            int max_vertices) {
  ConjectureReport rep;
  rep.fields = fields;
  rep.classes = classify_bipartite(g, ClassifyMethod::Definition);
  std::vector<BettiTable> tables;
  try {
    tables = graph_tables(g, fields, max_vertices);
  } catch (const OracleLimitError&) {
    rep.lower = rep.upper = Verdict::OracleTooLarge;
    return rep;
  }
  std::vector<std::vector<std::vector<std::int64_t>>> partials;
  for (const auto& t : tables) partials.push_back(x_partial_table(g, t));
  const int levels = g.m() + g.n() + 1;
  bool lower_ok = true, upper_ok = true;
  for (int i = 0; i < levels; ++i)
    for (Mask x = 0; x < (Mask{1} << g.m()); ++x) {
      BoundEntry e;
      e.i = i;
      e.xprime = x;
      e.lower = lower_bound_value(g, i, x);
      e.upper = upper_bound_value(g, i, x);
      e.upper_cumulative = upper_bound_cumulative(g, i, x);
      for (const auto& p : partials) e.values.push_back(p[i][x]);
      for (std::int64_t v : e.values) {
        if (v != e.values.front()) rep.fields_agree = false;
        if (v < e.lower) lower_ok = false;
        if (v > e.upper) upper_ok = false;
        if (v > e.upper_cumulative) rep.upper_cumulative_holds = false;
        if (v != e.lower) rep.lower_tight_all = false;
        if (v != e.upper) rep.upper_tight_all = false;
      }
      rep.entries.push_back(std::move(e));
    }
  rep.lower = lower_ok ? Verdict::Holds : Verdict::Violated;
  rep.upper = upper_ok ? Verdict::Holds : Verdict::Violated;
  rep.lower_prediction_ok = rep.lower_tight_all == rep.classes.nearly_row_nested;
  rep.upper_prediction_ok = rep.upper_tight_all == rep.classes.horizontal_vertical;
  return rep;
}

ReductionReport reductions(const BipartiteGraph& g, int max_vertices) {
  ReductionReport rep;
  auto base = partial_for(g, max_vertices);
  const int levels = g.m() + g.n() + 1;
  const Mask all_x = g.x_part();
  for (int j = 0; j < g.n(); ++j) {
    if (g.column(j) != all_x || g.m() == 0) continue;
    auto smaller = partial_for(g.without_column(j), max_vertices);
    for (int i = 0; i < levels; ++i)
      for (Mask x = 0; x <= all_x; ++x) {
        ++rep.full_column_checks;
        std::int64_t rhs = (x != 0 && i == popcount(x) - 1 ? 1 : 0) + lookup(smaller, i, x) +
                           lookup(smaller, i - 1, x);
        if (lookup(base, i, x) != rhs)
          rep.failures.push_back("full column y" + std::to_string(g.y_labels[j]) + " at i=" +
                                 std::to_string(i));
      }
  }
  for (int a = 0; a < g.m(); ++a)
    for (int b = 0; b < g.m(); ++b) {
      if (a == b || !subset(g.rows[b], g.rows[a])) continue;
      auto smaller = partial_for(g.without_row(a), max_vertices);
      Mask rest = low_mask(g.m() - 1);
      for (int i = 0; i < levels; ++i) {
        ++rep.nested_row_checks;
        if (lookup(base, i, all_x) != lookup(smaller, i - 1, rest))
          rep.failures.push_back("nested rows x" + std::to_string(g.x_labels[b]) + " in x" +
                                 std::to_string(g.x_labels[a]) + " at i=" + std::to_string(i));
      }
    }
  return rep;
}

ColexCheck check_colex_lower_bound(const UniformFamily& k, const std::vector<Field>& fields,
                                   int max_vertices) {
  if (k.kind != FamilyKind::Sets) throw PreconditionError("colex bound needs a squarefree family");
  ColexCheck rep;
  rep.fields = fields;
  rep.bound = colex_closed_form(static_cast<std::int64_t>(k.members.size()), k.d);
  auto ideal = family_ideal(k);
  try {
    for (const Field& f : fields) rep.betti.push_back(oracle_betti(ideal, f, max_vertices));
  } catch (const OracleLimitError&) {
    rep.betti.clear();
    rep.verdict = Verdict::OracleTooLarge;
    return rep;
  }
  std::size_t len = rep.bound.size();
  for (const auto& b : rep.betti) len = std::max(len, b.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::int64_t bound = i < rep.bound.size() ? rep.bound[i] : 0;
    for (const auto& b : rep.betti) {
      std::int64_t v = i < b.size() ? b[i] : 0;
      if (v < bound) {
        rep.violations.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  rep.verdict = rep.violations.empty() ? Verdict::Holds : Verdict::Violated;
  return rep;
}

namespace {

std::uint64_t canonical_from_bits(const std::vector<std::vector<int>>& mat, int m, int n) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::vector<std::uint64_t> cols(n, 0);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < m; ++r)
        if (mat[perm[r]][c]) cols[c] |= std::uint64_t{1} << (m - 1 - r);
    std::sort(cols.begin(), cols.end());
    std::uint64_t code = 0;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c)
        if ((cols[c] >> (m - 1 - r)) & 1) code |= std::uint64_t{1} << (m * n - 1 - (r * n + c));
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BipartiteGraph graph_from_code(std::uint64_t code, int m, int n) {
  std::vector<std::vector<int>> rows(m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      if ((code >> (m * n - 1 - (r * n + c))) & 1) rows[r].push_back(c);
  return BipartiteGraph::from_rows(rows, n);
}

}  // namespace

std::uint64_t canonical_code(const BipartiteGraph& g) {
  if (g.m() * g.n() > 30) throw PreconditionError("graph too large for canonical form");
  return canonical_from_bits(g.biadjacency(), g.m(), g.n());
}

bool is_connected(const BipartiteGraph& g) {
  const int total = g.m() + g.n();
  if (total <= 1) return true;
  auto nb = g.as_simple().neighbourhoods();
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (int v : bits_of(frontier)) next |= nb[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_mask(total);
}

std::vector<BipartiteGraph> enumerate_bipartite(int m, int n, const EnumerationFilter& filter) {
  if (m < 0 || n < 0) throw PreconditionError("part sizes must be nonnegative");
  if (m * n > 20 || m > 8) throw OracleLimitError("enumeration limited to m*n <= 20");
  std::vector<BipartiteGraph> out;
  const std::uint64_t limit = std::uint64_t{1} << (m * n);
  for (std::uint64_t code = 0; code < limit; ++code) {
    BipartiteGraph g = graph_from_code(code, m, n);
    if (canonical_from_bits(g.biadjacency(), m, n) != code) continue;
    if (filter.no_isolated_x && g.has_isolated_x()) continue;
    if (filter.no_isolated_y) {
      bool iso = false;
      for (int j = 0; j < n; ++j) iso = iso || g.column(j) == 0;
      if (iso) continue;
    }
    if (filter.connected && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace skewres
