#include "skewres/skew_betti.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "skewres/errors.hpp"

namespace skewres {

namespace {

std::vector<std::string> bipartite_names(const Diagram& d) {
  std::vector<std::string> names;
  for (int x : d.rows) names.push_back("x" + std::to_string(x));
  for (int y : d.cols) names.push_back("y" + std::to_string(y));
  return names;
}

std::vector<std::string> shifted_names(const Diagram& d) {
  std::vector<std::string> names;
  for (int x : d.rows) names.push_back("x" + std::to_string(x));
  return names;
}

// Calls f(xs, ys) for every pair of row/column index subsets that can be spherical (every
// chosen row meets a chosen column and vice versa) or, without pruning, for every pair.
template <class F>
void for_each_restriction(const std::vector<Mask>& R, int m, int n, bool prune, F&& f) {
  for_each_submask_ascending(low_mask(m), [&](Mask xs) {
    Mask reach = 0;
    for (int x : bits_of(xs)) reach |= R[x];
    const Mask ypool = prune ? reach : low_mask(n);
    for_each_submask_ascending(ypool, [&](Mask ys) {
      if (prune) {
        if ((xs | ys) == 0) return;
        for (int x : bits_of(xs))
          if ((R[x] & ys) == 0) return;
        Mask seen = 0;
        for (int x : bits_of(xs)) seen |= R[x] & ys;
        if (seen != ys) return;
      }
      f(xs, ys);
    });
  });
}

}  // namespace

BettiTable betti_bipartite_closed(const Diagram& input, bool prune) {
  const Diagram d = input.shifted ? input.bipartite_view() : input;
  const int m = static_cast<int>(d.rows.size());
  const int n = static_cast<int>(d.cols.size());
  if (m + n > 63) throw PreconditionError("diagram too large");
  BettiTable t;
  t.vertex_names = bipartite_names(d);
  t.field = Field{0};
  const auto R = d.row_masks();
  for_each_restriction(R, m, n, prune, [&](Mask xs, Mask ys) {
    if ((xs | ys) == 0) return;
    const DecompStats s = decomposition_stats(R, xs, ys);
    if (!s.spherical || s.rect == 0) return;
    const int i = popcount(xs) + popcount(ys) - s.rect - 1;
    if (i >= 0) t.add(i, xs | (ys << m), 1);
  });
  return t;
}

BettiTable specialize_table(const BettiTable& bip, int n, const std::vector<std::string>& names) {
  BettiTable t;
  t.vertex_names = names;
  t.field = bip.field;
  for (const auto& [k, v] : bip.entries) {
    const Mask xs = k.second & low_mask(n);
    const Mask ys = k.second >> n;
    if ((xs & ys) == 0) t.add(k.first, xs | ys, v);
  }
  return t;
}

std::vector<std::pair<int, Mask>> overlapping_entries(const BettiTable& bip, int n) {
  std::vector<std::pair<int, Mask>> out;
  for (const auto& [k, v] : bip.entries)
    if (((k.second & low_mask(n)) & (k.second >> n)) != 0) out.push_back(k);
  return out;
}

BettiTable betti_nonbipartite(const Diagram& d, NonbipMode mode) {
  if (!d.shifted) throw PreconditionError("nonbipartite Betti numbers need a shifted diagram");
  const int n = static_cast<int>(d.rows.size());
  const auto names = shifted_names(d);
  if (mode == NonbipMode::Specialize)
    return specialize_table(betti_bipartite_closed(d.bipartite_view()), n, names);

  std::vector<Mask> U(n, 0), nb(n, 0);
  for (const Cell& c : d.cells) {
    const int a = d.row_index(c.row), b = d.row_index(c.col);
    U[a] |= bit(b);
    nb[a] |= bit(b);
    nb[b] |= bit(a);
  }
  BettiTable t;
  t.vertex_names = names;
  t.field = Field{0};
  for_each_submask_ascending(low_mask(n), [&](Mask z) {
    if (z == 0) return;
    for (int v : bits_of(z))
      if ((nb[v] & z) == 0) return;
    const DecompStats s = shifted_decomposition_stats(U, z);
    if (s.has_empty || s.rect == 0 || s.staircase == 0) return;
    const int i = popcount(z) - s.rect - 1;
    if (i >= 0) t.add(i, z, s.staircase);
  });
  return t;
}

RegularityPd regularity_and_pd(const Diagram& input) {
  const Diagram d = input.shifted ? input.bipartite_view() : input;
  RegularityPd r;
  if (d.cells.empty()) return r;
  const int m = static_cast<int>(d.rows.size());
  const int n = static_cast<int>(d.cols.size());
  const auto R = d.row_masks();
  r.regularity = decomposition_stats(R, low_mask(m), low_mask(n)).rect + 1;
  for_each_restriction(R, m, n, true, [&](Mask xs, Mask ys) {
    const DecompStats s = decomposition_stats(R, xs, ys);
    if (!s.spherical || s.rect == 0) return;
    const int i = popcount(xs) + popcount(ys) - s.rect - 1;
    r.projective_dimension = std::max(r.projective_dimension.value_or(i), i);
  });
  return r;
}

int maximum_matching(const BipartiteGraph& g) {
  std::vector<int> match_col(g.n(), -1);
  std::function<bool(int, Mask&)> augment = [&](int x, Mask& seen) {
    for (int y : bits_of(g.rows[x])) {
      if (has_bit(seen, y)) continue;
      seen |= bit(y);
      if (match_col[y] < 0 || augment(match_col[y], seen)) {
        match_col[y] = x;
        return true;
      }
    }
    return false;
  };
  int nu = 0;
  for (int x = 0; x < g.m(); ++x) {
    Mask seen = 0;
    if (augment(x, seen)) ++nu;
  }
  return nu;
}

KrullReport krull_dimension(const BipartiteGraph& g) {
  KrullReport k;
  k.vertices = g.m() + g.n();
  k.nu = maximum_matching(g);
  k.alpha = k.vertices - k.nu;
  k.rho = k.nu;
  if (!g.has_isolated_vertex()) k.tau = k.vertices - k.nu;
  return k;
}

FerrersShape::FerrersShape(std::vector<int> l) : lambda(std::move(l)) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw PreconditionError("Ferrers parts must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw PreconditionError("Ferrers shape must be weakly decreasing");
  }
}

int FerrersShape::cells() const {
  int c = 0;
  for (int p : lambda) c += p;
  return c;
}

Diagram ferrers_diagram(const FerrersShape& s) {
  std::vector<int> rows, cols;
  std::vector<Cell> cells;
  for (int r = 1; r <= s.rows(); ++r) {
    rows.push_back(r);
    for (int c = 1; c <= s.lambda[r - 1]; ++c) cells.push_back({r, c});
  }
  for (int c = 1; c <= (s.rows() ? s.lambda[0] : 0); ++c) cols.push_back(c);
  return Diagram(rows, cols, cells, false);
}

std::vector<std::int64_t> alpha_profile(const FerrersShape& s) {
  if (s.rows() == 0) return {};
  std::vector<std::int64_t> a(static_cast<std::size_t>(s.rows() + s.lambda[0] - 1), 0);
  for (int r = 1; r <= s.rows(); ++r)
    for (int c = 1; c <= s.lambda[r - 1]; ++c) ++a[r + c - 2];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::int64_t ferrers_partial(const FerrersShape& s, int i, Mask rows) {
  if (rows == 0) return 0;
  const int size = popcount(rows);
  if (size >= i + 2) return 0;
  const int last = 63 - std::countl_zero(rows);
  return binomial(s.lambda[last], i - size + 2);
}

namespace {

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

FerrersReport ferrers_betti(const FerrersShape& s) {
  FerrersReport rep;
  const int m = s.rows();
  const Diagram d = ferrers_diagram(s);
  rep.fine.vertex_names = bipartite_names(d);
  rep.fine.field = Field{0};
  rep.alpha = alpha_profile(s);
  if (m == 0) {
    rep.routes_agree = true;
    return rep;
  }
  const int len = m + s.lambda[0];
  for_each_submask_ascending(low_mask(m), [&](Mask xs) {
    if (xs == 0) return;
    const int common = s.lambda[63 - std::countl_zero(xs)];
    for_each_submask_ascending(low_mask(common), [&](Mask ys) {
      if (ys == 0) return;
      rep.fine.add(popcount(xs) + popcount(ys) - 2, xs | (ys << m), 1);
    });
  });
  rep.coarse = rep.fine.totals();

  std::vector<std::int64_t> a(len, 0), b(len, 0), c(len, 0), e(len, 0);
  for (int i = 0; i < len; ++i) {
    for (Mask xs = 1; xs < bit(m); ++xs) {
      const int common = s.lambda[63 - std::countl_zero(xs)];
      a[i] += binomial(common, i + 2 - popcount(xs)) * (i + 2 - popcount(xs) >= 1 ? 1 : 0);
    }
    for (int r = 1; r <= m; ++r)
      for (int col = 1; col <= s.lambda[r - 1]; ++col) b[i] += binomial(r + col - 2, i);
    for (std::size_t k = 0; k < rep.alpha.size(); ++k)
      c[i] += rep.alpha[k] * binomial(static_cast<std::int64_t>(k), i);
    for (int r = 1; r <= m; ++r) e[i] += binomial(s.lambda[r - 1] + r - 1, i + 1);
    e[i] -= binomial(m, i + 2);
  }
  rep.routes = {trimmed(a), trimmed(b), trimmed(c), trimmed(e)};
  rep.routes_agree = std::all_of(rep.routes.begin(), rep.routes.end(),
                                 [&](const auto& r) { return r == rep.coarse; });
  return rep;
}

int minimum_row_size(const Diagram& d) {
  if (d.rows.empty()) return 0;
  int k = static_cast<int>(d.cols.size());
  for (Mask r : d.row_masks()) k = std::min(k, popcount(r));
  return k;
}

std::vector<std::vector<int>> spherical_column_subsets(const Diagram& input, int j) {
  const Diagram d = input.shifted ? input.bipartite_view() : input;
  const int k = minimum_row_size(d);
  if (j < 1 || j > k) throw PreconditionError("j must lie between 1 and the minimum row size");
  const int m = static_cast<int>(d.rows.size());
  const int n = static_cast<int>(d.cols.size());
  const auto R = d.row_masks();
  auto column_length = [&](int y, Mask xs) {
    int c = 0;
    for (int x : bits_of(xs))
      if (has_bit(R[x], y)) ++c;
    return c;
  };
  // Rows from the top of xs down to the last one meeting column y.
  auto rows_through = [&](int y, Mask xs) {
    Mask out = 0, acc = 0;
    for (int x : bits_of(xs)) {
      acc |= bit(x);
      if (has_bit(R[x], y)) out = acc;
    }
    return out;
  };
  auto by_length = [&](Mask cols, Mask xs) {
    std::vector<int> c = bits_of(cols);
    std::stable_sort(c.begin(), c.end(), [&](int a, int b) {
      return column_length(a, xs) > column_length(b, xs);
    });
    return c;
  };

  const Mask all_rows = low_mask(m);
  const Mask top_cols = R[0];
  std::vector<int> longest = by_length(top_cols, all_rows);
  longest.resize(static_cast<std::size_t>(k));
  std::sort(longest.begin(), longest.end());

  std::set<Mask> found;
  for_each_submask_ascending(mask_of(longest), [&](Mask y0) {
    if (popcount(y0) != j) return;
    Mask chosen = y0;
    Mask xs = all_rows & ~rows_through(63 - std::countl_zero(y0), all_rows);
    Mask ys = low_mask(n) & ~top_cols;
    while (xs) {
      const int top = std::countr_zero(xs);
      const Mask meet = R[top] & ys;
      if (!meet) return;
      const int pick = by_length(meet, xs).front();
      chosen |= bit(pick);
      xs &= ~rows_through(pick, xs);
      ys &= ~meet;
    }
    const DecompStats s = decomposition_stats(R, all_rows, chosen);
    if (s.spherical && s.rect == popcount(chosen) - j + 1) found.insert(chosen);
  });
  std::vector<std::vector<int>> out;
  for (Mask c : found) {
    std::vector<int> labels;
    for (int y : bits_of(c)) labels.push_back(d.cols[y]);
    out.push_back(std::move(labels));
  }
  return out;
}

std::vector<std::int64_t> rook_numbers(const Diagram& board, int r_max) {
  const int n = static_cast<int>(board.cols.size());
  std::vector<Mask> colmask(n, 0);  // rows occupied by each column
  for (const Cell& c : board.cells) colmask[board.col_index(c.col)] |= bit(board.row_index(c.row));
  std::map<std::pair<int, Mask>, std::vector<std::int64_t>> memo;
  std::function<std::vector<std::int64_t>(int, Mask)> go = [&](int col, Mask used) {
    if (col == n) {
      std::vector<std::int64_t> base(r_max + 1, 0);
      base[0] = 1;
      return base;
    }
    auto key = std::make_pair(col, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::int64_t> res = go(col + 1, used);
    for (int r : bits_of(colmask[col] & ~used)) {
      auto sub = go(col + 1, used | bit(r));
      for (int t = 0; t < r_max; ++t) res[t + 1] += sub[t];
    }
    memo[key] = res;
    return res;
  };
  if (r_max < 0) return {};
  return go(0, 0);
}

RookReport rook_tools(const FerrersShape& a, const FerrersShape& b, int r_max) {
  RookReport r;
  r.counts_a = rook_numbers(ferrers_diagram(a), r_max);
  r.counts_b = rook_numbers(ferrers_diagram(b), r_max);
  r.rook_equal = r.counts_a == r.counts_b;
  r.alpha_equal = alpha_profile(a) == alpha_profile(b);
  r.betti_equal = ferrers_betti(a).coarse == ferrers_betti(b).coarse;
  return r;
}

}  // namespace skewres
