#include "skewres/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "skewres/errors.hpp"

namespace skewres {

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts[i] >= parts[i - 1])
      throw PreconditionError("partition is not strictly decreasing");
  }
}

bool ShiftedSkewShape::contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

std::vector<Cell> ShiftedSkewShape::staircase_cells() const {
  std::vector<Cell> out;
  for (const Cell& c : cells)
    if (c.col == c.row + 1) out.push_back(c);
  return out;
}

int ShiftedSkewShape::max_label() const {
  int m = 0;
  for (const Cell& c : cells) m = std::max(m, c.col);
  return m;
}

ShiftedSkewShape build_shifted_skew(const StrictPartition& lambda, const StrictPartition& mu) {
  if (mu.size() > lambda.size()) throw PreconditionError("mu has more parts than lambda");
  for (int i = 1; i <= mu.size(); ++i)
    if (mu.part(i) >= lambda.part(i)) throw PreconditionError("mu not contained in lambda");
  ShiftedSkewShape s{lambda, mu, {}};
  for (int i = 1; i <= lambda.size(); ++i)
    for (int j = i + mu.part(i) + 1; j <= i + lambda.part(i); ++j) s.cells.push_back({i, j});
  std::sort(s.cells.begin(), s.cells.end());
  return s;
}

namespace {

void check_increasing(const std::vector<int>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) throw PreconditionError(std::string(what) + " labels must be positive");
    if (i > 0 && v[i] <= v[i - 1])
      throw PreconditionError(std::string(what) + " labels must be strictly increasing");
  }
}

}  // namespace

Diagram::Diagram(std::vector<int> r, std::vector<int> c, std::vector<Cell> cs, bool sh)
    : rows(std::move(r)), cols(std::move(c)), cells(std::move(cs)), shifted(sh) {
  check_increasing(rows, "row");
  check_increasing(cols, "column");
  if (shifted && rows != cols) throw PreconditionError("shifted diagram needs identical row and column labels");
  if (rows.size() > 63 || cols.size() > 63) throw PreconditionError("at most 63 rows and columns");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (const Cell& x : cells) {
    if (row_index(x.row) < 0 || col_index(x.col) < 0)
      throw PreconditionError("cell label not among the row/column labels");
    if (shifted && x.row >= x.col) throw PreconditionError("shifted diagram cell off the shifted plane");
  }
}

bool Diagram::has(Cell c) const { return std::binary_search(cells.begin(), cells.end(), c); }

int Diagram::row_index(int label) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), label);
  return it != rows.end() && *it == label ? static_cast<int>(it - rows.begin()) : -1;
}

int Diagram::col_index(int label) const {
  auto it = std::lower_bound(cols.begin(), cols.end(), label);
  return it != cols.end() && *it == label ? static_cast<int>(it - cols.begin()) : -1;
}

std::vector<Mask> Diagram::row_masks() const {
  std::vector<Mask> r(rows.size(), 0);
  for (const Cell& c : cells) r[row_index(c.row)] |= bit(col_index(c.col));
  return r;
}

Diagram Diagram::restrict_to(const std::vector<int>& xs, const std::vector<int>& ys) const {
  std::vector<Cell> cs;
  for (const Cell& c : cells)
    if (std::binary_search(xs.begin(), xs.end(), c.row) &&
        std::binary_search(ys.begin(), ys.end(), c.col))
      cs.push_back(c);
  return Diagram(xs, ys, std::move(cs), false);
}

Diagram Diagram::restrict_shifted(const std::vector<int>& xs) const {
  if (!shifted) throw PreconditionError("restrict_shifted needs a shifted diagram");
  Diagram d = restrict_to(xs, xs);
  d.shifted = true;
  return d;
}

Diagram Diagram::without_cells(const std::vector<Cell>& drop) const {
  std::vector<Cell> cs;
  for (const Cell& c : cells)
    if (!std::binary_search(drop.begin(), drop.end(), c)) cs.push_back(c);
  return Diagram(rows, cols, std::move(cs), shifted);
}

Diagram Diagram::bipartite_view() const { return Diagram(rows, cols, cells, false); }

BipartiteGraph Diagram::bipartite_graph() const { return BipartiteGraph(rows, cols, row_masks()); }

SimpleGraph Diagram::simple_graph() const {
  if (!shifted) throw PreconditionError("simple_graph needs a shifted diagram");
  std::vector<std::string> names;
  for (int x : rows) names.push_back("x" + std::to_string(x));
  std::vector<std::pair<int, int>> edges;
  for (const Cell& c : cells) edges.emplace_back(row_index(c.row), row_index(c.col));
  return SimpleGraph(std::move(names), std::move(edges));
}

std::string Diagram::ascii() const {
  std::ostringstream os;
  os << "     ";
  for (int y : cols) os << (y < 10 ? "  " : " ") << y;
  os << '\n';
  for (int x : rows) {
    os << (x < 10 ? "   " : "  ") << x << ' ';
    for (int y : cols) os << "  " << (has({x, y}) ? 'X' : '.');
    os << '\n';
  }
  return os.str();
}

Diagram restrict(const ShiftedSkewShape& shape, const std::vector<int>& xs,
                 const std::optional<std::vector<int>>& ys) {
  check_increasing(xs, "row");
  const std::vector<int>& cols = ys ? *ys : xs;
  check_increasing(cols, "column");
  std::vector<Cell> cs;
  for (const Cell& c : shape.cells)
    if (std::binary_search(xs.begin(), xs.end(), c.row) &&
        std::binary_search(cols.begin(), cols.end(), c.col))
      cs.push_back(c);
  return Diagram(xs, cols, std::move(cs), !ys.has_value());
}

std::string to_string(PieceKind k) {
  switch (k) {
    case PieceKind::EmptyRect: return "EmptyRect";
    case PieceKind::FullRect: return "FullRect";
    case PieceKind::Pedestal: return "Pedestal";
  }
  return "?";
}

bool RectDecomposition::has_empty_rect() const {
  return std::any_of(pieces.begin(), pieces.end(),
                     [](const Piece& p) { return p.kind == PieceKind::EmptyRect; });
}

bool RectDecomposition::has_pedestal() const {
  return std::any_of(pieces.begin(), pieces.end(),
                     [](const Piece& p) { return p.kind == PieceKind::Pedestal; });
}

namespace {

struct IndexPiece {
  PieceKind kind;
  Mask rows = 0;
  Mask cols = 0;
  int top_r = -1, top_c = -1;
  int neck_r = -1, neck_c = -1;
};

struct IndexDecomp {
  std::vector<IndexPiece> pieces;
  std::vector<std::pair<int, int>> excess;
  DecompStats stats;
};

void finish(DecompStats& s, bool has_full) {
  s.spherical = !s.has_empty && !s.has_pedestal;
  if (s.has_empty) s.staircase = 0;
  else if (!s.has_pedestal) s.staircase = has_full ? 1 : 0;
}

[[noreturn]] void not_skew() {
  throw PreconditionError(
      "diagram has no top cell and no empty initial row or final column; it is not a "
      "restriction of a shifted skew diagram");
}

template <bool Collect>
void bipartite_core(const std::vector<Mask>& R, Mask xmask, Mask ymask, IndexDecomp& out) {
  DecompStats& s = out.stats;
  bool has_full = false;
  auto has = [&](int i, int j) { return has_bit(R[i], j); };
  while (xmask | ymask) {
    std::vector<int> X = bits_of(xmask), Y = bits_of(ymask);
    const bool top = !X.empty() && !Y.empty() && has(X.front(), Y.back());
    if (!top) {
      std::size_t k = 0;
      while (k < X.size() && (R[X[k]] & ymask) == 0) ++k;
      std::size_t l = Y.size();
      while (l > 0) {
        bool empty = true;
        for (int x : X)
          if (has(x, Y[l - 1])) {
            empty = false;
            break;
          }
        if (!empty) break;
        --l;
      }
      if (k == 0 && l == Y.size()) not_skew();
      Mask xp = 0, yp = 0;
      for (std::size_t t = 0; t < k; ++t) xp |= bit(X[t]);
      for (std::size_t t = l; t < Y.size(); ++t) yp |= bit(Y[t]);
      if constexpr (Collect) out.pieces.push_back({PieceKind::EmptyRect, xp, yp});
      s.has_empty = true;
      xmask &= ~xp;
      ymask &= ~yp;
      continue;
    }
    const int yn = Y.back();
    std::size_t mp = 0;
    for (std::size_t t = 0; t < X.size(); ++t)
      if (has(X[t], yn)) mp = t;
    std::size_t np = Y.size() - 1;
    for (std::size_t t = Y.size(); t-- > 0;)
      if (has(X.front(), Y[t])) np = t;
    Mask xp = 0, yp = 0;
    for (std::size_t t = 0; t <= mp; ++t) xp |= bit(X[t]);
    for (std::size_t t = np; t < Y.size(); ++t) yp |= bit(Y[t]);
    const bool neck = has(X[mp], Y[np]);
    if constexpr (Collect) {
      for (int x : bits_of(xmask & ~xp))
        for (int y : bits_of(R[x] & yp)) out.excess.emplace_back(x, y);
      for (int x : bits_of(xp))
        for (int y : bits_of(R[x] & ymask & ~yp)) out.excess.emplace_back(x, y);
      IndexPiece p{neck ? PieceKind::FullRect : PieceKind::Pedestal, xp, yp, X.front(), yn};
      if (neck) {
        p.neck_r = X[mp];
        p.neck_c = Y[np];
      }
      out.pieces.push_back(p);
    }
    ++s.rect;
    if (!neck) {
      s.has_pedestal = true;
      break;
    }
    has_full = true;
    xmask &= ~xp;
    ymask &= ~yp;
  }
  finish(s, has_full);
}

template <bool Collect>
void shifted_core(const std::vector<Mask>& U, Mask vmask, IndexDecomp& out) {
  DecompStats& s = out.stats;
  bool has_full = false;
  auto has = [&](int a, int b) { return a < b && has_bit(U[a], b); };
  while (vmask) {
    std::vector<int> L = bits_of(vmask);
    const bool top = L.size() >= 2 && has(L.front(), L.back());
    if (!top) {
      std::size_t k = 0;
      while (k < L.size() && (U[L[k]] & vmask) == 0) ++k;
      std::size_t l = L.size();
      while (l > 0) {
        bool empty = true;
        for (int a : L)
          if (has(a, L[l - 1])) {
            empty = false;
            break;
          }
        if (!empty) break;
        --l;
      }
      if (k == 0 && l == L.size()) not_skew();
      Mask xp = 0, yp = 0;
      for (std::size_t t = 0; t < k; ++t) xp |= bit(L[t]);
      for (std::size_t t = l; t < L.size(); ++t) yp |= bit(L[t]);
      if constexpr (Collect) out.pieces.push_back({PieceKind::EmptyRect, xp, yp});
      s.has_empty = true;
      vmask &= ~(xp | yp);
      continue;
    }
    const int yn = L.back();
    std::size_t mp = 0;
    for (std::size_t t = 0; t < L.size(); ++t)
      if (has(L[t], yn)) mp = t;
    std::size_t np = L.size() - 1;
    for (std::size_t t = L.size(); t-- > 0;)
      if (has(L.front(), L[t])) np = t;
    Mask xp = 0, yp = 0;
    for (std::size_t t = 0; t <= mp; ++t) xp |= bit(L[t]);
    for (std::size_t t = np; t < L.size(); ++t) yp |= bit(L[t]);
    const bool neck = has(L[mp], L[np]);
    if constexpr (Collect) {
      for (int a : bits_of(vmask & ~xp))
        for (int b : bits_of(U[a] & yp)) out.excess.emplace_back(a, b);
      for (int a : bits_of(xp))
        for (int b : bits_of(U[a] & vmask & ~yp)) out.excess.emplace_back(a, b);
      IndexPiece p{neck ? PieceKind::FullRect : PieceKind::Pedestal, xp, yp, L.front(), yn};
      if (neck) {
        p.neck_r = L[mp];
        p.neck_c = L[np];
      }
      out.pieces.push_back(p);
    }
    ++s.rect;
    if (!neck) {
      s.has_pedestal = true;
      for (std::size_t t = 0; t + 1 < L.size(); ++t)
        if (has_bit(xp, L[t]) && has_bit(yp, L[t + 1]) && has(L[t], L[t + 1])) ++s.staircase;
      break;
    }
    has_full = true;
    vmask &= ~(xp | yp);
  }
  finish(s, has_full);
}

std::vector<Mask> upper_masks(const Diagram& d) {
  std::vector<Mask> u(d.rows.size(), 0);
  for (const Cell& c : d.cells) u[d.row_index(c.row)] |= bit(d.row_index(c.col));
  return u;
}

}  // namespace

DecompStats decomposition_stats(const std::vector<Mask>& row_masks, Mask xs, Mask ys) {
  IndexDecomp d;
  bipartite_core<false>(row_masks, xs, ys, d);
  return d.stats;
}

DecompStats shifted_decomposition_stats(const std::vector<Mask>& upper, Mask vertices) {
  IndexDecomp d;
  shifted_core<false>(upper, vertices, d);
  return d.stats;
}

RectDecomposition rectangular_decomposition(const Diagram& d) {
  IndexDecomp raw;
  const std::vector<int>& rl = d.rows;
  const std::vector<int>& cl = d.cols;
  if (d.shifted) shifted_core<true>(upper_masks(d), low_mask(static_cast<int>(rl.size())), raw);
  else bipartite_core<true>(d.row_masks(), low_mask(static_cast<int>(rl.size())),
                            low_mask(static_cast<int>(cl.size())), raw);
  auto labels = [](Mask m, const std::vector<int>& names) {
    std::vector<int> out;
    for (int i : bits_of(m)) out.push_back(names[i]);
    return out;
  };
  RectDecomposition r;
  for (const IndexPiece& p : raw.pieces) {
    Piece q;
    q.kind = p.kind;
    q.rows = labels(p.rows, rl);
    q.cols = labels(p.cols, cl);
    if (p.top_r >= 0) q.top_cell = Cell{rl[p.top_r], cl[p.top_c]};
    if (p.neck_r >= 0) q.neck_cell = Cell{rl[p.neck_r], cl[p.neck_c]};
    r.pieces.push_back(std::move(q));
  }
  for (auto [a, b] : raw.excess) r.excess.push_back({rl[a], cl[b]});
  std::sort(r.excess.begin(), r.excess.end());
  r.rectangularity = raw.stats.rect;
  r.spherical = raw.stats.spherical;
  r.staircase_nonexcess = d.shifted ? raw.stats.staircase : 0;
  return r;
}

bool has_pedestal_pattern(const Diagram& d) {
  for (const Cell& c : d.cells)
    for (const Cell& c2 : d.cells)
      if (c.row < c2.row && c.col < c2.col && !d.has({c2.row, c.col})) return true;
  return false;
}

}  // namespace skewres
