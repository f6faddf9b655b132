#include "skewres/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skewres/errors.hpp"

namespace skewres {

std::string Field::name() const {
  return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

Field Field::parse(const std::string& s) {
  if (s == "Q" || s == "QQ") return Field{0};
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    int p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad field: " + s);
      p = p * 10 + (s[i] - '0');
      if (p > 1000000) throw ParseError("bad field: " + s);
    }
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d)
      if (p % d == 0) prime = false;
    if (!prime) throw ParseError("field characteristic must be prime: " + s);
    return Field{p};
  }
  throw ParseError("bad field: " + s);
}

namespace {

struct Overflow {};

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  __int128 r = static_cast<__int128>(a) - static_cast<__int128>(f) * b;
  if (r > INT64_MAX || r < -INT64_MAX) throw Overflow{};
  return static_cast<std::int64_t>(r);
}

using Dense = std::vector<std::vector<BigInt>>;

// Diagonal of a Smith form of a, each entry positive and dividing the next.
std::vector<BigInt> dense_smith(Dense a) {
  std::vector<BigInt> diag;
  const std::size_t R = a.size();
  const std::size_t C = R ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    std::size_t pi = R, pj = C;
    BigInt best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == R) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R && clean; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[i], a[t]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < C && clean; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot now isolated; enforce divisibility of the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < C; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<BigInt> dense_from_entries(const SparseMatrix& m) {
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const auto& [rc, v] : m.entries) acc[rc] += v;
  std::map<int, int> ri, ci;
  for (const auto& [rc, v] : acc)
    if (v != 0) {
      ri.emplace(rc.first, 0);
      ci.emplace(rc.second, 0);
    }
  int k = 0;
  for (auto& [r, idx] : ri) idx = k++;
  k = 0;
  for (auto& [c, idx] : ci) idx = k++;
  Dense a(ri.size(), std::vector<BigInt>(ci.size(), BigInt(0)));
  for (const auto& [rc, v] : acc)
    if (v != 0) a[ri[rc.first]][ci[rc.second]] = v;
  return dense_smith(std::move(a));
}

// Eliminates unit pivots sparsely, then hands the remainder to dense_smith.
std::vector<BigInt> sparse_then_dense(const SparseMatrix& m) {
  std::vector<std::map<int, std::int64_t>> rows(m.rows);
  std::vector<std::set<int>> cols(m.cols);
  for (const auto& [rc, v] : m.entries) {
    auto& slot = rows[rc.first][rc.second];
    slot += v;
  }
  for (int r = 0; r < m.rows; ++r) {
    for (auto it = rows[r].begin(); it != rows[r].end();) {
      if (it->second == 0) {
        it = rows[r].erase(it);
      } else {
        cols[it->first].insert(r);
        ++it;
      }
    }
  }

  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      if (cols[c].empty()) continue;
      int best = -1;
      std::size_t best_len = 0;
      for (int r : cols[c]) {
        std::int64_t v = rows[r].at(c);
        if ((v == 1 || v == -1) && (best < 0 || rows[r].size() < best_len)) {
          best = r;
          best_len = rows[r].size();
        }
      }
      if (best < 0) continue;
      const std::int64_t a = rows[best].at(c);
      std::vector<int> others(cols[c].begin(), cols[c].end());
      for (int r2 : others) {
        if (r2 == best) continue;
        std::int64_t f = rows[r2].at(c) * a;
        for (const auto& [cc, v] : rows[best]) {
          auto it = rows[r2].find(cc);
          std::int64_t cur = it == rows[r2].end() ? 0 : it->second;
          std::int64_t nv = checked_sub_mul(cur, f, v);
          if (nv == 0) {
            if (it != rows[r2].end()) rows[r2].erase(it);
            cols[cc].erase(r2);
          } else {
            rows[r2][cc] = nv;
            cols[cc].insert(r2);
          }
        }
      }
      for (const auto& [cc, v] : rows[best]) cols[cc].erase(best);
      rows[best].clear();
      ++units;
      progress = true;
    }
  }

  SparseMatrix rest;
  rest.rows = m.rows;
  rest.cols = m.cols;
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : rows[r]) rest.add(r, c, v);
  std::vector<BigInt> out(units, BigInt(1));
  for (auto& d : dense_from_entries(rest)) out.push_back(std::move(d));
  return out;
}

}  // namespace

std::vector<BigInt> invariant_factors(const SparseMatrix& m) {
  if (m.entries.empty()) return {};
  try {
    return sparse_then_dense(m);
  } catch (const Overflow&) {
    return dense_from_entries(m);
  }
}

std::int64_t RankData::rank_mod(int p) const {
  if (p == 0) return rational_rank;
  std::int64_t r = rational_rank;
  for (const auto& f : nonunit_factors)
    if (f % p == 0) --r;
  return r;
}

RankData rank_data(const SparseMatrix& m) {
  RankData d;
  auto inv = invariant_factors(m);
  d.rational_rank = static_cast<std::int64_t>(inv.size());
  for (auto& f : inv)
    if (f > 1) d.nonunit_factors.push_back(f);
  return d;
}

std::int64_t HomologyProfile::rank(int degree, const Field& f) const {
  int k = degree - lowest_degree;
  if (k < 0 || k >= static_cast<int>(rational.size())) return 0;
  if (f.characteristic == 0) return rational[k];
  auto it = modular.find(f.characteristic);
  if (it == modular.end())
    throw PreconditionError("homology not computed over " + f.name());
  return it->second[k];
}

bool HomologyProfile::acyclic(const Field& f) const { return support(f).empty(); }

std::vector<int> HomologyProfile::support(const Field& f) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(rational.size()); ++k)
    if (rank(lowest_degree + k, f) != 0) out.push_back(lowest_degree + k);
  return out;
}

HomologyProfile homology(const ChainComplex& c, const std::vector<int>& primes) {
  const int n = static_cast<int>(c.ranks.size());
  std::vector<RankData> bd(n + 1);
  for (int k = 1; k < n; ++k) bd[k] = rank_data(c.boundary[k]);

  HomologyProfile h;
  h.lowest_degree = c.lowest_degree;
  h.rational.assign(n, 0);
  h.torsion.assign(n, {});
  for (int p : primes) h.modular[p].assign(n, 0);
  std::set<int> tp;
  for (int k = 0; k < n; ++k) {
    auto out_rank = [&](int p) { return k >= 1 ? bd[k].rank_mod(p) : 0; };
    auto in_rank = [&](int p) { return k + 1 < n ? bd[k + 1].rank_mod(p) : 0; };
    h.rational[k] = c.ranks[k] - out_rank(0) - in_rank(0);
    for (int p : primes) h.modular[p][k] = c.ranks[k] - out_rank(p) - in_rank(p);
    if (k + 1 < n) {
      h.torsion[k] = bd[k + 1].nonunit_factors;
      for (const auto& f : h.torsion[k]) {
        BigInt v = f;
        for (int q = 2; BigInt(q) * q <= v; ++q)
          while (v % q == 0) {
            tp.insert(q);
            v /= q;
          }
        if (v > 1) tp.insert(static_cast<int>(v));
      }
    }
  }
  h.torsion_primes.assign(tp.begin(), tp.end());
  return h;
}

}  // namespace skewres
