#include "skewres/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "skewres/errors.hpp"

namespace skewres {

std::string to_string(FamilyKind k) { return k == FamilyKind::Sets ? "sets" : "multisets"; }

bool valid_tuple(const Tuple& t, int d, FamilyKind kind) {
  if (static_cast<int>(t.size()) != d) return false;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] < 1) return false;
    if (j > 0 && (kind == FamilyKind::Sets ? t[j] <= t[j - 1] : t[j] < t[j - 1])) return false;
  }
  return true;
}

bool colex_less(const Tuple& u, const Tuple& v) {
  return std::lexicographical_compare(u.rbegin(), u.rend(), v.rbegin(), v.rend());
}

bool gale_leq(const Tuple& u, const Tuple& v) {
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j] > v[j]) return false;
  return true;
}

GaleResult gale_compare(const Tuple& u, const Tuple& v, FamilyKind kind) {
  if (u.size() != v.size()) throw PreconditionError("tuples of different length");
  const int d = static_cast<int>(u.size());
  if (!valid_tuple(u, d, kind) || !valid_tuple(v, d, kind))
    throw PreconditionError("tuple not valid for " + to_string(kind));
  GaleResult r;
  r.leq = gale_leq(u, v);
  for (int j = 0; j < d; ++j) {
    r.meet.push_back(std::min(u[j], v[j]));
    r.join.push_back(std::max(u[j], v[j]));
  }
  return r;
}

UniformFamily::UniformFamily(int dd, FamilyKind k, std::vector<Tuple> m)
    : d(dd), kind(k), members(std::move(m)) {
  if (d < 1) throw PreconditionError("degree must be at least 1");
  for (const auto& t : members)
    if (!valid_tuple(t, d, kind)) throw PreconditionError("member is not a sorted " + std::to_string(d) + "-tuple");
  std::sort(members.begin(), members.end(), colex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

int UniformFamily::max_entry() const {
  int m = 0;
  for (const auto& t : members) m = std::max(m, t.back());
  return m;
}

bool UniformFamily::contains(const Tuple& t) const {
  return std::binary_search(members.begin(), members.end(), t, colex_less);
}

PartiteFamily::PartiteFamily(int dd, std::vector<Tuple> m) : d(dd), members(std::move(m)) {
  if (d < 1) throw PreconditionError("degree must be at least 1");
  for (const auto& t : members) {
    if (static_cast<int>(t.size()) != d) throw PreconditionError("member has wrong length");
    for (int v : t)
      if (v < 1) throw PreconditionError("part indices start at 1");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

std::vector<int> PartiteFamily::part_sizes() const {
  std::vector<int> s(d, 0);
  for (const auto& t : members)
    for (int j = 0; j < d; ++j) s[j] = std::max(s[j], t[j]);
  return s;
}

bool PartiteFamily::contains(const Tuple& t) const {
  return std::binary_search(members.begin(), members.end(), t);
}

UniformFamily colexsegment(std::int64_t g, int d) {
  if (g < 0) throw PreconditionError("g must be nonnegative");
  if (d < 1 || d > 62) throw PreconditionError("degree out of range");
  std::vector<Tuple> out;
  Mask s = low_mask(d);
  for (std::int64_t k = 0; k < g; ++k) {
    if (has_bit(s, 63)) throw PreconditionError("colexsegment exceeds 62 vertices");
    Tuple t;
    for (int b : bits_of(s)) t.push_back(b + 1);
    out.push_back(std::move(t));
    // Next mask with the same popcount (ascending order is colex order).
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return UniformFamily(d, FamilyKind::Sets, std::move(out));
}

StabilityResult stability_check(const UniformFamily& f) {
  StabilityResult r;
  for (const auto& t : f.members)
    for (int j = 0; j < f.d; ++j) {
      Tuple low = t;
      --low[j];
      if (!valid_tuple(low, f.d, f.kind)) continue;
      if (!f.contains(low)) {
        r.strongly_stable = false;
        r.witness = std::make_pair(t, low);
        return r;
      }
    }
  return r;
}

UniformFamily depolarize(const UniformFamily& f) {
  if (f.kind != FamilyKind::Sets) throw PreconditionError("depolarize expects a family of sets");
  std::vector<Tuple> out;
  for (auto t : f.members) {
    for (int j = 0; j < f.d; ++j) t[j] -= j;
    out.push_back(std::move(t));
  }
  return UniformFamily(f.d, FamilyKind::Multisets, std::move(out));
}

UniformFamily polarize(const UniformFamily& f) {
  if (f.kind != FamilyKind::Multisets) throw PreconditionError("polarize expects a family of multisets");
  std::vector<Tuple> out;
  for (auto t : f.members) {
    for (int j = 0; j < f.d; ++j) t[j] += j;
    out.push_back(std::move(t));
  }
  return UniformFamily(f.d, FamilyKind::Sets, std::move(out));
}

PartiteFamily partite_expansion(const UniformFamily& f) { return PartiteFamily(f.d, f.members); }

FerrersCheck ferrers_check(const PartiteFamily& f) {
  FerrersCheck r;
  for (const auto& t : f.members)
    for (int j = 0; j < f.d; ++j) {
      if (t[j] == 1) continue;
      Tuple low = t;
      --low[j];
      if (!f.contains(low)) {
        r.is_ferrers = false;
        r.witness = std::make_pair(t, low);
        return r;
      }
    }
  return r;
}

SkewPair ferrers_skew_pair(const PartiteFamily& f) {
  const auto fc = ferrers_check(f);
  if (!fc.is_ferrers) throw PreconditionError("family is not Ferrers");
  SkewPair p;
  const int d = f.d;
  for (int s : f.part_sizes()) p.N = std::max(p.N, s);
  const int N = p.N;
  std::vector<Tuple> pre;
  for (auto t : f.members) {
    for (int j = 0; j < d; ++j) t[j] += j * N;
    pre.push_back(std::move(t));
  }
  std::set<Tuple> down;
  std::function<void(const Tuple&, Tuple&, int)> grow = [&](const Tuple& top, Tuple& cur, int j) {
    if (j == d) {
      down.insert(cur);
      return;
    }
    const int lo = j == 0 ? 1 : cur[j - 1] + 1;
    for (int v = lo; v <= top[j]; ++v) {
      cur.push_back(v);
      grow(top, cur, j + 1);
      cur.pop_back();
    }
  };
  for (const auto& t : pre) {
    Tuple cur;
    grow(t, cur, 0);
  }
  Tuple sf;
  for (int j = 0; j < d; ++j) sf.push_back(j * N + 1);
  std::vector<Tuple> kp, diff;
  for (const auto& s : down) (gale_leq(sf, s) ? diff : kp).push_back(s);
  p.K = UniformFamily(d, FamilyKind::Sets, {down.begin(), down.end()});
  p.K_prime = UniformFamily(d, FamilyKind::Sets, kp);
  p.difference = UniformFamily(d, FamilyKind::Sets, diff);
  p.K_stable = stability_check(p.K).strongly_stable;
  p.K_prime_stable = stability_check(p.K_prime).strongly_stable;
  std::vector<Tuple> back;
  for (auto t : p.difference.members) {
    for (int j = 0; j < d; ++j) t[j] -= j * N;
    back.push_back(std::move(t));
  }
  p.isomorphic = PartiteFamily(d, back).members == f.members;
  return p;
}

std::string part_variable(int part, int value) {
  if (part < 26) return std::string(1, static_cast<char>('a' + part)) + std::to_string(value);
  return "p" + std::to_string(part + 1) + "_" + std::to_string(value);
}

MonomialIdeal family_ideal(const UniformFamily& f) {
  MonomialIdeal I;
  const int n = f.max_entry();
  for (int v = 1; v <= n; ++v) I.names.push_back("x" + std::to_string(v));
  for (const auto& t : f.members) {
    Exponents e(n, 0);
    for (int v : t) ++e[v - 1];
    I.generators.push_back(std::move(e));
  }
  return I;
}

MonomialIdeal partite_ideal(const PartiteFamily& f) {
  MonomialIdeal I;
  const auto sizes = f.part_sizes();
  std::vector<int> offset(f.d, 0);
  for (int j = 0; j < f.d; ++j) {
    offset[j] = static_cast<int>(I.names.size());
    for (int v = 1; v <= sizes[j]; ++v) I.names.push_back(part_variable(j, v));
  }
  for (const auto& t : f.members) {
    Exponents e(I.names.size(), 0);
    for (int j = 0; j < f.d; ++j) e[offset[j] + t[j] - 1] = 1;
    I.generators.push_back(std::move(e));
  }
  return I;
}

namespace {

std::vector<std::int64_t> trim(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

int effective_max(const Tuple& t, FamilyKind kind) {
  const int d = static_cast<int>(t.size());
  return kind == FamilyKind::Sets ? t.back() : t.back() + d - 1;
}

}  // namespace

std::vector<std::int64_t> max_profile(const UniformFamily& f) {
  std::vector<std::int64_t> mu;
  for (const auto& t : f.members) {
    const int k = effective_max(t, f.kind);
    if (static_cast<int>(mu.size()) <= k) mu.resize(k + 1, 0);
    ++mu[k];
  }
  return mu;
}

std::vector<std::int64_t> hypergraph_betti_formula(const UniformFamily& f) {
  const auto st = stability_check(f);
  if (!st.strongly_stable) throw PreconditionError("family is not strongly stable");
  const auto mu = max_profile(f);
  std::vector<std::int64_t> b(mu.size() + 1, 0);
  for (std::size_t k = 0; k < mu.size(); ++k)
    for (std::size_t i = 0; i < b.size(); ++i)
      b[i] += mu[k] * binomial(static_cast<std::int64_t>(k) - f.d, static_cast<std::int64_t>(i));
  return trim(b);
}

std::vector<std::int64_t> ferrers_hypergraph_betti(const PartiteFamily& f) {
  if (!ferrers_check(f).is_ferrers) throw PreconditionError("family is not Ferrers");
  std::vector<std::int64_t> b;
  for (const auto& t : f.members) {
    int s = 0;
    for (int v : t) s += v;
    const int top = s - f.d;
    if (static_cast<int>(b.size()) <= top) b.resize(top + 1, 0);
    for (int i = 0; i <= top; ++i) b[i] += binomial(top, i);
  }
  return trim(b);
}

ColexDecomposition colex_decomposition(std::int64_t g, int d) {
  if (g < 0 || d < 1) throw PreconditionError("need g >= 0 and d >= 1");
  ColexDecomposition c;
  c.mu = d - 1;
  while (binomial(c.mu + 1, d) <= g) ++c.mu;
  c.epsilon = g - binomial(c.mu, d);
  return c;
}

std::vector<std::int64_t> colex_closed_form(std::int64_t g, int d) {
  const auto c = colex_decomposition(g, d);
  std::vector<std::int64_t> b(static_cast<std::size_t>(c.mu + 2), 0);
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(b.size()); ++i) {
    for (std::int64_t j = d; j <= c.mu; ++j) b[i] += multinomial(j - 1, i, d - 1, j - d - i);
    b[i] += c.epsilon * binomial(c.mu + 1 - d, i);
  }
  return trim(b);
}

BettiTable oracle_table(const MonomialIdeal& ideal, Field f, int max_vertices) {
  const auto gens = minimalize(ideal.generators);
  const Polarization p = polarize(gens, ideal.names);
  if (static_cast<int>(p.names.size()) > max_vertices)
    throw OracleLimitError("oracle needs " + std::to_string(p.names.size()) +
                           " vertices, limit is " + std::to_string(max_vertices));
  return hochster_betti_table(p.supports, p.names, f, max_vertices);
}

std::vector<std::int64_t> oracle_betti(const MonomialIdeal& ideal, Field f, int max_vertices) {
  return oracle_table(ideal, f, max_vertices).totals();
}

}  // namespace skewres
