#include "skewres/betti.hpp"

#include <algorithm>
#include <thread>

#include "skewres/errors.hpp"
#include "skewres/simplicial.hpp"

namespace skewres {

void BettiTable::add(int i, Mask support, std::int64_t v) {
  if (v == 0) return;
  auto& slot = entries[{i, support}];
  slot += v;
  if (slot == 0) entries.erase({i, support});
}

std::int64_t BettiTable::at(int i, Mask support) const {
  auto it = entries.find({i, support});
  return it == entries.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, std::int64_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::int64_t> g;
  for (const auto& [k, v] : entries) g[{k.first, popcount(k.second)}] += v;
  return g;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> t;
  for (const auto& [k, v] : entries) {
    if (static_cast<int>(t.size()) <= k.first) t.resize(k.first + 1, 0);
    t[k.first] += v;
  }
  return t;
}

std::vector<std::int64_t> BettiTable::strand(int offset) const {
  std::vector<std::int64_t> s(totals().size(), 0);
  for (const auto& [ij, v] : graded())
    if (ij.second - ij.first == offset) s[ij.first] += v;
  return s;
}

std::int64_t BettiTable::partial(int i, Mask part, Mask exact) const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries)
    if (k.first == i && (k.second & part) == exact) s += v;
  return s;
}

std::optional<int> BettiTable::projective_dimension() const {
  std::optional<int> pd;
  for (const auto& [k, v] : entries) pd = std::max(pd.value_or(k.first), k.first);
  return pd;
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> r;
  for (const auto& [k, v] : entries) {
    int d = popcount(k.second) - k.first;
    r = std::max(r.value_or(d), d);
  }
  return r;
}

namespace {

void check_supports(const std::vector<Mask>& supports, int nv) {
  const Mask all = low_mask(nv);
  for (std::size_t a = 0; a < supports.size(); ++a) {
    if (supports[a] == 0) throw PreconditionError("generator with empty support");
    if (supports[a] & ~all) throw PreconditionError("generator uses an unknown vertex");
    for (std::size_t b = 0; b < supports.size(); ++b)
      if (a != b && (supports[a] & supports[b]) == supports[a])
        throw PreconditionError("generator list is not minimal");
  }
}

}  // namespace

std::vector<BettiTable> hochster_betti_tables(const std::vector<Mask>& supports,
                                              const std::vector<std::string>& names,
                                              const HochsterOptions& opt) {
  const int nv = static_cast<int>(names.size());
  if (nv > 63) throw OracleLimitError("more than 63 vertices");
  check_supports(supports, nv);
  const Mask within = opt.within.value_or(low_mask(nv));
  if (popcount(within) > opt.max_vertices)
    throw OracleLimitError("oracle needs " + std::to_string(popcount(within)) +
                           " vertices, limit is " + std::to_string(opt.max_vertices));

  std::vector<int> primes;
  for (const auto& f : opt.fields)
    if (f.characteristic != 0) primes.push_back(f.characteristic);

  // Candidate supports in colex (ascending mask) order, cones removed.
  std::vector<Mask> candidates;
  for_each_submask_ascending(within, [&](Mask v) {
    if (v == 0) return;
    if (opt.fixed_part && (v & opt.fixed_part->first) != opt.fixed_part->second) return;
    Mask cover = 0;
    for (Mask s : supports)
      if ((s & ~v) == 0) cover |= s;
    if (cover != v) return;  // an uncovered vertex is a cone point
    candidates.push_back(v);
  });

  using Result = std::vector<std::pair<int, std::vector<std::int64_t>>>;  // (i, rank per field)
  std::vector<Result> results(candidates.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < candidates.size(); k += step) {
      const Mask v = candidates[k];
      auto h = homology(simplicial_chain_complex(faces_avoiding(v, supports)), primes);
      const int size = popcount(v);
      for (int q = h.lowest_degree; q < h.lowest_degree + static_cast<int>(h.rational.size()); ++q) {
        const int i = size - q - 2;
        if (i < 0) continue;
        std::vector<std::int64_t> ranks;
        bool any = false;
        for (const auto& f : opt.fields) {
          ranks.push_back(h.rank(q, f));
          any = any || ranks.back() != 0;
        }
        if (any) results[k].emplace_back(i, std::move(ranks));
      }
    }
  };
  const int width = std::max(1, opt.width);
  if (width == 1 || candidates.size() < 64) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < width; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), width);
    for (auto& th : pool) th.join();
  }

  std::vector<BettiTable> tables(opt.fields.size());
  for (std::size_t f = 0; f < opt.fields.size(); ++f) {
    tables[f].vertex_names = names;
    tables[f].field = opt.fields[f];
  }
  for (std::size_t k = 0; k < candidates.size(); ++k)
    for (const auto& [i, ranks] : results[k])
      for (std::size_t f = 0; f < ranks.size(); ++f) tables[f].add(i, candidates[k], ranks[f]);
  return tables;
}

BettiTable hochster_betti_table(const std::vector<Mask>& supports,
                                const std::vector<std::string>& names, Field f, int max_vertices) {
  HochsterOptions o;
  o.fields = {f};
  o.max_vertices = max_vertices;
  return hochster_betti_tables(supports, names, o).front();
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto divides = [](const Exponents& a, const Exponents& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > (k < b.size() ? b[k] : 0)) return false;
    return true;
  };
  std::vector<Exponents> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens)
      if (h != g && divides(h, g)) redundant = true;
    if (!redundant) out.push_back(g);
  }
  return out;
}

Polarization polarize(const std::vector<Exponents>& gens, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<int> top(n, 0);
  for (const auto& g : gens) {
    if (g.size() != n) throw PreconditionError("exponent vector length mismatch");
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k] < 0) throw PreconditionError("negative exponent");
      top[k] = std::max(top[k], g[k]);
    }
  }
  Polarization p;
  std::vector<int> first(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    first[k] = static_cast<int>(p.names.size());
    for (int e = 1; e <= top[k]; ++e) {
      p.names.push_back(top[k] == 1 ? names[k] : names[k] + "_" + std::to_string(e));
      p.original.push_back(static_cast<int>(k));
    }
  }
  if (p.names.size() > 63) throw OracleLimitError("polarization needs more than 63 variables");
  for (const auto& g : gens) {
    Mask s = 0;
    for (std::size_t k = 0; k < n; ++k)
      for (int e = 0; e < g[k]; ++e) s |= bit(first[k] + e);
    p.supports.push_back(s);
  }
  return p;
}

Exponents Polarization::depolarize(Mask support, int original_count) const {
  Exponents e(original_count, 0);
  for (int v : bits_of(support)) ++e[original[v]];
  return e;
}

TaylorReport taylor_analysis(const std::vector<Exponents>& gens) {
  const int p = static_cast<int>(gens.size());
  if (p < 1) throw PreconditionError("Taylor analysis needs at least one generator");
  if (p > 22) throw OracleLimitError("too many generators for Taylor analysis");
  TaylorReport r;
  for (int i = 0; i < p; ++i) r.upper_bounds.push_back(binomial(p, i + 1));
  const std::size_t nvar = gens.front().size();
  const std::size_t count = std::size_t{1} << p;
  std::vector<Exponents> lcm(count, Exponents(nvar, 0));
  for (std::size_t a = 1; a < count; ++a) {
    const int low = std::countr_zero(a);
    const auto& rest = lcm[a & (a - 1)];
    for (std::size_t k = 0; k < nvar; ++k) lcm[a][k] = std::max(rest[k], gens[low][k]);
  }
  for (std::size_t a = 1; a < count && r.minimal; ++a)
    for (int g : bits_of(a))
      if (lcm[a] == lcm[a & ~(std::size_t{1} << g)] && popcount(a) > 1) {
        r.minimal = false;
        r.witness = std::make_pair(bits_of(a), g);
        break;
      }
  return r;
}

std::map<Mask, std::int64_t> taylor_k_polynomial(const std::vector<Mask>& supports) {
  const int p = static_cast<int>(supports.size());
  if (p > 24) throw OracleLimitError("too many generators for the lcm expansion");
  const std::size_t count = std::size_t{1} << p;
  std::vector<Mask> lcm(count, 0);
  std::map<Mask, std::int64_t> out;
  out[0] = 1;
  for (std::size_t a = 1; a < count; ++a) {
    lcm[a] = lcm[a & (a - 1)] | supports[std::countr_zero(a)];
    out[lcm[a]] += (popcount(a) % 2) ? -1 : 1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Mask, std::int64_t> betti_k_polynomial(const BettiTable& t) {
  std::map<Mask, std::int64_t> out;
  out[0] = 1;
  for (const auto& [k, v] : t.entries) out[k.second] += (k.first % 2 == 0) ? -v : v;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace skewres
