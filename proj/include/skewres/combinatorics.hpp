#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace skewres {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1U; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// Indices of set bits, ascending.
inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

// Binomial coefficient; zero outside 0 <= k <= n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n! / (a! b! c!) with a+b+c = n; zero if any part is negative or the parts do not sum to n.
inline std::int64_t multinomial(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != n) return 0;
  return binomial(n, a) * binomial(n - a, b);
}

// Calls f(sub) for every submask of m, including 0 and m, in ascending numeric order.
template <class F>
void for_each_submask_ascending(Mask m, F&& f) {
  std::vector<int> b = bits_of(m);
  const Mask count = Mask{1} << b.size();
  for (Mask k = 0; k < count; ++k) {
    Mask s = 0;
    for (std::size_t t = 0; t < b.size(); ++t)
      if ((k >> t) & 1U) s |= bit(b[t]);
    f(s);
  }
}

}  // namespace skewres
