#include "skein/chebyshev.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

namespace skein {

IntPoly chebyshev_T(int k) {
  if (k < 0) throw std::invalid_argument("chebyshev_T: negative degree " + std::to_string(k));
  static std::mutex mu;
  static std::vector<IntPoly> cache{IntPoly{2}, IntPoly{0, 1}};
  std::lock_guard lock(mu);
  const IntPoly x{0, 1};
  while (static_cast<int>(cache.size()) <= k) {
    const std::size_t s = cache.size();
    cache.push_back(x * cache[s - 1] - cache[s - 2]);
  }
  return cache[static_cast<std::size_t>(k)];
}

bool product_to_sum_check(int k, int l) {
  return chebyshev_T(k) * chebyshev_T(l) == chebyshev_T(k + l) + chebyshev_T(std::abs(k - l));
}

ChebyshevReduction chebyshev_reduce(int k, int m) {
  if (m < 1 || k < 2 * m) {
    throw std::invalid_argument("chebyshev_reduce requires k >= 2m >= 2 (k=" + std::to_string(k) +
                                ", m=" + std::to_string(m) + ")");
  }
  ChebyshevReduction r;
  r.k = k;
  r.m = m;
  r.quotient = k / (2 * m);
  r.remainder = k % (2 * m);
  const int top = 2 * m * r.quotient;
  r.identity_holds =
      chebyshev_T(k) == chebyshev_T(top) * chebyshev_T(r.remainder) - chebyshev_T(top - r.remainder);
  return r;
}

}  // namespace skein
