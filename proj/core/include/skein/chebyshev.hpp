#pragma once

#include "skein/polynomial.hpp"

#include <stdexcept>

namespace skein {

/// Chebyshev polynomials of the first kind normalised as T_0 = 2, T_1 = x,
/// T_k = x T_{k-1} - T_{k-2}. Throws std::invalid_argument for k < 0.
IntPoly chebyshev_T(int k);

/// T_k T_l == T_{k+l} + T_{|k-l|}, checked on exact coefficients.
bool product_to_sum_check(int k, int l);

struct ChebyshevReduction {
  int k = 0;
  int m = 0;
  int quotient = 0;   // k = 2m * quotient + remainder
  int remainder = 0;  // 0 <= remainder < 2m
  bool identity_holds = false;  // T_k == T_{2mq} T_r - T_{2mq - r}
};

/// Division of k by 2m together with an exact check of
/// T_k = T_{2mq} T_r - T_{2mq-r}. Requires k >= 2m >= 2.
ChebyshevReduction chebyshev_reduce(int k, int m);

/// Evaluates T_k at an element of any unital ring by the three-term
/// recursion; `two` is 2·1 in that ring.
template <class Ring, class Mul>
Ring chebyshev_eval(int k, const Ring& x, const Ring& two, Mul&& mul) {
  if (k < 0) throw std::invalid_argument("chebyshev_eval: negative degree");
  if (k == 0) return two;
  Ring prev = two;
  Ring cur = x;
  for (int i = 2; i <= k; ++i) {
    Ring next = mul(x, cur);
    next -= prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace skein
