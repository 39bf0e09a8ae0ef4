#include "skein/torus.hpp"

#include "skein/chebyshev.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

TorusKey canonical_key(std::int64_t p, std::int64_t q) {
  if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
  return {p, q};
}

TorusElement::TorusElement(RootData root) : root_(root) {}

TorusElement TorusElement::unit(RootData root) {
  TorusElement x(root);
  x.add_term({0, 0}, Cyclotomic::one(root.n));
  return x;
}

TorusElement TorusElement::basis(RootData root, std::int64_t p, std::int64_t q) {
  TorusElement x(root);
  x.add_basis(p, q, Cyclotomic::one(root.n));
  return x;
}

void TorusElement::add_term(TorusKey key, const Cyclotomic& c) {
  if (c.order() != root_.n) throw std::invalid_argument("TorusElement: coefficient has the wrong root order");
  if (c.is_zero()) return;
  key = canonical_key(key.first, key.second);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElement::add_basis(std::int64_t p, std::int64_t q, const Cyclotomic& c) {
  if (p == 0 && q == 0) {
    add_term({0, 0}, c * BigInt(2));
  } else {
    add_term({p, q}, c);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
  if (!(root_ == rhs.root_)) throw std::invalid_argument("TorusElement: root mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) {
  if (!(root_ == rhs.root_)) throw std::invalid_argument("TorusElement: root mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

TorusElement& TorusElement::operator*=(const Cyclotomic& c) {
  Terms out;
  for (const auto& [k, a] : terms_) {
    Cyclotomic y = a * c;
    if (!y.is_zero()) out.emplace(k, std::move(y));
  }
  terms_ = std::move(out);
  return *this;
}

TorusElement fg_mul(const TorusElement& x, const TorusElement& y) {
  if (!(x.root() == y.root())) throw std::invalid_argument("fg_mul: root mismatch");
  TorusElement out(x.root());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const Cyclotomic c = ca * cb;
      if (a == TorusKey{0, 0} || b == TorusKey{0, 0}) {
        out.add_term({a.first + b.first, a.second + b.second}, c);
        continue;
      }
      const auto [p, q] = a;
      const auto [r, s] = b;
      const std::int64_t d = p * s - q * r;
      out.add_basis(p + r, q + s, c.times_zeta(d));
      out.add_basis(p - r, q - s, c.times_zeta(-d));
    }
  }
  return out;
}

TorusElement torus_T(const RootData& root, int k, std::int64_t p, std::int64_t q) {
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus_T: (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
  }
  const TorusElement x = TorusElement::basis(root, p, q);
  const TorusElement two = TorusElement::basis(root, 0, 0);
  TorusElement result = chebyshev_eval(k, x, two, [](const TorusElement& a, const TorusElement& b) { return fg_mul(a, b); });
  if (!(result == TorusElement::basis(root, k * p, k * q))) {
    throw std::logic_error("torus_T: T_k(e_{p,q}) differs from e_{kp,kq}");
  }
  return result;
}

std::vector<TorusKey> torus_center_bruteforce(const RootData& root, std::int64_t bound) {
  const TorusElement gens[] = {TorusElement::basis(root, 1, 0), TorusElement::basis(root, 0, 1),
                               TorusElement::basis(root, 1, 1)};
  std::vector<TorusKey> out;
  for (std::int64_t p = 0; p <= bound; ++p) {
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (canonical_key(p, q) != TorusKey{p, q} || (p == 0 && q == 0)) continue;
      const TorusElement x = TorusElement::basis(root, p, q);
      const bool central = std::all_of(std::begin(gens), std::end(gens),
                                       [&](const TorusElement& g) { return fg_mul(x, g) == fg_mul(g, x); });
      if (central) out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<TorusKey> torus_threaded_set(const RootData& root, std::int64_t bound) {
  const std::int64_t step = root.four_divides_n() ? 2 * root.m : root.m;
  std::vector<TorusKey> out;
  for (std::int64_t p = 0; p <= bound; p += step) {
    for (std::int64_t q = -(bound / step) * step; q <= bound; q += step) {
      if (canonical_key(p, q) != TorusKey{p, q} || (p == 0 && q == 0)) continue;
      out.emplace_back(p, q);
    }
  }
  return out;
}

}  // namespace skein
