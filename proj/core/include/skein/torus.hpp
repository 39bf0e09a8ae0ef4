#pragma once

#include "skein/cyclotomic.hpp"
#include "skein/root_data.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace skein {

using TorusKey = std::pair<std::int64_t, std::int64_t>;

/// Canonical representative of {(p,q), (-p,-q)}: p > 0, or p = 0 and q >= 0.
TorusKey canonical_key(std::int64_t p, std::int64_t q);

/// Element of the skein algebra of the closed torus in the basis e_{p,q}
/// (simple diagrams, with e_{p,q} = e_{-p,-q}). The key (0,0) stands for
/// the unit 1, so e_{0,0} = 2 is stored as coefficient 2 on that key.
class TorusElement {
 public:
  using Terms = std::map<TorusKey, Cyclotomic>;

  explicit TorusElement(RootData root);
  static TorusElement unit(RootData root);
  /// e_{p,q}; e_{0,0} is 2·unit.
  static TorusElement basis(RootData root, std::int64_t p, std::int64_t q);

  const RootData& root() const { return root_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·e_{p,q} (c·2 on the unit for p = q = 0).
  void add_basis(std::int64_t p, std::int64_t q, const Cyclotomic& c);
  /// Adds c to the coefficient of the stored key canonical_key(p,q).
  void add_term(TorusKey key, const Cyclotomic& c);

  TorusElement& operator+=(const TorusElement& rhs);
  TorusElement& operator-=(const TorusElement& rhs);
  TorusElement& operator*=(const Cyclotomic& c);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.root_ == b.root_ && a.terms_ == b.terms_;
  }

 private:
  RootData root_;
  Terms terms_;
};

/// e_{p,q} e_{r,s} = ζ^{ps-qr} e_{p+r,q+s} + ζ^{-(ps-qr)} e_{p-r,q-s},
/// extended bilinearly.
TorusElement fg_mul(const TorusElement& x, const TorusElement& y);

/// T_k(e_{p,q}) evaluated through fg_mul. Throws std::invalid_argument if
/// (p,q) is not primitive and std::logic_error if the result is not
/// e_{kp,kq}.
TorusElement torus_T(const RootData& root, int k, std::int64_t p, std::int64_t q);

/// Canonical keys (p,q) != (0,0) with |p|,|q| <= bound whose basis element
/// commutes with e_{1,0}, e_{0,1} and e_{1,1}, checked by exact products.
std::vector<TorusKey> torus_center_bruteforce(const RootData& root, std::int64_t bound);

/// Keys (m·a, m·b), with a, b even when 4 | n, inside the same box.
std::vector<TorusKey> torus_threaded_set(const RootData& root, std::int64_t bound);

}  // namespace skein
