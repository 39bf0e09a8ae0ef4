#pragma once

#include "skein/polynomial.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace skein {

namespace detail {

// Per-order reduction data shared by every element of Z[ζ_n] / Q(ζ_n).
// Instances live for the lifetime of the process.
struct CyclotomicTable {
  int order = 0;
  int phi = 0;
  IntPoly modulus;
  // powers[k] = x^k mod Φ_n for 0 <= k < n, as small integer vectors of
  // length phi.
  std::vector<std::vector<long>> powers;
};

const CyclotomicTable& cyclotomic_table(int order);

}  // namespace detail

/// An element of Z[ζ] (Coeff = BigInt) or Q(ζ) (Coeff = Rational), where ζ
/// is a primitive n-th root of unity. Elements are stored as residues
/// modulo Φ_n, so the coefficient vector (length φ(n)) is canonical and
/// equality is coefficient equality.
template <class Coeff>
class BasicCyclotomic {
 public:
  /// The zero element of order n. Throws std::invalid_argument for n < 1.
  explicit BasicCyclotomic(int order);
  /// Reduces an arbitrary-length coefficient vector modulo Φ_n.
  BasicCyclotomic(int order, std::vector<Coeff> coeffs);

  static BasicCyclotomic zero(int order) { return BasicCyclotomic(order); }
  static BasicCyclotomic one(int order) { return constant(order, Coeff(1)); }
  static BasicCyclotomic constant(int order, const Coeff& c);
  /// ζ^k; k is reduced mod n first.
  static BasicCyclotomic zeta_pow(int order, long long k);

  int order() const { return table_->order; }
  int phi() const { return table_->phi; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  BasicCyclotomic& operator+=(const BasicCyclotomic& rhs);
  BasicCyclotomic& operator-=(const BasicCyclotomic& rhs);
  BasicCyclotomic& operator*=(const BasicCyclotomic& rhs);
  BasicCyclotomic& operator*=(const Coeff& s);

  friend BasicCyclotomic operator+(BasicCyclotomic a, const BasicCyclotomic& b) { return a += b; }
  friend BasicCyclotomic operator-(BasicCyclotomic a, const BasicCyclotomic& b) { return a -= b; }
  friend BasicCyclotomic operator*(BasicCyclotomic a, const BasicCyclotomic& b) { return a *= b; }
  friend BasicCyclotomic operator*(BasicCyclotomic a, const Coeff& s) { return a *= s; }
  friend BasicCyclotomic operator-(BasicCyclotomic a) { return a *= Coeff(-1); }
  friend bool operator==(const BasicCyclotomic& a, const BasicCyclotomic& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  /// this * ζ^k.
  BasicCyclotomic times_zeta(long long k) const;
  /// Image under the Galois automorphism ζ -> ζ^{-1}.
  BasicCyclotomic conjugate() const;
  /// Non-negative integer power.
  BasicCyclotomic pow(unsigned long e) const;

  std::string to_string() const;

 private:
  void require_same_order(const BasicCyclotomic& rhs) const;
  void reduce_from(const std::vector<Coeff>& wide);

  const detail::CyclotomicTable* table_;
  std::vector<Coeff> coeffs_;
};

using Cyclotomic = BasicCyclotomic<BigInt>;
using CyclotomicQ = BasicCyclotomic<Rational>;

extern template class BasicCyclotomic<BigInt>;
extern template class BasicCyclotomic<Rational>;

/// Lift Z[ζ] -> Q(ζ).
CyclotomicQ to_field(const Cyclotomic& x);

/// Multiplicative inverse in Q(ζ). Throws std::domain_error on zero.
CyclotomicQ inverse(const CyclotomicQ& x);

/// Integer power with negative exponents allowed (field only).
CyclotomicQ ipow(const CyclotomicQ& x, long long e);

}  // namespace skein
