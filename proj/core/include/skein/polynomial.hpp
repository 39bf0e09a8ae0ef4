#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace skein {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored in increasing degree order. The zero polynomial
/// has an empty coefficient vector; otherwise the leading coefficient is
/// nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(int degree, const BigInt& coeff = 1);
  static IntPoly constant(const BigInt& c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  BigInt coeff(int k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& s);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator-(IntPoly a) { return a *= BigInt(-1); }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Exact division by a monic divisor. Throws std::domain_error if the
  /// divisor is not monic or the remainder is nonzero.
  IntPoly exact_div_monic(const IntPoly& divisor) const;

  /// Human-readable form such as "x^5 - 5x^3 + 5x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// The n-th cyclotomic polynomial, computed by dividing x^n - 1 by the
/// cyclotomic polynomials of all proper divisors of n.
IntPoly cyclotomic_poly(int n);

/// Euler's totient.
int euler_phi(int n);

}  // namespace skein
