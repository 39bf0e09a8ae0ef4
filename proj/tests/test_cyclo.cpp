#include <doctest.h>

#include "skein/chebyshev.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/root_data.hpp"

#include <complex>
#include <numbers>
#include <random>

using namespace skein;

namespace {

// complex embedding ζ -> exp(2πi/n), only as an independent oracle
constexpr double kEvalTol = 1e-9;

std::complex<long double> embed(const Cyclotomic& x) {
  const long double angle = 2 * std::numbers::pi_v<long double> / x.order();
  std::complex<long double> z = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) z += static_cast<long double>(x.coeffs()[k].get_d()) * std::polar(1.0L, angle * static_cast<long double>(k));
  return z;
}

Cyclotomic random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (auto& v : c) v = d(rng);
  return Cyclotomic(n, c);
}

}  // namespace

TEST_CASE("root data examples") {
  const RootData r1 = root_data(1);
  CHECK(r1.m == 1);
  CHECK(r1.m_prime == 1);
  CHECK(r1.epsilon_class == EpsilonClass::PlusOne);

  const RootData r6 = root_data(6);
  CHECK(r6.m == 3);
  CHECK(r6.m_prime == 3);
  CHECK(r6.epsilon_exponent == 3);
  CHECK(r6.epsilon_class == EpsilonClass::MinusOne);

  // ζ^9 with ζ = exp(2πi/12) is exp(3πi/2) = -i
  const RootData r12 = root_data(12);
  CHECK(r12.m == 3);
  CHECK(r12.m_prime == 6);
  CHECK(r12.epsilon_exponent == 9);
  CHECK(r12.epsilon_class == EpsilonClass::MinusI);

  CHECK_THROWS_AS(root_data(0), std::invalid_argument);
}

TEST_CASE("epsilon is imaginary exactly when n = 4 mod 8") {
  for (int n = 1; n <= 64; ++n) {
    const auto c = root_data(n).epsilon_class;
    const bool imaginary = c == EpsilonClass::PlusI || c == EpsilonClass::MinusI;
    CHECK_MESSAGE(imaginary == (n % 8 == 4), "n = " << n);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
  // x^n - 1 is the product of Φ_d over d | n
  for (int n = 1; n <= 30; ++n) {
    IntPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic_poly(d);
    CHECK(prod == IntPoly::monomial(n) - IntPoly{1});
    CHECK(cyclotomic_poly(n).degree() == euler_phi(n));
  }
}

TEST_CASE("zeta powers") {
  CHECK(Cyclotomic::zeta_pow(7, 7).is_one());
  CHECK(Cyclotomic::zeta_pow(4, 1) * Cyclotomic::zeta_pow(4, 1) == -Cyclotomic::one(4));
  Cyclotomic s(5);
  for (int k = 0; k < 5; ++k) s += Cyclotomic::zeta_pow(5, k);
  CHECK(s.is_zero());
  for (int n : {1, 2, 3, 4, 6, 8, 9, 12}) {
    for (int a = -2 * n; a <= 2 * n; ++a)
      for (int b = -2 * n; b <= 2 * n; ++b)
        REQUIRE(Cyclotomic::zeta_pow(n, a) * Cyclotomic::zeta_pow(n, b) == Cyclotomic::zeta_pow(n, a + b));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int n : {3, 5, 8, 12, 15}) {
    for (int i = 0; i < 40; ++i) {
      const Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < kEvalTol * (1 + std::abs(embed(a) * embed(b))));
      CHECK(std::abs(embed(a + b) - embed(a) - embed(b)) < kEvalTol * 100);
    }
  }
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS(Cyclotomic::one(3) + Cyclotomic::one(5), std::invalid_argument);
}

TEST_CASE("field inverse") {
  std::mt19937_64 rng(12);
  for (int n : {3, 5, 7, 8}) {
    for (int i = 0; i < 10; ++i) {
      const Cyclotomic a = random_element(rng, n);
      if (a.is_zero()) continue;
      CHECK(to_field(a) * inverse(to_field(a)) == CyclotomicQ::one(n));
    }
  }
  CHECK_THROWS_AS(inverse(CyclotomicQ::zero(5)), std::domain_error);
}

TEST_CASE("non-canonical rationals are normalised") {
  const CyclotomicQ a(3, {Rational(4, 2), Rational(0, 7)});
  CHECK(a == CyclotomicQ::constant(3, Rational(2)));
}

TEST_CASE("chebyshev polynomials") {
  CHECK(chebyshev_T(0) == IntPoly{2});
  CHECK(chebyshev_T(1) == IntPoly{0, 1});
  CHECK(chebyshev_T(2) == IntPoly{-2, 0, 1});
  CHECK(chebyshev_T(5) == IntPoly{0, 5, 0, -5, 0, 1});
  for (int k = 1; k <= 30; ++k) CHECK(chebyshev_T(k).leading() == 1);
}

TEST_CASE("product to sum") {
  CHECK(product_to_sum_check(2, 3));
  CHECK(product_to_sum_check(0, 7));
  CHECK(product_to_sum_check(10, 10));
  CHECK(chebyshev_T(10) * chebyshev_T(10) == chebyshev_T(20) + IntPoly{2});
}

TEST_CASE("chebyshev reduction") {
  auto r = chebyshev_reduce(7, 3);
  CHECK(r.quotient == 1);
  CHECK(r.remainder == 1);
  CHECK(r.identity_holds);
  r = chebyshev_reduce(6, 3);
  CHECK(r.quotient == 1);
  CHECK(r.remainder == 0);
  CHECK(r.identity_holds);
  r = chebyshev_reduce(25, 5);
  CHECK(r.quotient == 2);
  CHECK(r.remainder == 5);
  CHECK(r.identity_holds);
  CHECK(chebyshev_T(25) == chebyshev_T(20) * chebyshev_T(5) - chebyshev_T(15));
  CHECK_THROWS_AS(chebyshev_reduce(5, 3), std::invalid_argument);
}

TEST_CASE("chebyshev evaluation in Z[ζ] matches the power sum") {
  // T_k(ζ + ζ^-1) = ζ^k + ζ^-k
  for (int n : {5, 7, 12}) {
    const Cyclotomic x = Cyclotomic::zeta_pow(n, 1) + Cyclotomic::zeta_pow(n, -1);
    for (int k = 0; k <= 20; ++k) {
      const Cyclotomic v = chebyshev_eval(k, x, Cyclotomic::constant(n, 2), [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; });
      CHECK(v == Cyclotomic::zeta_pow(n, k) + Cyclotomic::zeta_pow(n, -k));
    }
  }
}
