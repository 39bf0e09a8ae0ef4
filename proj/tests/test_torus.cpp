#include <doctest.h>

#include "skein/torus.hpp"
#include "skein/torus_rep.hpp"

#include <algorithm>

using namespace skein;

namespace {

TorusElement e(const RootData& r, std::int64_t p, std::int64_t q) { return TorusElement::basis(r, p, q); }

CyclotomicQ qpow(const CyclotomicQ& x, int k) {
  CyclotomicQ r = CyclotomicQ::one(x.order());
  const CyclotomicQ b = k < 0 ? inverse(x) : x;
  for (int i = 0; i < std::abs(k); ++i) r = r * b;
  return r;
}

}  // namespace

TEST_CASE("canonical keys") {
  CHECK(canonical_key(1, 2) == TorusKey{1, 2});
  CHECK(canonical_key(-1, -2) == TorusKey{1, 2});
  CHECK(canonical_key(0, -3) == TorusKey{0, 3});
  CHECK(canonical_key(-2, 5) == TorusKey{2, -5});
  CHECK(canonical_key(0, 0) == TorusKey{0, 0});
}

TEST_CASE("product to sum examples") {
  const RootData r = root_data(7);
  const Cyclotomic z = Cyclotomic::zeta_pow(7, 1), zi = Cyclotomic::zeta_pow(7, -1);

  TorusElement want(r);
  want.add_basis(1, 1, z);
  want.add_basis(1, -1, zi);
  CHECK(fg_mul(e(r, 1, 0), e(r, 0, 1)) == want);

  TorusElement sq(r);
  sq.add_basis(2, 0, Cyclotomic::one(7));
  sq.add_basis(0, 0, Cyclotomic::one(7));
  CHECK(fg_mul(e(r, 1, 0), e(r, 1, 0)) == sq);
  CHECK(e(r, 0, 0) == TorusElement::unit(r) + TorusElement::unit(r));
  CHECK(e(r, -2, -3) == e(r, 2, 3));
}

TEST_CASE("torus product is associative") {
  for (int n : {3, 5, 8, 12}) {
    const RootData r = root_data(n);
    std::vector<TorusKey> keys;
    for (int p = -2; p <= 2; ++p)
      for (int q = -2; q <= 2; ++q) keys.emplace_back(p, q);
    for (std::size_t i = 0; i < keys.size(); i += 2)
      for (std::size_t j = 1; j < keys.size(); j += 3)
        for (std::size_t k = 0; k < keys.size(); k += 5) {
          const auto x = e(r, keys[i].first, keys[i].second);
          const auto y = e(r, keys[j].first, keys[j].second);
          const auto w = e(r, keys[k].first, keys[k].second);
          CHECK(fg_mul(fg_mul(x, y), w) == fg_mul(x, fg_mul(y, w)));
        }
  }
}

TEST_CASE("chebyshev threading on the torus") {
  for (int n : {4, 5, 6}) {
    const RootData r = root_data(n);
    for (int k = 0; k <= 8; ++k) {
      CHECK(torus_T(r, k, 1, 0) == (k == 0 ? e(r, 0, 0) : e(r, k, 0)));
      CHECK(torus_T(r, k, 2, 3) == (k == 0 ? e(r, 0, 0) : e(r, 2 * k, 3 * k)));
    }
  }
  CHECK_THROWS_AS(torus_T(root_data(5), 2, 2, 4), std::invalid_argument);
}

TEST_CASE("torus center is the threaded set and m'Z^2") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const RootData r = root_data(n);
    const std::int64_t D = 2 * r.m_prime;
    const auto brute = torus_center_bruteforce(r, D);
    CHECK(brute == torus_threaded_set(r, D));
    for (const auto& [p, q] : brute) {
      CHECK(p % r.m_prime == 0);
      CHECK(q % r.m_prime == 0);
    }
  }
  // n = 8: m = 2, m' = 4, and only even multiples of m thread to the center
  const auto c8 = torus_center_bruteforce(root_data(8), 4);
  CHECK(std::find(c8.begin(), c8.end(), TorusKey{4, 0}) != c8.end());
  CHECK(std::find(c8.begin(), c8.end(), TorusKey{2, 0}) == c8.end());
}

TEST_CASE("clock and shift representation") {
  const RootData r = root_data(5);
  const CyclotomicQ lambda(5, {Rational(2), Rational(1, 3)});
  const CyclotomicQ mu = CyclotomicQ::constant(5, Rational(3, 2));
  const MatrixRep rep = build_rep(r, lambda, mu);
  CHECK(rep.size == 5);
  const std::vector<TorusKey> sample{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {0, 2}};
  CHECK(rep_hom_check(rep, sample));
  CHECK(commutant_dim(rep) == 1);

  const auto chi = central_character(rep, {{5, 0}, {0, 5}});
  CHECK(chi[0] == qpow(lambda, 5) + qpow(lambda, -5));
  CHECK(chi[1] == qpow(mu, 5) + qpow(mu, -5));

  const MatrixRep flipped = build_rep(r, inverse(lambda), inverse(mu));
  CHECK(intertwines(flip_intertwiner(5, 5), rep, flipped, sample));
  CHECK(central_character(flipped, {{5, 0}, {0, 5}}) == chi);

  CHECK_THROWS_AS(build_rep(r, CyclotomicQ::zero(5), mu), std::invalid_argument);
}

TEST_CASE("rep is an algebra map on sums") {
  const RootData r = root_data(7);
  const MatrixRep rep = build_rep(r, CyclotomicQ::constant(7, Rational(2)), CyclotomicQ::constant(7, Rational(5, 3)));
  TorusElement x = e(r, 1, 2);
  x.add_basis(3, -1, Cyclotomic::zeta_pow(7, 2));
  TorusElement y = e(r, 0, 1) + e(r, 2, 2);
  CHECK(rep_apply(rep, x) * rep_apply(rep, y) == rep_apply(rep, fg_mul(x, y)));
  CHECK(rep_apply(rep, TorusElement::unit(r)) == CycMatrix::identity(7, 7));
}

TEST_CASE("trivial parameters give a reducible representation") {
  // λ = μ = 1: the flip commutes with everything, so the commutant has
  // dimension 2 (the ±1 eigenspaces of the flip)
  const RootData r = root_data(5);
  const MatrixRep rep = build_rep(r, CyclotomicQ::one(5), CyclotomicQ::one(5));
  CHECK(commutant_dim(rep) == 2);
  CHECK(intertwines(flip_intertwiner(5, 5), rep, rep, {{1, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("matrix helpers") {
  const auto I = CycMatrix::identity(5, 3);
  CHECK(I.scalar_value().has_value());
  CHECK(I.trace() == CyclotomicQ::constant(5, Rational(3)));
  CycMatrix A(5, 3);
  A(0, 1) = CyclotomicQ::one(5);
  CHECK_FALSE(A.scalar_value().has_value());
  CHECK(commutant_dim(std::vector<CycMatrix>{I}) == 9);
}
