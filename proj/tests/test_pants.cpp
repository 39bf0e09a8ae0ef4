#include <doctest.h>

#include "skein/pants.hpp"

#include <random>

using namespace skein;

namespace {

std::shared_ptr<const PantsDecomposition> pants(int g) { return std::make_shared<const PantsDecomposition>(standard_pants(g)); }

std::int64_t dot3(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool same_lattice(const ModularLattice& a, const ModularLattice& b) {
  for (const auto& r : a.rows())
    if (!b.contains(r)) return false;
  for (const auto& r : b.rows())
    if (!a.contains(r)) return false;
  return true;
}

}  // namespace

TEST_CASE("standard pants decompositions") {
  const auto P2 = standard_pants(2);
  CHECK(P2.num_pants() == 2);
  CHECK(P2.num_curves() == 3);
  CHECK(P2.dual().num_triangles() == 2);
  CHECK(P2.pants_curves(0) == std::array<int, 3>{0, 1, 2});

  for (int g = 2; g <= 5; ++g) {
    const auto P = standard_pants(g);
    CHECK(P.num_curves() == 3 * g - 3);
    CHECK(P.dual().num_edges() == 3 * g - 3);
    std::vector<int> degree(static_cast<std::size_t>(P.num_pants()), 0);
    for (const auto& [a, b] : P.curves()) {
      CHECK(a != b);
      ++degree[static_cast<std::size_t>(a)];
      ++degree[static_cast<std::size_t>(b)];
    }
    for (int d : degree) CHECK(d == 3);
  }
  CHECK_THROWS_AS(standard_pants(1), std::invalid_argument);
}

TEST_CASE("invalid dual graphs are rejected") {
  CHECK_THROWS_AS(PantsDecomposition(2, {{0, 0}, {0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PantsDecomposition(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PantsDecomposition(3, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("index sets") {
  const auto P = standard_pants(2);
  CHECK(is_in_ind(P, {{2, 2, 0}, {1, -1, 3}}));
  CHECK_FALSE(is_in_ind(P, {{2, 2, 0}, {1, -1, -3}}));
  CHECK_FALSE(is_in_ind(P, {{1, 2, 0}, {0, 0, 0}}));
  CHECK(is_triangular(P, {{2, 2, 0}, {1, -1, 0}}));
  CHECK_FALSE(is_triangular(P, {{2, 2, 0}, {1, -1, 3}}));
  CHECK_FALSE(is_triangular(P, {{4, 2, 0}, {0, 0, 0}}));
}

TEST_CASE("dt exponent with a shared n reduces to the twist terms") {
  // q(n)·n = 0, so e((n,t),(n,t')) = t·n - n·t'
  const auto P = standard_pants(3);
  for (const auto& n : enumerate_triangular_n(P, 3)) {
    std::vector<std::int64_t> t(n.size()), t2(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      t[i] = n[i] ? static_cast<std::int64_t>(i) - 2 : 0;
      t2[i] = n[i] ? 3 - static_cast<std::int64_t>(2 * i) : 0;
    }
    CHECK(dt_exponent(P, {n, t}, {n, t2}) == dot3(t, n) - dot3(n, t2));
  }
}

TEST_CASE("dt exponent is antisymmetric") {
  for (int g : {2, 3}) {
    const auto P = standard_pants(g);
    const auto all = enumerate_triangular(P, 2, 1);
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (std::size_t j = 0; j < all.size(); j += 11)
        CHECK(dt_exponent(P, all[i], all[j]) == -dt_exponent(P, all[j], all[i]));
  }
}

TEST_CASE("dt product example") {
  const auto P = standard_pants(2);
  const RootData root = root_data(5);
  const DTIndex x{{2, 2, 0}, {1, 0, 0}}, y{{0, 2, 2}, {0, 1, 0}};
  const auto [c, s] = dt_mul_basis(P, root, x, y);
  CHECK(s == DTIndex{{2, 4, 2}, {1, 1, 0}});
  CHECK(c == Cyclotomic::zeta_pow(5, dt_exponent(P, x, y)));
  CHECK(c == Cyclotomic::zeta_pow(5, 4));
  CHECK_THROWS_AS(dt_mul_basis(P, root, {{4, 2, 0}, {0, 0, 0}}, y), std::invalid_argument);
}

TEST_CASE("dt product is associative and unital") {
  std::mt19937_64 rng(31);
  for (int g : {2, 3}) {
    const auto P = pants(g);
    const auto all = enumerate_triangular(*P, 2, 1);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int n : {4, 5, 6}) {
      const RootData root = root_data(n);
      const auto one = TriangularElement::unit(P, root);
      for (int i = 0; i < 20; ++i) {
        auto x = TriangularElement::basis(P, root, all[pick(rng)]);
        x += TriangularElement::basis(P, root, all[pick(rng)], Cyclotomic::zeta_pow(n, 2));
        const auto y = TriangularElement::basis(P, root, all[pick(rng)]);
        const auto z = TriangularElement::basis(P, root, all[pick(rng)], Cyclotomic::constant(n, 2));
        CHECK(dt_mul(dt_mul(x, y), z) == dt_mul(x, dt_mul(y, z)));
        CHECK(dt_mul(one, x) == x);
        CHECK(dt_mul(x, one) == x);
      }
    }
  }
}

TEST_CASE("dt central test examples") {
  const auto P = standard_pants(2);
  const RootData r5 = root_data(5);
  const auto ok = dt_central_test(P, r5, {{10, 10, 0}, {5, 0, 0}});
  CHECK(ok.accepted);
  CHECK(ok.beta == DTIndex{{2, 2, 0}, {1, 0, 0}});
  const auto no_n = dt_central_test(P, r5, {{2, 2, 0}, {0, 0, 0}});
  CHECK_FALSE(no_n.accepted);
  CHECK(no_n.reason == DtRejection::NNotDivisible);
  const auto no_t = dt_central_test(P, r5, {{10, 10, 0}, {1, 0, 0}});
  CHECK_FALSE(no_t.accepted);
  CHECK(no_t.reason == DtRejection::TNotDivisible);
  CHECK(dt_central_test(P, r5, {{5, 5, 0}, {0, 0, 0}}).accepted);
  CHECK_THROWS_AS(dt_central_test(P, r5, {{10, 0, 0}, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("dt central test agrees with the oracle") {
  for (int g : {2, 3}) {
    const auto P = pants(g);
    for (int n = 2; n <= 8; ++n) {
      CAPTURE(g);
      CAPTURE(n);
      const RootData root = root_data(n);
      const DtCenterOracle oracle(P, root, 2);
      const auto r = dt_center_crosscheck(*P, root, oracle, g == 2 ? 2 * root.m_prime : root.m_prime, root.m_prime, true);
      CHECK(r.disagreements == 0);
      CHECK(r.evaluated > 0);
    }
  }
}

TEST_CASE("oracle lattice is direct-probe exact") {
  const auto P = pants(2);
  for (int n : {4, 6}) {
    const RootData root = root_data(n);
    const DtCenterOracle oracle(P, root, 2);
    for (const auto& x : enumerate_triangular(*P, 4, 2)) CHECK(oracle.is_central(x) == oracle.is_central_direct(x));
  }
}

TEST_CASE("probe bound 2 already spans the full key lattice") {
  const auto P = pants(2);
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const RootData root = root_data(n);
    const DtCenterOracle small(P, root, 2);
    const DtCenterOracle large(P, root, 2 * root.m_prime);
    CHECK(same_lattice(small.key_lattice(), large.key_lattice()));
  }
}

TEST_CASE("residue sweep rejects a short twist box") {
  const auto P = pants(2);
  const RootData root = root_data(7);
  const DtCenterOracle oracle(P, root, 2);
  CHECK_THROWS_AS(dt_center_crosscheck(*P, root, oracle, 2, 1, true), std::invalid_argument);
}

TEST_CASE("two delta span") {
  CHECK(two_delta_span_check(2));
  CHECK(two_delta_span_check(3));
  CHECK(two_delta_span_check(4));
}
