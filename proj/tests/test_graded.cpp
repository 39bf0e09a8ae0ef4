#include <doctest.h>

#include "skein/graded.hpp"

#include <algorithm>
#include <random>

using namespace skein;

namespace {

std::shared_ptr<const Triangulation> surface(int g, int p) {
  return std::make_shared<const Triangulation>(standard_triangulation(g, p));
}

BigInt ipow(std::int64_t b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("leading term product on the once-punctured torus") {
  const auto T = surface(1, 1);
  const RootData root = root_data(5);
  const auto [c, f] = lt_mul_basis(*T, root, {1, 1, 0}, {0, 1, 1});
  CHECK(f == EdgeColoring{1, 2, 1});
  CHECK(c == Cyclotomic::zeta_pow(5, -1));
  // ζ^{-1}[f] vs ζ^{1}[f]: the two orders differ by ζ^{-2}, i.e. exponent 3 mod 5
  CHECK(commutation_exponent(*T, root, {1, 1, 0}, {0, 1, 1}) == 3);
  CHECK_THROWS_AS(lt_mul_basis(*T, root, {1, 0, 0}, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("graded product is associative with unit") {
  std::mt19937_64 rng(21);
  for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}}) {
    const auto T = surface(g, p);
    const auto adm = enumerate_admissible(*T, 4);
    for (int n : {5, 6, 8}) {
      const RootData root = root_data(n);
      const auto one = GradedElement::unit(T, root);
      std::uniform_int_distribution<std::size_t> pick(0, adm.size() - 1);
      for (int i = 0; i < 25; ++i) {
        auto x = GradedElement::basis(T, root, adm[pick(rng)], Cyclotomic::zeta_pow(n, 1) + Cyclotomic::one(n));
        x += GradedElement::basis(T, root, adm[pick(rng)]);
        const auto y = GradedElement::basis(T, root, adm[pick(rng)]);
        const auto z = GradedElement::basis(T, root, adm[pick(rng)], Cyclotomic::constant(n, -3));
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(one, x) == x);
        CHECK(mul(x, one) == x);
      }
    }
  }
}

TEST_CASE("mixing roots or surfaces is rejected") {
  const auto T = surface(1, 1);
  const auto a = GradedElement::unit(T, root_data(5));
  const auto b = GradedElement::unit(T, root_data(7));
  CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
  const auto c = GradedElement::unit(surface(0, 4), root_data(5));
  CHECK_THROWS_AS(mul(a, c), std::invalid_argument);
}

TEST_CASE("threaded leading terms") {
  const auto T = surface(1, 1);
  const RootData root = root_data(5);
  const auto x = thread_lead(T, root, {1, 1, 0});
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms().begin()->first == EdgeColoring{5, 5, 0});
}

TEST_CASE("central leading terms") {
  const auto T = surface(1, 1);
  SUBCASE("odd n") {
    const RootData root = root_data(5);
    CHECK(central_lead_test(*T, root, {5, 5, 0}).accepted);
    CHECK(central_lead_test(*T, root, {2, 2, 2}).accepted);  // peripheral
    const auto r = central_lead_test(*T, root, {1, 1, 0});
    CHECK_FALSE(r.accepted);
    CHECK(r.reason != LeadRejection::None);
  }
  SUBCASE("n divisible by 4") {
    const RootData root = root_data(8);
    // q(2,2,0) = (2,-2,0) is not divisible by m' = 4
    CHECK_FALSE(central_lead_test(*T, root, {2, 2, 0}).accepted);
    CHECK(central_lead_test(*T, root, {4, 4, 0}).accepted);
  }
}

TEST_CASE("center enumeration matches the prediction and the oracle") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {0, 4}, {1, 2}}) {
    const auto T = surface(g, p);
    for (int n : {3, 4, 5, 6, 8, 12}) {
      CAPTURE(g);
      CAPTURE(p);
      CAPTURE(n);
      const RootData root = root_data(n);
      const std::int64_t bound = 6;
      const auto a = center_enumerate(*T, root, bound);
      const auto b = predicted_center(*T, root, bound);
      CHECK(a == b);
      for (const auto& f : enumerate_admissible(*T, bound))
        CHECK(central_lead_test(*T, root, f).accepted == central_lead_oracle(*T, root, f, bound));
    }
  }
}

TEST_CASE("pi degree for odd n is n^(3g-3+p)") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {0, 4}, {1, 2}, {0, 5}, {2, 1}}) {
    for (int n : {3, 5, 7}) {
      CAPTURE(g);
      CAPTURE(p);
      CAPTURE(n);
      const auto d = pi_degree(standard_triangulation(g, p), root_data(n));
      CHECK(d.N == ipow(n, 3 * g - 3 + p));
      CHECK(d.rank == d.N * d.N);
    }
  }
}

TEST_CASE("pi degree examples for even n") {
  const auto T11 = standard_triangulation(1, 1);
  CHECK(pi_degree(T11, root_data(6)).N == 3);
  CHECK(pi_degree(T11, root_data(8)).N == 4);
  CHECK(pi_degree(T11, root_data(12)).N == 6);
  const auto T04 = standard_triangulation(0, 4);
  CHECK(pi_degree(T04, root_data(8)).N == 2);
  CHECK(pi_degree(T04, root_data(12)).N == 3);
  const auto T12 = standard_triangulation(1, 2);
  CHECK(pi_degree(T12, root_data(8)).N == 8);
  CHECK(pi_degree(T12, root_data(12)).N == 18);
}

TEST_CASE("radical contains the peripheral colorings") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}}) {
    const auto T = standard_triangulation(g, p);
    for (int n : {5, 8}) {
      const RootData root = root_data(n);
      for (int v = 0; v < p; ++v) CHECK(in_radical(T, root, peripheral_coloring(T, v)));
    }
  }
  const auto T = standard_triangulation(1, 1);
  CHECK_FALSE(in_radical(T, root_data(5), {1, 1, 0}));
  CHECK(in_radical(T, root_data(5), {5, 5, 0}));
}

TEST_CASE("even lattice basis spans admissible colorings") {
  const auto T = standard_triangulation(1, 2);
  const auto B = even_lattice_basis(T);
  CHECK(static_cast<int>(B.size()) == T.num_edges());
  for (const auto& b : B) CHECK(has_even_triangle_sums(T, b));
}

TEST_CASE("shadow variety data") {
  const RootData r5 = root_data(5), r8 = root_data(8);
  CHECK(shadow_variety_info(0, 0, r5).dimension == 0);
  CHECK(shadow_variety_info(0, 1, r5).dimension == 0);
  CHECK(shadow_variety_info(0, 2, r5).dimension == 1);
  CHECK(shadow_variety_info(1, 0, r5).dimension == 2);
  CHECK(shadow_variety_info(1, 1, r5).dimension == 3);
  CHECK(shadow_variety_info(2, 0, r5).dimension == 6);
  CHECK(shadow_variety_info(0, 4, r5).dimension == 6);
  CHECK(shadow_variety_info(1, 1, r5).target == ShadowTarget::CharacterVariety);
  CHECK(shadow_variety_info(1, 1, r8).target == ShadowTarget::EvenCharacterVariety);
  CHECK(shadow_variety_info(0, 3, r5).degree_bound == 125);
  CHECK(shadow_variety_info(0, 3, r8).degree_bound == 8);
  CHECK_THROWS_AS(shadow_variety_info(-1, 0, r5), std::invalid_argument);
}
