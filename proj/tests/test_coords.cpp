#include <doctest.h>

#include "skein/coloring.hpp"
#include "skein/int_matrix.hpp"
#include "skein/triangulation.hpp"

#include <algorithm>
#include <random>

using namespace skein;

namespace {

std::vector<std::pair<int, int>> surfaces() { return {{1, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 1}, {0, 5}}; }

EdgeColoring random_admissible(const Triangulation& T, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 3);
  EdgeColoring f(static_cast<std::size_t>(T.num_edges()), 0);
  for (int v = 0; v < T.num_punctures(); ++v) f = add(f, scale(peripheral_coloring(T, v), d(rng)));
  return f;
}

}  // namespace

TEST_CASE("q-form on the once-punctured torus") {
  const Triangulation T = standard_triangulation(1, 1);
  CHECK(q_form(T, {1, 1, 0}) == QVector{1, -1, 0});
  CHECK(pairing(T, {1, 1, 0}, {0, 1, 1}) == -1);
  CHECK(pairing(T, {0, 1, 1}, {1, 1, 0}) == 1);
  CHECK(i2(T, {1, 1, 0}, {0, 1, 1}) == 1);
}

TEST_CASE("q-form doubled agrees with q-form on L") {
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    for (const auto& f : enumerate_admissible(T, 6)) {
      const QVector q = q_form(T, f);
      CHECK(q_form_doubled(T, f) == scale(q, 2));
    }
  }
}

TEST_CASE("pairing is antisymmetric and bilinear") {
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    const auto adm = enumerate_admissible(T, 4);
    for (std::size_t i = 0; i < adm.size(); i += 3)
      for (std::size_t j = 0; j < adm.size(); j += 5) {
        CHECK(pairing(T, adm[i], adm[j]) == -pairing(T, adm[j], adm[i]));
        const auto s = add(adm[i], adm[j]);
        CHECK(pairing(T, s, adm[i]) == pairing(T, adm[j], adm[i]));
      }
  }
}

TEST_CASE("peripheral colorings pair trivially") {
  std::mt19937_64 rng(3);
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    const auto adm = enumerate_admissible(T, 4);
    for (int v = 0; v < p; ++v) {
      const auto pv = peripheral_coloring(T, v);
      for (const auto& f : adm) CHECK(pairing(T, pv, f) == 0);
      const auto r = random_admissible(T, rng);
      CHECK(is_admissible(T, r));
    }
  }
}

TEST_CASE("admissibility") {
  const Triangulation T = standard_triangulation(1, 1);
  CHECK(is_admissible(T, {0, 0, 0}));
  CHECK(is_admissible(T, {1, 1, 0}));
  CHECK_FALSE(is_admissible(T, {1, 0, 0}));
  CHECK_FALSE(is_admissible(T, {3, 1, 0}));
  CHECK_FALSE(is_admissible(T, {-1, 1, 0}));
  CHECK(has_even_triangle_sums(T, {-1, 1, 0}));
  CHECK_THROWS_AS(is_admissible(T, {1, 1}), std::invalid_argument);
}

TEST_CASE("corner coordinates round trip") {
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    for (const auto& f : enumerate_admissible(T, 6)) {
      const auto c = to_corners(T, f);
      CHECK(std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; }));
      CHECK(from_corners(T, c) == f);
    }
  }
  const Triangulation T = standard_triangulation(1, 1);
  CHECK_THROWS_AS(to_corners(T, {1, 0, 0}), std::invalid_argument);
  CornerColoring bad(6, 0);
  bad[0] = 1;
  CHECK_THROWS_AS(from_corners(T, bad), std::invalid_argument);
}

TEST_CASE("q is a difference of corner numbers") {
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    for (const auto& f : enumerate_admissible(T, 4)) {
      const auto c = to_corners(T, f);
      const auto q = q_form(T, f);
      for (int e = 0; e < T.num_edges(); ++e) {
        const auto h = T.edge_neighborhood(e);
        const auto at = [&](int i) { return c[static_cast<std::size_t>(h.corners[static_cast<std::size_t>(i)])]; };
        CHECK(q[static_cast<std::size_t>(e)] == at(2) - at(0));
        CHECK(q[static_cast<std::size_t>(e)] == at(1) - at(3));
      }
    }
  }
}

TEST_CASE("mod 2 lattice basis") {
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    const auto B = mod2_lattice_basis(T);
    // dimension of the kernel of (Z/2)^E -> (Z/2)^F is |E| - |F| + 1 (the
    // triangle sums add up to 2·sum f, so the map has rank |F| - 1)
    CHECK(static_cast<int>(B.size()) == T.num_edges() - T.num_triangles() + 1);
    for (const auto& b : B) {
      CHECK(has_even_triangle_sums(T, b));
      CHECK(std::all_of(b.begin(), b.end(), [](std::int64_t x) { return x == 0 || x == 1; }));
    }
  }
}

TEST_CASE("is_even") {
  const Triangulation T = standard_triangulation(1, 1);
  CHECK(is_even(T, {0, 0, 0}));
  CHECK(is_even(T, {2, 2, 2}));
  CHECK_FALSE(is_even(T, {1, 1, 0}));
  CHECK(is_even(T, {2, 2, 0}));
}

TEST_CASE("components") {
  const Triangulation T = standard_triangulation(1, 1);
  const auto c = components(T, {2, 2, 2});
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].peripheral());
  CHECK(c.components[0].multiplicity == 1);
  CHECK(c.num_curves() == 1);

  const auto c2 = components(T, {2, 2, 0});
  REQUIRE(c2.components.size() == 1);
  CHECK(c2.components[0].primitive == EdgeColoring{1, 1, 0});
  CHECK(c2.components[0].multiplicity == 2);
  CHECK_FALSE(c2.components[0].peripheral());

  for (auto [g, p] : surfaces()) {
    const Triangulation S = standard_triangulation(g, p);
    for (const auto& f : enumerate_admissible(S, 6)) {
      const auto d = components(S, f);
      CHECK(d.weighted_sum(S.num_edges()) == f);
    }
  }
}

TEST_CASE("two delta decompositions") {
  for (auto [g, p] : surfaces()) {
    const Triangulation T = standard_triangulation(g, p);
    for (int e = 0; e < T.num_edges(); ++e) {
      const auto d = two_delta_decomposition(T, e);
      EdgeColoring sum(static_cast<std::size_t>(T.num_edges()), 0);
      for (const auto& [k, f] : d.terms) {
        CHECK(is_admissible(T, f));
        sum = add(sum, scale(f, k));
      }
      EdgeColoring expect(sum.size(), 0);
      expect[static_cast<std::size_t>(e)] = 2;
      CHECK(sum == expect);
      const auto ends = T.edge_endpoints(e);
      CHECK(d.loop == (ends[0] == ends[1]));
    }
  }
}

TEST_CASE("hermite and smith normal forms") {
  const IntMatrix M{{0, -1, 0}, {1, 0, -2}, {0, 2, 0}};
  const auto S = smith_normal_form(M);
  CHECK(S.divisors == std::vector<BigInt>{1, 1, 0});
  CHECK(S.U * M * S.V == S.D);

  const auto H = hermite_normal_form(M);
  CHECK(H.rank == 2);
  CHECK(H.U * M == H.H);

  const IntMatrix A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto SA = smith_normal_form(A);
  CHECK(SA.divisors == std::vector<BigInt>{2, 6, 12});
  CHECK(SA.U * A * SA.V == SA.D);
}

TEST_CASE("antisymmetric matrices have paired invariant factors") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    IntMatrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        A(i, j) = d(rng);
        A(j, i) = -A(i, j);
      }
    const auto S = smith_normal_form(A);
    std::vector<BigInt> nz;
    for (const auto& x : S.divisors)
      if (x != 0) nz.push_back(x);
    REQUIRE(nz.size() % 2 == 0);
    for (std::size_t i = 0; i < nz.size(); i += 2) CHECK(nz[i] == nz[i + 1]);
    for (std::size_t i = 1; i < S.divisors.size(); ++i)
      if (S.divisors[i] != 0) CHECK(S.divisors[i] % S.divisors[i - 1] == 0);
  }
}

TEST_CASE("lattice basis and modular lattice") {
  const auto B = lattice_basis({{2, 0}, {0, 2}, {1, 1}}, 2);
  CHECK(B.size() == 2);
  ModularLattice L(6, 2);
  CHECK(L.insert({2, 0}));
  CHECK_FALSE(L.insert({4, 0}));
  CHECK(L.contains({0, 0}));
  CHECK_FALSE(L.contains({1, 0}));
  CHECK(L.insert({3, 0}));
  CHECK(L.contains({1, 0}));
  CHECK_FALSE(L.contains({0, 1}));
}
