#include <doctest.h>

#include "skein/json_io.hpp"

#include <random>

using namespace skein;

TEST_CASE("big integers") {
  CHECK(big_to_json(BigInt(42)) == Json(42));
  const BigInt huge("123456789012345678901234567890");
  CHECK(big_to_json(huge) == Json("123456789012345678901234567890"));
  CHECK(big_from_json(big_to_json(huge)) == huge);
  CHECK(big_from_json(Json("-7")) == -7);
  CHECK_THROWS_AS(big_from_json(Json("x1")), JsonError);
  CHECK_THROWS_AS(big_from_json(Json(1.5)), JsonError);
}

TEST_CASE("cyclotomic round trip") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int n : {1, 4, 7, 12}) {
    for (int i = 0; i < 20; ++i) {
      std::vector<BigInt> c(static_cast<std::size_t>(n));
      for (auto& v : c) v = d(rng);
      const Cyclotomic x(n, c);
      const Json j = to_json(x);
      CHECK(cyclotomic_from_json(j) == x);
      CHECK(to_json(cyclotomic_from_json(j)).dump() == j.dump());
    }
  }
  CHECK(to_json(Cyclotomic::zeta_pow(5, 2)).dump() == R"({"n":5,"coeffs":[0,0,1,0]})");
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"coeffs":[1]})")), JsonError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"n":0,"coeffs":[1]})")), std::invalid_argument);
}

TEST_CASE("rational cyclotomic round trip") {
  const CyclotomicQ x(7, {Rational(1, 3), Rational(-5, 2), Rational(4)});
  const Json j = to_json(x);
  CHECK(j["coeffs"][0] == "1/3");
  CHECK(j["coeffs"][2] == 4);
  CHECK(cyclotomic_q_from_json(j) == x);
  CHECK(cyclotomic_q_from_json(Json::parse(R"({"n":3,"coeffs":["2/4",0]})")) ==
        CyclotomicQ::constant(3, Rational(1, 2)));
  CHECK_THROWS_AS(cyclotomic_q_from_json(Json::parse(R"({"n":3,"coeffs":["1/0"]})")), JsonError);
}

TEST_CASE("triangulation round trip") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {2, 2}}) {
    const auto d = standard_triangulation_data(g, p);
    const Json j = to_json(d);
    CHECK(triangulation_from_json(j) == d);
    CHECK(to_json(triangulation_from_json(Json::parse(j.dump()))).dump() == j.dump());
  }
  Json j = to_json(standard_triangulation_data(1, 1));
  j.erase("edge_order");
  CHECK(triangulation_from_json(j).edge_order == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(triangulation_from_json(Json::parse(R"({"genus":1})")), JsonError);
}

TEST_CASE("colorings") {
  CHECK(coloring_from_json(Json::parse("[1,2,3]")) == std::vector<std::int64_t>{1, 2, 3});
  CHECK_THROWS_AS(coloring_from_json(Json::parse("[1,2]"), 3), JsonError);
  CHECK_THROWS_AS(coloring_from_json(Json::parse(R"([1,"a"])")), JsonError);
  CHECK_THROWS_AS(coloring_from_json(Json::parse("{}")), JsonError);
}

TEST_CASE("graded element round trip") {
  const auto T = std::make_shared<const Triangulation>(standard_triangulation(1, 1));
  const RootData root = root_data(5);
  auto x = GradedElement::basis(T, root, {1, 1, 0}, Cyclotomic::zeta_pow(5, 3));
  x += GradedElement::basis(T, root, {2, 2, 2});
  const Json j = to_json(x);
  CHECK(graded_from_json(j, T, root) == x);
  const auto y = graded_from_json(Json::parse(R"([{"coloring":[0,1,1]}])"), T, root);
  CHECK(y == GradedElement::basis(T, root, {0, 1, 1}));
  CHECK_THROWS_AS(graded_from_json(Json::parse(R"([{"coloring":[1,0,0]}])"), T, root), std::invalid_argument);
}

TEST_CASE("dt index and triangular element") {
  const DTIndex x{{2, 2, 0}, {1, -1, 0}};
  CHECK(dt_index_from_json(to_json(x)) == x);
  CHECK(to_json(x).dump() == R"({"n":[2,2,0],"t":[1,-1,0]})");
  CHECK_THROWS_AS(dt_index_from_json(Json::parse(R"({"n":[1,2],"t":[0]})")), JsonError);

  const auto P = std::make_shared<const PantsDecomposition>(standard_pants(2));
  const auto e = TriangularElement::basis(P, root_data(5), x, Cyclotomic::constant(5, 3));
  const Json j = to_json(e);
  REQUIRE(j.is_array());
  CHECK(j[0]["coeff"]["coeffs"][0] == 3);
}

TEST_CASE("torus element round trip") {
  const RootData r = root_data(6);
  TorusElement x = TorusElement::basis(r, 2, -1);
  x.add_basis(0, 0, Cyclotomic::constant(6, 3));
  x.add_basis(1, 1, Cyclotomic::zeta_pow(6, 1));
  const Json j = to_json(x);
  CHECK(torus_from_json(j, r) == x);
  CHECK(torus_from_json(Json::parse(R"({"terms":[{"p":0,"q":0,"coeff":{"n":6,"coeffs":[1,0]}}]})"), r) ==
        TorusElement::unit(r));
  CHECK_THROWS_AS(torus_from_json(Json::parse(R"({"terms":[{"p":1}]})"), r), JsonError);
}
