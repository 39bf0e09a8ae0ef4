#include <doctest.h>

#include "skein/coloring.hpp"
#include "skein/triangulation.hpp"

#include <algorithm>
#include <set>

using namespace skein;

namespace {

// vertex classes recomputed by walking around each vertex: the corner at
// vertex k of triangle t continues, across side k, at the far end of the
// glued side
int count_vertex_classes(const Triangulation& T) {
  const int nt = T.num_triangles();
  std::vector<int> mate(static_cast<std::size_t>(3 * nt));
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto [a, b] = T.edge_slots(e);
    mate[static_cast<std::size_t>(a)] = b;
    mate[static_cast<std::size_t>(b)] = a;
  }
  std::vector<bool> seen(static_cast<std::size_t>(3 * nt), false);
  int classes = 0;
  for (int c = 0; c < 3 * nt; ++c) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    ++classes;
    int cur = c;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      // side k starts at vertex k; its mate s' ends at the same point, i.e.
      // at vertex (s'+1) mod 3 of the other triangle
      const int side = cur;
      const int other = mate[static_cast<std::size_t>(side)];
      cur = 3 * (other / 3) + (other % 3 + 1) % 3;
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("standard triangulation (1,1)") {
  const Triangulation T = standard_triangulation(1, 1);
  CHECK(T.num_triangles() == 2);
  CHECK(T.num_edges() == 3);
  CHECK(T.num_punctures() == 1);
  CHECK(validate(T.data()).ok);
}

TEST_CASE("standard triangulation (0,3)") {
  const Triangulation T = standard_triangulation(0, 3);
  CHECK(T.num_triangles() == 2);
  CHECK(T.num_edges() == 3);
  CHECK(count_vertex_classes(T) == 3);
}

TEST_CASE("standard triangulation (2,1)") {
  const Triangulation T = standard_triangulation(2, 1);
  CHECK(T.num_edges() == 9);
  CHECK(T.num_triangles() == 6);
  CHECK(validate(T.data()).ok);
}

TEST_CASE("non-triangulable surfaces are rejected") {
  CHECK_THROWS_AS(standard_triangulation(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(standard_triangulation(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(standard_triangulation(1, 0), std::invalid_argument);
}

TEST_CASE("Euler counts for every builder output") {
  for (int g = 0; g <= 3; ++g)
    for (int p = 1; p <= 4; ++p) {
      if (g == 0 && p <= 2) continue;
      CAPTURE(g);
      CAPTURE(p);
      const Triangulation T = standard_triangulation(g, p);
      const int chi = 2 * g - 2 + p;
      CHECK(T.num_edges() == 3 * chi);
      CHECK(T.num_triangles() == 2 * chi);
      CHECK(count_vertex_classes(T) == p);
      std::set<int> punctures;
      for (int t = 0; t < T.num_triangles(); ++t)
        for (int k = 0; k < 3; ++k) punctures.insert(T.vertex_class(t, k));
      CHECK(static_cast<int>(punctures.size()) == p);
    }
}

TEST_CASE("validation failures") {
  TriangulationData d = standard_triangulation_data(1, 1);

  SUBCASE("unpaired side") {
    d.gluing.pop_back();
    d.edge_order = {0, 1};
    const auto r = validate(d);
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "unpaired side");
  }
  SUBCASE("self gluing") {
    d.gluing[0] = {d.gluing[0][0], d.gluing[0][0]};
    CHECK_FALSE(validate(d).ok);
  }
  SUBCASE("folded triangle") {
    d.triangles = {{0, 1, 2}, {3, 4, 5}};
    d.gluing = {{0, 1}, {2, 3}, {4, 5}};
    d.edge_order = {0, 1, 2};
    const auto r = validate(d);
    CHECK_FALSE(r.ok);
    CHECK(r.failure == "folded triangle");
  }
  SUBCASE("wrong puncture count") {
    d.punctures = 2;
    CHECK_FALSE(validate(d).ok);
  }
  SUBCASE("bad edge order") {
    d.edge_order = {0, 0, 1};
    CHECK_FALSE(validate(d).ok);
  }
  SUBCASE("constructor throws") {
    d.gluing.pop_back();
    CHECK_THROWS_AS(Triangulation{d}, std::invalid_argument);
  }
}

TEST_CASE("edge neighborhoods on (1,1)") {
  const Triangulation T = standard_triangulation(1, 1);
  for (int e = 0; e < 3; ++e) {
    const auto h = T.edge_neighborhood(e);
    CHECK(h.a != e);
    CHECK(h.b != e);
    CHECK(h.c != e);
    CHECK(h.d != e);
    // the other two edges each appear twice
    std::vector<int> q{h.a, h.b, h.c, h.d};
    for (int f = 0; f < 3; ++f)
      if (f != e) CHECK(std::count(q.begin(), q.end(), f) == 2);
  }
}

TEST_CASE("edge neighborhoods are deterministic and local") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 2}, {2, 1}, {2, 3}}) {
    const Triangulation T = standard_triangulation(g, p);
    const Triangulation U = standard_triangulation(g, p);
    for (int e = 0; e < T.num_edges(); ++e) {
      const auto h = T.edge_neighborhood(e);
      CHECK(h == U.edge_neighborhood(e));
      const auto t1 = T.triangle_edges(h.triangles[0]);
      const auto t2 = T.triangle_edges(h.triangles[1]);
      auto in = [](const std::array<int, 3>& t, int x) { return std::find(t.begin(), t.end(), x) != t.end(); };
      CHECK(in(t1, e));
      CHECK(in(t1, h.a));
      CHECK(in(t1, h.b));
      CHECK(in(t2, e));
      CHECK(in(t2, h.c));
      CHECK(in(t2, h.d));
    }
  }
}

TEST_CASE("peripheral colorings") {
  const Triangulation T = standard_triangulation(1, 1);
  CHECK(peripheral_coloring(T, 0) == EdgeColoring{2, 2, 2});
  for (int g = 0; g <= 3; ++g)
    for (int p = 1; p <= 4; ++p) {
      if (g == 0 && p <= 2) continue;
      const Triangulation S = standard_triangulation(g, p);
      EdgeColoring sum(static_cast<std::size_t>(S.num_edges()), 0);
      for (int v = 0; v < p; ++v) {
        const auto f = peripheral_coloring(S, v);
        CHECK(is_admissible(S, f));
        CHECK(std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x >= 0 && x <= 2; }));
        CHECK(q_form(S, f) == QVector(f.size(), 0));
        sum = add(sum, f);
      }
      // every edge has two ends
      CHECK(sum == EdgeColoring(sum.size(), 2));
    }
}
