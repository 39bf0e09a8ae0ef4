#include "skein/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace skein {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::string count_message(const char* what, std::size_t got, long long want) {
  return std::string(what) + ": got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

std::vector<int> vertex_classes(int num_triangles, const std::vector<int>& mate) {
  const auto slots = static_cast<std::size_t>(3 * num_triangles);
  UnionFind uf(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    const int m = mate[s];
    if (m < 0) continue;
    const auto t = s / 3, i = s % 3;
    const auto tm = static_cast<std::size_t>(m) / 3, j = static_cast<std::size_t>(m) % 3;
    // side i runs vertex i -> i+1; reversal meets start with end
    uf.unite(3 * t + i, 3 * tm + (j + 1) % 3);
    uf.unite(3 * t + (i + 1) % 3, 3 * tm + j);
  }
  std::vector<int> cls(slots, -1);
  std::map<std::size_t, int> dense;
  for (std::size_t s = 0; s < slots; ++s) {
    auto [it, inserted] = dense.emplace(uf.find(s), static_cast<int>(dense.size()));
    cls[s] = it->second;
  }
  return cls;
}

ValidationReport validate(const TriangulationData& d) {
  if (d.genus < 0) return ValidationReport::fail("negative genus");
  if (d.punctures < 1) return ValidationReport::fail("a triangulable surface needs at least one puncture");
  if (d.genus == 0 && d.punctures <= 2) {
    return ValidationReport::fail("sphere with one or two punctures is not triangulable");
  }
  const auto nt = d.triangles.size();
  std::map<int, int> slot_of;
  for (std::size_t t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) {
      if (!slot_of.emplace(d.triangles[t][static_cast<std::size_t>(s)], static_cast<int>(3 * t) + s).second) {
        return ValidationReport::fail("duplicate side label " + std::to_string(d.triangles[t][static_cast<std::size_t>(s)]));
      }
    }
  }
  std::vector<int> mate(3 * nt, -1);
  for (const auto& g : d.gluing) {
    auto ia = slot_of.find(g[0]);
    auto ib = slot_of.find(g[1]);
    if (ia == slot_of.end() || ib == slot_of.end()) return ValidationReport::fail("gluing references unknown side");
    const int a = ia->second, b = ib->second;
    if (a == b) return ValidationReport::fail("side glued to itself");
    if (mate[static_cast<std::size_t>(a)] != -1 || mate[static_cast<std::size_t>(b)] != -1) {
      return ValidationReport::fail("side glued more than once");
    }
    if (a / 3 == b / 3) return ValidationReport::fail("folded triangle");
    mate[static_cast<std::size_t>(a)] = b;
    mate[static_cast<std::size_t>(b)] = a;
  }
  for (int m : mate) {
    if (m == -1) return ValidationReport::fail("unpaired side");
  }
  {
    std::vector<int> sorted = d.edge_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(d.gluing.size());
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) return ValidationReport::fail("edge_order is not a permutation of the gluing pairs");
  }
  if (nt == 0) return ValidationReport::fail("no triangles");
  {
    UnionFind uf(nt);
    for (std::size_t s = 0; s < mate.size(); ++s) uf.unite(s / 3, static_cast<std::size_t>(mate[s]) / 3);
    for (std::size_t t = 0; t < nt; ++t) {
      if (uf.find(t) != 0) return ValidationReport::fail("triangulation is disconnected");
    }
  }
  const long long chi = 2LL * d.genus - 2 + d.punctures;
  if (static_cast<long long>(nt) != 2 * chi) return ValidationReport::fail(count_message("triangle count", nt, 2 * chi));
  if (static_cast<long long>(d.gluing.size()) != 3 * chi) {
    return ValidationReport::fail(count_message("edge count", d.gluing.size(), 3 * chi));
  }
  const auto cls = vertex_classes(static_cast<int>(nt), mate);
  const int classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  if (classes != d.punctures) {
    return ValidationReport::fail(count_message("vertex classes", static_cast<std::size_t>(classes), d.punctures));
  }
  return ValidationReport::pass();
}

Triangulation::Triangulation(TriangulationData data) : data_(std::move(data)) {
  if (auto rep = validate(data_); !rep.ok) throw std::invalid_argument("invalid triangulation: " + rep.failure);
  const auto nt = data_.triangles.size();
  std::map<int, int> slot_of;
  for (std::size_t t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) slot_of[data_.triangles[t][static_cast<std::size_t>(s)]] = static_cast<int>(3 * t) + s;
  }
  slot_edge_.assign(3 * nt, -1);
  slot_mate_.assign(3 * nt, -1);
  edge_slots_.resize(data_.gluing.size());
  for (std::size_t e = 0; e < data_.edge_order.size(); ++e) {
    const auto& g = data_.gluing[static_cast<std::size_t>(data_.edge_order[e])];
    int a = slot_of.at(g[0]), b = slot_of.at(g[1]);
    if (a > b) std::swap(a, b);
    edge_slots_[e] = {a, b};
    slot_edge_[static_cast<std::size_t>(a)] = slot_edge_[static_cast<std::size_t>(b)] = static_cast<int>(e);
    slot_mate_[static_cast<std::size_t>(a)] = b;
    slot_mate_[static_cast<std::size_t>(b)] = a;
  }
  vertex_class_ = vertex_classes(static_cast<int>(nt), slot_mate_);
}

std::array<int, 3> Triangulation::triangle_edges(int t) const {
  return {edge_of(t, 0), edge_of(t, 1), edge_of(t, 2)};
}

std::array<int, 2> Triangulation::edge_endpoints(int e) const {
  const int s = edge_slots(e)[0];
  const int t = s / 3, i = s % 3;
  return {vertex_class(t, i), vertex_class(t, (i + 1) % 3)};
}

std::array<int, 3> Triangulation::corner_edges(int corner) const {
  const int t = corner / 3, k = corner % 3;
  return {edge_of(t, (k + 2) % 3), edge_of(t, k), edge_of(t, (k + 1) % 3)};
}

EdgeNeighborhood Triangulation::edge_neighborhood(int e) const {
  if (e < 0 || e >= num_edges()) throw std::out_of_range("edge index out of range");
  const auto [s1, s2] = edge_slots(e);
  const int t1 = s1 / 3, i1 = s1 % 3;
  const int t2 = s2 / 3, i2 = s2 % 3;
  EdgeNeighborhood nb;
  nb.edge = e;
  nb.triangles = {t1, t2};
  nb.a = edge_of(t1, (i1 + 1) % 3);
  nb.b = edge_of(t1, (i1 + 2) % 3);
  nb.c = edge_of(t2, (i2 + 1) % 3);
  nb.d = edge_of(t2, (i2 + 2) % 3);
  const int c1 = 3 * t2 + i2;             // {d, e}
  const int c2 = 3 * t2 + (i2 + 1) % 3;   // {e, c}
  const int c3 = 3 * t1 + (i1 + 1) % 3;   // {e, a}
  const int c4 = 3 * t1 + i1;             // {b, e}
  nb.corners = {c1, c2, c3, c4};
  return nb;
}

namespace {

// Builds TriangulationData from a slot-level mate table: labels are slot
// ids, edges numbered by first appearance of a slot.
TriangulationData from_mates(int genus, int punctures, const std::vector<int>& mate) {
  TriangulationData d;
  d.genus = genus;
  d.punctures = punctures;
  const int nt = static_cast<int>(mate.size()) / 3;
  for (int t = 0; t < nt; ++t) d.triangles.push_back({3 * t, 3 * t + 1, 3 * t + 2});
  for (int s = 0; s < static_cast<int>(mate.size()); ++s) {
    if (s < mate[static_cast<std::size_t>(s)]) d.gluing.push_back({s, mate[static_cast<std::size_t>(s)]});
  }
  d.edge_order.resize(d.gluing.size());
  std::iota(d.edge_order.begin(), d.edge_order.end(), 0);
  return d;
}

void glue(std::vector<int>& mate, int a, int b) {
  mate[static_cast<std::size_t>(a)] = b;
  mate[static_cast<std::size_t>(b)] = a;
}

}  // namespace

TriangulationData standard_triangulation_data(int genus, int punctures) {
  if (genus < 0 || punctures < 1 || (genus == 0 && punctures <= 2)) {
    throw std::invalid_argument("surface (g=" + std::to_string(genus) + ", p=" + std::to_string(punctures) +
                                ") has no ideal triangulation");
  }
  std::vector<int> mate;
  int have = 0;
  if (genus == 0) {
    mate.assign(6, -1);
    glue(mate, 0, 3);
    glue(mate, 2, 4);
    glue(mate, 1, 5);
    have = 3;
  } else {
    const int sides = 4 * genus;
    const int nt = sides - 2;
    mate.assign(static_cast<std::size_t>(3 * nt), -1);
    auto polygon_slot = [&](int side) {
      if (side == 0) return 0;
      if (side == sides - 1) return 3 * (nt - 1) + 2;
      return 3 * (side - 1) + 1;
    };
    for (int j = 0; j < genus; ++j) {
      glue(mate, polygon_slot(4 * j), polygon_slot(4 * j + 2));
      glue(mate, polygon_slot(4 * j + 1), polygon_slot(4 * j + 3));
    }
    for (int t = 0; t + 1 < nt; ++t) glue(mate, 3 * t + 2, 3 * (t + 1));
    have = 1;
  }
  for (; have < punctures; ++have) {
    // stellar subdivision of the last triangle t into t, B, C
    const int t = static_cast<int>(mate.size()) / 3 - 1;
    const int B = t + 1, C = t + 2;
    const int old1 = mate[static_cast<std::size_t>(3 * t + 1)];
    const int old2 = mate[static_cast<std::size_t>(3 * t + 2)];
    mate.resize(mate.size() + 6, -1);
    glue(mate, 3 * B, old1);
    glue(mate, 3 * C, old2);
    glue(mate, 3 * t + 1, 3 * B + 2);
    glue(mate, 3 * B + 1, 3 * C + 2);
    glue(mate, 3 * C + 1, 3 * t + 2);
  }
  return from_mates(genus, punctures, mate);
}

Triangulation standard_triangulation(int genus, int punctures) {
  return Triangulation(standard_triangulation_data(genus, punctures));
}

}  // namespace skein
