#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skein {

/// Raw combinatorial description of an ideal triangulation, exactly as it
/// is read from / written to JSON.
///
/// Each triangle lists three side labels in counterclockwise order. Every
/// label must occur in exactly one gluing pair; gluings are orientation
/// reversing (the start of one side meets the end of the other). Edge i of
/// the triangulation is the gluing pair gluing[edge_order[i]].
struct TriangulationData {
  int genus = 0;
  int punctures = 0;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> gluing;
  std::vector<int> edge_order;

  friend bool operator==(const TriangulationData&, const TriangulationData&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::string failure;  // first violation found, empty when ok

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string why) { return {false, std::move(why)}; }
};

/// Checks every structural invariant: unique labels, a perfect pairing of
/// sides with no side glued to itself or to another side of its own
/// triangle, a valid edge order, connectivity, the Euler counts
/// |E| = 3(2g-2+p) and #triangles = 2(2g-2+p), and exactly p vertex classes.
ValidationReport validate(const TriangulationData& data);

/// Local picture around an edge e, used by the q-form.
///
/// The first incident triangle is the one holding the side of e with the
/// smaller global slot index (3·triangle + slot). Walking counterclockwise
/// from e, the first triangle shows (e, a, b) and the second (e, c, d).
/// Corners: c3 = {e,a} and c4 = {e,b} in the first triangle, c2 = {e,c} and
/// c1 = {e,d} in the second, so that q(e) = g(c3) - g(c1) = g(c2) - g(c4).
struct EdgeNeighborhood {
  int edge = -1;
  std::array<int, 2> triangles{};
  int a = -1, b = -1, c = -1, d = -1;
  std::array<int, 4> corners{};  // c1, c2, c3, c4 as corner ids

  friend bool operator==(const EdgeNeighborhood&, const EdgeNeighborhood&) = default;
};

/// Validated ideal triangulation of a punctured surface without folded
/// triangles. Immutable after construction.
///
/// Indexing: side (t, s) has slot id 3t+s; vertex k of triangle t sits
/// between slots k-1 and k, so side s runs from vertex s to vertex s+1.
/// Corner id 3t+k is the corner at vertex k, i.e. the pair of sides
/// {k-1, k}.
class Triangulation {
 public:
  /// Throws std::invalid_argument carrying the validation failure.
  explicit Triangulation(TriangulationData data);

  const TriangulationData& data() const { return data_; }
  int genus() const { return data_.genus; }
  int num_punctures() const { return data_.punctures; }
  int num_triangles() const { return static_cast<int>(data_.triangles.size()); }
  int num_edges() const { return static_cast<int>(edge_slots_.size()); }
  int num_corners() const { return 3 * num_triangles(); }

  int edge_of(int triangle, int slot) const { return slot_edge_[static_cast<std::size_t>(3 * triangle + slot)]; }
  /// The three edges of a triangle in counterclockwise order.
  std::array<int, 3> triangle_edges(int triangle) const;
  /// Slot ids (3t+s) of the two sides forming edge e, smaller first.
  std::array<int, 2> edge_slots(int e) const { return edge_slots_[static_cast<std::size_t>(e)]; }
  /// Puncture class of vertex k of triangle t.
  int vertex_class(int triangle, int k) const { return vertex_class_[static_cast<std::size_t>(3 * triangle + k)]; }
  /// Puncture classes of the two endpoints of e (start and end of its first side).
  std::array<int, 2> edge_endpoints(int e) const;
  /// Puncture at corner id c.
  int corner_puncture(int corner) const { return vertex_class_[static_cast<std::size_t>(corner)]; }
  /// Edges {k-1, k} bounding corner 3t+k, with the third edge last.
  std::array<int, 3> corner_edges(int corner) const;

  EdgeNeighborhood edge_neighborhood(int e) const;

 private:
  TriangulationData data_;
  std::vector<int> slot_edge_;
  std::vector<int> slot_mate_;
  std::vector<std::array<int, 2>> edge_slots_;
  std::vector<int> vertex_class_;
};

/// Deterministic triangulation of the genus-g surface with p punctures.
///
/// Scheme: for g >= 1 the 4g-gon with side word a1 b1 a1^-1 b1^-1 ... is fanned
/// from its first vertex (one puncture); for g = 0 two triangles are glued
/// along all three sides with opposite orientations (three punctures).
/// Every further puncture is added by a stellar subdivision of the
/// currently last triangle. Throws std::invalid_argument for p < 1 or
/// (g, p) in {(0,1), (0,2)}.
TriangulationData standard_triangulation_data(int genus, int punctures);
Triangulation standard_triangulation(int genus, int punctures);

/// Union-find of triangle vertices under an orientation-reversing side
/// pairing. Returns the class id (dense, ordered by first occurrence) of
/// every vertex slot 3t+k. `mate` maps each slot id to the slot it is glued to.
std::vector<int> vertex_classes(int num_triangles, const std::vector<int>& mate);

}  // namespace skein
