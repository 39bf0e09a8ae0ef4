#pragma once

#include "skein/triangulation.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace skein {

// Colorings are plain integer vectors in the triangulation's edge order
// (EdgeColoring, QVector) or corner order (CornerColoring). Every function
// taking a Triangulation checks lengths and throws std::invalid_argument
// on mismatch.
using EdgeColoring = std::vector<std::int64_t>;
using CornerColoring = std::vector<std::int64_t>;
using QVector = std::vector<std::int64_t>;

/// Nonnegative, even sum on every triangle, triangle inequalities.
bool is_admissible(const Triangulation& T, const EdgeColoring& f);

/// Even sum on every triangle (the lattice L spanned by admissible colorings).
bool has_even_triangle_sums(const Triangulation& T, const EdgeColoring& f);

/// Corner numbers g(c) = (f(a) + f(b) - f(c)) / 2 where c is the side
/// opposite the corner. Throws std::invalid_argument unless f is admissible.
CornerColoring to_corners(const Triangulation& T, const EdgeColoring& f);

/// Inverse of to_corners. Throws std::invalid_argument on negative entries
/// or when the two triangles at an edge disagree on its value.
EdgeColoring from_corners(const Triangulation& T, const CornerColoring& g);

/// 2q: the unhalved q-form f(a) - f(b) + f(c) - f(d), defined on all of Z^E.
QVector q_form_doubled(const Triangulation& T, const EdgeColoring& f);

/// q(e) = (f(a) - f(b) + f(c) - f(d)) / 2 in the EdgeNeighborhood
/// convention. Linear; throws std::invalid_argument if some entry is
/// half-integral (never happens on the lattice L).
QVector q_form(const Triangulation& T, const EdgeColoring& f);

/// q_f · f'. Antisymmetric.
std::int64_t pairing(const Triangulation& T, const EdgeColoring& f, const EdgeColoring& f2);

/// pairing mod 2, in {0, 1}.
int i2(const Triangulation& T, const EdgeColoring& f, const EdgeColoring& f2);

/// 0/1 basis, in reduced echelon form, of the kernel of the per-triangle
/// sum map (Z/2)^E -> (Z/2)^triangles.
std::vector<EdgeColoring> mod2_lattice_basis(const Triangulation& T);

/// pairing(f, b) even for all b in mod2_lattice_basis(T).
bool is_even(const Triangulation& T, const EdgeColoring& f);

/// f(e) = number of endpoints of e at puncture v.
EdgeColoring peripheral_coloring(const Triangulation& T, int puncture);

/// Every admissible f with sum(f) <= bound, in lexicographic order.
std::vector<EdgeColoring> enumerate_admissible(const Triangulation& T, std::int64_t bound);

struct TwoDeltaDecomposition {
  int edge = -1;
  bool loop = false;  // e has both ends at the same puncture
  EdgeColoring neighborhood;  // f_N, boundary of a regular neighborhood of e
  // coefficient and admissible coloring; sums to 2·δ_e
  std::vector<std::pair<std::int64_t, EdgeColoring>> terms;
};

/// Writes 2δ_e as a signed sum of admissible colorings: f_∂v1 + f_∂v2 - f_N
/// for an edge between distinct punctures, f_∂v - f_N for a loop. Throws
/// std::logic_error if a term is not admissible or the sum is wrong.
TwoDeltaDecomposition two_delta_decomposition(const Triangulation& T, int edge);

struct Component {
  EdgeColoring primitive;
  std::int64_t multiplicity = 0;
  int puncture = -1;  // >= 0 when the primitive is a peripheral loop
  bool peripheral() const { return puncture >= 0; }
};

struct ComponentDecomposition {
  std::vector<Component> components;  // sorted by primitive
  /// l(f): total number of connected curves.
  std::int64_t num_curves() const;
  EdgeColoring weighted_sum(int num_edges) const;
};

/// Traces the normal curve of an admissible f arc by arc and groups the
/// resulting closed curves by coloring.
ComponentDecomposition components(const Triangulation& T, const EdgeColoring& f);

EdgeColoring add(const EdgeColoring& a, const EdgeColoring& b);
EdgeColoring scale(const EdgeColoring& a, std::int64_t k);
std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);
std::int64_t total(const EdgeColoring& f);

}  // namespace skein
