#include "skein/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

namespace {

void require_edges(const Triangulation& T, const std::vector<std::int64_t>& f) {
  if (static_cast<int>(f.size()) != T.num_edges()) {
    throw std::invalid_argument("coloring has " + std::to_string(f.size()) + " entries, triangulation has " +
                                std::to_string(T.num_edges()) + " edges");
  }
}

std::int64_t at(const std::vector<std::int64_t>& f, int i) { return f[static_cast<std::size_t>(i)]; }

}  // namespace

bool has_even_triangle_sums(const Triangulation& T, const EdgeColoring& f) {
  require_edges(T, f);
  for (int t = 0; t < T.num_triangles(); ++t) {
    const auto e = T.triangle_edges(t);
    if ((at(f, e[0]) + at(f, e[1]) + at(f, e[2])) % 2 != 0) return false;
  }
  return true;
}

bool is_admissible(const Triangulation& T, const EdgeColoring& f) {
  require_edges(T, f);
  if (std::any_of(f.begin(), f.end(), [](std::int64_t x) { return x < 0; })) return false;
  for (int t = 0; t < T.num_triangles(); ++t) {
    const auto e = T.triangle_edges(t);
    const std::int64_t a = at(f, e[0]), b = at(f, e[1]), c = at(f, e[2]);
    if ((a + b + c) % 2 != 0) return false;
    if (a > b + c || b > a + c || c > a + b) return false;
  }
  return true;
}

CornerColoring to_corners(const Triangulation& T, const EdgeColoring& f) {
  if (!is_admissible(T, f)) throw std::invalid_argument("to_corners: coloring is not admissible");
  CornerColoring g(static_cast<std::size_t>(T.num_corners()));
  for (int c = 0; c < T.num_corners(); ++c) {
    const auto e = T.corner_edges(c);
    g[static_cast<std::size_t>(c)] = (at(f, e[0]) + at(f, e[1]) - at(f, e[2])) / 2;
  }
  return g;
}

EdgeColoring from_corners(const Triangulation& T, const CornerColoring& g) {
  if (static_cast<int>(g.size()) != T.num_corners()) throw std::invalid_argument("corner vector has wrong length");
  if (std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x < 0; })) {
    throw std::invalid_argument("from_corners: negative corner number");
  }
  EdgeColoring f(static_cast<std::size_t>(T.num_edges()), -1);
  for (int t = 0; t < T.num_triangles(); ++t) {
    for (int s = 0; s < 3; ++s) {
      // side s is bounded by the corners at vertices s and s+1
      const std::int64_t v = at(g, 3 * t + s) + at(g, 3 * t + (s + 1) % 3);
      auto& slot = f[static_cast<std::size_t>(T.edge_of(t, s))];
      if (slot >= 0 && slot != v) throw std::invalid_argument("from_corners: inconsistent corner numbers");
      slot = v;
    }
  }
  return f;
}

QVector q_form_doubled(const Triangulation& T, const EdgeColoring& f) {
  require_edges(T, f);
  QVector q(f.size());
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto nb = T.edge_neighborhood(e);
    q[static_cast<std::size_t>(e)] = at(f, nb.a) - at(f, nb.b) + at(f, nb.c) - at(f, nb.d);
  }
  return q;
}

QVector q_form(const Triangulation& T, const EdgeColoring& f) {
  QVector q = q_form_doubled(T, f);
  for (auto& x : q) {
    if (x % 2 != 0) throw std::invalid_argument("q_form: half-integral value; coloring has an odd triangle sum");
    x /= 2;
  }
  return q;
}

std::int64_t pairing(const Triangulation& T, const EdgeColoring& f, const EdgeColoring& f2) {
  require_edges(T, f2);
  return dot(q_form(T, f), f2);
}

int i2(const Triangulation& T, const EdgeColoring& f, const EdgeColoring& f2) {
  return static_cast<int>(((pairing(T, f, f2) % 2) + 2) % 2);
}

std::vector<EdgeColoring> mod2_lattice_basis(const Triangulation& T) {
  const int E = T.num_edges();
  const int R = T.num_triangles();
  // rows = triangles, reduce to RREF over GF(2)
  std::vector<std::vector<int>> A(static_cast<std::size_t>(R), std::vector<int>(static_cast<std::size_t>(E), 0));
  for (int t = 0; t < R; ++t)
    for (int e : T.triangle_edges(t)) A[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)] ^= 1;
  std::vector<int> pivot_of_col(static_cast<std::size_t>(E), -1);
  int r = 0;
  for (int c = 0; c < E && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[static_cast<std::size_t>(p)], A[static_cast<std::size_t>(r)]);
    for (int i = 0; i < R; ++i) {
      if (i == r || !A[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) continue;
      for (int j = 0; j < E; ++j) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^= A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivot_of_col[static_cast<std::size_t>(c)] = r++;
  }
  std::vector<EdgeColoring> basis;
  for (int free = 0; free < E; ++free) {
    if (pivot_of_col[static_cast<std::size_t>(free)] >= 0) continue;
    EdgeColoring v(static_cast<std::size_t>(E), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int c = 0; c < E; ++c) {
      const int row = pivot_of_col[static_cast<std::size_t>(c)];
      if (row >= 0 && A[static_cast<std::size_t>(row)][static_cast<std::size_t>(free)]) v[static_cast<std::size_t>(c)] = 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_even(const Triangulation& T, const EdgeColoring& f) {
  const QVector q = q_form(T, f);
  for (const auto& b : mod2_lattice_basis(T)) {
    if (dot(q, b) % 2 != 0) return false;
  }
  return true;
}

EdgeColoring peripheral_coloring(const Triangulation& T, int puncture) {
  if (puncture < 0 || puncture >= T.num_punctures()) throw std::invalid_argument("puncture index out of range");
  EdgeColoring f(static_cast<std::size_t>(T.num_edges()), 0);
  for (int e = 0; e < T.num_edges(); ++e) {
    for (int v : T.edge_endpoints(e)) f[static_cast<std::size_t>(e)] += (v == puncture);
  }
  return f;
}

std::vector<EdgeColoring> enumerate_admissible(const Triangulation& T, std::int64_t bound) {
  const int E = T.num_edges();
  // triangles become checkable once their largest edge index is assigned
  std::vector<std::vector<int>> closes(static_cast<std::size_t>(E));
  for (int t = 0; t < T.num_triangles(); ++t) {
    const auto e = T.triangle_edges(t);
    closes[static_cast<std::size_t>(*std::max_element(e.begin(), e.end()))].push_back(t);
  }
  std::vector<EdgeColoring> out;
  EdgeColoring f(static_cast<std::size_t>(E), 0);
  auto ok = [&](int t) {
    const auto e = T.triangle_edges(t);
    const std::int64_t a = at(f, e[0]), b = at(f, e[1]), c = at(f, e[2]);
    return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
  };
  auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
    if (i == E) {
      out.push_back(f);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      f[static_cast<std::size_t>(i)] = v;
      const auto& cl = closes[static_cast<std::size_t>(i)];
      if (std::all_of(cl.begin(), cl.end(), ok)) self(self, i + 1, left - v);
    }
    f[static_cast<std::size_t>(i)] = 0;
  };
  if (bound >= 0) rec(rec, 0, bound);
  return out;
}

TwoDeltaDecomposition two_delta_decomposition(const Triangulation& T, int edge) {
  if (edge < 0 || edge >= T.num_edges()) throw std::invalid_argument("edge index out of range");
  TwoDeltaDecomposition d;
  d.edge = edge;
  const auto ends = T.edge_endpoints(edge);
  d.loop = ends[0] == ends[1];
  EdgeColoring twice_delta(static_cast<std::size_t>(T.num_edges()), 0);
  twice_delta[static_cast<std::size_t>(edge)] = 2;
  if (d.loop) {
    const auto dv = peripheral_coloring(T, ends[0]);
    d.neighborhood = add(dv, scale(twice_delta, -1));
    d.terms = {{1, dv}, {-1, d.neighborhood}};
  } else {
    const auto d1 = peripheral_coloring(T, ends[0]);
    const auto d2 = peripheral_coloring(T, ends[1]);
    d.neighborhood = add(add(d1, d2), scale(twice_delta, -1));
    d.terms = {{1, d1}, {1, d2}, {-1, d.neighborhood}};
  }
  EdgeColoring sum(static_cast<std::size_t>(T.num_edges()), 0);
  for (const auto& [k, f] : d.terms) {
    if (!is_admissible(T, f)) throw std::logic_error("two_delta_decomposition: non-admissible term");
    sum = add(sum, scale(f, k));
  }
  if (sum != twice_delta) throw std::logic_error("two_delta_decomposition: terms do not sum to 2δ_e");
  return d;
}

std::int64_t ComponentDecomposition::num_curves() const {
  std::int64_t n = 0;
  for (const auto& c : components) n += c.multiplicity;
  return n;
}

EdgeColoring ComponentDecomposition::weighted_sum(int num_edges) const {
  EdgeColoring s(static_cast<std::size_t>(num_edges), 0);
  for (const auto& c : components) s = add(s, scale(c.primitive, c.multiplicity));
  return s;
}

ComponentDecomposition components(const Triangulation& T, const EdgeColoring& f) {
  const CornerColoring g = to_corners(T, f);
  const int S = 3 * T.num_triangles();
  // points: crossing positions on each side slot, numbered from the side's start
  std::vector<std::int64_t> offset(static_cast<std::size_t>(S) + 1, 0);
  for (int s = 0; s < S; ++s) {
    offset[static_cast<std::size_t>(s) + 1] = offset[static_cast<std::size_t>(s)] + at(f, T.edge_of(s / 3, s % 3));
  }
  const std::int64_t P = offset.back();
  std::vector<std::int64_t> parent(static_cast<std::size_t>(P));
  std::iota(parent.begin(), parent.end(), std::int64_t{0});
  auto find = [&](std::int64_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  auto point = [&](int slot, std::int64_t pos) { return offset[static_cast<std::size_t>(slot)] + pos; };
  for (int t = 0; t < T.num_triangles(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int out_slot = 3 * t + k;              // side k starts at vertex k
      const int in_slot = 3 * t + (k + 2) % 3;     // side k-1 ends at vertex k
      const std::int64_t in_len = at(f, T.edge_of(t, (k + 2) % 3));
      for (std::int64_t j = 0; j < at(g, 3 * t + k); ++j) unite(point(out_slot, j), point(in_slot, in_len - 1 - j));
    }
  }
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto [s1, s2] = T.edge_slots(e);
    const std::int64_t len = at(f, e);
    for (std::int64_t x = 0; x < len; ++x) unite(point(s1, x), point(s2, len - 1 - x));
  }
  // coloring of each curve, counted on the first side of every edge
  std::vector<std::int64_t> root_index(static_cast<std::size_t>(P), -1);
  std::vector<EdgeColoring> curves;
  for (int e = 0; e < T.num_edges(); ++e) {
    const int s1 = T.edge_slots(e)[0];
    for (std::int64_t x = 0; x < at(f, e); ++x) {
      const auto r = static_cast<std::size_t>(find(point(s1, x)));
      if (root_index[r] < 0) {
        root_index[r] = static_cast<std::int64_t>(curves.size());
        curves.emplace_back(static_cast<std::size_t>(T.num_edges()), 0);
      }
      curves[static_cast<std::size_t>(root_index[r])][static_cast<std::size_t>(e)] += 1;
    }
  }
  std::sort(curves.begin(), curves.end());
  std::vector<EdgeColoring> peripherals;
  for (int v = 0; v < T.num_punctures(); ++v) peripherals.push_back(peripheral_coloring(T, v));
  ComponentDecomposition out;
  for (const auto& c : curves) {
    if (!out.components.empty() && out.components.back().primitive == c) {
      ++out.components.back().multiplicity;
      continue;
    }
    Component comp{c, 1, -1};
    for (int v = 0; v < T.num_punctures(); ++v) {
      if (peripherals[static_cast<std::size_t>(v)] == c) comp.puncture = v;
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

EdgeColoring add(const EdgeColoring& a, const EdgeColoring& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coloring length mismatch");
  EdgeColoring c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

EdgeColoring scale(const EdgeColoring& a, std::int64_t k) {
  EdgeColoring c(a);
  for (auto& x : c) x *= k;
  return c;
}

std::int64_t dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t total(const EdgeColoring& f) { return std::accumulate(f.begin(), f.end(), std::int64_t{0}); }

}  // namespace skein
