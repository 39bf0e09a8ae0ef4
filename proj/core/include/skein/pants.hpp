#pragma once

#include "skein/coloring.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/int_matrix.hpp"
#include "skein/root_data.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace skein {

/// Pants decomposition of a closed genus-g surface, recorded as its dual
/// trivalent graph: one vertex per pair of pants, one edge per pants curve.
/// The graph must be connected, trivalent and loop-free (multi-edges are
/// fine). `dual()` is the ideal triangulation with one triangle per pants
/// whose sides are the three incident curves in increasing index order;
/// its edge i is pants curve i.
class PantsDecomposition {
 public:
  /// Throws std::invalid_argument if the graph is not as above.
  PantsDecomposition(int genus, std::vector<std::array<int, 2>> curves);

  int genus() const { return genus_; }
  int num_pants() const { return 2 * genus_ - 2; }
  int num_curves() const { return 3 * genus_ - 3; }
  const std::vector<std::array<int, 2>>& curves() const { return curves_; }
  /// Incident curves of pants v, increasing.
  const std::array<int, 3>& pants_curves(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  const Triangulation& dual() const { return *dual_; }

 private:
  int genus_;
  std::vector<std::array<int, 2>> curves_;
  std::vector<std::array<int, 3>> incident_;
  std::shared_ptr<const Triangulation> dual_;
};

/// Necklace of theta graphs: pants v_0 .. v_{2g-3} in a cycle, joined by a
/// double edge from v_i to v_{i+1} for even i and a single edge for odd i.
/// g = 2 is the theta graph. Throws std::invalid_argument for g < 2.
PantsDecomposition standard_pants(int genus);

/// Dehn-Thurston index: intersection numbers n and twists t per pants curve.
struct DTIndex {
  std::vector<std::int64_t> n;
  std::vector<std::int64_t> t;

  friend auto operator<=>(const DTIndex&, const DTIndex&) = default;
};

/// Ind: n >= 0, even per-pants sums, t_i >= 0 where n_i = 0.
bool is_in_ind(const PantsDecomposition& P, const DTIndex& x);
/// Ind^Δ: per-pants triangle inequalities in addition, and t_i = 0 where n_i = 0.
bool is_triangular(const PantsDecomposition& P, const DTIndex& x);

/// q-form of n on the dual triangulation.
std::vector<std::int64_t> q_of_n(const PantsDecomposition& P, const std::vector<std::int64_t>& n);

/// -n·q' + t·n' - n·t' with q' = q_of_n(n').
std::int64_t dt_exponent(const PantsDecomposition& P, const DTIndex& x, const DTIndex& y);

/// (ζ^{dt_exponent(x, y)}, x + y). Throws std::invalid_argument unless both
/// are triangular.
std::pair<Cyclotomic, DTIndex> dt_mul_basis(const PantsDecomposition& P, const RootData& root, const DTIndex& x,
                                            const DTIndex& y);

/// Element of the triangular graded algebra.
class TriangularElement {
 public:
  using Terms = std::map<DTIndex, Cyclotomic>;

  TriangularElement(std::shared_ptr<const PantsDecomposition> P, RootData root);
  static TriangularElement basis(std::shared_ptr<const PantsDecomposition> P, RootData root, DTIndex x);
  static TriangularElement basis(std::shared_ptr<const PantsDecomposition> P, RootData root, DTIndex x, Cyclotomic c);
  static TriangularElement unit(std::shared_ptr<const PantsDecomposition> P, RootData root);

  const PantsDecomposition& pants() const { return *P_; }
  const std::shared_ptr<const PantsDecomposition>& pants_ptr() const { return P_; }
  const RootData& root() const { return root_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DTIndex& x, const Cyclotomic& c);
  TriangularElement& operator+=(const TriangularElement& rhs);
  TriangularElement& operator*=(const Cyclotomic& c);
  friend TriangularElement operator+(TriangularElement a, const TriangularElement& b) { return a += b; }
  friend bool operator==(const TriangularElement& a, const TriangularElement& b) {
    return a.P_ == b.P_ && a.root_ == b.root_ && a.terms_ == b.terms_;
  }
  void require_compatible(const TriangularElement& other) const;

 private:
  std::shared_ptr<const PantsDecomposition> P_;
  RootData root_;
  Terms terms_;
};

TriangularElement dt_mul(const TriangularElement& x, const TriangularElement& y);

enum class DtRejection { None, NNotDivisible, TNotDivisible, QuotientNotTriangular, QuotientNotEven };
std::string to_string(DtRejection r);

struct DtCentralCertificate {
  bool accepted = false;
  DtRejection reason = DtRejection::None;
  int witness = -1;  // curve index, or pants index for the parity check
  DTIndex beta;
};

/// Accepts iff n ∈ m'Z, t ∈ mZ and β = (n/m, t/m) is triangular. When
/// 4 | n the twist part of β must also pair evenly with every vector of the
/// dual triangulation's mod-2 lattice basis.
DtCentralCertificate dt_central_test(const PantsDecomposition& P, const RootData& root, const DTIndex& x);

/// Brute-force centrality in the triangular algebra: the commutation
/// exponent 2·dt_exponent(x, y) vanishes mod n for every triangular probe y
/// with n'_i <= bound and |t'_i| <= bound.
///
/// The exponent is linear in the probe key (q', n', t') mod n, so probes
/// are folded into a ModularLattice once; each query then tests the
/// lattice basis, which is exactly equivalent to testing every probe.
class DtCenterOracle {
 public:
  DtCenterOracle(std::shared_ptr<const PantsDecomposition> P, RootData root, std::int64_t bound);

  bool is_central(const DTIndex& x) const;
  /// Same answer by sweeping every probe again; slow.
  bool is_central_direct(const DTIndex& x) const;

  std::int64_t bound() const { return bound_; }
  std::int64_t num_probes() const { return num_probes_; }
  const ModularLattice& key_lattice() const { return lattice_; }

 private:
  bool vanishes(const DTIndex& x, const std::vector<std::int64_t>& key) const;

  std::shared_ptr<const PantsDecomposition> P_;
  RootData root_;
  std::int64_t bound_;
  std::int64_t num_probes_ = 0;
  // (n', q') for every triangular n' in the box
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> shapes_;
  ModularLattice lattice_;
};

bool dt_center_oracle(const PantsDecomposition& P, const RootData& root, const DTIndex& x, std::int64_t bound);

struct DtCrossCheck {
  std::int64_t n_vectors = 0;   // triangular n-vectors in the box
  std::int64_t evaluated = 0;   // (test, oracle) pairs actually compared
  std::int64_t accepted = 0;
  std::int64_t disagreements = 0;
  std::vector<DTIndex> first_disagreements;  // at most a few
};

/// Compares dt_central_test with `oracle` on every triangular (n, t) with
/// n_i <= n_bound and |t_i| <= t_bound.
///
/// With `by_residue` the box is covered through classes: both verdicts
/// depend on t only mod m' (m' t_i shifts the exponent by a multiple of n,
/// and t/m changes by an even amount), so t runs over 0..m'-1 on supp(n)
/// when t_bound >= m' / 2; and when some n_i is not in m'Z both verdicts are
/// settled for all t at once, the test by its first step and the oracle by
/// the pure twist key e_i in its lattice, which pairs to 2 n_i != 0 mod n.
DtCrossCheck dt_center_crosscheck(const PantsDecomposition& P, const RootData& root, const DtCenterOracle& oracle,
                                  std::int64_t n_bound, std::int64_t t_bound, bool by_residue);

/// Calls fn(x) for every triangular x = (n, t) with n_i <= n_bound and
/// |t_i| <= t_bound, without materializing the list.
void for_each_triangular(const PantsDecomposition& P, std::int64_t n_bound, std::int64_t t_bound,
                         const std::function<void(const DTIndex&)>& fn);
/// Every triangular (n, t) with n_i <= n_bound and |t_i| <= t_bound.
std::vector<DTIndex> enumerate_triangular(const PantsDecomposition& P, std::int64_t n_bound, std::int64_t t_bound);
/// Every triangular n-vector with entries <= bound.
std::vector<std::vector<std::int64_t>> enumerate_triangular_n(const PantsDecomposition& P, std::int64_t bound);

/// Each 2δ_i is a signed sum of triangular n-vectors (via the dual
/// triangulation's two-delta decomposition).
bool two_delta_span_check(int genus);

}  // namespace skein
