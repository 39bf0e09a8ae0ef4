#pragma once

#include "skein/coloring.hpp"
#include "skein/cyclotomic.hpp"
#include "skein/root_data.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace skein {

/// Element of the lead-term algebra: a finite sum of admissible colorings
/// with coefficients in Z[ζ]. Basis products follow
/// [f][f'] = ζ^{pairing(f,f')} [f+f'].
class GradedElement {
 public:
  using Terms = std::map<EdgeColoring, Cyclotomic>;

  GradedElement(std::shared_ptr<const Triangulation> T, RootData root);

  /// c·[f]; throws std::invalid_argument unless f is admissible.
  static GradedElement basis(std::shared_ptr<const Triangulation> T, RootData root, EdgeColoring f);
  static GradedElement basis(std::shared_ptr<const Triangulation> T, RootData root, EdgeColoring f, Cyclotomic c);
  static GradedElement unit(std::shared_ptr<const Triangulation> T, RootData root);

  const Triangulation& triangulation() const { return *T_; }
  const std::shared_ptr<const Triangulation>& triangulation_ptr() const { return T_; }
  const RootData& root() const { return root_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·[f], dropping the term if it cancels.
  void add_term(const EdgeColoring& f, const Cyclotomic& c);

  GradedElement& operator+=(const GradedElement& rhs);
  GradedElement& operator*=(const Cyclotomic& c);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend bool operator==(const GradedElement& a, const GradedElement& b);

  void require_compatible(const GradedElement& other) const;

 private:
  std::shared_ptr<const Triangulation> T_;
  RootData root_;
  Terms terms_;
};

/// (ζ^{pairing(f,f')}, f + f').
std::pair<Cyclotomic, EdgeColoring> lt_mul_basis(const Triangulation& T, const RootData& root, const EdgeColoring& f,
                                                 const EdgeColoring& f2);

GradedElement mul(const GradedElement& x, const GradedElement& y);

/// 2·pairing(f, f') reduced into [0, n).
int commutation_exponent(const Triangulation& T, const RootData& root, const EdgeColoring& f, const EdgeColoring& f2);

/// Lead term of the threading of f: the basis element m·f.
GradedElement thread_lead(std::shared_ptr<const Triangulation> T, const RootData& root, const EdgeColoring& f);

enum class LeadRejection { None, QNotDivisible, CornerNotDivisible, NotEven };
std::string to_string(LeadRejection r);

/// Outcome of the punctured-surface centrality procedure. On acceptance
/// f = m·beta + Σ_v r[v]·∂_v.
struct CentralLeadCertificate {
  bool accepted = false;
  LeadRejection reason = LeadRejection::None;
  int witness = -1;  // edge (q test) or corner (corner test) that failed
  EdgeColoring beta;
  std::vector<std::int64_t> r;
  bool beta_even = false;
};

CentralLeadCertificate central_lead_test(const Triangulation& T, const RootData& root, const EdgeColoring& f);

/// Brute force: 2·pairing(f, b) ≡ 0 mod n for every admissible b with
/// total weight <= bound.
bool central_lead_oracle(const Triangulation& T, const RootData& root, const EdgeColoring& f, std::int64_t bound);

/// Admissible f of total weight <= bound accepted by central_lead_test.
std::vector<EdgeColoring> center_enumerate(const Triangulation& T, const RootData& root, std::int64_t bound);

/// {m·β + Σ r_v ∂_v : β admissible (even when 4 | n)} within total weight
/// <= bound, built independently of central_lead_test. Sorted, no repeats.
std::vector<EdgeColoring> predicted_center(const Triangulation& T, const RootData& root, std::int64_t bound);

struct PiDegree {
  BigInt N;
  BigInt rank;  // N²
  int radical_rank = 0;
  std::vector<BigInt> divisors;  // SNF of the Gram matrix on a basis of L
  std::vector<EdgeColoring> lattice_basis;  // basis of L (HNF rows)
};

/// PI degree of the lead-term algebra of T at the given root. Throws
/// std::logic_error if N² is not a perfect square.
PiDegree pi_degree(const Triangulation& T, const RootData& root);

/// Basis of L = {f : every triangle sum even}.
std::vector<EdgeColoring> even_lattice_basis(const Triangulation& T);

/// 2·pairing(f, b) ≡ 0 mod n for every b in L.
bool in_radical(const Triangulation& T, const RootData& root, const EdgeColoring& f);

enum class ShadowTarget { CharacterVariety, EvenCharacterVariety };  // X(F), X₀(F)
std::string to_string(ShadowTarget t);

struct ShadowInfo {
  int dimension = 0;
  ShadowTarget target = ShadowTarget::CharacterVariety;
  BigInt degree_bound;  // m^p
};

/// Dimension of the character variety of the genus-g surface with p
/// punctures, the target of the shadow map and the degree bound m^p.
ShadowInfo shadow_variety_info(int genus, int punctures, const RootData& root);

}  // namespace skein
