#pragma once

#include "skein/cyclotomic.hpp"
#include "skein/torus.hpp"

#include <optional>
#include <vector>

namespace skein {

/// Square matrix over Q(ζ_n).
class CycMatrix {
 public:
  CycMatrix(int order, int size);
  static CycMatrix identity(int order, int size);

  int order() const { return order_; }
  int size() const { return size_; }
  CyclotomicQ& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * size_ + j)]; }
  const CyclotomicQ& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * size_ + j)]; }

  CycMatrix& operator+=(const CycMatrix& rhs);
  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.order_ == b.order_ && a.size_ == b.size_ && a.data_ == b.data_;
  }

  CyclotomicQ trace() const;
  /// The scalar c if this is c·I.
  std::optional<CyclotomicQ> scalar_value() const;

 private:
  int order_;
  int size_;
  std::vector<CyclotomicQ> data_;
};

/// Clock-and-shift representation of size N = m' with U = λ·diag(ζ^{2k})
/// and V = μ·(e_j -> e_{j+1}), so UV = ζ²VU. The basis element e_{p,q}
/// acts as X_{p,q} + X_{-p,-q} with X_{p,q} = ζ^{-pq} U^p V^q.
struct MatrixRep {
  RootData root;
  int size = 1;
  CyclotomicQ lambda;
  CyclotomicQ mu;
};

/// Builds the representation and verifies the algebra-map property on a
/// fixed sample of basis products. Throws std::invalid_argument for zero
/// λ or μ and std::logic_error if the check fails.
MatrixRep build_rep(const RootData& root, const CyclotomicQ& lambda, const CyclotomicQ& mu);

/// Exact check rep(x)·rep(y) == rep(fg_mul(x, y)) for all pairs of basis
/// elements from `sample`.
bool rep_hom_check(const MatrixRep& rep, const std::vector<TorusKey>& sample);

CycMatrix rep_basis(const MatrixRep& rep, std::int64_t p, std::int64_t q);
CycMatrix rep_apply(const MatrixRep& rep, const TorusElement& x);

/// Dimension over Q(ζ) of {X : XM = MX for every M in images}.
int commutant_dim(const std::vector<CycMatrix>& images);
/// Commutant of the images of e_{1,0}, e_{0,1}, e_{1,1}.
int commutant_dim(const MatrixRep& rep);

/// Scalars by which the basis elements `sample` act. Throws
/// std::logic_error if some image is not a scalar matrix.
std::vector<CyclotomicQ> central_character(const MatrixRep& rep, const std::vector<TorusKey>& sample);

/// θ: e_j -> e_{-j mod N}; intertwines the (λ, μ) and (λ⁻¹, μ⁻¹) reps.
CycMatrix flip_intertwiner(int order, int size);

/// S·rep1(e) == rep2(e)·S for each sampled basis element e.
bool intertwines(const CycMatrix& S, const MatrixRep& rep1, const MatrixRep& rep2, const std::vector<TorusKey>& sample);

}  // namespace skein
