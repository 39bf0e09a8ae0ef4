#include "skein/torus_rep.hpp"

#include <stdexcept>
#include <string>

namespace skein {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  x %= n;
  return x < 0 ? x + n : x;
}

const std::vector<TorusKey>& hom_sample() {
  static const std::vector<TorusKey> s{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {3, -2}};
  return s;
}

}  // namespace

CycMatrix::CycMatrix(int order, int size)
    : order_(order), size_(size), data_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), CyclotomicQ(order)) {
  if (size < 0) throw std::invalid_argument("CycMatrix: negative size");
}

CycMatrix CycMatrix::identity(int order, int size) {
  CycMatrix I(order, size);
  for (int i = 0; i < size; ++i) I(i, i) = CyclotomicQ::one(order);
  return I;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& rhs) {
  if (order_ != rhs.order_ || size_ != rhs.size_) throw std::invalid_argument("CycMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.order_ != b.order_ || a.size_ != b.size_) throw std::invalid_argument("CycMatrix: shape mismatch");
  CycMatrix c(a.order_, a.size_);
  for (int i = 0; i < a.size_; ++i)
    for (int k = 0; k < a.size_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < a.size_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

CyclotomicQ CycMatrix::trace() const {
  CyclotomicQ t(order_);
  for (int i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

std::optional<CyclotomicQ> CycMatrix::scalar_value() const {
  if (size_ == 0) return std::nullopt;
  const CyclotomicQ c = (*this)(0, 0);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) {
      const auto& x = (*this)(i, j);
      if (i == j ? !(x == c) : !x.is_zero()) return std::nullopt;
    }
  return c;
}

CycMatrix rep_basis(const MatrixRep& rep, std::int64_t p, std::int64_t q) {
  const int n = rep.root.n;
  const int N = rep.size;
  CycMatrix M(n, N);
  // X_{p,q} e_j = ζ^{-pq} μ^q λ^p ζ^{2p(j+q)} e_{j+q}, plus the same with (-p,-q)
  for (const std::int64_t sgn : {1, -1}) {
    const std::int64_t a = sgn * p, b = sgn * q;
    const CyclotomicQ scale = ipow(rep.mu, b) * ipow(rep.lambda, a);
    for (int j = 0; j < N; ++j) {
      const auto row = static_cast<int>(mod(j + b, N));
      M(row, j) += scale.times_zeta(-a * b + 2 * a * (j + b));
    }
  }
  return M;
}

CycMatrix rep_apply(const MatrixRep& rep, const TorusElement& x) {
  if (!(x.root() == rep.root)) throw std::invalid_argument("rep_apply: root mismatch");
  CycMatrix M(rep.root.n, rep.size);
  for (const auto& [k, c] : x.terms()) {
    const CyclotomicQ cq = to_field(c);
    CycMatrix B = k == TorusKey{0, 0} ? CycMatrix::identity(rep.root.n, rep.size) : rep_basis(rep, k.first, k.second);
    for (int i = 0; i < rep.size; ++i)
      for (int j = 0; j < rep.size; ++j)
        if (!B(i, j).is_zero()) M(i, j) += B(i, j) * cq;
  }
  return M;
}

bool rep_hom_check(const MatrixRep& rep, const std::vector<TorusKey>& sample) {
  for (const auto& a : sample) {
    const TorusElement x = TorusElement::basis(rep.root, a.first, a.second);
    const CycMatrix X = rep_apply(rep, x);
    for (const auto& b : sample) {
      const TorusElement y = TorusElement::basis(rep.root, b.first, b.second);
      if (!(X * rep_apply(rep, y) == rep_apply(rep, fg_mul(x, y)))) return false;
    }
  }
  return true;
}

MatrixRep build_rep(const RootData& root, const CyclotomicQ& lambda, const CyclotomicQ& mu) {
  if (lambda.order() != root.n || mu.order() != root.n) throw std::invalid_argument("build_rep: parameter order mismatch");
  if (lambda.is_zero() || mu.is_zero()) throw std::invalid_argument("build_rep: λ and μ must be nonzero");
  MatrixRep rep{root, root.m_prime, lambda, mu};
  if (!rep_hom_check(rep, hom_sample())) throw std::logic_error("build_rep: representation is not an algebra map");
  return rep;
}

int commutant_dim(const std::vector<CycMatrix>& images) {
  if (images.empty()) throw std::invalid_argument("commutant_dim: no generators");
  const int order = images.front().order();
  const int N = images.front().size();
  const int V = N * N;
  // echelon rows keyed by pivot column, pivot normalized to 1
  std::vector<std::vector<CyclotomicQ>> pivots(static_cast<std::size_t>(V));
  std::vector<bool> has(static_cast<std::size_t>(V), false);
  int rank = 0;
  auto var = [N](int a, int b) { return static_cast<std::size_t>(a * N + b); };
  for (const auto& M : images) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        // (XM - MX)_{ij} = Σ_k x_{ik} M_{kj} - Σ_k M_{ik} x_{kj}
        std::vector<CyclotomicQ> row(static_cast<std::size_t>(V), CyclotomicQ(order));
        for (int k = 0; k < N; ++k) {
          if (!M(k, j).is_zero()) row[var(i, k)] += M(k, j);
          if (!M(i, k).is_zero()) row[var(k, j)] -= M(i, k);
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (row[c].is_zero()) continue;
          if (has[c]) {
            const CyclotomicQ f = row[c];
            const auto& p = pivots[c];
            for (std::size_t d = c; d < row.size(); ++d)
              if (!p[d].is_zero()) row[d] -= f * p[d];
            continue;
          }
          const CyclotomicQ inv = inverse(row[c]);
          for (std::size_t d = c; d < row.size(); ++d)
            if (!row[d].is_zero()) row[d] *= inv;
          pivots[c] = std::move(row);
          has[c] = true;
          ++rank;
          break;
        }
      }
  }
  return V - rank;
}

int commutant_dim(const MatrixRep& rep) {
  return commutant_dim({rep_basis(rep, 1, 0), rep_basis(rep, 0, 1), rep_basis(rep, 1, 1)});
}

std::vector<CyclotomicQ> central_character(const MatrixRep& rep, const std::vector<TorusKey>& sample) {
  std::vector<CyclotomicQ> out;
  for (const auto& k : sample) {
    const CycMatrix M = k == TorusKey{0, 0} ? CycMatrix::identity(rep.root.n, rep.size) : rep_basis(rep, k.first, k.second);
    auto c = M.scalar_value();
    if (!c) {
      throw std::logic_error("central_character: e_{" + std::to_string(k.first) + "," + std::to_string(k.second) +
                             "} does not act by a scalar");
    }
    out.push_back(*c);
  }
  return out;
}

CycMatrix flip_intertwiner(int order, int size) {
  CycMatrix S(order, size);
  for (int j = 0; j < size; ++j) S(static_cast<int>(mod(-j, size)), j) = CyclotomicQ::one(order);
  return S;
}

bool intertwines(const CycMatrix& S, const MatrixRep& rep1, const MatrixRep& rep2, const std::vector<TorusKey>& sample) {
  for (const auto& k : sample) {
    if (!(S * rep_basis(rep1, k.first, k.second) == rep_basis(rep2, k.first, k.second) * S)) return false;
  }
  return true;
}

}  // namespace skein
