#include "skein/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace skein {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntMatrix M(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < M.rows(); ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (int j = 0; j < cols; ++j) M(i, j) = BigInt(static_cast<long>(r[static_cast<std::size_t>(j)]));
  }
  return M;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(int dst, int src, const BigInt& k) {
  if (k == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(int dst, int src, const BigInt& k) {
  if (k == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt trunc_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& M) {
  HermiteResult res{M, IntMatrix::identity(M.rows()), 0, {}};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  int r = 0;
  for (int c = 0; c < H.cols() && r < H.rows(); ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < H.rows(); ++i) {
        if (H(i, c) != 0 && (best < 0 || abs(H(i, c)) < abs(H(best, c)))) best = i;
      }
      if (best < 0) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool clean = true;
      for (int i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        const BigInt q = -trunc_div(H(i, c), H(r, c));
        H.add_row(i, r, q);
        U.add_row(i, r, q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      const BigInt q = -floor_div(H(i, c), H(r, c));
      H.add_row(i, r, q);
      U.add_row(i, r, q);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

SmithResult smith_normal_form(const IntMatrix& M) {
  SmithResult res{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), {}};
  IntMatrix& D = res.D;
  const int k = std::min(D.rows(), D.cols());
  for (int t = 0; t < k; ++t) {
    bool any = false;
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < D.rows(); ++i)
        for (int j = t; j < D.cols(); ++j)
          if (D(i, j) != 0 && (bi < 0 || abs(D(i, j)) < abs(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;
      any = true;
      D.swap_rows(t, bi);
      res.U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      res.V.swap_cols(t, bj);
      bool clean = true;
      for (int i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        const BigInt q = -trunc_div(D(i, t), D(t, t));
        D.add_row(i, t, q);
        res.U.add_row(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        const BigInt q = -trunc_div(D(t, j), D(t, t));
        D.add_col(j, t, q);
        res.V.add_col(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < D.rows() && bad < 0; ++i)
        for (int j = t + 1; j < D.cols(); ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      D.add_row(t, bad, BigInt(1));
      res.U.add_row(t, bad, BigInt(1));
    }
    if (!any) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      res.U.negate_row(t);
    }
  }
  for (int t = 0; t < k; ++t) res.divisors.push_back(D(t, t));
  return res;
}

std::vector<std::vector<BigInt>> lattice_basis(const std::vector<std::vector<BigInt>>& generators, int dim) {
  IntMatrix G(static_cast<int>(generators.size()), dim);
  for (int i = 0; i < G.rows(); ++i) {
    if (static_cast<int>(generators[static_cast<std::size_t>(i)].size()) != dim) {
      throw std::invalid_argument("lattice_basis: generator of wrong length");
    }
    for (int j = 0; j < dim; ++j) G(i, j) = generators[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const auto h = hermite_normal_form(G);
  std::vector<std::vector<BigInt>> basis;
  for (int i = 0; i < h.rank; ++i) {
    std::vector<BigInt> row(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) row[static_cast<std::size_t>(j)] = h.H(i, j);
    basis.push_back(std::move(row));
  }
  return basis;
}

ModularLattice::ModularLattice(std::int64_t modulus, int dim) : modulus_(modulus), dim_(dim) {
  if (modulus < 1 || dim < 0) throw std::invalid_argument("ModularLattice: bad modulus or dimension");
  rows_.assign(static_cast<std::size_t>(dim), std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < dim; ++i) rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = modulus;
}

bool ModularLattice::contains(std::vector<std::int64_t> v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("ModularLattice: wrong length");
  for (auto& x : v) x = mod(x);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    const auto& p = rows_[c];
    if (v[c] % p[c] != 0) return false;
    const std::int64_t k = v[c] / p[c];
    for (std::size_t j = c; j < v.size(); ++j) v[j] = mod(v[j] - k * p[j]);
  }
  return true;
}

bool ModularLattice::insert(std::vector<std::int64_t> v) {
  if (contains(v)) return false;
  for (auto& x : v) x = mod(x);
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    auto& p = rows_[c];
    // extended gcd: g = a*p[c] + b*v[c]
    std::int64_t a = 1, b = 0, g = p[c];
    {
      std::int64_t a1 = 0, b1 = 1, g1 = v[c];
      while (g1 != 0) {
        const std::int64_t q = g / g1;
        std::tie(g, g1) = std::pair(g1, g - q * g1);
        std::tie(a, a1) = std::pair(a1, a - q * a1);
        std::tie(b, b1) = std::pair(b1, b - q * b1);
      }
    }
    const std::int64_t vp = v[c] / g, pp = p[c] / g;
    std::vector<std::int64_t> np(v.size(), 0), nv(v.size(), 0);
    for (std::size_t j = c; j < v.size(); ++j) {
      np[j] = mod(a * p[j] + b * v[j]);
      nv[j] = mod(vp * p[j] - pp * v[j]);
    }
    if (np[c] == 0) np[c] = modulus_;
    p = std::move(np);
    v = std::move(nv);
  }
  return true;
}

}  // namespace skein
