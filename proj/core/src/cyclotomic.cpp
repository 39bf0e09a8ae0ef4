#include "skein/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace skein {

namespace detail {

namespace {

std::unique_ptr<CyclotomicTable> build_table(int order) {
  auto t = std::make_unique<CyclotomicTable>();
  t->order = order;
  t->modulus = cyclotomic_poly(order);
  t->phi = t->modulus.degree();
  const auto phi = static_cast<std::size_t>(t->phi);

  std::vector<long> cur(phi, 0);
  cur[0] = 1;  // phi >= 1 for every order
  t->powers.reserve(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    t->powers.push_back(cur);
    // multiply by x and fold the overflow coefficient with Φ_n (monic)
    long top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < phi; ++i) {
        cur[i] -= top * t->modulus.coeffs()[i].get_si();
      }
    }
  }
  return t;
}

}  // namespace

const CyclotomicTable& cyclotomic_table(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[order];
  if (!slot) slot = build_table(order);
  return *slot;
}

}  // namespace detail

namespace {

long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

template <class Coeff>
void addmul_small(Coeff& acc, const Coeff& x, long s) {
  if (s == 0) return;
  acc += x * s;
}

template <>
void addmul_small<BigInt>(BigInt& acc, const BigInt& x, long s) {
  if (s > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(s));
  } else if (s < 0) {
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-s));
  }
}

template <class Coeff>
void addmul(Coeff& acc, const Coeff& a, const Coeff& b) {
  acc += a * b;
}

template <>
void addmul<BigInt>(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

template <class Coeff>
BasicCyclotomic<Coeff>::BasicCyclotomic(int order)
    : table_(&detail::cyclotomic_table(order)),
      coeffs_(static_cast<std::size_t>(table_->phi)) {}

template <class Coeff>
BasicCyclotomic<Coeff>::BasicCyclotomic(int order, std::vector<Coeff> coeffs)
    : table_(&detail::cyclotomic_table(order)) {
  if constexpr (std::is_same_v<Coeff, Rational>) {
    for (auto& c : coeffs) {
      if (c.get_den() == 0) throw std::invalid_argument("cyclotomic: zero denominator");
      c.canonicalize();
    }
  }
  if (coeffs.size() == static_cast<std::size_t>(table_->phi)) {
    coeffs_ = std::move(coeffs);
  } else {
    coeffs_.assign(static_cast<std::size_t>(table_->phi), Coeff(0));
    reduce_from(coeffs);
  }
}

template <class Coeff>
void BasicCyclotomic<Coeff>::reduce_from(const std::vector<Coeff>& wide) {
  const auto phi = static_cast<std::size_t>(table_->phi);
  const auto n = static_cast<std::size_t>(table_->order);
  for (std::size_t k = 0; k < wide.size(); ++k) {
    if (wide[k] == 0) continue;
    if (k < phi) {
      coeffs_[k] += wide[k];
      continue;
    }
    const auto& red = table_->powers[k % n];
    for (std::size_t i = 0; i < phi; ++i) addmul_small(coeffs_[i], wide[k], red[i]);
  }
}

template <class Coeff>
BasicCyclotomic<Coeff> BasicCyclotomic<Coeff>::constant(int order, const Coeff& c) {
  BasicCyclotomic r(order);
  r.coeffs_[0] = c;
  return r;
}

template <class Coeff>
BasicCyclotomic<Coeff> BasicCyclotomic<Coeff>::zeta_pow(int order, long long k) {
  BasicCyclotomic r(order);
  const auto& red = r.table_->powers[static_cast<std::size_t>(mod_floor(k, order))];
  for (std::size_t i = 0; i < red.size(); ++i) r.coeffs_[i] = Coeff(red[i]);
  return r;
}

template <class Coeff>
bool BasicCyclotomic<Coeff>::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

template <class Coeff>
bool BasicCyclotomic<Coeff>::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

template <class Coeff>
void BasicCyclotomic<Coeff>::require_same_order(const BasicCyclotomic& rhs) const {
  if (order() != rhs.order()) {
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order()) +
                                " vs " + std::to_string(rhs.order()));
  }
}

template <class Coeff>
BasicCyclotomic<Coeff>& BasicCyclotomic<Coeff>::operator+=(const BasicCyclotomic& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

template <class Coeff>
BasicCyclotomic<Coeff>& BasicCyclotomic<Coeff>::operator-=(const BasicCyclotomic& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

template <class Coeff>
BasicCyclotomic<Coeff>& BasicCyclotomic<Coeff>::operator*=(const BasicCyclotomic& rhs) {
  require_same_order(rhs);
  const std::size_t phi = coeffs_.size();
  std::vector<Coeff> wide(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      addmul(wide[i + j], coeffs_[i], rhs.coeffs_[j]);
    }
  }
  for (std::size_t i = 0; i < phi; ++i) coeffs_[i] = Coeff(0);
  reduce_from(wide);
  return *this;
}

template <class Coeff>
BasicCyclotomic<Coeff>& BasicCyclotomic<Coeff>::operator*=(const Coeff& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

template <class Coeff>
BasicCyclotomic<Coeff> BasicCyclotomic<Coeff>::times_zeta(long long k) const {
  const auto n = static_cast<long long>(order());
  const std::size_t phi = coeffs_.size();
  BasicCyclotomic r(order());
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& red = table_->powers[static_cast<std::size_t>(mod_floor(k + static_cast<long long>(i), n))];
    for (std::size_t j = 0; j < phi; ++j) addmul_small(r.coeffs_[j], coeffs_[i], red[j]);
  }
  return r;
}

template <class Coeff>
BasicCyclotomic<Coeff> BasicCyclotomic<Coeff>::conjugate() const {
  const auto n = static_cast<long long>(order());
  const std::size_t phi = coeffs_.size();
  BasicCyclotomic r(order());
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& red = table_->powers[static_cast<std::size_t>(mod_floor(-static_cast<long long>(i), n))];
    for (std::size_t j = 0; j < phi; ++j) addmul_small(r.coeffs_[j], coeffs_[i], red[j]);
  }
  return r;
}

template <class Coeff>
BasicCyclotomic<Coeff> BasicCyclotomic<Coeff>::pow(unsigned long e) const {
  BasicCyclotomic result = one(order());
  BasicCyclotomic base = *this;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

template <class Coeff>
std::string BasicCyclotomic<Coeff>::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Coeff& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Coeff a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

template class BasicCyclotomic<BigInt>;
template class BasicCyclotomic<Rational>;

CyclotomicQ to_field(const Cyclotomic& x) {
  std::vector<Rational> c;
  c.reserve(x.coeffs().size());
  for (const auto& v : x.coeffs()) c.emplace_back(v);
  return CyclotomicQ(x.order(), std::move(c));
}

CyclotomicQ inverse(const CyclotomicQ& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  const int n = x.order();
  const auto phi = static_cast<std::size_t>(x.phi());
  // Column j of the multiplication-by-x matrix is x * ζ^j; solve M y = e_0
  // by Gauss-Jordan on the augmented matrix.
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
  for (std::size_t j = 0; j < phi; ++j) {
    CyclotomicQ col = x.times_zeta(static_cast<long long>(j));
    for (std::size_t i = 0; i < phi; ++i) a[i][j] = col.coeffs()[i];
  }
  a[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t piv = c;
    while (piv < phi && a[piv][c] == 0) ++piv;
    if (piv == phi) throw std::domain_error("singular multiplication matrix");
    std::swap(a[piv], a[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k <= phi; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= phi; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> y(phi);
  for (std::size_t i = 0; i < phi; ++i) y[i] = a[i][phi];
  return CyclotomicQ(n, std::move(y));
}

CyclotomicQ ipow(const CyclotomicQ& x, long long e) {
  if (e >= 0) return x.pow(static_cast<unsigned long>(e));
  return inverse(x).pow(static_cast<unsigned long>(-e));
}

}  // namespace skein
