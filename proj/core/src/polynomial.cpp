#include "skein/polynomial.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(int degree, const BigInt& coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

IntPoly IntPoly::exact_div_monic(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.leading() != 1) {
    throw std::domain_error("exact_div_monic: divisor must be monic");
  }
  if (degree() < divisor.degree()) {
    if (is_zero()) return {};
    throw std::domain_error("exact_div_monic: nonzero remainder");
  }
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd) + 1);
  for (int k = degree(); k >= dd; --k) {
    const BigInt lead = rem[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = lead;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= lead * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("exact_div_monic: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(n) - IntPoly{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = p.exact_div_monic(cyclotomic_poly(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

}  // namespace skein
