#include "skein/pants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

namespace {

long long mod(long long x, long long n) {
  x %= n;
  return x < 0 ? x + n : x;
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

PantsDecomposition::PantsDecomposition(int genus, std::vector<std::array<int, 2>> curves)
    : genus_(genus), curves_(std::move(curves)) {
  if (genus < 2) throw std::invalid_argument("pants decomposition needs genus >= 2");
  const int V = num_pants();
  if (static_cast<int>(curves_.size()) != num_curves()) {
    throw std::invalid_argument("expected " + std::to_string(num_curves()) + " pants curves");
  }
  std::vector<std::vector<int>> inc(idx(V));
  for (int i = 0; i < num_curves(); ++i) {
    const auto [u, w] = curves_[idx(i)];
    if (u < 0 || w < 0 || u >= V || w >= V) throw std::invalid_argument("pants curve endpoint out of range");
    if (u == w) throw std::invalid_argument("pants graph has a loop at vertex " + std::to_string(u));
    inc[idx(u)].push_back(i);
    inc[idx(w)].push_back(i);
  }
  for (int v = 0; v < V; ++v) {
    if (inc[idx(v)].size() != 3) throw std::invalid_argument("pants graph is not trivalent at vertex " + std::to_string(v));
    incident_.push_back({inc[idx(v)][0], inc[idx(v)][1], inc[idx(v)][2]});
  }
  // sides of triangle v are labelled 3v+s, s indexing incident_[v]
  TriangulationData d;
  std::vector<int> mate(idx(3 * V), -1);
  for (int v = 0; v < V; ++v) d.triangles.push_back({3 * v, 3 * v + 1, 3 * v + 2});
  for (int i = 0; i < num_curves(); ++i) {
    const auto [u, w] = curves_[idx(i)];
    auto side = [&](int v) {
      const auto& c = incident_[idx(v)];
      return 3 * v + static_cast<int>(std::find(c.begin(), c.end(), i) - c.begin());
    };
    const int a = side(u), b = side(w);
    d.gluing.push_back({a, b});
    mate[idx(a)] = b;
    mate[idx(b)] = a;
  }
  d.edge_order.resize(d.gluing.size());
  std::iota(d.edge_order.begin(), d.edge_order.end(), 0);
  const auto cls = vertex_classes(V, mate);
  d.punctures = *std::max_element(cls.begin(), cls.end()) + 1;
  // 2 - 2g° = p - E + F with E = 3g-3, F = 2g-2
  const int twice = genus + 1 - d.punctures;
  if (twice < 0 || twice % 2 != 0) throw std::invalid_argument("pants graph yields an inconsistent dual surface");
  d.genus = twice / 2;
  dual_ = std::make_shared<const Triangulation>(std::move(d));
}

PantsDecomposition standard_pants(int genus) {
  if (genus < 2) throw std::invalid_argument("standard_pants: genus must be >= 2");
  const int V = 2 * genus - 2;
  std::vector<std::array<int, 2>> curves;
  for (int i = 0; i < V; ++i) {
    const int j = (i + 1) % V;
    curves.push_back({i, j});
    if (i % 2 == 0) curves.push_back({i, j});
  }
  return PantsDecomposition(genus, std::move(curves));
}

bool is_in_ind(const PantsDecomposition& P, const DTIndex& x) {
  const auto k = static_cast<std::size_t>(P.num_curves());
  if (x.n.size() != k || x.t.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (x.n[i] < 0) return false;
    if (x.n[i] == 0 && x.t[i] < 0) return false;
  }
  for (int v = 0; v < P.num_pants(); ++v) {
    const auto& c = P.pants_curves(v);
    if ((x.n[idx(c[0])] + x.n[idx(c[1])] + x.n[idx(c[2])]) % 2 != 0) return false;
  }
  return true;
}

bool is_triangular(const PantsDecomposition& P, const DTIndex& x) {
  if (!is_in_ind(P, x)) return false;
  for (std::size_t i = 0; i < x.n.size(); ++i) {
    if (x.n[i] == 0 && x.t[i] != 0) return false;
  }
  for (int v = 0; v < P.num_pants(); ++v) {
    const auto& c = P.pants_curves(v);
    const auto a = x.n[idx(c[0])], b = x.n[idx(c[1])], d = x.n[idx(c[2])];
    if (a > b + d || b > a + d || d > a + b) return false;
  }
  return true;
}

std::vector<std::int64_t> q_of_n(const PantsDecomposition& P, const std::vector<std::int64_t>& n) {
  if (!is_admissible(P.dual(), n)) throw std::invalid_argument("q_of_n: n is not triangular");
  return q_form(P.dual(), n);
}

std::int64_t dt_exponent(const PantsDecomposition& P, const DTIndex& x, const DTIndex& y) {
  return -dot(x.n, q_of_n(P, y.n)) + dot(x.t, y.n) - dot(x.n, y.t);
}

std::pair<Cyclotomic, DTIndex> dt_mul_basis(const PantsDecomposition& P, const RootData& root, const DTIndex& x,
                                            const DTIndex& y) {
  if (!is_triangular(P, x) || !is_triangular(P, y)) throw std::invalid_argument("dt_mul_basis: non-triangular index");
  return {Cyclotomic::zeta_pow(root.n, dt_exponent(P, x, y)), DTIndex{add(x.n, y.n), add(x.t, y.t)}};
}

TriangularElement::TriangularElement(std::shared_ptr<const PantsDecomposition> P, RootData root)
    : P_(std::move(P)), root_(root) {
  if (!P_) throw std::invalid_argument("TriangularElement: null pants decomposition");
}

TriangularElement TriangularElement::basis(std::shared_ptr<const PantsDecomposition> P, RootData root, DTIndex x) {
  const int n = root.n;
  return basis(std::move(P), root, std::move(x), Cyclotomic::one(n));
}

TriangularElement TriangularElement::basis(std::shared_ptr<const PantsDecomposition> P, RootData root, DTIndex x,
                                           Cyclotomic c) {
  TriangularElement e(std::move(P), root);
  if (!is_triangular(*e.P_, x)) throw std::invalid_argument("TriangularElement: index is not triangular");
  e.add_term(x, c);
  return e;
}

TriangularElement TriangularElement::unit(std::shared_ptr<const PantsDecomposition> P, RootData root) {
  const auto k = static_cast<std::size_t>(P->num_curves());
  return basis(std::move(P), root, DTIndex{std::vector<std::int64_t>(k, 0), std::vector<std::int64_t>(k, 0)});
}

void TriangularElement::add_term(const DTIndex& x, const Cyclotomic& c) {
  if (c.order() != root_.n) throw std::invalid_argument("TriangularElement: coefficient has the wrong root order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TriangularElement::require_compatible(const TriangularElement& other) const {
  if (!(root_ == other.root_)) throw std::invalid_argument("TriangularElement: root data mismatch");
  if (P_ != other.P_ && P_->curves() != other.P_->curves()) {
    throw std::invalid_argument("TriangularElement: pants decomposition mismatch");
  }
}

TriangularElement& TriangularElement::operator+=(const TriangularElement& rhs) {
  require_compatible(rhs);
  for (const auto& [x, c] : rhs.terms_) add_term(x, c);
  return *this;
}

TriangularElement& TriangularElement::operator*=(const Cyclotomic& c) {
  Terms out;
  for (auto& [x, a] : terms_) {
    Cyclotomic y = a * c;
    if (!y.is_zero()) out.emplace(x, std::move(y));
  }
  terms_ = std::move(out);
  return *this;
}

TriangularElement dt_mul(const TriangularElement& x, const TriangularElement& y) {
  x.require_compatible(y);
  const PantsDecomposition& P = x.pants();
  TriangularElement out(x.pants_ptr(), x.root());
  for (const auto& [b, c2] : y.terms()) {
    const auto q2 = q_of_n(P, b.n);
    for (const auto& [a, c1] : x.terms()) {
      const std::int64_t e = -dot(a.n, q2) + dot(a.t, b.n) - dot(a.n, b.t);
      out.add_term(DTIndex{add(a.n, b.n), add(a.t, b.t)}, (c1 * c2).times_zeta(e));
    }
  }
  return out;
}

std::string to_string(DtRejection r) {
  switch (r) {
    case DtRejection::None: return "none";
    case DtRejection::NNotDivisible: return "n not divisible by m'";
    case DtRejection::TNotDivisible: return "t not divisible by m";
    case DtRejection::QuotientNotTriangular: return "quotient is not triangular";
    case DtRejection::QuotientNotEven: return "quotient twist is not even";
  }
  return "?";
}

DtCentralCertificate dt_central_test(const PantsDecomposition& P, const RootData& root, const DTIndex& x) {
  if (!is_triangular(P, x)) throw std::invalid_argument("dt_central_test: index is not triangular");
  DtCentralCertificate cert;
  for (std::size_t i = 0; i < x.n.size(); ++i) {
    if (x.n[i] % root.m_prime != 0) {
      cert.reason = DtRejection::NNotDivisible;
      cert.witness = static_cast<int>(i);
      return cert;
    }
  }
  for (std::size_t i = 0; i < x.t.size(); ++i) {
    if (x.t[i] % root.m != 0) {
      cert.reason = DtRejection::TNotDivisible;
      cert.witness = static_cast<int>(i);
      return cert;
    }
  }
  cert.beta = DTIndex{x.n, x.t};
  for (auto& v : cert.beta.n) v /= root.m;
  for (auto& v : cert.beta.t) v /= root.m;
  if (!is_triangular(P, cert.beta)) {
    cert.reason = DtRejection::QuotientNotTriangular;
    return cert;
  }
  if (root.four_divides_n()) {
    const auto basis = mod2_lattice_basis(P.dual());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (dot(cert.beta.t, basis[j]) % 2 != 0) {
        cert.reason = DtRejection::QuotientNotEven;
        cert.witness = static_cast<int>(j);
        return cert;
      }
    }
  }
  cert.accepted = true;
  return cert;
}

std::vector<std::vector<std::int64_t>> enumerate_triangular_n(const PantsDecomposition& P, std::int64_t bound) {
  const auto k = static_cast<std::size_t>(P.num_curves());
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> n(k, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      if (is_triangular(P, DTIndex{n, std::vector<std::int64_t>(k, 0)})) out.push_back(n);
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      n[i] = v;
      self(self, i + 1);
    }
    n[i] = 0;
  };
  if (bound >= 0) rec(rec, 0);
  return out;
}

namespace {

// Calls fn(t) for every t with |t_i| <= bound on supp(n) and t_i = 0 elsewhere.
template <class Fn>
void for_each_twist(const std::vector<std::int64_t>& n, std::int64_t bound, Fn&& fn) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] != 0) supp.push_back(i);
  std::vector<std::int64_t> t(n.size(), 0);
  for (auto i : supp) t[i] = -bound;
  for (;;) {
    fn(t);
    std::size_t j = 0;
    for (; j < supp.size(); ++j) {
      if (t[supp[j]] < bound) {
        ++t[supp[j]];
        break;
      }
      t[supp[j]] = -bound;
    }
    if (j == supp.size()) return;
  }
}

}  // namespace

void for_each_triangular(const PantsDecomposition& P, std::int64_t n_bound, std::int64_t t_bound,
                         const std::function<void(const DTIndex&)>& fn) {
  DTIndex x;
  for (auto& n : enumerate_triangular_n(P, n_bound)) {
    x.n = std::move(n);
    for_each_twist(x.n, t_bound, [&](const std::vector<std::int64_t>& t) {
      x.t = t;
      fn(x);
    });
  }
}

std::vector<DTIndex> enumerate_triangular(const PantsDecomposition& P, std::int64_t n_bound, std::int64_t t_bound) {
  std::vector<DTIndex> out;
  for_each_triangular(P, n_bound, t_bound, [&](const DTIndex& x) { out.push_back(x); });
  return out;
}

DtCenterOracle::DtCenterOracle(std::shared_ptr<const PantsDecomposition> P, RootData root, std::int64_t bound)
    : P_(std::move(P)), root_(root), bound_(bound), lattice_(root.n, 3 * P_->num_curves()) {
  const auto k = static_cast<std::size_t>(P_->num_curves());
  const std::int64_t N = root_.n;
  std::vector<bool> twist_seen(k, false);
  for (auto& n : enumerate_triangular_n(*P_, bound)) {
    auto q = q_of_n(*P_, n);
    std::vector<std::int64_t> key(3 * k);
    for (std::size_t i = 0; i < k; ++i) {
      key[i] = mod(q[i], N);
      key[k + i] = mod(n[i], N);
    }
    std::int64_t count = 1;
    for (auto v : n) count *= v != 0 ? 2 * bound + 1 : 1;
    num_probes_ += count;
    // key(n', t') = key(n', 0) + Σ t'_i (key(n', e_i) - key(n', 0)), and
    // both summands are themselves differences of probes in the box
    lattice_.insert(key);
    if (bound >= 1) {
      for (std::size_t i = 0; i < k; ++i) {
        if (n[i] == 0 || twist_seen[i]) continue;
        twist_seen[i] = true;
        std::vector<std::int64_t> unit(3 * k, 0);
        unit[2 * k + i] = 1;
        lattice_.insert(unit);
      }
    }
    shapes_.emplace_back(std::move(n), std::move(q));
  }
}

bool DtCenterOracle::vanishes(const DTIndex& x, const std::vector<std::int64_t>& key) const {
  const auto k = x.n.size();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < k; ++i) e += -x.n[i] * key[i] + x.t[i] * key[k + i] - x.n[i] * key[2 * k + i];
  return mod(2 * e, root_.n) == 0;
}

bool DtCenterOracle::is_central(const DTIndex& x) const {
  if (!is_triangular(*P_, x)) throw std::invalid_argument("DtCenterOracle: index is not triangular");
  for (const auto& row : lattice_.rows()) {
    if (!vanishes(x, row)) return false;
  }
  return true;
}

bool DtCenterOracle::is_central_direct(const DTIndex& x) const {
  if (!is_triangular(*P_, x)) throw std::invalid_argument("DtCenterOracle: index is not triangular");
  bool central = true;
  for (const auto& [n, q] : shapes_) {
    const std::int64_t fixed = -dot(x.n, q) + dot(x.t, n);
    for_each_twist(n, bound_, [&](const std::vector<std::int64_t>& t) {
      if (central && mod(2 * (fixed - dot(x.n, t)), root_.n) != 0) central = false;
    });
    if (!central) return false;
  }
  return true;
}

bool dt_center_oracle(const PantsDecomposition& P, const RootData& root, const DTIndex& x, std::int64_t bound) {
  return DtCenterOracle(std::make_shared<const PantsDecomposition>(P), root, bound).is_central(x);
}

DtCrossCheck dt_center_crosscheck(const PantsDecomposition& P, const RootData& root, const DtCenterOracle& oracle,
                                  std::int64_t n_bound, std::int64_t t_bound, bool by_residue) {
  DtCrossCheck out;
  const auto k = static_cast<std::size_t>(P.num_curves());
  auto compare = [&](const DTIndex& x) {
    ++out.evaluated;
    const bool a = dt_central_test(P, root, x).accepted;
    const bool b = oracle.is_central(x);
    out.accepted += a ? 1 : 0;
    if (a != b) {
      ++out.disagreements;
      if (out.first_disagreements.size() < 4) out.first_disagreements.push_back(x);
    }
  };
  const std::int64_t mp = root.m_prime;
  if (by_residue && 2 * t_bound + 1 < mp) throw std::invalid_argument("dt_center_crosscheck: twist box misses residues");
  for (auto& n : enumerate_triangular_n(P, n_bound)) {
    ++out.n_vectors;
    DTIndex x{n, std::vector<std::int64_t>(k, 0)};
    if (!by_residue) {
      for_each_twist(n, t_bound, [&](const std::vector<std::int64_t>& t) {
        x.t = t;
        compare(x);
      });
      continue;
    }
    std::size_t witness = k;
    for (std::size_t i = 0; i < k && witness == k; ++i)
      if (n[i] % mp != 0) witness = i;
    if (witness < k) {
      ++out.evaluated;
      const auto cert = dt_central_test(P, root, x);
      std::vector<std::int64_t> twist(3 * k, 0);
      twist[2 * k + witness] = 1;
      const bool settled = !cert.accepted && cert.reason == DtRejection::NNotDivisible &&
                           oracle.key_lattice().contains(twist) && mod(2 * n[witness], root.n) != 0;
      if (!settled) {
        ++out.disagreements;
        if (out.first_disagreements.size() < 4) out.first_disagreements.push_back(x);
      }
      continue;
    }
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < k; ++i)
      if (n[i] != 0) supp.push_back(i);
    for (;;) {
      compare(x);
      std::size_t j = 0;
      for (; j < supp.size(); ++j) {
        if (x.t[supp[j]] + 1 < mp) {
          ++x.t[supp[j]];
          break;
        }
        x.t[supp[j]] = 0;
      }
      if (j == supp.size()) break;
    }
  }
  return out;
}

bool two_delta_span_check(int genus) {
  const PantsDecomposition P = standard_pants(genus);
  const Triangulation& T = P.dual();
  const auto k = static_cast<std::size_t>(P.num_curves());
  try {
    for (int e = 0; e < T.num_edges(); ++e) {
      const auto d = two_delta_decomposition(T, e);
      std::vector<std::int64_t> sum(k, 0);
      for (const auto& [c, n] : d.terms) {
        if (!is_triangular(P, DTIndex{n, std::vector<std::int64_t>(k, 0)})) return false;
        sum = add(sum, scale(n, c));
      }
      std::vector<std::int64_t> want(k, 0);
      want[static_cast<std::size_t>(e)] = 2;
      if (sum != want) return false;
    }
  } catch (const std::logic_error&) {
    return false;
  }
  return true;
}

}  // namespace skein
