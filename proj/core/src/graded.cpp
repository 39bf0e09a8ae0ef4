#include "skein/graded.hpp"

#include "skein/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skein {

namespace {

long long mod(long long x, long long n) {
  x %= n;
  return x < 0 ? x + n : x;
}

}  // namespace

GradedElement::GradedElement(std::shared_ptr<const Triangulation> T, RootData root)
    : T_(std::move(T)), root_(root) {
  if (!T_) throw std::invalid_argument("GradedElement: null triangulation");
}

GradedElement GradedElement::basis(std::shared_ptr<const Triangulation> T, RootData root, EdgeColoring f) {
  const int n = root.n;
  return basis(std::move(T), root, std::move(f), Cyclotomic::one(n));
}

GradedElement GradedElement::basis(std::shared_ptr<const Triangulation> T, RootData root, EdgeColoring f,
                                   Cyclotomic c) {
  GradedElement x(std::move(T), root);
  if (!is_admissible(*x.T_, f)) throw std::invalid_argument("GradedElement: coloring is not admissible");
  x.add_term(f, c);
  return x;
}

GradedElement GradedElement::unit(std::shared_ptr<const Triangulation> T, RootData root) {
  const auto E = static_cast<std::size_t>(T->num_edges());
  return basis(std::move(T), root, EdgeColoring(E, 0));
}

void GradedElement::add_term(const EdgeColoring& f, const Cyclotomic& c) {
  if (c.order() != root_.n) throw std::invalid_argument("GradedElement: coefficient has the wrong root order");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedElement::require_compatible(const GradedElement& other) const {
  if (!(root_ == other.root_)) throw std::invalid_argument("GradedElement: root data mismatch");
  if (T_ != other.T_ && !(T_->data() == other.T_->data())) {
    throw std::invalid_argument("GradedElement: triangulation mismatch");
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
  require_compatible(rhs);
  for (const auto& [f, c] : rhs.terms_) add_term(f, c);
  return *this;
}

GradedElement& GradedElement::operator*=(const Cyclotomic& c) {
  Terms out;
  for (auto& [f, x] : terms_) {
    Cyclotomic y = x * c;
    if (!y.is_zero()) out.emplace(f, std::move(y));
  }
  terms_ = std::move(out);
  return *this;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
  return a.root_ == b.root_ && a.T_->data() == b.T_->data() && a.terms_ == b.terms_;
}

std::pair<Cyclotomic, EdgeColoring> lt_mul_basis(const Triangulation& T, const RootData& root, const EdgeColoring& f,
                                                 const EdgeColoring& f2) {
  if (!is_admissible(T, f) || !is_admissible(T, f2)) throw std::invalid_argument("lt_mul_basis: non-admissible input");
  return {Cyclotomic::zeta_pow(root.n, pairing(T, f, f2)), add(f, f2)};
}

GradedElement mul(const GradedElement& x, const GradedElement& y) {
  x.require_compatible(y);
  const Triangulation& T = x.triangulation();
  GradedElement out(x.triangulation_ptr(), x.root());
  for (const auto& [f, a] : x.terms()) {
    const QVector q = q_form(T, f);
    for (const auto& [g, b] : y.terms()) out.add_term(add(f, g), (a * b).times_zeta(dot(q, g)));
  }
  return out;
}

int commutation_exponent(const Triangulation& T, const RootData& root, const EdgeColoring& f, const EdgeColoring& f2) {
  return static_cast<int>(mod(2 * pairing(T, f, f2), root.n));
}

GradedElement thread_lead(std::shared_ptr<const Triangulation> T, const RootData& root, const EdgeColoring& f) {
  return GradedElement::basis(std::move(T), root, scale(f, root.m));
}

std::string to_string(LeadRejection r) {
  switch (r) {
    case LeadRejection::None: return "none";
    case LeadRejection::QNotDivisible: return "q-form not divisible by m";
    case LeadRejection::CornerNotDivisible: return "corner number not divisible by m";
    case LeadRejection::NotEven: return "quotient is not even";
  }
  return "?";
}

CentralLeadCertificate central_lead_test(const Triangulation& T, const RootData& root, const EdgeColoring& f) {
  if (!is_admissible(T, f)) throw std::invalid_argument("central_lead_test: coloring is not admissible");
  CentralLeadCertificate cert;
  const std::int64_t m = root.m;
  const QVector q = q_form(T, f);
  for (std::size_t e = 0; e < q.size(); ++e) {
    if (q[e] % m != 0) {
      cert.reason = LeadRejection::QNotDivisible;
      cert.witness = static_cast<int>(e);
      return cert;
    }
  }
  cert.r.assign(static_cast<std::size_t>(T.num_punctures()), 0);
  EdgeColoring rest = f;
  for (const auto& c : components(T, f).components) {
    if (!c.peripheral()) continue;
    cert.r[static_cast<std::size_t>(c.puncture)] = c.multiplicity;
    rest = add(rest, scale(c.primitive, -c.multiplicity));
  }
  CornerColoring g = to_corners(T, rest);
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g[c] % m != 0) {
      cert.reason = LeadRejection::CornerNotDivisible;
      cert.witness = static_cast<int>(c);
      return cert;
    }
    g[c] /= m;
  }
  cert.beta = from_corners(T, g);
  cert.beta_even = is_even(T, cert.beta);
  if (root.four_divides_n() && !cert.beta_even) {
    cert.reason = LeadRejection::NotEven;
    return cert;
  }
  cert.accepted = true;
  return cert;
}

bool central_lead_oracle(const Triangulation& T, const RootData& root, const EdgeColoring& f, std::int64_t bound) {
  const QVector q = q_form(T, f);
  for (const auto& b : enumerate_admissible(T, bound)) {
    if (mod(2 * dot(q, b), root.n) != 0) return false;
  }
  return true;
}

std::vector<EdgeColoring> center_enumerate(const Triangulation& T, const RootData& root, std::int64_t bound) {
  std::vector<EdgeColoring> out;
  for (const auto& f : enumerate_admissible(T, bound)) {
    if (central_lead_test(T, root, f).accepted) out.push_back(f);
  }
  return out;
}

std::vector<EdgeColoring> predicted_center(const Triangulation& T, const RootData& root, std::int64_t bound) {
  std::set<EdgeColoring> out;
  std::vector<EdgeColoring> peripherals;
  for (int v = 0; v < T.num_punctures(); ++v) peripherals.push_back(peripheral_coloring(T, v));
  for (const auto& beta : enumerate_admissible(T, bound / root.m)) {
    if (root.four_divides_n() && !is_even(T, beta)) continue;
    // add every nonnegative combination of peripherals that stays in range
    auto rec = [&](auto&& self, std::size_t v, const EdgeColoring& f) -> void {
      if (v == peripherals.size()) {
        out.insert(f);
        return;
      }
      for (EdgeColoring g = f; total(g) <= bound; g = add(g, peripherals[v])) self(self, v + 1, g);
    };
    rec(rec, 0, scale(beta, root.m));
  }
  return {out.begin(), out.end()};
}

std::vector<EdgeColoring> even_lattice_basis(const Triangulation& T) {
  const int E = T.num_edges();
  std::vector<std::vector<BigInt>> gens;
  for (const auto& b : mod2_lattice_basis(T)) {
    std::vector<BigInt> row;
    for (auto x : b) row.emplace_back(static_cast<long>(x));
    gens.push_back(std::move(row));
  }
  for (int e = 0; e < E; ++e) {
    std::vector<BigInt> row(static_cast<std::size_t>(E), BigInt(0));
    row[static_cast<std::size_t>(e)] = 2;
    gens.push_back(std::move(row));
  }
  std::vector<EdgeColoring> basis;
  for (const auto& row : lattice_basis(gens, E)) {
    EdgeColoring f;
    for (const auto& x : row) f.push_back(x.get_si());
    basis.push_back(std::move(f));
  }
  return basis;
}

bool in_radical(const Triangulation& T, const RootData& root, const EdgeColoring& f) {
  const QVector q = q_form(T, f);
  for (const auto& b : even_lattice_basis(T)) {
    if (mod(2 * dot(q, b), root.n) != 0) return false;
  }
  return true;
}

PiDegree pi_degree(const Triangulation& T, const RootData& root) {
  PiDegree out;
  out.lattice_basis = even_lattice_basis(T);
  const int k = static_cast<int>(out.lattice_basis.size());
  IntMatrix G(k, k);
  for (int i = 0; i < k; ++i) {
    const QVector q = q_form(T, out.lattice_basis[static_cast<std::size_t>(i)]);
    for (int j = 0; j < k; ++j) G(i, j) = static_cast<long>(dot(q, out.lattice_basis[static_cast<std::size_t>(j)]));
  }
  out.divisors = smith_normal_form(G).divisors;
  const BigInt mp(root.m_prime);
  out.rank = 1;
  for (const auto& d : out.divisors) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mp.get_mpz_t());
    out.rank *= mp / g;
    if (d % mp == 0) ++out.radical_rank;
  }
  mpz_sqrt(out.N.get_mpz_t(), out.rank.get_mpz_t());
  if (out.N * out.N != out.rank) {
    throw std::logic_error("pi_degree: rank " + out.rank.get_str() + " is not a perfect square");
  }
  return out;
}

std::string to_string(ShadowTarget t) { return t == ShadowTarget::CharacterVariety ? "X" : "X0"; }

ShadowInfo shadow_variety_info(int genus, int punctures, const RootData& root) {
  if (genus < 0 || punctures < 0) throw std::invalid_argument("shadow_variety_info: negative genus or punctures");
  ShadowInfo info;
  if (genus == 0 && punctures <= 1) {
    info.dimension = 0;
  } else if (genus == 0 && punctures == 2) {
    info.dimension = 1;
  } else if (genus == 1 && punctures == 0) {
    info.dimension = 2;
  } else {
    info.dimension = 6 * genus - 6 + 3 * punctures;
  }
  info.target = root.four_divides_n() ? ShadowTarget::EvenCharacterVariety : ShadowTarget::CharacterVariety;
  mpz_ui_pow_ui(info.degree_bound.get_mpz_t(), static_cast<unsigned long>(root.m), static_cast<unsigned long>(punctures));
  return info;
}

}  // namespace skein
