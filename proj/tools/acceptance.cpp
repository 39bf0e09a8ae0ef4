#include "acceptance.hpp"

#include "skein/chebyshev.hpp"
#include "skein/coloring.hpp"
#include "skein/graded.hpp"
#include "skein/int_matrix.hpp"
#include "skein/json_io.hpp"
#include "skein/pants.hpp"
#include "skein/root_data.hpp"
#include "skein/torus.hpp"
#include "skein/torus_rep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace skein::acceptance {

namespace {

// Every comparison below is exact: integers, Z[ζ] or Q(ζ). The bounds are
// pinned here so that the report can print them.
namespace pin {
constexpr int kRootMax = 16;
constexpr int kProdSumMax = 50;
constexpr int kReduceKMax = 100;
constexpr int kReduceMMax = 10;
constexpr int kGradedTriples = 200;
constexpr std::int64_t kGradedAssocEntry = 4;
constexpr std::int64_t kGradedPairEntry = 3;
constexpr std::int64_t kCenterWeight = 8;
constexpr int kDtTriples = 100;
constexpr std::int64_t kDtAssocEntry = 3;
constexpr std::int64_t kDtPairEntry = 2;
constexpr std::int64_t kDtPairSampleG3 = 200000;
constexpr int kTorusBoundFactor = 4;  // D = 4m'
constexpr int kRepPairs = 5;
constexpr int kDeltaGenusMax = 2;
constexpr int kDeltaPuncturesMax = 4;
constexpr int kShadowGenusMax = 3;
constexpr int kShadowPuncturesMax = 4;
}  // namespace pin

class Check {
 public:
  template <class Msg>
  bool require(bool ok, Msg&& msg) {
    ++count_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = msg();
    }
    return ok;
  }
  std::int64_t count() const { return count_; }
  std::int64_t failed() const { return failed_; }
  const std::string& first_failure() const { return first_; }

 private:
  std::int64_t count_ = 0;
  std::int64_t failed_ = 0;
  std::string first_;
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

std::string show(const DTIndex& x) { return "(n=" + show(x.n) + ",t=" + show(x.t) + ")"; }

using Surface = std::pair<int, int>;

std::vector<EdgeColoring> admissible_with_max(const Triangulation& T, std::int64_t max_entry) {
  std::vector<EdgeColoring> out;
  for (auto& f : enumerate_admissible(T, max_entry * T.num_edges())) {
    if (std::all_of(f.begin(), f.end(), [&](std::int64_t v) { return v <= max_entry; })) out.push_back(std::move(f));
  }
  return out;
}

Cyclotomic random_coeff(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Cyclotomic c(n, {BigInt(d(rng)), BigInt(d(rng))});
    if (!c.is_zero()) return c;
  }
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

BigInt big_pow(int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// 1. Root data against m = n/gcd(n,4), m' = n/gcd(n,2) and ε = ζ^{m²}
// located on the unit circle by the fraction m²/n.
void criterion_root_data(Check& ck, const Options&) {
  for (int n = 1; n <= pin::kRootMax; ++n) {
    const RootData r = root_data(n);
    const int m = n / std::gcd(n, 4);
    const int mp = n / std::gcd(n, 2);
    ck.require(r.m == m && r.m_prime == mp, [&] { return "n=" + std::to_string(n) + ": m or m' wrong"; });
    const long e = (static_cast<long>(m) * m) % n;
    ck.require(r.epsilon_exponent == e, [&] { return "n=" + std::to_string(n) + ": epsilon exponent"; });
    // ε^4 = 1, so 4e/n is an integer quarter turn
    const bool quarter = (4 * e) % n == 0;
    ck.require(quarter, [&] { return "n=" + std::to_string(n) + ": epsilon is not a fourth root of unity"; });
    const long turns = quarter ? (4 * e / n) % 4 : -1;
    const EpsilonClass want[] = {EpsilonClass::PlusOne, EpsilonClass::PlusI, EpsilonClass::MinusOne, EpsilonClass::MinusI};
    ck.require(quarter && r.epsilon_class == want[turns], [&] { return "n=" + std::to_string(n) + ": epsilon class"; });
    const bool imaginary = r.epsilon_class == EpsilonClass::PlusI || r.epsilon_class == EpsilonClass::MinusI;
    ck.require(imaginary == (n % 8 == 4), [&] { return "n=" + std::to_string(n) + ": ±i iff n = 4 mod 8"; });
    // the same value in Z[ζ]
    const Cyclotomic eps = Cyclotomic::zeta_pow(n, m * m);
    Cyclotomic expect = Cyclotomic::one(n);
    if (turns == 1) expect = Cyclotomic::zeta_pow(n, n / 4);
    if (turns == 2) expect = -Cyclotomic::one(n);
    if (turns == 3) expect = -Cyclotomic::zeta_pow(n, n / 4);
    ck.require(eps == expect, [&] { return "n=" + std::to_string(n) + ": ζ^{m²} in Z[ζ]"; });
  }
}

// 2. Chebyshev identities, plus T_k(t + 1/t) = t^k + t^{-k} at t = 2 as an
// independent evaluation oracle.
void criterion_chebyshev(Check& ck, const Options&) {
  for (int k = 0; k <= pin::kProdSumMax; ++k)
    for (int l = 0; l <= pin::kProdSumMax; ++l)
      ck.require(product_to_sum_check(k, l), [&] { return "T_k T_l at k=" + std::to_string(k) + " l=" + std::to_string(l); });
  for (int m = 1; m <= pin::kReduceMMax; ++m)
    for (int k = 2 * m; k <= pin::kReduceKMax; ++k) {
      const auto red = chebyshev_reduce(k, m);
      const bool ok = red.identity_holds && red.quotient == k / (2 * m) && red.remainder == k % (2 * m);
      ck.require(ok, [&] { return "reduction at k=" + std::to_string(k) + " m=" + std::to_string(m); });
    }
  const Rational x = Rational(5, 2);
  for (int k = 0; k <= pin::kProdSumMax; ++k) {
    const IntPoly T = chebyshev_T(k);
    Rational v = 0;
    for (int i = T.degree(); i >= 0; --i) v = v * x + Rational(T.coeff(i));
    const Rational want = Rational(big_pow(2, k)) + Rational(BigInt(1), big_pow(2, k));
    ck.require(v == want, [&] { return "T_" + std::to_string(k) + "(5/2) != 2^k + 2^-k"; });
  }
}

// 3. Graded product: associativity, unit, antisymmetry, commutation law.
void criterion_graded(Check& ck, const Options& opts) {
  const std::vector<Surface> surfaces{{1, 1}, {0, 3}, {0, 4}, {1, 2}};
  for (const auto& [g, p] : surfaces) {
    auto T = std::make_shared<const Triangulation>(standard_triangulation(g, p));
    const auto pool = admissible_with_max(*T, pin::kGradedAssocEntry);
    const auto pairs = admissible_with_max(*T, pin::kGradedPairEntry);
    const std::string where = "(" + std::to_string(g) + "," + std::to_string(p) + ")";
    for (const auto& f : pairs)
      for (const auto& h : pairs)
        ck.require(pairing(*T, f, h) == -pairing(*T, h, f), [&] { return where + " antisymmetry " + show(f) + show(h); });
    for (int n = 2; n <= 8; ++n) {
      const RootData root = root_data(n);
      std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(100 * g + 10 * p + n));
      auto random_element = [&] {
        GradedElement x(T, root);
        const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < terms; ++i) x.add_term(pick(rng, pool), random_coeff(rng, n));
        return x;
      };
      const GradedElement one = GradedElement::unit(T, root);
      for (int i = 0; i < pin::kGradedTriples; ++i) {
        const GradedElement x = random_element(), y = random_element(), z = random_element();
        ck.require(mul(mul(x, y), z) == mul(x, mul(y, z)), [&] { return where + " n=" + std::to_string(n) + " associativity"; });
        ck.require(mul(x, one) == x && mul(one, x) == x, [&] { return where + " unit"; });
      }
      for (const auto& f : pairs)
        for (const auto& h : pairs) {
          const auto fh = lt_mul_basis(*T, root, f, h).first;
          const auto hf = lt_mul_basis(*T, root, h, f).first;
          ck.require(fh == hf.times_zeta(commutation_exponent(*T, root, f, h)),
                     [&] { return where + " n=" + std::to_string(n) + " commutation " + show(f) + show(h); });
        }
    }
  }
}

// 4. Punctured-surface center decision against brute-force commutation.
void criterion_center(Check& ck, const Options&) {
  const std::vector<Surface> surfaces{{1, 1}, {0, 3}};
  for (const auto& [g, p] : surfaces) {
    const Triangulation T = standard_triangulation(g, p);
    const auto colorings = enumerate_admissible(T, pin::kCenterWeight);
    for (int n : {2, 3, 4, 5, 6, 8}) {
      const RootData root = root_data(n);
      const std::string where = "(" + std::to_string(g) + "," + std::to_string(p) + ") n=" + std::to_string(n);
      for (const auto& f : colorings) {
        const auto cert = central_lead_test(T, root, f);
        const bool oracle = central_lead_oracle(T, root, f, pin::kCenterWeight);
        ck.require(cert.accepted == oracle, [&] { return where + " disagreement at " + show(f); });
        if (!cert.accepted) continue;
        EdgeColoring rebuilt = scale(cert.beta, root.m);
        for (int v = 0; v < T.num_punctures(); ++v)
          rebuilt = add(rebuilt, scale(peripheral_coloring(T, v), cert.r[static_cast<std::size_t>(v)]));
        ck.require(rebuilt == f && is_admissible(T, cert.beta), [&] { return where + " certificate at " + show(f); });
        if (root.four_divides_n()) {
          ck.require(is_even(T, cert.beta), [&] { return where + " odd beta at " + show(f); });
        }
      }
      ck.require(center_enumerate(T, root, pin::kCenterWeight) == predicted_center(T, root, pin::kCenterWeight),
                 [&] { return where + " center_enumerate differs from the predicted set"; });
    }
  }
}

// |image of L in Hom(L, Z/n)| under f -> 2·pairing(f, -), by a mod-n
// echelon form; this is [L : radical].
BigInt character_group_order(const Triangulation& T, const RootData& root) {
  const auto basis = even_lattice_basis(T);
  const int r = static_cast<int>(basis.size());
  ModularLattice image(root.n, r);
  for (const auto& f : basis) {
    std::vector<std::int64_t> v;
    for (const auto& b : basis) v.push_back(2 * pairing(T, f, b));
    image.insert(v);
  }
  BigInt index = 1;
  for (int i = 0; i < r; ++i) index *= image.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  return big_pow(root.n, r) / index;
}

// 5. PI degree and rank.
void criterion_pi_degree(Check& ck, const Options&) {
  const std::vector<Surface> surfaces{{1, 1}, {0, 4}, {1, 2}, {2, 1}};
  for (const auto& [g, p] : surfaces) {
    const Triangulation T = standard_triangulation(g, p);
    for (int n : {3, 5, 6, 7, 4, 8, 12}) {
      const RootData root = root_data(n);
      const std::string where = "(" + std::to_string(g) + "," + std::to_string(p) + ") n=" + std::to_string(n);
      PiDegree pd;
      const bool square = ck.require(
          [&] {
            try {
              pd = pi_degree(T, root);
              return pd.N * pd.N == pd.rank;
            } catch (const std::logic_error&) {
              return false;
            }
          }(),
          [&] { return where + " N² is not a perfect square"; });
      if (!square) continue;
      ck.require(pd.rank == character_group_order(T, root), [&] { return where + " rank differs from the character count"; });
      if (n % 4 != 0) {
        ck.require(pd.N == big_pow(root.m, 3 * g - 3 + p) && pd.rank == big_pow(root.m, 6 * g - 6 + 2 * p),
                   [&] { return where + " N = " + pd.N.get_str() + " differs from m^{3g-3+p}"; });
      }
      for (int v = 0; v < T.num_punctures(); ++v)
        ck.require(in_radical(T, root, peripheral_coloring(T, v)), [&] { return where + " peripheral outside the radical"; });
    }
  }
}

std::int64_t linear_dt_exponent(const PantsDecomposition& P, const DTIndex& x, const DTIndex& y) {
  return -dot(x.n, q_form(P.dual(), y.n)) + dot(x.t, y.n) - dot(x.n, y.t);
}

// Reduces v against echelon rows (pivot = first nonzero, positive).
bool in_span(const std::vector<std::vector<std::int64_t>>& rows, std::vector<std::int64_t> v) {
  for (const auto& r : rows) {
    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    if (v[piv] % r[piv] != 0) return false;
    const std::int64_t c = v[piv] / r[piv];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * r[j];
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t a) { return a == 0; });
}

// 6. Closed-surface triangular algebra.
void criterion_dt(Check& ck, const Options& opts) {
  for (int g : {2, 3}) {
    auto P = std::make_shared<const PantsDecomposition>(standard_pants(g));
    const std::size_t k = static_cast<std::size_t>(P->num_curves());
    const std::string where = "g=" + std::to_string(g);
    const auto shapes3 = enumerate_triangular_n(*P, pin::kDtAssocEntry);
    const auto shapes2 = enumerate_triangular_n(*P, pin::kDtPairEntry);
    std::mt19937_64 rng(opts.seed + 7000 + static_cast<std::uint64_t>(g));
    auto random_index = [&](const std::vector<std::vector<std::int64_t>>& shapes, std::int64_t bound) {
      DTIndex x{pick(rng, shapes), std::vector<std::int64_t>(k, 0)};
      for (std::size_t i = 0; i < k; ++i)
        if (x.n[i] != 0) x.t[i] = std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
      return x;
    };

    // exponent law: dt_exponent(x,y) + dt_exponent(y,x) = 0, i.e. the two
    // orders differ by ζ^{2·dt_exponent(x,y)}
    const auto pairs = enumerate_triangular(*P, pin::kDtPairEntry, pin::kDtPairEntry);
    if (g == 2) {
      for (const auto& x : pairs)
        for (const auto& y : pairs)
          ck.require(dt_exponent(*P, x, y) == -dt_exponent(*P, y, x), [&] { return where + " exponent law " + show(x) + show(y); });
    } else {
      // the law is bilinear: check a basis of the span of all pairs, then
      // a seeded sample of literal pairs
      std::vector<std::vector<std::int64_t>> basis;
      for (const auto& x : pairs) {
        std::vector<std::int64_t> v = x.n;
        v.insert(v.end(), x.t.begin(), x.t.end());
        if (in_span(basis, v)) continue;
        std::vector<std::vector<BigInt>> gens;
        for (const auto& row : basis) gens.emplace_back(row.begin(), row.end());
        gens.emplace_back(v.begin(), v.end());
        basis.clear();
        for (const auto& row : lattice_basis(gens, static_cast<int>(2 * k))) {
          std::vector<std::int64_t> r;
          for (const auto& c : row) r.push_back(c.get_si());
          basis.push_back(std::move(r));
        }
      }
      for (const auto& x : pairs) {
        std::vector<std::int64_t> v = x.n;
        v.insert(v.end(), x.t.begin(), x.t.end());
        ck.require(in_span(basis, v), [&] { return where + " span basis misses " + show(x); });
      }
      auto split = [&](const std::vector<std::int64_t>& v) {
        return DTIndex{std::vector<std::int64_t>(v.begin(), v.begin() + static_cast<long>(k)),
                       std::vector<std::int64_t>(v.begin() + static_cast<long>(k), v.end())};
      };
      for (const auto& a : basis)
        for (const auto& b : basis) {
          const DTIndex x = split(a), y = split(b);
          ck.require(linear_dt_exponent(*P, x, y) == -linear_dt_exponent(*P, y, x),
                     [&] { return where + " exponent law on span basis"; });
        }
      for (std::int64_t s = 0; s < pin::kDtPairSampleG3; ++s) {
        const auto& x = pick(rng, pairs);
        const auto& y = pick(rng, pairs);
        ck.require(dt_exponent(*P, x, y) == -dt_exponent(*P, y, x), [&] { return where + " exponent law " + show(x) + show(y); });
      }
    }

    for (int n = 2; n <= 8; ++n) {
      const RootData root = root_data(n);
      const std::string at = where + " n=" + std::to_string(n);
      auto random_element = [&] {
        TriangularElement x(P, root);
        const int terms = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int i = 0; i < terms; ++i) x.add_term(random_index(shapes3, pin::kDtAssocEntry), random_coeff(rng, n));
        return x;
      };
      const TriangularElement one = TriangularElement::unit(P, root);
      for (int i = 0; i < pin::kDtTriples; ++i) {
        const TriangularElement x = random_element(), y = random_element(), z = random_element();
        ck.require(dt_mul(dt_mul(x, y), z) == dt_mul(x, dt_mul(y, z)), [&] { return at + " associativity"; });
        ck.require(dt_mul(x, one) == x && dt_mul(one, x) == x, [&] { return at + " unit"; });
      }
      // commutation through the product itself
      for (int i = 0; i < pin::kDtTriples; ++i) {
        const DTIndex a = random_index(shapes2, pin::kDtPairEntry), b = random_index(shapes2, pin::kDtPairEntry);
        const auto xy = dt_mul(TriangularElement::basis(P, root, a), TriangularElement::basis(P, root, b));
        auto yx = dt_mul(TriangularElement::basis(P, root, b), TriangularElement::basis(P, root, a));
        yx *= Cyclotomic::zeta_pow(n, 2 * dt_exponent(*P, a, b));
        ck.require(xy == yx, [&] { return at + " commutation " + show(a) + show(b); });
      }
      const std::int64_t D = 2 * root.m_prime;
      const DtCenterOracle oracle(P, root, D);
      const auto cc = dt_center_crosscheck(*P, root, oracle, D, 2 * root.m, g == 3);
      ck.require(cc.disagreements == 0, [&] {
        return at + " dt_central_test disagrees with the oracle at " +
               (cc.first_disagreements.empty() ? std::string("?") : show(cc.first_disagreements.front()));
      });
    }
  }
}

// 7. Torus center.
void criterion_torus_center(Check& ck, const Options&) {
  for (int n = 1; n <= 8; ++n) {
    const RootData root = root_data(n);
    const std::int64_t D = pin::kTorusBoundFactor * root.m_prime;
    const auto brute = torus_center_bruteforce(root, D);
    const auto threaded = torus_threaded_set(root, D);
    ck.require(brute == threaded, [&] { return "n=" + std::to_string(n) + " center differs from the threaded set"; });
    std::vector<TorusKey> by_divisibility;
    for (std::int64_t p = 0; p <= D; ++p)
      for (std::int64_t q = -D; q <= D; ++q) {
        if ((p == 0 && q <= 0) || p % root.m_prime != 0 || q % root.m_prime != 0) continue;
        by_divisibility.emplace_back(p, q);
      }
    ck.require(brute == by_divisibility, [&] { return "n=" + std::to_string(n) + " center differs from m'Z²"; });
  }
}

CyclotomicQ random_param(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(1, 7), den(1, 5);
  return CyclotomicQ(n, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
}

// 8. Unicity at desk scale.
void criterion_unicity(Check& ck, const Options& opts) {
  for (int n : {3, 5, 7}) {
    const RootData root = root_data(n);
    const int N = root.m_prime;
    std::mt19937_64 rng(opts.seed + 8000 + static_cast<std::uint64_t>(n));
    const std::vector<TorusKey> center{{N, 0}, {0, N}, {N, N}, {N, -N}, {2 * N, N}};
    const std::vector<TorusKey> gens{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}};
    for (int i = 0; i < pin::kRepPairs; ++i) {
      const CyclotomicQ lambda = random_param(rng, n), mu = random_param(rng, n);
      const std::string at = "n=" + std::to_string(n) + " pair " + std::to_string(i);
      const MatrixRep rep = build_rep(root, lambda, mu);
      const MatrixRep flipped = build_rep(root, inverse(lambda), inverse(mu));
      ck.require(rep_hom_check(rep, gens) && rep_hom_check(flipped, gens), [&] { return at + " hom check"; });
      ck.require(commutant_dim(rep) == 1, [&] { return at + " commutant is not 1"; });
      ck.require(commutant_dim(flipped) == 1, [&] { return at + " flipped commutant is not 1"; });
      const auto chi = central_character(rep, center);
      const auto chi_flipped = central_character(flipped, center);
      ck.require(chi == chi_flipped, [&] { return at + " central characters differ"; });
      ck.require(chi.front() == ipow(lambda, N) + ipow(lambda, -N), [&] { return at + " e_{m',0} is not λ^{m'} + λ^{-m'}"; });
      ck.require(intertwines(flip_intertwiner(n, N), rep, flipped, gens), [&] { return at + " flip does not intertwine"; });
    }
  }
}

// 9. Lattice lemmas.
void criterion_lattice(Check& ck, const Options&) {
  for (int g = 0; g <= pin::kDeltaGenusMax; ++g)
    for (int p = 1; p <= pin::kDeltaPuncturesMax; ++p) {
      if (g == 0 && p <= 2) continue;
      const Triangulation T = standard_triangulation(g, p);
      for (int e = 0; e < T.num_edges(); ++e) {
        const std::string at = "(" + std::to_string(g) + "," + std::to_string(p) + ") edge " + std::to_string(e);
        bool ok = true;
        try {
          const auto d = two_delta_decomposition(T, e);
          EdgeColoring sum(static_cast<std::size_t>(T.num_edges()), 0);
          for (const auto& [c, f] : d.terms) {
            ok = ok && is_admissible(T, f);
            sum = add(sum, scale(f, c));
          }
          EdgeColoring want(sum.size(), 0);
          want[static_cast<std::size_t>(e)] = 2;
          ok = ok && sum == want;
        } catch (const std::logic_error&) {
          ok = false;
        }
        ck.require(ok, [&] { return at + " two-delta decomposition"; });
      }
    }
  for (int g : {2, 3}) ck.require(two_delta_span_check(g), [&] { return "span check g=" + std::to_string(g); });
}

// 10. Shadow variety data.
void criterion_shadow(Check& ck, const Options&) {
  for (int g = 0; g <= pin::kShadowGenusMax; ++g)
    for (int p = 0; p <= pin::kShadowPuncturesMax; ++p)
      for (int n = 1; n <= pin::kRootMax; ++n) {
        const RootData root = root_data(n);
        const ShadowInfo s = shadow_variety_info(g, p, root);
        int dim = 6 * g - 6 + 3 * p;
        if (g == 0 && p <= 1) dim = 0;
        if (g == 0 && p == 2) dim = 1;
        if (g == 1 && p == 0) dim = 2;
        const auto target = n % 4 == 0 ? ShadowTarget::EvenCharacterVariety : ShadowTarget::CharacterVariety;
        const std::string at = "(" + std::to_string(g) + "," + std::to_string(p) + ") n=" + std::to_string(n);
        ck.require(s.dimension == dim, [&] { return at + " dimension " + std::to_string(s.dimension); });
        ck.require(s.target == target, [&] { return at + " target"; });
        ck.require(s.degree_bound == big_pow(root.m, p), [&] { return at + " degree bound"; });
      }
}

struct Criterion {
  int id;
  const char* name;
  const char* tags;
  const char* scope;
  void (*fn)(Check&, const Options&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "root-data", "cyclo root", "n=1..16", criterion_root_data},
      {2, "chebyshev", "cyclo chebyshev", "k,l<=50; k<=100, m<=10", criterion_chebyshev},
      {3, "graded-algebra", "graded coords", "(1,1),(0,3),(0,4),(1,2); n=2..8; 200 triples", criterion_graded},
      {4, "center-punctured", "graded center", "(1,1),(0,3); n in {2,3,4,5,6,8}; weight<=8", criterion_center},
      {5, "pi-degree", "graded pi", "(1,1),(0,4),(1,2),(2,1); n in {3,5,6,7,4,8,12}", criterion_pi_degree},
      {6, "closed-dt", "pants dt", "g=2,3; n=2..8; D=2m'", criterion_dt},
      {7, "torus-center", "torus center", "n=1..8; D=4m'", criterion_torus_center},
      {8, "unicity", "torus rep unicity", "n in {3,5,7}; 5 pairs", criterion_unicity},
      {9, "lattice-lemmas", "coords pants lattice", "g<=2, p<=4; span g=2,3", criterion_lattice},
      {10, "shadow-variety", "graded shadow", "g<=3, p<=4, n=1..16", criterion_shadow},
  };
  return all;
}

bool selected(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (filter == std::to_string(c.id)) return true;
  return std::string(c.name).find(filter) != std::string::npos || std::string(c.tags).find(filter) != std::string::npos;
}

Result run_one(const Criterion& c, const Options& opts) {
  Result r{c.id, c.name, c.tags, false, 0, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  Check ck;
  try {
    c.fn(ck, opts);
    r.passed = ck.failed() == 0 && ck.count() > 0;
    r.detail = ck.failed() == 0 ? std::string(c.scope) : std::to_string(ck.failed()) + " failed; first: " + ck.first_failure();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.checks = ck.count();
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<Result> run(const Options& opts) {
  std::vector<const Criterion*> chosen;
  for (const auto& c : criteria())
    if (selected(c, opts.filter)) chosen.push_back(&c);
  std::vector<Result> out;
  if (opts.parallel) {
    std::vector<std::future<Result>> jobs;
    for (const auto* c : chosen) jobs.push_back(std::async(std::launch::async, [c, &opts] { return run_one(*c, opts); }));
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (const auto* c : chosen) out.push_back(run_one(*c, opts));
  }
  return out;
}

void print_text(std::ostream& out, const std::vector<Result>& results) {
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.0f ms", r.millis);
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  checks=" << r.checks
        << "  tol=exact  " << ms << "  " << r.detail << "\n";
  }
  out << passed << "/" << results.size() << " criteria passed\n";
}

void print_json(std::ostream& out, const std::vector<Result>& results, std::uint64_t seed) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back(Json{{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"checks", r.checks},
                       {"tolerance", "exact"},
                       {"millis", static_cast<std::int64_t>(r.millis)},
                       {"detail", r.detail}});
  }
  out << Json{{"seed", seed}, {"passed", all}, {"criteria", arr}}.dump() << "\n";
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Acceptance suite"};
  Options opts;
  bool json = false;
  bool serial = false;
  app.add_option("--filter", opts.filter, "criterion id, name or tag");
  app.add_option("--seed", opts.seed, "seed for the randomized checks");
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--serial", serial, "run criteria one after another");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return 65;
  }
  opts.parallel = !serial;
  const auto results = run(opts);
  if (results.empty()) {
    err << Json{{"error", "no criterion matches --filter " + opts.filter}}.dump() << "\n";
    return 65;
  }
  if (json) {
    print_json(out, results, opts.seed);
  } else {
    print_text(out, results);
  }
  return std::all_of(results.begin(), results.end(), [](const Result& r) { return r.passed; }) ? 0 : 1;
}

}  // namespace skein::acceptance
