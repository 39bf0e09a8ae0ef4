#include "cli.hpp"

#include "acceptance.hpp"
#include "skein/chebyshev.hpp"
#include "skein/coloring.hpp"
#include "skein/graded.hpp"
#include "skein/json_io.hpp"
#include "skein/pants.hpp"
#include "skein/root_data.hpp"
#include "skein/torus.hpp"
#include "skein/torus_rep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

namespace skein::cli {

namespace {

const char* const kUsage =
    "usage: skein <command> [options]\n"
    "commands:\n"
    "  root-data     --n N\n"
    "  chebyshev     --k K [--l L | --m M]\n"
    "  surface       --genus G --punctures P | --triangulation T\n"
    "  adm           --check F  (surface)\n"
    "  lt-mul        --input [X, Y] --n N  (surface)\n"
    "  center-lead   --check F --n N [--bound D]  (surface)\n"
    "  center-enum   --n N [--bound D]  (surface)\n"
    "  pi-degree     --n N  (surface)\n"
    "  shadow-info   --genus G --punctures P --n N\n"
    "  dt-mul        --genus G --n N --input [X, Y]\n"
    "  dt-central    --genus G --n N --check X [--bound D]\n"
    "  torus         mul|center|thread|rep --n N ...\n"
    "  acceptance    [--filter F] [--json] [--seed S]\n"
    "A surface is given by --surface G,P, by --genus/--punctures, or by a\n"
    "triangulation file. JSON arguments are inline when they start with '['\n"
    "or '{' and file paths otherwise. Add --details for extra fields.\n";

struct Args {
  std::optional<int> n;
  std::optional<int> genus;
  std::optional<int> punctures;
  std::vector<int> surface;
  std::string triangulation;
  std::string pants;
  std::string input;
  std::string check;
  std::optional<std::int64_t> bound;
  std::optional<int> k, l, m;
  std::optional<std::int64_t> p, q;
  std::string lambda, mu;
  std::uint64_t seed = acceptance::kDefaultSeed;
  std::string output;
  bool details = false;
  std::string mode;
};

Json load_json(const std::string& value, const char* what) {
  if (value.empty()) throw JsonError(std::string("missing --") + what);
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '[' || value[first] == '{')) return Json::parse(value);
  std::ifstream in(value);
  if (!in) throw JsonError("cannot read " + value);
  return Json::parse(in);
}

RootData need_root(const Args& a) {
  if (!a.n) throw std::invalid_argument("missing --n");
  return root_data(*a.n);
}

std::shared_ptr<const Triangulation> need_surface(const Args& a) {
  if (!a.triangulation.empty()) {
    return std::make_shared<const Triangulation>(triangulation_from_json(load_json(a.triangulation, "triangulation")));
  }
  if (a.surface.size() == 2) return std::make_shared<const Triangulation>(standard_triangulation(a.surface[0], a.surface[1]));
  if (!a.genus || !a.punctures) throw std::invalid_argument("give --surface G,P, --genus and --punctures, or --triangulation");
  return std::make_shared<const Triangulation>(standard_triangulation(*a.genus, *a.punctures));
}

std::shared_ptr<const PantsDecomposition> need_pants(const Args& a) {
  if (!a.pants.empty()) {
    const Json j = load_json(a.pants, "pants");
    if (!j.is_object() || !j.contains("genus") || !j.contains("curves")) throw JsonError("pants needs \"genus\" and \"curves\"");
    std::vector<std::array<int, 2>> curves;
    for (const auto& c : j.at("curves")) {
      if (!c.is_array() || c.size() != 2) throw JsonError("each pants curve joins two pants");
      curves.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return std::make_shared<const PantsDecomposition>(j.at("genus").get<int>(), std::move(curves));
  }
  if (!a.genus) throw std::invalid_argument("missing --genus");
  return std::make_shared<const PantsDecomposition>(standard_pants(*a.genus));
}

Json pair_list(const std::vector<TorusKey>& keys) {
  Json out = Json::array();
  for (const auto& [p, q] : keys) out.push_back(Json::array({p, q}));
  return out;
}

// --input [X, Y]
std::pair<Json, Json> two_operands(const Args& a) {
  const Json j = load_json(a.input, "input");
  if (!j.is_array() || j.size() != 2) throw JsonError("--input must be a list of two operands");
  return {j[0], j[1]};
}

bool is_int_array(const Json& j) { return j.is_array() && (j.empty() || j[0].is_number_integer()); }

Json cmd_root_data(const Args& a) {
  const RootData r = need_root(a);
  Json out{{"m", r.m}, {"m_prime", r.m_prime}, {"epsilon", std::string(to_string(r.epsilon_class))}};
  if (a.details) {
    out["n"] = r.n;
    out["epsilon_exponent"] = r.epsilon_exponent;
  }
  return out;
}

Json cmd_chebyshev(const Args& a) {
  if (!a.k) throw std::invalid_argument("missing --k");
  if (a.l) return Json{{"k", *a.k}, {"l", *a.l}, {"product_to_sum", product_to_sum_check(*a.k, *a.l)}};
  if (a.m) {
    const auto r = chebyshev_reduce(*a.k, *a.m);
    return Json{{"k", r.k}, {"m", r.m}, {"quotient", r.quotient}, {"remainder", r.remainder}, {"identity_holds", r.identity_holds}};
  }
  Json coeffs = Json::array();
  const IntPoly T = chebyshev_T(*a.k);
  for (const auto& c : T.coeffs()) coeffs.push_back(big_to_json(c));
  return Json{{"k", *a.k}, {"coeffs", coeffs}};
}

Json cmd_surface(const Args& a) {
  TriangulationData data;
  if (!a.triangulation.empty()) {
    data = triangulation_from_json(load_json(a.triangulation, "triangulation"));
  } else if (a.surface.size() == 2) {
    data = standard_triangulation_data(a.surface[0], a.surface[1]);
  } else {
    if (!a.genus || !a.punctures) throw std::invalid_argument("give --genus and --punctures, or --triangulation");
    data = standard_triangulation_data(*a.genus, *a.punctures);
  }
  const ValidationReport report = validate(data);
  if (!report.ok) return Json{{"valid", false}, {"failure", report.failure}};
  const Triangulation T(data);
  Json out{{"valid", true},
           {"genus", T.genus()},
           {"punctures", T.num_punctures()},
           {"triangles", T.num_triangles()},
           {"edges", T.num_edges()},
           {"triangulation", to_json(T.data())}};
  if (a.details) {
    Json nbhd = Json::array();
    for (int e = 0; e < T.num_edges(); ++e) {
      const auto h = T.edge_neighborhood(e);
      nbhd.push_back(Json{{"edge", e},
                          {"triangles", h.triangles},
                          {"a", h.a},
                          {"b", h.b},
                          {"c", h.c},
                          {"d", h.d},
                          {"corners", h.corners},
                          {"endpoints", T.edge_endpoints(e)}});
    }
    Json periph = Json::array();
    for (int v = 0; v < T.num_punctures(); ++v) periph.push_back(coloring_to_json(peripheral_coloring(T, v)));
    out["edge_neighborhoods"] = nbhd;
    out["peripheral_colorings"] = periph;
  }
  return out;
}

Json cmd_adm(const Args& a) {
  const auto T = need_surface(a);
  const EdgeColoring f = coloring_from_json(load_json(a.check, "check"), T->num_edges());
  const bool ok = is_admissible(*T, f);
  Json out{{"admissible", ok}};
  if (a.details && ok) {
    out["corners"] = to_corners(*T, f);
    out["q"] = q_form(*T, f);
    out["even"] = is_even(*T, f);
    Json comps = Json::array();
    for (const auto& c : components(*T, f).components) {
      Json item{{"primitive", c.primitive}, {"multiplicity", c.multiplicity}, {"peripheral", c.peripheral()}};
      if (c.peripheral()) item["puncture"] = c.puncture;
      comps.push_back(item);
    }
    out["components"] = comps;
  }
  return out;
}

GradedElement graded_operand(const Json& j, const std::shared_ptr<const Triangulation>& T, const RootData& root) {
  if (is_int_array(j)) {
    const auto f = coloring_from_json(j, T->num_edges());
    if (!is_admissible(*T, f)) throw JsonError("operand " + j.dump() + " is not admissible");
    return GradedElement::basis(T, root, f);
  }
  return graded_from_json(j, T, root);
}

Json cmd_lt_mul(const Args& a) {
  const auto T = need_surface(a);
  const RootData root = need_root(a);
  const auto [jx, jy] = two_operands(a);
  const GradedElement x = graded_operand(jx, T, root);
  const GradedElement y = graded_operand(jy, T, root);
  Json out{{"product", to_json(mul(x, y))}};
  if (a.details && is_int_array(jx) && is_int_array(jy)) {
    const auto f = coloring_from_json(jx), g = coloring_from_json(jy);
    out["pairing"] = pairing(*T, f, g);
    out["commutation_exponent"] = commutation_exponent(*T, root, f, g);
  }
  return out;
}

Json cmd_center_lead(const Args& a) {
  const auto T = need_surface(a);
  const RootData root = need_root(a);
  const EdgeColoring f = coloring_from_json(load_json(a.check, "check"), T->num_edges());
  if (!is_admissible(*T, f)) throw JsonError("coloring is not admissible");
  const auto cert = central_lead_test(*T, root, f);
  Json out;
  if (cert.accepted) {
    out = Json{{"central", true}, {"beta", cert.beta}, {"r", cert.r}, {"beta_even", cert.beta_even}};
  } else {
    out = Json{{"central", false}, {"reason", to_string(cert.reason)}, {"witness", cert.witness}};
  }
  if (a.bound) out["oracle"] = central_lead_oracle(*T, root, f, *a.bound);
  return out;
}

Json cmd_center_enum(const Args& a) {
  const auto T = need_surface(a);
  const RootData root = need_root(a);
  const std::int64_t D = a.bound.value_or(8);
  if (D < 0) throw std::invalid_argument("--bound must be >= 0");
  const auto found = center_enumerate(*T, root, D);
  Json list = Json::array();
  for (const auto& f : found) list.push_back(f);
  Json out{{"bound", D}, {"count", found.size()}, {"colorings", list}};
  if (a.details) out["matches_prediction"] = found == predicted_center(*T, root, D);
  return out;
}

Json cmd_pi_degree(const Args& a) {
  const auto T = need_surface(a);
  const RootData root = need_root(a);
  const PiDegree pd = pi_degree(*T, root);
  Json out{{"N", big_to_json(pd.N)}, {"rank", big_to_json(pd.rank)}};
  if (a.details) {
    Json div = Json::array();
    for (const auto& d : pd.divisors) div.push_back(big_to_json(d));
    out["radical_rank"] = pd.radical_rank;
    out["divisors"] = div;
    out["lattice_basis"] = pd.lattice_basis;
  }
  return out;
}

Json cmd_shadow_info(const Args& a) {
  int g = 0, p = 0;
  if (a.surface.size() == 2) {
    g = a.surface[0];
    p = a.surface[1];
  } else {
    if (!a.genus || !a.punctures) throw std::invalid_argument("give --genus and --punctures");
    g = *a.genus;
    p = *a.punctures;
  }
  if (g < 0 || p < 0) throw std::invalid_argument("genus and punctures must be >= 0");
  const ShadowInfo s = shadow_variety_info(g, p, need_root(a));
  return Json{{"dimension", s.dimension}, {"target", to_string(s.target)}, {"degree_bound", big_to_json(s.degree_bound)}};
}

TriangularElement dt_operand(const Json& j, const std::shared_ptr<const PantsDecomposition>& P, const RootData& root) {
  auto index = [&](const Json& item) {
    DTIndex x = dt_index_from_json(item);
    if (static_cast<int>(x.n.size()) != P->num_curves()) throw JsonError("DT index has the wrong length");
    if (!is_triangular(*P, x)) throw JsonError("DT index " + item.dump() + " is not triangular");
    return x;
  };
  if (j.is_object()) return TriangularElement::basis(P, root, index(j));
  if (!j.is_array()) throw JsonError("DT operand must be an index or a list of terms");
  TriangularElement x(P, root);
  for (const auto& term : j) {
    Cyclotomic c = term.contains("coeff") ? cyclotomic_from_json(term.at("coeff")) : Cyclotomic::one(root.n);
    if (c.order() != root.n) throw JsonError("coefficient order differs from --n");
    x.add_term(index(term), c);
  }
  return x;
}

Json cmd_dt_mul(const Args& a) {
  const auto P = need_pants(a);
  const RootData root = need_root(a);
  const auto [jx, jy] = two_operands(a);
  Json out{{"product", to_json(dt_mul(dt_operand(jx, P, root), dt_operand(jy, P, root)))}};
  if (a.details && jx.is_object() && jy.is_object()) out["exponent"] = dt_exponent(*P, dt_index_from_json(jx), dt_index_from_json(jy));
  return out;
}

Json cmd_dt_central(const Args& a) {
  const auto P = need_pants(a);
  const RootData root = need_root(a);
  const Json j = load_json(a.check, "check");
  const DTIndex x = dt_index_from_json(j);
  if (static_cast<int>(x.n.size()) != P->num_curves()) throw JsonError("DT index has the wrong length");
  if (!is_triangular(*P, x)) throw JsonError("DT index is not triangular");
  const auto cert = dt_central_test(*P, root, x);
  Json out;
  if (cert.accepted) {
    out = Json{{"central", true}, {"beta", to_json(cert.beta)}};
  } else {
    out = Json{{"central", false}, {"reason", to_string(cert.reason)}, {"witness", cert.witness}};
  }
  if (a.bound) out["oracle"] = DtCenterOracle(P, root, *a.bound).is_central(x);
  return out;
}

TorusElement torus_operand(const Json& j, const RootData& root) {
  if (is_int_array(j)) {
    if (j.size() != 2) throw JsonError("torus basis operand is [p, q]");
    return TorusElement::basis(root, j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  return torus_from_json(j, root);
}

Json cmd_torus(const Args& a) {
  const RootData root = need_root(a);
  if (a.mode == "mul") {
    const auto [jx, jy] = two_operands(a);
    return Json{{"product", to_json(fg_mul(torus_operand(jx, root), torus_operand(jy, root)))}};
  }
  if (a.mode == "center") {
    const std::int64_t D = a.bound.value_or(4 * root.m_prime);
    if (D < 1) throw std::invalid_argument("--bound must be >= 1");
    const auto keys = torus_center_bruteforce(root, D);
    return Json{{"bound", D}, {"keys", pair_list(keys)}, {"threaded", keys == torus_threaded_set(root, D)}};
  }
  if (a.mode == "thread") {
    if (!a.k || !a.p || !a.q) throw std::invalid_argument("thread needs --k, --p and --q");
    if (*a.k < 0) throw std::invalid_argument("--k must be >= 0");
    return Json{{"k", *a.k}, {"element", to_json(torus_T(root, *a.k, *a.p, *a.q))}};
  }
  // rep
  auto param = [&](const std::string& v, const char* what) {
    if (v.empty()) return CyclotomicQ::one(root.n);
    const CyclotomicQ x = cyclotomic_q_from_json(load_json(v, what));
    if (x.order() != root.n) throw JsonError(std::string(what) + " has the wrong order");
    return x;
  };
  const CyclotomicQ lambda = param(a.lambda, "lambda");
  const CyclotomicQ mu = param(a.mu, "mu");
  const MatrixRep rep = build_rep(root, lambda, mu);
  const int N = rep.size;
  const std::vector<TorusKey> sample{{N, 0}, {0, N}, {N, N}};
  const auto chi = central_character(rep, sample);
  Json character = Json::array();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    character.push_back(Json{{"p", sample[i].first}, {"q", sample[i].second}, {"value", to_json(chi[i])}});
  }
  Json out{{"size", N}, {"hom_check", true}, {"commutant_dim", commutant_dim(rep)}, {"central_character", character}};
  if (a.details) {
    const MatrixRep flipped = build_rep(root, inverse(lambda), inverse(mu));
    const std::vector<TorusKey> gens{{1, 0}, {0, 1}, {1, 1}};
    out["flipped_commutant_dim"] = commutant_dim(flipped);
    out["flipped_character_equal"] = central_character(flipped, sample) == chi;
    out["flip_intertwines"] = intertwines(flip_intertwiner(root.n, N), rep, flipped, gens);
  }
  return out;
}

using Handler = Json (*)(const Args&);

struct Command {
  Handler handler;
  // which options the command accepts
  bool root, surface, pants, input, check, bound, cheb, torus;
};

const std::map<std::string, Command>& commands() {
  //                                            root  surf  pants input check bound cheb  torus
  static const std::map<std::string, Command> table{
      {"root-data", {cmd_root_data, true, false, false, false, false, false, false, false}},
      {"chebyshev", {cmd_chebyshev, false, false, false, false, false, false, true, false}},
      {"surface", {cmd_surface, false, true, false, false, false, false, false, false}},
      {"adm", {cmd_adm, false, true, false, false, true, false, false, false}},
      {"lt-mul", {cmd_lt_mul, true, true, false, true, false, false, false, false}},
      {"center-lead", {cmd_center_lead, true, true, false, false, true, true, false, false}},
      {"center-enum", {cmd_center_enum, true, true, false, false, false, true, false, false}},
      {"pi-degree", {cmd_pi_degree, true, true, false, false, false, false, false, false}},
      {"shadow-info", {cmd_shadow_info, true, true, false, false, false, false, false, false}},
      {"dt-mul", {cmd_dt_mul, true, false, true, true, false, false, false, false}},
      {"dt-central", {cmd_dt_central, true, false, true, false, true, true, false, false}},
      {"torus", {cmd_torus, true, false, false, true, false, true, false, true}},
  };
  return table;
}

void configure(CLI::App& app, const Command& c, Args& a) {
  if (c.root) app.add_option("--n", a.n, "order of the root of unity ζ")->check(CLI::PositiveNumber);
  if (c.surface || c.pants) app.add_option("--genus", a.genus, "genus");
  if (c.surface) {
    app.add_option("--punctures", a.punctures, "number of punctures");
    app.add_option("--surface", a.surface, "G,P")->delimiter(',')->expected(2);
    app.add_option("--triangulation", a.triangulation, "triangulation JSON or file");
  }
  if (c.pants) app.add_option("--pants", a.pants, "pants graph JSON or file: {\"genus\", \"curves\"}");
  if (c.input) app.add_option("--input", a.input, "operands [X, Y] as JSON or file");
  if (c.check) app.add_option("--check", a.check, "value to test, JSON or file");
  if (c.bound) app.add_option("--bound", a.bound, "enumeration bound D");
  if (c.cheb) {
    app.add_option("--k", a.k, "degree")->check(CLI::NonNegativeNumber);
    app.add_option("--l", a.l, "second degree for the product-to-sum check")->check(CLI::NonNegativeNumber);
    app.add_option("--m", a.m, "reduce T_k modulo 2m");
  }
  if (c.torus) {
    app.add_option("mode", a.mode, "mul | center | thread | rep")->required();
    app.add_option("--k", a.k, "Chebyshev degree (thread)");
    app.add_option("--p", a.p, "first slope coordinate (thread)");
    app.add_option("--q", a.q, "second slope coordinate (thread)");
    app.add_option("--lambda", a.lambda, "clock parameter, cyclotomic JSON (rep)");
    app.add_option("--mu", a.mu, "shift parameter, cyclotomic JSON (rep)");
  }
  app.add_option("--seed", a.seed, "PRNG seed (randomized commands only)");
  app.add_option("--output", a.output, "write the JSON result here instead of stdout");
  app.add_flag("--details", a.details, "include additional fields");
}

int fail(std::ostream& err, int code, const std::string& what) {
  err << Json{{"error", what}}.dump() << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (argc < 2) {
    err << kUsage;
    return fail(err, kExitUnknownCommand, "missing command");
  }
  const std::string name = argv[1];
  if (name == "-h" || name == "--help" || name == "help") {
    out << kUsage;
    return kExitOk;
  }
  if (name == "acceptance") return acceptance::main(argc - 1, argv + 1, out, err);
  const auto it = commands().find(name);
  if (it == commands().end()) return fail(err, kExitUnknownCommand, "unknown command \"" + name + "\"");
  if (name == "torus") {
    static const std::set<std::string> modes{"mul", "center", "thread", "rep"};
    if (argc < 3 || (argv[2][0] != '-' && !modes.count(argv[2]))) {
      return fail(err, kExitUnknownCommand, argc < 3 ? "torus needs a mode" : "unknown torus mode \"" + std::string(argv[2]) + "\"");
    }
  }

  Args args;
  CLI::App app{"skein " + name};
  app.name("skein " + name);
  configure(app, it->second, args);
  try {
    app.parse(argc - 1, argv + 1);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kExitInvalidInput, e.what());
  }

  Json result;
  try {
    result = it->second.handler(args);
  } catch (const JsonError& e) {
    return fail(err, kExitInvalidInput, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(err, kExitInvalidInput, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, kExitInvalidInput, e.what());
  } catch (const std::domain_error& e) {
    return fail(err, kExitInvalidInput, e.what());
  } catch (const std::out_of_range& e) {
    return fail(err, kExitInvalidInput, e.what());
  } catch (const std::exception& e) {
    return fail(err, kExitInternal, e.what());
  }

  const std::string text = result.dump() + "\n";
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!file || !(file << text)) return fail(err, kExitInvalidInput, "cannot write " + args.output);
  }
  return kExitOk;
}

}  // namespace skein::cli
