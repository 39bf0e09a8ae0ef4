#include "skein/json_io.hpp"

#include <string>

namespace skein {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw JsonError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json big_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>())) : BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw JsonError("invalid integer string \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw JsonError("expected an integer");
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(big_to_json(c));
  return Json{{"n", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  if (n < 1) throw JsonError("n must be >= 1");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw JsonError("coeffs must be an array");
  std::vector<BigInt> v;
  for (const auto& c : cs) v.push_back(big_from_json(c));
  return Cyclotomic(n, std::move(v));
}

Json to_json(const CyclotomicQ& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) {
    if (c.get_den() == 1) {
      coeffs.push_back(big_to_json(c.get_num()));
    } else {
      coeffs.push_back(c.get_str());
    }
  }
  return Json{{"n", x.order()}, {"coeffs", coeffs}};
}

CyclotomicQ cyclotomic_q_from_json(const Json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  if (n < 1) throw JsonError("n must be >= 1");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw JsonError("coeffs must be an array");
  std::vector<Rational> v;
  for (const auto& c : cs) {
    if (c.is_string()) {
      Rational r;
      if (r.set_str(c.get<std::string>(), 10) != 0 || r.get_den() == 0) {
        throw JsonError("invalid rational \"" + c.get<std::string>() + "\"");
      }
      r.canonicalize();
      v.push_back(r);
    } else {
      v.emplace_back(big_from_json(c));
    }
  }
  return CyclotomicQ(n, std::move(v));
}

Json to_json(const TriangulationData& d) {
  Json tri = Json::array();
  for (const auto& t : d.triangles) tri.push_back(Json::array({t[0], t[1], t[2]}));
  Json glue = Json::array();
  for (const auto& g : d.gluing) glue.push_back(Json::array({g[0], g[1]}));
  return Json{{"genus", d.genus},
              {"punctures", d.punctures},
              {"triangles", tri},
              {"gluing", glue},
              {"edge_order", d.edge_order}};
}

TriangulationData triangulation_from_json(const Json& j) {
  TriangulationData d;
  d.genus = int_from_json(field(j, "genus"), "genus");
  d.punctures = int_from_json(field(j, "punctures"), "punctures");
  const Json& tri = field(j, "triangles");
  if (!tri.is_array()) throw JsonError("triangles must be an array");
  for (const auto& t : tri) {
    if (!t.is_array() || t.size() != 3) throw JsonError("each triangle must list three side labels");
    d.triangles.push_back({int_from_json(t[0], "side label"), int_from_json(t[1], "side label"),
                           int_from_json(t[2], "side label")});
  }
  const Json& glue = field(j, "gluing");
  if (!glue.is_array()) throw JsonError("gluing must be an array");
  for (const auto& g : glue) {
    if (!g.is_array() || g.size() != 2) throw JsonError("each gluing must pair two side labels");
    d.gluing.push_back({int_from_json(g[0], "side label"), int_from_json(g[1], "side label")});
  }
  if (j.contains("edge_order")) {
    const Json& order = j.at("edge_order");
    if (!order.is_array()) throw JsonError("edge_order must be an array");
    for (const auto& e : order) d.edge_order.push_back(int_from_json(e, "edge_order entry"));
  } else {
    for (std::size_t i = 0; i < d.gluing.size(); ++i) d.edge_order.push_back(static_cast<int>(i));
  }
  return d;
}

Json coloring_to_json(const std::vector<std::int64_t>& f) { return Json(f); }

std::vector<std::int64_t> coloring_from_json(const Json& j, int size) {
  if (!j.is_array()) throw JsonError("coloring must be an integer array");
  std::vector<std::int64_t> f;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw JsonError("coloring must be an integer array");
    f.push_back(x.get<std::int64_t>());
  }
  if (size >= 0 && static_cast<int>(f.size()) != size) {
    throw JsonError("coloring has " + std::to_string(f.size()) + " entries, expected " + std::to_string(size));
  }
  return f;
}

Json to_json(const GradedElement& x) {
  Json out = Json::array();
  for (const auto& [f, c] : x.terms()) out.push_back(Json{{"coloring", coloring_to_json(f)}, {"coeff", to_json(c)}});
  return out;
}

GradedElement graded_from_json(const Json& j, std::shared_ptr<const Triangulation> T, const RootData& root) {
  if (!j.is_array()) throw JsonError("graded element must be an array of terms");
  GradedElement x(T, root);
  for (const auto& term : j) {
    auto f = coloring_from_json(field(term, "coloring"), T->num_edges());
    if (!is_admissible(*T, f)) throw JsonError("term coloring is not admissible");
    Cyclotomic c = term.contains("coeff") ? cyclotomic_from_json(term.at("coeff")) : Cyclotomic::one(root.n);
    if (c.order() != root.n) throw JsonError("coefficient order differs from --n");
    x.add_term(f, c);
  }
  return x;
}

Json to_json(const DTIndex& x) { return Json{{"n", x.n}, {"t", x.t}}; }

DTIndex dt_index_from_json(const Json& j) {
  DTIndex x{coloring_from_json(field(j, "n")), coloring_from_json(field(j, "t"))};
  if (x.n.size() != x.t.size()) throw JsonError("n and t must have the same length");
  return x;
}

Json to_json(const TriangularElement& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) out.push_back(Json{{"n", k.n}, {"t", k.t}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const TorusElement& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms()) terms.push_back(Json{{"p", k.first}, {"q", k.second}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}};
}

TorusElement torus_from_json(const Json& j, const RootData& root) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw JsonError("terms must be an array");
  TorusElement x(root);
  for (const auto& t : terms) {
    const Json& p = field(t, "p");
    const Json& q = field(t, "q");
    if (!p.is_number_integer() || !q.is_number_integer()) throw JsonError("p and q must be integers");
    Cyclotomic c = t.contains("coeff") ? cyclotomic_from_json(t.at("coeff")) : Cyclotomic::one(root.n);
    if (c.order() != root.n) throw JsonError("coefficient order differs from --n");
    x.add_term({p.get<std::int64_t>(), q.get<std::int64_t>()}, c);
  }
  return x;
}

}  // namespace skein
