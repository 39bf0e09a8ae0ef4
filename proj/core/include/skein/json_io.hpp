#pragma once

#include "skein/cyclotomic.hpp"
#include "skein/graded.hpp"
#include "skein/pants.hpp"
#include "skein/torus.hpp"
#include "skein/triangulation.hpp"

#include <json.hpp>

#include <stdexcept>

namespace skein {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid JSON input.
struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both.
Json big_to_json(const BigInt& x);
BigInt big_from_json(const Json& j);

/// {"n": n, "coeffs": [c0, c1, ...]}, little-endian in powers of ζ.
Json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);
/// Rational coefficients are written as "p/q" strings when not integral.
Json to_json(const CyclotomicQ& x);
/// Accepts integers, decimal strings and "p/q" strings as coefficients.
CyclotomicQ cyclotomic_q_from_json(const Json& j);

Json to_json(const TriangulationData& d);
TriangulationData triangulation_from_json(const Json& j);

Json coloring_to_json(const std::vector<std::int64_t>& f);
/// Throws JsonError unless j is an integer array (of length `size` when size >= 0).
std::vector<std::int64_t> coloring_from_json(const Json& j, int size = -1);

/// [{"coloring": [...], "coeff": {...}}, ...] in coloring order.
Json to_json(const GradedElement& x);
GradedElement graded_from_json(const Json& j, std::shared_ptr<const Triangulation> T, const RootData& root);

/// {"n": [...], "t": [...]}
Json to_json(const DTIndex& x);
DTIndex dt_index_from_json(const Json& j);

/// [{"n": [...], "t": [...], "coeff": {...}}, ...]
Json to_json(const TriangularElement& x);

/// {"terms": [{"p": p, "q": q, "coeff": {...}}, ...]}; p = q = 0 is the unit.
Json to_json(const TorusElement& x);
TorusElement torus_from_json(const Json& j, const RootData& root);

}  // namespace skein
