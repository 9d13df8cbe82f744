#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cyclica/algebra.hpp"
#include "cyclica/complexes.hpp"
#include "cyclica/fedosov.hpp"
#include "cyclica/hp.hpp"
#include "cyclica/towers.hpp"

namespace cyclica {

using Json = nlohmann::json;

/// Input that is not valid JSON or does not follow the algebra schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"name", "dim", "mult": c[i][j][k], "ideals": {name: [basis vectors]}};
/// rationals as strings "p/q" or "p".
struct AlgebraInput {
    Algebra algebra;
    std::map<std::string, IdealInclusion> ideals;
};

/// Throws ParseError on schema problems, InvariantError (AssociativityError
/// included) when the data violates an algebraic invariant.
AlgebraInput algebra_from_json(const Json& j);
AlgebraInput load_algebra(const std::string& path);
Json algebra_to_json(const Algebra& a, const std::map<std::string, IdealInclusion>& ideals = {});

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// Dense rows of rational strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t cols);

Json complex_to_json(const ChainComplex& c);
Json super_to_json(const SuperComplex& x);
Json tower_to_json(const Tower& t);

Json to_json(const ProTrivialityReport& r);
Json to_json(const HPReport& r);
Json to_json(const GoodwillieReport& r);
Json to_json(const HUnitalReport& r);
Json to_json(const SixTermReport& r);
Json to_json(const ExcisionReport& r);
Json to_json(const CochainIdentityReport& r);

/// Stable text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace cyclica
