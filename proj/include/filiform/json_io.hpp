#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "filiform/cochain.hpp"
#include "filiform/cohomology.hpp"
#include "filiform/deformation.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform::io {

using Json = nlohmann::ordered_json;

/// Indices in every schema are 1-based; rationals are strings "p/q" or "p".
///
///   algebra     {"name", "dim", "weights", "flavor", "brackets": [{"i", "j", "terms": [{"k", "c"}]}]}
///   cochain     {"n", "degree", "coefficients", "terms": [{"args": [...], "k", "c"}]}   ("k" adjoint only)
///   deformation {"n", "components": [{"weight", "terms": [{"i", "j", "k", "c"}]}]}
///   point       {"n", "x": [5 rationals]}
///   two-form    {"n", "terms": [{"i", "j", "c"}]}
///   one-form    {"n", "terms": [{"i", "c"}]}

/// Parses text; syntax errors become InputError with line and column.
Json parse(std::string_view text, const std::string& source = "<input>");
Json read_file(const std::string& path);

enum class Kind { algebra, cochain, deformation, point, two_form, one_form, unknown };
/// Guessed from the keys present.
Kind kind_of(const Json& j);

Json to_json(const LieAlgebra& g);
Json to_json(const Cochain& c);
Json to_json(const Deformation& d);
Json to_json(const ModuliPoint& p);
Json two_form_json(const TwoForm& omega);
Json one_form_json(const Cochain& theta);
Json to_json(const CohomologyReport& r);
Json to_json(const BasisChange& phi);

/// Schema violations throw InputError naming the offending field.
LieAlgebra algebra_from_json(const Json& j);
Cochain cochain_from_json(const Json& j);
Deformation deformation_from_json(const Json& j);
ModuliPoint point_from_json(const Json& j);
TwoForm two_form_from_json(const Json& j);
Cochain one_form_from_json(const Json& j);

}  // namespace filiform::io
