#pragma once

#include <string>

#include <json.hpp>

#include "monoidk/abgroup.hpp"
#include "monoidk/aset.hpp"
#include "monoidk/monoid.hpp"
#include "monoidk/monomial.hpp"

namespace monoidk {

using Json = nlohmann::json;

/// All parsers throw std::runtime_error with a diagnostic naming the first
/// violated invariant; structural JSON errors propagate from the json library.

Json load_json(const std::string& path);

PointedMonoid monoid_from_json(const Json& j);
Json monoid_to_json(const PointedMonoid& m);

RowMonomicMatrix matrix_from_json(const Json& j, const PointedMonoid& a);
Json matrix_to_json(const RowMonomicMatrix& m, const PointedMonoid& a);

/// "monoid" may be an inline monoid object or a file path (resolved against
/// base_dir when relative).
FiniteASet aset_from_json(const Json& j, const std::string& base_dir = ".");
Json aset_to_json(const FiniteASet& m);

Json group_to_json(const FgAbelianGroup& g);

}  // namespace monoidk
