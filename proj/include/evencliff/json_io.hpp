#pragma once

#include <json.hpp>

#include "evencliff/atlas.hpp"
#include "evencliff/bounds.hpp"
#include "evencliff/linalg.hpp"
#include "evencliff/normalizer.hpp"
#include "evencliff/structure.hpp"

namespace evencliff {

// nlohmann::json keeps object keys sorted, which gives the canonical field
// order; dump(2) of a parsed document reproduces the original bytes.
using Json = nlohmann::json;

/// Integral values become JSON integers (when they fit in 64 bits), others "p/q" strings.
Json rational_to_json(const Rational& v);
Rational rational_from_json(const Json& j);

/// [m] or [m1, m2].
Json mult_to_json(const Multiplicities& m);
Multiplicities mult_from_json(const Json& j);

/// {"rows", "cols", "entries": [[row, col, value], ...]} with row-major entries.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"r", "mult", "N", "J": [{"i", "j", "entries"}, ...]} in bivector order.
Json structure_to_json(const EvenCliffordStructure& s);
EvenCliffordStructure structure_from_json(const Json& j);

/// {"N", "dim", "elements": [entries, ...]}.
Json basis_to_json(const SubalgebraBasis& b);
SubalgebraBasis basis_from_json(const Json& j);

/// d_M is null when undefined, with "d_M_reason" explaining why.
Json bounds_to_json(const BoundsReport& rep);
Json model_to_json(const SymmetricSpaceModel& m);
Json cross_check_to_json(const CrossCheckReport& rep);
Json verify_to_json(const VerifyReport& rep);

}  // namespace evencliff
