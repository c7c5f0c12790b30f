#pragma once

#include "json.hpp"

#include "csflab/expand.hpp"
#include "csflab/mpoly.hpp"
#include "csflab/reconstruct.hpp"
#include "csflab/upoly.hpp"

namespace csflab {

// JSON renderings used by the CLI. Coefficients are exact decimal strings
// ("p/q" for non-integers); partition keys read "3,2,1"; key order follows the
// canonical partition order, so output is byte-deterministic.

nlohmann::ordered_json mpoly_to_json(const MPoly& f);
nlohmann::ordered_json upoly_to_json(const UPoly& u);
nlohmann::ordered_json upoly_xy_to_json(const UPolyXY& u);
nlohmann::ordered_json expansion_to_json(const BasisExpansion& x);
nlohmann::ordered_json lambda_matrix_to_json(const LambdaMatrix& m, int rank);

}  // namespace csflab
