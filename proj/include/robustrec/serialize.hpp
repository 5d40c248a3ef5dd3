#pragma once

#include <json.hpp>

#include "robustrec/decoder.hpp"
#include "robustrec/projector.hpp"
#include "robustrec/recovery.hpp"

namespace robustrec {

// JSON output schema (format 1): top-level keys
//   {"format","m","n","q","rank","U","image_basis","kernel_basis",
//    "anchor","projected_anchor"}
// Matrices are row-major nested arrays; bases are serialized one basis
// vector per row; indices are 0-based. Projector-only output carries null
// anchor/projected_anchor.

nlohmann::json matrix_to_json(const Matrix& M);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json basis_to_json(const OrthonormalBasis& basis);

nlohmann::json projector_to_json(const RobustProjector& projector);
nlohmann::json recovery_to_json(const RobustProjector& projector,
                                const RecoverySet& set);
nlohmann::json decode_to_json(const ProblemSpec& spec,
                              const DecodeResult& result);

}  // namespace robustrec
