#include "robustrec/serialize.hpp"

namespace robustrec {

using nlohmann::json;

json matrix_to_json(const Matrix& M) {
  json rows = json::array();
  for (Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json entries = json::array();
  for (Index i = 0; i < v.size(); ++i) entries.push_back(v(i));
  return entries;
}

json basis_to_json(const OrthonormalBasis& basis) {
  // One basis vector per row.
  return matrix_to_json(basis.vectors.transpose());
}

json projector_to_json(const RobustProjector& projector) {
  return json{{"format", 1},
              {"m", projector.m},
              {"n", projector.n},
              {"q", projector.q},
              {"rank", projector.rank},
              {"U", matrix_to_json(projector.U)},
              {"image_basis", basis_to_json(projector.image_basis)},
              {"kernel_basis", basis_to_json(projector.kernel_basis)},
              {"anchor", nullptr},
              {"projected_anchor", nullptr}};
}

json recovery_to_json(const RobustProjector& projector,
                      const RecoverySet& set) {
  json out = projector_to_json(projector);
  out["anchor"] = vector_to_json(set.anchor);
  out["projected_anchor"] = vector_to_json(set.projected_anchor);
  return out;
}

json decode_to_json(const ProblemSpec& spec, const DecodeResult& result) {
  return json{{"format", 1},
              {"m", spec.m()},
              {"n", spec.n()},
              {"q", spec.q},
              {"x_hat", vector_to_json(result.x_hat)},
              {"e_hat", vector_to_json(result.e_hat)},
              {"support", result.support},
              {"support_size", result.support_size},
              {"dropped_rows", result.dropped_rows}};
}

}  // namespace robustrec
