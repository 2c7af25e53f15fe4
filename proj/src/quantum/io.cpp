// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/quantum/io.hpp"

#include "conedet/errors.hpp"

namespace conedet::quantum {

namespace {

Complex parse_entry(const nlohmann::json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw SchemaError("matrix entries must be [real, imaginary] number pairs");
  }
  return Complex(e[0].get<double>(), e[1].get<double>());
}

}  // namespace

BipartiteHermitian parse_bipartite_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("operator document must be a JSON object");
  if (!j.contains("d1") || !j.contains("d2") || !j.contains("matrix")) {
    throw SchemaError("operator document needs \"d1\", \"d2\" and \"matrix\"");
  }
  if (!j["d1"].is_number_integer() || !j["d2"].is_number_integer()) {
    throw SchemaError("\"d1\" and \"d2\" must be integers");
  }
  const int d1 = j["d1"].get<int>();
  const int d2 = j["d2"].get<int>();
  if (d1 < 2 || d2 < 2) throw SchemaError("local dimensions must be at least 2");
  const auto& rows = j["matrix"];
  const int n = d1 * d2;
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw SchemaError("\"matrix\" must have d1*d2 rows");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SchemaError("\"matrix\" rows must each have d1*d2 entries");
    }
    for (int k = 0; k < n; ++k) m(i, k) = parse_entry(row[k]);
  }
  return make_bipartite_hermitian(BipartiteDims{d1, d2}, std::move(m));
}

nlohmann::json bipartite_to_json(const BipartiteHermitian& a) {
  nlohmann::json rows = nlohmann::json::array();
  const int n = a.dims.total();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < n; ++k) {
      row.push_back({a.mat(i, k).real(), a.mat(i, k).imag()});
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"d1", a.dims.d1}, {"d2", a.dims.d2}, {"matrix", std::move(rows)}};
}

nlohmann::json complex_vector_to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

nlohmann::json product_vector_to_json(const ProductVector& pv) {
  return nlohmann::json{{"phi", complex_vector_to_json(pv.phi)},
                        {"psi", complex_vector_to_json(pv.psi)}};
}

}  // namespace conedet::quantum
