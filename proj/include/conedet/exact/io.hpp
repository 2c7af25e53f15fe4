// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "conedet/exact/cone.hpp"

namespace conedet::exact {

using nlohmann::json;

/// A cone document carries "space_dim" plus "generators" and/or
/// "inequalities" (lists of rational-string vectors like ["2","-1/3"]).
struct ParsedCone {
  int space_dim = 0;
  std::optional<ConeV> v;
  std::optional<ConeH> h;
};

ParsedCone parse_cone_json(const json& j);

/// A nested pair document: {"space_dim": n, "K": {...}, "L": {...}} where K
/// and L are cone documents (generators preferred when both are present).
struct ParsedPair {
  ParsedCone inner;
  ParsedCone outer;
};

ParsedPair parse_pair_json(const json& j);

/// Vectors are accepted either bare (["3","-1"]) or wrapped
/// ({"vector": ["3","-1"]}).
Vec parse_vector_json(const json& j, int space_dim);

json vector_to_json(const Vec& v);
json vectors_to_json(const std::vector<Vec>& vs);
json cone_v_to_json(const ConeV& v);
json cone_h_to_json(const ConeH& h);
json cone_to_json(const Cone& c);
json report_to_json(const ProperConeReport& r);
json face_to_json(const Face& f);
json membership_to_json(const MembershipResult& m);

json load_json_file(const std::string& path);

}  // namespace conedet::exact
