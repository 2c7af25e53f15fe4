// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/exact/io.hpp"

#include <fstream>

#include "conedet/errors.hpp"

namespace conedet::exact {

namespace {

std::vector<Vec> parse_vector_list(const json& j, int space_dim, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be a list of vectors");
  std::vector<Vec> out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != space_dim) {
      throw SchemaError(std::string(what) + ": each vector needs space_dim entries");
    }
    Vec v;
    v.reserve(row.size());
    for (const auto& entry : row) {
      if (!entry.is_string()) {
        throw SchemaError(std::string(what) + ": entries must be rational strings like \"-1/3\"");
      }
      v.push_back(parse_rational(entry.get<std::string>()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ParsedCone parse_cone_json(const json& j) {
  if (!j.is_object()) throw SchemaError("cone document must be a JSON object");
  if (!j.contains("space_dim") || !j["space_dim"].is_number_integer()) {
    throw SchemaError("cone document needs an integer \"space_dim\"");
  }
  ParsedCone pc;
  pc.space_dim = j["space_dim"].get<int>();
  if (pc.space_dim <= 0) throw SchemaError("\"space_dim\" must be positive");
  if (j.contains("generators")) {
    pc.v = make_cone_v(pc.space_dim, parse_vector_list(j["generators"], pc.space_dim, "generators"));
  }
  if (j.contains("inequalities")) {
    pc.h = make_cone_h(pc.space_dim, parse_vector_list(j["inequalities"], pc.space_dim, "inequalities"));
  }
  if (!pc.v && !pc.h) {
    throw SchemaError("cone document needs \"generators\" or \"inequalities\"");
  }
  return pc;
}

ParsedPair parse_pair_json(const json& j) {
  if (!j.is_object() || !j.contains("K") || !j.contains("L")) {
    throw SchemaError("pair document needs cone objects under \"K\" and \"L\"");
  }
  auto with_dim = [&](json cone) {
    if (cone.is_object() && !cone.contains("space_dim") && j.contains("space_dim")) {
      cone["space_dim"] = j["space_dim"];
    }
    return parse_cone_json(cone);
  };
  ParsedPair pp{with_dim(j["K"]), with_dim(j["L"])};
  if (pp.inner.space_dim != pp.outer.space_dim) {
    throw SchemaError("pair document: K and L disagree on space_dim");
  }
  return pp;
}

Vec parse_vector_json(const json& j, int space_dim) {
  const json& arr = (j.is_object() && j.contains("vector")) ? j["vector"] : j;
  if (!arr.is_array() || static_cast<int>(arr.size()) != space_dim) {
    throw SchemaError("vector document needs space_dim rational-string entries");
  }
  Vec v;
  for (const auto& entry : arr) {
    if (!entry.is_string()) throw SchemaError("vector entries must be rational strings");
    v.push_back(parse_rational(entry.get<std::string>()));
  }
  return v;
}

json vector_to_json(const Vec& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(rational_to_string(r));
  return arr;
}

json vectors_to_json(const std::vector<Vec>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(vector_to_json(v));
  return arr;
}

json cone_v_to_json(const ConeV& v) {
  return json{{"space_dim", v.space_dim}, {"generators", vectors_to_json(v.generators)}};
}

json cone_h_to_json(const ConeH& h) {
  return json{{"space_dim", h.space_dim}, {"inequalities", vectors_to_json(h.inequalities)}};
}

json cone_to_json(const Cone& c) {
  return json{{"space_dim", c.space_dim},
              {"generators", vectors_to_json(c.rays)},
              {"inequalities", vectors_to_json(c.facets)}};
}

json report_to_json(const ProperConeReport& r) {
  return json{{"is_closed", r.is_closed},
              {"is_full", r.is_full},
              {"is_pointed", r.is_pointed},
              {"is_proper", r.proper()}};
}

json face_to_json(const Face& f) {
  return json{{"tight", f.tight}, {"ray_ids", f.ray_ids}, {"dim", f.dim}};
}

json membership_to_json(const MembershipResult& m) {
  json j{{"member", m.member}};
  if (m.coefficients) j["coefficients"] = vector_to_json(*m.coefficients);
  if (m.separating) j["separating"] = vector_to_json(*m.separating);
  if (m.violated_index) j["violated_index"] = *m.violated_index;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace conedet::exact
