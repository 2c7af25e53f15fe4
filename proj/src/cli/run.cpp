// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/cli/run.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conedet/audit.hpp"
#include "conedet/detect/ops.hpp"
#include "conedet/errors.hpp"
#include "conedet/exact/io.hpp"
#include "conedet/exact/pair.hpp"
#include "conedet/quantum/io.hpp"
#include "conedet/quantum/pair.hpp"
#include "conedet/quantum/witness.hpp"

namespace conedet::cli {

namespace {

using nlohmann::json;

/// Everything an invocation may carry; subcommands register the subset they
/// understand and read what they need.
struct Options {
  std::string backend = "exact";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int starts = 0;  // 0 = library default (scales with the dimensions)
  std::string format = "json";
  int directions = 32;
  int samples = 64;
  int max_facets = 12;
  int trials = 0;
  std::string lambda_text;

  std::string cone_file, point_file, pair_file;
  std::string w_file, w1_file, w2_file, rho_file, k_file, matrix_file;
};

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
    return;
  }
  if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
    return;
  }
  os << prefix << ": " << j.dump() << "\n";
}

std::string render(const json& report, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    render_text(report, "", os);
    return os.str();
  }
  return report.dump(2) + "\n";
}

json load_file_checked(const std::string& path, const char* role) {
  try {
    return exact::load_json_file(path);
  } catch (const std::exception& e) {
    throw SchemaError(std::string(role) + " file '" + path + "': " + e.what());
  }
}

exact::ParsedCone load_cone(const std::string& path) {
  const json doc = load_file_checked(path, "cone");
  try {
    return exact::parse_cone_json(doc);
  } catch (const std::exception& e) {
    throw SchemaError("cone file '" + path + "': " + e.what());
  }
}

exact::Cone build_cone(const exact::ParsedCone& pc) {
  if (pc.v) return exact::cone_from_generators(*pc.v);
  return exact::cone_from_inequalities(*pc.h);
}

exact::ExactConePair load_pair(const std::string& path, json* inputs_echo) {
  if (path.empty()) throw InvalidArgument("--pair is required for the exact backend");
  const json doc = load_file_checked(path, "pair");
  exact::ParsedPair pp;
  try {
    pp = exact::parse_pair_json(doc);
  } catch (const std::exception& e) {
    throw SchemaError("pair file '" + path + "': " + e.what());
  }
  exact::Cone inner = build_cone(pp.inner);
  exact::Cone outer = build_cone(pp.outer);
  if (inputs_echo) {
    (*inputs_echo)["pair"] = json{{"space_dim", inner.space_dim},
                                  {"K", exact::cone_to_json(inner)},
                                  {"L", exact::cone_to_json(outer)}};
  }
  return exact::ExactConePair(std::move(inner), std::move(outer));
}

exact::Vec load_vector(const std::string& path, int space_dim, const char* role) {
  const json doc = load_file_checked(path, role);
  try {
    return exact::parse_vector_json(doc, space_dim);
  } catch (const std::exception& e) {
    throw SchemaError(std::string(role) + " file '" + path + "': " + e.what());
  }
}

quantum::BipartiteHermitian load_matrix(const std::string& path, const char* role) {
  const json doc = load_file_checked(path, role);
  try {
    return quantum::parse_bipartite_json(doc);
  } catch (const std::exception& e) {
    throw SchemaError(std::string(role) + " file '" + path + "': " + e.what());
  }
}

quantum::BipartiteHermitian load_matrix_like(const std::string& path, const char* role,
                                             const quantum::BipartiteDims& dims) {
  quantum::BipartiteHermitian a = load_matrix(path, role);
  if (a.dims.d1 != dims.d1 || a.dims.d2 != dims.d2) {
    throw SchemaError(std::string(role) + " file '" + path +
                      "': bipartite dimensions disagree with the first operand");
  }
  return a;
}

quantum::SeesawOptions seesaw_options(const Options& opt) {
  quantum::SeesawOptions so;
  so.starts = opt.starts;
  so.seed = opt.seed;
  return so;
}

quantum::WitnessPairOracle quantum_oracle(const Options& opt, quantum::BipartiteDims dims) {
  return quantum::WitnessPairOracle(dims, seesaw_options(opt), opt.tol);
}

void stamp(json& report, const Options& opt) {
  report["backend"] = opt.backend;
  report["tolerance"] = opt.tol;
  report["seed"] = opt.seed;
}

/// Quantum reports name their backend outright and echo the effective
/// multistart count (the 0 sentinel scales with the dimensions).
void stamp_quantum(json& report, const Options& opt, quantum::BipartiteDims dims) {
  report["backend"] = "quantum";
  report["tolerance"] = opt.tol;
  report["seed"] = opt.seed;
  quantum::SeesawOptions so = seesaw_options(opt);
  report["starts"] = so.effective_starts(dims);
}

json improvement_json_exact(const std::optional<std::pair<exact::Vec, exact::Rational>>& imp) {
  if (!imp) return nullptr;
  return json{{"direction", exact::vector_to_json(imp->first)},
              {"lambda", exact::rational_to_string(imp->second)}};
}

json matrix_json(const quantum::Matrix& m, quantum::BipartiteDims dims) {
  return quantum::bipartite_to_json(quantum::BipartiteHermitian{dims, m});
}

json zero_set_json(const quantum::ZeroSet& zs) {
  json vecs = json::array();
  for (const auto& pv : zs.vectors) vecs.push_back(quantum::product_vector_to_json(pv));
  return json{{"vectors", std::move(vecs)}, {"values", zs.values}, {"span_rank", zs.span_rank},
              {"count", zs.vectors.size()}};
}

// ---------------------------------------------------------------------------
// Subcommand handlers.  Each returns the report; exit codes other than 0/1
// are signalled through *exit_code.
// ---------------------------------------------------------------------------

json run_cone_check(const Options& opt) {
  const exact::ParsedCone pc = load_cone(opt.cone_file);
  const exact::ProperConeReport rep = pc.v ? exact::proper_report(*pc.v)
                                           : exact::proper_report(*pc.h);
  json report = exact::report_to_json(rep);
  report["inputs"] = json{{"cone", pc.v ? exact::cone_v_to_json(*pc.v)
                                        : exact::cone_h_to_json(*pc.h)}};
  stamp(report, opt);
  return report;
}

json run_cone_dual(const Options& opt) {
  const exact::ParsedCone pc = load_cone(opt.cone_file);
  const exact::Cone c = build_cone(pc);
  json report;
  report["dual"] = exact::cone_to_json(exact::dual_of(c));
  report["inputs"] = json{{"cone", exact::cone_to_json(c)}};
  stamp(report, opt);
  return report;
}

json run_cone_member(const Options& opt) {
  const exact::ParsedCone pc = load_cone(opt.cone_file);
  const exact::Vec x = load_vector(opt.point_file, pc.space_dim, "point");
  const exact::MembershipResult res = pc.v ? exact::member(*pc.v, x) : exact::member(*pc.h, x);
  json report = exact::membership_to_json(res);
  report["inputs"] = json{{"cone", pc.v ? exact::cone_v_to_json(*pc.v)
                                        : exact::cone_h_to_json(*pc.h)},
                          {"point", exact::vector_to_json(x)}};
  stamp(report, opt);
  return report;
}

json run_cone_faces(const Options& opt) {
  const exact::Cone c = build_cone(load_cone(opt.cone_file));
  const auto faces = exact::enumerate_faces(c, opt.max_facets);
  json arr = json::array();
  for (const auto& f : faces) arr.push_back(exact::face_to_json(f));
  json report;
  report["count"] = faces.size();
  report["faces"] = std::move(arr);
  report["inputs"] = json{{"cone", exact::cone_to_json(c)}};
  stamp(report, opt);
  return report;
}

json run_cone_face_of(const Options& opt) {
  const exact::Cone c = build_cone(load_cone(opt.cone_file));
  const exact::Vec x = load_vector(opt.point_file, c.space_dim, "point");
  if (!exact::contains(c, x)) {
    throw InvalidArgument("face-of: the point is not in the cone");
  }
  const exact::Face f = exact::face_of(c, x);
  json report;
  report["face"] = exact::face_to_json(f);
  report["generators"] = exact::vectors_to_json(exact::face_generators(c, f));
  report["relative_interior_point"] = exact::vector_to_json(exact::relint_point(c, f));
  report["complementary_face"] = exact::face_to_json(exact::complementary_face(c, f));
  report["inputs"] = json{{"cone", exact::cone_to_json(c)}, {"point", exact::vector_to_json(x)}};
  stamp(report, opt);
  return report;
}

json run_detect(const Options& opt) {
  json report;
  if (opt.backend == "exact") {
    json inputs;
    const exact::ExactConePair pair = load_pair(opt.pair_file, &inputs);
    const exact::Vec w = load_vector(opt.w_file, pair.space_dim(), "w");
    const exact::Vec rho = load_vector(opt.rho_file, pair.space_dim(), "rho");
    const auto v = detect::detects(pair, w, rho);
    report["detected"] = v.detected;
    report["value"] = exact::rational_to_string(v.value);
    report["domain_ok"] = v.domain_ok;
    inputs["w"] = exact::vector_to_json(w);
    inputs["rho"] = exact::vector_to_json(rho);
    report["inputs"] = std::move(inputs);
    stamp(report, opt);
  } else {
    const auto w = load_matrix(opt.w_file, "w");
    const auto rho = load_matrix_like(opt.rho_file, "rho", w.dims);
    const auto oracle = quantum_oracle(opt, w.dims);
    const auto v = detect::detects(oracle, w.mat, rho.mat);
    report["detected"] = v.detected;
    report["value"] = v.value;
    report["domain_ok"] = v.domain_ok;
    report["inputs"] = json{{"w", quantum::bipartite_to_json(w)},
                            {"rho", quantum::bipartite_to_json(rho)}};
    stamp_quantum(report, opt, w.dims);
  }
  return report;
}

json run_finer(const Options& opt) {
  json report;
  if (opt.backend == "exact") {
    json inputs;
    const exact::ExactConePair pair = load_pair(opt.pair_file, &inputs);
    const exact::Vec w1 = load_vector(opt.w1_file, pair.space_dim(), "w1");
    const exact::Vec w2 = load_vector(opt.w2_file, pair.space_dim(), "w2");
    const auto v = detect::is_finer(pair, w1, w2);
    report["finer"] = v.finer;
    report["vacuous"] = v.vacuous;
    report["lambda"] = v.lambda ? json(exact::rational_to_string(*v.lambda)) : json(nullptr);
    report["k"] = v.k ? exact::vector_to_json(*v.k) : json(nullptr);
    report["counterexample"] =
        v.counterexample ? exact::vector_to_json(*v.counterexample) : json(nullptr);
    report["heuristic"] = v.heuristic;
    inputs["w1"] = exact::vector_to_json(w1);
    inputs["w2"] = exact::vector_to_json(w2);
    report["inputs"] = std::move(inputs);
    stamp(report, opt);
  } else {
    const auto w1 = load_matrix(opt.w1_file, "w1");
    const auto w2 = load_matrix_like(opt.w2_file, "w2", w1.dims);
    const auto oracle = quantum_oracle(opt, w1.dims);
    const auto v = detect::is_finer(oracle, w1.mat, w2.mat);
    report["finer"] = v.finer;
    report["vacuous"] = v.vacuous;
    report["lambda"] = v.lambda ? json(*v.lambda) : json(nullptr);
    report["k"] = v.k ? matrix_json(*v.k, w1.dims) : json(nullptr);
    report["counterexample"] =
        v.counterexample ? matrix_json(*v.counterexample, w1.dims) : json(nullptr);
    report["heuristic"] = v.heuristic;
    report["inputs"] = json{{"w1", quantum::bipartite_to_json(w1)},
                            {"w2", quantum::bipartite_to_json(w2)}};
    stamp_quantum(report, opt, w1.dims);
  }
  return report;
}

json run_lambda_star(const Options& opt) {
  json report;
  if (opt.backend == "exact") {
    json inputs;
    const exact::ExactConePair pair = load_pair(opt.pair_file, &inputs);
    const exact::Vec w1 = load_vector(opt.w1_file, pair.space_dim(), "w1");
    const exact::Vec w2 = load_vector(opt.w2_file, pair.space_dim(), "w2");
    const auto samples = pair.sample_Kstar(opt.samples, opt.seed);
    const exact::Rational lam = detect::lambda_star(pair, w1, w2, samples);
    report["lambda_star"] = exact::rational_to_string(lam);
    report["samples"] = samples.size();
    inputs["w1"] = exact::vector_to_json(w1);
    inputs["w2"] = exact::vector_to_json(w2);
    report["inputs"] = std::move(inputs);
    stamp(report, opt);
  } else {
    const auto w1 = load_matrix(opt.w1_file, "w1");
    const auto w2 = load_matrix_like(opt.w2_file, "w2", w1.dims);
    const auto oracle = quantum_oracle(opt, w1.dims);
    const auto samples = oracle.sample_Kstar(opt.samples, opt.seed);
    report["lambda_star"] = detect::lambda_star(oracle, w1.mat, w2.mat, samples);
    report["samples"] = samples.size();
    report["inputs"] = json{{"w1", quantum::bipartite_to_json(w1)},
                            {"w2", quantum::bipartite_to_json(w2)}};
    stamp_quantum(report, opt, w1.dims);
  }
  return report;
}

json run_zero_set(const Options& opt) {
  json report;
  if (opt.backend == "exact") {
    json inputs;
    const exact::ExactConePair pair = load_pair(opt.pair_file, &inputs);
    const exact::Vec w = load_vector(opt.w_file, pair.space_dim(), "w");
    const auto zs = detect::zero_set(pair, w);
    report["zero_set"] = exact::vectors_to_json(zs);
    report["count"] = zs.size();
    inputs["w"] = exact::vector_to_json(w);
    report["inputs"] = std::move(inputs);
    stamp(report, opt);
  } else {
    const auto w = load_matrix(opt.w_file, "w");
    const auto zs = quantum::witness_zero_set(w.mat, w.dims, seesaw_options(opt), opt.tol);
    report["zero_set"] = zero_set_json(zs);
    report["inputs"] = json{{"w", quantum::bipartite_to_json(w)}};
    stamp_quantum(report, opt, w.dims);
  }
  return report;
}

json run_optimal(const Options& opt, int* exit_code) {
  json report;
  if (opt.backend == "exact") {
    json inputs;
    const exact::ExactConePair pair = load_pair(opt.pair_file, &inputs);
    const exact::Vec w = load_vector(opt.w_file, pair.space_dim(), "w");
    detect::SearchOptions sopt;
    sopt.directions = opt.directions;
    sopt.seed = opt.seed;
    const auto v = detect::is_optimal(pair, w, sopt);
    report["optimal"] = v.optimal;
    report["zero_set"] = exact::vectors_to_json(v.zero_set);
    report["interior_combination"] =
        v.interior_combination
            ? json([&] {
                json arr = json::array();
                for (const auto& c : *v.interior_combination)
                  arr.push_back(exact::rational_to_string(c));
                return arr;
              }())
            : json(nullptr);
    report["improvable"] = v.improvable;
    report["improvement"] = improvement_json_exact(v.improvement);
    report["verdicts_agree"] = v.verdicts_agree;
    inputs["w"] = exact::vector_to_json(w);
    report["inputs"] = std::move(inputs);
    stamp(report, opt);
  } else {
    const auto w = load_matrix(opt.w_file, "w");
    const auto res = quantum::lkch_optimality(w.mat, w.dims, seesaw_options(opt), opt.tol,
                                              opt.directions);
    report["optimal"] = res.optimal;
    report["spanning"] = res.spanning;
    report["zero_set"] = zero_set_json(res.zero_set);
    report["interior_combination"] =
        res.interior_combination ? json(*res.interior_combination) : json(nullptr);
    report["improvable"] = res.improvable;
    report["improvement"] =
        res.improvement ? json{{"direction", matrix_json(res.improvement->first, w.dims)},
                               {"lambda", res.improvement->second}}
                        : json(nullptr);
    report["verdicts_agree"] = res.verdicts_agree;
    report["inputs"] = json{{"w", quantum::bipartite_to_json(w)}};
    stamp_quantum(report, opt, w.dims);
    if (!res.verdicts_agree) *exit_code = 2;  // conflicting heuristic evidence
  }
  return report;
}

json run_improve(const Options& opt) {
  json report;
  if (opt.backend == "exact") {
    json inputs;
    const exact::ExactConePair pair = load_pair(opt.pair_file, &inputs);
    const exact::Vec w = load_vector(opt.w_file, pair.space_dim(), "w");
    const exact::Vec k = load_vector(opt.k_file, pair.space_dim(), "k");
    std::optional<exact::Rational> requested;
    if (!opt.lambda_text.empty()) requested = exact::parse_rational(opt.lambda_text);
    const auto res = detect::improve(pair, w, k, requested);
    report["lambda"] = exact::rational_to_string(res.lambda);
    report["improved"] = exact::vector_to_json(res.improved);
    inputs["w"] = exact::vector_to_json(w);
    inputs["k"] = exact::vector_to_json(k);
    report["inputs"] = std::move(inputs);
    stamp(report, opt);
  } else {
    const auto w = load_matrix(opt.w_file, "w");
    const auto k = load_matrix_like(opt.k_file, "k", w.dims);
    const auto oracle = quantum_oracle(opt, w.dims);
    std::optional<double> requested;
    if (!opt.lambda_text.empty()) {
      try {
        std::size_t used = 0;
        requested = std::stod(opt.lambda_text, &used);
        if (used != opt.lambda_text.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw SchemaError("--lambda: '" + opt.lambda_text + "' is not a number");
      }
    }
    const auto res = detect::improve(oracle, w.mat, k.mat, requested);
    report["lambda"] = res.lambda;
    report["improved"] = matrix_json(res.improved, w.dims);
    report["inputs"] = json{{"w", quantum::bipartite_to_json(w)},
                            {"k", quantum::bipartite_to_json(k)}};
    stamp_quantum(report, opt, w.dims);
  }
  return report;
}

json run_witness_classify(const Options& opt) {
  const auto w = load_matrix(opt.matrix_file, "matrix");
  const auto rep = quantum::classify_witness(w.mat, w.dims, seesaw_options(opt), opt.tol);
  json report;
  report["classification"] = quantum::to_string(rep.classification);
  report["min_eigenvalue"] = rep.min_eigenvalue;
  report["min_product_value"] = rep.min_product_value;
  report["heuristic"] = rep.heuristic;
  report["negative_certificate"] =
      rep.negative_certificate ? quantum::product_vector_to_json(*rep.negative_certificate)
                               : json(nullptr);
  report["inputs"] = json{{"matrix", quantum::bipartite_to_json(w)}};
  stamp_quantum(report, opt, w.dims);
  return report;
}

json run_ppt(const Options& opt) {
  const auto a = load_matrix(opt.matrix_file, "matrix");
  json report;
  double min_eig = 0.0;
  const bool psd = quantum::is_psd(a.mat, opt.tol, &min_eig);
  report["psd"] = psd;
  report["min_eigenvalue"] = min_eig;
  const quantum::Matrix g = quantum::partial_transpose(a.mat, a.dims);
  report["min_gamma_eigenvalue"] = quantum::min_eigenvalue(g);
  report["ppt"] = psd ? json(quantum::is_ppt(a.mat, a.dims, opt.tol)) : json(nullptr);
  const auto wd = quantum::wd_pairing_check(a.mat, a.dims, opt.samples, opt.seed, opt.tol);
  report["wd_pairing"] = json{{"pairing_ok", wd.pairing_ok},
                              {"direct_ok", wd.direct_ok},
                              {"consistent", wd.consistent}};
  json separable = nullptr;
  if (psd) {
    try {
      separable = quantum::separability_small(a.mat, a.dims, opt.tol);
    } catch (const Undecidable&) {
      separable = nullptr;  // beyond the exactly decidable sizes
    }
  }
  report["separable"] = separable;
  report["samples"] = opt.samples;
  report["inputs"] = json{{"matrix", quantum::bipartite_to_json(a)}};
  report["backend"] = "quantum";
  report["tolerance"] = opt.tol;
  report["seed"] = opt.seed;
  return report;
}

json run_nd_check(const Options& opt) {
  const auto w = load_matrix(opt.matrix_file, "matrix");
  const auto rep = quantum::nd_optimality_necessary(w.mat, w.dims, seesaw_options(opt), opt.tol);
  json report;
  report["applicable"] = rep.applicable;
  report["explanation"] = rep.explanation;
  report["w_spanning"] = rep.w_spanning ? json(*rep.w_spanning) : json(nullptr);
  report["w_gamma_spanning"] = rep.w_gamma_spanning ? json(*rep.w_gamma_spanning) : json(nullptr);
  report["passes"] = rep.passes;
  report["inputs"] = json{{"matrix", quantum::bipartite_to_json(w)}};
  stamp_quantum(report, opt, w.dims);
  return report;
}

json run_theorem_audit(const Options& opt) {
  if (opt.trials < 1) throw InvalidArgument("theorem-audit: --trials must be at least 1");
  const AuditReport rep = theorem_audit(opt.trials, opt.seed);
  json report;
  report["trials"] = rep.trials;
  report["agreements"] = rep.agreements;
  report["counterexamples"] = rep.counterexamples;
  stamp(report, opt);
  return report;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"detection and optimality for nested pairs of proper cones"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub, bool with_backend) {
    sub->add_option("--tol", opt.tol, "relative tolerance for numerical verdicts");
    sub->add_option("--seed", opt.seed, "seed for every random draw");
    sub->add_option("--starts", opt.starts, "multistart count (0 = scale with dimensions)");
    sub->add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_backend) {
      sub->add_option("--backend", opt.backend, "exact or quantum")
          ->check(CLI::IsMember({"exact", "quantum"}));
    }
  };

  auto* cone_check = app.add_subcommand("cone-check", "properness report for a cone file");
  cone_check->add_option("--cone", opt.cone_file, "cone JSON file")->required();
  add_common(cone_check, false);

  auto* cone_dual = app.add_subcommand("cone-dual", "dual cone in canonical form");
  cone_dual->add_option("--cone", opt.cone_file, "cone JSON file")->required();
  add_common(cone_dual, false);

  auto* cone_member = app.add_subcommand("cone-member", "membership with certificate");
  cone_member->add_option("--cone", opt.cone_file, "cone JSON file")->required();
  cone_member->add_option("--point", opt.point_file, "vector JSON file")->required();
  add_common(cone_member, false);

  auto* cone_faces = app.add_subcommand("cone-faces", "enumerate every face");
  cone_faces->add_option("--cone", opt.cone_file, "cone JSON file")->required();
  cone_faces->add_option("--max-facets", opt.max_facets, "refuse cones with more facets");
  add_common(cone_faces, false);

  auto* cone_face_of = app.add_subcommand("cone-face-of", "minimal face containing a point");
  cone_face_of->add_option("--cone", opt.cone_file, "cone JSON file")->required();
  cone_face_of->add_option("--point", opt.point_file, "vector JSON file")->required();
  add_common(cone_face_of, false);

  auto* detect_cmd = app.add_subcommand("detect", "does the functional catch the element?");
  detect_cmd->add_option("--pair", opt.pair_file, "nested pair JSON file (exact backend)");
  detect_cmd->add_option("--w", opt.w_file, "element file")->required();
  detect_cmd->add_option("--rho", opt.rho_file, "functional file")->required();
  add_common(detect_cmd, true);

  auto* finer = app.add_subcommand("finer", "does w1 detect everything w2 detects?");
  finer->add_option("--pair", opt.pair_file, "nested pair JSON file (exact backend)");
  finer->add_option("--w1", opt.w1_file, "first element file")->required();
  finer->add_option("--w2", opt.w2_file, "second element file")->required();
  add_common(finer, true);

  auto* lambda_star_cmd = app.add_subcommand("lambda-star", "least detection ratio over samples");
  lambda_star_cmd->add_option("--pair", opt.pair_file, "nested pair JSON file (exact backend)");
  lambda_star_cmd->add_option("--w1", opt.w1_file, "first element file")->required();
  lambda_star_cmd->add_option("--w2", opt.w2_file, "second element file")->required();
  lambda_star_cmd->add_option("--samples", opt.samples, "functional sample count");
  add_common(lambda_star_cmd, true);

  auto* zero_set_cmd = app.add_subcommand("zero-set", "functionals annihilating an element");
  zero_set_cmd->add_option("--pair", opt.pair_file, "nested pair JSON file (exact backend)");
  zero_set_cmd->add_option("--w", opt.w_file, "element file")->required();
  add_common(zero_set_cmd, true);

  auto* optimal = app.add_subcommand("optimal", "two-route optimality verdict");
  optimal->add_option("--pair", opt.pair_file, "nested pair JSON file (exact backend)");
  optimal->add_option("--w", opt.w_file, "element file")->required();
  optimal->add_option("--directions", opt.directions, "subtraction search breadth");
  add_common(optimal, true);

  auto* improve = app.add_subcommand("improve", "peel an inner-cone element off w");
  improve->add_option("--pair", opt.pair_file, "nested pair JSON file (exact backend)");
  improve->add_option("--w", opt.w_file, "element file")->required();
  improve->add_option("--k", opt.k_file, "inner-cone direction file")->required();
  improve->add_option("--lambda", opt.lambda_text, "fixed scale instead of the maximum");
  add_common(improve, true);

  auto* witness_classify =
      app.add_subcommand("witness-classify", "positive / witness / negative-on-a-product");
  witness_classify->add_option("--matrix", opt.matrix_file, "bipartite operator file")->required();
  add_common(witness_classify, false);

  auto* ppt = app.add_subcommand("ppt", "positivity of the partial transpose, with cross-checks");
  ppt->add_option("--matrix", opt.matrix_file, "bipartite operator file")->required();
  ppt->add_option("--samples", opt.samples, "pure-state sample count for the pairing route");
  add_common(ppt, false);

  auto* nd_check = app.add_subcommand("nd-check", "necessary condition for two-sided optimality");
  nd_check->add_option("--matrix", opt.matrix_file, "bipartite operator file")->required();
  add_common(nd_check, false);

  auto* audit = app.add_subcommand("theorem-audit", "randomized exact cross-check of the claims");
  audit->add_option("--trials", opt.trials, "number of random instances")->required();
  add_common(audit, false);

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.output = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.output = json{{"error", e.what()}}.dump(2) + "\n";
    result.exit_code = 1;
    return result;
  }

  try {
    json report;
    if (cone_check->parsed()) {
      report = run_cone_check(opt);
    } else if (cone_dual->parsed()) {
      report = run_cone_dual(opt);
    } else if (cone_member->parsed()) {
      report = run_cone_member(opt);
    } else if (cone_faces->parsed()) {
      report = run_cone_faces(opt);
    } else if (cone_face_of->parsed()) {
      report = run_cone_face_of(opt);
    } else if (detect_cmd->parsed()) {
      report = run_detect(opt);
    } else if (finer->parsed()) {
      report = run_finer(opt);
    } else if (lambda_star_cmd->parsed()) {
      report = run_lambda_star(opt);
    } else if (zero_set_cmd->parsed()) {
      report = run_zero_set(opt);
    } else if (optimal->parsed()) {
      report = run_optimal(opt, &result.exit_code);
    } else if (improve->parsed()) {
      report = run_improve(opt);
    } else if (witness_classify->parsed()) {
      report = run_witness_classify(opt);
    } else if (ppt->parsed()) {
      report = run_ppt(opt);
    } else if (nd_check->parsed()) {
      report = run_nd_check(opt);
    } else if (audit->parsed()) {
      report = run_theorem_audit(opt);
    } else {
      throw InvalidArgument("no subcommand given");
    }
    result.output = render(report, opt.format);
  } catch (const std::exception& e) {
    result.output = json{{"error", e.what()}}.dump(2) + "\n";
    result.exit_code = 1;
  }
  return result;
}

}  // namespace conedet::cli
