// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conedet/audit.hpp"
#include "conedet/cli/run.hpp"
#include "conedet/quantum/hermitian.hpp"
#include "conedet/quantum/seesaw.hpp"
#include "conedet/quantum/witness.hpp"

namespace py = pybind11;

namespace {

using conedet::quantum::BipartiteDims;
using conedet::quantum::Matrix;

BipartiteDims dims_of(int d1, int d2) { return BipartiteDims{d1, d2}; }

/// Validates Hermiticity/shape the same way file loading does, and hands the
/// symmetrized matrix to the library.
Matrix checked(const Matrix& w, int d1, int d2) {
  return conedet::quantum::make_bipartite_hermitian(dims_of(d1, d2), w).mat;
}

conedet::quantum::SeesawOptions seesaw_opts(int starts, std::uint64_t seed) {
  conedet::quantum::SeesawOptions o;
  o.starts = starts;
  o.seed = seed;
  return o;
}

py::dict zero_set_dict(const conedet::quantum::ZeroSet& zs) {
  py::list phis, psis;
  for (const auto& pv : zs.vectors) {
    phis.append(pv.phi);
    psis.append(pv.psi);
  }
  py::dict d;
  d["values"] = zs.values;
  d["span_rank"] = zs.span_rank;
  d["phis"] = phis;
  d["psis"] = psis;
  return d;
}

}  // namespace

PYBIND11_MODULE(_conedet, m) {
  m.doc() = "detection and optimality for nested pairs of proper cones";

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const auto r = conedet::cli::run(args);
        return py::make_tuple(r.exit_code, r.output);
      },
      py::arg("args"),
      "Run one command-line invocation; returns (exit_code, report_text).");

  m.def("swap_operator", &conedet::quantum::swap_operator, py::arg("d"),
        "Swap operator on C^d (x) C^d.");
  m.def("max_entangled_projector", &conedet::quantum::max_entangled_projector, py::arg("d"),
        "Projector onto the maximally entangled vector of C^d (x) C^d.");
  m.def(
      "partial_transpose",
      [](const Matrix& a, int d1, int d2) {
        return conedet::quantum::partial_transpose(checked(a, d1, d2), dims_of(d1, d2));
      },
      py::arg("a"), py::arg("d1"), py::arg("d2"), "Transpose of the second tensor factor.");
  m.def(
      "min_eigenvalue", [](const Matrix& a) { return conedet::quantum::min_eigenvalue(a); },
      py::arg("a"));
  m.def(
      "operator_norm", [](const Matrix& a) { return conedet::quantum::operator_norm(a); },
      py::arg("a"));
  m.def(
      "is_psd",
      [](const Matrix& a, double tol_rel) { return conedet::quantum::is_psd(a, tol_rel); },
      py::arg("a"), py::arg("tol_rel") = 1e-9);
  m.def(
      "is_ppt",
      [](const Matrix& a, int d1, int d2, double tol_rel) {
        return conedet::quantum::is_ppt(checked(a, d1, d2), dims_of(d1, d2), tol_rel);
      },
      py::arg("a"), py::arg("d1"), py::arg("d2"), py::arg("tol_rel") = 1e-9,
      "Positivity of the partial transpose (input must be PSD).");

  m.def(
      "seesaw_min_product",
      [](const Matrix& w, int d1, int d2, int starts, std::uint64_t seed) {
        const auto r = conedet::quantum::seesaw_min_product(checked(w, d1, d2), dims_of(d1, d2),
                                                            seesaw_opts(starts, seed));
        return py::make_tuple(r.value, r.argmin.phi, r.argmin.psi);
      },
      py::arg("w"), py::arg("d1"), py::arg("d2"), py::arg("starts") = 0, py::arg("seed") = 0,
      "Minimal product expectation by multistart alternating minimization; "
      "returns (value, phi, psi).");

  m.def(
      "classify_witness",
      [](const Matrix& w, int d1, int d2, int starts, std::uint64_t seed, double tol_rel) {
        const auto r = conedet::quantum::classify_witness(checked(w, d1, d2), dims_of(d1, d2),
                                                          seesaw_opts(starts, seed), tol_rel);
        py::dict d;
        d["classification"] = conedet::quantum::to_string(r.classification);
        d["min_eigenvalue"] = r.min_eigenvalue;
        d["min_product_value"] = r.min_product_value;
        d["heuristic"] = r.heuristic;
        if (r.negative_certificate) {
          d["certificate_phi"] = r.negative_certificate->phi;
          d["certificate_psi"] = r.negative_certificate->psi;
        } else {
          d["certificate_phi"] = py::none();
          d["certificate_psi"] = py::none();
        }
        return d;
      },
      py::arg("w"), py::arg("d1"), py::arg("d2"), py::arg("starts") = 0, py::arg("seed") = 0,
      py::arg("tol_rel") = 1e-9, "positive / witness / not_in_w1, with certificates.");

  m.def(
      "witness_zero_set",
      [](const Matrix& w, int d1, int d2, int starts, std::uint64_t seed, double tol_rel) {
        return zero_set_dict(conedet::quantum::witness_zero_set(
            checked(w, d1, d2), dims_of(d1, d2), seesaw_opts(starts, seed), tol_rel));
      },
      py::arg("w"), py::arg("d1"), py::arg("d2"), py::arg("starts") = 0, py::arg("seed") = 0,
      py::arg("tol_rel") = 1e-9, "Product vectors annihilating w, with their span rank.");

  m.def(
      "lkch_optimality",
      [](const Matrix& w, int d1, int d2, int starts, std::uint64_t seed, double tol_rel,
         int directions) {
        const auto r = conedet::quantum::lkch_optimality(
            checked(w, d1, d2), dims_of(d1, d2), seesaw_opts(starts, seed), tol_rel, directions);
        py::dict d;
        d["optimal"] = r.optimal;
        d["spanning"] = r.spanning;
        d["improvable"] = r.improvable;
        d["verdicts_agree"] = r.verdicts_agree;
        d["zero_set"] = zero_set_dict(r.zero_set);
        if (r.improvement) {
          d["improvement_direction"] = r.improvement->first;
          d["improvement_lambda"] = r.improvement->second;
        } else {
          d["improvement_direction"] = py::none();
          d["improvement_lambda"] = py::none();
        }
        return d;
      },
      py::arg("w"), py::arg("d1"), py::arg("d2"), py::arg("starts") = 0, py::arg("seed") = 0,
      py::arg("tol_rel") = 1e-9, py::arg("directions") = 32,
      "Two-route optimality of an entanglement witness.");

  m.def(
      "nd_optimality_necessary",
      [](const Matrix& w, int d1, int d2, int starts, std::uint64_t seed, double tol_rel) {
        const auto r = conedet::quantum::nd_optimality_necessary(
            checked(w, d1, d2), dims_of(d1, d2), seesaw_opts(starts, seed), tol_rel);
        py::dict d;
        d["applicable"] = r.applicable;
        d["explanation"] = r.explanation;
        d["w_spanning"] = r.w_spanning ? py::cast(*r.w_spanning) : py::none();
        d["w_gamma_spanning"] = r.w_gamma_spanning ? py::cast(*r.w_gamma_spanning) : py::none();
        d["passes"] = r.passes;
        return d;
      },
      py::arg("w"), py::arg("d1"), py::arg("d2"), py::arg("starts") = 0, py::arg("seed") = 0,
      py::arg("tol_rel") = 1e-9,
      "Necessary condition for optimality against the PPT-detecting pair.");

  m.def(
      "separability_small",
      [](const Matrix& rho, int d1, int d2, double tol_rel) {
        return conedet::quantum::separability_small(checked(rho, d1, d2), dims_of(d1, d2),
                                                    tol_rel);
      },
      py::arg("rho"), py::arg("d1"), py::arg("d2"), py::arg("tol_rel") = 1e-9,
      "Exact separability for 2x2 and 2x3 systems.");

  m.def(
      "wd_pairing_check",
      [](const Matrix& rho, int d1, int d2, int samples, std::uint64_t seed, double tol_rel) {
        const auto r = conedet::quantum::wd_pairing_check(checked(rho, d1, d2), dims_of(d1, d2),
                                                          samples, seed, tol_rel);
        py::dict d;
        d["pairing_ok"] = r.pairing_ok;
        d["direct_ok"] = r.direct_ok;
        d["consistent"] = r.consistent;
        return d;
      },
      py::arg("rho"), py::arg("d1"), py::arg("d2"), py::arg("samples") = 128,
      py::arg("seed") = 0, py::arg("tol_rel") = 1e-9,
      "Sampled-pairing versus direct-eigenvalue consistency for rho and its partial transpose.");

  m.def(
      "theorem_audit",
      [](int trials, std::uint64_t seed) {
        const auto r = conedet::theorem_audit(trials, seed);
        py::dict d;
        d["trials"] = r.trials;
        d["agreements"] = r.agreements;
        d["counterexamples"] = r.counterexamples.dump();
        return d;
      },
      py::arg("trials"), py::arg("seed") = 0,
      "Randomized exact cross-check of the detection and optimality claims.");
}
