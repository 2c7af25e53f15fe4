# conedet: detection and optimality for nested pairs of proper cones
# Copyright 2026 The conedet authors
# SPDX-License-Identifier: Apache-2.0
"""Python surface of the conedet library.

Quantum operations take numpy complex matrices directly; the exact rational
backend (cones, faces, finer-than, audits) is reached through :func:`invoke`,
which runs one CLI-style invocation in-process and parses its JSON report.
"""

from __future__ import annotations

import json
from typing import Any

from ._conedet import (  # noqa: F401
    classify_witness,
    is_ppt,
    is_psd,
    lkch_optimality,
    max_entangled_projector,
    min_eigenvalue,
    nd_optimality_necessary,
    operator_norm,
    partial_transpose,
    run,
    seesaw_min_product,
    separability_small,
    swap_operator,
    theorem_audit,
    wd_pairing_check,
    witness_zero_set,
)

__all__ = [
    "classify_witness",
    "invoke",
    "is_ppt",
    "is_psd",
    "lkch_optimality",
    "max_entangled_projector",
    "min_eigenvalue",
    "nd_optimality_necessary",
    "operator_norm",
    "partial_transpose",
    "run",
    "seesaw_min_product",
    "separability_small",
    "swap_operator",
    "theorem_audit",
    "wd_pairing_check",
    "witness_zero_set",
]


def invoke(*args: str) -> dict[str, Any]:
    """Run one invocation (e.g. ``invoke("cone-check", "--cone", path)``) and
    return the parsed JSON report with the exit code under ``exit_code``.
    Raises ``RuntimeError`` on invalid input (exit code 1); exit code 2
    (inconclusive heuristic evidence) still returns the report."""
    code, output = run(list(args))
    report = json.loads(output)
    if code == 1:
        raise RuntimeError(f"invocation failed: {report.get('error', 'exit code 1')}")
    report["exit_code"] = code
    return report
