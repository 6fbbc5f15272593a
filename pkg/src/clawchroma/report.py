"""Trichotomy classification of a single graph, plus its JSON form.

Every in-class graph falls into one of three branches by its max degree
relative to twice the clique number:

  wheel_case   delta == 2*omega - 1: forced (delta, omega) == (5, 3),
               chi == omega + 1, and a 6-vertex wheel occurs induced
  middle_case  delta == 2*omega - 2: chi <= omega + 1
  omega_case   delta <= 2*omega - 3: chi == omega

classify_trichotomy computes the verdict and checks the branch's guaranteed
facts, aborting with ClaimViolationError (counterexample graph attached)
when one fails; silence is never an option here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .bitops import iter_bits, mask_of
from .cliques import omega as omega_of
from .colorer import color_in_class
from .coloring import Coloring, exact_chromatic
from .errors import ClaimViolationError, ScaleExceededError
from .graph import Graph, degree_profile
from .recognition import ForbiddenWitness, is_in_class

WHEEL_CASE = "wheel_case"
MIDDLE_CASE = "middle_case"
OMEGA_CASE = "omega_case"
OUT_OF_CLASS = "out_of_class"


@dataclass(frozen=True)
class ClassReport:
    in_class: bool
    omega: int | None
    delta: int | None
    chi: int | None
    branch: str
    w6_witness: tuple[int, ...] | None
    coloring: Coloring | None
    witnesses: tuple[ForbiddenWitness, ...]


def find_induced_wheel6(g: Graph) -> tuple[int, ...] | None:
    """Least induced 6-vertex wheel (hub plus 5-cycle), as a sorted 6-tuple.

    A hub needs degree >= 5 and five neighbors inducing a 5-cycle; the rest
    of the wheel's edge pattern then holds automatically.
    """
    adj = g.adj
    for hub in range(g.n):
        nb = tuple(iter_bits(adj[hub]))
        if len(nb) < 5:
            continue
        for rim in combinations(nb, 5):
            rim_mask = mask_of(rim)
            if all((adj[v] & rim_mask).bit_count() == 2 for v in rim):
                return tuple(sorted((hub,) + rim))
    return None


def classify_trichotomy(g: Graph) -> ClassReport:
    """Full per-graph verdict: membership, invariants, branch, coloring."""
    if g.n > 64:
        raise ScaleExceededError("trichotomy report capped at 64 vertices")
    verdict = is_in_class(g)
    if not verdict:
        return ClassReport(
            in_class=False,
            omega=None,
            delta=None,
            chi=None,
            branch=OUT_OF_CLASS,
            w6_witness=None,
            coloring=None,
            witnesses=(verdict.witness,),
        )
    w = omega_of(g)
    delta = degree_profile(g)[1]
    chi, _ = exact_chromatic(g)
    w6 = None
    if g.n == 0:
        branch = OMEGA_CASE
    elif delta == 2 * w - 1:
        branch = WHEEL_CASE
        if (delta, w) != (5, 3):
            raise ClaimViolationError(
                "degree_bound", g, f"delta == 2*omega - 1 with (delta, omega) = ({delta}, {w})"
            )
        if chi != w + 1:
            raise ClaimViolationError(
                "wheel_branch", g, f"wheel case with chi = {chi}, omega = {w}"
            )
        w6 = find_induced_wheel6(g)
        if w6 is None:
            raise ClaimViolationError(
                "wheel_branch", g, "wheel case without an induced 6-vertex wheel"
            )
    elif delta == 2 * w - 2:
        branch = MIDDLE_CASE
        if chi > w + 1:
            raise ClaimViolationError(
                "chi_within_one", g, f"chi = {chi} exceeds omega + 1 = {w + 1}"
            )
    elif delta <= 2 * w - 3:
        branch = OMEGA_CASE
        if chi != w:
            raise ClaimViolationError(
                "chi_equals_omega", g, f"bounded-degree case with chi = {chi}, omega = {w}"
            )
    else:
        raise ClaimViolationError(
            "degree_bound", g, f"delta = {delta} exceeds 2*omega - 1 = {2 * w - 1}"
        )
    coloring, _ = color_in_class(g, strict=False)
    return ClassReport(
        in_class=True,
        omega=w,
        delta=delta,
        chi=chi,
        branch=branch,
        w6_witness=w6,
        coloring=coloring,
        witnesses=(),
    )


def emit_report(report: ClassReport) -> str:
    """Stable JSON rendering; identical reports give identical bytes."""
    coloring = None
    if report.coloring is not None:
        coloring = {
            "assignment": list(report.coloring.assignment),
            "colors_used": report.coloring.colors_used,
        }
    payload = {
        "in_class": report.in_class,
        "omega": report.omega,
        "delta": report.delta,
        "chi": report.chi,
        "branch": report.branch,
        "w6_witness": list(report.w6_witness) if report.w6_witness else None,
        "coloring": coloring,
        "witnesses": [
            {"kind": w.kind, "vertices": list(w.vertices)} for w in report.witnesses
        ],
    }
    return json.dumps(payload, separators=(", ", ": ")) + "\n"
