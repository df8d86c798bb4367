"""End-to-end evaluation of decision vectors against a problem instance.

Pipeline order is fixed: meta-variables, spherical map, p-norm scaling,
normalized angle, auxiliary distance g, radial profile, composition, optional
dissimilarity, constraint report.  The angle and the constraints always use
the pre-dissimilarity position point.  Single evaluation runs the batch
kernel on one row, so the two paths are bit-identical by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constraints import ConstraintReport, constraint_table
from .distance import (compose, deceptive_g, normalized_angle, radial_profile,
                       robust_g)
from .position import dissimilarize, meta_variables, p_norm, spherical_map
from .spec import ProblemSpec


@dataclass(frozen=True)
class Evaluation:
    """Everything the pipeline knows about one decision vector.

    objectives          final objective values, dissimilarity included
    position_point      pre-dissimilarity point on the unit p-norm surface
    distance_value      scalar F_d composed with the position point
    distance_phi        normalized angle against the spec's distance reference
    phi_per_constraint  normalized angle against each constraint's reference
    report              violation magnitudes and the feasibility verdict
    """

    objectives: tuple[float, ...]
    position_point: tuple[float, ...]
    distance_value: float
    distance_phi: float
    phi_per_constraint: tuple[float, ...]
    report: ConstraintReport


class BatchError(ValueError):
    """One or more batch rows were rejected.

    row_errors holds (index, message) pairs in input order with 0-based
    indices; results holds an Evaluation per good row and None per bad row,
    because the contract is to keep evaluating past the first failure.
    """

    def __init__(self, row_errors, results):
        self.row_errors = list(row_errors)
        self.results = list(results)
        index, message = self.row_errors[0]
        extra = len(self.row_errors) - 1
        tail = f" (and {extra} more rejected rows)" if extra else ""
        super().__init__(f"row {index}: {message}{tail}")


def _row_error(x: np.ndarray, spec: ProblemSpec) -> str | None:
    n = spec.total_dim
    if x.ndim != 1:
        return f"expected a flat decision vector, got shape {x.shape}"
    if x.shape[0] != n:
        return f"decision vector has {x.shape[0]} coordinates, expected {n}"
    r = spec.position_dim
    bad = ~np.isfinite(x)
    bad[:r] |= (x[:r] < -1.0) | (x[:r] > 1.0)
    bad[r:] |= (x[r:] < 0.0) | (x[r:] > 1.0)
    if bad.any():
        i = int(np.argmax(bad))
        lo, hi = (-1.0, 1.0) if i < r else (0.0, 1.0)
        return f"coordinate {i + 1} is {float(x[i]):g}, outside [{lo:g}, {hi:g}]"
    return None


def _pipeline(x: np.ndarray, spec: ProblemSpec):
    """Evaluate a validated (B, N) matrix; every reduction is row-local."""
    r = spec.position_dim
    x_p = x[:, :r]
    x_d = x[:, r:]
    y = meta_variables(x_p, spec.meta_q, spec.meta_t)
    t = spherical_map(y)
    f_p = t / p_norm(t, spec.norm_p)[..., None]
    phi = normalized_angle(f_p, spec.distance_reference)
    kind = spec.distance_kind
    g_kind = kind if kind in ("deceptive", "robust") else spec.mixed_landscape
    if g_kind == "deceptive":
        g = deceptive_g(x_d, phi, spec.valleys_k)
    else:
        g = robust_g(x_d)
    f_d = radial_profile(g, phi, kind, spec.composition)
    f = compose(f_p, f_d, spec.composition)
    if spec.dissimilar:
        f = dissimilarize(f)
    phis, viol = constraint_table(f_p, spec.constraints)
    nearest = np.argmax(f_p, axis=-1) + 1
    return f, f_p, f_d, phi, phis, viol, nearest


def _pack(row: int, f, f_p, f_d, phi, phis, viol, nearest) -> Evaluation:
    violations = tuple(float(v) for v in viol[row])
    return Evaluation(
        objectives=tuple(float(v) for v in f[row]),
        position_point=tuple(float(v) for v in f_p[row]),
        distance_value=float(f_d[row]),
        distance_phi=float(phi[row]),
        phi_per_constraint=tuple(float(v) for v in phis[row]),
        report=ConstraintReport(
            violations=violations,
            feasible=all(v == 0.0 for v in violations),
            nearest_axis_of_point=int(nearest[row]),
        ),
    )


def evaluate(x, spec: ProblemSpec) -> Evaluation:
    """Evaluate one decision vector.

    Raises ValueError on a dimension mismatch or any coordinate outside its
    box ([-1, 1] for the position part, [0, 1] for the distance part); the
    offending coordinate index is named.  No clamping, no repair.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    problem = _row_error(x, spec)
    if problem is not None:
        raise ValueError(problem)
    return _pack(0, *_pipeline(x[None, :], spec))


def evaluate_batch(rows, spec: ProblemSpec) -> list[Evaluation]:
    """Evaluate many decision vectors, preserving input order.

    Rows that fail validation do not stop the batch: every valid row is still
    evaluated, and a BatchError carrying per-row diagnostics plus the partial
    results is raised at the end.  An empty batch returns an empty list.
    """
    arrays = [np.atleast_1d(np.asarray(row, dtype=float)) for row in rows]
    if not arrays:
        return []
    problems = [(i, _row_error(x, spec)) for i, x in enumerate(arrays)]
    good = [i for i, msg in problems if msg is None]
    results: list[Evaluation | None] = [None] * len(arrays)
    if good:
        parts = _pipeline(np.stack([arrays[i] for i in good]), spec)
        for row, i in enumerate(good):
            results[i] = _pack(row, *parts)
    bad = [(i, msg) for i, msg in problems if msg is not None]
    if bad:
        raise BatchError(bad, results)
    return results  # type: ignore[return-value]