"""Position mapping: overlapping meta-variables, the spherical map, and p-norm fronts.

The position part x_p lives in [-1, 1]^R with R = (M-1)*q + t.  Overlapping
windows of width q + t are averaged into meta-variables y in [0, 1]^(M-1),
the spherical map sends y onto the unit Euclidean sphere restricted to the
first orthant, and rescaling by the p-norm places the point on the surface
where the p-norm equals one.  Every function accepts stacked inputs: the
mapping applies along the last axis and broadcasts over leading axes.
"""

from __future__ import annotations

import numpy as np


def meta_variables(x_p: np.ndarray, q: int, t: int) -> np.ndarray:
    """Collapse the position part into meta-variables.

    Window i (1-based) covers coordinates (i-1)*q+1 .. i*q+t, so adjacent
    windows share exactly t coordinates.  Each meta-variable is the absolute
    window sum divided by the window width q + t, hence lies in [0, 1].
    With q = 1, t = 0 this reduces to y_i = |x_i|.

    Args:
        x_p: array shaped (..., R) with R = (M-1)*q + t.
        q: window stride, >= 1.
        t: overlap between adjacent windows, >= 0.

    Returns:
        Array shaped (..., M-1).
    """
    if q < 1:
        raise ValueError(f"window stride q must be >= 1, got {q}")
    if t < 0:
        raise ValueError(f"window overlap t must be >= 0, got {t}")
    x = np.asarray(x_p, dtype=float)
    r = x.shape[-1]
    width = q + t
    groups, rem = divmod(r - t, q)
    if r <= t or rem != 0 or groups < 1:
        raise ValueError(
            f"position length {r} does not split into overlapping windows "
            f"with q={q}, t={t}")
    padded = np.concatenate(
        [np.zeros(x.shape[:-1] + (1,), dtype=float), np.cumsum(x, axis=-1)], axis=-1)
    starts = np.arange(groups) * q
    sums = padded[..., starts + width] - padded[..., starts]
    return np.abs(sums) / width


def spherical_map(y: np.ndarray) -> np.ndarray:
    """Map meta-variables onto the first-orthant unit Euclidean sphere.

    Component 1 is the product of all cosines of y_i * pi/2; component j > 1
    replaces the trailing cosine chain with the sine of the deepest remaining
    angle.  The Euclidean norm of the result is exactly one, and y = 0 maps
    to the first canonical axis.

    Args:
        y: array shaped (..., M-1) with entries in [0, 1].

    Returns:
        Array shaped (..., M) of nonnegative components.
    """
    y = np.asarray(y, dtype=float)
    if y.shape[-1] < 1:
        raise ValueError("need at least one meta-variable")
    ang = y * (np.pi / 2.0)
    c = np.cos(ang)
    s = np.sin(ang)
    m1 = y.shape[-1]
    head = np.concatenate(
        [np.ones(y.shape[:-1] + (1,), dtype=float), np.cumprod(c, axis=-1)], axis=-1)
    out = np.empty(y.shape[:-1] + (m1 + 1,), dtype=float)
    out[..., 0] = head[..., m1]
    out[..., 1:] = head[..., m1 - 1::-1] * s[..., ::-1]
    return out


def p_norm(v: np.ndarray, p: float) -> np.ndarray:
    """p-norm along the last axis, rescaled by the largest magnitude.

    Dividing by max|v_i| before exponentiation keeps the sum representable
    for large p and for quasi-norms with 0 < p < 1.  The all-zero vector has
    norm zero.
    """
    if not p > 0:
        raise ValueError(f"norm exponent must be positive, got {p}")
    v = np.asarray(v, dtype=float)
    if v.shape[-1] == 0:
        raise ValueError("p-norm of an empty vector")
    a = np.abs(v)
    peak = a.max(axis=-1)
    safe = np.where(peak == 0.0, 1.0, peak)
    scaled = a / safe[..., None]
    return peak * np.sum(scaled ** p, axis=-1) ** (1.0 / p)


def position_point(y: np.ndarray, p: float) -> np.ndarray:
    """Point on the unit p-norm surface for meta-variables y.

    Composition of the spherical map with division by its own p-norm; the
    result F_p satisfies ||F_p||_p = 1 and keeps all components nonnegative.
    """
    t = spherical_map(y)
    return t / p_norm(t, p)[..., None]


def position_objectives(x_p: np.ndarray, spec) -> np.ndarray:
    """F_p for a validated instance: meta-variables, sphere, p-norm scaling."""
    y = meta_variables(x_p, spec.meta_q, spec.meta_t)
    return position_point(y, spec.norm_p)


def realize_position(y: np.ndarray, q: int, t: int) -> np.ndarray:
    """Construct a position vector whose meta-variables equal y exactly.

    Inverts meta_variables up to floating-point rounding.  Window sums are
    coupled through the t shared coordinates between neighbours, so one
    window's sign choice can force its neighbour's: the solver searches sign
    patterns depth-first (positive branch first) while propagating the exact
    feasible interval of each shared-block sum, then walks backwards picking
    the shared sums closest to zero and assigns block-constant coordinates.

    Args:
        y: meta-variable targets shaped (M-1,), entries in [0, 1].
        q: window stride.
        t: window overlap.

    Returns:
        Position vector shaped ((M-1)*q + t,) with entries in [-1, 1].

    Raises:
        ValueError: if y leaves [0, 1] or no sign pattern is feasible.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.shape[0] < 1:
        raise ValueError("y must be a 1-d array of meta-variables")
    if np.any(y < 0.0) or np.any(y > 1.0) or not np.all(np.isfinite(y)):
        raise ValueError("meta-variables must lie in [0, 1]")
    g = y.shape[0]
    width = q + t
    target = y * width
    # Exclusive-block capacities: end windows give up one shared block,
    # middle windows two.  2t + 1 < q keeps every capacity positive.
    n_excl = np.full(g, width, dtype=float)
    if g > 1:
        n_excl[0] -= t
        n_excl[-1] -= t
        if g > 2:
            n_excl[1:-1] -= 2 * t

    def propagate(signs: list[int]) -> list[tuple[float, float]] | None:
        # intervals[i] = reachable values of the shared sum after window i+1,
        # with the virtual boundary sums pinned to zero.
        lo_prev, hi_prev = 0.0, 0.0
        intervals = []
        for i, sgn in enumerate(signs):
            cap = float(t) if i < g - 1 else 0.0
            w = sgn * target[i]
            lo = max(w - hi_prev - n_excl[i], -cap)
            hi = min(w - lo_prev + n_excl[i], cap)
            if lo > hi + 1e-12:
                return None
            intervals.append((lo, hi))
            lo_prev, hi_prev = lo, hi
        return intervals

    # Plain iterative DFS over sign patterns, positive branch first.  Only
    # feasible prefixes are pushed, so the first full pattern popped wins.
    stack: list[list[int]] = [[]]
    signs: list[int] | None = None
    while stack:
        prefix = stack.pop()
        if len(prefix) == g:
            signs = prefix
            break
        branches = (1,) if target[len(prefix)] == 0.0 else (-1, 1)
        for sgn in branches:  # pushed so that +1 is explored first
            cand = prefix + [sgn]
            if propagate(cand) is not None:
                stack.append(cand)
    if signs is None:
        raise ValueError("no sign pattern realizes these meta-variables")
    intervals = propagate(signs)
    assert intervals is not None

    shared = np.zeros(g, dtype=float)  # shared[i] = sum after window i+1
    eps = np.zeros(g, dtype=float)
    nxt = 0.0
    for i in range(g - 1, -1, -1):
        w = signs[i] * target[i]
        lo_prev, hi_prev = (0.0, 0.0) if i == 0 else intervals[i - 1]
        # previous shared sum must let the exclusive block close the gap
        lo = max(lo_prev, w - nxt - n_excl[i])
        hi = min(hi_prev, w - nxt + n_excl[i])
        prev = min(max(0.0, lo), hi)
        eps[i] = w - nxt - prev
        if i > 0:
            shared[i - 1] = prev
        nxt = prev

    x = np.zeros((g - 1) * q + width, dtype=float)
    for i in range(g):
        start = i * q
        if t > 0 and i > 0:
            x[start:start + t] = shared[i - 1] / t
        excl_lo = start + (t if i > 0 else 0)
        excl_hi = start + width - (t if i < g - 1 else 0)
        x[excl_lo:excl_hi] = eps[i] / n_excl[i]
    # Tight sign patterns can overshoot the box by interval-tolerance crumbs.
    return np.clip(x, -1.0, 1.0)


def dissimilarize(f: np.ndarray) -> np.ndarray:
    """Spread objective scales: component i maps to 2*i*(2*f_i - 1).

    Sends [0, 1] ranges onto [-2i, 2i], so each objective gets its own scale
    while preserving all dominance comparisons (the map is strictly increasing
    in every component).
    """
    f = np.asarray(f, dtype=float)
    idx = np.arange(1, f.shape[-1] + 1, dtype=float)
    return 2.0 * idx * (2.0 * f - 1.0)
