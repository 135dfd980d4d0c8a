"""Maximize the edge-monomial polynomial of a hypergraph over the simplex.

The objective for a graph G and weights x is the sum over edges of the
product of the member weights; its maximum over the probability simplex is
computed by a multiplicative growth update

    x_i  <-  x_i * d_i(x) / (r * value(x)),

where d_i is the link value at vertex i (the partial derivative). For a
homogeneous polynomial with non-negative coefficients this update never
decreases the objective and preserves the simplex exactly, so no projection
step is needed. Restart trials are independent; they are executed batched and
reduced by value with ties broken on restart index, so the report for a fixed
seed does not depend on scheduling.

First-order optimality at a weighting with minimal support means every
supported vertex sees the same link value, equal to r times the objective,
and no unsupported vertex sees more; `kkt_residual` measures the deviation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .errors import DegenerateWeightingError, ZeroValueError
from .hypergraph import (
    LinkView,
    RUniformHypergraph,
    is_left_compressed,
    max_clique_order,
    maximal_cliques,
)

SIMPLEX_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SolverConfig:
    restarts: int = 64
    max_iterations: int = 50_000
    step_gain_floor: float = 1e-14
    kkt_tolerance: float = 1e-8
    support_threshold: float = 1e-9
    equality_tolerance: float = 1e-6
    seed: int = 0
    clique_starts: bool | None = None  # None: enabled when n <= 20

    def clique_starts_enabled(self, n: int) -> bool:
        if self.clique_starts is None:
            return n <= 20
        return self.clique_starts


@dataclass(frozen=True)
class SolveReport:
    """Best certified value found, with the weighting behind it.

    `weighting` is the support-minimized (and, for left-compressed inputs,
    sorted) optimum; `raw_weighting` is the same trial before support
    minimization. `pairs_covered` records whether every pair of supported
    vertices lies in a common edge, a necessary condition at minimal-support
    optima.
    """

    value: float
    weighting: tuple[float, ...]
    raw_weighting: tuple[float, ...]
    support: tuple[int, ...]
    kkt_residual: float
    iterations: int
    restarts_used: int
    converged: bool
    pairs_covered: bool


@lru_cache(maxsize=4096)
def _edge_index(g: RUniformHypergraph) -> np.ndarray:
    idx = np.asarray(g.edges, dtype=np.int64).reshape(g.m, g.r) - 1
    idx.setflags(write=False)
    return idx


def _as_weights(g: RUniformHypergraph, x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (g.n,):
        raise ValueError(f"weighting length {arr.shape} does not match n = {g.n}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("weighting contains non-finite entries")
    return arr


def _check_feasible(x: np.ndarray):
    if np.any(x < 0):
        raise ValueError(f"negative weight: min = {x.min()}")
    total = float(x.sum())
    if abs(total - 1.0) > SIMPLEX_TOLERANCE:
        raise ValueError(f"weights sum to {total!r}, not 1")


def evaluate(g: RUniformHypergraph, x: Sequence[float]) -> float:
    """Sum over edges of the product of member weights."""
    arr = _as_weights(g, x)
    if g.m == 0:
        return 0.0
    return float(arr[_edge_index(g)].prod(axis=1).sum())


def evaluate_exact(g: RUniformHypergraph, weights: Sequence) -> Fraction:
    """Exact rational evaluation; weights may be Fractions, ints, or strings."""
    w = [Fraction(v) for v in weights]
    if len(w) != g.n:
        raise ValueError(f"weighting length {len(w)} does not match n = {g.n}")
    total = Fraction(0)
    for e in g.edges:
        p = Fraction(1)
        for v in e:
            p *= w[v - 1]
        total += p
    return total


def link_value(g: RUniformHypergraph, view: LinkView, x: Sequence[float]) -> float:
    """Sum over the view's member sets of the product of their weights."""
    if view.base != g:
        raise ValueError("link view does not belong to this hypergraph")
    arr = _as_weights(g, x)
    total = 0.0
    for s in view.sets:
        p = 1.0
        for v in s:
            p *= arr[v - 1]
        total += p
    return total


def _batch_grad(eidx: np.ndarray, n: int, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Link values at every vertex and objective values, per batch row."""
    B = X.shape[0]
    if eidx.shape[0] == 0:
        return np.zeros((B, n)), np.zeros(B)
    W = X[:, eidx]  # (B, m, r)
    vals = W.prod(axis=2).sum(axis=1)
    r = eidx.shape[1]
    left = np.ones_like(W)
    left[:, :, 1:] = np.cumprod(W[:, :, :-1], axis=2)
    right = np.ones_like(W)
    right[:, :, :-1] = np.cumprod(W[:, :, ::-1], axis=2)[:, :, ::-1][:, :, 1:]
    loo = left * right
    flat = (np.arange(B)[:, None] * n + eidx.reshape(-1)[None, :]).ravel()
    grad = np.bincount(flat, weights=loo.reshape(B, -1).ravel(), minlength=B * n)
    return grad.reshape(B, n), vals


def _batch_value(eidx: np.ndarray, X: np.ndarray) -> np.ndarray:
    if eidx.shape[0] == 0:
        return np.zeros(X.shape[0])
    return X[:, eidx].prod(axis=2).sum(axis=1)


def _ascend(
    eidx: np.ndarray,
    n: int,
    r: int,
    X0: np.ndarray,
    max_iterations: int,
    gain_floor: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run growth updates on each row until its gain drops below the floor."""
    X = X0.copy()
    vals = _batch_value(eidx, X)
    active = vals > 0.0
    iters = np.zeros(X.shape[0], dtype=np.int64)
    for _ in range(max_iterations):
        rows = np.flatnonzero(active)
        if rows.size == 0:
            break
        Xa = X[rows]
        grad, va = _batch_grad(eidx, n, Xa)
        newX = Xa * grad / (r * va)[:, None]
        newX /= newX.sum(axis=1, keepdims=True)
        newv = _batch_value(eidx, newX)
        X[rows] = newX
        vals[rows] = newv
        iters[rows] += 1
        active[rows] = (newv - va) >= gain_floor
    return X, vals, iters


def growth_step(g: RUniformHypergraph, x: Sequence[float]) -> np.ndarray:
    """One multiplicative update; the objective never decreases."""
    arr = _as_weights(g, x)
    _check_feasible(arr)
    eidx = _edge_index(g)
    grad, val = _batch_grad(eidx, g.n, arr[None, :])
    if val[0] <= 0.0:
        raise ZeroValueError("objective is zero at this weighting; restart instead")
    out = arr * grad[0] / (g.r * val[0])
    return out / out.sum()


def kkt_residual(
    g: RUniformHypergraph, x: Sequence[float], support_threshold: float = 1e-9
) -> float:
    """Deviation from first-order optimality.

    Largest gap between a supported vertex's link value and r times the
    objective, plus any excess link value at unsupported vertices.
    """
    arr = _as_weights(g, x)
    _check_feasible(arr)
    grad, val = _batch_grad(_edge_index(g), g.n, arr[None, :])
    return float(_kkt_rows(arr[None, :], grad, val, g.r, support_threshold)[0])


def _kkt_rows(
    X: np.ndarray, grad: np.ndarray, vals: np.ndarray, r: int, threshold: float
) -> np.ndarray:
    target = (r * vals)[:, None]
    dev = grad - target
    on_support = X > threshold
    sup = np.where(on_support, np.abs(dev), 0.0).max(axis=1)
    off = np.where(~on_support, dev, 0.0).max(axis=1, initial=0.0)
    return sup + np.maximum(off, 0.0)


def minimize_support(
    g: RUniformHypergraph,
    x: Sequence[float],
    threshold: float = 1e-9,
    config: SolverConfig | None = None,
) -> np.ndarray:
    """Drop weights at or below the threshold, renormalize, and re-polish."""
    cfg = config or SolverConfig()
    arr = _as_weights(g, x)
    _check_feasible(arr)
    kept = np.where(arr > threshold, arr, 0.0)
    total = kept.sum()
    if total <= 0.0:
        raise DegenerateWeightingError(
            f"all {g.n} weights at or below threshold {threshold}"
        )
    kept /= total
    eidx = _edge_index(g)
    if _batch_value(eidx, kept[None, :])[0] <= 0.0:
        return kept
    out, _, _ = _ascend(
        eidx, g.n, g.r, kept[None, :], cfg.max_iterations, cfg.step_gain_floor
    )
    return out[0]


def sorted_polish(
    g: RUniformHypergraph, x: Sequence[float], config: SolverConfig | None = None
) -> np.ndarray:
    """Reassign weights in non-increasing label order, then re-converge.

    For a left-compressed graph the descending reassignment never decreases
    the objective, and some optimal weighting is non-increasing, so iterating
    sort-then-polish canonicalizes the output. Repeats until stable.
    """
    cfg = config or SolverConfig()
    arr = _as_weights(g, x)
    _check_feasible(arr)
    eidx = _edge_index(g)
    for _ in range(16):
        arr = np.sort(arr)[::-1].copy()
        if _batch_value(eidx, arr[None, :])[0] <= 0.0:
            return arr
        arr = _ascend(
            eidx, g.n, g.r, arr[None, :], cfg.max_iterations, cfg.step_gain_floor
        )[0][0]
        if np.all(arr[:-1] >= arr[1:] - 1e-12):
            break
    return arr


def _pairs_covered(g: RUniformHypergraph, support: Sequence[int]) -> bool:
    pairs = {p for e in g.edges for p in combinations(e, 2)}
    return all(p in pairs for p in combinations(sorted(support), 2))


def _starts(g: RUniformHypergraph, config: SolverConfig) -> np.ndarray:
    n = g.n
    rows = [np.full(n, 1.0 / n)]
    if config.clique_starts_enabled(n) and config.restarts >= 2:
        for clique in maximal_cliques(g, cap=config.restarts - 1):
            w = np.zeros(n)
            w[np.asarray(clique) - 1] = 1.0 / len(clique)
            rows.append(w)
            if len(rows) >= config.restarts:
                break
    eidx = _edge_index(g)
    while len(rows) < config.restarts:
        rng = np.random.default_rng((config.seed, len(rows)))
        w = rng.dirichlet(np.ones(n))
        for _ in range(50):
            if _batch_value(eidx, w[None, :])[0] > 0.0:
                break
            w = rng.dirichlet(np.ones(n))
        rows.append(w)
    return np.asarray(rows)


def solve(g: RUniformHypergraph, config: SolverConfig | None = None) -> SolveReport:
    """Best value over a deterministic multistart schedule.

    Trial list: the uniform weighting, then a uniform weighting on each
    maximal clique (when clique starts are enabled), then seeded flat-Dirichlet
    draws, `restarts` trials in total. Each trial runs growth updates to the
    gain floor, gets its support minimized, and is re-polished; the best value
    wins with ties broken toward the earlier trial.
    """
    cfg = config or SolverConfig()
    if cfg.restarts < 1:
        raise ValueError(f"restarts must be >= 1, got {cfg.restarts}")
    n = g.n
    if g.m == 0:
        uniform = tuple([1.0 / n] * n)
        return SolveReport(
            value=0.0,
            weighting=uniform,
            raw_weighting=uniform,
            support=tuple(range(1, n + 1)),
            kkt_residual=0.0,
            iterations=0,
            restarts_used=1,
            converged=True,
            pairs_covered=(n == 1),
        )

    eidx = _edge_index(g)
    thr = cfg.support_threshold
    X0 = _starts(g, cfg)
    X1, _, it1 = _ascend(eidx, n, g.r, X0, cfg.max_iterations, cfg.step_gain_floor)

    Xm = np.where(X1 > thr, X1, 0.0)
    Xm /= Xm.sum(axis=1, keepdims=True)
    X2, v2, it2 = _ascend(eidx, n, g.r, Xm, cfg.max_iterations, cfg.step_gain_floor)

    grad, vg = _batch_grad(eidx, n, X2)
    kkt = _kkt_rows(X2, grad, vg, g.r, thr)

    best = int(np.argmax(v2))
    best_x = X2[best]
    best_val = float(v2[best])
    best_kkt = float(kkt[best])
    iterations = int(it1[best] + it2[best])

    if is_left_compressed(g):
        # descending reassignment never lowers the value for this class, and
        # multiplicative updates keep exact zeros, so adoption is loss-free
        y = sorted_polish(g, best_x, cfg)
        yv = _batch_value(eidx, y[None, :])[0]
        if yv >= best_val - 1e-12:
            best_x = y
            best_val = float(yv)
            gy, vy = _batch_grad(eidx, n, y[None, :])
            best_kkt = float(_kkt_rows(y[None, :], gy, vy, g.r, thr)[0])

    converged = best_kkt <= cfg.kkt_tolerance
    if g.r == 2 and cfg.clique_starts_enabled(n) and n <= 20:
        expected = motzkin_straus_value(g)
        if abs(best_val - expected) > 1e-7:
            converged = False

    support = tuple(int(i) + 1 for i in np.flatnonzero(best_x > thr))
    return SolveReport(
        value=best_val,
        weighting=tuple(float(v) for v in best_x),
        raw_weighting=tuple(float(v) for v in X1[best]),
        support=support,
        kkt_residual=best_kkt,
        iterations=iterations,
        restarts_used=X0.shape[0],
        converged=converged,
        pairs_covered=_pairs_covered(g, support),
    )


def complete_lagrangian(t: int, r: int) -> float:
    """Value of the complete r-graph on t vertices: C(t, r) / t^r."""
    if r < 2 or t < r:
        raise ValueError(f"need t >= r >= 2, got t = {t}, r = {r}")
    return comb(t, r) / t**r


def complete_lagrangian_exact(t: int, r: int) -> Fraction:
    if r < 2 or t < r:
        raise ValueError(f"need t >= r >= 2, got t = {t}, r = {r}")
    return Fraction(comb(t, r), t**r)


def motzkin_straus_value(g: RUniformHypergraph, max_vertices: int = 20) -> float:
    """Closed-form value for 2-graphs: (1/2)(1 - 1/t), t the max clique order."""
    if g.r != 2:
        raise ValueError(f"closed form applies to 2-graphs only, got r = {g.r}")
    t = max_clique_order(g, max_vertices)
    return 0.5 * (1.0 - 1.0 / t)
