"""Excluded-interval construction for one-variable polynomial families.

For p(h) = sum_i a_i h^i on [0,1] the machinery locates the cancellation
zones where |p| drops below a fixed fraction of the dominant monomial
max_j |a_j| h^j, reports them as intervals [nu_s, mu_s], and measures the
constant C for which the lower bound

    |p(h)| >= C^{-1} max_j |a_j| h^j     off the intervals

holds on a verification grid.  Intervals are valid for every choice of signs
of the given coefficient magnitudes (the whole dyadic class), which is what
the inductive existence statement guarantees; here they are found by direct
scan on a dyadic refinement of [0,1] and certified a posteriori.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


class GapArgumentError(ValueError):
    pass


@dataclass(frozen=True)
class GapIntervalSet:
    """Ordered disjoint intervals [nu_s, mu_s] in [0,1] plus the measured C."""

    intervals: tuple[tuple[float, float], ...]
    lower_bound_constant: float

    def __post_init__(self):
        prev = 0.0
        for nu, mu in self.intervals:
            if not (prev <= nu <= mu <= 1.0):
                raise GapArgumentError(f"intervals not ordered in [0,1]: {self.intervals}")
            prev = mu
        if self.lower_bound_constant <= 0:
            raise GapArgumentError("lower bound constant must be positive")

    def excludes(self, h: np.ndarray) -> np.ndarray:
        """Boolean mask of grid points inside some excluded interval."""
        mask = np.zeros_like(h, dtype=bool)
        for nu, mu in self.intervals:
            mask |= (h >= nu) & (h <= mu)
        return mask


@dataclass(frozen=True)
class GapVerifyReport:
    passed: bool
    min_ratio: float
    worst_h: float
    worst_signs: tuple[int, ...]
    checked: int


def _normalize_coeffs(coeffs) -> tuple[list[int], list[float]]:
    idx, mags = [], []
    for i, a in coeffs:
        i = int(i)
        a = float(a)
        if i < 0:
            raise GapArgumentError(f"negative index {i}")
        if a == 0.0:
            raise GapArgumentError(f"zero coefficient at index {i}")
        if i in idx:
            raise GapArgumentError(f"duplicate index {i}")
        idx.append(i)
        mags.append(abs(a))
    if not idx:
        raise GapArgumentError("empty coefficient list")
    return idx, mags


def _dyadic_grid(points_per_block: int = 4096, depth: int = 40) -> np.ndarray:
    blocks = [np.linspace(0.5 ** (k + 1), 0.5 ** k, points_per_block, endpoint=(k == 0))
              for k in range(depth)]
    g = np.unique(np.concatenate(blocks + [np.array([0.0, 1.0])]))
    return g


def _ratios(idx, mags, signs, h: np.ndarray) -> np.ndarray:
    """|sum_i s_i |a_i| h^i| / max_j |a_j| h^j, with ratio 1 at h=0."""
    mono = np.empty((len(idx), h.size))
    for r, (i, a) in enumerate(zip(idx, mags)):
        mono[r] = a * h ** i
    dom = mono.max(axis=0)
    p = np.zeros(h.size)
    for r, s in enumerate(signs):
        p += s * mono[r]
    out = np.ones(h.size)
    nz = dom > 0.0
    out[nz] = np.abs(p[nz]) / dom[nz]
    return out


def _sign_patterns(n: int):
    # global sign flip is irrelevant; fix the first sign
    for rest in itertools.product((1.0, -1.0), repeat=n - 1):
        yield (1.0,) + rest


def gap_intervals(coeffs: Sequence[tuple[int, float]], M: int | None = None,
                  threshold: float = 0.125, pad: float = 0.02) -> GapIntervalSet:
    """Locate cancellation zones valid for all sign choices of the magnitudes.

    threshold: ratio below which a grid point is declared inside a zone.
    pad: relative enlargement of each zone (guards grid discreteness).
    """
    idx, mags = _normalize_coeffs(coeffs)
    if M is not None and len(idx) > M + 1:
        raise GapArgumentError(f"{len(idx)} terms exceeds M+1={M + 1}")
    h = _dyadic_grid()
    zones: list[tuple[float, float]] = []
    if len(idx) > 1:
        for signs in _sign_patterns(len(idx)):
            r = _ratios(idx, mags, signs, h)
            bad = r < threshold
            if not bad.any():
                continue
            # maximal runs of bad points, padded one grid step outward
            d = np.diff(bad.astype(np.int8))
            starts = list(np.nonzero(d == 1)[0] + 1)
            ends = list(np.nonzero(d == -1)[0])
            if bad[0]:
                starts.insert(0, 0)
            if bad[-1]:
                ends.append(bad.size - 1)
            for s, e in zip(starts, ends):
                lo = h[max(s - 1, 0)] * (1.0 - pad)
                hi = min(h[min(e + 1, h.size - 1)] * (1.0 + pad), 1.0)
                zones.append((lo, hi))
    zones.sort()
    merged: list[list[float]] = []
    for lo, hi in zones:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    intervals = tuple((lo, hi) for lo, hi in merged)

    # measured constant: worst off-zone ratio on the verification grid,
    # and the (ii) requirement mu_s <= C nu_s
    gset = GapIntervalSet(intervals, 1.0)
    rep = gap_verify(coeffs, gset, 1e-5, _c_inv=0.0)
    c = 1.0 / max(rep.min_ratio, 1e-300)
    for nu, mu in intervals:
        if nu <= 0.0:
            raise GapArgumentError("cancellation zone touches h=0; inputs degenerate")
        c = max(c, mu / nu)
    return GapIntervalSet(intervals, max(c, 1.0))


def gap_verify(coeffs: Sequence[tuple[int, float]], g: GapIntervalSet,
               grid_step: float, _c_inv: float | None = None) -> GapVerifyReport:
    """Scan [0,1] at grid_step and check the lower bound off the intervals.

    Reports the minimal observed ratio over all sign patterns rather than
    erroring; passed means ratio >= 1/C everywhere checked.
    """
    if not (0.0 < grid_step <= 1e-3):
        raise GapArgumentError(f"grid_step {grid_step} outside (0, 1e-3]")
    idx, mags = _normalize_coeffs(coeffs)
    n = int(round(1.0 / grid_step))
    h = np.linspace(0.0, 1.0, n + 1)
    keep = ~g.excludes(h)
    h = h[keep]
    best = (np.inf, 0.0, (1,) * len(idx))
    for signs in _sign_patterns(len(idx)):
        r = _ratios(idx, mags, signs, h)
        k = int(np.argmin(r))
        if r[k] < best[0]:
            best = (float(r[k]), float(h[k]), tuple(int(s) for s in signs))
    c_inv = (1.0 / g.lower_bound_constant) if _c_inv is None else _c_inv
    return GapVerifyReport(
        passed=bool(best[0] >= c_inv),
        min_ratio=best[0],
        worst_h=best[1],
        worst_signs=best[2],
        checked=int(h.size),
    )
