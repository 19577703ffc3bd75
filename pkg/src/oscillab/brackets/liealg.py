"""Free nilpotent Lie algebras in a Hall basis, and the Campbell-Hausdorff
product truncated at step <= 5.

Elements are coordinate maps over Hall trees.  Coordinates are usually exact
rationals, but any commutative ring scalar with +,-,* works (MultiPoly is
used for the t,s-graded expansions in the curve-family machinery).

The CH coefficients are a fixed table in right-nested form through degree 5,
derived once from the associative log(e^A e^B) by the Dynkin projection and
frozen here; the test suite re-verifies the displayed low-order terms, the
inverse law, associativity, and an exact nilpotent-matrix oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Tree = Union[int, tuple]  # generator index, or (left, right)


class CapabilityError(ValueError):
    """Requested truncation beyond the implemented CH table."""


def tree_degree(t: Tree) -> int:
    return 1 if isinstance(t, int) else tree_degree(t[0]) + tree_degree(t[1])


def _tree_key(t: Tree):
    if isinstance(t, int):
        return (1, (t,))
    kl, kr = _tree_key(t[0]), _tree_key(t[1])
    return (kl[0] + kr[0], (0,) + kl[1] + kr[1])


def tree_lt(a: Tree, b: Tree) -> bool:
    return _tree_key(a) < _tree_key(b)


def tree_text(t: Tree, names=None) -> str:
    if isinstance(t, int):
        return names[t] if names else f"X{t + 1}"
    return f"[{tree_text(t[0], names)},{tree_text(t[1], names)}]"


class FreeNilpotent:
    """Free nilpotent Lie algebra on n generators, brackets beyond `step` dropped.

    Hall condition on trees (u,v): u < v, and if v = (v1,v2) then v1 <= u.
    """

    def __init__(self, ngen: int, step: int):
        if ngen < 1 or step < 1:
            raise ValueError("need ngen >= 1 and step >= 1")
        self.ngen = ngen
        self.step = step
        self._canon_cache: dict = {}

    def is_hall(self, t: Tree) -> bool:
        if isinstance(t, int):
            return 0 <= t < self.ngen
        u, v = t
        if not (self.is_hall(u) and self.is_hall(v) and tree_lt(u, v)):
            return False
        if isinstance(v, tuple) and tree_lt(u, v[0]):
            return False
        return True

    def hall_basis(self) -> list[Tree]:
        basis: list[Tree] = list(range(self.ngen))
        by_deg: dict[int, list[Tree]] = {1: list(range(self.ngen))}
        for d in range(2, self.step + 1):
            level = []
            for dl in range(1, d):
                for u in by_deg[dl]:
                    for v in by_deg[d - dl]:
                        t = (u, v)
                        if self.is_hall(t):
                            level.append(t)
            level.sort(key=_tree_key)
            by_deg[d] = level
            basis.extend(level)
        return basis

    def zero(self) -> "LieSeries":
        return LieSeries(self, {})

    def gen(self, i: int) -> "LieSeries":
        if not 0 <= i < self.ngen:
            raise ValueError(f"generator index {i} out of range")
        return LieSeries(self, {i: Fraction(1)})

    def _canon_pair(self, u: Tree, v: Tree) -> dict:
        """Canonical coordinates of [u, v] for Hall trees u, v."""
        if tree_degree(u) + tree_degree(v) > self.step:
            return {}
        key = (u, v)
        hit = self._canon_cache.get(key)
        if hit is not None:
            return hit
        if u == v:
            out: dict = {}
        elif tree_lt(v, u):
            out = {t: -c for t, c in self._canon_pair(v, u).items()}
        elif self.is_hall((u, v)):
            out = {(u, v): Fraction(1)}
        else:
            # v = (v1, v2) with v1 > u: Jacobi  [u,[v1,v2]] = [[u,v1],v2] + [v1,[u,v2]]
            v1, v2 = v
            out = {}
            for t1, c1 in self._canon_pair(u, v1).items():
                for t2, c2 in self._canon_pair(t1, v2).items():
                    out[t2] = out.get(t2, Fraction(0)) + c1 * c2
            for t1, c1 in self._canon_pair(u, v2).items():
                for t2, c2 in self._canon_pair(v1, t1).items():
                    out[t2] = out.get(t2, Fraction(0)) + c1 * c2
            out = {t: c for t, c in out.items() if c}
        self._canon_cache[key] = out
        return out


class LieSeries:
    """Element of a FreeNilpotent algebra: map Hall tree -> coordinate."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FreeNilpotent, coords: dict):
        self.algebra = algebra
        self.coords = {t: c for t, c in coords.items() if not _is_zero(c)}

    def _check(self, other: "LieSeries"):
        if self.algebra is not other.algebra and (
            self.algebra.ngen != other.algebra.ngen or self.algebra.step != other.algebra.step
        ):
            raise ValueError("LieSeries from different algebras")

    def __eq__(self, other):
        if not isinstance(other, LieSeries):
            return NotImplemented
        return self.coords == other.coords

    def __add__(self, other: "LieSeries") -> "LieSeries":
        self._check(other)
        out = dict(self.coords)
        for t, c in other.coords.items():
            out[t] = out[t] + c if t in out else c
        return LieSeries(self.algebra, out)

    def __sub__(self, other: "LieSeries") -> "LieSeries":
        return self + (-other)

    def __neg__(self):
        return LieSeries(self.algebra, {t: -c for t, c in self.coords.items()})

    def scale(self, s) -> "LieSeries":
        return LieSeries(self.algebra, {t: _mul(c, s) for t, c in self.coords.items()})

    def bracket(self, other: "LieSeries") -> "LieSeries":
        self._check(other)
        alg = self.algebra
        out: dict = {}
        for t1, c1 in self.coords.items():
            for t2, c2 in other.coords.items():
                c12 = _mul(c1, c2)
                if _is_zero(c12):
                    continue
                for t, c in alg._canon_pair(t1, t2).items():
                    add = _mul(c12, c)
                    out[t] = out[t] + add if t in out else add
        return LieSeries(alg, out)

    def graded_part(self, d: int) -> "LieSeries":
        return LieSeries(self.algebra, {t: c for t, c in self.coords.items() if tree_degree(t) == d})

    def map_coords(self, f) -> "LieSeries":
        return LieSeries(self.algebra, {t: f(c) for t, c in self.coords.items()})

    def is_zero(self) -> bool:
        return not self.coords

    def text(self, names=None) -> str:
        if not self.coords:
            return "0"
        items = sorted(self.coords.items(), key=lambda kv: _tree_key(kv[0]))
        return " + ".join(f"({c})*{tree_text(t, names)}" for t, c in items)

    def __repr__(self):
        return f"LieSeries({self.text()})"


def _is_zero(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return c.is_zero()


def _mul(a, b):
    return a * b


# Campbell-Hausdorff in right-nested form: log(exp(b) o exp(a)) for flows,
# i.e. the series Z with exp(Z) = exp(a)exp(b) as operators on functions.
# Entry (coef, word): word (w1,...,wm) over {0:'a', 1:'b'} denotes
# [w1,[w2,...[w_{m-1}, wm]...]].  Derived by Dynkin projection of the
# associative logarithm; redundant presentations are fine, brackets
# canonicalize downstream.
_BCH_WORDS: list[tuple[Fraction, tuple[int, ...]]] = [
    (Fraction(1), (0,)),
    (Fraction(1), (1,)),
    (Fraction(1, 4), (0, 1)),
    (Fraction(-1, 4), (1, 0)),
    (Fraction(1, 36), (0, 0, 1)),
    (Fraction(-1, 18), (0, 1, 0)),
    (Fraction(-1, 18), (1, 0, 1)),
    (Fraction(1, 36), (1, 1, 0)),
    (Fraction(-1, 48), (0, 1, 0, 1)),
    (Fraction(1, 48), (1, 0, 1, 0)),
    (Fraction(-1, 3600), (0, 0, 0, 0, 1)),
    (Fraction(1, 900), (0, 0, 0, 1, 0)),
    (Fraction(-1, 600), (0, 0, 1, 0, 1)),
    (Fraction(-1, 600), (0, 0, 1, 1, 0)),
    (Fraction(-1, 600), (0, 1, 0, 0, 1)),
    (Fraction(1, 150), (0, 1, 0, 1, 0)),
    (Fraction(-1, 600), (0, 1, 1, 0, 1)),
    (Fraction(1, 900), (0, 1, 1, 1, 0)),
    (Fraction(1, 900), (1, 0, 0, 0, 1)),
    (Fraction(-1, 600), (1, 0, 0, 1, 0)),
    (Fraction(1, 150), (1, 0, 1, 0, 1)),
    (Fraction(-1, 600), (1, 0, 1, 1, 0)),
    (Fraction(-1, 600), (1, 1, 0, 0, 1)),
    (Fraction(-1, 600), (1, 1, 0, 1, 0)),
    (Fraction(1, 900), (1, 1, 1, 0, 1)),
    (Fraction(-1, 3600), (1, 1, 1, 1, 0)),
]

BCH_MAX_STEP = 5


def bch(a: LieSeries, b: LieSeries, step: int | None = None) -> LieSeries:
    """log(exp(b) o exp(a)) as flows -- equivalently log(e^a e^b) as operators.

    Reproduces A + B + 1/2 [A,B] + 1/12 [A,[A,B]] - 1/12 [B,[A,B]]
    - 1/48 [A,[B,[A,B]]] - 1/48 [B,[A,[A,B]]] + (degree 5).
    """
    a._check(b)
    alg = a.algebra
    if step is None:
        step = alg.step
    if step > BCH_MAX_STEP:
        raise CapabilityError(
            f"CH table implemented through step {BCH_MAX_STEP}, requested {step}"
        )
    out = alg.zero()
    for coef, word in _BCH_WORDS:
        if len(word) > step:
            continue
        term = a if word[-1] == 0 else b
        for w in reversed(word[:-1]):
            term = (a if w == 0 else b).bracket(term)
        out = out + term.scale(coef)
    if step < alg.step:
        out = LieSeries(alg, {t: c for t, c in out.coords.items() if tree_degree(t) <= step})
    return out
