"""First-order differential operators with polynomial coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from oscillab.symcore.poly import MultiPoly, PolyError


class PolyVectorField:
    """Vector field sum_i c_i(x) d/dx_i on the frame's coordinate patch.

    Coefficients are MultiPoly over exactly the frame variables; application
    to a MultiPoly is linear and satisfies the Leibniz rule.
    """

    __slots__ = ("frame", "coeffs")

    def __init__(self, frame: Sequence[str], coeffs: Sequence[MultiPoly]):
        frame = tuple(frame)
        coeffs = tuple(coeffs)
        if len(coeffs) != len(frame):
            raise PolyError(f"{len(coeffs)} coefficients for frame of length {len(frame)}")
        for c in coeffs:
            if c.variables != frame:
                raise PolyError(f"coefficient over {c.variables}, frame is {frame}")
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("PolyVectorField is immutable")

    @staticmethod
    def coordinate(frame: Sequence[str], name: str) -> "PolyVectorField":
        frame = tuple(frame)
        one = MultiPoly.const(frame, 1)
        zero = MultiPoly.zero(frame)
        return PolyVectorField(frame, [one if v == name else zero for v in frame])

    @staticmethod
    def zero(frame: Sequence[str]) -> "PolyVectorField":
        frame = tuple(frame)
        z = MultiPoly.zero(frame)
        return PolyVectorField(frame, [z] * len(frame))

    def _check(self, other: "PolyVectorField"):
        if self.frame != other.frame:
            raise PolyError(f"frame mismatch: {self.frame} vs {other.frame}")

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.frame == other.frame and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.frame, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        self._check(other)
        return PolyVectorField(self.frame, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "PolyVectorField") -> "PolyVectorField":
        self._check(other)
        return PolyVectorField(self.frame, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return PolyVectorField(self.frame, [-c for c in self.coeffs])

    def __mul__(self, s) -> "PolyVectorField":
        if isinstance(s, (int, Fraction, MultiPoly)):
            return PolyVectorField(self.frame, [c * s for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def apply(self, p: MultiPoly) -> MultiPoly:
        """Directional derivative sum_i c_i * dp/dx_i, exact."""
        if p.variables != self.frame:
            raise PolyError(f"polynomial over {p.variables}, frame is {self.frame}")
        out = MultiPoly.zero(self.frame)
        for c, v in zip(self.coeffs, self.frame):
            if not c.is_zero():
                out = out + c * p.diff(v)
        return out

    def apply_iter(self, p: MultiPoly, k: int) -> MultiPoly:
        for _ in range(k):
            p = self.apply(p)
        return p

    def at(self, point) -> list[Fraction]:
        """Coefficient vector at a rational point."""
        return [c.eval(point) for c in self.coeffs]

    def __repr__(self):
        body = " + ".join(
            f"({c.text()}) d/d{v}" for c, v in zip(self.coeffs, self.frame) if not c.is_zero()
        )
        return f"PolyVectorField({body or '0'})"


def lie_bracket(V: PolyVectorField, W: PolyVectorField) -> PolyVectorField:
    """[V, W] acting as V(W p) - W(V p); bilinear, antisymmetric, Jacobi."""
    V._check(W)
    return PolyVectorField(
        V.frame,
        [V.apply(cw) - W.apply(cv) for cv, cw in zip(V.coeffs, W.coeffs)],
    )
