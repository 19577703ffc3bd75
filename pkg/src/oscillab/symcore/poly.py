"""Multivariate polynomials over exact rationals.

Terms are stored sparsely as a map from dense exponent tuples to Fraction
coefficients.  Degrees in this project are tiny (<= ~12), variable counts
small (<= 12), so no attempt is made at asymptotic cleverness; correctness
and exactness are the point.  No floats enter unless `eval_float` or
`compile_terms` is called explicitly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    """Structural error: mismatched variable lists, bad exponents, etc."""


def _as_rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise PolyError(f"coefficient {c!r} is not exact (int/Fraction/str required)")


class MultiPoly:
    """A polynomial in an ordered list of named variables, exact coefficients.

    Two polynomials compare equal iff they have the same variable tuple and
    identical term maps (zero coefficients are never stored).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar] | None = None):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise PolyError(f"duplicate variable names in {vs}")
        object.__setattr__(self, "variables", vs)
        clean: dict[tuple, Fraction] = {}
        for expo, c in (terms or {}).items():
            e = tuple(int(k) for k in expo)
            if len(e) != len(vs):
                raise PolyError(f"exponent {e} has length {len(e)}, expected {len(vs)}")
            if any(k < 0 for k in e):
                raise PolyError(f"negative exponent in {e}")
            c = _as_rat(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        object.__setattr__(self, "terms", clean)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables: Sequence[str], c) -> "MultiPoly":
        vs = tuple(variables)
        return MultiPoly(vs, {(0,) * len(vs): _as_rat(c)})

    @staticmethod
    def var(variables: Sequence[str], name: str) -> "MultiPoly":
        vs = tuple(variables)
        if name not in vs:
            raise PolyError(f"variable {name!r} not in {vs}")
        e = [0] * len(vs)
        e[vs.index(name)] = 1
        return MultiPoly(vs, {tuple(e): 1})

    # -- bookkeeping ------------------------------------------------------

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    def _check_vars(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise PolyError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(k == 0 for k in e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyError("not a constant polynomial")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
            if not out[e]:
                del out[e]
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_rat(other)
            if not c:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_vars(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
                if not out[e]:
                    del out[e]
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_rat(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self * Fraction(1, 1) * Fraction(c.denominator, c.numerator)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolyError(f"exponent must be a nonnegative integer, got {n!r}")
        out = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ----------------------------------------------------------

    def diff(self, name: str, order: int = 1) -> "MultiPoly":
        if name not in self.variables:
            raise PolyError(f"cannot differentiate in {name!r}: not in {self.variables}")
        i = self.variables.index(name)
        p = self
        for _ in range(order):
            out: dict[tuple, Fraction] = {}
            for e, c in p.terms.items():
                if e[i] == 0:
                    continue
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c * e[i]
            p = MultiPoly(self.variables, out)
        return p

    def grad(self) -> list["MultiPoly"]:
        return [self.diff(v) for v in self.variables]

    # -- evaluation / substitution ------------------------------------------

    def _point(self, point) -> tuple:
        if isinstance(point, Mapping):
            try:
                return tuple(point[v] for v in self.variables)
            except KeyError as k:
                raise PolyError(f"point missing coordinate {k}") from None
        pt = tuple(point)
        if len(pt) != len(self.variables):
            raise PolyError(f"point has {len(pt)} coordinates, expected {len(self.variables)}")
        return pt

    def eval(self, point) -> Fraction:
        """Exact evaluation at a rational point (sequence or name->value map)."""
        pt = [_as_rat(c) for c in self._point(point)]
        total = Fraction(0)
        for e, c in self.terms.items():
            m = c
            for v, k in zip(pt, e):
                if k:
                    m *= v ** k
            total += m
        return total

    def eval_float(self, point) -> float:
        pt = [float(c) for c in self._point(point)]
        total = 0.0
        for e, c in self.terms.items():
            m = float(c)
            for v, k in zip(pt, e):
                if k:
                    m *= v ** k
            total += m
        return total

    def subs(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Substitute polynomials (over a common variable list) for variables.

        Variables absent from `mapping` are kept, re-expressed over the target
        variable list, which is taken from any MultiPoly value in `mapping`
        (all must agree); scalar-only substitution keeps the original list.
        """
        target = None
        for val in mapping.values():
            if isinstance(val, MultiPoly):
                if target is None:
                    target = val.variables
                elif target != val.variables:
                    raise PolyError("substitution images disagree on variable list")
        if target is None:
            target = self.variables
        images: list[MultiPoly] = []
        for v in self.variables:
            if v in mapping:
                val = mapping[v]
                images.append(val if isinstance(val, MultiPoly)
                              else MultiPoly.const(target, val))
            else:
                if v not in target:
                    raise PolyError(f"variable {v!r} not in target list {target}")
                images.append(MultiPoly.var(target, v))
        out = MultiPoly.zero(target)
        for e, c in self.terms.items():
            m = MultiPoly.const(target, c)
            for img, k in zip(images, e):
                if k:
                    m = m * img ** k
            out = out + m
        return out

    def rename(self, variables: Sequence[str]) -> "MultiPoly":
        """Reinterpret over a new variable tuple of the same length (positional)."""
        vs = tuple(variables)
        if len(vs) != len(self.variables):
            raise PolyError("rename requires equal variable count")
        return MultiPoly(vs, dict(self.terms))

    def extend(self, variables: Sequence[str]) -> "MultiPoly":
        """Embed into a larger variable list (must contain current variables)."""
        vs = tuple(variables)
        idx = []
        for v in self.variables:
            if v not in vs:
                raise PolyError(f"extend target {vs} misses {v!r}")
            idx.append(vs.index(v))
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            ee = [0] * len(vs)
            for pos, k in zip(idx, e):
                ee[pos] = k
            out[tuple(ee)] = c
        return MultiPoly(vs, out)

    # -- exact division ------------------------------------------------------

    def divides(self, other: "MultiPoly") -> "MultiPoly | None":
        """Return q with other == self*q, or None.  Single-divisor reduction in
        graded-lex order decides principal-ideal membership exactly."""
        self._check_vars(other)
        if self.is_zero():
            return MultiPoly.zero(self.variables) if other.is_zero() else None

        def key(e):
            return (sum(e), e)

        lead = max(self.terms, key=key)
        lc = self.terms[lead]
        rem = other
        quot: dict[tuple, Fraction] = {}
        while rem.terms:
            e = max(rem.terms, key=key)
            d = tuple(a - b for a, b in zip(e, lead))
            if any(k < 0 for k in d):
                return None
            c = rem.terms[e] / lc
            quot[d] = quot.get(d, Fraction(0)) + c
            rem = rem - self * MultiPoly(self.variables, {d: c})
        return MultiPoly(self.variables, quot)

    # -- export ----------------------------------------------------------------

    def compile_terms(self) -> list[tuple[float, tuple]]:
        """(float coefficient, exponent tuple) pairs for numeric evaluators."""
        return [(float(c), e) for e, c in sorted(self.terms.items())]

    def __repr__(self):
        return f"MultiPoly({self.text()!r})"

    def text(self) -> str:
        """Canonical human/machine-readable form: graded-lex sorted monomials."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)
        parts = []
        for e, c in items:
            factors = []
            for v, k in zip(self.variables, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append(f"{v}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            if parts and not body.startswith("-"):
                parts.append("+ " + body)
            elif parts:
                parts.append("- " + body[1:])
            else:
                parts.append(body)
        return " ".join(parts)

    def primitive_text(self) -> str:
        """Text of the integer-primitive associate (positive leading coefficient)."""
        if not self.terms:
            return "0"
        from math import gcd
        dens = 1
        for c in self.terms.values():
            dens = dens * c.denominator // gcd(dens, c.denominator)
        nums = 0
        for c in self.terms.values():
            nums = gcd(nums, abs(c.numerator * (dens // c.denominator)))
        scale = Fraction(dens, nums)
        lead = max(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))[1]
        if lead < 0:
            scale = -scale
        return (self * scale).text()


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")


def _tokenize(s: str) -> list[str]:
    out, pos = [], 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise PolyError(f"cannot tokenize {s[pos:]!r}")
            break
        out.append("^" if m.group(1) == "**" else m.group(1))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent for +,-,*,/,^ with integer literals and variables."""

    def __init__(self, tokens: list[str], variables: Sequence[str]):
        self.toks = tokens
        self.i = 0
        self.vars = tuple(variables)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expr(self) -> MultiPoly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        node = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> MultiPoly:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                node = node * rhs
            else:
                if not rhs.is_constant():
                    raise PolyError("division only by nonzero constants")
                c = rhs.constant_value()
                if not c:
                    raise PolyError("division by zero")
                node = node * Fraction(1) / c
        return node

    def factor(self) -> MultiPoly:
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            return self.factor() * sign
        node = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.take()
            if e == "(":
                inner = self.expr()
                if self.take() != ")":
                    raise PolyError("unbalanced parentheses in exponent")
                if not inner.is_constant():
                    raise PolyError("exponent must be an integer")
                e = str(inner.constant_value())
            if e is None or not e.isdigit():
                raise PolyError(f"exponent must be a nonnegative integer, got {e!r}")
            node = node ** int(e)
        return node

    def atom(self) -> MultiPoly:
        t = self.take()
        if t is None:
            raise PolyError("unexpected end of expression")
        if t == "(":
            node = self.expr()
            if self.take() != ")":
                raise PolyError("unbalanced parentheses")
            return node
        if t.isdigit():
            return MultiPoly.const(self.vars, int(t))
        if t in self.vars:
            return MultiPoly.var(self.vars, t)
        raise PolyError(f"unknown symbol {t!r} (variables: {', '.join(self.vars)})")


def parse_poly(s: str, variables: Sequence[str]) -> MultiPoly:
    """Parse e.g. "x1*z1^3/3 - 2*x2" over the given variable list."""
    p = _Parser(_tokenize(s), variables)
    node = p.expr()
    if p.peek() is not None:
        raise PolyError(f"trailing input at {p.peek()!r}")
    return node


def det(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact determinant of a square matrix of MultiPoly (cofactor expansion)."""
    n = len(rows)
    if n == 0:
        raise PolyError("empty matrix")
    for r in rows:
        if len(r) != n:
            raise PolyError("matrix is not square")
    if n == 1:
        return rows[0][0]
    vs = rows[0][0].variables
    out = MultiPoly.zero(vs)
    for j in range(n):
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def rat_matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank, ncol = 0, len(m[0])
    for col in range(ncol):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
