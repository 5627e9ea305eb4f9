"""Sparse multivariate polynomials over the integers.

Polynomials are stored as a map from monomials to nonzero arbitrary-precision
integer coefficients.  Everything here is immutable and pure, so values can be
shared freely between threads.  The module also provides the resultant and
discriminant machinery needed to build CAD projection sets; resultants are
computed with a subresultant polynomial remainder sequence, staying in the
integer ring throughout.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Mapping

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class Variable:
    """A named variable; compared and ordered byte-wise by name."""

    name: str

    def __post_init__(self) -> None:
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name: {self.name!r}")

    def __hash__(self) -> int:
        return hash(self.name)  # str objects cache their hash

    def __str__(self) -> str:
        return self.name


class Monomial:
    """A product of variables with positive integer exponents.

    Exponents are stored as (variable, exponent) pairs sorted by variable
    name; variables with exponent zero are never stored.
    """

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[Variable, int] | Iterable[tuple[Variable, int]]):
        items = exps.items() if isinstance(exps, dict) else exps
        cleaned = []
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent in monomial")
            if e > 0:
                cleaned.append((v, e))
        cleaned.sort(key=lambda it: it[0])
        self.exps: tuple[tuple[Variable, int], ...] = tuple(cleaned)
        self._hash = hash(self.exps)

    @classmethod
    def _make(cls, exps: tuple[tuple[Variable, int], ...]) -> "Monomial":
        """Fast constructor; exps must already be sorted, positive, unique."""
        m = object.__new__(cls)
        m.exps = exps
        m._hash = hash(exps)
        return m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.exps:
            return "Monomial(1)"
        return "Monomial(" + "*".join(f"{v}^{e}" for v, e in self.exps) + ")"

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self.exps)

    def degree_in(self, v: Variable) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def variables(self) -> frozenset[Variable]:
        return frozenset(v for v, _ in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        a, b = self.exps, other.exps
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            va, ea = a[i]
            vb, eb = b[j]
            if va.name == vb.name:
                out.append((va, ea + eb))
                i += 1
                j += 1
            elif va.name < vb.name:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._make(tuple(out))

    def divide_by(self, other: "Monomial") -> "Monomial | None":
        """Exact monomial quotient, or None when not divisible."""
        d = dict(self.exps)
        for v, e in other.exps:
            r = d.get(v, 0) - e
            if r < 0:
                return None
            if r == 0:
                d.pop(v, None)
            else:
                d[v] = r
        return Monomial(d)

    def without(self, v: Variable) -> "Monomial":
        return Monomial([(w, e) for w, e in self.exps if w != v])

    def grlex_key(self, var_order: tuple[Variable, ...]) -> tuple:
        """Sort key for graded lexicographic order over ``var_order``."""
        d = dict(self.exps)
        return (self.total_degree, tuple(d.get(v, 0) for v in var_order))


_ONE_MONOMIAL = Monomial(())


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int]):
        self._terms = {m: c for m, c in terms.items() if c != 0}
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial({})

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial({_ONE_MONOMIAL: c})

    @staticmethod
    def variable(v: Variable) -> "Polynomial":
        return Polynomial({Monomial([(v, 1)]): 1})

    # -- basic protocol ----------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m.total_degree == 0 for m in self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self._terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def variables(self) -> frozenset[Variable]:
        out: set[Variable] = set()
        for m in self._terms:
            out.update(m.variables())
        return frozenset(out)

    def degree_in(self, v: Variable) -> int:
        """Maximum exponent of ``v`` over all terms; 0 for the zero polynomial."""
        return max((m.degree_in(v) for m in self._terms), default=0)

    def total_degree(self) -> int:
        """Maximum monomial total degree; 0 for the zero polynomial."""
        return max((m.total_degree for m in self._terms), default=0)

    def coefficients_wrt(self, v: Variable) -> list["Polynomial"]:
        """Coefficient polynomials of v^0 .. v^deg, none involving ``v``."""
        deg = self.degree_in(v)
        buckets: list[dict[Monomial, int]] = [{} for _ in range(deg + 1)]
        for m, c in self._terms.items():
            buckets[m.degree_in(v)][m.without(v)] = c
        return [Polynomial(b) for b in buckets]

    def derivative(self, v: Variable) -> "Polynomial":
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            e = m.degree_in(v)
            if e == 0:
                continue
            dm = Monomial([(w, k - 1 if w == v else k) for w, k in m.exps])
            out[dm] = out.get(dm, 0) + c * e
        return Polynomial(out)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending graded-lex order over this polynomial's variables."""
        var_order = tuple(sorted(self.variables()))
        return sorted(
            self._terms.items(),
            key=lambda it: it[0].grlex_key(var_order),
            reverse=True,
        )

    def leading_coefficient(self) -> int:
        """Coefficient of the graded-lex-leading term; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return self.sorted_terms()[0][1]

    def content(self) -> int:
        """Gcd of the absolute coefficient values; 0 for the zero polynomial."""
        return reduce(math.gcd, (abs(c) for c in self._terms.values()), 0)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for m, c in self.sorted_terms():
            factors = [f"{v}^{e}" if e > 1 else str(v) for v, e in m.exps]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(("- " if c < 0 else "+ ") + body)
        return " ".join(chunks)


def canonicalize(p: Polynomial) -> Polynomial:
    """Divide out the integer content and make the leading coefficient positive."""
    if p.is_zero():
        return p
    c = p.content()
    if p.leading_coefficient() < 0:
        c = -c
    return Polynomial({m: coeff // c for m, coeff in p.terms.items()})


def exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    """Exact polynomial quotient p / d; raises when the division is inexact."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return Polynomial.zero()
    var_order = tuple(sorted(p.variables() | d.variables()))
    lm_d, lc_d = max(
        d.terms.items(), key=lambda it: it[0].grlex_key(var_order)
    )
    quotient: dict[Monomial, int] = {}
    r = p
    while not r.is_zero():
        lm_r, lc_r = max(
            r.terms.items(), key=lambda it: it[0].grlex_key(var_order)
        )
        qm = lm_r.divide_by(lm_d)
        if qm is None or lc_r % lc_d != 0:
            raise ArithmeticError("inexact polynomial division")
        qc = lc_r // lc_d
        quotient[qm] = quotient.get(qm, 0) + qc
        r = r - Polynomial({qm: qc}) * d
    return Polynomial(quotient)


# -- resultants ------------------------------------------------------------


def _coeff_list(p: Polynomial, v: Variable) -> list[Polynomial]:
    """Dense coefficient list of p in v, trailing zeros trimmed."""
    coeffs = p.coefficients_wrt(v)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _trim(coeffs: list[Polynomial]) -> list[Polynomial]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _prem(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    """Pseudo-remainder of dense coefficient lists: lc(b)^(da-db+1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = list(a)
    e = da - db + 1
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lcr = r[-1]
        r = [lc * c for c in r]
        for i, bc in enumerate(b):
            r[i + dr - db] = r[i + dr - db] - lcr * bc
        r = _trim(r)
        e -= 1
    if e > 0:
        f = lc**e
        r = [f * c for c in r]
    return r


def resultant(p: Polynomial, q: Polynomial, v: Variable) -> Polynomial:
    """Resultant of p and q with respect to v (Sylvester determinant).

    Computed by the subresultant polynomial remainder sequence, so all
    intermediate values stay in the integer ring.  Conventions for degenerate
    degrees: deg(p)=deg(q)=0 gives 1, and a degree-0 operand c paired with a
    degree-d operand gives c^d.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("zero operand")
    dp, dq = p.degree_in(v), q.degree_in(v)
    if dp == 0 and dq == 0:
        return Polynomial.constant(1)
    if dq == 0:
        return q**dp
    if dp == 0:
        return p**dq

    a, b = _coeff_list(p, v), _coeff_list(q, v)
    sign = 1
    if dp < dq:
        a, b = b, a
        if dp % 2 == 1 and dq % 2 == 1:
            sign = -sign

    one = Polynomial.constant(1)
    g, h = one, one
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _prem(a, b)
        a = b
        denom = g * h**delta
        b = [exact_div(c, denom) for c in r]
        if not b:
            return Polynomial.zero()
        g = a[-1]
        if delta > 0:
            h = exact_div(g**delta, h ** (delta - 1))
        if len(b) - 1 == 0:
            break

    da = len(a) - 1
    res = exact_div(b[0] ** da, h ** (da - 1))
    return res if sign > 0 else -res


def discriminant(p: Polynomial, v: Variable) -> Polynomial:
    """resultant(p, dp/dv, v); requires degree >= 2 in v.

    Differs from the classical discriminant by a unit times the leading
    coefficient, which is irrelevant once projection factors are
    canonicalized.
    """
    if p.degree_in(v) < 2:
        raise ValueError("degree too low for discriminant")
    return resultant(p, p.derivative(v), v)


# -- polynomial systems ------------------------------------------------------


@dataclass(frozen=True)
class PolySystem:
    """An input system: its variables in canonical name order, plus the
    deduplicated list of nonzero polynomials."""

    variables: tuple[Variable, ...]
    polynomials: tuple[Polynomial, ...]

    @staticmethod
    def make(
        polynomials: Iterable[Polynomial],
        variables: Iterable[Variable] | None = None,
    ) -> "PolySystem":
        polys: list[Polynomial] = []
        for p in polynomials:
            if p.is_zero():
                raise ValueError("zero polynomial in system")
            if p not in polys:
                polys.append(p)
        occurring: set[Variable] = set()
        for p in polys:
            occurring.update(p.variables())
        if variables is None:
            vs = tuple(sorted(occurring))
        else:
            vs = tuple(sorted(set(variables)))
            missing = occurring - set(vs)
            if missing:
                names = ", ".join(sorted(v.name for v in missing))
                raise ValueError(f"undeclared variables in system: {names}")
        return PolySystem(vs, tuple(polys))

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polynomials)
