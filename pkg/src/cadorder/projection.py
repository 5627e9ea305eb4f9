"""McCallum-style projection: build the full set of projection polynomials
for a given variable ordering.

Orderings are written as tuples in the reverse order of projection: the last
tuple element is eliminated first, and the first element is the variable of
the final univariate level.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .poly import Polynomial, PolySystem, Variable, canonicalize, discriminant, resultant

VariableOrdering = tuple[Variable, ...]


def format_ordering(ordering: Sequence[Variable]) -> str:
    return ">".join(v.name for v in ordering)


def parse_ordering(text: str) -> VariableOrdering:
    """Parse a '>'-joined ordering such as ``x>y>z``."""
    names = text.split(">")
    ordering = tuple(Variable(name.strip()) for name in names)
    if len(set(ordering)) != len(ordering):
        raise ValueError(f"repeated variable in ordering {text!r}")
    return ordering


@dataclass(frozen=True)
class ProjectionSet:
    """Leveled projection polynomials; levels[0] is level n (the input) and
    levels[-1] is level 1 (univariate in ordering[0], or empty)."""

    ordering: VariableOrdering
    levels: tuple[tuple[Polynomial, ...], ...]

    def level(self, k: int) -> tuple[Polynomial, ...]:
        """Level by its 1-based index k in n..1."""
        return self.levels[len(self.levels) - k]


def reduce_level(polys: Iterable[Polynomial]) -> tuple[Polynomial, ...]:
    """Canonicalize, drop constants and zeros, deduplicate, sort deterministically."""
    out: list[Polynomial] = []
    for p in polys:
        p = canonicalize(p)
        if p.is_zero() or p.is_constant():
            continue
        if p not in out:
            out.append(p)
    return tuple(sorted(out, key=str))


def _project(level: Sequence[Polynomial], v: Variable) -> tuple[Polynomial, ...]:
    produced: list[Polynomial] = []
    involving = []
    for p in level:
        if p.degree_in(v) == 0:
            produced.append(p)  # pass through untouched by elimination
        else:
            involving.append(p)
    for p in involving:
        produced.extend(p.coefficients_wrt(v))
        if p.degree_in(v) >= 2:
            produced.append(discriminant(p, v))
    for p, q in combinations(involving, 2):
        produced.append(resultant(p, q, v))
    return reduce_level(produced)


def project_once(level: Iterable[Polynomial], v: Variable) -> tuple[Polynomial, ...]:
    """Single projection step eliminating v: pass-through of members free of
    v, all coefficients, discriminants of degree >= 2 members, and pairwise
    resultants; reduced afterwards."""
    members = list(level)
    if not members:
        raise ValueError("empty level")
    return _project(members, v)


def full_projection(system: PolySystem, ordering: Sequence[Variable]) -> ProjectionSet:
    """Project the system level by level down to a univariate level."""
    ordering = tuple(ordering)
    if sorted(ordering) != list(system.variables):
        raise ValueError(
            f"ordering {format_ordering(ordering)} is not a permutation of the "
            f"system variables {{{', '.join(v.name for v in system.variables)}}}"
        )
    levels = [reduce_level(system.polynomials)]
    for k in range(len(ordering), 1, -1):
        current = levels[-1]
        if not current:
            levels.append(())
        else:
            levels.append(_project(current, ordering[k - 1]))
    return ProjectionSet(ordering, tuple(levels))
