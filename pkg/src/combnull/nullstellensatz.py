"""Witness search for the Combinatorial Nullstellensatz over Z_m grids.

The theorem: if deg(P) = k_1 + ... + k_n, the coefficient of
x_1^k_1 ... x_n^k_n is nonzero, and |A_i| >= k_i + 1 for finite sets A_i,
then P is nonzero somewhere on A_1 x ... x A_n.  Over a non-prime modulus
the same argument goes through as long as no within-set difference is a
zero divisor.

`check_hypotheses` reports the four hypotheses clause by clause,
`find_witness` turns the inductive proof into a deterministic search, and
`brute_force_witness` is the independent oracle that simply scans the grid.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    HypothesesViolated,
    InternalContradiction,
    RingMismatch,
    ShapeMismatch,
)
from .poly import Polynomial
from .ring import Element, Ring


class Grid:
    """Per-variable finite sets A_0..A_{n-1}; the domain is their product.

    Each set is stored sorted ascending by residue; empty sets and
    duplicates are rejected.  ``zero_divisor_safe`` is computed eagerly:
    True iff no difference of two distinct elements within a set is a zero
    divisor (vacuously true when the modulus is prime).
    """

    __slots__ = ("ring", "sets", "zero_divisor_safe")

    def __init__(self, ring: Ring, sets):
        converted = []
        for i, group in enumerate(sets):
            elems = []
            for v in group:
                if isinstance(v, Element):
                    if v.ring.modulus != ring.modulus:
                        raise RingMismatch(f"grid set {i} has an element outside Z_{ring.modulus}")
                    elems.append(v)
                else:
                    elems.append(ring.element(v))
            if not elems:
                raise ValueError(f"grid set {i} is empty")
            residues = [e.residue for e in elems]
            if len(set(residues)) != len(residues):
                raise ValueError(f"grid set {i} contains duplicate residues")
            elems.sort(key=lambda e: e.residue)
            converted.append(tuple(elems))
        if not converted:
            raise ValueError("grid needs at least one variable set")
        self.ring = ring
        self.sets = tuple(converted)
        self.zero_divisor_safe = self._safe()

    def _safe(self) -> bool:
        if self.ring.is_prime:
            return True
        m = self.ring.modulus
        for group in self.sets:
            residues = [e.residue for e in group]
            for a, b in itertools.combinations(residues, 2):
                if math.gcd(a - b, m) > 1:
                    return False
        return True

    @property
    def arity(self) -> int:
        return len(self.sets)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    def points(self):
        """All grid points in lexicographic order."""
        return itertools.product(*self.sets)

    def slice_points(self, index: int, element: Element):
        """Grid points with x_index pinned to `element`, lexicographic."""
        pinned = self.sets[:index] + ((element,),) + self.sets[index + 1 :]
        return itertools.product(*pinned)

    def without(self, index: int, element: Element) -> Grid:
        """A new grid with `element` removed from set `index`."""
        reduced = tuple(e for e in self.sets[index] if e.residue != element.residue)
        new_sets = self.sets[:index] + (reduced,) + self.sets[index + 1 :]
        return Grid(self.ring, new_sets)

    def __repr__(self) -> str:
        shown = [[e.residue for e in group] for group in self.sets]
        return f"Grid({shown} mod {self.ring.modulus})"


@dataclass(frozen=True)
class CNInstance:
    """A polynomial, a target exponent vector, and a grid of the same arity."""

    poly: Polynomial
    k: tuple[int, ...]
    grid: Grid

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(self.k))
        if any(not isinstance(ki, int) or ki < 0 for ki in self.k):
            raise ShapeMismatch(f"target exponents must be non-negative ints: {self.k}")
        if not (self.poly.arity == len(self.k) == self.grid.arity):
            raise ShapeMismatch(
                f"arity mismatch: poly {self.poly.arity}, k {len(self.k)}, "
                f"grid {self.grid.arity}"
            )
        if self.poly.ring.modulus != self.grid.ring.modulus:
            raise RingMismatch(
                f"poly over Z_{self.poly.ring.modulus}, grid over Z_{self.grid.ring.modulus}"
            )


@dataclass(frozen=True)
class HypothesisReport:
    degree_ok: bool
    coefficient_ok: bool
    sizes_ok: bool
    ring_ok: bool

    @property
    def overall(self) -> bool:
        return self.degree_ok and self.coefficient_ok and self.sizes_ok and self.ring_ok

    def as_dict(self) -> dict:
        return {
            "degree_ok": self.degree_ok,
            "coefficient_ok": self.coefficient_ok,
            "sizes_ok": self.sizes_ok,
            "ring_ok": self.ring_ok,
            "overall": self.overall,
        }


@dataclass(frozen=True)
class Witness:
    """A grid point with a nonzero value, plus how deep the search recursed."""

    point: tuple[Element, ...]
    value: Element
    recursion_depth: int

    def residues(self) -> tuple[int, ...]:
        return tuple(e.residue for e in self.point)


def check_hypotheses(inst: CNInstance) -> HypothesisReport:
    """Report the four hypotheses; never raises.

    degree_ok: total degree equals sum(k) (the zero polynomial fails).
    coefficient_ok: the coefficient at k is nonzero.
    sizes_ok: |A_i| >= k_i + 1 for every i.
    ring_ok: no within-set difference is a zero divisor.
    """
    total = inst.poly.total_degree()
    return HypothesisReport(
        degree_ok=total is not None and total == sum(inst.k),
        coefficient_ok=bool(inst.poly.coefficient(inst.k)),
        sizes_ok=all(
            len(s) >= ki + 1 for s, ki in zip(inst.grid.sets, inst.k)
        ),
        ring_ok=inst.grid.zero_divisor_safe,
    )


def find_witness(inst: CNInstance) -> Witness:
    """A grid point where the polynomial is nonzero, found by the inductive argument.

    Deterministic rules: recurse on the smallest index with k_i > 0, pin
    the smallest element a of A_i, and scan slices lexicographically.  If
    the slice x_i = a vanishes identically, so does the division remainder
    (it is x_i-free), so any witness of the quotient on the shrunken grid
    lifts through P = (x_i - a)Q + R; the lift is re-evaluated and verified
    at every level.

    Raises HypothesesViolated if the instance fails check_hypotheses, and
    InternalContradiction if a step the theorem guarantees fails (a bug).
    """
    report = check_hypotheses(inst)
    if not report.overall:
        raise HypothesesViolated(f"hypotheses fail: {report.as_dict()}")
    return _search(inst.poly, inst.k, inst.grid, 0)


def _search(poly: Polynomial, k: tuple[int, ...], grid: Grid, depth: int) -> Witness:
    if all(ki == 0 for ki in k):
        # poly is a nonzero constant here; any grid point works.
        point = tuple(group[0] for group in grid.sets)
        value = poly.evaluate(point)
        if not value:
            raise InternalContradiction("constant case evaluated to zero")
        return Witness(point, value, depth)

    index = next(i for i, ki in enumerate(k) if ki)
    pivot = grid.sets[index][0]
    for point in grid.slice_points(index, pivot):
        value = poly.evaluate(point)
        if value:
            return Witness(tuple(point), value, depth)

    # The whole slice x_index = pivot vanished; divide and recurse.
    division = poly.divide_by_linear(index, pivot)
    shrunk_k = k[:index] + (k[index] - 1,) + k[index + 1 :]
    inner = _search(
        division.quotient, shrunk_k, grid.without(index, pivot), depth + 1
    )
    value = poly.evaluate(inner.point)
    if not value:
        raise InternalContradiction("quotient witness did not lift to the dividend")
    return Witness(inner.point, value, inner.recursion_depth)


def brute_force_witness(poly: Polynomial, grid: Grid) -> Witness | None:
    """Lexicographically first nonvanishing grid point, or None.

    Independent of the division-based search; used as its oracle.
    """
    if poly.arity != grid.arity:
        raise ShapeMismatch(f"poly arity {poly.arity} != grid arity {grid.arity}")
    if poly.ring.modulus != grid.ring.modulus:
        raise RingMismatch(
            f"poly over Z_{poly.ring.modulus}, grid over Z_{grid.ring.modulus}"
        )
    for point in grid.points():
        value = poly.evaluate(point)
        if value:
            return Witness(tuple(point), value, 0)
    return None


def vanishes_on_grid(poly: Polynomial, grid: Grid) -> bool:
    """True iff the polynomial is zero at every grid point."""
    return brute_force_witness(poly, grid) is None
