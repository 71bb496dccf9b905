"""Exact residue arithmetic in Z_m for m >= 2.

Residues are stored canonically in [0, m): every constructor and every
operation reduces, so structural equality coincides with ring equality.
"""

from __future__ import annotations

import math

from .errors import InvalidModulus, RingMismatch


def is_prime(n: int) -> bool:
    """Trial division; the moduli in scope are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Ring:
    """The ring Z_m, with primality decided once at construction."""

    __slots__ = ("modulus", "is_prime")

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise InvalidModulus(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.is_prime = is_prime(modulus)

    def element(self, value: int) -> Element:
        return Element(value % self.modulus, self)

    @property
    def zero(self) -> Element:
        return Element(0, self)

    @property
    def one(self) -> Element:
        return Element(1, self)

    def elements(self) -> list[Element]:
        """All residues 0..m-1, ascending."""
        return [Element(r, self) for r in range(self.modulus)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("Ring", self.modulus))

    def __repr__(self) -> str:
        return f"Ring({self.modulus})"


class Element:
    """A canonical residue tied to its ring.

    Arithmetic accepts another Element of the same ring, or a plain int
    (reduced on the spot).  Mixing moduli raises RingMismatch.
    """

    __slots__ = ("residue", "ring")

    def __init__(self, residue: int, ring: Ring):
        self.residue = residue % ring.modulus
        self.ring = ring

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.ring.modulus != self.ring.modulus:
                raise RingMismatch(
                    f"mixed moduli {self.ring.modulus} and {other.ring.modulus}"
                )
            return other.residue
        if isinstance(other, int):
            return other % self.ring.modulus
        return None

    def __add__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Element((self.residue + r) % self.ring.modulus, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Element((self.residue - r) % self.ring.modulus, self.ring)

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Element((r - self.residue) % self.ring.modulus, self.ring)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is None:
            return NotImplemented
        return Element(self.residue * r % self.ring.modulus, self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return Element(-self.residue % self.ring.modulus, self.ring)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponents are not defined in Z_m")
        return Element(pow(self.residue, exponent, self.ring.modulus), self.ring)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return (
                self.residue == other.residue
                and self.ring.modulus == other.ring.modulus
            )
        if isinstance(other, int):
            return self.residue == other % self.ring.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.ring.modulus))

    def __repr__(self) -> str:
        return f"{self.residue} (mod {self.ring.modulus})"

    def is_zero_divisor(self) -> bool:
        """True iff the residue is nonzero and shares a factor with m.

        Zero itself is reported as *not* a zero divisor: the callers that
        care test differences of distinct elements, which are never zero.
        """
        return self.residue != 0 and math.gcd(self.residue, self.ring.modulus) > 1


def binom_mod(n: int, k: int, ring: Ring) -> Element:
    """Binomial coefficient C(n, k) reduced into the ring.

    Computed by Pascal's rule with every addition done on residues, so it
    is valid over any Z_m and never builds a large integer.  Out-of-range
    k (k < 0 or k > n) gives zero, matching the usual convention.
    """
    if n < 0:
        raise ValueError(f"row index must be non-negative, got {n}")
    if k < 0 or k > n:
        return ring.zero
    m = ring.modulus
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = (row[j] + row[j - 1]) % m
    return ring.element(row[k])
