"""Sparse multivariate polynomials over Z_m.

A polynomial of arity n maps exponent vectors (length-n tuples of
non-negative ints) to nonzero residues; the zero polynomial is the empty
map.  Coefficients are reduced into [0, m) and zero terms pruned at every
operation, so structural equality is mathematical equality.

The module also owns the text form used by the CLI:

    expr   := ['-'] term (('+'|'-') term)* ;
    term   := factor ('*' factor)* ;
    factor := base ['^' uint] ;
    base   := uint | var | '(' expr ')' ;
    var    := letter (letter|digit|'_')* ;

Whitespace is insignificant.  Coefficient literals are reduced mod m while
parsing.  Variable order is the explicit list when one is given, otherwise
first appearance in the text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, RingMismatch, ShapeMismatch
from .ring import Element, Ring

# An exponent vector; its length always equals the owning polynomial's arity.
Monomial = tuple


class Polynomial:
    """Immutable sparse polynomial with a fixed ring and arity (n >= 1).

    ``terms`` maps exponent tuples to canonical int residues; treat it as
    read-only.  Coefficient lookups through :meth:`coefficient` return ring
    elements.
    """

    __slots__ = ("ring", "arity", "terms")

    def __init__(self, ring: Ring, arity: int, terms: Mapping | None = None):
        if arity < 1:
            raise ShapeMismatch(f"arity must be >= 1, got {arity}")
        m = ring.modulus
        clean: dict[tuple, int] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != arity:
                raise ShapeMismatch(
                    f"exponent vector {mono} has length {len(mono)}, expected {arity}"
                )
            if any(not isinstance(e, int) or e < 0 for e in mono):
                raise ShapeMismatch(f"exponents must be non-negative ints: {mono}")
            if isinstance(coeff, Element):
                if coeff.ring.modulus != m:
                    raise RingMismatch(
                        f"coefficient modulus {coeff.ring.modulus} != {m}"
                    )
                c = coeff.residue
            else:
                c = coeff % m
            if c:
                clean[mono] = c
        self.ring = ring
        self.arity = arity
        self.terms = clean

    @classmethod
    def _raw(cls, ring: Ring, arity: int, terms: dict) -> Polynomial:
        # Internal: terms already canonical, skip validation.
        p = object.__new__(cls)
        p.ring = ring
        p.arity = arity
        p.terms = terms
        return p

    @classmethod
    def zero(cls, ring: Ring, arity: int) -> Polynomial:
        return cls(ring, arity, {})

    @classmethod
    def constant(cls, ring: Ring, arity: int, value) -> Polynomial:
        return cls(ring, arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, ring: Ring, arity: int, index: int) -> Polynomial:
        """The polynomial x_index (0-based)."""
        if not 0 <= index < arity:
            raise ShapeMismatch(f"variable index {index} out of range for arity {arity}")
        mono = tuple(1 if j == index else 0 for j in range(arity))
        return cls(ring, arity, {mono: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring.modulus != self.ring.modulus:
                raise RingMismatch(
                    f"mixed moduli {self.ring.modulus} and {other.ring.modulus}"
                )
            if other.arity != self.arity:
                raise ShapeMismatch(f"mixed arities {self.arity} and {other.arity}")
            return other
        if isinstance(other, (int, Element)):
            return Polynomial.constant(self.ring, self.arity, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self.ring.modulus
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = (out.get(mono, 0) + c) % m
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return Polynomial._raw(self.ring, self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        m = self.ring.modulus
        return Polynomial._raw(
            self.ring, self.arity, {mono: m - c for mono, c in self.terms.items()}
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m = self.ring.modulus
        out: dict[tuple, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2 % m
                if not c:
                    continue
                key = tuple(a + b for a, b in zip(m1, m2))
                s = (out.get(key, 0) + c) % m
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return Polynomial._raw(self.ring, self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponents are not defined for polynomials")
        result = Polynomial.constant(self.ring, self.arity, 1)
        base = self
        e = exponent
        while e > 0:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring.modulus == other.ring.modulus
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(
            (self.ring.modulus, self.arity, frozenset(self.terms.items()))
        )

    def __repr__(self) -> str:
        names = [f"x{i}" for i in range(self.arity)]
        return f"Polynomial({format_polynomial(self, names)} mod {self.ring.modulus})"

    def total_degree(self) -> int | None:
        """Max total degree over stored monomials; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(mono) for mono in self.terms)

    def degree_in(self, index: int) -> int:
        """Largest exponent of variable `index`; 0 for the zero polynomial."""
        if not 0 <= index < self.arity:
            raise ShapeMismatch(f"variable index {index} out of range for arity {self.arity}")
        return max((mono[index] for mono in self.terms), default=0)

    def coefficient(self, mono: Iterable[int]) -> Element:
        """Stored coefficient of the exponent vector, or ring zero if absent."""
        mono = tuple(mono)
        if len(mono) != self.arity:
            raise ShapeMismatch(
                f"exponent vector {mono} has length {len(mono)}, expected {self.arity}"
            )
        return self.ring.element(self.terms.get(mono, 0))

    def evaluate(self, point: Sequence) -> Element:
        """Exact value at a point (elements of the ring, or plain ints)."""
        if len(point) != self.arity:
            raise ShapeMismatch(
                f"point has length {len(point)}, expected {self.arity}"
            )
        m = self.ring.modulus
        xs = []
        for v in point:
            if isinstance(v, Element):
                if v.ring.modulus != m:
                    raise RingMismatch(f"point entry not in Z_{m}")
                xs.append(v.residue)
            else:
                xs.append(v % m)
        total = 0
        for mono, c in self.terms.items():
            t = c
            for x, e in zip(xs, mono):
                if e:
                    t = t * pow(x, e, m) % m
            total = (total + t) % m
        return self.ring.element(total)

    def divide_by_linear(self, index: int, point) -> DivisionResult:
        """Divide by the monic linear factor (x_index - point).

        The polynomial is read as univariate in x_index with coefficients
        in the remaining variables, and reduced by one round of synthetic
        (Horner) division.  The result satisfies, exactly,

            self == (x_index - point) * quotient + remainder

        with the remainder free of x_index.
        """
        if not 0 <= index < self.arity:
            raise ShapeMismatch(f"variable index {index} out of range for arity {self.arity}")
        m = self.ring.modulus
        if isinstance(point, Element):
            if point.ring.modulus != m:
                raise RingMismatch(f"division point not in Z_{m}")
            a = point.residue
        else:
            a = point % m

        # Bucket terms by their x_index exponent, zeroing it in the key.
        levels: dict[int, dict[tuple, int]] = {}
        for mono, c in self.terms.items():
            rest = mono[:index] + (0,) + mono[index + 1 :]
            levels.setdefault(mono[index], {})[rest] = c
        top = max(levels) if levels else 0
        if top == 0:
            return DivisionResult(
                Polynomial._raw(self.ring, self.arity, {}),
                self,
                index,
                self.ring.element(a),
            )

        def fold(acc: dict[tuple, int], carry: dict[tuple, int]) -> None:
            # acc += a * carry, pruning zeros
            for rest, c in carry.items():
                s = (acc.get(rest, 0) + a * c) % m
                if s:
                    acc[rest] = s
                elif rest in acc:
                    del acc[rest]

        quotient: dict[tuple, int] = {}

        def emit(level_terms: dict[tuple, int], e: int) -> None:
            for rest, c in level_terms.items():
                quotient[rest[:index] + (e,) + rest[index + 1 :]] = c

        carry = dict(levels[top])  # quotient coefficient at x_index-degree top-1
        emit(carry, top - 1)
        for t in range(top - 1, 0, -1):
            nxt = dict(levels.get(t, {}))
            if a:
                fold(nxt, carry)
            carry = nxt
            emit(carry, t - 1)
        remainder = dict(levels.get(0, {}))
        if a:
            fold(remainder, carry)
        return DivisionResult(
            Polynomial._raw(self.ring, self.arity, quotient),
            Polynomial._raw(self.ring, self.arity, remainder),
            index,
            self.ring.element(a),
        )


@dataclass(frozen=True)
class DivisionResult:
    """Quotient and remainder of division by (x_var_index - point)."""

    quotient: Polynomial
    remainder: Polynomial
    var_index: int
    point: Element


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("uint", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("var", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens, ring: Ring, variables: Sequence[str]):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.index = {name: i for i, name in enumerate(variables)}
        self.arity = len(variables)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", pos)
        return poly

    def expr(self) -> Polynomial:
        negate = self.peek()[0] == "-"
        if negate:
            self.advance()
        poly = self.term()
        if negate:
            poly = -poly
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            poly = poly * self.factor()
        return poly

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.advance()
            kind, text, pos = self.peek()
            if kind != "uint":
                raise ParseError("expected an exponent", pos)
            self.advance()
            base = base ** int(text)
        return base

    def base(self) -> Polynomial:
        kind, text, pos = self.advance()
        if kind == "uint":
            return Polynomial.constant(self.ring, self.arity, int(text))
        if kind == "var":
            idx = self.index.get(text)
            if idx is None:
                raise ParseError(f"unknown variable {text!r}", pos)
            return Polynomial.variable(self.ring, self.arity, idx)
        if kind == "(":
            poly = self.expr()
            kind2, _, pos2 = self.peek()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            self.advance()
            return poly
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {text!r}", pos)


def discover_variables(text: str) -> list[str]:
    """Variable names in first-appearance order."""
    seen: list[str] = []
    for kind, tok, _ in _tokenize(text):
        if kind == "var" and tok not in seen:
            seen.append(tok)
    return seen


def parse_polynomial(
    text: str, ring: Ring, variables: Sequence[str] | None = None
) -> Polynomial:
    """Parse text into a fully expanded sparse polynomial over the ring.

    With ``variables=None`` the variable list is discovered from the text
    (first appearance); a pure-constant input gets the single variable "x"
    so the arity is at least 1.  With an explicit list, names not on the
    list are rejected and the arity is the list's length even for unused
    names.
    """
    tokens = _tokenize(text)
    if variables is None:
        variables = discover_variables(text) or ["x"]
    else:
        variables = list(variables)
        if not variables:
            raise ShapeMismatch("variable list must not be empty")
        if len(set(variables)) != len(variables):
            raise ShapeMismatch(f"duplicate variable names in {variables}")
    return _Parser(tokens, ring, variables).parse()


def format_polynomial(poly: Polynomial, variables: Sequence[str]) -> str:
    """Canonical text: graded-lexicographic descending, coefficients in [0, m).

    A unit coefficient is omitted on nonconstant terms.  The zero
    polynomial formats as "0".  The output is valid input for
    :func:`parse_polynomial` with the same variable list.
    """
    if len(variables) != poly.arity:
        raise ShapeMismatch(
            f"{len(variables)} names given for arity {poly.arity}"
        )
    if not poly.terms:
        return "0"
    parts = []
    for mono in sorted(poly.terms, key=lambda mm: (sum(mm), mm), reverse=True):
        c = poly.terms[mono]
        factors = []
        for name, e in zip(variables, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(str(c) + "*" + "*".join(factors))
    return " + ".join(parts)
