"""Restricted sumsets over Z_p and the Erdos-Heilbronn bound.

For nonempty A, B in Z_p (p prime) the restricted sumset is
C = {a + b : a in A, b in B, a != b}, and |C| >= min(p, |A| + |B| - 3).
This module computes C, verifies the bound instance by instance and in
exhaustive or seeded-sample sweeps, and exposes both halves of the
argument behind the bound: the two-common-elements construction when the
bound clamps at p, and the polynomial certificate (a Nullstellensatz
witness for prod_{d in D}(x + y - d) * (x - y)) when it does not.

Subsets of Z_p are plain sorted tuples of int residues here; ring elements
appear only at the polynomial boundary.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import (
    HypothesesViolated,
    InternalContradiction,
    PreconditionViolated,
)
from .nullstellensatz import CNInstance, Grid, find_witness
from .poly import Polynomial
from .ring import Element, Ring, binom_mod, is_prime

# Exhaustive sweeps iterate (2^p - 1)^2 subset pairs; cap where that stays
# a desk-scale computation.
EXHAUSTIVE_PRIME_LIMIT = 13


def _validated_subset(p, values, label, allow_empty=False):
    residues = [v % p for v in values]
    if not residues and not allow_empty:
        raise PreconditionViolated(f"{label} must be non-empty")
    if len(set(residues)) != len(residues):
        raise PreconditionViolated(f"{label} contains duplicate residues mod {p}")
    return tuple(sorted(residues))


def _require_prime(p):
    if not is_prime(p):
        raise PreconditionViolated(f"modulus {p} is not prime")


@dataclass(frozen=True)
class SumsetInstance:
    """A prime p and two nonempty subsets of Z_p, stored sorted."""

    p: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]

    def __post_init__(self):
        _require_prime(self.p)
        object.__setattr__(self, "a_set", _validated_subset(self.p, self.a_set, "A"))
        object.__setattr__(self, "b_set", _validated_subset(self.p, self.b_set, "B"))


@dataclass(frozen=True)
class EHReport:
    p: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    c_set: tuple[int, ...]
    c_size: int
    bound: int
    holds: bool


def restricted_sumset(inst: SumsetInstance) -> tuple[int, ...]:
    """{a + b mod p : a in A, b in B, a != b}, sorted ascending."""
    return _restricted_sumset(inst.p, inst.a_set, inst.b_set)


def _restricted_sumset(p, a_tup, b_tup):
    return tuple(sorted({(a + b) % p for a in a_tup for b in b_tup if a != b}))


def eh_bound(size_a: int, size_b: int, p: int) -> int:
    """min(p, |A| + |B| - 3); may be <= 0, in which case the bound is vacuous."""
    if size_a < 1 or size_b < 1:
        raise PreconditionViolated("set sizes must be >= 1")
    return min(p, size_a + size_b - 3)


def verify_eh(inst: SumsetInstance) -> EHReport:
    """Compute the restricted sumset and compare its size against the bound."""
    return _verify_sets(inst.p, inst.a_set, inst.b_set)


def _verify_sets(p, a_tup, b_tup):
    c = _restricted_sumset(p, a_tup, b_tup)
    bound = min(p, len(a_tup) + len(b_tup) - 3)
    return EHReport(p, a_tup, b_tup, c, len(c), bound, len(c) >= bound)


def verify_full_sumset(inst: SumsetInstance) -> bool:
    """Check the saturated case |A| + |B| - 3 >= p by direct construction.

    For every g in Z_p the sets A and g - B must share at least two
    elements; picking a shared element a != g/2 gives b = g - a in B with
    a != b and a + b = g.  Each step is confirmed, and the restricted
    sumset is independently enumerated and compared against all of Z_p.

    Requires an odd p (the construction divides by 2) and the saturated
    size condition; anything else raises PreconditionViolated.
    """
    p = inst.p
    if p == 2:
        raise PreconditionViolated("p must be an odd prime for the halving step")
    if len(inst.a_set) + len(inst.b_set) - 3 < p:
        raise PreconditionViolated(
            f"|A| + |B| - 3 = {len(inst.a_set) + len(inst.b_set) - 3} < p = {p}"
        )
    inv2 = pow(2, -1, p)
    a_all = set(inst.a_set)
    b_all = set(inst.b_set)
    for g in range(p):
        common = sorted(a_all & {(g - b) % p for b in inst.b_set})
        if len(common) < 2:
            return False
        half = g * inv2 % p
        a = next((x for x in common if x != half), None)
        if a is None:
            return False
        b = (g - a) % p
        if b not in b_all or a == b or (a + b) % p != g:
            return False
    return _restricted_sumset(p, inst.a_set, inst.b_set) == tuple(range(p))


@dataclass(frozen=True)
class ProofPolynomials:
    """D, the product prod_{d in D}(x + y - d), and that product times (x - y)."""

    d_set: tuple[int, ...]
    p_poly: Polynomial
    q_poly: Polynomial


def build_proof_polynomials(d_values, p: int) -> ProofPolynomials:
    """Expand the certificate polynomials over Z_p in the variables (x, y)."""
    _require_prime(p)
    d_set = _validated_subset(p, d_values, "D", allow_empty=True)
    ring = Ring(p)
    prod = Polynomial.constant(ring, 2, 1)
    for d in d_set:
        prod = prod * Polynomial(ring, 2, {(1, 0): 1, (0, 1): 1, (0, 0): -d})
    x_minus_y = Polynomial(ring, 2, {(1, 0): 1, (0, 1): -1})
    return ProofPolynomials(d_set, prod, prod * x_minus_y)


def q_top_coefficient(d_size: int, i: int, p: int) -> Element:
    """Top-degree coefficient of x^i y^(d_size+1-i) in the (x - y) certificate.

    Equals C(d_size, i-1) - C(d_size, i) in Z_p, with C(n, -1) = 0.
    """
    _require_prime(p)
    ring = Ring(p)
    return binom_mod(d_size, i - 1, ring) - binom_mod(d_size, i, ring)


def cn_witness_for_eh(a_values, b_values, d_values, p: int) -> tuple[int, int]:
    """A pair (a, b) with a in A, b in B, a != b and a + b outside D.

    Requires |D| = |A| + |B| - 4 and |A| + |B| - 3 <= p.  Builds the
    certificate polynomial, picks the target exponents (|A|-1, |B|-2) when
    that top coefficient is nonzero and (|A|-2, |B|-1) otherwise, and runs
    the Nullstellensatz witness search on the grid A x B.  Both exclusion
    properties of the returned pair are re-checked.
    """
    _require_prime(p)
    a_set = _validated_subset(p, a_values, "A")
    b_set = _validated_subset(p, b_values, "B")
    d_set = _validated_subset(p, d_values, "D", allow_empty=True)
    if len(d_set) != len(a_set) + len(b_set) - 4:
        raise PreconditionViolated(
            f"|D| = {len(d_set)} != |A| + |B| - 4 = {len(a_set) + len(b_set) - 4}"
        )
    if len(a_set) + len(b_set) - 3 > p:
        raise PreconditionViolated(
            f"|A| + |B| - 3 = {len(a_set) + len(b_set) - 3} exceeds p = {p}"
        )

    candidates = []
    if len(b_set) >= 2:
        candidates.append((len(a_set) - 1, len(b_set) - 2))
    if len(a_set) >= 2:
        candidates.append((len(a_set) - 2, len(b_set) - 1))
    if not candidates:
        raise PreconditionViolated("need |A| >= 2 or |B| >= 2")
    k = next(
        (cand for cand in candidates if q_top_coefficient(len(d_set), cand[0], p)),
        None,
    )
    if k is None:
        raise HypothesesViolated(
            "both candidate top coefficients vanish; this contradicts the bound argument"
        )

    proof = build_proof_polynomials(d_set, p)
    ring = proof.q_poly.ring
    witness = find_witness(CNInstance(proof.q_poly, k, Grid(ring, [a_set, b_set])))
    a_res, b_res = witness.residues()
    if a_res == b_res or (a_res + b_res) % p in set(d_set):
        raise InternalContradiction(
            f"witness ({a_res}, {b_res}) violates the exclusion properties"
        )
    return a_res, b_res


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepEntry:
    p: int
    pairs: int
    violations: tuple[EHReport, ...]


@dataclass(frozen=True)
class SweepReport:
    mode: str  # "exhaustive" or "sampled"
    samples: int | None
    seed: int | None
    entries: tuple[SweepEntry, ...]

    @property
    def total_pairs(self) -> int:
        return sum(e.pairs for e in self.entries)

    @property
    def total_violations(self) -> int:
        return sum(len(e.violations) for e in self.entries)


def _subsets_of(p):
    # All nonempty subsets of Z_p in ascending bitmask order.
    return [
        tuple(i for i in range(p) if (mask >> i) & 1)
        for mask in range(1, 1 << p)
    ]


def _subset_from_mask(p, mask):
    return tuple(i for i in range(p) if (mask >> i) & 1)


def _exhaustive_chunk(args):
    p, lo, hi = args
    subsets = _subsets_of(p)
    pairs = 0
    violations = []
    for a_mask in range(lo, hi):
        a_tup = subsets[a_mask - 1]
        for b_tup in subsets:
            report = _verify_sets(p, a_tup, b_tup)
            pairs += 1
            if not report.holds:
                violations.append(report)
    return pairs, violations


def _sampled_chunk(args):
    p, mask_pairs = args
    pairs = 0
    violations = []
    for a_mask, b_mask in mask_pairs:
        report = _verify_sets(p, _subset_from_mask(p, a_mask), _subset_from_mask(p, b_mask))
        pairs += 1
        if not report.holds:
            violations.append(report)
    return pairs, violations


def _split_range(lo, hi, chunks):
    step = max(1, (hi - lo + chunks - 1) // chunks)
    return [(s, min(s + step, hi)) for s in range(lo, hi, step)]


def eh_sweep(
    primes,
    *,
    samples: int | None = None,
    seed: int | None = None,
    parallel: bool = False,
) -> SweepReport:
    """Run the bound check over subset pairs for each prime.

    ``samples=None`` sweeps every ordered pair of nonempty subsets
    (allowed only for p <= 13); otherwise ``samples`` pairs are drawn per
    prime, uniformly over nonempty subsets, from a generator seeded with
    ``seed`` (required).  Results are merged in canonical order, so output
    is identical with and without ``parallel``.
    """
    plist = list(primes)
    if not plist:
        raise PreconditionViolated("at least one prime is required")
    for p in plist:
        _require_prime(p)
    if samples is None:
        for p in plist:
            if p > EXHAUSTIVE_PRIME_LIMIT:
                raise PreconditionViolated(
                    f"exhaustive sweep limited to p <= {EXHAUSTIVE_PRIME_LIMIT}, got {p}"
                )
    else:
        if samples < 1:
            raise PreconditionViolated("sample count must be >= 1")
        if seed is None:
            raise PreconditionViolated("sampled sweeps require a seed")

    # Work units are built up front, in order, so the seeded stream and the
    # merge order never depend on worker scheduling.
    rng = random.Random(seed) if samples is not None else None
    per_prime_chunks = []
    for p in plist:
        if samples is None:
            full = 1 << p
            n_chunks = min(4 * (os.cpu_count() or 1), full - 1) if parallel else 1
            chunk_args = [(p, lo, hi) for lo, hi in _split_range(1, full, n_chunks)]
            per_prime_chunks.append((_exhaustive_chunk, chunk_args))
        else:
            top = 1 << p
            mask_pairs = [
                (rng.randrange(1, top), rng.randrange(1, top)) for _ in range(samples)
            ]
            n_chunks = min(4 * (os.cpu_count() or 1), samples) if parallel else 1
            step = (samples + n_chunks - 1) // n_chunks
            chunk_args = [
                (p, mask_pairs[s : s + step]) for s in range(0, samples, step)
            ]
            per_prime_chunks.append((_sampled_chunk, chunk_args))

    entries = []
    if parallel:
        with ProcessPoolExecutor() as pool:
            for p, (worker, chunk_args) in zip(plist, per_prime_chunks):
                results = list(pool.map(worker, chunk_args))
                entries.append(_merge_entry(p, results))
    else:
        for p, (worker, chunk_args) in zip(plist, per_prime_chunks):
            results = [worker(args) for args in chunk_args]
            entries.append(_merge_entry(p, results))

    return SweepReport(
        mode="exhaustive" if samples is None else "sampled",
        samples=samples,
        seed=seed,
        entries=tuple(entries),
    )


def _merge_entry(p, results):
    pairs = sum(r[0] for r in results)
    violations = tuple(itertools.chain.from_iterable(r[1] for r in results))
    return SweepEntry(p, pairs, violations)
