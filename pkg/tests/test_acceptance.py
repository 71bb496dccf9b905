"""Ten acceptance checks, one test each, printing one PASS/FAIL line apiece.

Run with `pytest tests/test_acceptance.py -s` to see the lines; each also
asserts, so a plain pytest run fails loudly if any criterion regresses.
"""

import itertools
import random
import time

import pytest

from combnull import (
    CNInstance,
    Grid,
    HypothesesViolated,
    ParseError,
    Polynomial,
    Ring,
    binom_mod,
    brute_force_witness,
    build_proof_polynomials,
    check_hypotheses,
    cn_witness_for_eh,
    eh_sweep,
    find_witness,
    format_polynomial,
    parse_polynomial,
)

from support import random_poly


def _finish(num, ok, detail):
    print(f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_acceptance_01_division_identity():
    rng = random.Random(101)
    start = time.perf_counter()
    good = 0
    trials = 10_000
    for _ in range(trials):
        m = rng.choice((2, 3, 5, 6, 7, 13))
        ring = Ring(m)
        arity = rng.randrange(1, 5)
        poly = random_poly(rng, ring, arity, max_degree=8)
        index = rng.randrange(arity)
        a = rng.randrange(m)
        res = poly.divide_by_linear(index, a)
        factor = Polynomial.variable(ring, arity, index) - a
        if factor * res.quotient + res.remainder == poly and res.remainder.degree_in(index) == 0:
            good += 1
    elapsed = time.perf_counter() - start
    _finish(
        1,
        good == trials and elapsed < 30,
        f"{good}/{trials} exact division identities in {elapsed:.1f}s (budget 30s)",
    )


def test_acceptance_02_witness_soundness():
    rng = random.Random(202)
    start = time.perf_counter()
    good = 0
    trials = 1_000
    for _ in range(trials):
        m = rng.choice((2, 3, 5, 7, 13))
        ring = Ring(m)
        arity = rng.randrange(1, 4)
        sizes = [rng.randrange(1, min(5, m) + 1) for _ in range(arity)]
        sets = [rng.sample(range(m), s) for s in sizes]
        k = tuple(rng.randrange(0, s) for s in sizes)
        total = sum(k)
        terms = {}
        for _ in range(rng.randrange(0, 6)):
            while True:
                mono = tuple(rng.randrange(0, total + 1) for _ in range(arity))
                if sum(mono) <= total:
                    break
            terms[mono] = rng.randrange(0, m)
        terms[k] = rng.randrange(1, m)
        inst = CNInstance(Polynomial(ring, arity, terms), k, Grid(ring, sets))
        if not check_hypotheses(inst).overall:
            continue  # cannot happen by construction
        wit = find_witness(inst)
        in_grid = all(
            any(v.residue == e.residue for e in group)
            for v, group in zip(wit.point, inst.grid.sets)
        )
        sound = (
            in_grid
            and wit.value.residue != 0
            and inst.poly.evaluate(wit.point) == wit.value
            and brute_force_witness(inst.poly, inst.grid) is not None
        )
        if sound:
            good += 1
    elapsed = time.perf_counter() - start
    _finish(
        2,
        good == trials and elapsed < 60,
        f"{good}/{trials} sound witnesses confirmed by brute force in {elapsed:.1f}s (budget 60s)",
    )


def test_acceptance_03_contrapositive():
    rng = random.Random(303)
    good = 0
    trials = 1_000
    done = 0
    while done < trials:
        m = rng.choice((2, 3, 5, 7, 13))
        ring = Ring(m)
        arity = rng.randrange(2, 4)
        sizes = [rng.randrange(2, min(5, m) + 1) for _ in range(arity)]
        sets = [rng.sample(range(m), s) for s in sizes]
        budget = sum(s - 1 for s in sizes)
        total = Polynomial.zero(ring, arity)
        for i in range(arity):
            cap = budget - sizes[i]
            if cap < 0:
                continue
            g = random_poly(rng, ring, arity, max_degree=rng.randrange(0, cap + 1), max_terms=4)
            vanishing = Polynomial.constant(ring, arity, 1)
            for a in sets[i]:
                vanishing = vanishing * (Polynomial.variable(ring, arity, i) - a)
            total = total + g * vanishing
        if total.is_zero:
            continue
        grid = Grid(ring, sets)
        # premise: the construction really does vanish on the whole grid
        assert brute_force_witness(total, grid) is None
        degree = total.total_degree()
        targets = [
            k
            for k in itertools.product(*[range(s) for s in sizes])
            if sum(k) == degree
        ]
        assert targets, "construction kept the degree within the grid budget"
        if all(total.coefficient(k).residue == 0 for k in targets):
            good += 1
        done += 1
    _finish(3, good == trials, f"{good}/{trials} vanishing polynomials had zero target coefficients")


def test_acceptance_04_eh_exhaustive():
    expected = {2: 9, 3: 49, 5: 961, 7: 16_129, 11: 4_190_209}
    start = time.perf_counter()
    small = eh_sweep([2, 3, 5, 7])
    small_elapsed = time.perf_counter() - start
    start = time.perf_counter()
    big = eh_sweep([11])
    big_elapsed = time.perf_counter() - start
    counts_ok = all(e.pairs == expected[e.p] for e in small.entries + big.entries)
    ok = (
        counts_ok
        and small.total_violations == 0
        and big.total_violations == 0
        and small_elapsed < 10
        and big_elapsed < 300
    )
    _finish(
        4,
        ok,
        "all nonempty subset pairs hold for p in {2,3,5,7,11}: "
        f"counts {[e.pairs for e in small.entries + big.entries]}, 0 violations, "
        f"p<=7 in {small_elapsed:.1f}s (budget 10s), p=11 in {big_elapsed:.1f}s (budget 300s)",
    )


def test_acceptance_05_eh_sampled():
    start = time.perf_counter()
    report = eh_sweep([13, 17, 23, 31], samples=10_000, seed=20260815)
    elapsed = time.perf_counter() - start
    ok = (
        report.total_pairs == 40_000
        and report.total_violations == 0
        and elapsed < 60
    )
    _finish(
        5,
        ok,
        f"{report.total_pairs} sampled pairs for p in {{13,17,23,31}}, "
        f"{report.total_violations} violations in {elapsed:.1f}s (budget 60s)",
    )


def test_acceptance_06_coefficient_law():
    start = time.perf_counter()
    checked = 0
    ok = True
    for p in (2, 3, 5, 7, 11, 13):
        ring = Ring(p)
        for size in range(0, min(6, p) + 1):
            for d_set in itertools.combinations(range(p), size):
                proof = build_proof_polynomials(d_set, p)
                for i in range(size + 1):
                    ok = ok and proof.p_poly.coefficient((i, size - i)) == binom_mod(
                        size, i, ring
                    )
                checked += 1
    elapsed = time.perf_counter() - start
    _finish(
        6,
        ok and elapsed < 30,
        f"top coefficients of {checked} expanded products match the binomial rule "
        f"in {elapsed:.1f}s (budget 30s)",
    )


def test_acceptance_07_zero_characterization():
    ok = True
    checked = 0
    for p in (2, 3, 5, 7, 11, 13):
        ring = Ring(p)
        for m in range(p):
            for i in range(1, m + 1):
                equal = binom_mod(m, i - 1, ring) == binom_mod(m, i, ring)
                boundary = (2 * i) % p == (m + 1) % p
                ok = ok and (equal == boundary)
                checked += 1
    _finish(
        7,
        ok,
        f"binomial equality iff 2i = m+1 (mod p), all {checked} cases for p <= 13",
    )


def test_acceptance_08_cn_witness_for_eh():
    rng = random.Random(808)
    good = 0
    trials = 500
    for _ in range(trials):
        while True:
            p = rng.choice((5, 7, 11, 13))
            size_a = rng.randrange(1, p + 1)
            size_b = rng.randrange(1, p + 1)
            if 4 <= size_a + size_b <= p + 3:
                break
        a_set = rng.sample(range(p), size_a)
        b_set = rng.sample(range(p), size_b)
        d_set = rng.sample(range(p), size_a + size_b - 4)
        a, b = cn_witness_for_eh(a_set, b_set, d_set, p)
        valid_pairs = {
            (x, y)
            for x in a_set
            for y in b_set
            if x != y and (x + y) % p not in set(d_set)
        }
        if (a, b) in valid_pairs:
            good += 1
    _finish(8, good == trials, f"{good}/{trials} witnesses confirmed by full enumeration")


def test_acceptance_09_ring_boundary():
    ring = Ring(6)
    poly = parse_polynomial("x*y", ring, ["x", "y"])

    safe = CNInstance(poly, (1, 1), Grid(ring, [[0, 1], [0, 1]]))
    safe_report = check_hypotheses(safe)
    wit = find_witness(safe)
    accepted = safe_report.overall and wit.residues() == (1, 1) and wit.value.residue == 1

    units = CNInstance(poly, (1, 1), Grid(ring, [[0, 5], [0, 1]]))
    wit2 = find_witness(units)  # 5 - 0 is a unit mod 6, still fine
    accepted = accepted and poly.evaluate(wit2.point) == wit2.value

    unsafe = CNInstance(
        parse_polynomial("x+y", ring, ["x", "y"]),
        (1, 0),
        Grid(ring, [[0, 2], [0]]),
    )
    unsafe_report = check_hypotheses(unsafe)
    rejected = not unsafe_report.ring_ok and not unsafe_report.overall
    try:
        find_witness(unsafe)
        rejected = False
    except HypothesesViolated:
        pass
    _finish(
        9,
        accepted and rejected,
        "Z_6 grids with unit differences accepted (witness found); "
        "zero-divisor difference rejected with ring_ok=False",
    )


def test_acceptance_10_parser_round_trip():
    rng = random.Random(1010)
    names = ["x", "y", "z", "w"]
    good = 0
    trials = 1_000
    for _ in range(trials):
        m = rng.choice((2, 3, 5, 6, 7, 13))
        ring = Ring(m)
        arity = rng.randrange(1, 5)
        poly = random_poly(rng, ring, arity, max_degree=6)
        text = format_polynomial(poly, names[:arity])
        if parse_polynomial(text, ring, names[:arity]) == poly:
            good += 1
    malformed = [("x + ", 4), ("(x", 2), ("x^", 2), ("$", 0), ("x y", 2), ("", 0)]
    errors_ok = True
    for text, position in malformed:
        with pytest.raises(ParseError) as err:
            parse_polynomial(text, Ring(5))
        errors_ok = errors_ok and err.value.position == position
    _finish(
        10,
        good == trials and errors_ok,
        f"{good}/{trials} round trips structural; {len(malformed)} malformed inputs "
        "reported positioned errors",
    )
