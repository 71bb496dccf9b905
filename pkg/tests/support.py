"""Shared helpers for the test suite."""

from combnull import Polynomial


def random_poly(rng, ring, arity, max_degree, max_terms=8):
    """A random sparse polynomial; may come out zero after reduction."""
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        while True:
            mono = tuple(rng.randrange(0, max_degree + 1) for _ in range(arity))
            if sum(mono) <= max_degree:
                break
        terms[mono] = rng.randrange(0, ring.modulus)
    return Polynomial(ring, arity, terms)
