"""Shared random-input generators for the property suites."""

from __future__ import annotations

from fractions import Fraction

from divlab.ideals import Ideal, dimension
from divlab.polycore import Polynomial, Ring, gradient


def random_poly(rng, ring: Ring, max_deg=4, max_terms=5, coeff_bound=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.n
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            exps[rng.randrange(ring.n)] += 1
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            m = tuple(exps)
            terms[m] = terms.get(m, 0) + c
    return Polynomial(ring, {m: Fraction(c) for m, c in terms.items() if c})


def random_divisor(rng, ring: Ring, max_deg=4, max_tries=60):
    """Random squarefree nonconstant f with f(0) = 0, or None.

    Squarefreeness filter: the singular locus must have codimension >= 2
    (the same characterization the criteria use, applied here only to select
    inputs, not as an oracle).
    """
    n = ring.n
    for _ in range(max_tries):
        p = random_poly(rng, ring, max_deg=max_deg, max_terms=rng.randint(2, 5))
        zero = (0,) * n
        terms = dict(p.terms)
        terms.pop(zero, None)
        f = Polynomial(ring, terms)
        if not f or f.is_constant():
            continue
        if f.total_degree() < 1:
            continue
        jac = Ideal(ring, list(gradient(f)) + [f])
        if dimension(jac) <= n - 2:
            return f
    return None
