"""Independent brute-force oracles used to validate the symbolic kernel.

Everything here deliberately avoids the Groebner engine: membership and
syzygies are decided by exact linear algebra over degree-truncated coefficient
spaces, dimension by subset enumeration, radical membership by explicit
powers.  Oracles stay independent of the code paths they check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from divlab.linalg import in_row_space, kernel_basis, row_space_basis
from divlab.polycore import Polynomial, Ring


def monomials_up_to(ring: Ring, deg: int):
    """All exponent tuples of total degree <= deg, deterministic order."""
    out = []
    for exps in product(range(deg + 1), repeat=ring.n):
        if sum(exps) <= deg:
            out.append(exps)
    out.sort()
    return out


def _coeff_vector(p: Polynomial, support):
    index = {m: i for i, m in enumerate(support)}
    v = [Fraction(0)] * len(support)
    for m, c in p.terms.items():
        v[index[m]] = c
    return v


def span_membership_oracle(generators, max_deg: int):
    """Membership in the Q-span of {x^a * g : deg(x^a g) <= max_deg}.

    For a degree-compatible order this span meets every polynomial of degree
    <= max_deg exactly in the ideal, so it is an exact membership oracle for
    such polynomials against a Groebner basis of the ideal.
    """
    ring = generators[0].ring
    support = monomials_up_to(ring, max_deg)
    rows = []
    for g in generators:
        if not g:
            continue
        gdeg = g.total_degree()
        for a in monomials_up_to(ring, max_deg - gdeg):
            shifted = Polynomial(
                ring, {tuple(x + y for x, y in zip(m, a)): c for m, c in g.terms.items()}
            )
            rows.append(_coeff_vector(shifted, support))
    basis = row_space_basis(rows) if rows else []

    def member(p: Polynomial) -> bool:
        if not p:
            return True
        if p.total_degree() > max_deg:
            raise ValueError("oracle truncation exceeded")
        return in_row_space(basis, _coeff_vector(p, support))

    return member


def syzygy_space_oracle(vectors, max_deg: int):
    """Q-basis of {(h_1..h_r) : sum h_i v_i = 0, deg h_i <= max_deg},
    as tuples of Polynomials, via one exact kernel computation."""
    ring = vectors[0].ring
    mons = monomials_up_to(ring, max_deg)
    out_deg = max_deg + max(
        (v.total_degree() for v in vectors if v), default=0
    )
    support = monomials_up_to(ring, out_deg)
    columns = []
    labels = []
    for i, v in enumerate(vectors):
        for a in mons:
            shifted = Polynomial(
                ring,
                {tuple(x + y for x, y in zip(m, a)): c for m, c in v.terms.items()},
            )
            columns.append(_coeff_vector(shifted, support))
            labels.append((i, a))
    rows = [[col[k] for col in columns] for k in range(len(support))]
    basis = kernel_basis(rows)
    syzygies = []
    for vec in basis:
        comps = [dict() for _ in vectors]
        for coef, (i, a) in zip(vec, labels):
            if coef:
                comps[i][a] = coef
        syzygies.append(tuple(Polynomial(ring, c) for c in comps))
    return syzygies


def dimension_oracle_monomial(ring: Ring, lead_monomials) -> int:
    """Krull dimension of the vanishing locus of a monomial ideal by brute
    force over all variable subsets: the largest S such that no generator is
    supported inside S; -1 when some generator is constant (unit ideal)."""
    if any(sum(m) == 0 for m in lead_monomials):
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead_monomials]
    n = ring.n
    best = -1 if supports else n
    for size in range(n, -1, -1):
        found = False
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                found = True
                break
        if found:
            best = size
            break
    return best


def radical_membership_power_oracle(mono, gens, max_power: int = 8) -> bool:
    """For a monomial ideal: m in sqrt(I) iff m^k is divisible by a generator
    for some k <= max_power (divisibility checked directly)."""
    for k in range(1, max_power + 1):
        mk = tuple(e * k for e in mono)
        for g in gens:
            if all(a <= b for a, b in zip(g, mk)):
                return True
    return False
