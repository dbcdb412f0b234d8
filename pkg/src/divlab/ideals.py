"""Ideals, Groebner bases and the derived decision procedures.

The Ideal type carries a lazily cached reduced Groebner basis per monomial
order; the cache is write-once per order (concurrent recomputation converges
to the identical reduced basis, so racing writers are harmless).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import groebner as _gb
from . import linalg
from .config import Budget, default_budget
from .polycore import (
    DEGREVLEX,
    MonomialOrder,
    Point,
    Polynomial,
    Ring,
    block,
    evaluate,
)


class Ideal:
    """A polynomial ideal given by generators, with cached Groebner bases."""

    __slots__ = ("ring", "generators", "_gb_cache")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb_cache = {}

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial]) -> "Ideal":
        if not polys:
            raise ValueError("need at least one polynomial to infer the ring")
        return cls(polys[0].ring, polys)

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inner})"

    def __eq__(self, other):
        """Ideal equality (not generator-list equality): identical reduced
        Groebner bases under degrevlex."""
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return NotImplemented
        return self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ring, self.groebner_basis()))

    def groebner_basis(
        self, order: MonomialOrder = DEGREVLEX, budget: Optional[Budget] = None
    ) -> tuple:
        key = order.cache_key()
        cached = self._gb_cache.get(key)
        if cached is not None:
            return cached
        budget = budget or default_budget()
        raw = _gb.groebner_terms(
            [g.terms for g in self.generators], order.heapkey, budget
        )
        basis = tuple(Polynomial(self.ring, t, _clean=False) for t in raw)
        self._gb_cache[key] = basis
        return basis

    def is_unit(self, budget: Optional[Budget] = None) -> bool:
        gb = self.groebner_basis(budget=budget)
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, f: Polynomial, budget: Optional[Budget] = None) -> bool:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if not f:
            return True
        if self.is_zero():
            return False
        budget = budget or default_budget()
        gb = self.groebner_basis(budget=budget)
        entries = _gb.int_entries([g.terms for g in gb], DEGREVLEX.heapkey)
        return _gb.reduces_to_zero(f.terms, entries, DEGREVLEX.heapkey, budget)

    def contains_ideal(self, other: "Ideal", budget: Optional[Budget] = None) -> bool:
        return all(self.contains(g, budget) for g in other.generators)


# ---------------------------------------------------------------------------
# spec operations
# ---------------------------------------------------------------------------


def groebner_basis(
    I: Ideal, order: MonomialOrder = DEGREVLEX, budget: Optional[Budget] = None
) -> tuple:
    """Reduced Groebner basis (monic, ascending leading monomials)."""
    return I.groebner_basis(order, budget)


def contains(I: Ideal, f: Polynomial, budget: Optional[Budget] = None) -> bool:
    return I.contains(f, budget)


def normal_form(f: Polynomial, I: Ideal, budget: Optional[Budget] = None) -> Polynomial:
    gb = I.groebner_basis(budget=budget)
    nf = _gb.normal_form_terms(f.terms, [g.terms for g in gb], DEGREVLEX.heapkey)
    return Polynomial(f.ring, nf, _clean=False)


def syzygies(
    polys: Sequence[Polynomial],
    budget: Optional[Budget] = None,
    prune: bool = True,
) -> list:
    """Generators of the syzygy module of (polys[0], ..., polys[r-1]).

    Each returned item is a tuple of r Polynomials s with sum s_i * v_i == 0;
    the set generates the full syzygy module.  With prune=True no returned
    vector lies in the submodule generated by the others.
    """
    if not polys:
        raise ValueError("syzygies of an empty list")
    ring = polys[0].ring
    if any(p.ring != ring for p in polys):
        raise ValueError("polynomials from different rings")
    budget = budget or default_budget()
    hk = DEGREVLEX.heapkey
    raw = _gb.syzygy_generators([p.terms for p in polys], ring.n, hk, budget)
    r = len(polys)
    seen = set()
    vectors = []
    for vec in raw:
        norm = _normalize_vector(vec, r, hk)
        if norm is None:
            continue
        sig = tuple(sorted(_gb.vec_to_key_terms(norm).items()))
        if sig in seen:
            continue
        seen.add(sig)
        vectors.append(norm)
    if prune:
        vectors = _gb.prune_vectors(vectors, hk, budget)
    return [
        tuple(Polynomial(ring, comp) for comp in vec) for vec in vectors
    ]


def _normalize_vector(vec, r, hk):
    """Integer, content-free, sign-normalized copy of a syzygy vector (sign:
    positive coefficient on the leading (monomial, position) term)."""
    keyed = _gb._vec_intify(_gb.vec_to_key_terms(vec))
    if not keyed:
        return None
    lead = min(keyed, key=lambda k: (hk(k[1]), k[0]))
    if keyed[lead] < 0:
        keyed = {k: -c for k, c in keyed.items()}
    out = [dict() for _ in range(r)]
    for (pos, m), c in keyed.items():
        out[pos][m] = Fraction(c)
    return out


def module_contains(
    generators: Sequence[Sequence[Polynomial]],
    vector: Sequence[Polynomial],
    budget: Optional[Budget] = None,
) -> bool:
    """Does ``vector`` lie in the R-submodule generated by ``generators``?"""
    budget = budget or default_budget()
    gen_terms = [[p.terms for p in g] for g in generators]
    vec_terms = [p.terms for p in vector]
    return _gb.submodule_contains(gen_terms, vec_terms, DEGREVLEX.heapkey, budget)


def module_equal(
    gens_a: Sequence[Sequence[Polynomial]],
    gens_b: Sequence[Sequence[Polynomial]],
    budget: Optional[Budget] = None,
) -> bool:
    """Mutual membership of two generating sets of submodules of R^c."""
    budget = budget or default_budget()
    hk = DEGREVLEX.heapkey
    ta = [[p.terms for p in g] for g in gens_a]
    tb = [[p.terms for p in g] for g in gens_b]
    mb_a = _gb.ModuleBasis(len(ta[0]) if ta else 0, hk, budget)
    for g in ta:
        mb_a.add(g)
    if not all(mb_a.contains(v) for v in tb):
        return False
    mb_b = _gb.ModuleBasis(len(tb[0]) if tb else 0, hk, budget)
    for g in tb:
        mb_b.add(g)
    return all(mb_b.contains(v) for v in ta)


def ideal_quotient(I: Ideal, f: Polynomial, budget: Optional[Budget] = None) -> Ideal:
    """The colon ideal (I : f) = {a : a*f in I}, via syzygies of (gens, f)."""
    if not f:
        raise ZeroDivisionError("ideal quotient by the zero polynomial")
    if f.ring != I.ring:
        raise ValueError("polynomial from a different ring")
    budget = budget or default_budget()
    if I.is_zero():
        return Ideal(I.ring, [])
    vs = list(I.generators) + [f]
    gens = []
    for vec in syzygies(vs, budget=budget, prune=False):
        last = vec[-1]
        if last:
            gens.append(last)
    return Ideal(I.ring, _dedupe_gens(gens))


def eliminate(I: Ideal, k: int, budget: Optional[Budget] = None) -> Ideal:
    """I intersected with the subring in the last n-k variables (the first k
    variables are eliminated).  The result lives in the smaller ring."""
    n = I.ring.n
    if not 1 <= k < n:
        raise ValueError(f"elimination count must satisfy 1 <= k < {n}")
    budget = budget or default_budget()
    gb = I.groebner_basis(order=block(k), budget=budget)
    small = Ring(I.ring.names[k:])
    gens = []
    for g in gb:
        if all(all(e == 0 for e in m[:k]) for m in g.terms):
            gens.append(Polynomial(small, {m[k:]: c for m, c in g.terms.items()}))
    return Ideal(small, gens)


def radical_membership(
    g: Polynomial, I: Ideal, budget: Optional[Budget] = None
) -> bool:
    """g in sqrt(I), decided by 1 in I + (1 - y*g) in the extended ring."""
    if g.ring != I.ring:
        raise ValueError("polynomial from a different ring")
    if not g:
        return True
    budget = budget or default_budget()
    ring = I.ring
    (yname,) = ring.fresh_names(["rab"])
    ext = ring.extend([yname])
    lift = lambda p: {m + (0,): c for m, c in p.terms.items()}
    base = I.groebner_basis(budget=budget) if I.generators else ()
    gens = [lift(p) for p in base]
    trick = {m + (1,): -c for m, c in g.terms.items()}
    one = (0,) * ext.n
    trick[one] = trick.get(one, Fraction(0)) + 1
    gens.append(trick)
    out = _gb.groebner_terms(gens, DEGREVLEX.heapkey, budget)
    return len(out) == 1 and set(out[0]) == {one}


def radical_contains(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> bool:
    """sqrt(I) contains J (equivalently V(I) is a subset of V(J))."""
    return all(radical_membership(g, I, budget) for g in J.generators)


def radical_equal(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> bool:
    """sqrt(I) == sqrt(J), by bidirectional radical membership of generators."""
    return radical_contains(I, J, budget) and radical_contains(J, I, budget)


def saturation(I: Ideal, g: Polynomial, budget: Optional[Budget] = None) -> Ideal:
    """I : g^infinity, by iterating the colon until the ideal stabilizes."""
    budget = budget or default_budget()
    if not g:
        return Ideal(I.ring, [I.ring.one()])
    current = I
    current_gb = current.groebner_basis(budget=budget)
    while True:
        nxt = ideal_quotient(Ideal(I.ring, current_gb), g, budget=budget)
        nxt_gb = nxt.groebner_basis(budget=budget)
        if nxt_gb == current_gb:
            return Ideal(I.ring, current_gb)
        current_gb = nxt_gb


def vanishes_at_origin(I: Ideal, budget: Optional[Budget] = None) -> bool:
    """True iff I is contained in the maximal ideal at the origin."""
    if I.is_zero():
        return True
    gb = I.groebner_basis(budget=budget)
    return all(g.constant_term() == 0 for g in gb)


def germ_radical_membership(
    g: Polynomial, I: Ideal, budget: Optional[Budget] = None
) -> bool:
    """g in the radical of I localized at the origin.

    Geometrically: every irreducible component of V(I) through the origin
    lies in V(g).  Decided by 0 not in V(I : g^infinity) = the closure of
    V(I) minus V(g); a cheap global Rabinowitsch test short-circuits the
    saturation when it already succeeds.
    """
    budget = budget or default_budget()
    if not vanishes_at_origin(I, budget):
        return True  # the localized ideal is the unit ideal
    if not g:
        return True
    if g.constant_term() != 0:
        return False
    if radical_membership(g, I, budget):
        return True
    sat = saturation(I, g, budget)
    return not vanishes_at_origin(sat, budget)


def germ_radical_contains(
    I: Ideal, J: Ideal, budget: Optional[Budget] = None
) -> bool:
    """sqrt(I) contains J after localizing both at the origin."""
    budget = budget or default_budget()
    gens = J.groebner_basis(budget=budget) if J.generators else ()
    return all(germ_radical_membership(g, I, budget) for g in gens)


def germ_radical_equal(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> bool:
    """Radical equality of the two ideals localized at the origin (components
    of the vanishing loci through the origin coincide)."""
    return germ_radical_contains(I, J, budget) and germ_radical_contains(
        J, I, budget
    )


def dimension(I: Ideal, budget: Optional[Budget] = None) -> int:
    """Krull dimension of V(I) in affine space over an algebraically closed
    field: -1 for the unit ideal, else the maximal size of a variable subset S
    such that no Groebner leading monomial is supported inside S."""
    n = I.ring.n
    if I.is_zero():
        return n
    gb = I.groebner_basis(budget=budget)
    if len(gb) == 1 and gb[0].is_constant():
        return -1
    supports = []
    for g in gb:
        lm = g.leading_monomial(DEGREVLEX)
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    best = 0
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                best = size
                break
        if best:
            break
    return best


class PolyMatrix:
    """A rectangular matrix of polynomials with memoized minors."""

    __slots__ = ("ring", "rows", "nrows", "ncols", "_det_memo")

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix must be rectangular")
        self.ring = rows[0][0].ring
        for r in rows:
            for p in r:
                if p.ring != self.ring:
                    raise ValueError("matrix entries from different rings")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width
        self._det_memo = {}

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"

    def submatrix_det(self, row_idx: tuple, col_idx: tuple) -> Polynomial:
        """Determinant of the square submatrix, by cofactor expansion with
        memoization on (row subset, column subset)."""
        key = (row_idx, col_idx)
        memo = self._det_memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        k = len(row_idx)
        if k == 1:
            det = self.rows[row_idx[0]][col_idx[0]]
        else:
            det = self.ring.zero()
            r0 = row_idx[0]
            rest = row_idx[1:]
            sign = 1
            for pos, c in enumerate(col_idx):
                entry = self.rows[r0][c]
                if entry:
                    sub = self.submatrix_det(rest, col_idx[:pos] + col_idx[pos + 1 :])
                    if sub:
                        term = entry * sub
                        det = det + term if sign > 0 else det - term
                sign = -sign
        memo[key] = det
        return det

    def column_block(self, cols: Sequence[int]) -> "PolyMatrixView":
        return PolyMatrixView(self, tuple(cols))

    def evaluate(self, p: Point):
        return [[evaluate(entry, p) for entry in row] for row in self.rows]


class PolyMatrixView:
    """Column-restricted view sharing the parent's minor memo."""

    __slots__ = ("parent", "cols")

    def __init__(self, parent: PolyMatrix, cols: tuple):
        self.parent = parent
        self.cols = cols

    @property
    def ring(self):
        return self.parent.ring

    @property
    def nrows(self):
        return self.parent.nrows

    @property
    def ncols(self):
        return len(self.cols)

    @property
    def rows(self):
        return tuple(
            tuple(r[c] for c in self.cols) for r in self.parent.rows
        )

    def submatrix_det(self, row_idx, col_idx):
        return self.parent.submatrix_det(
            row_idx, tuple(self.cols[c] for c in col_idx)
        )

    def evaluate(self, p: Point):
        full = self.parent.evaluate(p)
        return [[row[c] for c in self.cols] for row in full]


def minors(M, k: int) -> Ideal:
    """Ideal generated by all k x k minors of M."""
    if not 1 <= k <= min(M.nrows, M.ncols):
        raise ValueError(
            f"minor order {k} out of range 1..{min(M.nrows, M.ncols)}"
        )
    gens = []
    for rows_sel in combinations(range(M.nrows), k):
        for cols_sel in combinations(range(M.ncols), k):
            det = M.submatrix_det(rows_sel, cols_sel)
            if det:
                gens.append(det)
    return Ideal(M.ring, _dedupe_gens(gens))


def rank_at_point(M, p: Point) -> int:
    """Rank over Q of the matrix evaluated at a rational point."""
    if p.ring != M.ring:
        raise ValueError("point from a different ring")
    return linalg.rank(M.evaluate(p))


def intersect(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """Ideal intersection via the one-tag elimination trick."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals from different rings")
    budget = budget or default_budget()
    (tname,) = ring.fresh_names(["tag"])
    ext = Ring((tname,) + ring.names)
    t = ext.variable(0)
    lift = lambda p: Polynomial(ext, {(0,) + m: c for m, c in p.terms.items()})
    gens = [t * lift(g) for g in I.generators]
    gens += [(ext.one() - t) * lift(g) for g in J.generators]
    big = Ideal(ext, gens)
    # eliminate() lands in Ring(ring.names), which equals the original ring
    return eliminate(big, 1, budget)


def _dedupe_gens(gens):
    """Drop duplicates (up to rational scalar) and zeros; deterministic order."""
    seen = {}
    for g in gens:
        if not g:
            continue
        it = _gb.intify(g.terms)
        lm = g.leading_monomial(DEGREVLEX)
        if it[lm] < 0:
            it = {m: -c for m, c in it.items()}
        key = frozenset(it.items())
        if key not in seen:
            seen[key] = g
    return sorted(
        seen.values(),
        key=lambda g: (
            g.total_degree(),
            len(g.terms),
            sorted(g.terms),
            sorted(str(c) for c in g.terms.values()),
        ),
    )
