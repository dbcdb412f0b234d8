"""Logarithmic derivations of a divisor germ, computed as syzygies.

A derivation delta = sum a_j d_j is logarithmic for f when delta(f) = alpha*f;
the rows (a_1, ..., a_n, -alpha) are exactly the syzygies of
(d_1 f, ..., d_n f, f).  SaitoData bundles a generating set with the Saito
matrix A and the extended matrix A~ = (A | -alpha).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import linalg
from .config import Budget, PreconditionError, default_budget
from .ideals import (
    PolyMatrix,
    module_contains,
    rank_at_point,
    syzygies,
)
from .polycore import (
    DEGREVLEX,
    Point,
    Polynomial,
    Ring,
    evaluate,
    exact_divide,
    gradient,
    is_homogeneous,
)


class Derivation:
    """delta = sum_j coefficients[j] * d_j with delta(f) = cofactor * f."""

    __slots__ = ("coefficients", "cofactor")

    def __init__(self, coefficients: Sequence[Polynomial], cofactor: Polynomial):
        self.coefficients = tuple(coefficients)
        self.cofactor = cofactor

    @property
    def ring(self) -> Ring:
        return self.cofactor.ring

    def apply(self, g: Polynomial) -> Polynomial:
        out = g.ring.zero()
        for j, a in enumerate(self.coefficients):
            if a:
                out = out + a * g._diff(j)
        return out

    def is_singular(self) -> bool:
        """True when the derivation vanishes at the origin."""
        return all(a.constant_term() == 0 for a in self.coefficients)

    def constant_part(self):
        return tuple(a.constant_term() for a in self.coefficients)

    def linear_part_matrix(self):
        """Matrix L with the linear part equal to x L d (L[k][j] = coefficient
        of x_k in coefficients[j])."""
        n = self.ring.n
        L = [[Fraction(0)] * n for _ in range(n)]
        for j, a in enumerate(self.coefficients):
            for m, c in a.terms.items():
                if sum(m) == 1:
                    k = next(i for i, e in enumerate(m) if e)
                    L[k][j] = c
        return tuple(tuple(row) for row in L)

    def syzygy_row(self) -> tuple:
        """(a_1, ..., a_n, -alpha): a syzygy of (d_1 f, ..., d_n f, f)."""
        return self.coefficients + (-self.cofactor,)

    def __eq__(self, other):
        return (
            isinstance(other, Derivation)
            and self.coefficients == other.coefficients
            and self.cofactor == other.cofactor
        )

    def __hash__(self):
        return hash((self.coefficients, self.cofactor))

    def __repr__(self):
        return format_derivation(self)


def format_derivation(d: Derivation) -> str:
    names = d.ring.names
    parts = []
    for a, name in zip(d.coefficients, names):
        if not a:
            continue
        if len(a.terms) == 1 and not str(a).startswith("-"):
            parts.append(f"{a}*d_{name}" if str(a) != "1" else f"d_{name}")
        else:
            parts.append(f"({a})*d_{name}")
    return " + ".join(parts) if parts else "0"


def check_derivation(f: Polynomial, d: Derivation) -> None:
    """Assert the defining identity sum a_j d_j(f) == cofactor * f exactly."""
    if d.apply(f) != d.cofactor * f:
        raise AssertionError(f"derivation identity violated for {d!r}")


class SaitoData:
    """A generating set of Der_f with its Saito matrices."""

    __slots__ = ("f", "ring", "derivations", "A_ext", "A")

    def __init__(self, f: Polynomial, derivations: Sequence[Derivation]):
        self.f = f
        self.ring = f.ring
        self.derivations = tuple(derivations)
        n = self.ring.n
        if len(self.derivations) < n:
            raise AssertionError(
                f"generating set has {len(self.derivations)} < n = {n} elements"
            )
        for d in self.derivations:
            check_derivation(f, d)
        # extended Saito matrix rows (a_1 .. a_n | -alpha); A is the left block
        self.A_ext = PolyMatrix([d.syzygy_row() for d in self.derivations])
        self.A = self.A_ext.column_block(tuple(range(n)))

    @property
    def m(self) -> int:
        return len(self.derivations)

    def cofactors(self) -> tuple:
        return tuple(d.cofactor for d in self.derivations)

    def module_rows(self) -> list:
        return [d.syzygy_row() for d in self.derivations]

    def contains_derivation(
        self, d: Derivation, budget: Optional[Budget] = None
    ) -> bool:
        return module_contains(self.module_rows(), d.syzygy_row(), budget)


def _check_divisor_input(f: Polynomial) -> None:
    if not f:
        raise PreconditionError("f must be nonzero")
    if f.is_constant():
        raise PreconditionError("f must be nonconstant")
    if f.constant_term() != 0:
        raise PreconditionError("f(0) must be 0 (the divisor passes through 0)")


def logarithmic_derivations(
    f: Polynomial, budget: Optional[Budget] = None
) -> SaitoData:
    """Generating set of Der_f over the polynomial ring.

    The set is pruned so that no member lies in the submodule generated by
    the others.  Squarefreeness is the caller's precondition (the criteria
    layer checks it via the Jacobian-ideal dimension).
    """
    _check_divisor_input(f)
    budget = budget or default_budget()
    vs = list(gradient(f)) + [f]
    rows = syzygies(vs, budget=budget, prune=True)
    n = f.ring.n
    ders = [Derivation(row[:n], -row[n]) for row in rows]
    return SaitoData(f, ders)


class ProductResult:
    __slots__ = ("value", "witness")

    def __init__(self, value: bool, witness: Optional[Derivation]):
        self.value = value
        self.witness = witness

    def __bool__(self):
        return self.value


def is_product_at_origin(sd: SaitoData) -> ProductResult:
    """f is a product with a smooth factor at 0 iff some generator is a
    non-singular derivation (a coefficient with nonzero constant term)."""
    for d in sd.derivations:
        if not d.is_singular():
            return ProductResult(True, d)
    return ProductResult(False, None)


class FreeBasisResult:
    """Either a basis of n derivations with det(A) = q*f, q(0) != 0, or the
    evidence that every n-subset of the generators fails."""

    __slots__ = ("basis", "quotient", "failures", "subsets_tried")

    def __init__(self, basis, quotient, failures, subsets_tried):
        self.basis = basis
        self.quotient = quotient
        self.failures = failures
        self.subsets_tried = subsets_tried

    @property
    def found(self) -> bool:
        return self.basis is not None

    def __bool__(self):
        return self.found


def free_basis_at_origin(
    sd: SaitoData, budget: Optional[Budget] = None
) -> FreeBasisResult:
    """Search n-subsets of the generators (lexicographic index order) for one
    whose Saito determinant is a unit times f at the origin.

    Sound and complete against the analytic local ring: the generators
    generate the localized module, so if Der_f is free at 0, the images of the
    generators span the n-dimensional fiber mod the maximal ideal and some
    n-subset realizes det = unit * f.
    """
    n = sd.ring.n
    failures = []
    tried = 0
    for subset in combinations(range(sd.m), n):
        tried += 1
        det = sd.A.submatrix_det(subset, tuple(range(n)))
        if not det:
            failures.append((subset, "determinant is zero"))
            continue
        q = exact_divide(det, sd.f)
        if q is None:
            failures.append((subset, "det not divisible by f"))
            continue
        if q.constant_term() == 0:
            failures.append((subset, "det/f vanishes at the origin"))
            continue
        basis = tuple(sd.derivations[i] for i in subset)
        return FreeBasisResult(basis, q, [], tried)
    return FreeBasisResult(None, None, failures, tried)


def linear_log_derivations(f: Polynomial) -> list:
    """Q-basis of {delta : coefficients of degree 1, constant cofactor,
    delta(f) = alpha f} for homogeneous f, via one exact linear solve."""
    homog, _ = is_homogeneous(f)
    if not homog:
        raise PreconditionError("linear logarithmic derivations need homogeneous f")
    ring = f.ring
    n = ring.n
    grads = gradient(f)
    # unknowns: c[j][k] (coefficient of x_k in a_j), then alpha
    nunk = n * n + 1
    columns = []  # per unknown: term dict of its contribution to delta(f)
    for j in range(n):
        for k in range(n):
            xk = ring.variable(k)
            columns.append((xk * grads[j]).terms)
    columns.append({m: -c for m, c in f.terms.items()})
    support = sorted(set().union(*[set(col) for col in columns if col]))
    rows = []
    for mono in support:
        rows.append([Fraction(col.get(mono, 0)) for col in columns])
    kernel = linalg.kernel_basis(rows) if rows else []
    out = []
    for vec in kernel:
        coeffs = []
        for j in range(n):
            terms = {}
            for k in range(n):
                c = vec[j * n + k]
                if c:
                    mono = tuple(1 if i == k else 0 for i in range(n))
                    terms[mono] = c
            coeffs.append(Polynomial(ring, terms, _clean=False))
        alpha = ring.constant(vec[n * n])
        d = Derivation(coeffs, alpha)
        check_derivation(f, d)
        if any(coeffs) or alpha:
            out.append(d)
    return out


class LinearFreeResult:
    __slots__ = ("value", "basis", "reason", "space_dim")

    def __init__(self, value, basis, reason, space_dim):
        self.value = value
        self.basis = basis
        self.reason = reason
        self.space_dim = space_dim

    def __bool__(self):
        return self.value


def is_linear_free(f: Polynomial, budget: Optional[Budget] = None) -> LinearFreeResult:
    """Linear freeness: some n-subset of the linear logarithmic derivations
    has Saito determinant equal to a nonzero constant times f.

    Saito's criterion forces deg f == n for a linear free divisor, so a
    homogeneous f of any other degree simply yields False.
    """
    homog, deg = is_homogeneous(f)
    if not homog:
        raise PreconditionError("linear freeness is defined for homogeneous f")
    lins = linear_log_derivations(f)
    n = f.ring.n
    if deg != n:
        return LinearFreeResult(
            False, None, f"deg f = {deg} != n = {n} (required by Saito's criterion)",
            len(lins),
        )
    if len(lins) < n:
        return LinearFreeResult(
            False, None, f"only {len(lins)} independent linear derivations", len(lins)
        )
    for subset in combinations(range(len(lins)), n):
        A = PolyMatrix([lins[i].coefficients for i in subset])
        det = A.submatrix_det(tuple(range(n)), tuple(range(n)))
        if not det:
            continue
        q = exact_divide(det, f)
        if q is not None and q.is_constant() and q:
            return LinearFreeResult(
                True, tuple(lins[i] for i in subset), None, len(lins)
            )
    return LinearFreeResult(
        False, None, "no n-subset of linear derivations has det = c*f", len(lins)
    )


class LinearPartSpace:
    """Span of the linear parts realizable by singular elements of the
    module generated by the stored derivations."""

    __slots__ = ("n", "basis")

    def __init__(self, n: int, basis):
        self.n = n
        self.basis = tuple(tuple(tuple(row) for row in M) for M in basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis


def singular_linear_part_space(sd: SaitoData) -> LinearPartSpace:
    """Linear parts of singular module elements sum h_i delta_i:

    with v_i the constant part and M_i the linear-part matrix of delta_i, the
    space is {sum c_i M_i : c constant, sum c_i v_i = 0} plus the rank-one
    matrices w * v_i^T for all i and all w (from degree-1 multipliers h_i).
    """
    n = sd.ring.n
    consts = [d.constant_part() for d in sd.derivations]
    mats = [d.linear_part_matrix() for d in sd.derivations]
    candidates = []
    # kernel of c -> sum c_i v_i
    rows = [[consts[i][k] for i in range(sd.m)] for k in range(n)]
    for c in linalg.kernel_basis(rows) if sd.m else []:
        M = [[Fraction(0)] * n for _ in range(n)]
        for i, ci in enumerate(c):
            if ci:
                Mi = mats[i]
                for a in range(n):
                    for b in range(n):
                        M[a][b] += ci * Mi[a][b]
        candidates.append(M)
    # rank-one matrices e_k * v_i^T
    for v in consts:
        if any(v):
            for k in range(n):
                M = [[Fraction(0)] * n for _ in range(n)]
                for b in range(n):
                    M[k][b] = v[b]
                candidates.append(M)
    flat = [[M[a][b] for a in range(n) for b in range(n)] for M in candidates]
    basis_flat = linalg.row_space_basis(flat) if flat else []
    basis = [
        [row[a * n : (a + 1) * n] for a in range(n)] for row in basis_flat
    ]
    return LinearPartSpace(n, basis)


def all_topologically_nilpotent(L: LinearPartSpace, n: int) -> bool:
    """All members of the span are nilpotent iff trace((sum y_i B_i)^k) is the
    zero polynomial for k = 1..n (characteristic zero, Newton identities)."""
    if L.is_zero():
        return True
    d = L.dim
    ring = Ring([f"y{i+1}" for i in range(d)])
    entries = [
        [
            Polynomial(
                ring,
                {
                    tuple(1 if t == i else 0 for t in range(d)): L.basis[i][a][b]
                    for i in range(d)
                    if L.basis[i][a][b]
                },
            )
            for b in range(n)
        ]
        for a in range(n)
    ]
    power = entries
    for _ in range(n):
        trace = ring.zero()
        for a in range(n):
            trace = trace + power[a][a]
        if trace:
            return False
        power = _mat_mul(power, entries, ring)
    return True


def _mat_mul(A, B, ring):
    n = len(A)
    return [
        [
            sum((A[a][k] * B[k][b] for k in range(n)), ring.zero())
            for b in range(n)
        ]
        for a in range(n)
    ]


def exists_nonzero_trace(L: LinearPartSpace) -> bool:
    """The trace functional is nonzero on the space iff it is nonzero on some
    basis element."""
    for M in L.basis:
        if sum((M[a][a] for a in range(L.n)), Fraction(0)):
            return True
    return False


class SehPointResult:
    __slots__ = ("value", "witness", "rank_A", "rank_A_ext")

    def __init__(self, value, witness, rank_A, rank_A_ext):
        self.value = value
        self.witness = witness
        self.rank_A = rank_A
        self.rank_A_ext = rank_A_ext

    def __bool__(self):
        return self.value


def is_seh_at_point(sd: SaitoData, p: Point) -> SehPointResult:
    """Strong Euler-homogeneity at p: rank A~(p) == rank A(p) + 1.

    On success a constant-coefficient witness chi = sum c_i delta_i with
    chi(p) = 0 and cofactor nonvanishing at p is returned (constants always
    suffice); the lexicographically smallest normalized kernel vector wins.
    """
    if evaluate(sd.f, p) != 0:
        raise PreconditionError(f"point {p} does not lie on the divisor")
    A_p = sd.A.evaluate(p)
    Aext_p = sd.A_ext.evaluate(p)
    r_A = linalg.rank(A_p)
    r_ext = linalg.rank(Aext_p)
    value = r_ext == r_A + 1
    witness = None
    if value:
        # c with c^T A(p) = 0 and c^T alpha(p) != 0
        n = sd.ring.n
        rows = [[A_p[i][j] for i in range(sd.m)] for j in range(n)]
        alpha_p = [evaluate(d.cofactor, p) for d in sd.derivations]
        best = None
        for c in linalg.kernel_basis(rows):
            pairing = sum(ci * ai for ci, ai in zip(c, alpha_p))
            if pairing:
                lead = next(x for x in c if x)
                cn = tuple(x / lead for x in c)
                if best is None or cn < best:
                    best = cn
        if best is not None:
            coeffs = [sd.ring.zero()] * n
            cof = sd.ring.zero()
            for ci, d in zip(best, sd.derivations):
                if ci:
                    coeffs = [
                        acc + a * ci for acc, a in zip(coeffs, d.coefficients)
                    ]
                    cof = cof + d.cofactor * ci
            witness = Derivation(coeffs, cof)
            check_derivation(sd.f, witness)
    return SehPointResult(value, witness, r_A, r_ext)


def euler_derivation(f: Polynomial) -> Derivation:
    """The Euler field sum x_i d_i with cofactor deg f, for homogeneous f."""
    homog, deg = is_homogeneous(f)
    if not homog:
        raise PreconditionError("Euler field needs homogeneous f")
    ring = f.ring
    return Derivation(
        [ring.variable(i) for i in range(ring.n)], ring.constant(deg)
    )
