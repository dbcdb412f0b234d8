"""Minor (Fitting) ideal ladders of the Saito matrices and the induced
stratification of the singular locus into Euler-homogeneous and
non-Euler-homogeneous pieces.

Conventions (n = ambient dimension, A the m x n Saito matrix, A~ extended):
  I_i    = ideal of i x i minors of A          (i = 1..n)
  I~_i   = ideal of i x i minors of A~
  D_i    = V(I_{i+1}),  D~_i = V(I~_{i+1})     (i = 0..n-1)
Minors of order n+1 of A~ vanish identically and are skipped.  All ideals of
one ladder share a single memo of subdeterminants of A~.
"""

from __future__ import annotations

from typing import Optional

from .config import Budget, PreconditionError, default_budget
from .ideals import (
    Ideal,
    dimension,
    germ_radical_membership,
    ideal_quotient,
    minors,
    radical_contains,
    radical_equal,
)
from .logder import SaitoData
from .polycore import Polynomial, gradient


class MinorLadder:
    """All minor ideals of one divisor, with cached dimensions.

    dims_D[i] = dim D_i = dim V(I_{i+1}); empty loci have dimension -1.
    """

    __slots__ = (
        "sd",
        "ring",
        "n",
        "I",
        "I_ext",
        "jacobian",
        "colon",
        "dims_D",
        "dims_D_ext",
    )

    def __init__(self, sd, I, I_ext, jacobian, colon, dims_D, dims_D_ext):
        self.sd = sd
        self.ring = sd.ring
        self.n = sd.ring.n
        self.I = I
        self.I_ext = I_ext
        self.jacobian = jacobian
        self.colon = colon
        self.dims_D = dims_D
        self.dims_D_ext = dims_D_ext

    def ideal_I(self, i: int) -> Ideal:
        """I_i for 1 <= i <= n (I_i = (1) for i <= 0)."""
        if i <= 0:
            return Ideal(self.ring, [self.ring.one()])
        return self.I[i - 1]

    def ideal_I_ext(self, i: int) -> Ideal:
        if i <= 0:
            return Ideal(self.ring, [self.ring.one()])
        return self.I_ext[i - 1]


def minor_ladder(
    sd: SaitoData, budget: Optional[Budget] = None, validate: bool = True
) -> MinorLadder:
    """Build the full ladder from Saito data; ladder invariants are
    assert-checked on construction unless ``validate`` is off."""
    budget = budget or default_budget()
    n = sd.ring.n
    f = sd.f
    A = sd.A
    A_ext = sd.A_ext
    I = tuple(minors(A, i) for i in range(1, n + 1))
    I_ext = tuple(minors(A_ext, i) for i in range(1, n + 1))
    grads = list(gradient(f))
    jacobian = Ideal(sd.ring, grads + [f])
    colon = ideal_quotient(Ideal(sd.ring, grads), f, budget=budget)
    dims_D = tuple(dimension(I[i], budget=budget) for i in range(n))
    dims_D_ext = tuple(dimension(I_ext[i], budget=budget) for i in range(n))
    ladder = MinorLadder(sd, I, I_ext, jacobian, colon, dims_D, dims_D_ext)
    if validate:
        _validate_ladder(ladder, budget)
    return ladder


def _validate_ladder(ladder: MinorLadder, budget: Budget) -> None:
    """Assert the chain/bridge inclusions and the radical caps.

    These are theorems for any squarefree f, so a failure here is a bug in
    the kernel, not a property of the input.
    """
    n = ladder.n
    I, I_ext = ladder.I, ladder.I_ext
    for i in range(n - 1):
        for g in I[i + 1].generators:
            assert I[i].contains(g, budget), f"I_{i+2} not inside I_{i+1}"
        for g in I_ext[i + 1].generators:
            assert I_ext[i].contains(g, budget), f"I~_{i+2} not inside I~_{i+1}"
    for i in range(n):
        for g in I[i].generators:
            assert I_ext[i].contains(g, budget), f"I_{i+1} not inside I~_{i+1}"
    # bridge: I~_{i+1} inside I_{i+1} + colon * I_i  (i = 1..n-1)
    colon_gens = list(ladder.colon.generators)
    for i in range(1, n):
        prev_gb = I[i - 1].groebner_basis(budget=budget)
        mix = list(I[i].generators) + [c * g for c in colon_gens for g in prev_gb]
        bridge = Ideal(ladder.ring, mix)
        for g in I_ext[i].generators:
            assert bridge.contains(g, budget), f"bridge fails at level {i + 1}"
    # radical caps: sqrt(I_n) = sqrt(f), sqrt(I~_n) = sqrt(Jacobian ideal)
    f_ideal = Ideal(ladder.ring, [ladder.sd.f])
    assert radical_equal(I[n - 1], f_ideal, budget), "sqrt(I_n) != sqrt(f)"
    assert radical_equal(
        I_ext[n - 1], ladder.jacobian, budget
    ), "sqrt(I~_n) != sqrt(Jacobian)"
    # V(colon) inside Sing D as germs at the origin (globally this can fail:
    # critical points of f off the divisor lie in V(colon) but not in Sing D)
    if not ladder.colon.is_unit(budget):
        for g in ladder.jacobian.generators:
            assert germ_radical_membership(
                g, ladder.colon, budget
            ), "V(colon) escapes the singular locus near the origin"


def colon_partials(
    f: Polynomial, u: Optional[Polynomial] = None, budget: Optional[Budget] = None
) -> Ideal:
    """The cofactor ideal (d_1 g, ..., d_n g) : g for g = u*f (g = f when u is
    absent).  Unlike the minor ideals this depends on the chosen equation."""
    budget = budget or default_budget()
    if u is not None:
        if u.constant_term() == 0:
            raise PreconditionError("unit factor must not vanish at the origin")
        g = u * f
    else:
        g = f
    return ideal_quotient(Ideal(g.ring, list(gradient(g))), g, budget=budget)


class StratumPiece:
    """A locally closed piece presented as closure \\ boundary (ideal pair)."""

    __slots__ = ("level", "kind", "closure", "boundary", "empty")

    def __init__(self, level, kind, closure, boundary, empty):
        self.level = level
        self.kind = kind  # "seh" (D_i \ D~_i) or "non_seh" (D~_i \ D_{i-1})
        self.closure = closure
        self.boundary = boundary
        self.empty = empty


class StratumReport:
    __slots__ = ("pieces",)

    def __init__(self, pieces):
        self.pieces = tuple(pieces)

    def non_seh_nonempty(self):
        return [p for p in self.pieces if p.kind == "non_seh" and not p.empty]

    def seh_nonempty(self):
        return [p for p in self.pieces if p.kind == "seh" and not p.empty]


def stratification(
    ladder: MinorLadder, budget: Optional[Budget] = None
) -> StratumReport:
    """Pieces D_i \\ D~_i (points where the divisor is strongly
    Euler-homogeneous) and D~_i \\ D_{i-1} (points where it is not), for
    i = 0..n-2.  V(c) \\ V(b) is empty iff b lies in sqrt(c)."""
    budget = budget or default_budget()
    pieces = []
    for i in range(ladder.n - 1):
        closure = ladder.ideal_I(i + 1)
        boundary = ladder.ideal_I_ext(i + 1)
        empty = radical_contains(closure, boundary, budget)
        pieces.append(StratumPiece(i, "seh", closure, boundary, empty))
        closure = ladder.ideal_I_ext(i + 1)
        boundary = ladder.ideal_I(i)
        empty = radical_contains(closure, boundary, budget)
        pieces.append(StratumPiece(i, "non_seh", closure, boundary, empty))
    return StratumReport(pieces)
