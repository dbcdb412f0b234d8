"""Decision procedures for the divisor singularity properties, composed from
the Saito data and the minor ladder, with evidence-carrying verdicts.

Semantics: all properties are decided for the germ at the origin.  Radical
comparisons are localized there (see ideals.germ_radical_equal); dimensions of
the loci are global affine dimensions, which agree with the germ dimensions
for quasi-homogeneous f and otherwise carry a WARNING.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .config import Budget, PreconditionError, default_budget
from .ideals import (
    Ideal,
    contains,
    dimension,
    eliminate,
    germ_radical_equal,
    radical_equal,
    vanishes_at_origin,
)
from .logder import (
    Derivation,
    FreeBasisResult,
    LinearFreeResult,
    LinearPartSpace,
    SaitoData,
    all_topologically_nilpotent,
    euler_derivation,
    exists_nonzero_trace,
    format_derivation,
    free_basis_at_origin,
    is_linear_free,
    is_product_at_origin,
    is_seh_at_point,
    logarithmic_derivations,
    singular_linear_part_space,
)
from .polycore import (
    Point,
    Polynomial,
    Ring,
    evaluate,
    format_polynomial,
    gradient,
    is_homogeneous,
)
from .strata import MinorLadder, colon_partials, minor_ladder


@dataclass(frozen=True)
class Verdict:
    """A boolean answer plus the evidence that re-derives it."""

    value: bool
    evidence: tuple = ()
    warnings: tuple = ()

    def to_json(self):
        return {"value": self.value, "evidence": [list(e) for e in self.evidence]}


def _ideal_strings(I: Ideal, budget=None, use_gb=True) -> list:
    gens = I.groebner_basis(budget=budget) if use_gb else I.generators
    return [format_polynomial(g) for g in gens]


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def check_reduced(f: Polynomial, budget: Optional[Budget] = None) -> Verdict:
    """Squarefreeness in characteristic zero: dim V(Jacobian ideal) <= n-2."""
    if not f:
        raise PreconditionError("f must be nonzero")
    if f.is_constant():
        raise PreconditionError("f must be nonconstant")
    if f.constant_term() != 0:
        raise PreconditionError("f(0) must be 0")
    budget = budget or default_budget()
    n = f.ring.n
    jac = Ideal(f.ring, list(gradient(f)) + [f])
    d = dimension(jac, budget=budget)
    return Verdict(
        d <= n - 2,
        evidence=(("dim_singular_locus", d), ("bound", n - 2)),
    )


def check_product(sd: SaitoData) -> Verdict:
    res = is_product_at_origin(sd)
    ev = []
    if res.value:
        ev.append(("nonsingular_derivation", format_derivation(res.witness)))
    else:
        ev.append(("all_generators_singular", sd.m))
    return Verdict(res.value, tuple(ev))


def check_free(sd: SaitoData, budget: Optional[Budget] = None) -> Verdict:
    res = free_basis_at_origin(sd, budget)
    if res.found:
        ev = (
            ("basis", [format_derivation(d) for d in res.basis]),
            ("det_over_f", format_polynomial(res.quotient)),
        )
        return Verdict(True, ev)
    ev = (
        ("subsets_tried", res.subsets_tried),
        ("failures", [f"{list(s)}: {why}" for s, why in res.failures[:8]]),
    )
    return Verdict(False, ev)


def check_linear_free(f: Polynomial, budget: Optional[Budget] = None) -> Verdict:
    homog, deg = is_homogeneous(f)
    if not homog:
        return Verdict(False, (("reason", "f is not homogeneous"),))
    res = is_linear_free(f, budget)
    if res.value:
        ev = (
            ("basis", [format_derivation(d) for d in res.basis]),
            ("linear_derivation_space_dim", res.space_dim),
        )
        return Verdict(True, ev)
    return Verdict(
        False,
        (("reason", res.reason), ("linear_derivation_space_dim", res.space_dim)),
    )


def check_seh_on_D0(ladder: MinorLadder, budget: Optional[Budget] = None) -> Verdict:
    """Strong Euler-homogeneity on D_0: the entries of the extended Saito
    matrix generate the unit ideal at the origin (equivalently the germ
    D~_0 is empty)."""
    budget = budget or default_budget()
    I1e = ladder.ideal_I_ext(1)
    germ_unit = not vanishes_at_origin(I1e, budget)
    global_unit = I1e.is_unit(budget)
    ev = [("Itilde_1_unit_at_origin", germ_unit), ("Itilde_1_unit_globally", global_unit)]
    return Verdict(germ_unit, tuple(ev))


def check_seh_off_D0(ladder: MinorLadder, budget: Optional[Budget] = None) -> Verdict:
    """Strong Euler-homogeneity off D_0: sqrt(I~_{i+1}) = sqrt(I_i) for
    i = 1..n-2, as germs at the origin.  Vacuously true for n = 2."""
    budget = budget or default_budget()
    n = ladder.n
    ev = []
    value = True
    for i in range(1, n - 1):
        eq = germ_radical_equal(ladder.ideal_I_ext(i + 1), ladder.ideal_I(i), budget)
        ev.append((f"sqrt(Itilde_{i+1}) == sqrt(I_{i})", eq))
        if not eq:
            value = False
            ev.append((f"Itilde_{i+1}", _ideal_strings(ladder.ideal_I_ext(i + 1), budget)))
            ev.append((f"I_{i}", _ideal_strings(ladder.ideal_I(i), budget)))
            break
    if n == 2:
        ev.append(("vacuous", "n = 2"))
    return Verdict(value, tuple(ev))


def check_seh(ladder: MinorLadder, budget: Optional[Budget] = None) -> Verdict:
    """Conjunction of the on-D_0 and off-D_0 criteria."""
    on = check_seh_on_D0(ladder, budget)
    off = check_seh_off_D0(ladder, budget)
    value = on.value and off.value
    ev = []
    if not on.value:
        ev.append(("fails", "Itilde_1 != (1)"))
    if not off.value:
        failed = next(label for label, ok in off.evidence if ok is False)
        ev.append(("fails", failed.replace(" == ", " != ")))
    return Verdict(value, tuple(ev))


def _sh_dims_verdict(dims, bound_shift, rng, label) -> tuple:
    ev = [(label, list(dims))]
    value = True
    for i in rng:
        if dims[i] > i + bound_shift:
            value = False
            ev.append(("fails", f"dim {label}_{i} = {dims[i]} > {i + bound_shift}"))
            break
    return value, ev


def check_weak_sh(ladder: MinorLadder) -> Verdict:
    """Weak Saito-holonomicity: dim D~_i <= i for i = 0..n-3."""
    value, ev = _sh_dims_verdict(
        ladder.dims_D_ext, 0, range(0, max(ladder.n - 2, 0)), "Dtilde"
    )
    return Verdict(value, tuple(ev))


def check_sh(ladder: MinorLadder) -> Verdict:
    """Saito-holonomicity: dim D_i <= i for i = 0..n-3."""
    value, ev = _sh_dims_verdict(
        ladder.dims_D, 0, range(0, max(ladder.n - 2, 0)), "D"
    )
    return Verdict(value, tuple(ev))


def check_strong_sh(ladder: MinorLadder, budget: Optional[Budget] = None) -> Verdict:
    """Strong Saito-holonomicity: D~_0 empty and dim D~_i <= i-1 for
    i = 1..n-2."""
    budget = budget or default_budget()
    on = check_seh_on_D0(ladder, budget)
    ev = [("Itilde_1_unit_at_origin", on.value)]
    if not on.value:
        return Verdict(False, (("fails", "Itilde_1 != (1)"),) + tuple(ev))
    value, dim_ev = _sh_dims_verdict(
        ladder.dims_D_ext, -1, range(1, max(ladder.n - 1, 1)), "Dtilde"
    )
    return Verdict(value, tuple(ev + dim_ev))


def check_lct_trace_necessary(
    space: LinearPartSpace, free: Optional[Verdict] = None
) -> Verdict:
    """Necessary condition for the logarithmic comparison theorem: a singular
    logarithmic derivation with nonzero trace must exist.  False means LCT is
    impossible for this germ; the theorem assumes freeness at the origin, so
    without it the verdict is marked inapplicable."""
    ev = []
    warnings = ()
    if free is not None and not free.value:
        ev.append(("inapplicable", "divisor not established free at the origin"))
        warnings = ("trace criterion requires freeness; verdict not applicable",)
        return Verdict(True, tuple(ev), warnings)
    has_trace = exists_nonzero_trace(space)
    ev.append(("linear_part_space_dim", space.dim))
    ev.append(("nonzero_trace_exists", has_trace))
    ev.append(
        ("conclusion", "no obstruction found" if has_trace else "LCT impossible")
    )
    return Verdict(has_trace, tuple(ev))


def check_colon_consistency(
    ladder: MinorLadder,
    f: Polynomial,
    budget: Optional[Budget] = None,
    unit: Optional[Polynomial] = None,
) -> Verdict:
    """When the divisor is strongly Euler-homogeneous off D_0, the germ of
    V(colon ideal) is D~_0, so sqrt(Itilde_1) = sqrt(colon) is asserted; when
    it is not, both radicals are only reported."""
    budget = budget or default_budget()
    off = check_seh_off_D0(ladder, budget)
    ev = [
        ("colon_ideal", _ideal_strings(ladder.colon, budget)),
        ("Itilde_1", _ideal_strings(ladder.ideal_I_ext(1), budget)),
    ]
    if unit is not None:
        ev.append(
            (
                f"colon_ideal_for_unit({format_polynomial(unit)})",
                _ideal_strings(colon_partials(f, unit, budget), budget),
            )
        )
    if off.value:
        eq = germ_radical_equal(ladder.ideal_I_ext(1), ladder.colon, budget)
        ev.append(("sqrt(Itilde_1) == sqrt(colon)", eq))
        return Verdict(eq, tuple(ev))
    ev.append(("not_asserted", "divisor not strongly Euler-homogeneous off D_0"))
    return Verdict(True, tuple(ev))


# ---------------------------------------------------------------------------
# linear Jacobian type (optional, flagged expensive)
# ---------------------------------------------------------------------------


class ReesKernelData:
    """ker1 = ideal of the degree-1 relations sum_j a_ij xi_j - alpha_i s;
    ker = full kernel of O[xi, s] -> Rees(J_f), by eliminating the Rees
    parameter from (xi_j - t d_j f, s - t f)."""

    __slots__ = ("ring_ext", "ker1", "ker")

    def __init__(self, ring_ext, ker1, ker):
        self.ring_ext = ring_ext
        self.ker1 = ker1
        self.ker = ker


def rees_kernel(
    sd: SaitoData, budget: Optional[Budget] = None
) -> ReesKernelData:
    budget = budget or default_budget()
    ring = sd.ring
    n = ring.n
    xi_names = ring.fresh_names([f"xi{i+1}" for i in range(n)] + ["s"])
    ext = ring.extend(xi_names)  # x..., xi..., s
    width = ext.n

    def lift_x(p: Polynomial, extra=(0,) * 100):
        return Polynomial(ext, {m + (0,) * (width - n): c for m, c in p.terms.items()})

    def var(i):
        return ext.variable(i)

    xis = [var(n + i) for i in range(n)]
    s = var(width - 1)
    # ker1 from the generating derivations
    ker1_gens = []
    for d in sd.derivations:
        sym = ext.zero()
        for j, a in enumerate(d.coefficients):
            if a:
                sym = sym + lift_x(a) * xis[j]
        sym = sym - lift_x(d.cofactor) * s
        if sym:
            ker1_gens.append(sym)
    ker1 = Ideal(ext, ker1_gens)
    # ker: eliminate t from (xi_j - t*d_j f, s - t*f) with t leading
    (tname,) = ext.fresh_names(["tr"])
    big = Ring((tname,) + ext.names)
    t = big.variable(0)

    def lift_big(p: Polynomial):
        return Polynomial(big, {(0,) + m + (0,) * (width - n): c for m, c in p.terms.items()})

    def lift_ext(p: Polynomial):
        return Polynomial(big, {(0,) + m: c for m, c in p.terms.items()})

    gens = []
    grads = gradient(sd.f)
    for j in range(n):
        gens.append(lift_ext(xis[j]) - t * lift_big(grads[j]))
    gens.append(lift_ext(s) - t * lift_big(sd.f))
    ker = eliminate(Ideal(big, gens), 1, budget)
    ker = Ideal(ext, [Polynomial(ext, g.terms) for g in ker.generators])
    # sanity: the degree-1 kernel lies inside the full kernel
    for g in ker1.generators:
        assert ker.contains(g, budget), "ker1 escaped the Rees kernel"
    return ReesKernelData(ext, ker1, ker)


def check_linear_jacobian_type(
    sd: SaitoData, budget: Optional[Budget] = None
) -> Verdict:
    """Linear Jacobian type: the full Rees kernel is generated by its
    degree-1 part (membership of every kernel generator in ker1)."""
    budget = budget or default_budget()
    data = rees_kernel(sd, budget)
    missing = []
    for g in data.ker.generators:
        if not data.ker1.contains(g, budget):
            missing.append(format_polynomial(g))
    ev = (
        ("ker_generators", len(data.ker.generators)),
        ("ker1_generators", len(data.ker1.generators)),
        ("kernel_generators_outside_ker1", missing[:6]),
    )
    return Verdict(not missing, ev)


# ---------------------------------------------------------------------------
# quasi-homogeneity detection (for the germ-vs-global warning)
# ---------------------------------------------------------------------------


def quasihomogeneous_weights(f: Polynomial):
    """Strictly positive rational weights making f weighted-homogeneous in
    the given coordinates, or None.  Exact Fourier-Motzkin feasibility."""
    exps = list(f.terms)
    if not exps:
        return None
    n = f.ring.n
    e0 = exps[0]
    rows = [[Fraction(e[i] - e0[i]) for i in range(n)] for e in exps[1:]]
    kernel = linalg.kernel_basis(rows) if rows else [
        [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    if not kernel:
        return None
    d = len(kernel)
    # w_i = sum_j t_j * kernel[j][i] >= 1
    ineqs = []
    for i in range(n):
        coefs = [kernel[j][i] for j in range(d)]
        ineqs.append((coefs, Fraction(1)))  # coefs . t >= rhs
    t = _fourier_motzkin_point(ineqs, d)
    if t is None:
        return None
    w = [sum(t[j] * kernel[j][i] for j in range(d)) for i in range(n)]
    assert all(wi >= 1 for wi in w)
    return tuple(w)


def _fourier_motzkin_point(ineqs, d):
    """A rational solution of {coefs . t >= rhs} in d variables, or None.

    Variables are eliminated from the back.  After dividing by |c|, an
    inequality head.t + c*t_d >= rhs becomes t_d >= r - h.t (c > 0, "lower")
    or t_d <= r - h.t (c < 0, "upper"); each lower/upper pair combines into
    (h_u - h_l).t >= r_l - r_u.
    """
    if d == 0:
        return [] if all(rhs <= 0 for _, rhs in ineqs) else None
    lower, upper, rest = [], [], []
    for coefs, rhs in ineqs:
        c = coefs[-1]
        head = coefs[:-1]
        if c > 0:
            lower.append(([x / c for x in head], rhs / c))
        elif c < 0:
            upper.append(([x / -c for x in head], rhs / -c))
        else:
            rest.append((head, rhs))
    # lower (h, r): t_d >= r - h.t ; upper (h, r): t_d <= h.t - r... recheck:
    # c < 0: divide by c (negative) flips: t_d <= (rhs - head.t)/c applied via
    # |c|: head.t + c t_d >= rhs  <=>  (head/|c|).t - t_d >= rhs/|c|
    # <=> t_d <= (head/|c|).t - rhs/|c|.  Stored upper (h, r): t_d <= h.t - r.
    combined = list(rest)
    for lh, lr in lower:
        for uh, ur in upper:
            # r_l - h_l.t <= t_d <= h_u.t - r_u  =>  (h_l + h_u).t >= r_l + r_u
            coefs = [a + b for a, b in zip(lh, uh)]
            combined.append((coefs, lr + ur))
    sub = _fourier_motzkin_point(combined, d - 1)
    if sub is None:
        return None
    lo = None
    hi = None
    for lh, lr in lower:
        v = lr - sum(a * t for a, t in zip(lh, sub))
        lo = v if lo is None or v > lo else lo
    for uh, ur in upper:
        v = sum(a * t for a, t in zip(uh, sub)) - ur
        hi = v if hi is None or v < hi else hi
    if lo is None and hi is None:
        td = Fraction(0)
    elif lo is None:
        td = hi
    elif hi is None:
        td = lo
    else:
        if lo > hi:
            return None
        td = (lo + hi) / 2
    return sub + [td]


# ---------------------------------------------------------------------------
# the report
# ---------------------------------------------------------------------------


ALL_CHECKS = frozenset({"product", "free", "linear_free", "seh", "sh", "trace", "colon", "ljt"})
DEFAULT_CHECKS = ALL_CHECKS - {"ljt"}


@dataclass
class AnalyzeOptions:
    checks: frozenset = DEFAULT_CHECKS
    points: tuple = ()
    unit: Optional[Polynomial] = None
    budget: Optional[Budget] = None
    validate_ladder: bool = True


@dataclass
class PointVerdict:
    point: Point
    seh: bool
    witness: Optional[Derivation]


@dataclass
class DivisorReport:
    f: Polynomial
    ring: Ring
    homogeneous: bool
    degree: Optional[int]
    quasihomogeneous_weights: Optional[tuple]
    reduced: Verdict
    product: Optional[Verdict] = None
    free: Optional[Verdict] = None
    linear_free: Optional[Verdict] = None
    seh_on_D0: Optional[Verdict] = None
    seh_off_D0: Optional[Verdict] = None
    seh: Optional[Verdict] = None
    weak_sh: Optional[Verdict] = None
    sh: Optional[Verdict] = None
    strong_sh: Optional[Verdict] = None
    koszul_alias: bool = False
    lct_trace_necessary: Optional[Verdict] = None
    colon_consistency: Optional[Verdict] = None
    ljt: Optional[Verdict] = None
    dims_D: Optional[tuple] = None
    dims_D_ext: Optional[tuple] = None
    generators: tuple = ()
    points: tuple = ()
    warnings: tuple = ()
    runtime: dict = field(default_factory=dict)
    # computation artifacts for programmatic use; never serialized
    saito: Optional[SaitoData] = None
    ladder: Optional[MinorLadder] = None

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        out = {
            "input": {
                "poly": format_polynomial(self.f),
                "vars": list(self.ring.names),
                "homogeneous": self.homogeneous,
            },
            "warnings": list(self.warnings),
        }
        if self.degree is not None:
            out["input"]["degree"] = self.degree
        out["reduced"] = self.reduced.to_json()
        for name in ("product", "free", "linear_free"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v.to_json()
        seh = {}
        if self.seh_on_D0 is not None:
            seh["on_D0"] = self.seh_on_D0.to_json()
        if self.seh_off_D0 is not None:
            seh["off_D0"] = self.seh_off_D0.to_json()
        if self.seh is not None:
            seh["everywhere"] = self.seh.to_json()
        if seh:
            out["seh"] = seh
        sh = {}
        if self.weak_sh is not None:
            sh["weak"] = self.weak_sh.to_json()
        if self.sh is not None:
            sh["plain"] = self.sh.to_json()
        if self.strong_sh is not None:
            sh["strong"] = self.strong_sh.to_json()
        if sh:
            sh["koszul_alias"] = self.koszul_alias
            out["saito_holonomicity"] = sh
        if self.lct_trace_necessary is not None:
            out["lct_trace_necessary"] = self.lct_trace_necessary.to_json()
        if self.colon_consistency is not None:
            out["colon_consistency"] = self.colon_consistency.to_json()
        if self.ljt is not None:
            out["linear_jacobian_type"] = self.ljt.to_json()
        if self.dims_D is not None:
            out["ladder"] = {
                "dims_D": list(self.dims_D),
                "dims_D_ext": list(self.dims_D_ext),
            }
        out["derivations"] = [
            {
                "coefficients": [format_polynomial(a) for a in d.coefficients],
                "cofactor": format_polynomial(d.cofactor),
            }
            for d in self.generators
        ]
        out["points"] = [
            {
                "p": [str(c) for c in pv.point.coordinates],
                "seh": pv.seh,
                **(
                    {"witness": format_derivation(pv.witness)}
                    if pv.witness is not None
                    else {}
                ),
            }
            for pv in self.points
        ]
        out["runtime"] = dict(self.runtime)
        return out


def analyze(f: Polynomial, options: Optional[AnalyzeOptions] = None) -> DivisorReport:
    """Run the selected checks on the divisor defined by f and assemble the
    report.  Raises PreconditionError for non-reduced input or input not
    passing through the origin."""
    options = options or AnalyzeOptions()
    budget = options.budget or default_budget()
    checks = options.checks
    t_start = time.monotonic()
    runtime = {}

    homog, deg = is_homogeneous(f) if f else (False, None)
    qh = quasihomogeneous_weights(f)
    warnings = []
    if qh is None:
        warnings.append(
            "f is not quasi-homogeneous in the given coordinates: reported "
            "dimensions are global affine dimensions, Saito-holonomicity "
            "verdicts use them as germ dimensions at 0"
        )

    reduced = check_reduced(f, budget)
    if not reduced.value:
        raise PreconditionError(
            "f is not reduced (squarefree): the singular locus has dimension n-1"
        )

    t0 = time.monotonic()
    sd = logarithmic_derivations(f, budget)
    runtime["derivations_s"] = round(time.monotonic() - t0, 3)

    report = DivisorReport(
        f=f,
        ring=f.ring,
        homogeneous=homog,
        degree=deg if homog else None,
        quasihomogeneous_weights=qh,
        reduced=reduced,
        generators=sd.derivations,
        saito=sd,
    )

    if "product" in checks:
        report.product = check_product(sd)
    if "free" in checks:
        t0 = time.monotonic()
        report.free = check_free(sd, budget)
        runtime["free_s"] = round(time.monotonic() - t0, 3)
    if "linear_free" in checks:
        report.linear_free = check_linear_free(f, budget)

    need_ladder = checks & {"seh", "sh", "colon"}
    ladder = None
    if need_ladder:
        t0 = time.monotonic()
        ladder = minor_ladder(sd, budget, validate=options.validate_ladder)
        runtime["ladder_s"] = round(time.monotonic() - t0, 3)
        report.ladder = ladder
        report.dims_D = ladder.dims_D
        report.dims_D_ext = ladder.dims_D_ext

    if "seh" in checks:
        t0 = time.monotonic()
        report.seh_on_D0 = check_seh_on_D0(ladder, budget)
        report.seh_off_D0 = check_seh_off_D0(ladder, budget)
        report.seh = check_seh(ladder, budget)
        runtime["seh_s"] = round(time.monotonic() - t0, 3)
    if "sh" in checks:
        report.weak_sh = check_weak_sh(ladder)
        report.sh = check_sh(ladder)
        report.strong_sh = check_strong_sh(ladder, budget)
        report.koszul_alias = bool(report.free and report.free.value)
        if qh is None:
            for name in ("weak_sh", "sh", "strong_sh"):
                v = getattr(report, name)
                setattr(
                    report,
                    name,
                    Verdict(
                        v.value,
                        v.evidence,
                        v.warnings
                        + ("global dimensions used (f not quasi-homogeneous)",),
                    ),
                )
    if "trace" in checks:
        space = singular_linear_part_space(sd)
        report.lct_trace_necessary = check_lct_trace_necessary(space, report.free)
        if qh is None:
            v = report.lct_trace_necessary
            report.lct_trace_necessary = Verdict(
                v.value,
                v.evidence,
                v.warnings
                + ("linear-part space relative to the computed generating set",),
            )
    if "colon" in checks:
        report.colon_consistency = check_colon_consistency(
            ladder, f, budget, options.unit
        )
    if "ljt" in checks:
        t0 = time.monotonic()
        report.ljt = check_linear_jacobian_type(sd, budget)
        runtime["ljt_s"] = round(time.monotonic() - t0, 3)

    for p in options.points:
        if evaluate(f, p) != 0:
            raise PreconditionError(f"query point {p} does not lie on the divisor")
        res = is_seh_at_point(sd, p)
        report.points += (PointVerdict(p, res.value, res.witness),)

    report.warnings = tuple(warnings) + _collect_verdict_warnings(report)
    runtime["total_s"] = round(time.monotonic() - t_start, 3)
    report.runtime = runtime
    _assert_cross_consistency(report, sd)
    return report


def _collect_verdict_warnings(report: DivisorReport) -> tuple:
    out = []
    for name in (
        "reduced",
        "product",
        "free",
        "linear_free",
        "seh_on_D0",
        "seh_off_D0",
        "seh",
        "weak_sh",
        "sh",
        "strong_sh",
        "lct_trace_necessary",
        "colon_consistency",
        "ljt",
    ):
        v = getattr(report, name)
        if v is not None:
            out.extend(v.warnings)
    return tuple(dict.fromkeys(out))


def _assert_cross_consistency(report: DivisorReport, sd: SaitoData) -> None:
    """Implication chain and equivalence checks; a failure is a kernel bug,
    never a property of the input."""
    weak = report.weak_sh.value if report.weak_sh else None
    plain = report.sh.value if report.sh else None
    strong = report.strong_sh.value if report.strong_sh else None
    seh = report.seh.value if report.seh else None
    if strong and plain is not None:
        assert plain, "strong Saito-holonomic must imply Saito-holonomic"
    if plain and weak is not None:
        assert weak, "Saito-holonomic must imply weakly Saito-holonomic"
    if plain and strong is not None and seh is not None:
        assert strong == seh, "with Saito-holonomicity, strong SH must equal SEH"
    if strong and seh is not None:
        assert seh, "strong Saito-holonomicity must imply strong Euler-homogeneity"
    if report.ljt is not None and report.ljt.value and strong is not None:
        assert strong, "linear Jacobian type must imply strong Saito-holonomicity"
    if report.homogeneous and report.lct_trace_necessary is not None:
        if report.free is not None and report.free.value:
            assert (
                report.lct_trace_necessary.value
            ), "homogeneous f admits the Euler field: nonzero trace must exist"
    if seh:
        # the origin is on the divisor; SEH near 0 must hold at 0 itself
        res = is_seh_at_point(sd, sd.ring.point([0] * sd.ring.n))
        assert res.value, "ladder-level SEH must imply SEH at the origin"
