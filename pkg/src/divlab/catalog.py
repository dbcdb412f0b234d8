"""Built-in corpus of reference divisors with certified expected verdicts.

Entries live in data/catalog.jsonl (one JSON object per line after a
``{"catalog_format": 1}`` header).  Expected fields store only certified
facts; everything else a run produces is informational and never diffed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .config import Budget, ResourceLimitError, default_budget, high_budget
from .criteria import ALL_CHECKS, DEFAULT_CHECKS, AnalyzeOptions, analyze
from .ideals import Ideal, germ_radical_equal
from .polycore import Point, Ring, parse_polynomial
from .strata import colon_partials

CATALOG_FORMAT = 1


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    vars: tuple
    poly: str
    expensive: bool
    homogeneous: bool
    expected: dict
    radical_checks: tuple
    point_checks: tuple
    checks_extra: tuple
    notes: tuple
    metadata: dict = field(default_factory=dict)

    def ring(self) -> Ring:
        return Ring(self.vars)

    def polynomial(self):
        return parse_polynomial(self.poly, self.ring())


def _load_entries():
    text = (
        resources.files("divlab").joinpath("data/catalog.jsonl").read_text("utf-8")
    )
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = json.loads(lines[0])
    if header.get("catalog_format") != CATALOG_FORMAT:
        raise ValueError(f"unsupported catalog format: {header}")
    entries = []
    for ln in lines[1:]:
        raw = json.loads(ln)
        flags = raw.get("flags", {})
        entries.append(
            CatalogEntry(
                name=raw["name"],
                vars=tuple(raw["vars"]),
                poly=raw["poly"],
                expensive=bool(flags.get("expensive", False)),
                homogeneous=bool(flags.get("homogeneous", False)),
                expected=raw.get("expected", {}),
                radical_checks=tuple(
                    (c["ideal"], tuple(c["equals"])) for c in raw.get("radical_checks", [])
                ),
                point_checks=tuple(
                    (tuple(c["p"]), bool(c["seh"])) for c in raw.get("point_checks", [])
                ),
                checks_extra=tuple(raw.get("checks_extra", [])),
                notes=tuple(raw.get("notes", [])),
                metadata=raw.get("metadata", {}),
            )
        )
    names = [e.name for e in entries]
    assert len(names) == len(set(names)), "catalog names must be unique"
    return tuple(entries)


_ENTRIES = None


def list_catalog(expensive_only: bool = False):
    """All entries in file order (deterministic)."""
    global _ENTRIES
    if _ENTRIES is None:
        _ENTRIES = _load_entries()
    if expensive_only:
        return tuple(e for e in _ENTRIES if e.expensive)
    return _ENTRIES


def get_entry(name: str) -> CatalogEntry:
    for e in list_catalog():
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


@dataclass
class CatalogResult:
    name: str
    status: str  # PASS | FAIL | SKIP(expensive) | SKIP(limit)
    details: tuple = ()
    report: object = None

    @property
    def ok(self) -> bool:
        return not self.status.startswith("FAIL")


_VERDICT_FIELDS = {
    "reduced": lambda r: r.reduced,
    "product": lambda r: r.product,
    "free": lambda r: r.free,
    "linear_free": lambda r: r.linear_free,
    "seh_on_D0": lambda r: r.seh_on_D0,
    "seh_off_D0": lambda r: r.seh_off_D0,
    "seh": lambda r: r.seh,
    "weak_sh": lambda r: r.weak_sh,
    "sh": lambda r: r.sh,
    "strong_sh": lambda r: r.strong_sh,
    "lct_trace_necessary": lambda r: r.lct_trace_necessary,
    "colon_consistency": lambda r: r.colon_consistency,
    "ljt": lambda r: r.ljt,
}


def _ladder_ideal(report, f, name, budget) -> Ideal:
    ladder = report.ladder
    if name.startswith("Itilde_"):
        return ladder.ideal_I_ext(int(name.split("_")[1]))
    if name.startswith("I_"):
        return ladder.ideal_I(int(name.split("_")[1]))
    if name == "colon":
        return ladder.colon
    if name == "jacobian":
        return ladder.jacobian
    if name.startswith("colon_unit:"):
        u = parse_polynomial(name.split(":", 1)[1], f.ring)
        return colon_partials(f, u, budget)
    raise KeyError(f"unknown ladder ideal {name!r}")


def run_entry(entry: CatalogEntry, budget: Optional[Budget] = None) -> CatalogResult:
    """Analyze one entry and diff it against its certified expectations.

    Every comparison is exact; a resource limit anywhere yields SKIP(limit)
    rather than FAIL.
    """
    budget = budget or default_budget()
    f = entry.polynomial()
    ring = f.ring
    checks = DEFAULT_CHECKS | (frozenset(entry.checks_extra) & ALL_CHECKS)
    points = tuple(Point(ring, p) for p, _ in entry.point_checks)
    try:
        report = analyze(
            f, AnalyzeOptions(checks=checks, points=points, budget=budget)
        )
        failures = []
        for key, want in entry.expected.items():
            if key in ("dims_D", "dims_D_ext"):
                dims = getattr(report, key)
                for idx, val in want.items():
                    got = dims[int(idx)]
                    if got != val:
                        failures.append(f"{key}[{idx}] = {got}, expected {val}")
                continue
            verdict = _VERDICT_FIELDS[key](report)
            if verdict is None:
                failures.append(f"{key} was not computed")
            elif verdict.value != want:
                failures.append(f"{key} = {verdict.value}, expected {want}")
        for ideal_name, gens_txt in entry.radical_checks:
            I = _ladder_ideal(report, f, ideal_name, budget)
            J = Ideal(ring, [parse_polynomial(s, ring) for s in gens_txt])
            if not germ_radical_equal(I, J, budget):
                failures.append(
                    f"sqrt({ideal_name}) != sqrt(({', '.join(gens_txt)})) at the origin"
                )
        for (coords, want_seh), pv in zip(entry.point_checks, report.points):
            if pv.seh != want_seh:
                failures.append(
                    f"seh at ({', '.join(coords)}) = {pv.seh}, expected {want_seh}"
                )
        if failures:
            return CatalogResult(entry.name, "FAIL", tuple(failures), report)
        return CatalogResult(entry.name, "PASS", (), report)
    except ResourceLimitError as exc:
        return CatalogResult(entry.name, "SKIP(limit)", (str(exc),))


def run_catalog(
    name: Optional[str] = None,
    budget: str = "default",
    budget_obj: Optional[Budget] = None,
):
    """Run one entry (by name) or all of them; returns CatalogResult rows.

    Expensive entries are skipped under the default budget unless named
    explicitly.
    """
    if budget_obj is None:
        budget_obj = high_budget() if budget == "high" else default_budget()
    if name is not None:
        return [run_entry(get_entry(name), budget_obj)]
    rows = []
    for entry in list_catalog():
        if entry.expensive and budget != "high":
            rows.append(CatalogResult(entry.name, "SKIP(expensive)"))
            continue
        rows.append(run_entry(entry, budget_obj))
    return rows
