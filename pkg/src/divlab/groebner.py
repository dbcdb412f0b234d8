"""Buchberger engine over the rationals.

Internally all heavy reduction runs on integer coefficient dictionaries
(denominators cleared, content stripped), which is markedly faster than
Fraction arithmetic; the public layer converts back to monic rational
polynomials.  Three related algorithms live here:

* the plain ideal Groebner basis (Gebauer-Moeller pair elimination, sugar
  selection, early exit as soon as the ideal is seen to be the unit ideal);
* a syzygy-producing run that tracks, for every basis element, an exact
  representation in terms of the input vector, and emits a generating set of
  the full syzygy module.  Its pair elimination is the conservative chain
  criterion (both replacement lcms must *strictly* divide the eliminated one),
  which keeps the surviving leading-term syzygies a generating set; coprime
  pairs skip their division and contribute the Koszul syzygy instead;
* an incremental module Groebner basis over R^c (monomial-over-position
  order) used for submodule membership, module equality and pruning.

Every loop that can run away is metered by a Budget (pair count, degree).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from .config import Budget, ResourceLimitError

# basis entry slots
_LM, _DEG, _LC, _TERMS, _SUGAR, _MAXDEG = range(6)


# ---------------------------------------------------------------------------
# term-dict helpers
# ---------------------------------------------------------------------------


def intify(terms: dict) -> dict:
    """Clear denominators and strip content; empty dict for zero."""
    if not terms:
        return {}
    den = 1
    for c in terms.values():
        d = c.denominator if isinstance(c, Fraction) else 1
        den = den * d // gcd(den, d)
    out = {}
    g = 0
    for m, c in terms.items():
        v = int(c * den)
        if v:
            out[m] = v
            g = gcd(g, abs(v))
    if g > 1:
        for m in out:
            out[m] //= g
    return out


def _strip_content(terms: dict) -> int:
    g = 0
    for v in terms.values():
        g = gcd(g, abs(v))
        if g == 1:
            return 1
    if g > 1:
        for m in terms:
            terms[m] //= g
    return g


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _entry(terms: dict, hk, sugar=None):
    """Build a basis entry [lm, deg lm, lc, terms, sugar, maxdeg].

    Normalizes the sign in place so the leading coefficient is positive.
    """
    lm = min(terms, key=hk)
    lc = terms[lm]
    if lc < 0:
        for m in terms:
            terms[m] = -terms[m]
        lc = -lc
    maxdeg = max(sum(m) for m in terms)
    if sugar is None:
        sugar = maxdeg
    return [lm, sum(lm), lc, terms, sugar, maxdeg]


# ---------------------------------------------------------------------------
# head reduction (the hot loop)
# ---------------------------------------------------------------------------


def _head_reduce(terms, sugar, basis, hk, budget: Budget, rep=None, basis_reps=None):
    """Reduce until the leading term of ``terms`` is irreducible (or zero).

    Mutates ``terms``.  If ``rep``/``basis_reps`` are given (syzygy mode),
    every operation is mirrored on the representation vector so that
    poly == sum_k rep[k] * input_k stays exact over Q.

    Returns (terms_or_None, sugar); None means reduced to zero.
    """
    if not terms:
        return None, sugar
    heap = [(hk(m), m) for m in terms]
    heapq.heapify(heap)
    max_degree = budget.max_degree
    while heap:
        _, m = heapq.heappop(heap)
        c = terms.get(m)
        if not c:
            continue
        mdeg = sum(m)
        red = None
        for ent in basis:
            if ent[_DEG] <= mdeg and _divides(ent[_LM], m):
                red = ent
                break
        if red is None:
            return terms, sugar
        lm_g, deg_g, lc_g, tg, sug_g, maxdeg_g = red
        delta = tuple(x - y for x, y in zip(m, lm_g))
        ddeg = mdeg - deg_g
        if ddeg + maxdeg_g > max_degree:
            raise ResourceLimitError(
                f"degree limit exceeded during reduction: {ddeg + maxdeg_g} > {max_degree}"
            )
        g = gcd(abs(c), lc_g)
        a = lc_g // g
        b = c // g
        if a != 1:
            for k in terms:
                terms[k] *= a
            if rep is not None:
                for comp in rep:
                    for k in comp:
                        comp[k] *= a
        for mg, cg in tg.items():
            mm = _mono_mul(mg, delta)
            old = terms.get(mm)
            if old is None:
                v = -b * cg
                if v:
                    terms[mm] = v
                    heapq.heappush(heap, (hk(mm), mm))
            else:
                v = old - b * cg
                if v:
                    terms[mm] = v
                else:
                    del terms[mm]
        if rep is not None:
            bq = Fraction(b)
            for comp, gcomp in zip(rep, basis_reps[id(red)]):
                for mg, cg in gcomp.items():
                    mm = _mono_mul(mg, delta)
                    v = comp.get(mm, 0) - bq * cg
                    if v:
                        comp[mm] = v
                    else:
                        comp.pop(mm, None)
        if sug_g + ddeg > sugar:
            sugar = sug_g + ddeg
    return (terms if terms else None), sugar


# ---------------------------------------------------------------------------
# pair management
# ---------------------------------------------------------------------------


def _push_pair(pheap, alive, basis, hk, i, j, koszul=False):
    ei, ej = basis[i], basis[j]
    L = _mono_lcm(ei[_LM], ej[_LM])
    sugar = max(ei[_SUGAR] + sum(L) - ei[_DEG], ej[_SUGAR] + sum(L) - ej[_DEG])
    alive[(i, j)] = koszul
    heapq.heappush(pheap, (sugar, sum(L), hk(L), i, j))


def _update_fast(basis, alive, pheap, hk, h):
    """Gebauer-Moeller update after basis[h] was appended."""
    lm_h = basis[h][_LM]
    for (i, j) in list(alive):
        L = _mono_lcm(basis[i][_LM], basis[j][_LM])
        if (
            _divides(lm_h, L)
            and L != _mono_lcm(basis[i][_LM], lm_h)
            and L != _mono_lcm(basis[j][_LM], lm_h)
        ):
            del alive[(i, j)]
    buckets = {}
    for i in range(h):
        buckets.setdefault(_mono_lcm(basis[i][_LM], lm_h), []).append(i)
    kept = []
    for L in sorted(buckets, key=lambda L: (sum(L), hk(L))):
        if all(not _divides(Lk, L) for Lk in kept):
            kept.append(L)
    for L in kept:
        bucket = buckets[L]
        if any(_mono_mul(basis[i][_LM], lm_h) == L for i in bucket):
            continue  # a coprime pair covers this lcm
        _push_pair(pheap, alive, basis, hk, min(bucket), h)


def _update_conservative(basis, alive, pheap, hk, h, mark_koszul):
    """Chain criterion with strict-divisibility guards only.

    Safe for syzygy generation: an eliminated pair's leading-term syzygy is an
    explicit monomial combination of the two replacing ones, whose lcms
    strictly divide it, so well-founded induction applies.  Coprime pairs are
    kept but flagged so the caller can emit the Koszul syzygy without a
    division (with ``mark_koszul=False`` they are ordinary pairs).
    """
    lm_h = basis[h][_LM]
    lms = [basis[i][_LM] for i in range(h + 1)]
    for (i, j) in list(alive):
        L = _mono_lcm(lms[i], lms[j])
        if (
            _divides(lm_h, L)
            and L != _mono_lcm(lms[i], lm_h)
            and L != _mono_lcm(lms[j], lm_h)
        ):
            del alive[(i, j)]
    for i in range(h):
        L = _mono_lcm(lms[i], lm_h)
        skip = False
        for j in range(h):
            if j == i:
                continue
            if (
                _divides(lms[j], L)
                and _mono_lcm(lms[i], lms[j]) != L
                and _mono_lcm(lms[j], lm_h) != L
            ):
                skip = True
                break
        if skip:
            continue
        koszul = mark_koszul and _mono_mul(lms[i], lm_h) == L
        _push_pair(pheap, alive, basis, hk, i, h, koszul=koszul)


def _spoly(basis, i, j, hk, budget):
    ei, ej = basis[i], basis[j]
    L = _mono_lcm(ei[_LM], ej[_LM])
    budget.check_degree(
        max(sum(L) - ei[_DEG] + ei[_MAXDEG], sum(L) - ej[_DEG] + ej[_MAXDEG]),
        "forming an S-polynomial",
    )
    g = gcd(ei[_LC], ej[_LC])
    ai = ej[_LC] // g
    aj = ei[_LC] // g
    ui = tuple(x - y for x, y in zip(L, ei[_LM]))
    uj = tuple(x - y for x, y in zip(L, ej[_LM]))
    terms = {}
    for m, c in ei[_TERMS].items():
        terms[_mono_mul(m, ui)] = ai * c
    for m, c in ej[_TERMS].items():
        mm = _mono_mul(m, uj)
        v = terms.get(mm, 0) - aj * c
        if v:
            terms[mm] = v
        else:
            terms.pop(mm, None)
    sugar = max(ei[_SUGAR] + sum(ui), ej[_SUGAR] + sum(uj))
    return terms, sugar, (ai, ui, aj, uj)


# ---------------------------------------------------------------------------
# ideal Groebner basis
# ---------------------------------------------------------------------------


def groebner_terms(gens, hk, budget: Budget):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    gens: iterable of term dicts (monomial -> Fraction or int).
    Returns a list of monic Fraction term dicts sorted by ascending leading
    monomial; [] for the zero ideal, [{1: 1}] for the unit ideal.
    """
    zero_mono = None
    seeds = []
    for g in gens:
        ig = intify(g)
        if not ig:
            continue
        zero_mono = (0,) * len(next(iter(ig)))
        seeds.append(ig)
    if not seeds:
        return []

    basis = []
    alive = {}
    pheap = []
    pair_count = 0

    def attach(terms, sugar):
        ent = _entry(terms, hk, sugar)
        basis.append(ent)
        _update_fast(basis, alive, pheap, hk, len(basis) - 1)
        return ent

    seeds.sort(key=lambda d: (max(sum(m) for m in d), len(d), sorted(d)))
    for ig in seeds:
        if attach(dict(ig), None)[_DEG] == 0:
            return [{zero_mono: Fraction(1)}]

    while pheap:
        _, _, _, i, j = heapq.heappop(pheap)
        if (i, j) not in alive:
            continue
        del alive[(i, j)]
        pair_count += 1
        if pair_count > budget.max_pairs:
            raise ResourceLimitError(
                f"pair limit exceeded: {pair_count} > {budget.max_pairs}"
            )
        terms, sugar, _ = _spoly(basis, i, j, hk, budget)
        terms, sugar = _head_reduce(terms, sugar, basis, hk, budget)
        if terms is None:
            continue
        _strip_content(terms)
        if attach(terms, sugar)[_DEG] == 0:
            return [{zero_mono: Fraction(1)}]

    return _reduced_form(basis, hk)


def _reduced_form(basis, hk):
    """Minimalize and tail-reduce an integer basis; monic Fraction output,
    sorted by ascending leading monomial."""
    order = sorted(range(len(basis)), key=lambda k: hk(basis[k][_LM]), reverse=True)
    minimal = []
    for k in order:
        lm = basis[k][_LM]
        if all(not _divides(basis[j][_LM], lm) for j in minimal):
            minimal.append(k)
    monic = []
    for k in minimal:
        ent = basis[k]
        lc = Fraction(ent[_LC])
        monic.append({m: Fraction(c) / lc for m, c in ent[_TERMS].items()})
    reduced = []
    for idx, f in enumerate(monic):
        others = [(min(g, key=hk), g) for pos, g in enumerate(monic) if pos != idx]
        nf = _nf_frac(dict(f), others, hk)
        if nf:
            reduced.append(nf)
    reduced.sort(key=lambda f: hk(min(f, key=hk)), reverse=True)
    return reduced


def _nf_frac(terms, basis, hk):
    """Full normal form over Q; ``basis`` holds (lm, monic term dict) pairs."""
    result = {}
    if not terms:
        return result
    heap = [(hk(m), m) for m in terms]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = terms.get(m)
        if not c:
            continue
        red = None
        for lm_g, tg in basis:
            if _divides(lm_g, m):
                red = (lm_g, tg)
                break
        if red is None:
            result[m] = c
            del terms[m]
            continue
        lm_g, tg = red
        delta = tuple(x - y for x, y in zip(m, lm_g))
        for mg, cg in tg.items():
            mm = _mono_mul(mg, delta)
            old = terms.get(mm)
            if old is None:
                v = -c * cg
                if v:
                    terms[mm] = v
                    heapq.heappush(heap, (hk(mm), mm))
            else:
                v = old - c * cg
                if v:
                    terms[mm] = v
                else:
                    del terms[mm]
    return result


def normal_form_terms(terms, gb_frac, hk):
    """Full normal form of a Fraction term dict modulo a monic basis."""
    basis = [(min(g, key=hk), g) for g in gb_frac]
    return _nf_frac({m: Fraction(c) for m, c in terms.items() if c}, basis, hk)


def int_entries(gb_terms, hk):
    """Convert a basis of term dicts into engine entries for fast reduction."""
    return [_entry(intify(g), hk) for g in gb_terms if g]


def reduces_to_zero(terms, entries, hk, budget: Budget) -> bool:
    """Membership test: head reduction alone decides whether the NF is zero."""
    t = intify(terms)
    if not t:
        return True
    t, _ = _head_reduce(t, 0, entries, hk, budget)
    return t is None


# ---------------------------------------------------------------------------
# syzygies
# ---------------------------------------------------------------------------


def syzygy_generators(vectors, nvars, hk, budget: Budget):
    """Generators of the syzygy module of a list of Fraction term dicts.

    Returns a list of length-r lists of Fraction term dicts s satisfying
    sum_k s[k] * vectors[k] == 0; together they generate the full syzygy
    module over the polynomial ring.
    """
    r = len(vectors)
    zero_mono = (0,) * nvars
    one = Fraction(1)

    syzygies = []
    live = []
    for i, v in enumerate(vectors):
        iv = intify(v)
        if not iv:
            e = [dict() for _ in range(r)]
            e[i] = {zero_mono: one}
            syzygies.append(e)
        else:
            live.append((i, iv))
    if not live:
        return syzygies

    basis = []
    reps = {}  # id(entry) -> representation vector (list of Fraction dicts)
    alive = {}
    pheap = []
    pair_count = 0

    def attach(terms, sugar, rep):
        ent = _entry(terms, hk, sugar)  # may negate terms in place
        basis.append(ent)
        reps[id(ent)] = rep
        _update_conservative(basis, alive, pheap, hk, len(basis) - 1, mark_koszul=True)
        return ent

    def scale_rep(rep, factor):
        if factor != 1:
            inv = Fraction(1, factor)
            for comp in rep:
                for k in comp:
                    comp[k] *= inv

    for i, iv in live:
        scale = _rep_scale(vectors[i], iv)
        rep = [dict() for _ in range(r)]
        rep[i] = {zero_mono: scale}
        terms = dict(iv)
        lm = min(terms, key=hk)
        if terms[lm] < 0:
            # keep rep consistent with the sign flip done by _entry
            rep[i][zero_mono] = -scale
        attach(terms, None, rep)

    while pheap:
        _, _, _, i, j = heapq.heappop(pheap)
        if (i, j) not in alive:
            continue
        koszul = alive.pop((i, j))
        pair_count += 1
        if pair_count > budget.max_pairs:
            raise ResourceLimitError(
                f"pair limit exceeded in syzygy computation: {pair_count} > {budget.max_pairs}"
            )
        ei, ej = basis[i], basis[j]
        if koszul:
            # coprime leading terms: Koszul syzygy g_j e_i - g_i e_j
            ri, rj = reps[id(ei)], reps[id(ej)]
            s = []
            for comp_i, comp_j in zip(ri, rj):
                acc = {}
                _addmul_int_frac(acc, ej[_TERMS], comp_i, 1)
                _addmul_int_frac(acc, ei[_TERMS], comp_j, -1)
                s.append(acc)
            if any(s):
                syzygies.append(s)
            continue
        terms, sugar, (ai, ui, aj, uj) = _spoly(basis, i, j, hk, budget)
        rep = [dict() for _ in range(r)]
        ri, rj = reps[id(ei)], reps[id(ej)]
        for comp, ci, cj in zip(rep, ri, rj):
            for m, c in ci.items():
                comp[_mono_mul(m, ui)] = c * ai
            for m, c in cj.items():
                mm = _mono_mul(m, uj)
                v = comp.get(mm, 0) - c * aj
                if v:
                    comp[mm] = v
                else:
                    comp.pop(mm, None)
        terms, sugar = _head_reduce(
            terms, sugar, basis, hk, budget, rep=rep, basis_reps=reps
        )
        if terms is None:
            if any(rep):
                syzygies.append(rep)
            continue
        lm = min(terms, key=hk)
        negate = terms[lm] < 0
        factor = _strip_content(terms)
        scale_rep(rep, factor)
        if negate:
            rep = [{m: -c for m, c in comp.items()} for comp in rep]
        attach(terms, sugar, rep)

    # rows of (scale*I - S*T): divide each input by the final basis, tracked.
    # Inputs sit in the basis, so this usually cancels exactly (empty rep);
    # redundant inputs yield the genuine extra syzygies.
    for i, iv in live:
        scale = _rep_scale(vectors[i], iv)
        rep = [dict() for _ in range(r)]
        rep[i] = {zero_mono: scale}
        terms, _ = _head_reduce(dict(iv), 0, basis, hk, budget, rep=rep, basis_reps=reps)
        if terms is not None:
            raise AssertionError("input did not reduce to zero against its own basis")
        if any(rep):
            syzygies.append(rep)
    return syzygies


def _rep_scale(v_frac, iv_int) -> Fraction:
    m = next(iter(iv_int))
    return Fraction(iv_int[m]) / Fraction(v_frac[m])


def _addmul_int_frac(acc, int_terms, frac_terms, sign):
    """acc += sign * (integer poly) * (Fraction poly)."""
    for mg, cg in int_terms.items():
        for mf, cf in frac_terms.items():
            mm = _mono_mul(mg, mf)
            v = acc.get(mm, 0) + sign * cg * cf
            if v:
                acc[mm] = v
            else:
                acc.pop(mm, None)


# ---------------------------------------------------------------------------
# module engine (submodules of R^c)
# ---------------------------------------------------------------------------


def vec_to_key_terms(vec_terms):
    """[dict mono->coef per component] -> dict (pos, mono) -> coef."""
    out = {}
    for pos, comp in enumerate(vec_terms):
        for m, c in comp.items():
            if c:
                out[(pos, m)] = c
    return out


def _vec_intify(keyed):
    if not keyed:
        return {}
    den = 1
    for c in keyed.values():
        d = c.denominator if isinstance(c, Fraction) else 1
        den = den * d // gcd(den, d)
    out = {}
    g = 0
    for k, c in keyed.items():
        v = int(c * den)
        if v:
            out[k] = v
            g = gcd(g, abs(v))
    if g > 1:
        for k in out:
            out[k] //= g
    return out


class ModuleBasis:
    """Incremental Groebner basis of a submodule of R^c.

    Order: monomial first (caller-supplied heapkey), position breaks ties
    (lower position wins).  No coprime criterion -- it is not valid for
    modules; pair elimination is the conservative chain criterion.
    """

    def __init__(self, ncomp, hk, budget: Budget):
        self.ncomp = ncomp
        self._hk = hk
        self.budget = budget
        self.entries = []
        self._alive = {}
        self._pheap = []
        self._pairs = 0

    def _key(self, k):
        return (self._hk(k[1]), k[0])

    def _reduce(self, terms):
        """Head-reduce a keyed int vector; None when it reaches zero."""
        if not terms:
            return None
        key = self._key
        heap = [(key(k), k) for k in terms]
        heapq.heapify(heap)
        max_degree = self.budget.max_degree
        while heap:
            _, k = heapq.heappop(heap)
            c = terms.get(k)
            if not c:
                continue
            pos, m = k
            mdeg = sum(m)
            red = None
            for ent in self.entries:
                lp, lmono = ent[_LM]
                if lp == pos and ent[_DEG] <= mdeg and _divides(lmono, m):
                    red = ent
                    break
            if red is None:
                return terms
            (lp, lmono), deg_g, lc_g, tg, sug_g, maxdeg_g = red
            delta = tuple(x - y for x, y in zip(m, lmono))
            if mdeg - deg_g + maxdeg_g > max_degree:
                raise ResourceLimitError("degree limit exceeded during module reduction")
            g = gcd(abs(c), lc_g)
            a = lc_g // g
            b = c // g
            if a != 1:
                for kk in terms:
                    terms[kk] *= a
            for (pg, mg), cg in tg.items():
                kk = (pg, _mono_mul(mg, delta))
                old = terms.get(kk)
                if old is None:
                    v = -b * cg
                    if v:
                        terms[kk] = v
                        heapq.heappush(heap, (key(kk), kk))
                else:
                    v = old - b * cg
                    if v:
                        terms[kk] = v
                    else:
                        del terms[kk]
        return terms if terms else None

    def _mk_entry(self, terms, sugar=None):
        lt = min(terms, key=self._key)
        lc = terms[lt]
        if lc < 0:
            for k in terms:
                terms[k] = -terms[k]
            lc = -lc
        maxdeg = max(sum(m) for (_, m) in terms)
        if sugar is None:
            sugar = maxdeg
        return [lt, sum(lt[1]), lc, terms, sugar, maxdeg]

    def _push_pair(self, i, j):
        ei, ej = self.entries[i], self.entries[j]
        L = _mono_lcm(ei[_LM][1], ej[_LM][1])
        sugar = max(ei[_SUGAR] + sum(L) - ei[_DEG], ej[_SUGAR] + sum(L) - ej[_DEG])
        self._alive[(i, j)] = True
        heapq.heappush(self._pheap, (sugar, sum(L), self._hk(L), i, j))

    def _update(self, h):
        entries = self.entries
        pos_h, lm_h = entries[h][_LM]
        for (i, j) in list(self._alive):
            if entries[i][_LM][0] != pos_h:
                continue
            li, lj = entries[i][_LM][1], entries[j][_LM][1]
            L = _mono_lcm(li, lj)
            if (
                _divides(lm_h, L)
                and L != _mono_lcm(li, lm_h)
                and L != _mono_lcm(lj, lm_h)
            ):
                del self._alive[(i, j)]
        for i in range(h):
            if entries[i][_LM][0] != pos_h:
                continue
            lm_i = entries[i][_LM][1]
            L = _mono_lcm(lm_i, lm_h)
            skip = False
            for j in range(h):
                if j == i or entries[j][_LM][0] != pos_h:
                    continue
                lm_j = entries[j][_LM][1]
                if (
                    _divides(lm_j, L)
                    and _mono_lcm(lm_i, lm_j) != L
                    and _mono_lcm(lm_j, lm_h) != L
                ):
                    skip = True
                    break
            if not skip:
                self._push_pair(i, h)

    def _complete(self):
        while self._pheap:
            _, _, _, i, j = heapq.heappop(self._pheap)
            if (i, j) not in self._alive:
                continue
            del self._alive[(i, j)]
            self._pairs += 1
            if self._pairs > self.budget.max_pairs:
                raise ResourceLimitError(
                    f"pair limit exceeded in module basis: {self._pairs}"
                )
            ei, ej = self.entries[i], self.entries[j]
            pos = ei[_LM][0]
            L = _mono_lcm(ei[_LM][1], ej[_LM][1])
            self.budget.check_degree(
                max(
                    sum(L) - ei[_DEG] + ei[_MAXDEG],
                    sum(L) - ej[_DEG] + ej[_MAXDEG],
                ),
                "forming a module S-vector",
            )
            g = gcd(ei[_LC], ej[_LC])
            ai, aj = ej[_LC] // g, ei[_LC] // g
            ui = tuple(x - y for x, y in zip(L, ei[_LM][1]))
            uj = tuple(x - y for x, y in zip(L, ej[_LM][1]))
            terms = {}
            for (p, m), c in ei[_TERMS].items():
                terms[(p, _mono_mul(m, ui))] = ai * c
            for (p, m), c in ej[_TERMS].items():
                kk = (p, _mono_mul(m, uj))
                v = terms.get(kk, 0) - aj * c
                if v:
                    terms[kk] = v
                else:
                    terms.pop(kk, None)
            terms = self._reduce(terms)
            if terms is None:
                continue
            _strip_content(terms)
            sugar = max(ei[_SUGAR] + sum(ui), ej[_SUGAR] + sum(uj))
            self.entries.append(self._mk_entry(terms, sugar))
            self._update(len(self.entries) - 1)

    # -- public --------------------------------------------------------------

    def add(self, vec_terms):
        """Add a vector (list of term dicts, one per component)."""
        keyed = _vec_intify(vec_to_key_terms(vec_terms))
        if not keyed:
            return
        self.entries.append(self._mk_entry(keyed))
        self._update(len(self.entries) - 1)
        self._complete()

    def contains(self, vec_terms) -> bool:
        keyed = _vec_intify(vec_to_key_terms(vec_terms))
        if not keyed:
            return True
        return self._reduce(keyed) is None


def submodule_contains(generators, vector, hk, budget: Budget) -> bool:
    mb = ModuleBasis(len(vector), hk, budget)
    for g in generators:
        mb.add(g)
    return mb.contains(vector)


def prune_vectors(vectors, hk, budget: Budget, sort_key=None):
    """Greedy generating-set pruning: afterwards no member lies in the
    submodule generated by the others.

    Forward pass drops vectors generated by the previously kept ones
    (ascending complexity); one backward pass then removes members generated
    by the final rest -- sound because each survivor was tested against a
    superset of the final set.
    """
    if not vectors:
        return []
    if sort_key is None:
        sort_key = _default_vec_key
    ordered = sorted(vectors, key=sort_key)
    ncomp = len(ordered[0])
    mb = ModuleBasis(ncomp, hk, budget)
    kept = []
    for v in ordered:
        if kept and mb.contains(v):
            continue
        mb.add(v)
        kept.append(v)
    final = list(kept)
    for idx in range(len(final) - 1, -1, -1):
        if len(final) == 1:
            break
        rest = final[:idx] + final[idx + 1 :]
        if submodule_contains(rest, final[idx], hk, budget):
            final = rest
    return final


def _default_vec_key(vec):
    maxdeg = 0
    nterms = 0
    shape = []
    for pos, comp in enumerate(vec):
        for m in sorted(comp):
            maxdeg = max(maxdeg, sum(m))
            nterms += 1
            shape.append((pos, m, str(comp[m])))
    return (maxdeg, nterms, tuple(shape))
