"""Buchberger's algorithm, normal forms and reduced Groebner bases.

The hot loops work on raw ``{key: coefficient}`` dicts (see ``ring`` for the
key encoding); the public functions wrap them in ``Polynomial``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContextMismatch, ResourceError
from .polynomial import Polynomial
from .ring import MAX_EXPONENT, MonomialOrder, RingContext

DEFAULT_LIMIT = 20000

Raw = dict  # {monomial key: coefficient}


class _Reducer:
    """A monic basis element split into lead and tail, ready for division."""

    __slots__ = ("lead", "packed", "tail", "poly")

    def __init__(self, ring: RingContext, poly: Raw):
        self.lead = max(poly)
        self.packed = ring.packed(self.lead)
        self.tail = [(k, c) for k, c in poly.items() if k != self.lead]
        self.poly = poly


def _reduce(ring: RingContext, f: Raw, reducers: Sequence[_Reducer]) -> Raw:
    """Full reduction of ``f``: always cancel the largest reducible term,
    trying reducers in list order."""
    if not f or not reducers:
        return dict(f)
    p = ring.p
    guard = ring.guard
    pcache = ring._cache["packed"]
    packed = ring.packed
    f = dict(f)
    heap = [-k for k in f]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    rem = {}
    while heap:
        k = -pop(heap)
        c = f.pop(k, None)
        if c is None:
            continue
        pk = pcache.get(k)
        if pk is None:
            pk = packed(k)
        for r in reducers:
            if not ((pk - r.packed) & guard):
                s = k - r.lead
                for tk, tc in r.tail:
                    kk = tk + s
                    old = f.get(kk)
                    if old is None:
                        f[kk] = (-c * tc) % p
                        push(heap, -kk)
                    else:
                        v = (old - c * tc) % p
                        if v:
                            f[kk] = v
                        else:
                            del f[kk]
                break
        else:
            rem[k] = c
    return rem


def _monic(ring: RingContext, f: Raw) -> Raw:
    p = ring.p
    inv = pow(f[max(f)], -1, p)
    if inv == 1:
        return f
    return {k: c * inv % p for k, c in f.items()}


def _interreduce(ring: RingContext, polys: list[Raw]) -> list[Raw]:
    """Reduced basis from a minimal one: reduce every tail, sort by lead."""
    reducers = [_Reducer(ring, g) for g in polys]
    out = []
    for r in reducers:
        tail = _reduce(ring, dict(r.tail), reducers)
        tail[r.lead] = 1
        out.append(tail)
    out.sort(key=max)
    return out


def _minimal_monomials(ring: RingContext, keys: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for k in sorted(set(keys)):
        if not any(ring.divides(q, k) for q in kept):
            kept.append(k)
    return kept


def groebner_raw(ring: RingContext, polys: Iterable[Raw], limit: int = DEFAULT_LIMIT) -> list[Raw]:
    """Reduced Groebner basis of the raw polynomials, ascending by lead."""
    gens = [dict(f) for f in polys if f]
    if not gens:
        return []
    if any(0 in f and len(f) == 1 for f in gens):
        return [{0: 1}]
    if all(len(f) == 1 for f in gens):
        return [{k: 1} for k in _minimal_monomials(ring, (next(iter(f)) for f in gens))]

    p = ring.p
    guard = ring.guard
    packed = ring.packed
    basis: list[_Reducer] = []
    active: list[bool] = []
    pairs: list[tuple[int, int, int, int]] = []
    dead: set[tuple[int, int]] = set()
    lcm_of: dict[tuple[int, int], int] = {}
    count = 0

    def divides(a: int, b: int) -> bool:
        return not ((packed(b) - packed(a)) & guard)

    def active_reducers() -> list[_Reducer]:
        return [r for r, a in zip(basis, active) if a]

    def add(h: Raw):
        h = _monic(ring, h)
        if ring.degree(max(h)) > MAX_EXPONENT:
            raise ResourceError("degree exceeded the exponent range")
        new = _Reducer(ring, h)
        lh = new.lead
        idx = len(basis)
        cand = [i for i, a in enumerate(active) if a]
        lcms = {i: ring.lcm(lh, basis[i].lead) for i in cand}
        coprime = {i: lcms[i] == lh + basis[i].lead for i in cand}
        # Gebauer-Moeller: criteria on the new pairs
        kept: list[int] = []
        for pos, i in enumerate(cand):
            li = lcms[i]
            if coprime[i]:
                kept.append(i)
                continue
            if any(divides(lcms[j], li) for j in cand[pos + 1:]):
                continue
            if any(divides(lcms[j], li) for j in kept):
                continue
            kept.append(i)
        # ... and on the old ones
        for entry in pairs:
            _, lk, i, j = entry
            if (i, j) in dead:
                continue
            if divides(lh, lk) and ring.lcm(basis[i].lead, lh) != lk and ring.lcm(basis[j].lead, lh) != lk:
                dead.add((i, j))
        basis.append(new)
        active.append(True)
        for i in cand:
            if divides(lh, basis[i].lead):
                active[i] = False
        for i in kept:
            if coprime[i]:
                continue
            li = lcms[i]
            heapq.heappush(pairs, (ring.degree(li), li, i, idx))

    for f in sorted(gens, key=max):
        h = _reduce(ring, f, active_reducers())
        if h:
            add(h)

    while pairs:
        _, L, i, j = heapq.heappop(pairs)
        if (i, j) in dead:
            continue
        count += 1
        if count > limit:
            raise ResourceError(f"Buchberger exceeded {limit} S-polynomial reductions")
        gi, gj = basis[i], basis[j]
        si, sj = L - gi.lead, L - gj.lead
        s: Raw = {}
        for k, c in gi.tail:
            s[k + si] = c
        for k, c in gj.tail:
            kk = k + sj
            v = (s.get(kk, 0) - c) % p
            if v:
                s[kk] = v
            else:
                s.pop(kk, None)
        h = _reduce(ring, s, active_reducers())
        if h:
            add(h)

    return _interreduce(ring, [r.poly for r, a in zip(basis, active) if a])


def normal_form_raw(ring: RingContext, f: Raw, basis: Sequence[Raw]) -> Raw:
    return _reduce(ring, f, [_Reducer(ring, g) for g in basis])


@dataclass(frozen=True)
class GroebnerBasis:
    """Monic basis elements, ascending by leading monomial."""

    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    @property
    def ring(self) -> RingContext | None:
        return self.elements[0].ring if self.elements else None

    def leading_keys(self) -> list[int]:
        return [g.lead_key for g in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def buchberger(gens: Sequence[Polynomial], limit: int = DEFAULT_LIMIT,
               ring: RingContext | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``gens`` (zero generators are dropped)."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ContextMismatch("generators live in different rings")
    raw = groebner_raw(ring, [g.raw for g in gens], limit)
    return GroebnerBasis(tuple(Polynomial(ring, g, _trusted=True) for g in raw), ring.order, True)


def normal_form(f: Polynomial, basis: GroebnerBasis | Sequence[Polynomial]) -> Polynomial:
    elems = list(basis.elements if isinstance(basis, GroebnerBasis) else basis)
    for g in elems:
        if g.ring != f.ring:
            raise ContextMismatch("polynomial and basis live in different rings")
    raw = []
    for g in elems:
        if g:
            raw.append(g.monic().raw)
    return Polynomial(f.ring, normal_form_raw(f.ring, f.raw, raw), _trusted=True)


def is_groebner(basis: Sequence[Polynomial]) -> bool:
    """Every S-polynomial reduces to 0 (Buchberger's criterion)."""
    elems = [g.monic() for g in basis if g]
    if not elems:
        return True
    ring = elems[0].ring
    raw = [g.raw for g in elems]
    for a in range(len(raw)):
        for b in range(a + 1, len(raw)):
            la, lb = max(raw[a]), max(raw[b])
            L = ring.lcm(la, lb)
            s = (elems[a].shift(L - la) - elems[b].shift(L - lb)).raw
            if normal_form_raw(ring, s, raw):
                return False
    return True


def is_reduced(basis: Sequence[Polynomial]) -> bool:
    elems = list(basis)
    if not elems:
        return True
    ring = elems[0].ring
    leads = [g.lead_key for g in elems]
    for g in elems:
        if g.lead_coefficient() != 1:
            return False
        for k in g.raw:
            for i, lk in enumerate(leads):
                if lk != g.lead_key and ring.divides(lk, k):
                    return False
    return True
