"""Ideals of k[x_1..x_n] generated inside m = (x_1, ..., x_n).

With every generator in m, sums, products, intersections and colons all
commute with localization at the origin, so the polynomial-ring computation
models the local ring.  Colength and minimal number of generators are only
offered for certified m-primary ideals, where the two rings agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ContextMismatch, NotMPrimary, ResourceError
from .groebner import DEFAULT_LIMIT, GroebnerBasis, Raw, groebner_raw, normal_form_raw
from .polynomial import Polynomial, poly_order
from .quotient import QuotientAlgebra, is_zero_dimensional, standard_monomials
from .ring import MonomialOrder, RingContext


class Ideal:
    __slots__ = ("ring", "generators", "_basis", "_quotient", "_hash")

    def __init__(self, ring: RingContext, generators: Iterable[Polynomial] = (), *,
                 _basis: list[Raw] | None = None, _trusted: bool = False):
        # user-facing ideals must lie in m; internal results (saturations,
        # cofactors) may contain local units and are passed with _trusted
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ContextMismatch("generator lives in a different ring")
            if not g:
                continue
            c = g.constant_term()
            if c and len(g) > 1 and not _trusted:
                raise ValueError(f"generator {g} is not in the maximal ideal")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._basis = _basis
        self._quotient = None
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> "Ideal":
        return cls(ring, (), _basis=[])

    @classmethod
    def unit(cls, ring: RingContext) -> "Ideal":
        return cls(ring, [Polynomial.constant(ring, 1)], _basis=[{0: 1}])

    @classmethod
    def maximal(cls, ring: RingContext) -> "Ideal":
        return power_of_maximal(ring, 1)

    @classmethod
    def from_raw_basis(cls, ring: RingContext, basis: list[Raw]) -> "Ideal":
        return cls(ring, [Polynomial(ring, g, _trusted=True) for g in basis], _basis=basis, _trusted=True)

    # -- Groebner data ----------------------------------------------------------

    def raw_basis(self) -> list[Raw]:
        if self._basis is None:
            self._basis = groebner_raw(self.ring, [g.raw for g in self.generators], DEFAULT_LIMIT)
        return self._basis

    def basis(self) -> GroebnerBasis:
        return GroebnerBasis(tuple(Polynomial(self.ring, g, _trusted=True) for g in self.raw_basis()),
                             self.ring.order, True)

    def basis_polys(self) -> list[Polynomial]:
        return list(self.basis().elements)

    def leading_keys(self) -> list[int]:
        return [max(g) for g in self.raw_basis()]

    def is_zero(self) -> bool:
        return not self.raw_basis()

    def is_unit(self) -> bool:
        return self.raw_basis() == [{0: 1}]

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_zero_dimensional(self) -> bool:
        b = self.raw_basis()
        return bool(b) and is_zero_dimensional(self.ring, [max(g) for g in b])

    def quotient(self) -> QuotientAlgebra:
        if self._quotient is None:
            self._quotient = QuotientAlgebra(self.ring, self.raw_basis())
        return self._quotient

    def normal_form(self, f: Polynomial) -> Polynomial:
        self._check_poly(f)
        return Polynomial(self.ring, normal_form_raw(self.ring, f.raw, self.raw_basis()), _trusted=True)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        self._check(other)
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other: "Ideal") -> bool:
        return self.issubset(other)

    # -- comparison -------------------------------------------------------------

    def _check(self, other: "Ideal"):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise ContextMismatch("ideals live in different rings")

    def _check_poly(self, f: Polynomial):
        if f.ring != self.ring:
            raise ContextMismatch("polynomial lives in a different ring")

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._check(other)
        return self.raw_basis() == other.raw_basis()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(tuple(sorted(g.items())) for g in self.raw_basis()))
        return self._hash

    def __str__(self) -> str:
        return "ideal(" + ", ".join(str(g) for g in self.basis_polys()) + ")" if self.raw_basis() else "ideal(0)"

    def __repr__(self) -> str:
        return f"Ideal<{self}>"

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, list(self.generators) + list(other.generators), _trusted=True)

    def __mul__(self, other: "Ideal | Polynomial") -> "Ideal":
        if isinstance(other, Polynomial):
            self._check_poly(other)
            return Ideal(self.ring, [g * other for g in self.generators], _trusted=True)
        self._check(other)
        a = self.basis_polys() if len(self.raw_basis()) <= len(self.generators) else self.generators
        b = other.basis_polys() if len(other.raw_basis()) <= len(other.generators) else other.generators
        return Ideal(self.ring, [f * g for f in a for g in b], _trusted=True)

    def __pow__(self, n: int) -> "Ideal":
        if n < 0:
            raise ValueError("negative power")
        result = Ideal.unit(self.ring)
        for _ in range(n):
            result = result * self
        return result

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def colon(self, other: "Ideal | Polynomial") -> "Ideal":
        return colon(self, other)

    def saturate(self, other: "Ideal") -> "Ideal":
        return saturate(self, other)


@lru_cache(maxsize=None)
def _power_of_maximal_cached(ring: RingContext, t: int) -> Ideal:
    mons = ring.monomials_of_degree(t)
    return Ideal(ring, [Polynomial(ring, {k: 1}, _trusted=True) for k in mons],
                 _basis=[{k: 1} for k in sorted(mons)])


def power_of_maximal(ring: RingContext, t: int) -> Ideal:
    """m^t (t = 0 gives the unit ideal)."""
    if t == 0:
        return Ideal.unit(ring)
    return _power_of_maximal_cached(ring, t)


def ideal_from_strings(ring: RingContext, gens: Sequence[str]) -> Ideal:
    from .parsing import parse_polynomial
    return Ideal(ring, [parse_polynomial(g, ring) for g in gens])


def ideal_combine(op: str, a: Ideal, b: Ideal | None = None, n: int | None = None) -> Ideal:
    """``op`` in {sum, product, power}; power uses ``a`` and ``n``."""
    if op == "sum":
        return a + b
    if op == "product":
        return a * b
    if op == "power":
        if n is None:
            raise ValueError("power needs an exponent")
        return a ** n
    raise ValueError(f"unknown operation {op!r}")


# -- elimination ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _elimination_ring(ring: RingContext) -> RingContext:
    name = "_t"
    while name in ring.variables:
        name += "_"
    return RingContext((name,) + ring.variables, ring.field, MonomialOrder("block", 1))


def _lift(raw: Raw, src: RingContext, dst: RingContext, t_power: int = 0) -> Raw:
    return {dst.encode((t_power,) + src.decode(k)): c for k, c in raw.items()}


def _intersect_raw(ring: RingContext, a: Sequence[Raw], b: Sequence[Raw]) -> list[Raw]:
    """Generators t*a + (1-t)*b, eliminate t."""
    big = _elimination_ring(ring)
    p = ring.p
    gens = []
    for f in a:
        gens.append(_lift(f, ring, big, 1))
    for g in b:
        lo = _lift(g, ring, big, 0)
        hi = _lift(g, ring, big, 1)
        h = dict(lo)
        for k, c in hi.items():
            h[k] = (h.get(k, 0) - c) % p
        gens.append({k: c for k, c in h.items() if c})
    out = []
    for g in groebner_raw(big, gens, DEFAULT_LIMIT):
        if big.decode(max(g))[0] == 0:
            out.append({ring.encode(big.decode(k)[1:]): c for k, c in g.items()})
    return groebner_raw(ring, out, DEFAULT_LIMIT)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    a._check(b)
    if a.is_zero() or b.is_zero():
        return Ideal.zero(a.ring)
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    if a == b:
        return a
    return Ideal.from_raw_basis(a.ring, _intersect_raw(a.ring, a.raw_basis(), b.raw_basis()))


def _divide_exact(ring: RingContext, f: Raw, g: Raw) -> Raw:
    """f / g, which must be exact."""
    p = ring.p
    lg = max(g)
    inv = pow(g[lg], -1, p)
    tail = [(k, c) for k, c in g.items() if k != lg]
    f = dict(f)
    q: Raw = {}
    while f:
        k = max(f)
        if not ring.divides(lg, k):
            raise ArithmeticError("division is not exact")
        c = f.pop(k) * inv % p
        s = k - lg
        q[s] = c
        for tk, tc in tail:
            kk = tk + s
            v = (f.get(kk, 0) - c * tc) % p
            if v:
                f[kk] = v
            else:
                f.pop(kk, None)
    return q


def colon_by_element_elimination(a: Ideal, g: Polynomial) -> Ideal:
    """a : (g) = (a ∩ (g)) / g via elimination; works for any ideal."""
    ring = a.ring
    inter = _intersect_raw(ring, a.raw_basis(), [g.raw])
    quotients = [_divide_exact(ring, h, g.raw) for h in inter]
    return Ideal.from_raw_basis(ring, groebner_raw(ring, quotients, DEFAULT_LIMIT))


def colon(a: Ideal, b: "Ideal | Polynomial") -> Ideal:
    """{f : f*b ⊆ a}."""
    ring = a.ring
    if isinstance(b, Polynomial):
        a._check_poly(b)
        gens = [b] if b else []
    else:
        a._check(b)
        gens = b.basis_polys() if len(b.raw_basis()) <= len(b.generators) else list(b.generators)
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("colon by the zero ideal")
    if a.is_unit():
        return a
    if any(g.constant_term() and len(g) == 1 for g in gens):
        return a
    if a.is_zero():
        return a
    if a.is_zero_dimensional():
        return Ideal.from_raw_basis(ring, a.quotient().colon([g.raw for g in gens]))
    result = None
    for g in gens:
        piece = colon_by_element_elimination(a, g)
        result = piece if result is None else intersect(result, piece)
    return result


def saturate(a: Ideal, b: Ideal, max_steps: int = 10000) -> Ideal:
    """a : b^∞ by iterated colons."""
    cur = a
    for _ in range(max_steps):
        nxt = colon(cur, b)
        if nxt == cur:
            return cur
        cur = nxt
    raise ResourceError("saturation did not stabilize")


# -- invariants of m-primary ideals ----------------------------------------------------


@dataclass(frozen=True)
class MPrimaryCertificate:
    colength: int
    power_bound: int


def colength(a: Ideal) -> float:
    """Number of standard monomials (inf when R/a is not finite dimensional)."""
    if a.is_unit():
        return 0
    if not a.is_zero_dimensional():
        return math.inf
    return len(standard_monomials(a.ring, a.leading_keys()))


def _contains_power_of_maximal(a: Ideal, t: int) -> bool:
    basis = a.raw_basis()
    ring = a.ring
    return all(not normal_form_raw(ring, {k: 1}, basis) for k in ring.monomials_of_degree(t))


def certify_m_primary(a: Ideal) -> MPrimaryCertificate:
    """Certificate that a is primary to the origin, or NotMPrimary."""
    if a.is_zero() or a.is_unit():
        raise NotMPrimary("the zero and unit ideals are not m-primary")
    d = colength(a)
    if d == math.inf:
        raise NotMPrimary("not zero-dimensional (infinite colength)")
    ring = a.ring
    std = standard_monomials(ring, a.leading_keys())
    lower = 1 + max(ring.degree(k) for k in std)
    for n in range(lower, d + 1):
        if _contains_power_of_maximal(a, n):
            return MPrimaryCertificate(d, n)
    raise NotMPrimary("zero-dimensional but not supported only at the origin")


def is_m_primary(a: Ideal) -> bool:
    try:
        certify_m_primary(a)
    except NotMPrimary:
        return False
    return True


def ord_ideal(a: Ideal) -> int:
    """max{t : a ⊆ m^t}."""
    basis = a.basis_polys()
    if not basis:
        raise ValueError("ord of the zero ideal is undefined")
    return int(min(poly_order(g) for g in basis))


def mu(a: Ideal) -> int:
    """Minimal number of generators, as colength(m*a) - colength(a)."""
    certify_m_primary(a)
    return int(colength(Ideal.maximal(a.ring) * a) - colength(a))


def minimal_generators(a: Ideal) -> list[Polynomial]:
    """Greedy extraction: drop a generator lying in m*a + (the others)."""
    m_a = Ideal.maximal(a.ring) * a
    gens = list(a.basis_polys())
    i = 0
    while i < len(gens):
        rest = Ideal(a.ring, gens[:i] + gens[i + 1:] + list(m_a.generators), _trusted=True)
        if rest.contains(gens[i]):
            gens.pop(i)
        else:
            i += 1
    return gens
