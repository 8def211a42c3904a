"""Exact multivariate polynomials over a prime field."""

from __future__ import annotations

import math
import random
import warnings
from typing import Iterable, Mapping

from .errors import ContextMismatch
from .ring import Monomial, RingContext


class Polynomial:
    """Immutable polynomial; ``terms`` maps monomial keys to nonzero residues."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[int, int] | None = None, *, _trusted=False):
        self.ring = ring
        if _trusted:
            self._terms = terms
        else:
            p = ring.p
            clean = {}
            for k, c in (terms or {}).items():
                c %= p
                if c:
                    clean[k] = c
            self._terms = clean
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_exponents(cls, ring: RingContext, terms: Iterable[tuple[int, Iterable[int]]]) -> "Polynomial":
        acc: dict[int, int] = {}
        for c, exps in terms:
            k = ring.encode(tuple(exps))
            acc[k] = acc.get(k, 0) + c
        return cls(ring, acc)

    @classmethod
    def constant(cls, ring: RingContext, c: int) -> "Polynomial":
        return cls(ring, {0: c})

    @classmethod
    def variable(cls, ring: RingContext, name_or_index: str | int) -> "Polynomial":
        i = ring.variables.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return cls(ring, {ring.var_keys[i]: 1}, _trusted=True)

    # -- inspection -----------------------------------------------------------

    @property
    def raw(self) -> dict[int, int]:
        return self._terms

    def terms(self) -> list[tuple[int, Monomial]]:
        """(coefficient, monomial) pairs in strictly descending order."""
        return [(self._terms[k], self.ring.monomial(k)) for k in sorted(self._terms, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def lead_key(self) -> int:
        return max(self._terms)

    def lead_coefficient(self) -> int:
        return self._terms[max(self._terms)] if self._terms else 0

    def lead_monomial(self) -> Monomial:
        return self.ring.monomial(self.lead_key)

    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((self.ring.degree(k) for k in self._terms), default=-1)

    def order(self) -> float:
        return poly_order(self)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables_used(self) -> set[int]:
        used = set()
        for k in self._terms:
            used.update(i for i, e in enumerate(self.ring.decode(k)) if e)
        return used

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ContextMismatch(f"cannot combine polynomials from {self.ring} and {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = (out.get(k, 0) + c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Polynomial(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {k: p - c for k, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if not c:
            return Polynomial(self.ring, {}, _trusted=True)
        return Polynomial(self.ring, {k: v * c % p for k, v in self._terms.items()}, _trusted=True)

    def shift(self, key: int, c: int = 1) -> "Polynomial":
        """Multiply by the monomial ``key`` and the scalar ``c``."""
        p = self.ring.p
        return Polynomial(self.ring, {k + key: v * c % p for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _mul_raw(self._terms, other._terms, self.ring.p), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coefficient()))

    # -- comparison / printing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            mono = self.ring.monomial_str(k)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _mul_raw(f: Mapping[int, int], g: Mapping[int, int], p: int) -> dict[int, int]:
    if len(f) < len(g):
        f, g = g, f
    out: dict[int, int] = {}
    get = out.get
    for kg, cg in g.items():
        for kf, cf in f.items():
            k = kf + kg
            out[k] = get(k, 0) + cf * cg
    return {k: v % p for k, v in out.items() if v % p}


def poly_arith(op: str, f: Polynomial, g: Polynomial | int) -> Polynomial:
    """``op`` in {add, sub, mul, scale}; ``scale`` takes an int as ``g``."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(int(g))
    raise ValueError(f"unknown operation {op!r}")


def poly_order(f: Polynomial) -> float:
    """Lowest total degree of a term (``math.inf`` for 0)."""
    if not f:
        return math.inf
    return min(f.ring.degree(k) for k in f.raw)


def random_linear_form(ring: RingContext, rng: random.Random) -> Polynomial:
    """c_1 x_1 + ... + c_n x_n with every c_i uniform on the nonzero residues."""
    p = ring.p
    if p < 1000:
        warnings.warn(f"characteristic {p} is small; sampled forms may fail to be general",
                      stacklevel=2)
    return Polynomial(ring, {k: rng.randrange(1, p) for k in ring.var_keys}, _trusted=True)
