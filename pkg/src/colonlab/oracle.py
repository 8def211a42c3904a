"""Brute-force membership, colon and intersection for m-primary ideals.

Nothing here touches Groebner bases: an ideal I = (g_1, ..., g_r) with
m^N ⊆ I is replaced by the finite-dimensional span

    V_D = span{ u * g_i : u a monomial, deg u + deg g_i <= D },

which equals I ∩ (polynomials of degree <= D) once D >= N + max deg g_i.
The span is self-checked to contain every monomial of degree N..D before it
is trusted, so a wrong power bound is reported instead of silently
producing a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import OracleError
from .ideal import Ideal, MPrimaryCertificate, certify_m_primary
from .polynomial import Polynomial

MARGIN = 2


def _monomials_up_to(ring, d: int) -> list[int]:
    keys = []
    for e in range(d + 1):
        keys.extend(ring.monomials_of_degree(e))
    return sorted(keys, reverse=True)


@dataclass
class TruncatedSpace:
    ring: object
    degree_bound: int
    basis: list[int]            # monomial keys of degree <= D, descending
    index: dict[int, int]
    rows: np.ndarray             # reduced echelon basis of V_D
    pivots: list[int]

    @classmethod
    def build(cls, ideal: Ideal, degree_bound: int, power_bound: int) -> "TruncatedSpace":
        ring = ideal.ring
        p = ring.p
        mons = _monomials_up_to(ring, degree_bound)
        index = {k: i for i, k in enumerate(mons)}
        raw_rows = []
        for g in ideal.generators:
            dg = g.degree()
            for u in _monomials_up_to(ring, degree_bound - dg):
                raw_rows.append({index[k + u]: c for k, c in g.raw.items()})
        if not raw_rows:
            raise OracleError("ideal has no generators of degree <= D")
        rows, pivots = linalg.rref(linalg.as_matrix(raw_rows, len(mons), p), p)
        space = cls(ring, degree_bound, mons, index, rows, pivots)
        high = [index[k] for e in range(power_bound, degree_bound + 1)
                for k in ring.monomials_of_degree(e)]
        probe = np.zeros((len(high), len(mons)), dtype=rows.dtype)
        probe[np.arange(len(high)), high] = 1
        if space.residuals(probe).any():
            raise OracleError(f"truncation at degree {degree_bound} is not exact "
                              f"(m^{power_bound} not spanned)")
        return space

    def vector(self, f: dict) -> np.ndarray:
        v = np.zeros(len(self.basis), dtype=self.rows.dtype)
        for k, c in f.items():
            if k not in self.index:
                raise OracleError(f"degree bound {self.degree_bound} exceeded")
            v[self.index[k]] = c
        return v

    def residual(self, f: dict) -> np.ndarray:
        return self.residuals(self.vector(f)[None, :])[0]

    def residuals(self, vecs: np.ndarray) -> np.ndarray:
        """Reduce each row of ``vecs`` modulo V_D (rows are in reduced echelon form)."""
        p = self.ring.p
        if not self.pivots:
            return vecs % p
        return (vecs - linalg.matmul(vecs[:, self.pivots], self.rows, p)) % p

    def contains(self, f: dict) -> bool:
        return not self.residual(f).any()

    def row_polynomials(self) -> list[dict]:
        return [{self.basis[j]: int(c) for j, c in enumerate(row) if c} for row in self.rows]


def _bounds(ideal: Ideal, cert: MPrimaryCertificate | None, extra_degree: int = 0) -> tuple[int, int]:
    """(D, N) with D = N + max(generator degree, extra_degree) + MARGIN."""
    cert = cert or certify_m_primary(ideal)
    gmax = max(g.degree() for g in ideal.generators)
    return cert.power_bound + max(gmax, extra_degree) + MARGIN, cert.power_bound


def _membership_bound(ideal: Ideal, cert: MPrimaryCertificate | None, degree: int) -> tuple[int, int]:
    # V_D is already all of I in degrees <= D, so D only has to reach deg f
    D, N = _bounds(ideal, cert)
    return max(D, degree), N


@lru_cache(maxsize=16)
def _space(ring, generators: tuple[Polynomial, ...], degree_bound: int, power_bound: int) -> TruncatedSpace:
    return TruncatedSpace.build(Ideal(ring, generators), degree_bound, power_bound)


def truncated_space(ideal: Ideal, degree_bound: int, power_bound: int) -> TruncatedSpace:
    """Cached by the generator list itself, never by anything the engine computed."""
    return _space(ideal.ring, tuple(ideal.generators), degree_bound, power_bound)


def oracle_membership(f: Polynomial, ideal: Ideal, cert: MPrimaryCertificate | None = None) -> bool:
    D, N = _membership_bound(ideal, cert, f.degree())
    return truncated_space(ideal, D, N).contains(f.raw)


def oracle_membership_many(polys: list[Polynomial], ideal: Ideal,
                           cert: MPrimaryCertificate | None = None) -> list[bool]:
    """Membership of several polynomials against one truncated span."""
    if not polys:
        return []
    D, N = _membership_bound(ideal, cert, max(f.degree() for f in polys))
    space = truncated_space(ideal, D, N)
    vecs = np.stack([space.vector(f.raw) for f in polys])
    return [not r.any() for r in space.residuals(vecs)]


def _ideal_from_vectors(ring, polys: list[dict]) -> Ideal:
    # every result contains m^N, so an element with a nonzero constant term is a unit
    if any(0 in f for f in polys):
        return Ideal.unit(ring)
    return Ideal(ring, [Polynomial(ring, f) for f in polys])


def oracle_colon(ideal: Ideal, g: Polynomial, cert: MPrimaryCertificate | None = None) -> Ideal:
    """All f of degree <= D - deg g with f*g in V_D."""
    ring = ideal.ring
    p = ring.p
    if not g:
        raise OracleError("colon by zero")
    D, N = _bounds(ideal, cert, g.degree())
    space = truncated_space(ideal, D, N)
    cand = _monomials_up_to(ring, D - g.degree())
    images = np.zeros((len(cand), len(space.basis)), dtype=space.rows.dtype)
    for j, u in enumerate(cand):
        for k, c in g.raw.items():
            images[j, space.index[k + u]] = c
    kernel = linalg.nullspace(space.residuals(images).T, p)
    polys = [{cand[j]: int(c) for j, c in enumerate(vec) if c} for vec in kernel]
    return _ideal_from_vectors(ring, [f for f in polys if f])


def oracle_intersection(a: Ideal, b: Ideal, cert_a: MPrimaryCertificate | None = None,
                        cert_b: MPrimaryCertificate | None = None) -> Ideal:
    """Zassenhaus intersection of the two truncated spans."""
    ring = a.ring
    p = ring.p
    Da, Na = _bounds(a, cert_a)
    Db, Nb = _bounds(b, cert_b)
    D = max(Da, Db)
    sa = truncated_space(a, D, Na)
    sb = truncated_space(b, D, Nb)
    n = len(sa.basis)
    top = np.hstack([sa.rows, sa.rows])
    bottom = np.hstack([sb.rows, np.zeros_like(sb.rows)])
    red, pivots = linalg.rref(np.vstack([top, bottom]), p)
    polys = []
    for row, c in zip(red, pivots):
        if c >= n:
            polys.append({sa.basis[j]: int(v) for j, v in enumerate(row[n:]) if v})
    return _ideal_from_vectors(ring, polys)
