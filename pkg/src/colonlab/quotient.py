"""Finite-dimensional quotients R/I of zero-dimensional ideals.

Used as the fast route for colon ideals: with a reduced basis of I in hand,
``(I : b)/I`` is the common kernel of the multiplication maps of the
generators of ``b`` on R/I, and the reduced basis of ``I : b`` can be read
off by linear algebra alone.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import linalg
from .groebner import Raw, _Reducer, _reduce, _minimal_monomials
from .ring import RingContext


def is_zero_dimensional(ring: RingContext, leads: Sequence[int]) -> bool:
    """Every variable has a pure power among the leading monomials."""
    pure = set()
    for k in leads:
        exps = ring.decode(k)
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            pure.add(support[0])
        elif not support:
            return True
    return len(pure) == ring.num_vars


def standard_monomials(ring: RingContext, leads: Sequence[int]) -> list[int]:
    """Monomials outside the leading-term ideal (finite input required), descending."""
    if any(k == 0 for k in leads):
        return []
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for v in ring.var_keys:
                t = s + v
                if t in seen:
                    continue
                if any(ring.divides(lk, t) for lk in leads):
                    continue
                seen.add(t)
                nxt.append(t)
        frontier = nxt
    return sorted(seen, reverse=True)


class QuotientAlgebra:
    """R/I as a vector space on the standard monomials of a reduced basis."""

    def __init__(self, ring: RingContext, basis: Sequence[Raw]):
        self.ring = ring
        self.basis = [dict(g) for g in basis]
        self.leads = [max(g) for g in self.basis]
        if not is_zero_dimensional(ring, self.leads):
            raise ValueError("quotient is not finite dimensional")
        self.reducers = [_Reducer(ring, g) for g in self.basis]
        self.std = standard_monomials(ring, self.leads)
        self.index = {k: i for i, k in enumerate(self.std)}
        self.dim = len(self.std)
        self._var_mats: list[np.ndarray] | None = None
        # each standard monomial other than 1 as (variable, predecessor)
        self._pred: dict[int, tuple[int, int]] = {}
        for s in self.std:
            if s == 0:
                continue
            exps = ring.decode(s)
            i = next(i for i, e in enumerate(exps) if e)
            self._pred[s] = (i, s - ring.var_keys[i])

    def coords(self, f: Raw) -> np.ndarray:
        v = np.zeros(self.dim, dtype=linalg.dtype_for(self.ring.p))
        for k, c in _reduce(self.ring, f, self.reducers).items():
            v[self.index[k]] = c
        return v

    def variable_matrices(self) -> list[np.ndarray]:
        if self._var_mats is None:
            mats = []
            for v in self.ring.var_keys:
                m = np.zeros((self.dim, self.dim), dtype=linalg.dtype_for(self.ring.p))
                for j, s in enumerate(self.std):
                    t = s + v
                    if t in self.index:
                        m[self.index[t], j] = 1
                    else:
                        m[:, j] = self.coords({t: 1})
                mats.append(m)
            self._var_mats = mats
        return self._var_mats

    def multiplication_matrix(self, g: Raw) -> np.ndarray:
        """Matrix of f -> f*g on R/I (columns indexed like ``std``)."""
        p = self.ring.p
        ring = self.ring
        if g and all(ring.degree(k) == 1 for k in g):
            mats = self.variable_matrices()
            out = np.zeros((self.dim, self.dim), dtype=linalg.dtype_for(p, self.dim))
            for i, v in enumerate(ring.var_keys):
                c = g.get(v)
                if c:
                    out = (out + c * mats[i]) % p
            return out
        mats = self.variable_matrices()
        out = np.zeros((self.dim, self.dim), dtype=linalg.dtype_for(p))
        cols: dict[int, np.ndarray] = {}
        for s in sorted(self.std):
            if s == 0:
                col = self.coords(g)
            else:
                i, prev = self._pred[s]
                col = linalg.matmul(mats[i], cols[prev], p)
            cols[s] = col
            out[:, self.index[s]] = col
        return out

    def colon(self, gens: Sequence[Raw]) -> list[Raw]:
        """Reduced basis of I : (gens), ascending by lead."""
        p = self.ring.p
        gens = [g for g in gens if g]
        if not gens:
            raise ValueError("colon by the zero ideal")
        if self.dim == 0:
            return [{0: 1}]
        stacked = np.vstack([self.multiplication_matrix(g) for g in gens])
        kernel = linalg.nullspace(stacked, p)
        if kernel.shape[0] == 0:
            return [dict(g) for g in self.basis]
        rows, pivots = linalg.rref(kernel, p)
        return self._basis_from_subspace(rows, pivots)

    def _basis_from_subspace(self, rows: np.ndarray, pivots: list[int]) -> list[Raw]:
        """Reduced basis of I + K for an R-stable subspace K of R/I given in
        reduced echelon form (columns in descending monomial order)."""
        ring = self.ring
        p = ring.p
        lead_rows = {self.std[c]: r for r, c in enumerate(pivots)}
        minimal = _minimal_monomials(ring, list(self.leads) + list(lead_rows))
        lead_poly = {max(g): g for g in self.basis}
        out: list[Raw] = []
        for u in minimal:
            if u in lead_rows:
                row = rows[lead_rows[u]]
                g = {self.std[j]: int(c) for j, c in enumerate(row) if c}
            else:
                g0 = lead_poly[u]
                vec = np.zeros(self.dim, dtype=rows.dtype)
                for k, c in g0.items():
                    if k != u:
                        vec[self.index[k]] = c
                for r, c in enumerate(pivots):
                    if vec[c]:
                        vec = (vec - vec[c] * rows[r]) % p
                g = {self.std[j]: int(c) for j, c in enumerate(vec) if c}
                g[u] = 1
            out.append(g)
        out.sort(key=max)
        return out
