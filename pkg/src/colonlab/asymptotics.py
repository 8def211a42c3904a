"""Threshold finders for identities that hold "for n large".

A threshold is reported once the identity has held on a window of
consecutive n; that is evidence of stabilization, never a proof, and every
report says so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .errors import GenericityError
from .fullness import has_property, normalize_property
from .ideal import Ideal, colon, power_of_maximal
from .polynomial import Polynomial

DEFAULT_WINDOW = 5
DEFAULT_CAP = 40

N_INVARIANT_PROPERTY = {1: "m_full", 2: "full", 3: "weakly_m_full"}


@dataclass
class ThresholdReport:
    formula_id: str
    threshold: int | None
    window: int
    cap: int
    floor: int
    trace: list[tuple[int, bool]] = field(default_factory=list)
    heuristic: bool = True
    details: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.threshold is not None

    def holds_on_window(self) -> bool:
        if self.threshold is None:
            return False
        ok = dict(self.trace)
        return all(ok.get(n, False) for n in range(self.threshold, self.threshold + self.window + 1))

    def to_dict(self) -> dict:
        return {
            "formula": self.formula_id,
            "threshold": self.threshold if self.threshold is not None else f"not found <= {self.cap}",
            "window": self.window,
            "cap": self.cap,
            "floor": self.floor,
            "heuristic": self.heuristic,
            "trace": [[n, ok] for n, ok in self.trace],
            **self.details,
        }


def _check_limits(window: int, cap: int):
    if window < 1 or cap < window:
        raise ValueError(f"need cap >= window >= 1 (window={window}, cap={cap})")


def scan_threshold(formula_id: str, holds: Callable[[int], bool], floor: int,
                   window: int = DEFAULT_WINDOW, cap: int = DEFAULT_CAP) -> ThresholdReport:
    """Least t >= floor with ``holds(n)`` for every n in [t, t + window], n <= cap."""
    _check_limits(window, cap)
    trace: list[tuple[int, bool]] = []
    start = None
    for n in range(floor, cap + 1):
        ok = bool(holds(n))
        trace.append((n, ok))
        if not ok:
            start = None
            continue
        if start is None:
            start = n
        if n - start >= window:
            return ThresholdReport(formula_id, start, window, cap, floor, trace)
    return ThresholdReport(formula_id, None, window, cap, floor, trace)


def _per_n_rng(formula_id: str, rng: random.Random | None) -> Callable[[int], random.Random]:
    base = (rng or random.Random(0)).getrandbits(64)
    return lambda n: random.Random(f"{formula_id}:{base}:{n}")


class _Powers:
    """I^0, I^1, ... computed incrementally."""

    def __init__(self, ideal: Ideal):
        self.ideal = ideal
        self.cache = [Ideal.unit(ideal.ring)]

    def __getitem__(self, n: int) -> Ideal:
        while len(self.cache) <= n:
            self.cache.append(self.cache[-1] * self.ideal)
        return self.cache[n]


def general_element(ideal: Ideal, rng: random.Random) -> Polynomial:
    """Random combination of the reduced basis with nonzero coefficients."""
    p = ideal.ring.p
    out = Polynomial(ideal.ring, {})
    for g in ideal.basis_polys():
        out = out + g.scale(rng.randrange(1, p))
    return out


def lemma_threshold(i: Ideal, k: Ideal, trials: int = 3, window: int = DEFAULT_WINDOW,
                    cap: int = DEFAULT_CAP, rng: random.Random | None = None) -> ThresholdReport:
    """I^n K : x == I^(n-1) K for a general x in I."""
    if i.is_zero():
        raise ValueError("I must be nonzero")
    fid = "lemma"
    seeded = _per_n_rng(fid, rng)
    powers = _Powers(i)

    def holds(n: int) -> bool:
        r = seeded(n)
        xs = [general_element(i, r) for _ in range(trials)]
        lhs_base = powers[n] * k
        rhs = powers[n - 1] * k
        verdicts = [colon(lhs_base, x) == rhs for x in xs]
        if len(set(verdicts)) > 1:
            raise GenericityError()
        return verdicts[0]

    return scan_threshold(fid, holds, 1, window, cap)


def coloncor_threshold(i: Ideal, j: Ideal, k: Ideal, window: int = DEFAULT_WINDOW,
                       cap: int = DEFAULT_CAP) -> ThresholdReport:
    """(J + I^n K) : I == (J : I) + I^(n-1) K."""
    if i.is_zero():
        raise ValueError("I must be nonzero")
    powers = _Powers(i)
    j_i = colon(j, i)

    def holds(n: int) -> bool:
        return colon(j + powers[n] * k, i) == j_i + powers[n - 1] * k

    return scan_threshold("coloncor", holds, 1, window, cap)


def fullthm_check(j: Ideal, k: Ideal, prop: str, trials: int = 3, window: int = DEFAULT_WINDOW,
                  cap: int = DEFAULT_CAP, rng: random.Random | None = None) -> tuple[bool, ThresholdReport]:
    """Status of J versus status of J + K m^n for growing n."""
    prop = normalize_property(prop)
    if k.is_zero():
        raise ValueError("K must be nonzero")
    fid = f"fullthm:{prop}"
    seeded = _per_n_rng(fid, rng)
    base = has_property(j, prop, trials, seeded(0))

    def holds(n: int) -> bool:
        return has_property(j + k * power_of_maximal(j.ring, n), prop, trials, seeded(n)) == base

    report = scan_threshold(fid, holds, 1, window, cap)
    report.details["base_status"] = base
    report.details["property"] = prop
    return base, report


def n_invariant(i: Ideal, which: int, trials: int = 3, window: int = DEFAULT_WINDOW,
                cap: int = DEFAULT_CAP, rng: random.Random | None = None) -> ThresholdReport:
    """n_1, n_2, n_3: where I m^n starts being m-full / full / weakly m-full for good."""
    if which not in N_INVARIANT_PROPERTY:
        raise ValueError("which must be 1, 2 or 3")
    if i.is_zero():
        raise ValueError("I must be nonzero")
    prop = N_INVARIANT_PROPERTY[which]
    fid = f"n{which}"
    seeded = _per_n_rng(fid, rng)

    def holds(n: int) -> bool:
        return has_property(i * power_of_maximal(i.ring, n), prop, trials, seeded(n))

    report = scan_threshold(fid, holds, 0, window, cap)
    report.details["property"] = prop
    return report
