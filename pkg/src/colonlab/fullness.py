"""m-full, full, weakly m-full and Burch ideals.

m-full and full are defined through a *general* linear form; we sample
forms with nonzero random coefficients and require every trial to agree
(a special form can only enlarge the colon, so a split vote means one of
the samples was not general).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import EngineInconsistency, GenericityError, HypothesisNotMet
from .ideal import Ideal, colon, intersect
from .polynomial import Polynomial, random_linear_form

PROPERTIES = ("m_full", "full", "weakly_m_full")


def normalize_property(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    aliases = {"mfull": "m_full", "weakly": "weakly_m_full", "basically_full": "weakly_m_full",
               "weakly_mfull": "weakly_m_full"}
    key = aliases.get(key, key)
    if key not in PROPERTIES:
        raise ValueError(f"unknown property {name!r}; choose one of {', '.join(PROPERTIES)}")
    return key


def _require_proper(a: Ideal):
    if a.is_unit():
        raise ValueError("classification needs a proper ideal")


def _unanimous(verdicts: Sequence[bool]) -> bool:
    if len(set(verdicts)) > 1:
        raise GenericityError()
    return verdicts[0]


def _sample_forms(a: Ideal, trials: int, rng: random.Random) -> list[Polynomial]:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    return [random_linear_form(a.ring, rng) for _ in range(trials)]


def is_weakly_m_full(a: Ideal) -> bool:
    """I m : m == I."""
    _require_proper(a)
    m = Ideal.maximal(a.ring)
    return colon(m * a, m) == a


def is_burch(a: Ideal) -> bool:
    """I m : m != I : m, checked against the equivalent I m != (I : m) m."""
    _require_proper(a)
    m = Ideal.maximal(a.ring)
    ma = m * a
    a_m = colon(a, m)
    first = colon(ma, m) != a_m
    second = ma != a_m * m
    if first != second:
        raise EngineInconsistency(f"the two Burch criteria disagree on {a}")
    return first


def is_m_full(a: Ideal, trials: int = 3, rng: random.Random | None = None,
              forms: Sequence[Polynomial] | None = None) -> bool:
    """I m : x == I for a general linear form x."""
    _require_proper(a)
    forms = list(forms) if forms is not None else _sample_forms(a, trials, rng or random.Random(0))
    ma = Ideal.maximal(a.ring) * a
    return _unanimous([colon(ma, x) == a for x in forms])


def is_full(a: Ideal, trials: int = 3, rng: random.Random | None = None,
            forms: Sequence[Polynomial] | None = None) -> bool:
    """I : x == I : m for a general linear form x."""
    _require_proper(a)
    forms = list(forms) if forms is not None else _sample_forms(a, trials, rng or random.Random(0))
    a_m = colon(a, Ideal.maximal(a.ring))
    return _unanimous([colon(a, x) == a_m for x in forms])


def has_property(a: Ideal, prop: str, trials: int = 3, rng: random.Random | None = None) -> bool:
    prop = normalize_property(prop)
    if prop == "weakly_m_full":
        return is_weakly_m_full(a)
    if prop == "m_full":
        return is_m_full(a, trials, rng)
    return is_full(a, trials, rng)


@dataclass
class ClassificationReport:
    ideal: Ideal
    m_full: bool
    full: bool
    weakly_m_full: bool
    burch: bool
    sampled_forms: list[Polynomial]
    witness_colons: dict[str, object] = field(default_factory=dict)

    def implication_chain_holds(self) -> bool:
        """m-full => weakly m-full => Burch (meaningful when depth R/I = 0)."""
        return (not self.m_full or self.weakly_m_full) and (not self.weakly_m_full or self.burch)

    def to_dict(self) -> dict:
        w = self.witness_colons
        return {
            "ideal": str(self.ideal),
            "m_full": self.m_full,
            "full": self.full,
            "weakly_m_full": self.weakly_m_full,
            "burch": self.burch,
            "trials": len(self.sampled_forms),
            "sampled_forms": [str(f) for f in self.sampled_forms],
            "witness_colons": {
                "Im:x": [str(c) for c in w["Im:x"]],
                "I:x": [str(c) for c in w["I:x"]],
                "Im:m": str(w["Im:m"]),
                "I:m": str(w["I:m"]),
            },
        }


def classify(a: Ideal, trials: int = 3, rng: random.Random | None = None) -> ClassificationReport:
    """All four classes at once, sharing the sampled forms and colons."""
    _require_proper(a)
    rng = rng or random.Random(0)
    forms = _sample_forms(a, trials, rng)
    m = Ideal.maximal(a.ring)
    ma = m * a
    ma_x = [colon(ma, x) for x in forms]
    a_x = [colon(a, x) for x in forms]
    ma_m = colon(ma, m)
    a_m = colon(a, m)
    m_full = _unanimous([c == a for c in ma_x])
    full = _unanimous([c == a_m for c in a_x])
    burch = ma_m != a_m
    if burch != (ma != a_m * m):
        raise EngineInconsistency(f"the two Burch criteria disagree on {a}")
    return ClassificationReport(
        ideal=a, m_full=m_full, full=full, weakly_m_full=(ma_m == a), burch=burch,
        sampled_forms=forms,
        witness_colons={"Im:x": ma_x, "I:x": a_x, "Im:m": ma_m, "I:m": a_m},
    )


@dataclass
class IntersectionReport:
    prop: str
    members: list[Ideal]
    intersection: Ideal
    intersection_has_property: bool

    @property
    def passed(self) -> bool:
        return self.intersection_has_property


def intersect_preserves(ideals: Sequence[Ideal], prop: str, trials: int = 3,
                        rng: random.Random | None = None) -> IntersectionReport:
    """Intersect a finite family of ideals sharing ``prop`` and classify the result."""
    prop = normalize_property(prop)
    rng = rng or random.Random(0)
    if not ideals:
        raise ValueError("need at least one ideal")
    for i in ideals:
        if not has_property(i, prop, trials, rng):
            raise HypothesisNotMet(f"{i} does not have property {prop}")
    inter = ideals[0]
    for i in ideals[1:]:
        inter = intersect(inter, i)
    return IntersectionReport(prop, list(ideals), inter, has_property(inter, prop, trials, rng))


@dataclass
class BurchCertificate:
    hypothesis_witness: Polynomial
    burch: bool


def burch_construct(a: Ideal, b: Ideal) -> tuple[Ideal, BurchCertificate]:
    """I + J m, which is Burch whenever J m is not inside I m."""
    m = Ideal.maximal(a.ring)
    bm, am = b * m, a * m
    witness = next((g for g in bm.basis_polys() if not am.contains(g)), None)
    if witness is None:
        raise HypothesisNotMet("J m is contained in I m")
    result = a + bm
    verdict = is_burch(result)
    if not verdict:
        raise EngineInconsistency(f"{result} should be Burch")
    return result, BurchCertificate(witness, verdict)
