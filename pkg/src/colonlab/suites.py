"""Named verification suites: seeded random cases checked against the theorems.

Every case draws its instance from ``Random("<suite>:<seed>:<index>")`` and its
Monte Carlo samples from a separate stream, so a genericity event is re-run
on the same instance with fresh samples.  Reports contain no timings, which
keeps the JSON byte-identical across runs with the same seed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

from . import dim2
from .asymptotics import coloncor_threshold, fullthm_check, n_invariant
from .errors import EngineInconsistency, GenericityError, HypothesisNotMet, ResourceError
from .fullness import PROPERTIES, burch_construct, classify, has_property, intersect_preserves
from .ideal import Ideal, certify_m_primary, colon, intersect, power_of_maximal
from .oracle import oracle_colon, oracle_intersection, oracle_membership_many
from .polynomial import Polynomial, random_linear_form
from .randideals import random_m_primary, random_polynomial, random_principal_factor
from .ring import RingContext

MAX_RERUNS = 3
MAX_DRAWS = 200


@dataclass
class RunConfig:
    characteristic: int = 32003
    variables: str = "x,y"
    seed: int = 0
    trials: int = 3
    window: int = 5
    cap: int = 40

    @property
    def ring(self) -> RingContext:
        return RingContext.make(self.variables, self.characteristic)

    def to_dict(self) -> dict:
        return {"characteristic": self.characteristic, "variables": self.variables, "seed": self.seed,
                "trials": self.trials, "window": self.window, "cap": self.cap}


@dataclass
class CaseResult:
    index: int
    passed: bool
    data: dict
    reruns: int = 0

    def to_dict(self) -> dict:
        return {"index": self.index, "pass": self.passed, "reruns": self.reruns, **self.data}


@dataclass
class SuiteReport:
    suite: str
    anchor: str
    config: RunConfig
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def genericity_events(self) -> int:
        return sum(c.reruns for c in self.cases)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "anchor": self.anchor,
            "config": self.config.to_dict(),
            "total": len(self.cases),
            "passed": self.passed,
            "failed": self.failed,
            "genericity_events": self.genericity_events,
            "cases": [c.to_dict() for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)


CaseFn = Callable[[RunConfig, int, random.Random, random.Random], "tuple[bool, dict]"]


@dataclass
class Suite:
    name: str
    anchor: str
    default_cases: int
    run_case: CaseFn


# -- helpers ---------------------------------------------------------------------------------


def _two_vars(cfg: RunConfig) -> RingContext:
    ring = cfg.ring
    if ring.num_vars != 2:
        raise ValueError("this suite needs exactly 2 variables (use --vars x,y)")
    return ring


def _mixed_ring(cfg: RunConfig, index: int) -> RingContext:
    """The configured ring on even cases, one more variable on odd cases."""
    ring = cfg.ring
    if index % 2 == 0:
        return ring
    extra = next(v for v in ("z", "w", "t", "u", "v") if v not in ring.variables)
    return RingContext.make(",".join(ring.variables + (extra,)), cfg.characteristic)


def _small_ideal(ring: RingContext, rng: random.Random) -> Ideal:
    if ring.num_vars > 2:
        return random_m_primary(ring, rng, order=rng.choice((1, 2)), spread=2, extra=(1, 2), terms=2)
    return random_m_primary(ring, rng)


def _draw_with(ring: RingContext, rng: random.Random, pred: Callable[[Ideal], bool]) -> Ideal:
    for _ in range(MAX_DRAWS):
        i = random_m_primary(ring, rng)
        if pred(i):
            return i
    raise ResourceError(f"no suitable random ideal after {MAX_DRAWS} draws")


def _s(x) -> str:
    return str(x)


# -- case functions ------------------------------------------------------------------------


def _case_engine_oracle(cfg, index, inst, samp):
    ring = _mixed_ring(cfg, index)
    a = _small_ideal(ring, inst)
    b = _small_ideal(ring, inst)
    cert = certify_m_primary(a)
    top = cert.power_bound + max(g.degree() for g in a.generators)
    probes: list[Polynomial] = []
    for k in range(50):
        if k % 2 == 0:
            f = Polynomial(ring, {})
            for g in a.generators:
                room = top - g.degree()
                if room >= 0 and inst.random() < 0.7:
                    f = f + g * random_polynomial(ring, inst, 0, min(room, 2), 2)
        else:
            f = random_polynomial(ring, inst, 0, top, 3)
        probes.append(f)
    engine_mem = [a.contains(f) for f in probes]
    oracle_mem = oracle_membership_many(probes, a, cert)
    x = random_linear_form(ring, inst)
    colon_ok = colon(a, x) == oracle_colon(a, x, cert)
    inter_ok = intersect(a, b) == oracle_intersection(a, b, cert)
    mem_ok = engine_mem == oracle_mem
    return mem_ok and colon_ok and inter_ok, {
        "variables": ",".join(ring.variables), "ideal": _s(a), "other": _s(b), "form": _s(x),
        "membership_agree": mem_ok, "members": sum(engine_mem), "colon_agree": colon_ok,
        "intersection_agree": inter_ok,
    }


def _case_fullfacts(cfg, index, inst, samp):
    ring = _two_vars(cfg)
    j = random_m_primary(ring, inst)
    i = j
    factor = None
    if index % 3 == 2:
        factor = random_principal_factor(ring, inst)
        i = j * factor
    rep = dim2.fullfacts_check(i, cfg.trials, samp)
    fac = rep.factorization
    return rep.unanimous and fac.certified, {
        "ideal": _s(i), "f": _s(fac.f), "j": _s(fac.j), "certified": fac.certified,
        "conditions": rep.conditions, "principal_factor": factor is not None,
    }


def _case_colon_additivity(cfg, index, inst, samp):
    ring = _two_vars(cfg)
    i = random_m_primary(ring, inst)
    j = random_m_primary(ring, inst)
    res = dim2.colon_additivity_check(i, j, cfg.trials, samp)
    return res.equivalent, {"i": _s(i), "j": _s(j), "colon_additive": res.colon_additive,
                            "order_condition": res.order_condition}


def _case_implication_chain(cfg, index, inst, samp):
    ring = _mixed_ring(cfg, index)
    a = _small_ideal(ring, inst)
    rep = classify(a, cfg.trials, samp)
    return rep.implication_chain_holds(), {
        "variables": ",".join(ring.variables), "ideal": _s(a), "m_full": rep.m_full, "full": rep.full,
        "weakly_m_full": rep.weakly_m_full, "burch": rep.burch,
    }


def _case_intersection_closure(cfg, index, inst, samp):
    ring = cfg.ring
    prop = PROPERTIES[index % len(PROPERTIES)]
    pick = random.Random(inst.getrandbits(64))

    def pred(i: Ideal) -> bool:
        return has_property(i, prop, cfg.trials, pick)

    ideals = [_draw_with(ring, inst, pred), _draw_with(ring, inst, pred)]
    rep = intersect_preserves(ideals, prop, cfg.trials, samp)
    return rep.passed, {"property": prop, "ideals": [_s(i) for i in ideals],
                        "intersection": _s(rep.intersection)}


def _case_n_equality(cfg, index, inst, samp):
    ring = _two_vars(cfg)
    i = random_m_primary(ring, inst)
    rep = dim2.n_equality_check(i, cfg.trials, cfg.window, cfg.cap, samp)
    return rep.equal, {"ideal": _s(i), "n": [rep.values[w] for w in (1, 2, 3)]}


def _case_burch_construct(cfg, index, inst, samp):
    ring = cfg.ring
    m = Ideal.maximal(ring)
    for _ in range(MAX_DRAWS):
        if index % 2 == 0:
            a = random_m_primary(ring, inst)
        else:
            a = Ideal(ring, [random_principal_factor(ring, inst)])
        b = random_m_primary(ring, inst)
        if not (b * m).issubset(a * m):
            break
    else:
        raise ResourceError("could not draw a pair satisfying the hypothesis")
    try:
        result, cert = burch_construct(a, b)
        verdict = cert.burch
    except EngineInconsistency:
        result, verdict = a + b * m, False
    return verdict, {"i": _s(a), "j": _s(b), "sum": _s(result), "burch": verdict}


def _case_example_family(cfg, index, inst, samp):
    ring = _two_vars(cfg)
    a = index + 2
    x, y = ring.variables
    i = Ideal(ring, [Polynomial.from_exponents(ring, [(1, (a, 0))]),
                     Polynomial.from_exponents(ring, [(1, (0, a))])])
    rep = dim2.n_equality_check(i, cfg.trials, cfg.window, cfg.cap, samp)
    vals = [rep.values[w] for w in (1, 2, 3)]
    traces = {f"n{w}": [ok for _, ok in rep.reports[w].trace] for w in (1, 2, 3)}
    return vals == [a - 1] * 3, {"a": a, "ideal": _s(i), "n": vals, "expected": a - 1, "traces": traces}


def _case_coloncor(cfg, index, inst, samp):
    ring = cfg.ring
    i = random_m_primary(ring, inst, order=inst.choice((1, 1, 2)), spread=2)
    j = random_m_primary(ring, inst) if inst.random() < 0.8 else Ideal.zero(ring)
    k = random_m_primary(ring, inst, order=1) if inst.random() < 0.6 else Ideal.unit(ring)
    rep = coloncor_threshold(i, j, k, cfg.window, cfg.cap)
    return rep.found and rep.holds_on_window(), {
        "i": _s(i), "j": _s(j), "k": _s(k), "threshold": rep.threshold,
        "trace": [ok for _, ok in rep.trace],
    }


def _case_fullthm(cfg, index, inst, samp):
    ring = cfg.ring
    prop = PROPERTIES[index % len(PROPERTIES)]
    j = random_m_primary(ring, inst) if inst.random() < 0.9 else Ideal.zero(ring)
    k = random_m_primary(ring, inst) if inst.random() < 0.6 else Ideal.unit(ring)
    base, rep = fullthm_check(j, k, prop, cfg.trials, cfg.window, cfg.cap, samp)
    return rep.found, {"j": _s(j), "k": _s(k), "property": prop, "base": base,
                       "threshold": rep.threshold, "trace": [ok for _, ok in rep.trace]}


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("engine-oracle", "Groebner engine == truncated linear algebra (membership, I:x, I∩J)",
          100, _case_engine_oracle),
    Suite("fullfacts", "dim 2: I m-full <=> I full <=> J m-full <=> J full <=> mu(J) = ord(J)+1",
          200, _case_fullfacts),
    Suite("colon-additivity", "dim 2: (I+J):x = I:x + J:x <=> ord(I∩J) = max(ord I, ord J)",
          200, _case_colon_additivity),
    Suite("implication-chain", "m-full => weakly m-full => Burch when depth R/I = 0",
          300, _case_implication_chain),
    Suite("intersection-closure", "each I_i has (P) => the intersection has (P)",
          150, _case_intersection_closure),
    Suite("n-equality", "dim 2: n_1(I) = n_2(I) = n_3(I)", 100, _case_n_equality),
    Suite("burch-construct", "Jm not inside Im => I + Jm is Burch", 100, _case_burch_construct),
    Suite("example-family", "n_i((x^a, y^a)) = a - 1 for a = 2..6", 5, _case_example_family),
    Suite("coloncor", "(J + I^n K):I = J:I + I^(n-1) K for n >> 0", 100, _case_coloncor),
    Suite("fullthm", "J has (P) <=> J + K m^n has (P) for n >> 0", 100, _case_fullthm),
]}


def run_case(suite: Suite, cfg: RunConfig, index: int) -> CaseResult:
    reruns = 0
    for attempt in range(MAX_RERUNS + 1):
        inst = random.Random(f"{suite.name}:{cfg.seed}:{index}")
        samp = random.Random(f"{suite.name}:{cfg.seed}:{index}:sample:{attempt}")
        try:
            passed, data = suite.run_case(cfg, index, inst, samp)
            return CaseResult(index, bool(passed), data, reruns)
        except GenericityError:
            reruns += 1
        except HypothesisNotMet as exc:
            return CaseResult(index, False, {"error": f"hypothesis not met: {exc}"}, reruns)
    return CaseResult(index, False, {"error": "genericity ambiguity persisted after re-runs"}, reruns)


def run_suite(name: str, cases: int | None = None, config: RunConfig | None = None,
              progress: Callable[[CaseResult], None] | None = None) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose one of {', '.join(SUITES)}")
    suite = SUITES[name]
    cfg = config or RunConfig()
    n = suite.default_cases if cases is None else cases
    if name == "example-family":
        n = min(n, 5)
    if n < 0:
        raise ValueError("cases must be >= 0")
    report = SuiteReport(name, suite.anchor, cfg)
    for index in range(n):
        result = run_case(suite, cfg, index)
        report.cases.append(result)
        if progress:
            progress(result)
    return report
