"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are printed together in
the terminal summary so they survive output capture.
"""

from __future__ import annotations

import json
import time
from collections import Counter

import pytest

from colonlab.cli import main
from colonlab.fullness import classify
from colonlab.ideal import mu, ord_ideal
from colonlab.suites import RunConfig, run_suite

from conftest import ideal

RESULTS: list[str] = []


class Criterion:
    def __init__(self, number: int, title: str, budget: float):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.start = time.perf_counter()
        self.detail = ""
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        over = elapsed > self.budget
        ok = exc_type is None and not over
        why = self.detail
        if exc_type is not None:
            why = f"{exc_type.__name__}: {exc}".splitlines()[0][:160]
        elif over:
            why += f" (over budget {self.budget:.0f} s)"
        line = (f"criterion {self.number:2d} {'PASS' if ok else 'FAIL'}  {self.title}: "
                f"{why} [{elapsed:.1f} s]")
        RESULTS.append(line)
        print(line)
        if exc_type is None and over:
            pytest.fail(f"criterion {self.number} exceeded its {self.budget} s budget ({elapsed:.1f} s)")
        return False


def _suite_line(rep) -> str:
    return f"{rep.passed}/{len(rep.cases)} passed, {rep.genericity_events} genericity events"


def test_01_example_family():
    with Criterion(1, "n1 = n2 = n3 = a - 1 for (x^a, y^a), a = 2..6", 60) as c:
        rep = run_suite("example-family", 5, RunConfig(window=5))
        got = {case.data["a"]: case.data["n"] for case in rep.cases}
        c.detail = f"n = {got}"
        assert got == {a: [a - 1] * 3 for a in range(2, 7)}


def test_02_counterexamples():
    with Criterion(2, "sums of full ideals that are not full", 5) as c:
        first = ideal("x^2") + ideal("y^2")
        # second pair: I = (x^2, x y^2, y^3) and J = (x^3, x^2 y, y^2), both full of order 2
        i, j = ideal("x^2", "x*y^2", "y^3"), ideal("x^3", "x^2*y", "y^2")
        verdicts = [classify(first).full, classify(i + j).full]
        summands = [(classify(k).full, mu(k), ord_ideal(k) + 1) for k in (i, j)]
        # with x*y in place of x*y^2 the sum would be m^2, which is full
        typo = ideal("x^2", "x*y", "y^3") + j
        c.detail = f"sums full: {verdicts}; summands (full, mu, ord+1): {summands}"
        assert verdicts == [False, False]
        assert summands == [(True, 3, 3), (True, 3, 3)]
        assert typo == ideal("x^2", "x*y", "y^2") and classify(typo).full


def test_03_fullfacts():
    with Criterion(3, "five fullness conditions unanimous, 200 ideals", 180) as c:
        rep = run_suite("fullfacts", 200)
        c.detail = _suite_line(rep)
        assert len(rep.cases) == 200 and rep.ok
        assert rep.genericity_events / 200 < 0.01


def test_04_colon_additivity():
    with Criterion(4, "colon additivity <=> order of intersection, 200 pairs", 180) as c:
        rep = run_suite("colon-additivity", 200)
        split = Counter(case.data["colon_additive"] for case in rep.cases)
        c.detail = f"{_suite_line(rep)}; additive true/false = {split[True]}/{split[False]}"
        assert len(rep.cases) == 200 and rep.ok


def test_05_coloncor():
    with Criterion(5, "colon corollary threshold <= 40 with full window, 100 triples", 600) as c:
        rep = run_suite("coloncor", 100, RunConfig(window=5, cap=40))
        worst = max(case.data["threshold"] or 10 ** 9 for case in rep.cases)
        c.detail = f"{_suite_line(rep)}; largest threshold {worst}"
        assert len(rep.cases) == 100 and rep.ok and worst <= 40


def test_06_fullthm():
    with Criterion(6, "J + K m^n stabilizes to the status of J, 100 triples", 600) as c:
        rep = run_suite("fullthm", 100, RunConfig(window=5, cap=40))
        worst = max(case.data["threshold"] or 10 ** 9 for case in rep.cases)
        c.detail = f"{_suite_line(rep)}; largest threshold {worst}"
        assert len(rep.cases) == 100 and rep.ok and worst <= 40


def test_07_implication_chain():
    with Criterion(7, "m-full => weakly m-full => Burch, 300 ideals", 300) as c:
        rep = run_suite("implication-chain", 300)
        c.detail = _suite_line(rep)
        assert len(rep.cases) == 300 and rep.ok


def test_08_burch_construct():
    with Criterion(8, "I + Jm is Burch when Jm is not in Im, 100 pairs", 180) as c:
        rep = run_suite("burch-construct", 100)
        c.detail = _suite_line(rep)
        assert len(rep.cases) == 100 and rep.ok


def test_09_intersection_closure():
    with Criterion(9, "intersections keep each property, 50 pairs per property", 300) as c:
        rep = run_suite("intersection-closure", 150)
        per = Counter(case.data["property"] for case in rep.cases if case.passed)
        c.detail = f"{_suite_line(rep)}; passed per property {dict(sorted(per.items()))}"
        assert rep.ok and sorted(per.values()) == [50, 50, 50]


def test_10_n_equality():
    with Criterion(10, "n1 = n2 = n3, 100 ideals", 600) as c:
        rep = run_suite("n-equality", 100)
        spread = Counter(case.data["n"][0] for case in rep.cases)
        c.detail = f"{_suite_line(rep)}; n1 distribution {dict(sorted(spread.items()))}"
        assert len(rep.cases) == 100 and rep.ok


def test_11_engine_oracle():
    with Criterion(11, "engine agrees with the linear-algebra oracle, 100 instances", 300) as c:
        rep = run_suite("engine-oracle", 100)
        c.detail = _suite_line(rep)
        assert len(rep.cases) == 100 and rep.ok


def test_12_determinism(capsys):
    with Criterion(12, "same seed, byte-identical structured output", 120) as c:
        sizes = {"engine-oracle": 4, "fullfacts": 12, "colon-additivity": 12, "implication-chain": 12,
                 "intersection-closure": 6, "n-equality": 6, "burch-construct": 12, "example-family": 5,
                 "coloncor": 6, "fullthm": 6}
        identical = 0
        for name, n in sizes.items():
            cfg = RunConfig(seed=2024)
            first = run_suite(name, n, cfg).to_json()
            second = run_suite(name, n, RunConfig(seed=2024)).to_json()
            assert first == second, name
            identical += 1
        outputs = []
        for _ in range(2):
            main(["verify", "fullfacts", "--cases", "5", "--seed", "7", "--format", "json"])
            main(["threshold", "ni", "ideal(x^3, x*y, y^4)", "--index", "2", "--seed", "7", "--format", "json"])
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        json.loads(outputs[0].split("\n}\n")[0] + "\n}")
        c.detail = f"{identical} suites and 2 CLI commands re-run byte for byte"
