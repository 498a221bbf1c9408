"""Acceptance criteria, one test per criterion.

Each test records a single ``[PASS]``/``[FAIL]`` line; the lines are
printed in the pytest summary and when this file is run directly.
"""

import itertools
import sys
import time
from functools import lru_cache

import pytest

from golden import COPRODUCTS
from supercm import action, bicross, coaction, ffun, jets
from supercm.core import FSPACE, gen
from supercm.parse import parse
from supercm.uenv import BRACKET, NAMES, PARITY, UEnvElement

RESULTS = {}


def record(number, title, ok, seconds, limit=None, detail=""):
    within = limit is None or seconds < limit
    status = "PASS" if ok and within else "FAIL"
    timing = f"{seconds:.2f}s" + (f" (limit {limit:g}s)" if limit else "")
    line = f"[{status}] criterion {number}: {title} -- {timing}"
    if detail:
        line += f"; {detail}"
    RESULTS[number] = line
    print(line)
    return ok and within


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


@lru_cache(maxsize=None)
def hopf_reports():
    with Timer() as t:
        compat = bicross.verify_compatibility(max_index=6, samples=100, seed=42)
        hopf = bicross.verify_h_hopf(max_index=6, samples=100, seed=42)
    return compat, hopf, t.seconds


def test_criterion_1_golden_coproducts():
    ffun.coproduct_generator.cache_clear()
    expected = {k: parse(v, spaces=(FSPACE, FSPACE)) for k, v in COPRODUCTS.items()}
    with Timer() as t:
        bad = [k for k, v in expected.items() if ffun.coproduct(gen(*k)) != v]
    assert len(expected) == 11
    assert record(1, "displayed low-index coproducts", not bad, t.seconds, 1,
                  f"{len(expected)} formulas, mismatches {bad}")


def test_criterion_2_coproduct_oracle():
    with Timer() as t:
        rep = jets.verify_oracles(6, checks=("coproduct",))
    assert record(2, "closed-form coproducts equal jet composition, index <= 6",
                  rep.passed, t.seconds, 120), rep.to_text()


def test_criterion_3_action_oracle():
    with Timer() as t:
        bad = []
        count = 0
        for g in NAMES:
            for fam, n in ffun.generators(6):
                count += 1
                if action.act_generator(g, fam, n) != jets.oracle_action(g, fam, n):
                    bad.append((g, fam, n))
    assert count == 6 * 22
    assert record(3, "action table equals derivative oracle", not bad, t.seconds,
                  detail=f"{count} entries, mismatches {bad[:3]}")


def test_criterion_4_bracket_consistency():
    G = [UEnvElement.gen(n) for n in NAMES]
    act = action.act

    def commutator(g, h, x):
        s = -1 if PARITY[g] and PARITY[h] else 1
        return act(G[g], act(G[h], x)) - act(G[h], act(G[g], x)).scale(s)

    with Timer() as t:
        pairs = list(itertools.combinations_with_replacement(range(6), 2))
        bad = []
        for g, h in pairs:
            br = UEnvElement({(k,): c for k, c in BRACKET[g, h].items()})
            for fam, n in ffun.generators(6):
                x = gen(fam, n)
                if act(br, x) != commutator(g, h, x):
                    bad.append((NAMES[g], NAMES[h], fam, n))
        y, x_, u, w = (NAMES.index(c) for c in "YXUW")
        worked = all(commutator(y, x_, gen("a", n)) == act(G[x_], gen("a", n))
                     for n in range(2, 7))
        worked = worked and all(commutator(u, w, gen("d", n)) == -act(G[x_], gen("d", n))
                                for n in range(1, 7))
    assert len(pairs) == 21
    assert record(4, "bracket consistency of the action", not bad and worked, t.seconds,
                  detail=f"21 pairs x 22 generators, worked cases {'ok' if worked else 'differ'}")


def test_criterion_5_comodule():
    with Timer() as t:
        rep = coaction.verify_comodule(max_degree=3, samples=100, seed=42)
    assert record(5, "comodule coalgebra axioms on PBW monomials of degree <= 3",
                  rep.passed, t.seconds), rep.to_text()


def test_criterion_6_compatibility_and_hopf():
    compat, hopf, seconds = hopf_reports()
    ok = compat.passed and hopf.passed
    assert record(6, "compatibility conditions and super Hopf axioms", ok, seconds, 600,
                  f"{len(compat.checks)} + {len(hopf.checks)} checks"), \
        compat.to_text() + "\n" + hopf.to_text()


def test_criterion_7_antipode_coherence():
    with Timer() as t:
        coherence = jets.verify_antipode_coherence(6)
        f_rep = ffun.verify_f_hopf(max_index=6, samples=100, seed=42)
    _, hopf, _ = hopf_reports()
    f_ok = all(c.passed for c in f_rep.checks if "antipode" in c.name)
    h_ok = all(c.passed for c in hopf.checks if "antipode" in c.name)
    ok = coherence.passed and f_ok and h_ok
    assert record(7, "three antipodes agree and both antipode axioms hold in F and H",
                  ok, t.seconds), coherence.to_text() + f_rep.to_text()


def test_criterion_8_classical_limit():
    with Timer() as t:
        rep = bicross.verify_classical(max_n=4, max_index=6)
    assert record(8, "classical quotient relations and antipode", rep.passed,
                  t.seconds), rep.to_text()


def test_criterion_9_factorization_and_lemmas():
    with Timer() as t:
        fac = jets.verify_oracles(6, checks=("factorization",))
        lem = jets.verify_lemmas(6)
    conv = next((n for n in lem.notes if n.startswith("adopted convention")), "")
    ok = fac.passed and lem.passed and bool(conv)
    assert record(9, "factorization to order 7, action identity, coaction tangent identity",
                  ok, t.seconds, detail=conv), fac.to_text() + lem.to_text()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
