"""Acceptance criteria, one test each, printing a PASS/FAIL line per criterion.

Run directly (``python tests/test_acceptance.py``) for just the summary lines.
Criteria 5, 8, 10 and 11 fail on the published claims; the failing
partitions and coefficients are printed with the line.
"""

import time

import pytest

from hookbias import appendix, claims, phi, psi, series
from hookbias.hooks import count_k_hooks, hook_grid
from hookbias.partitions import Partition


def _line(num, ok, msg):
    return f"[criterion {num:2}] {'PASS' if ok else 'FAIL'}: {msg}"


def _failures(reports):
    return [r for r in reports if r.status == "fail"]


def c1():
    t0 = time.perf_counter()
    rep = claims.verify_hook_oracles(22, 6)
    dt = time.perf_counter() - t0
    return rep.ok and dt < 30, f"cell/beta/domino agree for n<=22, k<=6 ({dt:.1f}s)"


def c2():
    grid = hook_grid((5, 3, 2, 2))
    ok = grid == [[8, 7, 4, 2, 1], [5, 4, 1], [3, 2], [2, 1]] and count_k_hooks((5, 3, 2, 2), 2) == 3
    return ok, f"hook grid of (5,3,2,2) = {grid}"


def c3():
    t0 = time.perf_counter()
    rep = claims.verify_theorem(45)
    dt = time.perf_counter() - t0
    return rep.ok and dt < 300, f"b_(4,2)(n) >= b_(3,2)(n) for 0<=n<=45 ({dt:.1f}s)"


def c4():
    reps = claims.verify_prior_biases(45)
    return not _failures(reps), "; ".join(r.summary() for r in reps)


def c5():
    reps = phi.verify_phi(35, 30)
    bad = _failures(reps)
    msg = "sum, regularity, injectivity, Case 1 identity for n<=35; block deltas vs formulas for n<=30"
    for r in bad:
        msg += f" | {r.claim_id}: {r.details.get('mismatches', len(r.counterexamples))} mismatches," \
               f" e.g. {r.counterexamples[0]['input']} families={r.details.get('families')}"
    return not bad, msg


def c6():
    got = phi.phi(Partition((10, 10, 8, 8, 8, 5, 4, 2, 1, 1)))
    return got == (10, 10, 6, 6, 6, 5, 3, 2) + (1,) * 9, f"Phi((10^2,8^3,5,4,2,1^2)) = {got}"


def c7():
    bad = []
    for n in range(4, 31):
        s = phi.build_sets(n)
        a, b, c = set(s.q1p), set(s.q2p), set(s.q3p)
        if a & b or a & c or b & c or not (a | b | c) <= set(s.c4):
            bad.append(n)
    return not bad, f"Q1', Q2', Q3' disjoint and inside C4(n) for 4<=n<=30; bad n: {bad}"


def c8():
    reps = [r for r in series.verify_series(300) if r.claim_id != "series.restricted-inequalities"]
    bad = _failures(reps)
    b2a = next(r for r in reps if r.claim_id == "series.B2a-negative-support")
    msg = f"{len(reps)} series checks to order 300; B2a negative support {b2a.details['negative_support']}"
    for r in bad:
        msg += f" | {r.claim_id} failed: {r.counterexamples[0]}"
    return not bad, msg


def c9():
    rep = series.pa_inequalities(500)
    return rep.ok, rep.summary()


def c10():
    reps = psi.verify_psi(26)
    reps.append(psi.verify_table1(22))
    bad = _failures(reps)
    und = next(r for r in reps if r.claim_id == "psi.injective").details["undetermined_per_n"]
    msg = f"Psi on D3(n), n<=26 ({sum(und.values())} undetermined); {len(psi.WORKED_EXAMPLES)} worked examples; Table 1"
    for r in bad:
        msg += f" | {r.claim_id}: {r.counterexamples}"
    return not bad, msg


def c11():
    reps = appendix.verify_all(40)
    bad = _failures(reps)
    msg = "form (1) correspondence for levels <= 40 except 7; 5 worked examples"
    for r in bad:
        for c in r.counterexamples:
            image, other = c["actual"]
            msg += f" | level {r.range}: {c['input']} and {other} both map to {image}"
    return not bad, msg


def c12():
    t0 = time.perf_counter()
    reps = claims.verify_conjecture(3, 8, 40)
    dt = time.perf_counter() - t0
    return not _failures(reps), f"b_(t+1,2) >= b_(t,2), 3<=t<=8, n<=40: {claims.EVIDENCE_LABEL} ({dt:.1f}s)"


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12]


@pytest.mark.parametrize("num", range(1, 13))
def test_criterion(num, capsys):
    ok, msg = CRITERIA[num - 1]()
    with capsys.disabled():
        print("\n" + _line(num, ok, msg))
    assert ok, msg


if __name__ == "__main__":
    for i, check in enumerate(CRITERIA, start=1):
        print(_line(i, *check()), flush=True)
