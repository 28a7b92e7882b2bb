"""Sweeps over b_{t,k}(n): the t = 3 theorem, older biases, the general conjecture."""

from __future__ import annotations

import time

from .hooks import bias_table, count_k_hooks, count_k_hooks_beta, count_k_hooks_cells, count_2_hooks_domino
from .partitions import enumerate_partitions
from .report import VerificationReport

EVIDENCE_LABEL = "numeric evidence, not proof"


def compare_tables(claim_id, hi, lo, n_min, n_max, t0, details=None) -> VerificationReport:
    """hi(n) >= lo(n) for n_min <= n <= n_max."""
    bad = [
        {"input": n, "expected": f">= {lo.values[n]}", "actual": hi.values[n]}
        for n in range(n_min, n_max + 1)
        if hi.values[n] < lo.values[n]
    ]
    return VerificationReport.from_checks(claim_id, (n_min, n_max), bad, t0, details)


def verify_theorem(n_max: int = 45, jobs: int = 1) -> VerificationReport:
    t0 = time.perf_counter()
    b3 = bias_table(3, 2, n_max, "cells", jobs)
    b4 = bias_table(4, 2, n_max, "cells", jobs)
    return compare_tables("theorem.b42-ge-b32", b4, b3, 0, n_max, t0)


def verify_prior_biases(n_max: int = 45, jobs: int = 1) -> list[VerificationReport]:
    tables = {(t, k): bias_table(t, k, n_max, "beta", jobs) for t, k in [(3, 2), (2, 2), (2, 1), (2, 3)]}
    t0 = time.perf_counter()
    return [
        compare_tables("prior.b32-ge-b22", tables[3, 2], tables[2, 2], 4, n_max, t0),
        compare_tables("prior.b22-ge-b21", tables[2, 2], tables[2, 1], 5, n_max, t0),
        compare_tables("prior.b22-ge-b23", tables[2, 2], tables[2, 3], 0, n_max, t0),
    ]


def verify_conjecture(t_min: int = 3, t_max: int = 8, n_max: int = 40, jobs: int = 1) -> list[VerificationReport]:
    """b_{t+1,2}(n) >= b_{t,2}(n) for t_min <= t <= t_max."""
    if t_min < 2 or t_max < t_min:
        raise ValueError(f"bad t range {t_min}..{t_max}")
    tables = {t: bias_table(t, 2, n_max, "beta", jobs) for t in range(t_min, t_max + 2)}
    reports = []
    for t in range(t_min, t_max + 1):
        t0 = time.perf_counter()
        rep = compare_tables(f"conjecture.t={t}", tables[t + 1], tables[t], 0, n_max, t0,
                             {"label": EVIDENCE_LABEL})
        reports.append(rep)
    return reports


def verify_hook_oracles(n_max: int = 22, k_max: int = 6) -> VerificationReport:
    """Cell, beta-set and (k = 2) domino counts agree on every partition."""
    t0 = time.perf_counter()
    bad = []
    for n in range(n_max + 1):
        for p in enumerate_partitions(n):
            for k in range(1, k_max + 1):
                a, b = count_k_hooks_cells(p, k), count_k_hooks_beta(p, k)
                if a != b:
                    bad.append({"input": [p, k], "expected": a, "actual": b})
            d = count_2_hooks_domino(p)
            if d != count_k_hooks(p, 2):
                bad.append({"input": [p, 2], "expected": count_k_hooks(p, 2), "actual": d})
    return VerificationReport.from_checks("hooks.oracles", (0, n_max), bad[:20], t0)
