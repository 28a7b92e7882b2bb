"""Correspondence from form (1) partitions in Q2 to the forms F1, F2, F3.

A form (1) partition is a 4-regular partition (..., 3^a, 1^c) with no part
2, at least one part 3, no part 12k+9, and c equal to bound - 2 or
bound - 1 where bound = sum(2*alpha[k,6] + alpha[k,3]).  Adjoining a 2 to
it costs a 2-hook in the 1_0-block; each is matched with a distinct
partition of the same size whose 1_0-block gains one instead.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .blocks import BlockTable
from .partitions import Partition, enumerate_t_regular, make_partition
from .phi import in_c4, ones_bound
from .report import VerificationReport

EXEMPT_LEVELS = frozenset({7})


class FormLabel(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"


@dataclass(frozen=True)
class Form1Partition:
    partition: Partition
    offset: int  # alpha[0,1] = bound - offset, offset in {1, 2}

    @property
    def table(self) -> BlockTable:
        return BlockTable.of(self.partition)


def in_q2(q) -> bool:
    bt = BlockTable.of(q)
    return in_c4(q) and bt[0, 1] >= 1 and not bt.total(9)


def _offset(q) -> int | None:
    bt = BlockTable.of(q)
    off = ones_bound(bt) - bt[0, 1]
    return off if off in (1, 2) else None


def as_form1(q) -> Form1Partition | None:
    q = make_partition(q)
    bt = BlockTable.of(q)
    if not in_q2(q) or bt[0, 2] or not bt[0, 3]:
        return None
    off = _offset(q)
    return None if off is None else Form1Partition(q, off)


def find_form1(level: int) -> list[Form1Partition]:
    found = (as_form1(q) for q in enumerate_t_regular(level, 4))
    return [f for f in found if f is not None]


def form_label(q) -> FormLabel | None:
    bt = BlockTable.of(q)
    if not in_c4(q):
        return None
    if bt[0, 2] == 1 and bt[0, 1] == 0:
        return FormLabel.F1
    if bt.total(9) and bt[0, 1] == 1:
        return FormLabel.F2
    if bt[0, 2] == 1 and in_q2(q) and _offset(q) is not None:
        return FormLabel.F3
    return None


def _rewrite_ones(c: int) -> list[int]:
    """1^c -> 3s, 2s and a single 1, by c mod 3."""
    m = c % 3
    if m == 0:
        return [3] * ((c - 3) // 3) + [2, 1]
    if m == 1:
        return [3] * ((c - 1) // 3) + [1]
    return [3] * ((c - 5) // 3) + [2, 2, 1]


def case_label(f: Form1Partition) -> str:
    bt = f.table
    a01, a03 = bt[0, 1], bt[0, 3]
    if a01 == 1:
        return "i-a" if ones_bound(bt) == 3 else "i-b"
    if a01 == 2:
        return "ii"
    if f.offset == 2:
        return "iii-a" if a03 >= 2 or bt.total(3, k_min=1) else "iii-b"
    return "iv-a" if bt.total(6) else "iv-b"


def correspond(f: Form1Partition) -> Partition:
    p = f.partition
    if sum(p) in EXEMPT_LEVELS:
        raise ValueError(f"level {sum(p)} is exempt")
    bt = f.table
    a01, a03 = bt[0, 1], bt[0, 3]
    case = case_label(f)
    if case == "i-a":
        if bt.total(6):
            k = bt.ks(6)[0]
            return p.remove(12 * k + 6, 3).adjoin(12 * k + 9)
        if a03 == 1:
            k = [k for k in bt.ks(3) if k >= 1][0]
            return p.remove(12 * k + 3, 3, 1).adjoin(12 * k + 5, 2)
        if a03 == 2:
            return p.remove(3, 3, 1).adjoin(5, 2)
        if a03 == 3:
            return p.remove(3, 3, 3, 1).adjoin(5, 3, 2)
        raise ValueError(f"{p}: no (i-a) branch")
    if case == "i-b":
        return _case_ib(p, bt)
    if case == "ii":
        return p.remove(1, 1).adjoin(2)
    if case == "iii-a":
        if a03 >= 2:
            return p.remove(3, 3, 1).adjoin(5, 2)
        k = [k for k in bt.ks(3) if k >= 1][0]
        return p.remove(12 * k + 3, 3, 1).adjoin(12 * k + 5, 2)
    if case == "iii-b":
        k = bt.ks(6)[0]
        rest = p.remove(12 * k + 6, 3, *[1] * a01)
        return rest.adjoin(12 * k + 9, *_rewrite_ones(a01))
    if case == "iv-a":
        k = bt.ks(6)[0]
        rest = p.remove(12 * k + 6, *[1] * a01)
        return rest.adjoin(12 * k + 7, 2, *[1] * (a01 - 3))
    # iv-b
    threes = sorted(x for x in p if x % 12 == 3)[:3]
    merged = sum(threes)
    if len(threes) < 3 or merged % 12 != 9:
        raise ValueError(f"{p}: three smallest 3-types {threes} do not merge to 12k+9")
    rest = p.remove(*threes, *[1] * a01)
    return rest.adjoin(merged, *_rewrite_ones(a01))


def _case_ib(p: Partition, bt: BlockTable) -> Partition:
    a03 = bt[0, 3]
    if a03 == 2:
        delta, k1, threes = 0, 0, [3, 3]
    elif a03 == 1:
        k1 = [k for k in bt.ks(3) if k >= 1][0]
        delta, threes = 1, [3, 12 * k1 + 3]
    else:
        raise ValueError(f"{p}: (i-b) needs one or two parts 3")
    rest = p.remove(*threes)
    others = [x for x in rest if x > 3]
    if not others:
        if delta != 1:
            raise ValueError(f"{p}: (i-b) has no branch (level 7)")
        return make_partition([12 * (k1 - 1) + 9, 3, 2, 2, 2, 1])
    ks = min(others)
    k2, j = divmod(ks, 12)
    twos = 6 * delta * k1
    rest = rest.remove(ks)
    if j == 11:
        return rest.adjoin(12 * k2 + 9, *[2] * (twos + 4))
    if j == 10:
        return rest.adjoin(12 * k2 + 9, 3, *[2] * (twos + 2))
    if j == 7:
        return rest.adjoin(12 * k2 + 9, *[2] * (twos + 2))
    if j == 5:
        return rest.adjoin(12 * k2 + 9, *[2] * (twos + 1))
    if j == 2 and k2 >= 1:
        return rest.adjoin(12 * (k2 - 1) + 9, 3, *[2] * (twos + 4))
    if j == 1 and k2 >= 1:
        return rest.adjoin(12 * (k2 - 1) + 9, *[2] * (twos + 5))
    raise ValueError(f"{p}: smallest eligible part {ks} has no (i-b) branch")


WORKED_EXAMPLES = [
    ((3, 3, 3, 3, 3, 3, 1, 1, 1, 1), (5, 3, 3, 3, 3, 2, 1, 1, 1)),
    ((6, 6, 3, 1, 1, 1), (9, 6, 2, 1)),
    ((6, 6, 3, 1, 1, 1, 1), (7, 6, 3, 2, 1)),
    ((3, 3, 3, 3, 1, 1, 1), (9, 3, 2, 1)),
    ((3, 3, 3, 3, 3, 1, 1, 1, 1), (9, 3, 3, 3, 1)),
]


def verify_appendix(level: int, limit: int = 20) -> VerificationReport:
    if level in EXEMPT_LEVELS:
        return VerificationReport.skipped("appendix.level", level, "level 7 is exempt")
    t0 = time.perf_counter()
    bad = []
    seen: dict[Partition, Partition] = {}
    cases: dict[str, int] = {}
    forms = find_form1(level)
    for f in forms:
        p = f.partition
        try:
            q = correspond(f)
        except ValueError as e:
            bad.append({"input": p, "expected": "an image", "actual": str(e)})
            continue
        cases[case_label(f)] = cases.get(case_label(f), 0) + 1
        if sum(q) != level or form_label(q) is None:
            bad.append({"input": p, "expected": f"F1/F2/F3 of size {level}", "actual": q})
        if q in seen:
            bad.append({"input": p, "expected": "distinct image", "actual": [q, seen[q]]})
        seen[q] = p
    return VerificationReport.from_checks(
        "appendix.level", level, bad[:limit], t0, {"form1": len(forms), "cases": cases}
    )


def verify_worked_examples() -> VerificationReport:
    t0 = time.perf_counter()
    bad = []
    for p, expected in WORKED_EXAMPLES:
        f = as_form1(p)
        got = None if f is None else correspond(f)
        if got != Partition(expected):
            bad.append({"input": Partition(p), "expected": Partition(expected), "actual": got})
    return VerificationReport.from_checks("appendix.worked-examples", len(WORKED_EXAMPLES), bad, t0)


def verify_all(max_level: int = 40) -> list[VerificationReport]:
    return [verify_appendix(lv) for lv in range(max_level + 1)] + [verify_worked_examples()]
