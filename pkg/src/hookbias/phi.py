"""The injection Phi from 3-regular to 4-regular partitions and its bookkeeping.

Phi keeps parts 12k+{11,10,7,5,2,1}, sends 12k+8 -> 12k+6 and 12k+4 -> 12k+3,
and pays the difference in 1s.  A 4-regular partition is an image iff it has
no part 12k+9 and at least sum(2*alpha[k,6] + alpha[k,3]) ones; that test is
``in_phi_image`` and lets most membership questions skip enumeration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from .blocks import ONE_ZERO, Block, BlockTable, block_two_hooks, decompose
from .hooks import count_2_hooks_domino
from .partitions import Partition, enumerate_t_regular, is_t_regular, make_partition
from .report import VerificationReport


class PhiCase(str, Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"


def phi(p) -> Partition:
    decompose(p)  # validates 3-regularity
    out: list[int] = []
    ones = 0
    for x in p:
        j = x % 12
        if j == 8:
            out.append(x - 2)
            ones += 2
        elif j == 4:
            out.append(x - 1)
            ones += 1
        else:
            out.append(x)
    return make_partition(out + [1] * ones)


def excess_ones(bt: BlockTable) -> int:
    """sum_k (2 alpha[k,8] + alpha[k,4]): the 1s Phi adds."""
    return 2 * bt.total(8) + bt.total(4)


def phi_case(p) -> PhiCase:
    bt = decompose(p)
    if bt.total(8) + bt.total(4) == 0:
        return PhiCase.CASE1
    if bt.total(5) + bt.total(2) == 0:
        return PhiCase.CASE2
    return PhiCase.CASE3


def ones_bound(bt: BlockTable) -> int:
    """sum_k (2 alpha[k,6] + alpha[k,3]) of a 4-regular partition."""
    return 2 * bt.total(6) + bt.total(3)


def in_phi_image(q) -> bool:
    """Whether a 4-regular partition is Phi of some 3-regular partition."""
    if not is_t_regular(q, 4):
        return False
    bt = BlockTable.of(q)
    return bt.total(9) == 0 and bt[0, 1] >= ones_bound(bt)


def phi_inverse(q) -> Partition:
    if not in_phi_image(q):
        raise ValueError(f"{q} is not in the image of Phi")
    bt = BlockTable.of(q)
    out = []
    for x in q:
        j = x % 12
        out.append(x + 2 if j == 6 else x + 1 if j == 3 else x)
    return make_partition(out).remove(*[1] * ones_bound(bt))


def in_c4(q) -> bool:
    """q in C4(n) = B4(n) minus Phi(B3(n))."""
    return is_t_regular(q, 4) and not in_phi_image(q)


# --- 2-hook deltas --------------------------------------------------------

def image_block_hooks(q) -> dict[Block, int]:
    return block_two_hooks(q, standalone=True, t=4).counts


def two_hook_delta(p) -> dict[Block, int]:
    """Per-block 2-hooks of Phi(p) minus those of p, blocks counted standalone.

    Every block nonempty in p or in Phi(p) is present, plus 1_0.
    """
    before = block_two_hooks(p, standalone=True, t=3).counts
    after = image_block_hooks(phi(p))
    blocks = set(before) | set(after) | {ONE_ZERO}
    return {b: after.get(b, 0) - before.get(b, 0) for b in blocks}


def predicted_delta(p) -> dict[Block, frozenset[int]]:
    """The Case 1/2/3 formulas as sets of allowed per-block deltas.

    Case 2 applies its +1 branch to the 1_0-block only; every other block is
    unchanged.  In Case 3 the 1_0-block has four branches:

    * -2 when the block is (4, 2^a) with a >= 1 and sum(a8 + a4) = 1;
    * -1 when it is (4^a, 2^b) with a, b >= 1 and sum(a8 + a4) >= 2,
      or (4^a, 2^b, 1^c) with a, b >= 1 and c >= 2,
      or (2^b) with b >= 1 and sum(a8 + a4) = 1;
    * 0 or +1 otherwise.
    """
    bt = decompose(p)
    case = phi_case(p)
    blocks = {ONE_ZERO} | set(block_two_hooks(p, standalone=True).counts)
    pred = {b: frozenset({0}) for b in blocks}
    if case is PhiCase.CASE1:
        return pred
    a01 = bt[0, 1]
    if case is PhiCase.CASE2:
        gain = (a01 == 0 and excess_ones(bt) >= 2) or a01 == 1
        pred[ONE_ZERO] = frozenset({1 if gain else 0})
        return pred
    for b in blocks:
        if b == ONE_ZERO:
            continue
        k, i = b
        if i in (1, 2) and bt[k, 4 * i] and bt[k, 3 * i - 1]:
            pred[b] = frozenset({-1})
    a04, a02 = bt[0, 4], bt[0, 2]
    s84 = bt.total(8) + bt.total(4)
    if a04 == 1 and a02 >= 1 and a01 == 0 and s84 == 1:
        pred[ONE_ZERO] = frozenset({-2})
    elif (
        (a04 >= 1 and a02 >= 1 and a01 == 0 and s84 >= 2)
        or (a04 >= 1 and a02 >= 1 and a01 >= 2)
        or (a04 == 0 and a02 >= 1 and a01 == 0 and s84 == 1)
    ):
        pred[ONE_ZERO] = frozenset({-1})
    else:
        pred[ONE_ZERO] = frozenset({0, 1})
    return pred


def delta_mismatches(p) -> list[tuple[Block, int, frozenset[int]]]:
    """Blocks whose measured delta falls outside the predicted set."""
    measured = two_hook_delta(p)
    pred = predicted_delta(p)
    return [
        (b, d, pred.get(b, frozenset({0})))
        for b, d in sorted(measured.items())
        if d not in pred.get(b, frozenset({0}))
    ]


# --- compensation sets ----------------------------------------------------

@dataclass
class CompensationSets:
    n: int
    c3: list[Partition] = field(default_factory=list)
    c3_1: list[Partition] = field(default_factory=list)
    c3_2: list[Partition] = field(default_factory=list)
    c4: list[Partition] = field(default_factory=list)
    q1: list[Partition] = field(default_factory=list)
    q2: list[Partition] = field(default_factory=list)
    q3: list[Partition] = field(default_factory=list)
    q1p: list[Partition] = field(default_factory=list)
    q2p: list[Partition] = field(default_factory=list)
    q3p: list[Partition] = field(default_factory=list)

    @property
    def q(self) -> list[Partition]:
        return sorted(set(self.q1p) | set(self.q2p) | set(self.q3p), reverse=True)

    @property
    def d3(self) -> list[Partition]:
        return self.c3_1

    @property
    def d4(self) -> list[Partition]:
        q = set(self.q)
        return [x for x in self.c4 if x not in q]


def c4_set(n: int) -> list[Partition]:
    """C4(n) by enumeration: B4(n) minus the Phi image of B3(n)."""
    image = {phi(p) for p in enumerate_t_regular(n, 3)}
    return [q for q in enumerate_t_regular(n, 4) if q not in image]


def q_class(tau) -> int:
    """1, 2 or 3: which of Q1/Q2/Q3 a member of C4(n-2) falls in."""
    bt = BlockTable.of(tau)
    if bt[0, 1] == 0:
        return 1
    return 2 if bt.total(9) == 0 else 3


def q_lift(tau) -> Partition:
    """The member of Q' built from tau in C4(n-2)."""
    cls = q_class(tau)
    if cls == 1:
        return tau.adjoin(2)
    if cls == 3:
        return tau.adjoin(1, 1)
    bt = BlockTable.of(tau)
    a01, bound = bt[0, 1], ones_bound(bt)
    if a01 < bound - 2:
        return tau.adjoin(1, 1)
    if a01 in (bound - 2, bound - 1):
        return tau.adjoin(2)
    raise ValueError(f"{tau} is a Phi image and cannot lie in Q2")


def build_sets(n: int) -> CompensationSets:
    if n < 2:
        raise ValueError(f"the Q sets need n >= 2, got {n}")
    s = CompensationSets(n)
    for p in enumerate_t_regular(n, 3):
        if phi_case(p) is PhiCase.CASE3:
            s.c3.append(p)
            (s.c3_1 if p.count(1) <= 1 else s.c3_2).append(p)
    s.c4 = c4_set(n)
    for tau in c4_set(n - 2):
        cls = q_class(tau)
        [s.q1, s.q2, s.q3][cls - 1].append(tau)
        [s.q1p, s.q2p, s.q3p][cls - 1].append(q_lift(tau))
    for name in ("q1p", "q2p", "q3p"):
        setattr(s, name, sorted(getattr(s, name), reverse=True))
    return s


def in_q(q) -> bool:
    """Membership in Q at level sum(q), without enumerating."""
    q = make_partition(q)
    candidates = []
    if 2 in q:
        candidates.append(q.remove(2))
    if q.count(1) >= 2:
        candidates.append(q.remove(1, 1))
    return any(in_c4(t) and q_lift(t) == q for t in candidates)


def in_d4(q) -> bool:
    return in_c4(q) and not in_q(q)


# --- verification ---------------------------------------------------------

def verify_injective(n: int) -> VerificationReport:
    t0 = time.perf_counter()
    seen: dict[Partition, Partition] = {}
    bad = []
    for p in enumerate_t_regular(n, 3):
        q = phi(p)
        if sum(q) != n or not is_t_regular(q, 4):
            bad.append({"input": p, "expected": f"4-regular partition of {n}", "actual": q})
        if q in seen:
            bad.append({"input": p, "expected": "distinct image", "actual": [q, seen[q]]})
        seen[q] = p
    return VerificationReport.from_checks(
        "phi.injective", (n, n), bad, t0, details={"domain": len(seen)}
    )


def verify_phi(n_max: int = 35, delta_n_max: int = 30, limit: int = 20) -> list[VerificationReport]:
    """Sum, regularity, injectivity, Case 1 identity, image test, case formulas."""
    reports = []
    t0 = time.perf_counter()
    bad_basic, bad_inj, bad_id, bad_img, bad_loss = [], [], [], [], []
    for n in range(n_max + 1):
        seen = {}
        for p in enumerate_t_regular(n, 3):
            q = phi(p)
            if sum(q) != n or not is_t_regular(q, 4):
                bad_basic.append({"input": p, "expected": f"4-regular, sum {n}", "actual": q})
            if q in seen:
                bad_inj.append({"input": p, "expected": "distinct image", "actual": [q, seen[q]]})
            seen[q] = p
            case = phi_case(p)
            if case is PhiCase.CASE1 and q != p:
                bad_id.append({"input": p, "expected": p, "actual": q})
            if not in_phi_image(q) or phi_inverse(q) != p:
                bad_img.append({"input": p, "expected": "recognised image", "actual": q})
            if case is not PhiCase.CASE3 and count_2_hooks_domino(q) < count_2_hooks_domino(p):
                bad_loss.append({"input": p, "expected": "no 2-hook loss outside Case 3", "actual": case.value})
    rng = (0, n_max)
    ms = lambda: int((time.perf_counter() - t0) * 1000)  # noqa: E731
    for claim, bad in [
        ("phi.sum-and-regularity", bad_basic),
        ("phi.injective", bad_inj),
        ("phi.case1-identity", bad_id),
        ("phi.image-criterion", bad_img),
        ("phi.loss-only-in-case3", bad_loss),
    ]:
        reports.append(VerificationReport(claim, rng, "fail" if bad else "pass", bad[:limit], ms(),
                                          details={"failures": len(bad)}))
    reports.append(verify_case_formulas(delta_n_max, limit))
    return reports


def verify_case_formulas(n_max: int = 30, limit: int = 20) -> VerificationReport:
    t0 = time.perf_counter()
    bad = []
    families: dict[str, int] = {}
    for n in range(n_max + 1):
        for p in enumerate_t_regular(n, 3):
            for b, d, allowed in delta_mismatches(p):
                bad.append({"input": p, "expected": {str(b): sorted(allowed)}, "actual": {str(b): d}})
                key = f"{phi_case(p).value} block {b}: measured {d}, predicted {sorted(allowed)}"
                families[key] = families.get(key, 0) + 1
    rep = VerificationReport.from_checks(
        "phi.case-formulas", (0, n_max), bad[:limit], t0,
        details={"mismatches": len(bad), "families": families},
    )
    return rep
