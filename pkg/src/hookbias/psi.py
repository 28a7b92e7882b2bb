"""The partial map Psi from D3(n) into D4(n).

D3(n) is the Case 3 partitions of n with at most one part 1; D4(n) is C4(n)
minus Q.  Psi rewrites the parts 12k+8 and 12k+4 (k >= 1) of the
Xi-complement, producing a surplus r, and then rebuilds the Xi-block (the
parts 7, 5, 4, 2, 1) from Xi + r.  Only the explicitly constructed branches
are implemented; everything else is reported as undetermined (``None``).
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .blocks import BlockTable, decompose
from .hooks import count_2_hooks_domino
from .partitions import Partition, enumerate_t_regular, make_partition
from .phi import PhiCase, in_c4, in_d4, in_phi_image, ones_bound, phi, phi_case
from .report import VerificationReport

XI_PARTS = (7, 5, 4, 2, 1)

# ->Xi-blocks whose 1_0-block carries no 2-hook.  They may arise for
# Xi in 1..7 and are then filled from Xi-blocks that lose nothing under Phi.
NO_HOOK_TARGETS = {
    Partition((3, 2, 1)): "1_0-block without a 2-hook",
    Partition((2, 1)): "1_0-block without a 2-hook",
    Partition((1,)): "1_0-block without a 2-hook",
}


@dataclass(frozen=True)
class XiSplit:
    xi_block: Partition
    xi_complement: Partition

    @property
    def xi(self) -> int:
        return sum(self.xi_block)


def xi_split(p) -> XiSplit:
    decompose(p)
    return XiSplit(
        Partition(x for x in p if x in XI_PARTS),
        Partition(x for x in p if x not in XI_PARTS),
    )


class PsiTag(str, Enum):
    A1a = "A1a"
    A1b = "A1b"
    A2 = "A2"
    A3 = "A3"
    B1 = "B1"
    B2a = "B2a"
    B2b = "B2b"
    B2c = "B2c"
    B2d = "B2d"


@dataclass(frozen=True)
class PsiCase:
    tag: PsiTag
    r: int


def r_value(bt: BlockTable) -> int:
    r = 0
    for (k, j), m in bt.alpha.items():
        if j == 8:
            r += -1 if m == 1 else 2 * m - 3
        elif j == 4 and k >= 1:
            r += m
    return r


def in_d3(p) -> bool:
    p = tuple(p)
    if any(x % 3 == 0 for x in p):
        return False
    return phi_case(p) is PhiCase.CASE3 and p.count(1) <= 1


def d3_set(n: int) -> list[Partition]:
    return [p for p in enumerate_t_regular(n, 3) if in_d3(p)]


def d4_set(n: int) -> list[Partition]:
    return [q for q in enumerate_t_regular(n, 4) if in_d4(q)]


def _require_d3(p) -> BlockTable:
    if not in_d3(p):
        raise ValueError(f"{p} is not in D3")
    return decompose(p)


def psi_case(p) -> PsiCase:
    bt = _require_d3(p)
    r = r_value(bt)
    if bt.total(8):
        if r == -1:
            tag = PsiTag.A1b if bt.total(4, k_min=1) else PsiTag.A1a
        else:
            tag = PsiTag.A2 if r > -1 else PsiTag.A3
    else:
        tag = [PsiTag.B1, PsiTag.B2a, PsiTag.B2b, PsiTag.B2c][r] if r < 4 else PsiTag.B2d
    return PsiCase(tag, r)


def psi_high(bt: BlockTable) -> tuple[Partition, int]:
    """Rewrite the Xi-complement: 8-types and 4-types with k >= 1."""
    out: list[int] = []
    for (k, j), m in bt.alpha.items():
        x = 12 * k + j
        if j == 8:
            out += [x + 1] + [x - 2] * (m - 1)
        elif j == 4 and k >= 1:
            out += [x - 1] * m
        elif x not in XI_PARTS:
            out += [x] * m
    return make_partition(out), r_value(bt)


def psi_xi_42a(alpha02: int, r: int) -> Partition:
    """Image of the Xi-block (4, 2^alpha02) given surplus r; two 2-hooks."""
    if alpha02 < 1 or r < -1:
        raise ValueError(f"no branch for alpha02={alpha02}, r={r}")
    s = (r + 1) // 2
    m = (alpha02 + s) % 3
    if r % 2:
        if m == 1:
            out = [3] * (2 * (alpha02 + s + 2) // 3 - 1) + [1, 1]
        elif m == 2:
            out = [3] * (2 * (alpha02 + s + 1) // 3) + [1]
        else:
            out = [3] * (2 * (alpha02 + s) // 3 + 1)
    else:
        if m == 1:
            out = [3] * (2 * (alpha02 + s + 2) // 3)
        elif m == 2:
            out = [5] + [3] * (2 * (alpha02 + s + 1) // 3 - 1)
        else:
            out = [3] * (2 * (alpha02 + s) // 3 + 1) + [1]
    return make_partition(out)


def _is_42a(xi_block: Partition) -> bool:
    c = Counter(xi_block)
    return c[4] == 1 and c[2] >= 1 and set(c) == {4, 2}


def psi_special_xi0_A1a(p) -> Partition:
    """Xi = 0: the smallest 12k+5 (k >= 1) becomes (12(k-1)+7, 9)."""
    bt = _require_d3(p)
    split = xi_split(p)
    if split.xi or r_value(bt) != -1 or not bt.total(8):
        raise ValueError(f"{p} is not an A1 partition with Xi = 0")
    ks = bt.ks(5)
    ks = [k for k in ks if k >= 1]
    if not ks:
        raise ValueError(f"{p} has no part 12k+5 with k >= 1")
    k = ks[0]
    high, _ = psi_high(bt)
    return high.remove(12 * k + 5).adjoin(12 * (k - 1) + 7, 9)


def psi_special_xi0_A1b(p) -> Partition:
    """Xi = 0, no 12k+5: the smallest 12k+2 becomes (9,3,1) or (12(k-2)+11, 9, 3, 1^2)."""
    bt = _require_d3(p)
    split = xi_split(p)
    if split.xi or r_value(bt) != -1 or not bt.total(8) or not bt.total(4, k_min=1):
        raise ValueError(f"{p} is not an A1b partition with Xi = 0")
    if bt.total(5, k_min=1):
        raise ValueError(f"{p} has a part 12k+5; use the A1a rule")
    ks = [k for k in bt.ks(2) if k >= 1]
    if not ks:
        raise ValueError(f"{p} has no part 12k+2 with k >= 1")
    k = ks[0]
    high, _ = psi_high(bt)
    high = high.remove(12 * k + 2)
    if k == 1:
        return high.adjoin(9, 3, 1)
    return high.adjoin(12 * (k - 2) + 11, 9, 3, 1, 1)


def psi_special_A3(p) -> Partition:
    """r <= -2: the largest single 12l+8 becomes 9^a with 12l+8+r+1 = 9a+b.

    The Xi-block (4, 2^c) is then rebuilt with surplus b.
    """
    bt = _require_d3(p)
    r = r_value(bt)
    if r > -2:
        raise ValueError(f"{p} has r = {r} > -2")
    singles = [12 * k + 8 for k in bt.ks(8) if bt[k, 8] == 1]
    big = max(singles)
    a, b = divmod(big + r + 1, 9)
    split = xi_split(p)
    if not _is_42a(split.xi_block):
        raise ValueError(f"{p}: Xi-block {split.xi_block} has no A3 rule")
    high, _ = psi_high(bt)
    high = high.remove(big + 1).adjoin(*[9] * a)
    return high.adjoin(*psi_xi_42a(split.xi_block.count(2), b))


def _pairs_42(bt: BlockTable) -> list[int]:
    return [k for k in bt.ks(4) if k >= 1 and bt[k, 2]]


def psi_special_B2a(p) -> Partition:
    """r = 1, Xi in {0, 1}: one 12k+2 beside a 12k+4 becomes 12k+3."""
    bt = _require_d3(p)
    split = xi_split(p)
    if bt.total(8) or r_value(bt) != 1 or split.xi not in (0, 1):
        raise ValueError(f"{p} is not a B2a partition with Xi in {{0, 1}}")
    ks = _pairs_42(bt)
    if not ks:
        raise ValueError(f"{p} has no 12k+4 next to a 12k+2")
    k = ks[0]
    high, _ = psi_high(bt)
    return high.remove(12 * k + 2).adjoin(12 * k + 3, *split.xi_block)


def psi_special_B2b(p) -> Partition:
    """r = 2, Xi = 0: every 12k+2 beside a 12k+4 loses a copy to 12k+3; the rest become 1s."""
    bt = _require_d3(p)
    split = xi_split(p)
    if bt.total(8) or r_value(bt) != 2 or split.xi:
        raise ValueError(f"{p} is not a B2b partition with Xi = 0")
    ks = _pairs_42(bt)
    if not ks:
        raise ValueError(f"{p} has no 12k+4 next to a 12k+2")
    high, r = psi_high(bt)
    for k in ks:
        high = high.remove(12 * k + 2).adjoin(12 * k + 3)
    return high.adjoin(*[1] * (r - len(ks)))


def psi(p) -> Partition | None:
    """Psi(p) when a defined branch applies, else None."""
    case = psi_case(p)
    bt = decompose(p)
    split = xi_split(p)
    tag, r = case.tag, case.r
    if tag in (PsiTag.A1a, PsiTag.A1b) and split.xi == 0:
        if bt.total(5, k_min=1):
            return psi_special_xi0_A1a(p)
        if tag is PsiTag.A1b:
            return psi_special_xi0_A1b(p)
        return None
    if tag is PsiTag.A3:
        return psi_special_A3(p) if _is_42a(split.xi_block) else None
    if tag is PsiTag.B2a and split.xi in (0, 1) and _pairs_42(bt):
        return psi_special_B2a(p)
    if tag is PsiTag.B2b and split.xi == 0:
        return psi_special_B2b(p) if _pairs_42(bt) else None
    if _is_42a(split.xi_block):
        high, _ = psi_high(bt)
        return high.adjoin(*psi_xi_42a(split.xi_block.count(2), r))
    return None


# --- classes of D4 ----------------------------------------------------------

class ClassLabel(str, Enum):
    CL1 = "CL1"
    CL2 = "CL2"
    CL3 = "CL3"
    CL4 = "CL4"
    CL5 = "CL5"
    CL6 = "CL6"


def class_of(q) -> ClassLabel | None:
    if not in_c4(q):
        raise ValueError(f"{q} is not in C4")
    bt = BlockTable.of(q)
    a01, a02, bound = bt[0, 1], bt[0, 2], ones_bound(bt)
    if bt.total(9):
        if (a01 == 0 and a02 == 0) or a01 in (1, 2):
            return ClassLabel.CL1
        return None
    if a01 == 0 and a02 == 0 and bt.total(6) + bt.total(3):
        return ClassLabel.CL2
    if a02 == 0:
        if a01 == 1 and bound > 1:
            return ClassLabel.CL3
        if a01 == 2 and bound > 2:
            return ClassLabel.CL4
    else:
        if a01 == 1 and bound > 3:
            return ClassLabel.CL5
        if a01 == 2 and bound > 4:
            return ClassLabel.CL6
    return None


# --- checks -----------------------------------------------------------------

# Worked examples of Psi, as (pre-image, image).
WORKED_EXAMPLES = [
    ((10, 4, 2, 2, 2), (10, 3, 3, 3, 1)),
    ((16, 4, 2), (15, 3, 3, 1)),
    ((20, 17, 17), (21, 17, 9, 7)),
    ((32, 20, 17, 8, 8), (33, 21, 9, 9, 7, 6)),
    ((44, 32, 28, 20, 20, 14, 8), (45, 33, 27, 21, 18, 9, 9, 3, 1)),
    ((56, 44, 32, 28, 20, 20, 14), (57, 45, 33, 27, 21, 18, 9, 3, 1)),
    ((44, 32, 28, 28, 26, 26, 20), (45, 33, 27, 27, 26, 21, 11, 9, 3, 1, 1)),
    ((47, 44, 32, 20, 16, 16, 14, 8, 4, 2),
     (47, 33, 21, 15, 15, 14, 9, 9, 9, 9, 9, 3, 3, 3, 3, 1)),
    ((16, 14, 14, 14, 14, 14), (15, 15, 14, 14, 14, 14)),
    ((16, 14, 14, 14, 14, 14, 1), (15, 15, 14, 14, 14, 14, 1)),
    ((28, 26, 16), (27, 27, 15, 1)),
    ((28, 26, 16, 14), (27, 27, 15, 15)),
    ((16, 16, 14), (15, 15, 15, 1)),
    ((28, 16) + (14,) * 9, (27, 15, 15) + (14,) * 8 + (1,)),
]


def verify_psi(n_max: int = 26, limit: int = 20) -> list[VerificationReport]:
    """Sum, 4-regularity, C4 and D4 membership, injectivity, worked examples."""
    t0 = time.perf_counter()
    bad = {k: [] for k in ("sum-and-regularity", "in-c4", "in-d4", "injective")}
    undetermined = {}
    for n in range(n_max + 1):
        seen: dict[Partition, Partition] = {}
        und = []
        for p in d3_set(n):
            q = psi(p)
            if q is None:
                und.append(p)
                continue
            if sum(q) != n or any(x % 4 == 0 for x in q):
                bad["sum-and-regularity"].append({"input": p, "expected": f"4-regular, sum {n}", "actual": q})
                continue
            if in_phi_image(q):
                bad["in-c4"].append({"input": p, "expected": "outside the Phi image", "actual": q})
            elif not in_d4(q):
                bad["in-d4"].append({"input": p, "expected": "outside Q", "actual": q})
            if q in seen:
                bad["injective"].append({"input": p, "expected": "distinct image", "actual": [q, seen[q]]})
            seen[q] = p
        undetermined[n] = len(und)
    reports = []
    for name, b in bad.items():
        details = {"failures": len(b)}
        if name == "injective":
            details["undetermined_per_n"] = undetermined
        reports.append(VerificationReport.from_checks(f"psi.{name}", (0, n_max), b[:limit], t0, details))
    reports.append(verify_worked_examples())
    reports.append(verify_compensation(n_max))
    return reports


def verify_worked_examples() -> VerificationReport:
    t0 = time.perf_counter()
    bad = []
    for p, expected in WORKED_EXAMPLES:
        got = psi(Partition(p))
        if got != Partition(expected):
            bad.append({"input": Partition(p), "expected": Partition(expected), "actual": got})
    return VerificationReport.from_checks(
        "psi.worked-examples", len(WORKED_EXAMPLES), bad, t0, {"examples": len(WORKED_EXAMPLES)}
    )


def compensation_totals(n: int) -> tuple[int, int]:
    """(2-hooks lost by D3(n) under Phi, 2-hooks carried by D4(n))."""
    lost = sum(max(0, count_2_hooks_domino(p) - count_2_hooks_domino(phi(p))) for p in d3_set(n))
    gained = sum(count_2_hooks_domino(q) for q in d4_set(n))
    return lost, gained


def verify_compensation(n_max: int = 26) -> VerificationReport:
    t0 = time.perf_counter()
    bad, totals = [], {}
    for n in range(n_max + 1):
        lost, gained = compensation_totals(n)
        totals[n] = [lost, gained]
        if lost > gained:
            bad.append({"input": n, "expected": f"lost <= {gained}", "actual": lost})
    return VerificationReport.from_checks("psi.compensation", (0, n_max), bad, t0, {"lost_gained": totals})


# --- Table 1 ----------------------------------------------------------------

@dataclass
class TableRow:
    complement: Partition | None
    preimages: list[Partition]
    psi_complement: Partition | None
    images: list[Partition]

    def to_json_obj(self) -> dict:
        f = lambda p: None if p is None else list(p)  # noqa: E731
        return {
            "complement": f(self.complement),
            "preimages": [list(p) for p in self.preimages],
            "psi_complement": f(self.psi_complement),
            "images": [list(q) for q in self.images],
        }

    @classmethod
    def from_json_obj(cls, d: dict) -> "TableRow":
        f = lambda p: None if p is None else Partition(p)  # noqa: E731
        return cls(
            f(d["complement"]),
            [Partition(p) for p in d["preimages"]],
            f(d["psi_complement"]),
            [Partition(q) for q in d["images"]],
        )


def _row_accepts(q: Partition, high: Partition, has_8: bool) -> bool:
    big = [x for x in high if x >= 8]
    small = [x for x in high if x < 8]
    if [x for x in q if x >= 8] != big:
        return False
    try:
        rest = q.remove(*small)
    except ValueError:
        return False
    if has_8:
        return 6 not in rest and class_of(q) is ClassLabel.CL1
    return True


def table1(n: int = 22) -> list[TableRow]:
    """Rows grouped by Xi-complement for D3(n) with largest part > 7.

    A D4 member goes to a row when its parts >= 8 are those of the row's
    Psi-complement and it contains that complement's small parts; rows with
    8-types also require no further 6 and class CL1.  The last row holds
    the D4 members with largest part > 7 that fit no row.
    """
    groups: dict[Partition, list[Partition]] = {}
    for p in d3_set(n):
        if p[0] > 7:
            groups.setdefault(xi_split(p).xi_complement, []).append(p)
    d4 = [q for q in d4_set(n) if q[0] > 7]
    used: set[Partition] = set()
    rows = []
    for comp in sorted(groups, reverse=True):
        bt = decompose(comp)
        high, _ = psi_high(bt)
        if sum(high) > n:
            rows.append(TableRow(comp, sorted(groups[comp], reverse=True), None, []))
            continue
        imgs = [q for q in d4 if q not in used and _row_accepts(q, high, bool(bt.total(8)))]
        used.update(imgs)
        rows.append(TableRow(comp, sorted(groups[comp], reverse=True), high, imgs))
    rows.append(TableRow(None, [], None, [q for q in d4 if q not in used]))
    return rows


def load_golden_table1() -> list[TableRow]:
    text = resources.files("hookbias").joinpath("fixtures/table1.json").read_text()
    return [TableRow.from_json_obj(d) for d in json.loads(text)["rows"]]


def diff_table1(computed: list[TableRow], golden: list[TableRow]) -> list[dict]:
    """Entry-level differences, keyed by row complement (None = leftover row)."""
    diffs = []
    comp = {r.complement: r for r in computed}
    gold = {r.complement: r for r in golden}
    for key in sorted(set(comp) | set(gold), key=lambda c: (c is None, c or ())):
        a, b = comp.get(key), gold.get(key)
        if a is None or b is None:
            row = a or b
            diffs.append({
                "row": key,
                "missing_from": "golden" if b is None else "computed",
                "preimages": row.preimages,
                "images": row.images,
            })
            continue
        for field_name in ("preimages", "images"):
            x, y = set(getattr(a, field_name)), set(getattr(b, field_name))
            if x != y:
                diffs.append({
                    "row": key, "field": field_name,
                    "only_computed": sorted(x - y, reverse=True),
                    "only_golden": sorted(y - x, reverse=True),
                })
        if a.psi_complement != b.psi_complement:
            diffs.append({"row": key, "field": "psi_complement",
                          "computed": a.psi_complement, "golden": b.psi_complement})
    return diffs


def verify_table1(n: int = 22) -> VerificationReport:
    t0 = time.perf_counter()
    diffs = diff_table1(table1(n), load_golden_table1())
    return VerificationReport.from_checks("psi.table1", n, diffs, t0)
