import pytest
from hypothesis import given, strategies as st

from hookbias.blocks import decompose
from hookbias.hooks import count_2_hooks_domino
from hookbias.partitions import Partition
from hookbias.phi import in_c4, in_d4
from hookbias.psi import (
    WORKED_EXAMPLES, ClassLabel, PsiTag, class_of, compensation_totals, d3_set, d4_set,
    diff_table1, in_d3, load_golden_table1, psi, psi_case, psi_high, psi_special_A3,
    psi_special_B2a, psi_special_B2b, psi_special_xi0_A1a, psi_special_xi0_A1b,
    psi_xi_42a, r_value, table1, xi_split,
)

P = Partition


def test_r_value():
    assert r_value(decompose((8, 8, 8))) == 3
    assert r_value(decompose((8,))) == -1
    assert r_value(decompose((47, 44, 32, 20, 16, 16, 14, 8, 4, 2))) == -2


def test_xi_split():
    s = xi_split((16, 5, 1))
    assert s.xi_block == (5, 1) and s.xi_complement == (16,) and s.xi == 6
    assert xi_split((20, 2)).xi == 2
    s = xi_split((7, 5, 4, 2, 1))
    assert s.xi_complement == () and s.xi == 19


def test_psi_high():
    assert psi_high(decompose((8, 8))) == ((9, 6), 1)
    assert psi_high(decompose((16,))) == ((15,), 1)
    assert psi_high(decompose((14, 8))) == ((14, 9), -1)


def test_cases():
    assert psi_case((16, 4, 2)).tag is PsiTag.B2a
    assert psi_case((10, 4, 2, 2, 2)).tag is PsiTag.B1
    assert psi_case((47, 44, 32, 20, 16, 16, 14, 8, 4, 2)).tag is PsiTag.A3
    with pytest.raises(ValueError):
        psi_case((10, 5, 1, 1))  # two 1s: not in D3


def test_six_branch_examples():
    assert psi_xi_42a(3, 0) == (3, 3, 3, 1)
    assert psi_xi_42a(1, 1) == (3, 3, 1)
    assert psi_xi_42a(1, 7) == (3, 3, 3, 3, 1)
    with pytest.raises(ValueError):
        psi_xi_42a(0, 1)
    with pytest.raises(ValueError):
        psi_xi_42a(2, -2)


@given(st.integers(1, 30), st.integers(-1, 30))
def test_six_branch_sum_and_hooks(b, r):
    out = psi_xi_42a(b, r)
    assert sum(out) == 4 + 2 * b + r
    assert set(out) <= {5, 3, 1}
    assert count_2_hooks_domino(out) >= 2


def test_special_rules():
    assert psi_special_xi0_A1a((20, 17, 17)) == (21, 17, 9, 7)
    assert psi_special_xi0_A1a((32, 20, 17, 8, 8)) == (33, 21, 9, 9, 7, 6)
    assert psi_special_xi0_A1b((44, 32, 28, 20, 20, 14, 8)) == (45, 33, 27, 21, 18, 9, 9, 3, 1)
    assert psi_special_xi0_A1b((44, 32, 28, 28, 26, 26, 20)) == (45, 33, 27, 27, 26, 21, 11, 9, 3, 1, 1)
    q = psi_special_A3((47, 44, 32, 20, 16, 16, 14, 8, 4, 2))
    assert q.count(9) >= 3 and sum(q) == 203
    assert psi_special_B2a((16,) + (14,) * 5) == (15, 15, 14, 14, 14, 14)
    assert psi_special_B2b((28, 26, 16)) == (27, 27, 15, 1)
    assert psi_special_B2b((28, 16) + (14,) * 9) == (27, 15, 15) + (14,) * 8 + (1,)
    with pytest.raises(ValueError):
        psi_special_A3((16, 14, 4, 2))
    with pytest.raises(ValueError):
        psi_special_xi0_A1a((20, 17, 2))


@pytest.mark.parametrize("p,q", WORKED_EXAMPLES)
def test_worked_examples(p, q):
    assert psi(P(p)) == q


def test_empty_domain():
    assert d3_set(0) == [] and d3_set(1) == []


def test_determined_images():
    for n in range(0, 23):
        seen = {}
        for p in d3_set(n):
            q = psi(p)
            if q is None:
                continue
            assert sum(q) == n and all(x % 4 for x in q)
            assert in_d4(q)
            assert q not in seen
            seen[q] = p


def test_undetermined_is_reported_not_guessed():
    # Xi-block (5,1) under a 4-type complement has no explicit rule
    assert in_d3((16, 5, 1)) and psi(P((16, 5, 1))) is None


def test_compensation_totals():
    for n in range(0, 23):
        lost, gained = compensation_totals(n)
        assert lost <= gained


def test_classes():
    assert class_of((11, 9, 1, 1)) is ClassLabel.CL1
    assert class_of((10, 6, 6)) is ClassLabel.CL2
    assert class_of((19, 3)) is ClassLabel.CL2
    assert class_of((15, 3, 3, 1)) is ClassLabel.CL3
    with pytest.raises(ValueError):
        class_of((5, 1))


def test_classes_follow_definitions():
    # each label's own defining conditions hold; CL1 needs a 12k+9 part
    for n in range(0, 20):
        for q in d4_set(n):
            label = class_of(q)
            nine = any(x % 12 == 9 for x in q)
            if label is ClassLabel.CL1:
                assert nine
            elif label is not None:
                assert not nine


def test_table1_reproduces_every_listed_entry():
    golden = {r.complement: r for r in load_golden_table1()}
    ours = {r.complement: r for r in table1(22)}
    for key, row in golden.items():
        assert set(row.preimages) <= set(ours[key].preimages)
        assert set(row.images) <= set(ours[key].images)
        assert row.psi_complement == ours[key].psi_complement


def test_table1_extras_are_genuine():
    diffs = diff_table1(table1(22), load_golden_table1())
    assert len(diffs) == 2
    extra_row = next(d for d in diffs if d.get("missing_from") == "golden")
    assert extra_row["row"] == (17,) and extra_row["preimages"] == [(17, 4, 1)]
    assert in_d3((17, 4, 1))
    extra_image = next(d for d in diffs if d.get("field") == "images")
    assert extra_image["row"] == (8,) and extra_image["only_computed"] == [(9, 2, 2, 2, 2, 2, 2, 1)]
    q = P((9, 2, 2, 2, 2, 2, 2, 1))
    assert in_c4(q) and in_d4(q) and class_of(q) is ClassLabel.CL1


def test_table1_rows():
    rows = {r.complement: r for r in table1(22)}
    assert rows[(20,)].preimages == [(20, 2)] and rows[(20,)].images == [(21, 1)]
    assert rows[(16,)].images == [(15, 7), (15, 6, 1), (15, 3, 3, 1)]
    assert set(rows[None].images) == {
        (19, 3), (18, 3, 1), (13, 9), (9, 9, 2, 1, 1), (9, 9, 3, 1), (9, 6, 6, 1)
    }
