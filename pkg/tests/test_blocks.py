import pytest
from hypothesis import given

from hookbias.blocks import (
    ONE_ZERO, Block, BlockTable, block_of_part, block_two_hooks, decompose, recompose,
)
from hookbias.hooks import count_2_hooks_domino

from conftest import partitions


def test_block_of_part():
    assert block_of_part(1) == ONE_ZERO
    assert block_of_part(8) == Block(0, 2)
    assert block_of_part(11) == Block(0, 3)
    assert block_of_part(16) == Block(1, 1)
    assert str(Block(2, 3)) == "3_2"
    with pytest.raises(ValueError):
        block_of_part(24)


def test_decompose_example():
    bt = decompose((10, 10, 8, 8, 8, 5, 4, 2, 1, 1))
    assert bt[0, 10] == 2 and bt[0, 8] == 3 and bt[0, 1] == 2
    assert bt.total(8) == 3 and bt.n() == 57
    assert decompose(()) == BlockTable()
    with pytest.raises(ValueError):
        decompose((6, 1))


@given(partitions(max_part=60, t=3))
def test_round_trip(p):
    assert recompose(decompose(p)) == p


@given(partitions(max_part=60, t=3))
def test_in_context_counts_sum_to_total(p):
    assert block_two_hooks(p).total == count_2_hooks_domino(p)


def test_standalone_scores_block_bottoms_against_zero():
    assert block_two_hooks((14, 8)).counts == {Block(1, 1): 1, Block(0, 2): 1}
    assert block_two_hooks((14, 8), standalone=True)[Block(1, 1)] == 1
    # 5 sits on 4: no domino in context, one when 2_0 stands alone
    assert block_two_hooks((5, 4))[Block(0, 2)] == 0
    assert block_two_hooks((5, 4), standalone=True)[Block(0, 2)] == 1


def test_regularity_checked():
    with pytest.raises(ValueError):
        block_two_hooks((9, 1))
    assert block_two_hooks((9, 1), t=4).total == 1
