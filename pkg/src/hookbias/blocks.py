"""Residue blocks mod 12 and block-level 2-hook counts.

A part 12k + j lives in block ``i_k`` where

    3_k: j in {9, 10, 11}
    2_k: j in {5, 6, 7, 8}
    1_k: j in {1, 2, 3, 4}

For a 3-regular partition only j in {1,2,4,5,7,8,10,11} occur.  The extra
residues 3, 6, 9 place the parts of 4-regular images (4 -> 3, 8 -> 6,
8 -> 9) in the block their pre-image part came from.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .partitions import Partition, is_t_regular, make_partition

THREE_REGULAR_RESIDUES = (1, 2, 4, 5, 7, 8, 10, 11)
_BLOCK_OF_RESIDUE = {1: 1, 2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 2, 8: 2, 9: 3, 10: 3, 11: 3}


class Block(NamedTuple):
    k: int
    i: int

    def __str__(self) -> str:
        return f"{self.i}_{self.k}"


ONE_ZERO = Block(0, 1)


def block_of_part(x: int) -> Block:
    k, j = divmod(x, 12)
    if j == 0:
        raise ValueError(f"part {x} is divisible by 12 and has no block")
    return Block(k, _BLOCK_OF_RESIDUE[j])


class BlockTable:
    """Multiplicities alpha[k, j] of the parts 12k + j."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: dict[tuple[int, int], int] | None = None):
        self.alpha = {kj: m for kj, m in (alpha or {}).items() if m}
        for (k, j), m in self.alpha.items():
            if k < 0 or not 0 <= j < 12 or m < 0:
                raise ValueError(f"bad entry alpha[{k},{j}] = {m}")

    @classmethod
    def of(cls, p: Iterable[int]) -> "BlockTable":
        """Table of any partition, no regularity check."""
        return cls(dict(Counter(divmod(x, 12) for x in p)))

    def __getitem__(self, kj: tuple[int, int]) -> int:
        return self.alpha.get(kj, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockTable) and self.alpha == other.alpha

    def __repr__(self) -> str:
        inner = ", ".join(f"a[{k},{j}]={m}" for (k, j), m in sorted(self.alpha.items()))
        return f"BlockTable({inner})"

    def total(self, j: int, k_min: int = 0) -> int:
        """sum over k >= k_min of alpha[k, j]."""
        return sum(m for (k, jj), m in self.alpha.items() if jj == j and k >= k_min)

    def ks(self, j: int) -> list[int]:
        """Indices k with alpha[k, j] != 0, increasing."""
        return sorted(k for (k, jj) in self.alpha if jj == j)

    def n(self) -> int:
        return sum((12 * k + j) * m for (k, j), m in self.alpha.items())


def decompose(p: Iterable[int]) -> BlockTable:
    """Multiplicity table of a 3-regular partition."""
    p = tuple(p)
    if not is_t_regular(p, 3):
        raise ValueError(f"{p} is not 3-regular")
    return BlockTable.of(p)


def recompose(bt: BlockTable) -> Partition:
    return make_partition(12 * k + j for (k, j), m in bt.alpha.items() for _ in range(m))


@dataclass
class BlockHookProfile:
    """2-hooks per nonempty block, with a note on how its lowest row was scored."""

    counts: dict[Block, int] = field(default_factory=dict)
    notes: dict[Block, str] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, b: Block) -> int:
        return self.counts.get(b, 0)


def block_two_hooks(p: Iterable[int], standalone: bool = False, t: int = 3) -> BlockHookProfile:
    """Attribute the 2-hooks of ``p`` to blocks.

    Default (in context): a vertical domino goes to the block of its part
    value; a horizontal domino at row i goes to the block of lambda_i, even
    when lambda_{i+1} lies in the next block down.  The counts then sum to
    the 2-hook total of ``p``.

    ``standalone=True`` instead counts each block as a partition on its own,
    so the lowest part of a block is compared with 0.  Block deltas under Phi
    are measured this way; those counts need not sum to the total.

    ``t`` is the regularity required of ``p``: 3 for partitions being
    decomposed, 4 for their images under Phi or Psi.
    """
    p = tuple(p)
    if t not in (3, 4) or not is_t_regular(p, t):
        raise ValueError(f"{p} is not {t}-regular")
    c = Counter(p)
    vals = sorted(c, reverse=True)
    counts: dict[Block, int] = defaultdict(int)
    notes: dict[Block, str] = {}
    for idx, v in enumerate(vals):
        b = block_of_part(v)
        counts[b] += c[v] >= 2
        nxt = vals[idx + 1] if idx + 1 < len(vals) else 0
        if not nxt:
            notes[b] = f"lowest part {v} is the last row"
        elif block_of_part(nxt) != b:
            if standalone:
                nxt = 0
                notes[b] = f"standalone: lowest part {v} compared with 0"
            else:
                notes[b] = f"boundary: lowest part {v} against {nxt} in block {block_of_part(nxt)}"
        counts[b] += v - nxt >= 2
    return BlockHookProfile(dict(counts), notes)
