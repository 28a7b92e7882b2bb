"""Hook lengths and the aggregate statistic b_{t,k}(n).

Three independent ways to count k-hooks of a single partition:

* ``count_k_hooks_cells`` reads the full hook grid (the definition);
* ``count_k_hooks_beta`` uses first-column hook lengths (beta-set);
* ``count_2_hooks_domino`` counts removable dominoes, k = 2 only.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .partitions import enumerate_t_regular


def conjugate(p: Sequence[int]) -> list[int]:
    if not p:
        return []
    return [sum(1 for x in p if x > j) for j in range(p[0])]


def hook_grid(p: Sequence[int]) -> list[list[int]]:
    """Hook length of every cell, row by row."""
    conj = conjugate(p)
    return [[(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)] for i, row in enumerate(p)]


def count_k_hooks_cells(p: Sequence[int], k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return sum(row.count(k) for row in hook_grid(p))


def count_k_hooks_beta(p: Sequence[int], k: int) -> int:
    """#{b in beta : b >= k and b - k not in beta}, beta = first-column hooks."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    r = len(p)
    beta = {x + r - i for i, x in enumerate(p, start=1)}
    return sum(1 for b in beta if b >= k and b - k not in beta)


def count_2_hooks_domino(p: Sequence[int]) -> int:
    """Removable horizontal plus vertical dominoes.

    Horizontal: rows with lambda_i - lambda_{i+1} >= 2.  Vertical: one per
    distinct part value of multiplicity at least 2 (the bottom two cells of
    the last column of that run).
    """
    c = Counter(p)
    vals = sorted(c, reverse=True)
    vertical = sum(1 for v in vals if c[v] >= 2)
    horizontal = sum(1 for v, nxt in zip(vals, vals[1:] + [0]) if v - nxt >= 2)
    return vertical + horizontal


_METHODS = {
    "cells": count_k_hooks_cells,
    "beta": count_k_hooks_beta,
}


def count_k_hooks(p: Sequence[int], k: int, method: str = "cells") -> int:
    if method == "domino":
        if k != 2:
            raise ValueError("the domino method only counts 2-hooks")
        return count_2_hooks_domino(p)
    try:
        return _METHODS[method](p, k)
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None


def b_tk(n: int, t: int, k: int, method: str = "cells") -> int:
    """Total number of k-hooks over all t-regular partitions of n."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return sum(count_k_hooks(p, k, method) for p in enumerate_t_regular(n, t))


@dataclass
class BiasTable:
    t: int
    k: int
    values: dict[int, int] = field(default_factory=dict)

    @property
    def n_max(self) -> int:
        return max(self.values) if self.values else -1

    def to_json_obj(self) -> dict:
        return {"t": self.t, "k": self.k, "values": {str(n): v for n, v in sorted(self.values.items())}}

    def to_csv(self) -> str:
        lines = ["n,b"] + [f"{n},{v}" for n, v in sorted(self.values.items())]
        return "\n".join(lines) + "\n"


def _b_tk_args(args):
    return b_tk(*args)


def bias_table(t: int, k: int, n_max: int, method: str = "cells", jobs: int = 1) -> BiasTable:
    """b_{t,k}(n) for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    ns = list(range(n_max + 1))
    args = [(n, t, k, method) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            vals = list(ex.map(_b_tk_args, args))
    else:
        vals = [_b_tk_args(a) for a in args]
    return BiasTable(t, k, dict(zip(ns, vals)))
