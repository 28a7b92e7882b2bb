"""Exact truncated power series and the case generating functions for Psi.

Everything is integer arithmetic on coefficient lists.  A series of order N
knows c_0..c_N; products and sums truncate to the smaller order, and a
downward shift by m lowers the order by m.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .report import VerificationReport

DEFAULT_ORDER = 300

PA_PARTS = (3, 4, 5, 7)
PB_PARTS = (3, 4, 5, 6, 7)


class ShiftError(ValueError):
    """A checked downward shift would discard nonzero coefficients."""


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = [int(c) for c in coeffs]
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.polynomial({0: 1}, order)

    @classmethod
    def polynomial(cls, terms: Mapping[int, int], order: int) -> "TruncatedSeries":
        """Series from ``{exponent: coefficient}``; exponents above order are dropped."""
        c = [0] * (order + 1)
        for e, v in terms.items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e <= order:
                c[e] += v
        return cls(c)

    @classmethod
    def monomials(cls, order: int, *exponents: int) -> "TruncatedSeries":
        """q^{e_1} + q^{e_2} + ...; repeated exponents accumulate."""
        return cls.polynomial(Counter(exponents), order)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(map(str, self.coeffs[:8]))
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self.coeffs)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(other * a for a in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def over_one_minus(self, a: int) -> "TruncatedSeries":
        """Exact division by (1 - q^a)."""
        if a < 1:
            raise ValueError(f"a must be positive, got {a}")
        c = list(self.coeffs)
        for i in range(a, len(c)):
            c[i] += c[i - a]
        return TruncatedSeries(c)

    def shift(self, k: int, strict: bool = True) -> "TruncatedSeries":
        """Multiply by q^k.

        For k < 0 the coefficients c_0..c_{|k|-1} fall below q^0.  With
        ``strict`` they must be zero, otherwise ShiftError is raised; without
        it they are dropped (Laurent tail discarded).  The order drops by |k|.
        """
        if k >= 0:
            return TruncatedSeries(([0] * k + self.coeffs)[: self.order + 1])
        m = -k
        if m > self.order:
            raise ValueError(f"shift by {k} exceeds order {self.order}")
        low = self.coeffs[:m]
        if strict and any(low):
            bad = [i for i, c in enumerate(low) if c]
            raise ShiftError(f"shift by {k} discards nonzero coefficients at {bad}")
        return TruncatedSeries(self.coeffs[m:])


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_shift(s: TruncatedSeries, k: int, strict: bool = True) -> TruncatedSeries:
    return s.shift(k, strict=strict)


def geometric_inverse(a: int, order: int) -> TruncatedSeries:
    """1/(1 - q^a) = sum_j q^{ja}, truncated at ``order``."""
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    return TruncatedSeries(1 if i % a == 0 else 0 for i in range(order + 1))


def inverse_product(parts: Iterable[int], order: int) -> TruncatedSeries:
    """prod_{a in parts} 1/(1 - q^a)."""
    s = TruncatedSeries.one(order)
    for a in parts:
        s = s.over_one_minus(a)
    return s


def one_minus_product(parts: Iterable[int], order: int) -> TruncatedSeries:
    """prod_{a in parts} (1 - q^a), truncated."""
    s = TruncatedSeries.one(order)
    for a in parts:
        s = s * TruncatedSeries.polynomial({0: 1, a: -1}, order)
    return s


def restricted_count(n: int, parts: Iterable[int]) -> int:
    """Number of partitions of ``n`` with every part in ``parts``."""
    parts = sorted(set(parts))
    if not parts:
        raise ValueError("part set must be nonempty")
    if n < 0:
        return 0
    return inverse_product(parts, n)[n]


def restricted_counts(parts: Iterable[int], order: int) -> list[int]:
    """[p(0), ..., p(order)] for partitions with parts restricted to ``parts``."""
    return inverse_product(sorted(set(parts)), order).coeffs


def negative_support(s: TruncatedSeries, start: int = 0) -> set[int]:
    """Indices n in [start, order] with c_n < 0."""
    return {n for n in range(max(start, 0), s.order + 1) if s.coeffs[n] < 0}


# --- case generating functions -------------------------------------------

@dataclass(frozen=True)
class GfCaseSpec:
    """One of the Psi counting cases; ``param`` is r for A2 and m for B2d."""

    case: str
    param: int | None = None

    CASES = ("A1a", "A2", "B1", "B2a", "B2b", "B2c", "B2d")

    def __post_init__(self):
        if self.case not in self.CASES:
            raise ValueError(f"unknown case {self.case!r}")
        if self.case == "A2" and (self.param is None or self.param <= -1):
            raise ValueError("A2 needs r > -1")
        if self.case == "B2d" and (self.param is None or self.param < 4):
            raise ValueError("B2d needs m >= 4")
        if self.case not in ("A2", "B2d") and self.param is not None:
            raise ValueError(f"case {self.case} takes no parameter")

    def __str__(self) -> str:
        return self.case if self.param is None else f"{self.case}({self.param})"


def _prefactor_shift(spec: GfCaseSpec) -> int:
    # power of 1/q in front of X4
    return {"A1a": 0, "B1": 0, "B2a": 1, "B2b": 2, "B2c": 3}.get(
        spec.case, spec.param if spec.param is not None else 0
    )


def build_x3_x4(spec: GfCaseSpec, order: int = DEFAULT_ORDER) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Return (X3, X4) for a case, both truncated at ``order``.

    The 1/q^m prefactors drop the terms that would index a negative Xi.
    """
    N = order + _prefactor_shift(spec)
    P = lambda *e: TruncatedSeries.monomials(N, *e)  # noqa: E731
    inv = lambda *a: inverse_product(a, N)  # noqa: E731

    x3_odd = (P(0) + P(1)) * inv(2, 4, 5, 7)
    # common first two terms of X4 in the A cases and in B2a..B2c
    a_base = inv(3, 5, 7) + (P(1) + P(1 + 1)) * inv(2, 3, 5, 7)
    b_base = inv(3, 5, 6, 7) + (P(1) + P(1 + 1)) * inv(2, 3, 5, 6, 7)

    case = spec.case
    if case == "A1a":
        x4 = a_base.shift(1)
        x3 = x3_odd
    elif case == "A2":
        x4 = a_base.shift(-spec.param, strict=False)
        x3 = x3_odd
    elif case == "B1":
        x4 = (
            inv(3, 5, 6, 7)
            - inv(5, 7)
            + (P(1) + P(1 + 1)) * inv(2, 3, 5, 6, 7)
            - (P(1) + P(1 + 3) + P(1 + 2 + 3 + 3, 1 + 2 + 3 + 3 + 3, 1 + 2 + 3 + 6, 1 + 2 + 6)) * inv(2, 5, 7)
            - (
                P(1 + 1)
                + P(1 + 1 + 3, 1 + 1 + 3 + 3, 1 + 1 + 6)
                + P(
                    1 + 1 + 2 + 3 + 3 + 3,
                    1 + 1 + 2 + 3 + 3 + 3 + 3,
                    1 + 1 + 2 + 3 + 6,
                    1 + 1 + 2 + 3 + 3 + 6,
                    1 + 1 + 2 + 6 + 6,
                )
            )
            * inv(2, 5, 7)
        )
        x3 = P(2 + 4, 1 + 2 + 4) * inv(2, 4, 5, 7)
    elif case == "B2a":
        x4 = (
            b_base
            - P(1, 1 + 2 + 3, 1 + 2 + 3 + 3, 1 + 2 + 6) * inv(2, 5, 7)
            - P(1 + 1, 1 + 1 + 3, 1 + 1 + 2 + 3 + 3, 1 + 1 + 2 + 3 + 3 + 3, 1 + 1 + 2 + 3 + 6, 1 + 1 + 2 + 6)
            * inv(2, 5, 7)
        ).shift(-1, strict=False)
        x3 = x3_odd
    elif case == "B2b":
        x4 = (
            b_base
            - P(1 + 2 + 3) * inv(2, 5, 7)
            - P(1 + 1, 1 + 1 + 2 + 3, 1 + 1 + 2 + 3 + 3, 1 + 1 + 2 + 6) * inv(2, 5, 7)
        ).shift(-2, strict=False)
        x3 = x3_odd
    elif case == "B2c":
        x4 = (b_base - P(1 + 1 + 2, 1 + 1 + 2 + 3) * inv(2, 5, 7)).shift(-3, strict=False)
        x3 = x3_odd
    else:  # B2d
        x4 = ((P(0) + P(1)) * inv(2, 3, 5, 6, 7)).shift(-spec.param, strict=False)
        x3 = x3_odd
    return x3.truncate(order), x4.truncate(order)


def x_difference(spec: GfCaseSpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    x3, x4 = build_x3_x4(spec, order)
    return x4 - x3


# closed forms displayed for X4 - X3, as (numerator, denominator parts)
A1A_NUMERATOR = {0: -1, 3: 1, 4: 1}
A1A_DENOMINATOR = (3, 4, 5, 7)
B1_NUMERATOR = {
    3: 1, 8: -1, 9: -1, 10: -1, 12: 1, 13: 1, 14: 2, 15: 1, 17: 2,
    18: -1, 19: 3, 21: 3, 22: 1, 23: -2, 24: 1, 25: -3, 27: -3,
}  # q^3 (1 - q^5 - q^6 - q^7 + q^9 + ... - 3q^24), expanded
B1_DENOMINATOR = (3, 4, 5, 6, 7)


def cross_multiply_check(
    diff: TruncatedSeries, numerator: Mapping[int, int], denominator: Iterable[int]
) -> list[int]:
    """Indices where diff * prod(1 - q^a) differs from the numerator polynomial."""
    lhs = diff * one_minus_product(denominator, diff.order)
    rhs = TruncatedSeries.polynomial(numerator, diff.order)
    return [i for i in range(diff.order + 1) if lhs[i] != rhs[i]]


def b2d_coefficient(n: int, m: int, pb: list[int]) -> int:
    """Displayed coefficient of q^n in X4 - X3 for case B2d."""
    p = lambda i: pb[i] if i >= 0 else 0  # noqa: E731
    return (
        p(n + m) + p(n + m - 1) + p(n + m - 2) + p(n + m - 3)
        - p(n) - p(n - 1) - p(n - 2) + p(n - 6) + p(n - 7) + p(n - 8)
    )


def b1_lower_bound_terms(n: int, pb: list[int]) -> int:
    """The simplified sum that bounds B1's coefficient of q^{n+3} from below."""
    p = lambda i: pb[i] if i >= 0 else 0  # noqa: E731
    return (
        p(n) - p(n - 5) - p(n - 6) - p(n - 7) + p(n - 9) + p(n - 10)
        + p(n - 11) + p(n - 12) + 2 * p(n - 14)
    )


def pa_inequalities(order: int = 500) -> VerificationReport:
    """Check the restricted-count inequalities behind cases A1a and B1.

    * -p_a(n) + p_a(n-3) + p_a(n-4) >= 0 for 7 <= n <= order
    * -p_b(n-6) + p_b(n-9) + p_b(n-11) >= 0 for 20 <= n <= order
    * -p_b(n-7) + p_b(n-10) + p_b(n-12) >= 0 for 20 <= n <= order
    * p_b(n) - p_b(n-5) >= 0 for 0 <= n <= order
    """
    if order < 30:
        raise ValueError("order must be at least 30")
    t0 = time.perf_counter()
    pa = restricted_counts(PA_PARTS, order)
    pb = restricted_counts(PB_PARTS, order)
    a = lambda i: pa[i] if i >= 0 else 0  # noqa: E731
    b = lambda i: pb[i] if i >= 0 else 0  # noqa: E731
    families = {
        "pa(-0,+3,+4)": (7, lambda n: -a(n) + a(n - 3) + a(n - 4)),
        "pb(-6,+9,+11)": (20, lambda n: -b(n - 6) + b(n - 9) + b(n - 11)),
        "pb(-7,+10,+12)": (20, lambda n: -b(n - 7) + b(n - 10) + b(n - 12)),
        "pb(0,-5)": (0, lambda n: b(n) - b(n - 5)),
    }
    bad = []
    for name, (start, f) in families.items():
        for n in range(start, order + 1):
            v = f(n)
            if v < 0:
                bad.append({"input": [name, n], "expected": ">= 0", "actual": v})
    return VerificationReport.from_checks(
        "series.restricted-inequalities",
        (0, order),
        bad,
        t0,
        details={"families": {k: v[0] for k, v in families.items()}},
    )


# published exceptional Xi values for case B2a
B2A_CLAIMED_EXCEPTIONS = frozenset({0, 1, 4, 5, 7, 8, 9, 10, 12})


def verify_series(order: int = DEFAULT_ORDER) -> list[VerificationReport]:
    """All generating-function claims, one report per claim."""
    reports = []

    def run(claim, rng, check, details=None):
        t0 = time.perf_counter()
        bad, extra = check()
        d = dict(details or {})
        d.update(extra)
        reports.append(VerificationReport.from_checks(claim, rng, bad, t0, details=d))

    def a1a_identity():
        diff = x_difference(GfCaseSpec("A1a"), order)
        idx = cross_multiply_check(diff, A1A_NUMERATOR, A1A_DENOMINATOR)
        return [{"input": i, "expected": "closed form", "actual": diff[i]} for i in idx], {}

    def b1_identity():
        diff = x_difference(GfCaseSpec("B1"), order)
        idx = cross_multiply_check(diff, B1_NUMERATOR, B1_DENOMINATOR)
        bad = [{"input": i, "expected": "numerator polynomial", "actual": diff[i]} for i in idx]
        try:
            diff.shift(-3)
        except ShiftError as e:
            bad.append({"input": "q^-3 shift", "expected": "exact", "actual": str(e)})
        return bad, {}

    def support(spec, expected, start=0):
        def check():
            diff = x_difference(spec, order)
            got = negative_support(diff, start)
            bad = [] if got == expected else [
                {"input": str(spec), "expected": sorted(expected), "actual": sorted(got)}
            ]
            return bad, {"negative_support": sorted(got), "from_n": start}
        return check

    def b2a_support():
        diff = x_difference(GfCaseSpec("B2a"), order)
        got = negative_support(diff)
        extra = got - B2A_CLAIMED_EXCEPTIONS
        bad = [
            {"input": i, "expected": "index in claimed exception list", "actual": diff[i]}
            for i in sorted(extra)
        ]
        return bad, {
            "negative_support": sorted(got),
            "claimed": sorted(B2A_CLAIMED_EXCEPTIONS),
            "unlisted_negative": sorted(extra),
            "listed_nonnegative": sorted(B2A_CLAIMED_EXCEPTIONS - got),
        }

    def b2d_formula(m):
        def check():
            diff = x_difference(GfCaseSpec("B2d", m), order)
            pb = restricted_counts(PB_PARTS, order + m)
            bad = [
                {"input": [m, n], "expected": b2d_coefficient(n, m, pb), "actual": diff[n]}
                for n in range(order + 1)
                if diff[n] != b2d_coefficient(n, m, pb)
            ]
            return bad, {}
        return check

    run("series.A1a-closed-form", (0, order), a1a_identity)
    run("series.B1-numerator", (0, order), b1_identity)
    # the claim covers n >= 1; c_0 = -1 is outside it
    run("series.A1a-negative-support", (1, order), support(GfCaseSpec("A1a"), {5}, start=1))
    for r in range(0, 7):
        run(f"series.A2-negative-support[r={r}]", (0, order), support(GfCaseSpec("A2", r), set()))
    run("series.B1-negative-support", (0, order), support(GfCaseSpec("B1"), set()))
    run("series.B2a-negative-support", (0, order), b2a_support)
    run("series.B2b-negative-support", (0, order), support(GfCaseSpec("B2b"), {0}))
    run("series.B2c-negative-support", (0, order), support(GfCaseSpec("B2c"), set()))
    for m in range(4, 9):
        run(f"series.B2d-negative-support[m={m}]", (0, order), support(GfCaseSpec("B2d", m), set()))
        run(f"series.B2d-coefficient-formula[m={m}]", (0, order), b2d_formula(m))
    reports.append(pa_inequalities(max(order, 500)))
    return reports
