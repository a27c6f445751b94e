"""Closed-form valuations for powers of 2, 3 and m - 1, plus checkers.

Each ``predicted_*`` function returns the exponent the corresponding lifting
formula gives, extended to every positive exponent so callers never have to
special-case parity.  ``run_lemma_suites`` compares every prediction with the
exact division oracle over fixed ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .arith import valuation


class LemmaError(ValueError):
    pass


@dataclass(frozen=True)
class ExponentFactorization:
    """``n == 2**m1 * base_m**m2 * l`` with ``l`` odd and not divisible by ``base_m``."""

    m1: int
    m2: int
    l: int  # noqa: E741
    base_m: int
    n: int

    def recompose(self) -> int:
        return 2**self.m1 * self.base_m**self.m2 * self.l


def factor_exponent(n: int, base_m: int) -> ExponentFactorization:
    if n < 1:
        raise LemmaError(f"exponent must be >= 1, got {n}")
    if base_m < 3 or base_m % 2 == 0:
        raise LemmaError("lemma requires odd base")
    m1 = valuation(2, n)
    odd = n >> m1
    m2 = valuation(base_m, odd)
    return ExponentFactorization(m1, m2, odd // base_m**m2, base_m, n)


def predicted_v2_3pow_minus1(n: int) -> int:
    """v_2(3**n - 1): ``e + 2`` when ``2**e || n`` with e >= 1, else 1."""
    e = valuation(2, n)
    return e + 2 if e else 1


def predicted_v2_3pow_plus1(m: int) -> int:
    """v_2(3**m + 1): 2 for odd m, 1 for even m."""
    if m < 1:
        raise LemmaError(f"exponent must be >= 1, got {m}")
    return 2 if m % 2 else 1


def predicted_v3_2pow_minus1(n: int) -> int:
    if n % 2:
        return 0
    return factor_exponent(n, 3).m2 + 1


def predicted_v3_2pow_plus1(n: int) -> int:
    if n < 1:
        raise LemmaError(f"exponent must be >= 1, got {n}")
    if n % 2 == 0:
        return 0
    return valuation(3, n) + 1


def predicted_vm_basepow_minus1(base_m: int, n: int) -> int:
    """v_m((m - 1)**n - 1) for odd m >= 3.

    Zero for odd n; otherwise one more than the exponent of m in the odd part
    of n.  Even bases are rejected: there ``m**2`` already divides
    ``(m - 1)**m - 1``.
    """
    if base_m % 2 == 0:
        raise LemmaError("lemma requires odd base")
    if n % 2:
        return 0
    return factor_exponent(n, base_m).m2 + 1


def check_remark_even_base(base_m: int) -> bool:
    """True iff ``m**2`` divides ``(m - 1)**m - 1`` for even m."""
    if base_m < 4 or base_m % 2:
        raise LemmaError(f"expected an even base >= 4, got {base_m}")
    sq = base_m * base_m
    return (pow(base_m - 1, base_m, sq) - 1) % sq == 0


def divisibility_law(p: int, m: int, n: int) -> bool:
    """Whether ``p**m - 1`` divides ``p**n - 1`` (computed exactly)."""
    if p < 2 or m < 1 or n < 0:
        raise LemmaError(f"need p >= 2, m >= 1, n >= 0; got {(p, m, n)}")
    return (p**n - 1) % (p**m - 1) == 0


# --- property suites -------------------------------------------------------


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0


@dataclass(frozen=True)
class SuiteRanges:
    cyclo_p: tuple[int, ...] = (2, 3, 4, 5, 6, 7)
    cyclo_max: int = 48
    three_minus_e_max: int = 8
    three_minus_k: tuple[int, ...] = (1, 3, 5, 7, 9)
    three_plus_max: int = 99
    two_minus_m1_max: int = 5
    two_minus_m2_max: int = 4
    two_minus_l: tuple[int, ...] = (1, 5, 7, 11)
    two_plus_m1_max: int = 4
    two_plus_l: tuple[int, ...] = (1, 5, 7, 11, 13)
    odd_minus_bases: tuple[int, ...] = (3, 5, 7, 9, 11, 13, 15)
    odd_minus_n_max: int = 60
    part1_even_bases: tuple[int, ...] = (4, 6, 8, 10, 12, 14, 16)
    remark_bases: tuple[int, ...] = tuple(range(4, 21, 2))


def _compare(
    res: SuiteResult, cases: Iterable[tuple[str, int, int]], limit: int = 10
) -> SuiteResult:
    for label, predicted, actual in cases:
        res.checked += 1
        if predicted != actual and len(res.failures) < limit:
            res.failures.append(f"{label}: predicted {predicted}, oracle {actual}")
    return res


def _cyclotomic(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for p in r.cyclo_p:
        for m in range(1, r.cyclo_max + 1):
            for n in range(0, r.cyclo_max + 1):
                yield f"p={p} m={m} n={n}", int(n % m == 0), int(divisibility_law(p, m, n))


def _three_minus(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for e in range(1, r.three_minus_e_max + 1):
        for k in r.three_minus_k:
            n = 2**e * k
            yield f"n={n}", predicted_v2_3pow_minus1(n), valuation(2, 3**n - 1)
    for n in range(1, 100, 2):
        yield f"n={n}", predicted_v2_3pow_minus1(n), valuation(2, 3**n - 1)


def _three_plus(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for m in range(1, r.three_plus_max + 1):
        yield f"m={m}", predicted_v2_3pow_plus1(m), valuation(2, 3**m + 1)


def _two_minus(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for m1 in range(1, r.two_minus_m1_max + 1):
        for m2 in range(0, r.two_minus_m2_max + 1):
            for l in r.two_minus_l:  # noqa: E741
                n = 2**m1 * 3**m2 * l
                pred = predicted_v3_2pow_minus1(n)
                yield f"n={n}", pred, valuation(3, 2**n - 1)
                yield f"n={n} closed form", m2 + 1, pred
    for n in range(1, 100, 2):
        yield f"n={n}", predicted_v3_2pow_minus1(n), valuation(3, 2**n - 1)


def _two_plus(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for m1 in range(0, r.two_plus_m1_max + 1):
        for l in r.two_plus_l:  # noqa: E741
            n = 3**m1 * l
            pred = predicted_v3_2pow_plus1(n)
            yield f"n={n}", pred, valuation(3, 2**n + 1)
            yield f"n={n} closed form", m1 + 1, pred
    for n in range(2, 100, 2):
        yield f"n={n}", predicted_v3_2pow_plus1(n), valuation(3, 2**n + 1)


def _odd_minus(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for m in r.odd_minus_bases:
        for n in range(1, r.odd_minus_n_max + 1):
            yield f"m={m} n={n}", predicted_vm_basepow_minus1(m, n), valuation(m, (m - 1) ** n - 1)
    # the odd-exponent half holds for even bases too
    for m in r.part1_even_bases:
        for n in range(1, r.odd_minus_n_max + 1, 2):
            yield f"m={m} n={n} (odd n)", 0, int(((m - 1) ** n - 1) % m == 0)


def _remark(r: SuiteRanges) -> Iterator[tuple[str, int, int]]:
    for m in r.remark_bases:
        yield f"m={m}", 1, int(check_remark_even_base(m))


SUITES: dict[str, Callable[[SuiteRanges], Iterator[tuple[str, int, int]]]] = {
    "cyclotomic-division": _cyclotomic,
    "power-three-minus": _three_minus,
    "power-three-plus": _three_plus,
    "power-two-minus": _two_minus,
    "power-two-plus": _two_plus,
    "power-odd-minus": _odd_minus,
    "remark-no-power-even": _remark,
}


def run_lemma_suites(
    ranges: SuiteRanges | None = None, names: Iterable[str] | None = None
) -> list[SuiteResult]:
    ranges = ranges or SuiteRanges()
    for m in ranges.odd_minus_bases:
        if m % 2 == 0:
            raise LemmaError("lemma requires odd base")
    selected = list(SUITES) if names is None else list(names)
    out = []
    for name in selected:
        if name not in SUITES:
            raise LemmaError(f"unknown lemma suite {name!r}")
        out.append(_compare(SuiteResult(name), SUITES[name](ranges)))
    return out

