"""Bounded solvers for the two cyclotomic equations, case searches and the
even-base valuation scan.

The two ``solve_*`` functions are complete inside their boxes.  That the
listed solutions are the only ones for all exponents is a theorem, not
something the enumeration shows.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterable

from .arith import valuation_pow_minus_one
from .equation import (
    CaseId,
    CaseInstance,
    ExponentTuple,
    canonical_form,
    classify,
    holds,
    normalize,
    representative,
)

class SearchError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Prop6Solution:
    """3^k (2^m - 1) = 2^n - 1."""

    k: int
    m: int
    n: int

    def verify(self) -> bool:
        return check_prop6(self.k, self.m, self.n)


@dataclass(frozen=True, order=True)
class Prop9Solution:
    """(2n + 1)^k ((2n)^p - 1) = (2n)^q - 1."""

    k: int
    p: int
    q: int
    n: int

    def verify(self) -> bool:
        return check_prop9(self.k, self.p, self.q, self.n)


def check_prop6(k: int, m: int, n: int) -> bool:
    return 3**k * (2**m - 1) == 2**n - 1


def check_prop9(k: int, p: int, q: int, n: int) -> bool:
    x = 2 * n
    return (x + 1) ** k * (x**p - 1) == x**q - 1


def geometric_cofactor(m: int, l: int, base: int = 2) -> int:  # noqa: E741
    """``sum(base**(i*m) for i < l)``, cross-checked against the quotient form."""
    if m < 1 or l < 1:
        raise SearchError(f"need m, l >= 1; got {(m, l)}")
    total = sum(base ** (i * m) for i in range(l))
    q, r = divmod(base ** (l * m) - 1, base**m - 1)
    if r or q != total:
        raise AssertionError(f"geometric sum mismatch at m={m}, l={l}")
    return total


def solve_prop6(
    k_max: int, m_max: int, n_max: int, check_pruned: bool = False
) -> list[Prop6Solution]:
    """All (k, m, n) in the box with 3^k (2^m - 1) = 2^n - 1.

    Candidates are discarded when m does not divide n (with quotient l >= 2),
    when n is odd (then 3 does not divide 2^n - 1), when 3^(2k) <= 2^n - 1,
    or when the cofactor sum of 2^(im) is not 3^k.  With ``check_pruned``
    every discarded candidate is confirmed non-solving by direct evaluation.
    """
    found = []
    for k, m, n in product(range(1, k_max + 1), range(1, m_max + 1), range(1, n_max + 1)):
        ok = (
            n % m == 0
            and n // m >= 2
            and n % 2 == 0
            and 9**k > 2**n - 1
            and geometric_cofactor(m, n // m) == 3**k
        )
        if ok:
            sol = Prop6Solution(k, m, n)
            assert sol.verify()
            found.append(sol)
        elif check_pruned and check_prop6(k, m, n):
            raise AssertionError(f"pruning discarded a solution {(k, m, n)}")
    return sorted(found)


def solve_prop9(
    k_max: int, p_max: int, q_max: int, n_max: int, check_pruned: bool = False
) -> list[Prop9Solution]:
    """All (k, p, q, n) in the box with (2n+1)^k ((2n)^p - 1) = (2n)^q - 1."""
    found = []
    for n in range(1, n_max + 1):
        x = 2 * n
        for k, p, q in product(
            range(1, k_max + 1), range(1, p_max + 1), range(1, q_max + 1)
        ):
            ok = (
                q % p == 0
                and q // p >= 2
                and (x + 1) ** k > x**p - 1
                and (x + 1) ** (2 * k) > x**q - 1
                and geometric_cofactor(p, q // p, base=x) == (x + 1) ** k
            )
            if ok:
                sol = Prop9Solution(k, p, q, n)
                assert sol.verify()
                found.append(sol)
            elif check_pruned and check_prop9(k, p, q, n):
                raise AssertionError(f"pruning discarded a solution {(k, p, q, n)}")
    return sorted(found)


def verify_growth_base_case(x_max: int) -> bool:
    """x^6 < x^(x^2) - 1 < (x - 1)^(2x^2) - 1 for every odd x in [3, x_max]."""
    if x_max < 3:
        raise SearchError("x_max must be >= 3")
    for x in range(3, x_max + 1, 2):
        middle = x ** (x * x) - 1
        if not (x**6 < middle < (x - 1) ** (2 * x * x) - 1):
            return False
    return True


# --- case and master searches ---------------------------------------------


def _search_case_chunk(args: tuple[CaseId, int, int]) -> list[CaseInstance]:
    case_id, bound, first = args
    out = []
    rest = range(bound + 1)
    for tail in product(rest, repeat=case_id.arity - 1):
        binding = (first, *tail)
        t = case_id.instantiate(binding)
        if holds(t) and representative(case_id, t) == binding:
            out.append(CaseInstance(case_id, binding))
    return out


def _fan_out(func, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [func(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, jobs))


def search_case(case_id: CaseId, bound: int, workers: int = 1) -> list[CaseInstance]:
    """Every solving binding with entries <= bound, one per symmetry class.

    Bindings that describe the same equation up to summand order are merged;
    the lexicographically greatest one is kept, which is also what
    ``classify`` returns.
    """
    if bound < 0:
        raise SearchError("bound must be >= 0")
    jobs = [(case_id, bound, first) for first in range(bound + 1)]
    chunks = _fan_out(_search_case_chunk, jobs, workers)
    return sorted((inst for chunk in chunks for inst in chunk), key=CaseInstance.sort_key)


@dataclass(frozen=True)
class MasterSolution:
    exponents: ExponentTuple
    case: CaseInstance


def _master_chunk(groups: list[list[tuple[tuple[int, int], ...]]]) -> list[ExponentTuple]:
    out = set()
    for pairs in groups:
        for left, right in product(pairs, repeat=2):
            t = ExponentTuple.from_terms(left, right)
            out.add(canonical_form(normalize(t)))
    return list(out)


def search_master(bound: int, workers: int = 1) -> list[MasterSolution]:
    """All holding tuples with entries <= bound, normalized and deduplicated.

    Pairs of terms are bucketed by their sum so only equal-sum pairs are
    combined; this is equivalent to the (bound+1)^8 scan.
    """
    if bound < 0:
        raise SearchError("bound must be >= 0")
    terms = [(i, j) for i in range(bound + 1) for j in range(bound + 1)]
    buckets: dict[int, list] = {}
    for s, t in combinations_with_replacement(terms, 2):
        buckets.setdefault(2 ** s[0] * 3 ** s[1] + 2 ** t[0] * 3 ** t[1], []).append((s, t))
    groups = [buckets[v] for v in sorted(buckets)]
    n_jobs = max(1, workers) * 4
    jobs = [groups[i::n_jobs] for i in range(n_jobs)]
    tuples: set[ExponentTuple] = set()
    for chunk in _fan_out(_master_chunk, jobs, workers):
        tuples.update(chunk)
    out = []
    for t in sorted(tuples):
        case = classify(t)
        if case is None:
            raise AssertionError(f"holding tuple {t.format()} has no case")
        out.append(MasterSolution(t, case))
    return out


# --- even-base scan ------------------------------------------------------

EXACT_BITS = 4096


@dataclass
class ConjectureReport:
    base_m: int
    n_max: int
    violations: list[int] = field(default_factory=list)
    minimal_N: int | None = None


def power_bound_holds(m: int, n: int, v: int) -> bool:
    """Whether ``m**(2v) <= (m-1)**n - 1``.

    Exact when ``(m-1)**n`` is at most EXACT_BITS bits.  Beyond that a
    bit-length bound settles it when ``2v * ceil(log2 m) < n * floor(log2(m-1))``;
    anything else falls back to exact comparison.
    """
    a = m - 1
    if n * a.bit_length() <= EXACT_BITS:
        return m ** (2 * v) <= a**n - 1
    # m**(2v) <= 2**(2v*cl) and (m-1)**n - 1 >= 2**(n*fl) - 1
    cl = (m - 1).bit_length()
    fl = a.bit_length() - 1
    if 2 * v * cl < n * fl:
        return True
    return m ** (2 * v) <= a**n - 1


def _scan_one(args: tuple[int, int]) -> ConjectureReport:
    m, n_max = args
    report = ConjectureReport(m, n_max)
    for n in range(1, n_max + 1):
        v = valuation_pow_minus_one(m, m - 1, n).exponent
        if not power_bound_holds(m, n, v):
            report.violations.append(n)
    last = report.violations[-1] if report.violations else 0
    report.minimal_N = last + 1 if last < n_max else None
    return report


def _even_bases(m_min: int, m_max: int) -> list[int]:
    if m_min % 2 or m_max % 2 or m_min <= 3:
        raise SearchError("base range must consist of even integers > 3")
    if m_max < m_min:
        raise SearchError("empty base range")
    return list(range(m_min, m_max + 1, 2))


def scan_conjecture(
    m_min: int, m_max: int, n_max: int, workers: int = 1
) -> list[ConjectureReport]:
    """For even m, list the n <= n_max with m^(2 v_m((m-1)^n - 1)) > (m-1)^n - 1.

    ``minimal_N`` is the least N with no violation in [N, n_max]; it is
    ``None`` when n_max itself violates.  This is evidence, not proof.
    """
    if n_max < 1:
        raise SearchError("n_max must be >= 1")
    bases = _even_bases(m_min, m_max)
    return _fan_out(_scan_one, [(m, n_max) for m in bases], workers)


def max_minimal_n(reports: Iterable[ConjectureReport]) -> int | None:
    values = [r.minimal_N for r in reports]
    if any(v is None for v in values):
        return None
    return max(values)  # type: ignore[type-var]
