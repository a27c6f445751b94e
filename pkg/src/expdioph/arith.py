"""Exact integer helpers: modular powers and base-m valuations.

Two valuation routes are provided.  ``valuation`` divides repeatedly and is
the reference; ``valuation_pow_minus_one`` / ``valuation_pow_plus_one`` never
build ``a**n`` and instead probe ``a**n mod m**k`` for growing ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass


class ValuationError(ValueError):
    pass


@dataclass(frozen=True)
class ValuationCertificate:
    """``base**exponent`` divides the certified value, ``base**(exponent+1)`` does not.

    ``witness_residue`` is ``a**n mod base**(exponent+1)`` for the probing
    path, and ``None`` when the value was handled by exact division.
    """

    base: int
    exponent: int
    witness_residue: int | None = None


def _check_natural(name: str, x: int, minimum: int = 0) -> None:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < minimum:
        raise ValuationError(f"{name} must be >= {minimum}, got {x}")


def modpow(a: int, n: int, modulus: int) -> int:
    """Return ``a**n % modulus``; ``modulus == 1`` gives 0."""
    _check_natural("a", a)
    _check_natural("n", n)
    _check_natural("modulus", modulus, 1)
    return pow(a, n, modulus)


def valuation(m: int, x: int) -> int:
    """Largest k with ``m**k | x``, by repeated exact division.

    Defined for every ``x >= 1`` (so ``valuation(m, x) == 0`` whenever
    ``x < m``); zero is rejected because every power divides it.
    """
    _check_natural("m", m, 2)
    _check_natural("x", x)
    if x == 0:
        raise ValuationError("valuation undefined at zero")
    k = 0
    q, r = divmod(x, m)
    while r == 0:
        k += 1
        x = q
        q, r = divmod(x, m)
    return k


def exact_divides(m: int, k: int, x: int) -> bool:
    """True iff ``m**k || x`` (divides, and the next power does not)."""
    _check_natural("k", k)
    return valuation(m, x) == k


def _probe_bound(m: int, a: int, n: int) -> int:
    # m**k_max > a**n + 1, so the probe predicate is false at k_max.
    return (n * a.bit_length()) // (m.bit_length() - 1) + 1


def _probe(m: int, a: int, n: int, target: int) -> ValuationCertificate:
    """Largest k with ``a**n == target (mod m**k)``, target in {1, -1}.

    The predicate is monotone in k (it is divisibility of ``a**n - target``
    by ``m**k``), so galloping followed by bisection finds the boundary.
    """
    k_max = _probe_bound(m, a, n)

    def holds(k: int) -> bool:
        mod = m**k
        return (pow(a, n, mod) - target) % mod == 0

    lo = 0  # holds(0) is trivially true
    hi = 1
    while hi < k_max and holds(hi):
        lo = hi
        hi *= 2
    hi = min(hi, k_max)
    # holds(lo) and not holds(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return ValuationCertificate(m, lo, pow(a, n, m ** (lo + 1)))


def valuation_pow_minus_one(m: int, a: int, n: int) -> ValuationCertificate:
    """``v_m(a**n - 1)`` without materializing ``a**n``."""
    _check_natural("m", m, 2)
    _check_natural("a", a, 2)
    _check_natural("n", n, 1)
    return _probe(m, a, n, 1)


def valuation_pow_plus_one(m: int, a: int, n: int) -> ValuationCertificate:
    """``v_m(a**n + 1)`` without materializing ``a**n``."""
    _check_natural("m", m, 2)
    _check_natural("a", a, 2)
    _check_natural("n", n, 1)
    return _probe(m, a, n, -1)


def naive_valuation_pow(m: int, a: int, n: int, sign: int) -> int:
    """Reference route: build ``a**n + sign`` and divide it out."""
    if sign not in (1, -1):
        raise ValuationError("sign must be +1 or -1")
    return valuation(m, a**n + sign)
