"""Quantum integers, factorials and binomials, and the x-shifted binomial.

These are the scalar factors of every formula in the engine, so all four
families are memoized by argument tuple; the contract is only that repeated
calls return structurally identical values.
"""

from __future__ import annotations

from functools import lru_cache

from .rings import LaurentQ, RatQ, XPoly


@lru_cache(maxsize=None)
def qint(r: int) -> RatQ:
    """[r] = (q^r - q^{-r})/(q - q^{-1}), for any integer r; [-r] = -[r]."""
    if r == 0:
        return RatQ.zero()
    if r < 0:
        return -qint(-r)
    # [r] = q^{r-1} + q^{r-3} + ... + q^{1-r}
    return RatQ(LaurentQ({e: 1 for e in range(1 - r, r, 2)}))


@lru_cache(maxsize=None)
def qfactorial(r: int) -> RatQ:
    """[r]! = [1][2]...[r]; defined for r >= 0."""
    if r < 0:
        raise ValueError("quantum factorial needs r >= 0")
    if r == 0:
        return RatQ.one()
    return qfactorial(r - 1) * qint(r)


@lru_cache(maxsize=None)
def qbinom(r: int, s: int) -> RatQ:
    """Quantum binomial, defined for every integer r (including negative):
    0 for s < 0, otherwise ([r][r-1]...[r-s+1]) / [s]!."""
    if s < 0:
        return RatQ.zero()
    num = RatQ.one()
    for k in range(r - s + 1, r + 1):
        num = num * qint(k)
        if num.is_zero():
            return num
    return num / qfactorial(s)


@lru_cache(maxsize=None)
def xbinom(s: int, l: int) -> XPoly:
    """The x-shifted binomial: 0 for l < 0, otherwise

        prod_{j=1}^{l} (x q^{s-j+1} - x^{-1} q^{-s+j-1}) / (q^j - q^{-j}).

    Its specialization at x = q^n is qbinom(n + s, l) for every integer n.
    """
    if l < 0:
        return XPoly.zero()
    out = XPoly.one()
    for j in range(1, l + 1):
        d = RatQ(LaurentQ({j: 1, -j: -1}))
        factor = XPoly({1: RatQ.q_power(s - j + 1) / d,
                        -1: -(RatQ.q_power(-s + j - 1) / d)})
        out = out * factor
    return out


def heaviside(k: int) -> int:
    """1 for k >= 0, else 0."""
    return 1 if k >= 0 else 0


def kronecker(a: int, b: int) -> int:
    return 1 if a == b else 0
