"""Exact number-theoretic helpers.

Everything here is big-integer or exact-rational arithmetic: binomial
coefficients with a vanishing convention for fractional arguments, the
Moebius function, p-adic valuations and digit expansions, Lucas residues,
Kummer valuations, and the binary digit-dominance partial order.  Floats
are rejected outright; parities and 2-adic valuations carry all the
content downstream, so nothing here may round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _as_integer(x) -> int | None:
    """Return x as an int when it is an exact integer, else None."""
    if isinstance(x, bool):
        raise TypeError("bool is not a valid arithmetic argument")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else None
    raise TypeError(f"exact int or Fraction required, got {type(x).__name__}")


def big_binomial(a: int | Fraction, b: int | Fraction) -> int:
    """Binomial coefficient with the vanishing convention.

    Exact C(a, b) when a and b are integers with 0 <= b <= a, and 0 for
    every other rational input: fractional arguments, negatives, or b > a.
    """
    ai = _as_integer(a)
    bi = _as_integer(b)
    if ai is None or bi is None:
        return 0
    if bi < 0 or ai < 0 or bi > ai:
        return 0
    return math.comb(ai, bi)


def mobius(m: int) -> int:
    """Moebius function by trial division: 1, 0 on a squared prime factor,
    else (-1)^(number of prime factors)."""
    if m < 1:
        raise ValueError(f"mobius is defined on positive integers, got {m}")
    count = 0
    rest = m
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            rest //= d
            if rest % d == 0:
                return 0
            count += 1
        d += 1
    if rest > 1:
        count += 1
    return -1 if count % 2 else 1


def _require_prime(p: int) -> None:
    if p < 2:
        raise ValueError(f"prime required, got {p}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"prime required, got {p} = {d} * {p // d}")
        d += 1


def valuation(p: int, x: int) -> int:
    """Largest e with p^e dividing x; defined only for x >= 1."""
    _require_prime(p)
    if x < 1:
        raise ValueError(f"valuation is defined on positive integers, got {x}")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


@dataclass(frozen=True)
class PAdicDigits:
    """Base-p digits of a non-negative integer, least significant first.

    No trailing zeros beyond the last nonzero digit, except that zero
    itself is the single digit (0,).
    """

    prime: int
    digits: tuple[int, ...]

    @classmethod
    def of(cls, prime: int, x: int) -> "PAdicDigits":
        _require_prime(prime)
        if x < 0:
            raise ValueError(f"non-negative integer required, got {x}")
        if x == 0:
            return cls(prime, (0,))
        ds = []
        while x:
            x, r = divmod(x, prime)
            ds.append(r)
        return cls(prime, tuple(ds))

    def value(self) -> int:
        return sum(d * self.prime**i for i, d in enumerate(self.digits))


def digit_sum(p: int, x: int) -> int:
    """Sum of the base-p digits of x (the carry-counting quantity in
    Kummer's theorem)."""
    return sum(PAdicDigits.of(p, x).digits)


def lucas_binom_mod_p(p: int, x: int, y: int) -> int:
    """C(x, y) mod p by Lucas: the product of digitwise binomials of the
    base-p expansions."""
    if x < 0 or y < 0:
        raise ValueError("non-negative integers required")
    dx = PAdicDigits.of(p, x).digits
    dy = PAdicDigits.of(p, y).digits
    out = 1
    for i in range(max(len(dx), len(dy))):
        xi = dx[i] if i < len(dx) else 0
        yi = dy[i] if i < len(dy) else 0
        out = out * math.comb(xi, yi) % p
        if out == 0:
            return 0
    return out


def kummer_valuation(p: int, n: int, m: int) -> int:
    """p-adic valuation of C(n, m) by Kummer: (S_p(m) + S_p(n-m) - S_p(n)) / (p-1),
    the number of carries when adding m and n-m in base p."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    return (digit_sum(p, m) + digit_sum(p, n - m) - digit_sum(p, n)) // (p - 1)


def digit_dominates(x: int | Fraction, y: int | Fraction) -> bool:
    """Binary digit-dominance order: true iff x and y are both non-negative
    integers and every base-2 digit of x is <= the matching digit of y.

    By Lucas at p = 2 this is equivalent to C(y, x) being odd.
    """
    xi = _as_integer(x)
    yi = _as_integer(y)
    if xi is None or yi is None or xi < 0 or yi < 0:
        return False
    dx = PAdicDigits.of(2, xi).digits
    dy = PAdicDigits.of(2, yi).digits
    for i, d in enumerate(dx):
        if d > (dy[i] if i < len(dy) else 0):
            return False
    return True
