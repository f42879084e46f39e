"""Univariate polynomials over a prime field and rational reconstruction.

Polynomials are lists of coefficients in ``range(p)``, lowest degree first,
without trailing zeros.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Sequence

# primes just below 2**31, so products of residues stay cheap
PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549)


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def from_fraction(c: Fraction, p: int) -> int:
    den = c.denominator % p
    if den == 0:
        raise ZeroDivisionError(f"denominator {c.denominator} vanishes mod {p}")
    return c.numerator * pow(den, -1, p) % p


def poly_from_fractions(coeffs: Sequence[Fraction], p: int) -> List[int]:
    return _trim([from_fraction(Fraction(c), p) for c in coeffs])


def mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def divmod_poly(a: Sequence[int], b: Sequence[int], p: int):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
    return _trim(q), _trim(a[:len(b) - 1])


def monic(a: Sequence[int], p: int) -> List[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd_poly(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, divmod_poly(a, b, p)[1]
    return monic(a, p)


def powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = divmod_poly(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_poly(mul(result, base, p), mod, p)[1]
        base = divmod_poly(mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def evaluate(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _split(f: List[int], p: int, rng: random.Random) -> List[int]:
    """Roots of a monic product of distinct linear factors."""
    if len(f) == 1:
        return []
    if len(f) == 2:
        return [(-f[0]) % p]
    while True:
        a = rng.randrange(p)
        h = powmod([a, 1], (p - 1) // 2, f, p) or [0]
        h[0] = (h[0] - 1) % p
        d = gcd_poly(f, _trim(h), p)
        if 1 < len(d) < len(f):
            return _split(d, p, rng) + _split(divmod_poly(f, d, p)[0], p, rng)


def roots_mod_p(f: Sequence[int], p: int, seed: int = 0) -> Dict[int, int]:
    """All roots of ``f`` in the prime field with their multiplicities."""
    f = monic(_trim(list(f)), p)
    if len(f) <= 1:
        return {}
    x_p = powmod([0, 1], p, f, p)
    diff = list(x_p) + [0] * max(0, 2 - len(x_p))
    diff[1] = (diff[1] - 1) % p
    linear = gcd_poly(f, _trim(diff), p)
    roots = sorted(_split(linear, p, random.Random(seed)))
    out = {}
    for r in roots:
        m = 0
        g = f
        lin = [(-r) % p, 1]
        while len(g) > 1:
            q, rem = divmod_poly(g, lin, p)
            if rem:
                break
            g, m = q, m + 1
        out[r] = m
    return out


def rational_reconstruction(a: int, p: int, bound: Optional[int] = None) -> Optional[Fraction]:
    """The fraction ``n/d`` with ``n = a*d mod p`` and ``|n|, d <= bound``."""
    bound = bound or isqrt(p // 2)
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)
