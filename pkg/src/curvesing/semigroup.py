"""Numerical semigroups generated by two coprime integers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CoprimePair:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if not 1 < self.p < self.q:
            raise ValueError(f"need 1 < p < q, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p}, {self.q})")

    def __iter__(self):
        return iter((self.p, self.q))


@dataclass(frozen=True)
class GapSet:
    pair: CoprimePair
    gaps: tuple

    def __contains__(self, n) -> bool:
        return n in self.gaps

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)


def _as_pair(pair) -> CoprimePair:
    return pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)


def is_representable(n: int, pair) -> bool:
    """True iff ``n = a*p + b*q`` with ``a, b >= 0``."""
    p, q = _as_pair(pair)
    if n < 0:
        raise ValueError("n must be non-negative")
    return any((n - b * q) % p == 0 for b in range(n // q + 1))


def frobenius_number(pair) -> int:
    p, q = _as_pair(pair)
    return p * q - p - q


def all_gaps(pair) -> list:
    """Every positive integer outside the semigroup, via a sieve."""
    p, q = _as_pair(pair)
    top = p * q - p - q
    if top < 0:
        return []
    hit = bytearray(top + 1)
    for b in range(0, top // q + 1):
        for n in range(b * q, top + 1, p):
            hit[n] = 1
    return [n for n in range(1, top + 1) if not hit[n]]


def gap_set(pair) -> GapSet:
    """Gaps of the semigroup that exceed q."""
    pair = _as_pair(pair)
    return GapSet(pair, tuple(n for n in all_gaps(pair) if n > pair.q))
