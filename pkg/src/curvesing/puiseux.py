"""Puiseux characteristics of plane branches given by a parametrization.

A branch ``x = t^p, y = t^q + c_{q+1} t^{q+1} + ...`` is described by ``p``
and the list of ``(exponent, coefficient)`` pairs of ``y``.  Only which
coefficients vanish matters for the characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

from .poly import ContractError, MultiPoly, ParseError


@dataclass(frozen=True)
class Parametrization:
    p: int
    terms: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self):
        terms = tuple(sorted((int(e), Fraction(c)) for e, c in self.terms))
        object.__setattr__(self, "terms", terms)
        if self.p < 1:
            raise ContractError("p must be positive")
        if not terms:
            raise ContractError("y needs at least one term")
        exps = [e for e, _ in terms]
        if len(set(exps)) != len(exps):
            raise ContractError("repeated exponent in y")
        if any(c == 0 for _, c in terms):
            raise ContractError("zero coefficient in y")
        q, cq = terms[0]
        if cq != 1:
            raise ContractError("leading coefficient of y must be 1")
        if not self.p < q:
            raise ContractError(f"need p < q, got p={self.p}, q={q}")
        g = self.p
        for e in exps:
            g = gcd(g, e)
        if g != 1:
            raise ContractError(f"exponent data is not primitive (gcd {g})")

    @property
    def q(self) -> int:
        return self.terms[0][0]

    @classmethod
    def parse(cls, text: str) -> "Parametrization":
        """Parse ``"t^4; t^9 + t^10"`` (x-part; y-part)."""
        try:
            xpart, ypart = text.split(";")
        except ValueError:
            raise ParseError("expected 'x-part; y-part'") from None
        x = MultiPoly.parse(xpart, ["t"])
        if len(x) != 1 or x.coeff(next(iter(x.terms))) != 1:
            raise ParseError("x-part must be t^p")
        (p,), = x.terms
        y = MultiPoly.parse(ypart, ["t"])
        return cls(p, tuple((e, c) for (e,), c in y.terms.items()))

    def as_polys(self):
        """``(x(t), y(t))`` as polynomials in ``t``."""
        x = MultiPoly(("t",), {(self.p,): 1})
        y = MultiPoly(("t",), {(e,): c for e, c in self.terms})
        return x, y


@dataclass(frozen=True)
class PuiseuxCharacteristic:
    p: int
    r: Tuple[int, ...]
    e: Tuple[int, ...]

    def __post_init__(self):
        prev = self.p
        if len(self.r) != len(self.e) or not self.r:
            raise ContractError("characteristic needs matching nonempty r and e")
        for ri, ei in zip(self.r, self.e):
            if ri % prev == 0 or gcd(prev, ri) != ei:
                raise ContractError(f"inconsistent characteristic {self}")
            prev = ei
        if prev != 1:
            raise ContractError("characteristic must end with e_m = 1")

    def __str__(self) -> str:
        return f"({self.p}; {', '.join(map(str, self.r))})"

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.p,) + self.r


def puiseux_characteristic(par: Parametrization) -> PuiseuxCharacteristic:
    exps = [e for e, c in par.terms if c != 0]
    r, e = [], []
    current = par.p
    while current > 1:
        nxt = next((k for k in exps if k % current), None)
        if nxt is None:
            raise ContractError("exponent data is not primitive")
        current = gcd(current, nxt)
        r.append(nxt)
        e.append(current)
    if not r:
        raise ContractError("p = 1 gives a smooth branch with no characteristic exponents")
    return PuiseuxCharacteristic(par.p, tuple(r), tuple(e))


def characteristic_of(p: int, exponents: Sequence[int]) -> PuiseuxCharacteristic:
    """Characteristic of ``x = t^p, y = sum t^k`` over ``exponents``."""
    return puiseux_characteristic(Parametrization(p, tuple((k, 1) for k in exponents)))


def same_topological_type(a: PuiseuxCharacteristic, b: PuiseuxCharacteristic) -> bool:
    return a.as_tuple() == b.as_tuple()
