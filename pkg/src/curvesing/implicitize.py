"""Defining equations of the monomial-plus-one-term branches.

The branch ``x = t^p, y = t^q + t^r`` is implicitized by eliminating ``t``
with a Sylvester resultant evaluated by fraction-free Bareiss elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .poly import ContractError, MultiPoly
from .semigroup import CoprimePair, _as_pair, gap_set


class ImplicitizationError(RuntimeError):
    """The computed polynomial failed a branch invariant."""


def _coefficients_in(f: MultiPoly, var: str) -> List[MultiPoly]:
    """Coefficients of ``f`` as a polynomial in ``var`` (ascending)."""
    i = f._index(var)
    rest = f.vars[:i] + f.vars[i + 1:]
    deg = f.degree(var)
    buckets = [dict() for _ in range(deg + 1)]
    for e, c in f.terms.items():
        buckets[e[i]][e[:i] + e[i + 1:]] = c
    return [MultiPoly(rest, b) for b in buckets]


def sylvester_matrix(A: MultiPoly, B: MultiPoly, var: str) -> List[List[MultiPoly]]:
    a = _coefficients_in(A, var)[::-1]
    b = _coefficients_in(B, var)[::-1]
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = MultiPoly.zero(a[0].vars)
    rows = []
    for k in range(n):
        rows.append([zero] * k + a + [zero] * (size - m - 1 - k))
    for k in range(m):
        rows.append([zero] * k + b + [zero] * (size - n - 1 - k))
    return rows


def bareiss_determinant(matrix: List[List[MultiPoly]]) -> MultiPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    M = [row[:] for row in matrix]
    n = len(M)
    if n == 0:
        raise ContractError("empty matrix")
    vars = M[0][0].vars
    sign = 1
    prev = MultiPoly.constant(vars, 1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not M[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(vars)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * pivot - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev) if k else num
            M[i][k] = MultiPoly.zero(vars)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_resultant(A: MultiPoly, B: MultiPoly, var: str) -> MultiPoly:
    A._check(B)
    if A.degree(var) < 1 or B.degree(var) < 1:
        raise ContractError(f"both operands need positive degree in {var!r}")
    return bareiss_determinant(sylvester_matrix(A, B, var))


@dataclass(frozen=True)
class BranchCurve:
    pair: CoprimePair
    r: Optional[int]
    f: MultiPoly

    def parametrization(self):
        """``(x(t), y(t))`` of the branch."""
        p, q = self.pair
        x = MultiPoly(("t",), {(p,): 1})
        yt = {(q,): 1}
        if self.r is not None:
            yt[(self.r,)] = 1
        return x, MultiPoly(("t",), yt)

    @property
    def label(self) -> str:
        return "f_0" if self.r is None else f"f_{self.r}"


def _reduce_mod_monic(B: MultiPoly, A: MultiPoly, var: str) -> MultiPoly:
    """Remainder of ``B`` by ``A``, where ``A`` is monic in ``var``."""
    i = A._index(var)
    m = A.degree(var)
    lead = tuple(int(j == i) * m for j in range(len(A.vars)))
    if A.coeff(lead) != 1 or sum(1 for e in A.terms if e[i] == m) != 1:
        raise ContractError("divisor must be monic in the eliminated variable")
    tail = A - MultiPoly(A.vars, {lead: 1})
    rem = dict(B.terms)
    out = {}
    while rem:
        e = max(rem, key=lambda t: t[i])
        if e[i] < m:
            out.update(rem)
            break
        c = rem.pop(e)
        shift = e[:i] + (e[i] - m,) + e[i + 1:]
        for te, tc in tail.terms.items():
            ne = tuple(a + b for a, b in zip(te, shift))
            v = rem.get(ne, 0) - c * tc
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return MultiPoly(B.vars, out)


def implicitize_branch(pair, r: Optional[int] = None) -> BranchCurve:
    """Polynomial ``f_r`` with ``f_r(t^p, t^q + t^r) = 0``, normalized."""
    pair = _as_pair(pair)
    p, q = pair
    roster = ("t", "x", "y")
    x0 = MultiPoly((("x", "y")), {(0, p): 1, (q, 0): -1})
    if r is None:
        return BranchCurve(pair, None, x0)
    if r not in gap_set(pair):
        raise ValueError(f"r={r} is not in G({p},{q})")
    A = MultiPoly(roster, {(p, 0, 0): 1, (0, 1, 0): -1})
    B = MultiPoly(roster, {(q, 0, 0): 1, (r, 0, 0): 1, (0, 0, 1): -1})
    # t^p - x is monic in t, so Res(A, B) = Res(A, B mod A).
    Bred = _reduce_mod_monic(B, A, "t")
    res = sylvester_resultant(A, Bred, "t")
    f = _normalize(res, p)
    curve = BranchCurve(pair, r, f)
    _check_invariants(curve)
    return curve


def _normalize(res: MultiPoly, p: int) -> MultiPoly:
    f = res.primitive()
    lead = f.coeff_of(y=p)
    if lead == 0:
        raise ImplicitizationError(f"resultant lacks a y^{p} term: {res}")
    f = f * (1 / lead)
    return f


def _check_invariants(curve: BranchCurve) -> None:
    p, q = curve.pair
    f = curve.f
    if f.coeff_of(y=p) != 1 or f.coeff_of(x=q) != -1 or f.degree("y") != p:
        raise ImplicitizationError(f"normalization invariant failed for {curve.label}: {f}")
    if not verify_vanishing(curve):
        raise ImplicitizationError(f"{curve.label} does not vanish on its parametrization")


def verify_vanishing(curve: BranchCurve) -> bool:
    x, y = curve.parametrization()
    return curve.f.substitute({"x": x, "y": y}).is_zero()


def weighted_orders(f: MultiPoly, wx: int, wy: int) -> list:
    """Weighted degrees ``wx*a + wy*b`` of the monomials of ``f``."""
    ix, iy = f._index("x"), f._index("y")
    return sorted(wx * e[ix] + wy * e[iy] for e in f.terms)
