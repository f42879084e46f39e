"""Local b-functions of semi-quasi-homogeneous curves from the Brieskorn lattice.

For ``f = a*y^p + b*x^q + (terms of higher weight)`` with weights
``w(x) = q', w(y) = p'`` (so that ``y^p`` and ``x^q`` share the weight
``d``), the Brieskorn lattice ``H'' = Omega^2 / df ^ d(Omega^0)`` is free of
rank ``mu`` over ``C[[s]]``, ``s = dt^-1``, on the forms ``x^i y^j dx dy``
with ``i <= q-2, j <= p-2``.  Multiplication by ``t = f`` is a matrix
``A(s)`` in that basis, found by repeated division by the Jacobian ideal:
``g dxdy = sum c_k e_k + (h1 f_x + h2 f_y) dxdy`` and the last term equals
``s * (d_x h1 + d_y h2) dxdy``.

On coefficient vectors ``dt*t`` acts as ``T v = s^-1 A v + s v'``.  The
saturation ``L = sum_k T^k H''`` is ``T``-stable, and the minimal polynomial
of ``-T`` on ``L / sL`` is the reduced local b-function at the origin
(Malgrange); the full one is that times ``s + 1``.

Every step is exact rational linear algebra.  Truncation is safe because
weights only grow under division: a form of normalized weight ``w`` at
``s``-depth ``k`` contributes to orders ``>= k + w - 2`` only.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .poly import ContractError, FactoredB, MultiPoly, UniPoly, factor_rational_roots, unipoly_gcd

Mono = Tuple[int, int]
Series = Dict[int, Dict[int, Fraction]]  # order -> basis index -> coefficient


class NotSemiQuasiHomogeneous(ContractError):
    """``f`` is not a Brieskorn-Pham binomial plus higher-weight terms."""


class _Curve:
    def __init__(self, f: MultiPoly):
        if tuple(f.vars) != ("x", "y"):
            raise NotSemiQuasiHomogeneous("expected a polynomial in (x, y)")
        terms = {e: c for e, c in f.terms.items()}
        xs = [a for (a, b) in terms if b == 0 and a > 0]
        ys = [b for (a, b) in terms if a == 0 and b > 0]
        if not xs or not ys or (0, 0) in terms:
            raise NotSemiQuasiHomogeneous("need pure powers of x and y and no constant term")
        q, p = min(xs), min(ys)
        g = gcd(p, q)
        self.wx, self.wy = p // g, q // g
        self.d = self.wx * q
        for (a, b) in terms:
            if (a, b) not in ((q, 0), (0, p)) and self.wx * a + self.wy * b <= self.d:
                raise NotSemiQuasiHomogeneous(f"monomial x^{a}*y^{b} is not above the weight {self.d}")
        self.p, self.q = p, q
        self.cy, self.cx = terms[(0, p)], terms[(q, 0)]
        self.f = terms
        fx: Dict[Mono, Fraction] = {}
        fy: Dict[Mono, Fraction] = {}
        for (a, b), c in terms.items():
            if a:
                fx[(a - 1, b)] = fx.get((a - 1, b), 0) + a * c
            if b:
                fy[(a, b - 1)] = fy.get((a, b - 1), 0) + b * c
        # f_x = q*cx*x^(q-1) + fx_hi and f_y = p*cy*y^(p-1) + fy_hi
        self.lead_x = q * self.cx
        self.lead_y = p * self.cy
        self.fx_hi = {e: c for e, c in fx.items() if e != (q - 1, 0) and c}
        self.fy_hi = {e: c for e, c in fy.items() if e != (0, p - 1) and c}
        self.basis = [(i, j) for j in range(p - 1) for i in range(q - 1)]
        self.index = {m: k for k, m in enumerate(self.basis)}

    @property
    def mu(self) -> int:
        return len(self.basis)

    def form_weight(self, m: Mono) -> int:
        return self.wx * (m[0] + 1) + self.wy * (m[1] + 1)


def _expand(curve: _Curve, g: Dict[Mono, Fraction], order: int) -> Series:
    """Coefficients of ``g dxdy`` in the basis, exact below ``s^order``."""
    out: Series = {}
    d = curve.d
    p, q = curve.p, curve.q
    depth = 0
    while g and depth < order:
        cut = (order - depth + 2) * d  # terms at or above this weight cannot matter
        h1: Dict[Mono, Fraction] = {}
        h2: Dict[Mono, Fraction] = {}
        work = {m: c for m, c in g.items() if curve.form_weight(m) < cut}
        heap = [(curve.form_weight(m), m) for m in work]
        heapq.heapify(heap)
        level: Dict[int, Fraction] = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            a, b = m
            if a >= q - 1:
                k = c / curve.lead_x
                base = (a - q + 1, b)
                h1[base] = h1.get(base, 0) + k
                extra = curve.fx_hi
            elif b >= p - 1:
                k = c / curve.lead_y
                base = (a, b - p + 1)
                h2[base] = h2.get(base, 0) + k
                extra = curve.fy_hi
            else:
                idx = curve.index[m]
                level[idx] = level.get(idx, 0) + c
                continue
            for (i, j), w in extra.items():
                n = (base[0] + i, base[1] + j)
                if curve.form_weight(n) >= cut:
                    continue
                v = work.get(n, 0) - k * w
                if n not in work:
                    heapq.heappush(heap, (curve.form_weight(n), n))
                work[n] = v
        level = {i: c for i, c in level.items() if c}
        if level:
            out[depth] = level
        nxt: Dict[Mono, Fraction] = {}
        for (a, b), c in h1.items():
            if a and c:
                nxt[(a - 1, b)] = nxt.get((a - 1, b), 0) + a * c
        for (a, b), c in h2.items():
            if b and c:
                nxt[(a, b - 1)] = nxt.get((a, b - 1), 0) + b * c
        g = {m: c for m, c in nxt.items() if c}
        depth += 1
    return out


class _Connection:
    """``A(s)`` for multiplication by ``f``, truncated below ``s^order``."""

    def __init__(self, curve: _Curve, order: int):
        self.curve = curve
        self.order = order
        self.columns: List[Series] = []
        for (i, j) in curve.basis:
            g = {(a + i, b + j): c for (a, b), c in curve.f.items()}
            self.columns.append(_expand(curve, g, order))

    def T(self, v: Series, prec: int) -> Tuple[Series, int]:
        """``s^-1 A v + s v'`` and its precision (exclusive bound on known orders)."""
        out: Series = {}
        lo = min(v) if v else 0
        new_prec = min(self.order + lo, prec) - 1

        def add(k: int, i: int, c: Fraction):
            if k >= new_prec or not c:
                return
            row = out.setdefault(k, {})
            row[i] = row.get(i, 0) + c

        for l, vec in v.items():
            if l >= prec:
                continue
            for i, c in vec.items():
                if l:
                    add(l, i, l * c)
                for k, col in self.columns[i].items():
                    for j, a in col.items():
                        add(k + l - 1, j, a * c)
        return {k: {i: c for i, c in row.items() if c} for k, row in out.items() if any(row.values())}, new_prec


def _shift(v: Series, m: int, prec: int) -> Series:
    return {k + m: dict(row) for k, row in v.items() if k + m < prec}


class _Span:
    """Row echelon form of sparse vectors keyed by ``(order, index)``."""

    def __init__(self):
        self.rows: Dict[Tuple[int, int], Dict[Tuple[int, int], Fraction]] = {}

    @staticmethod
    def flat(v: Series, prec: int) -> Dict[Tuple[int, int], Fraction]:
        return {(k, i): c for k, row in v.items() if k < prec for i, c in row.items() if c}

    def reduce(self, w: Dict[Tuple[int, int], Fraction]) -> Dict[Tuple[int, int], Fraction]:
        w = dict(w)
        while w:
            piv = min(w)
            row = self.rows.get(piv)
            if row is None:
                return w
            c = w[piv]
            for key, a in row.items():
                v = w.get(key, 0) - c * a
                if v:
                    w[key] = v
                else:
                    w.pop(key, None)
        return w

    def add(self, w: Dict[Tuple[int, int], Fraction]) -> bool:
        w = self.reduce(w)
        if not w:
            return False
        piv = min(w)
        inv = 1 / w[piv]
        self.rows[piv] = {k: c * inv for k, c in w.items()}
        return True

    def __len__(self) -> int:
        return len(self.rows)


class _Tracked(_Span):
    """Echelon form that also remembers each row as a combination of labelled inputs."""

    def __init__(self):
        super().__init__()
        self.combos: Dict[Tuple[int, int], Dict[int, Fraction]] = {}

    def solve(self, w, combo=None):
        """Reduce ``w``; return the remainder and the combination used."""
        w = dict(w)
        combo = dict(combo or {})
        while w:
            piv = min(w)
            row = self.rows.get(piv)
            if row is None:
                break
            c = w[piv]
            for key, a in row.items():
                v = w.get(key, 0) - c * a
                if v:
                    w[key] = v
                else:
                    w.pop(key, None)
            for label, a in self.combos[piv].items():
                v = combo.get(label, 0) - c * a
                if v:
                    combo[label] = v
                else:
                    combo.pop(label, None)
        return w, combo

    def insert(self, w, combo) -> None:
        piv = min(w)
        inv = 1 / w[piv]
        self.rows[piv] = {k: c * inv for k, c in w.items()}
        self.combos[piv] = {k: c * inv for k, c in combo.items()}


def _minimal_polynomial(M: List[List[Fraction]]) -> UniPoly:
    """lcm over the unit vectors of their Krylov minimal polynomials."""
    n = len(M)
    result = UniPoly([1])
    for start in range(n):
        span = _Tracked()
        v = [Fraction(int(i == start)) for i in range(n)]
        for k in range(n + 1):
            w, combo = span.solve({(0, i): c for i, c in enumerate(v) if c}, {k: Fraction(1)})
            if not w:
                local = UniPoly([combo.get(i, 0) for i in range(k + 1)]).monic()
                break
            span.insert(w, combo)
            v = [sum(M[i][l] * v[l] for l in range(n) if v[l]) for i in range(n)]
        g = unipoly_gcd(result, local)
        result = (result * local.divrem(g)[0]).monic()
    return result


def brieskorn_bfunction(f: MultiPoly, max_saturation: Optional[int] = None) -> FactoredB:
    """Local b-function at 0 of a semi-quasi-homogeneous ``f(x, y)``."""
    curve = _Curve(f)
    if curve.p == 1 or curve.q == 1:
        return FactoredB({-1: 1})
    mu = curve.mu
    limit = max_saturation if max_saturation is not None else mu
    P = 2
    depth = 1  # saturation depth; small in practice, so grow it one step at a time
    while True:
        conn = _Connection(curve, depth + P + 2)
        gens = _saturate(conn, P, depth)
        if gens is not None:
            break
        if depth >= limit:
            raise ArithmeticError("saturation did not stabilize")
        depth += 1
    # L/sL, with everything read modulo s (sL contains s*H'')
    sL = _Span()
    for v in gens:
        sL.add(_Span.flat(_shift(v, 1, 1), 1))
    quot = _Tracked()
    quot.rows = dict(sL.rows)
    quot.combos = {piv: {} for piv in sL.rows}
    basis: List[Series] = []
    for v in gens:
        w, combo = quot.solve(_Span.flat(v, 1), {len(basis): Fraction(1)})
        if w:
            quot.insert(w, combo)
            basis.append(v)
    if len(basis) != mu:
        raise ArithmeticError(f"L/sL has dimension {len(basis)}, expected {mu}")
    M = [[Fraction(0)] * mu for _ in range(mu)]
    for col, v in enumerate(basis):
        Tv, tprec = conn.T(v, P)
        if tprec < 1:
            raise ArithmeticError("insufficient precision for the residue")
        w, combo = quot.solve(_Span.flat(Tv, 1))
        if w:
            raise ArithmeticError("T does not preserve the saturated lattice")
        # solve() subtracts, so T v = -combo in the basis
        for idx, c in combo.items():
            M[idx][col] = -c
    minpoly = _minimal_polynomial(M)
    # roots of the reduced b-function are the negated eigenvalues of T
    reduced = UniPoly([c * (-1) ** k for k, c in enumerate(minpoly.coeffs)]).monic()
    return factor_rational_roots(reduced * UniPoly([1, 1])).monic()


def _saturate(conn: _Connection, P: int, K: int) -> Optional[List[Series]]:
    """Generators of ``L = sum_{k<=K} T^k H''`` modulo ``s^P``, or None if ``K`` is too small."""
    span = _Span()
    gens: List[Series] = []

    def absorb(v: Series) -> bool:
        grew = False
        lo = min(v) if v else P
        for m in range(max(0, P - lo)):
            w = _shift(v, m, P)
            if span.add(_Span.flat(w, P)):
                gens.append(w)
                grew = True
        return grew

    exact = 10 ** 9
    frontier = [({0: {i: Fraction(1)}}, exact) for i in range(conn.curve.mu)]
    for v, _ in frontier:
        absorb(v)
    for _ in range(K + 1):
        nxt = []
        grew = False
        for v, prec in frontier:
            Tv, tprec = conn.T(v, prec)
            if tprec < P + 1:
                return None
            nxt.append((Tv, tprec))
            grew |= absorb(Tv)
        if not grew:
            return gens
        frontier = nxt
    return None
