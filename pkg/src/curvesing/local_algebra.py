"""Commutative Groebner and standard bases, and local quotient dimensions.

Polynomials are handled internally as ``{exponent_tuple: int}`` with
primitive integer coefficients; the public functions accept and return
:class:`~curvesing.poly.MultiPoly`.

Global orders use Buchberger's algorithm with the Gebauer-Moeller criteria.
The local order (negative degree reverse lexicographic) uses Mora's normal
form, so the leading ideal describes the localization at the origin.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .poly import ContractError, Exponent, MultiPoly

IPoly = Dict[Exponent, int]


class Infinite:
    """Marker for an infinite-dimensional quotient."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "Infinite"

    __str__ = __repr__


INFINITE = Infinite()


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------


def _drl(e: Exponent):
    return (sum(e), tuple(-k for k in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order on a roster.

    ``kind`` is ``"degrevlex"``, ``"lex"``, ``"negdegrevlex"`` (local) or
    ``"elimination"``; the last ranks any monomial in the first ``block``
    variables above every monomial in the remaining ones (block degree,
    then degrevlex on everything).
    """

    kind: str
    roster: Tuple[str, ...]
    block: int = 0

    def __post_init__(self):
        object.__setattr__(self, "roster", tuple(self.roster))
        if self.kind not in ("degrevlex", "lex", "negdegrevlex", "elimination"):
            raise ContractError(f"unknown order kind {self.kind!r}")
        if self.kind == "elimination" and not 0 < self.block <= len(self.roster):
            raise ContractError("elimination order needs 0 < block <= len(roster)")

    @property
    def is_local(self) -> bool:
        return self.kind == "negdegrevlex"

    def key(self) -> Callable[[Exponent], tuple]:
        if self.kind == "degrevlex":
            return _drl
        if self.kind == "lex":
            return tuple
        if self.kind == "negdegrevlex":
            return lambda e: (-sum(e), tuple(-k for k in reversed(e)))
        k = self.block
        return lambda e: (sum(e[:k]), _drl(e))

    @classmethod
    def eliminating(cls, roster: Sequence[str], drop: Iterable[str]) -> Tuple["MonomialOrder", Tuple[str, ...]]:
        """Elimination order with ``drop`` moved to the front of the roster."""
        drop = [v for v in roster if v in set(drop)]
        keep = [v for v in roster if v not in drop]
        return cls("elimination", tuple(drop + keep), len(drop)), tuple(keep)


# ---------------------------------------------------------------------------
# integer polynomial kernel
# ---------------------------------------------------------------------------


def to_ipoly(f: MultiPoly, roster: Sequence[str]) -> IPoly:
    g = f.rename(roster).primitive() if f.vars != tuple(roster) else f.primitive()
    return {e: int(c) for e, c in g.terms.items()}


def from_ipoly(p: IPoly, roster: Sequence[str]) -> MultiPoly:
    return MultiPoly._raw(tuple(roster), {e: Fraction(c) for e, c in p.items()})


def primitive(p: IPoly, key=None) -> IPoly:
    """Divide out the content; make the leading coefficient positive."""
    if not p:
        return p
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            break
    if key is not None and p[max(p, key=key)] < 0:
        g = -g
    if g == 1:
        return p
    return {e: c // g for e, c in p.items()}


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(i <= j for i, j in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i if i > j else j for i, j in zip(a, b))


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i - j for i, j in zip(a, b))


def _axpy(h: IPoly, a: int, c: int, g: IPoly, shift: Exponent) -> IPoly:
    """``a*h - c*shift*g`` with integer scalars."""
    if a != 1:
        out = {e: a * v for e, v in h.items()}
    else:
        out = dict(h)
    for e, v in g.items():
        ne = tuple(i + j for i, j in zip(e, shift))
        w = out.get(ne, 0) - c * v
        if w:
            out[ne] = w
        else:
            del out[ne]
    return out


class _Elem:
    __slots__ = ("poly", "lm", "lc", "ecart", "deg", "sugar")

    def __init__(self, poly: IPoly, key, sugar: Optional[int] = None):
        self.poly = poly
        self.lm = max(poly, key=key)
        self.lc = poly[self.lm]
        self.deg = max(sum(e) for e in poly)
        self.ecart = self.deg - sum(self.lm)
        self.sugar = self.deg if sugar is None else max(sugar, self.deg)


def _reduce_step(h: IPoly, hlm: Exponent, g: _Elem) -> IPoly:
    c = h[hlm]
    d = gcd(c, g.lc)
    return _axpy(h, g.lc // d, c // d, g.poly, _sub(hlm, g.lm))


def _spoly(f: _Elem, g: _Elem) -> IPoly:
    L = _lcm(f.lm, g.lm)
    d = gcd(f.lc, g.lc)
    a = {e: v * (g.lc // d) for e, v in f.poly.items()}
    shift_f = _sub(L, f.lm)
    if any(shift_f):
        a = {tuple(i + j for i, j in zip(e, shift_f)): v for e, v in a.items()}
    return _axpy(a, 1, f.lc // d, g.poly, _sub(L, g.lm))


def _top_reduce(h: IPoly, basis: List[_Elem], key) -> IPoly:
    """Reduce the leading term until no basis element divides it."""
    while h:
        hlm = max(h, key=key)
        for g in basis:
            if _divides(g.lm, hlm):
                h = _reduce_step(h, hlm, g)
                break
        else:
            return h
    return h


def _nf_full(p: IPoly, basis: List[_Elem], key, skip: Optional[Exponent] = None) -> IPoly:
    """Reduce every term of ``p`` (except ``skip``) that some leading monomial divides.

    Reduction steps rescale the whole polynomial, so terms already known to
    be irreducible stay on a common scale with the rest.
    """
    done = set() if skip is None else {skip}
    while True:
        pending = [e for e in p if e not in done]
        if not pending:
            return p
        e = max(pending, key=key)
        for g in basis:
            if _divides(g.lm, e):
                p = _reduce_step(p, e, g)
                break
        else:
            done.add(e)


def _mora_nf(h: IPoly, T: List[_Elem], key, bound: Optional[int] = None) -> IPoly:
    """Weak normal form with ecart-guided reducer choice.

    With ``bound``, terms of degree >= bound are discarded (they lie in the
    localized ideal once the highest corner is known).
    """
    T = list(T)
    while h:
        hlm = max(h, key=key)
        best = None
        for idx, g in enumerate(T):
            if _divides(g.lm, hlm):
                rank = (g.ecart, key(g.lm), idx)
                if best is None or rank < best[0]:
                    best = (rank, g)
        if best is None:
            return h
        g = best[1]
        he = max(sum(e) for e in h) - sum(hlm)
        if g.ecart > he:
            T.append(_Elem(h, key))
        h = _reduce_step(h, hlm, g)
        if bound is not None:
            h = _truncate(h, bound)
        if h:
            h = primitive(h)
    return h


class _PairQueue:
    """Critical pairs ordered by sugar, then by lcm (smallest first)."""

    def __init__(self, key):
        self.key = key
        self.heap: list = []
        self.counter = 0
        self.alive: Dict[Tuple[int, int], bool] = {}

    def push(self, i: int, j: int, lcm: Exponent, sugar: int):
        self.counter += 1
        self.alive[(i, j)] = True
        heapq.heappush(self.heap, (sugar, self.key(lcm), self.counter, i, j))

    def pop(self):
        while self.heap:
            item = heapq.heappop(self.heap)
            if self.alive.pop((item[3], item[4]), False):
                return item[3], item[4]
        return None


def _update(basis: List[_Elem], live: List[bool], pairs: _PairQueue, new: int, key):
    """Gebauer-Moeller update for the newly added basis element ``new``."""
    h = basis[new]
    cand = []
    for i in range(new):
        if not live[i]:
            continue
        g = basis[i]
        L = _lcm(g.lm, h.lm)
        sugar = max(g.sugar + sum(L) - sum(g.lm), h.sugar + sum(L) - sum(h.lm))
        coprime = not any(a and b for a, b in zip(g.lm, h.lm))
        cand.append((i, L, sugar, coprime))
    # chain criterion among new pairs: drop (i,new) if some (j,new) has lcm
    # properly dividing lcm(i,new)
    kept = []
    for idx, (i, L, s, cop) in enumerate(cand):
        dominated = False
        for jdx, (j, L2, s2, cop2) in enumerate(cand):
            if jdx == idx:
                continue
            if _divides(L2, L) and (L2 != L or jdx < idx):
                dominated = True
                break
        if not dominated:
            kept.append((i, L, s, cop))
    # drop old pairs (i, j) whose lcm is divisible by lm(h) properly
    for (i, j) in list(pairs.alive):
        if not pairs.alive[(i, j)]:
            continue
        Lij = _lcm(basis[i].lm, basis[j].lm)
        if _divides(h.lm, Lij) and _lcm(basis[i].lm, h.lm) != Lij and _lcm(basis[j].lm, h.lm) != Lij:
            pairs.alive[(i, j)] = False
    for i, L, s, cop in kept:
        if cop:
            continue
        pairs.push(i, new, L, s)
    # interreduction of leading monomials: an old element whose lm is divisible
    # by the new lm is no longer needed as a reducer for the minimal basis
    for i in range(new):
        if live[i] and _divides(h.lm, basis[i].lm):
            live[i] = False


class _Corner(Exception):
    def __init__(self, degree: int, gens: List[IPoly]):
        self.degree = degree
        self.gens = gens


def _truncate(p: IPoly, bound: Optional[int]) -> IPoly:
    if bound is None:
        return p
    return {e: c for e, c in p.items() if sum(e) < bound}


def _corner_degree(lms: Iterable[Exponent], nvars: int) -> Optional[int]:
    """Smallest N with every monomial of degree N in the monomial ideal."""
    stairs = staircase(lms, nvars)
    if stairs is INFINITE:
        return None
    return max((sum(e) for e in stairs), default=-1) + 1


def _monomials_of_degree(n: int, nvars: int):
    if nvars == 1:
        yield (n,)
        return
    for k in range(n, -1, -1):
        for rest in _monomials_of_degree(n - k, nvars - 1):
            yield (k,) + rest


def _buchberger(gens: List[IPoly], key, local: bool) -> List[_Elem]:
    nvars = len(next(iter(next(g for g in gens if g)))) if any(gens) else 0
    if not local:
        return _buchberger_run(gens, key, False, None, nvars)
    bound = None
    while True:
        try:
            elems = _buchberger_run(gens, key, True, bound, nvars)
        except _Corner as corner:
            # m^N lies in the localized ideal: truncate everything below N
            bound = corner.degree
            gens = corner.gens
            continue
        if bound is None or any(not any(e.lm) for e in elems):
            return elems
        lms = [e.lm for e in elems]
        extra = [_Elem({m: 1}, key) for m in _monomials_of_degree(bound, nvars)
                 if not any(_divides(l, m) for l in lms)]
        return elems + extra


def _buchberger_run(gens: List[IPoly], key, local: bool, bound: Optional[int], nvars: int) -> List[_Elem]:
    basis: List[_Elem] = []
    live: List[bool] = []
    pairs = _PairQueue(key)
    corner_lms = list(_monomials_of_degree(bound, nvars)) if bound is not None else []

    def reduce(p: IPoly, reducers: List[_Elem]) -> IPoly:
        if local:
            return _mora_nf(_truncate(p, bound), reducers, key, bound)
        return _top_reduce(p, reducers, key)

    def check_corner():
        n = _corner_degree([b.lm for b, l in zip(basis, live) if l] + corner_lms, nvars)
        if n is not None and (bound is None or n < bound):
            kept = [k for k in (_truncate(b.poly, n) for b in basis) if k]
            raise _Corner(n, kept)

    def add(h: IPoly, sugar: Optional[int], check: bool = True) -> bool:
        elem = _Elem(primitive(h, key), key, sugar)
        basis.append(elem)
        live.append(True)
        _update(basis, live, pairs, len(basis) - 1, key)
        if not any(elem.lm):
            return True
        if local and check:
            check_corner()
        return False

    for g in gens:
        g = primitive(g, key)
        if not g:
            continue
        h = reduce(g, [b for b, l in zip(basis, live) if l])
        if h and add(h, None, check=False):
            return [basis[-1]]
    if local and basis:
        check_corner()
    while True:
        item = pairs.pop()
        if item is None:
            break
        i, j = item
        f, g = basis[i], basis[j]
        L = _lcm(f.lm, g.lm)
        sugar = max(f.sugar + sum(L) - sum(f.lm), g.sugar + sum(L) - sum(g.lm))
        # reducers include retired elements: they are still ideal members
        h = reduce(_spoly(f, g), basis)
        if h and add(h, sugar):
            return [basis[-1]]
    return [b for b, l in zip(basis, live) if l]


def _interreduce(elems: List[_Elem], key) -> List[IPoly]:
    """Reduced Groebner basis from a minimal one (global orders)."""
    out = []
    for idx, g in enumerate(elems):
        others = elems[:idx] + elems[idx + 1:]
        out.append(primitive(_nf_full(g.poly, others, key, skip=g.lm), key))
    return out


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StandardBasis:
    generators: Tuple[MultiPoly, ...]
    order: MonomialOrder
    leading_ideal: Tuple[Exponent, ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def leading_monomials(self) -> List[MultiPoly]:
        return [MultiPoly(self.order.roster, {e: 1}) for e in self.leading_ideal]


def _prepare(gens: Sequence[MultiPoly], order: MonomialOrder) -> List[IPoly]:
    out = []
    for g in gens:
        if not isinstance(g, MultiPoly):
            raise ContractError("generators must be MultiPoly")
        if set(v for e in g.terms for v, k in zip(g.vars, e) if k) - set(order.roster):
            raise ContractError(f"generator {g} uses variables outside {order.roster}")
        out.append(to_ipoly(g, order.roster))
    return out


def leading_monomial(f: MultiPoly, order: MonomialOrder) -> Exponent:
    return max(f.rename(order.roster).terms, key=order.key())


def standard_basis(gens: Sequence[MultiPoly], order: MonomialOrder) -> StandardBasis:
    """Minimal standard basis (reduced as well for global orders)."""
    if not gens:
        raise ContractError("need at least one generator")
    key = order.key()
    elems = _buchberger(_prepare(gens, order), key, order.is_local)
    if order.is_local:
        polys = [primitive(g.poly, key) for g in sorted(elems, key=lambda g: key(g.lm), reverse=True)]
    else:
        polys = sorted(_interreduce(elems, key), key=lambda p: key(max(p, key=key)), reverse=True)
    lms = tuple(max(p, key=key) for p in polys)
    return StandardBasis(tuple(from_ipoly(p, order.roster) for p in polys), order, lms)


def mora_normal_form(f: MultiPoly, G: Sequence[MultiPoly], order: MonomialOrder) -> MultiPoly:
    """Weak normal form of ``f`` against ``G`` (Mora's ecart rule).

    The result is determined up to a nonzero rational multiple; it is
    returned primitive.
    """
    key = order.key()
    T = [_Elem(p, key) for p in _prepare(G, order) if p]
    h = to_ipoly(f, order.roster) if f else {}
    if not h:
        return MultiPoly.zero(order.roster)
    if order.is_local:
        h = _mora_nf(h, T, key)
    else:
        h = _top_reduce(h, T, key)
    return from_ipoly(primitive(h, key), order.roster)


def reduce_full(f: MultiPoly, basis: StandardBasis) -> MultiPoly:
    """Complete reduction modulo a global Groebner basis, up to a scalar."""
    if basis.order.is_local:
        raise ContractError("full reduction needs a global order")
    key = basis.order.key()
    T = [_Elem(p, key) for p in _prepare(basis.generators, basis.order) if p]
    h = to_ipoly(f, basis.order.roster) if f else {}
    return from_ipoly(primitive(_nf_full(h, T, key), key), basis.order.roster)


def groebner(gens: Sequence[MultiPoly], order: MonomialOrder) -> StandardBasis:
    if order.is_local:
        raise ContractError("groebner() requires a global order; use standard_basis")
    return standard_basis(gens, order)


def staircase(leading: Iterable[Exponent], nvars: int):
    """Monomials outside the monomial ideal, or INFINITE."""
    leading = list(leading)
    if any(not any(e) for e in leading):
        return []
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in leading if e[i] and not any(e[j] for j in range(nvars) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    out = []
    frontier = [(0,) * nvars]
    seen = set(frontier)
    while frontier:
        nxt = []
        for m in frontier:
            if any(_divides(e, m) for e in leading):
                continue
            out.append(m)
            for i in range(nvars):
                cand = m[:i] + (m[i] + 1,) + m[i + 1:]
                if cand[i] < bounds[i] and cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(out, key=lambda e: (sum(e), e))


def quotient_dim_local(gens: Sequence[MultiPoly], order: MonomialOrder):
    """Dimension of the local quotient at the origin, or INFINITE."""
    if not order.is_local:
        raise ContractError("quotient_dim_local needs a local order")
    sb = standard_basis(gens, order)
    stairs = staircase(sb.leading_ideal, len(order.roster))
    return stairs if stairs is INFINITE else len(stairs)


def quotient_dim_monomial(leading: Iterable[Exponent], nvars: int):
    stairs = staircase(leading, nvars)
    return stairs if stairs is INFINITE else len(stairs)


def _origin_check(f: MultiPoly) -> None:
    if f.constant_term() != 0:
        raise ValueError("f must vanish at the origin")


def local_order(roster: Sequence[str] = ("x", "y")) -> MonomialOrder:
    return MonomialOrder("negdegrevlex", tuple(roster))


def tjurina_number(f: MultiPoly):
    _origin_check(f)
    gens = [f] + [f.derivative(v) for v in f.vars]
    return quotient_dim_local([g for g in gens if g], local_order(f.vars))


def milnor_number(f: MultiPoly):
    _origin_check(f)
    gens = [f.derivative(v) for v in f.vars]
    gens = [g for g in gens if g]
    if not gens:
        return INFINITE
    return quotient_dim_local(gens, local_order(f.vars))


# ---------------------------------------------------------------------------
# elimination, intersection, quotients (global orders)
# ---------------------------------------------------------------------------


def eliminate(gens: Sequence[MultiPoly], drop: Iterable[str], roster: Sequence[str] | None = None) -> List[MultiPoly]:
    """Generators of the ideal intersected with the ring without ``drop``."""
    if roster is None:
        roster = gens[0].vars
    order, keep = MonomialOrder.eliminating(roster, drop)
    k = order.block
    gb = standard_basis([g.rename(order.roster) for g in gens], order)
    out = []
    for g, lm in zip(gb.generators, gb.leading_ideal):
        if not any(lm[:k]):
            out.append(g.rename(keep))
    return out


def intersect(I: Sequence[MultiPoly], J: Sequence[MultiPoly]) -> List[MultiPoly]:
    """Intersection of two ideals via a fresh elimination variable."""
    roster = I[0].vars
    aux = "_z"
    while aux in roster:
        aux += "_"
    big = (aux,) + tuple(roster)
    z = MultiPoly.var(big, aux)
    one = MultiPoly.constant(big, 1)
    gens = [z * g.rename(big) for g in I] + [(one - z) * g.rename(big) for g in J]
    return [g.rename(roster) for g in eliminate(gens, [aux], big)]


def quotient_by(I: Sequence[MultiPoly], d: MultiPoly) -> List[MultiPoly]:
    """Colon ideal ``I : d`` for a single polynomial ``d``."""
    if d.is_zero():
        raise ContractError("colon by zero")
    return [g.exact_div(d) for g in intersect(I, [d])]
