"""Weyl algebra arithmetic and left Groebner bases.

Operators are stored normally ordered: every monomial is
``x^a * dx^b * c^k * h^m`` with all base variables to the left of all
derivations, then central variables, then the optional homogenization
variable ``h``.  In the homogenized algebra the commutation relation reads
``dx*x = x*dx + h^2``.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .poly import ContractError, Exponent, MultiPoly, ParseError, format_terms

IPoly = Dict[Exponent, int]

log = logging.getLogger(__name__)

TAIL_REDUCE = False
# Rewrite the tails of older basis elements whenever a new leading monomial
# divides one of their terms.  Over Z this keeps intermediate coefficients
# from compounding through chains of unreduced tails.
INTERREDUCE = True


class CoefficientGrowth(ArithmeticError):
    """A basis coefficient exceeded the ``max_bits`` cap of a Groebner run."""


@dataclass(frozen=True)
class WeylContext:
    """Variable roster of a Weyl algebra with central variables.

    ``shift = (s, dt)`` adds a pair with ``dt*s = (s - 1)*dt``, the relation
    between ``s = -dt*t`` and ``dt``; it sits after the central variables.
    """

    base: Tuple[str, ...]
    derivations: Tuple[str, ...] = ()
    central: Tuple[str, ...] = ()
    homog: Optional[str] = None
    shift: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "central", tuple(self.central))
        object.__setattr__(self, "shift", tuple(self.shift))
        if len(self.shift) not in (0, 2):
            raise ContractError("shift pair must name (s, dt)")
        derivs = tuple(self.derivations) or tuple("d" + v for v in self.base)
        object.__setattr__(self, "derivations", derivs)
        if len(derivs) != len(self.base):
            raise ContractError("base variables and derivations must pair up")
        names = self.names
        if len(set(names)) != len(names):
            raise ContractError(f"duplicate variable names in {names}")

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.base + self.derivations + self.central + self.shift + ((self.homog,) if self.homog else ())

    @property
    def width(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ContractError(f"unknown variable {name!r} in {self.names}") from None

    def with_homog(self, name: str = "h") -> "WeylContext":
        if self.shift:
            raise ContractError("homogenization is not supported with a shift pair")
        return WeylContext(self.base, self.derivations, self.central, name)

    def without_homog(self) -> "WeylContext":
        return WeylContext(self.base, self.derivations, self.central, None, self.shift)

    @property
    def layout(self) -> Tuple[int, int, int, int]:
        """``(n, h index, s index, dt index)`` with -1 for absent slots."""
        sp = 2 * self.n + len(self.central)
        return (self.n, self.width - 1 if self.homog else -1,
                sp if self.shift else -1, sp + 1 if self.shift else -1)


# ---------------------------------------------------------------------------
# multiplication kernel
# ---------------------------------------------------------------------------

_LEIBNIZ: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]] = {}


def _leibniz(b: int, a: int) -> Tuple[Tuple[int, int], ...]:
    """``d^b x^a = sum_k coeff_k x^(a-k) d^(b-k)`` as ``(k, coeff_k)``."""
    key = (b, a)
    got = _LEIBNIZ.get(key)
    if got is None:
        got = tuple((k, comb(b, k) * comb(a, k) * factorial(k)) for k in range(min(a, b) + 1))
        _LEIBNIZ[key] = got
    return got


def _mono_mul_terms(m: Exponent, e: Exponent, lay) -> List[Tuple[Exponent, int]]:
    """Normally ordered expansion of monomial ``m`` times monomial ``e``."""
    n, hpos, sp, dp = lay
    prod = [i + j for i, j in zip(m, e)]
    terms = [(prod, 1)]
    for i in range(n):
        b = m[n + i]
        a = e[i]
        if not b or not a:
            continue
        expansion = _leibniz(b, a)
        new = []
        for vec, c in terms:
            for k, w in expansion:
                if k == 0:
                    new.append((vec, c))
                    continue
                v = list(vec)
                v[i] -= k
                v[n + i] -= k
                if hpos >= 0:
                    v[hpos] += 2 * k
                new.append((v, c * w))
        terms = new
    if sp >= 0 and m[dp] and e[sp]:
        # dt^a s^k = (s - a)^k dt^a
        a, k = m[dp], e[sp]
        new = []
        for vec, c in terms:
            for j in range(k + 1):
                v = list(vec)
                v[sp] -= k - j
                new.append((v, c * comb(k, j) * (-a) ** (k - j)))
        terms = new
    return [(tuple(v), c) for v, c in terms]


def _noncomm(m: Exponent, lay) -> bool:
    n, _, _, dp = lay
    return any(m[n:2 * n]) or (dp >= 0 and m[dp] > 0)


def _mul_mono_poly(m: Exponent, g: IPoly, lay, scale: int = 1) -> IPoly:
    """``scale * m * g`` (left multiplication by a monomial)."""
    out: IPoly = {}
    if not _noncomm(m, lay):
        for e, c in g.items():
            out[tuple(i + j for i, j in zip(m, e))] = scale * c
        return out
    for e, c in g.items():
        for ne, w in _mono_mul_terms(m, e, lay):
            v = out.get(ne, 0) + scale * c * w
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
    return out


def _mul_poly(a: Mapping[Exponent, object], b: IPoly, lay) -> dict:
    out: dict = {}
    for m, c in a.items():
        for e, w in _mul_mono_poly(m, b, lay).items():
            out[e] = out.get(e, 0) + c * w
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class WeylElement:
    """Immutable normally ordered operator with rational coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: WeylContext, terms: Mapping[Exponent, object] = ()):
        self.ctx = ctx
        clean: Dict[Exponent, Fraction] = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != ctx.width:
                raise ContractError(f"exponent {e} does not fit {ctx.names}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, ctx: WeylContext, terms: Dict[Exponent, Fraction]) -> "WeylElement":
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, ctx: WeylContext, c=1) -> "WeylElement":
        return cls(ctx, {(0,) * ctx.width: c})

    @classmethod
    def var(cls, ctx: WeylContext, name: str) -> "WeylElement":
        i = ctx.index(name)
        return cls._raw(ctx, {tuple(int(j == i) for j in range(ctx.width)): Fraction(1)})

    @classmethod
    def from_poly(cls, ctx: WeylContext, f: MultiPoly) -> "WeylElement":
        """Embed a commutative polynomial in base and central variables."""
        idx = [ctx.index(v) for v in f.vars]
        for v in f.vars:
            if v in ctx.derivations or v == ctx.homog or v in ctx.shift[1:]:
                raise ContractError(f"{v!r} is not a commutative variable here")
        out = {}
        for e, c in f.terms.items():
            vec = [0] * ctx.width
            for i, k in zip(idx, e):
                vec[i] = k
            out[tuple(vec)] = c
        return cls._raw(ctx, out)

    @classmethod
    def parse(cls, ctx: WeylContext, text: str) -> "WeylElement":
        """Parse ``x*dx + y*dy - 6*s``; factors are multiplied left to right."""
        total = cls(ctx)
        for coeff, factors in _parse_ordered(text):
            term = cls.constant(ctx, coeff)
            for name, k in factors:
                if name not in ctx.names:
                    raise ParseError(f"unknown variable {name!r}")
                v = cls.var(ctx, name)
                for _ in range(k):
                    term = term * v
            total = total + term
        return total

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "WeylElement") -> None:
        if not isinstance(other, WeylElement) or other.ctx != self.ctx:
            raise ContractError("operands live in different Weyl contexts")

    def __add__(self, other: "WeylElement") -> "WeylElement":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return WeylElement._raw(self.ctx, out)

    def __neg__(self) -> "WeylElement":
        return WeylElement._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return WeylElement._raw(self.ctx, {e: c * other for e, c in self.terms.items() if c * other})
        return weyl_mul(self, other)

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        n2 = 2 * self.ctx.n
        return max((sum(e[:n2]) for e in self.terms), default=-1)

    def uses(self, names: Iterable[str]) -> bool:
        idx = [self.ctx.index(v) for v in names]
        return any(e[i] for e in self.terms for i in idx)

    def to_poly(self, vars: Sequence[str]) -> MultiPoly:
        """Commutative polynomial in ``vars`` (no derivations allowed)."""
        idx = [self.ctx.index(v) for v in vars]
        rest = [i for i in range(self.ctx.width) if i not in idx]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in rest):
                raise ContractError(f"term uses variables outside {tuple(vars)}")
            out[tuple(e[i] for i in idx)] = c
        return MultiPoly(tuple(vars), out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), it[0]))

    def __str__(self) -> str:
        return format_terms(self.ctx.names, self.sorted_terms())

    def __repr__(self) -> str:
        return f"WeylElement({str(self)!r})"


def _parse_ordered(text: str):
    """Like :func:`parse_terms` but keeps factor order."""
    from .poly import _FACTOR_RE, _split_terms

    out = []
    for sign, body in _split_terms(text):
        coeff = Fraction(sign)
        factors = []
        for factor in body.split("*"):
            factor = factor.strip()
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r}")
            if m.group(1) is not None:
                den = int(m.group(2)) if m.group(2) else 1
                if den == 0:
                    raise ParseError("zero denominator")
                coeff *= Fraction(int(m.group(1)), den)
            else:
                factors.append((m.group(3), int(m.group(4) or 1)))
        out.append((coeff, factors))
    return out


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    a._check(b)
    lay = a.ctx.layout
    out: Dict[Exponent, Fraction] = {}
    for m, c in a.terms.items():
        noncomm = _noncomm(m, lay)
        for e, w in b.terms.items():
            pieces = _mono_mul_terms(m, e, lay) if noncomm else [(tuple(i + j for i, j in zip(m, e)), 1)]
            for ne, k in pieces:
                out[ne] = out.get(ne, 0) + c * w * k
    return WeylElement._raw(a.ctx, {e: c for e, c in out.items() if c})


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------


def _drl(e: Exponent):
    return (sum(e),) + tuple(-k for k in reversed(e))


@dataclass(frozen=True)
class WeylOrder:
    """Term order given by integer weight rows refined by degrevlex.

    ``weights`` is a sequence of weight vectors over ``ctx.names``; monomials
    are compared by each row in turn, then by degree reverse lexicographic.
    A row with a negative entry on a base variable makes the order
    non-well-founded; Groebner bases for it are computed after
    homogenization (the homogenized comparison puts total degree first).
    """

    ctx: WeylContext
    weights: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in w) for w in self.weights)
        for w in rows:
            if len(w) != self.ctx.width:
                raise ContractError("weight row does not match context width")
        object.__setattr__(self, "weights", rows)

    @property
    def well_ordered(self) -> bool:
        for w in self.weights:
            if any(x < 0 for x in w):
                return False
            if any(x > 0 for x in w):
                return True
        return True

    def key(self) -> Callable[[Exponent], tuple]:
        rows = self.weights
        if not rows:
            return _drl
        return lambda e: tuple(sum(a * b for a, b in zip(w, e)) for w in rows) + _drl(e)

    def homogenized(self, hctx: WeylContext) -> "WeylOrder":
        width = hctx.width
        deg = tuple([1] * (2 * hctx.n) + [0] * len(hctx.central) + [1])
        rows = [deg] + [tuple(w) + (0,) * (width - len(w)) for w in self.weights]
        return WeylOrder(hctx, tuple(rows))


def elimination_order(ctx: WeylContext, drop: Iterable[str]) -> WeylOrder:
    idx = {ctx.index(v) for v in drop}
    row = tuple(1 if i in idx else 0 for i in range(ctx.width))
    return WeylOrder(ctx, (row,))


def weight_order(ctx: WeylContext, weights: Mapping[str, int]) -> WeylOrder:
    row = [0] * ctx.width
    for name, w in weights.items():
        row[ctx.index(name)] = w
    return WeylOrder(ctx, (tuple(row),))


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def _primitive(p: IPoly, key=None) -> IPoly:
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


def _to_ipoly(el: WeylElement) -> IPoly:
    den = 1
    for c in el.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive({e: int(c * den) for e, c in el.terms.items()})


class _WElem:
    __slots__ = ("poly", "lm", "lc", "sugar", "plm")

    def __init__(self, poly: IPoly, key, sugar: int):
        self.poly = poly
        self.lm = max(poly, key=key)
        self.lc = poly[self.lm]
        self.sugar = max(sugar, max(sum(e) for e in poly))
        self.plm = _pack(self.lm)


# Exponent vectors packed into one integer, 16 bits per slot.  With the top
# bit of every slot set in the minuend, a slot-wise comparison becomes one
# subtraction: a | b iff no guard bit is cleared by borrowing.
_SLOT = 16
_GUARDS: Dict[int, int] = {}


def _pack(e: Exponent) -> int:
    out = 0
    for k in reversed(e):
        if k >= 1 << (_SLOT - 1):
            raise OverflowError("exponent too large to pack")
        out = (out << _SLOT) | k
    return out


def _guard(n: int) -> int:
    g = _GUARDS.get(n)
    if g is None:
        g = _GUARDS[n] = sum(1 << (_SLOT * i + _SLOT - 1) for i in range(n))
    return g


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(i <= j for i, j in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i if i > j else j for i, j in zip(a, b))


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i - j for i, j in zip(a, b))


def _combine(h: IPoly, a: int, prod: IPoly) -> IPoly:
    """``a*h - prod``."""
    out = {e: a * v for e, v in h.items()} if a != 1 else dict(h)
    for e, v in prod.items():
        w = out.get(e, 0) - v
        if w:
            out[e] = w
        else:
            del out[e]
    return out


def _monic(p: IPoly, key, modulus: int) -> IPoly:
    if not p:
        return p
    inv = pow(p[max(p, key=key)], -1, modulus)
    return {e: c * inv % modulus for e, c in p.items()}


def to_modular(p: IPoly, modulus: int) -> IPoly:
    out = {e: c % modulus for e, c in p.items()}
    return {e: c for e, c in out.items() if c}


class _Engine:
    """Reduction kernel over Z (content-free) or over a prime field."""

    def __init__(self, ctx: WeylContext, key, modulus: Optional[int] = None):
        self.lay = ctx.layout
        self.key = key
        self.modulus = modulus
        self._neg: Dict[Exponent, tuple] = {}
        self._packed: Dict[Exponent, int] = {}
        self.guard = _guard(ctx.width)

    def normalize(self, h: IPoly) -> IPoly:
        if self.modulus:
            return _monic(h, self.key, self.modulus)
        return _primitive(h, self.key)

    def element(self, h: IPoly, sugar: int) -> _WElem:
        return _WElem(self.normalize(h), self.key, sugar)

    def neg(self, e: Exponent) -> tuple:
        k = self._neg.get(e)
        if k is None:
            k = self._neg[e] = tuple(-x for x in self.key(e))
        return k

    def _reduce(self, h: IPoly, basis: Sequence[_WElem], full: bool, skip: Optional[Exponent]) -> IPoly:
        """Reduce a private copy of ``h``; a lazy heap tracks its terms."""
        h = dict(h)
        neg = self.neg
        mod = self.modulus
        packed = self._packed
        G = self.guard
        reds = [(b.plm, b) for b in basis]
        heap = [(neg(e), e) for e in h]
        heapq.heapify(heap)
        done = set()
        steps = 0
        while heap:
            e = heap[0][1]
            if e not in h or e in done:
                heapq.heappop(heap)
                continue
            g = None
            if e != skip:
                pe = packed.get(e)
                if pe is None:
                    pe = packed[e] = _pack(e) | G
                for pl, cand in reds:
                    if (pe - pl) & G == G:
                        g = cand
                        break
            if g is None:
                if not full:
                    break
                done.add(e)
                heapq.heappop(heap)
                continue
            c = h[e]
            if mod:
                # basis elements are monic
                prod = _mul_mono_poly(_sub(e, g.lm), g.poly, self.lay, c)
                for k, v in prod.items():
                    w = h.get(k)
                    if w is None:
                        v = -v % mod
                        if v:
                            h[k] = v
                            heapq.heappush(heap, (neg(k), k))
                    else:
                        w = (w - v) % mod
                        if w:
                            h[k] = w
                        else:
                            del h[k]
                continue
            d = gcd(c, g.lc)
            a = g.lc // d
            prod = _mul_mono_poly(_sub(e, g.lm), g.poly, self.lay, c // d)
            if a != 1:
                for k in h:
                    h[k] *= a
            for k, v in prod.items():
                w = h.get(k)
                if w is None:
                    h[k] = -v
                    heapq.heappush(heap, (neg(k), k))
                elif w == v:
                    del h[k]
                else:
                    h[k] = w - v
            steps += 1
            if steps % 16 == 0:
                h = _primitive(h)
        return self.normalize(h) if h else h

    def top_reduce(self, h: IPoly, basis: Sequence[_WElem]) -> IPoly:
        return self._reduce(h, basis, False, None)

    def full_reduce(self, p: IPoly, basis: Sequence[_WElem], skip: Optional[Exponent] = None) -> IPoly:
        return self._reduce(p, basis, True, skip)

    def spoly(self, f: _WElem, g: _WElem) -> IPoly:
        L = _lcm(f.lm, g.lm)
        d = gcd(f.lc, g.lc)
        a = _mul_mono_poly(_sub(L, f.lm), f.poly, self.lay, g.lc // d)
        b = _mul_mono_poly(_sub(L, g.lm), g.poly, self.lay, f.lc // d)
        out = _combine(a, 1, b)
        return to_modular(out, self.modulus) if self.modulus else out


def _buchberger(gens: List[IPoly], ctx: WeylContext, key, stats: Optional[dict] = None,
                modulus: Optional[int] = None, tail: Optional[bool] = None,
                max_bits: Optional[int] = None) -> List[_WElem]:
    if tail is None:
        tail = TAIL_REDUCE
    interreduce = INTERREDUCE
    eng = _Engine(ctx, key, modulus)
    basis: List[_WElem] = []
    live: List[bool] = []
    heap: list = []
    alive: Dict[Tuple[int, int], bool] = {}
    counter = 0
    reducers: List[_WElem] = []

    def make(h: IPoly, sugar: int) -> _WElem:
        el = eng.element(h, sugar)
        if max_bits is not None and max(abs(c).bit_length() for c in el.poly.values()) > max_bits:
            raise CoefficientGrowth(f"basis coefficient above {max_bits} bits")
        return el

    def add(h: IPoly, sugar: int):
        nonlocal counter
        if tail or interreduce:
            h = eng.full_reduce(h, reducers)
        el = make(h, sugar)
        basis.append(el)
        live.append(True)
        new = len(basis) - 1
        cand = []
        for i in range(new):
            if live[i]:
                g = basis[i]
                L = _lcm(g.lm, el.lm)
                s = max(g.sugar + sum(L) - sum(g.lm), el.sugar + sum(L) - sum(el.lm))
                cand.append((i, L, s))
        # chain criterion on the new pairs
        kept = []
        for idx, (i, L, s) in enumerate(cand):
            if not any(_divides(L2, L) and (L2 != L or jdx < idx)
                       for jdx, (_, L2, _) in enumerate(cand) if jdx != idx):
                kept.append((i, L, s))
        # chain criterion on old pairs
        for (i, j), ok in list(alive.items()):
            if not ok:
                continue
            Lij = _lcm(basis[i].lm, basis[j].lm)
            if _divides(el.lm, Lij) and _lcm(basis[i].lm, el.lm) != Lij and _lcm(basis[j].lm, el.lm) != Lij:
                alive[(i, j)] = False
        for i, L, s in kept:
            counter += 1
            alive[(i, new)] = True
            heapq.heappush(heap, (s, key(L), counter, i, new))
        for i in range(new):
            if live[i] and _divides(el.lm, basis[i].lm):
                live[i] = False
        # reduce against live elements only, preferring short ones
        reducers[:] = sorted((b for b, l in zip(basis, live) if l), key=lambda b: len(b.poly))
        if interreduce:
            for i in range(new):
                b = basis[i]
                if live[i] and any(_divides(el.lm, e) for e in b.poly if e != b.lm):
                    basis[i] = make(eng.full_reduce(b.poly, reducers, skip=b.lm), b.sugar)
            reducers[:] = sorted((b for b, l in zip(basis, live) if l), key=lambda b: len(b.poly))
        return not any(el.lm)

    for g in gens:
        if modulus:
            g = to_modular(g, modulus)
        if not g:
            continue
        h = eng.top_reduce(eng.normalize(g), reducers)
        if h and add(h, max(sum(e) for e in g)):
            return [basis[-1]]
    npairs = 0
    while heap:
        s, _, _, i, j = heapq.heappop(heap)
        if not alive.pop((i, j), False):
            continue
        npairs += 1
        h = eng.top_reduce(eng.spoly(basis[i], basis[j]), reducers)
        if npairs % 50 == 0:
            log.debug("pairs=%d basis=%d queue=%d sugar=%d terms=%d", npairs, len(basis),
                      len(heap), s, len(h))
        if h and add(h, s):
            return [basis[-1]]
    if stats is not None:
        stats["pairs"] = stats.get("pairs", 0) + npairs
        stats["basis"] = len(basis)
    return [b for b, l in zip(basis, live) if l]


def _reduced(elems: List[_WElem], ctx: WeylContext, key, modulus: Optional[int] = None) -> List[IPoly]:
    eng = _Engine(ctx, key, modulus)
    elems = sorted(elems, key=lambda g: key(g.lm))
    out = []
    for idx, g in enumerate(elems):
        others = elems[:idx] + elems[idx + 1:]
        out.append(eng.full_reduce(g.poly, others, skip=g.lm))
    return out


def _elements(ctx: WeylContext, polys: Iterable[IPoly], key) -> List[WeylElement]:
    polys = sorted(polys, key=lambda p: key(max(p, key=key)))
    return [WeylElement._raw(ctx, {e: Fraction(c) for e, c in p.items()}) for p in polys]


def groebner_ipoly(gens: Sequence[IPoly], ctx: WeylContext, order: WeylOrder,
                   modulus: Optional[int] = None, reduced: bool = True,
                   stats: Optional[dict] = None) -> List[IPoly]:
    """Groebner basis on raw integer-coefficient polynomials.

    With ``modulus`` (a prime) the computation runs over that prime field and
    the output is monic with coefficients in ``range(modulus)``.
    """
    if not order.well_ordered:
        raise ContractError("raw interface needs a well-ordered term order")
    key = order.key()
    elems = _buchberger([dict(g) for g in gens], ctx, key, stats, modulus)
    polys = _reduced(elems, ctx, key, modulus) if reduced else [e.poly for e in elems]
    return sorted(polys, key=lambda p: key(max(p, key=key)))


def homogenize(el: WeylElement, hctx: WeylContext) -> WeylElement:
    """Make ``el`` homogeneous in total degree (base, derivations, h)."""
    n2 = 2 * el.ctx.n
    deg = el.total_degree()
    out = {}
    for e, c in el.terms.items():
        base = e if not el.ctx.homog else e[:-1]
        out[tuple(base) + (deg - sum(e[:n2]),)] = c
    return WeylElement._raw(hctx, out)


def dehomogenize(el: WeylElement, ctx: WeylContext) -> WeylElement:
    out: Dict[Exponent, Fraction] = {}
    for e, c in el.terms.items():
        k = e[:-1]
        out[k] = out.get(k, 0) + c
    return WeylElement._raw(ctx, {e: c for e, c in out.items() if c})


def left_groebner(gens: Sequence[WeylElement], order: Optional[WeylOrder] = None,
                  reduced: bool = True, stats: Optional[dict] = None,
                  max_bits: Optional[int] = None) -> List[WeylElement]:
    """Left Groebner basis of the left ideal generated by ``gens``.

    With ``max_bits`` set, the run stops with CoefficientGrowth as soon as a
    new basis element has an integer coefficient longer than that many bits.

    Non-well-founded weight orders are handled by homogenizing with a fresh
    variable ``h`` and dehomogenizing the result; the returned elements then
    form a Groebner basis with respect to the weight order in the sense that
    their initial forms generate the initial ideal.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ContractError("need at least one nonzero generator")
    ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise ContractError("generators live in different contexts")
    order = order or WeylOrder(ctx)
    if order.ctx != ctx:
        raise ContractError("order context mismatch")
    if order.well_ordered:
        key = order.key()
        elems = _buchberger([_to_ipoly(g) for g in gens], ctx, key, stats, max_bits=max_bits)
        polys = _reduced(elems, ctx, key) if reduced else [e.poly for e in elems]
        return _elements(ctx, polys, key)
    if ctx.homog:
        raise ContractError("a homogenized context cannot be homogenized again")
    hname = "h"
    while hname in ctx.names:
        hname += "_"
    hctx = ctx.with_homog(hname)
    horder = order.homogenized(hctx)
    key = horder.key()
    elems = _buchberger([_to_ipoly(homogenize(g, hctx)) for g in gens], hctx, key, stats,
                        max_bits=max_bits)
    polys = [e.poly for e in elems]
    out = []
    for p in polys:
        d = dehomogenize(WeylElement._raw(hctx, {e: Fraction(c) for e, c in p.items()}), ctx)
        if d:
            out.append(d)
    return out


def normal_form(f: WeylElement, basis: Sequence[WeylElement], order: Optional[WeylOrder] = None) -> WeylElement:
    """Full normal form of ``f`` modulo a Groebner basis, up to a scalar."""
    ctx = f.ctx
    order = order or WeylOrder(ctx)
    key = order.key()
    elems = [_WElem(_to_ipoly(b), key, 0) for b in basis if b]
    if not f:
        return f
    p = _Engine(ctx, key).full_reduce(_to_ipoly(f), elems)
    return WeylElement._raw(ctx, {e: Fraction(c) for e, c in p.items()})


def spairs_reduce_to_zero(basis: Sequence[WeylElement], order: Optional[WeylOrder] = None) -> bool:
    """Self-certification: every S-pair reduces to zero."""
    if not basis:
        return True
    ctx = basis[0].ctx
    order = order or WeylOrder(ctx)
    key = order.key()
    eng = _Engine(ctx, key)
    elems = [_WElem(_to_ipoly(b), key, 0) for b in basis if b]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if eng.top_reduce(eng.spoly(elems[i], elems[j]), elems):
                return False
    return True


def initial_form(g: WeylElement, w: Mapping[str, int] | Sequence[int]) -> WeylElement:
    """Sum of the terms of ``g`` of maximal weight."""
    if not g:
        raise ContractError("initial form of zero")
    ctx = g.ctx
    if isinstance(w, Mapping):
        vec = [0] * ctx.width
        for name, x in w.items():
            vec[ctx.index(name)] = x
    else:
        vec = list(w) + [0] * (ctx.width - len(w))
    weight = {e: sum(a * b for a, b in zip(vec, e)) for e in g.terms}
    top = max(weight.values())
    return WeylElement._raw(ctx, {e: c for e, c in g.terms.items() if weight[e] == top})


def eliminate_derivations(gens: Sequence[WeylElement], drop: Iterable[str],
                          stats: Optional[dict] = None) -> List[WeylElement]:
    """Basis elements free of ``drop`` under an order eliminating them."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ctx = gens[0].ctx
    drop = list(drop)
    for v in drop:
        if v not in ctx.derivations:
            raise ContractError(f"{v!r} is not a derivation")
    order = elimination_order(ctx, drop)
    gb = left_groebner(gens, order, stats=stats)
    return [g for g in gb if not g.uses(drop)]


def eliminate(gens: Sequence[WeylElement], drop: Iterable[str], stats: Optional[dict] = None) -> List[WeylElement]:
    """Like :func:`eliminate_derivations` for any variables (e.g. central ones)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    drop = list(drop)
    order = elimination_order(gens[0].ctx, drop)
    gb = left_groebner(gens, order, stats=stats)
    return [g for g in gb if not g.uses(drop)]
