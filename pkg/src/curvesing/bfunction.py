"""Bernstein-Sato polynomials of plane curves.

The global b-function comes from the annihilator of ``f^s``.  The
homogenize-and-eliminate construction in the Weyl algebra over ``(t, x, y)``
produces V-homogeneous generators, which are moved to weight zero and
rewritten in ``s = -dt*t``.  Adding ``f`` and eliminating the derivations
leaves a commutative ideal ``J`` in ``Q[x, y, s]``.  Everything after that is
commutative: ``J`` meets ``Q[s]`` in the global b-function, and colon ideals
against candidate divisors decide the local b-function at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .local_algebra import eliminate, quotient_by
from .poly import ContractError, FactoredB, MultiPoly, UniPoly, factor_rational_roots, unipoly_gcd
from .semigroup import _as_pair
from . import brieskorn, modp
from .weyl import (WeylContext, WeylElement, eliminate as weyl_eliminate, eliminate_derivations,
                   elimination_order, groebner_ipoly, weyl_mul)

__all__ = [
    "FactoredB",
    "PowerExpression",
    "BsRatio",
    "BFunctionError",
    "apply_to_fs",
    "bs_quasihomogeneous",
    "ann_fs",
    "bernstein_ideal",
    "global_bfunction",
    "local_bfunction",
    "local_bfunction_origin",
    "modular_bfunction",
    "ENGINES",
    "locality_test",
    "bs_ratio",
]


class BFunctionError(RuntimeError):
    """An internal consistency check of the b-function pipeline failed."""


@dataclass(frozen=True)
class PowerExpression:
    """``numerator * f^(s - shift)`` with a canonical (reduced) shift."""

    numerator: MultiPoly
    shift: int

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __str__(self) -> str:
        return f"({self.numerator})*f^(s-{self.shift})" if self.shift else f"({self.numerator})*f^s"


def _check_curve(f: MultiPoly) -> None:
    if f.degree() < 1:
        raise ContractError("f must be nonconstant")
    if "s" in f.vars:
        raise ContractError("'s' is reserved for the b-function parameter")


def _context(f: MultiPoly, central: Tuple[str, ...] = ("s",)) -> WeylContext:
    return WeylContext(tuple(f.vars), central=central)


def apply_to_fs(P: WeylElement, f: MultiPoly) -> PowerExpression:
    """Formal action of ``P`` in ``D[s]`` on ``f^s``."""
    ctx = P.ctx
    base = ctx.base
    if tuple(f.vars) != base or tuple(ctx.central) not in ((), ("s",)):
        raise ContractError("operator must live over the variables of f plus s")
    roster = base + ("s",)
    F = f.rename(roster)
    grads = [F.derivative(v) for v in base]
    s = MultiPoly.var(roster, "s")
    n = len(base)
    cache: Dict[Tuple[int, ...], Tuple[MultiPoly, int]] = {(0,) * n: (MultiPoly.constant(roster, 1), 0)}

    def derive(beta: Tuple[int, ...]) -> Tuple[MultiPoly, int]:
        got = cache.get(beta)
        if got is not None:
            return got
        i = max(k for k in range(n) if beta[k])
        prev = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
        g, k = derive(prev)
        out = (g.derivative(base[i]) * F + (s - k) * g * grads[i], k + 1)
        cache[beta] = out
        return out

    pieces = []
    for e, c in P.terms.items():
        alpha, beta = e[:n], e[n:2 * n]
        central = e[2 * n] if ctx.central else 0
        g, k = derive(tuple(beta))
        mono = MultiPoly(roster, {tuple(alpha) + (central,): c})
        pieces.append((mono * g, k))
    if not pieces:
        return PowerExpression(MultiPoly.zero(roster), 0)
    K = max(k for _, k in pieces)
    total = MultiPoly.zero(roster)
    for g, k in pieces:
        total = total + g * F ** (K - k) if K > k else total + g
    if total.is_zero():
        return PowerExpression(total, 0)
    while K > 0:
        try:
            total = total.exact_div(F)
        except ArithmeticError:
            break
        K -= 1
    return PowerExpression(total, K)


def bs_quasihomogeneous(pair) -> FactoredB:
    """Closed form for ``y^p - x^q``: ``(s+1) prod (s + i/p + j/q)``."""
    p, q = _as_pair(pair)
    roots: Dict[Fraction, int] = {Fraction(-1): 1}
    for i in range(1, p):
        for j in range(1, q):
            r = -(Fraction(i, p) + Fraction(j, q))
            roots[r] = roots.get(r, 0) + 1
    return FactoredB(roots)


# ---------------------------------------------------------------------------
# annihilator
# ---------------------------------------------------------------------------


def _falling(theta: MultiPoly, a: int) -> MultiPoly:
    out = MultiPoly.constant(theta.vars, 1)
    for i in range(a):
        out = out * (theta - i)
    return out


def _to_ds(G: WeylElement, target: WeylContext) -> WeylElement:
    """Move a V-homogeneous operator to weight zero and rewrite in ``s``."""
    big = G.ctx  # (t, x.., dt, dx..)
    n = big.n
    weights = {e[n] - e[0] for e in G.terms}
    if len(weights) != 1:
        raise BFunctionError(f"operator is not V-homogeneous: {G}")
    m = weights.pop()
    if m > 0:
        G = weyl_mul(WeylElement(big, {tuple([m] + [0] * (big.width - 1)): 1}), G)
    elif m < 0:
        shift = [0] * big.width
        shift[n] = -m
        G = weyl_mul(WeylElement(big, {tuple(shift): 1}), G)
    theta = MultiPoly(("s",), {(1,): -1, (0,): -1})
    out: Dict[Tuple[int, ...], Fraction] = {}
    tw = target.width
    for e, c in G.terms.items():
        a = e[0]
        if e[n] != a:
            raise BFunctionError("weight-zero conversion failed")
        rest_base = e[1:n]
        rest_der = e[n + 1:2 * n]
        for se, sc in _falling(theta, a).terms.items():
            key = tuple(rest_base) + tuple(rest_der) + (se[0],)
            if len(key) != tw:
                raise BFunctionError("context width mismatch")
            out[key] = out.get(key, 0) + c * sc
    return WeylElement(target, out)


def ann_fs(f: MultiPoly, method: str = "bm", stats: Optional[dict] = None) -> List[WeylElement]:
    """Generators of the annihilator of ``f^s`` in ``D[s]``.

    ``method="bm"`` eliminates ``dt`` from ``<s + f*dt, d_i + f_i*dt>`` in the
    algebra where ``dt*s = (s - 1)*dt``; ``method="vweight"`` runs the u,v
    homogenization in the Weyl algebra over ``(t, x, y)``.  Every generator
    is checked against :func:`apply_to_fs`.
    """
    _check_curve(f)
    names = tuple(f.vars)
    for reserved in ("t", "u", "v", "dt"):
        if reserved in names:
            raise ContractError(f"{reserved!r} is reserved for the annihilator construction")
    if method == "bm":
        raw = _ann_bm(f, stats)
    elif method == "vweight":
        raw = _ann_vweight(f, stats)
    else:
        raise ContractError(f"unknown method {method!r}")
    out = []
    seen = set()
    for P in raw:
        if not P or P in seen:
            continue
        seen.add(P)
        if not apply_to_fs(P, f).is_zero():
            raise BFunctionError(f"generator does not annihilate f^s: {P}")
        out.append(P)
    return out


def _ann_bm(f: MultiPoly, stats: Optional[dict]) -> List[WeylElement]:
    names = tuple(f.vars)
    ctx = WeylContext(names, shift=("s", "dt"))
    roster = names + ("s",)
    F = WeylElement.from_poly(ctx, f.rename(roster))
    s = WeylElement.var(ctx, "s")
    dt = WeylElement.var(ctx, "dt")
    gens = [s + weyl_mul(F, dt)]
    for x in names:
        fx = WeylElement.from_poly(ctx, f.derivative(x).rename(roster))
        gens.append(WeylElement.var(ctx, "d" + x) + weyl_mul(fx, dt))
    target = _context(f)
    out = []
    for G in weyl_eliminate(gens, ["dt"], stats=stats):
        out.append(WeylElement(target, {e[:-1]: c for e, c in G.terms.items()}))
    return out


def _ann_vweight(f: MultiPoly, stats: Optional[dict]) -> List[WeylElement]:
    names = tuple(f.vars)
    big = WeylContext(("t",) + names, central=("u", "v"))
    roster = ("t",) + names + ("u", "v")
    F = WeylElement.from_poly(big, f.rename(roster))
    t = WeylElement.var(big, "t")
    u = WeylElement.var(big, "u")
    v = WeylElement.var(big, "v")
    dt = WeylElement.var(big, "dt")
    gens = [t - u * F]
    for x in names:
        fx = WeylElement.from_poly(big, f.derivative(x).rename(roster))
        gens.append(WeylElement.var(big, "d" + x) + weyl_mul(u * fx, dt))
    gens.append(u * v - WeylElement.constant(big, 1))
    target = _context(f)
    plain = WeylContext(("t",) + names)
    out = []
    for G in weyl_eliminate(gens, ["u", "v"], stats=stats):
        G = WeylElement(plain, {e[:-2]: c for e, c in G.terms.items()})
        out.append(_to_ds(G, target))
    return out


# ---------------------------------------------------------------------------
# b-functions
# ---------------------------------------------------------------------------


def bernstein_ideal(f: MultiPoly, stats: Optional[dict] = None) -> List[MultiPoly]:
    """Generators of ``(Ann f^s + D[s] f)`` intersected with ``Q[x, y, s]``."""
    ann = ann_fs(f, stats=stats)
    ctx = _context(f)
    F = WeylElement.from_poly(ctx, f.rename(ctx.base + ("s",)))
    J = eliminate_derivations(ann + [F], ctx.derivations, stats=stats)
    roster = ctx.base + ("s",)
    return [g.to_poly(roster) for g in J]


def _s_generator(J: Sequence[MultiPoly]) -> UniPoly:
    roster = J[0].vars
    drop = [v for v in roster if v != "s"]
    elim = eliminate(list(J), drop, roster) if drop else list(J)
    b = UniPoly([0])
    for g in elim:
        coeffs = [Fraction(0)] * (g.degree() + 1)
        for e, c in g.terms.items():
            coeffs[e[-1]] = c
        b = unipoly_gcd(b, UniPoly(coeffs)) if b else UniPoly(coeffs).monic()
    if b.is_zero():
        raise BFunctionError("elimination ideal meets Q[s] trivially")
    return b.monic()


def global_bfunction(f: MultiPoly, stats: Optional[dict] = None) -> FactoredB:
    J = bernstein_ideal(f, stats)
    return factor_rational_roots(_s_generator(J))


def _as_poly(d: FactoredB, roster: Sequence[str]) -> MultiPoly:
    out = MultiPoly.constant(roster, 1)
    s = MultiPoly.var(roster, "s")
    for r, m in d.roots.items():
        out = out * (s - r) ** m
    return out


def locality_test(J: Sequence[MultiPoly], d: FactoredB) -> bool:
    """True iff some ``g`` with ``g(0) != 0`` has ``g*d(s)`` in ``J``."""
    roster = J[0].vars
    colon = quotient_by(list(J), _as_poly(d, roster))
    a_d = eliminate(colon, ["s"], roster)
    keep = [v for v in roster if v != "s"]
    for g in a_d:
        if g.rename(keep).constant_term() != 0:
            return True
    return False


def local_bfunction_origin(f: MultiPoly, stats: Optional[dict] = None) -> FactoredB:
    """Local b-function of ``f`` at the origin."""
    _check_curve(f)
    if f.constant_term() != 0:
        raise ContractError("f must vanish at the origin")
    J = bernstein_ideal(f, stats)
    b = factor_rational_roots(_s_generator(J))
    full = dict(b.roots)
    local: Dict[Fraction, int] = {}
    for c in sorted(full, key=lambda r: (abs(r), r)):
        m = full[c]
        while m > 0:
            trial = dict(full)
            trial[c] = m - 1
            if not locality_test(J, FactoredB(trial)):
                break
            m -= 1
        local[c] = m
    result = FactoredB(local)
    if not locality_test(J, result):
        raise BFunctionError("assembled local b-function fails its locality test")
    return result


class BsRatio(NamedTuple):
    gained: FactoredB
    lost: FactoredB

    @property
    def trivial(self) -> bool:
        return not self.gained.roots and not self.lost.roots


def bs_ratio(a: FactoredB, b: FactoredB) -> BsRatio:
    """Split ``a / b`` into the factors gained and lost relative to ``b``."""
    gained, lost = {}, {}
    for r in set(a.roots) | set(b.roots):
        d = a.roots.get(r, 0) - b.roots.get(r, 0)
        if d > 0:
            gained[r] = d
        elif d < 0:
            lost[r] = -d
    return BsRatio(FactoredB(gained, 1, a.var), FactoredB(lost, 1, a.var))


# ---------------------------------------------------------------------------
# modular pipeline
# ---------------------------------------------------------------------------


def to_ipoly_local(f: MultiPoly) -> Dict[Tuple[int, ...], int]:
    g = f.primitive()
    return {e: int(c) for e, c in g.terms.items()}


class _ModularJ:
    """``J = (Ann f^s + D[s] f) ∩ F_p[x, y, s]`` for one prime ``p``."""

    def __init__(self, f: MultiPoly, p: int, stats: Optional[dict] = None):
        names = tuple(f.vars)
        n = len(names)
        self.p = p
        self.names = names
        f = f.primitive()
        F = to_ipoly_local(f)
        zeros = (0,) * n
        bm = WeylContext(names, shift=("s", "dt"))
        gens = [{zeros + zeros + (1, 0): 1}]
        for a, c in F.items():
            gens[0][a + zeros + (0, 1)] = c
        for i, x in enumerate(names):
            d = tuple(int(j == i) for j in range(n))
            g = {zeros + d + (0, 0): 1}
            for a, c in f.derivative(x).terms.items():
                g[a + zeros + (0, 1)] = int(c)
            gens.append(g)
        ann = groebner_ipoly(gens, bm, elimination_order(bm, ["dt"]), p, stats=stats)
        ann = [{e[:-1]: c for e, c in g.items()} for g in ann if all(e[-1] == 0 for e in g)]
        target = _context(f)
        ann.append({a + zeros + (0,): c for a, c in F.items()})
        J = groebner_ipoly(ann, target, elimination_order(target, target.derivations), p, stats=stats)
        J = [g for g in J if all(not any(e[n:2 * n]) for e in g)]
        self.J = [{e[:n] + (e[2 * n],): c for e, c in g.items()} for g in J]
        self.comm = WeylContext((), central=names + ("s",))

    def s_generator(self) -> List[int]:
        n = len(self.names)
        G = groebner_ipoly(self.J, self.comm, elimination_order(self.comm, self.names), self.p)
        uni = [g for g in G if all(not any(e[:n]) for e in g)]
        if len(uni) != 1:
            raise BFunctionError("expected a single generator of the s-elimination ideal")
        g = uni[0]
        out = [0] * (max(e[-1] for e in g) + 1)
        for e, c in g.items():
            out[e[-1]] = c
        return modp.monic(out, self.p)

    def locality(self, d: Sequence[int]) -> bool:
        """Modular analogue of :func:`locality_test` for ``d`` given mod ``p``."""
        p, n = self.p, len(self.names)
        aux = WeylContext((), central=("_z",) + self.names + ("s",))
        gens = [{(1,) + e: c for e, c in g.items()} for g in self.J]
        dz = {}
        for k, c in enumerate(d):
            if c:
                dz[(0,) + (0,) * n + (k,)] = c
                dz[(1,) + (0,) * n + (k,)] = -c % p
        gens.append(dz)
        inter = groebner_ipoly(gens, aux, elimination_order(aux, ["_z"]), p)
        colon = []
        for g in inter:
            if any(e[0] for e in g):
                continue
            colon.append(_divide_by_univariate({e[1:]: c for e, c in g.items()}, d, p))
        elim = groebner_ipoly(colon, self.comm, elimination_order(self.comm, ["s"]), p)
        zero = (0,) * (n + 1)
        return any(g.get(zero, 0) for g in elim if all(e[-1] == 0 for e in g))


def _divide_by_univariate(h: Dict[Tuple[int, ...], int], d: Sequence[int], p: int):
    """Exact quotient of ``h`` by a monic polynomial ``d`` in the last variable."""
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for e, c in h.items():
        row = groups.setdefault(e[:-1], [])
        if len(row) <= e[-1]:
            row.extend([0] * (e[-1] + 1 - len(row)))
        row[e[-1]] = c
    out = {}
    for a, row in groups.items():
        q, r = modp.divmod_poly(row, d, p)
        if r:
            raise BFunctionError("colon element is not divisible by the test divisor")
        for k, c in enumerate(q):
            if c:
                out[a + (k,)] = c
    return out


def _roots_from_modular(b: Sequence[int], p: int) -> Dict[Fraction, int]:
    roots = modp.roots_mod_p(b, p)
    if sum(roots.values()) != len(b) - 1:
        raise BFunctionError("b-function does not split over the prime field")
    out = {}
    for r, m in roots.items():
        q = modp.rational_reconstruction(r, p)
        if q is None:
            raise BFunctionError("rational reconstruction of a root failed")
        out[q] = m
    return out


def _local_mod_p(f: MultiPoly, p: int, local: bool, stats: Optional[dict]) -> FactoredB:
    M = _ModularJ(f, p, stats)
    full = _roots_from_modular(M.s_generator(), p)
    if not local:
        return FactoredB(full)

    def poly(roots: Dict[Fraction, int]):
        out = [1]
        for r, m in roots.items():
            for _ in range(m):
                out = modp.mul(out, [modp.from_fraction(-r, p), 1], p)
        return out

    result: Dict[Fraction, int] = {}
    for c in sorted(full, key=lambda r: (abs(r), r)):
        m = full[c]
        while m > 0:
            trial = dict(full)
            trial[c] = m - 1
            if not M.locality(poly(trial)):
                break
            m -= 1
        result[c] = m
    if not M.locality(poly(result)):
        raise BFunctionError("assembled local b-function fails its locality test")
    return FactoredB(result)


def modular_bfunction(f: MultiPoly, local: bool = True, primes: int = 2,
                      stats: Optional[dict] = None) -> FactoredB:
    """b-function computed over prime fields and lifted by reconstruction.

    Runs the whole pipeline modulo ``primes`` distinct primes and requires
    every run to agree; primes that hit a zero denominator are skipped.
    This is a Monte Carlo method: agreement makes an error very unlikely
    but is not a proof.
    """
    _check_curve(f)
    if local and f.constant_term() != 0:
        raise ContractError("f must vanish at the origin")
    found: List[FactoredB] = []
    for p in modp.PRIMES:
        try:
            found.append(_local_mod_p(f, p, local, stats))
        except (ZeroDivisionError, BFunctionError):
            continue
        if len(found) == primes:
            break
    if len(found) < primes:
        raise BFunctionError("not enough good primes for the modular computation")
    if any(b != found[0] for b in found[1:]):
        raise BFunctionError("modular runs disagree: " + ", ".join(b.format() for b in found))
    return found[0]


ENGINES = ("auto", "brieskorn", "exact", "modular")


def local_bfunction(f: MultiPoly, engine: str = "auto", stats: Optional[dict] = None) -> FactoredB:
    """Local b-function at the origin by the chosen engine.

    ``brieskorn`` works on the Brieskorn lattice and needs ``f`` to be a
    Brieskorn-Pham binomial plus higher-weight terms; ``exact`` and
    ``modular`` run the D-module pipeline.  ``auto`` takes the Brieskorn
    lattice when it applies and the exact pipeline otherwise.
    """
    if engine not in ENGINES:
        raise ContractError(f"unknown engine {engine!r}")
    if engine in ("auto", "brieskorn"):
        _check_curve(f)
        if f.constant_term() != 0:
            raise ContractError("f must vanish at the origin")
        try:
            return brieskorn.brieskorn_bfunction(f)
        except brieskorn.NotSemiQuasiHomogeneous:
            if engine == "brieskorn":
                raise
    if engine == "modular":
        return modular_bfunction(f, local=True, stats=stats)
    return local_bfunction_origin(f, stats)
