"""Exact polynomial arithmetic over the rationals.

A :class:`MultiPoly` is a sparse map from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients over an explicit variable roster.
A :class:`UniPoly` is a dense, ascending coefficient vector in one variable.

Text format (parse and print round-trip exactly)::

    y^4 - 2*x^5*y^2 - 4*x^7*y - x^9 + x^10

Terms are printed in ascending graded-lex order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Rational = Fraction
Exponent = Tuple[int, ...]


class ContractError(ValueError):
    """Raised when operands violate an operation's preconditions."""


class ParseError(ValueError):
    """Raised on malformed polynomial text."""


class NonLinearRemainder(ArithmeticError):
    """Rational-root deflation left a factor without rational roots."""

    def __init__(self, remainder: "UniPoly"):
        super().__init__(f"factor without rational roots: {remainder}")
        self.remainder = remainder


def grlex_key(e: Exponent) -> Tuple[int, Exponent]:
    return (sum(e), e)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(rf"^(?:(\d+)(?:/(\d+))?|({_IDENT})(?:\^(\d+))?)$")


def _split_terms(text: str) -> Iterator[Tuple[int, str]]:
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or not m.group(2).strip():
            raise ParseError(f"cannot parse near {text[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ParseError(f"missing operator near {body!r}")
        yield (-1 if sign == "-" else 1), body
        first = False
        pos = m.end()


def parse_terms(text: str) -> Dict[str, object]:
    """Parse ``text`` into a list of ``(coefficient, {var: exp})`` pairs."""
    out = []
    for sign, body in _split_terms(text):
        coeff = Fraction(sign)
        powers: Dict[str, int] = {}
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
                powers[m.group(3)] = powers.get(m.group(3), 0) + int(m.group(4) or 1)
        out.append((coeff, powers))
    return out


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(names: Sequence[str], e: Exponent) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_terms(names: Sequence[str], items: Iterable[Tuple[Exponent, Fraction]]) -> str:
    """Render (exponent, coefficient) pairs in the given order."""
    chunks = []
    for e, c in items:
        mono = format_monomial(names, e)
        mag = abs(c)
        if not mono:
            body = format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coeff(mag)}*{mono}"
        if not chunks:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(("- " if c < 0 else "+ ") + body)
    return " ".join(chunks) if chunks else "0"


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, object] = ()):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: Dict[Exponent, Fraction] = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != n:
                raise ContractError(f"exponent {e} does not match roster {self.vars}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def _raw(cls, vars: Tuple[str, ...], terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def constant(cls, vars: Sequence[str], c) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw(tuple(vars), {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        vars = tuple(vars)
        if name not in vars:
            raise ContractError(f"unknown variable {name!r}")
        e = tuple(int(v == name) for v in vars)
        return cls._raw(vars, {e: Fraction(1)})

    @classmethod
    def parse(cls, text: str, vars: Sequence[str] | None = None) -> "MultiPoly":
        """Parse the text format; ``vars`` defaults to the sorted names seen."""
        parsed = parse_terms(text)
        seen = sorted({v for _, p in parsed for v in p})
        if vars is None:
            vars = seen
        vars = tuple(vars)
        unknown = set(seen) - set(vars)
        if unknown:
            raise ParseError(f"variables {sorted(unknown)} not in roster {vars}")
        terms: Dict[Exponent, Fraction] = {}
        for c, p in parsed:
            e = tuple(p.get(v, 0) for v in vars)
            terms[e] = terms.get(e, 0) + c
        return cls(vars, terms)

    # inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def coeff_of(self, **powers: int) -> Fraction:
        return self.coeff(tuple(powers.get(v, 0) for v in self.vars))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.vars))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def sorted_terms(self, reverse: bool = False):
        return sorted(self.terms.items(), key=lambda it: grlex_key(it[0]), reverse=reverse)

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ContractError(f"unknown variable {var!r} for roster {self.vars}") from None

    def _check(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise ContractError(f"expected MultiPoly, got {type(other).__name__}")
        if other.vars != self.vars:
            raise ContractError(f"roster mismatch: {self.vars} vs {other.vars}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.vars, other)
        self._check(other)
        return other

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return MultiPoly.zero(self.vars)
            return MultiPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._raw(self.vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ContractError("negative power")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def scale_to_integer(self) -> Tuple[Fraction, "MultiPoly"]:
        """Return ``(c, g)`` with ``self == c*g`` and ``g`` integral and primitive."""
        if not self.terms:
            return Fraction(1), self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.terms.values()]
        cont = 0
        for v in ints:
            cont = gcd(cont, v)
        c = Fraction(cont, den)
        return c, MultiPoly._raw(self.vars, {e: v / c for e, v in self.terms.items()})

    def primitive(self) -> "MultiPoly":
        return self.scale_to_integer()[1]

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient ``self / other``; raises ArithmeticError if inexact."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        q, r = divmod_lex(self.terms, other.terms)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return MultiPoly._raw(self.vars, q)

    # calculus / composition ---------------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self._index(var)
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return MultiPoly._raw(self.vars, out)

    def substitute(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Compose: replace each bound variable by its image polynomial.

        All images share one target roster; unbound variables must be in it.
        """
        for name in bindings:
            self._index(name)
        images = list(bindings.values())
        if images:
            target = images[0].vars
            for img in images[1:]:
                if img.vars != target:
                    raise ContractError("substitution images have different rosters")
        else:
            target = self.vars
        images_by_var = []
        for v in self.vars:
            if v in bindings:
                images_by_var.append(bindings[v])
            elif v in target:
                images_by_var.append(MultiPoly.var(target, v))
            else:
                raise ContractError(f"variable {v!r} unbound and absent from target roster")
        power_cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = images_by_var[i] ** k
            return power_cache[key]

        result: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term.terms.items():
                result[te] = result.get(te, 0) + tc
        return MultiPoly._raw(target, {e: c for e, c in result.items() if c})

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        vals = [Fraction(values[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def rename(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-embed into a roster containing all variables this one uses."""
        vars = tuple(vars)
        used = {v for e in self.terms for v, k in zip(self.vars, e) if k}
        missing = used - set(vars)
        if missing:
            raise ContractError(f"variables {sorted(missing)} missing from {vars}")
        idx = [self.vars.index(v) if v in self.vars else None for v in vars]
        out = {tuple(e[i] if i is not None else 0 for i in idx): c for e, c in self.terms.items()}
        return MultiPoly._raw(vars, out)

    # printing -------------------------------------------------------------

    def __str__(self) -> str:
        return format_terms(self.vars, self.sorted_terms())

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars!r}, {str(self)!r})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if not isinstance(a, MultiPoly) or not isinstance(b, MultiPoly):
        raise ContractError("poly_arith expects MultiPoly operands")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ContractError(f"unknown op {op!r}")


def divmod_lex(a: Mapping[Exponent, Fraction], b: Mapping[Exponent, Fraction]):
    """Multivariate division by a single divisor using the lex leading term."""
    lead = max(b)
    lc = b[lead]
    rest = [(e, c) for e, c in b.items() if e != lead]
    rem = dict(a)
    quot: Dict[Exponent, Fraction] = {}
    out_rem: Dict[Exponent, Fraction] = {}
    while rem:
        e = max(rem)
        c = rem.pop(e)
        if all(i >= j for i, j in zip(e, lead)):
            shift = tuple(i - j for i, j in zip(e, lead))
            qc = Fraction(c) / lc
            quot[shift] = qc
            for be, bc in rest:
                ne = tuple(i + j for i, j in zip(be, shift))
                v = rem.get(ne, 0) - qc * bc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        else:
            out_rem[e] = c
    return quot, out_rem


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Immutable dense polynomial in a single variable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[object] = (), var: str = "s"):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_roots(cls, roots: Mapping[Fraction, int], var: str = "s", lead=1) -> "UniPoly":
        """``lead * prod (var - root)^mult``."""
        p = cls([lead], var)
        for root, mult in sorted(roots.items()):
            for _ in range(mult):
                p = p * cls([-Fraction(root), 1], var)
        return p

    @classmethod
    def parse(cls, text: str, var: str = "s") -> "UniPoly":
        mp = MultiPoly.parse(text, [var])
        if mp.is_zero():
            return cls([], var)
        cs = [Fraction(0)] * (mp.degree() + 1)
        for (k,), c in mp.terms.items():
            cs[k] = c
        return cls(cs, var)

    def to_multipoly(self, vars: Sequence[str] | None = None) -> MultiPoly:
        mp = MultiPoly((self.var,), {(k,): c for k, c in enumerate(self.coeffs) if c})
        return mp if vars is None else mp.rename(vars)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.var == other.var or not self.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _same(self, other: "UniPoly") -> None:
        if other.var != self.var:
            raise ContractError(f"variable mismatch {self.var} vs {other.var}")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)], self.var)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.var)
        self._same(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return UniPoly([c / lc for c in self.coeffs], self.var)

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def divrem(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        self._same(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.coeffs[-1]
        if len(rem) - 1 < db:
            return UniPoly([], self.var), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lb
            quot[k - db] = q
            for j, bc in enumerate(other.coeffs):
                rem[k - db + j] -= q * bc
        return UniPoly(quot, self.var), UniPoly(rem[:db], self.var)

    def __str__(self) -> str:
        items = [((k,), c) for k, c in enumerate(self.coeffs) if c]
        return format_terms((self.var,), items)

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"


def unipoly_divrem(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly]:
    return a.divrem(b)


def unipoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ContractError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
    return a.monic()


# ---------------------------------------------------------------------------
# rational-root factorization
# ---------------------------------------------------------------------------


def _integer_form(p: UniPoly) -> list:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    cont = 0
    for v in ints:
        cont = gcd(cont, v)
    return [v // cont for v in ints]


def _sign_at(ints: Sequence[int], x: Fraction) -> int:
    # sign of sum ints[k] x^k, evaluated on the cleared numerator
    n, d = x.numerator, x.denominator
    deg = len(ints) - 1
    acc = 0
    for k, c in enumerate(ints):
        acc += c * n ** k * d ** (deg - k)
    return (acc > 0) - (acc < 0)


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction with the smallest denominator in the closed interval [lo, hi]."""
    # Stern-Brocot descent
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -_simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return lo
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo, hi in (fl, fl+1)
    inner = _simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def _sturm_chain(ints: Sequence[int]) -> list:
    p0 = UniPoly(ints)
    chain = [p0, p0.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2].divrem(chain[-1])[1]
        if r.is_zero():
            break
        chain.append(UniPoly(_integer_form(-r)))
    return [_integer_form(p) if p.degree > 0 else [(p.lead > 0) - (p.lead < 0)] for p in chain]


def _variations(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    signs = [_sign_at(p, x) for p in chain]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _rational_roots_squarefree(ints: Sequence[int]) -> list:
    """All rational roots of a squarefree primitive integer polynomial.

    Real roots are isolated exactly with a Sturm chain, then each isolating
    interval is narrowed until its simplest fraction is a root or the width
    rules a rational root out (two fractions with denominators <= L differ by
    at least 1/L^2, L the leading coefficient).
    """
    deg = len(ints) - 1
    if deg < 1:
        return []
    lead = abs(ints[-1])
    bound = 1 + Fraction(max(abs(c) for c in ints[:-1]), lead)
    chain = _sturm_chain(ints)
    limit = Fraction(1, 4 * lead * lead)
    roots = []

    def search(lo: Fraction, hi: Fraction, vlo: int, vhi: int):
        count = vlo - vhi  # roots in (lo, hi]
        if count == 0:
            return
        if count > 1:
            mid = (lo + hi) / 2
            vmid = _variations(chain, mid)
            # negative side first
            search(lo, mid, vlo, vmid)
            search(mid, hi, vmid, vhi)
            return
        while True:
            cand = _simplest_between(lo, hi)
            if cand != lo and _sign_at(ints, cand) == 0:
                roots.append(cand)
                return
            if hi - lo < limit:
                return
            mid = (lo + hi) / 2
            vmid = _variations(chain, mid)
            if vlo - vmid == 1:
                hi, vhi = mid, vmid
            else:
                lo, vlo = mid, vmid

    lo, hi = -bound, bound
    search(lo, hi, _variations(chain, lo), _variations(chain, hi))
    return roots


def factor_rational_roots(b: UniPoly) -> "FactoredB":
    """Split ``b`` into a constant times monic linear rational factors."""
    if b.is_zero():
        raise ContractError("cannot factor the zero polynomial")
    squarefree = b.divrem(unipoly_gcd(b, b.derivative()))[0] if b.degree > 0 else b
    candidates = _rational_roots_squarefree(_integer_form(squarefree))
    candidates.sort(key=lambda r: (r >= 0, abs(r)))
    roots: Dict[Fraction, int] = {}
    rest = b
    for r in candidates:
        lin = UniPoly([-r, 1], b.var)
        while rest.degree >= 1:
            q, rem = rest.divrem(lin)
            if not rem.is_zero():
                break
            roots[r] = roots.get(r, 0) + 1
            rest = q
    if rest.degree >= 1:
        raise NonLinearRemainder(rest)
    return FactoredB(roots, rest.lead, b.var)


class FactoredB:
    """``constant * prod (s - root)^mult`` with rational roots."""

    __slots__ = ("roots", "constant", "var")

    def __init__(self, roots: Mapping[object, int], constant=1, var: str = "s"):
        self.roots = {Fraction(r): int(m) for r, m in roots.items() if int(m) > 0}
        self.constant = Fraction(constant)
        self.var = var

    @classmethod
    def from_factors(cls, factors: Iterable[Tuple[int, int]], var: str = "s") -> "FactoredB":
        """Monic product of linear factors given as ``(a, c)`` for ``a*s + c``."""
        roots: Dict[Fraction, int] = {}
        for a, c in factors:
            r = Fraction(-c, a)
            roots[r] = roots.get(r, 0) + 1
        return cls(roots, 1, var)

    @property
    def degree(self) -> int:
        return sum(self.roots.values())

    def expand(self) -> UniPoly:
        return UniPoly.from_roots(self.roots, self.var, self.constant)

    def monic(self) -> "FactoredB":
        return FactoredB(self.roots, 1, self.var)

    def divides(self, other: "FactoredB") -> bool:
        return all(other.roots.get(r, 0) >= m for r, m in self.roots.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredB):
            return NotImplemented
        return self.roots == other.roots and self.constant == other.constant

    def __hash__(self) -> int:
        return hash((frozenset(self.roots.items()), self.constant))

    def sorted_roots(self) -> list:
        return sorted(self.roots.items(), key=lambda it: (abs(it[0]), it[0]))

    def linear_factors(self) -> list:
        """``(a, c, mult)`` with ``a*s + c`` the integer-cleared factor."""
        out = []
        for r, m in self.sorted_roots():
            out.append((r.denominator, -r.numerator, m))
        return out

    def format(self) -> str:
        """Product of integer-cleared factors such as ``(36s+13)(36s+17)``."""
        if not self.roots:
            return "1"
        s = self.var
        parts = []
        for a, c, m in self.linear_factors():
            lin = (f"{a}{s}" if a != 1 else s) + (f"+{c}" if c > 0 else (f"-{-c}" if c < 0 else ""))
            parts.append(f"({lin})" + (f"^{m}" if m > 1 else ""))
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FactoredB({self.format()!r})"
