from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from curvesing.poly import ContractError
from curvesing.puiseux import (
    Parametrization,
    characteristic_of,
    puiseux_characteristic,
    same_topological_type,
)
from curvesing.semigroup import CoprimePair, all_gaps, frobenius_number, gap_set, is_representable

PAIRS = [(p, q) for q in range(3, 31) for p in range(2, q) if gcd(p, q) == 1]


def test_representable_examples():
    assert is_representable(13, (4, 9))
    assert not is_representable(23, (4, 9))
    assert is_representable(0, (5, 6))
    with pytest.raises(ValueError):
        is_representable(-1, (4, 9))


def test_gap_sets_of_examples():
    assert gap_set((4, 9)).gaps == (10, 11, 14, 15, 19, 23)
    assert gap_set((5, 6)).gaps == (7, 8, 9, 13, 14, 19)
    assert gap_set((5, 7)).gaps == (8, 9, 11, 13, 16, 18, 23)
    assert gap_set((2, 3)).gaps == ()


def test_frobenius_examples():
    assert frobenius_number((4, 9)) == 23
    assert frobenius_number((2, 3)) == 1
    assert frobenius_number((5, 7)) == 23


def test_bad_pairs():
    for bad in [(4, 6), (9, 4), (1, 5)]:
        with pytest.raises(ValueError):
            CoprimePair(*bad)


@pytest.mark.parametrize("pair", PAIRS)
def test_semigroup_structure(pair):
    p, q = pair
    top = frobenius_number(pair)
    gaps = all_gaps(pair)
    assert len(gaps) == (p - 1) * (q - 1) // 2
    assert not gaps or max(gaps) == top
    brute = [n for n in range(1, top + 1) if not is_representable(n, pair)]
    assert gaps == brute
    for n in range(top + 1):
        assert is_representable(n, pair) != is_representable(top - n, pair)
    big = gap_set(pair)
    assert all(g > q for g in big)
    assert [n for n in range(q + 1, top + 1) if n not in big] == [
        n for n in range(q + 1, top + 1) if is_representable(n, pair)
    ]


# -- Puiseux ---------------------------------------------------------------


def test_characteristic_examples():
    assert characteristic_of(2, [3]).as_tuple() == (2, 3)
    assert characteristic_of(4, [9, 10]).as_tuple() == (4, 9)
    c = characteristic_of(4, [6, 7])
    assert c.as_tuple() == (4, 6, 7) and c.e == (2, 1)
    assert str(c) == "(4; 6, 7)"


def test_same_type_examples():
    a = characteristic_of(4, [9])
    assert same_topological_type(a, characteristic_of(4, [9]))
    assert not same_topological_type(a, characteristic_of(4, [6, 7]))
    assert same_topological_type(characteristic_of(4, [9, 23]), a)


def test_parse_parametrization():
    par = Parametrization.parse("t^4; t^9 + t^10")
    assert par.p == 4 and par.q == 9
    assert puiseux_characteristic(par).as_tuple() == (4, 9)


def test_non_primitive_rejected():
    with pytest.raises(ContractError):
        Parametrization(4, ((6, 1), (10, 1)))
    with pytest.raises(ContractError):
        Parametrization(4, ((9, 2),))


@pytest.mark.parametrize("pair", [pq for pq in PAIRS if pq[1] <= 20])
def test_gap_deformations_keep_type(pair):
    p, q = pair
    for r in gap_set(pair):
        assert characteristic_of(p, [q, r]).as_tuple() == (p, q)


@st.composite
def branches(draw):
    p = draw(st.sampled_from([4, 6, 8, 9, 12]))
    exps = sorted(draw(st.sets(st.integers(p + 1, 60), min_size=1, max_size=5)))
    g = p
    for e in exps:
        g = gcd(g, e)
    if g != 1:
        exps.append(draw(st.sampled_from([k for k in range(exps[-1] + 1, exps[-1] + 20) if gcd(g, k) == 1])))
    return p, exps


@settings(max_examples=150, deadline=None)
@given(branches(), st.integers(0, 80))
def test_inessential_terms_do_not_matter(branch, extra):
    p, exps = branch
    c = characteristic_of(p, exps)
    # e-sequence strictly decreasing, dividing, ending at 1
    prev = p
    for e in c.e:
        assert prev % e == 0 and e < prev
        prev = e
    assert c.e[-1] == 1
    # an exponent in the span of p and the essential exponents before it is inert
    new = extra + exps[0]
    if new in exps:
        return
    earlier = [p] + [r for r in c.r if r < new]
    g = 0
    for k in earlier:
        g = gcd(g, k)
    if new % g == 0:
        assert characteristic_of(p, sorted(exps + [new])).as_tuple() == c.as_tuple()
