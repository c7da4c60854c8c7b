import functools
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from extalg import (LinearMap, Multivector, Subspace, clifford, grade_profile, hodge_right,
                    inner_space, is_balanced, is_blade, is_inner_balanced, is_outer_balanced,
                    lcontr, outer_space, outermorphism_apply, wedge)
from extalg.errors import DomainError
from extalg.decompose import exterior_basis
from extalg.spaces import blade_space, is_pperp
from helpers import blades, multivectors, mv, nonzero_blades, tally

N = 5
EX = settings(max_examples=200)

M29 = "e134 - e145 + e345 + e1235"
M210 = "e123 + 2*e145 - e146"


# -- examples ----------------------------------------------------------------

def test_inner_space_examples():
    assert inner_space(mv(M29, 5)) == Subspace(5, [(1, 0, -1, 0, 0), (0, 0, 1, 0, 1)])
    assert inner_space(mv("e12+e34", 4)).dim == 0
    b = mv("e12+e13+e23", 3)
    assert inner_space(b) == outer_space(b) == Subspace(3, [(1, 1, 0), (0, 1, 1)])
    assert inner_space(Multivector.zero(4)) == Subspace.full(4)
    assert outer_space(Multivector.zero(4)) == Subspace.zero(4)


def test_outer_space_examples():
    assert outer_space(mv(M29, 5)) == Subspace.full(5)
    assert outer_space(mv(M210, 6)) == Subspace(6, [(0, 0, 0, 0, 1, 2)]).perp()
    assert outer_space(mv("e12", 3)) == Subspace.coordinate(3, [1, 2])


def test_grade_profile_examples():
    assert grade_profile(mv(M210, 6)).as_tuple() == (1, 3, 3, 5)
    assert grade_profile(mv("1+e12", 2)).as_tuple() == (0, 0, 2, 2)
    assert grade_profile(mv("e123", 3)).as_tuple() == (3, 3, 3, 3)
    with pytest.raises(DomainError, match="grades undefined at zero"):
        grade_profile(Multivector.zero(3))


def test_pperp_examples():
    e1, e2 = Subspace.coordinate(2, [1]), Subspace.coordinate(2, [2])
    assert is_pperp(e1, e2)
    assert not is_pperp(e1, e1)
    # e2 spans the complement of [e1] and misses [e1 + e2], so by definition this is false
    assert not is_pperp(Subspace(2, [(1, 1)]), e1)
    assert is_pperp(Subspace(3, [(1, 1, 0), (0, 0, 1)]), Subspace.coordinate(3, [1]))


def test_balance_examples():
    m = mv("1 + e1 - e23 + 2*e123 + e12", 3)
    comps = [m.grade_part(p) for p in m.grades()]
    assert is_balanced(comps)
    parts29 = [mv(t, 5) for t in ("e134", "-e145", "e345", "e1235")]
    assert is_outer_balanced(parts29) and not is_inner_balanced(parts29)
    parts210 = [mv(t, 6) for t in ("e123", "2*e145", "-e146")]
    assert is_inner_balanced(parts210) and not is_outer_balanced(parts210)


def test_wedge_with_overlapping_outer_spaces():
    # N = 1 + v^w in dimension 2: v ^ N = v, inner spaces meet trivially, outer ones do not
    v, n = mv("e1", 2), mv("1+e12", 2)
    assert wedge(v, n) == v
    assert (inner_space(v) & inner_space(n)).dim == 0
    assert (outer_space(v) & outer_space(n)).dim == 1
    assert not outer_space(n) <= outer_space(wedge(v, n))


def test_contraction_counterexamples():
    m, n = mv("e12+e34", 4), mv("e12-e34", 4)
    assert lcontr(m, n).is_zero()
    assert inner_space(m).dim == 0 and not is_pperp(inner_space(m), outer_space(n))
    m, n = mv("e1+e12", 4), mv("e1", 4)
    assert is_pperp(outer_space(m), inner_space(n))
    assert lcontr(m, n) == mv("1", 4)
    m, n = mv("1+e1", 4), mv("e2", 4)
    assert outer_space(m) <= outer_space(n).perp()
    assert lcontr(m, n) == mv("e2", 4)


# -- properties --------------------------------------------------------------

nonzero = multivectors(N).filter(lambda m: not m.is_zero())


@EX
@given(nonzero)
def test_inner_within_outer_and_grade_order(m):
    tally("inner within outer")
    assert inner_space(m) <= outer_space(m)
    g = grade_profile(m)
    assert g.igrade <= g.bgrade <= g.tgrade <= g.ograde


@EX
@given(multivectors(N))
def test_hodge_swaps_spaces(m):
    tally("hodge swaps spaces")
    s = hodge_right(m)
    assert inner_space(s) == outer_space(m).perp()
    assert outer_space(s) == inner_space(m).perp()
    if not m.is_zero():
        g, h = grade_profile(m), grade_profile(s)
        assert g.igrade + h.ograde == N and g.bgrade + h.tgrade == N


@EX
@given(st.one_of(nonzero_blades(N), nonzero))
def test_blade_iff_spaces_equal(m):
    tally("blade iff spaces equal")
    assert is_blade(m) == (inner_space(m) == outer_space(m))


@EX
@given(nonzero_blades(N))
def test_blades_are_blades(b):
    assert is_blade(b)
    assert inner_space(b) == blade_space(b)


@EX
@given(st.data())
def test_outermorphism_spaces(data):
    tally("outermorphism spaces")
    m = data.draw(multivectors(N))
    rows = data.draw(st.integers(3, N))
    t = [[data.draw(st.integers(-2, 2)) for _ in range(N)] for _ in range(rows)]
    tm = outermorphism_apply(LinearMap(t), m)
    ti, to = inner_space(m).image(t), outer_space(m).image(t)
    assert inner_space(tm) >= ti
    assert outer_space(tm) <= to
    if rows == N and Subspace(N, t).dim == N:
        assert inner_space(tm) == ti and outer_space(tm) == to


def _disjoint(a, b):
    return (a & b).dim == 0


@EX
@given(multivectors(N), multivectors(N))
def test_wedge_space_bounds(m, n):
    tally("wedge bounds")
    w = wedge(m, n)
    om, on, im, in_ = outer_space(m), outer_space(n), inner_space(m), inner_space(n)
    assert outer_space(w) <= om + on
    assert inner_space(w) >= im + in_
    if not m.is_zero() and not n.is_zero() and _disjoint(om, on):
        assert outer_space(w) == om + on
        assert inner_space(w) == im + in_ and _disjoint(im, in_)


@EX
@given(st.data())
def test_wedge_equality_on_split_supports(data):
    # force disjoint outer spaces: M on e1..e2, N on e3..e5
    m = Multivector(N, dict(data.draw(multivectors(2)).items()))
    n = Multivector(N, {k << 2: c for k, c in data.draw(multivectors(3)).items()})
    assume(not m.is_zero() and not n.is_zero())
    tally("wedge equality")
    w = wedge(m, n)
    assert outer_space(w) == outer_space(m) + outer_space(n)
    assert inner_space(w) == inner_space(m) + inner_space(n)


@EX
@given(multivectors(N), multivectors(N))
def test_contraction_space_bounds(m, n):
    tally("contraction bounds")
    c = lcontr(m, n)
    om, on, im, in_ = outer_space(m), outer_space(n), inner_space(m), inner_space(n)
    assert outer_space(c) <= im.perp() & on
    assert inner_space(c) >= om.perp() & in_
    if not m.is_zero() and not n.is_zero() and not is_pperp(om, in_):
        assert outer_space(c) == im.perp() & on
        assert inner_space(c) == om.perp() & in_


@EX
@given(st.data())
def test_contraction_equality_with_blade_inside(data):
    # O(M) inside [B] = I(N) makes O(M) not partially orthogonal to I(N)
    b = data.draw(nonzero_blades(N, data.draw(st.integers(1, N))))
    space = blade_space(b)
    x = data.draw(multivectors(N))
    n = wedge(b, x + Multivector.scalar(N, 1 - x.coeff(0) + data.draw(st.integers(0, 2))))
    # M in the exterior algebra of [B]
    basis = exterior_basis(space)
    coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=len(basis), max_size=len(basis)))
    m = sum((e.scale(c) for e, c in zip(basis, coeffs)), Multivector.zero(N))
    assume(not m.is_zero())
    assert not is_pperp(outer_space(m), inner_space(n))
    tally("contraction equality")
    c = lcontr(m, n)
    assert outer_space(c) == inner_space(m).perp() & outer_space(n)
    assert inner_space(c) == outer_space(m).perp() & inner_space(n)
    assert outer_space(m) <= space


@EX
@given(multivectors(N), multivectors(N))
def test_clifford_space_bounds(m, n):
    tally("clifford bounds")
    p = clifford(m, n)
    om, on, im, in_ = outer_space(m), outer_space(n), inner_space(m), inner_space(n)
    assert outer_space(p) <= om + on
    assert inner_space(p) >= (on.perp() & im) + (om.perp() & in_)
    if m.is_zero() or n.is_zero():
        return
    if _disjoint(om, on):
        assert outer_space(p) == om + on
    if not is_pperp(on, im):
        assert inner_space(p) == on.perp() & im
    if not is_pperp(om, in_):
        assert inner_space(p) == om.perp() & in_


@EX
@given(multivectors(N), multivectors(N))
def test_partial_orthogonality_and_annihilation(m, n):
    tally("annihilation")
    c = lcontr(m, n)
    if is_pperp(inner_space(m), outer_space(n)):
        assert c.is_zero()
    if c.is_zero() and not m.is_zero() and not n.is_zero():
        assert is_pperp(outer_space(m), inner_space(n))


@EX
@given(st.lists(multivectors(N), min_size=1, max_size=4))
def test_sum_bounds(parts):
    tally("sum bounds")
    total = Multivector.zero(N)
    inter, summ = Subspace.full(N), Subspace.zero(N)
    for p in parts:
        total = total + p
        inter = inter & inner_space(p)
        summ = summ + outer_space(p)
    assert inner_space(total) >= inter
    assert outer_space(total) <= summ


@EX
@given(st.data())
def test_blade_sum_dichotomy(data):
    n = 6
    p = data.draw(st.integers(1, 4))
    a = data.draw(nonzero_blades(n, p))
    b = data.draw(nonzero_blades(n, p))
    sa, sb = blade_space(a), blade_space(b)
    assume(sa != sb)
    tally("blade sum dichotomy")
    s = a + b
    if (sa & sb).dim == p - 1:
        assert (sa + sb).dim == p + 1
        assert is_blade(s)
        assert not is_inner_balanced([a, b]) and not is_outer_balanced([a, b])
    else:
        assert (sa & sb).dim + 2 <= p <= (sa + sb).dim - 2
        assert not is_blade(s)
        assert is_balanced([a, b])


def _random_factored(rng, n):
    """A blade of random grade wedged with a short random multivector."""
    m = Multivector.scalar(n, 1)
    for _ in range(rng.randint(0, 4)):
        m = wedge(m, Multivector.vector([rng.randint(-2, 2) for _ in range(n)]))
    masks = rng.sample(range(1 << n), rng.randint(1, 3))
    rest = Multivector(n, {k: rng.choice([-2, -1, 1, 3]) for k in masks if bin(k).count("1") <= 2})
    return wedge(m, rest if not rest.is_zero() else Multivector.scalar(n, 1))


@functools.cache
def separation_check(needed=200, seed=7, limit=20000):
    """Returns hits per hypothesis and failures after sampling seeded pairs.

    Samples until both hypotheses have ``needed`` hits (or ``limit`` draws).
    Half the draws are Hodge duals of a fresh pair, which land in the outer case.
    """
    rng = random.Random(seed)
    hits = {"inner": 0, "outer": 0}
    failures = []
    for _ in range(limit):
        if min(hits.values()) >= needed:
            break
        n = rng.randint(4, 6)
        m, k = _random_factored(rng, n), _random_factored(rng, n)
        if rng.random() < 0.5:
            m, k = hodge_right(m), hodge_right(k)
        if m.is_zero() or k.is_zero():
            continue
        gm, gk = grade_profile(m), grade_profile(k)
        b = max(gm.bgrade, gk.bgrade)
        t = min(gm.tgrade, gk.tgrade)
        if (inner_space(m) + inner_space(k)).dim >= t + 2:
            hits["inner"] += 1
            total = m + k
            if not (is_inner_balanced([m, k]) and inner_space(total).dim <= b - 2):
                failures.append(("inner", m, k))
        if (outer_space(m) & outer_space(k)).dim <= b - 2:
            hits["outer"] += 1
            total = m + k
            if not (is_outer_balanced([m, k]) and outer_space(total).dim >= t + 2):
                failures.append(("outer", m, k))
    return hits, failures


def test_separation_theorem():
    hits, failures = separation_check()
    assert failures == []
    assert min(hits.values()) >= 200, hits
