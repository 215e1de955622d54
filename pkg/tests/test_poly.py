import pytest
from hypothesis import given, settings, strategies as st

from grsdeep.errors import DivisionByZero, DuplicateAbscissa, FieldMismatch
from grsdeep.gf import get_field
from grsdeep.poly import NEG_INF, Polynomial, lagrange_interpolate, reduce_mod_vanishing, vanishing_poly

F5 = get_field(5)
F4 = get_field(2, 2)
F2 = get_field(2)


def P(F, *coeffs):
    return Polynomial(F, coeffs)


def test_normalisation_and_zero_degree():
    assert P(F5, 1, 2, 0, 0).coeffs == (1, 2)
    zero = P(F5, 0, 0)
    assert zero.coeffs == () and zero.degree == NEG_INF
    assert zero.degree < -1000
    assert P(F5, 3).degree == 0


def test_ring_examples():
    x_plus_1, x_minus_1 = P(F5, 1, 1), P(F5, 4, 1)
    assert x_plus_1 * x_minus_1 == P(F5, 4, 0, 1)
    f = P(F5, 2, 0, 3)
    assert f + Polynomial.zero(F5) == f
    assert P(F2, 1, 1) * P(F2, 1, 1) == P(F2, 1, 0, 1)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        P(F5, 1) + P(get_field(7), 1)


def test_divrem_examples():
    q, r = P(F5, 0, 0, 0, 1).divrem(P(F5, 4, 1))
    assert q == P(F5, 1, 1, 1) and r == P(F5, 1)
    assert q * P(F5, 4, 1) + r == P(F5, 0, 0, 0, 1)
    f = P(F5, 3, 1, 4)
    assert f.divrem(f) == (P(F5, 1), Polynomial.zero(F5))
    assert Polynomial.zero(F5).divrem(f) == (Polynomial.zero(F5), Polynomial.zero(F5))
    with pytest.raises(DivisionByZero):
        f.divrem(Polynomial.zero(F5))


def test_eval_examples():
    cube = Polynomial.monomial(F5, 3)
    assert cube(2) == 3
    assert cube(4) == 4
    assert P(F5, 3)(2) == 3
    assert Polynomial.zero(F5)(3) == 0


def test_pow_examples():
    f = P(F5, 2, 1)
    assert f ** 0 == P(F5, 1)
    assert P(F5, 0, 1) ** 3 == Polynomial.monomial(F5, 3)
    assert P(F4, 1, 1) ** 2 == P(F4, 1, 0, 1)


def test_lagrange_examples():
    assert lagrange_interpolate(F5, [(1, 1), (2, 3), (3, 2), (4, 4)]) == Polynomial.monomial(F5, 3)
    assert lagrange_interpolate(F5, [(3, 2)]) == P(F5, 2)
    assert lagrange_interpolate(F5, [(1, 2), (2, 3), (3, 4), (4, 0)]) == P(F5, 1, 1)
    with pytest.raises(DuplicateAbscissa):
        lagrange_interpolate(F5, [(1, 2), (1, 3)])


def test_vanishing_examples():
    assert vanishing_poly(F5, [1, 2, 3, 4]) == P(F5, 4, 0, 0, 0, 1)
    assert vanishing_poly(F5, [0]) == P(F5, 0, 1)
    # Over all of F_4 the product is x^4 - x = x^4 + x.
    assert vanishing_poly(F4, F4.elements()) == P(F4, 0, 1, 0, 0, 1)
    with pytest.raises(DuplicateAbscissa):
        vanishing_poly(F5, [1, 1])


def test_reduce_examples():
    D = [1, 2, 3, 4]
    assert reduce_mod_vanishing(Polynomial.monomial(F5, 4), D) == P(F5, 1)
    f = P(F5, 1, 2, 3)
    assert reduce_mod_vanishing(f, D) == f
    assert reduce_mod_vanishing(vanishing_poly(F5, D), D).is_zero()


def test_compose_and_parts():
    f = P(F5, 1, 2, 3, 4)
    shifted = f.compose(P(F5, 3, 1))
    assert all(shifted(x) == f(F5.add(x, 3)) for x in F5.elements())
    assert f.high_part(2) == P(F5, 0, 0, 3, 4)
    assert f.low_part(2) == P(F5, 1, 2)


def test_csv_and_index_round_trip():
    f = P(F5, 1, 0, 0, 1)
    assert f.to_csv() == "1,0,0,1"
    assert Polynomial.from_csv(F5, "1,0,0,1") == f
    assert Polynomial.zero(F5).to_csv() == "0"
    assert Polynomial.from_csv(F5, "0").is_zero()
    assert Polynomial.from_index(F5, f.index, 4) == f


FIELDS = st.sampled_from([(2, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])


def poly_of(F, max_len):
    return st.lists(st.integers(0, F.q - 1), max_size=max_len).map(lambda cs: Polynomial(F, cs))


@settings(max_examples=150, deadline=None)
@given(FIELDS, st.data())
def test_divrem_identity(pm, data):
    F = get_field(*pm)
    f = data.draw(poly_of(F, 9))
    g = data.draw(poly_of(F, 5).filter(lambda p: not p.is_zero()))
    q, r = f.divrem(g)
    assert q * g + r == f
    assert r.degree < g.degree


@settings(max_examples=150, deadline=None)
@given(FIELDS, st.data())
def test_interpolation_round_trip(pm, data):
    F = get_field(*pm)
    D = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=F.q, unique=True))
    f = data.draw(poly_of(F, len(D)))
    g = lagrange_interpolate(F, [(x, f(x)) for x in D])
    assert g == f
    assert g.degree <= len(D) - 1


@settings(max_examples=150, deadline=None)
@given(FIELDS, st.data())
def test_interpolation_fits_and_ignores_order(pm, data):
    F = get_field(*pm)
    D = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=F.q, unique=True))
    ys = data.draw(st.lists(st.integers(0, F.q - 1), min_size=len(D), max_size=len(D)))
    pts = list(zip(D, ys))
    g = lagrange_interpolate(F, pts)
    assert all(g(x) == y for x, y in pts)
    assert g.degree <= len(D) - 1
    assert lagrange_interpolate(F, pts[::-1]) == g


@settings(max_examples=150, deadline=None)
@given(FIELDS, st.data())
def test_reduction_agrees_on_points(pm, data):
    F = get_field(*pm)
    D = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=F.q, unique=True))
    f = data.draw(poly_of(F, 3 * F.q))
    r = reduce_mod_vanishing(f, D)
    assert r.degree < len(D)
    assert all(r(x) == f(x) for x in D)
    N = vanishing_poly(F, D)
    assert N.leading == 1 and N.degree == len(D)
    assert all(N(x) == 0 for x in D)
    assert all(N(x) != 0 for x in F.elements() if x not in D)


@settings(max_examples=100, deadline=None)
@given(FIELDS, st.data())
def test_product_degree_is_additive(pm, data):
    F = get_field(*pm)
    f = data.draw(poly_of(F, 6).filter(bool))
    g = data.draw(poly_of(F, 6).filter(bool))
    assert (f * g).degree == f.degree + g.degree
