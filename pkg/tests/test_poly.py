import pytest
from conftest import F2, F4, RING_IDS, ALL_RINGS, Z2, Z3, ZI, polys
from hypothesis import given
from hypothesis import strategies as st

from deltawitt.errors import NotAFrobeniusLift, ParseError, RingMismatch
from deltawitt.poly import FrobLift, PolyAlg, c_pi, compose, delta_apply, reduce_mod, validate_frob_lift

ALGS = [PolyAlg(r, ("u", "v")) for r in ALL_RINGS]


@pytest.mark.parametrize("alg", ALGS, ids=RING_IDS)
@given(data=st.data())
def test_print_parse_round_trip(alg, data):
    f = data.draw(polys(alg))
    assert alg.parse(str(f)) == f


@pytest.mark.parametrize("alg", ALGS, ids=RING_IDS)
@given(data=st.data())
def test_commutative_ring_laws(alg, data):
    f, g, h = (data.draw(polys(alg, max_terms=3, max_deg=2, max_t=2)) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == alg.zero()
    assert f * alg.one() == f


@pytest.mark.parametrize("alg", ALGS, ids=RING_IDS)
@given(data=st.data())
def test_power_matches_repeated_product(alg, data):
    f = data.draw(polys(alg, max_terms=3, max_deg=2, max_t=2))
    k = data.draw(st.integers(0, 5))
    prod = alg.one()
    for _ in range(k):
        prod = prod * f
    assert f**k == prod


@pytest.mark.parametrize("alg", ALGS, ids=RING_IDS)
@given(data=st.data())
def test_valuation_shift(alg, data):
    f = data.draw(polys(alg))
    k = data.draw(st.integers(0, 4))
    if f.is_zero():
        return
    g = f.mul_pi(k)
    assert g.v_pi() == f.v_pi() + k
    assert g.div_pi(k) == f
    assert g == f * alg.pi() ** k


def test_binomial_in_z():
    A = PolyAlg(Z2, ("u",))
    assert (A.parse("u") + 1) ** 2 == A.parse("u^2 + 2*u + 1")
    assert str(A.parse("(u+1)^2")) == "u^2 + 2*u + 1"


def test_frobenius_is_additive_in_char_p():
    A = PolyAlg(F4, ("u",))
    f, g = A.parse("z*t*u + u^2"), A.parse("t + (1+z)*u")
    assert (f + g) ** 4 == f**4 + g**4


def test_valuation_examples():
    A = PolyAlg(Z2, ("u",))
    assert A.parse("4*u^2 + 6").v_pi() == 1
    assert reduce_mod(A.parse("5*u + 8"), 1) == A.parse("u")
    assert A.zero().v_pi() == float("inf")


def test_format_examples():
    A = PolyAlg(F4, ("u",))
    assert str(A.parse("(1+z)*t^2*u + t*u + u")) == "(1+t+(1+z)*t^2)*u"
    assert str(A.parse("u^2 + t + t^2")) == "u^2 + t+t^2"
    assert str(A.zero()) == "0"
    B = PolyAlg(Z3, ("u", "v"))
    assert str(B.parse("-2*u*v + 3 - v^2")) == "-2*u*v - v^2 + 3"


def test_parse_errors_report_position():
    A = PolyAlg(F2, ("u",))
    with pytest.raises(ParseError) as exc:
        A.parse("u^^2")
    assert exc.value.position == 2
    with pytest.raises(ParseError):
        A.parse("w + 1")
    with pytest.raises(ParseError):
        A.parse("(u + 1")


def test_implicit_multiplication():
    A = PolyAlg(F2, ("u",))
    assert A.parse("t u") == A.parse("t*u")
    assert A.parse("2u") == A.zero()


def test_mismatched_algebras():
    with pytest.raises(RingMismatch):
        PolyAlg(Z2, ("u",)).one() + PolyAlg(Z3, ("u",)).one()


def test_compose_collapses_colliding_monomials():
    src = PolyAlg(Z2, ("x", "y"))
    tgt = PolyAlg(Z2, ("u",))
    u = tgt.gen(0)
    assert compose(src.parse("x + y"), [u, u], tgt) == tgt.parse("2*u")
    src2 = PolyAlg(F2, ("x", "y"))
    tgt2 = PolyAlg(F2, ("u",))
    assert compose(src2.parse("x + y + t*x*y"), [tgt2.gen(0)] * 2, tgt2) == tgt2.parse("t*u^2")


def test_compose_general_images():
    src = PolyAlg(Z3, ("x",))
    tgt = PolyAlg(Z3, ("u",))
    assert compose(src.parse("x^2 + 1"), [tgt.parse("u + 1")], tgt) == tgt.parse("u^2 + 2*u + 2")


def test_delta_examples():
    A = PolyAlg(F2, ("u",))
    phi = FrobLift.standard(A)
    assert delta_apply(phi, A.parse("t*u")) == A.parse("(1+t)*u^2")
    assert delta_apply(phi, A.parse("t^2")) == A.parse("t + t^3")
    twisted = FrobLift(A, ("u^2 + t*u",))
    assert delta_apply(twisted, A.parse("u")) == A.parse("u")


def test_c_pi():
    A3 = PolyAlg(Z3, ("u",))
    u = A3.gen(0)
    assert c_pi(u, u) == A3.parse("-2*u^3")
    A = PolyAlg(F2, ("u",))
    assert c_pi(A.gen(0), A.parse("t")) == A.zero()


@pytest.mark.parametrize("alg", ALGS, ids=RING_IDS)
@given(data=st.data())
def test_delta_axioms(alg, data):
    q = alg.base.q
    images = tuple(g**q + alg.pi() * data.draw(polys(alg, max_terms=2, max_deg=2, max_t=1)) for g in alg.gens())
    phi = FrobLift(alg, images)
    f, g = (data.draw(polys(alg, max_terms=3, max_deg=2, max_t=2)) for _ in range(2))
    df, dg = delta_apply(phi, f), delta_apply(phi, g)
    assert delta_apply(phi, f + g) == df + dg + c_pi(f, g)
    assert delta_apply(phi, f * g) == f**q * dg + g**q * df + alg.pi() * df * dg


def test_frobenius_lift_validation():
    A = PolyAlg(Z2, ("u",))
    validate_frob_lift(FrobLift(A, ("u^2 + 2",)))
    with pytest.raises(NotAFrobeniusLift) as exc:
        validate_frob_lift(FrobLift(A, ("u^2 + 1",)))
    assert exc.value.generator == "u"
    B = PolyAlg(ZI, ("u",))
    validate_frob_lift(FrobLift(B, ("u^2 + (1+i)*u",)))
    with pytest.raises(NotAFrobeniusLift):
        validate_frob_lift(FrobLift(B, ("u^2 + i*u",)))


def test_residue_round_trip():
    A = PolyAlg(F4, ("u",))
    f = A.parse("z*u^2 + t*u + 1 + z")
    r = A.to_residue(f)
    assert r == A.residue_algebra.parse("z*u^2 + 1 + z")
    assert A.to_residue(A.lift(r)) == r
    G = PolyAlg(ZI, ("u",))
    assert G.to_residue(G.parse("(2+i)*u + 2")) == G.residue_algebra.parse("u")
