import oracles
import pytest
from conftest import F2, F3, F4, Z2, Z3, ZI, polys
from hypothesis import given
from hypothesis import strategies as st

from deltawitt.errors import BoundExceeded, NotInGhostImage, ParseError, RingMismatch
from deltawitt.poly import PolyAlg
from deltawitt.witt import (
    GhostVec,
    ResidueWittVec,
    WittVec,
    evaluate_universal,
    frobenius_F,
    ghost,
    in_ideal_In,
    parse_vector,
    residue_witt_arith,
    restrict_T,
    scalar_action,
    structure_map_R,
    teichmuller,
    unghost,
    universal_algebra,
    universal_polys,
    verschiebung,
    witt_arith,
)

ZZ2 = PolyAlg(Z2, ())
RINGS = [F2, F3, F4, Z2, Z3, ZI]
IDS = ["F2", "F3", "F4", "Z2", "Z3", "ZI"]


def vec(alg, *comps):
    return WittVec(alg, tuple(alg.coerce(c) for c in comps))


def test_ghost_unghost_fixed():
    assert ghost(vec(ZZ2, 3, -3)) == GhostVec(ZZ2, (3, 3))
    assert unghost(GhostVec(ZZ2, (2, 2))) == vec(ZZ2, 2, -1)


def test_unghost_outside_image():
    with pytest.raises(NotInGhostImage) as exc:
        unghost(GhostVec(ZZ2, (0, 1)))
    assert exc.value.index == 1


def test_fixed_arithmetic():
    assert vec(ZZ2, 1, 0) + vec(ZZ2, 1, 0) == vec(ZZ2, 2, -1)
    assert frobenius_F(vec(ZZ2, 0, 1)) == vec(ZZ2, 2)
    assert -vec(ZZ2, 1, 0) == vec(ZZ2, -1, -1)


def test_teichmuller_not_additive_in_mixed_char():
    one = teichmuller(ZZ2.one(), 1)
    assert one + one == vec(ZZ2, 2, -1)
    assert one + one != teichmuller(ZZ2.from_int(2), 1)


def test_universal_first_components():
    A = universal_algebra(Z2, 1)
    S = universal_polys(Z2, 1, "add")
    M = universal_polys(Z2, 1, "mul")
    assert S[0] == A.parse("x0 + y0")
    assert S[1] == A.parse("x1 + y1 - x0*y0")
    assert M[1] == A.parse("x0^2*y1 + x1*y0^2 + 2*x1*y1")
    E = universal_algebra(F2, 1)
    assert universal_polys(F2, 1, "add")[1] == E.parse("x1 + y1")
    assert universal_polys(F2, 1, "mul")[1] == E.parse("x0^2*y1 + x1*y0^2 + t*x1*y1")


def test_universal_bound():
    with pytest.raises(BoundExceeded):
        universal_polys(Z2, 5, "add")


@pytest.mark.parametrize(
    "ring,q,p,equal,n",
    [(Z2, 2, 2, False, 2), (Z3, 3, 3, False, 2), (F2, 2, 2, True, 2), (F3, 3, 3, True, 1), (Z2, 2, 2, False, 3)],
    ids=["Z2n2", "Z3n2", "F2n2", "F3n1", "Z2n3"],
)
@pytest.mark.parametrize("op", ["add", "mul"])
def test_universal_matches_sympy(ring, q, p, equal, n, op):
    ours = universal_polys(ring, n, op)
    ref = oracles.universal(n, op, q, p, equal)
    A = universal_algebra(ring, n)
    for k in range(n + 1):
        assert ours[k] == A.parse(oracles.to_text(ref[k])), k


def _algs():
    return st.sampled_from([PolyAlg(r, ("u",)) for r in RINGS])


@st.composite
def witt_pair(draw, n_max=3):
    alg = draw(_algs())
    n = draw(st.integers(0, n_max))
    mk = lambda: WittVec(alg, tuple(draw(polys(alg, max_terms=2, max_deg=2, max_t=1)) for _ in range(n + 1)))
    return alg, mk(), mk(), mk()


@given(witt_pair())
def test_ghost_is_a_ring_homomorphism(data):
    alg, x, y, _ = data
    assert ghost(x + y) == ghost(x) + ghost(y)
    assert ghost(x * y) == ghost(x) * ghost(y)
    assert ghost(x - y) == ghost(x) - ghost(y)
    assert unghost(ghost(x)) == x


@given(witt_pair(n_max=2))
def test_witt_ring_axioms(data):
    alg, x, y, z = data
    zero = WittVec(alg, tuple(alg.zero() for _ in x))
    one = teichmuller(alg.one(), x.n)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + zero == x
    assert x * one == x
    assert x + (-x) == zero


@given(witt_pair())
def test_universal_evaluation_agrees(data):
    alg, x, y, _ = data
    for op in ("add", "mul"):
        assert evaluate_universal(universal_polys(alg.base, x.n, op), x, y) == witt_arith(x, y, op)


@given(witt_pair())
def test_frobenius_and_restriction(data):
    alg, x, y, _ = data
    if x.n == 0:
        return
    assert ghost(frobenius_F(x)) == ghost(x).shift()
    assert frobenius_F(x * y) == frobenius_F(x) * frobenius_F(y)
    assert frobenius_F(x + y) == frobenius_F(x) + frobenius_F(y)
    assert ghost(restrict_T(x)) == ghost(x).truncate()
    if x.n >= 2:
        assert restrict_T(frobenius_F(x)) == frobenius_F(restrict_T(x))


@given(witt_pair())
def test_verschiebung(data):
    alg, x, _, _ = data
    vx = verschiebung(x)
    assert vx.n == x.n + 1
    gv = ghost(vx).components
    assert gv[0].is_zero()
    assert list(gv[1:]) == [w.mul_pi(1) for w in ghost(x).components]


@given(witt_pair())
def test_teichmuller_multiplicative(data):
    alg, x, y, _ = data
    a, b = x[0], y[0]
    assert teichmuller(a, x.n) * teichmuller(b, x.n) == teichmuller(a * b, x.n)
    if alg.base.kind == "EqualChar":
        assert teichmuller(a, x.n) + teichmuller(b, x.n) == teichmuller(a + b, x.n)


@given(witt_pair())
def test_equal_char_addition_is_componentwise(data):
    alg, x, y, _ = data
    if alg.base.kind != "EqualChar":
        return
    assert x + y == WittVec(alg, tuple(a + b for a, b in zip(x, y)))


@given(witt_pair(), st.data())
def test_residue_arithmetic_is_lift_independent(data, draw):
    alg, x, y, _ = data
    X = ResidueWittVec(alg.residue_algebra, tuple(alg.to_residue(c) for c in x))
    Y = ResidueWittVec(alg.residue_algebra, tuple(alg.to_residue(c) for c in y))
    shift = lambda v: WittVec(alg, tuple(c + draw.draw(polys(alg, max_terms=2, max_deg=2, max_t=1)).mul_pi(1) for c in v))
    for op in ("add", "mul"):
        first = residue_witt_arith(X, Y, op, alg)
        assert residue_witt_arith(X, Y, op, alg, lifts=(shift(x), shift(y))) == first
        assert evaluate_universal(universal_polys(alg.base, x.n, op), X, Y) == first


def test_ideal_membership():
    A0 = PolyAlg(F2, ("u",)).residue_algebra
    v = ResidueWittVec(A0, (0, 0, "u"))
    assert in_ideal_In(v, 2)
    assert not in_ideal_In(v, 3)
    with pytest.raises(ValueError):
        in_ideal_In(v, 4)


def test_structure_map():
    A = PolyAlg(F2, ("u",))
    assert structure_map_R(A.base.B.parse("t"), 2, A) == vec(A, "t", "1+t", "t+t^2")
    x = vec(A, "u", "t", 1)
    r = A.base.B.parse("t + 1")
    assert ghost(scalar_action(r, x)) == GhostVec(A, tuple(A.embed(r) * w for w in ghost(x).components))


def test_parse_vector():
    A = PolyAlg(Z2, ("u",))
    assert parse_vector("(u + 1, -3)", A) == vec(A, "u+1", -3)
    assert parse_vector("((u+1)^2)", A) == vec(A, "u^2 + 2*u + 1")
    with pytest.raises(ParseError) as exc:
        parse_vector("(1, u^^2)", A)
    assert exc.value.position == 6
    with pytest.raises(ParseError):
        parse_vector("1, 2", A)


def test_round_trip_and_json():
    A = PolyAlg(F4, ("u",))
    x = vec(A, "z*u + t", "(1+z)*t^2", 0)
    assert parse_vector(str(x), A) == x
    js = x.to_json()
    assert js["schema"] == 1 and js["n"] == 2 and js["components"][2] == "0"


def test_length_mismatch():
    with pytest.raises(RingMismatch):
        vec(ZZ2, 1) + vec(ZZ2, 1, 0)
