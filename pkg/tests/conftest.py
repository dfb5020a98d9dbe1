import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from deltawitt.config import PRESETS
from deltawitt.poly import Poly, PolyAlg
from deltawitt.rings import EqualCharRing, GaussianRing, MixedCharRing

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F2 = EqualCharRing(2)
F3 = EqualCharRing(3)
F4 = EqualCharRing(2, 2)
Z2 = MixedCharRing(2)
Z3 = MixedCharRing(3)
ZI = GaussianRing()

ALL_RINGS = [F2, F3, F4, Z2, Z3, ZI]
RING_IDS = ["F2[t]", "F3[t]", "F4[t]", "Z,p=2", "Z,p=3", "Z[i]"]


def scalar(ring):
    if ring.kind in ("EqualChar", "Residue"):
        return st.integers(1, ring.q - 1)
    if ring.kind == "MixedChar":
        return st.integers(-6, 6).filter(bool)
    return st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda c: c != (0, 0))


@st.composite
def polys(draw, alg, max_terms=4, max_deg=3, max_t=3):
    """Sparse polynomials in alg, built through the public arithmetic."""
    f = alg.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        exps = [draw(st.integers(0, max_deg)) for _ in range(alg.m)]
        t = draw(st.integers(0, max_t)) if alg.offset else 0
        mono = Poly(alg, {alg.pack(exps, t): alg.base.s_from_int(1)})
        f = f + alg.const(draw(scalar(alg.base))) * mono
    return f


@pytest.fixture(params=ALL_RINGS, ids=RING_IDS)
def ring(request):
    return request.param


@pytest.fixture
def alg_u(ring):
    return PolyAlg(ring, ("u",))


@pytest.fixture
def presets():
    return PRESETS
