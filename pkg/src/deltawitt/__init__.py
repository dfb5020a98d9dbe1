"""Exact pi-typical Witt vectors, pi-derivations and the arithmetic Taylor expansion."""

from .config import PRESETS, RingSetup, load_config, resolve_setup
from .delta import (
    DeltaContext,
    TermTable,
    enumerate_constants,
    exp_delta,
    explicit_sequence,
    is_constant,
    lemma_l1_valuation,
    lemma_l2_valuation,
    p_n_explicit,
    taylor_expand,
    term_decomposition,
)
from .errors import (
    BoundExceeded,
    BudgetExceeded,
    IncompatibleRing,
    IntegralityError,
    NotAFrobeniusLift,
    NotDivisible,
    NotInGhostImage,
    ParseError,
    RingMismatch,
    UnknownSuite,
    WittError,
)
from .fields import FiniteField
from .poly import FrobLift, Poly, PolyAlg, c_pi, compose, delta_apply, format_poly, parse_poly, reduce_mod
from .rings import EqualCharRing, GaussianRing, MixedCharRing, ResidueField
from .witt import (
    GhostVec,
    ResidueWittVec,
    WittVec,
    frobenius_F,
    ghost,
    in_ideal_In,
    parse_vector,
    reduce_witt,
    residue_witt_arith,
    restrict_T,
    structure_map_R,
    teichmuller,
    unghost,
    universal_polys,
    verschiebung,
    witt_arith,
)

__version__ = "0.1.0"
