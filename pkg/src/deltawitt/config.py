"""Ring / algebra / Frobenius-lift configuration files and shipped presets.

A configuration is a TOML document::

    [ring]
    kind = "EqualChar"      # EqualChar | MixedChar | MixedCharRamified
    p = 2
    h = 2
    modulus = "z^2+z+1"     # optional, EqualChar with h > 1

    [algebra]
    generators = ["u"]

    [frobenius.images]
    u = "u^4 + t^3"         # omitted generators get u^q
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import tomli

from .fields import FiniteField
from .poly import FrobLift, PolyAlg
from .rings import ResidueField, ring_from_kind


@dataclass(frozen=True)
class RingSetup:
    kind: str
    p: int = 2
    h: int = 1
    modulus: tuple | None = None
    generators: tuple = ("u",)
    images: tuple = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        imgs = tuple(self.images) if self.images else ("",) * len(self.generators)
        if len(imgs) != len(self.generators):
            raise ValueError("one Frobenius image per generator")
        object.__setattr__(self, "images", imgs)
        if self.modulus is not None:
            object.__setattr__(self, "modulus", tuple(self.modulus))
        if not self.label:
            object.__setattr__(self, "label", self.default_label())

    def default_label(self) -> str:
        alg = self.alg
        lifts = ", ".join(f"{nm}->{img}" for nm, img in zip(self.generators, self.images) if img)
        return alg.describe() + (f" p={self.p}" if self.kind == "MixedChar" else "") + (f" [{lifts}]" if lifts else "")

    @cached_property
    def ring(self):
        return ring_from_kind(self.kind, self.p, self.h, self.modulus)

    @cached_property
    def alg(self) -> PolyAlg:
        return PolyAlg(self.ring, self.generators)

    @cached_property
    def frobenius(self) -> FrobLift:
        q = self.ring.q
        images = [img if img else f"{nm}^{q}" for nm, img in zip(self.generators, self.images)]
        return FrobLift(self.alg, tuple(images))

    @cached_property
    def ctx(self):
        from .delta import DeltaContext

        return DeltaContext(self.frobenius)

    def with_images(self, images, label="") -> RingSetup:
        return RingSetup(self.kind, self.p, self.h, self.modulus, self.generators, tuple(images), label)

    def to_dict(self) -> dict:
        d = {"kind": self.ring.kind, "p": self.p, "h": self.h}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        d["generators"] = list(self.generators)
        d["images"] = self.frobenius.describe()
        d["label"] = self.label
        return d

    @classmethod
    def from_toml_dict(cls, doc: dict, label: str = "") -> RingSetup:
        ring = doc.get("ring", {})
        if "kind" not in ring:
            raise ValueError("config needs ring.kind")
        kind = ring["kind"]
        p = int(ring.get("p", 2))
        h = int(ring.get("h", 1))
        modulus = ring.get("modulus")
        if isinstance(modulus, str):
            modulus = parse_modulus(modulus, p)
        gens = tuple(doc.get("algebra", {}).get("generators", ["u"]))
        imgs_doc = doc.get("frobenius", {}).get("images", {})
        unknown = set(imgs_doc) - set(gens)
        if unknown:
            raise ValueError(f"Frobenius images for unknown generators: {sorted(unknown)}")
        images = tuple(str(imgs_doc.get(g, "")) for g in gens)
        setup = cls(kind, p, h, modulus, gens, images, label or doc.get("label", ""))
        setup.ctx  # validates the lift
        return setup


def parse_modulus(text: str, p: int) -> tuple:
    """Coefficients (low first) of a polynomial in z over F_p."""
    alg = PolyAlg(ResidueField(FiniteField(p)), ("w",))
    f = alg.parse(text.replace("z", "w"))
    coeffs = [0] * (f.degree() + 1)
    for exps, c in f.coefficients().items():
        coeffs[exps[0]] = c.value
    return tuple(coeffs)


def load_config(path) -> RingSetup:
    path = Path(path)
    with path.open("rb") as fh:
        doc = tomli.load(fh)
    return RingSetup.from_toml_dict(doc, label=doc.get("label", ""))


PRESETS = {
    "f2t": RingSetup("EqualChar", 2, generators=(), label="F_2[t]"),
    "f4t": RingSetup("EqualChar", 2, 2, generators=(), label="F_4[t]"),
    "f2tu": RingSetup("EqualChar", 2, label="F_2[t][u], u->u^2"),
    "f2tu-twisted": RingSetup("EqualChar", 2, images=("u^2 + t*u",), label="F_2[t][u], u->u^2+t*u"),
    "f4tu": RingSetup("EqualChar", 2, 2, label="F_4[t][u], u->u^4"),
    "f3tu": RingSetup("EqualChar", 3, label="F_3[t][u], u->u^3"),
    "z2": RingSetup("MixedChar", 2, generators=(), label="Z, p=2"),
    "z2u": RingSetup("MixedChar", 2, images=("u^2 + 2*u",), label="Z[u] p=2, u->u^2+2u"),
    "z2u-std": RingSetup("MixedChar", 2, label="Z[u] p=2, u->u^2"),
    "z3u": RingSetup("MixedChar", 3, label="Z[u] p=3, u->u^3"),
    "ziu": RingSetup("MixedCharRamified", 2, images=("u^2 + (1+i)*u",), label="Z[i][u], u->u^2+(1+i)u"),
}

# rings exercised by `verify all`
DEFAULT_RING_SET = ("f2t", "f2tu", "f2tu-twisted", "f4tu", "z2u", "z3u", "ziu")


def resolve_setup(name_or_path) -> RingSetup:
    """A preset name or a path to a TOML config."""
    if isinstance(name_or_path, RingSetup):
        return name_or_path
    key = str(name_or_path)
    if key in PRESETS:
        return PRESETS[key]
    path = Path(key)
    if path.exists():
        return load_config(path)
    raise FileNotFoundError(f"no preset or config file named {key!r} (presets: {', '.join(PRESETS)})")
