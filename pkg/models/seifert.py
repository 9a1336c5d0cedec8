from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

from core.errors import InvalidInvariant
from models.words import GroupScheme, Word


class ExceptionalFiber(NamedTuple):
    mu: int
    beta: int


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants plus boundary count and the classifying homomorphism φ."""

    base_orientable: bool
    genus_or_crosscaps: int
    boundary_count: int = 0
    b: int = 0
    exceptional: Tuple[ExceptionalFiber, ...] = ()
    phi: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.genus_or_crosscaps < 0 or self.boundary_count < 0:
            raise InvalidInvariant("genus and boundary count must be nonnegative")
        if not self.base_orientable and self.genus_or_crosscaps < 1:
            raise InvalidInvariant("a non-orientable base needs at least one crosscap")
        for fiber in self.exceptional:
            if fiber.mu < 2:
                raise InvalidInvariant(f"exceptional fiber {tuple(fiber)} has mu < 2")
        allowed = set(self.base_generators)
        for name, sign in self.phi:
            if name not in allowed:
                raise InvalidInvariant(f"phi is not defined on {name!r}; allowed: {sorted(allowed)}")
            if sign not in (1, -1):
                raise InvalidInvariant(f"phi({name}) must be +1 or -1, got {sign}")
        if len({name for name, _ in self.phi}) != len(self.phi):
            raise InvalidInvariant("phi assigns a generator twice")
        product = 1
        for name in self.boundary_generators:
            product *= self.phi_of(name)
        if product != 1:
            raise InvalidInvariant("phi must multiply to +1 over the boundary generators")

    @property
    def handle_generators(self) -> List[str]:
        if self.base_orientable:
            names = []
            for i in range(1, self.genus_or_crosscaps + 1):
                names += [f"a{i}", f"b{i}"]
            return names
        return [f"x{i}" for i in range(1, self.genus_or_crosscaps + 1)]

    @property
    def fiber_generators(self) -> List[str]:
        return [f"c{i}" for i in range(1, len(self.exceptional) + 1)]

    @property
    def boundary_generators(self) -> List[str]:
        return [f"d{i}" for i in range(1, self.boundary_count + 1)]

    @property
    def base_generators(self) -> List[str]:
        return self.handle_generators + self.boundary_generators

    def phi_of(self, name: str) -> int:
        return dict(self.phi).get(name, 1)

    @property
    def phi_map(self) -> Dict[str, int]:
        return {name: self.phi_of(name) for name in self.base_generators}

    @property
    def phi_nontrivial(self) -> bool:
        return any(sign == -1 for _, sign in self.phi)

    def __str__(self) -> str:
        head = f"O,o,{self.genus_or_crosscaps}" if self.base_orientable else f"N,{self.genus_or_crosscaps}"
        fibers = ",".join(f"({f.mu},{f.beta})" for f in self.exceptional)
        body = f"{self.b}; {fibers}" if fibers else f"{self.b}"
        text = f"({head} | {body}); boundaries={self.boundary_count}"
        nontrivial = [f"{name}={'+1' if sign > 0 else '-1'}" for name, sign in self.phi]
        if nontrivial:
            text += "; phi: " + ",".join(nontrivial)
        return text


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    @property
    def relator(self) -> Word:
        return self.lhs * ~self.rhs

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Presentation:
    scheme: GroupScheme
    relations: Tuple[Relation, ...]

    @property
    def generators(self) -> List[str]:
        return self.scheme.names

    def as_dict(self) -> dict:
        return {"generators": self.generators, "relations": [str(r) for r in self.relations]}


@dataclass(frozen=True)
class Quotient:
    """π₁(M)/⟨h⟩ as a free product of cyclics, with the image of the eliminated boundary generator."""

    scheme: GroupScheme
    eliminated: str
    elimination: Word


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str  # powers-of-h | two-half-twists | surface-exception | quotient-involution
    i: Optional[int] = None
    j: Optional[int] = None
    sign: Optional[int] = None
    phi_k: Optional[int] = None
    beta: Optional[int] = None
    surface: Optional[str] = None
    generators: Tuple[str, ...] = ()
    element: str = ""

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "element": self.element}
        for key in ("i", "j", "sign", "phi_k", "beta", "surface"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.generators:
            out["generators"] = list(self.generators)
        return out


@dataclass(frozen=True)
class ReversibleFamilyReport:
    families: Tuple[FamilyDescriptor, ...]
    notes: Tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"families": [f.as_dict() for f in self.families], "notes": list(self.notes)}


@dataclass(frozen=True)
class GenNCertificate:
    n: int
    i: int
    j: int
    p: int
    p_prime: int
    M1: int
    M2: int
    x: int
    element: str
    conjugators: Tuple[str, ...]
    realization: Dict[str, object] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "p": self.p,
            "p_prime": self.p_prime,
            "M1": self.M1,
            "M2": self.M2,
            "x": self.x,
            "element": self.element,
            "conjugators": list(self.conjugators),
            "realization": dict(self.realization),
        }
