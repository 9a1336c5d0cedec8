from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Generic, List, Optional, Tuple, TypeVar

from core.errors import NonpositiveBound

T = TypeVar("T")


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown-within-bound"


@dataclass(frozen=True)
class Gen3Verdict(Generic[T]):
    """Outcome of a generalised 3-torsion query; certificate is (h1, k)."""

    tag: Verdict
    certificate: Optional[Tuple[T, T]] = None
    reason: str = ""
    bound_used: int = 0
    witness: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class Reversal(Generic[T]):
    """A reverser r with r·w·r⁻¹ = w⁻¹ and, when the group has them, involutions u, v with w = u·v."""

    reverser: T
    decomposition: Optional[Tuple[T, T]] = None
    strongly_reversible: bool = True
    commutator: Optional[Tuple[T, T]] = None  # (k0, c) with w = c·[x, k0]·c⁻¹
    notes: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class SearchBudget:
    max_conjugator_syllables: int = 6
    max_central_exponent: int = 2
    max_candidates: int = 10**6

    def __post_init__(self):
        for name in ("max_conjugator_syllables", "max_central_exponent", "max_candidates"):
            if getattr(self, name) <= 0:
                raise NonpositiveBound(getattr(self, name))

    def as_dict(self) -> Dict[str, int]:
        return {
            "max_conjugator_syllables": self.max_conjugator_syllables,
            "max_central_exponent": self.max_central_exponent,
            "max_candidates": self.max_candidates,
        }


@dataclass
class SweepReport:
    suite: str
    budget: SearchBudget
    checked: int = 0
    mismatches: List[Dict[str, Any]] = field(default_factory=list)
    counts: Dict[str, Any] = field(default_factory=dict)
    truncated: bool = False

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def as_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "budget": self.budget.as_dict(),
            "checked": self.checked,
            "mismatches": self.mismatches,
            "counts": self.counts,
            "truncated": self.truncated,
        }
