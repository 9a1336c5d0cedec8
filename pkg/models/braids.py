from dataclasses import dataclass
from typing import NamedTuple, Tuple

from core.errors import ParseError

# σ-exponent sum of each letter
LETTER_WEIGHTS = {"s1": 1, "s2": 1, "x": 3, "y": 2, "h": 6}


class BraidLetter(NamedTuple):
    name: str
    exp: int

    def __str__(self) -> str:
        return self.name if self.exp == 1 else f"{self.name}^{self.exp}"


@dataclass(frozen=True)
class BraidWord:
    """A word in σ1, σ2 and the auxiliary letters x = σ1σ2σ1, y = σ1σ2, h = (σ1σ2)³."""

    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if letter.name not in LETTER_WEIGHTS or letter.exp == 0:
                raise ParseError(f"bad braid letter {letter}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __invert__(self) -> "BraidWord":
        return BraidWord(tuple(BraidLetter(l.name, -l.exp) for l in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.letters) if self.letters else "1"
