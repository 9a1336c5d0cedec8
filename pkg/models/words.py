from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from core.errors import InvalidInvariant, ParseError, SchemeMismatch, UnknownGenerator


@dataclass(frozen=True)
class Generator:
    name: str
    order: Optional[int] = None  # None means infinite order

    def __post_init__(self):
        if not self.name or not self.name.replace("_", "").isalnum() or self.name[0].isdigit():
            raise InvalidInvariant(f"bad generator name {self.name!r}")
        if self.order is not None and self.order < 2:
            raise InvalidInvariant(f"generator {self.name} has order {self.order} < 2")

    def __str__(self) -> str:
        return f"{self.name}:{self.order if self.order is not None else 'inf'}"


@dataclass(frozen=True)
class GroupScheme:
    """A free product of cyclic groups, given by its ordered generators."""

    generators: Tuple[Generator, ...]

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InvalidInvariant(f"duplicate generator names in {names}")

    @classmethod
    def parse(cls, text: str) -> "GroupScheme":
        """Parse a scheme literal such as ``a:2, b:3, d:inf``."""
        gens = []
        offset = 0
        for part in text.split(","):
            token = part.strip()
            position = offset + (len(part) - len(part.lstrip()))
            offset += len(part) + 1
            if not token:
                continue
            name, sep, order = token.partition(":")
            name, order = name.strip(), order.strip()
            if not sep or not name:
                raise ParseError(f"expected name:order, got {token!r}", position)
            if order in ("inf", "oo", "∞"):
                gens.append(Generator(name, None))
            elif order.isdigit():
                gens.append(Generator(name, int(order)))
            else:
                raise ParseError(f"bad order {order!r}", position)
        if not gens:
            raise ParseError("empty scheme", 0)
        return cls(tuple(gens))

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    @property
    def orders(self) -> List[Optional[int]]:
        return [g.order for g in self.generators]

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g.name == name:
                return i
        raise UnknownGenerator(name)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return ", ".join(str(g) for g in self.generators)


class Syllable(NamedTuple):
    gen: int
    exp: int


def reduce_syllables(scheme: GroupScheme, pairs: Iterable[Tuple[int, int]]) -> Tuple[Syllable, ...]:
    """Free-product normal form of a sequence of (generator index, exponent) pairs."""
    orders = scheme.orders
    stack: List[Syllable] = []
    for gen, exp in pairs:
        order = orders[gen]
        if order is not None:
            exp %= order
        if exp == 0:
            continue
        if stack and stack[-1].gen == gen:
            exp += stack.pop().exp
            if order is not None:
                exp %= order
            if exp:
                stack.append(Syllable(gen, exp))
        else:
            stack.append(Syllable(gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    scheme: GroupScheme
    syllables: Tuple[Syllable, ...] = ()

    @classmethod
    def identity(cls, scheme: GroupScheme) -> "Word":
        return cls(scheme, ())

    @classmethod
    def generator(cls, scheme: GroupScheme, name: str, exp: int = 1) -> "Word":
        return cls(scheme, reduce_syllables(scheme, [(scheme.index(name), exp)]))

    @classmethod
    def from_pairs(cls, scheme: GroupScheme, pairs: Iterable[Tuple[int, int]]) -> "Word":
        return cls(scheme, reduce_syllables(scheme, pairs))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def _check(self, other: "Word") -> None:
        if not isinstance(other, Word):
            raise TypeError(f"cannot combine Word with {type(other).__name__}")
        if other.scheme != self.scheme:
            raise SchemeMismatch(f"words over different schemes: {self.scheme} / {other.scheme}")

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.scheme, reduce_syllables(self.scheme, self.syllables + other.syllables))

    def __invert__(self) -> "Word":
        return Word(self.scheme, reduce_syllables(self.scheme, [(s.gen, -s.exp) for s in reversed(self.syllables)]))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else ~self
        acc = Word.identity(self.scheme)
        for _ in range(abs(n)):
            acc = acc * base
        return acc

    def conjugate(self, k: "Word") -> "Word":
        """Return k·self·k⁻¹."""
        return k * self * ~k

    def __len__(self) -> int:
        return len(self.syllables)

    def __lt__(self, other: "Word") -> bool:
        return (len(self), self.syllables) < (len(other), other.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        names = self.scheme.names
        return " ".join(names[s.gen] if s.exp == 1 else f"{names[s.gen]}^{s.exp}" for s in self.syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def least_rotation(syllables: Sequence[Syllable]) -> int:
    """Offset of the lexicographically least rotation."""
    n = len(syllables)
    if n <= 1:
        return 0
    doubled = tuple(syllables) + tuple(syllables)
    return min(range(n), key=lambda k: doubled[k:k + n])


@dataclass(frozen=True)
class CyclicWord:
    """Least rotation of a cyclically reduced word; equal values mean conjugate words."""

    scheme: GroupScheme
    syllables: Tuple[Syllable, ...]

    @property
    def word(self) -> Word:
        return Word(self.scheme, self.syllables)

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return f"({self.word})"


@dataclass(frozen=True)
class AbelianImage:
    scheme: GroupScheme
    residues: Tuple[int, ...]

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.scheme.names, self.residues))


PSL2Z = GroupScheme((Generator("a", 2), Generator("b", 3)))
