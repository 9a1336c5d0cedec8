"""Arithmetic in extensions 1 → ⟨h⟩ → G → Q → 1 with Q a free product of cyclics.

Each finite-order generator g of Q (order μ) lifts to c with c^μ = h^β; every generator
acts on h by g·h·g⁻¹ = h^φ(g) with φ(g) = ±1 (finite-order generators act trivially).
Elements are stored as h^m · s(q), where s lifts each syllable g^e (0 < e < μ) to c^e.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from core.errors import InvalidInvariant, SchemeMismatch
from models.central import CentralElement
from models.words import GroupScheme, Syllable, Word


# a letter is (generator index, exponent), or (None, t) for h^t
Letter = Tuple[Optional[int], int]


@dataclass(frozen=True)
class CentralExtension:
    quotient: GroupScheme
    weights: Tuple[int, ...]
    twist: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.quotient)
        if len(self.weights) != n or len(self.twist) != n:
            raise InvalidInvariant("weights and twist must have one entry per generator")
        for order, sign in zip(self.quotient.orders, self.twist):
            if sign not in (1, -1):
                raise InvalidInvariant(f"twist values must be ±1, got {sign}")
            if order is not None and sign != 1:
                raise InvalidInvariant("finite-order generators must act trivially on h")

    @property
    def is_central(self) -> bool:
        return all(sign == 1 for sign in self.twist)

    def identity(self) -> CentralElement:
        return CentralElement(0, Word.identity(self.quotient))

    def central(self, t: int) -> CentralElement:
        return CentralElement(t, Word.identity(self.quotient))

    def lift(self, q: Word) -> CentralElement:
        if q.scheme != self.quotient:
            raise SchemeMismatch("word is not over the quotient scheme")
        return CentralElement(0, q)

    def letter(self, gen: int, exp: int = 1) -> CentralElement:
        return self.normalize([(gen, exp)])

    def phi(self, q: Word) -> int:
        sign = 1
        for s in q.syllables:
            if s.exp % 2:
                sign *= self.twist[s.gen]
        return sign

    def normalize(self, letters: Iterable[Letter]) -> CentralElement:
        """Rewrite a letter sequence into h^m · s(q)."""
        orders = self.quotient.orders
        stack: List[Syllable] = []
        signs = [1]  # signs[i] = φ(stack[:i])
        m = 0
        for gen, exp in letters:
            if gen is None:
                m += signs[-1] * exp
                continue
            order = orders[gen]
            if stack and stack[-1].gen == gen:
                exp += stack.pop().exp
                signs.pop()
            if order is not None:
                carry, exp = divmod(exp, order)
                m += signs[-1] * self.weights[gen] * carry
            if exp:
                stack.append(Syllable(gen, exp))
                signs.append(signs[-1] * (self.twist[gen] if exp % 2 else 1))
        return CentralElement(m, Word(self.quotient, tuple(stack)))

    @staticmethod
    def letters(x: CentralElement) -> List[Letter]:
        return [(None, x.m)] + [(s.gen, s.exp) for s in x.q.syllables]

    def multiply(self, *items: CentralElement) -> CentralElement:
        letters: List[Letter] = []
        for x in items:
            if x.q.scheme != self.quotient:
                raise SchemeMismatch("element is not over this extension")
            letters.extend(self.letters(x))
        return self.normalize(letters)

    def invert(self, x: CentralElement) -> CentralElement:
        letters: List[Letter] = [(s.gen, -s.exp) for s in reversed(x.q.syllables)]
        letters.append((None, -x.m))
        return self.normalize(letters)

    def power(self, x: CentralElement, n: int) -> CentralElement:
        base = x if n >= 0 else self.invert(x)
        return self.multiply(*([base] * abs(n))) if n else self.identity()

    def conjugate(self, x: CentralElement, k: CentralElement) -> CentralElement:
        """Return k·x·k⁻¹."""
        return self.multiply(k, x, self.invert(k))
