"""Word arithmetic, normal forms and conjugacy in free products of cyclic groups."""

import logging
import re
from typing import Iterator, List, Optional, Sequence, Tuple

from core.errors import InternalInconsistency, InvalidInvariant, ParseError, SchemeMismatch, TrivialElement
from models.words import (
    AbelianImage,
    CyclicWord,
    GroupScheme,
    Syllable,
    Word,
    least_rotation,
    reduce_syllables,
)

logger = logging.getLogger(__name__)

TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?$")


def tokenize(text: str) -> List[Tuple[str, int, int]]:
    """Split ``a b^2 a b^-1`` into (name, exponent, position) triples."""
    tokens = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        if token == "1":
            continue
        parsed = TOKEN.match(token)
        if not parsed:
            raise ParseError(f"bad token {token!r}", match.start())
        exp = int(parsed.group(2)) if parsed.group(2) is not None else 1
        tokens.append((parsed.group(1), exp, match.start()))
    return tokens


def parse_word(text: str, scheme: GroupScheme) -> Word:
    return reduce([(name, exp) for name, exp, _ in tokenize(text)], scheme)


def reduce(raw: Sequence[Tuple[str, int]], scheme: GroupScheme) -> Word:
    pairs = [(scheme.index(token), exp) for token, exp in raw]
    return Word(scheme, reduce_syllables(scheme, pairs))


def invert(w: Word) -> Word:
    return ~w


def cyclic_reduce(w: Word) -> Tuple[CyclicWord, Word]:
    """Return (core, c) with c⁻¹·w·c equal to the core word."""
    scheme = w.scheme
    orders = scheme.orders
    cur = list(w.syllables)
    conjugator: List[Syllable] = []
    while len(cur) >= 2 and cur[0].gen == cur[-1].gen:
        first, last = cur[0], cur[-1]
        conjugator.append(first)
        merged = last.exp + first.exp
        if orders[first.gen] is not None:
            merged %= orders[first.gen]
        cur = cur[1:-1] + ([Syllable(first.gen, merged)] if merged else [])
    offset = least_rotation(cur)
    conjugator.extend(cur[:offset])
    core = tuple(cur[offset:] + cur[:offset])
    return CyclicWord(scheme, core), Word.from_pairs(scheme, conjugator)


def canonical(w: Word) -> CyclicWord:
    return cyclic_reduce(w)[0]


def primitive_root(u: Word) -> Word:
    """Shortest R with u = R^k syllable-wise."""
    n = len(u)
    for p in range(1, n + 1):
        if n % p == 0 and u.syllables == u.syllables[:p] * (n // p):
            return Word(u.scheme, u.syllables[:p])
    return u


def centralizer_candidates(u: Word, reach: int) -> List[Word]:
    """Elements commuting with a cyclically reduced u, enough to find short conjugators."""
    scheme = u.scheme
    if u.is_identity:
        return [u]
    if len(u) == 1:
        gen = u.syllables[0].gen
        order = scheme.orders[gen]
        exps = range(order) if order is not None else range(-reach - 1, reach + 2)
        return [Word.from_pairs(scheme, [(gen, j)]) for j in exps]
    root = primitive_root(u)
    span = reach // len(root) + 2
    return [root ** j for j in range(-span, span + 1)]


def is_conjugate(u: Word, v: Word) -> Optional[Word]:
    """Return the least k with k·u·k⁻¹ = v, or None when u and v are not conjugate."""
    if u.scheme != v.scheme:
        raise SchemeMismatch(f"words over different schemes: {u.scheme} / {v.scheme}")
    core_u, cu = cyclic_reduce(u)
    core_v, cv = cyclic_reduce(v)
    if core_u != core_v:
        return None
    k0 = cv * ~cu
    reach = sum(abs(s.exp) for s in k0.syllables) + len(k0)
    best = min(cv * z * ~cu for z in centralizer_candidates(core_u.word, reach))
    if u.conjugate(best) != v:
        raise InternalInconsistency(f"conjugator {best} fails for {u} -> {v}")
    logger.debug("conjugator %s for %s -> %s", best, u, v)
    return best


def conjugate_to_inverse(w: Word) -> Optional[Word]:
    if w.is_identity:
        raise TrivialElement()
    return is_conjugate(w, ~w)


def abelian_image(w: Word) -> AbelianImage:
    scheme = w.scheme
    sums = [0] * len(scheme)
    for s in w.syllables:
        sums[s.gen] += s.exp
    residues = tuple(x % o if o is not None else x for x, o in zip(sums, scheme.orders))
    return AbelianImage(scheme, residues)


def syllable_alphabet(scheme: GroupScheme, max_exponent: int = 1) -> List[Syllable]:
    letters = []
    for gen, order in enumerate(scheme.orders):
        if order is not None:
            letters.extend(Syllable(gen, e) for e in range(1, order))
        else:
            letters.extend(Syllable(gen, e) for e in range(-max_exponent, max_exponent + 1) if e)
    return sorted(letters)


def enumerate_reduced(scheme: GroupScheme, max_syllables: int, max_exponent: int = 1) -> Iterator[Word]:
    """Every reduced word with at most max_syllables syllables, shortest first then lexicographic.

    Infinite-order generators contribute exponents up to max_exponent in absolute value.
    """
    if max_syllables < 0:
        raise InvalidInvariant(f"max_syllables must be nonnegative, got {max_syllables}")
    alphabet = syllable_alphabet(scheme, max_exponent)
    level: List[Tuple[Syllable, ...]] = [()]
    yield Word(scheme, ())
    for _ in range(max_syllables):
        nxt = []
        for syllables in level:
            for letter in alphabet:
                if not syllables or syllables[-1].gen != letter.gen:
                    nxt.append(syllables + (letter,))
        level = nxt
        for syllables in level:
            yield Word(scheme, syllables)
