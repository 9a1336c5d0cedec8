"""B₃ as the central extension 1 → ⟨h⟩ → B₃ → PSL(2,Z) → 1.

With x = σ1σ2σ1 and y = σ1σ2 we have x² = y³ = h = (σ1σ2)³ central, a ↦ x and b ↦ y.
"""

import logging
import re
from typing import List, Optional, Tuple

from core.errors import InternalInconsistency, NonpositiveBound, ParseError, TrivialElement
from models.braids import LETTER_WEIGHTS, BraidLetter, BraidWord
from models.central import CentralElement
from models.verdicts import Gen3Verdict, Reversal, Verdict
from models.words import PSL2Z, Word
from services import modular
from services.extensions import CentralExtension, Letter
from services.words import enumerate_reduced, is_conjugate

logger = logging.getLogger(__name__)

B3 = CentralExtension(PSL2Z, weights=(1, 1), twist=(1, 1))

# σ1 = y⁻¹x and σ2 = x⁻¹y², over the quotient generators a (index 0) and b (index 1)
EXPANSIONS = {
    "s1": [(1, -1), (0, 1)],
    "s2": [(0, -1), (1, 2)],
    "x": [(0, 1)],
    "y": [(1, 1)],
    "h": [(None, 1)],
}
SIGMA_SPELLING = {"x": ["s1", "s2", "s1"], "y": ["s1", "s2"], "h": ["s1", "s2"] * 3}

TOKEN = re.compile(r"(s1|s2|S1|S2|x|y|X|Y|h|H)(?:\^([+-]?\d+))?$")

X = B3.letter(0)
Y = B3.letter(1)


def parse_braid(text: str) -> BraidWord:
    letters = []
    for match in re.finditer(r"\S+", text):
        if match.group(0) == "1":
            continue
        parsed = TOKEN.match(match.group(0))
        if not parsed:
            raise ParseError(f"bad braid token {match.group(0)!r}", match.start())
        name = parsed.group(1)
        exp = int(parsed.group(2)) if parsed.group(2) is not None else 1
        if name.isupper():
            name, exp = name.lower(), -exp
        if exp:
            letters.append(BraidLetter(name, exp))
    return BraidWord(tuple(letters))


def expand(w: BraidWord) -> List[Letter]:
    out: List[Letter] = []
    for letter in w.letters:
        block = EXPANSIONS[letter.name]
        if letter.exp < 0:
            block = [(g, -e) for g, e in reversed(block)]
        out.extend(block * abs(letter.exp))
    return out


def normal_form(w: BraidWord) -> CentralElement:
    return B3.normalize(expand(w))


def exponent_sum(w: BraidWord) -> int:
    return sum(LETTER_WEIGHTS[l.name] * l.exp for l in w.letters)


def central_exponent_sum(x: CentralElement) -> int:
    return 6 * x.m + sum(3 if s.gen == 0 else 2 * s.exp for s in x.q.syllables)


def to_braid(x: CentralElement) -> BraidWord:
    """Spell h^m · s(q) with the letters h, x, y."""
    letters = [BraidLetter("h", x.m)] if x.m else []
    letters.extend(BraidLetter("x" if s.gen == 0 else "y", s.exp) for s in x.q.syllables)
    return BraidWord(tuple(letters))


def to_sigma(w: BraidWord) -> BraidWord:
    """Rewrite x, y, h in σ letters."""
    letters = []
    for letter in w.letters:
        names = SIGMA_SPELLING.get(letter.name)
        if names is None:
            letters.append(letter)
            continue
        if letter.exp > 0:
            block = [BraidLetter(n, 1) for n in names]
        else:
            block = [BraidLetter(n, -1) for n in reversed(names)]
        letters.extend(block * abs(letter.exp))
    return BraidWord(tuple(letters))


def lift(q: Word) -> CentralElement:
    return B3.lift(q)


def conjugate_central(x1: CentralElement, x2: CentralElement) -> Optional[CentralElement]:
    """k with k·x1·k⁻¹ = x2: exponent sums agree and a lift of a quotient conjugator works."""
    if central_exponent_sum(x1) != central_exponent_sum(x2):
        return None
    kq = is_conjugate(x1.q, x2.q)
    if kq is None:
        return None
    k = lift(kq)
    if B3.conjugate(x1, k) != x2:
        raise InternalInconsistency(f"lifted conjugator {kq} fails for {x1} -> {x2}")
    return k


def conjugate_b3(g1: BraidWord, g2: BraidWord) -> Optional[BraidWord]:
    k = conjugate_central(normal_form(g1), normal_form(g2))
    return None if k is None else to_braid(k)


def commutator(k0: CentralElement) -> CentralElement:
    """[x, k0] = x·k0·x⁻¹·k0⁻¹."""
    return B3.multiply(X, k0, B3.invert(X), B3.invert(k0))


def commutator_witness(x: CentralElement, u: Word, v: Word) -> Optional[Tuple[CentralElement, CentralElement]]:
    """(k0, c) with c·[x, k0]·c⁻¹ = x, built from q = u·v with u, v involutions, then shortened."""
    a = modular.A
    s, t = is_conjugate(a, u), is_conjugate(a, v)
    if s is None or t is None:
        return None
    best = ~s * t
    for z in enumerate_reduced(PSL2Z, max(len(best) - 1, 0)):
        if is_conjugate(a * z * a * ~z, x.q) is not None:
            best = z
            break
    k0 = lift(best)
    c = conjugate_central(commutator(k0), x)
    return None if c is None else (k0, c)


def reversible_central(x: CentralElement) -> Optional[Reversal[CentralElement]]:
    if x.is_identity:
        raise TrivialElement()
    if central_exponent_sum(x) != 0:
        return None
    quotient = modular.reversible(x.q)
    if quotient is None:
        return None
    k = lift(quotient.reverser)
    if B3.conjugate(x, k) != B3.invert(x):
        raise InternalInconsistency(f"lifted reverser {quotient.reverser} fails for {x}")
    u, v = quotient.decomposition
    witness = commutator_witness(x, u, v)
    notes = [] if witness else ["no commutator witness found"]
    return Reversal(reverser=k, decomposition=None, strongly_reversible=False, commutator=witness, notes=notes)


def reversible_b3(g: BraidWord) -> Optional[Reversal[BraidWord]]:
    found = reversible_central(normal_form(g))
    if found is None:
        return None
    witness = None
    if found.commutator is not None:
        witness = (to_braid(found.commutator[0]), to_braid(found.commutator[1]))
    return Reversal(
        reverser=to_braid(found.reverser),
        strongly_reversible=False,
        commutator=witness,
        notes=found.notes,
    )


def gen3_holds(g: CentralElement, h1: CentralElement, k: CentralElement) -> bool:
    parts = [B3.conjugate(g, c) for c in (B3.identity(), h1, k)]
    return B3.multiply(*parts).is_identity


def _exponent_notes(e: int) -> List[str]:
    # e1^p·e2^p'·h^x has exponent sum 2(3x + p + p')
    total = e // 2
    if e % 2 or e1e2_form_exponent(total) is not None:
        return []
    return [f"3x {'+' if total >= 0 else '-'} {abs(total)} = 0 has no integer solution"]


def gen3_torsion_central(x: CentralElement, bound: int) -> Gen3Verdict[CentralElement]:
    if x.is_identity:
        raise TrivialElement()
    if bound < 1:
        raise NonpositiveBound(bound)
    e = central_exponent_sum(x)
    if e != 0:
        return Gen3Verdict(Verdict.NO, reason="exponent-sum-nonzero", bound_used=bound, notes=_exponent_notes(e))
    quotient = modular.gen3_torsion(x.q, bound)
    if quotient.tag == Verdict.NO:
        return Gen3Verdict(Verdict.NO, reason=f"quotient-{quotient.reason}", bound_used=bound)
    # e1 = y may be fixed: conjugating e1·e2²·h⁻¹ moves any e1 to y
    h_inv = B3.central(-1)
    for z in enumerate_reduced(PSL2Z, bound):
        e2 = B3.conjugate(Y, lift(z))
        if e2 == Y:
            continue
        candidate = B3.multiply(Y, e2, e2, h_inv)
        c = conjugate_central(candidate, x)
        if c is None:
            continue
        e2_sq = B3.multiply(e2, e2)
        h1, k = B3.conjugate(B3.invert(e2_sq), c), B3.conjugate(e2_sq, c)
        if not gen3_holds(x, h1, k):
            raise InternalInconsistency(f"gen-3 certificate fails for {x}")
        logger.debug("gen-3 witness e2=%s for %s", e2, x)
        return Gen3Verdict(Verdict.YES, (h1, k), "", bound, {"e1": str(to_braid(Y)), "e2": str(to_braid(e2)), "x": -1})
    return Gen3Verdict(Verdict.UNKNOWN, reason="no-witness-within-bound", bound_used=bound)


def gen3_torsion_b3(g: BraidWord, bound: int) -> Gen3Verdict[BraidWord]:
    verdict = gen3_torsion_central(normal_form(g), bound)
    certificate = None
    if verdict.certificate is not None:
        certificate = (to_braid(verdict.certificate[0]), to_braid(verdict.certificate[1]))
    return Gen3Verdict(verdict.tag, certificate, verdict.reason, verdict.bound_used, verdict.witness, verdict.notes)


def e1e2_form_exponent(total: int) -> Optional[int]:
    """x with 3x + total = 0, where total = p + p' in e1^p·e2^p'·h^x; None when there is none."""
    return -total // 3 if total % 3 == 0 else None
