"""The modular group PSL(2,Z) = ⟨a, b | a², b³⟩."""

import logging
import math
from typing import List, Optional, Tuple

from core.errors import InternalInconsistency, NonpositiveBound, NotParabolic, SchemeMismatch, TrivialElement
from models.matrices import IntMatrix2, IsometryClass
from models.verdicts import Gen3Verdict, Reversal, Verdict
from models.words import PSL2Z, Word
from services.words import abelian_image, canonical, conjugate_to_inverse, enumerate_reduced, is_conjugate

logger = logging.getLogger(__name__)

A = Word.generator(PSL2Z, "a")
B = Word.generator(PSL2Z, "b")
IDENTITY = Word.identity(PSL2Z)

GENERATOR_MATRICES = (
    IntMatrix2.normalized(0, -1, 1, 0),
    IntMatrix2.normalized(0, 1, -1, -1),
)


def _check(w: Word) -> None:
    if w.scheme != PSL2Z:
        raise SchemeMismatch(f"expected a word over {PSL2Z}, got one over {w.scheme}")


def to_matrix(w: Word) -> IntMatrix2:
    _check(w)
    acc = IntMatrix2.identity()
    for s in w.syllables:
        for _ in range(s.exp):
            acc = acc @ GENERATOR_MATRICES[s.gen]
    return acc


def structural_class(w: Word) -> IsometryClass:
    """Class read off the cyclic core: elliptic iff length ≤ 1, parabolic iff a rotation of (ab)ⁿ."""
    core = canonical(w).syllables
    if not core:
        return IsometryClass.IDENTITY
    if len(core) == 1:
        return IsometryClass.ELLIPTIC_ORDER_2 if core[0].gen == 0 else IsometryClass.ELLIPTIC_ORDER_3
    b_exps = {s.exp for s in core if s.gen == 1}
    return IsometryClass.PARABOLIC if len(b_exps) == 1 else IsometryClass.HYPERBOLIC


def classify(w: Word) -> IsometryClass:
    m = to_matrix(w)
    tr = abs(m.trace)
    if tr == 0:
        cls = IsometryClass.ELLIPTIC_ORDER_2
    elif tr == 1:
        cls = IsometryClass.ELLIPTIC_ORDER_3
    elif tr == 2:
        cls = IsometryClass.IDENTITY if m == IntMatrix2.identity() else IsometryClass.PARABOLIC
    else:
        cls = IsometryClass.HYPERBOLIC
    if cls != structural_class(w):
        raise InternalInconsistency(f"trace class {cls.value} disagrees with word structure of {w}")
    return cls


def ab_power(n: int) -> Word:
    return (A * B) ** n


def parabolic_power(w: Word) -> int:
    if classify(w) != IsometryClass.PARABOLIC:
        raise NotParabolic(f"{w} is not parabolic")
    core = canonical(w)
    half = len(core) // 2
    n = half if core.syllables[1].exp == 1 else -half
    if canonical(ab_power(n)) != core:
        raise InternalInconsistency(f"{w} is not conjugate to (ab)^{n}")
    return n


def reversible(w: Word) -> Optional[Reversal[Word]]:
    """Reverser and involution decomposition w = u·v, or None when w is not reversible."""
    if w.is_identity:
        raise TrivialElement()
    r = conjugate_to_inverse(w)
    if r is None:
        return None
    if (w * w).is_identity:
        u, v = w, IDENTITY
    else:
        u, v = r, r * w
    if not (u * u).is_identity or not (v * v).is_identity or u * v != w:
        raise InternalInconsistency(f"bad involution decomposition of {w}: {u} / {v}")
    logger.debug("reverser %s for %s", r, w)
    return Reversal(reverser=r, decomposition=(u, v), strongly_reversible=(r * r).is_identity)


def torsion_relation(g: Word, conjugators: List[Word]) -> Word:
    """Product of k·g·k⁻¹ over the conjugators."""
    acc = IDENTITY
    for k in conjugators:
        acc = acc * g.conjugate(k)
    return acc


def gen3_holds(g: Word, h1: Word, k: Word) -> bool:
    return torsion_relation(g, [IDENTITY, h1, k]).is_identity


def transport(certificate: Tuple[Word, Word], c: Word) -> Tuple[Word, Word]:
    """Certificate for c·g·c⁻¹ from one for g."""
    h1, k = certificate
    return h1.conjugate(c), k.conjugate(c)


def invert_certificate(certificate: Tuple[Word, Word]) -> Tuple[Word, Word]:
    """Certificate for g⁻¹ from one for g."""
    h1, k = certificate
    return ~k * h1, ~k


def default_search_bound(w: Word, padding: int = 3) -> int:
    return math.ceil(len(canonical(w)) / 2) + padding


def _yes(g: Word, certificate: Tuple[Word, Word], bound: int, **witness) -> Gen3Verdict[Word]:
    if not gen3_holds(g, *certificate):
        raise InternalInconsistency(f"gen-3 certificate fails for {g}")
    return Gen3Verdict(Verdict.YES, certificate, "", bound, witness)


def gen3_torsion(w: Word, search_bound: int) -> Gen3Verdict[Word]:
    if w.is_identity:
        raise TrivialElement()
    if search_bound < 1:
        raise NonpositiveBound(search_bound)
    cls = classify(w)
    if cls == IsometryClass.ELLIPTIC_ORDER_3:
        return _yes(w, (IDENTITY, IDENTITY), search_bound)
    if cls == IsometryClass.ELLIPTIC_ORDER_2:
        return Gen3Verdict(Verdict.NO, reason="elliptic-order-2", bound_used=search_bound)
    if cls == IsometryClass.PARABOLIC:
        n = parabolic_power(w)
        if abs(n) != 2:
            return Gen3Verdict(Verdict.NO, reason="parabolic-n-not-±2", bound_used=search_bound)
        base = (B * B, B) if n == 2 else invert_certificate((B * B, B))
        c = is_conjugate(ab_power(n), w)
        return _yes(w, transport(base, c), search_bound, parabolic_power=n)

    image = abelian_image(w)
    if image.residues[0] % 2:
        return Gen3Verdict(Verdict.NO, reason="odd-a-count", bound_used=search_bound)
    # z·b^e1·z⁻¹·b^e2 has b-residue e1 + e2
    pairs = [(e1, e2) for e1 in (1, 2) for e2 in (1, 2) if (e1 + e2 - image.residues[1]) % 3 == 0]
    for z in enumerate_reduced(PSL2Z, search_bound):
        for e1, e2 in pairs:
            candidate = (B ** e1).conjugate(z) * B ** e2
            c = is_conjugate(candidate, w)
            if c is not None:
                logger.debug("gen-3 witness z=%s e1=%d e2=%d for %s", z, e1, e2, w)
                certificate = transport((B ** -e2, B ** e2), c)
                return _yes(w, certificate, search_bound, z=str(z), e1=e1, e2=e2)
    return Gen3Verdict(Verdict.UNKNOWN, reason="no-witness-within-bound", bound_used=search_bound)
