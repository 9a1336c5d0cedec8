"""Seifert-fibered groups: invariants, presentations, quotients and reversibility."""

import logging
import math
import re
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple, Union

from core.errors import InternalInconsistency, InvalidInvariant, ParseError, TrivialElement, UnsupportedBase
from models.central import CentralElement
from models.seifert import (
    ExceptionalFiber,
    FamilyDescriptor,
    GenNCertificate,
    Presentation,
    Quotient,
    Relation,
    ReversibleFamilyReport,
    SeifertData,
)
from models.verdicts import Reversal
from models.words import Generator, GroupScheme, Word
from services.braid3 import B3, X, Y
from services.extensions import CentralExtension, Letter
from services.words import conjugate_to_inverse, cyclic_reduce, parse_word, primitive_root

logger = logging.getLogger(__name__)

FIBER = re.compile(r"\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)")
B_VALUE = re.compile(r"\s*([+-]?\d+)\s*")
PHI_ITEM = re.compile(r"\s*([A-Za-z]\w*)\s*=\s*([+-]?\d+)\s*$")

TRIVIAL_PHI_NOTE = (
    "phi is trivial: only c_i^(mu_i/2) k c_j^(-mu_j/2) k^-1 families are listed, with mu_i, mu_j even "
    "and beta_i = beta_j; odd or unequal fibers are not listed"
)
CROSSCAP_NOTE = "three or more crosscaps: no reversible elements beyond the listed families are assumed"


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for pos in range(start, len(text)):
        if text[pos] == "(":
            depth += 1
        elif text[pos] == ")":
            depth -= 1
            if depth == 0:
                return pos
    raise ParseError("unbalanced parentheses", start)


def parse_seifert(text: str) -> SeifertData:
    """Parse ``(O,o,g | b; (mu,beta),...); boundaries=r; phi: name=±1,...`` or ``(N,k | b; ...)``."""
    start = text.find("(")
    if start < 0 or text[:start].strip():
        raise ParseError("expected '(' opening the invariants", max(start, 0))
    end = _matching_paren(text, start)
    inner = text[start + 1:end]
    if "|" not in inner:
        raise ParseError("expected '|' between base and fiber data", start)
    left, right = inner.split("|", 1)
    right_offset = start + 1 + len(left) + 1

    head = [t.strip() for t in left.split(",")]
    if head[0] not in ("O", "N") or not head[-1].lstrip("+-").isdigit() or len(head) not in (2, 3):
        raise ParseError(f"bad base descriptor {left.strip()!r}", start + 1)
    if len(head) == 3 and head[1] not in ("o", "n"):
        raise ParseError(f"bad orientation token {head[1]!r}", start + 1)
    orientable = head[0] == "O"
    genus = int(head[-1])

    b_match = B_VALUE.match(right)
    if not b_match:
        raise ParseError("expected the integer b after '|'", right_offset)
    b = int(b_match.group(1))
    rest = right[b_match.end():]
    fibers = [ExceptionalFiber(int(m.group(1)), int(m.group(2))) for m in FIBER.finditer(rest)]
    leftover = FIBER.sub("", rest)
    if leftover.strip(" ,;\t\n"):
        raise ParseError(f"unexpected text {leftover.strip()!r} in fiber list", right_offset + b_match.end())

    boundaries = 0
    phi: List[Tuple[str, int]] = []
    offset = end + 1
    for clause in text[end + 1:].split(";"):
        position = offset
        offset += len(clause) + 1
        clause = clause.strip()
        if not clause:
            continue
        key, sep, value = clause.partition("=") if clause.startswith("boundaries") else clause.partition(":")
        key = key.strip()
        if key == "boundaries" and sep:
            if not value.strip().isdigit():
                raise ParseError(f"bad boundary count {value.strip()!r}", position)
            boundaries = int(value)
        elif key == "phi" and sep:
            for item in filter(str.strip, value.split(",")):
                parsed = PHI_ITEM.match(item)
                if not parsed:
                    raise ParseError(f"bad phi assignment {item.strip()!r}", position)
                phi.append((parsed.group(1), int(parsed.group(2))))
        else:
            raise ParseError(f"unknown clause {clause!r}", position)

    return SeifertData(
        base_orientable=orientable,
        genus_or_crosscaps=genus,
        boundary_count=boundaries,
        b=b,
        exceptional=tuple(fibers),
        phi=tuple(phi),
    )


def _free_scheme(names: Sequence[str]) -> GroupScheme:
    return GroupScheme(tuple(Generator(name) for name in names))


def long_relation_prefix(d: SeifertData) -> List[Tuple[str, int]]:
    """Letters of ∏[a_i,b_i] (or ∏x_i²) ∏c_i ∏d_i, without the trailing h^b."""
    letters: List[Tuple[str, int]] = []
    if d.base_orientable:
        for i in range(1, d.genus_or_crosscaps + 1):
            letters += [(f"a{i}", 1), (f"b{i}", 1), (f"a{i}", -1), (f"b{i}", -1)]
    else:
        letters += [(name, 2) for name in d.handle_generators]
    letters += [(name, 1) for name in d.fiber_generators]
    letters += [(name, 1) for name in d.boundary_generators]
    return letters


def presentation(d: SeifertData) -> Presentation:
    scheme = _free_scheme(d.handle_generators + d.fiber_generators + d.boundary_generators + ["h"])

    def word(*letters: Tuple[str, int]) -> Word:
        return Word.from_pairs(scheme, [(scheme.index(name), exp) for name, exp in letters])

    one = Word.identity(scheme)
    h = word(("h", 1))
    relations = []
    for name in d.base_generators:
        relations.append(Relation(word((name, 1), ("h", 1), (name, -1)), word(("h", d.phi_of(name)))))
    for name, fiber in zip(d.fiber_generators, d.exceptional):
        relations.append(Relation(word((name, 1), ("h", 1), (name, -1)), h))
        relations.append(Relation(word((name, fiber.mu)), word(("h", fiber.beta))))
    relations.append(Relation(word(*long_relation_prefix(d), ("h", d.b)), one))
    return Presentation(scheme, tuple(relations))


def _translate(w: Word, scheme: GroupScheme, substitutions: Dict[str, Word]) -> Word:
    """Rewrite w over scheme by name, replacing substituted generators."""
    acc = Word.identity(scheme)
    for s in w.syllables:
        name = w.scheme.names[s.gen]
        if name in substitutions:
            acc = acc * substitutions[name] ** s.exp
        else:
            acc = acc * Word.from_pairs(scheme, [(scheme.index(name), s.exp)])
    return acc


def kill_fiber(pres: Presentation, fiber: str = "h") -> Presentation:
    """Set the fiber generator to 1 and drop relations that become trivial."""
    scheme = _free_scheme([n for n in pres.generators if n != fiber])
    one = Word.identity(scheme)
    relations = []
    for rel in pres.relations:
        lhs = _translate(rel.lhs, scheme, {fiber: one})
        rhs = _translate(rel.rhs, scheme, {fiber: one})
        if not (lhs * ~rhs).is_identity:
            relations.append(Relation(lhs * ~rhs, one))
    return Presentation(scheme, tuple(relations))


def eliminate_generator(pres: Presentation, name: str) -> Tuple[Presentation, Word]:
    """Tietze move: solve a relation for a generator occurring once with exponent ±1 and substitute it."""
    index = pres.scheme.index(name)
    for pos, rel in enumerate(pres.relations):
        relator = rel.relator
        hits = [i for i, s in enumerate(relator.syllables) if s.gen == index]
        if len(hits) == 1 and abs(relator.syllables[hits[0]].exp) == 1:
            break
    else:
        raise InvalidInvariant(f"no relation can be solved for {name}")
    scheme = _free_scheme([n for n in pres.generators if n != name])
    cut = hits[0]
    before = Word(pres.scheme, relator.syllables[:cut])
    after = Word(pres.scheme, relator.syllables[cut + 1:])
    # before · g^ε · after = 1
    solved = _translate(~before * ~after, scheme, {})
    if relator.syllables[cut].exp < 0:
        solved = ~solved
    one = Word.identity(scheme)
    relations = []
    for other_pos, rel in enumerate(pres.relations):
        if other_pos == pos:
            continue
        relator = _translate(rel.relator, scheme, {name: solved})
        if not relator.is_identity:
            relations.append(Relation(relator, one))
    return Presentation(scheme, tuple(relations)), solved


def recognize_free_product(pres: Presentation) -> Optional[GroupScheme]:
    """The free product of cyclics presented by pres, when every relator is a single power."""
    orders: Dict[str, int] = {}
    for rel in pres.relations:
        relator = rel.relator
        if len(relator) != 1:
            return None
        s = relator.syllables[0]
        name = pres.scheme.names[s.gen]
        orders[name] = math.gcd(orders.get(name, 0), abs(s.exp))
    gens = []
    for name in pres.generators:
        order = orders.get(name)
        if order == 1:
            continue
        gens.append(Generator(name, order))
    return GroupScheme(tuple(gens))


def tietze_quotient(d: SeifertData) -> Optional[Quotient]:
    """π₁(M)/⟨h⟩ via Tietze moves; None for closed bases."""
    if d.boundary_count == 0:
        return None
    eliminated = d.boundary_generators[-1]
    killed = kill_fiber(presentation(d))
    reduced, solved = eliminate_generator(killed, eliminated)
    scheme = recognize_free_product(reduced)
    if scheme is None:
        return None
    return Quotient(scheme, eliminated, _translate(solved, scheme, {}))


def quotient_scheme(d: SeifertData) -> Optional[GroupScheme]:
    quotient = tietze_quotient(d)
    return None if quotient is None else quotient.scheme


class SeifertGroup:
    """π₁(M) for a base with boundary, as a twisted extension of its free-product quotient."""

    def __init__(self, data: SeifertData):
        quotient = tietze_quotient(data)
        if quotient is None:
            raise UnsupportedBase(f"exact computations need a base with boundary: {data}")
        self.data = data
        self.quotient = quotient
        self.presentation = presentation(data)
        scheme = quotient.scheme
        betas = dict(zip(data.fiber_generators, (f.beta for f in data.exceptional)))
        self.extension = CentralExtension(
            scheme,
            weights=tuple(betas.get(name, 0) for name in scheme.names),
            twist=tuple(data.phi_of(name) if name not in betas else 1 for name in scheme.names),
        )
        self._letters: Dict[str, List[Letter]] = {"h": [(None, 1)]}
        for index, name in enumerate(scheme.names):
            self._letters[name] = [(index, 1)]
        # d_r = P⁻¹·h^(-b) where P·d_r·h^b = 1
        prefix = [(scheme.index(n), e) for n, e in long_relation_prefix(data) if n != quotient.eliminated]
        self._letters[quotient.eliminated] = [(g, -e) for g, e in reversed(prefix)] + [(None, -data.b)]

    @property
    def scheme(self) -> GroupScheme:
        return self.quotient.scheme

    def element(self, w: Word) -> CentralElement:
        """Normal form of a word over the presentation alphabet."""
        letters: List[Letter] = []
        for s in w.syllables:
            block = self._letters[w.scheme.names[s.gen]]
            if s.exp < 0:
                block = [(g, -e) for g, e in reversed(block)]
            letters.extend(block * abs(s.exp))
        return self.extension.normalize(letters)

    def parse(self, text: str) -> CentralElement:
        return self.element(parse_word(text, self.presentation.scheme))

    def generator(self, name: str) -> CentralElement:
        return self.extension.normalize(self._letters[name])

    def relators_hold(self) -> bool:
        return all(self.element(rel.relator).is_identity for rel in self.presentation.relations)


def _as_element(group: SeifertGroup, g: Union[str, Word, CentralElement]) -> CentralElement:
    if isinstance(g, CentralElement):
        return g
    if isinstance(g, Word):
        return group.element(g)
    return group.parse(g)


def _defect(ext: CentralExtension, x: CentralElement, target: CentralElement, k: CentralElement) -> int:
    y = ext.conjugate(x, k)
    if y.q != target.q:
        raise InternalInconsistency(f"conjugator does not reverse the quotient image of {x}")
    return y.m - target.m


def _settle(ext: CentralExtension, k: CentralElement, defect: int, sign: int) -> Optional[CentralElement]:
    """Adjust k by a power of h so the central defect vanishes."""
    if sign == 1:
        return k if defect == 0 else None
    if defect % 2:
        return None
    return ext.multiply(ext.central(-defect // 2), k)


def reversible_seifert(g: Union[str, Word, CentralElement], d: SeifertData) -> Optional[Reversal[CentralElement]]:
    group = SeifertGroup(d)
    ext = group.extension
    x = _as_element(group, g)
    if x.is_identity:
        raise TrivialElement()
    target = ext.invert(x)

    if x.q.is_identity:
        twisted = [i for i, sign in enumerate(ext.twist) if sign == -1]
        if not twisted:
            return None
        k = ext.letter(twisted[0])
        if ext.conjugate(x, k) != target:
            raise InternalInconsistency(f"{group.scheme.names[twisted[0]]} does not invert {x}")
        return Reversal(reverser=k, strongly_reversible=ext.multiply(k, k).is_identity)

    r0 = conjugate_to_inverse(x.q)
    if r0 is None:
        return None
    core, cq = cyclic_reduce(x.q)
    root = ext.lift(primitive_root(core.word))
    lifted_cq = ext.lift(cq)
    base = ext.multiply(ext.lift(r0), lifted_cq)
    tail = ext.invert(lifted_cq)
    sign = ext.phi(x.q)

    def candidate(j: int) -> CentralElement:
        return ext.multiply(base, ext.power(root, j), tail)

    span = 4 * max([f.mu for f in d.exceptional] + [1])
    order = sorted(range(-span, span + 1), key=lambda j: (abs(j), j < 0))
    defects = {}
    for j in order:
        k = candidate(j)
        defects[j] = _defect(ext, x, target, k)
        found = _settle(ext, k, defects[j], sign)
        if found is not None:
            return _reversal(ext, x, target, found)
    if sign == 1:
        # along each parity class the defect is an arithmetic progression
        for start in (0, 1):
            d0, d1 = defects[start], defects[start + 2]
            step = d1 - d0
            if step and (-d0) % step == 0:
                j = start + 2 * (-d0 // step)
                k = candidate(j)
                found = _settle(ext, k, _defect(ext, x, target, k), sign)
                if found is not None:
                    return _reversal(ext, x, target, found)
    logger.debug("no lift of the quotient reverser of %s has zero central defect", x)
    return None


def _reversal(ext: CentralExtension, x: CentralElement, target: CentralElement, k: CentralElement) -> Reversal:
    if ext.conjugate(x, k) != target:
        raise InternalInconsistency(f"reverser {k} fails for {x}")
    return Reversal(reverser=k, strongly_reversible=ext.multiply(k, k).is_identity)


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _pairs(d: SeifertData) -> List[Tuple[int, int]]:
    fibers = d.exceptional
    out = []
    for i in range(len(fibers)):
        for j in range(i, len(fibers)):
            if fibers[i].mu % 2 == 0 and fibers[j].mu % 2 == 0 and fibers[i].beta == fibers[j].beta:
                out.append((i + 1, j + 1))
    return out


def _half_twists(d: SeifertData, i: int, j: int, sign: int) -> FamilyDescriptor:
    mu_i, mu_j = d.exceptional[i - 1].mu, d.exceptional[j - 1].mu
    second = mu_j // 2 if sign > 0 else -(mu_j // 2)
    return FamilyDescriptor(
        kind="two-half-twists",
        i=i,
        j=j,
        sign=sign,
        phi_k=-1 if sign > 0 else 1,
        beta=d.exceptional[i - 1].beta,
        element=f"{_power(f'c{i}', mu_i // 2)} k {_power(f'c{j}', second)} k^-1",
    )


def classify_reversible_families(d: SeifertData) -> ReversibleFamilyReport:
    families: List[FamilyDescriptor] = []
    notes: List[str] = []
    pairs = _pairs(d)
    if d.phi_nontrivial:
        families.append(FamilyDescriptor(kind="powers-of-h", element="h^m"))
        for i, j in pairs:
            families.append(_half_twists(d, i, j, 1))
            families.append(_half_twists(d, i, j, -1))
    else:
        families.extend(_half_twists(d, i, j, -1) for i, j in pairs)
        notes.append(TRIVIAL_PHI_NOTE)
    if not d.base_orientable and d.boundary_count == 0 and d.genus_or_crosscaps <= 2:
        surface = "RP2" if d.genus_or_crosscaps == 1 else "Klein bottle"
        families.append(
            FamilyDescriptor(
                kind="surface-exception",
                surface=surface,
                generators=tuple(d.handle_generators),
                element="generators of the orbit surface and their powers",
            )
        )
    if not d.base_orientable and d.genus_or_crosscaps >= 3:
        notes.append(CROSSCAP_NOTE)
    return ReversibleFamilyReport(tuple(families), tuple(notes))


def quotient_involutions(d: SeifertData) -> List[str]:
    """Involution classes c_i^(mu_i/2) of the base orbifold group."""
    return [_power(f"c{i}", f.mu // 2) for i, f in enumerate(d.exceptional, 1) if f.mu % 2 == 0]


def quotient_reversible_families(d: SeifertData) -> List[FamilyDescriptor]:
    families = [FamilyDescriptor(kind="quotient-involution", element=e) for e in quotient_involutions(d)]
    even = [i for i, f in enumerate(d.exceptional, 1) if f.mu % 2 == 0]
    for pos, i in enumerate(even):
        for j in even[pos:]:
            mu_i, mu_j = d.exceptional[i - 1].mu, d.exceptional[j - 1].mu
            families.append(
                FamilyDescriptor(
                    kind="quotient-involution-product",
                    i=i,
                    j=j,
                    element=f"{_power(f'c{i}', mu_i // 2)} k {_power(f'c{j}', mu_j // 2)} k^-1",
                )
            )
    return families


def gen_n_conjugators(ext: CentralExtension, B: CentralElement, n: int) -> List[CentralElement]:
    """[1, B⁻¹, …, B^-(n-2), B]: the conjugators making e1^p·B·h^x a generalised n-torsion element."""
    inverse = ext.invert(B)
    return [ext.identity()] + [ext.power(inverse, l) for l in range(1, n - 1)] + [B]


def torsion_product(ext: CentralExtension, g: CentralElement, conjugators: Sequence[CentralElement]) -> CentralElement:
    return ext.multiply(*[ext.conjugate(g, k) for k in conjugators])


def realize_certificate(
    ext: CentralExtension, ci: CentralElement, cj: CentralElement, k: CentralElement, cert: GenNCertificate
) -> Tuple[CentralElement, List[CentralElement]]:
    e2 = ext.conjugate(cj, k)
    B = ext.power(e2, cert.p_prime)
    g = ext.multiply(ext.power(ci, cert.p), B, ext.central(cert.x))
    return g, gen_n_conjugators(ext, B, cert.n)


def _choose_k(group: SeifertGroup, i: int, j: int) -> str:
    if i != j:
        return ""
    ext = group.extension
    for index, name in enumerate(group.scheme.names):
        if name != f"c{i}" and ext.twist[index] == 1:
            return name
    return ""


def _realize_in_group(d: SeifertData, cert: GenNCertificate) -> Dict[str, object]:
    try:
        group = SeifertGroup(d)
    except UnsupportedBase:
        return {}
    ext = group.extension
    k_name = _choose_k(group, cert.i, cert.j)
    k = group.generator(k_name) if k_name else ext.identity()
    g, conjugators = realize_certificate(ext, group.generator(f"c{cert.i}"), group.generator(f"c{cert.j}"), k, cert)
    if not torsion_product(ext, g, conjugators).is_identity:
        raise InternalInconsistency(f"generalised {cert.n}-torsion certificate fails in {d}")
    return {
        "group": "seifert",
        "k": k_name or "1",
        "element": str(g),
        "conjugators": [str(c) for c in conjugators],
    }


def gen_n_certificate(d: SeifertData, n: int) -> Optional[GenNCertificate]:
    if n < 2:
        raise InvalidInvariant(f"n must be at least 2, got {n}")
    fibers = d.exceptional
    for i in range(len(fibers)):
        for j in range(len(fibers)):
            for p in range(1, fibers[i].mu):
                if (n * p) % fibers[i].mu:
                    continue
                M1 = fibers[i].beta * n * p // fibers[i].mu
                for p_prime in range(1, fibers[j].mu):
                    if (n * p_prime) % fibers[j].mu:
                        continue
                    M2 = fibers[j].beta * n * p_prime // fibers[j].mu
                    if (M1 + M2) % n:
                        continue
                    x = -(M1 + M2) // n
                    B = f"(k c{j + 1} k^-1)^{p_prime}"
                    conjugators = ["1"] + [f"{B}^-{l}" for l in range(1, n - 1)] + [B]
                    cert = GenNCertificate(
                        n=n,
                        i=i + 1,
                        j=j + 1,
                        p=p,
                        p_prime=p_prime,
                        M1=M1,
                        M2=M2,
                        x=x,
                        element=f"c{i + 1}^{p} {B} h^{x}",
                        conjugators=tuple(conjugators),
                    )
                    realization = _realize_in_group(d, cert)
                    if realization:
                        cert = replace(cert, realization=realization)
                    logger.debug("gen-%d certificate %s for %s", n, cert.element, d)
                    return cert
    return None


def is_trefoil(d: SeifertData) -> bool:
    return (
        d.base_orientable
        and d.genus_or_crosscaps == 0
        and d.boundary_count == 1
        and tuple(d.exceptional) == (ExceptionalFiber(2, 1), ExceptionalFiber(3, 1))
        and not d.phi_nontrivial
    )


def realize_in_b3(d: SeifertData, cert: GenNCertificate) -> Optional[Tuple[CentralElement, List[CentralElement]]]:
    """Image of the certificate under c1 ↦ σ1σ2σ1, c2 ↦ σ1σ2 for the trefoil complement."""
    if not is_trefoil(d):
        return None
    images = {1: X, 2: Y}
    k = B3.identity() if cert.i != cert.j else images[3 - cert.i]
    return realize_certificate(B3, images[cert.i], images[cert.j], k, cert)
