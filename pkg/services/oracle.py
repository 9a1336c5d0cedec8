"""Definition-level brute force, used to cross-check every structural decision."""

import logging
from typing import Iterator, List, Optional, Tuple

from core.errors import TrivialElement, UnknownSuite
from models.central import CentralElement
from models.matrices import IsometryClass
from models.verdicts import SearchBudget, SweepReport, Verdict
from models.words import PSL2Z, Word
from services import braid3, hyperbolic, modular, seifert
from services.extensions import CentralExtension
from services.words import enumerate_reduced

logger = logging.getLogger(__name__)

SUITES = ("pslz-reversible", "pslz-gen3", "b3-reversible", "b3-conjugacy", "seifert-reversible")
SEIFERT_FIXTURES = (
    "(O,o,0 | 1; (2,1),(3,1)); boundaries=1",
    "(O,o,0 | 0; (2,1),(2,1)); boundaries=2; phi: d1=-1,d2=-1",
)


class CandidateCap:
    """Shared cap on the number of candidates a scan may test."""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0
        self.truncated = False

    def allow(self) -> bool:
        if self.used >= self.limit:
            if not self.truncated:
                logger.warning("oracle scan stopped after %d candidates", self.limit)
            self.truncated = True
            return False
        self.used += 1
        return True


def central_range(bound: int) -> List[int]:
    """0, 1, -1, 2, -2, ... up to bound."""
    out = [0]
    for m in range(1, bound + 1):
        out += [m, -m]
    return out


def lifts(ext: CentralExtension, budget: SearchBudget) -> Iterator[CentralElement]:
    for q in enumerate_reduced(ext.quotient, budget.max_conjugator_syllables):
        for m in central_range(budget.max_central_exponent):
            yield CentralElement(m, q)


def brute_reversible(w: Word, budget: SearchBudget, cap: Optional[CandidateCap] = None) -> Optional[Word]:
    if w.is_identity:
        raise TrivialElement()
    cap = cap or CandidateCap(budget.max_candidates)
    target = ~w
    for k in enumerate_reduced(w.scheme, budget.max_conjugator_syllables):
        if not cap.allow():
            return None
        if k * w * ~k == target:
            return k
    return None


def brute_gen3(w: Word, budget: SearchBudget, cap: Optional[CandidateCap] = None) -> Optional[Tuple[Word, Word]]:
    """First (h1, k) with w·h1·w·h1⁻¹·k·w·k⁻¹ = ε."""
    if w.is_identity:
        raise TrivialElement()
    cap = cap or CandidateCap(budget.max_candidates)
    candidates = list(enumerate_reduced(w.scheme, budget.max_conjugator_syllables))
    for h1 in candidates:
        head = w * h1 * w * ~h1
        for k in candidates:
            if not cap.allow():
                return None
            if (head * k * w * ~k).is_identity:
                return h1, k
    return None


def brute_conjugate_central(
    ext: CentralExtension,
    x1: CentralElement,
    x2: CentralElement,
    budget: SearchBudget,
    cap: Optional[CandidateCap] = None,
) -> Optional[CentralElement]:
    cap = cap or CandidateCap(budget.max_candidates)
    for k in lifts(ext, budget):
        if not cap.allow():
            return None
        if ext.conjugate(x1, k) == x2:
            return k
    return None


def brute_conjugate_b3(
    g1: CentralElement, g2: CentralElement, budget: SearchBudget, cap: Optional[CandidateCap] = None
) -> Optional[CentralElement]:
    return brute_conjugate_central(braid3.B3, g1, g2, budget, cap)


def brute_reversible_central(
    ext: CentralExtension, x: CentralElement, budget: SearchBudget, cap: Optional[CandidateCap] = None
) -> Optional[CentralElement]:
    if x.is_identity:
        raise TrivialElement()
    return brute_conjugate_central(ext, x, ext.invert(x), budget, cap)


def _within(k: CentralElement, budget: SearchBudget) -> bool:
    """Whether k lies in the candidate set the brute-force scan walks."""
    orders = k.q.scheme.orders
    return (
        len(k.q) <= budget.max_conjugator_syllables
        and abs(k.m) <= budget.max_central_exponent
        and all(orders[s.gen] is not None or abs(s.exp) == 1 for s in k.q.syllables)
    )


def _sweep_pslz_reversible(report: SweepReport, cap: CandidateCap, tolerance: float) -> None:
    budget = report.budget
    for w in enumerate_reduced(PSL2Z, budget.max_conjugator_syllables):
        if w.is_identity:
            continue
        report.checked += 1
        found = modular.reversible(w)
        brute = brute_reversible(w, budget, cap)
        if found is None and brute is not None:
            report.mismatches.append({"word": str(w), "structural": "no", "oracle": str(brute)})
        if found is None:
            continue
        report.bump("reversible")
        if len(found.reverser) > budget.max_conjugator_syllables:
            report.bump("reverser-beyond-budget")
        elif brute is None and not cap.truncated:
            report.mismatches.append({"word": str(w), "structural": str(found.reverser), "oracle": "no"})
        cls = modular.classify(w)
        if cls == IsometryClass.ELLIPTIC_ORDER_2:
            report.bump("involutions")
        if cls == IsometryClass.HYPERBOLIC:
            report.bump("hyperbolic-reversible")
            if not (found.reverser * found.reverser).is_identity:
                report.bump("reverser-not-involution")
            if hyperbolic.reverser_on_axis_check(w, found.reverser, tolerance):
                report.bump("axis-incidence")
            else:
                report.bump("axis-incidence-failures")


def _sweep_pslz_gen3(report: SweepReport, cap: CandidateCap, padding: int) -> None:
    budget = report.budget
    for w in enumerate_reduced(PSL2Z, budget.max_conjugator_syllables):
        if w.is_identity:
            continue
        report.checked += 1
        verdict = modular.gen3_torsion(w, modular.default_search_bound(w, padding))
        brute = brute_gen3(w, budget, cap)
        report.bump(verdict.tag.value)
        if verdict.tag == Verdict.NO and brute is not None:
            report.mismatches.append({"word": str(w), "structural": verdict.reason, "oracle": [str(x) for x in brute]})
        elif verdict.tag == Verdict.UNKNOWN and brute is not None:
            report.bump("oracle-witness-beyond-bound")
        elif verdict.tag == Verdict.YES and brute is None and not cap.truncated:
            if all(len(x) <= budget.max_conjugator_syllables for x in verdict.certificate):
                report.mismatches.append({"word": str(w), "structural": "yes", "oracle": "no"})
            else:
                report.bump("certificate-beyond-budget")
    parabolic_yes = []
    for n in range(-10, 11):
        if n == 0:
            continue
        w = modular.ab_power(n)
        if modular.gen3_torsion(w, modular.default_search_bound(w, padding)).tag == Verdict.YES:
            parabolic_yes.append(n)
    report.counts["parabolic-yes"] = parabolic_yes


def _sweep_b3_reversible(report: SweepReport, cap: CandidateCap) -> None:
    budget = report.budget
    ext = braid3.B3
    for x in lifts(ext, budget):
        if x.is_identity:
            continue
        report.checked += 1
        found = braid3.reversible_central(x)
        brute = brute_reversible_central(ext, x, budget, cap)
        if found is None and brute is not None:
            report.mismatches.append({"element": str(x), "structural": "no", "oracle": str(brute)})
        elif found is not None:
            report.bump("reversible")
            if found.commutator is None:
                report.bump("no-commutator-witness")
            if brute is None and not cap.truncated and _within(found.reverser, budget):
                report.mismatches.append({"element": str(x), "structural": str(found.reverser), "oracle": "no"})


def _sweep_b3_conjugacy(report: SweepReport, cap: CandidateCap) -> None:
    budget = report.budget
    ext = braid3.B3
    small = SearchBudget(min(budget.max_conjugator_syllables, 2), budget.max_central_exponent, budget.max_candidates)
    elements = list(lifts(ext, small))
    for x1 in elements:
        for x2 in elements:
            # exponent sum is a homomorphism to Z, so unequal sums are never conjugate
            if braid3.central_exponent_sum(x1) != braid3.central_exponent_sum(x2):
                continue
            report.checked += 1
            found = braid3.conjugate_central(x1, x2)
            brute = brute_conjugate_central(ext, x1, x2, budget, cap)
            if found is None and brute is not None:
                report.mismatches.append({"pair": [str(x1), str(x2)], "structural": "no", "oracle": str(brute)})
            elif found is not None:
                report.bump("conjugate")
                if brute is None and not cap.truncated and _within(found, budget):
                    report.mismatches.append({"pair": [str(x1), str(x2)], "structural": str(found), "oracle": "no"})


def _sweep_seifert_reversible(report: SweepReport, cap: CandidateCap) -> None:
    budget = report.budget
    small = SearchBudget(min(budget.max_conjugator_syllables, 3), budget.max_central_exponent, budget.max_candidates)
    for spec in SEIFERT_FIXTURES:
        data = seifert.parse_seifert(spec)
        ext = seifert.SeifertGroup(data).extension
        for x in lifts(ext, small):
            if x.is_identity:
                continue
            report.checked += 1
            found = seifert.reversible_seifert(x, data)
            brute = brute_reversible_central(ext, x, budget, cap)
            if found is None and brute is not None:
                report.mismatches.append({"data": spec, "element": str(x), "structural": "no", "oracle": str(brute)})
            elif found is not None:
                report.bump("reversible")
                if brute is None and not cap.truncated and _within(found.reverser, budget):
                    report.mismatches.append(
                        {"data": spec, "element": str(x), "structural": str(found.reverser), "oracle": "no"}
                    )


def sweep_agreement(suite: str, budget: SearchBudget, tolerance: float = 1e-9, padding: int = 3) -> SweepReport:
    """Compare structural verdicts with brute force over every admissible input within budget."""
    if suite not in SUITES:
        raise UnknownSuite(suite)
    report = SweepReport(suite=suite, budget=budget)
    cap = CandidateCap(budget.max_candidates)
    if suite == "pslz-reversible":
        _sweep_pslz_reversible(report, cap, tolerance)
    elif suite == "pslz-gen3":
        _sweep_pslz_gen3(report, cap, padding)
    elif suite == "b3-reversible":
        _sweep_b3_reversible(report, cap)
    elif suite == "b3-conjugacy":
        _sweep_b3_conjugacy(report, cap)
    else:
        _sweep_seifert_reversible(report, cap)
    report.truncated = cap.truncated
    if report.mismatches:
        logger.warning("%s: %d mismatches", suite, len(report.mismatches))
    logger.info("%s: checked %d inputs", suite, report.checked)
    return report
