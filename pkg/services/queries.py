"""QueryResult builders shared by the command line and the HTTP routers."""

from typing import Optional

from core.config import get_settings
from core.errors import InvalidInvariant, UnsupportedBase
from models.matrices import IsometryClass
from models.verdicts import SearchBudget, Verdict
from schemas.certificates import (
    CommutatorCertificate,
    ConjugatorCertificate,
    GenTorsionCertificate,
    InvolutionPairCertificate,
    ReverserCertificate,
)
from schemas.results import QueryResult
from services import braid3, hyperbolic, modular, oracle, seifert
from services.certificates import verify as verify_certificate
from services.groups import BraidGroup3, ModularGroup, SeifertFiberedGroup, resolve_group
from services.words import abelian_image, is_conjugate

SEIFERT_ACTIONS = ("families", "presentation", "quotient", "reversible", "certificate", "involutions")


def _yes_no(found) -> str:
    return Verdict.YES.value if found else Verdict.NO.value


def _normal_form(group, x):
    if isinstance(group, BraidGroup3):
        return {"m": x.m, "q": str(x.q), "braid": group.format(x)}
    return group.format(x)


def normalize(group_token: str, word: str) -> QueryResult:
    group = resolve_group(group_token)
    x = group.parse(word)
    data = None
    if isinstance(group, ModularGroup):
        data = {"abelian_image": abelian_image(x).as_dict(), "matrix": modular.to_matrix(x).to_list()}
    elif isinstance(group, BraidGroup3):
        data = {"exponent_sum": braid3.central_exponent_sum(x)}
    return QueryResult(verdict="ok", normal_form=_normal_form(group, x), data=data)


def abelian(group_token: str, word: str) -> QueryResult:
    group = resolve_group(group_token)
    if not isinstance(group, ModularGroup):
        raise UnsupportedBase("abelian images are computed in pslz")
    x = group.parse(word)
    return QueryResult(verdict="ok", normal_form=group.format(x), data={"abelian_image": abelian_image(x).as_dict()})


def classify(group_token: str, word: str) -> QueryResult:
    group = resolve_group(group_token)
    x = group.parse(word)
    if isinstance(group, SeifertFiberedGroup):
        raise UnsupportedBase("isometry classes are defined for pslz and b3 images only")
    w = x if isinstance(group, ModularGroup) else x.q
    cls = modular.classify(w)
    matrix = modular.to_matrix(w)
    data = {"matrix": matrix.to_list(), "trace": matrix.trace}
    if cls == IsometryClass.PARABOLIC:
        data["parabolic_power"] = modular.parabolic_power(w)
    elif cls == IsometryClass.HYPERBOLIC:
        data["axis"] = hyperbolic.axis(w).as_dict()
    elif cls.is_elliptic:
        data["fixed_point"] = hyperbolic.elliptic_fixed_point(w).as_dict()
    diagnostics = [] if isinstance(group, ModularGroup) else ["class of the image in PSL(2,Z)"]
    return QueryResult(verdict=cls.value, normal_form=_normal_form(group, x), data=data, diagnostics=diagnostics)


def conjugate(group_token: str, word: str, other: str) -> QueryResult:
    group = resolve_group(group_token)
    x, y = group.parse(word), group.parse(other)
    if isinstance(group, ModularGroup):
        k = is_conjugate(x, y)
    elif isinstance(group, BraidGroup3):
        k = braid3.conjugate_central(x, y)
    else:
        raise UnsupportedBase("conjugacy is decided in pslz and b3")
    certificate = None
    if k is not None:
        certificate = ConjugatorCertificate(
            group=group.token, element=group.format(x), target=group.format(y), conjugator=group.format(k)
        )
    return QueryResult(verdict=_yes_no(k is not None), certificate=certificate)


def reversible(group_token: str, word: str) -> QueryResult:
    group = resolve_group(group_token)
    x = group.parse(word)
    if isinstance(group, ModularGroup):
        found = modular.reversible(x)
    elif isinstance(group, BraidGroup3):
        found = braid3.reversible_central(x)
    else:
        found = seifert.reversible_seifert(x, group.data)
    if found is None:
        return QueryResult(verdict=Verdict.NO.value, normal_form=_normal_form(group, x))
    element = group.format(x)
    data = {"strongly_reversible": found.strongly_reversible}
    if found.decomposition is not None:
        u, v = found.decomposition
        data["involution_pair"] = InvolutionPairCertificate(
            group=group.token, element=element, u=group.format(u), v=group.format(v)
        ).model_dump()
    if found.commutator is not None:
        k0, c = found.commutator
        data["commutator"] = CommutatorCertificate(
            group=group.token, element=element, k0=group.format(k0), conjugator=group.format(c)
        ).model_dump()
    return QueryResult(
        verdict=Verdict.YES.value,
        certificate=ReverserCertificate(group=group.token, element=element, reverser=group.format(found.reverser)),
        normal_form=_normal_form(group, x),
        diagnostics=list(found.notes),
        data=data,
    )


def gen_torsion(group_token: str, word: str, n: int, bound: Optional[int] = None) -> QueryResult:
    group = resolve_group(group_token)
    x = group.parse(word)
    if n == 2:
        result = reversible(group_token, word)
        certificate = None
        if result.certificate is not None:
            certificate = GenTorsionCertificate(
                group=group.token,
                element=result.certificate.element,
                n=2,
                conjugators=["1", result.certificate.reverser],
                h1="1",
                k=result.certificate.reverser,
            )
        return QueryResult(verdict=result.verdict, certificate=certificate, normal_form=result.normal_form)
    if n != 3 or isinstance(group, SeifertFiberedGroup):
        raise InvalidInvariant(f"gen-torsion supports n = 2, 3 for pslz and b3 and n = 2 for seifert groups, got {n}")
    settings = get_settings()
    if isinstance(group, ModularGroup):
        bound = bound if bound is not None else modular.default_search_bound(x, settings.search_padding)
        verdict = modular.gen3_torsion(x, bound)
    else:
        bound = bound if bound is not None else modular.default_search_bound(x.q, settings.search_padding)
        verdict = braid3.gen3_torsion_central(x, bound)
    certificate = None
    if verdict.certificate is not None:
        h1, k = (group.format(c) for c in verdict.certificate)
        certificate = GenTorsionCertificate(
            group=group.token, element=group.format(x), n=3, conjugators=["1", h1, k], h1=h1, k=k
        )
    diagnostics = ([verdict.reason] if verdict.reason else []) + list(verdict.notes)
    return QueryResult(
        verdict=verdict.tag.value,
        certificate=certificate,
        normal_form=_normal_form(group, x),
        diagnostics=diagnostics,
        budget={"bound": verdict.bound_used},
        data={"witness": verdict.witness} if verdict.witness else None,
    )


def braid(word: str) -> QueryResult:
    w = braid3.parse_braid(word)
    x = braid3.normal_form(w)
    return QueryResult(
        verdict="ok",
        normal_form={"m": x.m, "q": str(x.q), "braid": str(braid3.to_braid(x))},
        data={"exponent_sum": braid3.exponent_sum(w), "sigma": str(braid3.to_sigma(braid3.to_braid(x)))},
    )


def seifert_query(action: str, spec: str, word: Optional[str] = None, n: Optional[int] = None) -> QueryResult:
    data = seifert.parse_seifert(spec)
    if action == "families":
        report = seifert.classify_reversible_families(data)
        quotient = [f.as_dict() for f in seifert.quotient_reversible_families(data)]
        return QueryResult(
            verdict="ok",
            data={**report.as_dict(), "quotient_families": quotient},
            diagnostics=list(report.notes),
        )
    if action == "presentation":
        return QueryResult(verdict="ok", data=seifert.presentation(data).as_dict())
    if action == "quotient":
        quotient = seifert.tietze_quotient(data)
        if quotient is None:
            return QueryResult(verdict="unsupported", diagnostics=["closed base: quotient is not a free product"])
        return QueryResult(
            verdict="supported",
            data={
                "scheme": str(quotient.scheme),
                "eliminated": quotient.eliminated,
                "elimination": str(quotient.elimination),
            },
        )
    if action == "involutions":
        return QueryResult(verdict="ok", data={"involutions": seifert.quotient_involutions(data)})
    if action == "reversible":
        if word is None:
            raise InvalidInvariant("seifert reversible needs --word")
        return reversible(f"seifert:{data}", word)
    if action == "certificate":
        if n is None:
            raise InvalidInvariant("seifert certificate needs --n")
        cert = seifert.gen_n_certificate(data, n)
        if cert is None:
            return QueryResult(verdict=Verdict.NO.value, diagnostics=["no exceptional pair solves n·x + M1 + M2 = 0"])
        certificate = None
        if cert.realization:
            certificate = GenTorsionCertificate(
                group=f"seifert:{data}",
                element=cert.realization["element"],
                n=n,
                conjugators=cert.realization["conjugators"],
            )
        return QueryResult(verdict=Verdict.YES.value, certificate=certificate, data=cert.as_dict())
    raise InvalidInvariant(f"unknown seifert action {action!r}; expected one of {', '.join(SEIFERT_ACTIONS)}")


def verify(payload) -> QueryResult:
    ok = verify_certificate(payload)
    return QueryResult(verdict="valid" if ok else "invalid")


def default_budget() -> SearchBudget:
    settings = get_settings()
    return SearchBudget(settings.oracle_syllables, settings.oracle_central, settings.oracle_candidates)


def sweep(suite: str, budget: Optional[SearchBudget] = None) -> QueryResult:
    settings = get_settings()
    budget = budget or default_budget()
    report = oracle.sweep_agreement(suite, budget, settings.geometry_tolerance, settings.search_padding)
    return QueryResult(
        verdict="agree" if not report.mismatches else "mismatch",
        budget=budget.as_dict(),
        data=report.as_dict(),
        diagnostics=["scan truncated by max_candidates"] if report.truncated else [],
    )
