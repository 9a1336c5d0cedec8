"""Re-validation of emitted certificates by explicit multiplication."""

import json
import logging
from typing import Any, Dict, Union

from pydantic import TypeAdapter, ValidationError

from core.errors import MalformedCertificate, TorsionError
from schemas.certificates import (
    Certificate,
    CommutatorCertificate,
    ConjugatorCertificate,
    GenTorsionCertificate,
    InvolutionPairCertificate,
    ReverserCertificate,
)
from services import braid3
from services.groups import resolve_group

logger = logging.getLogger(__name__)

CERTIFICATE = TypeAdapter(Certificate)


def load_certificate(payload: Union[str, Dict[str, Any]]):
    try:
        if isinstance(payload, str):
            payload = json.loads(payload)
        if isinstance(payload, dict) and "certificate" in payload and "kind" not in payload:
            payload = payload["certificate"]
        return CERTIFICATE.validate_python(payload)
    except (ValueError, ValidationError) as exc:
        raise MalformedCertificate(f"cannot read certificate: {exc}") from exc


def _matches_declared(group, cert: GenTorsionCertificate, conjugators) -> bool:
    """h1 and k, when given, must spell the conjugators: [1, h1, k], or [1, k] with h1 = 1 when n = 2."""
    if cert.h1 is None and cert.k is None:
        return True
    h1 = group.parse(cert.h1) if cert.h1 is not None else group.multiply()
    k = group.parse(cert.k) if cert.k is not None else group.multiply()
    if cert.n == 2:
        return group.is_identity(h1) and conjugators == [group.multiply(), k]
    return conjugators == [group.multiply(), h1, k]


def verify(payload: Union[str, Dict[str, Any]]) -> bool:
    """True iff the certificate's defining relation multiplies out to the identity."""
    cert = load_certificate(payload)
    try:
        group = resolve_group(cert.group)
        g = group.parse(cert.element)
        if isinstance(cert, ReverserCertificate):
            r = group.parse(cert.reverser)
            ok = group.conjugate(g, r) == group.invert(g)
        elif isinstance(cert, ConjugatorCertificate):
            k = group.parse(cert.conjugator)
            ok = group.conjugate(g, k) == group.parse(cert.target)
        elif isinstance(cert, GenTorsionCertificate):
            conjugators = [group.parse(c) for c in cert.conjugators]
            ok = (
                len(conjugators) == cert.n
                and _matches_declared(group, cert, conjugators)
                and group.is_identity(group.multiply(*[group.conjugate(g, k) for k in conjugators]))
            )
        elif isinstance(cert, InvolutionPairCertificate):
            u, v = group.parse(cert.u), group.parse(cert.v)
            ok = (
                group.is_identity(group.multiply(u, u))
                and group.is_identity(group.multiply(v, v))
                and group.multiply(u, v) == g
            )
        elif isinstance(cert, CommutatorCertificate):
            if cert.group != "b3":
                raise MalformedCertificate("commutator certificates live in b3")
            k0, c = group.parse(cert.k0), group.parse(cert.conjugator)
            ok = group.conjugate(braid3.commutator(k0), c) == g
        else:
            raise MalformedCertificate(f"unsupported certificate kind {cert.kind!r}")
    except MalformedCertificate:
        raise
    except TorsionError as exc:
        raise MalformedCertificate(f"certificate does not parse: {exc}") from exc
    logger.info("%s certificate for %s: %s", cert.kind, cert.element, "valid" if ok else "invalid")
    return ok
