from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field
from typing_extensions import Annotated


class CertificateBase(BaseModel):
    group: str = Field(..., description="pslz, b3 or seifert:<spec>")
    element: str = Field(..., description="The element the certificate is about")


class ReverserCertificate(CertificateBase):
    kind: Literal["reverser"] = "reverser"
    reverser: str = Field(..., description="r with r·g·r⁻¹ = g⁻¹")


class ConjugatorCertificate(CertificateBase):
    kind: Literal["conjugator"] = "conjugator"
    target: str
    conjugator: str = Field(..., description="k with k·element·k⁻¹ = target")


class GenTorsionCertificate(CertificateBase):
    kind: Literal["gen-torsion"] = "gen-torsion"
    n: int = Field(..., ge=2)
    conjugators: List[str] = Field(..., description="k_1..k_n with ∏ k_i·g·k_i⁻¹ = 1")
    h1: Optional[str] = None
    k: Optional[str] = None


class InvolutionPairCertificate(CertificateBase):
    kind: Literal["involution-pair"] = "involution-pair"
    u: str
    v: str


class CommutatorCertificate(CertificateBase):
    kind: Literal["commutator"] = "commutator"
    k0: str
    conjugator: str = Field(..., description="c with c·[σ1σ2σ1, k0]·c⁻¹ = element")


Certificate = Annotated[
    Union[
        ReverserCertificate,
        ConjugatorCertificate,
        GenTorsionCertificate,
        InvolutionPairCertificate,
        CommutatorCertificate,
    ],
    Field(discriminator="kind"),
]
