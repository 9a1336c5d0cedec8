import json

import pytest

from core.errors import MalformedCertificate
from services import queries
from services.certificates import load_certificate, verify

TREFOIL = "(O,o,0 | 1; (2,1),(3,1)); boundaries=1"


def reverser(element, r, group="pslz"):
    return {"kind": "reverser", "group": group, "element": element, "reverser": r}


def test_reverser_certificate():
    assert verify(reverser("a b a b^2", "a"))
    assert not verify(reverser("a b a b^2", "1"))


def test_certificate_from_json_text_and_wrapped_result():
    text = json.dumps(reverser("a b a b^2", "a"))
    assert verify(text)
    assert verify({"verdict": "yes", "certificate": reverser("a b a b^2", "a")})


def test_conjugator_and_involution_pair():
    assert verify({"kind": "conjugator", "group": "pslz", "element": "a b", "target": "b a", "conjugator": "a"})
    assert verify({"kind": "involution-pair", "group": "pslz", "element": "a b a b^2", "u": "a", "v": "b a b^2"})
    assert not verify({"kind": "involution-pair", "group": "pslz", "element": "a b", "u": "a", "v": "b"})


def test_gen3_certificate_from_parabolic_square():
    cert = {"kind": "gen-torsion", "group": "pslz", "element": "a b a b", "n": 3, "conjugators": ["1", "b^2", "b"]}
    assert verify(cert)
    cert["conjugators"] = ["1", "b^2", "1"]
    assert not verify(cert)


def test_gen3_certificate_checks_declared_h1_and_k():
    cert = {
        "kind": "gen-torsion",
        "group": "pslz",
        "element": "a b a b",
        "n": 3,
        "conjugators": ["1", "b^2", "b"],
        "h1": "b^2",
        "k": "b",
    }
    assert verify(cert)
    assert not verify({**cert, "k": "1"})
    assert not verify({**cert, "h1": "a"})


def test_gen2_certificate_needs_trivial_h1():
    cert = {
        "kind": "gen-torsion",
        "group": "pslz",
        "element": "a b a b^2",
        "n": 2,
        "conjugators": ["1", "a"],
        "h1": "1",
        "k": "a",
    }
    assert verify(cert)
    assert not verify({**cert, "h1": "b"})
    assert not verify({**cert, "k": "1"})


def test_gen_torsion_needs_n_conjugators():
    cert = {"kind": "gen-torsion", "group": "pslz", "element": "b", "n": 3, "conjugators": ["1", "1"]}
    assert not verify(cert)


@pytest.mark.parametrize(
    "payload",
    [
        "not json",
        {"kind": "bogus", "group": "pslz", "element": "a"},
        reverser("a q", "a"),
        reverser("a", "a", group="free"),
        {"kind": "commutator", "group": "pslz", "element": "a", "k0": "a", "conjugator": "1"},
    ],
)
def test_malformed_certificates(payload):
    with pytest.raises(MalformedCertificate):
        verify(payload)


def test_load_certificate_discriminates_on_kind():
    cert = load_certificate(reverser("a", "1"))
    assert cert.kind == "reverser"


@pytest.mark.parametrize(
    "result",
    [
        lambda: queries.reversible("pslz", "a b a b^2"),
        lambda: queries.reversible("b3", "s1 S2"),
        lambda: queries.reversible("seifert:(O,o,0 | 0; (2,1),(2,1)); boundaries=2; phi: d1=-1,d2=-1", "h"),
        lambda: queries.conjugate("b3", "s1", "s2"),
        lambda: queries.gen_torsion("pslz", "a b a b", 3),
        lambda: queries.gen_torsion("pslz", "a b a b^2", 2),
        lambda: queries.gen_torsion("b3", "y s1 y^2 S1 H", 3),
        lambda: queries.seifert_query("certificate", TREFOIL, n=3),
        lambda: queries.seifert_query("certificate", TREFOIL, n=2),
    ],
)
def test_emitted_certificates_verify(result):
    out = result()
    assert out.certificate is not None
    assert verify(out.certificate.model_dump())


def test_side_certificates_verify():
    out = queries.reversible("pslz", "a b a b^2")
    assert verify(out.data["involution_pair"])
    out = queries.reversible("b3", "s1 s2 s1 s1 S1 S2 S1 S1")
    assert "commutator" in out.data
    assert verify(out.data["commutator"])
