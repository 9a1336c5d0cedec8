import random

import pytest

from core.errors import ParseError, TrivialElement
from models.braids import BraidLetter, BraidWord
from models.central import CentralElement
from models.verdicts import Verdict
from models.words import PSL2Z
from services import braid3
from services.braid3 import B3, X, Y
from services.words import enumerate_reduced


def nf(text):
    return braid3.normal_form(braid3.parse_braid(text))


def test_parse_braid():
    assert braid3.parse_braid("s1 s2 s1").letters == (
        BraidLetter("s1", 1),
        BraidLetter("s2", 1),
        BraidLetter("s1", 1),
    )
    assert braid3.parse_braid("s1^-1").letters == (BraidLetter("s1", -1),)
    assert braid3.parse_braid("S2^2").letters == (BraidLetter("s2", -2),)
    assert braid3.parse_braid("1").letters == ()
    with pytest.raises(ParseError):
        braid3.parse_braid("q r")
    with pytest.raises(ParseError):
        BraidWord((BraidLetter("s3", 1),))
    with pytest.raises(ParseError):
        BraidWord((BraidLetter("s1", 0),))


@pytest.mark.parametrize(
    "text, m, q",
    [
        ("s1 s2 s1 s2 s1 s2", 1, "1"),
        ("s1 s2 s1", 0, "a"),
        ("s1", -1, "b^2 a"),
        ("x^2", 1, "1"),
        ("y^3", 1, "1"),
        ("h S1 S2 S1 S2 S1 S2", 0, "1"),
    ],
)
def test_normal_form(text, m, q):
    x = nf(text)
    assert (x.m, str(x.q)) == (m, q)


def test_normal_form_of_spelled_braid_is_stable():
    x = nf("s1 s2^-1 s1^3 S2 x y")
    assert braid3.normal_form(braid3.to_braid(x)) == x
    assert braid3.normal_form(braid3.to_sigma(braid3.to_braid(x))) == x


@pytest.mark.parametrize("text, total", [("s1 S2", 0), ("h", 6), ("s1 s2 s1", 3), ("x y^-1 h^2", 13)])
def test_exponent_sum(text, total):
    assert braid3.exponent_sum(braid3.parse_braid(text)) == total
    assert braid3.central_exponent_sum(nf(text)) == total


def test_conjugate_sigma_generators():
    k = braid3.conjugate_b3(braid3.parse_braid("s1"), braid3.parse_braid("s2"))
    assert k is not None
    assert B3.conjugate(nf("s1"), braid3.normal_form(k)) == nf("s2")


def test_conjugate_needs_equal_exponent_sums():
    assert braid3.conjugate_central(nf("h"), nf("s1^6")) is None
    assert braid3.conjugate_central(nf("s1"), nf("s1^2")) is None


def test_conjugate_to_itself():
    g = nf("s1 s2^-1 s1")
    assert braid3.conjugate_central(g, g).is_identity


def test_commutator_is_reversible():
    x = B3.multiply(X, nf("s1"), B3.invert(X), B3.invert(nf("s1")))
    found = braid3.reversible_central(x)
    assert found is not None
    assert B3.conjugate(x, found.reverser) == B3.invert(x)
    assert not found.strongly_reversible
    assert found.commutator is not None
    k0, c = found.commutator
    assert B3.conjugate(braid3.commutator(k0), c) == x


def test_reversible_b3_words():
    found = braid3.reversible_b3(braid3.parse_braid("s1 S2"))
    assert found is not None
    g = nf("s1 S2")
    assert B3.conjugate(g, braid3.normal_form(found.reverser)) == B3.invert(g)
    assert braid3.reversible_b3(braid3.parse_braid("h")) is None


def test_reversible_rejects_identity():
    with pytest.raises(TrivialElement):
        braid3.reversible_central(nf("s1 S1"))


def test_gen3_from_conjugated_generators():
    g = nf("y s1 y^2 S1 H")
    assert braid3.central_exponent_sum(g) == 0
    verdict = braid3.gen3_torsion_central(g, 5)
    assert verdict.tag == Verdict.YES
    assert braid3.gen3_holds(g, *verdict.certificate)
    assert verdict.witness["x"] == -1


@pytest.mark.parametrize("text", ["h", "s1 s2"])
def test_gen3_exponent_sum_obstruction(text):
    verdict = braid3.gen3_torsion_central(nf(text), 4)
    assert verdict.tag == Verdict.NO
    assert verdict.reason == "exponent-sum-nonzero"


def test_gen3_on_braid_words():
    verdict = braid3.gen3_torsion_b3(braid3.parse_braid("y s1 y^2 S1 H"), 5)
    assert verdict.tag == Verdict.YES
    h1, k = (braid3.normal_form(c) for c in verdict.certificate)
    assert braid3.gen3_holds(nf("y s1 y^2 S1 H"), h1, k)


def test_e1e2_form_exponent():
    assert braid3.e1e2_form_exponent(2) is None
    assert braid3.e1e2_form_exponent(3) == -1
    assert braid3.e1e2_form_exponent(4) is None
    assert braid3.e1e2_form_exponent(-3) == 1


def test_gen3_rejects_e1e2_form():
    verdict = braid3.gen3_torsion_b3(braid3.parse_braid("y s1 y S1"), 4)
    assert verdict.tag == Verdict.NO
    assert verdict.reason == "exponent-sum-nonzero"
    assert verdict.notes == ["3x + 2 = 0 has no integer solution"]


@pytest.mark.parametrize("text", ["y^3", "s1 s2 s1 s1 s2 s1"])
def test_gen3_exponent_obstruction_without_note(text):
    verdict = braid3.gen3_torsion_central(nf(text), 4)
    assert verdict.tag == Verdict.NO
    assert verdict.notes == []


def test_generators_satisfy_relations():
    assert B3.multiply(X, X) == B3.central(1)
    assert B3.multiply(Y, Y, Y) == B3.central(1)
    assert nf("s1 s2 s1") == nf("s2 s1 s2")


def random_braid(rng, max_length=10):
    letters = []
    for _ in range(rng.randint(0, max_length)):
        name = rng.choice(["s1", "s2", "x", "y", "h"])
        letters.append(BraidLetter(name, rng.choice([-2, -1, 1, 2])))
    return BraidWord(tuple(letters))


@pytest.mark.parametrize("seed", range(20))
def test_normal_form_is_homomorphism(seed):
    rng = random.Random(seed)
    for _ in range(10):
        u, v = random_braid(rng), random_braid(rng)
        assert braid3.normal_form(u * v) == B3.multiply(braid3.normal_form(u), braid3.normal_form(v))
        assert braid3.normal_form(~u) == B3.invert(braid3.normal_form(u))


@pytest.mark.parametrize("seed", range(20))
def test_exponent_sum_is_class_function(seed):
    rng = random.Random(seed)
    for _ in range(10):
        g, k = random_braid(rng), random_braid(rng)
        assert braid3.exponent_sum(k * g * ~k) == braid3.exponent_sum(g)
        assert braid3.central_exponent_sum(braid3.normal_form(g)) == braid3.exponent_sum(g)


@pytest.mark.parametrize("q", list(enumerate_reduced(PSL2Z, 6)), ids=str)
def test_spelled_section_normalizes_back(q):
    for m in range(-3, 4):
        x = CentralElement(m, q)
        assert braid3.normal_form(braid3.to_braid(x)) == x
        assert braid3.normal_form(braid3.to_sigma(braid3.to_braid(x))) == x


@pytest.mark.parametrize("q", list(enumerate_reduced(PSL2Z, 4)), ids=str)
def test_commutators_with_x_are_reversible(q):
    for m in (-1, 0, 1):
        k0 = CentralElement(m, q)
        g = braid3.commutator(k0)
        if g.is_identity:
            continue
        found = braid3.reversible_central(g)
        assert found is not None
        assert B3.conjugate(g, found.reverser) == B3.invert(g)
