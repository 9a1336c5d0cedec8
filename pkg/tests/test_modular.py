from fractions import Fraction

import pytest
import sympy

from core.errors import InvalidCertificate, InvalidInvariant, NonpositiveBound, NotParabolic, TrivialElement
from models.matrices import IntMatrix2, IsometryClass
from models.verdicts import Verdict
from models.words import PSL2Z
from services import modular
from services.hyperbolic import (
    axis,
    axis_residual,
    elliptic_fixed_point,
    mobius_image,
    reverser_on_axis_check,
    same_point,
)
from services.words import enumerate_reduced, parse_word


def w(text):
    return parse_word(text, PSL2Z)


@pytest.mark.parametrize(
    "raw, matrix",
    [
        ("a", [[0, 1], [-1, 0]]),
        ("a b", [[1, 1], [0, 1]]),
        ("a b a b^2", [[2, 1], [1, 1]]),
        ("1", [[1, 0], [0, 1]]),
    ],
)
def test_to_matrix(raw, matrix):
    assert modular.to_matrix(w(raw)).to_list() == matrix


def test_matrix_determinant_is_checked():
    with pytest.raises(InvalidInvariant):
        IntMatrix2(1, 1, 1, 1)


@pytest.mark.parametrize(
    "raw, cls",
    [
        ("1", IsometryClass.IDENTITY),
        ("a", IsometryClass.ELLIPTIC_ORDER_2),
        ("b a b^2", IsometryClass.ELLIPTIC_ORDER_2),
        ("b^2", IsometryClass.ELLIPTIC_ORDER_3),
        ("a b", IsometryClass.PARABOLIC),
        ("a b^2 a b^2", IsometryClass.PARABOLIC),
        ("a b a b^2", IsometryClass.HYPERBOLIC),
    ],
)
def test_classify(raw, cls):
    assert modular.classify(w(raw)) == cls


@pytest.mark.parametrize("raw, n", [("a b", 1), ("b^2 a", -1), ("b a b a b b^2", 2)])
def test_parabolic_power(raw, n):
    assert modular.parabolic_power(w(raw)) == n


def test_parabolic_power_rejects_other_classes():
    with pytest.raises(NotParabolic):
        modular.parabolic_power(w("a b a b^2"))


def test_reversible_involution():
    found = modular.reversible(w("a"))
    assert found.reverser.is_identity
    assert found.decomposition == (w("a"), w("1"))


def test_reversible_hyperbolic():
    found = modular.reversible(w("a b a b^2"))
    assert str(found.reverser) == "a"
    u, v = found.decomposition
    assert str(u) == "a" and str(v) == "b a b^2"
    assert (v * v).is_identity
    assert found.strongly_reversible


@pytest.mark.parametrize("raw", ["b", "a b", "a b a b"])
def test_not_reversible(raw):
    assert modular.reversible(w(raw)) is None


def test_reversible_rejects_identity():
    with pytest.raises(TrivialElement):
        modular.reversible(w("1"))


def test_gen3_elliptic():
    verdict = modular.gen3_torsion(w("b"), 3)
    assert verdict.tag == Verdict.YES
    assert all(c.is_identity for c in verdict.certificate)
    no = modular.gen3_torsion(w("a"), 3)
    assert no.tag == Verdict.NO and no.reason == "elliptic-order-2"


def test_gen3_parabolic_square():
    verdict = modular.gen3_torsion(w("a b a b"), 3)
    assert verdict.tag == Verdict.YES
    assert tuple(str(c) for c in verdict.certificate) == ("b^2", "b")


def test_gen3_parabolic_cube_is_no():
    verdict = modular.gen3_torsion(modular.ab_power(3), 3)
    assert verdict.tag == Verdict.NO
    assert verdict.reason == "parabolic-n-not-±2"


def test_gen3_parabolic_powers():
    yes = []
    for n in range(-10, 11):
        if n == 0:
            continue
        g = modular.ab_power(n)
        verdict = modular.gen3_torsion(g, modular.default_search_bound(g))
        if verdict.tag == Verdict.YES:
            assert modular.gen3_holds(g, *verdict.certificate)
            yes.append(n)
    assert yes == [-2, 2]


def test_gen3_hyperbolic_witness():
    g = w("a b a b a b^2 a b")
    verdict = modular.gen3_torsion(g, modular.default_search_bound(g))
    assert verdict.tag == Verdict.YES
    assert modular.gen3_holds(g, *verdict.certificate)
    assert (verdict.witness["e1"], verdict.witness["e2"]) == (1, 1)


def test_gen3_odd_a_count():
    verdict = modular.gen3_torsion(w("a b a b^2 a b"), 5)
    assert verdict.tag == Verdict.NO
    assert verdict.reason == "odd-a-count"


def test_gen3_bound_must_be_positive():
    with pytest.raises(NonpositiveBound):
        modular.gen3_torsion(w("a b a b^2"), 0)


def test_invert_certificate():
    g = modular.ab_power(2)
    h1, k = modular.invert_certificate((w("b^2"), w("b")))
    assert modular.gen3_holds(~g, h1, k)


def test_axis_of_golden_element():
    ax = axis(w("a b a b^2"))
    assert ax.center == Fraction(1, 2)
    assert ax.radius_sq == Fraction(5, 4)
    low, high = ax.endpoints
    assert sympy.simplify(low.as_expr() - (1 - sympy.sqrt(5)) / 2) == 0
    assert sympy.simplify(high.as_expr() - (1 + sympy.sqrt(5)) / 2) == 0


def test_axis_of_inverse_has_same_endpoints():
    g = w("a b a b^2 a b")
    assert axis(g) == axis(~g)


def test_axis_is_equivariant():
    g, k = w("a b a b^2"), w("b a")
    image = axis(g.conjugate(k))
    m = modular.to_matrix(k)
    for end in axis(g).endpoints:
        moved = mobius_image(m, end.as_expr())
        assert any(same_point(moved, e.as_expr()) for e in image.endpoints)


def test_elliptic_fixed_points():
    i_point = elliptic_fixed_point(w("a"))
    assert (i_point.real, i_point.imag_sq) == (0, 1)
    rho = elliptic_fixed_point(w("b"))
    assert rho.real == Fraction(-1, 2)
    moved = mobius_image(modular.to_matrix(w("b")), i_point.as_expr())
    assert same_point(moved, elliptic_fixed_point(w("b a b^2")).as_expr())


def test_reverser_lies_on_axis():
    g = w("a b a b^2")
    assert axis_residual(axis(g), elliptic_fixed_point(w("a"))) == 0
    assert reverser_on_axis_check(g, w("a"))
    k = w("b^2 a b")
    assert reverser_on_axis_check(g.conjugate(k), w("a").conjugate(k))


def test_reverser_on_axis_check_rejects_non_reversers():
    with pytest.raises(InvalidCertificate):
        reverser_on_axis_check(w("a b a b^2"), w("b"))


WORDS = [x for x in enumerate_reduced(PSL2Z, 6) if not x.is_identity]


def variants(x, depth):
    """x⁻¹ together with every conjugate of x by a word of at most depth syllables."""
    return [~x] + [x.conjugate(k) for k in enumerate_reduced(PSL2Z, depth) if not k.is_identity]


@pytest.mark.parametrize("x", WORDS, ids=str)
def test_classify_is_class_function(x):
    cls = modular.classify(x)
    assert all(modular.classify(y) == cls for y in variants(x, 3))


@pytest.mark.parametrize("x", WORDS, ids=str)
def test_reversible_verdict_is_class_invariant(x):
    reversible = modular.reversible(x) is not None
    for y in variants(x, 2):
        found = modular.reversible(y)
        assert (found is not None) == reversible
        if found is not None:
            assert y.conjugate(found.reverser) == ~y


@pytest.mark.parametrize("x", WORDS, ids=str)
def test_gen3_verdict_is_class_invariant(x):
    tag = modular.gen3_torsion(x, modular.default_search_bound(x)).tag
    for y in variants(x, 2):
        verdict = modular.gen3_torsion(y, modular.default_search_bound(y))
        assert verdict.tag == tag
        if verdict.tag == Verdict.YES:
            assert modular.gen3_holds(y, *verdict.certificate)
