"""Simplicial maps: validation, application, composition."""

import pytest

import ssets as S
from ssets import Simplex


@pytest.fixture(scope="module")
def delta1():
    return S.standard_simplex(1)


@pytest.fixture(scope="module")
def delta2():
    return S.standard_simplex(2)


def collapse_map(delta2, delta1):
    """Squash the triangle onto the edge: vertices 0, 1, 2 go to 0, 1, 1."""
    e = Simplex((), delta1.generator(1, "0.1"))
    zero = Simplex((), delta1.generator(0, "0"))
    one = Simplex((), delta1.generator(0, "1"))
    return S.SimplicialMap(
        delta2,
        delta1,
        {
            delta2.generator(2, "0.1.2"): S.degenerate(e, 1),
            delta2.generator(1, "0.1"): e,
            delta2.generator(1, "0.2"): e,
            delta2.generator(1, "1.2"): S.degenerate(one, 0),
            delta2.generator(0, "0"): zero,
            delta2.generator(0, "1"): one,
            delta2.generator(0, "2"): one,
        },
        name="collapse",
    )


@pytest.fixture(scope="module")
def collapse(delta2, delta1):
    return collapse_map(delta2, delta1)


def test_identity_map_is_valid(delta2):
    ident = S.identity_map(delta2)
    assert S.validate_map(ident).ok
    for n in range(4):
        for x in delta2.simplices(n):
            assert S.apply_map(ident, x) == x


def test_collapse_map_is_valid(collapse):
    assert S.validate_map(collapse).ok


def test_collapse_with_wrong_edge_image_fails(delta2, delta1):
    bad = collapse_map(delta2, delta1)
    bad.assignment[delta2.generator(1, "1.2")] = Simplex(
        (), delta1.generator(1, "0.1")
    )
    report = S.validate_map(bad)
    assert not report.ok
    assert any(m.gen.name == "1.2" for m in report.violations)


def test_collapse_of_deep_degenerate_simplex(collapse, delta2, delta1):
    # s_4 s_3 s_1 over the triangle goes to the edge simplex with
    # vertex sequence (0, 1, 1, 1, 1, 1)
    x = Simplex((4, 3, 1), delta2.generator(2, "0.1.2"))
    img = S.apply_map(collapse, x)
    assert img == Simplex((4, 3, 2, 1), delta1.generator(1, "0.1"))
    assert S.vertex_sequence(img) == (0, 1, 1, 1, 1, 1)


def test_collapse_of_second_diagonal_edge(collapse, delta1):
    x = Simplex((), collapse.source.generator(1, "0.2"))
    assert S.apply_map(collapse, x) == Simplex((), delta1.generator(1, "0.1"))


def test_map_commutes_with_faces_and_degeneracies(collapse):
    src, tgt = collapse.source, collapse.target
    for n in range(1, 5):
        for x in src.simplices(n):
            for i in range(n + 1):
                assert S.apply_map(collapse, src.face(x, i)) == tgt.face(
                    S.apply_map(collapse, x), i
                )
    for n in range(4):
        for x in src.simplices(n):
            for i in range(n + 1):
                assert S.apply_map(collapse, S.degenerate(x, i)) == S.degenerate(
                    S.apply_map(collapse, x), i
                )


def test_compose_with_identity(collapse, delta1, delta2):
    assert S.compose(S.identity_map(delta1), collapse) == collapse
    assert S.compose(collapse, S.identity_map(delta2)) == collapse


def test_composition_is_associative(collapse, delta1, delta2):
    # edge inclusion, then collapse, then the squash of the edge onto 0
    incl = S.SimplicialMap(
        delta1,
        delta2,
        {
            delta1.generator(0, "0"): Simplex((), delta2.generator(0, "0")),
            delta1.generator(0, "1"): Simplex((), delta2.generator(0, "1")),
            delta1.generator(1, "0.1"): Simplex((), delta2.generator(1, "0.1")),
        },
    )
    zero = Simplex((), delta1.generator(0, "0"))
    squash = S.SimplicialMap(
        delta1,
        delta1,
        {
            delta1.generator(0, "0"): zero,
            delta1.generator(0, "1"): zero,
            delta1.generator(1, "0.1"): S.degenerate(zero, 0),
        },
    )
    assert S.validate_map(incl).ok and S.validate_map(squash).ok
    lhs = S.compose(squash, S.compose(collapse, incl))
    rhs = S.compose(S.compose(squash, collapse), incl)
    assert lhs.assignment == rhs.assignment
    assert S.validate_map(lhs).ok


def test_compose_rejects_presentation_mismatch(collapse, delta2):
    with pytest.raises(ValueError):
        S.compose(collapse, collapse)


def test_validate_map_fatal_on_dimension_mismatch(delta1, delta2):
    bad = S.SimplicialMap(
        delta1,
        delta2,
        {
            delta1.generator(0, "0"): Simplex((), delta2.generator(1, "0.1")),
        },
    )
    report = S.validate_map(bad)
    assert report.fatal
