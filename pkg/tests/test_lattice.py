"""Hermite/Smith forms, coset arithmetic and the admissibility criterion."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mckay.errors import NotAdmissible, SingularMatrix
from mckay.lattice import (
    AbelianQuotient,
    LatticeBasis,
    admissibility,
    admissible_bases,
    check_admissible,
    conjugate_is_integral,
    hermite_normal_form,
    is_admissible,
)


def test_hnf_frozen_examples():
    assert hermite_normal_form([(2, 0), (3, 1)]) == LatticeBasis(2, 1, 1)
    assert hermite_normal_form([(0, -2), (2, 0)]) == LatticeBasis(2, 0, 2)
    assert hermite_normal_form([(3, 0), (2, 1)]) == LatticeBasis(3, 2, 1)


def test_hnf_rejects_singular():
    with pytest.raises(SingularMatrix):
        hermite_normal_form([(2, 4), (1, 2)])
    with pytest.raises(SingularMatrix):
        hermite_normal_form([(0, 0), (0, 0)])


unimodular = st.sampled_from(
    [((1, 0), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (-1, 0)), ((2, 1), (1, 1)),
     ((1, 3), (0, 1)), ((-1, 0), (0, -1)), ((5, 2), (2, 1))]
)
small_cols = st.tuples(
    st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
)


def _matmul(cols, u):
    # postcompose with the unimodular matrix: new columns are combinations
    (a, c), (b, d) = cols
    (u11, u21), (u12, u22) = u
    return (
        (a * u11 + b * u21, c * u11 + d * u21),
        (a * u12 + b * u22, c * u12 + d * u22),
    )


@settings(max_examples=300, deadline=None)
@given(small_cols, unimodular)
def test_hnf_is_a_lattice_invariant(cols, u):
    det = cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1]
    if det == 0:
        with pytest.raises(SingularMatrix):
            hermite_normal_form(cols)
        return
    h1 = hermite_normal_form(cols)
    h2 = hermite_normal_form(_matmul(cols, u))
    assert h1 == h2
    assert h1.det == abs(det)
    assert 0 <= h1.b < h1.a and h1.c > 0


def test_hnf_output_spans_same_lattice():
    cols = ((4, 2), (6, 5))
    h = hermite_normal_form(cols)
    for col in cols:
        assert h.contains(col)


def test_smith_invariants():
    assert LatticeBasis(3, 2, 1).smith_invariants() == (1, 3)
    assert LatticeBasis(2, 0, 2).smith_invariants() == (2, 2)
    assert LatticeBasis(3, 0, 3).smith_invariants() == (3, 3)
    assert LatticeBasis(6, 4, 2).smith_invariants() == (2, 6)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.integers(0, 8), st.integers(1, 9))
def test_smith_divisibility(a, b, c):
    b %= a
    basis = LatticeBasis(a, b, c)
    d1, d2 = basis.smith_invariants()
    assert d1 * d2 == basis.det
    assert d2 % d1 == 0


def test_reduce_frozen(basis_2i):
    q = AbelianQuotient(basis_2i)
    assert q.reduce((3, 5)) == (1, 1)
    assert q.reduce((0, 0)) == (0, 0)
    assert q.reduce((-1, -1)) == (1, 1)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 6), st.integers(0, 5), st.integers(1, 6),
    st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
)
def test_reduce_is_a_retraction(a, b, c, x):
    basis = LatticeBasis(a, b % a, c)
    q = AbelianQuotient(basis)
    r = q.reduce(x)
    assert r in q.cosets
    assert q.reduce(r) == r
    # x - r is in the lattice
    assert basis.contains((x[0] - r[0], x[1] - r[1]))


def test_cosets_and_indexing(basis_3i):
    q = AbelianQuotient(basis_3i)
    assert q.order == 9
    assert len(q.cosets) == 9
    assert q.cosets == tuple(sorted(q.cosets))
    assert sorted(q.index_of(v) for v in q.cosets) == list(range(9))


def test_translation_compatibility(basis_321):
    q = AbelianQuotient(basis_321)
    for v in q.cosets:
        for w in q.cosets:
            direct = q.reduce((v[0] + w[0], v[1] + w[1]))
            assert direct in q.cosets


def test_admissibility_frozen():
    assert is_admissible(LatticeBasis(3, 2, 1), "C")
    assert is_admissible(LatticeBasis(3, 2, 1), "D")
    assert is_admissible(LatticeBasis(2, 0, 2), "D")
    assert is_admissible(LatticeBasis(7, 3, 1), "C")
    assert not is_admissible(LatticeBasis(7, 3, 1), "D")
    assert not is_admissible(LatticeBasis(5, 1, 1), "C")
    assert not is_admissible(LatticeBasis(3, 1, 1), "C")
    assert is_admissible(LatticeBasis(6, 4, 2), "D")


def test_admissibility_report_routes_agree():
    for a in range(1, 8):
        for b in range(a):
            for c in range(1, 8):
                basis = LatticeBasis(a, b, c)
                for kind in ("A", "C", "D"):
                    report = admissibility(basis, kind)
                    assert report.closed_form == report.direct
                    assert report.admissible == is_admissible(basis, kind)


def test_direct_route_is_matrix_conjugation():
    # rotation invariance alone distinguishes C from A
    basis = LatticeBasis(7, 3, 1)
    assert conjugate_is_integral(basis, ((0, -1), (1, -1)))
    assert not conjugate_is_integral(basis, ((0, 1), (1, 0)))


def test_check_admissible_failures():
    with pytest.raises(NotAdmissible) as e:
        check_admissible(LatticeBasis(1, 0, 1), "C")
    assert e.value.failed == "index"
    with pytest.raises(NotAdmissible):
        check_admissible(LatticeBasis(5, 1, 1), "C")
    with pytest.raises(NotAdmissible):
        check_admissible(LatticeBasis(7, 3, 1), "D")
    # admissible inputs pass silently
    check_admissible(LatticeBasis(3, 2, 1), "D")


def test_admissible_bases_catalog():
    c_bases = admissible_bases(48, "C")
    d_bases = admissible_bases(48, "D")
    assert len(c_bases) == 27
    assert len(d_bases) == 9
    assert set(d_bases) <= set(c_bases)
    assert [(b.a, b.b, b.c) for b in c_bases[:5]] == [
        (3, 2, 1), (2, 0, 2), (7, 3, 1), (7, 5, 1), (3, 0, 3)
    ]
    assert [(b.a, b.b, b.c) for b in d_bases] == [
        (3, 2, 1), (2, 0, 2), (3, 0, 3), (6, 4, 2), (4, 0, 4),
        (5, 0, 5), (9, 6, 3), (6, 0, 6), (12, 8, 4),
    ]
    # the determinant of a rotation-admissible basis is never 2 mod 3
    assert all(b.det % 3 != 2 for b in c_bases)


def test_basis_constructor_guards():
    with pytest.raises(SingularMatrix):
        LatticeBasis(0, 0, 1)
    with pytest.raises(SingularMatrix):
        LatticeBasis(2, 0, 0)
    with pytest.raises(ValueError):
        LatticeBasis(2, 2, 1)  # b must be reduced below a
