"""Skew-group quivers, loop witnesses, cut transport and the dual-twist round trip."""
from __future__ import annotations

import pytest

from conftest import np_class_count, to_complex
from mckay.cuts import Cut, build_cut, cut_type, invariant_cut
from mckay.errors import Divisible, NotDivisible, NotInvariant
from mckay.lattice import AbelianQuotient, LatticeBasis, admissible_bases
from mckay.mckay_quiver import build_quiver, k_action
from mckay.monomial_group import conjugacy_classes, group_from_basis
from mckay.skew import (
    detect_loops,
    dual_twist_action,
    loop_witness,
    skew_quiver,
    transport_cut,
    unskew_round_trip,
)


def _skew(basis, kind, **kw):
    q = build_quiver(AbelianQuotient(basis))
    act = k_action(q, kind, **kw)
    return q, act, skew_quiver(q, act)


def test_skew_2i_kind_c():
    _, _, s = _skew(LatticeBasis(2, 0, 2), "C")
    assert [(v.orbit_rep, v.irrep, v.dimension, v.orbit_size) for v in s.vertices] == [
        ((0, 0), "triv", 1, 1),
        ((0, 0), "omega", 1, 1),
        ((0, 0), "omega2", 1, 1),
        ((0, 1), "triv", 3, 3),
    ]
    assert s.mult == {
        (0, 3): 1, (1, 3): 1, (2, 3): 1,
        (3, 0): 1, (3, 1): 1, (3, 2): 1, (3, 3): 2,
    }
    assert s.loops() == ((3, 2),)
    assert s.dimension_square_sum == 12 == s.group_size


def test_skew_2i_kind_d():
    _, _, s = _skew(LatticeBasis(2, 0, 2), "D")
    assert [(v.orbit_rep, v.irrep, v.dimension) for v in s.vertices] == [
        ((0, 0), "triv", 1),
        ((0, 0), "sgn", 1),
        ((0, 0), "std", 2),
        ((0, 1), "triv", 3),
        ((0, 1), "sgn", 3),
    ]
    # each three-dimensional vertex carries a single loop
    assert s.loops() == ((3, 1), (4, 1))
    assert s.dimension_square_sum == 24 == s.group_size
    assert s.mult == {
        (0, 4): 1, (1, 3): 1, (2, 3): 1, (2, 4): 1,
        (3, 1): 1, (3, 2): 1, (3, 3): 1, (3, 4): 1,
        (4, 0): 1, (4, 2): 1, (4, 3): 1, (4, 4): 1,
    }


def test_skew_3i_kind_c():
    _, _, s = _skew(LatticeBasis(3, 0, 3), "C")
    assert len(s.vertices) == 11
    assert sorted(v.dimension for v in s.vertices) == [1] * 9 + [3, 3]
    assert s.loops() == ()
    assert s.dimension_square_sum == 27


def test_skew_3i_kind_d():
    _, _, s = _skew(LatticeBasis(3, 0, 3), "D")
    assert len(s.vertices) == 10
    assert sorted(v.dimension for v in s.vertices) == [1, 1, 2, 2, 2, 2, 3, 3, 3, 3]
    assert s.dimension_square_sum == 54


def test_skew_abelian_case():
    _, _, s = _skew(LatticeBasis(3, 2, 1), "C")
    assert len(s.vertices) == 9
    assert {v.dimension for v in s.vertices} == {1}


def test_vertex_count_equals_class_count():
    from mckay.lattice import is_admissible

    for basis in admissible_bases(16, "C"):
        for kind in ("C", "D"):
            factor = {"C": 3, "D": 6}[kind]
            if basis.det * factor > 200 or not is_admissible(basis, kind):
                continue
            _, _, s = _skew(basis, kind)
            g = group_from_basis(basis, kind)
            assert len(s.vertices) == len(conjugacy_classes(g))
            assert s.dimension_square_sum == g.order == s.group_size


def test_class_count_against_numeric_oracle():
    for basis, kind in [(LatticeBasis(6, 4, 2), "C"), (LatticeBasis(6, 4, 2), "D")]:
        _, _, s = _skew(basis, kind)
        g = group_from_basis(basis, kind)
        assert len(s.vertices) == np_class_count([to_complex(x) for x in g.elements])


def test_weighted_three_regularity():
    for basis, kind in [
        (LatticeBasis(2, 0, 2), "D"),
        (LatticeBasis(3, 0, 3), "C"),
        (LatticeBasis(7, 3, 1), "C"),
    ]:
        _, _, s = _skew(basis, kind)
        dim = {i: v.dimension for i, v in enumerate(s.vertices)}
        for i in dim:
            out = sum(m * dim[j] for (a, j), m in s.mult.items() if a == i)
            into = sum(m * dim[a] for (a, j), m in s.mult.items() if j == i)
            assert out == 3 * dim[i]
            assert into == 3 * dim[i]


def test_loop_witness_frozen():
    w = loop_witness(LatticeBasis(2, 0, 2), "C")
    assert w.k == 1
    assert w.vertex == (0, 1)
    assert set(w.orbit) == {(0, 1), (1, 0), (1, 1)}
    assert w.orbit_size == 3
    assert not w.special_c2xc2

    wd = loop_witness(LatticeBasis(2, 0, 2), "D")
    assert wd.orbit_size == 3
    assert wd.special_c2xc2

    w7 = loop_witness(LatticeBasis(7, 3, 1), "C")
    assert w7.k == 2
    assert set(w7.orbit) == {(5, 0), (6, 0), (3, 0)}


def test_loop_witness_target_stays_in_orbit():
    for basis, kind in [
        (LatticeBasis(2, 0, 2), "C"),
        (LatticeBasis(7, 3, 1), "C"),
        (LatticeBasis(7, 5, 1), "C"),
        (LatticeBasis(4, 0, 4), "D"),
        (LatticeBasis(5, 0, 5), "D"),
    ]:
        w = loop_witness(basis, kind)
        q = AbelianQuotient(basis)
        x = w.vertex
        target = q.reduce((x[0] + 1, x[1]))  # type-1 arrow endpoint
        assert target in w.orbit
        expected = 3 if kind == "C" else (3 if w.special_c2xc2 else 6)
        assert w.orbit_size == expected


def test_loop_witness_requires_non_divisibility():
    with pytest.raises(Divisible):
        loop_witness(LatticeBasis(3, 0, 3), "C")


def test_witness_vertex_carries_a_loop():
    for basis, kind in [
        (LatticeBasis(2, 0, 2), "C"),
        (LatticeBasis(2, 0, 2), "D"),
        (LatticeBasis(7, 3, 1), "C"),
    ]:
        w = loop_witness(basis, kind)
        _, _, s = _skew(basis, kind)
        loops = detect_loops(s)
        assert loops
        loop_reps = {s.vertices[i].orbit_rep for i, _ in loops}
        assert set(w.orbit) & loop_reps


def test_no_loops_when_divisible():
    for basis, kind in [(LatticeBasis(3, 0, 3), "C"), (LatticeBasis(9, 6, 3), "D")]:
        _, _, s = _skew(basis, kind)
        assert detect_loops(s) == ()


def test_transport_cut_3i():
    basis = LatticeBasis(3, 0, 3)
    q, act, s = _skew(basis, "C")
    cut = invariant_cut(basis, "C")
    st = transport_cut(s, q, act, cut)
    assert st.degrees is not None
    assert set(st.degrees.values()) <= {0, 1}
    assert set(st.degrees) == set(st.mult)
    assert sum(1 for d in st.degrees.values() if d == 1) == 9
    # the degree-0 part has no directed cycle
    edges = [(i, j) for (i, j), d in st.degrees.items() if d == 0]
    assert _acyclic(len(st.vertices), edges)


def _acyclic(n, edges):
    out = {i: [] for i in range(n)}
    for i, j in edges:
        out[i].append(j)
    state = [0] * n
    def dfs(v):
        state[v] = 1
        for w in out[v]:
            if state[w] == 1 or (state[w] == 0 and dfs(w)):
                return True
        state[v] = 2
        return False
    return not any(state[v] == 0 and dfs(v) for v in range(n))


def test_transport_rejects_non_invariant_cut():
    basis = LatticeBasis(7, 3, 1)
    q, act, s = _skew(basis, "C")
    cut = build_cut(basis, (1, 4, 2))
    with pytest.raises(NotInvariant):
        transport_cut(s, q, act, cut)


def test_dual_twist_structure():
    basis = LatticeBasis(3, 0, 3)
    _, _, s = _skew(basis, "C")
    tw = dual_twist_action(s)
    perm = tw.vertex_perm
    n = len(perm)
    # order three exactly
    def apply3(i):
        for _ in range(3):
            i = perm[i]
        return i
    assert [apply3(i) for i in range(n)] == list(range(n))
    fixed = [i for i in range(n) if perm[i] == i]
    assert fixed == [
        i for i, v in enumerate(s.vertices) if v.orbit_size == 3
    ]
    assert len(fixed) == 2


def test_dual_twist_needs_kind_c():
    _, _, s = _skew(LatticeBasis(3, 0, 3), "D")
    with pytest.raises(ValueError):
        dual_twist_action(s)


def test_round_trip_det3():
    report = unskew_round_trip(LatticeBasis(3, 2, 1))
    assert report.cut_recovered
    assert report.skew_vertex_count == 9
    assert report.double_skew_vertex_count == 3
    assert report.recovered_cut == report.original_cut


def test_round_trip_3i():
    report = unskew_round_trip(LatticeBasis(3, 0, 3))
    assert report.cut_recovered
    assert report.skew_vertex_count == 11
    assert report.double_skew_vertex_count == 9
    assert cut_type(report.recovered_cut) == (3, 3, 3)


def test_round_trip_det12():
    report = unskew_round_trip(LatticeBasis(6, 4, 2))
    assert report.cut_recovered
    assert report.double_skew_vertex_count == 12


def test_round_trip_needs_divisibility():
    with pytest.raises(NotDivisible):
        unskew_round_trip(LatticeBasis(2, 0, 2))
