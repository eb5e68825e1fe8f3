"""Typed quivers on abelian quotients and the residual C3/S3 action."""
from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mckay.errors import NotAdmissible
from mckay.lattice import AbelianQuotient, LatticeBasis
from mckay.mckay_quiver import (
    ARROW_TYPES,
    Arrow,
    build_quiver,
    commutativity_squares,
    elementary_cycles,
    k_action,
)


def _quiver(a, b, c):
    return build_quiver(AbelianQuotient(LatticeBasis(a, b, c)))


def test_vertex_and_arrow_counts():
    for (a, b, c), n in [((3, 0, 3), 9), ((2, 0, 2), 4), ((3, 2, 1), 3)]:
        q = _quiver(a, b, c)
        assert len(q.vertices) == n
        assert len(q.arrows) == 3 * n


def test_targets_frozen():
    q = _quiver(3, 0, 3)
    assert q.target(Arrow((0, 0), 1)) == (1, 0)
    assert q.target(Arrow((0, 0), 2)) == (0, 1)
    assert q.target(Arrow((0, 0), 3)) == (2, 2)
    assert q.target(Arrow((2, 2), 3)) == (1, 1)


def test_three_regular_in_and_out():
    q = _quiver(6, 4, 2)
    out = Counter(a.source for a in q.arrows)
    into = Counter(q.target(a) for a in q.arrows)
    assert set(out.values()) == {3}
    assert set(into.values()) == {3}


def test_cycle_counts_frozen():
    assert len(elementary_cycles(_quiver(3, 0, 3))) == 18
    assert len(elementary_cycles(_quiver(2, 0, 2))) == 8
    assert len(elementary_cycles(_quiver(3, 2, 1))) == 6


def test_cycles_have_three_distinct_types():
    for cyc in elementary_cycles(_quiver(3, 0, 3)):
        types = sorted(a.type for a in cyc.arrows)
        assert types == [1, 2, 3]
        # closing the walk returns to the start
        q = _quiver(3, 0, 3)
        v = cyc.arrows[0].source
        for a in cyc.arrows:
            assert a.source == v
            v = q.target(a)
        assert v == cyc.arrows[0].source


def test_each_arrow_in_two_cycles_and_four_squares():
    q = _quiver(2, 0, 2)
    in_cycles = Counter()
    for cyc in elementary_cycles(q):
        for a in cyc.arrows:
            in_cycles[a] += 1
    assert set(in_cycles.values()) == {2}
    assert sum(in_cycles.values()) == 2 * len(q.arrows)

    in_squares = Counter()
    for sq in commutativity_squares(q):
        for a in set(sq.first_path) | set(sq.second_path):
            in_squares[a] += 1
    assert set(in_squares.values()) == {4}


def test_square_counts_frozen():
    assert len(commutativity_squares(_quiver(3, 0, 3))) == 27
    assert len(commutativity_squares(_quiver(2, 0, 2))) == 12
    assert len(commutativity_squares(_quiver(3, 2, 1))) == 9


def test_squares_commute():
    q = _quiver(3, 2, 1)
    for sq in commutativity_squares(q):
        a1, a2 = sq.first_path
        b1, b2 = sq.second_path
        assert a1.source == b1.source
        assert q.target(a2) == q.target(b2)
        assert {a1.type, a2.type} == {b1.type, b2.type}


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 4), st.integers(1, 4))
def test_counts_scale_with_determinant(a, b, c):
    basis = LatticeBasis(a, b % a, c)
    q = build_quiver(AbelianQuotient(basis))
    n = basis.det
    assert len(elementary_cycles(q)) == 2 * n
    assert len(commutativity_squares(q)) == 3 * n


def test_arrow_index_is_a_bijection():
    q = _quiver(3, 0, 3)
    ids = {q.arrow_index(a) for a in q.arrows}
    assert ids == set(range(27))


def test_k_action_fixed_vertices():
    q = _quiver(3, 0, 3)
    act = k_action(q, "C")
    assert act.fixed_vertices("t") == ((0, 0), (1, 2), (2, 1))
    orbits = act.vertex_orbits()
    sizes = sorted(len(o) for o in orbits)
    assert sizes == [1, 1, 1, 3, 3]


def test_k_action_2i():
    q = _quiver(2, 0, 2)
    act = k_action(q, "C")
    assert act.fixed_vertices("t") == ((0, 0),)
    assert sorted(len(o) for o in act.vertex_orbits()) == [1, 3]
    act_d = k_action(q, "D")
    assert len(act_d.elements) == 6
    assert sorted(len(o) for o in act_d.vertex_orbits()) == [1, 3]
    # the free C3 orbit keeps size 3 under S3, so stabilizers have order 2
    orbit = next(o for o in act_d.vertex_orbits() if len(o) == 3)
    for v in orbit:
        assert len(act_d.stabilizer(v)) == 2


def test_group_law_of_the_action():
    q = _quiver(3, 0, 3)
    act = k_action(q, "D")
    names = act.names
    assert len(names) == 6
    ident = act.identity_name
    assert act.mul("t", act.mul("t", "t")) == ident
    assert act.mul("s", "s") == ident
    # every element has a two-sided inverse
    for x in names:
        assert act.mul(x, act.inv(x)) == ident
        assert act.mul(act.inv(x), x) == ident
    # associativity over all triples
    for x in names:
        for y in names:
            for z in names:
                assert act.mul(act.mul(x, y), z) == act.mul(x, act.mul(y, z))


def test_action_type_maps():
    q = _quiver(2, 0, 2)
    act = k_action(q, "D")
    assert act.element("t").type_map == (2, 3, 1)
    assert act.element("s").type_map == (2, 1, 3)
    # the type maps realize S3 faithfully
    assert len({e.type_map for e in act.elements}) == 6


def test_action_permutes_arrows():
    q = _quiver(3, 0, 3)
    act = k_action(q, "C")
    for e in act.elements:
        image = {e.act_arrow(a) for a in q.arrows}
        assert image == set(q.arrows)


def test_action_commutes_with_targets():
    q = _quiver(6, 4, 2)
    act = k_action(q, "D")
    for e in act.elements:
        for a in q.arrows:
            assert e.vertex_map[q.target(a)] == q.target(e.act_arrow(a))


def test_action_requires_admissibility():
    q = _quiver(5, 1, 1)
    with pytest.raises(NotAdmissible):
        k_action(q, "C")
    q = _quiver(7, 3, 1)
    with pytest.raises(NotAdmissible):
        k_action(q, "D")


def test_involution_scalars_depend_on_exponents():
    q = _quiver(2, 0, 2)
    act = k_action(q, "D")  # default scalars at root order 2
    s = act.element("s")
    assert s.type_scalars == (1, 1, 1)
    act12 = k_action(q, "D", scalars=(1, 11, 6), root_order=12)
    s12 = act12.element("s")
    assert s12.type_scalars == ((1 + 2 * 6) % 12, (1 + 2 * 11) % 12, 6)
