"""Skew-group quivers by orbit, stabilizer and exact character arithmetic.

Vertices of the skewed quiver are pairs (orbit representative, irreducible
character of the stabilizer); the arrow multiplicity between two such
vertices is a sum of Hom-space dimensions over a transversal of the
diagonal orbits, each computed as an exact character inner product over
the joint stabilizer.  All character values and traces are cyclotomic
integers, so a non-integer multiplicity can only mean a bookkeeping bug
and is raised, never rounded.

The same engine is reused for the second (dual) skew of the unskew round
trip: the carrier abstraction below provides vertices, the acting group,
and per-block traces; the engine never looks at what the vertices are.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from math import lcm
from typing import Hashable, Protocol

from .cuts import Cut, _has_cycle, invariant_cut, validate_cut
from .cyclotomic import CycInt, root_of_unity
from .errors import (
    Divisible,
    InternalCriterionFailure,
    InternalInvariantViolation,
    IsoSearchExhausted,
    MixedDegrees,
    NonIntegralMultiplicity,
    NotDivisible,
    NotInvariant,
)
from .graphiso import find_isomorphism
from .lattice import AbelianQuotient, LatticeBasis, check_admissible
from .mckay_quiver import (
    ARROW_TYPES,
    Arrow,
    QuiverAction,
    TypedQuiver,
    build_quiver,
    k_action,
)

__all__ = [
    "SkewVertex",
    "SkewQuiver",
    "LoopWitness",
    "DualTwistAction",
    "RoundTripReport",
    "skew_quiver",
    "detect_loops",
    "loop_witness",
    "transport_cut",
    "dual_twist_action",
    "unskew_round_trip",
]


# ---------------------------------------------------------------------------
# Characters of the possible stabilizers (subgroups of S3).

_LABELS_BY_ORDER = {
    1: (("triv", 1),),
    2: (("triv", 1), ("sgn", 1)),
    3: (("triv", 1), ("omega", 1), ("omega2", 1)),
    6: (("triv", 1), ("sgn", 1), ("std", 2)),
}


class Carrier(Protocol):
    """What the skewing engine needs to know about a quiver with a group action."""

    vertices: tuple[Hashable, ...]
    names: tuple[str, ...]
    identity: str
    cyclotomic_order: int

    def mul(self, a: str, b: str) -> str: ...
    def inv(self, a: str) -> str: ...
    def act_vertex(self, name: str, v): ...
    def block_dim(self, v, w) -> int: ...
    def block_trace(self, name: str, v, w) -> CycInt: ...


def _element_order(carrier: Carrier, name: str) -> int:
    k, x = 1, name
    while x != carrier.identity:
        x = carrier.mul(x, name)
        k += 1
        if k > 6:
            raise InternalInvariantViolation(f"element {name} has order > 6")
    return k


def _char_value(
    carrier: Carrier, subgroup: tuple[str, ...], label: str, h: str
) -> CycInt:
    """chi_label(h) for the stabilizer subgroup, as an exact cyclotomic integer."""
    w = carrier.cyclotomic_order
    order = len(subgroup)
    if label == "triv":
        return CycInt.integer(w, 1)
    if order == 2:
        if label != "sgn":
            raise ValueError(f"unknown order-2 label {label}")
        return CycInt.integer(w, 1 if h == carrier.identity else -1)
    if order == 3:
        gen = subgroup[1]
        if h == carrier.identity:
            k = 0
        elif h == gen:
            k = 1
        else:
            if carrier.mul(gen, gen) != h:
                raise InternalInvariantViolation(f"{h} is not a power of {gen}")
            k = 2
        j = {"omega": 1, "omega2": 2}[label]
        return root_of_unity(w, (w // 3) * ((j * k) % 3))
    if order == 6:
        o = _element_order(carrier, h)
        if label == "sgn":
            return CycInt.integer(w, -1 if o == 2 else 1)
        if label == "std":
            if o == 1:
                return CycInt.integer(w, 2)
            return CycInt.integer(w, -1 if o == 3 else 0)
    raise ValueError(f"unknown label {label} for a stabilizer of order {order}")


# ---------------------------------------------------------------------------
# Skew quiver data.


@dataclass(frozen=True)
class SkewVertex:
    """(orbit representative, stabilizer irreducible) with its induced dimension."""

    orbit_rep: Hashable
    irrep: str
    degree: int
    orbit_size: int
    dimension: int


@dataclass(frozen=True, eq=False)
class SkewQuiver:
    """Vertices with dimensions, arrow multiplicities, optional degrees."""

    vertices: tuple[SkewVertex, ...]
    mult: dict[tuple[int, int], int]
    degrees: dict[tuple[int, int], int] | None
    group_size: int
    metadata: dict

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @cached_property
    def dimension_square_sum(self) -> int:
        return sum(v.dimension ** 2 for v in self.vertices)

    def loops(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, m) for (i, j), m in sorted(self.mult.items()) if i == j and m > 0
        )


def _demonet(carrier: Carrier) -> tuple[tuple[SkewVertex, ...], dict, dict]:
    """Core skewing engine; returns vertices, multiplicities, and orbit data."""
    verts = carrier.vertices
    names = carrier.names
    w = carrier.cyclotomic_order

    orbit_of: dict = {}
    orbits: list[tuple] = []
    for v in verts:
        if v in orbit_of:
            continue
        orbit = tuple(sorted({carrier.act_vertex(g, v) for g in names}))
        orbits.append(orbit)
        for u in orbit:
            orbit_of[u] = orbit
    stab = {
        v: tuple(g for g in names if carrier.act_vertex(g, v) == v) for v in verts
    }
    g_to: dict = {}
    for orbit in orbits:
        rep = orbit[0]
        for u in orbit:
            for g in names:
                if carrier.act_vertex(g, rep) == u:
                    g_to[u] = g
                    break

    skew_vertices: list[SkewVertex] = []
    vertex_home: list[tuple] = []  # orbit of each skew vertex
    for orbit in orbits:
        rep = orbit[0]
        for label, deg in _LABELS_BY_ORDER[len(stab[rep])]:
            skew_vertices.append(
                SkewVertex(
                    orbit_rep=rep,
                    irrep=label,
                    degree=deg,
                    orbit_size=len(orbit),
                    dimension=len(orbit) * deg,
                )
            )
            vertex_home.append(orbit)

    transversals: dict[tuple[tuple, tuple], tuple] = {}

    def transversal(o1: tuple, o2: tuple) -> tuple:
        key = (o1, o2)
        got = transversals.get(key)
        if got is not None:
            return got
        seen: set = set()
        reps = []
        for u1 in o1:
            for u2 in o2:
                if (u1, u2) in seen:
                    continue
                reps.append((u1, u2))
                for g in names:
                    seen.add((carrier.act_vertex(g, u1), carrier.act_vertex(g, u2)))
        transversals[key] = tuple(reps)
        return transversals[key]

    mult: dict[tuple[int, int], int] = {}
    nv = len(skew_vertices)
    for ai in range(nv):
        va = skew_vertices[ai]
        o1 = vertex_home[ai]
        stab_a = stab[va.orbit_rep]
        for bi in range(nv):
            vb = skew_vertices[bi]
            o2 = vertex_home[bi]
            stab_b = stab[vb.orbit_rep]
            total = 0
            for (u1, u2) in transversal(o1, o2):
                if carrier.block_dim(u1, u2) == 0:
                    continue
                joint = tuple(
                    h
                    for h in names
                    if carrier.act_vertex(h, u1) == u1
                    and carrier.act_vertex(h, u2) == u2
                )
                g1, g2 = g_to[u1], g_to[u2]
                g1i, g2i = carrier.inv(g1), carrier.inv(g2)
                acc = CycInt.zero(w)
                for h in joint:
                    h1 = carrier.mul(g1i, carrier.mul(h, g1))
                    h2 = carrier.mul(g2i, carrier.mul(h, g2))
                    c1 = _char_value(carrier, stab_a, va.irrep, h1).conjugate()
                    c2 = _char_value(carrier, stab_b, vb.irrep, h2)
                    acc = acc + c1 * c2 * carrier.block_trace(h, u1, u2)
                try:
                    val = acc.divide_exact(len(joint))
                except ValueError:
                    raise NonIntegralMultiplicity(
                        f"block ({va.orbit_rep}/{va.irrep} -> "
                        f"{vb.orbit_rep}/{vb.irrep}) pair {u1}->{u2}: "
                        f"inner product {acc.coords} not divisible by {len(joint)}"
                    ) from None
                if not val.is_integer or val.integer_value < 0:
                    raise NonIntegralMultiplicity(
                        f"block ({va.orbit_rep}/{va.irrep} -> "
                        f"{vb.orbit_rep}/{vb.irrep}) pair {u1}->{u2}: "
                        f"inner product is not a nonnegative integer: {val.coords}"
                    )
                total += val.integer_value
            if total:
                mult[(ai, bi)] = total

    expected = len(verts) * len(names)
    square_sum = sum(v.dimension ** 2 for v in skew_vertices)
    if square_sum != expected:
        raise InternalInvariantViolation(
            f"sum of squared dimensions {square_sum} != |V| * |K| = {expected}"
        )
    aux = {"orbit_of": orbit_of, "stab": stab, "g_to": g_to, "orbits": orbits}
    return tuple(skew_vertices), mult, aux


# ---------------------------------------------------------------------------
# First skew: the McKay quiver of Q_N under the C3 / S3 action.


class _QuiverCarrier:
    """Carrier for Q_N with the K-action; traces include the arrow scalars."""

    def __init__(self, quiver: TypedQuiver, action: QuiverAction):
        self.quiver = quiver
        self.action = action
        self.vertices = quiver.vertices
        self.names = action.names
        self.identity = action.identity_name
        self.cyclotomic_order = lcm(action.root_order, 3)

    def mul(self, a: str, b: str) -> str:
        return self.action.mul(a, b)

    def inv(self, a: str) -> str:
        return self.action.inv(a)

    def act_vertex(self, name: str, v):
        return self.action.act_vertex(name, v)

    def _block_types(self, v, w) -> tuple[int, ...]:
        return tuple(
            i for i in ARROW_TYPES if self.quiver.target(Arrow(v, i)) == w
        )

    def block_dim(self, v, w) -> int:
        return len(self._block_types(v, w))

    def block_trace(self, name: str, v, w) -> CycInt:
        e = self.action.element(name)
        scale = self.cyclotomic_order // self.action.root_order
        acc = CycInt.zero(self.cyclotomic_order)
        for i in self._block_types(v, w):
            if e.act_type(i) == i:
                acc = acc + root_of_unity(
                    self.cyclotomic_order, e.scalar_exp(i) * scale
                )
        return acc


def skew_quiver(quiver: TypedQuiver, action: QuiverAction) -> SkewQuiver:
    """The quiver of the skew-group algebra for the K-action on Q_N.

    Checks the completeness identity (sum of squared dimensions equals
    |N| * |K|) and 3-regularity weighted by dimensions at every vertex.
    """
    carrier = _QuiverCarrier(quiver, action)
    vertices, mult, _ = _demonet(carrier)
    s = SkewQuiver(
        vertices=vertices,
        mult=mult,
        degrees=None,
        group_size=len(carrier.vertices) * len(carrier.names),
        metadata={
            "kind": action.kind,
            "root_order": action.root_order,
            "scalars": action.scalars,
        },
    )
    dims = [v.dimension for v in s.vertices]
    for i in range(len(dims)):
        out_sum = sum(m * dims[j] for (a, j), m in mult.items() if a == i)
        in_sum = sum(m * dims[a] for (a, j), m in mult.items() if j == i)
        if out_sum != 3 * dims[i] or in_sum != 3 * dims[i]:
            raise InternalInvariantViolation(
                f"vertex {i}: weighted degree ({out_sum}, {in_sum}) != 3*{dims[i]}"
            )
    return s


def detect_loops(s: SkewQuiver) -> tuple[tuple[int, int], ...]:
    """Vertices carrying loops, as (vertex index, loop multiplicity) pairs."""
    return s.loops()


@dataclass(frozen=True)
class LoopWitness:
    """The coset witnessing a loop when 3 does not divide |N|."""

    k: int
    vertex: tuple[int, int]
    orbit: tuple[tuple[int, int], ...]
    special_c2xc2: bool

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)


def loop_witness(basis: LatticeBasis, kind: str) -> LoopWitness:
    """The witness coset x1 = (-k-1, k) with 3k+1 = 0 mod n, whose K-orbit
    contains x1 + e1; its full connected orbit forces a loop on the skew quiver.

    Orbit size is 3 for kind C and 6 for kind D, except for the C2 x C2
    quotient in kind D where the orbit has size 3 and is flagged special.
    """
    check_admissible(basis, kind)
    n = basis.det
    if n % 3 == 0:
        raise Divisible(f"3 divides det(B) = {n}; no loop witness exists")
    k = (-pow(3, -1, n)) % n
    if (3 * k + 1) % n:
        raise InternalCriterionFailure("modular inverse of 3 is wrong")
    quotient = AbelianQuotient(basis)
    x1 = quotient.reduce((-k - 1, k))
    q = build_quiver(quotient)
    act = k_action(q, kind)
    orbit = tuple(sorted({act.act_vertex(g, x1) for g in act.names}))
    x2 = quotient.reduce((x1[0] + 1, x1[1]))
    if x2 not in orbit:
        raise InternalCriterionFailure(f"{x2} escaped the orbit of {x1}")
    special = kind == "D" and basis.smith_invariants() == (2, 2)
    expected = 3 if kind == "C" or special else 6
    if len(orbit) != expected:
        raise InternalCriterionFailure(
            f"orbit of {x1} has size {len(orbit)}, expected {expected}"
        )
    return LoopWitness(k=k, vertex=x1, orbit=orbit, special_c2xc2=special)


# ---------------------------------------------------------------------------
# Cut transport.


def transport_cut(
    s: SkewQuiver, quiver: TypedQuiver, action: QuiverAction, cut: Cut
) -> SkewQuiver:
    """Assign degrees to the skew quiver blocks from an invariant cut.

    Each multiplicity block inherits the common degree of the underlying
    arrows between the two vertex orbits; invariance makes this well
    defined, and the degree-0 part must stay acyclic.
    """
    if not action.is_arrow_set_invariant(cut.arrows):
        raise NotInvariant("the cut is not stable under the symmetry action")
    report = validate_cut(quiver, cut)
    if not report.passed:
        raise ValueError(f"cut fails validation: {report.witnesses}")
    orbit_lookup: dict[tuple[int, int], tuple] = {}
    for orbit in action.vertex_orbits():
        for v in orbit:
            orbit_lookup[v] = orbit
    degrees: dict[tuple[int, int], int] = {}
    for (ai, bi), m in sorted(s.mult.items()):
        o1 = orbit_lookup[s.vertices[ai].orbit_rep]
        o2 = orbit_lookup[s.vertices[bi].orbit_rep]
        degs = {
            cut.degree(a)
            for u1 in o1
            for u2 in o2
            for a in quiver.arrows_between(u1, u2)
        }
        if not degs:
            raise InternalInvariantViolation(
                f"block ({ai}, {bi}) has multiplicity {m} but no underlying arrows"
            )
        if len(degs) > 1:
            raise MixedDegrees(
                f"arrows between orbits of {s.vertices[ai].orbit_rep} and "
                f"{s.vertices[bi].orbit_rep} carry mixed degrees {sorted(degs)}"
            )
        degrees[(ai, bi)] = degs.pop()
    _assert_degree_zero_acyclic(len(s.vertices), s.mult, degrees)
    return replace(s, degrees=degrees)


def _assert_degree_zero_acyclic(
    nv: int, mult: dict[tuple[int, int], int], degrees: dict[tuple[int, int], int]
) -> None:
    edges = [(i, j) for (i, j) in mult if degrees.get((i, j)) == 0]
    cyclic, walk = _has_cycle(tuple(range(nv)), edges)
    if cyclic:
        raise InternalInvariantViolation(
            f"degree-0 part of the skew quiver has a cycle through {walk}"
        )


# ---------------------------------------------------------------------------
# Dual twist and the unskew round trip (kind C).

_C3_LABEL_CYCLE = {"triv": "omega", "omega": "omega2", "omega2": "triv"}


@dataclass(frozen=True)
class DualTwistAction:
    """The character group of C3 acting on the skew quiver by label twist."""

    names: tuple[str, str, str]
    vertex_perm: tuple[int, ...]

    def act_index(self, name: str, i: int) -> int:
        k = self.names.index(name)
        for _ in range(k):
            i = self.vertex_perm[i]
        return i


def dual_twist_action(s: SkewQuiver) -> DualTwistAction:
    """Generator: (u, phi) -> (u, phi tensor lambda); free-orbit vertices are fixed.

    lambda is the weight-one character of the acting C3 pulled back to the
    whole group; it is trivial on the diagonal part, so only the
    stabilizer-irrep label moves.
    """
    if s.metadata.get("kind") != "C":
        raise ValueError("the dual twist is defined for kind C skews only")
    index = {(v.orbit_rep, v.irrep): i for i, v in enumerate(s.vertices)}
    perm = []
    for v in s.vertices:
        if v.orbit_size == 3:
            # trivial stabilizer: only one irrep, fixed by the twist
            perm.append(index[(v.orbit_rep, v.irrep)])
        else:
            perm.append(index[(v.orbit_rep, _C3_LABEL_CYCLE[v.irrep])])
    p = tuple(perm)
    triple = [p[i] for i in p]
    triple = [p[i] for i in triple]
    if triple != list(range(len(p))):
        raise InternalInvariantViolation("dual twist does not have order 3")
    return DualTwistAction(names=("1", "g", "g^2"), vertex_perm=p)


class _TwistCarrier:
    """Carrier for the second skew: the dual C3 acting on S = Q_N * C3.

    Arrow blocks between twist-fixed vertices decompose into weight
    spaces: each transversal pair (u1, u2) of the underlying vertex
    orbits contributes its arrow count with weight g2^-1 g1 read in the
    original C3; traces are sums of cube roots of unity accordingly.
    """

    def __init__(
        self,
        s: SkewQuiver,
        twist: DualTwistAction,
        quiver: TypedQuiver,
        action: QuiverAction,
    ):
        self.s = s
        self.twist = twist
        self.quiver = quiver
        self.action = action
        self.vertices = tuple(range(len(s.vertices)))
        self.names = twist.names
        self.identity = "1"
        self.cyclotomic_order = 3
        self._orbit_lookup: dict[tuple[int, int], tuple] = {}
        for orbit in action.vertex_orbits():
            for v in orbit:
                self._orbit_lookup[v] = orbit
        self._g_to: dict[tuple[int, int], str] = {}
        for orbit in action.vertex_orbits():
            for u in orbit:
                self._g_to[u] = action.transversal_element(orbit[0], u)
        self._weights_cache: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}

    def mul(self, a: str, b: str) -> str:
        return self.names[(self.names.index(a) + self.names.index(b)) % 3]

    def inv(self, a: str) -> str:
        return self.names[(-self.names.index(a)) % 3]

    def act_vertex(self, name: str, v: int) -> int:
        return self.twist.act_index(name, v)

    def block_dim(self, v: int, w: int) -> int:
        return self.s.mult.get((v, w), 0)

    def _power_of_t(self, name: str) -> int:
        # the original action is C3 generated by "t"
        return {"1": 0, "t": 1, "t^2": 2}[name]

    def _weights(self, v: int, w: int) -> tuple[tuple[int, int], ...]:
        """(weight exponent, count) per transversal pair of the underlying orbits."""
        key = (v, w)
        got = self._weights_cache.get(key)
        if got is not None:
            return got
        act = self.action
        o1 = self._orbit_lookup[self.s.vertices[v].orbit_rep]
        o2 = self._orbit_lookup[self.s.vertices[w].orbit_rep]
        seen: set = set()
        out: list[tuple[int, int]] = []
        for u1 in o1:
            for u2 in o2:
                if (u1, u2) in seen:
                    continue
                for g in act.names:
                    seen.add((act.act_vertex(g, u1), act.act_vertex(g, u2)))
                count = len(self.quiver.arrows_between(u1, u2))
                if count:
                    g1, g2 = self._g_to[u1], self._g_to[u2]
                    delta = act.mul(act.inv(g2), g1)
                    out.append((self._power_of_t(delta), count))
        weights = tuple(out)
        total = sum(c for _, c in weights)
        if total != self.block_dim(v, w):
            raise InternalInvariantViolation(
                f"weight decomposition of block ({v}, {w}) sums to {total}, "
                f"multiplicity is {self.block_dim(v, w)}"
            )
        self._weights_cache[key] = weights
        return weights

    def block_trace(self, name: str, v: int, w: int) -> CycInt:
        m = self.names.index(name)
        if m == 0:
            return CycInt.integer(3, self.block_dim(v, w))
        acc = CycInt.zero(3)
        for k, count in self._weights(v, w):
            acc = acc + CycInt.integer(3, count) * root_of_unity(3, (m * k) % 3)
        return acc


@dataclass(frozen=True)
class RoundTripReport:
    """Outcome of skewing by C3 and unskewing by its character group."""

    basis: LatticeBasis
    skew_vertex_count: int
    double_skew_vertex_count: int
    isomorphism: tuple[int, ...]
    cut_recovered: bool
    original_cut: Cut
    recovered_cut: Cut


def unskew_round_trip(basis: LatticeBasis) -> RoundTripReport:
    """Skew Q_N by the rotation action, skew again by the dual group, and
    match the result with Q_N carrying the invariant cut.

    The isomorphism is searched over vertex bijections preserving
    multiplicities and transported degrees; exhaustion is an error, the
    recovered cut is compared arrow by arrow.
    """
    check_admissible(basis, "C")
    n = basis.det
    if n % 3:
        raise NotDivisible(f"3 does not divide det(B) = {n}")
    quotient = AbelianQuotient(basis)
    quiver = build_quiver(quotient)
    action = k_action(quiver, "C")
    cut = invariant_cut(basis, "C")
    s = skew_quiver(quiver, action)
    s = transport_cut(s, quiver, action, cut)

    twist = dual_twist_action(s)
    carrier = _TwistCarrier(s, twist, quiver, action)
    vertices2, mult2, aux2 = _demonet(carrier)

    # Transport the degrees through the second skew: a block inherits the
    # common degree of the S-blocks joining the two twist orbits.
    orbit_of2 = aux2["orbit_of"]
    degrees2: dict[tuple[int, int], int] = {}
    assert s.degrees is not None
    for (ai, bi), m in sorted(mult2.items()):
        o1 = orbit_of2[_vertex2_index(vertices2, ai)]
        o2 = orbit_of2[_vertex2_index(vertices2, bi)]
        degs = {
            s.degrees[(i, j)]
            for i in o1
            for j in o2
            if (i, j) in s.mult
        }
        if not degs:
            raise InternalInvariantViolation(
                f"double-skew block ({ai}, {bi}) has no underlying blocks"
            )
        if len(degs) > 1:
            raise MixedDegrees(
                f"double-skew block ({ai}, {bi}) sees mixed degrees {sorted(degs)}"
            )
        degrees2[(ai, bi)] = degs.pop()
    _assert_degree_zero_acyclic(len(vertices2), mult2, degrees2)

    if len(vertices2) != n:
        raise IsoSearchExhausted(
            f"double skew has {len(vertices2)} vertices, Q_N has {n}"
        )

    # Label maps for the isomorphism search: (multiplicity, degree) per pair.
    labels_a = {
        (i, j): (m, degrees2[(i, j)]) for (i, j), m in mult2.items()
    }
    labels_b: dict[tuple[int, int], tuple[int, int]] = {}
    vindex = {v: i for i, v in enumerate(quiver.vertices)}
    for x in quiver.vertices:
        for y in quiver.vertices:
            arrows = quiver.arrows_between(x, y)
            if not arrows:
                continue
            degs = {cut.degree(a) for a in arrows}
            if len(degs) > 1:
                raise InternalInvariantViolation(
                    f"invariant cut mixes degrees inside block {x} -> {y}"
                )
            labels_b[(vindex[x], vindex[y])] = (len(arrows), degs.pop())

    mapping = find_isomorphism(n, labels_a, labels_b)
    if mapping is None:
        raise IsoSearchExhausted(
            "no multiplicity- and degree-preserving bijection between the "
            "double skew and the original quiver"
        )

    # Pull the double-skew degrees back to arrows and compare with the cut.
    recovered: list[Arrow] = []
    rev = {u: i for i, u in enumerate(mapping)}
    for a in quiver.arrows:
        i = rev[vindex[a.source]]
        j = rev[vindex[quiver.target(a)]]
        if degrees2.get((i, j)) == 1:
            recovered.append(a)
    recovered_cut = Cut.of(recovered)
    return RoundTripReport(
        basis=basis,
        skew_vertex_count=len(s.vertices),
        double_skew_vertex_count=len(vertices2),
        isomorphism=tuple(mapping),
        cut_recovered=recovered_cut == cut,
        original_cut=cut,
        recovered_cut=recovered_cut,
    )


def _vertex2_index(vertices2: tuple[SkewVertex, ...], i: int):
    return vertices2[i].orbit_rep
