"""McKay quiver of an abelian quotient Z^2/B with typed arrows and its symmetry action.

Vertices are the cosets of Z^2/B.  From every vertex three arrows leave,
one per type: type 1 steps by e1 = (1, 0), type 2 by e2 = (0, 1), type 3
by e3 = (-1, -1); the steps sum to zero, so following the three types in
any cyclic order closes up.

The symmetry action is generated by the order-3 rotation t (e1 -> e2 ->
e3 -> e1) and, for kind D, the involution fixing type 3 and swapping
types 1 and 2.  An action element maps the arrow (x, i) to (g(x), sigma(i))
and multiplies its basis vector by a root-of-unity scalar depending only
on the type i; scalars are carried as exponents.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import InternalInvariantViolation
from .lattice import AbelianQuotient, check_admissible

__all__ = [
    "ARROW_TYPES",
    "STEPS",
    "Arrow",
    "TypedQuiver",
    "ElementaryCycle",
    "CommutativitySquare",
    "ActionElement",
    "QuiverAction",
    "build_quiver",
    "elementary_cycles",
    "commutativity_squares",
    "k_action",
]

ARROW_TYPES = (1, 2, 3)
STEPS = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}


class Arrow(NamedTuple):
    source: tuple[int, int]
    type: int


@dataclass(frozen=True)
class TypedQuiver:
    """The McKay quiver of Z^2/B: all (coset, type) arrows with implied targets."""

    quotient: AbelianQuotient

    @cached_property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        return self.quotient.cosets

    @cached_property
    def arrows(self) -> tuple[Arrow, ...]:
        return tuple(
            Arrow(v, i) for v in self.vertices for i in ARROW_TYPES
        )

    def target(self, arrow: Arrow) -> tuple[int, int]:
        dx, dy = STEPS[arrow.type]
        x, y = arrow.source
        return self.quotient.reduce((x + dx, y + dy))

    def arrow_index(self, arrow: Arrow) -> int:
        return self.quotient.index_of(arrow.source) * 3 + (arrow.type - 1)

    def arrows_between(self, source: tuple[int, int], target: tuple[int, int]) -> tuple[Arrow, ...]:
        return tuple(
            a for i in ARROW_TYPES
            if self.target(a := Arrow(source, i)) == target
        )


def build_quiver(quotient: AbelianQuotient) -> TypedQuiver:
    """Construct Q for the quotient and check 3-regularity in both directions."""
    q = TypedQuiver(quotient)
    indeg: dict[tuple[int, int], int] = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[q.target(a)] += 1
    if any(d != 3 for d in indeg.values()):
        raise InternalInvariantViolation("in-degrees are not all 3")
    return q


@dataclass(frozen=True, order=True)
class ElementaryCycle:
    """A 3-cycle using each arrow type once, canonicalized up to rotation."""

    arrows: tuple[Arrow, Arrow, Arrow]

    @property
    def start(self) -> tuple[int, int]:
        return self.arrows[0].source

    @property
    def type_order(self) -> tuple[int, int, int]:
        return tuple(a.type for a in self.arrows)  # type: ignore[return-value]


def _canonical_rotation(arrows: tuple[Arrow, ...]) -> tuple[Arrow, ...]:
    rotations = [arrows[k:] + arrows[:k] for k in range(len(arrows))]
    return min(rotations)


def elementary_cycles(q: TypedQuiver) -> tuple[ElementaryCycle, ...]:
    """All 3-cycles with pairwise distinct types, up to rotation; 2 det(B) of them."""
    seen: set[tuple[Arrow, ...]] = set()
    for v in q.vertices:
        for order in ((1, 2, 3), (1, 3, 2)):
            walk: list[Arrow] = []
            x = v
            for i in order:
                a = Arrow(x, i)
                walk.append(a)
                x = q.target(a)
            if x != v:
                raise InternalInvariantViolation("type steps failed to close up")
            seen.add(_canonical_rotation(tuple(walk)))
    cycles = tuple(ElementaryCycle(c) for c in sorted(seen))  # type: ignore[arg-type]
    if len(cycles) != 2 * q.quotient.order:
        raise InternalInvariantViolation(
            f"{len(cycles)} elementary cycles, expected {2 * q.quotient.order}"
        )
    return cycles


@dataclass(frozen=True, order=True)
class CommutativitySquare:
    """The two 2-paths x -> x+e_i -> x+e_i+e_j and x -> x+e_j -> x+e_i+e_j."""

    start: tuple[int, int]
    types: tuple[int, int]
    first_path: tuple[Arrow, Arrow]
    second_path: tuple[Arrow, Arrow]

    @property
    def paths(self) -> tuple[tuple[Arrow, Arrow], tuple[Arrow, Arrow]]:
        return (self.first_path, self.second_path)


def commutativity_squares(q: TypedQuiver) -> tuple[CommutativitySquare, ...]:
    """One square per vertex and unordered type pair; 3 det(B) of them."""
    squares = []
    for v in q.vertices:
        for i, j in ((1, 2), (1, 3), (2, 3)):
            ai = Arrow(v, i)
            aj = Arrow(v, j)
            squares.append(
                CommutativitySquare(
                    start=v,
                    types=(i, j),
                    first_path=(ai, Arrow(q.target(ai), j)),
                    second_path=(aj, Arrow(q.target(aj), i)),
                )
            )
    return tuple(squares)


@dataclass(frozen=True, eq=False)
class ActionElement:
    """One symmetry of the quiver: vertex map, type permutation, per-type scalars."""

    name: str
    vertex_map: dict[tuple[int, int], tuple[int, int]]
    type_map: tuple[int, int, int]
    type_scalars: tuple[int, int, int]

    def act_vertex(self, v: tuple[int, int]) -> tuple[int, int]:
        return self.vertex_map[v]

    def act_type(self, i: int) -> int:
        return self.type_map[i - 1]

    def act_arrow(self, a: Arrow) -> Arrow:
        return Arrow(self.vertex_map[a.source], self.type_map[a.type - 1])

    def scalar_exp(self, arrow_type: int) -> int:
        return self.type_scalars[arrow_type - 1]


def _compose(
    f: ActionElement, g: ActionElement, name: str, root_order: int
) -> ActionElement:
    """The element acting as f after g."""
    vmap = {v: f.vertex_map[g.vertex_map[v]] for v in g.vertex_map}
    tmap = tuple(f.type_map[g.type_map[i] - 1] for i in range(3))
    scal = tuple(
        (g.type_scalars[i] + f.type_scalars[g.type_map[i] - 1]) % root_order
        for i in range(3)
    )
    return ActionElement(name, vmap, tmap, scal)  # type: ignore[arg-type]


@dataclass(frozen=True, eq=False)
class QuiverAction:
    """The symmetry group (C3 for kind C, S3 for kind D) acting on a quiver."""

    quiver: TypedQuiver
    kind: str
    root_order: int
    scalars: tuple[int, int, int] | None
    elements: tuple[ActionElement, ...]

    @cached_property
    def _by_name(self) -> dict[str, ActionElement]:
        return {e.name: e for e in self.elements}

    @cached_property
    def _by_type_map(self) -> dict[tuple[int, int, int], str]:
        return {e.type_map: e.name for e in self.elements}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self.elements)

    @property
    def identity_name(self) -> str:
        return self.elements[0].name

    def element(self, name: str) -> ActionElement:
        return self._by_name[name]

    def mul(self, a: str, b: str) -> str:
        """Name of the element acting as a after b."""
        ea, eb = self._by_name[a], self._by_name[b]
        tmap = tuple(ea.type_map[eb.type_map[i] - 1] for i in range(3))
        return self._by_type_map[tmap]  # type: ignore[index]

    def inv(self, a: str) -> str:
        for b in self.names:
            if self.mul(a, b) == self.identity_name:
                return b
        raise InternalInvariantViolation(f"no inverse for action element {a}")

    def act_vertex(self, name: str, v: tuple[int, int]) -> tuple[int, int]:
        return self._by_name[name].vertex_map[v]

    def vertex_orbits(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Orbits as sorted tuples, listed by their least member."""
        seen: set[tuple[int, int]] = set()
        orbits = []
        for v in self.quiver.vertices:
            if v in seen:
                continue
            orbit = sorted({e.vertex_map[v] for e in self.elements})
            seen.update(orbit)
            orbits.append(tuple(orbit))
        return tuple(orbits)

    def stabilizer(self, v: tuple[int, int]) -> tuple[str, ...]:
        return tuple(e.name for e in self.elements if e.vertex_map[v] == v)

    def transversal_element(self, rep: tuple[int, int], v: tuple[int, int]) -> str:
        """First element in canonical order mapping rep to v."""
        for e in self.elements:
            if e.vertex_map[rep] == v:
                return e.name
        raise ValueError(f"{v} is not in the orbit of {rep}")

    def fixed_vertices(self, name: str) -> tuple[tuple[int, int], ...]:
        e = self._by_name[name]
        return tuple(v for v in self.quiver.vertices if e.vertex_map[v] == v)

    def is_arrow_set_invariant(self, arrows: Iterable[Arrow]) -> bool:
        s = set(arrows)
        return all(e.act_arrow(a) in s for e in self.elements for a in s)


def _assert_automorphism(q: TypedQuiver, e: ActionElement) -> None:
    if sorted(e.vertex_map.values()) != sorted(q.vertices):
        raise InternalInvariantViolation(f"{e.name} is not a vertex bijection")
    for a in q.arrows:
        if e.vertex_map[q.target(a)] != q.target(e.act_arrow(a)):
            raise InternalInvariantViolation(
                f"{e.name} does not commute with targets on {a}"
            )


def k_action(
    q: TypedQuiver,
    kind: str,
    scalars: tuple[int, int, int] | None = None,
    root_order: int | None = None,
) -> QuiverAction:
    """The C3 (kind C) or S3 (kind D) action on the quiver.

    For kind D, scalars = (p, q, s) are the exponents of the involution
    generator's matrix entries (alpha, beta, gamma with alpha*beta*gamma
    = -1); the induced arrow scalars by type are alpha*gamma^2,
    alpha*beta^2, -1.  Omitted scalars default to alpha = beta = gamma
    = -1 at root order 2.  Kind C carries no scalars.
    """
    if kind not in ("C", "D"):
        raise ValueError(f"kind must be 'C' or 'D', got {kind!r}")
    check_admissible(q.quotient.basis, kind)
    red = q.quotient.reduce

    if kind == "C":
        m = root_order if root_order is not None else 1
        if scalars is not None:
            raise ValueError("kind C admits no involution scalars")
    else:
        m = root_order if root_order is not None else 2
        if m % 2:
            raise ValueError(f"kind D needs an even root order, got {m}")
        if scalars is None:
            scalars = (m // 2, m // 2, m // 2)
        p, qq, s = (x % m for x in scalars)
        if (p + qq + s) % m != m // 2:
            raise ValueError(
                f"scalar exponents ({p}, {qq}, {s}) violate alpha*beta*gamma = -1 "
                f"modulo {m}"
            )
        scalars = (p, qq, s)

    identity = ActionElement(
        "1", {v: v for v in q.vertices}, (1, 2, 3), (0, 0, 0)
    )
    t = ActionElement(
        "t",
        {v: red((-v[1], v[0] - v[1])) for v in q.vertices},
        (2, 3, 1),
        (0, 0, 0),
    )
    t2 = _compose(t, t, "t^2", m)
    elements = [identity, t, t2]
    if kind == "D":
        p, qq, s = scalars  # type: ignore[misc]
        swap = ActionElement(
            "s",
            {v: red((v[1], v[0])) for v in q.vertices},
            (2, 1, 3),
            ((p + 2 * s) % m, (p + 2 * qq) % m, m // 2),
        )
        # Scalar-honest transpositions come from conjugate words t s t^2
        # and t^2 s t, not from the short words ts and st.
        ts = _compose(t2, _compose(swap, t, "_", m), "ts", m)
        st = _compose(t, _compose(swap, t2, "_", m), "st", m)
        elements = [identity, t, swap, t2, ts, st]

    if _compose(t2, t, "_", m).type_map != (1, 2, 3):
        raise InternalInvariantViolation("t^3 != 1 on types")
    for e in elements:
        _assert_automorphism(q, e)
        if sorted(e.type_map) != [1, 2, 3]:
            raise InternalInvariantViolation(f"{e.name} does not permute types")
        # Involutions must square to the identity with scalars included;
        # this pins the conjugate-word convention.
        sq = _compose(e, e, "_", m)
        if e.type_map in ((2, 1, 3), (3, 2, 1), (1, 3, 2)):
            if sq.type_map != (1, 2, 3) or any(sq.type_scalars) or any(
                sq.vertex_map[v] != v for v in q.vertices
            ):
                raise InternalInvariantViolation(
                    f"involution {e.name} does not square to the identity"
                )
    action = QuiverAction(
        quiver=q, kind=kind, root_order=m, scalars=scalars, elements=tuple(elements)
    )
    # Group relations on the permutation parts.
    size = {"C": 3, "D": 6}[kind]
    if len({e.type_map for e in elements}) != size:
        raise InternalInvariantViolation("action elements are not distinct")
    for a in action.names:
        for b in action.names:
            action.mul(a, b)
    return action
