"""Degree-1 arrow subsets (cuts) of the McKay quiver: criterion, construction,
validation, and exhaustive search.

A cut selects the arrows of degree 1.  Validity is the three weak-cut
axioms: every commutativity square is balanced (the two parallel 2-paths
carry equal total degree), every elementary cycle carries total degree
exactly 1, and the arrows of degree 0 form an acyclic subquiver.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    CriterionFailed,
    InternalCriterionFailure,
    NotDivisible,
    TooLarge,
)
from .lattice import AbelianQuotient, LatticeBasis, check_admissible
from .mckay_quiver import (
    Arrow,
    TypedQuiver,
    build_quiver,
    commutativity_squares,
    elementary_cycles,
    k_action,
)

__all__ = [
    "Cut",
    "ValidationReport",
    "cut_type",
    "cut_exists",
    "build_cut",
    "validate_cut",
    "invariant_cut",
    "enumerate_cuts",
    "realized_types",
    "DEFAULT_ENUMERATION_LIMIT",
]

DEFAULT_ENUMERATION_LIMIT = 27


@dataclass(frozen=True)
class Cut:
    """The set of degree-1 arrows, kept in canonical (source, type) order."""

    arrows: tuple[Arrow, ...]

    @staticmethod
    def of(arrows: Iterable[Arrow]) -> Cut:
        return Cut(tuple(sorted(set(arrows))))

    @cached_property
    def arrow_set(self) -> frozenset[Arrow]:
        return frozenset(self.arrows)

    def degree(self, arrow: Arrow) -> int:
        return 1 if arrow in self.arrow_set else 0

    def __len__(self) -> int:
        return len(self.arrows)


def cut_type(cut: Cut) -> tuple[int, int, int]:
    """Per-type count of the cut arrows."""
    counts = [0, 0, 0]
    for a in cut.arrows:
        counts[a.type - 1] += 1
    return tuple(counts)  # type: ignore[return-value]


def cut_exists(basis: LatticeBasis, gamma: Sequence[int]) -> bool:
    """Closed-form criterion: positive components summing to n with
    (gamma1, gamma2) . B vanishing modulo n."""
    g1, g2, g3 = gamma
    n = basis.det
    if g1 <= 0 or g2 <= 0 or g3 <= 0 or g1 + g2 + g3 != n:
        return False
    return (g1 * basis.a) % n == 0 and (g1 * basis.b + g2 * basis.c) % n == 0


def _value_function(basis: LatticeBasis, gamma: Sequence[int]) -> dict[tuple[int, int], int]:
    g1, g2, _ = gamma
    n = basis.det
    g = gcd(gcd(gamma[0], gamma[1]), gamma[2])
    return {
        (x1, x2): ((g1 * x1 + g2 * x2) % n) // g
        for (x1, x2) in basis.cosets()
    }


def build_cut(basis: LatticeBasis, gamma: Sequence[int]) -> Cut:
    """Construct the cut of type gamma: arrows whose source value exceeds the
    target value under v(x) = ((gamma1 x1 + gamma2 x2) mod n) / gcd(gamma).

    The criterion makes v well defined on cosets; smallest nonnegative
    representatives give the comparison.
    """
    if not cut_exists(basis, gamma):
        raise CriterionFailed(
            f"no cut of type {tuple(gamma)} exists on det {basis.det}"
        )
    q = build_quiver(AbelianQuotient(basis))
    v = _value_function(basis, gamma)
    picked = [a for a in q.arrows if v[a.source] > v[q.target(a)]]
    cut = Cut.of(picked)
    if cut_type(cut) != tuple(gamma):
        raise InternalCriterionFailure(
            f"constructed cut has type {cut_type(cut)}, wanted {tuple(gamma)}"
        )
    return cut


@dataclass(frozen=True)
class ValidationReport:
    """Pass/fail per weak-cut axiom, with a witness for each failure."""

    squares_balanced: bool
    cycles_unit_degree: bool
    degree_zero_acyclic: bool
    witnesses: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return (
            self.squares_balanced
            and self.cycles_unit_degree
            and self.degree_zero_acyclic
        )


def _has_cycle(vertices, edges) -> tuple[bool, list]:
    """Iterative 3-color cycle detection; returns a witness cycle if found."""
    out: dict = {v: [] for v in vertices}
    for s, t in edges:
        out[s].append(t)
    color = {v: 0 for v in vertices}
    parent: dict = {}
    for root in vertices:
        if color[root]:
            continue
        stack = [(root, iter(out[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, iter(out[w])))
                    advanced = True
                    break
                if color[w] == 1:
                    cycle = [w, v]
                    x = v
                    while x != w:
                        x = parent[x]
                        cycle.append(x)
                    return True, cycle[::-1]
            if not advanced:
                color[v] = 2
                stack.pop()
    return False, []


def validate_cut(q: TypedQuiver, cut: Cut) -> ValidationReport:
    """Check the three weak-cut axioms, reporting witnesses for failures."""
    if not cut.arrow_set <= set(q.arrows):
        raise ValueError("cut contains arrows outside the quiver")
    witnesses: list[str] = []

    squares_ok = True
    for sq in commutativity_squares(q):
        d1 = sum(cut.degree(a) for a in sq.first_path)
        d2 = sum(cut.degree(a) for a in sq.second_path)
        if d1 != d2:
            squares_ok = False
            witnesses.append(
                f"square at {sq.start} types {sq.types}: path degrees {d1} != {d2}"
            )
            break

    cycles_ok = True
    for cyc in elementary_cycles(q):
        d = sum(cut.degree(a) for a in cyc.arrows)
        if d != 1:
            cycles_ok = False
            witnesses.append(
                f"elementary cycle at {cyc.start} order {cyc.type_order}: "
                f"degree {d} != 1"
            )
            break

    degree_zero = [
        (a.source, q.target(a)) for a in q.arrows if cut.degree(a) == 0
    ]
    cyclic, walk = _has_cycle(q.vertices, degree_zero)
    acyclic_ok = not cyclic
    if cyclic:
        witnesses.append(f"degree-0 cycle through {walk}")

    return ValidationReport(
        squares_balanced=squares_ok,
        cycles_unit_degree=cycles_ok,
        degree_zero_acyclic=acyclic_ok,
        witnesses=tuple(witnesses),
    )


def invariant_cut(basis: LatticeBasis, kind: str) -> Cut:
    """The symmetric cut of type (n/3, n/3, n/3), checked K-invariant.

    Exists exactly when 3 divides n = det(B); the preconditions make the
    criterion and the invariance provable, so their failure is an
    internal error, not an input error.
    """
    check_admissible(basis, kind)
    n = basis.det
    if n % 3:
        raise NotDivisible(f"3 does not divide det(B) = {n}")
    gamma = (n // 3, n // 3, n // 3)
    if not cut_exists(basis, gamma):
        raise InternalCriterionFailure(
            f"symmetric type {gamma} fails the criterion on an admissible basis"
        )
    cut = build_cut(basis, gamma)
    q = build_quiver(AbelianQuotient(basis))
    act = k_action(q, kind)
    if not act.is_arrow_set_invariant(cut.arrows):
        raise InternalCriterionFailure("symmetric cut is not K-invariant")
    report = validate_cut(q, cut)
    if not report.passed:
        raise InternalCriterionFailure(
            f"symmetric cut fails validation: {report.witnesses}"
        )
    return cut


def enumerate_cuts(q: TypedQuiver, limit: int = DEFAULT_ENUMERATION_LIMIT) -> tuple[Cut, ...]:
    """All valid cuts, by exhaustive backtracking over arrow degrees.

    Elementary cycles give exactly-one constraints that drive unit
    propagation; squares prune by degree intervals; leaves are checked
    for degree-0 acyclicity.  Cuts are emitted in lexicographic order of
    their sorted arrow-index lists.
    """
    arrows = q.arrows
    na = len(arrows)
    if na > limit:
        raise TooLarge(f"{na} arrows exceeds the enumeration guard {limit}")
    index = {a: i for i, a in enumerate(arrows)}
    cycles = [
        tuple(index[a] for a in cyc.arrows) for cyc in elementary_cycles(q)
    ]
    squares = [
        (
            tuple(index[a] for a in sq.first_path),
            tuple(index[a] for a in sq.second_path),
        )
        for sq in commutativity_squares(q)
    ]
    in_cycles: list[list[int]] = [[] for _ in range(na)]
    for ci, cyc in enumerate(cycles):
        for ai in cyc:
            in_cycles[ai].append(ci)
    in_squares: list[list[int]] = [[] for _ in range(na)]
    for si, (p1, p2) in enumerate(squares):
        for ai in (*p1, *p2):
            in_squares[ai].append(si)

    assign = [-1] * na
    trail: list[int] = []
    results: list[Cut] = []

    def set_value(ai: int, value: int) -> bool:
        if assign[ai] != -1:
            return assign[ai] == value
        assign[ai] = value
        trail.append(ai)
        queue = [ai]
        while queue:
            x = queue.pop()
            for ci in in_cycles[x]:
                ones = sum(1 for y in cycles[ci] if assign[y] == 1)
                undecided = [y for y in cycles[ci] if assign[y] == -1]
                if ones > 1 or (ones == 0 and not undecided):
                    return False
                if ones == 1:
                    for y in undecided:
                        assign[y] = 0
                        trail.append(y)
                        queue.append(y)
                elif ones == 0 and len(undecided) == 1:
                    y = undecided[0]
                    assign[y] = 1
                    trail.append(y)
                    queue.append(y)
            for si in in_squares[x]:
                p1, p2 = squares[si]
                lo1 = sum(1 for y in p1 if assign[y] == 1)
                hi1 = lo1 + sum(1 for y in p1 if assign[y] == -1)
                lo2 = sum(1 for y in p2 if assign[y] == 1)
                hi2 = lo2 + sum(1 for y in p2 if assign[y] == -1)
                if lo1 > hi2 or lo2 > hi1:
                    return False
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            assign[trail.pop()] = -1

    def leaf_ok() -> bool:
        for p1, p2 in squares:
            if sum(assign[y] for y in p1) != sum(assign[y] for y in p2):
                return False
        degree_zero = [
            (arrows[i].source, q.target(arrows[i]))
            for i in range(na)
            if assign[i] == 0
        ]
        cyclic, _ = _has_cycle(q.vertices, degree_zero)
        return not cyclic

    def dfs(pos: int) -> None:
        while pos < na and assign[pos] != -1:
            pos += 1
        if pos == na:
            if leaf_ok():
                results.append(
                    Cut.of(arrows[i] for i in range(na) if assign[i] == 1)
                )
            return
        for value in (1, 0):
            mark = len(trail)
            if set_value(pos, value):
                dfs(pos + 1)
            undo(mark)

    dfs(0)
    return tuple(results)


def realized_types(
    q: TypedQuiver, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> set[tuple[int, int, int]]:
    """Set of type vectors realized by some valid cut."""
    return {cut_type(c) for c in enumerate_cuts(q, limit)}
