"""Exact 3x3 monomial matrices over roots of unity and finite group closure.

A monomial matrix is stored as a permutation together with a triple of
scalar exponents: column j carries the scalar zeta^exps[j] into row
perm[j], zeta a fixed primitive root of unity of order root_order.
Scalar exponents are plain integers reduced modulo root_order, so all
group arithmetic is exact integer arithmetic.

Special-linear membership is the exact exponent identity
sign(perm) * zeta^(e1+e2+e3) = 1: even permutations need the exponent
sum to vanish, odd permutations need it to equal root_order/2 (which
forces an even root order).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import DecompositionFailure, ExplosionGuard, GeneratorNotSpecialLinear

__all__ = [
    "MonomialMatrix",
    "FiniteMatrixGroup",
    "ComplementReport",
    "closure",
    "diagonal_subgroup",
    "conjugacy_classes",
    "semidirect_check",
    "diagonal_generators_from_basis",
    "group_from_basis",
    "default_root_order",
    "canonical_scalars",
    "DEFAULT_CLOSURE_CAP",
    "closure_cap",
]

DEFAULT_CLOSURE_CAP = 10000

_EVEN_PERMS = frozenset({(0, 1, 2), (1, 2, 0), (2, 0, 1)})
_ALL_PERMS = _EVEN_PERMS | frozenset({(0, 2, 1), (2, 1, 0), (1, 0, 2)})


def closure_cap() -> int:
    """Element bound for closure enumeration; MCKAY_MAX_CLOSURE overrides the default."""
    raw = os.environ.get("MCKAY_MAX_CLOSURE")
    if raw is None:
        return DEFAULT_CLOSURE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"MCKAY_MAX_CLOSURE must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"MCKAY_MAX_CLOSURE must be positive, got {cap}")
    return cap


@dataclass(frozen=True, order=True)
class MonomialMatrix:
    """3x3 monomial matrix: column j maps to row perm[j] with scalar zeta^exps[j]."""

    root_order: int
    perm: tuple[int, int, int]
    exps: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.root_order < 1:
            raise ValueError(f"root order must be positive, got {self.root_order}")
        if self.perm not in _ALL_PERMS:
            raise ValueError(f"{self.perm} is not a permutation of (0, 1, 2)")
        if any(not 0 <= e < self.root_order for e in self.exps):
            raise ValueError(
                f"exponents {self.exps} not reduced modulo {self.root_order}"
            )

    @staticmethod
    def identity(root_order: int) -> MonomialMatrix:
        return MonomialMatrix(root_order, (0, 1, 2), (0, 0, 0))

    @staticmethod
    def diagonal(root_order: int, exps: Sequence[int]) -> MonomialMatrix:
        e = tuple(x % root_order for x in exps)
        return MonomialMatrix(root_order, (0, 1, 2), e)  # type: ignore[arg-type]

    @staticmethod
    def rotation(root_order: int) -> MonomialMatrix:
        """The scalar-free 3-cycle: e1 -> e2 -> e3 -> e1 (rows (0,0,1),(1,0,0),(0,1,0))."""
        return MonomialMatrix(root_order, (1, 2, 0), (0, 0, 0))

    @staticmethod
    def transposition(root_order: int, p: int, q: int, s: int) -> MonomialMatrix:
        """The monomial involution with entries alpha = zeta^p at (1,2) [1-based],
        beta = zeta^q at (2,1) and gamma = zeta^s at (3,3).

        Requires alpha*beta*gamma = -1 exactly, i.e. an even root order with
        p + q + s congruent to root_order/2; this is the determinant condition.
        """
        if root_order % 2:
            raise GeneratorNotSpecialLinear(
                f"root order {root_order} is odd, so -1 is not a power of zeta"
            )
        if (p + q + s) % root_order != root_order // 2:
            raise GeneratorNotSpecialLinear(
                f"scalar exponents ({p}, {q}, {s}) violate alpha*beta*gamma = -1 "
                f"modulo {root_order}"
            )
        return MonomialMatrix(
            root_order, (1, 0, 2), (q % root_order, p % root_order, s % root_order)
        )

    @property
    def is_diagonal(self) -> bool:
        return self.perm == (0, 1, 2)

    @property
    def is_identity(self) -> bool:
        return self.perm == (0, 1, 2) and self.exps == (0, 0, 0)

    @property
    def sign(self) -> int:
        return 1 if self.perm in _EVEN_PERMS else -1

    @property
    def is_special(self) -> bool:
        """Exact determinant-1 test."""
        total = sum(self.exps) % self.root_order
        if self.sign == 1:
            return total == 0
        return self.root_order % 2 == 0 and total == self.root_order // 2

    def __mul__(self, other: MonomialMatrix) -> MonomialMatrix:
        if self.root_order != other.root_order:
            raise ValueError(
                f"mixed root orders {self.root_order} and {other.root_order}"
            )
        m = self.root_order
        perm = tuple(self.perm[other.perm[j]] for j in range(3))
        exps = tuple(
            (self.exps[other.perm[j]] + other.exps[j]) % m for j in range(3)
        )
        return MonomialMatrix(m, perm, exps)  # type: ignore[arg-type]

    def inverse(self) -> MonomialMatrix:
        m = self.root_order
        perm = [0, 0, 0]
        exps = [0, 0, 0]
        for j in range(3):
            perm[self.perm[j]] = j
            exps[self.perm[j]] = -self.exps[j] % m
        return MonomialMatrix(m, tuple(perm), tuple(exps))  # type: ignore[arg-type]

    def __pow__(self, n: int) -> MonomialMatrix:
        base = self if n >= 0 else self.inverse()
        out = MonomialMatrix.identity(self.root_order)
        for _ in range(abs(n)):
            out = out * base
        return out

    def with_root_order(self, new_order: int) -> MonomialMatrix:
        """Re-express with a root order that is a multiple of the current one."""
        if new_order % self.root_order:
            raise ValueError(
                f"{new_order} is not a multiple of root order {self.root_order}"
            )
        k = new_order // self.root_order
        return MonomialMatrix(
            new_order, self.perm, tuple(e * k for e in self.exps)  # type: ignore[arg-type]
        )

    def entries(self) -> tuple[tuple[int, int, int], ...]:
        """Nonzero entries as (row, column, exponent), sorted by row."""
        cells = [(self.perm[j], j, self.exps[j]) for j in range(3)]
        return tuple(sorted(cells))

    def key(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        return (self.perm, self.exps)


def product(factors: Iterable[MonomialMatrix]) -> MonomialMatrix:
    out: MonomialMatrix | None = None
    for f in factors:
        out = f if out is None else out * f
    if out is None:
        raise ValueError("empty product")
    return out


@dataclass(frozen=True)
class FiniteMatrixGroup:
    """A multiplicatively closed finite set of monomial matrices."""

    root_order: int
    generators: tuple[MonomialMatrix, ...]
    elements: tuple[MonomialMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: MonomialMatrix) -> bool:
        return g in set(self.elements)

    def identity(self) -> MonomialMatrix:
        return MonomialMatrix.identity(self.root_order)


def _lift_common(generators: Sequence[MonomialMatrix]) -> list[MonomialMatrix]:
    m = lcm(*(g.root_order for g in generators))
    return [g.with_root_order(m) for g in generators]


def closure(
    generators: Sequence[MonomialMatrix], max_elements: int | None = None
) -> FiniteMatrixGroup:
    """Breadth-first multiplicative closure of the generators.

    Every generator must be special linear; the closure is aborted with
    ExplosionGuard once it exceeds the element cap (argument, else the
    MCKAY_MAX_CLOSURE environment variable, else 10000).
    """
    if not generators:
        raise ValueError("need at least one generator")
    gens = _lift_common(generators)
    for g in gens:
        if not g.is_special:
            raise GeneratorNotSpecialLinear(
                f"generator with entries {g.entries()} has determinant != 1 "
                f"at root order {g.root_order}"
            )
    cap = max_elements if max_elements is not None else closure_cap()
    m = gens[0].root_order
    identity = MonomialMatrix.identity(m)
    seen: dict[tuple, MonomialMatrix] = {identity.key(): identity}
    frontier = [identity]
    while frontier:
        nxt: list[MonomialMatrix] = []
        for g in frontier:
            for h in gens:
                w = g * h
                k = w.key()
                if k not in seen:
                    if len(seen) >= cap:
                        raise ExplosionGuard(
                            f"closure exceeded {cap} elements; raise the cap "
                            f"if the group really is this large"
                        )
                    seen[k] = w
                    nxt.append(w)
        frontier = nxt
    elements = tuple(sorted(seen.values()))
    return FiniteMatrixGroup(m, tuple(gens), elements)


def diagonal_subgroup(g: FiniteMatrixGroup) -> FiniteMatrixGroup:
    """The subgroup of diagonal elements; asserted abelian and normal in g."""
    diag = tuple(x for x in g.elements if x.is_diagonal)
    # Diagonal monomial matrices commute entrywise; normality still needs g.
    members = set(diag)
    for h in g.generators:
        hinv = h.inverse()
        for d in diag:
            if h * d * hinv not in members:
                raise DecompositionFailure(
                    "diagonal part is not normal; the closure is inconsistent"
                )
    return FiniteMatrixGroup(g.root_order, diag, diag)


def conjugacy_classes(g: FiniteMatrixGroup) -> list[tuple[MonomialMatrix, ...]]:
    """Partition of the elements into conjugacy classes, deterministically ordered."""
    inv = [(h, h.inverse()) for h in g.generators]
    remaining = dict((x.key(), x) for x in g.elements)
    classes: list[tuple[MonomialMatrix, ...]] = []
    for x in g.elements:
        if x.key() not in remaining:
            continue
        orbit = {x.key(): x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for h, hinv in inv:
                z = h * y * hinv
                if z.key() not in orbit:
                    orbit[z.key()] = z
                    frontier.append(z)
        for k in orbit:
            remaining.pop(k, None)
        classes.append(tuple(sorted(orbit.values())))
    return classes


@dataclass(frozen=True)
class ComplementReport:
    """Witnesses for the semidirect splitting G = N x| K."""

    kind: str
    group_order: int
    diagonal_order: int
    complement: FiniteMatrixGroup
    i1: MonomialMatrix | None
    i2: MonomialMatrix | None
    t_factorization: tuple[MonomialMatrix, MonomialMatrix]
    r_factorization: tuple[MonomialMatrix, MonomialMatrix] | None


def _find_generator(g: FiniteMatrixGroup, even: bool) -> MonomialMatrix:
    for x in g.generators:
        if even and x.perm == (1, 2, 0):
            return x
        if not even and x.sign == -1:
            return x
    raise DecompositionFailure(
        "generators contain no "
        + ("3-cycle permutation part" if even else "odd permutation part")
    )


def semidirect_check(g: FiniteMatrixGroup, kind: str) -> ComplementReport:
    """Verify G = N x| K and return the complement with factorization witnesses.

    For kind C the complement is the cyclic group on the 3-cycle generator t.
    For kind D it is generated by the two involutions

        i1 = t r^2 t^-1 r        i2 = t^2 r^2 t^-1 r t^-1

    which must satisfy i1^2 = i2^2 = (i1 i2)^3 = 1; the witnesses express
    t = (t i2^-1 i1^-1) (i1 i2) and r = (t r^-2 t^-1) i1 with diagonal left
    factors, exhibiting the original generators inside N * K.
    """
    if kind not in ("C", "D"):
        raise ValueError(f"kind must be 'C' or 'D', got {kind!r}")
    n = diagonal_subgroup(g)
    t = _find_generator(g, even=True)
    if kind == "C":
        complement = closure([t], max_elements=4)
        if complement.order != 3:
            raise DecompositionFailure(f"<t> has order {complement.order}, expected 3")
        if any(x.is_diagonal and not x.is_identity for x in complement.elements):
            raise DecompositionFailure("<t> meets the diagonal subgroup nontrivially")
        if n.order * 3 != g.order:
            raise DecompositionFailure(
                f"|G| = {g.order} is not 3 * |N| = {3 * n.order}"
            )
        ident = g.identity()
        return ComplementReport(
            kind="C",
            group_order=g.order,
            diagonal_order=n.order,
            complement=complement,
            i1=None,
            i2=None,
            t_factorization=(ident, t),
            r_factorization=None,
        )

    r = _find_generator(g, even=False)
    tinv = t.inverse()
    i1 = product([t, r, r, tinv, r])
    i2 = product([t, t, r, r, tinv, r, tinv])
    pair = i1 * i2
    if not (i1 * i1).is_identity or not (i2 * i2).is_identity:
        raise DecompositionFailure("i1 or i2 is not an involution; bad scalar input")
    if not (pair ** 3).is_identity:
        raise DecompositionFailure("(i1 i2)^3 != 1; bad scalar input")
    complement = closure([i1, i2], max_elements=7)
    if complement.order != 6:
        raise DecompositionFailure(
            f"<i1, i2> has order {complement.order}, expected 6"
        )
    if any(x.is_diagonal and not x.is_identity for x in complement.elements):
        raise DecompositionFailure("<i1, i2> meets the diagonal subgroup nontrivially")
    if n.order * 6 != g.order:
        raise DecompositionFailure(f"|G| = {g.order} is not 6 * |N| = {6 * n.order}")
    # t = d_t * (i1 i2) and r = d_r * i1 with diagonal d_t, d_r.
    d_t = product([t, i2.inverse(), i1.inverse()])
    d_r = product([t, r.inverse(), r.inverse(), tinv])
    if not d_t.is_diagonal or not d_r.is_diagonal:
        raise DecompositionFailure("factorization witnesses are not diagonal")
    if d_t * pair != t or d_r * i1 != r:
        raise DecompositionFailure("factorization witnesses do not recompose")
    return ComplementReport(
        kind="D",
        group_order=g.order,
        diagonal_order=n.order,
        complement=complement,
        i1=i1,
        i2=i2,
        t_factorization=(d_t, pair),
        r_factorization=(d_r, i1),
    )


def canonical_scalars(root_order: int) -> tuple[int, int, int]:
    """The default involution scalars alpha = beta = gamma = -1."""
    if root_order % 2:
        raise GeneratorNotSpecialLinear(
            f"root order {root_order} is odd, so -1 is not a power of zeta"
        )
    h = root_order // 2
    return (h, h, h)


def default_root_order(d2: int, kind: str) -> int:
    """Smallest root order carrying the diagonal group (and -1 for kind D)."""
    return lcm(d2, 2) if kind == "D" else d2


def diagonal_generators_from_basis(basis, root_order: int) -> list[MonomialMatrix]:
    """Diagonal generators of the group dual to Z^2/B at the given root order.

    The exponent vectors are root_order * B^-T applied to the standard
    basis; the third exponent is forced by the determinant condition.
    """
    a, b, c = basis.a, basis.b, basis.c
    det = basis.det
    raw = [(root_order * c, -root_order * b), (0, root_order * a)]
    gens: list[MonomialMatrix] = []
    for u, v in raw:
        if u % det or v % det:
            raise ValueError(
                f"root order {root_order} is not a multiple of the quotient "
                f"exponent; generators are not integral"
            )
        e1, e2 = u // det, v // det
        gens.append(MonomialMatrix.diagonal(root_order, (e1, e2, -e1 - e2)))
    return gens


def group_from_basis(
    basis,
    kind: str,
    root_order: int | None = None,
    scalars: tuple[int, int, int] | None = None,
    max_elements: int | None = None,
) -> FiniteMatrixGroup:
    """Build the monomial group of the given kind over the quotient Z^2/B.

    kind "A" gives the diagonal group alone, "C" adjoins the 3-cycle t,
    and "D" also adjoins the monomial involution r with the given scalar
    exponents (alpha = beta = gamma = -1 when omitted).  The closure is
    verified to split off the expected diagonal subgroup.
    """
    if kind not in ("A", "C", "D"):
        raise ValueError(f"unknown kind {kind!r}; expected 'A', 'C' or 'D'")
    _, d2 = basis.smith_invariants()
    m = root_order if root_order is not None else default_root_order(d2, kind)
    if m % d2:
        raise ValueError(
            f"root order {m} cannot represent a quotient of exponent {d2}"
        )
    gens = diagonal_generators_from_basis(basis, m)
    if kind in ("C", "D"):
        gens.append(MonomialMatrix.rotation(m))
    if kind == "D":
        p, q, s = scalars if scalars is not None else canonical_scalars(m)
        gens.append(MonomialMatrix.transposition(m, p, q, s))
    g = closure(gens, max_elements=max_elements)
    expected = {"A": 1, "C": 3, "D": 6}[kind] * basis.det
    diag = sum(1 for x in g.elements if x.is_diagonal)
    if diag != basis.det:
        raise DecompositionFailure(
            f"diagonal part has order {diag}, expected {basis.det}; "
            f"the involution scalars enlarge the diagonal subgroup"
        )
    if g.order != expected:
        raise DecompositionFailure(
            f"|G| = {g.order}, expected {expected} for kind {kind}"
        )
    return g
