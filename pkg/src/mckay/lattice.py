"""Finite-index sublattices of Z^2 and their symmetry constraints.

A sublattice is stored by its column-style Hermite normal form

    B = [[a, b],
         [0, c]],   a > 0, c > 0, 0 <= b < a,

whose columns (a, 0) and (b, c) generate it.  Coset representatives of
Z^2 / B are the pairs (x1, x2) with 0 <= x1 < a, 0 <= x2 < c.

The two coordinate symmetries that matter downstream are the order-3
rotation (x1, x2) -> (-x2, x1 - x2) and the swap (x1, x2) -> (x2, x1).
A basis is admissible for kind "C" when the rotation maps the lattice
into itself, and for kind "D" when the swap does too.  Admissibility is
decided by an explicit divisibility criterion and cross-checked against
direct integrality of B^-1 T B; disagreement is a bug, not bad input.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import InternalInvariantViolation, NotAdmissible, SingularMatrix

__all__ = [
    "LatticeBasis",
    "AbelianQuotient",
    "AdmissibilityReport",
    "hermite_normal_form",
    "ROTATION_MATRIX",
    "SWAP_MATRIX",
    "conjugate_is_integral",
    "divisibility_admissible",
    "admissibility",
    "check_admissible",
    "is_admissible",
    "admissible_bases",
]

# Induced action on exponent vectors of the cyclic coordinate rotation
# and of the coordinate swap, as 2x2 integer row tuples.
ROTATION_MATRIX: tuple[tuple[int, int], tuple[int, int]] = ((0, -1), (1, -1))
SWAP_MATRIX: tuple[tuple[int, int], tuple[int, int]] = ((0, 1), (1, 0))


@dataclass(frozen=True, order=True)
class LatticeBasis:
    """Hermite-normal generator matrix [[a, b], [0, c]] of a rank-2 sublattice."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.c <= 0:
            raise SingularMatrix(f"degenerate basis a={self.a}, c={self.c}")
        if not 0 <= self.b < self.a:
            raise ValueError(f"off-diagonal {self.b} not reduced modulo {self.a}")

    @property
    def det(self) -> int:
        return self.a * self.c

    @property
    def columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, 0), (self.b, self.c))

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (0, self.c))

    @staticmethod
    def from_columns(columns: Iterable[Sequence[int]]) -> LatticeBasis:
        return hermite_normal_form(columns)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> LatticeBasis:
        """Normalize an arbitrary integer generator matrix given row by row."""
        cols = [(rows[0][j], rows[1][j]) for j in range(len(rows[0]))]
        return hermite_normal_form(cols)

    def reduce(self, x: Sequence[int]) -> tuple[int, int]:
        """Canonical coset representative of x in Z^2 / B."""
        x1, x2 = x
        r2 = x2 % self.c
        q = (x2 - r2) // self.c
        r1 = (x1 - q * self.b) % self.a
        return (r1, r2)

    def contains(self, x: Sequence[int]) -> bool:
        return self.reduce(x) == (0, 0)

    def cosets(self) -> tuple[tuple[int, int], ...]:
        """All coset representatives in lexicographic order."""
        return tuple((i, j) for i in range(self.a) for j in range(self.c))

    def smith_invariants(self) -> tuple[int, int]:
        """Invariant factors (d1, d2), d1 | d2, of Z^2 / B."""
        d1 = gcd(gcd(self.a, self.b), self.c)
        return (d1, self.det // d1)


@dataclass(frozen=True)
class AbelianQuotient:
    """The finite group Z^2 / B with canonical coset representatives."""

    basis: LatticeBasis

    @property
    def order(self) -> int:
        return self.basis.det

    @property
    def invariant_factors(self) -> tuple[int, int]:
        return self.basis.smith_invariants()

    @property
    def cosets(self) -> tuple[tuple[int, int], ...]:
        return self.basis.cosets()

    def reduce(self, x: Sequence[int]) -> tuple[int, int]:
        return self.basis.reduce(x)

    def index_of(self, x: Sequence[int]) -> int:
        """Dense id of the coset of x in the lexicographic representative order."""
        r1, r2 = self.basis.reduce(x)
        return r1 * self.basis.c + r2


def hermite_normal_form(columns: Iterable[Sequence[int]]) -> LatticeBasis:
    """Hermite normal form of the lattice generated by the given columns."""
    gens = [(int(v[0]), int(v[1])) for v in columns]
    if not gens:
        raise SingularMatrix("no generators")
    # c = gcd of the second coordinates, realized by one combined vector w.
    w = (0, 0)
    for v in gens:
        w = _merge(w, v)
    if w[1] == 0:
        raise SingularMatrix("generators span a rank < 2 sublattice")
    c = w[1]
    # Clear second coordinates; the leftovers generate the (a, 0) line.
    a = 0
    for v in gens:
        q = v[0] - (v[1] // c) * w[0]
        a = gcd(a, q)
    if a == 0:
        raise SingularMatrix("generators span a rank < 2 sublattice")
    return LatticeBasis(a, w[0] % a, c)


def _merge(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
    """Combination of u and v whose second coordinate is gcd(u2, v2) >= 0."""
    u1, u2 = u
    v1, v2 = v
    while v2:
        q = u2 // v2
        u1, u2, v1, v2 = v1, v2, u1 - q * v1, u2 - q * v2
    if u2 < 0:
        u1, u2 = -u1, -u2
    return (u1, u2)


def conjugate_is_integral(
    basis: LatticeBasis, matrix: tuple[tuple[int, int], tuple[int, int]]
) -> bool:
    """Whether B^-1 . matrix . B has integer entries (i.e. matrix preserves the lattice)."""
    (a, b), (_, c) = basis.rows
    det = basis.det
    # adj(B) . matrix . B, all integral; divisibility by det is the test.
    (t11, t12), (t21, t22) = matrix
    # adj(B) = [[c, -b], [0, a]]
    m11 = c * t11 - b * t21
    m12 = c * t12 - b * t22
    m21 = a * t21
    m22 = a * t22
    # multiply by B on the right
    e11 = m11 * a
    e12 = m11 * b + m12 * c
    e21 = m21 * a
    e22 = m21 * b + m22 * c
    return all(e % det == 0 for e in (e11, e12, e21, e22))


def divisibility_admissible(basis: LatticeBasis, kind: str) -> bool:
    """Closed-form admissibility test in terms of a, b, c."""
    _check_kind(kind)
    if kind == "A":
        return True
    a, b, c = basis.a, basis.b, basis.c
    if a % c or b % c:
        return False
    k1, k2 = a // c, b // c
    if (k2 * k2 - k2 + 1) % k1:
        return False
    if kind == "D":
        return (k2 - 2) % k1 == 0 and 3 % k1 == 0
    return True


def _check_kind(kind: str) -> None:
    if kind not in ("A", "C", "D"):
        raise ValueError(f"unknown kind {kind!r}; expected 'A', 'C' or 'D'")


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of both admissibility routes for one basis and kind."""

    basis: LatticeBasis
    kind: str
    k1: int | None
    k2: int | None
    closed_form: bool
    direct: bool

    @property
    def admissible(self) -> bool:
        return self.closed_form


def admissibility(basis: LatticeBasis, kind: str) -> AdmissibilityReport:
    """Run the closed-form and the direct stabilization checks; fail loudly on disagreement."""
    _check_kind(kind)
    a, b, c = basis.a, basis.b, basis.c
    k1 = a // c if a % c == 0 else None
    k2 = b // c if b % c == 0 else None
    by_division = divisibility_admissible(basis, kind)
    direct = True
    if kind in ("C", "D"):
        direct = conjugate_is_integral(basis, ROTATION_MATRIX)
    if kind == "D" and direct:
        direct = conjugate_is_integral(basis, SWAP_MATRIX)
    if by_division != direct:
        raise InternalInvariantViolation(
            f"admissibility routes disagree on {basis} kind {kind}: "
            f"divisibility={by_division}, conjugation={direct}"
        )
    return AdmissibilityReport(basis, kind, k1, k2, by_division, direct)


def is_admissible(basis: LatticeBasis, kind: str) -> bool:
    """Both admissibility routes, cross-checked; True iff the basis is admissible."""
    return admissibility(basis, kind).admissible


def check_admissible(basis: LatticeBasis, kind: str) -> None:
    """Raise NotAdmissible unless the basis supports the requested kind.

    Index-1 sublattices are rejected as well: the quotient is trivial,
    so there is no diagonal part to build a group from.
    """
    if basis.det < 2:
        raise NotAdmissible(
            f"index {basis.det} sublattice has trivial quotient", failed="index"
        )
    report = admissibility(basis, kind)
    if report.admissible:
        return
    a, b, c = basis.a, basis.b, basis.c
    if report.k1 is None or report.k2 is None:
        raise NotAdmissible(
            f"basis {basis.rows} does not factor as [[k1*c, k2*c], [0, c]]: "
            f"c={c} does not divide both {a} and {b}",
            failed="factorization",
        )
    k1, k2 = report.k1, report.k2
    if (k2 * k2 - k2 + 1) % k1:
        raise NotAdmissible(
            f"rotation condition fails: k1={k1} does not divide k2^2-k2+1={k2 * k2 - k2 + 1}",
            failed="rotation",
        )
    raise NotAdmissible(
        f"swap condition fails: k1={k1} does not divide gcd(k2-2, 3) with k2={k2}",
        failed="swap",
    )


def admissible_bases(max_det: int, kind: str) -> list[LatticeBasis]:
    """All admissible bases with 2 <= det <= max_det, sorted by (det, a, b, c)."""
    _check_kind(kind)
    found: list[tuple[int, int, int, int]] = []
    for a in range(1, max_det + 1):
        for c in range(1, max_det // a + 1):
            if a * c < 2:
                continue
            for b in range(a):
                basis = LatticeBasis(a, b, c)
                if is_admissible(basis, kind):
                    found.append((a * c, a, b, c))
    found.sort()
    return [LatticeBasis(a, b, c) for _, a, b, c in found]
