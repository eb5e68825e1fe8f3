"""Shared fixtures and independent numeric oracles.

The oracles deliberately avoid the package's exact-arithmetic path:
matrices become dense complex arrays and group bookkeeping hashes
rounded entries, so agreement is meaningful.
"""
from __future__ import annotations

import numpy as np
import pytest

from mckay.lattice import LatticeBasis
from mckay.monomial_group import MonomialMatrix


def to_complex(g: MonomialMatrix) -> np.ndarray:
    zeta = np.exp(2j * np.pi / g.root_order)
    out = np.zeros((3, 3), dtype=complex)
    for j in range(3):
        out[g.perm[j], j] = zeta ** g.exps[j]
    return out


def _mat_key(m: np.ndarray) -> tuple:
    return tuple(np.round(m, 9).reshape(-1).view(float))


def np_closure(mats: list[np.ndarray], cap: int = 100000) -> list[np.ndarray]:
    """Multiplicative closure over rounded complex matrices."""
    ident = np.eye(3, dtype=complex)
    seen = {_mat_key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in mats:
                w = g @ h
                k = _mat_key(w)
                if k not in seen:
                    assert len(seen) < cap, "oracle closure runaway"
                    seen[k] = w
                    nxt.append(w)
        frontier = nxt
    return list(seen.values())


def np_class_count(elements: list[np.ndarray]) -> int:
    """Conjugacy class count by brute-force orbit partition."""
    inverses = [np.linalg.inv(g) for g in elements]
    keys = [_mat_key(g) for g in elements]
    index = {k: i for i, k in enumerate(keys)}
    unassigned = set(range(len(elements)))
    count = 0
    while unassigned:
        i = min(unassigned)
        orbit = {
            index[_mat_key(g @ elements[i] @ gi)]
            for g, gi in zip(elements, inverses)
        }
        unassigned -= orbit
        count += 1
    return count


@pytest.fixture
def basis_2i() -> LatticeBasis:
    return LatticeBasis(2, 0, 2)


@pytest.fixture
def basis_3i() -> LatticeBasis:
    return LatticeBasis(3, 0, 3)


@pytest.fixture
def basis_321() -> LatticeBasis:
    return LatticeBasis(3, 2, 1)
