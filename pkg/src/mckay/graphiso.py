"""Backtracking isomorphism search for small labeled multidigraphs.

Graphs are given by edge-label maps (i, j) -> hashable; a missing key
means no edge.  An isomorphism is a vertex bijection f with
labels_b[(f(i), f(j))] == labels_a[(i, j)] for all ordered pairs.
"""
from __future__ import annotations

from collections import Counter
from typing import Hashable, Mapping

__all__ = ["find_isomorphism"]

Label = Hashable
EdgeMap = Mapping[tuple[int, int], Label]


def _signature(v: int, n: int, labels: EdgeMap):
    loop = labels.get((v, v))
    outs = sorted(
        (repr(labels[(v, w)]) for w in range(n) if w != v and (v, w) in labels),
    )
    ins = sorted(
        (repr(labels[(w, v)]) for w in range(n) if w != v and (w, v) in labels),
    )
    return (repr(loop), tuple(outs), tuple(ins))


def find_isomorphism(
    n: int, labels_a: EdgeMap, labels_b: EdgeMap
) -> list[int] | None:
    """A label-preserving vertex bijection between two n-vertex graphs, or None."""
    if n == 0:
        return []
    if Counter(map(repr, labels_a.values())) != Counter(map(repr, labels_b.values())):
        return None
    sig_a = [_signature(v, n, labels_a) for v in range(n)]
    sig_b = [_signature(v, n, labels_b) for v in range(n)]
    candidates = [
        [u for u in range(n) if sig_b[u] == sig_a[v]] for v in range(n)
    ]
    if any(not c for c in candidates):
        return None

    # Order vertices connectivity-first so adjacency constraints bite early.
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for (i, j) in labels_a:
        if i != j:
            neighbors[i].add(j)
            neighbors[j].add(i)
    order: list[int] = []
    placed = [False] * n
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed[v]:
                continue
            linked = sum(1 for w in neighbors[v] if placed[w])
            key = (-linked, len(candidates[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)  # type: ignore[arg-type]
        placed[best] = True  # type: ignore[index]

    mapping = [-1] * n
    used = [False] * n

    def check(v: int, u: int) -> bool:
        if labels_b.get((u, u)) != labels_a.get((v, v)):
            return False
        for w in range(n):
            fw = mapping[w]
            if fw < 0 or w == v:
                continue
            if labels_b.get((u, fw)) != labels_a.get((v, w)):
                return False
            if labels_b.get((fw, u)) != labels_a.get((w, v)):
                return False
        return True

    def dfs(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for u in candidates[v]:
            if used[u]:
                continue
            if check(v, u):
                mapping[v] = u
                used[u] = True
                if dfs(k + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return mapping if dfs(0) else None
