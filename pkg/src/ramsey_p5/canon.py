"""Canonical forms for graphs on at most 16 vertices.

The key of a graph is the lexicographically smallest upper-triangle adjacency
bit string over all vertex orderings the refinement search reaches. Ordered
partition refinement (split cells by neighbour counts against every cell until
stable) narrows the orderings; backtracking individualizes each vertex of the
first non-singleton cell in turn. Whenever two leaves produce equal encodings
the permutation between them is an automorphism, and its orbits are merged so
that symmetric graphs (stars, unions of equal cliques, empty graphs) do not
blow the branch count up.
"""

from __future__ import annotations

from .graphs import Graph

CANON_MAX = 16


class OrderTooLarge(ValueError):
    """Raised when a graph exceeds the supported canonicalization order."""


def _mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts in every cell."""
    while True:
        masks = [_mask(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not changed:
            return out
        cells = out


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= 16)."""
    n = g.n
    if n > CANON_MAX:
        raise OrderTooLarge(f"canonical_key supports n <= {CANON_MAX}, got {n}")
    if n == 0:
        return bytes([0])
    adj = g.adj
    nbits = n * (n - 1) // 2

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def merge(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    def encode(perm: list[int]) -> int:
        bits = 0
        for i in range(n):
            row = adj[perm[i]]
            for j in range(i + 1, n):
                bits = (bits << 1) | (row >> perm[j] & 1)
        return bits

    best: list = [None, None]  # [code, perm]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        tgt = -1
        for k, cell in enumerate(cells):
            if len(cell) > 1:
                tgt = k
                break
        if tgt < 0:
            perm = [c[0] for c in cells]
            code = encode(perm)
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = perm
            elif code == best[0]:
                for a, b in zip(best[1], perm):
                    merge(a, b)
            return
        cell = cells[tgt]
        branched: list[int] = []
        for v in cell:
            rv = find(v)
            if any(find(w) == rv for w in branched):
                continue
            branched.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:tgt] + [[v], rest] + cells[tgt + 1:])

    search([list(range(n))])
    if nbits == 0:
        return bytes([n])
    return bytes([n]) + best[0].to_bytes((nbits + 7) // 8, "big")
