"""Exact automorphism groups of small graphs, orbits, and stabilizers.

The search is a vertex-by-vertex backtracking over candidate images. Vertices
are processed in descending-degree then index order; candidates are filtered
by a (degree, sorted neighbor degrees) invariant and by exact adjacency
consistency with everything already mapped, so every leaf is an automorphism
and every automorphism is reached.
"""

from __future__ import annotations

from . import config
from .errors import GroupTooLargeError, UnsupportedSizeError
from .graphs import Graph
from .perms import Perm, PermGroup


def _vertex_invariants(g: Graph) -> list[tuple]:
    degs = [g.adj[v].bit_count() for v in range(g.n)]
    return [
        (degs[v], tuple(sorted(degs[u] for u in range(g.n) if g.adj[v] >> u & 1)))
        for v in range(g.n)
    ]


def automorphism_elements(g: Graph, element_cap: int | None = None):
    """Image tuples of every adjacency-preserving bijection, in discovery order."""
    n = g.n
    if n == 0:
        return [()]
    inv = _vertex_invariants(g)
    order = sorted(range(n), key=lambda v: (-g.adj[v].bit_count(), v))
    candidates = [
        [w for w in range(n) if inv[w] == inv[v]] for v in order
    ]
    adj = g.adj
    img = [-1] * n
    found: list[tuple[int, ...]] = []
    used = 0  # bitmask of taken images

    def extend(pos: int):
        nonlocal used
        if pos == n:
            found.append(tuple(img))
            if element_cap is not None and len(found) > element_cap:
                raise GroupTooLargeError(element_cap)
            return
        v = order[pos]
        # images of the already-mapped neighbors of v
        need = 0
        for j in range(pos):
            u = order[j]
            if adj[v] >> u & 1:
                need |= 1 << img[u]
        for w in candidates[pos]:
            if used >> w & 1:
                continue
            if adj[w] & used != need:
                continue
            img[v] = w
            used |= 1 << w
            extend(pos + 1)
            used ^= 1 << w
            img[v] = -1

    extend(0)
    return found


def automorphism_group(
    g: Graph,
    max_vertices: int = config.MAX_AUT_VERTICES,
    element_cap: int = config.MAX_AUT_ELEMENTS,
) -> PermGroup:
    """Aut(g) as an explicit PermGroup."""
    if g.n > max_vertices:
        raise UnsupportedSizeError(
            f"automorphism search supports n <= {max_vertices}, got {g.n}"
        )
    elements = automorphism_elements(g, element_cap=element_cap)
    return PermGroup.from_elements(g.n, (Perm(t) for t in elements))


def preserves_adjacency(g: Graph, p: Perm) -> bool:
    for v in range(g.n):
        for u in range(v):
            if (g.adj[v] >> u & 1) != (g.adj[p.images[v]] >> p.images[u] & 1):
                return False
    return True


def orbits(group: PermGroup) -> tuple[frozenset[int], ...]:
    """Vertex orbits, as a partition sorted by least member."""
    n = group.degree
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in group.elements:
        for v, w in enumerate(p.images):
            ra, rb = find(v), find(w)
            if ra != rb:
                parent[rb] = ra
    blocks: dict[int, set[int]] = {}
    for v in range(n):
        blocks.setdefault(find(v), set()).add(v)
    return tuple(
        frozenset(b) for b in sorted(blocks.values(), key=min)
    )


def pointwise_stabilizer(group: PermGroup, s) -> PermGroup:
    """Elements fixing every member of s."""
    s = set(s)
    kept = [p for p in group.elements if all(p.images[v] == v for v in s)]
    return PermGroup(group.degree, tuple(kept))


def setwise_stabilizer(group: PermGroup, s) -> PermGroup:
    """Elements mapping s onto itself as a set."""
    mask = 0
    for v in s:
        mask |= 1 << v
    kept = []
    for p in group.elements:
        img = 0
        rest = mask
        while rest:
            low = rest & -rest
            img |= 1 << p.images[low.bit_length() - 1]
            rest ^= low
        if img == mask:
            kept.append(p)
    return PermGroup(group.degree, tuple(kept))
