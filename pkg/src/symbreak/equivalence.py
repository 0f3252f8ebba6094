"""Distinguishable equivalence of graphs.

Two graphs are equivalent when some bijection of their vertex sets conjugates
the automorphism group of one onto the other, element for element; that is the
same as the two groups having equal labeled cycle representations under
suitable labelings. The search backtracks over vertex images, filtered by
per-vertex statistics (the multiset, over all group elements, of the cycle
length through the vertex paired with the element's cycle type) and by
per-element candidate lists that shrink as images are fixed.
"""

from __future__ import annotations

from . import config
from .autgroup import automorphism_group
from .errors import BudgetExceededError
from .graphs import Graph
from .perms import Perm, PermGroup, cycle_type, inverse

# per-element candidate lists are only maintained for groups up to this order;
# beyond it the search relies on signatures plus the exact leaf check
_LIST_LIMIT = 3000


def representations_equal(a: PermGroup, b: PermGroup) -> bool:
    """Same degree and identical element sets."""
    return a.degree == b.degree and set(p.images for p in a.elements) == set(
        p.images for p in b.elements
    )


def conjugate_group(aut: PermGroup, sigma: Perm) -> PermGroup:
    """sigma . aut . sigma^-1 as an explicit group on the image labels."""
    out = []
    s = sigma.images
    for p in aut.elements:
        img = [0] * aut.degree
        for v in range(aut.degree):
            img[s[v]] = s[p.images[v]]
        out.append(Perm(tuple(img)))
    return PermGroup.from_elements(aut.degree, out)


def _vertex_signatures(aut: PermGroup) -> list[tuple]:
    """For each vertex, the sorted multiset over elements of
    (element cycle type, length of the cycle through the vertex)."""
    n = aut.degree
    sigs: list[list] = [[] for _ in range(n)]
    for p in aut.elements:
        ct = cycle_type(p)
        for cyc in p.cycles():
            for v in cyc:
                sigs[v].append((ct, len(cyc)))
    return [tuple(sorted(s)) for s in sigs]


def _conjugating_bijection(autA: PermGroup, autB: PermGroup, budget: config.Budget):
    """A vertex bijection sigma with sigma.autA.sigma^-1 == autB, or None."""
    n = autA.degree
    if autB.degree != n or autA.order != autB.order:
        return None
    if autA.order == 1:
        return Perm.identity(n)
    typesA = sorted(cycle_type(p) for p in autA.elements)
    typesB = sorted(cycle_type(p) for p in autB.elements)
    if typesA != typesB:
        return None
    sigA = _vertex_signatures(autA)
    sigB = _vertex_signatures(autB)
    if sorted(sigA) != sorted(sigB):
        return None

    A = [p.images for p in autA.elements]
    Ainv = [inverse(p).images for p in autA.elements]
    Bset = frozenset(p.images for p in autB.elements)
    cand_vertices = {
        sig: [w for w in range(n) if sigB[w] == sig] for sig in set(sigA)
    }
    order = sorted(range(n), key=lambda v: (len(cand_vertices[sigA[v]]), v))

    track_lists = autA.order <= _LIST_LIMIT
    if track_lists:
        by_type: dict[tuple, list] = {}
        for q in autB.elements:
            by_type.setdefault(cycle_type(q), []).append(q.images)
        cand_elems = [list(by_type[cycle_type(p)]) for p in autA.elements]

    sigma = [-1] * n
    used = [False] * n
    nodes = 0

    def leaf_ok() -> bool:
        for a in A:
            img = [0] * n
            for v in range(n):
                img[sigma[v]] = sigma[a[v]]
            if tuple(img) not in Bset:
                return False
        return True

    def filter_lists(v: int, w: int):
        """Shrink element candidate lists for the new point sigma[v] = w.
        Returns an undo trail, or None when some list empties."""
        trail = []
        for i, a in enumerate(A):
            lst = cand_elems[i]
            u1 = a[v]
            t1 = sigma[u1]  # b must map w -> t1 when known
            u0 = Ainv[i][v]
            s0 = sigma[u0]  # b must map s0 -> w when known
            kept = [
                b
                for b in lst
                if (t1 < 0 or b[w] == t1) and (s0 < 0 or b[s0] == w)
            ]
            if len(kept) != len(lst):
                trail.append((i, lst))
                cand_elems[i] = kept
                if not kept:
                    for j, old in trail:
                        cand_elems[j] = old
                    return None
        return trail

    def extend(pos: int) -> bool:
        nonlocal nodes
        if pos == n:
            return leaf_ok()
        v = order[pos]
        for w in cand_vertices[sigA[v]]:
            if used[w]:
                continue
            nodes += 1
            if nodes > budget.equivalence_nodes:
                raise BudgetExceededError(
                    f"bijection search exceeded {budget.equivalence_nodes} nodes"
                )
            sigma[v] = w
            used[w] = True
            if track_lists:
                trail = filter_lists(v, w)
                if trail is not None:
                    if extend(pos + 1):
                        return True
                    for j, old in trail:
                        cand_elems[j] = old
            else:
                if extend(pos + 1):
                    return True
            used[w] = False
            sigma[v] = -1
        return False

    if extend(0):
        return Perm(tuple(sigma))
    return None


def distinguishably_equivalent(
    g1: Graph, g2: Graph, budget: config.Budget = config.DEFAULT_BUDGET
):
    """A bijection conjugating Aut(g1) onto Aut(g2) if the graphs are
    equivalent, else None. Raises BudgetExceededError when the search cannot
    be exhausted within budget."""
    if g1.n != g2.n:
        return None
    return _conjugating_bijection(
        automorphism_group(g1), automorphism_group(g2), budget
    )


def isomorphism(g1: Graph, g2: Graph):
    """A vertex bijection preserving adjacency, or None. Backtracking with a
    (degree, neighbor degrees) candidate filter."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    n = g1.n

    def invariants(g):
        degs = [g.adj[v].bit_count() for v in range(g.n)]
        return [
            (degs[v], tuple(sorted(degs[u] for u in range(g.n) if g.adj[v] >> u & 1)))
            for v in range(g.n)
        ]

    inv1, inv2 = invariants(g1), invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    order = sorted(range(n), key=lambda v: (-g1.adj[v].bit_count(), v))
    img = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        need = 0
        for j in range(pos):
            u = order[j]
            if g1.adj[v] >> u & 1:
                need |= 1 << img[u]
        for w in range(n):
            if used >> w & 1 or inv2[w] != inv1[v]:
                continue
            if g2.adj[w] & used != need:
                continue
            img[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used ^= 1 << w
            img[v] = -1
        return False

    if extend(0):
        return Perm(tuple(img))
    return None


def format_class_report(
    graphs, partition, budget: config.Budget = config.DEFAULT_BUDGET
) -> list[str]:
    """One line per class: id, member graph6 strings, shared group order and
    distinguishing number (computed on the class representative)."""
    from .graphs import encode_graph6
    from .metrics import _distinguishing_number

    lines = []
    for cid, members in enumerate(partition):
        aut = automorphism_group(graphs[members[0]])
        d = _distinguishing_number(aut, budget)[0]
        g6 = ",".join(encode_graph6(graphs[i]) for i in members)
        lines.append(f"class={cid} members={g6} aut={aut.order} D={d}")
    return lines


def equivalence_classes(
    graphs, budget: config.Budget = config.DEFAULT_BUDGET
) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Partition indices of the input list under distinguishable equivalence.

    Each graph is tested against one representative per existing class, in
    class creation order, so transitivity is exploited rather than re-derived.
    Pairs whose search ran out of budget are returned as unresolved; the
    graph then starts its own class.
    """
    classes: list[dict] = []
    unresolved: list[tuple[int, int]] = []
    for i, g in enumerate(graphs):
        aut = automorphism_group(g)
        key = (g.n, aut.order, tuple(sorted(cycle_type(p) for p in aut.elements)))
        placed = False
        for cls in classes:
            if cls["key"] != key:
                continue
            try:
                if _conjugating_bijection(cls["aut"], aut, budget) is not None:
                    cls["members"].append(i)
                    placed = True
                    break
            except BudgetExceededError:
                unresolved.append((cls["members"][0], i))
        if not placed:
            classes.append({"key": key, "aut": aut, "members": [i]})
    return [cls["members"] for cls in classes], unresolved
