"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the library's search code:
brute-force filters over all n! permutations, all subsets, all colorings,
and a from-scratch graph6 codec. These are the reference implementations
the fast paths are checked against.
"""

from itertools import combinations, permutations, product

from symbreak.graphs import Graph
from symbreak.perms import Perm, PermGroup


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Filter all n! permutations for adjacency preservation."""
    out = []
    for per in permutations(range(g.n)):
        if all(
            (g.adj[v] >> u & 1) == (g.adj[per[v]] >> per[u] & 1)
            for v in range(g.n)
            for u in range(v)
        ):
            out.append(per)
    return sorted(out)


def brute_group(g: Graph) -> PermGroup:
    return PermGroup.from_elements(g.n, (Perm(t) for t in brute_automorphisms(g)))


def brute_is_distinguishing(g: Graph, colors: tuple[int, ...]) -> bool:
    """No non-identity automorphism preserves the coloring."""
    for per in brute_automorphisms(g):
        if per == tuple(range(g.n)):
            continue
        if all(colors[per[v]] == colors[v] for v in range(g.n)):
            return False
    return True


def brute_distinguishing_number(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if brute_is_distinguishing(g, colors):
                return k
    raise AssertionError("all-distinct coloring always distinguishes")


def brute_determining_number(g: Graph) -> int:
    auts = brute_automorphisms(g)
    ident = tuple(range(g.n))
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if all(per == ident for per in auts if all(per[v] == v for v in s)):
                return k
    raise AssertionError("the full vertex set always determines")


def brute_cost_number(g: Graph):
    """Minimum size of the smaller color class over all distinguishing
    2-colorings, or None."""
    best = None
    for code in range(1 << g.n):
        colors = tuple(code >> v & 1 for v in range(g.n))
        if brute_is_distinguishing(g, colors):
            size = min(sum(colors), g.n - sum(colors))
            best = size if best is None else min(best, size)
    return best


def brute_equivalent(g1: Graph, g2: Graph):
    """Try all n! bijections for one conjugating Aut(g1) onto Aut(g2)."""
    if g1.n != g2.n:
        return None
    a1 = brute_automorphisms(g1)
    a2 = set(brute_automorphisms(g2))
    if len(a1) != len(a2):
        return None
    for per in permutations(range(g1.n)):
        ok = True
        for a in a1:
            img = [0] * g1.n
            for v in range(g1.n):
                img[per[v]] = per[a[v]]
            if tuple(img) not in a2:
                ok = False
                break
        if ok:
            return per
    return None


# -- independent graph6 codec ------------------------------------------------


def reference_encode_graph6(g: Graph) -> str:
    assert g.n <= 62
    bits = "".join(
        "1" if g.adj[v] >> u & 1 else "0" for v in range(1, g.n) for u in range(v)
    )
    bits += "0" * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        chars.append(chr(int(bits[i : i + 6], 2) + 63))
    return "".join(chars)


def reference_decode_graph6(record: str) -> tuple[int, set[tuple[int, int]]]:
    n = ord(record[0]) - 63
    bits = "".join(format(ord(ch) - 63, "06b") for ch in record[1:])
    edges = set()
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k] == "1":
                edges.add((u, v))
            k += 1
    return n, edges


# -- fixed graphs ------------------------------------------------------------


def net_graph() -> Graph:
    """Triangle with one pendant vertex hanging off each corner."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def random_graph(rng, n: int) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)
