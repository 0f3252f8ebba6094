"""Symmetry-breaking invariants: broken permutations, distinguishing colorings
and the distinguishing number D, determining sets and Det, distinguishing
classes and the cost number rho, neighbour-non-neighbour pairs, and the
per-graph report that aggregates them.

Search strategy notes:

* A vertex subset S is a distinguishing class exactly when no non-identity
  automorphism maps S onto itself; equivalently the 2-coloring "S red, rest
  blue" is distinguishing. Both rho and the 2-color case of D therefore run
  one subset search: subsets are enumerated by increasing size, and subsets
  equivalent under the group are pruned by visiting each subset orbit once.
  Since a class and its complement have the same setwise stabilizer, sizes
  above n/2 never need scanning.
* For three or more colors, D falls back to a depth-first search over
  colorings in canonical form (a color id may appear only after all smaller
  ids), pruning a partial coloring as soon as some group element is fully
  contained in the colored prefix and preserves it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import config
from .autgroup import automorphism_group, pointwise_stabilizer, setwise_stabilizer
from .errors import BudgetExceededError, DegreeError
from .graphs import Graph, encode_graph6
from .perms import Perm, PermGroup


class _Unknown:
    """Sentinel for metric values a budget-limited search could not settle."""

    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        raise TypeError("UNKNOWN has no truth value")


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class Coloring:
    """Total vertex coloring with color ids 0..k-1."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("color count must be non-negative")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has color {c} outside 0..{self.k - 1}")

    @classmethod
    def from_class(cls, n: int, members) -> "Coloring":
        """2-coloring with the given vertices as color class 1."""
        members = set(members)
        return cls(tuple(1 if v in members else 0 for v in range(n)), 2)

    @property
    def degree(self) -> int:
        return len(self.colors)

    def color_classes(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(v for v, c in enumerate(self.colors) if c == i)
            for i in range(self.k)
        )


def is_broken(p: Perm, c: Coloring) -> bool:
    """True iff some cycle of p of length >= 2 carries two distinct colors."""
    if p.degree != c.degree:
        raise DegreeError(f"degree mismatch: {p.degree} vs {c.degree}")
    colors = c.colors
    for cyc in p.cycles():
        if len(cyc) < 2:
            continue
        first = colors[cyc[0]]
        if any(colors[v] != first for v in cyc[1:]):
            return True
    return False


def preserves_coloring(p: Perm, c: Coloring) -> bool:
    """Direct color-preservation test: c(p(v)) == c(v) for all v."""
    if p.degree != c.degree:
        raise DegreeError(f"degree mismatch: {p.degree} vs {c.degree}")
    colors = c.colors
    return all(colors[img] == colors[v] for v, img in enumerate(p.images))


def is_distinguishing(aut: PermGroup, c: Coloring) -> bool:
    """True iff every non-identity element of aut is broken by c."""
    if aut.degree != c.degree:
        raise DegreeError(f"degree mismatch: {aut.degree} vs {c.degree}")
    return all(is_broken(p, c) for p in aut.non_identity())


def is_determining_set(aut: PermGroup, s) -> bool:
    """True iff only the identity fixes every member of s."""
    return pointwise_stabilizer(aut, s).is_trivial


def is_distinguishing_class(aut: PermGroup, s) -> bool:
    """True iff s is a determining set and every element fixing s setwise
    fixes it pointwise."""
    if not is_determining_set(aut, s):
        return False
    s = set(s)
    return all(
        all(p.images[v] == v for v in s) for p in setwise_stabilizer(aut, s).elements
    )


def nn_pairs(g: Graph, v1: int, v2: int) -> list[tuple[int, int]]:
    """Ordered pairs (n1, n2) of distinct outside vertices with n1 adjacent to
    v1 only and n2 adjacent to v2 only; the opposite orientation shows up as
    the swapped pair. Sorted lexicographically."""
    if v1 == v2:
        raise ValueError("nn_pairs requires two distinct vertices")
    if not (0 <= v1 < g.n and 0 <= v2 < g.n):
        raise IndexError("vertex out of range")
    side1 = [
        u
        for u in range(g.n)
        if u not in (v1, v2) and g.adj[v1] >> u & 1 and not g.adj[v2] >> u & 1
    ]
    side2 = [
        u
        for u in range(g.n)
        if u not in (v1, v2) and g.adj[v2] >> u & 1 and not g.adj[v1] >> u & 1
    ]
    return sorted((a, b) for a in side1 for b in side2 if a != b)


# ---------------------------------------------------------------------------
# subset searches
# ---------------------------------------------------------------------------


def _apply_mask(images: tuple[int, ...], mask: int) -> int:
    img = 0
    while mask:
        low = mask & -mask
        img |= 1 << images[low.bit_length() - 1]
        mask ^= low
    return img


def _mask_vertices(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


class _SubsetScan:
    """Shared machinery: subsets by increasing size, one visit per orbit."""

    def __init__(self, aut: PermGroup, budget: config.Budget):
        self.n = aut.degree
        self.images = [p.images for p in aut.elements]
        self.tests = 0
        self.cap = budget.subset_tests

    def representatives(self, sizes):
        for k in sizes:
            seen: set[int] = set()
            for comb in combinations(range(self.n), k):
                mask = 0
                for v in comb:
                    mask |= 1 << v
                if mask in seen:
                    continue
                self.tests += 1
                if self.tests > self.cap:
                    raise BudgetExceededError(
                        f"subset search exceeded {self.cap} candidate tests"
                    )
                orbit = set()
                stab = 0
                for images in self.images:
                    img = _apply_mask(images, mask)
                    orbit.add(img)
                    if img == mask:
                        stab += 1
                seen.update(orbit)
                yield k, mask, stab


def _min_distinguishing_class(aut: PermGroup, budget: config.Budget):
    """Smallest subset with trivial setwise stabilizer, or None."""
    scan = _SubsetScan(aut, budget)
    for k, mask, stab in scan.representatives(range(aut.degree // 2 + 1)):
        if stab == 1:
            return k, _mask_vertices(mask)
    return None


def _min_determining_set(aut: PermGroup, budget: config.Budget):
    """Smallest subset whose pointwise stabilizer is trivial."""
    if aut.is_trivial:
        return 0, frozenset()
    fixed = [p.fixed_mask() for p in aut.non_identity()]
    scan = _SubsetScan(aut, budget)
    for k, mask, _stab in scan.representatives(range(aut.degree)):
        if all(mask & ~fm for fm in fixed):
            return k, _mask_vertices(mask)
    raise AssertionError("fixing all but one vertex always determines")


# ---------------------------------------------------------------------------
# coloring search for k >= 3
# ---------------------------------------------------------------------------


def _search_coloring(aut: PermGroup, k: int, budget: config.Budget):
    """A distinguishing k-coloring in canonical form, or None."""
    n = aut.degree
    by_last: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in range(n)]
    for p in aut.non_identity():
        moved = [(v, p.images[v]) for v in range(n) if p.images[v] != v]
        by_last[max(v for v, _ in moved)].append(tuple(moved))
    colors = [-1] * n
    nodes = 0

    def assign(v: int, maxc: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        for c in range(min(maxc + 1, k - 1) + 1):
            nodes += 1
            if nodes > budget.coloring_nodes:
                raise BudgetExceededError(
                    f"coloring search exceeded {budget.coloring_nodes} nodes"
                )
            colors[v] = c
            doomed = any(
                all(colors[w] == colors[u] for u, w in moved_pairs)
                for moved_pairs in by_last[v]
            )
            if not doomed and assign(v + 1, max(maxc, c)):
                return True
        colors[v] = -1
        return False

    if assign(0, -1):
        return tuple(colors)
    return None


# ---------------------------------------------------------------------------
# the invariants
# ---------------------------------------------------------------------------


def distinguishing_number(
    g: Graph, budget: config.Budget = config.DEFAULT_BUDGET
) -> tuple[int, Coloring]:
    return _distinguishing_number(automorphism_group(g), budget)


def _distinguishing_number(aut: PermGroup, budget: config.Budget):
    if aut.is_trivial:
        return 1, Coloring((0,) * aut.degree, 1)
    found = _min_distinguishing_class(aut, budget)
    if found is not None:
        return 2, Coloring.from_class(aut.degree, found[1])
    return _distinguishing_ge3(aut, budget)


def _distinguishing_ge3(aut: PermGroup, budget: config.Budget):
    for k in range(3, aut.degree + 1):
        colors = _search_coloring(aut, k, budget)
        if colors is not None:
            return k, Coloring(colors, k)
    raise AssertionError("n distinct colors always distinguish")


def determining_number(
    g: Graph, budget: config.Budget = config.DEFAULT_BUDGET
) -> tuple[int, frozenset[int]]:
    return _min_determining_set(automorphism_group(g), budget)


def cost_number(g: Graph, budget: config.Budget = config.DEFAULT_BUDGET):
    """(rho, witness class) for 2-distinguishable g, else None. A graph with
    trivial group gets the degenerate (0, empty set)."""
    return _min_distinguishing_class(automorphism_group(g), budget)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetryReport:
    """Per-graph record of every invariant plus its witnesses.

    Budget-limited fields hold UNKNOWN; rho is None when the graph is not
    2-distinguishable. degenerate marks the rho = 0 case of a trivial group.
    """

    graph6: str
    n: int
    edge_count: int
    aut_order: int
    d: int | _Unknown
    d_witness: Coloring | None
    det: int | _Unknown
    det_witness: frozenset | None
    rho: int | None | _Unknown
    rho_witness: frozenset | None

    @property
    def degenerate(self) -> bool:
        return self.rho == 0 and self.aut_order == 1

    @property
    def det2_d2_case(self) -> bool:
        return self.d == 2 and self.det == 2

    @property
    def rho_in_2_4(self):
        """True/False when the D=2, Det=2 case applies and rho is known;
        None otherwise."""
        if not self.det2_d2_case or isinstance(self.rho, _Unknown):
            return None
        return self.rho is not None and 2 <= self.rho <= 4

    def to_line(self) -> str:
        return " ".join(
            (
                self.graph6,
                f"n={self.n}",
                f"m={self.edge_count}",
                f"aut={self.aut_order}",
                f"D={_fmt_count(self.d)}",
                f"Det={_fmt_count(self.det)}",
                f"rho={_fmt_count(self.rho)}",
                f"det2_d2={int(self.det2_d2_case)}",
                f"rho_in_2_4={_fmt_flag(self.rho_in_2_4)}",
                f"det_set={_fmt_vertices(self.det_witness)}",
                f"rho_class={_fmt_vertices(self.rho_witness)}",
                f"degenerate={int(self.degenerate)}",
            )
        )

    def to_obj(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.edge_count,
            "aut": self.aut_order,
            "D": _obj_count(self.d),
            "Det": _obj_count(self.det),
            "rho": _obj_count(self.rho),
            "det2_d2": self.det2_d2_case,
            "rho_in_2_4": self.rho_in_2_4,
            "det_set": _obj_vertices(self.det_witness),
            "rho_class": _obj_vertices(self.rho_witness),
            "degenerate": self.degenerate,
        }


def _fmt_count(v) -> str:
    if isinstance(v, _Unknown):
        return "?"
    if v is None:
        return "-"
    return str(v)


def _fmt_flag(v) -> str:
    return "-" if v is None else str(int(v))


def _fmt_vertices(s) -> str:
    if not s:
        return "-"
    return ",".join(str(v) for v in sorted(s))


def _obj_count(v):
    return "unknown" if isinstance(v, _Unknown) else v


def _obj_vertices(s):
    return None if s is None else sorted(s)


def analyze(
    g: Graph,
    budget: config.Budget = config.DEFAULT_BUDGET,
    aut: PermGroup | None = None,
) -> SymmetryReport:
    """Full invariant report for one graph. Budget overruns downgrade the
    affected field to UNKNOWN instead of failing the whole report."""
    if aut is None:
        aut = automorphism_group(g)
    try:
        found = _min_distinguishing_class(aut, budget)
        rho, rho_witness = found if found is not None else (None, None)
    except BudgetExceededError:
        rho, rho_witness = UNKNOWN, None
    if aut.is_trivial:
        d, d_witness = 1, Coloring((0,) * g.n, 1)
    elif isinstance(rho, _Unknown):
        d, d_witness = UNKNOWN, None
    elif rho is not None:
        d, d_witness = 2, Coloring.from_class(g.n, rho_witness)
    else:
        try:
            d, d_witness = _distinguishing_ge3(aut, budget)
        except BudgetExceededError:
            d, d_witness = UNKNOWN, None
    try:
        det, det_witness = _min_determining_set(aut, budget)
    except BudgetExceededError:
        det, det_witness = UNKNOWN, None
    return SymmetryReport(
        graph6=encode_graph6(g),
        n=g.n,
        edge_count=g.edge_count,
        aut_order=aut.order,
        d=d,
        d_witness=d_witness,
        det=det,
        det_witness=det_witness,
        rho=rho,
        rho_witness=rho_witness,
    )
