"""Corpus-scale verification of the structural facts behind the invariants.

Everything here runs against explicit automorphism element lists, so each
fact is checked in its strongest executable form: scan the group for the
hypothesis pattern, then assert the forbidden (or required) pattern.

The pair rules, checked for a graph with a two-vertex determining set
{x, y} (the "anchors"):

  pair_fixers_trivial       no non-identity element fixes both anchors
  swaps_are_involutions     an element swapping the anchors, or exchanging one
                            anchor with an outside vertex while fixing the
                            other, squares to the identity
  swap_extension_unique     at most one element swaps the anchors
  no_rotation_through_pair  if the anchor swap has an outside 2-cycle through
                            d and some element exchanges x and d fixing y,
                            then no element contains a 3-cycle on {x, y, d}
  no_same_anchor_mirror     same hypothesis: no element exchanges y and d
                            while fixing x
  no_anchor_chain_rotation  if the anchor swap has two or more outside
                            2-cycles, a half swap through d_i forbids every
                            element rotating x (or y) through d_i, d_j while
                            the other anchor stays fixed
  partner_mirror_exists     for an outside 2-cycle (d1 d2) of the anchor swap:
                            x exchanges with d1 fixing y iff y exchanges with
                            d2 fixing x
  side_swaps_move_rivals    if x exchanges with each of d1 and d2 (y fixed),
                            no such element for d1 may fix d2, nor vice versa
  bare_swap_absent          when D(g) = 2: the bare anchor transposition
                            (everything else fixed) is not an automorphism

A violation of any rule on a real graph is a bug somewhere and carries the
offending permutations so it can be re-verified directly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

from . import config
from .autgroup import automorphism_group
from .equivalence import distinguishably_equivalent
from .errors import (
    BudgetExceededError,
    GroupTooLargeError,
    NotApplicableError,
    NotDeterminingPairError,
    UnsupportedSizeError,
)
from .graphs import (
    Graph,
    clique_with_tails,
    encode_graph6,
    induced_subgraph,
    string_color_class,
)
from .metrics import (
    UNKNOWN,
    Coloring,
    SymmetryReport,
    _apply_mask,
    _distinguishing_number,
    _min_determining_set,
    _min_distinguishing_class,
    _Unknown,
    analyze,
    is_determining_set,
    is_distinguishing,
    is_distinguishing_class,
)
from .perms import PermGroup

RULES = (
    "pair_fixers_trivial",
    "swaps_are_involutions",
    "swap_extension_unique",
    "no_rotation_through_pair",
    "no_same_anchor_mirror",
    "no_anchor_chain_rotation",
    "partner_mirror_exists",
    "side_swaps_move_rivals",
    "bare_swap_absent",
)


@dataclass(frozen=True)
class RuleViolation:
    rule: str
    perms: tuple[tuple[int, ...], ...]
    context: dict

    def describe(self) -> str:
        return f"{self.rule}: perms={self.perms} context={self.context}"


@dataclass(frozen=True)
class RuleReport:
    graph6: str
    pair: tuple[int, int]
    statuses: dict[str, str]  # rule -> "pass" | "fail" | "skipped"
    violations: tuple[RuleViolation, ...]

    @property
    def passed(self) -> bool:
        return all(s != "fail" for s in self.statuses.values())


def _outside_two_cycles(images: tuple[int, ...], x: int, y: int):
    """2-cycles of the element not meeting {x, y}."""
    out = []
    for v, w in enumerate(images):
        if v < w and images[w] == v and v not in (x, y) and w not in (x, y):
            out.append((v, w))
    return out


def _is_involution(images: tuple[int, ...]) -> bool:
    return all(images[images[v]] == v for v in range(len(images)))


def check_pair_rules(
    g: Graph,
    pair: tuple[int, int],
    aut: PermGroup | None = None,
    d: int | None = None,
    budget: config.Budget = config.DEFAULT_BUDGET,
) -> RuleReport:
    """Run every pair rule for the given determining pair of g.

    d is the distinguishing number when already known; the bare_swap_absent
    rule only applies at d == 2 and is computed on demand otherwise.
    """
    x, y = pair
    if x == y:
        raise NotDeterminingPairError("pair must consist of two distinct vertices")
    if aut is None:
        aut = automorphism_group(g)
    if not is_determining_set(aut, {x, y}):
        raise NotDeterminingPairError(f"{{{x}, {y}}} is not a determining set")

    n = aut.degree
    elems = [p.images for p in aut.elements]
    ident = tuple(range(n))
    swaps = [t for t in elems if t[x] == y and t[y] == x]
    half_x: dict[int, list] = {}
    half_y: dict[int, list] = {}
    for t in elems:
        if t[y] == y and t[x] != x and t[t[x]] == x:
            half_x.setdefault(t[x], []).append(t)
        if t[x] == x and t[y] != y and t[t[y]] == y:
            half_y.setdefault(t[y], []).append(t)

    violations: list[RuleViolation] = []
    statuses = {rule: "pass" for rule in RULES}

    def flag(rule, perms, **context):
        statuses[rule] = "fail"
        violations.append(RuleViolation(rule, tuple(perms), dict(context, x=x, y=y)))

    for t in elems:
        if t != ident and t[x] == x and t[y] == y:
            flag("pair_fixers_trivial", [t])

    swap_like = list(swaps)
    for lst in half_x.values():
        swap_like.extend(lst)
    for lst in half_y.values():
        swap_like.extend(lst)
    for t in swap_like:
        if not _is_involution(t):
            flag("swaps_are_involutions", [t])

    if len(swaps) > 1:
        flag("swap_extension_unique", swaps[:2])

    def rot3(t, a, b, c):
        return t[a] == b and t[b] == c and t[c] == a

    for s in swaps:
        cycles2 = _outside_two_cycles(s, x, y)
        for a, b in cycles2:
            for d1, d2 in ((a, b), (b, a)):
                if d1 in half_x:
                    for t in elems:
                        if rot3(t, x, y, d1) or rot3(t, x, d1, y):
                            flag(
                                "no_rotation_through_pair",
                                [s, half_x[d1][0], t],
                                d1=d1,
                            )
                    if d1 in half_y:
                        flag(
                            "no_same_anchor_mirror",
                            [s, half_x[d1][0], half_y[d1][0]],
                            d1=d1,
                        )
                if (d1 in half_x) != (d2 in half_y):
                    flag("partner_mirror_exists", [s], d1=d1, d2=d2)
        if len(cycles2) >= 2:
            dvals = [v for cyc in cycles2 for v in cyc]
            for di in dvals:
                if di not in half_x:
                    continue
                for dj in dvals:
                    if dj == di:
                        continue
                    for t in elems:
                        bad = (
                            (t[y] == y and (rot3(t, x, di, dj) or rot3(t, x, dj, di)))
                            or (t[x] == x and (rot3(t, y, di, dj) or rot3(t, y, dj, di)))
                        )
                        if bad:
                            flag(
                                "no_anchor_chain_rotation",
                                [s, half_x[di][0], t],
                                di=di,
                                dj=dj,
                            )

    for d1, d2 in combinations(sorted(half_x), 2):
        for t in half_x[d1]:
            if t[d2] == d2:
                flag("side_swaps_move_rivals", [t], d1=d1, d2=d2)
        for t in half_x[d2]:
            if t[d1] == d1:
                flag("side_swaps_move_rivals", [t], d1=d2, d2=d1)

    if d is None:
        try:
            d = _distinguishing_number(aut, budget)[0]
        except BudgetExceededError:
            d = UNKNOWN
    if d == 2:
        bare = tuple(y if v == x else x if v == y else v for v in range(n))
        if bare in set(elems):
            flag("bare_swap_absent", [bare])
    else:
        statuses["bare_swap_absent"] = "skipped"

    return RuleReport(
        graph6=encode_graph6(g),
        pair=(x, y),
        statuses=statuses,
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# restriction of distinguishing colorings
# ---------------------------------------------------------------------------


def check_restriction(
    g: Graph,
    h,
    budget: config.Budget = config.DEFAULT_BUDGET,
    exhaustive_limit: int = 100_000,
    samples: int = 200,
    seed: int = 0,
) -> bool:
    """For vertex sets h whose members all share the same neighbors outside h:
    every distinguishing coloring of g examined restricts to a distinguishing
    coloring of the subgraph induced on h.

    Colorings examined: the distinguishing-number witness, plus all 2- and
    3-colorings when that is at most exhaustive_limit candidates, otherwise
    a seeded random sample. Returns True iff no counterexample was found.
    """
    h = sorted(set(h))
    if not h:
        raise NotApplicableError("h must be a nonempty vertex set")
    hmask = 0
    for v in h:
        hmask |= 1 << v
    outside = [g.adj[v] & ~hmask for v in h]
    if any(o != outside[0] for o in outside):
        raise NotApplicableError("members of h differ in their outside neighborhoods")

    aut_g = automorphism_group(g)
    sub, index = induced_subgraph(g, h)
    aut_h = automorphism_group(sub)

    def restrict(c: Coloring) -> Coloring:
        cols = [0] * len(h)
        for v in h:
            cols[index[v]] = c.colors[v]
        k = max(cols, default=0) + 1
        return Coloring(tuple(cols), k)

    candidates: list[Coloring] = [_distinguishing_number(aut_g, budget)[1]]
    n = g.n
    if 2**n + 3**n <= exhaustive_limit:
        for k in (2, 3):
            for code in range(k**n):
                cols = []
                rest = code
                for _ in range(n):
                    cols.append(rest % k)
                    rest //= k
                candidates.append(Coloring(tuple(cols), k))
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            k = rng.choice((2, 3))
            candidates.append(Coloring(tuple(rng.randrange(k) for _ in range(n)), k))

    for c in candidates:
        if not is_distinguishing(aut_g, c):
            continue
        if not is_distinguishing(aut_h, restrict(c)):
            return False
    return True


def check_shared_distinguishing_number(
    g1: Graph, g2: Graph, budget: config.Budget = config.DEFAULT_BUDGET
) -> bool:
    """Equivalent graphs must have equal distinguishing numbers."""
    sigma = distinguishably_equivalent(g1, g2, budget)
    if sigma is None:
        raise NotApplicableError("graphs are not distinguishably equivalent")
    return (
        _distinguishing_number(automorphism_group(g1), budget)[0]
        == _distinguishing_number(automorphism_group(g2), budget)[0]
    )


# ---------------------------------------------------------------------------
# corpus scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanOptions:
    jobs: int = 1
    budget: config.Budget = config.DEFAULT_BUDGET
    all_pairs: bool = False  # run pair rules on every size-2 determining pair
    verify_smaller_class_upto: int = 10  # cross-check rho by direct enumeration


@dataclass(frozen=True)
class Violation:
    kind: str
    graph6: str
    detail: str


@dataclass(frozen=True)
class ScanReport:
    corpus_size: int
    skipped: tuple[tuple[str, str], ...]  # (graph6, reason)
    det2_d2_count: int
    rho_histogram: dict[int, int]
    rho4_witnesses: tuple[str, ...]
    max_rho_per_det: dict[int, int]
    violations: tuple[Violation, ...]
    rule_reports: tuple[RuleReport, ...]
    same_order_nonequivalent: tuple[str, str] | None
    graph_reports: tuple[SymmetryReport, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary_obj(self) -> dict:
        return {
            "corpus_size": self.corpus_size,
            "analyzed": self.corpus_size - len(self.skipped),
            "skipped": [list(s) for s in self.skipped],
            "det2_d2_count": self.det2_d2_count,
            "rho_histogram": {str(k): v for k, v in sorted(self.rho_histogram.items())},
            "rho4_witnesses": list(self.rho4_witnesses),
            "max_rho_per_det": {str(k): v for k, v in sorted(self.max_rho_per_det.items())},
            "violations": [
                {"kind": v.kind, "graph6": v.graph6, "detail": v.detail}
                for v in self.violations
            ],
            "rule_checks": len(self.rule_reports),
            "same_order_nonequivalent": (
                list(self.same_order_nonequivalent)
                if self.same_order_nonequivalent
                else None
            ),
        }


def _brute_min_class_size(aut: PermGroup, n: int):
    """Smallest size over all 2-colorings of the smaller color class of a
    distinguishing 2-coloring; direct enumeration, no orbit pruning. Used as
    an independent cross-check of the subset search."""
    non_id = [p.images for p in aut.non_identity()]
    for k in range(n // 2 + 1):
        for comb in combinations(range(n), k):
            mask = 0
            for v in comb:
                mask |= 1 << v
            if all(_apply_mask(t, mask) != mask for t in non_id):
                return k
    return None


def _determining_pairs(aut: PermGroup):
    pairs = []
    for x, y in combinations(range(aut.degree), 2):
        if is_determining_set(aut, {x, y}):
            pairs.append((x, y))
    return pairs


def _scan_one(g: Graph, options: ScanOptions):
    """Per-graph work: report, witness re-verification, pair rules."""
    g6 = encode_graph6(g)
    try:
        aut = automorphism_group(g)
    except (GroupTooLargeError, UnsupportedSizeError) as exc:
        return {"graph6": g6, "skip": f"automorphism group: {exc}"}
    report = analyze(g, options.budget, aut=aut)
    violations: list[Violation] = []
    rule_reports: list[RuleReport] = []

    if isinstance(report.d, _Unknown) or isinstance(report.det, _Unknown) or isinstance(
        report.rho, _Unknown
    ):
        return {"graph6": g6, "skip": "budget exceeded", "report": report}

    if report.det_witness is not None and not is_determining_set(aut, report.det_witness):
        violations.append(Violation("witness_reverify", g6, "det witness not determining"))
    if report.rho_witness is not None and not is_distinguishing_class(
        aut, report.rho_witness
    ):
        violations.append(Violation("witness_reverify", g6, "rho witness not a class"))
    if report.d_witness is not None and not is_distinguishing(aut, report.d_witness):
        violations.append(Violation("witness_reverify", g6, "D witness not distinguishing"))
    if report.rho is not None and report.det > report.rho:
        violations.append(
            Violation("det_le_rho", g6, f"Det={report.det} > rho={report.rho}")
        )

    if g.n <= options.verify_smaller_class_upto:
        brute = _brute_min_class_size(aut, g.n)
        if brute != report.rho:
            violations.append(
                Violation(
                    "smaller_class_mismatch",
                    g6,
                    f"direct enumeration gives {brute}, subset search gave {report.rho}",
                )
            )

    if report.det2_d2_case:
        if report.rho not in (2, 3, 4):
            violations.append(
                Violation("rho_bound", g6, f"D=2, Det=2 but rho={report.rho}")
            )
        pairs = (
            _determining_pairs(aut)
            if options.all_pairs
            else [tuple(sorted(report.det_witness))]
        )
        for pair in pairs:
            rr = check_pair_rules(g, pair, aut=aut, d=report.d, budget=options.budget)
            rule_reports.append(rr)
            for v in rr.violations:
                violations.append(Violation(f"rule:{v.rule}", g6, v.describe()))

    return {
        "graph6": g6,
        "report": report,
        "violations": violations,
        "rule_reports": rule_reports,
    }


def scan_corpus(graphs, options: ScanOptions = ScanOptions()) -> ScanReport:
    """Analyze every graph, enforce the rho bound and the pair rules on the
    D=2, Det=2 subset, and aggregate deterministically in input order."""
    graphs = list(graphs)
    worker = partial(_scan_one, options=options)
    if options.jobs > 1 and len(graphs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            results = list(pool.map(worker, graphs, chunksize=16))
    else:
        results = [worker(g) for g in graphs]

    skipped: list[tuple[str, str]] = []
    det2_d2 = 0
    histogram: dict[int, int] = {}
    rho4: list[str] = []
    max_rho_per_det: dict[int, int] = {}
    violations: list[Violation] = []
    rule_reports: list[RuleReport] = []
    graph_reports: list[SymmetryReport] = []
    first_by_order: dict[int, Graph] = {}
    evidence: tuple[str, str] | None = None

    for g, res in zip(graphs, results):
        if "skip" in res:
            skipped.append((res["graph6"], res["skip"]))
            continue
        report: SymmetryReport = res["report"]
        graph_reports.append(report)
        violations.extend(res["violations"])
        rule_reports.extend(res["rule_reports"])
        if report.rho is not None:
            cur = max_rho_per_det.get(report.det)
            max_rho_per_det[report.det] = (
                report.rho if cur is None else max(cur, report.rho)
            )
        if report.det2_d2_case:
            det2_d2 += 1
            if isinstance(report.rho, int):
                histogram[report.rho] = histogram.get(report.rho, 0) + 1
                if report.rho == 4:
                    rho4.append(report.graph6)
        if evidence is None:
            seen = first_by_order.get(report.aut_order)
            if seen is None:
                first_by_order[report.aut_order] = g
            else:
                try:
                    if distinguishably_equivalent(seen, g, options.budget) is None:
                        evidence = (encode_graph6(seen), report.graph6)
                except BudgetExceededError:
                    pass

    return ScanReport(
        corpus_size=len(graphs),
        skipped=tuple(skipped),
        det2_d2_count=det2_d2,
        rho_histogram=histogram,
        rho4_witnesses=tuple(rho4),
        max_rho_per_det=max_rho_per_det,
        violations=tuple(violations),
        rule_reports=tuple(rule_reports),
        same_order_nonequivalent=evidence,
        graph_reports=tuple(graph_reports),
    )


# ---------------------------------------------------------------------------
# clique-with-tails family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyCheck:
    n: int
    graph6: str
    aut_order: int
    aut_order_is_clique_factorial: bool
    det_target: int
    rho_target: int
    string_class: tuple[int, ...]
    string_class_is_distinguishing: bool
    det_exact: int | None
    rho_exact: int | None
    clique_subset_determining: bool | None
    random_subsets_not_determining: bool | None
    degenerate: bool
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures


def family_bounds_check(
    n: int,
    budget: config.Budget = config.DEFAULT_BUDGET,
    exact: bool | None = None,
    seed: int = 2024,
) -> FamilyCheck:
    """Verify the clique-with-tails family facts at parameter n (1..3).

    The expected values: a minimum determining set drops one clique vertex
    (size 2**n - 1), and the binary-string coloring class of size n * 2**(n-1)
    is a distinguishing class. Exact minimality is verified for n <= 2 by
    default; pass exact=True to force the n=3 exhaustive search (slow).
    """
    if not 1 <= n <= 3:
        raise UnsupportedSizeError("family check supports n in 1..3")
    if exact is None:
        exact = n <= 2
    g = clique_with_tails(n)
    size = 1 << n
    det_target = size - 1
    rho_target = n * size // 2
    aut = automorphism_group(g)
    failures: list[str] = []
    fact_ok = aut.order == math.factorial(size)
    if not fact_ok:
        failures.append(f"aut order {aut.order} != {size}!")

    sclass = tuple(sorted(string_color_class(n)))
    if len(sclass) != rho_target:
        failures.append(f"string class size {len(sclass)} != {rho_target}")
    class_ok = is_distinguishing_class(aut, sclass)
    if not class_ok:
        failures.append("string class is not a distinguishing class")

    det_exact = rho_exact = None
    clique_ok = rand_ok = None
    if exact:
        det_exact = _min_determining_set(aut, budget)[0]
        if det_exact != det_target:
            failures.append(f"Det={det_exact} != {det_target}")
        found = _min_distinguishing_class(aut, budget)
        rho_exact = found[0] if found else None
        if rho_exact != rho_target:
            failures.append(f"rho={rho_exact} != {rho_target}")
    if n == 3:
        clique_ok = is_determining_set(aut, set(range(size - 1)))
        if not clique_ok:
            failures.append("clique-minus-one subset is not determining")
        rng = random.Random(seed)
        rand_ok = True
        for _ in range(10):
            subset = rng.sample(range(g.n), det_target - 1)
            if is_determining_set(aut, subset):
                rand_ok = False
                failures.append(f"random {det_target - 1}-subset {sorted(subset)} determines")

    return FamilyCheck(
        n=n,
        graph6=encode_graph6(g),
        aut_order=aut.order,
        aut_order_is_clique_factorial=fact_ok,
        det_target=det_target,
        rho_target=rho_target,
        string_class=sclass,
        string_class_is_distinguishing=class_ok,
        det_exact=det_exact,
        rho_exact=rho_exact,
        clique_subset_determining=clique_ok,
        random_subsets_not_determining=rand_ok,
        degenerate=n == 1,
        failures=tuple(failures),
    )
