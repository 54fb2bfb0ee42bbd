"""Registry of verifiable structural claims about game families.

Each claim states a winner/margin pattern over a concrete instance
range and is checked mechanically: solved exactly, or (for constructive
claims) played out against an exhaustive best-response adversary.  A
report carries one line per instance plus the first violating instance,
if any, as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import canonical
from .families import make
from .graph import LoopyMultigraph
from .solver import SolveOptions, TranspositionTable, solve
from .strategies import (
    balloon_mirror,
    best_response_value,
    mirror_policy,
    quadrant_mirror_policy,
)


class UnknownClaimError(ValueError):
    """Requested claim id is not registered."""


@dataclass
class ClaimReport:
    claim_id: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    witness: str | None = None

    def fail(self, witness: str) -> None:
        self.passed = False
        if self.witness is None:
            self.witness = witness
        self.lines.append(f"FAIL {witness}")


def _shared_opts() -> SolveOptions:
    return SolveOptions(table=TranspositionTable())


def _check_rows(rep: ClaimReport, rows: list[tuple[str, LoopyMultigraph, str, int | None]]) -> None:
    """Each row: (label, graph, expected winner, expected differential or None)."""
    opts = _shared_opts()
    for label, g, winner, diff in rows:
        gv = solve(g, opts)
        ok = gv.winner == winner and (diff is None or gv.differential == diff)
        line = f"{label}: {gv.winner} ({gv.p1_score}-{gv.p2_score})"
        if ok:
            rep.lines.append(line)
        else:
            want = winner if diff is None else f"{winner} by {diff}"
            rep.fail(f"{line}, expected {want}")


def _claim_friendship_alternation() -> ClaimReport:
    """Triangles sharing a vertex: P1 by one point for even counts, P2 by
    three for odd counts."""
    rep = ClaimReport("friendship_alternation", True)
    rows = []
    for n in range(1, 9):
        winner, diff = ("P1", 1) if n % 2 == 0 else ("P2", -3)
        rows.append((f"friendship({n})", make("friendship", n), winner, diff))
    _check_rows(rep, rows)
    return rep


def _claim_pinwheel_p2() -> ClaimReport:
    """Squares sharing a vertex: P2 wins throughout the tested range."""
    rep = ClaimReport("pinwheel_p2", True)
    rows = [(f"pinwheel({n})", make("pinwheel", n), "P2", None) for n in range(1, 9)]
    _check_rows(rep, rows)
    return rep


def _claim_loopy_star_parity() -> ClaimReport:
    """Loopy stars: P1 by two on an even vertex count, P2 by three on odd."""
    rep = ClaimReport("loopy_star_parity", True)
    rows = []
    for k in range(1, 13):
        vertices = k + 1
        winner, diff = ("P1", 2) if vertices % 2 == 0 else ("P2", -3)
        rows.append((f"loopy_star({k})", make("loopy_star", k), winner, diff))
    _check_rows(rep, rows)
    return rep


def _claim_double_loopy_p2() -> ClaimReport:
    """Two loops per leaf: P2 wins every size except the smallest, a tie."""
    rep = ClaimReport("double_loopy_p2", True)
    rows = [("generalized_loopy_star(1, 2)", make("generalized_loopy_star", 1, 2), "Tie", 0)]
    for x in range(2, 13):
        rows.append(
            (f"generalized_loopy_star({x}, 2)", make("generalized_loopy_star", x, 2), "P2", None)
        )
    _check_rows(rep, rows)
    return rep


def _claim_starlike_obs1() -> ClaimReport:
    """One loop per branch end, branches of four edges: P2 wins for two or
    more branches."""
    rep = ClaimReport("starlike_obs1", True)
    rows = [
        (f"loopy_starlike({n}, 1, 5)", make("loopy_starlike", n, 1, 5), "P2", None)
        for n in (2, 3)
    ]
    _check_rows(rep, rows)
    return rep


def _claim_starlike_obs2() -> ClaimReport:
    """Two loops per branch end: winner alternates with branch parity."""
    rep = ClaimReport("starlike_obs2", True)
    rows = []
    for n in (1, 2, 3):
        winner = "P1" if n % 2 == 1 else "P2"
        rows.append((f"loopy_starlike({n}, 2, 5)", make("loopy_starlike", n, 2, 5), winner, None))
    _check_rows(rep, rows)
    return rep


def _claim_starlike_obs3() -> ClaimReport:
    """Three loops per branch end: P2 wins once there are two branches.

    A single branch is a lone path with loops, so the mover strips it
    whole; the multi-branch argument starts at two.
    """
    rep = ClaimReport("starlike_obs3", True)
    rows = [
        (f"loopy_starlike({n}, 3, 5)", make("loopy_starlike", n, 3, 5), "P2", None)
        for n in (2, 3)
    ]
    _check_rows(rep, rows)
    gv = solve(make("loopy_starlike", 1, 3, 5))
    rep.lines.append(
        f"note: loopy_starlike(1, 3, 5) is {gv.winner} ({gv.p1_score}-{gv.p2_score}); "
        "single-branch case excluded (reduces to a one-branch takeover, not the pairing argument)"
    )
    return rep


def _claim_bipartite_star_p1() -> ClaimReport:
    """One-vertex part: the graph is a star, a tree, so P1 takes everything."""
    rep = ClaimReport("bipartite_star_p1", True)
    rows = []
    for b in range(1, 9):
        g = make("complete_bipartite", 1, b)
        rows.append((f"complete_bipartite(1, {b})", g, "P1", g.vertex_count))
    _check_rows(rep, rows)
    return rep


def _claim_bipartite_two_parity() -> ClaimReport:
    """Two-vertex part: P1 wins exactly when the other part is odd."""
    rep = ClaimReport("bipartite_two_parity", True)
    rows = []
    for b in range(1, 9):
        winner = "P1" if b % 2 == 1 else "P2"
        rows.append((f"complete_bipartite(2, {b})", make("complete_bipartite", 2, b), winner, None))
    _check_rows(rep, rows)
    return rep


def all_trees(max_vertices: int) -> dict[int, list[LoopyMultigraph]]:
    """Trees on 2..max_vertices vertices, one per isomorphism class.

    Grown by attaching a new leaf to every vertex of every smaller tree
    and discarding canonical-key duplicates.
    """
    out: dict[int, list[LoopyMultigraph]] = {2: [LoopyMultigraph.from_edges([(0, 1)])]}
    for n in range(3, max_vertices + 1):
        seen: dict[bytes, LoopyMultigraph] = {}
        for t in out[n - 1]:
            for v in t.vertices:
                bigger = t.add_edge(v, n - 1)
                key = canonical.canonical_key(bigger)
                if key not in seen:
                    seen[key] = bigger
        out[n] = list(seen.values())
    return out


def _claim_tree_p1() -> ClaimReport:
    """On any tree the mover takes every vertex: differential equals the
    vertex count.  Checked for all trees up to nine vertices, plus a few
    forests."""
    rep = ClaimReport("tree_p1", True)
    opts = _shared_opts()
    trees = all_trees(9)
    for n in range(2, 10):
        bad = 0
        for t in trees[n]:
            gv = solve(t, opts)
            if gv.differential != n:
                bad += 1
                rep.fail(f"tree on {n} vertices {t!r}: differential {gv.differential} != {n}")
        rep.lines.append(f"{len(trees[n])} trees on {n} vertices: differential {n} {'ok' if not bad else 'VIOLATED'}")
    path3 = make("path", 3)
    forests = [
        ("path(3) + path(4)", path3.disjoint_union(make("path", 4))),
        ("star(1,3) + path(2)", make("complete_bipartite", 1, 3).disjoint_union(make("path", 2))),
    ]
    for label, f in forests:
        gv = solve(f, opts)
        if gv.differential == f.vertex_count:
            rep.lines.append(f"forest {label}: differential {gv.differential} ok")
        else:
            rep.fail(f"forest {label}: differential {gv.differential} != {f.vertex_count}")
    return rep


def _claim_cycle_p2() -> ClaimReport:
    """On a cycle the opponent takes every vertex: differential is -n."""
    rep = ClaimReport("cycle_p2", True)
    rows = [(f"cycle({n})", make("cycle", n), "P2", -n) for n in range(3, 13)]
    _check_rows(rep, rows)
    return rep


def _claim_cycle_union_ge8() -> ClaimReport:
    """Two disjoint 8-cycles: still a P2 win."""
    rep = ClaimReport("cycle_union_ge8", True)
    g = make("cycle", 8).disjoint_union(make("cycle", 8))
    _check_rows(rep, [("cycle(8) + cycle(8)", g, "P2", None)])
    return rep


def _claim_c5_loop_counterexample() -> ClaimReport:
    """Loops break cycle pessimism: a 5-cycle is a P2 win, but adding one
    loop hands the win to P1, and a second loop on an adjacent vertex
    keeps it with P1 (open the edge between the two looped vertices)."""
    rep = ClaimReport("c5_loop_counterexample", True)
    c5 = make("cycle", 5)
    one = c5.add_edge(0, 0)
    two = one.add_edge(1, 1)
    _check_rows(
        rep,
        [
            ("cycle(5)", c5, "P2", None),
            ("cycle(5) + loop", one, "P1", None),
            ("cycle(5) + adjacent loops", two, "P1", None),
        ],
    )
    return rep


def _claim_balloon_even_tie() -> ClaimReport:
    """Opening the center edge and mirroring holds even balloon paths to
    at least a tie.

    The length-2 balloon path is excluded: its halves are single looped
    vertices (incident count one), so the mirror's no-instant-capture
    hypothesis fails, and the position is optimally a loss for the
    opener; it is reported for reference.
    """
    rep = ClaimReport("balloon_even_tie", True)
    for n in (4, 6, 8, 10):
        g, pol = balloon_mirror(n)
        if canonical.canonical_key(g) != canonical.canonical_key(make("balloon_path", n)):
            rep.fail(f"balloon_mirror({n}) is not balloon_path({n})")
            continue
        v = best_response_value(g, pol, "P1")
        if v >= 0:
            rep.lines.append(f"balloon_path({n}): mirror forces differential {v} >= 0")
        else:
            rep.fail(f"balloon_path({n}): mirror best-response {v} < 0")
    g2, pol2 = balloon_mirror(2)
    v2 = best_response_value(g2, pol2, "P1")
    d2 = solve(make("balloon_path", 2)).differential
    rep.lines.append(
        f"note: balloon_path(2) excluded; mirror yields {v2}, optimal is {d2} "
        "(halves have incident count one, so the opponent captures immediately)"
    )
    return rep


def require_min_incident(g: LoopyMultigraph, k: int = 2) -> None:
    """Reject a base whose minimum incident count is below ``k``."""
    for v in g.vertices:
        if g.incident_count(v) < k:
            raise ValueError(f"vertex {v} has incident count {g.incident_count(v)} < {k}")


def _claim_doubled_tie() -> ClaimReport:
    """Two copies of a min-incident-2 base joined by an edge: the opener
    mirrors to at least a tie."""
    rep = ClaimReport("doubled_tie", True)
    bases = [
        ("cycle(3)", make("cycle", 3)),
        ("cycle(4)", make("cycle", 4)),
        ("cycle(5)", make("cycle", 5)),
        ("complete(4)", make("complete", 4)),
        ("cycle(6)", make("cycle", 6)),
        ("complete_bipartite(2, 3)", make("complete_bipartite", 2, 3)),
        ("wheel(4)", make("wheel", 4)),
        ("prism(3)", make("prism", 3)),
        ("balloon_path(2)", make("balloon_path", 2)),
        ("balloon_path(3)", make("balloon_path", 3)),
        ("loopy_star(2)", make("loopy_star", 2)),
    ]
    for label, base in bases:
        try:
            require_min_incident(base, 2)
        except ValueError as exc:
            rep.fail(f"base {label} rejected: {exc}")
            continue
        g, pol = mirror_policy(base)
        v = best_response_value(g, pol, "P1")
        if v >= 0:
            rep.lines.append(f"doubled {label}: mirror forces differential {v} >= 0")
        else:
            rep.fail(f"doubled {label}: mirror best-response {v} < 0")
    try:
        require_min_incident(make("complete", 2), 2)
        rep.fail("complete(2) base was not rejected")
    except ValueError:
        rep.lines.append("complete(2) base rejected (minimum incident count 1), as required")
    return rep


def _claim_quadrant_mirror() -> ClaimReport:
    """Quadrant mirroring on complete graphs of 4n vertices, evaluated
    exactly against a perfect opponent.  Experimental: the report checks
    only consistency with the optimal values (the defender locked to any
    policy can never concede less than optimal play allows)."""
    rep = ClaimReport("quadrant_mirror", True)
    for n in (1, 2):
        g = make("complete", 4 * n)
        pol = quadrant_mirror_policy(n)
        v = best_response_value(g, pol, "P2")
        d = solve(g).differential
        if v < d:
            rep.fail(f"complete({4 * n}): best-response {v} below optimal {d} (impossible)")
            continue
        verdict = "matches optimal play" if v == d else f"concedes {v - d} beyond optimal"
        rep.lines.append(f"complete({4 * n}): quadrant mirror best-response {v}, optimal {d}; {verdict}")
    return rep


def _claim_loopy_cycle_pattern() -> ClaimReport:
    """Observed winners for cycles with consecutive loops; reported as
    data, with only internal consistency asserted."""
    rep = ClaimReport("loopy_cycle_pattern", True)
    opts = _shared_opts()
    for k in (1, 2, 3):
        results = []
        for n in range(4, 11):
            gv = solve(make("loopy_cycle", n, k), opts)
            if abs(gv.differential) > n or (gv.differential - n) % 2 != 0:
                rep.fail(f"loopy_cycle({n}, {k}): inconsistent differential {gv.differential}")
            results.append(f"n={n}: {gv.winner} ({gv.p1_score}-{gv.p2_score})")
        rep.lines.append(f"k={k}: " + "; ".join(results))
    return rep


CLAIMS = {
    "friendship_alternation": _claim_friendship_alternation,
    "pinwheel_p2": _claim_pinwheel_p2,
    "loopy_star_parity": _claim_loopy_star_parity,
    "double_loopy_p2": _claim_double_loopy_p2,
    "starlike_obs1": _claim_starlike_obs1,
    "starlike_obs2": _claim_starlike_obs2,
    "starlike_obs3": _claim_starlike_obs3,
    "bipartite_star_p1": _claim_bipartite_star_p1,
    "bipartite_two_parity": _claim_bipartite_two_parity,
    "tree_p1": _claim_tree_p1,
    "cycle_p2": _claim_cycle_p2,
    "cycle_union_ge8": _claim_cycle_union_ge8,
    "c5_loop_counterexample": _claim_c5_loop_counterexample,
    "balloon_even_tie": _claim_balloon_even_tie,
    "doubled_tie": _claim_doubled_tie,
    "quadrant_mirror": _claim_quadrant_mirror,
    "loopy_cycle_pattern": _claim_loopy_cycle_pattern,
}


def claim_ids() -> list[str]:
    return list(CLAIMS)


def verify_claim(claim_id: str) -> ClaimReport:
    """Run one registered claim and return its report."""
    try:
        fn = CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(
            f"unknown claim {claim_id!r}; available: {', '.join(CLAIMS)}"
        ) from None
    return fn()


def verify_all() -> list[ClaimReport]:
    return [fn() for fn in CLAIMS.values()]
