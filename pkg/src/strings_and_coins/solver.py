"""Exact game solving: negamax over the score differential.

The value of a position is the best achievable score differential
(mover's coins minus opponent's) under optimal play.  Recursion follows
the capture rule directly: a capturing move keeps the turn, so its value
is captured + value(successor) with no sign flip; a non-capturing move
hands the turn over, negating the successor value.

Search options layer on top of that definition without changing it:

* ``memo``       -- transposition table keyed by canonical form, so all
                    relabelings of a position share one entry.
* ``pruning``    -- alpha-beta windows (shifted by captures), plus
                    clamping to the remaining-vertex bound |value| <= r.
                    Table entries then carry EXACT/LOWER/UPPER flags in
                    the usual fail-soft sense.
* ``orbit_dedup`` -- expand one move per automorphism orbit.

Any combination yields the same value; only the work differs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import canonical
from .graph import EdgeRef, LoopyMultigraph

EXACT, LOWER, UPPER = 0, 1, 2


class SolveBudgetExceeded(RuntimeError):
    """Raised when a solve outruns its time budget.

    When raised from ``make_table``, ``completed`` holds the rows that
    finished before the abort and ``parameter`` names the row that did not.
    """

    def __init__(self, *args):
        super().__init__(*args)
        self.completed: list[TableRow] = []
        self.parameter: int | None = None


class EmptyPositionError(ValueError):
    """Raised when a move is requested from a position with no edges."""


class ValueConsistencyError(ValueError):
    """A differential that cannot correspond to any final score split."""


class TranspositionTable:
    """Canonical key -> (flag, value) store with optional LRU eviction.

    Entries loaded from a persistent cache are exact by construction and
    are never evicted; ``fresh_exact_items`` yields only entries proven
    during this table's lifetime, which is what gets persisted back.
    """

    def __init__(self, capacity: int | None = None):
        self.capacity = capacity
        self._seed: dict[bytes, int] = {}
        self._store: dict[bytes, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self._store) + len(self._seed)

    def seed(self, entries: dict[bytes, int]) -> None:
        self._seed.update(entries)

    def get(self, key: bytes) -> tuple[int, int] | None:
        v = self._seed.get(key)
        if v is not None:
            return (EXACT, v)
        hit = self._store.get(key)
        if hit is not None and self.capacity is not None:
            # refresh recency under LRU
            del self._store[key]
            self._store[key] = hit
        return hit

    def put(self, key: bytes, flag: int, value: int) -> None:
        if key in self._seed:
            return
        if key in self._store:
            del self._store[key]
        elif self.capacity is not None and len(self._store) >= self.capacity:
            oldest = next(iter(self._store))
            del self._store[oldest]
        self._store[key] = (flag, value)

    def insert_or_get(self, key: bytes, flag: int, value: int) -> tuple[int, int]:
        """Atomic publish: keep and return the existing entry if present."""
        cur = self.get(key)
        if cur is not None:
            return cur
        self.put(key, flag, value)
        return (flag, value)

    def fresh_exact_items(self) -> list[tuple[bytes, int]]:
        return [(k, v) for k, (f, v) in self._store.items() if f == EXACT]


@dataclass
class SolveOptions:
    """Search configuration; defaults give the fast exact solver."""

    pruning: bool = True
    memo: bool = True
    orbit_dedup: bool = False
    memo_capacity: int | None = None
    table: TranspositionTable | None = None
    time_budget: float | None = None


@dataclass
class SearchStats:
    nodes: int = 0
    memo_hits: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class GameValue:
    """Solved outcome of a position with the mover counted as player 1."""

    differential: int
    p1_score: int
    p2_score: int
    winner: str  # "P1" | "P2" | "Tie"
    stats: SearchStats = field(compare=False, default_factory=SearchStats)


def scores_from_value(vertex_count: int, differential: int) -> tuple[int, int]:
    """Split a differential into (p1, p2) scores summing to the vertex count."""
    if abs(differential) > vertex_count or (differential - vertex_count) % 2 != 0:
        raise ValueConsistencyError(
            f"differential {differential} impossible on {vertex_count} vertices"
        )
    p1 = (vertex_count + differential) // 2
    return p1, vertex_count - p1


def _winner(differential: int) -> str:
    if differential > 0:
        return "P1"
    if differential < 0:
        return "P2"
    return "Tie"


class _Searcher:
    def __init__(self, opts: SolveOptions):
        self.opts = opts
        if opts.table is not None:
            self.table = opts.table
        else:
            self.table = TranspositionTable(opts.memo_capacity) if opts.memo else None
        self.stats = SearchStats()
        self._deadline: float | None = None
        self._tick = 0

    def start_clock(self) -> None:
        if self.opts.time_budget is not None:
            self._deadline = time.monotonic() + self.opts.time_budget

    def _check_budget(self) -> None:
        self._tick += 1
        if self._deadline is not None and self._tick % 1024 == 0:
            if time.monotonic() > self._deadline:
                raise SolveBudgetExceeded(f"time budget {self.opts.time_budget}s exceeded")

    def _ordered_children(self, g: LoopyMultigraph) -> list[tuple[int, LoopyMultigraph]]:
        if self.opts.orbit_dedup:
            pairs = canonical.edge_orbit_representatives(g)
        else:
            pairs = sorted(g._mult)
        kids = [g._child(a, b) for (a, b) in pairs]
        # captures first (largest first), then simpler successors
        kids.sort(key=lambda cs: (-cs[0], cs[1].edge_count))
        return kids

    def search(self, g: LoopyMultigraph, alpha: int, beta: int) -> int:
        if g.edge_count == 0:
            return 0
        self._check_budget()
        r = g.vertex_count
        pruning = self.opts.pruning
        if pruning:
            # every remaining vertex goes to someone: |true value| <= r
            if r <= alpha:
                return r
            if -r >= beta:
                return -r
            a = alpha if alpha > -r else -r
            b = beta if beta < r else r
        else:
            a, b = -r, r
        table = self.table
        if table is not None:
            key = canonical.canonical_key(g)
            hit = table.get(key)
            if hit is not None:
                flag, v = hit
                if flag == EXACT:
                    self.stats.memo_hits += 1
                    return v
                if pruning:
                    if flag == LOWER:
                        if v >= b:
                            self.stats.memo_hits += 1
                            return v
                        if v > a:
                            a = v
                    else:
                        if v <= a:
                            self.stats.memo_hits += 1
                            return v
                        if v < b:
                            b = v
        else:
            key = b""
        self.stats.nodes += 1
        a0 = a
        best = -(1 << 30)
        for captured, succ in self._ordered_children(g):
            if captured:
                v = captured + self.search(succ, a - captured, b - captured)
            else:
                v = -self.search(succ, -b, -a)
            if v > best:
                best = v
                if v > a:
                    a = v
                    if pruning and a >= b:
                        break
        if table is not None:
            # a fail-low value is an upper bound and a fail-high value a
            # lower bound; meeting the vertex-count bound |v| <= r from
            # either side pins the value exactly
            if not pruning or (a0 < best < b) or best == -r or best == r:
                flag = EXACT
            elif best <= a0:
                flag = UPPER
            else:
                flag = LOWER
            table.put(key, flag, best)
        return best


def solve(g: LoopyMultigraph, opts: SolveOptions | None = None) -> GameValue:
    """Solve a position exactly; the player to move is player 1."""
    opts = opts or SolveOptions()
    searcher = _Searcher(opts)
    searcher.start_clock()
    t0 = time.perf_counter()
    n = g.vertex_count
    d = searcher.search(g, -n, n) if n else 0
    searcher.stats.elapsed = time.perf_counter() - t0
    p1, p2 = scores_from_value(n, d)
    return GameValue(d, p1, p2, _winner(d), searcher.stats)


def best_move(g: LoopyMultigraph, opts: SolveOptions | None = None) -> tuple[EdgeRef, GameValue]:
    """An optimal move and the position's value.

    Among optimal moves, ties break toward the lexicographically least
    canonical key of the successor, so the choice is label-independent.
    """
    if g.edge_count == 0:
        raise EmptyPositionError("no moves: position has no edges")
    opts = opts or SolveOptions()
    searcher = _Searcher(opts)
    searcher.start_clock()
    t0 = time.perf_counter()
    n = g.vertex_count
    best_v = None
    best_ref = None
    best_key = b""
    for ref in g.distinct_moves(orbit_dedup=opts.orbit_dedup):
        captured, succ = g._child(ref.u, ref.v)
        if captured:
            v = captured + searcher.search(succ, -n, n)
        else:
            v = -searcher.search(succ, -n, n)
        key = canonical.canonical_key(succ)
        if best_v is None or v > best_v or (v == best_v and key < best_key):
            best_v, best_ref, best_key = v, ref, key
    searcher.stats.elapsed = time.perf_counter() - t0
    p1, p2 = scores_from_value(n, best_v)
    return best_ref, GameValue(best_v, p1, p2, _winner(best_v), searcher.stats)


@dataclass(frozen=True)
class TableRow:
    parameter: int
    winner: str
    p1_score: int
    p2_score: int
    differential: int
    nodes: int
    memo_hits: int
    elapsed: float


def make_table(
    family: str,
    start: int,
    stop: int,
    opts: SolveOptions | None = None,
    fixed: tuple[int, ...] = (),
) -> list[TableRow]:
    """Solve a family over a parameter range, sharing one table.

    The range varies the family's first parameter from ``start`` to
    ``stop`` inclusive; ``fixed`` supplies any remaining parameters.
    Positions recur across rows, so rows share a transposition table.
    """
    from .families import generate, parse_family

    opts = opts or SolveOptions()
    if opts.table is None and opts.memo:
        opts = SolveOptions(
            pruning=opts.pruning,
            memo=True,
            orbit_dedup=opts.orbit_dedup,
            memo_capacity=opts.memo_capacity,
            table=TranspositionTable(opts.memo_capacity),
            time_budget=opts.time_budget,
        )
    rows = []
    for p in range(start, stop + 1):
        spec = parse_family(family, (p,) + fixed)
        try:
            gv = solve(generate(spec), opts)
        except SolveBudgetExceeded as exc:
            exc.completed = rows
            exc.parameter = p
            raise
        rows.append(
            TableRow(
                p,
                gv.winner,
                gv.p1_score,
                gv.p2_score,
                gv.differential,
                gv.stats.nodes,
                gv.stats.memo_hits,
                gv.stats.elapsed,
            )
        )
    return rows
