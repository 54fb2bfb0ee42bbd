"""Canonical forms for positions, isomorphism testing, and edge orbits.

Two positions that differ only by vertex relabeling are the same game, so
search memoizes on a canonical key: a byte string that is identical for
isomorphic graphs and distinct otherwise.

The key is computed per connected component by individualization and
refinement.  Color refinement (degree/multiplicity-aware, loops folded
into the initial colors) partitions the vertices; while some cell has
more than one vertex, the first largest such cell is split by trying each
member in front, and the lexicographically least serialization over all
resulting discrete labelings wins.  Automorphisms discovered along the
way (two labelings with equal serializations) prune branches that can
only repeat earlier work, which is what keeps highly symmetric graphs
like complete graphs tractable.

Component forms are combined by sorting them and relabeling into one
vertex range, so a disjoint union's key is a pure function of the
component keys.  Two content-addressed caches (component form and whole
graph) make repeated positions cheap during search.
"""

from __future__ import annotations

import struct

from .graph import EdgeRef, LoopyMultigraph

_COMP_CACHE_CAP = 1 << 21
_GRAPH_CACHE_CAP = 1 << 21

_comp_cache: dict[tuple, tuple] = {}
_graph_cache: dict[tuple, bytes] = {}

_MARK = 1 << 20  # multiplicity bump used to single out an edge class


def clear_caches() -> None:
    _comp_cache.clear()
    _graph_cache.clear()


# -- color refinement --------------------------------------------------------


def _refine(n: int, adj: list[dict[int, int]], colors: list[int]) -> list[int]:
    """Iterate multiplicity-aware neighborhood hashing to a fixpoint.

    Colors are dense ranks whose order is determined by sorted signatures,
    so the resulting partition is canonical given the input coloring.
    """
    ncells = len(set(colors))
    while True:
        sigs = []
        for i in range(n):
            row = sorted((colors[j], m) for j, m in adj[i].items())
            sigs.append((colors[i], tuple(row)))
        order = sorted(set(sigs))
        if len(order) == ncells:
            return colors
        rank = {s: r for r, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        ncells = len(order)


def color_refine(g: LoopyMultigraph, partition: list[list[int]] | None = None) -> list[list[int]]:
    """Refine a vertex partition to equitable cells; coarsest by default.

    Returns the stable ordered partition as lists of vertex ids.  Never
    splits vertices that some automorphism respecting the input partition
    can exchange.
    """
    verts = g.vertices
    n = len(verts)
    if n == 0:
        return []
    idx = {v: i for i, v in enumerate(verts)}
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    loops = [0] * n
    for (a, b), m in g.edge_pairs():
        if a == b:
            loops[idx[a]] = m
        else:
            adj[idx[a]][idx[b]] = m
            adj[idx[b]][idx[a]] = m
    if partition is None:
        init = [(g.incident_count(v), loops[idx[v]]) for v in verts]
    else:
        cell_of = {}
        for ci, cell in enumerate(partition):
            for v in cell:
                cell_of[v] = ci
        init = [(cell_of[v], g.incident_count(v), loops[idx[v]]) for v in verts]
    order = sorted(set(init))
    rank = {s: r for r, s in enumerate(order)}
    colors = _refine(n, adj, [rank[s] for s in init])
    cells: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        cells.setdefault(c, []).append(verts[i])
    return [sorted(cells[c]) for c in sorted(cells)]


# -- per-component canonical search ------------------------------------------


def _serialize(n: int, adj: list[dict[int, int]], loops: list[int], label: list[int]) -> tuple:
    out = []
    for i in range(n):
        li = label[i]
        if loops[i]:
            out.append((li, li, loops[i]))
        for j, m in adj[i].items():
            if i < j:
                la, lb = label[i], label[j]
                out.append((la, lb, m) if la < lb else ((lb, la, m)))
    out.sort()
    return tuple(out)


def _canon_search(n: int, triples: tuple[tuple[int, int, int], ...]) -> tuple:
    """Lex-least serialization of one connected component (local labels 0..n-1)."""
    if n == 1:
        return triples  # a single vertex carries only loops, already canonical
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    loops = [0] * n
    for a, b, m in triples:
        if a == b:
            loops[a] = m
        else:
            adj[a][b] = m
            adj[b][a] = m
    init = [(sum(adj[i].values()) + loops[i], loops[i]) for i in range(n)]
    order = sorted(set(init))
    rank = {s: r for r, s in enumerate(order)}
    colors = _refine(n, adj, [rank[s] for s in init])

    best_serial: list = [None]
    best_label: list = [None]
    inv_best: list = [None]
    autos: list[tuple[int, ...]] = []

    def individualize(cols: list[int], v: int) -> list[int]:
        sigs = [(c, 1) for c in cols]
        sigs[v] = (cols[v], 0)
        order = sorted(set(sigs))
        rank = {s: r for r, s in enumerate(order)}
        return _refine(n, adj, [rank[s] for s in sigs])

    def at_leaf(cols: list[int]) -> None:
        serial = _serialize(n, adj, loops, cols)
        bs = best_serial[0]
        if bs is None or serial < bs:
            best_serial[0] = serial
            best_label[0] = cols[:]
            inv = [0] * n
            for i, c in enumerate(cols):
                inv[c] = i
            inv_best[0] = inv
        elif serial == bs:
            inv = inv_best[0]
            perm = tuple(inv[c] for c in cols)  # maps this labeling onto best
            if any(perm[i] != i for i in range(n)) and len(autos) < 64:
                autos.append(perm)

    def same_orbit_fixing(prefix: tuple[int, ...], v: int, tried: list[int]) -> bool:
        if not autos or not tried:
            return False
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        used = False
        for perm in autos:
            ok = True
            for p in prefix:
                if perm[p] != p:
                    ok = False
                    break
            if not ok:
                continue
            used = True
            for i in range(n):
                ra, rb = find(i), find(perm[i])
                if ra != rb:
                    parent[ra] = rb
        if not used:
            return False
        rv = find(v)
        return any(find(w) == rv for w in tried)

    def rec(cols: list[int], prefix: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(cols):
            cells.setdefault(c, []).append(i)
        if len(cells) == n:
            at_leaf(cols)
            return
        # first largest non-singleton cell: max size, ties to lowest color
        target_color = -1
        target_size = 1
        for c in sorted(cells):
            sz = len(cells[c])
            if sz > target_size:
                target_size = sz
                target_color = c
        members = cells[target_color]
        tried: list[int] = []
        for v in members:
            if same_orbit_fixing(prefix, v, tried):
                continue
            tried.append(v)
            rec(individualize(cols, v), prefix + (v,))

    rec(colors, ())
    return best_serial[0]


def _component_canon(n: int, triples: tuple) -> tuple[int, tuple]:
    key = (n, triples)
    r = _comp_cache.get(key)
    if r is None:
        r = _canon_search(n, triples)
        if len(_comp_cache) >= _COMP_CACHE_CAP:
            _comp_cache.clear()
        _comp_cache[key] = r
    return (n, r)


# -- whole-graph keys ----------------------------------------------------------


def _component_local_triples(g: LoopyMultigraph) -> list[tuple[int, tuple]]:
    """Each component as (size, sorted local (a, b, mult) triples)."""
    comps = g.components()
    which: dict[int, int] = {}
    local: dict[int, int] = {}
    for ci, comp in enumerate(comps):
        for li, v in enumerate(comp):
            which[v] = ci
            local[v] = li
    buckets: list[list[tuple[int, int, int]]] = [[] for _ in comps]
    for (a, b), m in g._mult.items():
        buckets[which[a]].append((local[a], local[b], m))
    out = []
    for ci, comp in enumerate(comps):
        buckets[ci].sort()
        out.append((len(comp), tuple(buckets[ci])))
    return out


def _combine_forms(forms: list[tuple[int, tuple]]) -> bytes:
    forms = sorted(forms)
    total = sum(n for n, _ in forms)
    parts = [struct.pack("<H", total)]
    offset = 0
    merged = []
    for n, triples in forms:
        for a, b, m in triples:
            merged.append((a + offset, b + offset, m))
        offset += n
    merged.sort()
    for a, b, m in merged:
        parts.append(struct.pack("<HHH", a, b, m))
    return b"".join(parts)


def canonical_key(g: LoopyMultigraph) -> bytes:
    """Byte key equal for isomorphic positions, distinct otherwise.

    Layout: little-endian u16 vertex count, then sorted (u16 u, u16 v,
    u16 multiplicity) triples over canonical labels; loops appear as
    (v, v, multiplicity).
    """
    if g._canon is not None:
        return g._canon
    sig = g.signature()
    key = _graph_cache.get(sig)
    if key is None:
        forms = [_component_canon(n, t) for n, t in _component_local_triples(g)]
        key = _combine_forms(forms)
        if len(_graph_cache) >= _GRAPH_CACHE_CAP:
            _graph_cache.clear()
        _graph_cache[sig] = key
    g._canon = key
    return key


def unpack_key(key: bytes) -> tuple[int, list[tuple[int, int, int]]]:
    """Inverse of the key layout: (vertex count, sorted edge triples)."""
    if len(key) < 2 or (len(key) - 2) % 6 != 0:
        raise ValueError("malformed canonical key")
    (n,) = struct.unpack_from("<H", key, 0)
    triples = []
    for off in range(2, len(key), 6):
        triples.append(struct.unpack_from("<HHH", key, off))
    return n, triples


def combine_component_keys(keys: list[bytes]) -> bytes:
    """Key of the disjoint union of the keyed graphs, in any order.

    Inputs may themselves be keys of disconnected graphs; each is split
    back into components so the union's component ordering matches what
    ``canonical_key`` would produce on the assembled graph.
    """
    forms = []
    for k in keys:
        g = graph_from_key(k)
        forms.extend(_component_canon(n, t) for n, t in _component_local_triples(g))
    return _combine_forms(forms)


def graph_from_key(key: bytes) -> LoopyMultigraph:
    """Rebuild a representative position from a canonical key."""
    _, triples = unpack_key(key)
    edges = []
    for a, b, m in triples:
        edges.extend([(a, b)] * m)
    return LoopyMultigraph.from_edges(edges)


# -- edge orbits ---------------------------------------------------------------


def edge_orbit_representatives(g: LoopyMultigraph) -> list[EdgeRef]:
    """One move per automorphism orbit of edge classes, sorted.

    An edge class is singled out by bumping its multiplicity far beyond
    any natural value; two classes lie in one orbit exactly when their
    marked graphs are isomorphic, i.e. share a canonical form.
    """
    pairs = sorted(g._mult)
    if len(pairs) <= 1:
        return [EdgeRef(a, b) for (a, b) in pairs]
    comp_data = _component_local_triples(g)
    forms = [_component_canon(n, t) for n, t in comp_data]
    comps = g.components()
    which: dict[int, int] = {}
    local: dict[int, int] = {}
    for ci, comp in enumerate(comps):
        for li, v in enumerate(comp):
            which[v] = ci
            local[v] = li
    reps: dict[tuple, tuple[int, int]] = {}
    for (a, b) in pairs:
        ci = which[a]
        n, triples = comp_data[ci]
        la, lb = local[a], local[b]
        if la > lb:
            la, lb = lb, la
        marked = tuple(
            (x, y, m + _MARK) if (x, y) == (la, lb) else (x, y, m) for x, y, m in triples
        )
        mform = _component_canon(n, marked)
        ident = tuple(sorted(forms[:ci] + [mform] + forms[ci + 1 :]))
        if ident not in reps:
            reps[ident] = (a, b)
    return [EdgeRef(a, b) for (a, b) in sorted(reps.values())]


# -- independent isomorphism oracle --------------------------------------------


def are_isomorphic(g1: LoopyMultigraph, g2: LoopyMultigraph) -> bool:
    """Backtracking vertex-map search, written independently of the
    canonical-form machinery so the two can cross-check each other."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False

    def profile(g: LoopyMultigraph, v: int) -> tuple[int, int]:
        return (g.incident_count(v), g.loop_multiplicity(v))

    v1 = g1.vertices
    v2 = g2.vertices
    p1 = sorted(profile(g1, v) for v in v1)
    p2 = sorted(profile(g2, v) for v in v2)
    if p1 != p2:
        return False

    # most-constrained-first: rare profiles then high degree
    freq: dict[tuple[int, int], int] = {}
    for v in v1:
        pr = profile(g1, v)
        freq[pr] = freq.get(pr, 0) + 1
    order = sorted(v1, key=lambda v: (freq[profile(g1, v)], -g1.incident_count(v), v))
    cands = {v: [w for w in v2 if profile(g2, w) == profile(g1, v)] for v in order}

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in cands[v]:
            if w in used:
                continue
            ok = True
            for x, y in mapping.items():
                if g1.multiplicity(v, x) != g2.multiplicity(w, y):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if place(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return place(0)
