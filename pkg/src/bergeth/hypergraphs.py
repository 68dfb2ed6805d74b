"""Hypergraphs, shadow graphs, heavy/light edge profiles, and Berge-copy
detection with verifiable witnesses.

A Berge copy of a graph F in a hypergraph is an injective placement of V(F)
plus an injective assignment of distinct hyperedges to the edges of F, each
hyperedge containing its edge's endpoints.  ``find_berge`` backtracks over
core placements in the shadow graph and keeps a bipartite matching between
core edges and containing hyperedges, so a placement is accepted exactly
when a system of distinct representatives exists.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import ContractError, HypergraphFormatError
from .graphs import Graph


class Hypergraph:
    """Vertices 0..n-1 plus a sequence of hyperedges (vertex sets, size >= 2).

    Repeated hyperedges are allowed and are distinct objects: the Berge
    assignment tells hyperedges apart by index, not by content.  When all
    hyperedges have equal size, ``uniformity`` reports it.
    """

    __slots__ = ("n", "edges", "masks")

    def __init__(self, n: int, hyperedges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = []
        masks = []
        for h in hyperedges:
            vs = tuple(sorted(h))
            if len(set(vs)) != len(vs):
                raise ValueError(f"repeated vertex inside hyperedge {h}")
            if len(vs) < 2:
                raise ValueError(f"hyperedge {h} has fewer than 2 vertices")
            if vs[0] < 0 or vs[-1] >= n:
                raise ValueError(f"hyperedge {h} out of range for n={n}")
            edges.append(vs)
            m = 0
            for v in vs:
                m |= 1 << v
            masks.append(m)
        self.n = n
        self.edges = tuple(edges)
        self.masks = tuple(masks)

    @property
    def uniformity(self) -> int | None:
        sizes = {len(h) for h in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, hyperedges={[list(h) for h in self.edges]})"


# ---------------------------------------------------------------------------
# text format: "n m" then one sorted vertex list per line; '#' comments and
# blank lines ignored

def parse_hypergraph(text: str) -> Hypergraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise HypergraphFormatError("no header line 'n m'")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise HypergraphFormatError("header must be 'n m'", line=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise HypergraphFormatError("header must be two integers", line=lineno) from None
    if len(rows) - 1 != m:
        raise HypergraphFormatError(
            f"expected {m} hyperedge lines, found {len(rows) - 1}", line=lineno
        )
    hyperedges = []
    for lineno, line in rows[1:]:
        try:
            vs = [int(x) for x in line.split()]
        except ValueError:
            raise HypergraphFormatError("non-integer vertex", line=lineno) from None
        try:
            hyperedges.append(vs)
            Hypergraph(n, [vs])
        except ValueError as exc:
            raise HypergraphFormatError(str(exc), line=lineno) from None
    return Hypergraph(n, hyperedges)


def format_hypergraph(hg: Hypergraph) -> str:
    lines = [f"{hg.n} {len(hg.edges)}"]
    lines += [" ".join(str(v) for v in h) for h in hg.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# shadow graph and heaviness

def shadow_graph(hg: Hypergraph) -> Graph:
    """Graph on the same vertices; u~v iff some hyperedge contains both."""
    pairs = set()
    for h in hg.edges:
        pairs.update(itertools.combinations(h, 2))
    return Graph(hg.n, pairs)


def edge_multiplicity(hg: Hypergraph, u: int, v: int) -> int:
    """Number of hyperedges containing both u and v."""
    if u == v:
        raise ValueError("multiplicity needs two distinct vertices")
    if not (0 <= u < hg.n and 0 <= v < hg.n):
        raise ValueError(f"vertex out of range for n={hg.n}")
    need = (1 << u) | (1 << v)
    return sum(1 for m in hg.masks if m & need == need)


def _pair_multiplicities(hg: Hypergraph) -> dict[tuple[int, int], int]:
    mult: dict[tuple[int, int], int] = {}
    for h in hg.edges:
        for p in itertools.combinations(h, 2):
            mult[p] = mult.get(p, 0) + 1
    return mult


@dataclass(frozen=True)
class HeavinessProfile:
    """Classification of every shadow edge as t-heavy (multiplicity >= t) or
    t-light (multiplicity < t)."""

    n: int
    t: int
    multiplicity: dict[tuple[int, int], int]

    def is_heavy(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return self.multiplicity.get((u, v), 0) >= self.t

    @property
    def heavy_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(e for e, m in self.multiplicity.items() if m >= self.t))

    @property
    def light_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(e for e, m in self.multiplicity.items() if m < self.t))

    def heavy_graph(self) -> Graph:
        return Graph(self.n, self.heavy_edges)

    def light_graph(self) -> Graph:
        return Graph(self.n, self.light_edges)


def heaviness_profile(hg: Hypergraph, t: int) -> HeavinessProfile:
    if t < 1:
        raise ValueError("threshold t must be >= 1")
    return HeavinessProfile(hg.n, t, _pair_multiplicities(hg))


def light_subgraph(hg: Hypergraph, t: int) -> Graph:
    return heaviness_profile(hg, t).light_graph()


def heavy_subgraph(hg: Hypergraph, t: int) -> Graph:
    return heaviness_profile(hg, t).heavy_graph()


# ---------------------------------------------------------------------------
# Berge witnesses

@dataclass(frozen=True)
class BergeWitness:
    """core_map[v] is the host vertex of core vertex v; assignment pairs each
    core edge (u, v), u < v, with the index of its hyperedge."""

    core_map: tuple[int, ...]
    assignment: tuple[tuple[tuple[int, int], int], ...]

    @property
    def assignment_map(self) -> dict[tuple[int, int], int]:
        return dict(self.assignment)

    def to_json(self) -> dict:
        return {
            "core_map": list(self.core_map),
            "assignment": [[list(e), i] for e, i in self.assignment],
        }


def verify_witness(w: BergeWitness, f: Graph, hg: Hypergraph) -> bool:
    """Check both witness invariants against F and the hypergraph.

    Returns False on structural violations (wrong edges, broken containment,
    repeated hyperedge); raises ValueError when indices are out of range.
    """
    if len(w.core_map) != f.n:
        return False
    for img in w.core_map:
        if not (0 <= img < hg.n):
            raise ValueError(f"core image {img} out of range for n={hg.n}")
    for _, idx in w.assignment:
        if not (0 <= idx < len(hg.edges)):
            raise ValueError(f"hyperedge index {idx} out of range")
    if len(set(w.core_map)) != len(w.core_map):
        return False
    amap = w.assignment_map
    if set(amap) != set(f.edges):
        return False
    used = list(amap.values())
    if len(set(used)) != len(used):
        return False
    for (u, v), idx in amap.items():
        need = (1 << w.core_map[u]) | (1 << w.core_map[v])
        if hg.masks[idx] & need != need:
            return False
    return True


def find_berge(f: Graph, hg: Hypergraph) -> BergeWitness | None:
    """First Berge copy of F in the hypergraph (deterministic branch order),
    or None.  The search is exhaustive: a None is a proof of freeness.

    Core vertices are embedded in descending-degree order into the shadow
    graph; each time a core edge becomes fully placed, the bipartite matching
    of core edges to containing hyperedges is extended by one augmenting
    path, so Hall violations prune the branch immediately.
    """
    nf = f.n
    if nf > hg.n:
        return None
    if not f.edges:
        return BergeWitness(tuple(range(nf)), ())
    if len(f.edges) > len(hg.edges):
        return None

    pair_hypers: dict[tuple[int, int], tuple[int, ...]] = {}
    for idx, h in enumerate(hg.edges):
        for p in itertools.combinations(h, 2):
            pair_hypers.setdefault(p, [])  # type: ignore[arg-type]
            pair_hypers[p].append(idx)  # type: ignore[union-attr]
    shadow_adj = [0] * hg.n
    for (a, b) in pair_hypers:
        shadow_adj[a] |= 1 << b
        shadow_adj[b] |= 1 << a

    deg = [f.degree(v) for v in range(nf)]
    order = sorted(range(nf), key=lambda v: (-deg[v], v))
    k = sum(1 for v in order if deg[v] > 0)
    search_order, isolated = order[:k], order[k:]
    pos = {v: i for i, v in enumerate(search_order)}
    # edges of F keyed (u, v) with u < v; an edge becomes active when its
    # later endpoint (in search order) is placed
    new_edges: list[list[tuple[tuple[int, int], int]]] = [[] for _ in range(k)]
    for u, v in f.edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        new_edges[j].append(((u, v), i))

    images = [-1] * nf
    full = (1 << hg.n) - 1
    match_e2h: dict[tuple[int, int], int] = {}
    match_h2e: dict[int, tuple[int, int]] = {}
    cands: dict[tuple[int, int], tuple[int, ...]] = {}

    def augment(ekey, visited) -> bool:
        for h in cands[ekey]:
            if h in visited:
                continue
            visited.add(h)
            owner = match_h2e.get(h)
            if owner is None or augment(owner, visited):
                match_h2e[h] = ekey
                match_e2h[ekey] = h
                return True
        return False

    def rec(i: int) -> bool:
        if i == k:
            return True
        v = search_order[i]
        cand = full
        m = f.adj[v]
        anchored = False
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if images[u] >= 0:
                anchored = True
                cand &= shadow_adj[images[u]]
        if not anchored:
            cand = full
        used = 0
        for img in images:
            if img >= 0:
                used |= 1 << img
        cand &= ~used
        while cand:
            b = cand & -cand
            cand ^= b
            images[v] = b.bit_length() - 1
            saved = (dict(match_e2h), dict(match_h2e))
            ok = True
            added = []
            for ekey, _ in new_edges[i]:
                a, bb = sorted((images[ekey[0]], images[ekey[1]]))
                cl = pair_hypers.get((a, bb))
                if not cl:
                    ok = False
                    break
                cands[ekey] = tuple(cl)
                added.append(ekey)
                if not augment(ekey, set()):
                    ok = False
                    break
            if ok and rec(i + 1):
                return True
            match_e2h.clear()
            match_e2h.update(saved[0])
            match_h2e.clear()
            match_h2e.update(saved[1])
            for ekey in added:
                cands.pop(ekey, None)
            images[v] = -1
        return False

    if not rec(0):
        return None
    used = {img for img in images if img >= 0}
    free = iter(v for v in range(hg.n) if v not in used)
    for v in isolated:
        images[v] = next(free)
    witness = BergeWitness(
        tuple(images),
        tuple(sorted((e, match_e2h[e]) for e in f.edges)),
    )
    assert verify_witness(witness, f, hg)
    return witness


def is_berge_free(f: Graph, hg: Hypergraph) -> bool:
    return find_berge(f, hg) is None


def extend_heavy(
    f: Graph, fsub: Graph, w: BergeWitness, hg: Hypergraph, t: int
) -> BergeWitness:
    """Extend a Berge witness for a subgraph of F to one for all of F, given
    that every missing edge is t-heavy under the witness's core placement and
    t >= |E(F)|.

    Extension edges are processed in lexicographic order of core pairs; each
    takes the lowest-index unused containing hyperedge.  With fewer than
    |E(F)| hyperedges committed at any point and multiplicity at least t,
    a fresh hyperedge always exists; running out is an internal error.
    """
    if t < len(f.edges):
        raise ContractError(f"need t >= |E(F)| = {len(f.edges)}, got t = {t}")
    if fsub.n != f.n or not set(fsub.edges) <= set(f.edges):
        raise ContractError("Fsub must be a subgraph of F on the same vertex set")
    if not verify_witness(w, fsub, hg):
        raise ContractError("witness is not a valid Berge witness for Fsub")
    extension = sorted(set(f.edges) - set(fsub.edges))
    for u, v in extension:
        a, b = sorted((w.core_map[u], w.core_map[v]))
        if edge_multiplicity(hg, a, b) < t:
            raise ContractError(
                f"extension edge ({u},{v}) maps to ({a},{b}) with multiplicity < t"
            )
    assignment = dict(w.assignment)
    used = set(assignment.values())
    for u, v in extension:
        a, b = sorted((w.core_map[u], w.core_map[v]))
        need = (1 << a) | (1 << b)
        pick = next(
            (i for i, m in enumerate(hg.masks) if m & need == need and i not in used),
            None,
        )
        assert pick is not None, "heavy extension ran out of hyperedges"
        assignment[(u, v)] = pick
        used.add(pick)
    out = BergeWitness(w.core_map, tuple(sorted(assignment.items())))
    assert verify_witness(out, f, hg)
    return out


def sample_subedge_graph(hg: Hypergraph, seed: int) -> Graph:
    """Pick one uniformly random 2-subset inside every hyperedge and return
    the graph of the picked pairs.

    Reproducibility contract: a ``random.Random(seed)`` (Mersenne Twister)
    drives one ``randrange`` per hyperedge, taken in hyperedge order, indexing
    into the lexicographically sorted list of 2-subsets of that hyperedge.
    """
    rng = random.Random(seed)
    picked = set()
    for h in hg.edges:
        pairs = list(itertools.combinations(h, 2))
        picked.add(pairs[rng.randrange(len(pairs))])
    return Graph(hg.n, picked)
