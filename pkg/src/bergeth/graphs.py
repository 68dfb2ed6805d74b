"""Simple graphs on 0..n-1 with bitset adjacency, graph6 I/O, named families,
and the exact subroutines every search in this package leans on: chromatic
number, copy counting, homomorphism tests, edge-deletion classes, and a
canonical form for isomorphism rejection.

Everything targets graphs of at most ~15 vertices.  All algorithms are exact
and deterministic; none of them allocate per-vertex objects in inner loops,
adjacency is one int bitmask per vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ContractError, Graph6Error


class Graph:
    """Immutable simple undirected graph.

    Vertices are 0..n-1.  Isolated vertices are significant: a graph is the
    pair (n, edges), not just an edge set.  ``adj[v]`` is the neighbour
    bitmask of v.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v))
        self.n = n
        self.edges = tuple(sorted(norm))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(bin(m).count("1") for m in self.adj))

    def relabel(self, mapping) -> "Graph":
        """New graph with vertex v renamed mapping[v]; mapping is a bijection
        on 0..n-1 given as a sequence."""
        return Graph(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, relabelled 0..k-1 in the
        order supplied."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        if len(pos) != len(vs):
            raise ValueError("duplicate vertices")
        es = [
            (pos[u], pos[v])
            for u, v in self.edges
            if u in pos and v in pos
        ]
        return Graph(len(vs), es)

    def without_edge(self, u: int, v: int) -> "Graph":
        if u > v:
            u, v = v, u
        if (u, v) not in self.edges:
            raise ValueError(f"({u},{v}) is not an edge")
        return Graph(self.n, (e for e in self.edges if e != (u, v)))

    def with_extra_vertex(self, neighbour_mask: int) -> "Graph":
        """Graph on n+1 vertices: vertex n joined to the bitmask's bits."""
        es = list(self.edges)
        m = neighbour_mask
        while m:
            b = m & -m
            m ^= b
            es.append((b.bit_length() - 1, self.n))
        return Graph(self.n + 1, es)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# graph6 (short form, n < 63)

_G6_MIN, _G6_MAX = 63, 126


def encode_graph6(g: Graph) -> str:
    """Encode in graph6 short form.  Bits run column-major over the upper
    triangle: (0,1), (0,2), (1,2), (0,3), ..., packed into 6-bit chunks."""
    if g.n >= 63:
        raise Graph6Error(f"n={g.n} needs the extended form, which is unsupported")
    out = [chr(g.n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.adj[v]
        for u in range(v):
            bits = (bits << 1) | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 short-form line."""
    s = text.rstrip("\n")
    if not s:
        raise Graph6Error("empty input", offset=0)
    c0 = ord(s[0])
    if not (_G6_MIN <= c0 <= _G6_MAX):
        raise Graph6Error(f"invalid length byte {s[0]!r}", offset=0)
    n = c0 - 63
    if n == 63:
        raise Graph6Error("extended form (n >= 63) is unsupported", offset=0)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(s) - 1 < nbytes:
        raise Graph6Error(
            f"truncated: need {nbytes} data bytes for n={n}, got {len(s) - 1}",
            offset=len(s),
        )
    if len(s) - 1 > nbytes:
        raise Graph6Error("trailing data after encoding", offset=1 + nbytes)
    edges = []
    pair_iter = ((u, v) for v in range(1, n) for u in range(v))
    consumed = 0
    for i in range(nbytes):
        c = ord(s[1 + i])
        if not (_G6_MIN <= c <= _G6_MAX):
            raise Graph6Error(f"out-of-range character {s[1 + i]!r}", offset=1 + i)
        val = c - 63
        for k in range(5, -1, -1):
            bit = val >> k & 1
            if consumed < npairs:
                u, v = next(pair_iter)
                if bit:
                    edges.append((u, v))
                consumed += 1
            elif bit:
                raise Graph6Error("nonzero padding bits", offset=1 + i)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# named families

_FAMILY_KINDS = ("fan", "book", "wheel", "genbook", "complete", "cycle", "path")
_FAMILY_ALIASES = {"generalized_book": "genbook", "k": "complete"}
_FAMILY_ARITY = {
    "fan": 1, "book": 1, "wheel": 1, "genbook": 3,
    "complete": 1, "cycle": 1, "path": 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus integer parameters.

    Kinds: fan:k (k triangles sharing a vertex), book:t (t triangles sharing
    an edge), wheel:k (C_k plus a dominating hub), genbook:p,q,m (m copies of
    K_q sharing a fixed p-set), complete:n, cycle:k, path:k (k vertices).
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        kind = _FAMILY_ALIASES.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if kind not in _FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if len(self.params) != _FAMILY_ARITY[kind]:
            raise ValueError(
                f"{kind} takes {_FAMILY_ARITY[kind]} parameter(s), got {len(self.params)}"
            )
        p = self.params
        ok = {
            "fan": lambda: p[0] >= 1,
            "book": lambda: p[0] >= 1,
            "wheel": lambda: p[0] >= 3,
            "genbook": lambda: 1 <= p[0] < p[1] and p[2] >= 1,
            "complete": lambda: p[0] >= 1,
            "cycle": lambda: p[0] >= 3,
            "path": lambda: p[0] >= 1,
        }[kind]()
        if not ok:
            raise ValueError(f"parameters {p} out of range for {kind}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse CLI strings like 'fan:3' or 'genbook:2,4,5'."""
        kind, _, rest = text.partition(":")
        kind = kind.strip().lower()
        if not rest:
            raise ValueError(f"missing parameters in family spec {text!r}")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ValueError(f"non-integer parameter in family spec {text!r}") from None
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def make_family(spec: FamilySpec) -> Graph:
    """Construct the named family member.

    fan:k has 2k+1 vertices (hub 0) and 3k edges; book:t has t+2 vertices
    (spine 0,1) and 2t+1 edges; wheel:k has k+1 vertices (hub k) and 2k
    edges; genbook:p,q,m has p+m(q-p) vertices (shared set 0..p-1).
    """
    kind, p = spec.kind, spec.params
    if kind == "fan":
        k = p[0]
        es = []
        for i in range(k):
            a, b = 2 * i + 1, 2 * i + 2
            es += [(0, a), (0, b), (a, b)]
        return Graph(2 * k + 1, es)
    if kind == "book":
        t = p[0]
        es = [(0, 1)]
        for i in range(t):
            page = 2 + i
            es += [(0, page), (1, page)]
        return Graph(t + 2, es)
    if kind == "wheel":
        k = p[0]
        es = [(i, (i + 1) % k) for i in range(k)]
        es += [(i, k) for i in range(k)]
        return Graph(k + 1, es)
    if kind == "genbook":
        pp, q, m = p
        shared = list(range(pp))
        es = list(itertools.combinations(shared, 2))
        nxt = pp
        for _ in range(m):
            block = shared + list(range(nxt, nxt + q - pp))
            nxt += q - pp
            es += [e for e in itertools.combinations(sorted(block), 2) if e not in es]
        return Graph(pp + m * (q - pp), set(es))
    if kind == "complete":
        nn = p[0]
        return Graph(nn, itertools.combinations(range(nn), 2))
    if kind == "cycle":
        k = p[0]
        return Graph(k, [(i, (i + 1) % k) for i in range(k)])
    if kind == "path":
        k = p[0]
        return Graph(k, [(i, i + 1) for i in range(k - 1)])
    raise AssertionError(kind)


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


# ---------------------------------------------------------------------------
# connectivity, bipartiteness

def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = [s]
        while frontier:
            v = frontier.pop()
            m = g.adj[v] & ~comp
            while m:
                b = m & -m
                m ^= b
                comp |= b
                frontier.append(b.bit_length() - 1)
        seen |= comp
        comps.append([v for v in range(g.n) if comp >> v & 1])
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            m = g.adj[v]
            while m:
                b = m & -m
                m ^= b
                w = b.bit_length() - 1
                if colour[w] == -1:
                    colour[w] = colour[v] ^ 1
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# embedding searches: copies, automorphisms, homomorphisms

def _search_order(h: Graph):
    """Order H's vertices so each one (after the first) has as many already
    ordered neighbours as possible; returns (order, reqs) where reqs[i] lists
    the positions j < i adjacent to order[i]."""
    n = h.n
    degs = [bin(m).count("1") for m in h.adj]
    order: list[int] = []
    placed_mask = 0
    for _ in range(n):
        best_v = -1
        best_key = None
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            anchored = bin(h.adj[v] & placed_mask).count("1")
            key = (anchored, degs[v], -v)
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        order.append(best_v)
        placed_mask |= 1 << best_v
    reqs = []
    for i, v in enumerate(order):
        reqs.append([j for j in range(i) if h.adj[v] >> order[j] & 1])
    return order, reqs


def count_embeddings(h: Graph, g: Graph, early_stop: bool = False) -> int:
    """Number of injective maps V(H) -> V(G) sending every H-edge to a
    G-edge.  With early_stop, returns 1 as soon as one exists."""
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    order, reqs = _search_order(h)
    gadj = g.adj
    full = (1 << g.n) - 1
    images = [0] * h.n
    count = 0

    def rec(i: int, used: int) -> bool:
        nonlocal count
        if i == h.n:
            count += 1
            return early_stop
        cand = full
        for j in reqs[i]:
            cand &= gadj[images[j]]
        cand &= ~used
        while cand:
            b = cand & -cand
            cand ^= b
            images[i] = b.bit_length() - 1
            if rec(i + 1, used | b):
                return True
        return False

    rec(0, 0)
    return count


def contains_copy(h: Graph, g: Graph) -> bool:
    return count_embeddings(h, g, early_stop=True) > 0


def automorphism_count(h: Graph) -> int:
    return count_embeddings(h, h)


def count_copies(h: Graph, g: Graph) -> int:
    """Number of unlabelled copies of H in G (subgraphs of G isomorphic to
    H): injective edge-preserving maps divided by |Aut(H)|."""
    emb = count_embeddings(h, g)
    if emb == 0:
        return 0
    aut = automorphism_count(h)
    assert emb % aut == 0, (emb, aut)
    return emb // aut


def has_homomorphism(f: Graph, h: Graph) -> bool:
    """True iff a (not necessarily injective) map V(F) -> V(H) carries every
    F-edge to an H-edge; equivalently F embeds in some blow-up of H."""
    if f.n == 0:
        return True
    if h.n == 0:
        return False
    order, reqs = _search_order(f)
    hadj = h.adj
    full = (1 << h.n) - 1
    images = [0] * f.n

    def rec(i: int) -> bool:
        if i == f.n:
            return True
        cand = full
        for j in reqs[i]:
            cand &= hadj[images[j]]
        while cand:
            b = cand & -cand
            cand ^= b
            images[i] = b.bit_length() - 1
            if rec(i + 1):
                return True
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# chromatic number (exact branch and bound)

def _greedy_clique(g: Graph) -> list[int]:
    verts = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    cmask = 0
    for v in verts:
        if g.adj[v] & cmask == cmask:
            clique.append(v)
            cmask |= 1 << v
    return clique


def _dsatur_coloring(g: Graph) -> list[int]:
    n = g.n
    colours = [-1] * n
    neigh_colours = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colours[u] == -1),
            key=lambda u: (bin(neigh_colours[u]).count("1"), g.degree(u), -u),
        )
        c = 0
        while neigh_colours[v] >> c & 1:
            c += 1
        colours[v] = c
        m = g.adj[v]
        while m:
            b = m & -m
            m ^= b
            neigh_colours[b.bit_length() - 1] |= 1 << c
    return colours


def _k_coloring(g: Graph, k: int, clique: list[int]) -> list[int] | None:
    """Proper k-coloring extending clique pre-coloured 0..|clique|-1, or None."""
    if len(clique) > k:
        return None
    n = g.n
    colours = [-1] * n
    for i, v in enumerate(clique):
        colours[v] = i
    rest = sorted(
        (v for v in range(n) if colours[v] == -1),
        key=lambda v: (-g.degree(v), v),
    )

    def rec(idx: int, used: int) -> bool:
        if idx == len(rest):
            return True
        v = rest[idx]
        forbidden = 0
        m = g.adj[v]
        while m:
            b = m & -m
            m ^= b
            c = colours[b.bit_length() - 1]
            if c >= 0:
                forbidden |= 1 << c
        limit = min(k, used + 1)  # at most one brand-new colour, breaks symmetry
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            colours[v] = c
            if rec(idx + 1, max(used, c + 1)):
                return True
        colours[v] = -1
        return False

    if rec(0, len(clique)):
        return colours
    return None


def optimal_coloring(g: Graph) -> list[int]:
    """A proper coloring using chromatic_number(g) colours."""
    if g.n == 0:
        return []
    if not g.edges:
        return [0] * g.n
    clique = _greedy_clique(g)
    greedy = _dsatur_coloring(g)
    ub = max(greedy) + 1
    for k in range(len(clique), ub):
        col = _k_coloring(g, k, clique)
        if col is not None:
            return col
    return greedy


def chromatic_number(g: Graph) -> int:
    col = optimal_coloring(g)
    return max(col) + 1 if col else 0


# ---------------------------------------------------------------------------
# canonical form and isomorphism

def _twin_classes(n: int, adj) -> list[int]:
    """twin[v] = smallest u such that swapping u and v is an automorphism."""
    twin = list(range(n))
    for u in range(n):
        if twin[u] != u:
            continue
        for w in range(u + 1, n):
            if twin[w] != w:
                continue
            off = ~((1 << u) | (1 << w))
            if adj[u] & off == adj[w] & off:
                twin[w] = u
    return twin


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """An ordering of V(G) maximising the column-major adjacency bitstring.

    DFS over placements; at each depth only vertices whose adjacency code to
    the placed prefix is maximal can extend the lexicographically largest
    string, so everything else is pruned, plus twin vertices are
    interchangeable and only tried once.
    """
    n = g.n
    if n == 0:
        return ()
    adj = g.adj
    twin = _twin_classes(n, adj)
    codes = [0] * n
    order: list[int] = []
    trail: list[int] = []
    best_trail: list[int] | None = None
    best_perm: list[int] | None = None
    best_gen = 0

    def rec(unplaced: int, better: bool):
        # better: trail so far is strictly greater than best's prefix.
        # A best update inside a child subtree passes through this node, so
        # the remaining siblings are demoted to plain prefix-equality.
        nonlocal best_trail, best_perm, best_gen
        if unplaced == 0:
            if better or best_trail is None:
                best_trail = trail.copy()
                best_perm = order.copy()
                best_gen += 1
            return
        depth = len(order)
        mx = -1
        cands: list[int] = []
        m = unplaced
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            c = codes[v]
            if c > mx:
                mx, cands = c, [v]
            elif c == mx:
                cands.append(v)
        seen_twins = set()
        for v in cands:
            t = twin[v]
            if t in seen_twins:
                continue
            seen_twins.add(t)
            if best_trail is None or better:
                child_better = True
            else:
                b_at = best_trail[depth]
                if mx < b_at:
                    return  # same code for every candidate here
                child_better = mx > b_at
            order.append(v)
            trail.append(mx)
            av = adj[v]
            rest = unplaced & ~(1 << v)
            mm = rest
            while mm:
                b = mm & -mm
                mm ^= b
                w = b.bit_length() - 1
                codes[w] = (codes[w] << 1) | (av >> w & 1)
            entry_gen = best_gen
            rec(rest, child_better)
            mm = rest
            while mm:
                b = mm & -mm
                mm ^= b
                w = b.bit_length() - 1
                codes[w] >>= 1
            order.pop()
            trail.pop()
            if best_gen != entry_gen:
                better = False

    rec((1 << n) - 1, False)
    assert best_perm is not None
    return tuple(best_perm)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string: equal iff the graphs are isomorphic."""
    perm = canonical_permutation(g)
    mapping = [0] * g.n
    for pos, v in enumerate(perm):
        mapping[v] = pos
    return encode_graph6(g.relabel(mapping))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------------------
# edge deletion classes

def edge_deletion_representatives(f: Graph) -> list[tuple[tuple[int, int], Graph]]:
    """One (deleted edge, resulting graph) pair per isomorphism class of
    F minus a single edge.  Vertices are kept, so the results all have
    F's vertex count."""
    if not f.edges:
        raise ContractError("cannot delete an edge from an edgeless graph")
    reps = []
    seen = set()
    for e in f.edges:
        h = f.without_edge(*e)
        key = canonical_form(h)
        if key not in seen:
            seen.add(key)
            reps.append((e, h))
    return reps


def edge_deletions_up_to_iso(f: Graph) -> list[Graph]:
    return [h for _, h in edge_deletion_representatives(f)]
