"""Exact two-colour Ramsey numbers for small graphs by pruned exhaustive
edge-colouring search, plus the disjoint-clique lower-bound colouring and
p-goodness checks.

The search colours the pairs of K_n in lexicographic order and rejects a
colour the moment it completes a monochromatic copy of the watched graph
through the just-coloured pair, so every surviving leaf is a witness and an
empty tree is a proof.  The first vertex's incident colour pattern is
canonicalised (blues before reds), which quotients out permutations of the
remaining vertices at no cost to completeness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import DEFAULT_BUDGET, BudgetExhausted, SearchBudget
from .errors import ContractError
from .graphs import Graph, complete_graph, is_connected

BLUE, RED = 0, 1
_COLOUR_NAMES = ("blue", "red")


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


class TwoColoring:
    """A total blue/red colouring of the pairs of 0..n-1."""

    __slots__ = ("n", "colors")

    def __init__(self, n: int, colors):
        self.n = n
        self.colors = tuple(colors)
        if len(self.colors) != n * (n - 1) // 2:
            raise ValueError("need one colour per pair")
        if any(c not in (BLUE, RED) for c in self.colors):
            raise ValueError("colours are 0 (blue) or 1 (red)")

    def _index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        if not (0 <= u < v < self.n):
            raise ValueError(f"not a pair: ({u},{v})")
        return u * (2 * self.n - u - 1) // 2 + (v - u - 1)

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self._index(u, v)]

    def monochromatic_graph(self, colour: int) -> Graph:
        es = [p for p, c in zip(_pairs(self.n), self.colors) if c == colour]
        return Graph(self.n, es)

    def blue_graph(self) -> Graph:
        return self.monochromatic_graph(BLUE)

    def red_graph(self) -> Graph:
        return self.monochromatic_graph(RED)

    def to_text(self) -> str:
        lines = [str(self.n)]
        for (u, v), c in zip(_pairs(self.n), self.colors):
            lines.append(f"{u} {v} {_COLOUR_NAMES[c]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TwoColoring":
        rows = [r.strip() for r in text.splitlines() if r.strip()]
        if not rows:
            raise ValueError("empty colouring")
        n = int(rows[0])
        seen = {}
        for row in rows[1:]:
            u_s, v_s, name = row.split()
            u, v = int(u_s), int(v_s)
            if u > v:
                u, v = v, u
            seen[(u, v)] = _COLOUR_NAMES.index(name)
        expected = _pairs(n)
        if set(seen) != set(expected):
            raise ValueError("colouring must cover every pair exactly once")
        return cls(n, [seen[p] for p in expected])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pairs": [
                [u, v, _COLOUR_NAMES[c]]
                for (u, v), c in zip(_pairs(self.n), self.colors)
            ],
        }

    def __eq__(self, other):
        return (
            isinstance(other, TwoColoring)
            and self.n == other.n
            and self.colors == other.colors
        )

    def __hash__(self):
        return hash((self.n, self.colors))


# ---------------------------------------------------------------------------
# anchored containment plans

def _anchored_plans(h: Graph):
    """Backtracking plans for 'does the current colour class contain H using
    the pair (u, v)': one plan per oriented H-edge, deduplicated by runtime
    shape.  A plan is a tuple of requirement lists, one per remaining vertex
    slot; entry k lists the placement positions that slot k must be adjacent
    to (positions 0 and 1 are the anchor)."""
    plans = []
    seen = set()
    for a, b in h.edges:
        for x, y in ((a, b), (b, a)):
            placed = [x, y]
            rest = [v for v in range(h.n) if v not in (x, y)]
            reqs: list[tuple[int, ...]] = []
            while rest:
                rest.sort(
                    key=lambda v: (
                        -sum(1 for p in placed if h.adj[v] >> p & 1),
                        -h.degree(v),
                        v,
                    )
                )
                v = rest.pop(0)
                reqs.append(
                    tuple(i for i, p in enumerate(placed) if h.adj[v] >> p & 1)
                )
                placed.append(v)
            key = tuple(reqs)
            if key not in seen:
                seen.add(key)
                plans.append(key)
    return plans


def _has_copy_through(adj: list[int], full: int, plans, u: int, v: int) -> bool:
    """True iff some plan embeds with anchor (u, v), using adjacency masks of
    one colour class (the pair (u, v) must already be set in adj)."""
    placement = [u, v]

    def rec(plan, i: int, used: int) -> bool:
        if i == len(plan):
            return True
        cand = full & ~used
        for p in plan[i]:
            cand &= adj[placement[p]]
        while cand:
            b = cand & -cand
            cand ^= b
            placement.append(b.bit_length() - 1)
            if rec(plan, i + 1, used | b):
                return True
            placement.pop()
        return False

    anchor_used = (1 << u) | (1 << v)
    for plan in plans:
        del placement[2:]
        if rec(plan, 0, anchor_used):
            return True
    return False


# ---------------------------------------------------------------------------
# search

@dataclass(frozen=True)
class AvoidResult:
    """Outcome of the n-vertex avoidability search: status is 'witness',
    'impossible', or 'budget_exhausted'."""

    status: str
    witness: TwoColoring | None
    nodes: int
    wallclock_hit: bool = False


def ramsey_avoidable(
    h: Graph, g: Graph, n: int, budget: SearchBudget | None = None
) -> AvoidResult:
    """Search for a colouring of K_n with no blue H and no red G.

    Exhaustive within the node budget: 'impossible' is a proof.  Witnesses
    are re-verifiable through TwoColoring.blue_graph()/red_graph().
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    budget = budget or DEFAULT_BUDGET
    # edgeless watched graphs are contained in any colouring as soon as they fit
    if h.n <= n and not h.edges:
        return AvoidResult("impossible", None, 0)
    if g.n <= n and not g.edges:
        return AvoidResult("impossible", None, 0)
    pairs = _pairs(n)
    blue_plans = _anchored_plans(h) if h.n <= n else []
    red_plans = _anchored_plans(g) if g.n <= n else []
    blue_adj = [0] * n
    red_adj = [0] * n
    adj_of = (blue_adj, red_adj)
    plans_of = (blue_plans, red_plans)
    colors = [BLUE] * len(pairs)
    full = (1 << n) - 1
    counter = budget.counter()

    def dfs(i: int) -> bool:
        counter.tick()
        if i == len(pairs):
            return True
        u, v = pairs[i]
        for colour in (BLUE, RED):
            # first-vertex symmetry: the colours on (0, j) are canonicalised
            # to blues first, so a blue after a red is a relabelled duplicate
            if colour == BLUE and u == 0 and v >= 2 and colors[i - 1] == RED:
                continue
            adj = adj_of[colour]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if not (
                plans_of[colour]
                and _has_copy_through(adj, full, plans_of[colour], u, v)
            ):
                colors[i] = colour
                if dfs(i + 1):
                    return True
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return False

    try:
        found = dfs(0)
    except BudgetExhausted as exc:
        return AvoidResult("budget_exhausted", None, exc.nodes, exc.wallclock)
    if found:
        return AvoidResult("witness", TwoColoring(n, colors), counter.nodes)
    return AvoidResult("impossible", None, counter.nodes)


@dataclass
class RamseyResult:
    """Exact value, or the interval [lower, unknown) when the budget ran out.

    witnesses maps each n shown avoidable to a verified colouring; the last
    one sits at value-1 when the value is exact.
    """

    value: int | None
    lower: int
    upper: int | None
    nodes: int
    budget_exhausted: bool
    wallclock_hit: bool = False
    witnesses: dict[int, TwoColoring] = field(default_factory=dict)

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    @property
    def witness(self) -> TwoColoring | None:
        if not self.witnesses:
            return None
        return self.witnesses[max(self.witnesses)]

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "budget_exhausted": self.budget_exhausted,
            "wallclock_hit": self.wallclock_hit,
            "witness": self.witness.to_json() if self.witness else None,
        }


def ramsey_number(
    h: Graph, g: Graph, budget: SearchBudget | None = None
) -> RamseyResult:
    """R(H, G): least n such that every blue/red colouring of K_n has a blue
    H or a red G.  Iterates n upward from max(|V(H)|, |V(G)|); exact when an
    exhaustive 'impossible' is reached, otherwise an interval with the upper
    end unknown."""
    if not h.edges or not g.edges:
        raise ValueError("Ramsey numbers here need both graphs to have an edge")
    budget = budget or DEFAULT_BUDGET
    witnesses: dict[int, TwoColoring] = {}
    total_nodes = 0
    n = max(h.n, g.n)
    while True:
        res = ramsey_avoidable(h, g, n, budget)
        total_nodes += res.nodes
        if res.status == "witness":
            witnesses[n] = res.witness
            n += 1
            continue
        if res.status == "impossible":
            return RamseyResult(n, n, n, total_nodes, False, witnesses=witnesses)
        return RamseyResult(
            None, n, None, total_nodes, True, res.wallclock_hit, witnesses
        )


def chvatal_witness(g: Graph, p: int) -> TwoColoring:
    """The classical lower-bound colouring for R(K_p, G) with G connected:
    on (p-1)(|V(G)|-1) vertices, red forms p-1 disjoint cliques of size
    |V(G)|-1 and blue is complete multipartite between them.  Red components
    are too small to hold G; blue has no K_p."""
    if p < 2:
        raise ContractError("p must be >= 2")
    if g.n < 2:
        raise ContractError("G needs at least 2 vertices")
    if not is_connected(g):
        raise ContractError("the disjoint-clique bound needs G connected")
    size = g.n - 1
    n = (p - 1) * size
    group = [v // size for v in range(n)]
    colors = [
        RED if group[u] == group[v] else BLUE for u, v in _pairs(n)
    ]
    return TwoColoring(n, colors)


@dataclass(frozen=True)
class PGoodResult:
    """good is True/False when R(K_p, G) was computed exactly, None when the
    budget ran out first."""

    good: bool | None
    target: int
    ramsey: RamseyResult

    def to_json(self) -> dict:
        return {
            "good": self.good,
            "target": self.target,
            "ramsey": self.ramsey.to_json(),
        }


def is_p_good(g: Graph, p: int, budget: SearchBudget | None = None) -> PGoodResult:
    """Whether R(K_p, G) equals the disjoint-clique bound (p-1)(|V(G)|-1)+1."""
    if not is_connected(g):
        raise ContractError("p-goodness is defined for connected G")
    target = (p - 1) * (g.n - 1) + 1
    res = ramsey_number(complete_graph(p), g, budget)
    good = (res.value == target) if res.is_exact else None
    return PGoodResult(good, target, res)
