"""Admissible vertex partitions, quotient graphs, and the partition lower
bound on the uniformity threshold.

A partition of V(F) into blocks of size at most t is t-admissible when at
most one F-edge crosses any two blocks; the quotient F(P) contracts each
block to a vertex.  c_t(F) is the least chromatic number of a quotient over
t-admissible partitions, and whenever c_t(F) >= 3 the threshold satisfies
th(F) >= (c_t(F)-1)t+1.  Enumeration is exhaustive (restricted-growth
recursion with a block-size cap), so input size is hard-guarded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, GuardError
from .graphs import (
    Graph,
    chromatic_number,
    connected_components,
    is_bipartite,
    is_connected,
)

# Bell(12) > 4 million; anything past 11 vertices is enumeration suicide.
PARTITION_GUARD = 11


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty blocks covering 0..n-1, block size capped by t.

    Blocks are stored sorted and ordered by least element.
    """

    blocks: tuple[tuple[int, ...], ...]
    t: int

    @classmethod
    def of(cls, blocks, t: int) -> "VertexPartition":
        norm = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        p = cls(norm, t)
        seen: set[int] = set()
        for b in norm:
            if not b:
                raise ValueError("empty block")
            if len(b) > t:
                raise ValueError(f"block {b} exceeds size cap t={t}")
            if seen & set(b):
                raise ValueError("blocks are not disjoint")
            seen.update(b)
        if seen and (min(seen) < 0 or seen != set(range(max(seen) + 1))):
            raise ValueError("blocks must cover 0..n-1 exactly")
        return p

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_of(self) -> list[int]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out


def enumerate_partitions(n: int, cap: int):
    """All partitions of 0..n-1 into blocks of size <= cap, as tuples of
    sorted tuples ordered by least element.  Deterministic order."""
    if n == 0:
        yield ()
        return
    blocks: list[list[int]] = []

    def rec(v: int):
        if v == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            if len(b) < cap:
                b.append(v)
                yield from rec(v + 1)
                b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)


def _check_partition_of(f: Graph, p: VertexPartition):
    covered = [v for b in p.blocks for v in b]
    if sorted(covered) != list(range(f.n)):
        raise ValueError(f"partition does not cover V(F) = 0..{f.n - 1} exactly")


def _admissible_blocks(f: Graph, blocks) -> bool:
    block_of = {}
    for i, b in enumerate(blocks):
        for v in b:
            block_of[v] = i
    seen: set[tuple[int, int]] = set()
    for u, v in f.edges:
        bu, bv = block_of[u], block_of[v]
        if bu == bv:
            continue
        key = (bu, bv) if bu < bv else (bv, bu)
        if key in seen:
            return False
        seen.add(key)
    return True


def is_admissible(f: Graph, p: VertexPartition) -> bool:
    """True iff at most one F-edge crosses any two distinct blocks."""
    _check_partition_of(f, p)
    return _admissible_blocks(f, p.blocks)


def quotient(f: Graph, p: VertexPartition) -> Graph:
    """Quotient graph F(P): one vertex per block, adjacent when an F-edge
    crosses.  Defined for admissible partitions only."""
    if not is_admissible(f, p):
        raise ContractError("quotient requires an admissible partition")
    block_of = p.block_of()
    es = set()
    for u, v in f.edges:
        bu, bv = block_of[u], block_of[v]
        if bu != bv:
            es.add((min(bu, bv), max(bu, bv)))
    return Graph(len(p.blocks), es)


def _quotient_chi(f: Graph, blocks) -> int:
    block_of = {}
    for i, b in enumerate(blocks):
        for v in b:
            block_of[v] = i
    es = set()
    for u, v in f.edges:
        bu, bv = block_of[u], block_of[v]
        if bu != bv:
            es.add((min(bu, bv), max(bu, bv)))
    return chromatic_number(Graph(len(blocks), es))


def _guard(f: Graph, i_know: bool):
    if f.n > PARTITION_GUARD and not i_know:
        raise GuardError(
            f"partition enumeration over {f.n} vertices exceeds the guard "
            f"({PARTITION_GUARD}); Bell-number growth makes this infeasible"
        )


def _chi_by_cap(f: Graph, i_know: bool = False) -> list[tuple[int, tuple] | None]:
    """best[t] = (min quotient chromatic number, witness blocks) over
    admissible partitions with max block size <= t, for t = 0..n-1 (index 0
    unused).  The single all-vertex block is excluded: its quotient is a
    point and carries no information for the lower bound."""
    _guard(f, i_know)
    n = f.n
    cap = max(1, n - 1)
    per_maxblock: dict[int, tuple[int, tuple]] = {}
    for blocks in enumerate_partitions(n, cap):
        if not _admissible_blocks(f, blocks):
            continue
        mb = max(len(b) for b in blocks)
        chi = _quotient_chi(f, blocks)
        cur = per_maxblock.get(mb)
        if cur is None or chi < cur[0]:
            per_maxblock[mb] = (chi, blocks)
    best: list[tuple[int, tuple] | None] = [None] * (cap + 1)
    run: tuple[int, tuple] | None = None
    for t in range(1, cap + 1):
        cand = per_maxblock.get(t)
        if cand is not None and (run is None or cand[0] < run[0]):
            run = cand
        best[t] = run
    return best


def c_t(f: Graph, t: int, i_know: bool = False) -> int:
    """Least chromatic number of a quotient over t-admissible partitions.

    Block sizes are effectively capped at n-1 (see _chi_by_cap); partitioning
    into singletons is always admissible, so c_t(F) <= chi(F)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if f.n == 0:
        return 0
    if f.n == 1:
        return 1
    best = _chi_by_cap(f, i_know)
    entry = best[min(t, f.n - 1)]
    assert entry is not None  # singletons are always admissible
    return entry[0]


def c_t_witness(f: Graph, t: int, i_know: bool = False) -> tuple[int, VertexPartition]:
    if t < 1:
        raise ValueError("t must be >= 1")
    if f.n == 0:
        return 0, VertexPartition.of([], t)
    teff = min(t, max(1, f.n - 1))
    entry = _chi_by_cap(f, i_know)[teff]
    assert entry is not None
    chi, blocks = entry
    return chi, VertexPartition.of(blocks, teff)


@dataclass(frozen=True)
class GmtLowerBound:
    """A lower bound on th(F) with provenance.

    source is one of: theorem-10 (partition bound, t and c_t filled in,
    partition is a witness attaining c_t), trivial-nonbipartite, or
    trivial-bipartite.
    """

    value: int
    source: str
    t: int | None = None
    c_t: int | None = None
    partition: tuple[tuple[int, ...], ...] | None = None
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "source": self.source,
            "t": self.t,
            "c_t": self.c_t,
            "partition": [list(b) for b in self.partition] if self.partition else None,
            "note": self.note,
        }


def _trivial_floor(f: Graph) -> GmtLowerBound:
    if chromatic_number(f) >= 3:
        return GmtLowerBound(
            3, "trivial-nonbipartite",
            note="non-bipartite F forces quadratically many hyperedges at r=2",
        )
    return GmtLowerBound(2, "trivial-bipartite")


def gmt_lower_bound(f: Graph, i_know: bool = False) -> GmtLowerBound:
    """Best partition-based lower bound on th(F).

    Maximises (c_t(F)-1)t+1 over 1 <= t <= n-1 with c_t(F) >= 3; falls back
    to the trivial floor (3 when chi >= 3, else 2) when no t qualifies.
    Above the enumeration guard, a dominating-apex structure still yields the
    exact maximum (chi(F)-1)(n-1)+1 without enumerating partitions.
    """
    n = f.n
    if n <= PARTITION_GUARD or i_know:
        best = _chi_by_cap(f, i_know)
        out: GmtLowerBound | None = None
        for t in range(1, max(1, n - 1) + 1):
            entry = best[t] if t < len(best) else None
            if entry is None:
                continue
            chi, blocks = entry
            if chi < 3:
                continue
            value = (chi - 1) * t + 1
            if out is None or value > out.value:
                out = GmtLowerBound(value, "theorem-10", t, chi, tuple(blocks))
        if out is not None:
            return out
        return _trivial_floor(f)
    if _cone_structure(f):
        chi = chromatic_number(f)
        if chi >= 3:
            singles = tuple((v,) for v in range(n))
            return GmtLowerBound(
                (chi - 1) * (n - 1) + 1, "theorem-10", n - 1, chi, singles,
                note="dominating-apex structure; partition enumeration skipped (size guard)",
            )
    raise GuardError(
        f"partition enumeration over {n} vertices exceeds the guard "
        f"({PARTITION_GUARD}) and no dominating-apex shortcut applies"
    )


def _cone_structure(f: Graph) -> bool:
    """F = apex vertex joined to all of F0, where F0 is connected or is
    bipartite with at least two components containing an edge."""
    n = f.n
    if n < 2:
        return False
    full = (1 << n) - 1
    for v in range(n):
        if f.adj[v] != full ^ (1 << v):
            continue
        f0 = f.induced([u for u in range(n) if u != v])
        if f0.n >= 1 and is_connected(f0):
            return True
        if is_bipartite(f0):
            comps = connected_components(f0)
            with_edge = sum(1 for c in comps if len(c) >= 2)
            if with_edge >= 2:
                return True
    return False


def cone_lower_applies(f: Graph) -> bool:
    """True iff F has a dominating apex over a base that is connected or
    bipartite with two edge-containing components; then the partition bound
    reaches (chi(F)-1)(|V(F)|-1)+1, which is asserted."""
    ok = _cone_structure(f)
    if ok:
        target = (chromatic_number(f) - 1) * (f.n - 1) + 1
        got = gmt_lower_bound(f).value
        assert got >= target, (got, target)
    return ok
