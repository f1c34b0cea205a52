"""Split and pseudo-split structure: recognition and partition enumeration.

Split recognition is the degree-sequence splittance test.  Partition
enumeration grows from one base partition: any two split partitions differ
by at most one vertex on each side (clique-side difference sits inside an
independent set and vice versa), so scanning single moves and swaps from the
base finds every partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import TooLarge
from .graph import Graph, VertexSet, bits_of
from .search import find_induced_cycle


@dataclass(frozen=True)
class SplitPartition:
    k: VertexSet  # clique side
    i: VertexSet  # independent side


@dataclass(frozen=True)
class PseudoSplitPartition:
    k: VertexSet
    i: VertexSet
    h: VertexSet  # empty, or a C5 complete to k and nonadjacent to i


def _base_split_partition(g: Graph) -> tuple[int, int] | None:
    """(clique mask, independent mask) via the splittance construction."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    h = 0
    for idx, d in enumerate(degs):
        if d >= idx:
            h = idx + 1
    total_top = sum(degs[:h])
    total_rest = sum(degs[h:])
    if total_top != h * (h - 1) + total_rest:
        return None
    kmask = 0
    for v in order[:h]:
        kmask |= 1 << v
    imask = g.full_mask() & ~kmask
    if not g.is_clique_mask(kmask) or not g.is_independent_mask(imask):
        # ties in the degree order can need a reshuffle; fall back to moves
        return _repair_partition(g, kmask, imask)
    return kmask, imask


def _repair_partition(g: Graph, kmask: int, imask: int) -> tuple[int, int] | None:
    for v in bits_of(kmask):
        for u in bits_of(imask):
            if g.degree(v) != g.degree(u):
                continue
            k2 = kmask & ~(1 << v) | 1 << u
            i2 = imask & ~(1 << u) | 1 << v
            if g.is_clique_mask(k2) and g.is_independent_mask(i2):
                return k2, i2
    return None


def is_split(g: Graph) -> bool:
    return _base_split_partition(g) is not None


def all_split_partition_masks(g: Graph) -> list[tuple[int, int]]:
    """Every ordered (clique, independent) partition; [] iff g is not split."""
    base = _base_split_partition(g)
    if base is None:
        return []
    k0, _ = base
    full = g.full_mask()
    candidates = {k0}
    for v in bits_of(k0):
        candidates.add(k0 & ~(1 << v))
        for u in bits_of(full & ~k0):
            candidates.add(k0 & ~(1 << v) | 1 << u)
    for u in bits_of(full & ~k0):
        candidates.add(k0 | 1 << u)
    out = []
    for k in sorted(candidates):
        i = full & ~k
        if g.is_clique_mask(k) and g.is_independent_mask(i):
            out.append((k, i))
    return out


def split_partitions(g: Graph) -> list[SplitPartition]:
    """All split partitions, trimmed to at most n by dropping the degenerate
    empty-sided ones first (complete and edgeless graphs have n+1 raw)."""
    raw = all_split_partition_masks(g)
    if len(raw) > g.n:
        slimmed = [p for p in raw if p[1] != 0]
        if len(slimmed) > g.n:
            slimmed = [p for p in slimmed if p[0] != 0]
        raw = slimmed[: g.n]
    return [
        SplitPartition(VertexSet(g.n, k), VertexSet(g.n, i)) for k, i in raw
    ]


def pseudo_split_partition_masks(g: Graph) -> tuple[int, int, int] | None:
    """(clique, independent, C5-middle) masks, or None if not pseudo-split."""
    base = _base_split_partition(g)
    if base is not None:
        return base[0], base[1], 0
    cyc = find_induced_cycle(g, 5)
    if cyc is None:
        return None
    hmask = 0
    for v in cyc:
        hmask |= 1 << v
    k = i = 0
    for v in bits_of(g.full_mask() & ~hmask):
        nin = g.rows[v] & hmask
        if nin == hmask:
            k |= 1 << v
        elif nin == 0:
            i |= 1 << v
        else:
            return None
    if not g.is_clique_mask(k) or not g.is_independent_mask(i):
        return None
    return k, i, hmask


def is_pseudo_split(g: Graph) -> bool:
    return pseudo_split_partition_masks(g) is not None


def pseudo_split_partition(g: Graph) -> PseudoSplitPartition | None:
    masks = pseudo_split_partition_masks(g)
    if masks is None:
        return None
    k, i, h = masks
    return PseudoSplitPartition(
        VertexSet(g.n, k), VertexSet(g.n, i), VertexSet(g.n, h)
    )


# -- (p,q)-split -------------------------------------------------------------


@dataclass(frozen=True)
class PqSplitPartition:
    s: VertexSet  # K_{p+1}-free side
    t: VertexSet  # independent-set-(q+1)-free side
    p: int
    q: int


PQ_SPLIT_CAP = 22


def _find_clique_in(g: Graph, allowed: int, size: int) -> tuple[int, ...] | None:
    """Lexicographically first clique of the given size inside ``allowed``."""
    verts = bits_of(allowed)
    if size == 0:
        return ()

    def grow(chosen: list[int], common: int, rest: list[int]) -> tuple[int, ...] | None:
        if len(chosen) == size:
            return tuple(chosen)
        for idx, v in enumerate(rest):
            if not common >> v & 1:
                continue
            got = grow(chosen + [v], common & g.rows[v], rest[idx + 1 :])
            if got is not None:
                return got
        return None

    return grow([], allowed, verts)


def _find_independent_in(g: Graph, allowed: int, size: int) -> tuple[int, ...] | None:
    verts = bits_of(allowed)
    if size == 0:
        return ()

    def grow(chosen: list[int], avail: int, rest: list[int]) -> tuple[int, ...] | None:
        if len(chosen) == size:
            return tuple(chosen)
        for idx, v in enumerate(rest):
            if not avail >> v & 1:
                continue
            got = grow(chosen + [v], avail & ~g.rows[v], rest[idx + 1 :])
            if got is not None:
                return got
        return None

    return grow([], allowed, verts)


def pq_split_partition_masks(g: Graph, p: int, q: int) -> list[tuple[int, int]]:
    """All (S,T) with G[S] K_{p+1}-free and G[T] without independent (q+1)-sets.

    Branch and reduce: a K_{p+1} inside S-plus-free forces one of its free
    vertices into T (branching on which is first), symmetrically for an
    independent (q+1)-set on the T side; when neither side can ever be
    violated, every completion is valid.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if g.n > PQ_SPLIT_CAP:
        raise TooLarge(f"(p,q)-split enumeration capped at n <= {PQ_SPLIT_CAP}")
    if p == 1 and q == 1:
        return [(i, k) for k, i in all_split_partition_masks(g)]
    out: list[tuple[int, int]] = []
    full = g.full_mask()

    def solve(smask: int, tmask: int, free: int) -> None:
        clique = _find_clique_in(g, smask | free, p + 1)
        if clique is not None:
            free_members = [v for v in clique if free >> v & 1]
            if not free_members:
                return
            moved_to_s = 0
            for v in free_members:
                solve(
                    smask | moved_to_s,
                    tmask | 1 << v,
                    free & ~(moved_to_s | 1 << v),
                )
                moved_to_s |= 1 << v
            return
        indep = _find_independent_in(g, tmask | free, q + 1)
        if indep is not None:
            free_members = [v for v in indep if free >> v & 1]
            if not free_members:
                return
            moved_to_t = 0
            for v in free_members:
                solve(
                    smask | 1 << v,
                    tmask | moved_to_t,
                    free & ~(moved_to_t | 1 << v),
                )
                moved_to_t |= 1 << v
            return
        # both sides are violation-free even absorbing all of free: any split
        # of the free vertices works
        free_list = bits_of(free)
        for r in range(len(free_list) + 1):
            for combo in combinations(free_list, r):
                extra = 0
                for v in combo:
                    extra |= 1 << v
                out.append((smask | extra, tmask | (free & ~extra)))

    solve(0, 0, full)
    out.sort()
    return out


def pq_split_partitions(g: Graph, p: int, q: int) -> list[PqSplitPartition]:
    return [
        PqSplitPartition(VertexSet(g.n, s), VertexSet(g.n, t), p, q)
        for s, t in pq_split_partition_masks(g, p, q)
    ]


def is_pq_split(g: Graph, p: int, q: int) -> bool:
    if p == 1 and q == 1:
        return is_split(g)
    return bool(pq_split_partition_masks(g, p, q))
