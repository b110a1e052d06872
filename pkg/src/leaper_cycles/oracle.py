"""Brute-force ground truth: exhaustive search for change-h cycles.

Independent of the construction pipeline (only the core vertex model is
shared), this module decides existence and counts Hamiltonian cycles in
the change-h graph on {0,1}^k by depth-first backtracking, after two
cheap necessary-condition checks: every vertex needs degree at least two,
and the graph must be connected.

The search is anchored at the all-zeros vertex. Neighbors are generated
in ascending flip-mask order, which is pinned so that results and node
counts are reproducible. A branch is abandoned as soon as some unvisited
vertex can no longer acquire two cycle edges, i.e. its count of unvisited
neighbors plus its adjacency to the search head and to the anchor drops
below two.

Counting uses a canonical form: the sequence starts at all-zeros and the
second vertex must be numerically smaller than the last, which selects one
of the two directions of every undirected cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import CapacityError, VertexPath

ORACLE_K_MAX = 12
COUNT_K_MAX = 5


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    count: int | None
    nodes_explored: int
    witness: VertexPath | None


def oracle_exists(
    k: int, h: int, want_witness: bool = False, *, threads: int = 1
) -> OracleResult:
    """Decide by exhaustive search whether a change-h cycle exists.

    ``nodes_explored`` counts every vertex appended to the search path
    after the anchor; it depends on ``threads`` (parallel runs explore
    whole branches), but ``exists`` and the witness never do.
    """
    _check_args(k, h, ORACLE_K_MAX, "existence search", threads)
    masks = _flip_masks(k, h)
    if len(masks) < 2 or not _connected(k, masks):
        return OracleResult(False, None, 0, None)
    if threads > 1:
        found, nodes, wit = _split_branches(
            k, h, masks, count_mode=False, want_witness=want_witness,
            threads=threads,
        )
    else:
        found, nodes, wit = _dfs(
            k, h, masks, count_mode=False, want_witness=want_witness,
            prefix=(0,),
        )
    witness = VertexPath(k, tuple(wit)) if wit is not None else None
    return OracleResult(bool(found), None, nodes, witness)


def oracle_count(
    k: int, h: int, want_witness: bool = False, *, threads: int = 1
) -> OracleResult:
    """Count undirected change-h Hamiltonian cycles in canonical form.

    Full enumeration: every cycle through the all-zeros anchor is visited
    in both directions and the second-smaller-than-last rule keeps exactly
    one. The count is independent of neighbor ordering and of ``threads``.
    """
    _check_args(k, h, COUNT_K_MAX, "cycle counting", threads)
    masks = _flip_masks(k, h)
    if len(masks) < 2 or not _connected(k, masks):
        return OracleResult(False, 0, 0, None)
    if threads > 1:
        count, nodes, wit = _split_branches(
            k, h, masks, count_mode=True, want_witness=want_witness,
            threads=threads,
        )
    else:
        count, nodes, wit = _dfs(
            k, h, masks, count_mode=True, want_witness=want_witness,
            prefix=(0,),
        )
    witness = VertexPath(k, tuple(wit)) if wit is not None else None
    return OracleResult(count > 0, count, nodes, witness)


def _check_args(k: int, h: int, cap: int, what: str, threads: int) -> None:
    if k < 1 or h < 1:
        raise ValueError(f"need k >= 1 and h >= 1, got k={k}, h={h}")
    if k > cap:
        raise CapacityError(f"{what} is capped at k <= {cap}, got k={k}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")


def _flip_masks(k: int, h: int) -> list[int]:
    """All h-bit flip masks of width k, in ascending numeric order."""
    if h > k:
        return []
    masks = [sum(1 << p for p in pos) for pos in combinations(range(k), h)]
    masks.sort()
    return masks


def _connected(k: int, masks: list[int]) -> bool:
    """Breadth-first reachability of all 2**k vertices from all-zeros."""
    n = 1 << k
    seen = 1
    frontier = [0]
    remaining = n - 1
    while frontier and remaining:
        nxt = []
        for v in frontier:
            for m in masks:
                u = v ^ m
                if not (seen >> u) & 1:
                    seen |= 1 << u
                    remaining -= 1
                    nxt.append(u)
        frontier = nxt
    return remaining == 0


def _dfs(
    k: int,
    h: int,
    masks: list[int],
    *,
    count_mode: bool,
    want_witness: bool,
    prefix: tuple[int, ...],
) -> tuple[int, int, list[int] | None]:
    """Backtracking core. Returns (found-or-count, nodes, witness codes).

    ``prefix`` is the forced start of the path (the anchor, plus one
    neighbor when running a single top-level branch). Iterative, so path
    lengths up to 2**ORACLE_K_MAX need no recursion headroom.
    """
    n = 1 << k
    counts = [len(masks)] * n  # unvisited-neighbor count per vertex
    low: set[int] = set()  # unvisited vertices with counts <= 1
    visited = 0
    path: list[int] = []
    nodes = 0

    def push(v: int) -> None:
        nonlocal visited, nodes
        visited |= 1 << v
        path.append(v)
        low.discard(v)
        nodes += 1
        for m in masks:
            u = v ^ m
            c = counts[u] - 1
            counts[u] = c
            if c <= 1 and not (visited >> u) & 1:
                low.add(u)

    def pop() -> None:
        nonlocal visited
        v = path.pop()
        visited &= ~(1 << v)
        for m in masks:
            u = v ^ m
            c = counts[u] + 1
            counts[u] = c
            if c > 1:
                low.discard(u)
        if counts[v] <= 1:
            low.add(v)

    def pruned(head: int) -> bool:
        for u in low:
            avail = counts[u]
            if (u ^ head).bit_count() == h:
                avail += 1
            if u.bit_count() == h:  # adjacency to the all-zeros anchor
                avail += 1
            if avail < 2:
                return True
        return False

    for v in prefix:
        push(v)
    nodes -= 1  # the anchor itself is not an explored node

    count = 0
    witness: list[int] | None = None
    if len(path) < n and pruned(path[-1]):
        return (count, nodes, witness)

    def candidates(v: int) -> list[int]:
        return [v ^ m for m in masks if not (visited >> (v ^ m)) & 1]

    stack = [candidates(path[-1])]
    idx = [0]
    while stack:
        cs = stack[-1]
        i = idx[-1]
        if i >= len(cs):
            stack.pop()
            idx.pop()
            if len(path) > len(prefix):
                pop()
            continue
        idx[-1] = i + 1
        v = cs[i]
        push(v)
        if len(path) == n:
            if v.bit_count() == h:  # closing edge back to all-zeros
                if not count_mode:
                    wit = list(path) if want_witness else None
                    return (1, nodes, wit)
                if path[1] < path[-1]:
                    count += 1
                    if want_witness and witness is None:
                        witness = list(path)
            pop()
            continue
        if pruned(v):
            pop()
            continue
        stack.append(candidates(v))
        idx.append(0)
    return (count, nodes, witness)


def _branch_worker(
    args: tuple[int, int, bool, bool, int],
) -> tuple[int, int, list[int] | None]:
    k, h, count_mode, want_witness, first = args
    masks = _flip_masks(k, h)
    return _dfs(
        k, h, masks, count_mode=count_mode, want_witness=want_witness,
        prefix=(0, first),
    )


def _split_branches(
    k: int,
    h: int,
    masks: list[int],
    *,
    count_mode: bool,
    want_witness: bool,
    threads: int,
) -> tuple[int, int, list[int] | None]:
    """Run each top-level branch (choice of second vertex) in a pool.

    The merge is order-deterministic: counts are summed, and the witness
    comes from the first successful branch in ascending flip-mask order,
    so results match a single-threaded run regardless of pool size.
    """
    import multiprocessing

    tasks = [(k, h, count_mode, want_witness, m) for m in masks]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=threads) as pool:
        results = pool.map(_branch_worker, tasks)
    nodes = sum(r[1] for r in results)
    if count_mode:
        count = sum(r[0] for r in results)
        witness = next((r[2] for r in results if r[2] is not None), None)
        return (count, nodes, witness)
    for found, _, wit in results:
        if found:
            return (1, nodes, wit)
    return (0, nodes, None)
