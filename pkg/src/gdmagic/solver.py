"""Exhaustive search for magic labelings.

Two engines share nothing but the verifier's definition of a weight:

* a pruned backtracking search: as soon as the last neighbor of some vertex
  is labeled, that vertex's weight is final; the first finalized vertex pins
  the reference constant and later disagreements cut the branch;
* a deliberately naive permutation scan used as the independent oracle.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .abelian import GroupSpec, enumerate_abelian_groups
from .graphs import Graph
from .magic import Labeling, verify

__all__ = [
    "SolverError",
    "SearchSizeError",
    "SearchOptions",
    "NAIVE_VERTEX_CAP",
    "PRUNED_VERTEX_CAP",
    "search_labelings",
    "classify_over_all_groups",
    "is_group_distance_magic",
]

NAIVE_VERTEX_CAP = 8
PRUNED_VERTEX_CAP = 12


class SolverError(ValueError):
    """Bad search request."""


class SearchSizeError(SolverError):
    """Instance exceeds the supported size cap."""


@dataclass(frozen=True)
class SearchOptions:
    """mode: first | all | count; vertex_order: degree_desc | input;
    use_pruning=False selects the naive oracle path."""

    mode: str = "first"
    vertex_order: str = "degree_desc"
    use_pruning: bool = True
    jobs: int = 1


def _vertex_order(g: Graph, kind: str) -> list[int]:
    if kind == "input":
        return list(range(g.n))
    if kind == "degree_desc":
        return sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    raise SolverError(f"unknown vertex order {kind!r}")


def _naive(g: Graph, group: GroupSpec, mode: str):
    elements = list(group.elements())
    count = 0
    found = []
    for perm in itertools.permutations(elements):
        labeling = Labeling(group, perm)
        mu = verify(g, labeling)
        if mu is None:
            continue
        count += 1
        if mode == "count":
            continue
        found.append(replace(labeling, magic_constant=mu))
        if mode == "first":
            break
    return count if mode == "count" else found


def _backtrack(g: Graph, group: GroupSpec, order: list[int], mode: str,
               first_choice: int | None = None):
    n = g.n
    elements = list(group.elements())
    add, sub = group.add, group.sub
    adj = [sorted(g.adj[v]) for v in range(n)]
    label: list[int | None] = [None] * n
    used = [False] * len(elements)
    remaining = [g.degree(v) for v in range(n)]
    wsum = [group.zero()] * n
    state = {"mu": None, "count": 0}
    found: list[Labeling] = []

    # isolated vertices have their (empty) weight fixed from the start
    if any(d == 0 for d in g.degrees) and n > 0:
        state["mu"] = group.zero()

    def apply(v: int, elem) -> tuple[bool, bool]:
        conflict = False
        set_mu = False
        for u in adj[v]:
            wsum[u] = add(wsum[u], elem)
            remaining[u] -= 1
        for u in adj[v]:
            if remaining[u] == 0:
                if state["mu"] is None:
                    state["mu"] = wsum[u]
                    set_mu = True
                elif wsum[u] != state["mu"]:
                    conflict = True
                    break
        return conflict, set_mu

    def undo(v: int, elem, set_mu: bool) -> None:
        for u in adj[v]:
            wsum[u] = sub(wsum[u], elem)
            remaining[u] += 1
        if set_mu:
            state["mu"] = None

    def dfs(depth: int) -> bool:
        if depth == n:
            state["count"] += 1
            if mode != "count":
                assignment = tuple(elements[label[v]] for v in range(n))
                found.append(Labeling(group, assignment, state["mu"]))
            return mode != "first"
        v = order[depth]
        for ei, elem in enumerate(elements):
            if used[ei]:
                continue
            conflict, set_mu = apply(v, elem)
            keep_going = True
            if not conflict:
                used[ei] = True
                label[v] = ei
                keep_going = dfs(depth + 1)
                used[ei] = False
            undo(v, elem, set_mu)
            if not keep_going:
                return False
        return True

    if n == 0:
        state["count"] = 1
        if mode != "count":
            found.append(Labeling(group, (), group.zero()))
    elif first_choice is None:
        dfs(0)
    else:
        v0 = order[0]
        elem = elements[first_choice]
        conflict, set_mu = apply(v0, elem)
        if not conflict:
            used[first_choice] = True
            label[v0] = first_choice
            dfs(1)
        undo(v0, elem, set_mu)
    return state["count"] if mode == "count" else found


def _branch_worker(args):
    g, group, order, mode, branch = args
    return _backtrack(g, group, order, mode, first_choice=branch)


def _parallel(g: Graph, group: GroupSpec, order: list[int], mode: str,
              jobs: int):
    branches = [(g, group, order, mode, ei) for ei in range(group.order)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_branch_worker, branches))
    if mode == "count":
        return sum(results)
    if mode == "first":
        for labelings in results:
            if labelings:
                return labelings[:1]
        return []
    merged: list[Labeling] = []
    for labelings in results:
        merged.extend(labelings)
    return merged


def search_labelings(g: Graph, group: GroupSpec,
                     opts: SearchOptions = SearchOptions()):
    """All magic labelings of g over the group, in a deterministic order.

    Returns a list of labelings for modes "first" and "all", or an int for
    mode "count". The naive path accepts at most 8 vertices, the pruned path
    at most 12.
    """
    if opts.mode not in ("first", "all", "count"):
        raise SolverError(f"unknown search mode {opts.mode!r}")
    if g.n != group.order:
        raise SolverError(
            f"graph has {g.n} vertices but group {group} has order "
            f"{group.order}")
    if not opts.use_pruning:
        if g.n > NAIVE_VERTEX_CAP:
            raise SearchSizeError(
                f"naive search supports at most {NAIVE_VERTEX_CAP} vertices, "
                f"got {g.n}")
        return _naive(g, group, opts.mode)
    if g.n > PRUNED_VERTEX_CAP:
        raise SearchSizeError(
            f"pruned search supports at most {PRUNED_VERTEX_CAP} vertices, "
            f"got {g.n}")
    order = _vertex_order(g, opts.vertex_order)
    if opts.jobs > 1 and g.n > 0:
        return _parallel(g, group, order, opts.mode, opts.jobs)
    return _backtrack(g, group, order, opts.mode)


def classify_over_all_groups(g: Graph,
                             opts: SearchOptions = SearchOptions()
                             ) -> dict[GroupSpec, bool]:
    """For each isomorphism class of abelian groups of order |V(g)|, whether
    g admits a magic labeling; g is group distance magic when all do."""
    out: dict[GroupSpec, bool] = {}
    for spec in enumerate_abelian_groups(g.n):
        result = search_labelings(g, spec, replace(opts, mode="first"))
        out[spec] = bool(result)
    return out


def is_group_distance_magic(g: Graph,
                            opts: SearchOptions = SearchOptions()) -> bool:
    return all(classify_over_all_groups(g, opts).values())
