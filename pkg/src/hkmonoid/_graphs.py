"""Small directed-graph helpers shared by the digraph and automaton code."""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def strongly_connected_components(
    nodes: Sequence[int], succ: dict[int, Iterable[int]]
) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ.get(root, ())))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if u not in index:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack.add(u)
                    work.append((u, iter(succ.get(u, ()))))
                    advanced = True
                    break
                if u in on_stack:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack.discard(u)
                    comp.append(u)
                    if u == v:
                        break
                comps.append(sorted(comp))
    return comps


def condensation(
    nodes: Sequence[int], edges: Iterable[tuple[int, int]]
) -> tuple[list[list[int]], dict[int, int], list[int], dict[int, set[int]]]:
    """Collapse SCCs.

    Returns ``(components, comp_of, internal_edge_count, dag_succ)`` where
    ``edges`` may contain parallel edges; they are counted individually in
    ``internal_edge_count`` (this is what separates a simple cycle from a
    component carrying two distinct cycles).
    """
    edges = list(edges)
    succ: dict[int, list[int]] = {v: [] for v in nodes}
    for a, b in edges:
        succ[a].append(b)
    comps = strongly_connected_components(nodes, succ)
    comp_of = {v: ci for ci, comp in enumerate(comps) for v in comp}
    internal = [0] * len(comps)
    dag: dict[int, set[int]] = {ci: set() for ci in range(len(comps))}
    for a, b in edges:
        ca, cb = comp_of[a], comp_of[b]
        if ca == cb:
            internal[ca] += 1
        else:
            dag[ca].add(cb)
    return comps, comp_of, internal, dag


def max_weight_path(weights: Sequence[int], dag: dict[int, set[int]]) -> int:
    """Largest total node weight along a path of a DAG whose ids are in reverse topological order."""
    best = [0] * len(weights)
    # Tarjan emits sinks first, so successors always have smaller ids.
    for c in range(len(weights)):
        tail = max((best[d] for d in dag[c]), default=0)
        best[c] = weights[c] + tail
    return max(best, default=0)
