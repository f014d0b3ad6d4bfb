"""Deterministic graph algorithms used by the structural checks."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Sequence
from typing import TypeVar

N = TypeVar("N", bound=Hashable)


def strongly_connected_components(
    nodes: Sequence[N], successors: Callable[[N], Iterable[N]]
) -> list[list[N]]:
    """Tarjan's algorithm, iterative so deep chains cannot blow the stack.

    Components come back with members in input-node order, components
    ordered by their first member.
    """
    position = {node: i for i, node in enumerate(nodes)}
    index: dict[N, int] = {}
    lowlink: dict[N, int] = {}
    on_stack: set[N] = set()
    stack: list[N] = []
    counter = 0
    components: list[list[N]] = []

    for root in nodes:
        if root in index:
            continue
        work: list[tuple[N, list[N], int]] = [(root, _succ_list(successors, root, position), 0)]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, succ, i = work.pop()
            advanced = False
            while i < len(succ):
                child = succ[i]
                i += 1
                if child not in index:
                    work.append((node, succ, i))
                    index[child] = lowlink[child] = counter
                    counter += 1
                    stack.append(child)
                    on_stack.add(child)
                    work.append((child, _succ_list(successors, child, position), 0))
                    advanced = True
                    break
                if child in on_stack:
                    lowlink[node] = min(lowlink[node], index[child])
            if advanced:
                continue
            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                component.sort(key=lambda n: position[n])
                components.append(component)
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
    components.sort(key=lambda c: position[c[0]])
    return components


def _succ_list(
    successors: Callable[[N], Iterable[N]], node: N, position: dict[N, int]
) -> list[N]:
    return sorted((s for s in successors(node) if s in position), key=lambda n: position[n])


def weakly_connected_components(
    nodes: Sequence[N], edges: Iterable[tuple[N, N]]
) -> list[list[N]]:
    """Union-find partition ignoring edge direction; deterministic order."""
    position = {node: i for i, node in enumerate(nodes)}
    parent = {node: node for node in nodes}

    def find(node: N) -> N:
        root = node
        while parent[root] != root:
            root = parent[root]
        while parent[node] != root:
            parent[node], node = root, parent[node]
        return root

    for a, b in edges:
        if a not in parent or b not in parent:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the earlier node as representative for determinism
            if position[ra] > position[rb]:
                ra, rb = rb, ra
            parent[rb] = ra

    groups: dict[N, list[N]] = {}
    for node in nodes:
        groups.setdefault(find(node), []).append(node)
    components = [sorted(members, key=lambda n: position[n]) for members in groups.values()]
    components.sort(key=lambda c: position[c[0]])
    return components
