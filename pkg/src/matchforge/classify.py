"""Structure checks: bridges, bipartiteness, edge colouring, cycles.

The colouring and cycle searches are exhaustive backtrackers with a
node budget.  Hitting the budget raises SearchTimeout, which the
callers must treat as "unknown", never as "no".  Branch orders are
fixed (lowest id first), so returned witnesses are reproducible.
"""

from __future__ import annotations

from .errors import SearchTimeout
from .graphs import CubicGraph, Graph

DEFAULT_NODE_BUDGET = 10**8


def is_bridgeless(g: Graph) -> tuple[bool, int | None]:
    """(True, None) if 2-edge-connected pieces only; else (False, bridge id).

    Bridges are found with the iterative lowpoint walk; the returned
    bridge is the one with the smallest edge id.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: list[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        # stack holds (vertex, incoming edge id, adjacency cursor)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, in_eid, idx = stack.pop()
            if idx < len(g.adj[v]):
                stack.append((v, in_eid, idx + 1))
                u, eid = g.adj[v][idx]
                if eid == in_eid:
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, eid, 0))
                else:
                    low[v] = min(low[v], disc[u])
            else:
                if in_eid != -1:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.append(in_eid)
    if bridges:
        return False, min(bridges)
    return True, None


def is_bipartite(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """(True, two-colouring) or (False, None)."""
    colour: list[int] = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u, _ in g.adj[v]:
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False, None
    return True, tuple(colour)


def is_independent(g: Graph, vertices) -> bool:
    vs = set(vertices)
    return all(not (u in vs and v in vs) for u, v in g.edges)


def tait_coloring(
    g: CubicGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, ...] | None:
    """A proper 3-edge-colouring as a colour per edge id, or None.

    Exhaustive backtracking over edges in id order.  The three edges at
    vertex 0 are pinned to colours 0 and 1 for the first two, which
    only discards colourings equal to another one up to renaming.
    """
    m = g.m
    if m == 0:
        return ()
    colour = [-1] * m
    # used[v] is a bitmask of colours present at v
    used = [0] * g.n
    pin = g.incident(0) if g.n else ()
    nodes = 0

    def place(eid: int) -> bool:
        nonlocal nodes
        if eid == m:
            return True
        nodes += 1
        if nodes > node_budget:
            raise SearchTimeout(nodes)
        u, v = g.edges[eid]
        if len(pin) >= 2 and eid == pin[0]:
            options = (0,)
        elif len(pin) >= 2 and eid == pin[1]:
            options = (1,)
        else:
            options = (0, 1, 2)
        for c in options:
            bit = 1 << c
            if used[u] & bit or used[v] & bit:
                continue
            colour[eid] = c
            used[u] |= bit
            used[v] |= bit
            if place(eid + 1):
                return True
            colour[eid] = -1
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    if place(0):
        return tuple(colour)
    return None


def is_snark(g: CubicGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Bridgeless and not 3-edge-colourable."""
    ok, _ = is_bridgeless(g)
    if not ok:
        return False
    return tait_coloring(g, node_budget=node_budget) is None


def hamiltonian_cycle(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, ...] | None:
    """A hamiltonian cycle as a vertex sequence starting at 0, or None.

    Backtracking extends the path by the lowest-numbered unvisited
    neighbour first.  The cycle's second vertex is forced below its
    last, which removes the reversal twin of each cycle.
    """
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return None
    path = [0]
    visited = [False] * n
    visited[0] = True
    nodes = 0

    def extend() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchTimeout(nodes)
        v = path[-1]
        if len(path) == n:
            return g.has_edge(v, 0) and path[1] < path[-1]
        for u, _ in g.adj[v]:
            if not visited[u]:
                visited[u] = True
                path.append(u)
                if extend():
                    return True
                path.pop()
                visited[u] = False
        return False

    if extend():
        return tuple(path)
    return None
