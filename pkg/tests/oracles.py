"""Independent brute-force oracles and small builders used across the tests.

Everything here deliberately avoids the library's fast paths: max cliques by
scanning all 2^n subsets, forests by DFS, packings by enumerating all bin
assignments, stars by scanning all neighbor r-subsets, maximal cliques via
networkx's enumeration.
"""

from itertools import combinations, product

from treecolor import Graph, IntervalRep


def max_clique_bruteforce(g: Graph) -> int:
    """Largest clique size by checking every vertex subset (bitmask form)."""
    masks = [0] * g.n
    for u in range(g.n):
        for v in g.adj[u]:
            masks[u] |= 1 << v
    best = 0
    for subset in range(1 << g.n):
        size = subset.bit_count()
        if size <= best:
            continue
        rest = subset
        is_clique = True
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if subset & ~(masks[v] | (1 << v)):
                is_clique = False
                break
        if is_clique:
            best = size
    return best


def forests_by_dfs(g: Graph, colors) -> bool:
    """Cycle detection inside each color class by parent-tracking DFS."""
    visited = [False] * g.n
    for start in range(g.n):
        if visited[start]:
            continue
        visited[start] = True
        stack = [(start, -1)]
        while stack:
            v, parent = stack.pop()
            for w in g.adj[v]:
                if colors[w] != colors[v] or w == parent:
                    continue
                if visited[w]:
                    return False
                visited[w] = True
                stack.append((w, v))
    return True


def packing_feasible_bruteforce(items, bins, capacity) -> bool:
    """Exact-fill feasibility by enumerating every item-to-bin assignment."""
    for assignment in product(range(bins), repeat=len(items)):
        loads = [0] * bins
        for j, b in enumerate(assignment):
            loads[b] += items[j]
        if all(load == capacity for load in loads):
            return True
    return False


def star_bruteforce(g: Graph, r: int) -> bool:
    """True iff no vertex has r pairwise non-adjacent neighbors; literal scan
    over all r-subsets of every neighborhood."""
    for v in range(g.n):
        for combo in combinations(g.adj[v], r):
            if all(not g.has_edge(a, b) for a, b in combinations(combo, 2)):
                return False
    return True


def maximal_cliques_networkx(g: Graph) -> set[frozenset[int]]:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return {frozenset(clique) for clique in nx.find_cliques(h)}


def equal_intervals_rep(n: int) -> IntervalRep:
    """n copies of [0, 1]; derives the complete graph K_n."""
    return IntervalRep(tuple((v, 0, 1) for v in range(n)))


def path_rep(n: int) -> IntervalRep:
    """Chain of touching unit intervals; derives the path P_n."""
    return IntervalRep(tuple((v, v, v + 1) for v in range(n)))
