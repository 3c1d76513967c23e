"""Independent computations of chromatic symmetric functions.

The workhorse is :func:`csf_bruteforce`, which evaluates the edge-subset
inclusion-exclusion identity

    X_G = sum over S subseteq E of (-1)^|S| p_{lambda(S)},

where lambda(S) lists the component sizes of (V, S), and converts the result
to the e-basis through Newton's identities.  The sum is evaluated exactly but
factored per connected component: within a component either

* a vertex-subset dynamic program over signed connected-spanning-subgraph
  counts (the terms of the sum grouped by the component partition they
  induce), preferred for dense pieces, or
* a direct recursion over edge subsets with sign-reversing cancellation of
  cycle edges, preferred for sparse pieces with many vertices.

Both routes compute the identical sum; the choice is a cost heuristic only.
The recursion never touches composition statistics or any closed-form
evaluator, which keeps this module an independent oracle for them.

Also here: the triple-deletion identity checker, assemblies of X for
conjoined graphs from the clique/cycle node-graph reductions, and the
recurrence forms for the twinned families (built from closed-form path,
cycle, lollipop and clique-path-clique-path evaluators).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial

from .graphs import Graph, Piece, conjoin, rooted_complete
from .symfunc import ESymFunc, e_term, one, p_to_e

DEFAULT_EDGE_BUDGET = 24


class EdgeBudgetError(Exception):
    """Raised when a graph exceeds the brute-force edge budget."""

    def __init__(self, n_edges: int, limit: int):
        super().__init__(
            f"graph has {n_edges} edges, exceeding the brute-force budget of "
            f"{limit}; raise the limit explicitly to proceed")
        self.n_edges = n_edges
        self.limit = limit


@lru_cache(maxsize=None)
def _p_lambda(parts: tuple[int, ...]) -> ESymFunc:
    out = one()
    for k in parts:
        out = out * p_to_e(k)
    return out


def _components(n: int, edges) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _vertex_dp(k: int, edges: list[tuple[int, int]]) -> dict[tuple[int, ...], int]:
    """p-basis coefficients for one component via the component-partition DP."""
    masks = 1 << k
    edge_masks = [(1 << u) | (1 << v) for u, v in edges]
    # edgeless[m] is true when the induced subgraph on m has no edge
    edgeless = bytearray([1]) * masks
    for em in edge_masks:
        rest = ((masks - 1) ^ em)
        sub = rest
        while True:
            edgeless[sub | em] = 0
            if sub == 0:
                break
            sub = (sub - 1) & rest
    # signed count of connected spanning subgraphs per vertex subset
    conn: dict[int, int] = {}
    for mask in range(1, masks):
        v0 = mask & -mask
        acc = 0
        sub = (mask - 1) & mask
        while sub:
            if sub & v0 and edgeless[mask ^ sub]:
                acc += conn.get(sub, 0)
            sub = (sub - 1) & mask
        val = (1 if edgeless[mask] else 0) - acc
        if val:
            conn[mask] = val
    # assemble set partitions, tracking component-size multisets
    table: list[dict[tuple[int, ...], int]] = [dict() for _ in range(masks)]
    table[0][()] = 1
    for mask in range(1, masks):
        v0 = mask & -mask
        here = table[mask]
        sub = mask
        while sub:
            if sub & v0:
                c = conn.get(sub)
                if c:
                    pc = sub.bit_count()
                    for key, coef in table[mask ^ sub].items():
                        nk = tuple(sorted(key + (pc,), reverse=True))
                        here[nk] = here.get(nk, 0) + c * coef
            sub = (sub - 1) & mask
    return table[masks - 1]


def _edge_subsets(k: int, edges: list[tuple[int, int]]) -> dict[tuple[int, ...], int]:
    """p-basis coefficients for one component by direct subset recursion.

    An edge joining two vertices already connected by the current subset is
    skipped entirely: including it flips the sign without changing the
    component sizes, so the two branches cancel exactly.
    """
    parent = list(range(k))
    size = [1] * k
    cnt = [0] * (k + 1)
    cnt[1] = k
    acc: dict[tuple[int, ...], int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, sign: int):
        if i == len(edges):
            key = []
            for s in range(k, 0, -1):
                key.extend([s] * cnt[s])
            tk = tuple(key)
            acc[tk] = acc.get(tk, 0) + sign
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            # exclude and include give equal partitions with opposite signs,
            # for every completion: the whole subtree sums to zero
            return
        rec(i + 1, sign)
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        s1, s2 = size[ru], size[rv]
        parent[rv] = ru
        size[ru] = s1 + s2
        cnt[s1] -= 1
        cnt[s2] -= 1
        cnt[s1 + s2] += 1
        rec(i + 1, -sign)
        cnt[s1 + s2] -= 1
        cnt[s2] += 1
        cnt[s1] += 1
        size[ru] = s1
        parent[rv] = rv

    rec(0, 1)
    return {key: c for key, c in acc.items() if c}


def _csf_component(verts: list[int], edges: list[tuple[int, int]]) -> ESymFunc:
    k = len(verts)
    if not edges:
        return e_term((1,))
    index = {v: i for i, v in enumerate(verts)}
    local = [(index[u], index[v]) for u, v in edges]
    cost_dp = 3 ** k
    cost_es = 4 * (2 ** len(local))
    coeffs = _vertex_dp(k, local) if cost_dp <= cost_es else _edge_subsets(k, local)
    out = ESymFunc({}, 0)
    for key, c in coeffs.items():
        out = out + c * _p_lambda(key)
    return out


@lru_cache(maxsize=None)
def csf_bruteforce(g: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> ESymFunc:
    """Exact chromatic symmetric function of g in the e-basis.

    Raises :class:`EdgeBudgetError` when g has more than max_edges edges.
    The result is always integral and homogeneous of degree |V(g)|.
    """
    if g.edge_count > max_edges:
        raise EdgeBudgetError(g.edge_count, max_edges)
    by_vertex: dict[int, list[tuple[int, int]]] = {}
    for u, v in g.edges:
        by_vertex.setdefault(u, []).append((u, v))
        by_vertex.setdefault(v, []).append((u, v))
    out = one()
    for comp in _components(g.n_vertices, g.edges):
        comp_edges = sorted({e for v in comp for e in by_vertex.get(v, ())})
        out = out * _csf_component(comp, comp_edges)
    return out


def count_proper_colorings(g: Graph, colors: int) -> int:
    """Number of proper colorings with the given palette size, by enumeration."""
    if colors < 0:
        raise ValueError("palette size must be nonnegative")
    edges = list(g.edges)
    total = 0
    for assignment in product(range(colors), repeat=g.n_vertices):
        if all(assignment[u] != assignment[v] for u, v in edges):
            total += 1
    return total


# ----------------------------------------------------------------------
# triple deletion
# ----------------------------------------------------------------------

def triple_deletion_check(g: Graph, t: tuple[int, int, int],
                          max_edges: int = DEFAULT_EDGE_BUDGET) -> tuple[bool, bool]:
    """Verify the two stable-triple identities on g by brute force.

    With T = (t1, t2, t3) stable and e1 = t1t2, e2 = t1t3, e3 = t2t3, checks

        X(G + e1 + e2) == X(G + e1) + X(G + e2 + e3) - X(G + e3)
        X(G + e1 + e2 + e3) == X(G + e1 + e3) + X(G + e2 + e3) - X(G + e3)
    """
    t1, t2, t3 = t
    if len({t1, t2, t3}) != 3:
        raise ValueError("triple must consist of three distinct vertices")
    e1 = (min(t1, t2), max(t1, t2))
    e2 = (min(t1, t3), max(t1, t3))
    e3 = (min(t2, t3), max(t2, t3))
    if {e1, e2, e3} & g.edges:
        raise ValueError(f"triple {t} is not stable in the graph")

    def with_edges(*extra: tuple[int, int]) -> ESymFunc:
        return csf_bruteforce(Graph(g.n_vertices, g.edges | set(extra)), max_edges)

    first = with_edges(e1, e2) == with_edges(e1) + with_edges(e2, e3) - with_edges(e3)
    second = with_edges(e1, e2, e3) == (
        with_edges(e1, e3) + with_edges(e2, e3) - with_edges(e3))
    return first, second


# ----------------------------------------------------------------------
# conjoined-graph assemblies (clique or cycle node graph)
# ----------------------------------------------------------------------

def _pendant(h: Piece, m: int) -> Graph:
    # h with a pendant path of length m at its root
    return conjoin(h, rooted_complete(1), m)


def x_via_kpg(length: int, a: int, h: Piece,
              max_edges: int = DEFAULT_EDGE_BUDGET) -> ESymFunc:
    """X of the clique-to-graph conjoin P^length(K_a, h), assembled from pendant-path graphs.

    Computes (a-1)! * sum_{i=0}^{a-1} (1-i) e_i X(h^{a+length-i-1}), with each
    X(h^m) taken from the brute-force oracle and e_0 read as the constant 1.
    """
    if length < 0 or a < 2:
        raise ValueError(f"needs length >= 0 and a >= 2, got {(length, a)}")
    total = ESymFunc({}, 0)
    for i in range(a):
        factor = one() if i == 0 else e_term((i,))
        x_h = csf_bruteforce(_pendant(h, a + length - i - 1), max_edges)
        total = total + (1 - i) * (factor * x_h)
    return factorial(a - 1) * total


def x_via_cpg(length: int, a: int, h: Piece,
              max_edges: int = DEFAULT_EDGE_BUDGET) -> ESymFunc:
    """X of the cycle-to-graph conjoin P^length(C_a, h), assembled from pendant-path graphs.

    Computes (a-1) X(h^{a+length-1}) - sum_{i=1}^{a-2} X(C_{a-i}) X(h^{i+length-1});
    the cycle factors come from the closed-form cycle expansion, which accepts
    size 2.
    """
    from .formulas import x_cycle

    if length < 0 or a < 2:
        raise ValueError(f"needs length >= 0 and a >= 2, got {(length, a)}")
    total = (a - 1) * csf_bruteforce(_pendant(h, a + length - 1), max_edges)
    for i in range(1, a - 1):
        piece = x_cycle(a - i) * csf_bruteforce(_pendant(h, i + length - 1), max_edges)
        total = total - piece
    return total


# ----------------------------------------------------------------------
# recurrence forms for the twinned families
# ----------------------------------------------------------------------

def x_tw_path_rec(n: int, l: int) -> ESymFunc:
    """X of the twinned path via its six-term path-product recurrence."""
    from .formulas import x_path

    if n < 3 or not 2 <= l <= n - 1:
        raise ValueError(f"needs n >= 3 and 2 <= l <= n-1, got {(n, l)}")
    e1, e2 = e_term((1,)), e_term((2,))
    return (-2 * (x_path(l - 1) * x_path(n - l + 2))
            + 2 * (e1 * x_path(n))
            + 4 * x_path(n + 1)
            - 2 * (x_path(l) * x_path(n - l + 1))
            + 2 * (e2 * (x_path(l - 1) * x_path(n - l)))
            - 2 * (x_path(l + 1) * x_path(n - l)))


def x_tw_cycle_rec(n: int) -> ESymFunc:
    """X of the twinned cycle via its cycle/path recurrence."""
    from .formulas import x_cycle, x_path

    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    e1, e2 = e_term((1,)), e_term((2,))
    return (4 * x_cycle(n + 1) + 2 * (e1 * x_cycle(n))
            - 6 * x_path(n + 1) + 2 * (e2 * x_path(n - 1)))


def x_tw_lollipop_rec(a: int, l: int, h: int) -> ESymFunc:
    """X of the twinned lollipop via the stable-triple reduction.

    Uses X = 2 X(K_a - path(g+1) - K_3 - path(h-1) chain) - X(K_3^{h-1}) X(K_a^g)
    with g = l - h - 1, every factor from a closed-form evaluator.
    """
    from .formulas import x_kpkp_b3, x_lollipop

    if a < 1 or l < 2 or not 1 <= h <= l - 1:
        raise ValueError(f"needs a >= 1, l >= 2, 1 <= h <= l-1, got {(a, l, h)}")
    g = l - h - 1
    return 2 * x_kpkp_b3(a, g + 1, h - 1) - x_lollipop(3, h - 1) * x_lollipop(a, g)
