"""Exchange matrices: mutation, symmetrizers, type recognition, positive roots.

Matrices are plain lists of lists of ints, row-major, possibly rectangular
(m rows, n columns with m >= n; rows beyond n carry coefficient data).
Vertices are 0-based everywhere in the library; the CLI translates to the
1-based labels used in the JSON interchange formats.

Canonical vertex labels for the four classical families: A, B, C are the path
0-1-...-(n-1); D is the path 0-...-(n-3) with two extra leaves n-2 and n-1
attached at the fork n-3.  For B the last edge has |b[n-2][n-1]| = 1 and
|b[n-1][n-2]| = 2; for C the two magnitudes are swapped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm

from .errors import NotAcyclic, NotClassicalType, NotSkewSymmetrizable

__all__ = [
    "CartanType",
    "all_orientations",
    "classify_cartan_type",
    "dynkin_edges",
    "edge_magnitudes",
    "is_acyclic",
    "matrix_from_arrows",
    "mutate_matrix",
    "pos_part",
    "positive_roots",
    "principal_extension",
    "principal_part",
    "quiver_of",
    "relabel_matrix",
    "signum",
    "skew_symmetrizer",
]


def pos_part(x: int) -> int:
    return x if x > 0 else 0


def signum(x: int) -> int:
    return (x > 0) - (x < 0)


def copy_matrix(B: list[list[int]]) -> list[list[int]]:
    return [row[:] for row in B]


def _check_rect(B: list[list[int]]) -> tuple[int, int]:
    m = len(B)
    if m == 0:
        raise ValueError("empty matrix")
    n = len(B[0])
    if any(len(row) != n for row in B):
        raise ValueError("ragged matrix")
    if n > m:
        raise ValueError("more columns than rows")
    for row in B:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValueError("matrix entries must be ints")
    return m, n


def mutate_matrix(B: list[list[int]], k: int) -> list[list[int]]:
    """One matrix mutation in direction k.  Involutive: mutating twice at the
    same k returns the original matrix."""
    m, n = _check_rect(B)
    if not 0 <= k < n:
        raise ValueError(f"direction {k} out of range for {n} columns")
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        bik = B[i][k]
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -B[i][j]
            else:
                out[i][j] = B[i][j] + signum(bik) * pos_part(bik * B[k][j])
    return out


def principal_extension(B: list[list[int]]) -> list[list[int]]:
    """Stack an identity block under the square matrix B."""
    m, n = _check_rect(B)
    if m != n:
        raise ValueError("principal extension needs a square matrix")
    ext = copy_matrix(B)
    for i in range(n):
        ext.append([int(i == j) for j in range(n)])
    return ext


def principal_part(B: list[list[int]]) -> list[list[int]]:
    _, n = _check_rect(B)
    return [row[:] for row in B[:n]]


def skew_symmetrizer(B: list[list[int]]) -> list[int]:
    """Minimal positive integer vector delta with delta[i]*b[i][j] equal to
    -delta[j]*b[j][i] for all i, j.  Raises NotSkewSymmetrizable when no such
    vector exists.  Entries are normalized so their overall gcd is 1."""
    m, n = _check_rect(B)
    if m != n:
        raise NotSkewSymmetrizable("symmetrizer defined for square matrices only")
    for i in range(n):
        if B[i][i] != 0:
            raise NotSkewSymmetrizable(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            a, b = B[i][j], B[j][i]
            if (a == 0) != (b == 0):
                raise NotSkewSymmetrizable(f"zero pattern not symmetric at ({i},{j})")
            if a != 0 and signum(a) == signum(b):
                raise NotSkewSymmetrizable(f"entries ({i},{j}) do not have opposite signs")
    # propagate ratios over each connected component, then cross-check all pairs
    delta: list[Fraction | None] = [None] * n
    for root in range(n):
        if delta[root] is not None:
            continue
        delta[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0:
                    continue
                val = delta[i] * Fraction(abs(B[i][j]), abs(B[j][i]))
                if delta[j] is None:
                    delta[j] = val
                    stack.append(j)
    for i in range(n):
        for j in range(n):
            if delta[i] * B[i][j] != -delta[j] * B[j][i]:
                raise NotSkewSymmetrizable(f"ratio conflict at ({i},{j})")
    scale = lcm(*(f.denominator for f in delta)) if n else 1
    ints = [int(f * scale) for f in delta]
    g = gcd(*ints) if n else 1
    return [x // g for x in ints]


def quiver_of(B: list[list[int]]) -> list[tuple[int, int, int]]:
    """Arrows (i, j, w) with i -> j of weight w = b[j][i] > 0, restricted to the
    square principal part."""
    _, n = _check_rect(B)
    return [
        (i, j, B[j][i])
        for i in range(n)
        for j in range(n)
        if B[j][i] > 0
    ]


def is_acyclic(B: list[list[int]]) -> bool:
    """True when the quiver of the principal part has no oriented cycle."""
    _, n = _check_rect(B)
    arrows = quiver_of(B)
    indeg = [0] * n
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, j, _ in arrows:
        indeg[j] += 1
        succ[i].append(j)
    ready = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == n


@dataclass(frozen=True)
class CartanType:
    """One of the four classical families at a given rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "B", "C", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        low = {"A": 1, "B": 2, "C": 2, "D": 4}[self.family]
        if self.rank < low:
            raise ValueError(f"{self.family}_{self.rank} below minimal rank {low}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def dynkin_edges(t: CartanType) -> list[tuple[int, int]]:
    """Undirected diagram edges (u, v) with u < v, canonical labels."""
    n = t.rank
    if t.family == "D":
        path = [(i, i + 1) for i in range(n - 3)]
        return path + [(n - 3, n - 2), (n - 3, n - 1)]
    return [(i, i + 1) for i in range(n - 1)]


def edge_magnitudes(t: CartanType, u: int, v: int) -> tuple[int, int]:
    """(|b[u][v]|, |b[v][u]|) for a diagram edge {u, v} in canonical labels."""
    n = t.rank
    if {u, v} == {n - 2, n - 1} and t.family in ("B", "C"):
        one_two = (1, 2) if t.family == "B" else (2, 1)
        return one_two if (u, v) == (n - 2, n - 1) else one_two[::-1]
    return (1, 1)


def matrix_from_arrows(t: CartanType, arrows) -> list[list[int]]:
    """Exchange matrix of the given orientation.  `arrows` lists each diagram
    edge exactly once as an ordered pair (tail, head), 0-based."""
    n = t.rank
    edges = {frozenset(e) for e in dynkin_edges(t)}
    seen = set()
    B = [[0] * n for _ in range(n)]
    for i, j in arrows:
        e = frozenset((i, j))
        if e not in edges:
            raise ValueError(f"({i},{j}) is not a diagram edge of {t}")
        if e in seen:
            raise ValueError(f"edge {{{i},{j}}} oriented twice")
        seen.add(e)
        mij, mji = edge_magnitudes(t, i, j)
        B[j][i] = mji
        B[i][j] = -mij
    if seen != edges:
        raise ValueError("orientation must cover every diagram edge exactly once")
    return B


def all_orientations(t: CartanType):
    """Yield every acyclic orientation as a tuple of (tail, head) arrows.
    Diagram shapes are trees, so every orientation qualifies."""
    edges = dynkin_edges(t)
    for choice in product((0, 1), repeat=len(edges)):
        yield tuple((v, u) if c else (u, v) for (u, v), c in zip(edges, choice))


def relabel_matrix(B: list[list[int]], perm: tuple[int, ...]) -> list[list[int]]:
    """Push B through the vertex relabeling i -> perm[i]."""
    n = len(B)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = B[i][j]
    return out


def _path_order(adj: list[list[int]], start: int) -> list[int]:
    order = [start]
    prev = -1
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def classify_cartan_type(B: list[list[int]]):
    """Recognize which orientation of which classical diagram B is.

    Returns (CartanType, perm) where perm[i] is the canonical label of input
    vertex i; relabel_matrix(B, perm) is canonically labeled.  The identity
    relabeling is preferred whenever valid, otherwise the lexicographically
    smallest one.  Raises NotClassicalType or NotAcyclic.
    """
    m, n = _check_rect(B)
    if m != n:
        raise NotClassicalType("expected a square matrix")
    for i in range(n):
        if B[i][i] != 0:
            raise NotClassicalType(f"nonzero diagonal entry at {i}")
    edges: dict[frozenset, tuple[int, int]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            a, b = B[i][j], B[j][i]
            if a == 0 and b == 0:
                continue
            if a == 0 or b == 0 or signum(a) == signum(b):
                raise NotClassicalType(f"entries ({i},{j}) lack opposite signs")
            if abs(a * b) > 2:
                raise NotClassicalType(f"edge ({i},{j}) weight product {abs(a*b)} > 2")
            edges[frozenset((i, j))] = (abs(a), abs(b))
    if n == 1:
        return CartanType("A", 1), (0,)
    # connected tree shape: n-1 edges and everything reachable
    if len(edges) != n - 1:
        raise NotClassicalType("diagram is not a tree")
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        u, v = sorted(e)
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != n:
        raise NotClassicalType("diagram is not connected")
    if not is_acyclic(B):
        raise NotAcyclic("the quiver has an oriented cycle")

    degrees = [len(a) for a in adj]
    if max(degrees) > 3:
        raise NotClassicalType("a vertex has more than three neighbors")
    forks = [v for v in range(n) if degrees[v] == 3]
    heavy = [e for e, mags in edges.items() if mags[0] * mags[1] == 2]
    if len(heavy) > 1:
        raise NotClassicalType("more than one weighted edge")
    if forks and heavy:
        raise NotClassicalType("weighted edge and branch vertex cannot coexist")
    if len(forks) > 1:
        raise NotClassicalType("more than one branch vertex")

    candidates: list[tuple[str, tuple[int, ...]]] = []
    if forks:
        if n < 4:
            raise NotClassicalType("branch vertex needs rank at least 4")
        c = forks[0]
        legs = []
        for first in adj[c]:
            leg = [first]
            prev, cur = c, first
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                leg.append(cur)
            legs.append(leg)
        lengths = sorted(len(l) for l in legs)
        if lengths[:2] != [1, 1] or lengths[2] != n - 3:
            raise NotClassicalType("branch legs do not form a D-shaped diagram")
        for p in range(3):
            if len(legs[p]) != n - 3:
                continue
            for q, r in ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)):
                if q == p or r == p or len(legs[q]) != 1 or len(legs[r]) != 1:
                    continue
                order = legs[p][::-1] + [c, legs[q][0], legs[r][0]]
                candidates.append(("D", order_to_perm(order)))
    else:
        ends = [v for v in range(n) if degrees[v] == 1]
        for start in ends:
            order = _path_order(adj, start)
            if heavy:
                u, v = order[-2], order[-1]
                if frozenset((u, v)) != heavy[0]:
                    continue
                if abs(B[v][u]) == 2:
                    candidates.append(("B", order_to_perm(order)))
                else:
                    candidates.append(("C", order_to_perm(order)))
            else:
                candidates.append(("A", order_to_perm(order)))
    if not candidates:
        raise NotClassicalType("weighted edge is not at the end of the path")
    identity = tuple(range(n))
    for fam, perm in candidates:
        if perm == identity:
            return CartanType(fam, n), perm
    fam, perm = min(candidates, key=lambda fp: fp[1])
    return CartanType(fam, n), perm


def order_to_perm(order: list[int]) -> tuple[int, ...]:
    """Invert a canonical-position ordering into a relabeling map."""
    perm = [0] * len(order)
    for pos, vertex in enumerate(order):
        perm[vertex] = pos
    return tuple(perm)


def _runs(n: int, lo: int, hi: int) -> tuple[int, ...]:
    return tuple(1 if lo <= i <= hi else 0 for i in range(n))


@lru_cache(maxsize=None)
def positive_roots(t: CartanType) -> tuple[tuple[int, ...], ...]:
    """All positive roots as coefficient vectors on the simple roots, in
    canonical labels, sorted lexicographically.  Counts: A_n n(n+1)/2,
    B_n and C_n n^2, D_n n(n-1)."""
    n = t.rank
    roots: set[tuple[int, ...]] = set()
    if t.family in ("A", "B", "C"):
        for i in range(n):
            for j in range(i, n):
                roots.add(_runs(n, i, j))
    if t.family == "B":
        for i in range(n):
            for j in range(i + 1, n):
                roots.add(tuple(1 if i <= k < j else 2 if j <= k else 0 for k in range(n)))
    if t.family == "C":
        for i in range(n - 1):
            for j in range(i, n - 1):
                roots.add(
                    tuple(
                        1 if i <= k < j else 2 if j <= k <= n - 2 else 1 if k == n - 1 else 0
                        for k in range(n)
                    )
                )
    if t.family == "D":
        for i in range(n):
            for j in range(i, n):
                if (i, j) != (n - 2, n - 1):
                    roots.add(_runs(n, i, j))
        for i in range(n - 2):
            roots.add(tuple(1 if i <= k <= n - 3 or k == n - 1 else 0 for k in range(n)))
        for i in range(n - 3):
            for j in range(i + 1, n - 2):
                roots.add(
                    tuple(
                        1 if i <= k < j else 2 if j <= k <= n - 3 else 1
                        if k >= n - 2 else 0
                        for k in range(n)
                    )
                )
    expected = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[t.family]
    assert len(roots) == expected, (t, len(roots), expected)
    return tuple(sorted(roots))
