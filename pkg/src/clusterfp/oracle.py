"""Seed mutation with principal coefficients, and exchange-graph enumeration.

This module is the reference route: cluster variables are computed by honest
seed mutation in the Laurent ring Z[x1..xn, y1..yn] (coefficient variables
live in the last n slots), and F-polynomials, g-vectors and denominator
vectors are read off the variables afterwards.  Closed formulas elsewhere in
the package are always checked against this one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import (
    AmbiguousGVector,
    CapExceeded,
    ExtraRoot,
    LaurentPhenomenonViolation,
    MissingRoot,
    NoConstantTerm,
    NotDivisible,
    NotPolynomial,
)
from .exchange import classify_cartan_type, mutate_matrix, positive_roots, principal_extension
from .laurent import LaurentPoly, lp_add, lp_div_exact, lp_mul

__all__ = [
    "ClusterEntry",
    "ClusterTable",
    "Seed",
    "enumerate_finite_type",
    "extract_denominator",
    "extract_f_polynomial",
    "extract_g_vector",
    "initial_seed",
    "mutate_seed",
    "y_hat_images",
]


@dataclass(frozen=True)
class Seed:
    """n cluster variables (Laurent polynomials in 2n variables) plus the
    extended 2n x n exchange matrix."""

    cluster: tuple[LaurentPoly, ...]
    bmat: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cluster)


def initial_seed(B: list[list[int]]) -> Seed:
    n = len(B)
    ext = principal_extension(B)
    cluster = tuple(LaurentPoly.variable(2 * n, i) for i in range(n))
    return Seed(cluster, tuple(tuple(row) for row in ext))


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Exchange the k-th cluster variable:
    x_k' = (prod_{b[i][k]>0} xt_i^{b[i][k]} + prod_{b[i][k]<0} xt_i^{-b[i][k]}) / x_k
    where xt runs over cluster variables and coefficient variables.  The
    division is exact; failure would mean the Laurent property broke."""
    n = seed.rank
    m = 2 * n
    if not 0 <= k < n:
        raise ValueError(f"direction {k} out of range")
    pos = LaurentPoly.one(m)
    neg = LaurentPoly.one(m)
    pos_y = [0] * m
    neg_y = [0] * m
    for i in range(m):
        b = seed.bmat[i][k]
        if b == 0:
            continue
        if i < n:
            if b > 0:
                pos = lp_mul(pos, seed.cluster[i] ** b)
            else:
                neg = lp_mul(neg, seed.cluster[i] ** (-b))
        elif b > 0:
            pos_y[i] = b
        else:
            neg_y[i] = -b
    pos = lp_mul(pos, LaurentPoly.monomial(m, tuple(pos_y)))
    neg = lp_mul(neg, LaurentPoly.monomial(m, tuple(neg_y)))
    try:
        new_var = lp_div_exact(lp_add(pos, neg), seed.cluster[k])
    except NotDivisible as exc:
        raise LaurentPhenomenonViolation(
            f"exchange at direction {k} produced a non-Laurent quotient"
        ) from exc
    cluster = seed.cluster[:k] + (new_var,) + seed.cluster[k + 1 :]
    bmat = tuple(tuple(row) for row in mutate_matrix([list(r) for r in seed.bmat], k))
    return Seed(cluster, bmat)


def extract_f_polynomial(x: LaurentPoly, n: int) -> LaurentPoly:
    """Specialize the cluster variables to 1, keeping the coefficient
    variables.  Must come out a polynomial with constant term 1."""
    grouped: dict[tuple[int, ...], int] = {}
    for e, c in x.terms.items():
        tail = e[n:]
        grouped[tail] = grouped.get(tail, 0) + c
    F = LaurentPoly(n, grouped)
    if F.is_zero() or any(v < 0 for e in F.terms for v in e):
        raise NotPolynomial(f"specialization has negative exponents: {sorted(F.terms)[:3]}")
    if F.constant_term() != 1:
        raise NoConstantTerm(f"constant term is {F.constant_term()}, not 1")
    return F


def extract_g_vector(x: LaurentPoly, n: int) -> tuple[int, ...]:
    """Exponent of the unique coefficient-free monomial of x."""
    free = [e[:n] for e in x.terms if not any(e[n:])]
    if len(free) != 1:
        raise AmbiguousGVector(f"{len(free)} coefficient-free terms")
    return free[0]


def extract_denominator(x: LaurentPoly, n: int) -> tuple[int, ...]:
    """d_i = -(lowest power of x_i): positive entries mark true denominators,
    an initial variable x_l shows up as -e_l."""
    mins = x.min_exponents()
    return tuple(-mins[i] for i in range(n))


def y_hat_images(B: list[list[int]]) -> list[LaurentPoly]:
    """Monomials yh_j = y_j * prod_i x_i^{b[i][j]} in the 2n-variable ring.
    Substituting them into the F-polynomial and multiplying by x^g rebuilds
    the cluster variable."""
    n = len(B)
    out = []
    for j in range(n):
        e = [B[i][j] for i in range(n)] + [0] * n
        e[n + j] = 1
        out.append(LaurentPoly.monomial(2 * n, tuple(e)))
    return out


@dataclass(frozen=True)
class ClusterEntry:
    d: tuple[int, ...]
    g: tuple[int, ...]
    F: LaurentPoly
    path: tuple[int, ...]


@dataclass
class ClusterTable:
    """Every non-initial cluster variable of a finite-type algebra, keyed by
    denominator vector (in the caller's vertex labeling)."""

    cartan_type: object
    matrix: list[list[int]]
    entries: dict = field(default_factory=dict)
    num_seeds: int = 0

    def __getitem__(self, d) -> ClusterEntry:
        return self.entries[tuple(d)]

    def __iter__(self):
        return iter(sorted(self.entries))

    def __len__(self) -> int:
        return len(self.entries)


def enumerate_finite_type(B: list[list[int]], cap: int = 10000) -> ClusterTable:
    """Breadth-first walk of the exchange graph from the initial seed, in
    ascending mutation directions, deduplicating seeds by the multiset of
    their cluster variables.  Verifies on the way out that the denominator
    vectors hit the positive roots of the classified type exactly once each.
    """
    t, perm = classify_cartan_type(B)
    n = len(B)
    # expected denominators, pushed back through the relabeling
    expected = {
        tuple(root[perm[i]] for i in range(n)) for root in positive_roots(t)
    }

    registry: dict[tuple, int] = {}
    polys: list[LaurentPoly] = []

    def intern(p: LaurentPoly) -> int:
        key = p.key()
        idx = registry.get(key)
        if idx is None:
            idx = len(polys)
            registry[key] = idx
            polys.append(p)
        return idx

    seed0 = initial_seed(B)
    ids0 = tuple(intern(x) for x in seed0.cluster)
    initial_ids = set(ids0)
    visited = {tuple(sorted(ids0))}
    queue = deque([(ids0, seed0.bmat, (), -1)])
    entries: dict[tuple[int, ...], ClusterEntry] = {}
    owner: dict[tuple[int, ...], int] = {}

    while queue:
        ids, bmat, path, back = queue.popleft()
        seed = Seed(tuple(polys[i] for i in ids), bmat)
        for k in range(n):
            if k == back:
                continue  # involutive step, target already visited
            new = mutate_seed(seed, k)
            var = new.cluster[k]
            vid = intern(var)
            if vid not in initial_ids:
                d = extract_denominator(var, n)
                if d in owner:
                    if owner[d] != vid:
                        raise ExtraRoot(
                            f"two distinct variables share denominator {d}"
                        )
                else:
                    owner[d] = vid
                    entries[d] = ClusterEntry(
                        d=d,
                        g=extract_g_vector(var, n),
                        F=extract_f_polynomial(var, n),
                        path=path + (k,),
                    )
            nids = ids[:k] + (vid,) + ids[k + 1 :]
            key = tuple(sorted(nids))
            if key not in visited:
                if len(visited) >= cap:
                    raise CapExceeded(f"more than {cap} seeds")
                visited.add(key)
                queue.append((nids, new.bmat, path + (k,), k))

    got = set(entries)
    if got - expected:
        raise ExtraRoot(f"unexpected denominators: {sorted(got - expected)}")
    if expected - got:
        raise MissingRoot(f"missing denominators: {sorted(expected - got)}")
    return ClusterTable(
        cartan_type=t, matrix=[row[:] for row in B], entries=entries,
        num_seeds=len(visited),
    )
