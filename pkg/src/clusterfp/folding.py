"""Folding of exchange matrices along an order-2 quiver symmetry.

Summing entries over symmetry orbits turns a skew-symmetric matrix into a
skew-symmetrizable quotient; cluster data computed upstairs projects onto
cluster data of the quotient.  The reverse direction (unfolding) rebuilds
the doubled matrix for the two classical fold shapes: a C-type quotient
lifts to a path quiver of odd rank, a B-type quotient lifts to a forked
quiver one vertex larger.
"""

from dataclasses import dataclass

from .errors import NoUnfoldedRoot, NotAdmissible, NotInvariant, WrongType
from .exchange import (
    classify_cartan_type,
    copy_matrix,
    dynkin_edges,
    is_acyclic,
    mutate_matrix,
    principal_extension,
)
from .laurent import LaurentPoly
from .oracle import Seed, mutate_seed


def _involution_orbits(sigma):
    seen = set()
    out = []
    for i in range(len(sigma)):
        if i in seen:
            continue
        o = tuple(sorted({i, sigma[i]}))
        seen.update(o)
        out.append(o)
    return tuple(out)


@dataclass(frozen=True)
class FoldingGroup:
    """Order-2 symmetry given by its generator permutation (0-based)."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        s = tuple(self.sigma)
        object.__setattr__(self, "sigma", s)
        n = len(s)
        if sorted(s) != list(range(n)):
            raise ValueError("generator must permute 0..n-1")
        if any(s[s[i]] != i for i in range(n)):
            raise ValueError("generator must be an involution")

    @property
    def rank(self) -> int:
        return len(self.sigma)

    @property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        return _involution_orbits(self.sigma)

    def apply(self, i: int) -> int:
        """Image of a row index; indices past rank act on the shifted copy."""
        n = len(self.sigma)
        return self.sigma[i] if i < n else self.sigma[i - n] + n

    def orbit_symmetrizer(self) -> tuple[int, ...]:
        # stabilizer order per orbit: the whole group on fixed points,
        # trivial on swapped pairs; a trivial generator gives all ones
        order = 2 if any(self.sigma[i] != i for i in range(len(self.sigma))) else 1
        return tuple(order // len(o) for o in self.orbits)


def _shape(B):
    m = len(B)
    n = len(B[0]) if m else 0
    return m, n


def _row_orbits(group: FoldingGroup, m: int):
    n = group.rank
    if m == n:
        return group.orbits
    if m == 2 * n:
        return group.orbits + tuple(
            tuple(x + n for x in o) for o in group.orbits
        )
    raise ValueError("matrix must have rank or twice-rank many rows")


def check_invariant(B, group: FoldingGroup) -> None:
    """Raise unless the symmetry fixes the matrix entry-wise."""
    m, n = _shape(B)
    if n != group.rank:
        raise ValueError("column count must equal the symmetry rank")
    _row_orbits(group, m)
    for i in range(m):
        si = group.apply(i)
        for j in range(n):
            if B[si][group.sigma[j]] != B[i][j]:
                raise NotInvariant(
                    f"entry ({i},{j}) moves to ({si},{group.sigma[j]}) "
                    f"with a different value"
                )


def quotient_matrix(B, group: FoldingGroup):
    """Sum rows over orbits at one column per orbit (any choice agrees)."""
    check_invariant(B, group)
    m, n = _shape(B)
    cols = group.orbits
    out = []
    for oi in _row_orbits(group, m):
        row = []
        for oj in cols:
            vals = {sum(B[l][r] for l in oi) for r in oj}
            if len(vals) != 1:
                raise NotInvariant(
                    f"orbit column sums disagree across representatives of {oj}"
                )
            row.append(vals.pop())
        out.append(row)
    return out


def is_admissible(B, group: FoldingGroup) -> bool:
    """No arrows may run inside an orbit."""
    for orbit in group.orbits:
        for i in orbit:
            for j in orbit:
                if i != j and B[i][j] != 0:
                    return False
    return True


def is_strongly_admissible(B, group: FoldingGroup) -> bool:
    """Admissible, with rows and columns weakly sign-coherent per orbit."""
    if not is_admissible(B, group):
        return False
    m, n = _shape(B)
    for orbit in _row_orbits(group, m):
        for a in orbit:
            for b in orbit:
                if a < b and any(B[a][l] * B[b][l] < 0 for l in range(n)):
                    return False
    for orbit in group.orbits:
        for a in orbit:
            for b in orbit:
                if a < b and any(B[l][a] * B[l][b] < 0 for l in range(m)):
                    return False
    return True


def orbit_mutation(x, omega):
    """Mutate at every index of an orbit; the order must not matter.

    Accepts a seed or a (possibly extended) matrix and returns the same
    kind.  Raises when arrows inside the orbit would make the mutation
    order-dependent.
    """
    om = tuple(sorted(set(omega)))
    B = x.bmat if isinstance(x, Seed) else x
    for i in om:
        for j in om:
            if i != j and B[i][j] != 0:
                raise NotAdmissible(f"arrow between {i} and {j} inside the orbit")
    if isinstance(x, Seed):
        up = x
        for k in om:
            up = mutate_seed(up, k)
        down = x
        for k in reversed(om):
            down = mutate_seed(down, k)
        assert up == down
        return up
    up = copy_matrix(x)
    for k in om:
        up = mutate_matrix(up, k)
    down = copy_matrix(x)
    for k in reversed(om):
        down = mutate_matrix(down, k)
    assert up == down
    return up


def quotient_vector(v, group: FoldingGroup) -> tuple[int, ...]:
    """Sum vector entries over orbits, in orbit order."""
    return tuple(sum(v[i] for i in o) for o in group.orbits)


def project_polynomial(F: LaurentPoly, group: FoldingGroup) -> LaurentPoly:
    """Identify variables along orbits: each exponent vector orbit-sums."""
    if F.nvars != group.rank:
        raise ValueError("polynomial arity must equal the symmetry rank")
    orbits = group.orbits
    slot = {}
    for k, o in enumerate(orbits):
        for i in o:
            slot[i] = k
    out: dict[tuple[int, ...], int] = {}
    for e, c in F.terms.items():
        pe = [0] * len(orbits)
        for i, x in enumerate(e):
            pe[slot[i]] += x
        key = tuple(pe)
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return LaurentPoly(len(orbits), out)


def _expected_unfolded_edges(family: str, n: int):
    if family == "C":
        return {frozenset((i, i + 1)) for i in range(2 * n - 2)}
    # B: path plus a two-pronged tip on a matrix one vertex larger
    edges = {frozenset((i, i + 1)) for i in range(n - 2)}
    edges.add(frozenset((n - 2, n - 1)))
    edges.add(frozenset((n - 2, n)))
    return edges


def unfold(bbar):
    """Lift a B- or C-type matrix to its doubled skew-symmetric shape.

    Base-path entries are copied, the doubled entry collapses to its sign,
    and the remaining entries are forced by symmetry-invariance plus
    skew-symmetry.  Returns the lifted matrix and the symmetry.
    """
    t, perm = classify_cartan_type(bbar)
    n = t.rank
    if t.family not in ("B", "C") or perm != tuple(range(n)):
        raise WrongType(f"unfolding needs a canonically labeled B or C matrix, got {t} with perm {perm}")
    if t.family == "C":
        N = 2 * n - 1
        sigma = tuple(N - 1 - i for i in range(N))
        B = [[0] * N for _ in range(N)]
        for i in range(n - 1):
            if i < n - 2:
                B[i][i + 1] = bbar[i][i + 1]
                B[i + 1][i] = bbar[i + 1][i]
            else:
                B[i][i + 1] = bbar[i][i + 1] // 2
                B[i + 1][i] = bbar[i + 1][i]
        for k in range(n - 1, N - 1):
            B[k][k + 1] = B[N - 1 - k][N - 2 - k]
            B[k + 1][k] = B[N - 2 - k][N - 1 - k]
    else:
        N = n + 1
        sigma = tuple(range(n - 1)) + (n, n - 1)
        B = [[0] * N for _ in range(N)]
        for i in range(n - 2):
            B[i][i + 1] = bbar[i][i + 1]
            B[i + 1][i] = bbar[i + 1][i]
        beta = bbar[n - 2][n - 1]
        gamma = bbar[n - 1][n - 2] // 2
        B[n - 2][n - 1] = B[n - 2][n] = beta
        B[n - 1][n - 2] = B[n][n - 2] = gamma
    group = FoldingGroup(sigma)
    assert all(B[i][j] == -B[j][i] for i in range(N) for j in range(N))
    assert is_acyclic(B)
    check_invariant(B, group)
    assert quotient_matrix(B, group) == [list(r) for r in bbar]
    got_edges = {
        frozenset((i, j)) for i in range(N) for j in range(N) if B[i][j] != 0
    }
    assert got_edges == _expected_unfolded_edges(t.family, n)
    return B, group


def verify_folding(bbar, bar_table, unfolded_table, group: FoldingGroup):
    """Match every quotient root to an unfolded one and compare invariants.

    Returns one report per quotient root: the matched unfolded denominator
    (lexicographically first among candidates) and whether the projected
    polynomial and summed degree vector agree.
    """
    by_dbar: dict[tuple[int, ...], list] = {}
    for d in unfolded_table:
        ent = unfolded_table[d]
        by_dbar.setdefault(quotient_vector(ent.d, group), []).append(ent)
    reports = []
    for dbar in bar_table:
        ent = bar_table[dbar]
        cands = by_dbar.get(ent.d)
        if not cands:
            raise NoUnfoldedRoot(f"no unfolded root projects onto {ent.d}")
        m = min(cands, key=lambda e: e.d)
        reports.append(
            {
                "dbar": list(ent.d),
                "dprime": list(m.d),
                "f_match": project_polynomial(m.F, group) == ent.F,
                "g_match": quotient_vector(m.g, group) == ent.g,
            }
        )
    return reports


def _sink_source_orbits(B, group: FoldingGroup):
    n = group.rank
    out = []
    for orbit in group.orbits:
        if all(all(B[j][k] <= 0 for j in range(n)) for k in orbit):
            out.append(orbit)
        elif all(all(B[k][j] <= 0 for j in range(n)) for k in orbit):
            out.append(orbit)
    return out


def check_strong_admissibility_reachable(B, group: FoldingGroup, cap: int = 200) -> int:
    """Walk orbit mutations at all-sink/all-source orbits from [B; I].

    Every matrix reached within the cap must be strongly admissible;
    returns how many matrices were checked.
    """
    start = tuple(tuple(r) for r in principal_extension(B))
    seen = {start}
    queue = [start]
    checked = 0
    while queue and checked < cap:
        cur = queue.pop(0)
        curl = [list(r) for r in cur]
        if not is_strongly_admissible(curl, group):
            raise AssertionError("reached a matrix that is not strongly admissible")
        checked += 1
        for orbit in _sink_source_orbits(curl, group):
            nxt = orbit_mutation(curl, orbit)
            key = tuple(tuple(r) for r in nxt)
            if key not in seen:
                seen.add(key)
                queue.append(key)
    return checked
