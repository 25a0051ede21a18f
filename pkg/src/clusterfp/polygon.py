"""Polygon realization of the rank-n B/C cluster structures.

Cluster variables correspond to antipodal orbits of diagonals of a regular
(2n+2)-gon, clusters to maximal centrally-symmetric non-crossing sets, and
mutation to quadrilateral flips.  Crossing counts against the initial snake
read off denominator vectors, giving a model-independent cross-check of the
mutation oracle.
"""

from dataclasses import dataclass

from .errors import NotARoot, QuadrilateralNotFound, WrongType
from .exchange import CartanType, classify_cartan_type, positive_roots


def theta(a: int, n: int) -> int:
    """Antipodal vertex on the (2n+2)-gon."""
    return (a + n + 1) % (2 * n + 2)


def diag(a: int, b: int) -> frozenset:
    return frozenset((a, b))


def theta_diag(d: frozenset, n: int) -> frozenset:
    return frozenset(theta(a, n) for a in d)


def is_diagonal(d: frozenset, n: int) -> bool:
    if len(d) != 2:
        return False
    a, b = sorted(d)
    m = 2 * n + 2
    return 0 <= a and b < m and (b - a) % m not in (1, m - 1)


def crosses(beta: frozenset, gamma: frozenset, n: int) -> bool:
    """Strict interior crossing; sharing an endpoint never counts."""
    if beta & gamma:
        return False
    a, b = sorted(beta)
    c, d = sorted(gamma)
    return (a < c < b) != (a < d < b)


def orbit_of(d: frozenset, n: int) -> frozenset:
    return frozenset((d, theta_diag(d, n)))


@dataclass(frozen=True)
class DiagonalSet:
    """Maximal antipodally-closed non-crossing diagonal collection."""

    n: int
    family: str
    diagonals: frozenset
    alphas: tuple = None  # snake order, only set on the initial set

    def orbits(self) -> frozenset:
        return frozenset(orbit_of(d, self.n) for d in self.diagonals)


def all_diagonals(n: int):
    m = 2 * n + 2
    out = []
    for a in range(m):
        for b in range(a + 2, m):
            if (b - a) % m in (1, m - 1):
                continue
            out.append(diag(a, b))
    return out


def is_maximal_diagonal_set(ds: DiagonalSet) -> bool:
    ds_list = sorted(ds.diagonals, key=sorted)
    for i, d1 in enumerate(ds_list):
        if not is_diagonal(d1, ds.n):
            return False
        if theta_diag(d1, ds.n) not in ds.diagonals:
            return False
        for d2 in ds_list[i + 1 :]:
            if crosses(d1, d2, ds.n):
                return False
    for d in all_diagonals(ds.n):
        if d not in ds.diagonals and not any(
            crosses(d, e, ds.n) for e in ds.diagonals
        ):
            return False
    return True


def initial_snake(B) -> DiagonalSet:
    """Zigzag of diagonals encoding the acyclic initial matrix.

    The first diagonal cuts off vertex 1; each next one pivots off the
    previous, stepping clockwise along the boundary exactly when the path
    arrow points forward.  The last diagonal lands on a diameter, and the
    antipodal copies of the rest complete the set.
    """
    t, perm = classify_cartan_type(B)
    n = t.rank
    if t.family not in ("B", "C") or perm != tuple(range(n)):
        raise WrongType(
            f"polygon model needs a canonically labeled B or C matrix, got {t} with perm {perm}"
        )
    m = 2 * n + 2
    alphas = [diag(0, 2)]
    for i in range(1, n):
        clockwise = B[i][i - 1] > 0
        step = -1 if clockwise else 1
        prev = alphas[-1]
        cands = []
        for pivot in prev:
            (other,) = prev - {pivot}
            new = diag(pivot, (other + step) % m)
            if not is_diagonal(new, n):
                continue
            if new in alphas:
                continue
            if any(crosses(new, a, n) for a in alphas):
                continue
            cands.append(new)
        assert len(cands) == 1, f"snake step {i} is ambiguous: {cands}"
        alphas.append(cands[0])
    assert alphas[-1] == theta_diag(alphas[-1], n), "snake must end on a diameter"
    full = set(alphas)
    for a in alphas[:-1]:
        full.add(theta_diag(a, n))
    ds = DiagonalSet(n, t.family, frozenset(full), tuple(alphas))
    assert is_maximal_diagonal_set(ds)
    return ds


def denominator_of_orbit(o: frozenset, snake: DiagonalSet, t: CartanType):
    """Crossing counts against the snake, ordered by snake position.

    The long-root family counts how often each snake diagonal meets the
    orbit; the short-root family counts how often one orbit member meets
    each snake orbit.  Either way the result must be a positive root.
    """
    if snake.alphas is None:
        raise ValueError("need the initial snake with its diagonal order")
    n = snake.n
    d = []
    for alpha in snake.alphas:
        if t.family == "B":
            d.append(sum(1 for g in o if crosses(alpha, g, n)))
        else:
            beta = min(o, key=sorted)
            snake_orbit = {alpha, theta_diag(alpha, n)}
            d.append(sum(1 for g in snake_orbit if crosses(beta, g, n)))
    d = tuple(d)
    if d not in positive_roots(t):
        raise NotARoot(f"crossing vector {d} of orbit {sorted(map(sorted, o))} is not a root")
    return d


def _arc(a: int, b: int, m: int):
    """Vertices strictly between a and b counterclockwise."""
    out = []
    x = (a + 1) % m
    while x != b:
        out.append(x)
        x = (x + 1) % m
    return out


def _quadrilateral(ds: DiagonalSet, beta: frozenset):
    """Vertices (a, b, c, f) counterclockwise with beta = [a, c]."""
    n = ds.n
    m = 2 * n + 2
    a, c = sorted(beta)

    def present(x, y):
        if (y - x) % m in (1, m - 1):
            return True
        return diag(x, y) in ds.diagonals

    def apex(lo, hi):
        cands = [x for x in _arc(lo, hi, m) if present(lo, x) and present(x, hi)]
        if len(cands) != 1:
            raise QuadrilateralNotFound(
                f"no unique triangle over {sorted(beta)} between {lo} and {hi}"
            )
        return cands[0]

    return a, apex(a, c), c, apex(c, a)


def flip(ds: DiagonalSet, o: frozenset) -> DiagonalSet:
    """Exchange an orbit for the crossing orbit of its quadrilaterals."""
    n = ds.n
    if not o <= ds.diagonals:
        raise ValueError("orbit must lie inside the diagonal set")
    beta = min(o, key=sorted)
    a, b, c, f = _quadrilateral(ds, beta)
    new = diag(b, f)
    out = set(ds.diagonals) - set(o)
    out.add(new)
    out.add(theta_diag(new, n))
    res = DiagonalSet(n, ds.family, frozenset(out))
    assert is_maximal_diagonal_set(res)
    return res


def exchange_entries(ds: DiagonalSet, labeling, k: int):
    """Column k of the exchange matrix read off the quadrilateral at k.

    Sides of the quadrilateral contribute with alternating signs; a
    diameter in the row orbit scales by 2/r, a diameter at k by r, with
    r = 1 on the long-root side and 2 on the short-root side.
    """
    n = ds.n
    r = 1 if ds.family == "B" else 2
    orbit_k = labeling[k]
    beta = min(orbit_k, key=sorted)
    a, b, c, f = _quadrilateral(ds, beta)
    k_diameter = len(orbit_k) == 1
    col = [0] * len(labeling)
    seen: dict[int, int] = {}
    sides = [(diag(a, b), 1), (diag(b, c), -1), (diag(c, f), 1), (diag(a, f), -1)]
    for side, sign in sides:
        if side not in ds.diagonals:
            continue
        so = orbit_of(side, n)
        i = next(j for j, lab in enumerate(labeling) if lab == so)
        if len(so) == 1:
            mag = 2 // r
        elif k_diameter:
            mag = r
        else:
            mag = 1
        val = sign * mag
        if i in seen:
            # antipodal side pair of a diameter quadrilateral: one entry
            assert seen[i] == val
            continue
        seen[i] = val
        col[i] = val
    return col


def diagonal_set_json(ds: DiagonalSet) -> dict:
    return {
        "n": ds.n,
        "type": ds.family,
        "diagonals": sorted(sorted(d) for d in ds.diagonals),
    }
