"""Differential verification suites.

Each suite pits an independent computation path against the mutation
oracle over an exhaustive small-rank corpus and reports every mismatch as
a structured record.  The command-line front end turns a non-empty
failure list into exit code 2.
"""

import random

from .closedform import (
    check_bar_symmetry,
    f_polynomial_closed,
    g_vector_closed,
    quantum_f_polynomial_closed,
)
from .errors import ClusterError
from .exchange import (
    CartanType,
    all_orientations,
    matrix_from_arrows,
    mutate_matrix,
    positive_roots,
)
from .folding import (
    check_strong_admissibility_reachable,
    quotient_matrix,
    unfold,
    verify_folding,
)
from .oracle import (
    enumerate_finite_type,
    extract_denominator,
    initial_seed,
    mutate_seed,
)
from .polygon import (
    denominator_of_orbit,
    exchange_entries,
    flip,
    initial_snake,
    orbit_of,
)
from .qtorus import specialize_classical

SUITES = ("formulas", "quantum", "folding", "polygon")


def _type_ranks(max_rank: int):
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        for n in range(lo, max_rank + 1):
            out.append(CartanType(fam, n))
    return out


def _arrows_1based(arrows):
    return sorted([a + 1, b + 1] for a, b in arrows)


def _failure(t, arrows, d=None, e=None, detail=""):
    return {
        "type": t.family,
        "rank": t.rank,
        "orientation": _arrows_1based(arrows),
        "d": list(d) if d is not None else None,
        "e": list(e) if e is not None else None,
        "detail": detail,
    }


def run_formulas(max_rank: int = 4):
    """Closed-formula polynomials and degree vectors against the oracle."""
    cases = 0
    failures = []
    for t in _type_ranks(max_rank):
        for arrows in all_orientations(t):
            B = matrix_from_arrows(t, arrows)
            table = enumerate_finite_type(B)
            for d in positive_roots(t):
                cases += 1
                ent = table[d]
                F = f_polynomial_closed(B, t, d)
                if F != ent.F:
                    keys = sorted(set(F.terms) | set(ent.F.terms))
                    for e in keys:
                        if F.terms.get(e, 0) != ent.F.terms.get(e, 0):
                            failures.append(
                                _failure(t, arrows, d, e, "coefficient differs")
                            )
                            break
                if g_vector_closed(B, d) != ent.g:
                    failures.append(_failure(t, arrows, d, None, "degree vector differs"))
    return {"suite": "formulas", "cases": cases, "failures": failures}


def run_quantum(max_rank: int = 4):
    """Specialization at q=1 and the bar-shift coefficient symmetry."""
    cases = 0
    failures = []
    for t in _type_ranks(max_rank):
        for arrows in all_orientations(t):
            B = matrix_from_arrows(t, arrows)
            for d in positive_roots(t):
                F = f_polynomial_closed(B, t, d)
                g = g_vector_closed(B, d)
                for ds in (1, 2):
                    cases += 1
                    P = quantum_f_polynomial_closed(B, t, ds, d)
                    if specialize_classical(P) != F:
                        failures.append(
                            _failure(t, arrows, d, None, f"q=1 specialization differs at d_scale={ds}")
                        )
                    if not check_bar_symmetry(P, g):
                        failures.append(
                            _failure(t, arrows, d, None, f"bar symmetry fails at d_scale={ds}")
                        )
    return {"suite": "quantum", "cases": cases, "failures": failures}


def run_folding(max_rank: int = 4):
    """Unfolded enumeration projects onto the folded one, root by root."""
    cases = 0
    failures = []
    for t in _type_ranks(max_rank):
        if t.family not in ("B", "C"):
            continue
        for arrows in all_orientations(t):
            bbar = matrix_from_arrows(t, arrows)
            B, group = unfold(bbar)
            if quotient_matrix(B, group) != bbar:
                failures.append(_failure(t, arrows, None, None, "round trip differs"))
                continue
            check_strong_admissibility_reachable(B, group)
            reports = verify_folding(
                bbar, enumerate_finite_type(bbar), enumerate_finite_type(B), group
            )
            for r in reports:
                cases += 1
                if not (r["f_match"] and r["g_match"]):
                    failures.append(
                        _failure(t, arrows, r["dbar"], None, f"projection mismatch via {r['dprime']}")
                    )
    return {"suite": "folding", "cases": cases, "failures": failures}


def run_polygon(max_rank: int = 4, sequences: int = 100, max_len: int = 20):
    """Flip walks against oracle mutation walks, step by step."""
    cases = 0
    failures = []
    for t in _type_ranks(min(max_rank, 4)):
        if t.family not in ("B", "C"):
            continue
        rng = random.Random(1000 * t.rank + ord(t.family))
        orients = sorted(all_orientations(t))
        n = t.rank
        for _ in range(sequences):
            arrows = rng.choice(orients)
            B0 = matrix_from_arrows(t, arrows)
            snake = initial_snake(B0)
            ds = snake
            labels = [orbit_of(a, n) for a in snake.alphas]
            alpha_orbit = dict(enumerate(labels))
            seed = initial_seed(B0)
            M = [row[:] for row in B0]
            for step in range(rng.randint(1, max_len)):
                k = rng.randrange(n)
                try:
                    ds2 = flip(ds, labels[k])
                except ClusterError as exc:
                    failures.append(
                        _failure(t, arrows, None, None, f"flip failed at step {step + 1}: {exc}")
                    )
                    break
                labels[k] = orbit_of(next(iter(ds2.diagonals - ds.diagonals)), n)
                ds = ds2
                seed = mutate_seed(seed, k)
                M = mutate_matrix(M, k)
                cases += 1
                for j in range(n):
                    if exchange_entries(ds, labels, j) != [M[i][j] for i in range(n)]:
                        failures.append(
                            _failure(t, arrows, None, None, f"exchange column {j + 1} differs at step {step + 1}")
                        )
                for i in range(n):
                    dv = extract_denominator(seed.cluster[i], n)
                    try:
                        if any(x < 0 for x in dv):
                            ok = labels[i] == alpha_orbit[dv.index(-1)]
                        else:
                            ok = denominator_of_orbit(labels[i], snake, t) == dv
                    except ClusterError:
                        ok = False
                    if not ok:
                        failures.append(
                            _failure(t, arrows, dv, None, f"denominator at position {i + 1} differs at step {step + 1}")
                        )
    return {"suite": "polygon", "cases": cases, "failures": failures}


def run_suite(name: str, max_rank: int = 4):
    """One named suite, or all of them concatenated."""
    runners = {
        "formulas": run_formulas,
        "quantum": run_quantum,
        "folding": run_folding,
        "polygon": run_polygon,
    }
    if name == "all":
        reports = [runners[s](max_rank) for s in SUITES]
    elif name in runners:
        reports = [runners[name](max_rank)]
    else:
        raise ValueError(f"unknown suite {name!r}; pick one of {SUITES + ('all',)}")
    failures = [f for r in reports for f in r["failures"]]
    failures.sort(
        key=lambda f: (
            f["type"],
            f["rank"],
            f["orientation"],
            f["d"] if f["d"] is not None else [],
            f["e"] if f["e"] is not None else [],
        )
    )
    return {
        "suites": [{k: r[k] for k in ("suite", "cases")} for r in reports],
        "total_cases": sum(r["cases"] for r in reports),
        "failures": failures,
        "minimal_counterexample": failures[0] if failures else None,
    }
