"""Multivariate Laurent polynomials over Z with exact division.

Terms live in a dict mapping exponent tuples (ints, possibly negative) to
nonzero integer coefficients.  Everything is immutable from the outside;
arithmetic returns fresh objects.
"""

from __future__ import annotations

from .errors import NegativeExponentOnNonMonomial, NotDivisible

__all__ = [
    "LaurentPoly",
    "lp_add",
    "lp_div_exact",
    "lp_mul",
    "lp_substitute",
]


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} vars")
                if c:
                    ne = clean.get(e, 0) + c
                    if ne:
                        clean[tuple(e)] = ne
                    else:
                        clean.pop(e, None)
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def min_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent bounds")
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no exponent bounds")
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def key(self) -> tuple:
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.key()))

    def __add__(self, other) -> "LaurentPoly":
        return lp_add(self, other)

    def __sub__(self, other) -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            n = out.get(e, 0) - c
            if n:
                out[e] = n
            else:
                out.pop(e, None)
        return _raw(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return _raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        return lp_mul(self, other)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers only via explicit monomial inverse")
        out = LaurentPoly.one(self.nvars)
        for _ in range(k):
            out = lp_mul(out, self)
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "LP(0)"
        bits = [f"{c}*x^{e}" for e, c in sorted(self.terms.items())]
        return "LP(" + " + ".join(bits) + ")"


def _raw(nvars: int, terms: dict) -> LaurentPoly:
    # internal constructor for already-clean term dicts
    p = LaurentPoly.__new__(LaurentPoly)
    p.nvars = nvars
    p.terms = terms
    return p


def _check_same_ring(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.nvars != q.nvars:
        raise ValueError(f"mixed rings: {p.nvars} vs {q.nvars} variables")


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_same_ring(p, q)
    out = dict(p.terms)
    for e, c in q.terms.items():
        n = out.get(e, 0) + c
        if n:
            out[e] = n
        else:
            del out[e]
    return _raw(p.nvars, out)


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _check_same_ring(p, q)
    if len(p.terms) < len(q.terms):
        p, q = q, p
    if not q.terms:
        return LaurentPoly.zero(p.nvars)
    out: dict[tuple[int, ...], int] = {}
    get = out.get
    for e2, c2 in q.terms.items():
        for e1, c1 in p.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            n = get(e, 0) + c1 * c2
            if n:
                out[e] = n
            else:
                del out[e]
    return _raw(p.nvars, out)


def lp_div_exact(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Quotient p / r when it exists in the Laurent ring over Z; otherwise
    raises NotDivisible.

    The divisor's content monomial (a unit) is factored out first, making the
    remaining divisor an honest polynomial with per-variable minimum 0.  The
    quotient's exponents are then confined to the exact per-variable box
    [min(p') , max(p') - max(r')]: extreme-degree slices of a product never
    cancel over an integral domain, so the bound is tight and doubles as the
    non-divisibility detector.  Leading terms strictly decrease in lex order,
    which bounds the loop.
    """
    _check_same_ring(p, r)
    if r.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.nvars)
    n = p.nvars
    rmin = r.min_exponents()
    rsh = {tuple(a - b for a, b in zip(e, rmin)): c for e, c in r.terms.items()}
    rem = {tuple(a - b for a, b in zip(e, rmin)): c for e, c in p.terms.items()}
    qmin = tuple(min(e[i] for e in rem) for i in range(n))
    qmax = tuple(
        max(e[i] for e in rem) - max(e[i] for e in rsh) for i in range(n)
    )
    if any(a > b for a, b in zip(qmin, qmax)):
        raise NotDivisible("degree box is empty")
    rlead = max(rsh)
    rc = rsh[rlead]
    quo: dict[tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        te = tuple(a - b for a, b in zip(lead, rlead))
        if any(x < lo or x > hi for x, lo, hi in zip(te, qmin, qmax)):
            raise NotDivisible(f"leading term x^{lead} not reachable")
        if c % rc:
            raise NotDivisible(f"leading coefficient {c} not divisible by {rc}")
        tc = c // rc
        quo[te] = tc
        for e2, c2 in rsh.items():
            e = tuple(a + b for a, b in zip(te, e2))
            nv = rem.get(e, 0) - tc * c2
            if nv:
                rem[e] = nv
            else:
                rem.pop(e, None)
    return _raw(n, quo)


def _unit_monomial_power(img: LaurentPoly, k: int) -> LaurentPoly:
    ((e, c),) = img.terms.items()
    if abs(c) != 1:
        raise NegativeExponentOnNonMonomial(
            f"cannot invert monomial with coefficient {c}"
        )
    return LaurentPoly.monomial(img.nvars, tuple(x * k for x in e), c if k % 2 else 1)


def lp_substitute(p: LaurentPoly, images: list[LaurentPoly]) -> LaurentPoly:
    """Evaluate p at the given images (one per variable, all in a common
    target ring).  Variables appearing with negative exponents must map to
    unit monomials, the only invertible elements."""
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    if p.nvars == 0:
        raise ValueError("no variables to substitute")
    tgt = images[0].nvars
    for img in images:
        if img.nvars != tgt:
            raise ValueError("images live in different rings")
    cache: list[dict[int, LaurentPoly]] = [
        {0: LaurentPoly.one(tgt)} for _ in range(p.nvars)
    ]

    def power(i: int, k: int) -> LaurentPoly:
        hit = cache[i].get(k)
        if hit is not None:
            return hit
        if k > 0:
            val = lp_mul(power(i, k - 1), images[i])
        else:
            if not images[i].is_monomial():
                raise NegativeExponentOnNonMonomial(
                    f"variable {i} occurs with negative exponent but its image "
                    f"has {len(images[i].terms)} terms"
                )
            val = _unit_monomial_power(images[i], k)
        cache[i][k] = val
        return val

    total = LaurentPoly.zero(tgt)
    for e, c in p.terms.items():
        term = LaurentPoly.constant(tgt, c)
        for i, k in enumerate(e):
            if k:
                term = lp_mul(term, power(i, k))
        total = lp_add(total, term)
    return total
