"""Based quantum torus: normalized monomials Z^a with coefficients in Z[v, v^-1].

The torus is built from a square exchange matrix b0 and a positive integer
vector delta_hat that symmetrizes it.  Generators obey
Z_i Z_j = v^(2 L[i][j]) Z_j Z_i with L[i][j] = delta_hat[i] * b0[i][j], and the
normalized monomial Z^a is the bar-invariant rescaling of the ordered product
Z_1^{a_1} ... Z_n^{a_n}.  Products follow Z^a Z^b = v^(a^T L b) Z^(a+b).

Coefficients store exponents of v (so an exponent of q contributes 2).
"""

from __future__ import annotations

from .laurent import LaurentPoly

__all__ = [
    "QC",
    "QuantumTorus",
    "TorusElement",
    "l_twist",
    "monomial_mul_by_reordering",
    "qt_monomial_mul",
    "specialize_classical",
]


class QC:
    """Laurent polynomial in v with integer coefficients, keyed by exponent."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    n = clean.get(e, 0) + c
                    if n:
                        clean[e] = n
                    else:
                        del clean[e]
        self.terms = clean

    @classmethod
    def one(cls) -> "QC":
        return cls({0: 1})

    @classmethod
    def v_power(cls, e: int, c: int = 1) -> "QC":
        return cls({e: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QC") -> "QC":
        out = dict(self.terms)
        for e, c in other.terms.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                del out[e]
        q = QC.__new__(QC)
        q.terms = out
        return q

    def __mul__(self, other: "QC") -> "QC":
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                n = out.get(e, 0) + c1 * c2
                if n:
                    out[e] = n
                else:
                    del out[e]
        q = QC.__new__(QC)
        q.terms = out
        return q

    def __pow__(self, k: int) -> "QC":
        out = QC.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e: int) -> "QC":
        q = QC.__new__(QC)
        q.terms = {x + e: c for x, c in self.terms.items()}
        return q

    def bar(self) -> "QC":
        q = QC.__new__(QC)
        q.terms = {-x: c for x, c in self.terms.items()}
        return q

    def at_one(self) -> int:
        return sum(self.terms.values())

    def key(self) -> tuple:
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, QC) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if not self.terms:
            return "QC(0)"
        return "QC(" + " + ".join(f"{c}*v^{e}" for e, c in sorted(self.terms.items())) + ")"


class QuantumTorus:
    """Commutation data: L[i][j] = delta_hat[i] * b0[i][j], skew-symmetric."""

    def __init__(self, b0: list[list[int]], delta_hat):
        n = len(b0)
        dh = tuple(delta_hat)
        if len(dh) != n or any(d <= 0 for d in dh):
            raise ValueError("delta_hat must be a positive vector matching b0")
        L = [[dh[i] * b0[i][j] for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if L[i][j] != -L[j][i]:
                    raise ValueError("delta_hat does not skew-symmetrize b0")
        self.n = n
        self.b0 = [row[:] for row in b0]
        self.delta_hat = dh
        self.L = L

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuantumTorus)
            and self.b0 == other.b0
            and self.delta_hat == other.delta_hat
        )


def qt_monomial_mul(torus: QuantumTorus, a, b) -> tuple[int, tuple[int, ...]]:
    """Z^a Z^b = v^w Z^(a+b); returns (w, a+b).  w = a^T L b."""
    L = torus.L
    w = 0
    for i, ai in enumerate(a):
        if ai:
            row = L[i]
            w += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return w, tuple(x + y for x, y in zip(a, b))


def _norm_power(torus: QuantumTorus, c) -> int:
    # v-exponent relating Z^c to the ordered product Z_1^{c_1} ... Z_n^{c_n}
    L = torus.L
    w = 0
    for i in range(torus.n):
        if c[i]:
            for j in range(i + 1, torus.n):
                w += L[j][i] * c[i] * c[j]
    return w


def monomial_mul_by_reordering(torus: QuantumTorus, a, b) -> tuple[int, tuple[int, ...]]:
    """Same product as qt_monomial_mul, computed the slow literal way:
    unnormalize both factors into ordered generator words, bubble the
    concatenation back into sorted order counting one commutation at a time,
    and renormalize.  Kept as an independent cross-check."""
    L = torus.L
    word = [(i, x) for i, x in enumerate(a) if x] + [(i, x) for i, x in enumerate(b) if x]
    w = _norm_power(torus, a) + _norm_power(torus, b)
    # insertion sort; each adjacent swap of Z_i^s past Z_j^t costs v^(2 L[i][j] s t)
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            (i, s), (j, t) = word[p], word[p + 1]
            if i > j:
                w += 2 * L[i][j] * s * t
                word[p], word[p + 1] = word[p + 1], word[p]
                changed = True
    total = tuple(x + y for x, y in zip(a, b))
    w -= _norm_power(torus, total)
    return w, total


class TorusElement:
    """Finite sum of QC-coefficiented normalized monomials Z^a."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: QuantumTorus, terms=None):
        self.torus = torus
        clean: dict[tuple[int, ...], QC] = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if not c.is_zero():
                    prev = clean.get(e)
                    s = c if prev is None else prev + c
                    if s.is_zero():
                        clean.pop(e, None)
                    else:
                        clean[tuple(e)] = s
        self.terms = clean

    @classmethod
    def zero(cls, torus: QuantumTorus) -> "TorusElement":
        return cls(torus)

    @classmethod
    def one(cls, torus: QuantumTorus) -> "TorusElement":
        return cls(torus, {(0,) * torus.n: QC.one()})

    @classmethod
    def monomial(cls, torus: QuantumTorus, a, coeff: QC | None = None) -> "TorusElement":
        return cls(torus, {tuple(a): QC.one() if coeff is None else coeff})

    def __add__(self, other: "TorusElement") -> "TorusElement":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        r = TorusElement.__new__(TorusElement)
        r.torus = self.torus
        r.terms = out
        return r

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        out: dict[tuple[int, ...], QC] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                w, e = qt_monomial_mul(self.torus, a, b)
                c = (ca * cb).shift(w)
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        r = TorusElement.__new__(TorusElement)
        r.torus = self.torus
        r.terms = out
        return r

    def scale(self, c: QC) -> "TorusElement":
        return TorusElement(self.torus, {e: x * c for e, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusElement)
            and self.torus == other.torus
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return "TE(" + ", ".join(f"{e}: {c!r}" for e, c in sorted(self.terms.items())) + ")"


def l_twist(torus: QuantumTorus, a, x: TorusElement) -> TorusElement:
    """Scale each monomial Z^b of x by v^(-2 sum_i a_i b_i delta_hat_i)."""
    dh = torus.delta_hat
    out = {}
    for b, c in x.terms.items():
        s = sum(ai * bi * di for ai, bi, di in zip(a, b, dh))
        out[b] = c.shift(-2 * s)
    return TorusElement(torus, out)


def specialize_classical(x: TorusElement) -> LaurentPoly:
    """Set v = 1, landing in the commutative Laurent ring on the same n."""
    return LaurentPoly(x.torus.n, {e: c.at_one() for e, c in x.terms.items()})
