import itertools

import pytest
from hypothesis import given, settings, strategies as st

from clusterfp.laurent import LaurentPoly
from clusterfp.qtorus import (
    QC,
    QuantumTorus,
    TorusElement,
    l_twist,
    monomial_mul_by_reordering,
    qt_monomial_mul,
    specialize_classical,
)

A2 = [[0, -1], [1, 0]]


def torus_a2():
    return QuantumTorus(A2, (1, 1))


def test_qc_arithmetic():
    a = QC({0: 1, 2: 3})
    b = QC({-2: 2})
    assert a + b == QC({-2: 2, 0: 1, 2: 3})
    assert a * b == QC({-2: 2, 0: 6})
    assert (a + QC({0: -1, 2: -3})).is_zero()
    assert QC.v_power(3) ** 2 == QC({6: 1})
    assert a.shift(4) == QC({4: 1, 6: 3})
    assert a.bar() == QC({0: 1, -2: 3})
    assert a.bar().bar() == a
    assert a.at_one() == 4
    assert a.key() == ((0, 1), (2, 3))


def test_single_variable_product():
    # adjacent generators pick up one power of v
    tor = torus_a2()
    w, e = qt_monomial_mul(tor, (1, 0), (0, 1))
    assert (w, e) == (-1, (1, 1))
    w, e = qt_monomial_mul(tor, (0, 1), (1, 0))
    assert (w, e) == (1, (1, 1))


def test_commutation_exponent():
    # Z^a Z^b and Z^b Z^a differ by v^(2 a^T L b)
    tor = QuantumTorus([[0, -1, 0], [1, 0, 1], [0, -1, 0]], (1, 1, 1))
    for a in itertools.product((-1, 0, 1, 2), repeat=3):
        for b in ((1, 0, 0), (0, 1, 1), (1, -1, 2)):
            wab, eab = qt_monomial_mul(tor, a, b)
            wba, eba = qt_monomial_mul(tor, b, a)
            assert eab == eba
            lam = sum(
                a[i] * tor.L[i][j] * b[j] for i in range(3) for j in range(3)
            )
            assert wab - wba == 2 * lam


def test_reordering_oracle_agrees_small():
    tor = QuantumTorus([[0, -1], [2, 0]], (2, 1))
    for a in itertools.product((-2, -1, 0, 1, 2), repeat=2):
        for b in itertools.product((-2, -1, 0, 1, 2), repeat=2):
            assert qt_monomial_mul(tor, a, b) == monomial_mul_by_reordering(tor, a, b)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_reordering_oracle_agrees_random(data):
    n = data.draw(st.integers(2, 4))
    entries = data.draw(
        st.lists(st.integers(-2, 2), min_size=n * n, max_size=n * n)
    )
    b0 = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b0[i][j] = entries[i * n + j]
            b0[j][i] = -entries[i * n + j]
    dh = tuple(data.draw(st.sampled_from([1, 2, 4])) for _ in range(n))
    # delta_hat must symmetrize: force it by using dh only when compatible,
    # otherwise fall back to the uniform vector
    try:
        tor = QuantumTorus(b0, dh)
    except Exception:
        tor = QuantumTorus(b0, tuple([1] * n))
    a = tuple(data.draw(st.integers(-2, 2)) for _ in range(n))
    b = tuple(data.draw(st.integers(-2, 2)) for _ in range(n))
    assert qt_monomial_mul(tor, a, b) == monomial_mul_by_reordering(tor, a, b)


def test_element_algebra_associativity():
    tor = torus_a2()
    x = TorusElement.monomial(tor, (1, 0)) + TorusElement.monomial(tor, (0, 1), QC.v_power(2))
    y = TorusElement.monomial(tor, (1, 1)) + TorusElement.one(tor)
    z = TorusElement.monomial(tor, (-1, 0), QC({0: 2}))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


def test_twist_by_degree_vector():
    tor = QuantumTorus(
        [[0, -1, 0, 0], [1, 0, 1, 0], [0, -1, 0, -1], [0, 0, 2, 0]],
        (4, 4, 4, 2),
    )
    x = TorusElement.monomial(tor, (0, 1, 0, 1))
    out = l_twist(tor, (0, 1, 0, 0), x)
    # exponent pairing at the single shared slot: -2 * 1 * 1 * 4
    assert out == TorusElement.monomial(tor, (0, 1, 0, 1), QC.v_power(-8))


def test_specialize_to_laurent():
    tor = torus_a2()
    x = TorusElement.monomial(tor, (1, 0), QC({-1: 1, 1: 1}))
    x = x + TorusElement.monomial(tor, (0, -2), QC({0: 3}))
    assert specialize_classical(x) == LaurentPoly(2, {(1, 0): 2, (0, -2): 3})


def test_torus_validation():
    with pytest.raises(Exception):
        QuantumTorus(A2, (1, -1))
    with pytest.raises(Exception):
        QuantumTorus([[0, 1], [1, 0]], (1, 1))
