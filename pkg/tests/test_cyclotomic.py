from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from galideal.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_polynomial,
    euler_phi,
)

zeta = CyclotomicNumber.zeta


def test_cyclotomic_polynomial_against_sympy():
    from sympy import Poly, cyclotomic_poly, symbols

    x = symbols("x")
    for n in range(1, 60):
        ours = cyclotomic_polynomial(n)
        theirs = Poly(cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert list(ours) == [int(c) for c in theirs], n


def test_euler_phi():
    from sympy import totient

    for n in range(1, 200):
        assert euler_phi(n) == int(totient(n))


def test_zeta_basics():
    z5 = zeta(5)
    assert z5 ** 5 == CyclotomicNumber.one()
    assert z5 ** 4 == z5.inverse()
    # 1 + z + z^2 + z^3 + z^4 = 0
    s = sum([z5 ** k for k in range(5)], CyclotomicNumber.zero())
    assert s.is_zero()
    assert zeta(2) == CyclotomicNumber.from_rational(-1)
    assert zeta(1) == CyclotomicNumber.one()
    assert zeta(4) ** 2 == CyclotomicNumber.from_rational(-1)


def test_rational_collapse():
    # z6 = -z3^2, so z6 + z6^5 = 1; sums landing in Q get order 1
    v = zeta(6) + zeta(6, 5)
    assert v.is_rational() and v.as_fraction() == 1
    assert hash(v) == hash(Fraction(1))


def test_cross_order_arithmetic():
    # z2 * z3 = z6^5 since zeta_6 = -zeta_3^2 -> check via lifting
    lhs = zeta(2) * zeta(3)
    assert lhs == zeta(6, 5)
    assert zeta(3) == zeta(6) ** 2
    assert zeta(4) * zeta(6) == zeta(12) ** 5


def test_gauss_sum_squared():
    # classical: (sum over a mod 5 of legendre(a) zeta_5^a)^2 = 5
    legendre = {1: 1, 4: 1, 2: -1, 3: -1}
    g = CyclotomicNumber.zero()
    for a, e in legendre.items():
        g = g + e * zeta(5, a)
    assert (g * g) == CyclotomicNumber.from_rational(5)


def elements(order):
    phi = euler_phi(order)
    frac = st.fractions(
        min_value=-4, max_value=4, max_denominator=6
    )
    return st.lists(frac, min_size=phi, max_size=phi).map(
        lambda cs: CyclotomicNumber(order, cs)
    )


@settings(max_examples=60)
@given(st.sampled_from([1, 3, 4, 5, 8, 12]).flatmap(
    lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=60)
@given(elements(7))
def test_inverse(a):
    if not a.is_zero():
        assert a * a.inverse() == CyclotomicNumber.one()


@settings(max_examples=60)
@given(st.tuples(elements(9), elements(9), st.sampled_from([1, 2, 4, 5, 7, 8])))
def test_galois_is_ring_map(args):
    a, b, t = args
    assert (a * b).galois(t) == a.galois(t) * b.galois(t)
    assert (a + b).galois(t) == a.galois(t) + b.galois(t)


def test_galois_orbit_sum_is_rational():
    a = zeta(7) + 3 * zeta(7, 3)
    tr = CyclotomicNumber.zero()
    for t in range(1, 7):
        tr = tr + a.galois(t)
    assert tr.is_rational()
    # trace of zeta_7 over Q is -1; of 3*zeta_7^3 likewise -3
    assert tr.as_fraction() == -4


def test_conjugate():
    a = zeta(5) + 2 * zeta(5, 2)
    assert a.conjugate() == zeta(5, 4) + 2 * zeta(5, 3)
    assert (a * a.conjugate()).conjugate() == a * a.conjugate()
