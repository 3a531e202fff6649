"""Exact arithmetic layer: cyclotomic field, Laurent polynomials, localization."""

import random

import pytest

from smallq.scalars import (
    ExactDivisionError,
    LatticeError,
    LocalScalar,
    OutsideLocalizationError,
    QParams,
    cyclotomic_poly,
    local_eval,
    matrix_divide_exact,
    poly_gcd,
    qbinom,
    qbinom_zeta,
    qfact,
    qint,
)

P4 = QParams(4)
P6 = QParams(6)
R4 = P4.vring
R6 = P6.vring


def oracle_qbinom(m, t, ring):
    """Independent Gaussian binomial via the Pascal recursion, m >= 0 only."""
    if t < 0 or t > m:
        return ring.zero
    table = {(0, 0): ring.one}
    for mm in range(1, m + 1):
        for tt in range(0, min(mm, t) + 1):
            a = table.get((mm - 1, tt), ring.zero)
            b = table.get((mm - 1, tt - 1), ring.zero)
            table[(mm, tt)] = (ring.v ** 1).shift(tt - 1) * a + b.shift(-(mm - tt))
    return table[(m, t)]


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_zeta_identities():
    for params in (P4, P6):
        f = params.field
        z = f.zeta()
        assert z ** params.n == f.one
        assert z ** (params.n // 2) == -f.one
        assert z ** params.n - f.one == f.zero - f.zero + (z ** params.n - f.one)


def random_elems(field, rng, count):
    d = field.degree
    out = []
    for _ in range(count):
        nums = [rng.randint(-6, 6) for _ in range(d)]
        den = rng.randint(1, 5)
        out.append(field.elem(nums, den))
    return out


def test_cyclo_ring_axioms():
    rng = random.Random(0)
    for field in (P4.field, P6.field):
        xs = random_elems(field, rng, 12)
        for i in range(0, 12, 3):
            a, b, c = xs[i], xs[i + 1], xs[i + 2]
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if a:
                assert a * a.inverse() == field.one
            if b:
                assert (a / b) * b == a


def test_cyclo_inverse_spot():
    f = P4.field
    z = f.zeta()
    # zeta_8 inverse is zeta_8^7 = -zeta_8^3
    assert z.inverse() == z ** 7
    x = f.one + z
    assert x * x.inverse() == f.one


def test_qint_examples():
    assert qint(0, 1, R4) == R4.zero
    expected = R4.from_int_dict({2: 1, 0: 1, -2: 1})
    assert qint(3, 1, R4) == expected
    # at ell = 4, zeta a primitive 8th root: [4](zeta) = 0
    assert not qint(4, 1, R4).eval_zeta()
    # antisymmetry
    for m in range(-8, 9):
        for d in (1, 2, 3):
            assert qint(-m, d, R6) == -qint(m, d, R6)


def test_qfact_examples():
    assert qfact(0, 1, R4) == R4.one
    assert qfact(2, 1, R4) == R4.from_int_dict({1: 1, -1: 1})
    assert not qfact(4, 1, R4).eval_zeta()
    with pytest.raises(ValueError):
        qfact(-1, 1, R4)


def test_qbinom_examples():
    assert qbinom(7, 0, 1, R4) == R4.one
    assert qbinom(-3, 0, 2, R4) == R4.one
    assert qbinom(2, 1, 1, R4) == qint(2, 1, R4)
    for t in (1, 2, 3):
        assert not qbinom(4, t, 1, R4).eval_zeta()
    for t in (1, 2, 3, 4, 5):
        assert not qbinom(6, t, 1, R6).eval_zeta()


def test_qbinom_against_pascal_oracle():
    for m in range(0, 11):
        for t in range(0, min(m, 6) + 1):
            assert qbinom(m, t, 1, R4) == oracle_qbinom(m, t, R4)


def test_qbinom_is_laurent_for_negative_m():
    rng = random.Random(1)
    for _ in range(40):
        m = rng.randint(-20, 20)
        t = rng.randint(0, 10)
        d = rng.choice((1, 2))
        qbinom(m, t, d, R4)  # raises ExactDivisionError if not a polynomial


def test_qbinom_symmetry():
    # [m over t] = [m over m-t] for 0 <= t <= m: classical, independent of the
    # stepwise construction
    for m in range(0, 13):
        for t in range(0, m + 1):
            assert qbinom(m, t, 1, R6) == qbinom(m, m - t, 1, R6), (m, t)
            assert qbinom(m, t, 2, R4) == qbinom(m, m - t, 2, R4), (m, t)


def test_inverse_fuzz_across_fields():
    rng = random.Random(9)
    for n in (1, 2, 3, 4, 6, 8, 12):
        from smallq.scalars import CycloField
        field = CycloField(n)
        for _ in range(15):
            nums = [rng.randint(-9, 9) for _ in range(field.degree)]
            den = rng.randint(1, 7)
            x = field.elem(nums, den)
            if x:
                assert x * x.inverse() == field.one, (n, nums, den)


def test_pascal_identity_grid():
    ring = R4
    v = ring.v
    for m in range(-20, 21):
        for t in range(0, 11):
            lhs = qbinom(m, t, 1, ring)
            rhs = v.shift(t - 1) * qbinom(m - 1, t, 1, ring)
            if t >= 1:
                rhs = rhs + qbinom(m - 1, t - 1, 1, ring).shift(-(m - t))
            assert lhs == rhs, (m, t)


def test_root_of_unity_binomial_gives_integers():
    # [ell_i * m over ell_i]_{d_i} at zeta is the integer m up to a sign that
    # is trivial whenever ell_i is even; for odd ell_i it alternates.  The
    # module layer only ever uses even ell_i.
    for ell, d in ((4, 1), (6, 1), (4, 2), (6, 2), (6, 3)):
        params = QParams(ell, (d,))
        ring = params.vring
        li = params.ell_i[0]
        for m in range(-4, 5):
            val = qbinom_zeta(li * m, li, d, ring)
            sign = 1 if li % 2 == 0 or m % 2 == 1 else -1
            assert val == params.field.from_int(sign * m), (ell, d, m)


def test_local_scalar_basics():
    ring = R4
    one = LocalScalar.from_poly(ring.one)
    assert local_eval(one) == ring.field.one
    v = LocalScalar.from_poly(ring.v)
    assert local_eval(v) == ring.field.zeta()
    x = LocalScalar(qint(3, 1, ring), qint(1, 1, ring))
    z = ring.field.zeta()
    assert local_eval(x) == z ** 2 + ring.field.one + z ** (-2)


def test_local_scalar_outside_localization():
    # 1 / [4] has a denominator vanishing at zeta_8
    with pytest.raises(OutsideLocalizationError):
        LocalScalar(R4.one, qint(4, 1, R4))


def test_local_scalar_cancellation():
    # [4]*[2] / [4] reduces to [2], which is regular at zeta
    num = qint(4, 1, R4) * qint(2, 1, R4)
    x = LocalScalar(num, qint(4, 1, R4))
    assert x.is_polynomial()
    assert x.as_poly() == qint(2, 1, R4)


def test_local_scalar_ring_axioms_and_eval_hom():
    rng = random.Random(2)
    ring = R4

    def rand_local():
        num = ring.from_int_dict(
            {rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(3)})
        den = ring.from_int_dict({0: rng.randint(1, 3), 1: rng.randint(0, 2)})
        if not den.eval_zeta():
            den = ring.one
        if not num:
            num = ring.one
        return LocalScalar(num, den)

    for _ in range(10):
        a, b, c = rand_local(), rand_local(), rand_local()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert local_eval(a * b) == local_eval(a) * local_eval(b)
        assert local_eval(a + b) == local_eval(a) + local_eval(b)
        if a:
            assert a * a.inverse() == 1


def test_poly_gcd():
    a = qint(4, 1, R4) * qint(2, 1, R4)
    b = qint(4, 1, R4) * qint(3, 1, R4)
    g = poly_gcd(a, b)
    # [2] and [3] are coprime, so the gcd is [4] up to a unit: monic with
    # minimal exponent 0 it is v^6 + v^4 + v^2 + 1, and it vanishes at zeta
    assert g == qint(4, 1, R4).shift(3)
    assert not g.eval_zeta()
    a.exact_div(g)
    b.exact_div(g)


def test_exact_div_errors():
    with pytest.raises(ExactDivisionError):
        (R4.v + 1).exact_div(qint(2, 1, R4))


def test_matrix_divide_exact():
    ring = R4
    zero = ring.zero
    z_matrix = [[zero, zero], [zero, zero]]
    out = matrix_divide_exact(z_matrix, qfact(4, 1, ring))
    assert all(not e for row in out for e in row)

    two = qint(2, 1, ring)
    m = [[two, zero], [zero, two]]
    out = matrix_divide_exact(m, two)
    assert out[0][0] == 1 and out[1][1] == 1 and not out[0][1]

    bad = [[ring.one]]
    with pytest.raises(LatticeError):
        matrix_divide_exact(bad, qint(4, 1, ring))


def test_qparams_validation():
    with pytest.raises(ValueError):
        QParams(3)
    with pytest.raises(ValueError):
        QParams(4, (3,))
    with pytest.raises(ValueError):
        QParams(2, (2,))
    p = QParams(6, (1, 3))
    assert p.ell_i == (6, 2)
    assert p.n == 12
