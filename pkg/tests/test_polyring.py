"""Ring arithmetic, monomial orders, and the text form."""

import random

import pytest

from boolgb import (
    BOOLEAN,
    DEGLEX,
    DEGREVLEX,
    EQ,
    FULL,
    GT,
    LT,
    DivisionError,
    ModeMismatchError,
    UnknownVariableError,
    ParseError,
    Polynomial,
    VarId,
    ZeroPolynomialError,
    format_poly,
    leading_monomial,
    mono_cmp,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
    parse_poly,
    poly_add,
    poly_mul,
    poly_one,
    poly_var,
    poly_zero,
    to_boolean,
    var_flat,
    var_name,
)


def mono(n, **exps):
    """Monomial from variable names, e.g. mono(1, x1=2)."""
    m = [0] * (3 * n)
    for name, e in exps.items():
        m[var_flat(name[0], int(name[1:]))] = e
    return tuple(m)


def random_mono(rng, nvars, max_exp=2, max_deg=4):
    m = [0] * nvars
    for _ in range(rng.randint(0, max_deg)):
        m[rng.randrange(nvars)] += 1
    return tuple(min(e, max_exp) for e in m)


def random_poly(rng, n, mode, max_terms=5, max_exp=2):
    nvars = 3 * n
    cap = 1 if mode == BOOLEAN else max_exp
    terms = {random_mono(rng, nvars, max_exp=cap) for _ in range(rng.randint(0, max_terms))}
    return Polynomial(terms, nvars, mode)


# ---------------------------------------------------------------------------
# variables

def test_var_layout_block_major():
    assert [var_name(i) for i in range(6)] == ["x1", "y1", "z1", "x2", "y2", "z2"]
    assert var_flat("z", 2) == 5
    v = VarId.from_flat(4)
    assert (v.block, v.kind, v.name) == (2, "y", "y2")
    assert VarId.make(2, "y").flat == 4


def test_var_layout_bijective():
    for flat in range(30):
        v = VarId.from_flat(flat)
        assert VarId.make(v.block, v.kind).flat == flat
        assert v.flat == 3 * (v.block - 1) + "xyz".index(v.kind)


# ---------------------------------------------------------------------------
# monomial arithmetic

def test_mono_mul_full_adds_exponents():
    x = mono(1, x1=1)
    assert mono_mul(x, x, FULL) == mono(1, x1=2)


def test_mono_mul_boolean_caps():
    x = mono(1, x1=1)
    assert mono_mul(x, x, BOOLEAN) == x


def test_mono_mul_disjoint_supports():
    a = mono(1, x1=1, y1=1)
    b = mono(1, z1=1)
    want = mono(1, x1=1, y1=1, z1=1)
    assert mono_mul(a, b, FULL) == want
    assert mono_mul(a, b, BOOLEAN) == want


def test_mono_divides_and_div():
    x = mono(1, x1=1)
    x2 = mono(1, x1=2)
    assert mono_divides(x, x2)
    assert mono_div(x2, x) == x
    assert not mono_divides(mono(1, x1=1, y1=1), mono(1, x1=1, z1=1))
    assert mono_divides(mono_one(3), mono(1, x1=2, z1=1))
    with pytest.raises(DivisionError):
        mono_div(mono(1, y1=1), mono(1, x1=1))


def test_mono_lcm():
    assert mono_lcm(mono(1, x1=2), mono(1, x1=1, y1=1)) == mono(1, x1=2, y1=1)
    m = mono(1, x1=1, z1=2)
    assert mono_lcm(m, m) == m
    assert mono_lcm(mono(1, x1=1, y1=1), mono(1, z1=1)) == mono(1, x1=1, y1=1, z1=1)


# ---------------------------------------------------------------------------
# monomial orders

def test_cmp_degree_first_both_schemes():
    xy = mono(1, x1=1, y1=1)
    z = mono(1, z1=1)
    for order in (DEGLEX, DEGREVLEX):
        assert mono_cmp(order, xy, z) == GT
        assert mono_cmp(order, z, xy) == LT


def test_cmp_deglex_priority():
    assert mono_cmp(DEGLEX, mono(1, x1=1), mono(1, y1=1)) == GT
    assert mono_cmp(DEGLEX, mono(1, x1=1), mono(1, x1=1)) == EQ


def test_cmp_schemes_differ_on_textbook_example():
    # x1*z1 vs y1^2: deglex ranks by the first variable (x1*z1 higher),
    # degrevlex by the smallest exponent on the last variable (y1^2 higher).
    xz = mono(1, x1=1, z1=1)
    yy = mono(1, y1=2)
    assert mono_cmp(DEGLEX, xz, yy) == GT
    assert mono_cmp(DEGREVLEX, xz, yy) == LT


def test_cmp_is_total_order_and_multiplicative():
    rng = random.Random(7)
    nvars = 6
    for _ in range(1000):
        a = random_mono(rng, nvars)
        b = random_mono(rng, nvars)
        c = random_mono(rng, nvars)
        for order in (DEGLEX, DEGREVLEX):
            # antisymmetry / totality
            assert mono_cmp(order, a, b) == -mono_cmp(order, b, a)
            assert (mono_cmp(order, a, b) == EQ) == (a == b)
            # degree compatibility
            if sum(a) < sum(b):
                assert mono_cmp(order, a, b) == LT
            # multiplicativity (full-ring product)
            if mono_cmp(order, a, b) == LT:
                assert mono_cmp(order, mono_mul(a, c), mono_mul(b, c)) == LT
            # 1 is minimal
            if sum(a):
                assert mono_cmp(order, mono_one(nvars), a) == LT


def test_cmp_transitive_on_sorted_sample():
    rng = random.Random(11)
    monos = [random_mono(rng, 6) for _ in range(200)]
    for order in (DEGLEX, DEGREVLEX):
        ordered = sorted(monos, key=order.key)
        for a, b in zip(ordered, ordered[1:]):
            assert mono_cmp(order, a, b) in (LT, EQ)


# ---------------------------------------------------------------------------
# polynomial arithmetic

def test_poly_add_self_cancels():
    f = parse_poly("x1*y1 + z1", 1)
    assert (f + f).is_zero


def test_poly_add_symmetric_difference():
    f = parse_poly("x1 + y1", 1)
    g = parse_poly("y1 + z1", 1)
    assert f + g == parse_poly("x1 + z1", 1)


def test_poly_add_identity():
    f = parse_poly("x1*y1 + x1", 1)
    assert f + poly_zero(3) == f


def test_poly_add_mode_mismatch():
    f = poly_var(0, 3, FULL)
    g = poly_var(0, 3, BOOLEAN)
    with pytest.raises(ModeMismatchError):
        poly_add(f, g)
    with pytest.raises(ModeMismatchError):
        poly_mul(f, poly_var(0, 6, FULL))


def test_poly_mul_char2_square():
    f_bool = parse_poly("x1 + 1", 1, BOOLEAN)
    assert f_bool * f_bool == f_bool
    f_full = parse_poly("x1 + 1", 1, FULL)
    assert f_full * f_full == parse_poly("x1^2 + 1", 1, FULL)


def test_poly_mul_binomials():
    for mode in (FULL, BOOLEAN):
        f = parse_poly("x1 + 1", 1, mode)
        g = parse_poly("y1 + 1", 1, mode)
        assert f * g == parse_poly("x1*y1 + x1 + y1 + 1", 1, mode)


def test_boolean_idempotence_randomized():
    rng = random.Random(23)
    for _ in range(1000):
        f = random_poly(rng, rng.randint(1, 4), BOOLEAN)
        assert f * f == f


def test_ring_axioms_randomized():
    rng = random.Random(29)
    for _ in range(1000):
        mode = rng.choice((FULL, BOOLEAN))
        n = rng.randint(1, 3)
        f = random_poly(rng, n, mode)
        g = random_poly(rng, n, mode)
        h = random_poly(rng, n, mode)
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert (f + g) + g == f  # self-inverse addition
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f


def test_leading_monomial():
    f = parse_poly("x1*y1 + x1 + y1 + z1", 1)
    assert leading_monomial(f, DEGLEX) == mono(1, x1=1, y1=1)
    assert leading_monomial(f, DEGREVLEX) == mono(1, x1=1, y1=1)
    assert leading_monomial(parse_poly("x1^2 + x1", 1)) == mono(1, x1=2)
    m = parse_poly("y1*z1", 1)
    assert leading_monomial(m) == mono(1, y1=1, z1=1)
    with pytest.raises(ZeroPolynomialError):
        leading_monomial(poly_zero(3))


def test_to_boolean_cancels_collapsing_terms():
    # x^2 + x maps to x + x = 0 in the quotient
    assert to_boolean(parse_poly("x1^2 + x1", 1)).is_zero
    assert to_boolean(parse_poly("x1^2 + y1", 1)) == parse_poly("x1 + y1", 1, BOOLEAN)


# ---------------------------------------------------------------------------
# parse / format

def test_parse_family_generators():
    f = parse_poly("x1*y1 + x1 + y1 - z1", 1)
    assert f.terms == frozenset(
        [mono(1, x1=1, y1=1), mono(1, x1=1), mono(1, y1=1), mono(1, z1=1)])
    assert parse_poly("0", 2).is_zero
    zzz = parse_poly("z1*z2*z3", 3)
    assert zzz == Polynomial([mono(3, z1=1, z2=1, z3=1)], 9, FULL)


def test_parse_minus_is_plus():
    assert parse_poly("x1 - y1", 1) == parse_poly("x1 + y1", 1)


def test_parse_coefficients_mod_2():
    assert parse_poly("2*x1", 1).is_zero
    assert parse_poly("3*x1", 1) == poly_var(0, 3)
    assert parse_poly("x1 + x1", 1).is_zero
    assert parse_poly("1 + 0", 1) == poly_one(3)


def test_parse_whitespace_and_powers():
    assert parse_poly("  x1 ^ 2\t+ x1 ", 1) == parse_poly("x1^2+x1", 1)
    assert parse_poly("x1*x1", 1) == parse_poly("x1^2", 1)
    assert parse_poly("x1^2", 1, BOOLEAN) == poly_var(0, 3, BOOLEAN)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x1 + ", 1)
    assert err.value.position == 5
    with pytest.raises(ParseError):
        parse_poly("x1 ++ y1", 1)
    with pytest.raises(ParseError):
        parse_poly("w1", 1)
    with pytest.raises(ParseError):
        parse_poly("x1^0", 1)
    with pytest.raises(UnknownVariableError):
        parse_poly("x5", 4)
    with pytest.raises(UnknownVariableError):
        parse_poly("z3", 2)


def test_format_canonical():
    f = parse_poly("z1 + x1 + x1*y1 + y1", 1)
    assert format_poly(f, DEGLEX) == "x1*y1+x1+y1+z1"
    assert format_poly(poly_zero(3)) == "0"
    assert format_poly(poly_one(3)) == "1"
    assert format_poly(parse_poly("x1^2+x1", 1)) == "x1^2+x1"


def test_parse_format_roundtrip_randomized():
    rng = random.Random(31)
    for _ in range(1000):
        mode = rng.choice((FULL, BOOLEAN))
        n = rng.randint(1, 4)
        f = random_poly(rng, n, mode)
        for order in (DEGLEX, DEGREVLEX):
            assert parse_poly(format_poly(f, order), n, mode) == f
