import itertools
import random

import numpy as np
import pytest

from nihocorr import codes
from nihocorr.codes import (
    CompleteWeight,
    PatternSpec,
    b5_brute_force,
    b5_pure_weight,
    count_pattern_tuples,
    count_unit_circle_quadratic_roots,
    count_unit_circle_sum_inverse,
    gamma5_closed,
    gamma_d,
    gamma_d_brute,
    macwilliams_identity_check,
    macwilliams_sides,
    melas_dual_word,
    pattern_count_brute,
    pattern_count_closed,
    pattern_tuples_closed,
    patterns_of_weight,
    zetterberg_dual_word,
)
from nihocorr.errors import (
    PatternTooLarge,
    PreconditionError,
    SmallCharacteristic,
    TooLarge,
    UnknownPattern,
    UnsupportedD,
    ZeroInput,
)
from nihocorr.field import (
    FieldContext,
    build_field_context,
    irreducible_polynomials,
    quadratic_character,
    restriction_table,
)


def ctx_pair(p, m):
    return build_field_context(p, 2 * m), build_field_context(p, m)


# -- patterns -----------------------------------------------------------------

def test_pattern_parse():
    s = PatternSpec.parse("1^3 2^1")
    assert s.coefficients == (1, 1, 1, 2)
    assert s.size == 4 and s.weight == 5 and s.automorphism_factor == 6
    assert str(s) == "1^3 2^1"
    assert PatternSpec.parse("2^1 1^3") == s
    assert PatternSpec.from_coefficients([2, 1, 1, 1]) == s
    with pytest.raises(UnknownPattern):
        PatternSpec.parse("1^2 x")
    with pytest.raises(UnknownPattern):
        PatternSpec.parse("0^2")


def test_patterns_of_weight():
    assert {str(s) for s in patterns_of_weight(2)} == {"2^1", "1^2"}
    five = {str(s) for s in patterns_of_weight(5)}
    assert five == {"5^1", "1^1 4^1", "2^1 3^1", "1^2 3^1", "1^1 2^2", "1^3 2^1", "1^5"}
    assert all(s.weight == 5 for s in patterns_of_weight(5))


def test_complete_weight_validates():
    CompleteWeight((2, 1), 3)
    with pytest.raises(ValueError):
        CompleteWeight((2, 2), 3)


# -- dual codewords -------------------------------------------------------------

@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2), (5, 2), (7, 1)])
def test_dual_word_basics(p, m):
    big, small = ctx_pair(p, m)
    q = p ** m
    assert zetterberg_dual_word(big.zero).counts == (q + 1,) + (0,) * (p - 1)
    assert melas_dual_word(small.zero, small.zero).counts == (q - 1,) + (0,) * (p - 1)
    assert melas_dual_word(small.one, small.zero).counts == (q // p - 1,) + (q // p,) * (p - 1)
    rng = random.Random(q)
    for _ in range(10):
        a = big.from_index(rng.randrange(big.order))
        assert sum(zetterberg_dual_word(a).counts) == q + 1
        x, y = (small.from_index(rng.randrange(small.order)) for _ in range(2))
        assert sum(melas_dual_word(x, y).counts) == q - 1


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2), (5, 2), (7, 2), (2, 3)])
def test_duality(p, m):
    big, small = ctx_pair(p, m)
    restrict = restriction_table(big, small)
    for v in range(1, big.order, max(1, big.order // 200)):
        assert codes.duality_holds(big.from_index(v), small, restrict)


def test_duality_second_modulus():
    p, m = 7, 2
    mods = list(irreducible_polynomials(p, 2 * m))
    big = FieldContext(p, 2 * m, modulus=mods[3])
    small = build_field_context(p, m)
    restrict = restriction_table(big, small)
    assert all(codes.duality_holds(big.from_index(v), small, restrict) for v in range(1, big.order, 37))


def test_dual_weight_tables():
    big, small = ctx_pair(5, 1)
    zw = codes.zetterberg_dual_weights(big)
    assert zw.shape == (25, 5) and (zw.sum(axis=1) == 6).all()
    assert tuple(zw[7]) == zetterberg_dual_word(big.from_index(7)).counts
    mw = codes.melas_dual_weights(small)
    assert mw.shape == (25, 5) and (mw.sum(axis=1) == 4).all()
    assert tuple(mw[2 * 5 + 3]) == melas_dual_word(small(2), small(3)).counts


# -- unit circle root counts ----------------------------------------------------

@pytest.mark.parametrize("p,m", [(5, 2), (7, 2)])
def test_quadratic_roots_on_unit_circle(p, m):
    big, small = ctx_pair(p, m)
    q = p ** m
    restrict = restriction_table(big, small)
    u = big.tables.unit_circle
    rng = random.Random(q)
    for _ in range(50):
        a = big.from_index(rng.randrange(1, big.order))
        b = a / a ** q
        t = big.tables
        vals = t.add(t.add(t.mul(u, u), t.scale(u, a.value)), b.value)
        direct = int((vals == 0).sum())
        norm = small.from_index(int(restrict[(a * a ** q).value]))
        assert count_unit_circle_quadratic_roots(norm) == direct


def test_quadratic_roots_examples():
    small = build_field_context(5, 2)
    assert count_unit_circle_quadratic_roots(small(4)) == 1
    with pytest.raises(ZeroInput):
        count_unit_circle_quadratic_roots(small.zero)
    found = False
    for x in small.elements():
        if x and quadratic_character(x) == 1 and quadratic_character((x - 4) / x) == -1:
            assert count_unit_circle_quadratic_roots(x) == 2
            found = True
    assert found


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2), (5, 2), (7, 1), (11, 1)])
def test_sum_inverse(p, m):
    big, small = ctx_pair(p, m)
    q = p ** m
    assert count_unit_circle_sum_inverse(small(2)) == 1
    assert count_unit_circle_sum_inverse(small(-2)) == 1
    assert sum(count_unit_circle_sum_inverse(a) for a in small.elements()) == q + 1
    # direct: image of x + 1/x restricted back to GF(q)
    restrict = restriction_table(big, small)
    t = big.tables
    u = t.unit_circle
    img = restrict[t.add(u, t.inv(u))]
    assert (img >= 0).all()
    hist = np.bincount(img, minlength=small.order)
    for a in small.elements():
        assert hist[a.value] == count_unit_circle_sum_inverse(a)


# -- pattern counts -------------------------------------------------------------

def _naive_tuples(spec, ctx):
    """Plain itertools enumeration of distinct tuples; tiny q only."""
    coeffs = [ctx(c) for c in PatternSpec.parse(spec).coefficients]
    nz = [x for x in ctx.elements() if x]
    n = 0
    for xs in itertools.permutations(nz, len(coeffs)):
        s = sum((c * x for c, x in zip(coeffs, xs)), ctx.zero)
        r = sum((c / x for c, x in zip(coeffs, xs)), ctx.zero)
        n += (not s) and (not r)
    return n


@pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (11, 1), (3, 2), (2, 3), (13, 1)])
def test_pattern_methods_agree_with_naive(p, m):
    ctx = build_field_context(p, m)
    for spec in codes.SUPPORTED_PATTERNS:
        if not spec.exists_over(p):
            continue
        if spec.size == 5 and ctx.order > 9:
            continue
        naive = _naive_tuples(spec, ctx)
        assert count_pattern_tuples(spec, ctx) == naive
        assert count_pattern_tuples(spec, ctx, method="linear", normalize=False) == naive
        assert count_pattern_tuples(spec, ctx, normalize=False) == naive


def test_pattern_examples():
    assert count_pattern_tuples("1^2 3^1", build_field_context(11, 1)) == 20
    assert count_pattern_tuples("1^1 2^2", build_field_context(11, 1)) == 0
    assert count_pattern_tuples("1^3 2^1", build_field_context(5, 2)) == 432
    for m in (1, 2, 3):
        assert count_pattern_tuples("1^2 3^1", build_field_context(5, m)) == 0
    assert pattern_count_closed("1^2", 11, 1) == 5
    for s in ("2^1", "5^1", "1^1 4^1", "2^1 3^1"):
        assert pattern_count_closed(s, 11, 1) == 0


def test_pattern_errors():
    ctx = build_field_context(7, 1)
    with pytest.raises(PatternTooLarge):
        count_pattern_tuples("1^6", ctx)
    with pytest.raises(UnknownPattern):
        pattern_count_closed("1^4", 7, 1)
    with pytest.raises(PreconditionError):
        count_pattern_tuples("1^2 3^1", build_field_context(3, 2))
    with pytest.raises(PreconditionError):
        count_pattern_tuples("1^2", ctx, method="quadratic")


PATTERN_FIELDS = [(5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (7, 3), (11, 1), (11, 2), (13, 1), (13, 2),
                  (3, 1), (3, 2), (3, 3), (3, 4), (3, 5)]


@pytest.mark.parametrize("p,m", PATTERN_FIELDS)
def test_pattern_closed_forms(p, m):
    ctx = build_field_context(p, m)
    for spec in codes.SUPPORTED_PATTERNS:
        closed = pattern_count_closed(spec, p, m)
        assert closed * spec.automorphism_factor == (count_pattern_tuples(spec, ctx)
                                                     if spec.exists_over(p) else 0)
        assert pattern_count_brute(spec, ctx) == closed


def test_pattern_p2_branches():
    for m in (2, 3, 4, 5):
        ctx = build_field_context(2, m)
        assert pattern_count_brute("1^2", ctx) == pattern_count_closed("1^2", 2, m) == 0
        assert count_pattern_tuples("1^5", ctx) % 120 == 0
    # the 1^2 3^1 and 1^3 2^1 closed forms read 3 and 2 as residues mod 2
    for m in (2, 3, 4):
        ctx = build_field_context(2, m)
        assert pattern_tuples_closed("1^2 3^1", 2, m) == count_pattern_tuples(
            "1^2 3^1", ctx, reduce_mod_p=True)
        assert pattern_tuples_closed("1^3 2^1", 2, m) == count_pattern_tuples(
            "1^3 2^1", ctx, reduce_mod_p=True)


# -- Gamma and B5 ---------------------------------------------------------------

def test_gamma_examples():
    assert gamma_d(2, 11, 1) == 5
    assert gamma_d(5, 11, 1) == 12
    assert gamma_d(5, 5, 2) == 168
    with pytest.raises(UnsupportedD):
        gamma_d(3, 11, 1)
    with pytest.raises(SmallCharacteristic):
        gamma5_closed(2, 3)


@pytest.mark.parametrize("p,m", PATTERN_FIELDS)
def test_gamma_matches_brute(p, m):
    ctx = build_field_context(p, m)
    assert gamma_d(2, p, m) == gamma_d_brute(2, ctx)
    assert gamma_d(5, p, m) == gamma_d_brute(5, ctx) == gamma5_closed(p, m)


def test_b5_examples():
    assert b5_pure_weight(11, 1) == 12
    assert b5_pure_weight(5, 2) == 78
    assert b5_pure_weight(7, 3) == 344 * 954
    with pytest.raises(SmallCharacteristic):
        b5_pure_weight(2, 3)


@pytest.mark.parametrize("p,m", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1),
                                 (13, 1), (17, 1), (19, 1)])
def test_b5_matches_brute(p, m):
    big = build_field_context(p, 2 * m)
    assert b5_brute_force(big) == b5_pure_weight(p, m)


def test_b5_normalization_matches_full():
    for p, m in [(5, 1), (3, 2), (7, 1), (11, 1)]:
        big = build_field_context(p, 2 * m)
        assert b5_brute_force(big, normalize=False) == b5_brute_force(big)


def test_b5_limits():
    with pytest.raises(TooLarge):
        b5_brute_force(build_field_context(353, 2))


def test_b5_naive_subsets():
    big = build_field_context(5, 2)
    u = [big.from_index(int(v)) for v in big.tables.unit_circle]
    n = sum(1 for s in itertools.combinations(u, 5) if not sum(s, big.zero))
    assert n == b5_pure_weight(5, 1)


# -- MacWilliams ----------------------------------------------------------------

def test_macwilliams_constant_term():
    big = build_field_context(5, 2)
    lhs, rhs = macwilliams_sides(big, 0)
    assert abs(lhs - 25) < 1e-9 and abs(rhs - 25) < 1e-9


@pytest.mark.parametrize("p,m", [(5, 1), (3, 2), (7, 1), (5, 2), (3, 3)])
def test_macwilliams_identity(p, m):
    big = build_field_context(p, 2 * m)
    rng = np.random.default_rng(p + m)
    pts = list(0.5 * np.exp(2j * np.pi * rng.random(10)))
    assert macwilliams_identity_check(big, pts)


def test_macwilliams_detects_corruption(monkeypatch):
    big = build_field_context(5, 1 * 2)
    real = codes.melas_dual_weights

    def broken(ctx):
        w = real(ctx).copy()
        w[1] = w[0]
        return w

    codes._dual_weight_classes.cache_clear()
    monkeypatch.setattr(codes, "melas_dual_weights", broken)
    try:
        assert not macwilliams_identity_check(big, [0.3, 0.2 + 0.1j])
    finally:
        codes._dual_weight_classes.cache_clear()


def test_macwilliams_guards():
    with pytest.raises(PreconditionError):
        macwilliams_identity_check(build_field_context(5, 2), [1.0])
    with pytest.raises(TooLarge):
        macwilliams_identity_check(build_field_context(131, 2), [0.5])
