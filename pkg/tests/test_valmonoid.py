from fractions import Fraction
from itertools import product

import pytest

from valmon.errors import InsufficientPrecision, NotInMonoid
from valmon.series import dyadic_spec
from valmon.valmonoid import (MonoidContext, MonoidRep, base_digits,
                              canonical_min, decompose, divides,
                              enumerate_omega, lambda_d, rep_value)

F = Fraction


@pytest.fixture(scope="module")
def ctx():
    return MonoidContext(dyadic_spec(), 8)


def test_rep_value_examples(ctx):
    assert rep_value(MonoidRep(0, ()), ctx) == 0
    assert rep_value(MonoidRep(0, (0, 1)), ctx) == F(3, 4)
    assert rep_value(MonoidRep(2, (1, 0, 1)), ctx) == F(31, 8)


def test_rep_value_bounds(ctx):
    with pytest.raises(ValueError):
        rep_value(MonoidRep(0, (2,)), ctx)  # digit must be < s_1 = 2
    with pytest.raises(ValueError):
        rep_value(MonoidRep(-1, ()), ctx)
    with pytest.raises(InsufficientPrecision):
        rep_value(MonoidRep(0, (1,) * 9), ctx)


def test_trailing_zero_digits_trimmed():
    rep = MonoidRep(3, (1, 0, 1, 0, 0))
    assert rep.digits == (1, 0, 1)


def test_decompose_examples(ctx):
    assert decompose(F(3, 4), ctx) == MonoidRep(0, (0, 1))
    assert decompose(F(1, 4), ctx) is None
    assert decompose(F(5), ctx) == MonoidRep(5, ())
    assert decompose(F(-1, 2), ctx) is None
    assert decompose(F(0), ctx) == MonoidRep(0, ())


def test_decompose_depth_error(ctx):
    with pytest.raises(InsufficientPrecision):
        decompose(F(1, 512), ctx)  # denominator beyond r_l(8) = 256


def test_base_digits(ctx):
    assert base_digits(0, ctx) == ()
    assert base_digits(3, ctx) == (1, 1)
    assert base_digits(4, ctx) == (0, 0, 1)
    with pytest.raises(InsufficientPrecision):
        base_digits(10 ** 6, ctx)


def test_lambda_examples(ctx):
    assert lambda_d(0, ctx)[0] == 0
    assert lambda_d(1, ctx)[0] == F(1, 2)
    assert lambda_d(3, ctx)[0] == F(5, 4)
    value, rep = lambda_d(4, ctx)
    assert value == F(11, 8) and rep == MonoidRep(0, (0, 0, 1))


def test_divides(ctx):
    assert divides(F(1), F(1), ctx) == 0
    assert divides(F(1, 2), F(3, 4), ctx) is None
    assert divides(F(1, 2), F(5, 4), ctx) == F(3, 4)


def test_canonical_min(ctx):
    assert canonical_min(F(7), ctx) == 0
    assert canonical_min(F(7, 4), ctx) == F(3, 4)
    assert canonical_min(F(3, 4), ctx) == F(3, 4)
    with pytest.raises(NotInMonoid):
        canonical_min(F(1, 4), ctx)


def test_enumerate_omega(ctx):
    assert [v for v, _ in enumerate_omega(0, ctx, 3)] == [0, 1, 2, 3]
    assert [v for v, _ in enumerate_omega(1, ctx, 0)] == [0, F(1, 2)]
    assert [v for v, _ in enumerate_omega(2, ctx, 0)] == \
        [0, F(1, 2), F(3, 4), F(5, 4)]


def test_uniqueness_and_round_trip(ctx):
    # every canonical rep with n <= 20, depth <= 4 has a distinct value and
    # decompose inverts rep_value
    seen = {}
    for digits in product(range(2), range(2), range(2), range(2)):
        for n in range(21):
            rep = MonoidRep(n, digits)
            v = rep_value(rep, ctx)
            assert v not in seen, (rep, seen.get(v))
            seen[v] = rep
            assert decompose(v, ctx) == rep
    assert len(seen) == 21 * 16


def test_membership_against_brute_force_oracle(ctx):
    members = {v for v, _ in enumerate_omega(3, ctx, 10)}
    for num in range(0, 81):
        m = F(num, 8)
        got = decompose(m, ctx)
        if m in members:
            assert got is not None and rep_value(got, ctx) == m
        else:
            assert got is None


def test_lambda_increasing(ctx):
    values = [lambda_d(d, ctx)[0] for d in range(51)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_lambda_fractional_parts_distinct(ctx):
    fracs = [lambda_d(d, ctx)[0] % 1 for d in range(31)]
    assert len(set(fracs)) == 31


def test_coset_decomposition(ctx):
    # each member splits uniquely as n + lambda_d
    for v, rep in enumerate_omega(3, ctx, 6):
        d = sum(dj * ctx.seqs.r(ctx.seqs.l(j - 1))
                for j, dj in enumerate(rep.digits, start=1))
        lam, lrep = lambda_d(d, ctx)
        assert lrep.digits == rep.digits
        assert v == rep.n + lam
        assert v - lam == rep.n >= 0


def test_omega_closed_under_addition(ctx):
    vals = [v for v, _ in enumerate_omega(2, ctx, 3)]
    for a in vals:
        for b in vals:
            rep = decompose(a + b, ctx)
            assert rep is not None
            assert len(rep.digits) <= 2


def test_divides_consistency_with_oracle(ctx):
    # divides(g, f) is exactly membership of the difference
    vals = [v for v, _ in enumerate_omega(2, ctx, 2)]
    for a in vals:
        for b in vals:
            got = divides(a, b, ctx)
            if got is not None:
                assert got == b - a
                assert decompose(b - a, ctx) is not None


def _other_contexts():
    from valmon.series import CallbackTail, SimpleSeriesSpec
    harmonic = SimpleSeriesSpec(
        [(1, F(1, 2))], CallbackTail(lambda i: (1, F(1, i + 2))))
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    mixed = SimpleSeriesSpec(
        [(1, F(3, 2)), (1, F(1, 2)), (1, F(1, 3)), (1, F(1, 5)),
         (1, F(1, 7)), (1, F(1, 11))],
        CallbackTail(lambda i: (1, F(1, primes[i + 4]))))
    return [MonoidContext(harmonic, 6), MonoidContext(mixed, 6)]


def test_lambda_properties_on_other_contexts():
    for other in _other_contexts():
        values = [lambda_d(d, other)[0] for d in range(51)]
        assert all(a < b for a, b in zip(values, values[1:]))
        fracs = [v % 1 for v in values[:31]]
        assert len(set(fracs)) == 31


def test_harmonic_lambda_values():
    other = _other_contexts()[0]
    rho1, rho2, rho3 = (other.seqs.rho(i) for i in (1, 2, 3))
    assert [lambda_d(d, other)[0] for d in range(7)] == [
        0, rho1, rho2, rho1 + rho2, 2 * rho2, rho1 + 2 * rho2, rho3]


def test_decompose_round_trip_on_other_contexts():
    for other in _other_contexts():
        for v, rep in enumerate_omega(3, other, 4):
            assert decompose(v, other) == rep
