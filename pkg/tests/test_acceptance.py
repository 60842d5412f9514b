"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.

Two sub-claims are implemented exactly as stated and marked strict-xfail
because the quoted source values are provably inconsistent with the
definitions they cite; see the test docstrings for the arithmetic.
"""

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from valmon.bipoly import (BivarPoly, eval_leading, parse,
                           truncation_min_poly)
from valmon.gbengine import buchberger, approx_quotient, reduce, syzygy_family
from valmon.seqderive import derive, self_check
from valmon.series import (CallbackTail, NoetherianSeries, SimpleSeriesSpec,
                           dyadic_spec, series_add, series_mul)
from valmon.valmonoid import (MonoidContext, MonoidRep, decompose,
                              enumerate_omega, lambda_d, rep_value)

F = Fraction

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def harmonic_spec():
    """Exponents 1/2, 1/3, 1/4, 1/5, ..."""
    return SimpleSeriesSpec([(1, F(1, 2))],
                            CallbackTail(lambda i: (1, F(1, i + 2))))


def seven_exponent_spec(extend=False):
    """Exponents 2, 3/2, 1/2, 1/3, 1/5, 1/7, 1/11, continuing through prime
    reciprocals when extended."""
    exps = [F(2), F(3, 2), F(1, 2), F(1, 3), F(1, 5), F(1, 7), F(1, 11)]
    tail = CallbackTail(lambda i: (1, F(1, _PRIMES[i + 4]))) if extend \
        else None
    return SimpleSeriesSpec([(1, e) for e in exps], tail)


def trimmed_seven_spec(extend=False):
    exps = [F(3, 2), F(1, 2), F(1, 3), F(1, 5), F(1, 7), F(1, 11)]
    tail = CallbackTail(lambda i: (1, F(1, _PRIMES[i + 4]))) if extend \
        else None
    return SimpleSeriesSpec([(1, e) for e in exps], tail)


def report(num, ok, detail=""):
    line = f"[criterion {num}] {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)


def test_criterion_1_leading_exponent_of_paper_example():
    t0 = time.monotonic()
    ctx = MonoidContext(dyadic_spec(), 8)
    got = eval_leading(parse("y^2 - x"), ctx)
    elapsed = time.monotonic() - t0
    ok = got.le == F(3, 4) and got.lc == 2 and elapsed < 1.0
    report(1, ok, f"le={got.le} lc={got.lc} {elapsed:.3f}s")
    assert got.le == F(3, 4)
    assert got.lc == 2
    assert elapsed < 1.0


@pytest.mark.xfail(
    strict=True,
    reason="quoted ramification list drops the repeated r_1 = 1 produced by "
           "the integer leading exponent; the cumulative-lcm definition "
           "forces r = (1,1,2,2,6,30,210,2310) and l(1) = 2 for this input")
def test_criterion_2_literal_seven_exponent_expectations():
    """As stated: exponents (2, 3/2, 1/2, 1/3, 1/5, 1/7, 1/11) are claimed
    to yield r = (1,2,2,6,30,210,2310) with l(0)=0, l(1)=1, l(i)=i+1.

    The first exponent is an integer, so its denominator 1 repeats r_0 = 1
    at r_1 and every later index shifts by one; the claimed list is what
    the same construction yields after dropping that head term (covered by
    the passing companion test below).
    """
    seqs = derive(seven_exponent_spec(), 5)
    ok = seqs.r_list == (1, 2, 2, 6, 30, 210, 2310)
    report(2, ok, "literal transcription")
    assert seqs.r_list == (1, 2, 2, 6, 30, 210, 2310)
    assert seqs.l(1) == 1


def test_criterion_2_ramification_examples():
    t0 = time.monotonic()
    seqs = derive(trimmed_seven_spec(), 5)
    first_ok = (seqs.r_list == (1, 2, 2, 6, 30, 210, 2310)
                and seqs.l(0) == 0 and seqs.l(1) == 1
                and all(seqs.l(i) == i + 1 for i in range(2, 6)))
    hseqs = derive(harmonic_spec(), 4)
    second_ok = hseqs.r_list == (1, 2, 6, 12, 60)
    # the integer-exponent head changes only the raw indexing, never the
    # monoid data shared by both transcriptions
    literal = derive(seven_exponent_spec(), 5)
    shift_ok = (literal.rho_list == seqs.rho_list
                and literal.s_list == seqs.s_list
                and literal.r_list == (1, 1, 2, 2, 6, 30, 210, 2310))
    elapsed = time.monotonic() - t0
    ok = first_ok and second_ok and shift_ok and elapsed < 1.0
    report(2, ok, f"{elapsed:.3f}s")
    assert first_ok and second_ok and shift_ok
    assert elapsed < 1.0


def test_criterion_3_series_arithmetic():
    z1 = NoetherianSeries(
        ((F(1, 2), F(1)), (F(1, 4), F(1)), (F(1, 8), F(1))))
    z2 = NoetherianSeries(((F(1), F(3)), (F(0), F(1))))
    total = series_add(z1, z2)
    prod = series_mul(z1, z2)
    want_sum = NoetherianSeries((
        (F(1), F(3)), (F(1, 2), F(1)), (F(1, 4), F(1)), (F(1, 8), F(1)),
        (F(0), F(1))))
    want_prod = NoetherianSeries((
        (F(3, 2), F(3)), (F(5, 4), F(3)), (F(9, 8), F(3)),
        (F(1, 2), F(1)), (F(1, 4), F(1)), (F(1, 8), F(1))))
    ok = total == want_sum and prod == want_prod
    report(3, ok)
    assert total == want_sum
    assert prod == want_prod


@pytest.mark.xfail(
    strict=True,
    reason="f1^2 - 4*x*y lies in the ideal with value 11/8 = rho_3, and "
           "11/8 - 3/4 = 5/8 and 11/8 - 3/2 < 0 are not monoid members, so "
           "{y^2-x, x*y} violates basis condition (i); construction must "
           "adjoin a value-11/8 element and keeps climbing the rho ladder")
def test_criterion_4_claimed_finite_basis():
    """As stated: construction on (y^2 - x, x*y) should return complete with
    basis equal to the generators.

    The value-3/2 syzygy element has spoly f1^2 - 4xy whose value is
    rho_3 = 11/8 (the square contributes 8 t^(11/8) while 4xy contributes
    only 4 t^(5/4) at the next level), and 11/8 is not divisible by either
    generator value, so the pair alone is never a basis; each later round
    provably adds the next rho element, so completion is unreachable at any
    round cap.
    """
    ctx = MonoidContext(dyadic_spec(), 8)
    gens = [parse("y^2 - x"), parse("x*y")]
    result = buchberger(gens, ctx, max_rounds=2)
    ok = result.complete and list(result.basis) == gens
    report(4, ok, "claimed basis equality")
    assert result.complete
    assert list(result.basis) == gens


def test_criterion_4_membership_reductions():
    t0 = time.monotonic()
    ctx = MonoidContext(dyadic_spec(), 8)
    gens = [parse("y^2 - x"), parse("x*y")]
    result = buchberger(gens, ctx, max_rounds=2)
    basis = list(result.basis)
    x2 = reduce(parse("x^2"), basis, ctx)
    y3 = reduce(parse("y^3"), basis, ctx)
    elapsed = time.monotonic() - t0
    ok = (x2.remainder.is_zero() and y3.remainder.is_zero()
          and basis[:2] == gens and elapsed < 10.0)
    report(4, ok, f"x^2 and y^3 reduce to 0 over the computed basis, "
                  f"{elapsed:.2f}s")
    assert x2.remainder.is_zero()
    assert y3.remainder.is_zero()
    assert elapsed < 10.0


def test_criterion_5_infinite_basis_behavior():
    t0 = time.monotonic()
    ctx = MonoidContext(dyadic_spec(), 8)
    result = buchberger([parse("x"), parse("y")], ctx, max_rounds=6)
    values = {eval_leading(g, ctx).le for g in result.basis}
    elapsed = time.monotonic() - t0
    ok = (not result.complete
          and {F(1, 2), F(3, 4), F(11, 8)} <= values
          and elapsed < 60.0)
    report(5, ok, f"values={sorted(values)} {elapsed:.1f}s")
    assert not result.complete
    assert {F(1, 2), F(3, 4), F(11, 8)} <= values
    # every adjoined element stays inside the ideal: zero constant term
    assert all(g.coeffs.get((0, 0), 0) == 0 for g in result.basis)
    assert elapsed < 60.0


def test_criterion_6_sequence_identity_suite():
    specs = {
        "dyadic": dyadic_spec(),
        "seven-exponent": seven_exponent_spec(extend=True),
        "trimmed-seven": trimmed_seven_spec(extend=True),
        "harmonic": harmonic_spec(),
    }
    checked = {}
    for name, spec in specs.items():
        checked[name] = self_check(derive(spec, 6))
    ok = all(len(v) == 4 for v in checked.values())
    report(6, ok, "recurrence, sum, difference, u-stabilization")
    assert ok


def test_criterion_7_uniqueness_and_membership_oracle():
    t0 = time.monotonic()
    ctx = MonoidContext(dyadic_spec(), 8)
    seen = {}
    for digits in product(range(2), range(2), range(2)):
        for n in range(21):
            rep = MonoidRep(n, digits)
            v = rep_value(rep, ctx)
            assert v not in seen
            seen[v] = rep
            assert decompose(v, ctx) == rep
    members = {v for v, _ in enumerate_omega(3, ctx, 10)}
    agree = all(
        (decompose(F(num, 8), ctx) is not None) == (F(num, 8) in members)
        for num in range(81))
    elapsed = time.monotonic() - t0
    ok = agree and elapsed < 30.0
    report(7, ok, f"{len(seen)} representations, {elapsed:.2f}s")
    assert agree
    assert elapsed < 30.0


def _degree_compositions(d, degs):
    """All exponent vectors (d_1..d_k) with sum d_j * degs[j-1] = d."""
    if not degs:
        return [()] if d == 0 else []
    out = []
    step = degs[0]
    for first in range(d // step + 1):
        for rest in _degree_compositions(d - first * step, degs[1:]):
            out.append((first,) + rest)
    return out


def test_criterion_8_lambda_properties():
    t0 = time.monotonic()
    ctx = MonoidContext(dyadic_spec(), 8)
    values = [lambda_d(d, ctx)[0] for d in range(51)]
    increasing = all(a < b for a, b in zip(values, values[1:]))
    fracs = [v % 1 for v in values[:31]]
    distinct = len(set(fracs)) == 31
    # oracle: the minimum over all products of truncation minimal
    # polynomials of the right total y-degree
    degs = [ctx.seqs.r(ctx.seqs.l(j - 1)) for j in range(1, 5)]
    polys = [truncation_min_poly(ctx, j) for j in range(1, 5)]
    oracle_ok = True
    for d in range(9):
        best = None
        for combo in _degree_compositions(d, degs):
            base = BivarPoly.one()
            for p, e in zip(polys, combo):
                if e:
                    base = base * p ** e
            for a in range(3):
                prod = base * BivarPoly.x() ** a
                le = eval_leading(prod, ctx).le
                if best is None or le < best:
                    best = le
        if best != values[d]:
            oracle_ok = False
            break
    elapsed = time.monotonic() - t0
    ok = increasing and distinct and oracle_ok and elapsed < 60.0
    report(8, ok, f"{elapsed:.2f}s")
    assert increasing
    assert distinct
    assert oracle_ok
    assert elapsed < 60.0


def _random_poly(rng, max_total_deg=4):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        a = rng.randint(0, max_total_deg)
        b = rng.randint(0, max_total_deg - a)
        c = rng.randint(-5, 5)
        if c:
            terms[(a, b)] = c
    return BivarPoly(terms)


def test_criterion_9_division_and_syzygy_contracts():
    t0 = time.monotonic()
    ctx = MonoidContext(dyadic_spec(), 8)
    rng = random.Random(97)
    pairs = 0
    while pairs < 200:
        f, g = _random_poly(rng), _random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        pairs += 1
        lf = eval_leading(f, ctx)
        lg = eval_leading(g, ctx)
        h = approx_quotient(f, g, ctx)
        if h is not None:
            rem = f - g * h
            assert rem.is_zero() or eval_leading(rem, ctx).le < lf.le
        for elt in syzygy_family(f, g, ctx):
            assert eval_leading(elt.a, ctx).le + lf.le == elt.value
            assert eval_leading(elt.b, ctx).le + lg.le == elt.value
            assert elt.spoly == elt.a * f - elt.b * g
            if not elt.spoly.is_zero():
                assert eval_leading(elt.spoly, ctx).le < elt.value
        trace = reduce(f, [g], ctx)
        vals = [s.value_before for s in trace.steps]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert len(trace.steps) <= 10 ** 3
    elapsed = time.monotonic() - t0
    ok = elapsed < 120.0
    report(9, ok, f"{pairs} pairs, {elapsed:.1f}s")
    assert pairs >= 200
    assert elapsed < 120.0


def test_criterion_10_minimal_polynomial_checks():
    ctx = MonoidContext(dyadic_spec(), 8)
    ok = True
    for i in range(1, 5):
        p = truncation_min_poly(ctx, i)
        if p.deg_y() != ctx.seqs.r(ctx.seqs.l(i) - 1):
            ok = False
        if eval_leading(p, ctx).le != ctx.seqs.rho(i):
            ok = False
    report(10, ok)
    assert ok
