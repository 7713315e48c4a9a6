"""Tests for exact polynomial arithmetic, Sturm counting and sign certificates."""

import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from occlib.exact import (
    CertificateError,
    Polynomial,
    RationalFunction,
    certify_sign,
    count_roots,
    count_roots_above,
    frac_str,
    parse_frac,
    sturm_chain,
)

P = Polynomial


def fr(n, d=1):
    return F(n, d)


rationals = st.builds(F, st.integers(-40, 40), st.integers(1, 12))
small_polys = st.builds(P, st.lists(rationals, min_size=0, max_size=6))


class TestPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        assert P([1, 2, 0, 0]).coeffs == (F(1), F(2))
        assert P([0, 0]).is_zero()
        assert P.zero().degree == -1

    def test_eval_horner(self):
        p = P([F(1, 3), -2, 1])  # x^2 - 2x + 1/3
        assert p(F(1, 2)) == F(1, 4) - 1 + F(1, 3)

    def test_eval_cleared_numerator_example(self):
        # numerator of 1 - p^2(6-4p+p^2)/(1-p)^4 vanishes at p = 1/4
        one_minus = P([1, -1])
        num = one_minus ** 4 - P([0, 0, 6, -4, 1])
        assert num(F(1, 4)) == 0
        assert num(0) == 1

    def test_divmod_identity(self):
        a = P([3, 0, F(1, 2), 4])
        b = P([1, 2])
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_gcd_and_square_free(self):
        p = P.from_roots([F(1, 3), F(1, 3), F(2, 5)])
        sf = p.square_free_part()
        assert sf.monic() == P.from_roots([F(1, 3), F(2, 5)])

    def test_from_roots_evaluates_to_zero(self):
        p = P.from_roots([F(1, 7), -3])
        assert p(F(1, 7)) == 0 and p(-3) == 0 and p(0) != 0

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=150, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a * b == b * a

    @given(small_polys, small_polys, rationals)
    @settings(max_examples=150, deadline=None)
    def test_eval_is_ring_homomorphism(self, a, b, x):
        assert (a + b)(x) == a(x) + b(x)
        assert (a * b)(x) == a(x) * b(x)

    @given(small_polys, small_polys)
    @settings(max_examples=150, deadline=None)
    def test_divmod_property(self, a, b):
        if b.is_zero():
            with pytest.raises(ZeroDivisionError):
                divmod(a, b)
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


class TestRationalFunction:
    def test_reduction_to_lowest_terms(self):
        x = P.x()
        rf = RationalFunction((x - 1) * (x + 2), (x - 1) * (x + 3))
        assert rf.num == x + 2
        assert rf.den == x + 3

    def test_simplification_collapses_derivative_example(self):
        # d/dp [1 - p^2(6-4p+p^2)/(1-p)^4] simplifies to -12p/(1-p)^5
        p = RationalFunction.x()
        one = RationalFunction.constant(1)
        g = one - p ** 2 * (6 - 4 * p + p ** 2) / (one - p) ** 4
        num, den = g.num, g.den
        dnum = num.derivative() * den - num * den.derivative()
        gprime = RationalFunction(dnum, den * den)
        assert gprime == RationalFunction(P([0, -12]), (P([1, -1])) ** 5)

    def test_arithmetic_against_pointwise(self):
        x = RationalFunction.x()
        f = (x ** 2 - 1) / (x + 3)
        g = 1 / (x - F(1, 2))
        h = f * g - x
        for t in [F(1, 3), F(7, 5), F(-2, 9)]:
            assert h(t) == f(t) * g(t) - t

    def test_pole_raises(self):
        x = RationalFunction.x()
        with pytest.raises(ZeroDivisionError):
            (1 / (x - 2))(2)


class TestSturm:
    def test_chain_example_x2_minus_2(self):
        chain = sturm_chain(P([-2, 0, 1]))
        assert chain == (P([-2, 0, 1]), P([0, 2]), P([2]))

    def test_chain_linear(self):
        assert sturm_chain(P([F(-1, 2), 1])) == (P([F(-1, 2), 1]), P([1]))

    def test_count_examples(self):
        p = P([-2, 0, 1])
        assert count_roots(p, 1, 2) == 1
        assert count_roots(p, -2, 2) == 2
        q = P.from_roots([F(1, 3), F(2, 5)])
        assert count_roots(q, 0, 1) == 2

    def test_chain_length_bounded_by_degree(self):
        rng = random.Random(7)
        for _ in range(50):
            deg = rng.randint(1, 8)
            p = P([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(deg)] + [1])
            chain = sturm_chain(p)
            assert len(chain) <= p.degree + 1

    def test_planted_roots_thousand_cases(self):
        # oracle: plant known rational roots, count how many land in (a, b]
        rng = random.Random(20260815)
        for trial in range(1000):
            k = rng.randint(0, 5)
            roots = set()
            while len(roots) < k:
                roots.add(F(rng.randint(-30, 30), rng.randint(1, 10)))
            roots = sorted(roots)
            p = P.from_roots(roots)
            if rng.random() < 0.3:
                p = p * P([1, 0, 1])  # irreducible factor adds no real roots
            if rng.random() < 0.3:
                p = p * F(rng.choice([-3, -1, 2, 5]), 7)
            a = F(rng.randint(-35, 30), rng.choice([1, 2, 3, 7]))
            b = a + F(rng.randint(1, 40), rng.choice([1, 3, 5]))
            expected = sum(1 for r in roots if a < r <= b)
            assert count_roots(p, a, b) == expected, (trial, roots, a, b)

    def test_multiplicities_do_not_inflate_count(self):
        p = P.from_roots([F(1, 2), F(1, 2), F(1, 2), 3])
        assert count_roots(p, 0, 4) == 2

    def test_split_additivity_including_root_splits(self):
        rng = random.Random(99)
        for _ in range(200):
            roots = sorted({F(rng.randint(-10, 10), rng.randint(1, 6)) for _ in range(rng.randint(1, 4))})
            p = P.from_roots(roots)
            a, c = F(-12), F(12)
            b = rng.choice(roots) if rng.random() < 0.5 else F(rng.randint(-11, 11), 2)
            if not a < b < c:
                continue
            assert count_roots(p, a, b) + count_roots(p, b, c) == count_roots(p, a, c)

    def test_count_roots_above(self):
        p = P.from_roots([2, 10, -50])
        assert count_roots_above(p, 0) == 2
        assert count_roots_above(p, 10) == 0
        assert count_roots_above(p, F(19, 2)) == 1


class TestCertificates:
    def test_positive_certificate(self):
        c = certify_sign(P([F(-1, 2), 1]), 0, F(1, 4), F(1, 8))
        assert c.passed and c.witness_sign == -1 and c.root_count == 0

    def test_failure_names_sign_change(self):
        c = certify_sign(P([F(-3, 8), 1]), F(1, 4), F(1, 2), F(3, 8))
        assert not c.passed
        assert c.root_hit == F(3, 8)
        x1, x2, s1, s2 = c.failure_bracket
        assert x1 < F(3, 8) < x2 and {s1, s2} == {-1, 1}

    def test_endpoint_root_upper_is_shrunk_and_reported(self):
        c = certify_sign(P([F(-1, 2), 1]), F(1, 4), F(1, 2), F(5, 16))
        assert c.passed and c.zero_at_upper and not c.zero_at_lower
        assert c.certified_hi < F(1, 2)
        assert c.witness_sign == -1

    def test_endpoint_root_lower_is_shrunk_and_reported(self):
        # -12p on [0, 1/4]: root exactly at the lower endpoint
        c = certify_sign(P([0, -12]), 0, F(1, 4), F(1, 8))
        assert c.passed and c.zero_at_lower and c.witness_sign == -1
        assert c.certified_lo > 0

    def test_shrink_does_not_skip_interior_roots(self):
        # root at the endpoint 1/2 and another at 15/32; a naive large shift
        # from 1/2 would jump past 15/32
        p = P.from_roots([F(1, 2), F(15, 32)])
        c = certify_sign(p, F(1, 4), F(1, 2), F(1, 3))
        assert not c.passed

    def test_unshiftable_endpoint_raises(self):
        # roots densely flank the endpoint shifts: 1/2 - 2^-k for every k <= 64
        # cannot be cleared because the allowed region is empty
        p = P.from_roots([F(1, 2)])
        with pytest.raises(CertificateError):
            certify_sign(p, F(1, 2) - F(1, 2 ** 70), F(1, 2), F(1, 2) - F(1, 2 ** 71))

    def test_even_multiplicity_failure_still_reports_bracket(self):
        p = P.from_roots([F(1, 3), F(1, 3)])
        c = certify_sign(p, 0, 1, F(2, 3))
        assert not c.passed
        x1, x2, _, _ = c.failure_bracket
        assert x1 < F(1, 3) < x2

    def test_json_round_trip_of_fields(self):
        c = certify_sign(P([F(-1, 2), 1]), F(1, 4), F(1, 2), F(5, 16), case_id="demo")
        blob = json.loads(json.dumps(c.to_json_dict()))
        assert blob["case_id"] == "demo"
        assert blob["status"] == "pass"
        assert [parse_frac(s) for s in blob["polynomial"]] == [F(-1, 2), F(1)]
        assert parse_frac(blob["interval"][1]) == F(1, 2)

    def test_constant_polynomial_certificate(self):
        c = certify_sign(P([F(3, 7)]), 0, 1, F(1, 2))
        assert c.passed and c.witness_sign == 1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(CertificateError):
            certify_sign(P.zero(), 0, 1, F(1, 2))


def test_frac_str_round_trip():
    for v in [F(31, 125), F(-41, 448), F(5), F(0)]:
        assert parse_frac(frac_str(v)) == v
