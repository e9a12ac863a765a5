"""Polynomial parsing, Frobenius cycle types, and probe soundness."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heartlab.probe import (
    IntPolynomial,
    PolyParseError,
    cycle_type_mod_p,
    format_poly,
    group_cycle_types,
    parse_poly,
    primes_coprime_to,
    probe,
)
from heartlab.zoo import GroupId, parse_group_spec


def sylvester_resultant(f: tuple, g: tuple) -> int:
    """Exact integer resultant via the Sylvester matrix over Q (test oracle)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for shift in range(n):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(f)):
            row[shift + j] = Fraction(c)
        rows.append(row)
    for shift in range(m):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(g)):
            row[shift + j] = Fraction(c)
        rows.append(row)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] / rows[col][col]
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


def int_derivative(coeffs: tuple) -> tuple:
    return tuple(i * c for i, c in enumerate(coeffs))[1:]


class TestParse:
    def test_direct_reading(self):
        assert parse_poly("x^7-7*x+3").coeffs == (3, -7, 0, 0, 0, 0, 0, 1)

    def test_implicit_multiplication(self):
        assert parse_poly("2x^2").coeffs == (0, 0, 2)
        assert parse_poly("2*x^2").coeffs == (0, 0, 2)
        assert parse_poly("-3x").coeffs == (0, -3)

    def test_quartic(self):
        assert parse_poly("x^4+1").coeffs == (1, 0, 0, 0, 1)

    def test_whole_expression_parens_and_whitespace(self):
        assert parse_poly(" ( x^2 - 3 x + 1 ) ").coeffs == (1, -3, 1)

    def test_coefficient_collection(self):
        assert parse_poly("x + x + 1 - 2").coeffs == (-1, 2)

    @pytest.mark.parametrize(
        "text", ["", "x^", "2*", "x^2+", "* x", "(x+1", "x+(x+1)", "y+1", "x^2 ++ 1"]
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(PolyParseError):
            parse_poly(text)

    def test_error_carries_position(self):
        with pytest.raises(PolyParseError) as info:
            parse_poly("x^2 + y")
        assert info.value.position == 6

    def test_constant_rejected(self):
        with pytest.raises((PolyParseError, ValueError)):
            parse_poly("5")

    def test_roundtrip_corpus_of_100(self):
        rng = random.Random(99)
        for _ in range(100):
            degree = rng.randrange(1, 13)
            coeffs = [rng.randrange(-99, 100) for _ in range(degree)]
            coeffs.append(rng.choice([c for c in range(-9, 10) if c]))
            poly = IntPolynomial(tuple(coeffs))
            assert parse_poly(format_poly(poly)) == poly

    @given(
        st.lists(st.integers(-50, 50), min_size=1, max_size=9),
        st.integers(1, 20),
    )
    def test_roundtrip_property(self, low_coeffs, lead):
        poly = IntPolynomial(tuple(low_coeffs) + (lead,))
        assert parse_poly(format_poly(poly)) == poly


class TestCycleTypeModP:
    def test_cubic_with_one_root_mod_5(self):
        # 3 is the only root of x^3 - 2 mod 5 (exhaustive check below)
        f = parse_poly("x^3-2")
        roots = [x for x in range(5) if (x**3 - 2) % 5 == 0]
        assert roots == [3]
        assert cycle_type_mod_p(f, 5).lengths == (2, 1)

    def test_ramified_detection(self):
        assert cycle_type_mod_p(parse_poly("x^2+1"), 2) is None

    def test_split_quadratic(self):
        assert cycle_type_mod_p(parse_poly("x^2+1"), 5).lengths == (1, 1)

    def test_rejects_prime_dividing_leading(self):
        with pytest.raises(ValueError):
            cycle_type_mod_p(parse_poly("3x^2+1"), 3)

    def test_lengths_sum_to_degree(self):
        f = parse_poly("x^7-7*x+3")
        for p in primes_coprime_to(25, f.leading):
            ctype = cycle_type_mod_p(f, p)
            if ctype is not None:
                assert ctype.degree == 7

    def test_ramified_primes_divide_the_discriminant_resultant(self):
        corpus = ["x^5-x-1", "x^3-2", "x^7-7*x+3", "x^4+1", "x^2+1", "2x^3+x^2-5"]
        for text in corpus:
            f = parse_poly(text)
            resultant = sylvester_resultant(f.coeffs, int_derivative(f.coeffs))
            assert resultant != 0  # squarefree corpus
            for p in primes_coprime_to(50, f.leading):
                if cycle_type_mod_p(f, p) is None:
                    assert resultant % p == 0


class TestGroupCycleTypes:
    def test_cyclic_exact(self):
        types, exact = group_cycle_types(GroupId("cyclic", (5,)))
        assert exact
        assert {t.lengths for t in types} == {(1, 1, 1, 1, 1), (5,)}

    def test_s4_types_are_partitions(self):
        types, exact = group_cycle_types(GroupId("symmetric", (4,)))
        assert exact
        assert {t.lengths for t in types} == {
            (1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)
        }

    def test_m11_exact_from_enumeration(self):
        types, exact = group_cycle_types(GroupId("mathieu", (11,)))
        assert exact
        lengths = {t.lengths for t in types}
        assert (11,) in lengths
        assert (8, 2, 1) in lengths

    def test_large_group_sampled(self):
        types, exact = group_cycle_types(GroupId("mathieu", (23,)), budget=50, seed=1)
        assert not exact
        assert types

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            group_cycle_types(GroupId("cyclic", (5,)), budget=0)


class TestProbe:
    def test_quadratic_vs_s2(self):
        report = probe(parse_poly("x^2+1"), 10, [GroupId("symmetric", (2,))])
        assert report.verdicts[0].status == "consistent"
        assert sum(report.histogram.values()) == len(report.primes_used) - len(
            report.ramified_primes
        )
        for ctype in report.histogram:
            assert ctype.degree == 2

    def test_x4_plus_1_never_irreducible(self):
        report = probe(parse_poly("x^4+1"), 50, [GroupId("symmetric", (4,))])
        assert report.irreducibility_evidence is False
        assert report.verdicts[0].status == "consistent"

    def test_a5_inconsistency_with_witness(self):
        report = probe(parse_poly("x^5-x-1"), 100, [GroupId("alternating", (5,))])
        verdict = report.verdicts[0]
        assert verdict.status == "inconsistent"
        types, exact = group_cycle_types(GroupId("alternating", (5,)))
        assert exact
        assert verdict.witness not in types  # soundness of the witness

    def test_s5_consistent_and_irreducibility_evidence(self):
        report = probe(parse_poly("x^5-x-1"), 100, [GroupId("symmetric", (5,))])
        assert report.verdicts[0].status == "consistent"
        assert report.irreducibility_evidence is True

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            probe(parse_poly("x^4+1"), 5, [GroupId("symmetric", (5,))])

    def test_determinism(self):
        gid = parse_group_spec("M23")
        a = probe(parse_poly("x^23-1"), 12, [gid], seed=0, sample_budget=200)
        b = probe(parse_poly("x^23-1"), 12, [gid], seed=0, sample_budget=200)
        assert a.to_payload() == b.to_payload()

    def test_sampled_sets_cannot_rule_out(self):
        # every verdict against a sampled type set is consistent/insufficient
        report = probe(parse_poly("x^23-1"), 12, [parse_group_spec("M23")], sample_budget=100)
        assert report.verdicts[0].status in ("consistent", "insufficient_data")

    def test_payload_shape(self):
        payload = probe(parse_poly("x^2+1"), 6, [GroupId("symmetric", (2,))]).to_payload()
        assert payload["polynomial"] == "x^2+1"
        assert len(payload["primes_used"]) == 6
        total = sum(entry["count"] for entry in payload["cycle_type_histogram"])
        assert total == len(payload["primes_used"]) - len(payload["ramified_primes"])
