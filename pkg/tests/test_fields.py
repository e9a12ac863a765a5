"""GF(p^r) arithmetic and projective point enumeration."""

import itertools
import random

import pytest

from heartlab.fields import (
    canonicalize,
    is_prime,
    make_field,
    projective_points,
)


class TestMakeField:
    def test_prime_field_modulus(self):
        assert make_field(2, 1).modulus == (0, 1)

    def test_f4_modulus_is_unique_irreducible(self):
        assert make_field(2, 2).modulus == (1, 1, 1)

    def test_f9_modulus_by_enumeration(self):
        # all 9 monic quadratics over F_3, smallest irreducible wins
        first = None
        for c0, c1 in itertools.product(range(3), range(3)):
            has_root = any((x * x + c1 * x + c0) % 3 == 0 for x in range(3))
            if not has_root:
                first = (c0, c1, 1)
                break
        assert make_field(3, 2).modulus == first

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            make_field(6, 1)

    def test_rejects_degree_out_of_range(self):
        with pytest.raises(ValueError):
            make_field(2, 9)

    def test_is_prime(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class TestArithmetic:
    def test_f4_generator_square(self):
        f4 = make_field(2, 2)
        x = f4.element((0, 1))
        assert (x * x).coeffs == (1, 1)  # x^2 = x + 1 under x^2+x+1

    def test_f8_inverses_exhaustive(self):
        f8 = make_field(2, 3)
        for a in f8.elements():
            if a.is_zero():
                with pytest.raises(ZeroDivisionError):
                    a.inverse()
            else:
                assert a * a.inverse() == f8.one()

    def test_f9_multiplicative_group_cyclic(self):
        f9 = make_field(3, 2)
        orders = set()
        for a in f9.elements():
            if a.is_zero():
                continue
            power, k = a, 1
            while power != f9.one():
                power = power * a
                k += 1
            orders.add(k)
        assert 8 in orders
        assert all(8 % k == 0 for k in orders)

    def test_distributivity_and_associativity_sampled(self):
        rng = random.Random(17)
        for p, r in [(2, 4), (3, 2), (5, 1), (7, 2)]:
            field = make_field(p, r)
            for _ in range(1000 // 4):
                a, b, c = (field.from_int(rng.randrange(field.q)) for _ in range(3))
                assert a * (b + c) == a * b + a * c
                assert (a * b) * c == a * (b * c)
                assert (a + b) + c == a + (b + c)

    def test_frobenius_additive_exhaustive(self):
        for p, r in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)]:
            field = make_field(p, r)
            assert field.q <= 64 or (p, r) == (7, 2)
            for a in field.elements():
                for b in field.elements():
                    assert (a + b) ** p == a**p + b**p

    def test_subtraction_and_negation(self):
        f7 = make_field(7, 1)
        a, b = f7.element((3,)), f7.element((5,))
        assert a - b == a + (-b)
        assert (a - a).is_zero()


class TestProjectivePoints:
    @pytest.mark.parametrize(
        "p,r,m,count",
        [(2, 1, 3, 7), (2, 2, 3, 21), (3, 1, 4, 40), (2, 3, 2, 9), (3, 2, 3, 91)],
    )
    def test_point_counts(self, p, r, m, count):
        field = make_field(p, r)
        points = projective_points(field, m)
        assert len(points) == count
        assert (field.q**m - 1) == count * (field.q - 1)

    def test_points_distinct_and_sorted(self):
        field = make_field(2, 2)
        points = projective_points(field, 3)
        keys = [pt.key() for pt in points]
        assert len(set(keys)) == len(keys)
        assert keys == sorted(keys)

    def test_canonical_first_nonzero_is_one(self):
        field = make_field(3, 1)
        for pt in projective_points(field, 4):
            leading = next(c for c in pt.coords if not c.is_zero())
            assert leading == field.one()

    def test_canonicalize_scaling_invariance(self):
        field = make_field(2, 2)
        vector = (field.element((0, 1)), field.one(), field.zero())
        images = {
            canonicalize(tuple(s * c for c in vector))
            for s in field.elements()
            if not s.is_zero()
        }
        assert len(images) == 1

    def test_canonicalize_rejects_zero(self):
        field = make_field(2, 1)
        with pytest.raises(ValueError):
            canonicalize((field.zero(), field.zero()))

    def test_canonicalize_definition_case(self):
        field = make_field(5, 1)
        a, b = field.element((2,)), field.element((3,))
        point = canonicalize((field.zero(), a, b))
        assert point.coords[0].is_zero()
        assert point.coords[1] == field.one()
        assert point.coords[2] == a.inverse() * b
