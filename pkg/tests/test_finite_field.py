"""Field tower arithmetic against hand-checked values and a naive oracle."""

import random

import pytest

from cyclespec import finite_field as ff


GF2 = ff.prime_field(2)
GF3 = ff.prime_field(3)
GF7 = ff.prime_field(7)


def _extension(p, degree):
    base = ff.prime_field(p)
    return ff.extend(base, ff.find_irreducible(base, degree))


class TestPrimeField:
    def test_small_orders(self):
        assert GF2.order == 2
        assert GF7.order == 7
        assert GF7.characteristic == 7

    def test_composite_rejected(self):
        with pytest.raises(ff.CompositeCharacteristic):
            ff.prime_field(6)
        with pytest.raises(ff.CompositeCharacteristic):
            ff.prime_field(1)

    def test_mod_seven_arithmetic(self):
        three, five = GF7.from_index(3), GF7.from_index(5)
        assert (three + five).to_index() == 1
        assert (three * five).to_index() == 1
        assert (-three).to_index() == 4
        assert (three - five).to_index() == 5

    def test_element_wraps(self):
        assert GF7.element(-1).to_index() == 6
        assert GF7.element(10).to_index() == 3


class TestIrreducibles:
    def test_canonical_choices(self):
        # lowest-degree-first index tuples: x^3 + x + 1, x^2 + x + 1, x^2 + 1
        cubic = ff.find_irreducible(GF2, 3)
        assert [c.to_index() for c in cubic.coefficients] == [1, 1, 0, 1]
        quad = ff.find_irreducible(GF2, 2)
        assert [c.to_index() for c in quad.coefficients] == [1, 1, 1]
        quad3 = ff.find_irreducible(GF3, 2)
        assert [c.to_index() for c in quad3.coefficients] == [1, 0, 1]

    def test_reducible_modulus_rejected(self):
        x_squared = ff.Polynomial.from_indices(GF2, [0, 0, 1])
        with pytest.raises(ff.ReducibleModulus) as info:
            ff.extend(GF2, x_squared)
        # witness factor is x
        assert [c.to_index() for c in info.value.factor.coefficients] == [0, 1]

    def test_every_returned_modulus_has_no_root(self):
        for base, degree in [(GF2, 2), (GF2, 3), (GF3, 2), (GF3, 3), (GF7, 2)]:
            poly = ff.find_irreducible(base, degree)
            assert poly.is_monic
            for point in base.elements():
                assert not poly.evaluate(point).is_zero


class TestExtensionField:
    def test_order_eight(self):
        field = _extension(2, 3)
        assert field.order == 8
        assert field.characteristic == 2
        assert len(list(field.elements())) == 8

    def test_cube_reduction(self):
        # x * x^2 = x^3 = x + 1 mod x^3 + x + 1
        field = _extension(2, 3)
        x = field.from_index(2)
        x2 = field.from_index(4)
        assert (x * x2).to_index() == 3

    def test_index_round_trip(self):
        field = _extension(3, 2)
        for index in range(field.order):
            assert field.from_index(index).to_index() == index

    def test_mismatched_operands_rejected(self):
        with pytest.raises(ff.FieldMismatch):
            GF2.one() + GF3.one()
        with pytest.raises(ff.FieldMismatch):
            _extension(2, 2).one() * _extension(2, 3).one()


class TestInversesAndOrders:
    def test_inverse_mod_seven(self):
        assert GF7.from_index(3).inverse().to_index() == 5

    def test_zero_has_no_inverse(self):
        with pytest.raises(ff.ZeroInversion):
            GF7.zero().inverse()
        with pytest.raises(ff.ZeroArgument):
            ff.element_order(_extension(2, 3).zero())

    def test_orders_mod_seven(self):
        assert ff.element_order(GF7.from_index(3)) == 6
        assert ff.element_order(GF7.from_index(2)) == 3
        assert ff.element_order(GF7.one()) == 1

    def test_primitive_choices(self):
        assert ff.find_primitive(GF7).to_index() == 3
        assert ff.find_primitive(GF2).to_index() == 1
        field = _extension(2, 3)
        gamma = ff.find_primitive(field)
        assert gamma.to_index() == 2  # the generator x itself
        assert ff.element_order(gamma) == 7


def _naive_product(p, modulus, a, b):
    """Schoolbook multiply-and-reduce on plain int vectors, coefficients mod p."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    width = len(modulus) - 1
    for top in range(len(out) - 1, width - 1, -1):
        c = out[top]
        if c:
            for j in range(width + 1):
                out[top - width + j] = (out[top - width + j] - c * modulus[j]) % p
    return (out + [0] * width)[:width]


@pytest.mark.parametrize("p,degree", [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_products_match_naive_oracle(p, degree):
    field = _extension(p, degree)
    modulus = [c.to_index() for c in field.modulus.coefficients]
    rng = random.Random(1000 * p + degree)
    for _ in range(100):
        a = field.from_index(rng.randrange(field.order))
        b = field.from_index(rng.randrange(field.order))
        got = [c.to_index() for c in (a * b).coords]
        want = _naive_product(p, modulus,
                              [c.to_index() for c in a.coords],
                              [c.to_index() for c in b.coords])
        assert got == want


@pytest.mark.parametrize("make", [
    lambda: GF7,
    lambda: _extension(2, 3),
    lambda: _extension(3, 2),
    lambda: ff.extend(_extension(2, 2), ff.find_irreducible(_extension(2, 2), 3)),
])
def test_field_axioms_hold(make):
    field = make()
    rng = random.Random(field.order)
    pick = lambda: field.from_index(rng.randrange(field.order))
    for _ in range(60):
        a, b, c = pick(), pick(), pick()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + (-a)).is_zero
    for _ in range(30):
        a = pick()
        if a.is_zero:
            continue
        assert (a * a.inverse()).is_one
        assert (a ** (field.order - 1)).is_one
        assert a ** -1 == a.inverse()


def test_primitive_generates_everything():
    for field in [GF7, _extension(2, 3), _extension(3, 2)]:
        gamma = ff.find_primitive(field)
        seen = set()
        power = field.one()
        for _ in range(field.order - 1):
            seen.add(power.to_index())
            power = power * gamma
        assert len(seen) == field.order - 1
        assert 0 not in seen


def test_polynomial_division_invariant():
    field = GF3
    rng = random.Random(9)
    for _ in range(50):
        a = ff.Polynomial.from_indices(field,
                                       [rng.randrange(3) for _ in range(rng.randrange(1, 7))])
        b = ff.Polynomial.from_indices(field,
                                       [rng.randrange(3) for _ in range(rng.randrange(1, 5))])
        if b.is_zero:
            continue
        quotient, remainder = divmod(a, b)
        assert quotient * b + remainder == a
        assert remainder.is_zero or remainder.degree < b.degree


def test_polynomial_rendering():
    cubic = ff.find_irreducible(GF2, 3)
    assert str(cubic) == "x^3 + x + 1"
    assert str(ff.Polynomial(GF2, ())) == "0"
