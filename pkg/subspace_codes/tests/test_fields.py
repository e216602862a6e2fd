import galois
import numpy as np
from django.test import SimpleTestCase

from subspace_codes.exceptions import DivisionByZeroError, FieldMismatchError, ParameterError
from subspace_codes.fields import (
    PolyFq, base_digits, field_arith, field_for, find_irreducible, get_field,
    is_irreducible, poly_gcd, poly_inverse_mod, prime_power_decomposition,
)


def monic_polys(ctx, degree):
    for t in range(ctx.q ** degree):
        yield PolyFq(ctx, base_digits(t, ctx.q, degree) + [1])


def has_factor(f):
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.ctx, d):
            if (f % g).is_zero:
                return True
    return False


def clmul_mod(a, b, modulus_bits, m):
    """Product in F_2[x]/(modulus) on bit-packed polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus_bits
    return out


class FieldContextTest(SimpleTestCase):
    def test_prime_power_decomposition(self):
        self.assertEqual(prime_power_decomposition(2), (2, 1))
        self.assertEqual(prime_power_decomposition(9), (3, 2))
        self.assertEqual(prime_power_decomposition(1024), (2, 10))
        for bad in (1, 6, 12, 100):
            with self.assertRaises(ParameterError):
                prime_power_decomposition(bad)

    def test_default_moduli(self):
        self.assertEqual(field_for(4).modulus, (1, 1, 1))
        self.assertEqual(field_for(8).modulus, (1, 1, 0, 1))
        self.assertEqual(field_for(9).modulus, (1, 0, 1))
        self.assertIsNone(field_for(7).modulus)
        # the backing galois class is built on the same modulus
        self.assertEqual(field_for(9).GF.irreducible_poly, galois.Poly([1, 0, 1], field=galois.GF(3)))

    def test_contexts_are_cached(self):
        self.assertIs(field_for(8), field_for(8))
        self.assertIs(get_field(2, 3), field_for(8))

    def test_reducible_modulus_is_rejected(self):
        with self.assertRaises(ParameterError):
            get_field(2, 2, (1, 0, 1))

    def test_f8_product(self):
        # (x + 1)(x^2 + 1) = x^2 mod x^3 + x + 1
        ctx = field_for(8)
        self.assertEqual(ctx.mul(3, 5), 4)
        a, b = ctx.element(3), ctx.element(5)
        self.assertEqual((a * b).value, 4)
        self.assertEqual(field_arith(a, b, 'mul').value, 4)
        self.assertEqual(ctx.element([1, 1]).value, 3)

    def test_inverse_of_zero(self):
        ctx = field_for(5)
        with self.assertRaises(DivisionByZeroError):
            ctx.inv(0)
        with self.assertRaises(ZeroDivisionError):
            ctx.element(0).inverse()

    def test_mixed_fields_are_rejected(self):
        with self.assertRaises(FieldMismatchError):
            field_for(4).element(1) + field_for(2).element(1)

    def test_unknown_operation(self):
        ctx = field_for(3)
        with self.assertRaisesMessage(ParameterError, 'op must be one of'):
            field_arith(ctx.element(1), ctx.element(2), 'pow')

    def test_encodings_round_trip(self):
        ctx = field_for(9)
        values = np.arange(9).reshape(3, 3)
        np.testing.assert_array_equal(ctx.plain(ctx.array(values)), values)
        with self.assertRaises(ParameterError):
            ctx.array([0, 9])

    def test_field_axioms_exhaustive(self):
        checked = 0
        for q in (2, 3, 4, 5, 7, 8, 9, 16):
            ctx = field_for(q)
            e = ctx.array(range(q))
            a, b, c = e[:, None, None], e[None, :, None], e[None, None, :]
            self.assertTrue(np.array_equal(a * (b + c), a * b + a * c))
            self.assertTrue(np.array_equal((a * b) * c, a * (b * c)))
            self.assertTrue(np.array_equal((a + b) + c, a + (b + c)))
            checked += 3 * q ** 3
            for x in range(1, q):
                self.assertEqual(ctx.mul(x, ctx.inv(x)), 1)
                self.assertEqual(ctx.add(x, ctx.neg(x)), 0)
        self.assertGreaterEqual(checked, 10_000)

    def test_prime_fields_are_integers_mod_p(self):
        for p in (2, 3, 5, 7):
            ctx = field_for(p)
            for a in range(p):
                for b in range(p):
                    self.assertEqual(ctx.mul(a, b), a * b % p)
                    self.assertEqual(ctx.sub(a, b), (a - b) % p)

    def test_binary_extensions_are_carry_less_products(self):
        for q, m, modulus_bits in ((8, 3, 0b1011), (16, 4, 0b10011)):
            ctx = field_for(q)
            for a in range(q):
                for b in range(q):
                    self.assertEqual(ctx.mul(a, b), clmul_mod(a, b, modulus_bits, m))
                    self.assertEqual(ctx.add(a, b), a ^ b)

    def test_element_power(self):
        ctx = field_for(16)
        for value in range(1, 16):
            self.assertEqual((ctx.element(value) ** 15).value, 1)
            self.assertEqual((ctx.element(value) ** -1).value, ctx.inv(value))


class PolynomialTest(SimpleTestCase):
    def test_division_identity(self):
        ctx = field_for(3)
        f = PolyFq(ctx, [1, 2, 0, 1, 2])
        g = PolyFq(ctx, [2, 1, 1])
        quot, rem = divmod(f, g)
        self.assertEqual(quot * g + rem, f)
        self.assertLess(rem.degree, g.degree)
        with self.assertRaises(DivisionByZeroError):
            divmod(f, PolyFq(ctx))

    def test_zero_polynomial(self):
        ctx = field_for(2)
        zero = PolyFq(ctx, [0, 0])
        self.assertEqual(zero.degree, -1)
        self.assertTrue((PolyFq(ctx, [1, 1]) - PolyFq(ctx, [1, 1])).is_zero)

    def test_repr(self):
        self.assertEqual(repr(PolyFq(field_for(2), [1, 1, 0, 1])), 'x^3 + x + 1')
        self.assertEqual(repr(PolyFq(field_for(3), [2, 0, 1])), 'x^2 + 2')
        self.assertEqual(repr(PolyFq(field_for(2))), '0')

    def test_gcd_and_inverse(self):
        ctx = field_for(2)
        f = PolyFq(ctx, [1, 1, 0, 1])
        a = PolyFq(ctx, [1, 1])
        self.assertEqual(poly_gcd(f, a), PolyFq(ctx, [1]))
        self.assertEqual((a * poly_inverse_mod(a, f)) % f, PolyFq(ctx, [1]))
        with self.assertRaises(DivisionByZeroError):
            poly_inverse_mod(PolyFq(ctx, [1, 1]), PolyFq(ctx, [1, 0, 1]))

    def test_inverse_over_f3(self):
        ctx = field_for(3)
        f = PolyFq(ctx, [1, 0, 1])
        for t in range(1, 9):
            a = PolyFq(ctx, base_digits(t, 3, 2))
            self.assertEqual((a * poly_inverse_mod(a, f)) % f, PolyFq(ctx, [1]))

    def test_find_irreducible(self):
        self.assertEqual(find_irreducible(field_for(2), 3), PolyFq(field_for(2), [1, 1, 0, 1]))
        self.assertEqual(find_irreducible(field_for(2), 2), PolyFq(field_for(2), [1, 1, 1]))
        self.assertEqual(find_irreducible(field_for(3), 1), PolyFq(field_for(3), [0, 1]))
        self.assertEqual(find_irreducible(field_for(3), 2), PolyFq(field_for(3), [1, 0, 1]))
        for q, degree in ((2, 5), (3, 3), (4, 2), (5, 2), (9, 2)):
            self.assertTrue(is_irreducible(find_irreducible(field_for(q), degree)))

    def test_find_irreducible_is_the_smallest(self):
        # F_9 uses x^2 + 1, not the galois default, so the search runs over our encodings
        for q, degree in ((4, 2), (9, 2), (3, 3)):
            ctx = field_for(q)
            found = find_irreducible(ctx, degree)
            for f in monic_polys(ctx, degree):
                if f == found:
                    break
                self.assertTrue(has_factor(f), f)

    def test_irreducibility_matches_trial_division(self):
        for q, max_degree in ((2, 6), (3, 4), (4, 3)):
            ctx = field_for(q)
            for degree in range(2, max_degree + 1):
                for f in monic_polys(ctx, degree):
                    self.assertEqual(is_irreducible(f), not has_factor(f), f)

    def test_irreducible_counts(self):
        counts = {(2, 4): 3, (2, 5): 6, (2, 6): 9, (3, 2): 3, (3, 3): 8}
        for (q, degree), expected in counts.items():
            ctx = field_for(q)
            self.assertEqual(sum(is_irreducible(f) for f in monic_polys(ctx, degree)), expected)

    def test_irreducibility_needs_monic(self):
        with self.assertRaises(ParameterError):
            is_irreducible(PolyFq(field_for(3), [1, 2]))
