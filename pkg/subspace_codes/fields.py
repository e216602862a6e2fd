"""
F_q (q = p^m) and polynomials over F_q, on top of galois field arrays.

Elements are integer-encoded: for an element with polynomial-basis coordinates
(a_0, ..., a_{m-1}) over F_p the encoding is enc(a) = sum(a_j * p**j), a
bijection F_q <-> range(q). This is galois' integer representation, so an
int64 array of encodings converts to a FieldArray and back without
translation.

The canonical order on elements is the encoding; every "smallest" rule in the
package (irreducible search, message indices, projective representatives)
refers to it.
"""
import logging
from functools import lru_cache

import galois
import numpy as np

from .exceptions import DivisionByZeroError, FieldMismatchError, ParameterError

logger = logging.getLogger(__name__)


def prime_power_decomposition(q):
    """Return (p, m) with p prime and p**m == q."""
    if not isinstance(q, int) or q < 2:
        raise ParameterError(f'q must be a prime power >= 2, got {q!r}')
    if not galois.is_prime_power(q):
        raise ParameterError(f'q must be a prime power, got {q}')
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])


def base_digits(value, base, length):
    """Little-endian digits of value in the given base, padded to length."""
    digits = []
    for _ in range(length):
        value, d = divmod(value, base)
        digits.append(d)
    return digits


class FieldCtx:
    """
    The field F_q = F_p[x]/(modulus), backed by the galois class `GF`.

    Two contexts are interchangeable iff they share (p, m, modulus); use
    get_field() to reuse them.
    """

    def __init__(self, p, m=1, modulus=None):
        if not galois.is_prime(p):
            raise ParameterError(f'p must be prime, got {p}')
        if m < 1:
            raise ParameterError(f'm must satisfy m >= 1, got {m}')
        self.p = p
        self.m = m
        self.q = p ** m

        if m == 1:
            if modulus is not None and len(modulus) > 0:
                raise ParameterError('modulus must be absent when m = 1')
            self.modulus = None
            self.GF = galois.GF(p)
        else:
            base = get_field(p)
            if modulus is None:
                modulus = find_irreducible(base, m).values
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ParameterError(f'modulus must be monic of degree m = {m}')
            poly = PolyFq(base, modulus)
            if not is_irreducible(poly):
                raise ParameterError('modulus must be irreducible over F_p')
            self.modulus = modulus
            self.GF = galois.GF(self.q, irreducible_poly=poly.galois)
        logger.debug('Field class ready for %r', self)

    @property
    def key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.m == 1:
            return f'GF({self.q})'
        return f'GF({self.q}) mod {PolyFq(get_field(self.p), self.modulus)}'

    # -- encodings <-> field arrays -----------------------------------------

    def array(self, values):
        """FieldArray from integer encodings."""
        values = np.asarray(values, dtype=np.int64)
        if values.size and (values.min() < 0 or values.max() >= self.q):
            raise ParameterError(f'encodings must satisfy 0 <= e < {self.q}')
        return self.GF(values)

    @staticmethod
    def plain(values):
        """Integer encodings (int64) of a FieldArray."""
        return np.asarray(values.view(np.ndarray), dtype=np.int64)

    # -- elements -----------------------------------------------------------

    def element(self, value):
        """Element from its encoding or from a coefficient sequence over F_p."""
        if isinstance(value, FieldElement):
            self.check(value.ctx)
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.encode(value))
        return FieldElement(self, int(value))

    def encode(self, coeffs):
        if len(coeffs) > self.m:
            raise ParameterError(f'an element of GF({self.q}) has at most m = {self.m} coefficients')
        return sum((int(c) % self.p) * self.p ** j for j, c in enumerate(coeffs))

    def check(self, other):
        if other != self:
            raise FieldMismatchError(f'{other!r} is not {self!r}')

    # -- scalar arithmetic on encodings ---------------------------------------

    def add(self, a, b):
        return int(self.GF(a) + self.GF(b))

    def sub(self, a, b):
        return int(self.GF(a) - self.GF(b))

    def mul(self, a, b):
        return int(self.GF(a) * self.GF(b))

    def neg(self, a):
        return int(-self.GF(a))

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError(f'0 has no inverse in {self!r}')
        return int(np.reciprocal(self.GF(a)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, exponent):
        if a == 0 and exponent < 0:
            raise DivisionByZeroError(f'0 has no inverse in {self!r}')
        return int(self.GF(a) ** exponent)

    def random(self, rng, size):
        return rng.integers(0, self.q, size=size, dtype=np.int64)


@lru_cache(maxsize=None)
def _cached_field(p, m, modulus):
    return FieldCtx(p, m, modulus)


def get_field(p, m=1, modulus=None):
    """Shared FieldCtx for (p, m, modulus); the default modulus is find_irreducible's."""
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    if m > 1 and modulus is None:
        modulus = find_irreducible(get_field(p), m).values
    return _cached_field(p, m, modulus)


def field_for(q, modulus=None):
    """FieldCtx for an integer order q, or pass a FieldCtx straight through."""
    if isinstance(q, FieldCtx):
        return q
    p, m = prime_power_decomposition(q)
    return get_field(p, m, modulus)


class FieldElement:
    """An element of F_q carrying its context."""

    __slots__ = ('ctx', 'value')

    def __init__(self, ctx, value):
        if not 0 <= value < ctx.q:
            raise ParameterError(f'encoding must satisfy 0 <= value < {ctx.q}, got {value}')
        self.ctx = ctx
        self.value = int(value)

    def _other(self, other):
        if not isinstance(other, FieldElement):
            raise FieldMismatchError(f'cannot combine a field element with {type(other).__name__}')
        self.ctx.check(other.ctx)
        return other.value

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, exponent):
        return FieldElement(self.ctx, self.ctx.power(self.value, exponent))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.value == other.value

    def __hash__(self):
        return hash((self.ctx.key, self.value))

    def __repr__(self):
        return f'FieldElement({self.value}, {self.ctx!r})'


FIELD_OPS = ('add', 'sub', 'mul', 'div')


def field_arith(a, b, op):
    """Apply one of add/sub/mul/div to two elements of the same field."""
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ParameterError(f'op must be one of {", ".join(FIELD_OPS)}, got {op!r}')


class PolyFq:
    """
    Polynomial over F_q with little-endian integer-encoded coefficients.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1. Arithmetic goes through the equivalent galois.Poly.
    """

    __slots__ = ('ctx', 'values', '_galois')

    def __init__(self, ctx, coeffs=()):
        values = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                ctx.check(c.ctx)
                c = c.value
            c = int(c)
            if not 0 <= c < ctx.q:
                raise ParameterError(f'coefficient encodings must satisfy 0 <= c < {ctx.q}, got {c}')
            values.append(c)
        while values and values[-1] == 0:
            values.pop()
        self.ctx = ctx
        self.values = tuple(values)
        self._galois = None

    @classmethod
    def from_galois(cls, ctx, poly):
        return cls(ctx, FieldCtx.plain(poly.coeffs)[::-1].tolist())

    @property
    def galois(self):
        if self._galois is None:
            self._galois = galois.Poly(list(self.values) or [0], field=self.ctx.GF, order='asc')
        return self._galois

    @property
    def degree(self):
        return len(self.values) - 1

    @property
    def is_zero(self):
        return not self.values

    @property
    def leading(self):
        return self.values[-1] if self.values else 0

    @property
    def is_monic(self):
        return self.leading == 1

    def __getitem__(self, j):
        return self.values[j] if 0 <= j < len(self.values) else 0

    def vector(self, length):
        """Coefficient vector padded with zeros to the given length."""
        if self.degree >= length:
            raise ParameterError(f'degree {self.degree} does not fit {length} coefficients')
        out = np.zeros(length, dtype=np.int64)
        out[:len(self.values)] = self.values
        return out

    def _check(self, other):
        if not isinstance(other, PolyFq):
            raise FieldMismatchError(f'cannot combine a polynomial with {type(other).__name__}')
        self.ctx.check(other.ctx)

    def __add__(self, other):
        self._check(other)
        return PolyFq.from_galois(self.ctx, self.galois + other.galois)

    def __sub__(self, other):
        self._check(other)
        return PolyFq.from_galois(self.ctx, self.galois - other.galois)

    def __neg__(self):
        return PolyFq.from_galois(self.ctx, -self.galois)

    def __mul__(self, other):
        self._check(other)
        return PolyFq.from_galois(self.ctx, self.galois * other.galois)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise DivisionByZeroError('polynomial division by zero')
        quot, rem = divmod(self.galois, other.galois)
        return PolyFq.from_galois(self.ctx, quot), PolyFq.from_galois(self.ctx, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __eq__(self, other):
        if not isinstance(other, PolyFq):
            return NotImplemented
        return self.ctx == other.ctx and self.values == other.values

    def __hash__(self):
        return hash((self.ctx.key, self.values))

    def __repr__(self):
        if self.is_zero:
            return '0'
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.values[j]
            if c == 0:
                continue
            mono = '' if j == 0 else ('x' if j == 1 else f'x^{j}')
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f'{c}*{mono}')
        return ' + '.join(terms)


def poly_gcd(a, b):
    """Monic gcd (the zero polynomial when both inputs are zero)."""
    a._check(b)
    if a.is_zero and b.is_zero:
        return PolyFq(a.ctx)
    return PolyFq.from_galois(a.ctx, galois.gcd(a.galois, b.galois))


def poly_inverse_mod(a, modulus):
    """Inverse of a modulo modulus."""
    a._check(modulus)
    if a.is_zero:
        raise DivisionByZeroError(f'0 is not invertible modulo {modulus}')
    d, s, _ = galois.egcd(a.galois, modulus.galois)
    if d.degree != 0:
        raise DivisionByZeroError(f'{a} is not invertible modulo {modulus}')
    return PolyFq.from_galois(a.ctx, (s // d) % modulus.galois)


def is_irreducible(f):
    """Irreducibility of a monic f of degree >= 1 over F_q (Rabin's test in galois)."""
    if f.is_zero or f.degree < 1:
        raise ParameterError('f must have degree >= 1')
    if not f.is_monic:
        raise ParameterError('f must be monic')
    return bool(f.galois.is_irreducible())


def find_irreducible(ctx, degree):
    """
    The monic irreducible polynomial of the given degree whose lower
    coefficients have the smallest encoding sum(c_j * q**j).
    """
    if degree < 1:
        raise ParameterError(f'degree must satisfy degree >= 1, got {degree}')
    if ctx.m == 1 or ctx.GF.irreducible_poly == galois.GF(ctx.q).irreducible_poly:
        return PolyFq.from_galois(ctx, galois.irreducible_poly(ctx.q, degree, method='min'))
    # galois searches over its own default F_q; with another modulus the encodings differ
    for t in range(ctx.q ** degree):
        low = base_digits(t, ctx.q, degree)
        if degree > 1 and low[0] == 0:
            continue
        f = PolyFq(ctx, low + [1])
        if f.galois.is_irreducible():
            return f
    raise AssertionError(f'no irreducible polynomial of degree {degree} over {ctx!r}')
