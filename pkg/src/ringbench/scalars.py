"""Exact coefficient fields.

Three kinds: the rationals Q, prime fields GF(p), and a transcendental
retag Q(Y) of the rationals.  The retag models the coefficient field of a
localized algebra whose structure constants are already rational: no
element of Q(Y) outside Q is ever materialized, arithmetic is delegated to
the base wholesale.  Everything is arbitrary precision; no floats.
"""

from gmpy2 import mpq, mpz

_MPQ_TYPES = (type(mpq(0)), type(mpz(0)))


class Rationals:
    """The field Q.  Elements are gmpy2.mpq values."""

    kind = "Q"
    char = 0

    zero = mpq(0)
    one = mpq(1)

    def coerce(self, x):
        if isinstance(x, _MPQ_TYPES):
            return mpq(x)
        if isinstance(x, int):
            return mpq(x)
        if isinstance(x, str):
            return mpq(x)
        raise TypeError("cannot coerce %r into Q" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def neg(self, a):
        return -a

    def inv(self, a):
        return self.div(self.one, a)

    def is_zero(self, a):
        return a == 0

    def describe(self):
        return "Q"

    def scalar_repr(self, a):
        q = mpq(a)
        if q.denominator == 1:
            return str(q.numerator)
        return "%s/%s" % (q.numerator, q.denominator)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("field", "Q"))

    def __repr__(self):
        return "Rationals()"


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p) with elements stored as ints in range(p)."""

    kind = "Fp"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("PrimeField needs a prime, got %r" % (p,))
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, _MPQ_TYPES):
            q = mpq(x)
            return self.div(int(q.numerator) % self.p, int(q.denominator) % self.p)
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/", 1)
                return self.div(int(num) % self.p, int(den) % self.p)
            return int(x) % self.p
        raise TypeError("cannot coerce %r into GF(%d)" % (x, self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        # Fermat; p is prime.
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def describe(self):
        return "GF(%d)" % self.p

    def scalar_repr(self, a):
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", "Fp", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


class FractionField:
    """Q(var), a pure retag of the rationals.

    Used when a local algebra with rational structure constants is read
    over the fraction field of a formally adjoined variable: the tables do
    not change, only what the field is called.  Arithmetic is the base's.
    """

    kind = "Frac"
    char = 0

    def __init__(self, base=None, var="Y"):
        base = base if base is not None else Rationals()
        if not isinstance(base, Rationals):
            raise ValueError("fraction-field retag is only layered over Q")
        self.base = base
        self.var = var
        self.zero = base.zero
        self.one = base.one

    def coerce(self, x):
        return self.base.coerce(x)

    def add(self, a, b):
        return self.base.add(a, b)

    def sub(self, a, b):
        return self.base.sub(a, b)

    def mul(self, a, b):
        return self.base.mul(a, b)

    def div(self, a, b):
        return self.base.div(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def inv(self, a):
        return self.base.inv(a)

    def is_zero(self, a):
        return self.base.is_zero(a)

    def describe(self):
        return "Q(%s)" % self.var

    def scalar_repr(self, a):
        return self.base.scalar_repr(a)

    def __eq__(self, other):
        return isinstance(other, FractionField) and other.var == self.var

    def __hash__(self):
        return hash(("field", "Frac", self.var))

    def __repr__(self):
        return "FractionField(var=%r)" % self.var
