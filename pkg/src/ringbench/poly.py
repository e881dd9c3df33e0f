"""Multivariate polynomials with exact coefficients.

Monomials are exponent tuples parallel to the ring's variable list.  The
only monomial order in use is graded reverse lexicographic taken against
that list; it is degree compatible and refines divisibility, which is all
the basis machinery downstream relies on.
"""

import re

from .errors import ParseError, StructuralError


def grevlex_key(mono):
    """Sort key whose max is the grevlex-largest monomial.

    Larger total degree wins; on ties the monomial whose last nonzero
    entry of the difference is negative wins, which the reversed negated
    tuple encodes.

    >>> grevlex_key((1, 0, 1)) > grevlex_key((0, 2, 0))
    False
    """
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    # pre: b | a
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(mono):
    return sum(mono)


class MonomialOrder:
    """Graded reverse lexicographic against an explicit variable list."""

    kind = "grevlex"

    def __init__(self, variables):
        self.variables = tuple(variables)

    def key(self, mono):
        return grevlex_key(mono)

    def sorted_desc(self, monos):
        return sorted(monos, key=grevlex_key, reverse=True)

    def describe(self):
        return "grevlex(%s)" % ", ".join(self.variables)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.variables == self.variables

    def __hash__(self):
        return hash(("grevlex", self.variables))


class PolyRing:
    """A polynomial ring: a field plus an ordered variable list."""

    __slots__ = ("field", "variables", "order", "_vindex")

    def __init__(self, field, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise StructuralError("repeated variable names: %r" % (variables,))
        self.field = field
        self.variables = variables
        self.order = MonomialOrder(variables)
        self._vindex = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.variables)

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(self.field.one)

    def const(self, c):
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name, power=1):
        if name not in self._vindex:
            raise StructuralError("unknown variable %r" % name)
        mono = [0] * self.nvars
        mono[self._vindex[name]] = power
        return Poly(self, {tuple(mono): self.field.one})

    def monomial(self, mono, coeff=None):
        coeff = self.field.one if coeff is None else self.field.coerce(coeff)
        if self.field.is_zero(coeff):
            return self.zero()
        assert len(mono) == self.nvars
        return Poly(self, {tuple(mono): coeff})

    def from_terms(self, terms):
        out = {}
        f = self.field
        for mono, c in terms:
            c = f.coerce(c)
            mono = tuple(mono)
            acc = f.add(out.get(mono, f.zero), c)
            if f.is_zero(acc):
                out.pop(mono, None)
            else:
                out[mono] = acc
        return Poly(self, out)

    def parse(self, text):
        return parse_poly(text, self)

    def mono_repr(self, mono):
        parts = []
        for v, e in zip(self.variables, mono):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append("%s^%d" % (v, e))
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return "PolyRing(%s; %s)" % (self.field.describe(), ", ".join(self.variables))


class Poly:
    """Immutable by convention: never mutate .terms after construction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def total_degree(self):
        # degree of 0 is conventionally -1 here
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def order_degree(self):
        if not self.terms:
            raise StructuralError("the zero polynomial has no order")
        return min(mono_degree(m) for m in self.terms)

    def lead(self):
        """(monomial, coefficient) of the grevlex-largest term."""
        if not self.terms:
            raise StructuralError("the zero polynomial has no lead term")
        m = max(self.terms, key=grevlex_key)
        return m, self.terms[m]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.lead()
        f = self.ring.field
        inv = f.inv(c)
        return Poly(self.ring, {m: f.mul(inv, a) for m, a in self.terms.items()})

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def _check(self, other):
        if not isinstance(other, Poly) or other.ring != self.ring:
            raise StructuralError("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = f.add(out.get(m, f.zero), c)
            if f.is_zero(acc):
                out.pop(m, None)
            else:
                out[m] = acc
        return Poly(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        f = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if f.is_zero(acc):
                    out.pop(m, None)
                else:
                    out[m] = acc
        return Poly(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        f = self.ring.field
        c = f.coerce(c)
        if f.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {m: f.mul(c, a) for m, a in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        f = ring.field
        bits = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            mono = ring.mono_repr(m)
            cs = f.scalar_repr(c)
            if mono == "1":
                bits.append(cs)
            elif cs == "1":
                bits.append(mono)
            elif cs == "-1":
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (cs, mono))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


def poly_arith(a, b, op):
    """Contracted arithmetic entry point: op in {add, mul, scalar-mul}.

    For scalar-mul, b is a field element (or something the field coerces).
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scalar-mul":
        return a.scale(b)
    raise ValueError("unknown op %r" % (op,))


def poly_order_term(f):
    """(order, lead monomial) of a nonzero polynomial.

    The order is the minimal total degree among the terms; for a local
    hypersurface equation it is the multiplicity of the quotient.
    """
    if f.is_zero():
        raise StructuralError("the zero polynomial has no order")
    return f.order_degree(), f.lead()[0]


_TOKEN = re.compile(
    r"\s*(?:(?P<frac>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<pow>\^)|(?P<mul>\*)|(?P<plus>\+)|(?P<minus>-))"
)


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError("unexpected character %r" % rest[0], col=pos + 1)
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
    return out


def parse_poly(text, ring):
    """Parse `2*X1*X3 + X2*X3` style input over the given ring.

    Terms joined by + and -, integer or a/b coefficients, ^ for powers,
    * optional between factors.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    field = ring.field
    terms = []
    i = 0
    n = len(tokens)
    while i < n:
        sign = field.one
        # leading signs, possibly repeated
        while i < n and tokens[i][0] in ("plus", "minus"):
            if tokens[i][0] == "minus":
                sign = field.neg(sign)
            i += 1
        if i >= n:
            raise ParseError("dangling sign", col=tokens[-1][2] + 1)
        coeff = sign
        mono = [0] * ring.nvars
        saw_factor = False
        while i < n:
            kind, val, col = tokens[i]
            if kind in ("plus", "minus"):
                break
            if kind == "mul":
                if not saw_factor:
                    raise ParseError("unexpected '*'", col=col + 1)
                i += 1
                continue
            if kind in ("int", "frac"):
                coeff = field.mul(coeff, field.coerce(val))
                saw_factor = True
                i += 1
                continue
            if kind == "name":
                if val not in ring._vindex:
                    raise ParseError("unknown variable %r" % val, col=col + 1)
                power = 1
                i += 1
                if i < n and tokens[i][0] == "pow":
                    i += 1
                    if i >= n or tokens[i][0] != "int":
                        raise ParseError("'^' needs an integer exponent", col=col + 1)
                    power = int(tokens[i][1])
                    i += 1
                mono[ring._vindex[val]] += power
                saw_factor = True
                continue
            raise ParseError("unexpected token %r" % val, col=col + 1)
        if not saw_factor:
            raise ParseError("empty term")
        terms.append((tuple(mono), coeff))
    return ring.from_terms(terms)
