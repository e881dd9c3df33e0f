"""Buchberger engine and monomial-ideal combinatorics.

Power-series rings are modeled by polynomial rings throughout: every ideal
fed to this module is polynomial, and the extracted invariants (lengths,
Hilbert counts, orders) agree with the completed setting.  Reports built
downstream carry a "polynomial model" note for this reason.
"""

from itertools import combinations

from .errors import (
    LimitExceededError,
    NotCofiniteError,
    StructuralError,
    UnsupportedInputError,
)
from .poly import (
    Poly,
    grevlex_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_PAIR_LIMIT = 20000


class IdealSpec:
    """Generators plus computed homogeneous/monomial flags."""

    __slots__ = ("ring", "gens", "homogeneous", "monomial")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Poly) or g.ring != ring:
                raise StructuralError("generator outside the ring")
            if g.is_zero():
                raise StructuralError("zero generator")
        self.ring = ring
        self.gens = gens
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self.monomial = all(g.is_monomial() for g in gens)

    @classmethod
    def parse(cls, ring, texts):
        return cls(ring, [ring.parse(t) for t in texts])

    def monomial_exponents(self):
        # pre: monomial ideal; monic exponent list
        if not self.monomial:
            raise UnsupportedInputError("monomial ideal required")
        return sorted({g.lead()[0] for g in self.gens})

    def __repr__(self):
        return "IdealSpec(%s)" % ", ".join(repr(g) for g in self.gens)


class GroebnerBasis:
    __slots__ = ("ring", "basis", "source", "_leads")

    def __init__(self, ring, basis, source):
        self.ring = ring
        self.basis = tuple(basis)
        self.source = source
        self._leads = tuple(g.lead()[0] for g in self.basis)

    @property
    def leads(self):
        return self._leads

    def __repr__(self):
        return "GroebnerBasis<%d elements>" % len(self.basis)


def normal_form(f, G):
    """Unique remainder of f modulo the (reduced) basis G.

    Reduces the grevlex-largest reducible monomial at each step, so the
    result has no monomial divisible by any lead of G.
    """
    if isinstance(G, GroebnerBasis):
        basis = G.basis
        leads = G._leads
        ring = G.ring
    else:
        basis = tuple(G)
        leads = tuple(g.lead()[0] for g in basis)
        ring = basis[0].ring if basis else f.ring
    if f.ring != ring:
        raise StructuralError("polynomial outside the basis ring")
    field = ring.field
    work = dict(f.terms)
    out = {}
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        hit = None
        for i, lm in enumerate(leads):
            if mono_divides(lm, m):
                hit = i
                break
        if hit is None:
            out[m] = c
            continue
        g = basis[hit]
        lm, lc = g.lead()
        shift = mono_div(m, lm)
        factor = field.div(c, lc)
        # work -= factor * shift * g  (the lead cancels by construction)
        for gm, gc in g.terms.items():
            if gm == lm:
                continue
            tm = mono_mul(gm, shift)
            acc = field.sub(work.get(tm, field.zero), field.mul(factor, gc))
            if field.is_zero(acc):
                work.pop(tm, None)
            else:
                work[tm] = acc
    return Poly(ring, out)


def _spoly(f, g):
    ring = f.ring
    field = ring.field
    fm, fc = f.lead()
    gm, gc = g.lead()
    lcm = mono_lcm(fm, gm)
    a = ring.monomial(mono_div(lcm, fm), field.inv(fc))
    b = ring.monomial(mono_div(lcm, gm), field.inv(gc))
    return a * f - b * g


def _interreduce(polys):
    """Reduce to a minimal monic set: no lead divides another, tails fully
    reduced.  Deterministic given the input order."""
    polys = [p.monic() for p in polys if not p.is_zero()]
    polys.sort(key=lambda p: grevlex_key(p.lead()[0]))
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            rest = polys[:i] + polys[i + 1 :]
            if not rest:
                continue
            r = normal_form(polys[i], rest)
            if r.is_zero():
                del polys[i]
                changed = True
                break
            r = r.monic()
            if r != polys[i]:
                polys[i] = r
                changed = True
                break
        if changed:
            polys.sort(key=lambda p: grevlex_key(p.lead()[0]))
    return polys


def buchberger(I, pair_limit=DEFAULT_PAIR_LIMIT):
    """Reduced Groebner basis under the ring's grevlex order.

    Normal selection strategy: the pair with the smallest lcm (by degree,
    then grevlex) is processed first.  Coprime-lead and chain criteria
    prune the queue.  Output is deterministic for a fixed input.
    """
    if not isinstance(I, IdealSpec):
        raise StructuralError("buchberger wants an IdealSpec")
    basis = _interreduce(list(I.gens))
    if not basis:
        return GroebnerBasis(I.ring, [], I)

    def pair_key(i, j):
        lcm = mono_lcm(basis[i].lead()[0], basis[j].lead()[0])
        return (mono_degree(lcm), grevlex_key(lcm), i, j)

    pairs = {(i, j) for i, j in combinations(range(len(basis)), 2)}
    done = set()
    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: pair_key(*ij))
        pairs.discard((i, j))
        done.add((i, j))
        processed += 1
        if processed > pair_limit:
            raise LimitExceededError(
                "pair ceiling %d exceeded in buchberger" % pair_limit
            )
        fi, fj = basis[i], basis[j]
        mi, mj = fi.lead()[0], fj.lead()[0]
        lcm = mono_lcm(mi, mj)
        # coprime leads: S-poly reduces to zero
        if lcm == mono_mul(mi, mj):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not mono_divides(basis[k].lead()[0], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        r = normal_form(_spoly(fi, fj), basis)
        if r.is_zero():
            continue
        r = r.monic()
        basis.append(r)
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))
    basis = _interreduce(basis)
    return GroebnerBasis(I.ring, basis, I)


def pure_power_caps(G):
    """For each variable, the least e with v^e among the lead monomials,
    or None.  All-present is exactly cofiniteness of the ideal."""
    nv = G.ring.nvars
    caps = [None] * nv
    for lm in G.leads:
        support = [i for i, e in enumerate(lm) if e > 0]
        if len(support) == 1:
            i = support[0]
            e = lm[i]
            if caps[i] is None or e < caps[i]:
                caps[i] = e
    return caps


def is_cofinite(G):
    return all(c is not None for c in pure_power_caps(G))


def _divisible_by_any(mono, leads):
    for lm in leads:
        if mono_divides(lm, mono):
            return True
    return False


def standard_monomials(G, degree_cap=None, assert_cofinite=True):
    """Monomials not divisible by any lead of G, sorted by degree then
    grevlex.

    Cofinite ideals return the full finite list (the cap is then only a
    sanity bound).  A non-cofinite ideal with assert_cofinite set raises,
    naming the variables with no pure power among the leads.
    """
    ring = G.ring
    caps = pure_power_caps(G)
    if all(c is not None for c in caps):
        box = [c - 1 for c in caps]
        out = []

        def walk(prefix, i):
            if i == len(box):
                mono = tuple(prefix)
                if not _divisible_by_any(mono, G.leads):
                    out.append(mono)
                return
            for e in range(box[i] + 1):
                walk(prefix + [e], i + 1)

        walk([], 0)
        out.sort(key=lambda m: (mono_degree(m), grevlex_key(m)))
        return out
    if assert_cofinite:
        missing = [ring.variables[i] for i, c in enumerate(caps) if c is None]
        raise NotCofiniteError(
            "no pure power among lead monomials for: %s" % ", ".join(missing),
            missing_vars=missing,
        )
    if degree_cap is None:
        raise StructuralError("non-cofinite enumeration needs a degree cap")
    out = []
    for d in range(degree_cap + 1):
        out.extend(
            m
            for m in _monos_of_degree(ring.nvars, d)
            if not _divisible_by_any(m, G.leads)
        )
    return out


def _monos_of_degree(nv, d):
    if nv == 0:
        if d == 0:
            yield ()
        return
    if nv == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _monos_of_degree(nv - 1, d - e):
            yield (e,) + rest


def standard_count_by_degree(G, n_max):
    """Counts of standard monomials in each degree 0..n_max."""
    counts = []
    for d in range(n_max + 1):
        c = 0
        for m in _monos_of_degree(G.ring.nvars, d):
            if not _divisible_by_any(m, G.leads):
                c += 1
        counts.append(c)
    return counts


def hilbert_function(I, n_max, G=None):
    """H[n] = dim of (ring modulo I and all monomials of degree > n).

    Homogeneous ideals only: there the truncation is plain degree-wise
    counting of standard monomials.
    """
    if not isinstance(I, IdealSpec):
        raise StructuralError("hilbert_function wants an IdealSpec")
    if not I.homogeneous:
        raise UnsupportedInputError("hilbert_function requires a homogeneous ideal")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if G is None:
        G = buchberger(I)
    counts = standard_count_by_degree(G, n_max)
    out = []
    total = 0
    for c in counts:
        total += c
        out.append(total)
    return out


def hilbert_first_difference(I, n_max, G=None):
    H = hilbert_function(I, n_max, G=G)
    return [H[0]] + [H[n] - H[n - 1] for n in range(1, len(H))]


def stabilized_multiplicity(I, n_max, window=3, G=None):
    """Multiplicity of a dimension <= 1 homogeneous quotient: the stable
    value of the Hilbert first difference.

    Returns (e, first stable degree).  Raises if the last `window` + 1
    differences have not settled by n_max; callers surface that as an
    inconclusive result, never as a number.
    """
    from .errors import InconclusiveError

    diffs = hilbert_first_difference(I, n_max, G=G)
    if len(diffs) < window + 1:
        raise InconclusiveError("n_max too small to certify stabilization")
    tail = diffs[-(window + 1) :]
    if len(set(tail)) != 1:
        raise InconclusiveError(
            "Hilbert first difference still moving at n_max=%d: %s" % (n_max, diffs)
        )
    value = tail[0]
    first = len(diffs) - 1
    while first > 0 and diffs[first - 1] == value:
        first -= 1
    return value, first


def _squarefree(mono):
    return tuple(1 if e > 0 else 0 for e in mono)


def _minimalize_monos(monos):
    monos = sorted(set(monos), key=lambda m: (mono_degree(m), grevlex_key(m)))
    out = []
    for m in monos:
        if not _divisible_by_any(m, out):
            out.append(m)
    return out


def monomial_radical(I):
    """Squarefree parts of the generators, minimalized."""
    if not isinstance(I, IdealSpec) or not I.monomial:
        raise UnsupportedInputError("monomial_radical requires a monomial ideal")
    ring = I.ring
    monos = _minimalize_monos(_squarefree(m) for m in I.monomial_exponents())
    return IdealSpec(ring, [ring.monomial(m) for m in monos])


def monomial_minimal_primes(I):
    """Minimal primes of a monomial ideal as variable-name tuples.

    These are the minimal vertex covers of the squarefree generator
    supports.
    """
    if not isinstance(I, IdealSpec) or not I.monomial:
        raise UnsupportedInputError("monomial_minimal_primes requires a monomial ideal")
    ring = I.ring
    supports = []
    for m in _minimalize_monos(_squarefree(g) for g in I.monomial_exponents()):
        supports.append(frozenset(i for i, e in enumerate(m) if e > 0))
    if not supports:
        return []
    covers = set()

    def extend(cover, rest):
        if not rest:
            covers.add(frozenset(cover))
            return
        head = rest[0]
        tail = rest[1:]
        if cover & head:
            extend(cover, tail)
            return
        for v in sorted(head):
            extend(cover | {v}, tail)

    extend(frozenset(), supports)
    minimal = [c for c in covers if not any(o < c for o in covers)]
    out = [tuple(ring.variables[i] for i in sorted(c)) for c in minimal]
    out.sort()
    return out


def monomial_krull_dim(I):
    """Krull dimension of ring/I for monomial I (possibly 0 generators)."""
    if not isinstance(I, IdealSpec) or not I.monomial:
        raise UnsupportedInputError("monomial dimension requires a monomial ideal")
    nv = I.ring.nvars
    if not I.gens:
        return nv
    primes = monomial_minimal_primes(I)
    return max(nv - len(p) for p in primes)
