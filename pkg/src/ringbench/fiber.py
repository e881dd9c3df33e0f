"""Invariant calculus for fiber products S x_k T on ring profiles.

A RingProfile is a record of local invariants (dim, depth, edim, type,
multiplicity, truncated series) plus flags, each tagged computed or
declared.  The fiber operations implement the dimension/depth rule, the
additivity of embedding dimensions, the four-case multiplicity formula,
and the three-case Bass-series/type table, with the case split driven by
which factors are regular.  Classification predicates refuse to run when
a needed flag is neither computed nor declared.
"""

from itertools import product

from .artin import local_invariants
from .errors import (
    IncompleteProfileError,
    InconclusiveError,
    InvalidFiberError,
    LimitExceededError,
    StructuralError,
    UnsupportedInputError,
)
from .groebner import (
    IdealSpec,
    buchberger,
    monomial_krull_dim,
    monomial_radical,
    stabilized_multiplicity,
    standard_monomials,
)
from .homalg import SeriesTrunc, bass_series, poincare_series, series_arith
from .linalg import Eliminator
from .poly import PolyRing, mono_degree, mono_divides, mono_mul, poly_order_term


class RingProfile:
    __slots__ = (
        "name",
        "dim",
        "depth",
        "edim",
        "type",
        "multiplicity",
        "length",
        "poincare_k",
        "bass",
        "regular",
        "gorenstein",
        "cm",
        "analytically_unramified",
        "finite_cm_type",
        "curve_exponent",
        "provenance",
    )

    def __init__(self, name, dim, depth, edim, type=None, multiplicity=None,
                 length=None, poincare_k=None, bass=None, regular=False,
                 gorenstein=None, analytically_unramified=None,
                 finite_cm_type=None, curve_exponent=None, provenance=None):
        self.name = name
        self.dim = dim
        self.depth = depth
        self.edim = edim
        self.type = type
        self.multiplicity = multiplicity
        self.length = length
        self.poincare_k = poincare_k
        self.bass = bass
        self.regular = regular
        self.cm = depth == dim
        self.gorenstein = gorenstein
        self.analytically_unramified = analytically_unramified
        self.finite_cm_type = finite_cm_type
        self.curve_exponent = curve_exponent
        self.provenance = dict(provenance or {})
        if depth > dim:
            raise StructuralError("depth exceeds dimension in %s" % name)
        if regular:
            if gorenstein is False:
                raise StructuralError("regular but declared non-Gorenstein")
            self.gorenstein = True
        if self.gorenstein and not self.cm:
            raise StructuralError("Gorenstein flag on a non-CM profile")

    @property
    def ecodepth(self):
        return self.edim - self.depth

    @property
    def singular(self):
        return not self.regular

    @property
    def hypersurface(self):
        return self.ecodepth <= 1

    def declare(self, **flags):
        """Set declared flags (analytically_unramified, finite_cm_type,
        regular), marking their provenance."""
        for key, val in flags.items():
            if key not in ("analytically_unramified", "finite_cm_type",
                           "regular"):
                raise StructuralError("flag %s cannot be declared" % key)
            setattr(self, key, val)
            self.provenance[key] = "declared"
        if self.regular:
            self.gorenstein = True
        return self

    def __repr__(self):
        return "RingProfile(%s: dim %d, depth %d, edim %d)" % (
            self.name, self.dim, self.depth, self.edim)


def _computed(names):
    return {n: "computed" for n in names}


def artinian_profile(A, trunc=10, name=None, with_series=True,
                     dim_limit=None):
    """Profile of an artinian algebra; every field computed."""
    inv = local_invariants(A)
    P = B = None
    if with_series:
        kw = {} if dim_limit is None else {"dim_limit": dim_limit}
        P = poincare_series(A, trunc, **kw)
        B = bass_series(A, trunc, **kw)
    return RingProfile(
        name or A.name,
        dim=0,
        depth=0,
        edim=inv["edim"],
        type=inv["socle_dim"],
        multiplicity=inv["length"],
        length=inv["length"],
        poincare_k=P,
        bass=B,
        regular=inv["length"] == 1,
        gorenstein=inv["gorenstein"],
        analytically_unramified=inv["length"] == 1,
        provenance=_computed(
            ["dim", "depth", "edim", "type", "multiplicity", "length",
             "poincare_k", "bass", "regular", "gorenstein",
             "analytically_unramified"]
        ),
    )


def cone_profile(p, k=1, name=None):
    """Profile of p[[Y_1..Y_k]]: dim, depth, edim each gain k; type and
    multiplicity are unchanged; P_k gains a factor (1+t)^k and the Bass
    series a factor t^k."""
    if k < 1:
        raise StructuralError("cone needs at least one variable")
    P = B = None
    if p.poincare_k is not None:
        trunc = p.poincare_k.trunc
        onet = SeriesTrunc.from_poly_coeffs([1, 1], trunc)
        P = p.poincare_k
        for _ in range(k):
            P = series_arith("mul", P, onet)
    if p.bass is not None:
        B = series_arith(
            "mul", p.bass, SeriesTrunc.monomial(k, p.bass.trunc)
        )
    prov = dict(p.provenance)
    # the CM-type flag does not pass to the cone in general; a regular
    # cone is regular, where it does
    fcmt = True if p.regular else None
    if p.regular:
        prov["finite_cm_type"] = "computed"
    else:
        prov.pop("finite_cm_type", None)
    return RingProfile(
        name or "%s[[%d vars]]" % (p.name, k),
        dim=p.dim + k,
        depth=p.depth + k,
        edim=p.edim + k,
        type=p.type,
        multiplicity=p.multiplicity,
        length=None,
        poincare_k=P,
        bass=B,
        regular=p.regular,
        gorenstein=p.gorenstein,
        analytically_unramified=p.analytically_unramified,
        finite_cm_type=fcmt,
        provenance=prov,
    )


def regular_profile(n, trunc=10, name=None):
    """Regular local ring of dimension n; for n = 1 a discrete valuation
    ring.  P_k = (1+t)^n, Bass series t^n."""
    if n < 1:
        raise StructuralError("regular profile needs dimension >= 1")
    onet = SeriesTrunc.from_poly_coeffs([1, 1], trunc)
    P = SeriesTrunc.one(trunc)
    for _ in range(n):
        P = series_arith("mul", P, onet)
    return RingProfile(
        name or ("regular dim %d" % n),
        dim=n,
        depth=n,
        edim=n,
        type=1,
        multiplicity=1,
        poincare_k=P,
        bass=SeriesTrunc.monomial(n, trunc),
        regular=True,
        gorenstein=True,
        analytically_unramified=True,
        finite_cm_type=True,
        provenance=_computed(
            ["dim", "depth", "edim", "type", "multiplicity", "poincare_k",
             "bass", "regular", "gorenstein", "analytically_unramified",
             "finite_cm_type"]
        ),
    )


def plane_curve_profile(field, n, trunc=10, name=None):
    """The recognized one-dimensional hypersurface x^2 - y^n (n >= 2).

    Multiplicity is the order of the defining equation.  The ring is a
    reduced complete curve for every n >= 2 in characteristic zero, and
    of finite representation type; both flags come from the recognized
    form, not from a general decision procedure.
    """
    if n < 2:
        raise StructuralError("curve exponent must be >= 2")
    ring = PolyRing(field, ["x", "y"])
    f = ring.parse("x^2 - y^%d" % n)
    order, _ = poly_order_term(f)
    P = series_arith(
        "div",
        SeriesTrunc.from_poly_coeffs([1, 1], trunc),
        SeriesTrunc.from_poly_coeffs([1, -1], trunc),
    )
    prof = RingProfile(
        name or ("curve x^2 - y^%d" % n),
        dim=1,
        depth=1,
        edim=2,
        type=1,
        multiplicity=order,
        poincare_k=P,
        bass=SeriesTrunc.monomial(1, trunc),
        regular=False,
        gorenstein=True,
        analytically_unramified=True,
        curve_exponent=n,
        provenance=_computed(
            ["dim", "depth", "edim", "type", "multiplicity", "poincare_k",
             "bass", "regular", "gorenstein", "analytically_unramified"]
        ),
    )
    prof.finite_cm_type = True
    prof.provenance["finite_cm_type"] = "declared"
    return prof


def monomial_dim1_profile(I, n_max=12, name=None):
    """Profile of a one-dimensional monomial quotient.

    Multiplicity from the stabilized Hilbert first difference, depth from
    a socle-monomial search, reducedness from squarefreeness.  Type and
    series are left unset; finite_cm_type must be declared.
    """
    if not I.monomial:
        raise UnsupportedInputError("profile needs a monomial ideal")
    d = monomial_krull_dim(I)
    if d != 1:
        raise StructuralError("expected dimension 1, got %d" % d)
    e, _ = stabilized_multiplicity(I, n_max)
    gens = I.monomial_exponents()
    nv = I.ring.nvars
    linear = sum(1 for g in gens if mono_degree(g) == 1)
    edim = nv - linear
    maxgen = max(mono_degree(g) for g in gens)

    def is_standard(mono):
        return not any(mono_divides(g, mono) for g in gens)

    # a socle monomial u has, in each variable v, exponent one less than
    # the v-exponent of the generator killing u*v, so the box below the
    # generator degree bound is a complete search space
    if maxgen ** nv > 10 ** 6:
        raise LimitExceededError("socle search box too large")
    depth = 1
    for u in product(range(maxgen), repeat=nv):
        if not is_standard(u):
            continue
        if all(
            not is_standard(
                mono_mul(u, tuple(1 if i == j else 0 for i in range(nv)))
            )
            for j in range(nv)
        ):
            depth = 0
            break
    reduced = all(all(x <= 1 for x in g) for g in gens)
    return RingProfile(
        name or "monomial quotient",
        dim=1,
        depth=depth,
        edim=edim,
        multiplicity=e,
        regular=False,
        analytically_unramified=reduced,
        provenance=_computed(
            ["dim", "depth", "edim", "multiplicity", "regular",
             "analytically_unramified"]
        ),
    )


class FiberSpec:
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        if left.edim < 1 or right.edim < 1:
            raise InvalidFiberError(
                "both factors must be non-trivial (edim >= 1)"
            )
        self.left = left
        self.right = right

    def swapped(self):
        return FiberSpec(self.right, self.left)

    def __repr__(self):
        return "FiberSpec(%s, %s)" % (self.left.name, self.right.name)


def fiber_dim_depth(f):
    S, T = f.left, f.right
    dim = max(S.dim, T.dim)
    depth = min(S.depth, T.depth, 1)
    cm = S.cm and T.cm and S.dim == T.dim and S.dim <= 1
    return dim, depth, cm


def fiber_edim(f):
    return f.left.edim + f.right.edim


def fiber_multiplicity(f):
    S, T = f.left, f.right
    if None in (S.multiplicity, T.multiplicity):
        raise IncompleteProfileError(
            "multiplicity missing", missing=["multiplicity"]
        )
    if S.dim > T.dim:
        return S.multiplicity
    if S.dim < T.dim:
        return T.multiplicity
    if S.dim != 0:
        return S.multiplicity + T.multiplicity
    return S.multiplicity + T.multiplicity - 1


def _oriented_case(f):
    """Returns (case, S, T) with the singular factor first in case 2."""
    S, T = f.left, f.right
    if S.singular and T.singular:
        return 1, S, T
    if S.singular and T.regular:
        case = 2
    elif T.singular and S.regular:
        case, S, T = 2, T, S
    else:
        case = 3
    if case == 2 and T.dim == 0:
        raise InvalidFiberError(
            "regular factor of dimension 0 is the residue field"
        )
    if case == 3 and (S.dim < 1 or T.dim < 1):
        raise InvalidFiberError(
            "regular factors must have dimension >= 1"
        )
    return case, S, T


def fiber_type(f):
    case, S, T = _oriented_case(f)
    if case == 3:
        return 1
    if case == 2:
        if S.type is None:
            raise IncompleteProfileError("type missing", missing=["type"])
        if S.depth == 0:
            return S.type
        if S.depth == 1:
            return S.type + 1
        return 1
    dS, dT = S.depth, T.depth
    if dS > 1 and dT > 1:
        return 1
    if None in (S.type, T.type):
        raise IncompleteProfileError("type missing", missing=["type"])
    if dS == 0 and dT == 0:
        return S.type + T.type
    if dS == 0 and dT > 0:
        return S.type
    if dT == 0 and dS > 0:
        return T.type
    if dS == 1 and dT == 1:
        return S.type + T.type + 1
    if dS == 1 and dT > 1:
        return S.type + 1
    return T.type + 1


def _pow_one_plus_t(n, trunc):
    onet = SeriesTrunc.from_poly_coeffs([1, 1], trunc)
    out = SeriesTrunc.one(trunc)
    for _ in range(n):
        out = series_arith("mul", out, onet)
    return out


def fiber_poincare_k(PS, PT, trunc=None):
    """P of the residue field over the fiber: PS PT / (PT + PS - PS PT)."""
    n = min(PS.trunc, PT.trunc) if trunc is None else trunc
    if n > min(PS.trunc, PT.trunc):
        raise InconclusiveError(
            "factor series truncated below the requested degree"
        )
    for P in (PS, PT):
        if P.coeffs[0] != 1:
            raise StructuralError("Poincare series must start at 1")
        if all(c == 0 for c in P.coeffs[1:]):
            raise InvalidFiberError("factor with residue-field series")
    num = series_arith("mul", PS, PT, trunc=n)
    den = series_arith(
        "sub", series_arith("add", PT, PS, trunc=n), num, trunc=n
    )
    return series_arith("div", num, den, trunc=n)


def fiber_bass_series(f, N):
    """Bass series of the fiber through degree N, by the case table.

    The coefficient at the fiber's depth is cross-checked against the
    type table before returning.
    """
    case, S, T = _oriented_case(f)
    if case == 3:
        m, n = S.dim, T.dim
        PS = _pow_one_plus_t(m, N)
        PT = _pow_one_plus_t(n, N)
        tm = SeriesTrunc.monomial(1, N)
        num = series_arith("mul", tm, _pow_one_plus_t(m + n, N), trunc=N)
        num = series_arith(
            "sub",
            num,
            series_arith(
                "mul", SeriesTrunc.monomial(m + 1, N), PT, trunc=N
            ),
            trunc=N,
        )
        num = series_arith(
            "sub",
            num,
            series_arith(
                "mul", SeriesTrunc.monomial(n + 1, N), PS, trunc=N
            ),
            trunc=N,
        )
    elif case == 2:
        if S.poincare_k is None or S.bass is None:
            raise IncompleteProfileError(
                "series missing on the singular factor",
                missing=["poincare_k", "bass"],
            )
        if min(S.poincare_k.trunc, S.bass.trunc) < N:
            raise InconclusiveError(
                "factor series truncated below the requested degree"
            )
        n = T.dim
        PS = SeriesTrunc.from_poly_coeffs(S.poincare_k.coeffs, N)
        PT = _pow_one_plus_t(n, N)
        IS = SeriesTrunc.from_poly_coeffs(S.bass.coeffs, N)
        pn = _pow_one_plus_t(n, N)
        num = series_arith(
            "mul", SeriesTrunc.monomial(1, N),
            series_arith("mul", PS, pn, trunc=N), trunc=N,
        )
        num = series_arith(
            "add", num, series_arith("mul", IS, pn, trunc=N), trunc=N
        )
        num = series_arith(
            "sub",
            num,
            series_arith(
                "mul", SeriesTrunc.monomial(n + 1, N), PS, trunc=N
            ),
            trunc=N,
        )
    else:
        missing = []
        for p in (S, T):
            if p.poincare_k is None:
                missing.append("poincare_k")
            if p.bass is None:
                missing.append("bass")
        if missing:
            raise IncompleteProfileError(
                "series missing on a singular factor", missing=missing
            )
        avail = min(
            S.poincare_k.trunc, S.bass.trunc, T.poincare_k.trunc,
            T.bass.trunc,
        )
        if avail < N:
            raise InconclusiveError(
                "factor series truncated below the requested degree"
            )
        PS = SeriesTrunc.from_poly_coeffs(S.poincare_k.coeffs, N)
        PT = SeriesTrunc.from_poly_coeffs(T.poincare_k.coeffs, N)
        IS = SeriesTrunc.from_poly_coeffs(S.bass.coeffs, N)
        IT = SeriesTrunc.from_poly_coeffs(T.bass.coeffs, N)
        num = series_arith(
            "mul", SeriesTrunc.monomial(1, N),
            series_arith("mul", PS, PT, trunc=N), trunc=N,
        )
        num = series_arith(
            "add", num, series_arith("mul", IS, PT, trunc=N), trunc=N
        )
        num = series_arith(
            "add", num, series_arith("mul", IT, PS, trunc=N), trunc=N
        )
    den = series_arith(
        "sub",
        series_arith("add", PT, PS, trunc=N),
        series_arith("mul", PS, PT, trunc=N),
        trunc=N,
    )
    out = series_arith("div", num, den, trunc=N)
    _, depth, _ = fiber_dim_depth(f)
    if depth <= N:
        expected = fiber_type(f)
        got = out.coeffs[depth]
        if got != expected:
            raise StructuralError(
                "Bass coefficient %s at depth %d disagrees with type %d"
                % (got, depth, expected)
            )
        for i in range(depth):
            if out.coeffs[i] != 0:
                raise StructuralError("Bass series order below depth")
    return out


def fiber_present(IS, IT):
    """Presentation of S x_k T from cofinite-side presentations.

    Generators: both ideals plus every cross product of one variable from
    each side."""
    ring_s, ring_t = IS.ring, IT.ring
    if ring_s.field != ring_t.field:
        raise StructuralError("factors presented over different fields")
    if set(ring_s.variables) & set(ring_t.variables):
        raise StructuralError("factor presentations share variable names")
    variables = list(ring_s.variables) + list(ring_t.variables)
    ring = PolyRing(ring_s.field, variables)
    ns, nt = len(ring_s.variables), len(ring_t.variables)
    gens = []
    for g in IS.gens:
        gens.append(
            ring.from_terms(
                (mono + (0,) * nt, c) for mono, c in g.terms.items()
            )
        )
    for g in IT.gens:
        gens.append(
            ring.from_terms(
                ((0,) * ns + mono, c) for mono, c in g.terms.items()
            )
        )
    one = ring.field.one
    for i in range(ns):
        for j in range(nt):
            mono = tuple(
                (1 if k == i else 0) for k in range(ns)
            ) + tuple((1 if k == j else 0) for k in range(nt))
            gens.append(ring.monomial(mono, one))
    return IdealSpec(ring, gens)


def fiber_profile(f, trunc=10, name=None):
    """Assembled profile of the fiber; series filled in when the factor
    series allow it, type when the table's inputs are present."""
    S, T = f.left, f.right
    dim, depth, cm = fiber_dim_depth(f)
    edim = fiber_edim(f)
    try:
        rtype = fiber_type(f)
    except IncompleteProfileError:
        rtype = None
    try:
        e = fiber_multiplicity(f)
    except IncompleteProfileError:
        e = None
    length = None
    if S.length is not None and T.length is not None:
        length = S.length + T.length - 1
    P = B = None
    if S.poincare_k is not None and T.poincare_k is not None:
        n_eff = min(trunc, S.poincare_k.trunc, T.poincare_k.trunc)
        P = fiber_poincare_k(S.poincare_k, T.poincare_k, trunc=n_eff)
        try:
            B = fiber_bass_series(f, n_eff)
        except (IncompleteProfileError, InconclusiveError):
            B = None
    g = classify_gorenstein_fiber(f)
    return RingProfile(
        name or "%s x %s" % (S.name, T.name),
        dim=dim,
        depth=depth,
        edim=edim,
        type=rtype,
        multiplicity=e,
        length=length,
        poincare_k=P,
        bass=B,
        regular=False,
        gorenstein=g["gorenstein"],
        provenance=_computed(
            ["dim", "depth", "edim", "type", "multiplicity", "gorenstein"]
        ),
    )


def classify_gorenstein_fiber(f):
    """Gorenstein iff both factors are discrete valuation rings, in which
    case the fiber is a one-dimensional hypersurface."""
    S, T = f.left, f.right
    if S.regular and T.regular:
        if S.dim == 1 and T.dim == 1:
            return {
                "gorenstein": True,
                "reason": "both factors are discrete valuation rings; "
                          "dimension-1 hypersurface",
            }
        return {
            "gorenstein": False,
            "reason": "regular factors of dimensions (%d, %d); "
                      "Gorenstein only when both are 1" % (S.dim, T.dim),
        }
    return {
        "gorenstein": False,
        "reason": "a singular factor makes the fiber non-Gorenstein",
    }


def _require(profile, fields):
    missing = []
    for fld in fields:
        if getattr(profile, fld) is None:
            missing.append("%s.%s" % (profile.name, fld))
    return missing


def classify_fcmt_cm(f):
    """Finite CM type for Cohen-Macaulay fibers.

    Condition (ii): one factor an analytically unramified hypersurface of
    dimension 1 with multiplicity at most 2, the other regular of
    dimension 1.  Condition (iii): both factors CM of dimension 1 with
    finite CM type and fiber multiplicity at most 3.  The two conditions
    are evaluated independently and must agree; a true verdict also
    forces dim = 1.  Non-CM fibers are out of scope here and are
    refused; classify_fcmt_depth_le1 covers them.
    """
    S, T = f.left, f.right
    dim, depth, cm = fiber_dim_depth(f)
    if not cm:
        raise UnsupportedInputError(
            "classifier needs a Cohen-Macaulay fiber; this one has "
            "depth %d and dimension %d" % (depth, dim)
        )
    missing = []
    for p in (S, T):
        missing += _require(p, ["multiplicity"])
        if p.analytically_unramified is None and p.dim == 1 and not p.regular:
            missing.append("%s.analytically_unramified" % p.name)
        if p.finite_cm_type is None and p.dim == 1:
            missing.append("%s.finite_cm_type" % p.name)
    if missing:
        raise IncompleteProfileError(
            "classification needs flags", missing=sorted(set(missing))
        )

    def cond_ii(a, b):
        return (
            a.dim == 1
            and a.hypersurface
            and a.analytically_unramified is True
            and a.multiplicity <= 2
            and b.regular
            and b.dim == 1
        )

    ii = cond_ii(S, T) or cond_ii(T, S)

    def cond_iii():
        if not (S.cm and T.cm and S.dim == 1 and T.dim == 1):
            return False
        if not (S.finite_cm_type and T.finite_cm_type):
            return False
        return fiber_multiplicity(f) <= 3

    iii = cond_iii()
    if ii != iii:
        raise StructuralError(
            "conditions (ii) and (iii) disagree on %s vs %s: %s vs %s"
            % (S.name, T.name, ii, iii)
        )
    if ii and dim != 1:
        raise StructuralError("finite type verdict with dim != 1")
    return {
        "finite_cm_type": ii,
        "matched_condition": "ii" if ii else "none",
    }


def classify_fcmt_depth_le1(f):
    """Finite CM type for fibers of depth at most 1.

    Condition (1): one factor of dimension 1 with finite CM type, the
    other artinian.  Condition (2): both of dimension 1 with finite CM
    type, multiplicities (at most 2, exactly 1) in some order.  A true
    verdict in dimension 0 is structurally impossible and treated as an
    internal error.
    """
    S, T = f.left, f.right
    dim, _, _ = fiber_dim_depth(f)
    if dim > 1:
        return {"finite_cm_type": False, "matched_condition": "none"}
    missing = []
    for p in (S, T):
        if p.dim == 1 and p.finite_cm_type is None:
            missing.append("%s.finite_cm_type" % p.name)
        if p.dim == 1 and p.multiplicity is None:
            missing.append("%s.multiplicity" % p.name)
    if missing:
        raise IncompleteProfileError(
            "classification needs flags", missing=sorted(set(missing))
        )

    def cond1(a, b):
        return a.dim == 1 and a.finite_cm_type is True and b.dim == 0

    def cond2(a, b):
        return (
            a.dim == 1
            and b.dim == 1
            and a.finite_cm_type is True
            and b.finite_cm_type is True
            and a.multiplicity <= 2
            and b.multiplicity == 1
        )

    if cond1(S, T) or cond1(T, S):
        matched = "1"
    elif cond2(S, T) or cond2(T, S):
        matched = "2"
    else:
        matched = "none"
    verdict = matched != "none"
    if verdict and dim == 0:
        raise StructuralError(
            "finite CM type verdict in dimension 0 contradicts the "
            "decomposable-ideal obstruction"
        )
    return {"finite_cm_type": verdict, "matched_condition": matched}


def recognized_normal_form(f):
    """Complete normal form of the fiber when both factors are of
    recognized shape: two discrete valuation rings give k[[x,z]]/(xz);
    a plane curve x^2 - y^n against a discrete valuation ring gives
    k[[x,y,z]]/(x^2 - y^n, xz, yz).  None when not recognized."""
    S, T = f.left, f.right
    if S.regular and T.regular and S.dim == 1 and T.dim == 1:
        return "k[[x,z]]/(xz)"
    for a, b in ((S, T), (T, S)):
        if (
            a.curve_exponent is not None
            and a.dim == 1
            and b.regular
            and b.dim == 1
        ):
            return "k[[x,y,z]]/(x^2 - y^%d, xz, yz)" % a.curve_exponent
    return None


def nil_multiplicity_check(I, n_max=12):
    """Compare e(R) with e(R/Nil) for a one-dimensional monomial quotient.

    The nilpotent standard monomials are those inside the radical; the
    ray-pump certificate decides whether infinitely many survive (then
    deep powers of the maximal ideal keep meeting the nilradical and the
    two multiplicities may differ).  Certificate completeness: a standard
    nilpotent monomial beyond the enumeration bound would descend, one
    exponent at a time, through every lower degree while staying standard
    and nilpotent, so an empty top degree certifies finiteness.
    """
    if not I.monomial:
        raise UnsupportedInputError("nil check needs a monomial ideal")
    if monomial_krull_dim(I) != 1:
        raise StructuralError("nil check expects a one-dimensional quotient")
    G = buchberger(I)
    e_r, _ = stabilized_multiplicity(I, n_max, G=G)
    rad = monomial_radical(I)
    e_rad, _ = stabilized_multiplicity(rad, n_max)
    gens = I.monomial_exponents()
    rad_gens = rad.monomial_exponents()
    maxgen = max(mono_degree(g) for g in gens)
    nv = I.ring.nvars

    def is_standard(mono):
        return not any(mono_divides(g, mono) for g in gens)

    def in_radical(mono):
        return any(mono_divides(g, mono) for g in rad_gens)

    std = standard_monomials(G, degree_cap=n_max, assert_cofinite=False)
    nil_std = [u for u in std if in_radical(u)]
    ray_found = False
    for u in nil_std:
        for j in range(nv):
            bump = tuple(
                x + (maxgen if i == j else 0) for i, x in enumerate(u)
            )
            if is_standard(bump):
                ray_found = True
                break
        if ray_found:
            break
    if not ray_found and any(mono_degree(u) >= n_max for u in nil_std):
        raise InconclusiveError(
            "nilpotent standard monomials reach the enumeration bound; "
            "raise n_max"
        )
    return {
        "e_R": e_r,
        "e_R_mod_nil": e_rad,
        "equal": e_r == e_rad,
        "hypothesis_holds": not ray_found,
    }


def small_mult_semidualizing_flag(p):
    """At-most-two-semidualizing guarantee: available exactly when the
    profile is CM with multiplicity at most 8."""
    if p.cm is not True or p.multiplicity is None:
        raise IncompleteProfileError(
            "needs a CM profile with known multiplicity",
            missing=["cm" if p.cm is not True else "multiplicity"],
        )
    return p.multiplicity <= 8


def proposition_proof_invariant(A):
    """Structure checks behind the small-multiplicity bound on an
    artinian algebra: the length identity edim = length - 1 - dim m^2,
    and (length <= 8, socle inside m^2, type >= 4) forcing edim <= 3."""
    inv = local_invariants(A)
    field = A.field
    elim = Eliminator(field)
    for i in range(1, A.dim):
        for j in range(i, A.dim):
            elim.insert(dict(A.table(i, j)))
    msq = elim.rank
    socle_in_msq = all(elim.contains(v) for v in A.socle_vectors())
    identity = inv["edim"] == inv["length"] - 1 - msq
    hypothesis = (
        inv["length"] <= 8 and socle_in_msq and inv["socle_dim"] >= 4
    )
    conclusion = inv["edim"] <= 3
    return {
        "length": inv["length"],
        "edim": inv["edim"],
        "type": inv["socle_dim"],
        "msquare_dim": msq,
        "socle_in_msquare": socle_in_msq,
        "identity_holds": identity,
        "hypothesis_applies": hypothesis,
        "conclusion_holds": (not hypothesis) or conclusion,
    }
