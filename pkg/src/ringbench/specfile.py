"""Ring description files: a flat key = value text format.

    # artinian core with one cone variable
    name = s0_cone
    field = Q
    vars = x, y
    ideal = x^2, x*y, y^2
    cone_vars = Y

Recognized keys: name, field (Q or Fp(p)), vars, ideal, cone_vars,
analytically_unramified, finite_cm_type, regular.  Lists are comma
separated and may be empty; `#` starts a comment; each key appears at
most once.  The three flag keys take true/false and declare properties
the profile routines cannot decide from the ideal alone.
"""

import re

from .errors import (
    LimitExceededError,
    NotCofiniteError,
    ParseError,
    StructuralError,
    UnsupportedInputError,
)
from .fiber import (
    artinian_profile,
    cone_profile,
    monomial_dim1_profile,
    plane_curve_profile,
    regular_profile,
)
from .groebner import IdealSpec, buchberger, is_cofinite, monomial_krull_dim
from .artin import field_algebra, local_invariants, quotient_algebra
from .poly import PolyRing
from .scalars import PrimeField, Rationals

# direct minimal-resolution series stay affordable up to these sizes;
# past them the profile reports no series rather than grinding
SERIES_LENGTH_CAP = 8
SERIES_EDIM_CAP = 4
SERIES_TRUNC_CAP = 8
SERIES_DIM_LIMIT = 10 ** 6

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_FIELD_TAG = re.compile(r"Q\Z|Fp\((\d+)\)\Z")

_LIST_KEYS = ("vars", "ideal", "cone_vars")
_FLAG_KEYS = ("analytically_unramified", "finite_cm_type", "regular")
_KEYS = ("name", "field") + _LIST_KEYS + _FLAG_KEYS
_REQUIRED = ("name", "field", "vars", "ideal")


class RingSpecFile:
    """Parsed ring description; `lines` maps each key to its line number
    so later semantic errors can point back into the source."""

    __slots__ = ("name", "field", "vars", "ideal", "cone_vars",
                 "declared_flags", "lines")

    def __init__(self, name, field, vars, ideal, cone_vars=(),
                 declared_flags=None, lines=None):
        self.name = name
        self.field = field
        self.vars = tuple(vars)
        self.ideal = tuple(ideal)
        self.cone_vars = tuple(cone_vars)
        self.declared_flags = dict(declared_flags or {})
        self.lines = dict(lines or {})

    def scalar_field(self):
        m = _FIELD_TAG.match(self.field)
        if m is None:
            raise ParseError("field must be Q or Fp(p), got %r" % self.field,
                             line=self.lines.get("field"))
        if m.group(1) is None:
            return Rationals()
        try:
            return PrimeField(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc), line=self.lines.get("field"))

    def core_ring(self):
        return PolyRing(self.scalar_field(), self.vars)

    def core_ideal(self):
        ring = self.core_ring()
        gens = []
        for text in self.ideal:
            try:
                gens.append(ring.parse(text))
            except ParseError as exc:
                raise ParseError(
                    "in ideal entry %r: %s" % (text, exc),
                    line=self.lines.get("ideal"))
        return IdealSpec(ring, gens)

    def __repr__(self):
        return "RingSpecFile(%s over %s)" % (self.name, self.field)


def _split_list(raw):
    if not raw.strip():
        return ()
    return tuple(part.strip() for part in raw.split(","))


def parse_spec_text(text):
    seen = {}
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected key = value", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KEYS:
            raise ParseError("unknown key %r (one of %s)"
                             % (key, ", ".join(_KEYS)), line=lineno)
        if key in seen:
            raise ParseError("duplicate key %r (first at line %d)"
                             % (key, lines[key]), line=lineno)
        seen[key] = value
        lines[key] = lineno
    for key in _REQUIRED:
        if key not in seen:
            raise ParseError("missing required key %r" % key)

    if not seen["name"]:
        raise ParseError("empty name", line=lines["name"])

    names = {}
    for key in ("vars", "cone_vars"):
        vals = _split_list(seen.get(key, ""))
        for v in vals:
            if not _IDENT.match(v):
                raise ParseError("bad variable name %r in %s" % (v, key),
                                 line=lines[key])
            if v in names:
                raise ParseError(
                    "variable %r in %s already used in %s"
                    % (v, key, names[v]), line=lines[key])
            names[v] = key

    flags = {}
    for key in _FLAG_KEYS:
        if key not in seen:
            continue
        value = seen[key].lower()
        if value not in ("true", "false"):
            raise ParseError("%s must be true or false, got %r"
                             % (key, seen[key]), line=lines[key])
        flags[key] = value == "true"

    spec = RingSpecFile(
        name=seen["name"],
        field=seen["field"],
        vars=_split_list(seen["vars"]),
        ideal=_split_list(seen["ideal"]),
        cone_vars=_split_list(seen.get("cone_vars", "")),
        declared_flags=flags,
        lines=lines,
    )
    spec.scalar_field()
    spec.core_ideal()  # ideal entries must parse over vars only
    return spec


def load_spec_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_spec_text(text)
    except ParseError as exc:
        raise ParseError("%s: %s" % (path, exc.message),
                         line=exc.line, col=exc.col)


def _recognize_plane_curve(I):
    """Exponent n when the ideal is (x^2 - y^n) up to variable order and
    scaling, else None."""
    if I.ring.nvars != 2 or len(I.gens) != 1:
        return None
    f = I.gens[0]
    if len(f.terms) != 2:
        return None
    field = I.ring.field
    (m1, c1), (m2, c2) = sorted(f.terms.items())
    if not field.is_zero(field.add(c1, c2)):
        return None
    for quad, power in ((m1, m2), (m2, m1)):
        i = next((j for j, e in enumerate(quad) if e), None)
        if i is None or quad[i] != 2 or quad[1 - i] != 0:
            continue
        if power[i] == 0 and power[1 - i] >= 2:
            return power[1 - i]
    return None


def _dim1_core(spec, I, trunc, n_max):
    n = _recognize_plane_curve(I)
    if n is not None:
        return plane_curve_profile(I.ring.field, n, trunc=trunc,
                                   name=spec.name)
    if I.monomial and monomial_krull_dim(I) == 1:
        return monomial_dim1_profile(I, n_max=n_max, name=spec.name)
    raise UnsupportedInputError(
        "no profile route for %s: the ideal is not cofinite, not of the "
        "plane-curve form x^2 - y^n, and not monomial of dimension one"
        % spec.name)


def _artinian_core(spec, I, G, trunc, with_series):
    A = quotient_algebra(I, G=G, name=spec.name)
    if with_series == "auto":
        inv = local_invariants(A)
        with_series = (inv["length"] <= SERIES_LENGTH_CAP
                       and inv["edim"] <= SERIES_EDIM_CAP)
        trunc = min(trunc, SERIES_TRUNC_CAP)
    if not with_series:
        return artinian_profile(A, trunc=trunc, with_series=False)
    try:
        return artinian_profile(A, trunc=trunc, dim_limit=SERIES_DIM_LIMIT)
    except LimitExceededError:
        return artinian_profile(A, trunc=trunc, with_series=False)


def to_profile(spec, trunc=10, n_max=12, with_series="auto"):
    """Build the RingProfile a spec file describes.

    Core routes, tried in order: declared regular (empty ideal), artinian
    quotient, recognized plane curve x^2 - y^n, monomial ideal of
    dimension one.  Cone variables are applied on top, then the declared
    flags; a declaration contradicting a computed value is an error.

    with_series "auto" resolves artinian cores only while length and
    embedding dimension stay under the module caps, and caps the degree;
    the closed-form routes always carry their series.
    """
    flags = dict(spec.declared_flags)
    k = len(spec.cone_vars)
    if flags.get("regular") and spec.ideal:
        raise UnsupportedInputError(
            "regular = true needs an empty ideal in %s" % spec.name)
    if not spec.ideal:
        # no relations: power series ring in #vars + #cone vars variables
        total = len(spec.vars) + k
        if total:
            prof = regular_profile(total, trunc=trunc, name=spec.name)
        else:
            prof = artinian_profile(
                field_algebra(spec.scalar_field()), trunc=trunc,
                name=spec.name)
        if flags.get("regular") is False:
            raise StructuralError(
                "%s declared regular = false but the ring is regular"
                % spec.name)
    else:
        I = spec.core_ideal()
        try:
            G = buchberger(I)
            if not is_cofinite(G):
                raise NotCofiniteError("core not artinian")
            core = _artinian_core(spec, I, G, trunc, with_series)
        except NotCofiniteError:
            core = _dim1_core(spec, I, trunc, n_max)
        prof = cone_profile(core, k) if k else core
        prof.name = spec.name
        if flags.get("regular") is False and prof.regular:
            raise StructuralError(
                "%s declared regular = false but the ring is regular"
                % spec.name)
    for key in ("analytically_unramified", "finite_cm_type"):
        if key not in flags:
            continue
        current = getattr(prof, key)
        if current is None:
            prof.declare(**{key: flags[key]})
        elif current != flags[key]:
            raise StructuralError(
                "%s declared %s = %r but the computed value is %r"
                % (spec.name, key, flags[key], current))
    return prof
