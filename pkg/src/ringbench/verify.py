"""Named example rings and the harnesses that recheck their claims.

Every example id builds exact objects over the rationals.  Expected
values live in a registry where each entry carries a citation string
naming where the value is asserted; harness reports separate computed
checks (PASS / FAIL / INCONCLUSIVE) from claims a desk-scale run cannot
recompute, which are listed under paper_asserted.
"""

import random
from itertools import combinations, product

from .artin import (
    base_change_fraction_field,
    dualizing_module,
    free_module,
    is_isomorphic,
    local_invariants,
    quotient_algebra,
    tensor_algebra,
    tensor_module,
)
from .errors import InconclusiveError, StructuralError
from .fiber import (
    FiberSpec,
    artinian_profile,
    cone_profile,
    fiber_bass_series,
    fiber_dim_depth,
    fiber_edim,
    fiber_multiplicity,
    fiber_poincare_k,
    fiber_present,
    fiber_type,
    plane_curve_profile,
    recognized_normal_form,
    regular_profile,
)
from .groebner import IdealSpec, stabilized_multiplicity
from .homalg import bass_series, is_semidualizing, poincare_series
from .poly import PolyRing
from .scalars import Rationals

RATIONALS = Rationals()
MAX_N = 3
EXAMPLE_IDS = (
    "JS_A",
    "THM11_R",
    "THM11_RP",
    "THM12_S0",
    "THM12_R",
    "THM12_RP",
    "NODE",
    "HYPER",
    "CUSP_FIBER",
)
_PARAMETRIC = {"THM12_S0", "THM12_R", "THM12_RP", "HYPER", "CUSP_FIBER"}


class NamedExample:
    """id, ingredients (recipe data), and cited expected values."""

    __slots__ = ("id", "ingredients", "expected")

    def __init__(self, id, ingredients, expected):
        for key, pair in expected.items():
            if (
                not isinstance(pair, tuple)
                or len(pair) != 2
                or not isinstance(pair[1], str)
                or not pair[1]
            ):
                raise StructuralError(
                    "expected entry %s needs (value, citation)" % key
                )
        self.id = id
        self.ingredients = ingredients
        self.expected = expected

    def expected_value(self, key):
        return self.expected[key][0]

    def __repr__(self):
        return "NamedExample(%s)" % self.id


def _check_n(eid, n):
    if eid in _PARAMETRIC:
        if n is None:
            raise StructuralError("%s needs the parameter n" % eid)
        lo = 2 if eid in ("HYPER", "CUSP_FIBER") else 1
        if not (lo <= n <= (MAX_N if eid.startswith("THM12") else 12)):
            raise StructuralError("n=%r out of range for %s" % (n, eid))
    elif n is not None:
        raise StructuralError("%s takes no parameter" % eid)


def named_example(eid, n=None, alpha=2):
    _check_n(eid, n)
    if eid == "JS_A":
        return NamedExample(
            eid,
            {"field": "Q", "vars": ["x1", "x2", "x3", "x4", "x5"],
             "alpha": str(alpha)},
            {
                "length": (12, "thm 1.1 proof: 'of length 12'"),
                "edim": (5, "thm 1.1 proof: 'embedding dimension 5'"),
                "gorenstein": (True, "thm 1.1 proof: 'Gorenstein k-algebra'"),
            },
        )
    if eid == "THM11_R":
        return NamedExample(
            eid,
            {"field": "Q", "vars": ["y", "x1", "x2", "x3", "x4", "x5", "z"],
             "alpha": str(alpha)},
            {
                "dim": (1, "thm 1.1: 'Cohen-Macaulay of Krull dimension 1'"),
                "depth": (1, "thm 1.1: Cohen-Macaulay, dimension 1"),
                "cm": (True, "thm 1.1: 'Cohen-Macaulay'"),
                "type": (2, "thm 1.1(b): 'type 2'"),
                "multiplicity": (13, "thm 1.1(b): 'multiplicity 13'"),
                "edim": (7, "thm 1.1 proof: 'edim(R)=7'"),
                "ecodepth": (6, "thm 1.1(b): 'embedding codepth 6'"),
            },
        )
    if eid == "THM11_RP":
        return NamedExample(
            eid,
            {"field": "Q((Y))", "vars": ["x1", "x2", "x3", "x4", "x5"],
             "alpha": str(alpha)},
            {
                "length": (12, "thm 1.1(c): 'multiplicity 12'"),
                "edim": (5, "thm 1.1 proof: 'embedding dimension 5'"),
                "ecodepth": (5, "thm 1.1(c): 'embedding codepth 5'"),
                "gorenstein": (True, "thm 1.1(c): 'Gorenstein'"),
            },
        )
    if eid == "THM12_S0":
        return NamedExample(
            eid,
            {"field": "Q", "nvars": 2 * n, "n": n},
            {
                "length": (3 ** n, "thm 1.2 proof: 'length 3^n'"),
                "type": (2 ** n, "thm 1.2 proof: 'type 2^n'"),
                "edim": (2 * n, "thm 1.2 proof: 'embedding dimension 2n'"),
            },
        )
    if eid == "THM12_R":
        return NamedExample(
            eid,
            {"field": "Q", "nvars": 2 * n + 2, "n": n},
            {
                "dim": (1, "thm 1.2: 'Cohen-Macaulay ... of Krull dimension 1'"),
                "cm": (True, "thm 1.2: 'Cohen-Macaulay'"),
                "type": (1 + 2 ** n, "thm 1.2(2): 'type 1+2^n'"),
                "multiplicity": (1 + 3 ** n, "thm 1.2(2): 'multiplicity 1+3^n'"),
                "edim": (2 * n + 2, "thm 1.2 proof: 'edim(R)=2n+2'"),
                "ecodepth": (2 * n + 1, "thm 1.2(2): 'embedding codepth 2n+1'"),
                "semidualizing_count": (
                    2, "thm 1.2(2): 'only two non-isomorphic semidualizing "
                       "modules'"),
            },
        )
    if eid == "THM12_RP":
        return NamedExample(
            eid,
            {"field": "Q((Y))", "nvars": 2 * n, "n": n},
            {
                "type": (2 ** n, "thm 1.2(3): 'type 2^n'"),
                "multiplicity": (3 ** n, "thm 1.2(3): 'multiplicity 3^n'"),
                "ecodepth": (2 * n, "thm 1.2(3): 'embedding codepth 2n'"),
                "semidualizing_count": (
                    2 ** n, "thm 1.2(3): 'exactly 2^n non-isomorphic "
                            "semidualizing modules'"),
            },
        )
    if eid == "NODE":
        return NamedExample(
            eid,
            {"field": "Q", "vars": ["x", "z"]},
            {
                "dim": (1, "cor 5.6(1): 'k[[x,z]]/(xz)'"),
                "multiplicity": (2, "fact 2.9: e(S)+e(T)-1 = 2 here"),
                "type": (1, "fact 2.6 case 3: r(R) = 1"),
                "gorenstein": (True, "fact 2.6 case 3: Gorenstein iff "
                                     "m = n = 1; both factors are DVRs"),
                "finite_cm_type": (True, "cor 5.6(1)"),
                "normal_form": ("k[[x,z]]/(xz)", "cor 5.6(1)"),
            },
        )
    if eid == "HYPER":
        return NamedExample(
            eid,
            {"field": "Q", "vars": ["x", "y"], "n": n},
            {
                "dim": (1, "cor 5.6 proof: dimension-1 hypersurface"),
                "multiplicity": (2, "cor 5.6 proof: 'multiplicity 2 when "
                                    "n >= 2'"),
                "type": (1, "hypersurfaces are Gorenstein"),
                "analytically_unramified": (
                    True, "cor 5.6 proof: 'complete and reduced'"),
            },
        )
    if eid == "CUSP_FIBER":
        return NamedExample(
            eid,
            {"field": "Q", "vars": ["x", "y", "z"], "n": n},
            {
                "dim": (1, "thm 1.3: finite type forces dimension 1"),
                "multiplicity": (3, "fact 2.9: 2 + 1 with equal dimensions"),
                "finite_cm_type": (True, "thm 1.3(ii)/cor 5.6(2)"),
                "normal_form": (
                    "k[[x,y,z]]/(x^2 - y^%d, xz, yz)" % n, "cor 5.6(2)"),
            },
        )
    raise StructuralError("unknown example id %r" % eid)


def _js_a_ideal(alpha):
    ring = PolyRing(RATIONALS, ["x1", "x2", "x3", "x4", "x5"])
    f = ring.field
    a = f.coerce(alpha)
    if f.is_zero(a):
        raise StructuralError("alpha must be a unit")
    one = f.one
    neg = f.neg(one)
    x1x3 = (1, 0, 1, 0, 0)
    x2x3 = (0, 1, 1, 0, 0)
    x1x4 = (1, 0, 0, 1, 0)
    x2x4 = (0, 1, 0, 1, 0)
    x3s = (0, 0, 2, 0, 0)
    x4s = (0, 0, 0, 2, 0)
    x1x5 = (1, 0, 0, 0, 1)
    x2x5 = (0, 1, 0, 0, 1)
    gens = [
        ring.from_terms([(x1x3, a), (x2x3, one)]),
        ring.from_terms([(x1x4, one), (x2x4, one)]),
        ring.from_terms([(x3s, one), (x1x5, a), (x2x5, neg)]),
        ring.from_terms([(x4s, one), (x1x5, one), (x2x5, neg)]),
        ring.monomial((2, 0, 0, 0, 0)),
        ring.monomial((0, 2, 0, 0, 0)),
        ring.monomial((0, 0, 1, 1, 0)),
        ring.monomial((0, 0, 1, 0, 1)),
        ring.monomial((0, 0, 0, 1, 1)),
        ring.monomial((0, 0, 0, 0, 2)),
    ]
    return IdealSpec(ring, gens)


def _embed_ideal(I, big_ring, at):
    nb = big_ring.nvars
    ns = I.ring.nvars
    gens = []
    for g in I.gens:
        gens.append(
            big_ring.from_terms(
                ((0,) * at + mono + (0,) * (nb - at - ns), c)
                for mono, c in g.terms.items()
            )
        )
    return IdealSpec(big_ring, gens)


def _s0_ideal(n, varnames=None):
    varnames = varnames or ["x%d" % (i + 1) for i in range(2 * n)]
    ring = PolyRing(RATIONALS, varnames)
    gens = []
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        for ea, eb in ((2, 0), (1, 1), (0, 2)):
            mono = [0] * (2 * n)
            mono[a], mono[b] = ea, eb
            gens.append(ring.monomial(tuple(mono)))
    return IdealSpec(ring, gens)


def _s0_chain(n):
    """Block algebras and their left-nested tensor chain; chain[-1] is
    the full algebra (a plain quotient when n = 1)."""
    blocks = []
    for i in range(n):
        names = ["x%d" % (2 * i + 1), "x%d" % (2 * i + 2)]
        blocks.append(
            quotient_algebra(_s0_ideal(1, varnames=names),
                             name="block%d" % (i + 1))
        )
    chain = [blocks[0]]
    for i in range(1, n):
        chain.append(tensor_algebra(chain[-1], blocks[i]))
    return blocks, chain


def semidualizing_family(n):
    """The 2^n tensor-choice modules over the length-3^n algebra: in
    each block take either the free module or its linear dual, then
    tensor the choices together."""
    blocks, chain = _s0_chain(n)
    A = chain[-1]
    candidates = []
    for bits in product((0, 1), repeat=n):
        M = (
            free_module(blocks[0])
            if bits[0] == 0
            else dualizing_module(blocks[0])
        )
        for i in range(1, n):
            Mi = (
                free_module(blocks[i])
                if bits[i] == 0
                else dualizing_module(blocks[i])
            )
            M = tensor_module(M, Mi, chain[i])
        M.name = "C" + "".join(str(b) for b in bits)
        candidates.append(M)
    return A, candidates


def build(eid, n=None, alpha=2, trunc=10, with_series=False):
    """Assemble the named example's exact objects.

    Returns a dict with the example record plus, depending on the id:
    algebra, ideal (presentation), fiber (profile pair), profile,
    normal_form.
    """
    _check_n(eid, n)
    ex = named_example(eid, n=n, alpha=alpha)
    out = {"example": ex}
    if eid == "JS_A":
        I = _js_a_ideal(alpha)
        out["ideal"] = I
        out["algebra"] = quotient_algebra(I, name="A")
        return out
    if eid == "THM11_R":
        I = _js_a_ideal(alpha)
        ring6 = PolyRing(RATIONALS, ["y", "x1", "x2", "x3", "x4", "x5"])
        IS = _embed_ideal(I, ring6, 1)
        IT = IdealSpec(PolyRing(RATIONALS, ["z"]), [])
        out["ideal"] = fiber_present(IS, IT)
        A = quotient_algebra(I, name="A")
        S = cone_profile(
            artinian_profile(A, with_series=with_series, name="A"),
            name="A[[y]]",
        )
        out["fiber"] = FiberSpec(S, regular_profile(1, name="k[[z]]"))
        return out
    if eid == "THM11_RP":
        A = quotient_algebra(_js_a_ideal(alpha), name="A")
        out["algebra"] = base_change_fraction_field(A, tag="Y")
        return out
    if eid == "THM12_S0":
        out["ideal"] = _s0_ideal(n)
        out["algebra"] = _s0_chain(n)[1][-1]
        return out
    if eid == "THM12_R":
        names = ["x%d" % (i + 1) for i in range(2 * n)] + ["y"]
        ringS = PolyRing(RATIONALS, names)
        IS = _embed_ideal(_s0_ideal(n), ringS, 0)
        IT = IdealSpec(PolyRing(RATIONALS, ["z"]), [])
        out["ideal"] = fiber_present(IS, IT)
        S0 = _s0_chain(n)[1][-1]
        S = cone_profile(
            artinian_profile(S0, with_series=with_series, name="S0"),
            name="S0[[y]]",
        )
        out["fiber"] = FiberSpec(S, regular_profile(1, name="k[[z]]"))
        return out
    if eid == "THM12_RP":
        S0 = _s0_chain(n)[1][-1]
        out["algebra"] = base_change_fraction_field(S0, tag="Y")
        return out
    if eid == "NODE":
        IS = IdealSpec(PolyRing(RATIONALS, ["x"]), [])
        IT = IdealSpec(PolyRing(RATIONALS, ["z"]), [])
        out["ideal"] = fiber_present(IS, IT)
        f = FiberSpec(
            regular_profile(1, name="k[[x]]"),
            regular_profile(1, name="k[[z]]"),
        )
        out["fiber"] = f
        out["normal_form"] = recognized_normal_form(f)
        return out
    if eid == "HYPER":
        ring = PolyRing(RATIONALS, ["x", "y"])
        out["ideal"] = IdealSpec(ring, [ring.parse("x^2 - y^%d" % n)])
        out["profile"] = plane_curve_profile(RATIONALS, n)
        return out
    if eid == "CUSP_FIBER":
        ring2 = PolyRing(RATIONALS, ["x", "y"])
        IS = IdealSpec(ring2, [ring2.parse("x^2 - y^%d" % n)])
        IT = IdealSpec(PolyRing(RATIONALS, ["z"]), [])
        out["ideal"] = fiber_present(IS, IT)
        f = FiberSpec(
            plane_curve_profile(RATIONALS, n),
            regular_profile(1, name="k[[z]]"),
        )
        out["fiber"] = f
        out["normal_form"] = recognized_normal_form(f)
        return out
    raise StructuralError("unknown example id %r" % eid)


def _add_check(checks, cid, computed, expected, citation=None, status=None,
               note=None):
    if status is None:
        status = "PASS" if computed == expected else "FAIL"
    entry = {
        "id": cid,
        "status": status,
        "computed": computed,
        "expected": expected,
    }
    if citation:
        entry["citation"] = citation
    if note:
        entry["note"] = note
    checks.append(entry)


def _verdict(checks):
    statuses = {c["status"] for c in checks}
    if "FAIL" in statuses:
        return "fail"
    if "INCONCLUSIVE" in statuses:
        return "inconclusive"
    return "pass"


def _alpha_note(alpha, notes):
    a = RATIONALS.coerce(alpha)
    if a == RATIONALS.one or a == RATIONALS.neg(RATIONALS.one):
        notes.append(
            "precondition NOT verified: alpha = %s is a root of unity, so "
            "the construction's requirement that alpha have infinite "
            "multiplicative order fails; the computed checks below describe "
            "this specific alpha only" % alpha
        )
    else:
        notes.append(
            "precondition verified: alpha = %s is a nonzero rational other "
            "than 1 and -1, hence of infinite multiplicative order" % alpha
        )


def verify_theorem_1_1(alpha=2, trunc=10, hilbert_max=12):
    """Recompute the numeric claims registered under theorem id 1.1.

    Ten computed checks; the (AC)/(UAC) conclusions themselves are
    beyond a finite computation and are reported as asserted."""
    checks = []
    notes = []
    _alpha_note(alpha, notes)

    ex_a = named_example("JS_A", alpha=alpha)
    A = build("JS_A", alpha=alpha)["algebra"]
    inv = local_invariants(A)
    _add_check(checks, "js_a_length", inv["length"],
               ex_a.expected_value("length"), ex_a.expected["length"][1])
    _add_check(checks, "js_a_edim", inv["edim"],
               ex_a.expected_value("edim"), ex_a.expected["edim"][1])
    _add_check(checks, "js_a_gorenstein", inv["gorenstein"],
               ex_a.expected_value("gorenstein"),
               ex_a.expected["gorenstein"][1])

    ex_r = named_example("THM11_R", alpha=alpha)
    built = build("THM11_R", alpha=alpha)
    f = built["fiber"]
    dim, depth, cm = fiber_dim_depth(f)
    _add_check(checks, "fiber_dim_depth_cm", [dim, depth, cm],
               [ex_r.expected_value("dim"), ex_r.expected_value("depth"),
                ex_r.expected_value("cm")],
               ex_r.expected["dim"][1])
    _add_check(checks, "fiber_type", fiber_type(f),
               ex_r.expected_value("type"), ex_r.expected["type"][1])
    _add_check(checks, "fiber_multiplicity", fiber_multiplicity(f),
               ex_r.expected_value("multiplicity"),
               ex_r.expected["multiplicity"][1])
    _add_check(checks, "fiber_edim_ecodepth",
               [fiber_edim(f), fiber_edim(f) - depth],
               [ex_r.expected_value("edim"), ex_r.expected_value("ecodepth")],
               ex_r.expected["edim"][1])

    try:
        e_direct, _ = stabilized_multiplicity(built["ideal"], hilbert_max)
        _add_check(checks, "direct_multiplicity", e_direct,
                   ex_r.expected_value("multiplicity"),
                   "independent reading of the presentation")
    except InconclusiveError as exc:
        _add_check(checks, "direct_multiplicity", None,
                   ex_r.expected_value("multiplicity"),
                   "independent reading of the presentation",
                   status="INCONCLUSIVE", note=str(exc))

    ex_p = named_example("THM11_RP", alpha=alpha)
    Ap = build("THM11_RP", alpha=alpha)["algebra"]
    invp = local_invariants(Ap)
    _add_check(checks, "localization_invariants",
               [invp["length"], invp["edim"], invp["edim"]],
               [ex_p.expected_value("length"), ex_p.expected_value("edim"),
                ex_p.expected_value("ecodepth")],
               ex_p.expected["length"][1])
    _add_check(checks, "localization_gorenstein", invp["gorenstein"],
               ex_p.expected_value("gorenstein"),
               ex_p.expected["gorenstein"][1])

    return {
        "theorem": "1.1",
        "alpha": str(alpha),
        "bounds": {"trunc": trunc, "hilbert_max": hilbert_max},
        "checks": checks,
        "paper_asserted": [
            {"claim": "the 12-dimensional Gorenstein algebra fails (AC)",
             "citation": "thm 1.1 proof, citing its source construction"},
            {"claim": "R satisfies (UAC) with b = depth(R)",
             "citation": "thm 1.1(a)"},
            {"claim": "the localization fails (AC)",
             "citation": "thm 1.1(c)"},
        ],
        "notes": notes,
        "verdict": _verdict(checks),
    }


def verify_theorem_1_2(n, trunc=10, ext_bound=10, hilbert_max=12):
    """Recompute the invariants and the semidualizing family for one n.

    The family gives a certified lower bound of 2^n pairwise distinct
    semidualizing modules over the artinian core; both 'exactly' counts
    and the flat base-change transfer are asserted, not recomputed."""
    if not (1 <= n <= MAX_N):
        raise StructuralError("n must be between 1 and %d" % MAX_N)
    checks = []
    notes = []

    ex_s0 = named_example("THM12_S0", n=n)
    S0 = build("THM12_S0", n=n)["algebra"]
    inv0 = local_invariants(S0)
    _add_check(checks, "s0_invariants",
               [inv0["length"], inv0["socle_dim"], inv0["edim"]],
               [ex_s0.expected_value("length"), ex_s0.expected_value("type"),
                ex_s0.expected_value("edim")],
               ex_s0.expected["length"][1])

    ex_r = named_example("THM12_R", n=n)
    built = build("THM12_R", n=n)
    f = built["fiber"]
    dim, depth, cm = fiber_dim_depth(f)
    _add_check(checks, "fiber_dim_depth_cm", [dim, depth, cm], [1, 1, True],
               ex_r.expected["dim"][1])
    _add_check(checks, "fiber_type", fiber_type(f),
               ex_r.expected_value("type"), ex_r.expected["type"][1])
    _add_check(checks, "fiber_multiplicity", fiber_multiplicity(f),
               ex_r.expected_value("multiplicity"),
               ex_r.expected["multiplicity"][1])
    _add_check(checks, "fiber_edim_ecodepth",
               [fiber_edim(f), fiber_edim(f) - depth],
               [ex_r.expected_value("edim"), ex_r.expected_value("ecodepth")],
               ex_r.expected["edim"][1])

    try:
        e_direct, _ = stabilized_multiplicity(built["ideal"], hilbert_max)
        _add_check(checks, "direct_multiplicity", e_direct,
                   ex_r.expected_value("multiplicity"),
                   "independent reading of the presentation")
    except InconclusiveError as exc:
        _add_check(checks, "direct_multiplicity", None,
                   ex_r.expected_value("multiplicity"),
                   "independent reading of the presentation",
                   status="INCONCLUSIVE", note=str(exc))

    ex_p = named_example("THM12_RP", n=n)
    Ap = build("THM12_RP", n=n)["algebra"]
    invp = local_invariants(Ap)
    _add_check(checks, "localization_invariants",
               [invp["socle_dim"], invp["length"], invp["edim"]],
               [ex_p.expected_value("type"),
                ex_p.expected_value("multiplicity"),
                ex_p.expected_value("ecodepth")],
               ex_p.expected["type"][1])

    A, candidates = semidualizing_family(n)
    verified = 0
    for C in candidates:
        rep = is_semidualizing(C, bound=ext_bound)
        if rep["verdict"]:
            verified += 1
        else:
            notes.append("candidate %s failed: %r" % (C.name, rep))
    _add_check(checks, "family_all_semidualizing", verified, 2 ** n,
               ex_p.expected["semidualizing_count"][1])
    distinct = 0
    pairs = list(combinations(range(len(candidates)), 2))
    for i, j in pairs:
        if not is_isomorphic(candidates[i], candidates[j]):
            distinct += 1
    _add_check(checks, "family_pairwise_distinct", distinct, len(pairs),
               ex_p.expected["semidualizing_count"][1])
    notes.append(
        "the family certifies at least 2^%d = %d semidualizing modules "
        "over the artinian core at ext bound %d" % (n, 2 ** n, ext_bound)
    )

    return {
        "theorem": "1.2",
        "n": n,
        "bounds": {"trunc": trunc, "ext_bound": ext_bound,
                   "hilbert_max": hilbert_max},
        "checks": checks,
        "paper_asserted": [
            {"claim": "R has exactly two semidualizing modules",
             "citation": ex_r.expected["semidualizing_count"][1]},
            {"claim": "the localization has exactly 2^n semidualizing "
                      "modules",
             "citation": ex_p.expected["semidualizing_count"][1]},
            {"claim": "the semidualizing family transfers along the flat "
                      "base change to the localization",
             "citation": "thm 1.2 proof: flat local extension argument"},
        ],
        "notes": notes,
        "verdict": _verdict(checks),
    }


def _principal_ideal(varname, power):
    ring = PolyRing(RATIONALS, [varname])
    return IdealSpec(ring, [ring.monomial((power,))])


def _mm2_ideal(varnames):
    ring = PolyRing(RATIONALS, varnames)
    nv = ring.nvars
    gens = []
    for i in range(nv):
        for j in range(i, nv):
            mono = [0] * nv
            mono[i] += 1
            mono[j] += 1
            gens.append(ring.monomial(tuple(mono)))
    return IdealSpec(ring, gens)


def _corpus_schedule(seed, count):
    rng = random.Random(seed)
    cases = [("principal", (2, 2))]
    for i in range(1, count):
        if i % 12 == 11:
            cases.append(("mm_mm", None))
        elif i % 5 == 4:
            # exponent pinned at 2: the fiber then stays radical-square
            # zero and the degree-8 direct resolutions stay trivial
            cases.append(("principal_mm", 2))
        else:
            cases.append(
                ("principal", (rng.randint(2, 8), rng.randint(2, 8)))
            )
    return cases


def verify_corpus_formulas(seed=0, count=25, trunc=8):
    """Formula-versus-direct sweep over artinian monomial pairs.

    Each case compares the fiber-calculus series, type, multiplicity and
    embedding dimension against a from-scratch computation on the glued
    presentation; a single mismatch aborts with the presentation."""
    if count < 1:
        raise StructuralError("count must be positive")
    cases = _corpus_schedule(seed, count)
    records = []
    tallies = {"principal": 0, "principal_mm": 0, "mm_mm": 0,
               "depth_rows": {"(0, 0)": 0}}
    dim_limit = 10 ** 7
    for kind, data in cases:
        if kind == "principal":
            a, b = data
            IS = _principal_ideal("x", a)
            IT = _principal_ideal("z", b)
            label = "k[x]/(x^%d) | k[z]/(z^%d)" % (a, b)
        elif kind == "principal_mm":
            IS = _principal_ideal("x", data)
            IT = _mm2_ideal(["z", "w"])
            label = "k[x]/(x^%d) | k[z,w]/(z,w)^2" % data
        else:
            IS = _mm2_ideal(["x", "y"])
            IT = _mm2_ideal(["z", "w"])
            label = "k[x,y]/(x,y)^2 | k[z,w]/(z,w)^2"
        S = quotient_algebra(IS, name="S")
        T = quotient_algebra(IT, name="T")
        pS = artinian_profile(S, trunc=trunc)
        pT = artinian_profile(T, trunc=trunc)
        f = FiberSpec(pS, pT)
        P_f = fiber_poincare_k(pS.poincare_k, pT.poincare_k, trunc=trunc)
        B_f = fiber_bass_series(f, trunc)
        type_f = fiber_type(f)
        e_f = fiber_multiplicity(f)
        edim_f = fiber_edim(f)
        J = fiber_present(IS, IT)
        R = quotient_algebra(J, name="R")
        inv = local_invariants(R)
        P_d = poincare_series(R, trunc, dim_limit=dim_limit)
        B_d = bass_series(R, trunc, dim_limit=dim_limit)
        agree = {
            "poincare": list(P_f.coeffs) == list(P_d.coeffs),
            "bass": list(B_f.coeffs) == list(B_d.coeffs),
            "type": type_f == inv["socle_dim"],
            "multiplicity": e_f == inv["length"],
            "edim": edim_f == inv["edim"],
        }
        if not all(agree.values()):
            raise StructuralError(
                "formula/direct mismatch on %s: ideal (%s); %r; "
                "formula P=%r B=%r type=%r e=%r edim=%r; "
                "direct P=%r B=%r type=%r length=%r edim=%r"
                % (
                    label,
                    ", ".join(repr(g) for g in J.gens),
                    agree,
                    list(P_f.coeffs), list(B_f.coeffs), type_f, e_f, edim_f,
                    list(P_d.coeffs), list(B_d.coeffs),
                    inv["socle_dim"], inv["length"], inv["edim"],
                )
            )
        tallies[kind] += 1
        tallies["depth_rows"]["(0, 0)"] += 1
        records.append({
            "case": label,
            "kind": kind,
            "length": inv["length"],
            "type": type_f,
            "multiplicity": e_f,
            "edim": edim_f,
            "poincare": [int(c) for c in P_f.coeffs],
            "bass": [int(c) for c in B_f.coeffs],
            "agree": agree,
        })
    return {
        "theorem": "corpus",
        "seed": seed,
        "count": count,
        "bounds": {"trunc": trunc},
        "cases": records,
        "tallies": tallies,
        "paper_asserted": [],
        "notes": [
            "all pairs are artinian, so only the depth-(0,0) row of the "
            "type table is exercised here; the deeper rows are covered by "
            "the cone constructions in the named examples",
        ],
        "checks": [],
        "verdict": "pass",
    }
