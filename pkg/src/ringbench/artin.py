"""Finite-dimensional local algebras and their modules.

An ArtinAlgebra is a monomial basis plus structure constants; a ModRep is
a vector space with one action matrix per ambient variable.  Everything is
validated at construction: associativity and unitality on all basis
triples, nilpotency of the span of the non-unit basis (so the algebra
really is local), commutation and table consistency for module actions.
"""

import random

from .errors import InconclusiveError, NotCofiniteError, StructuralError
from .groebner import buchberger, is_cofinite, normal_form, standard_monomials
from .linalg import (
    Eliminator,
    nullspace_of_rows,
    rank_of_rows,
    span_basis,
    vec_add_scaled,
)
from .poly import grevlex_key, mono_degree, mono_mul
from .scalars import FractionField, Rationals


class ArtinAlgebra:
    __slots__ = (
        "field",
        "vars",
        "basis",
        "index",
        "degrees",
        "graded",
        "mult",
        "var_images",
        "var_actions",
        "provenance",
        "name",
        "_socle",
        "_loewy",
    )

    def __init__(
        self,
        field,
        variables,
        basis,
        mult,
        degrees,
        graded,
        provenance,
        name=None,
        var_images=None,
        validate=True,
    ):
        self.field = field
        self.vars = tuple(variables)
        self.basis = list(basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.degrees = list(degrees)
        self.graded = graded
        self.mult = mult  # mult[i][j] for i <= j: sparse dict
        self.provenance = provenance
        self.name = name or "algebra"
        self._socle = None
        self._loewy = None
        self.var_images = var_images or {
            v: self._var_basis_vec(v) for v in self.vars
        }
        self.var_actions = {
            v: [self.mul_basis(self.var_images[v], j) for j in range(self.dim)]
            for v in self.vars
        }
        if validate:
            self._validate()

    @property
    def dim(self):
        return len(self.basis)

    def unit_vector(self):
        return {0: self.field.one}

    def _var_basis_vec(self, v):
        i = self.vars.index(v)
        mono = tuple(1 if k == i else 0 for k in range(len(self.vars)))
        j = self.index.get(mono)
        if j is None:
            raise StructuralError(
                "variable %s reduces; pass var_images explicitly" % v
            )
        return {j: self.field.one}

    def table(self, i, j):
        if i > j:
            i, j = j, i
        return self.mult[i][j - i]

    def mul_basis(self, vec_or_index, j):
        """Multiply a sparse vector (or basis index) by basis element j."""
        field = self.field
        if isinstance(vec_or_index, int):
            return dict(self.table(vec_or_index, j))
        out = {}
        for i, c in vec_or_index.items():
            vec_add_scaled(out, self.table(i, j), c, field)
        return out

    def mul_vec(self, a, b):
        field = self.field
        out = {}
        for j, c in b.items():
            vec_add_scaled(out, self.mul_basis(a, j), c, field)
        return out

    def basis_action_on(self, columns, b_idx):
        """Columns of mult-by-basis-element b_idx against arbitrary module
        columns is not defined here; this is algebra-on-itself only."""
        raise NotImplementedError

    def _validate(self):
        field = self.field
        n = self.dim
        if not self.basis or mono_degree(self.basis[0]) != 0:
            raise StructuralError("basis[0] must be the unit monomial")
        for j in range(n):
            if self.table(0, j) != {j: field.one}:
                raise StructuralError("unit row broken at basis %d" % j)
        for i in range(1, n):
            for j in range(i, n):
                left = self.table(i, j)
                for k in range(j, n):
                    # (e_i e_j) e_k == e_i (e_j e_k)
                    a = self.mul_basis(left, k)
                    b = self.mul_vec({i: field.one}, self.table(j, k))
                    if a != b:
                        raise StructuralError(
                            "associativity fails at (%d, %d, %d)" % (i, j, k)
                        )
        # the non-unit span must be nilpotent, otherwise not local
        self.loewy_length()

    def radical_power_dims(self):
        """Dims of m^0 > m^1 > ... down to zero.  Also certifies locality."""
        field = self.field
        current = span_basis(
            [{i: field.one} for i in range(1, self.dim)], field
        )
        dims = [self.dim, len(current)]
        guard = 0
        while current:
            nxt = []
            for row in current:
                for i in range(1, self.dim):
                    nxt.append(self.mul_basis(row, i))
            current = span_basis(nxt, field)
            dims.append(len(current))
            guard += 1
            if guard > self.dim + 1:
                raise StructuralError(
                    "%s is not local: non-unit span is not nilpotent" % self.name
                )
        while dims and dims[-1] == 0 and len(dims) >= 2 and dims[-2] == 0:
            dims.pop()
        return dims

    def loewy_length(self):
        if self._loewy is None:
            dims = self.radical_power_dims()
            # dims = [dim m^0, dim m^1, ..., 0]
            self._loewy = len(dims) - 1
        return self._loewy

    def socle_vectors(self):
        """Basis of the annihilator of the maximal ideal."""
        if self._socle is None:
            field = self.field
            rows = []
            nv = len(self.vars)
            for j in range(self.dim):
                row = {}
                for vi, v in enumerate(self.vars):
                    for i, c in self.var_actions[v][j].items():
                        row[vi * self.dim + i] = c
                rows.append(row)
            self._socle = nullspace_of_rows(rows, field)
            if nv == 0:
                self._socle = [{j: field.one} for j in range(self.dim)]
        return self._socle

    def msquare_dim(self):
        field = self.field
        rows = []
        for i in range(1, self.dim):
            for j in range(i, self.dim):
                rows.append(dict(self.table(i, j)))
        return rank_of_rows(rows, field)

    def describe(self):
        return "%s over %s" % (self.name, self.field.describe())

    def __repr__(self):
        return "ArtinAlgebra(%s, dim %d)" % (self.name, self.dim)


def quotient_algebra(I, G=None, name=None):
    """ArtinAlgebra presented by a cofinite ideal.

    Basis = standard monomials (degree, then grevlex); products via normal
    form.  Raises when the ideal is not cofinite or the quotient fails the
    locality check.
    """
    if G is None:
        G = buchberger(I)
    if not is_cofinite(G):
        # reuse the error path of the enumerator
        standard_monomials(G, assert_cofinite=True)
    ring = I.ring
    field = ring.field
    basis = standard_monomials(G)
    index = {m: i for i, m in enumerate(basis)}
    monomial_ideal = I.monomial

    def reduce_mono(mono):
        if monomial_ideal:
            j = index.get(mono)
            return {j: field.one} if j is not None else {}
        nf = normal_form(ring.monomial(mono), G)
        return {index[m]: c for m, c in nf.terms.items()}

    n = len(basis)
    mult = []
    for i in range(n):
        row = []
        for j in range(i, n):
            row.append(reduce_mono(mono_mul(basis[i], basis[j])))
        mult.append(row)
    degrees = [mono_degree(m) for m in basis]
    nv = len(ring.variables)
    var_images = {}
    for vi, v in enumerate(ring.variables):
        mono = tuple(1 if k == vi else 0 for k in range(nv))
        var_images[v] = reduce_mono(mono)
    return ArtinAlgebra(
        field,
        ring.variables,
        basis,
        mult,
        degrees,
        graded=I.homogeneous,
        provenance=("quotient", I, G),
        name=name or "quotient",
        var_images=var_images,
    )


def field_algebra(field, name="k"):
    """The residue field as a 0-variable algebra."""
    return ArtinAlgebra(
        field,
        (),
        [()],
        [[{0: field.one}]],
        [0],
        graded=True,
        provenance=("field",),
        name=name,
    )


def local_invariants(A):
    socle = A.socle_vectors()
    m_dim = A.dim - 1
    m2 = A.msquare_dim()
    out = {
        "length": A.dim,
        "edim": m_dim - m2,
        "socle_dim": len(socle),
        "loewy_length": A.loewy_length(),
    }
    out["gorenstein"] = out["socle_dim"] == 1
    return out


def tensor_algebra(A, B, name=None):
    """A tensor_k B with the product structure constants."""
    if A.field != B.field:
        raise StructuralError("tensor factors over different fields")
    if set(A.vars) & set(B.vars):
        raise StructuralError("tensor factors share variable names")
    field = A.field
    pairs = [(i, j) for i in range(A.dim) for j in range(B.dim)]
    monos = {
        (i, j): A.basis[i] + B.basis[j] for (i, j) in pairs
    }
    pairs.sort(key=lambda p: (mono_degree(monos[p]), grevlex_key(monos[p])))
    basis = [monos[p] for p in pairs]
    pos = {p: t for t, p in enumerate(pairs)}
    n = len(pairs)
    mult = []
    for t1 in range(n):
        i1, j1 = pairs[t1]
        row = []
        for t2 in range(t1, n):
            i2, j2 = pairs[t2]
            va = A.table(i1, i2)
            vb = B.table(j1, j2)
            out = {}
            for a, ca in va.items():
                for b, cb in vb.items():
                    out[pos[(a, b)]] = field.mul(ca, cb)
            row.append(out)
        mult.append(row)
    degrees = [mono_degree(m) for m in basis]
    var_images = {}
    for v in A.vars:
        var_images[v] = {
            pos[(a, 0)]: c for a, c in A.var_images[v].items()
        }
    for v in B.vars:
        var_images[v] = {
            pos[(0, b)]: c for b, c in B.var_images[v].items()
        }
    return ArtinAlgebra(
        field,
        A.vars + B.vars,
        basis,
        mult,
        degrees,
        graded=A.graded and B.graded,
        provenance=("tensor", A, B),
        name=name or "%s (x) %s" % (A.name, B.name),
        var_images=var_images,
    )


def base_change_fraction_field(A, tag="Y"):
    """Same basis and tables, base retagged to Q(tag).

    Models reading the algebra over the fraction field of a formally
    adjoined variable; every structure constant is already rational so
    nothing else moves.
    """
    if not isinstance(A.field, Rationals):
        raise StructuralError("base change starts from Q")
    field = FractionField(var=tag)
    return ArtinAlgebra(
        field,
        A.vars,
        A.basis,
        A.mult,
        A.degrees,
        A.graded,
        provenance=("basechange", A, tag),
        name="%s over Q(%s)" % (A.name, tag),
        var_images=A.var_images,
        validate=False,
    )


class ModRep:
    """Finitely generated module: dimension + one matrix per variable.

    actions[v] is a list of sparse columns: v . e_j = actions[v][j].
    """

    __slots__ = ("algebra", "dim", "actions", "degrees", "provenance", "name",
                 "_basis_act")

    def __init__(self, algebra, dim, actions, degrees=None, provenance=None,
                 name=None, validate=True):
        self.algebra = algebra
        self.dim = dim
        self.actions = actions
        self.degrees = degrees
        self.provenance = provenance or ("opaque",)
        self.name = name or "module"
        self._basis_act = {}
        if validate:
            self._validate()

    def act_var(self, v, vec):
        field = self.algebra.field
        cols = self.actions[v]
        out = {}
        for j, c in vec.items():
            vec_add_scaled(out, cols[j], c, field)
        return out

    def act_basis_columns(self, b_idx):
        """Columns of mult by algebra basis element b_idx, cached."""
        got = self._basis_act.get(b_idx)
        if got is not None:
            return got
        A = self.algebra
        field = A.field
        if b_idx == 0:
            cols = [{j: field.one} for j in range(self.dim)]
        else:
            mono = A.basis[b_idx]
            cols = [{j: field.one} for j in range(self.dim)]
            for vi, e in enumerate(mono):
                v = A.vars[vi]
                for _ in range(e):
                    cols = [self.act_var(v, c) for c in cols]
        self._basis_act[b_idx] = cols
        return cols

    def act_algebra_vec(self, avec, vec):
        field = self.algebra.field
        out = {}
        for b, c in avec.items():
            cols = self.act_basis_columns(b)
            tmp = {}
            for j, x in vec.items():
                vec_add_scaled(tmp, cols[j], x, field)
            vec_add_scaled(out, tmp, c, field)
        return out

    def validate(self):
        self._validate()
        return True

    def _validate(self):
        A = self.algebra
        field = A.field
        for v in A.vars:
            if len(self.actions[v]) != self.dim:
                raise StructuralError("action of %s has wrong shape" % v)
        # table consistency: action of e_i composed with e_j matches the
        # action of the product e_i e_j, on every basis vector of M
        for i in range(1, A.dim):
            ci = self.act_basis_columns(i)
            for j in range(i, A.dim):
                cj = self.act_basis_columns(j)
                prod = A.table(i, j)
                for t in range(self.dim):
                    via = {}
                    for l, c in cj[t].items():
                        vec_add_scaled(via, ci[l], c, field)
                    direct = {}
                    for b, c in prod.items():
                        vec_add_scaled(
                            direct, self.act_basis_columns(b)[t], c, field
                        )
                    if via != direct:
                        raise StructuralError(
                            "module action inconsistent at (%d, %d)" % (i, j)
                        )

    def mu(self):
        """Minimal generator count = dim of M / mM."""
        return self.dim - self.radical_image_dim()

    def radical_image_dim(self):
        field = self.algebra.field
        rows = []
        for v in self.algebra.vars:
            rows.extend(dict(c) for c in self.actions[v])
        return rank_of_rows(rows, field)

    def socle_dim(self):
        field = self.algebra.field
        rows = []
        n = self.dim
        for j in range(n):
            row = {}
            for vi, v in enumerate(self.algebra.vars):
                for i, c in self.actions[v][j].items():
                    row[vi * n + i] = c
            rows.append(row)
        if not self.algebra.vars:
            return n
        return len(nullspace_of_rows(rows, field))

    def radical_chain_dims(self):
        """dim M, dim mM, dim m^2 M, ... down to 0."""
        field = self.algebra.field
        current = span_basis([{j: field.one} for j in range(self.dim)], field)
        dims = [len(current)]
        while current:
            nxt = []
            for row in current:
                for v in self.algebra.vars:
                    nxt.append(self.act_var(v, row))
            current = span_basis(nxt, field)
            if not current:
                dims.append(0)
                break
            if len(current) == dims[-1]:
                raise StructuralError("module radical chain does not terminate")
            dims.append(len(current))
        return dims

    def fingerprint(self):
        return (
            self.dim,
            self.mu(),
            self.socle_dim(),
            tuple(self.radical_chain_dims()),
        )

    def __repr__(self):
        return "ModRep(%s over %s, dim %d)" % (self.name, self.algebra.name, self.dim)


def free_module(A, rank=1, name=None):
    field = A.field
    n = A.dim
    actions = {}
    for v in A.vars:
        cols = []
        for r in range(rank):
            for j in range(n):
                cols.append(
                    {r * n + i: c for i, c in A.var_actions[v][j].items()}
                )
        actions[v] = cols
    degrees = None
    if A.graded:
        degrees = [d for _ in range(rank) for d in A.degrees]
    return ModRep(
        A,
        rank * n,
        actions,
        degrees=degrees,
        provenance=("free", rank),
        name=name or ("free rank %d" % rank),
        validate=False,
    )


def k_module(A, name="k"):
    actions = {v: [{}] for v in A.vars}
    return ModRep(
        A, 1, actions, degrees=[0], provenance=("residue",), name=name,
        validate=False,
    )


def dualizing_module(A, name=None):
    """Linear dual of the algebra with the contragredient action.

    v . e_j* picks up the j-th coordinates of mult-by-v, so the action
    matrices are the transposes of the algebra's.
    """
    field = A.field
    n = A.dim
    actions = {}
    for v in A.vars:
        cols_alg = A.var_actions[v]
        cols = [dict() for _ in range(n)]
        for j in range(n):
            for i, c in cols_alg[j].items():
                cols[i][j] = c
        actions[v] = cols
    degrees = None
    if A.graded:
        top = max(A.degrees)
        degrees = [top - d for d in A.degrees]
    return ModRep(
        A,
        n,
        actions,
        degrees=degrees,
        provenance=("dual", A),
        name=name or ("dual of %s" % A.name),
        validate=False,
    )


def tensor_module(M, N, AB=None, name=None):
    """M (x) N over tensor_algebra(M.algebra, N.algebra)."""
    A, B = M.algebra, N.algebra
    if AB is None:
        AB = tensor_algebra(A, B)
    if AB.provenance[0] != "tensor" or AB.provenance[1] is not A or AB.provenance[2] is not B:
        raise StructuralError("target algebra is not the factors' tensor product")
    field = AB.field
    dm, dn = M.dim, N.dim
    dim = dm * dn

    def idx(i, j):
        return i * dn + j

    actions = {}
    for v in A.vars:
        cols = []
        for i in range(dm):
            col_m = M.actions[v][i]
            for j in range(dn):
                cols.append({idx(i2, j): c for i2, c in col_m.items()})
        actions[v] = cols
    for v in B.vars:
        cols = []
        for i in range(dm):
            for j in range(dn):
                col_n = N.actions[v][j]
                cols.append({idx(i, j2): c for j2, c in col_n.items()})
        actions[v] = cols
    degrees = None
    if M.degrees is not None and N.degrees is not None:
        degrees = [M.degrees[i] + N.degrees[j] for i in range(dm) for j in range(dn)]
    return ModRep(
        AB,
        dim,
        actions,
        degrees=degrees,
        provenance=("tensor", M, N),
        name=name or "%s (x) %s" % (M.name, N.name),
        validate=False,
    )


def hom_space(M, N):
    """Basis of Hom_A(M, N) as sparse matrices {(i, j): c} with T e_j^M =
    sum_i T[i, j] e_i^N.  Solved as the intertwiner system."""
    if M.algebra is not N.algebra and M.algebra != N.algebra:
        raise StructuralError("hom between modules over different algebras")
    A = M.algebra
    field = A.field
    dm, dn = M.dim, N.dim

    def unknown(i, j):
        return i * dm + j

    # constraint rows, transposed on the fly: per unknown a sparse row over
    # constraint indices
    transposed = {}
    cidx = 0
    for v in A.vars:
        actM = M.actions[v]
        actN = N.actions[v]
        rowsN = [dict() for _ in range(dn)]
        for col, colv in enumerate(actN):
            for r, c in colv.items():
                rowsN[r][col] = c
        for j in range(dm):
            for k in range(dn):
                # sum_l actM[j][l] T[k, l] - sum_i rowsN[k][i] T[i, j] = 0
                row = {}
                for l, c in actM[j].items():
                    u = unknown(k, l)
                    row[u] = field.add(row.get(u, field.zero), c)
                for i, c in rowsN[k].items():
                    u = unknown(i, j)
                    acc = field.sub(row.get(u, field.zero), c)
                    if field.is_zero(acc):
                        row.pop(u, None)
                    else:
                        row[u] = acc
                if row:
                    for u, c in row.items():
                        transposed.setdefault(u, {})[cidx] = c
                    cidx += 1
    nunk = dm * dn
    rows = [transposed.get(u, {}) for u in range(nunk)]
    combos = nullspace_of_rows(rows, field)
    out = []
    for combo in combos:
        out.append({(u // dm, u % dm): c for u, c in combo.items()})
    return out


def _joint_image_dim(homs, field):
    rows = []
    for T in homs:
        cols = {}
        for (i, j), c in T.items():
            cols.setdefault(j, {})[i] = c
        rows.extend(cols.values())
    return rank_of_rows(rows, field)


def _common_kernel_dim(homs, dm, ceiling, field):
    # x with T x = 0 for every T: stack all homs into one tall matrix and
    # take the kernel; row j of the system collects column j of each T
    stacked = [dict() for _ in range(dm)]
    for t, T in enumerate(homs):
        for (i, j), c in T.items():
            stacked[j][t * ceiling + i] = c
    return len(nullspace_of_rows(stacked, field))


def _tensor_slots(module):
    """Flatten tensor provenance into per-factor slot modules, or None."""
    prov = module.provenance
    if prov[0] == "tensor":
        left = _tensor_slots(prov[1])
        right = _tensor_slots(prov[2])
        if left is None or right is None:
            return None
        return left + right
    if prov[0] in ("free", "dual", "residue", "opaque"):
        return [module]
    return [module]


def _hom_obstructed(M, N):
    """True when Hom(M, N) contains no surjection or no injection, which
    rules out an isomorphism; transports across tensor factors."""
    field = M.algebra.field
    homs = hom_space(M, N)
    if not homs:
        return N.dim > 0 or M.dim > 0
    if _joint_image_dim(homs, field) < N.dim:
        return True
    if _common_kernel_dim(homs, M.dim, N.dim, field) > 0:
        return True
    return False


def is_isomorphic(M, N, seed=0, tries=60):
    """Decide M ~ N over a common algebra.

    Invariant short-circuits, then obstruction certificates (joint image,
    common kernel, factored through tensor slots when both sides carry
    them), then a seeded random search for an invertible intertwiner, then
    a symbolic determinant for small systems.  Raises InconclusiveError
    rather than guessing.
    """
    if M.algebra is not N.algebra and M.algebra != N.algebra:
        raise StructuralError("modules over different algebras")
    field = M.algebra.field
    if M is N:
        return True
    if M.fingerprint() != N.fingerprint():
        return False
    if M.dim == 0:
        return True

    slots_m = _tensor_slots(M)
    slots_n = _tensor_slots(N)
    if (
        slots_m is not None
        and slots_n is not None
        and len(slots_m) == len(slots_n) > 1
        and all(
            a.algebra is b.algebra or a.algebra == b.algebra
            for a, b in zip(slots_m, slots_n)
        )
    ):
        verdicts = []
        for a, b in zip(slots_m, slots_n):
            try:
                verdicts.append(is_isomorphic(a, b, seed=seed, tries=tries))
            except InconclusiveError:
                verdicts.append(None)
        if all(v is True for v in verdicts):
            return True
        # a slot obstruction transports to the tensor in either direction
        for a, b in zip(slots_m, slots_n):
            if _hom_obstructed(a, b) or _hom_obstructed(b, a):
                return False

    if _hom_obstructed(M, N) or _hom_obstructed(N, M):
        return False

    homs = hom_space(M, N)
    if not homs:
        return False
    n = M.dim
    rng = random.Random(seed)
    for _ in range(tries):
        combo = [rng.randint(-3, 3) for _ in homs]
        T = {}
        for c, H in zip(combo, homs):
            if c == 0:
                continue
            cc = field.coerce(c)
            for key, val in H.items():
                acc = field.add(T.get(key, field.zero), field.mul(cc, val))
                if field.is_zero(acc):
                    T.pop(key, None)
                else:
                    T[key] = acc
        rows = [dict() for _ in range(n)]
        for (i, j), c in T.items():
            rows[i][j] = c
        if rank_of_rows(rows, field) == n:
            return True

    if n <= 8 and len(homs) <= 10:
        import sympy

        params = sympy.symbols("c0:%d" % len(homs))
        mat = sympy.zeros(n, n)
        for p, H in zip(params, homs):
            for (i, j), c in H.items():
                mat[i, j] += p * sympy.Rational(str(c))
        det = mat.det(method="berkowitz")
        det = sympy.expand(det)
        return det != 0

    raise InconclusiveError(
        "isomorphism test exhausted its certificates for %s vs %s" % (M.name, N.name)
    )
