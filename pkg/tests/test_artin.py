import pytest

from ringbench.artin import (
    base_change_fraction_field,
    field_algebra,
    local_invariants,
    quotient_algebra,
    tensor_algebra,
)
from ringbench.errors import NotCofiniteError
from ringbench.groebner import IdealSpec
from ringbench.poly import PolyRing
from ringbench.scalars import Rationals

Q = Rationals()


def alg(varnames, texts, name=None):
    ring = PolyRing(Q, varnames)
    return quotient_algebra(
        IdealSpec(ring, [ring.parse(t) for t in texts]), name=name)


def test_dual_numbers():
    A = alg(["x"], ["x^2"])
    inv = local_invariants(A)
    assert inv["length"] == 2
    assert inv["edim"] == 1
    assert inv["socle_dim"] == 1
    assert inv["gorenstein"]
    assert inv["loewy_length"] == 2


def test_m_squared_zero():
    A = alg(["x", "y"], ["x^2", "x*y", "y^2"])
    inv = local_invariants(A)
    assert (inv["length"], inv["edim"], inv["socle_dim"]) == (3, 2, 2)
    assert not inv["gorenstein"]
    assert A.msquare_dim() == 0


def test_monomial_socle_and_msquare():
    # basis 1, x, y, y^2; socle spanned by x and y^2
    A = alg(["x", "y"], ["x^2", "x*y", "y^3"])
    inv = local_invariants(A)
    assert inv["length"] == 4
    assert inv["socle_dim"] == 2
    assert A.msquare_dim() == 1
    assert len(A.socle_vectors()) == 2


def test_structure_constants_associative():
    A = alg(["x", "y"], ["x^3", "x*y", "y^2"])
    n = A.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = A.mul_vec(A.table(i, j), {k: Q.one})
                right = A.mul_vec({i: Q.one}, A.table(j, k))
                assert left == right


def test_field_algebra():
    k = field_algebra(Q)
    inv = local_invariants(k)
    assert inv["length"] == 1 and inv["edim"] == 0
    assert inv["gorenstein"]


def test_not_cofinite_refused():
    ring = PolyRing(Q, ["x", "y"])
    with pytest.raises(NotCofiniteError):
        quotient_algebra(IdealSpec(ring, [ring.parse("x^2")]))


def test_tensor_lengths_multiply():
    A = alg(["x"], ["x^2"])
    B = alg(["y", "z"], ["y^2", "y*z", "z^2"])
    AB = tensor_algebra(A, B)
    ia, ib, iab = (local_invariants(X) for X in (A, B, AB))
    assert iab["length"] == ia["length"] * ib["length"]
    assert iab["edim"] == ia["edim"] + ib["edim"]
    assert iab["socle_dim"] == ia["socle_dim"] * ib["socle_dim"]


def test_tensor_gorenstein_product():
    A = alg(["x"], ["x^3"])
    B = alg(["y"], ["y^2"])
    assert local_invariants(tensor_algebra(A, B))["gorenstein"]


def test_base_change_keeps_invariants():
    A = alg(["x", "y"], ["x^2", "x*y", "y^2"])
    Ay = base_change_fraction_field(A)
    inv = local_invariants(Ay)
    assert (inv["length"], inv["edim"], inv["socle_dim"]) == (3, 2, 2)
    assert Ay.field.describe() == "Q(Y)"
