"""LU decomposition over the fraction field and MF3 promotion."""

import random

import pytest

from polymf3 import (
    MF2,
    MF3,
    CertificateError,
    RatMatrix,
    RationalFunction,
    SingularPivotError,
    StructurallySingularError,
    VarContext,
    lu_decompose,
    promote,
)
from conftest import random_fraction_matrix


def cofactor_det(m):
    """Naive cofactor-expansion determinant oracle."""
    n = m.rows
    if n == 1:
        return m[0, 0]
    total = RationalFunction.zero(m.context)
    for j in range(n):
        if m[0, j].is_zero:
            continue
        minor_rows = [
            [m[i, k] for k in range(n) if k != j] for i in range(1, n)
        ]
        minor = RatMatrix(m.context, n - 1, n - 1, [e for row in minor_rows for e in row])
        term = m[0, j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total




def assert_triangular(result):
    L, U, n = result.L, result.U, result.L.rows
    one = RationalFunction.one(L.context)
    zero = RationalFunction.zero(L.context)
    for i in range(n):
        for j in range(n):
            if j > i:
                assert L[i, j] == zero
            if j < i:
                assert U[i, j] == zero
    if result.method == "doolittle":
        assert all(L[i, i] == one for i in range(n))
    else:
        assert all(U[i, i] == one for i in range(n))


@pytest.fixture
def ctx():
    return VarContext("x y z")


@pytest.fixture
def gens(ctx):
    return ctx.gens()


def test_doolittle_rotation_example(ctx, gens):
    x, y, _ = gens
    res = lu_decompose(RatMatrix.from_rows(ctx, [[x, -y], [y, x]]), "doolittle")
    assert res.L == RatMatrix.from_rows(ctx, [[1, 0], [y / x, 1]])
    assert res.U == RatMatrix.from_rows(ctx, [[x, -y], [0, x + (y**2) / x]])
    assert res.permutation is None
    assert_triangular(res)


def test_doolittle_mixed_example(ctx, gens):
    x, y, z = gens
    res = lu_decompose(RatMatrix.from_rows(ctx, [[x * y, -z], [x**2, z]]), "doolittle")
    assert res.L == RatMatrix.from_rows(ctx, [[1, 0], [x / y, 1]])
    assert res.U == RatMatrix.from_rows(ctx, [[x * y, -z], [0, z + (z * x) / y]])


def test_identity_input(ctx):
    for method in ("doolittle", "crout"):
        res = lu_decompose(RatMatrix.identity(ctx, 3), method)
        assert res.L == RatMatrix.identity(ctx, 3)
        assert res.U == RatMatrix.identity(ctx, 3)


def test_lu_round_trip_randomized(ctx):
    rng = random.Random(79)
    done = 0
    while done < 12:
        n = rng.randint(1, 4)
        a = random_fraction_matrix(rng, ctx, n)
        for method in ("doolittle", "crout"):
            try:
                res = lu_decompose(a, method, pivot=True)
            except StructurallySingularError:
                break
            product = res.L @ res.U
            expected = a if res.permutation is None else res.permutation.apply_rows(a)
            assert product == expected
            assert_triangular(res)
        else:
            done += 1


def test_crout_doolittle_duality(ctx):
    rng = random.Random(83)
    for _ in range(6):
        a = random_fraction_matrix(rng, ctx, 3)
        try:
            crout = lu_decompose(a, "crout")
            dool = lu_decompose(a.transpose(), "doolittle")
        except (SingularPivotError, StructurallySingularError):
            continue
        assert crout.L == dool.U.transpose()
        assert crout.U == dool.L.transpose()


def test_zero_pivot_policy(ctx, gens):
    x, y, _ = gens
    a = RatMatrix.from_rows(ctx, [[0, x], [y, 0]])
    with pytest.raises(SingularPivotError) as err:
        lu_decompose(a, "doolittle")
    assert err.value.order == 1
    res = lu_decompose(a, "doolittle", pivot=True)
    assert res.permutation is not None
    assert res.L @ res.U == res.permutation.apply_rows(a)


def test_structurally_singular(ctx, gens):
    x, _, _ = gens
    singular = RatMatrix.from_rows(ctx, [[x, x], [x, x]])
    with pytest.raises(StructurallySingularError):
        lu_decompose(singular, "doolittle", pivot=True)


def test_promote_first_doolittle(ctx, gens):
    x, y, _ = gens
    pair = MF2(
        RatMatrix.from_rows(ctx, [[x, -y], [y, x]]),
        RatMatrix.from_rows(ctx, [[x, y], [-y, x]]),
        x**2 + y**2,
    )
    triple = promote(pair, "first", "doolittle")
    assert triple.A1 == RatMatrix.from_rows(ctx, [[1, 0], [y / x, 1]])
    assert triple.A2 == RatMatrix.from_rows(ctx, [[x, -y], [0, x + (y**2) / x]])
    assert triple.A3 == pair.Q
    assert triple.provenance.method == "doolittle"
    assert triple.provenance.decomposed == "first"
    assert not triple.provenance.pivoted


def test_promote_mixed_target(ctx, gens):
    x, y, z = gens
    pair = MF2(
        RatMatrix.from_rows(ctx, [[x * y, -z], [x**2, z]]),
        RatMatrix.from_rows(ctx, [[z, z], [-(x**2), x * y]]),
        x * y * z + z * x**2,
    )
    triple = promote(pair, "first", "doolittle")
    assert triple.A1[1, 0] == x / y
    assert triple.A2[1, 1] == z + (z * x) / y
    assert triple.target == x * y * z + z * x**2


def test_promote_second_and_crout(ctx, gens):
    x, y, _ = gens
    pair = MF2(
        RatMatrix.from_rows(ctx, [[x, -y], [y, x]]),
        RatMatrix.from_rows(ctx, [[x, y], [-y, x]]),
        x**2 + y**2,
    )
    second = promote(pair, "second", "doolittle")
    assert second.A1 == pair.P
    assert second.A2 @ second.A3 == pair.Q
    crout = promote(pair, "first", "crout")
    assert crout.A1 @ crout.A2 == pair.P
    assert crout.A2[0, 0] == 1 and crout.A2[1, 1] == 1


def test_promote_trivial(ctx, gens):
    x, y, _ = gens
    f = x**3 + y**2
    pair = MF2(RatMatrix.from_rows(ctx, [[f]]), RatMatrix.identity(ctx, 1), f)
    triple = promote(pair, "first", "doolittle")
    assert [triple.A1[0, 0], triple.A2[0, 0], triple.A3[0, 0]] == [1, f, 1]


def test_promote_with_pivoting_keeps_certificate(ctx, gens):
    x, y, _ = gens
    swapped = RatMatrix.from_rows(ctx, [[0, x], [y, 0]])
    pair = MF2(swapped, RatMatrix.from_rows(ctx, [[0, x], [y, 0]]), x * y)
    with pytest.raises(SingularPivotError):
        promote(pair, "first", "doolittle")
    triple = promote(pair, "first", "doolittle", pivot=True)
    assert triple.provenance.pivoted
    assert triple.A1 @ triple.A2 == pair.P


def test_triplet_certification(ctx, gens):
    x, y, z = gens
    one = RatMatrix.identity(ctx, 1)
    ok = MF3(
        RatMatrix.from_rows(ctx, [[x]]),
        RatMatrix.from_rows(ctx, [[y]]),
        RatMatrix.from_rows(ctx, [[z]]),
        x * y * z,
    )
    assert ok.size == 1
    assert MF3(one, one, RatMatrix.from_rows(ctx, [[x * y]]), x * y).size == 1
    with pytest.raises(CertificateError):
        MF3(
            RatMatrix.from_rows(ctx, [[x]]),
            RatMatrix.from_rows(ctx, [[y]]),
            RatMatrix.from_rows(ctx, [[z]]),
            x * y,
        )


def test_identity_scalar_triplet(ctx, gens):
    x, y, _ = gens
    f = x**2 + y**2
    t = MF3(
        RatMatrix.identity(ctx, 3),
        RatMatrix.identity(ctx, 3),
        RatMatrix.scalar(ctx, 3, f),
        f,
    )
    assert t.size == 3


def test_direct_sum(ctx, gens):
    x, y, _ = gens
    pair = MF2(
        RatMatrix.from_rows(ctx, [[x, -y], [y, x]]),
        RatMatrix.from_rows(ctx, [[x, y], [-y, x]]),
        x**2 + y**2,
    )
    t = promote(pair, "first", "doolittle")
    doubled = t.direct_sum(t)
    assert doubled.size == 4
    one = RatMatrix.identity(ctx, 1)
    small = MF3(one, one, RatMatrix.from_rows(ctx, [[x**2 + y**2]]), x**2 + y**2)
    mixed = small.direct_sum(t)
    assert mixed.size == 3
    with pytest.raises(ValueError):
        small.direct_sum(MF3(one, one, RatMatrix.from_rows(ctx, [[x * y]]), x * y))


def test_determinant_consistency(ctx):
    rng = random.Random(89)
    checked = 0
    while checked < 6:
        n = rng.randint(2, 4)
        a = random_fraction_matrix(rng, ctx, n)
        try:
            res = lu_decompose(a, "doolittle")
        except (SingularPivotError, StructurallySingularError):
            continue
        assert cofactor_det(a) == cofactor_det(res.L) * cofactor_det(res.U)
        checked += 1
