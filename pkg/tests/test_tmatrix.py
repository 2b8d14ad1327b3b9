import random

import pytest

from oracles import networks, random_quantity, HORIZON
from tqnet.errors import DimensionError, UnsupportedClosureError
from tqnet.semiring import COMBINATORIAL, GEODETIC, INF, MAXMIN, REACHABILITY, SHORTEST_PATH, pathfinder
from tqnet.tmatrix import (
    TemporalMatrix,
    mat_binary,
    mat_closure,
    mat_extract,
    mat_intersect,
    mat_power,
    mat_prod,
    mat_prod_diag,
    mat_set_diag,
    mat_sum,
    mat_symmetrize,
    mat_vec_mul,
    min_time,
    vec_const,
    vec_inv,
    vec_prod,
    vec_sum,
)
from tqnet.tq import FOREVER, value_at

E = [(0, FOREVER, 1)]


def identity(n, spec=COMBINATORIAL):
    A = TemporalMatrix.empty(n, spec)
    return mat_set_diag(A, [(0, FOREVER, spec.one)])


def test_vector_products():
    A = TemporalMatrix.from_arcs(2, {(0, 1): [(1, 5, 2)]})
    assert mat_vec_mul(A, vec_const(2, [])) == [[], []]
    v = [[(1, 3, 4)], [(2, 9, 1)]]
    assert mat_vec_mul(identity(2), v) == v
    assert mat_vec_mul(identity(2), v, side="left") == v
    assert mat_vec_mul(A, vec_const(2, E)) == [[(1, 5, 2)], []]
    assert mat_vec_mul(A, vec_const(2, E), side="left") == [[], [(1, 5, 2)]]
    with pytest.raises(DimensionError):
        mat_vec_mul(A, vec_const(3, E))


def test_products():
    A = TemporalMatrix.from_arcs(3, {(0, 1): [(1, 5, True)], (1, 2): [(3, 9, True)]}, REACHABILITY)
    assert mat_prod(A, A)[0, 2] == [(3, 5, True)]
    Z = TemporalMatrix.empty(3, REACHABILITY)
    assert all(not a for _, _, a in mat_prod(A, Z).nonempty())
    J = TemporalMatrix([[[(0, 2, 1)]] * 2] * 2)
    assert mat_prod(J, J).entries == [[[(0, 2, 2)]] * 2] * 2
    with pytest.raises(DimensionError):
        mat_prod(A, J)


def test_rectangular_product():
    A = TemporalMatrix([[[(0, 3, 1)], [(1, 4, 2)], []]])
    B = TemporalMatrix([[[(0, 9, 1)]], [[(0, 9, 3)]], [[(0, 9, 5)]]])
    assert mat_prod(A, B).entries == [[[(0, 1, 1), (1, 3, 7), (3, 4, 6)]]]


def test_diagonal_product():
    rng = random.Random(3)
    for A in networks(50, seed=11):
        if A.n != 5:
            A = TemporalMatrix.from_arcs(
                5, {(u, v): random_quantity(rng) for u in range(5) for v in range(5) if rng.random() < 0.4}
            )
        B = A.transpose()
        full = mat_prod(A, B)
        assert mat_prod_diag(A, B) == [full[i, i] for i in range(A.n)]
    assert mat_prod_diag(identity(3), identity(3)) == [E] * 3
    assert mat_prod_diag(identity(3), TemporalMatrix.empty(3)) == [[]] * 3


def test_power():
    rng = random.Random(5)
    for _ in range(20):
        A = TemporalMatrix.from_arcs(
            4, {(u, v): random_quantity(rng) for u in range(4) for v in range(4) if rng.random() < 0.5}
        )
        assert mat_power(A, 1) is A
        assert mat_power(A, 2).entries == mat_prod(A, A).entries
        assert mat_power(A, 5).entries == mat_prod(mat_prod(mat_prod(mat_prod(A, A), A), A), A).entries
    with pytest.raises(ValueError):
        mat_power(A, 0)


def test_pathfinder_two_hop():
    spec = pathfinder(1)
    W = TemporalMatrix.from_arcs(3, {(0, 1): [(0, 9, 1)], (1, 2): [(0, 9, 1)]}, spec)
    W = mat_set_diag(W, [(0, FOREVER, 0)])
    assert mat_power(W, 2)[0, 2] == [(0, 9, 2)]


def test_closure_example():
    arcs = {(0, 1): [(1, 5, True)], (1, 2): [(3, 9, True)], (0, 2): [(1, 3, True)]}
    A = TemporalMatrix.from_arcs(3, arcs, REACHABILITY)
    C = mat_closure(A, strict=True)
    assert C[0, 2] == [(1, 5, True)]
    assert A[0, 2] == [(1, 3, True)]  # input untouched


def test_closure_edge_cases():
    Z = TemporalMatrix.empty(3, REACHABILITY)
    assert list(mat_closure(Z, strict=True).nonempty()) == []
    C = mat_closure(Z)
    assert [C[i, i] for i in range(3)] == [[(0, FOREVER, True)]] * 3
    with pytest.raises(UnsupportedClosureError):
        mat_closure(TemporalMatrix.empty(2))


def test_structural_transforms():
    A = TemporalMatrix.from_arcs(2, {(0, 1): [(1, 5, 1)]})
    S = mat_symmetrize(A)
    assert S[0, 1] == S[1, 0] == [(1, 5, 1)]
    R = mat_binary(A, REACHABILITY)
    assert mat_intersect(R, R).entries == R.entries
    assert mat_intersect(R, R.transpose()).entries == [[[], []], [[], []]]
    W = TemporalMatrix.from_arcs(3, {(0, 1): [(0, 9, 3)], (2, 0): [(1, 3, 2), (5, 7, 1)]})
    M = mat_extract([[(2, 4, 1)]] * 3, W)
    assert M[0, 1] == [(2, 4, 3)] and M[2, 0] == [(2, 3, 2)]
    assert mat_sum(W, W)[0, 1] == [(0, 9, 6)]


def test_vectors():
    x = [[(1, 3, 2)], [(0, 2, 5)]]
    assert vec_sum(COMBINATORIAL, x, vec_const(2, [])) == x
    assert vec_prod(COMBINATORIAL, x, vec_const(2, E)) == x
    assert vec_inv(vec_const(2, [(1, 3, 4)])) == [[(1, 3, 0.25)]] * 2
    with pytest.raises(DimensionError):
        vec_sum(COMBINATORIAL, x, [[]])


def test_min_time():
    A = TemporalMatrix.from_arcs(
        4, {(0, 1): [(1, 5, 3)], (2, 0): [(1, 3, 1)], (2, 1): [(2, 6, 1)]}
    )
    assert min_time(A) == [[(1, 5, 1)], [(1, 6, 1)], [(1, 6, 1)], []]


# slice oracles


def slice_of(A, t):
    return {(u, v): value_at(a, t) for u, v, a in A.nonempty() if value_at(a, t) is not None}


def static_prod(spec, X, Y, n):
    out = {}
    for i in range(n):
        for j in range(n):
            acc = None
            for k in range(n):
                if (i, k) in X and (k, j) in Y:
                    p = spec.mul(X[i, k], Y[k, j])
                    acc = p if acc is None else spec.add(acc, p)
            if acc is not None and not (spec.absorptive and acc == spec.zero):
                out[i, j] = acc
    return out


def static_strict_closure(spec, X, n):
    """Sum of A, A^2, ..., A^(n+1); enough walks for an absorptive semiring."""
    total, power = dict(X), dict(X)
    for _ in range(n):
        power = static_prod(spec, power, X, n)
        for e, x in power.items():
            total[e] = spec.add(total[e], x) if e in total else x
    return total


def as_spec(A, spec):
    if spec.kind == "reachability":
        return mat_binary(A, spec)
    if spec.kind == "geodetic":
        return A.map(lambda _: (1, 1), spec)
    return A.map(lambda v: v, spec)


@pytest.mark.parametrize(
    "spec", [COMBINATORIAL, REACHABILITY, SHORTEST_PATH, MAXMIN, GEODETIC, pathfinder(2)], ids=lambda s: s.name
)
def test_product_matches_slices(spec):
    for A in networks(40, seed=23):
        A = as_spec(A, spec)
        B = as_spec(A.transpose(), spec)
        P = mat_prod(A, B)
        for t in range(HORIZON.t_min - 1, HORIZON.t_max + 1):
            assert slice_of(P, t) == static_prod(spec, slice_of(A, t), slice_of(B, t), A.n)


@pytest.mark.parametrize(
    "spec", [REACHABILITY, SHORTEST_PATH, MAXMIN, GEODETIC, pathfinder(1), pathfinder(INF)], ids=lambda s: s.name
)
def test_closure_matches_slices(spec):
    for A in networks(40, seed=29):
        A = as_spec(A, spec)
        C = mat_closure(A, strict=True)
        for t in HORIZON.instants():
            assert slice_of(C, t) == static_strict_closure(spec, slice_of(A, t), A.n)
        if spec.kind != "geodetic":
            # geodetic addition counts walks, so closing twice counts them again
            assert mat_closure(C, strict=True).entries == C.entries


def test_strict_closure_equals_a_times_star():
    for A in networks(30, seed=31):
        R = mat_binary(A, REACHABILITY)
        strict = mat_closure(R, strict=True)
        star = mat_closure(R)
        assert strict.entries == mat_prod(R, star).entries
        # star restricted to the horizon is the strict closure plus the diagonal
        for t in HORIZON.instants():
            expected = dict(slice_of(strict, t))
            expected.update({(i, i): True for i in range(A.n)})
            assert slice_of(star, t) == expected
