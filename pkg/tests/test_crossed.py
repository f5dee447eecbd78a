import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from jjalg import GF, Algebra, Matrix
from jjalg import families as fam
from jjalg.corpus import jj_algebras
from jjalg.crossed import (
    BilinearVMap,
    CrossedData,
    act_by_r,
    are_cohomologous,
    canonical_section,
    crossed_product,
    crossed_product_unchecked,
    morphism_from_r,
    projection_matrix,
    recognize_extension,
    semidirect_product,
    validate_crossed_system,
)
from jjalg.errors import InvalidCrossedSystem, InvalidSemidirectSystem, NotAlgebraMap, NotSection
from jjalg.modrep import ActionData

F3, F5 = GF(3), GF(5)
JJ1 = list(jj_algebras(F3, 1))
JJ2 = list(jj_algebras(F3, 2))


@given(st.integers(0, 2**32))
@settings(max_examples=40, deadline=None)
def test_validity_iff_crossed_product_is_jj(seed):
    rng = random.Random(seed)
    n, m = rng.choice((1, 2)), rng.choice((1, 2))
    A = rng.choice(JJ1 if n == 1 else JJ2)
    Vt = rng.choice(JJ1 + JJ2 if m == 2 else JJ1)
    if Vt.dim != m:
        Vt = rng.choice(JJ2)
    V = Algebra(F3, m, Vt.table, [f"x{k + 1}" for k in range(m)])
    rho = [[[rng.choice((0, 0, 1, 2)) for _ in range(m)] for _ in range(m)] for _ in range(n)]
    theta = {(i, j): tuple(rng.choice((0, 0, 1, 2)) for _ in range(m)) for i in range(n) for j in range(i, n)}
    D = CrossedData.build(A, m, rho, theta, V)
    assert validate_crossed_system(D).valid == crossed_product_unchecked(D).is_jacobi_jordan()


@given(st.integers(0, 2**32))
@settings(max_examples=40, deadline=None)
def test_valid_systems_round_trip(seed):
    rng = random.Random(seed)
    D = helpers.random_crossed_system(rng, JJ1, JJ2)
    assert validate_crossed_system(D).valid
    E = crossed_product(D)
    assert recognize_extension(E, D.base, projection_matrix(D), canonical_section(D)) == D
    n, m = D.base.dim, D.fiber_dim
    r = Matrix(F3, [[rng.randrange(3) for _ in range(n)] for _ in range(m)])
    D2 = act_by_r(D, r)
    assert validate_crossed_system(D2).valid
    v = morphism_from_r(D2, D, r)
    assert v.morphism
    assert crossed_product(D2).is_homomorphism_to(v.psi, E)
    assert are_cohomologous(D2, D).status == "yes"


def test_section_recognition_matches_act_by_r():
    rng = random.Random(7)
    for _ in range(20):
        D = helpers.random_crossed_system(rng, JJ1, JJ2)
        n, m = D.base.dim, D.fiber_dim
        Q = [[rng.randrange(3) for _ in range(n)] for _ in range(m)]
        s = Matrix(F3, [[int(i == j) for j in range(n)] for i in range(n)] + Q)
        Dp = recognize_extension(crossed_product(D), D.base, projection_matrix(D), s)
        assert Dp == act_by_r(D, Matrix(F3, Q))


def test_non_cohomologous_cocycles():
    A = fam.abelian(F5, 1)
    D0 = CrossedData.build(A, 1)
    D1 = CrossedData.build(A, 1, theta={(0, 0): (1,)})
    assert are_cohomologous(D0, D1).status == "no"
    assert are_cohomologous(D1, D1).status == "yes"


def test_fiber_mismatch_is_no():
    A = fam.abelian(F3, 1)
    V = Algebra.from_products(F3, 1, {(0, 0): (1,)}, ["x1"])
    D0 = CrossedData.build(A, 1)
    D1 = CrossedData.build(A, 1, fiber=V)
    assert are_cohomologous(D0, D1).status == "no"


def test_invalid_systems_raise():
    A = fam.abelian(F5, 1)
    bad = CrossedData.build(A, 1, rho=[[[1]]])
    assert not validate_crossed_system(bad).valid
    assert validate_crossed_system(bad).failures["J2"]
    with pytest.raises(InvalidCrossedSystem):
        crossed_product(bad)
    with pytest.raises(InvalidSemidirectSystem):
        semidirect_product(A, bad.action, bad.fiber_mult)


def test_semidirect_regular_action():
    H = fam.heisenberg(F5, 1)
    D = ActionData(H, 3, tuple(H.left_op(i) for i in range(3)))
    E = semidirect_product(H, D, Algebra.abelian(F5, 3, ["x1", "x2", "x3"]))
    assert E.dim == 6 and E.is_jacobi_jordan()


def test_recognition_errors():
    H = fam.heisenberg(F5, 1)
    D = CrossedData.build(H, 1)
    E = crossed_product(D)
    pi = projection_matrix(D)
    s = canonical_section(D)
    with pytest.raises(NotSection):
        recognize_extension(E, H, pi, s.scale(2))
    bad_pi = Matrix(F5, [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]])
    with pytest.raises(NotAlgebraMap):
        recognize_extension(E, H, bad_pi, s)


def test_failed_morphism_reports_axioms():
    A = fam.abelian(F5, 1)
    D0 = CrossedData.build(A, 1)
    D1 = CrossedData.build(A, 1, theta={(0, 0): (1,)})
    v = morphism_from_r(D0, D1, [[1]])
    assert not v.morphism and v.failures["CH3"]


def test_bilinear_map_evaluation():
    th = BilinearVMap.symmetric(F5, 2, 1, {(0, 1): (2,)})
    assert th(1, 0) == (2,)
    assert th.evaluate((1, 1), (1, 1)) == (4,)
    assert th.is_symmetric()
