from itertools import product

import pytest

import helpers
from jjalg import GF, QQ, Matrix
from jjalg import families as fam
from jjalg.cohomology import (
    abelian_cocycles,
    codim1_classes,
    coflag_cohomology,
    coflag_lambdas,
    gh2_coflag,
    global_h2_abelian,
    map_to_vec,
    metabelian_cohomology,
    vec_to_map,
)
from jjalg.corpus import jj_algebras
from jjalg.crossed import CrossedData, are_cohomologous, crossed_product, validate_crossed_system
from jjalg.errors import (
    ActionNotAnticommuting,
    CapExceeded,
    ClassificationCharUnsupported,
    InvalidLambda,
    NotAModule,
)
from jjalg.modrep import ActionData

F3, F5 = GF(3), GF(5)

# frozen after agreement with helpers.coflag_h2_oracle
H5_H2_LAMBDA0 = 9
A12_H2_LAMBDA0 = 0
K0_F3_SQUARED_CLASSES = 33


def test_h3_and_h5_against_oracle():
    H3 = fam.heisenberg(F5, 1)
    H5 = fam.heisenberg(F5, 2)
    assert coflag_cohomology(H3, (0,) * 3).h2_dim == helpers.coflag_h2_oracle(H3, (0,) * 3) == 2
    assert coflag_cohomology(H5, (0,) * 5).h2_dim == helpers.coflag_h2_oracle(H5, (0,) * 5) == H5_H2_LAMBDA0


def test_h5_extra_class_is_a_non_symmetric_pairing():
    # e1 f2 = y with e2 f1 = 0 is a cocycle outside the symmetric family
    H5 = fam.heisenberg(F5, 2)
    S = coflag_cohomology(H5, (0,) * 5)
    A = fam.heis_abc(F5, 2, [[0, 0], [0, 0]], [[0, 0], [0, 0]], [[0, 1], [0, 0]], require_symmetric_c=False)
    assert A.is_jacobi_jordan()
    vec = map_to_vec(vec_to_map(F5, [0] * 15, 5, 1))
    vec = list(vec)
    pairs = [(i, j) for i in range(5) for j in range(i, 5)]
    vec[pairs.index((0, 3))] = 1
    assert S.Z2.contains(tuple(vec))
    assert not S.B2.contains(tuple(vec))


def test_a12_against_oracle():
    A = fam.a12(F5)
    assert coflag_cohomology(A, (0, 0)).h2_dim == helpers.coflag_h2_oracle(A, (0, 0)) == A12_H2_LAMBDA0


def test_all_dim2_f5_against_oracle():
    for A in jj_algebras(F5, 2):
        for lam in coflag_lambdas(A):
            assert coflag_cohomology(A, lam).h2_dim == helpers.coflag_h2_oracle(A, lam)


def test_lambdas_brute_force():
    for A in list(jj_algebras(F5, 2))[::3]:
        brute = [
            lam for lam in product(range(5), repeat=2)
            if all(
                sum(lam[k] * A.table[i][j][k] for k in range(2)) % 5 == (-2 * lam[i] * lam[j]) % 5
                for i in range(2) for j in range(2)
            )
        ]
        assert [tuple(x) for x in coflag_lambdas(A)] == brute


def test_lambda_zero_only_for_abelian_and_heisenberg():
    for A in (fam.abelian(F5, 2), fam.heisenberg(F5, 1), fam.heisenberg(F5, 2)):
        assert [tuple(x) for x in coflag_lambdas(A)] == [(0,) * A.dim]


def test_char_guard():
    with pytest.raises(ClassificationCharUnsupported):
        coflag_lambdas(fam.abelian(F3, 1))
    assert coflag_lambdas(fam.abelian(F3, 1), allow_small_char=True)


def test_rational_lambdas_flagged_complete_for_jj():
    L = coflag_lambdas(fam.heisenberg(QQ, 1))
    assert L.complete and [tuple(x) for x in L] == [(0, 0, 0)]


def test_invalid_lambda():
    with pytest.raises(InvalidLambda):
        coflag_cohomology(fam.a12(F5), (1, 0))


def test_gh2_abelian_dimensions():
    for n in (1, 2, 3):
        rep = gh2_coflag(fam.abelian(F5, n))
        assert rep.complete
        assert [cs.h2_dim for _, cs in rep.pieces] == [n * (n + 1) // 2]
        assert rep.class_count == 5 ** (n * (n + 1) // 2)


def test_cocycles_give_valid_systems_and_classes_are_distinct():
    H = fam.heisenberg(F5, 1)
    S = coflag_cohomology(H, (0, 0, 0))
    for vec in S.Z2.elements():
        D = S.crossed_data(vec)
        assert validate_crossed_system(D).valid
        crossed_product(D)
        rep = S.class_representative(vec)
        assert are_cohomologous(D, S.crossed_data(rep)).status == "yes"
    reps = {S.class_representative(v) for v in S.Z2.elements()}
    assert len(reps) == S.class_count() == 25


def test_abelian_cocycles_need_module():
    A = fam.a12(F5)
    with pytest.raises(NotAModule):
        abelian_cocycles(A, ActionData.from_lambda(A, (1, 0)))


def test_metabelian_examples():
    for F, expected in ((F3, 1), (F5, 0)):
        A = fam.abelian(F, 1)
        act = ActionData(A, 2, (Matrix(F, [[0, 1], [0, 0]]),))
        assert metabelian_cohomology(1, 2, act).h2_dim == expected


def test_metabelian_kernel_image_correspondence_f5():
    # H^2 of k_0 acting by f on k^m is Ker f / Im f in characteristic not 3
    A = fam.abelian(F5, 1)
    for entries in product(range(5), repeat=4):
        f = Matrix(F5, [entries[:2], entries[2:]])
        if not (f @ f).is_zero():
            continue
        act = ActionData(A, 2, (f,))
        assert metabelian_cohomology(1, 2, act).h2_dim == f.kernel().quotient_dim(f.image())


def test_metabelian_requires_anticommuting():
    A = fam.abelian(F5, 2)
    act = ActionData(A, 1, (Matrix(F5, [[1]]), Matrix(F5, [[1]])))
    with pytest.raises(ActionNotAnticommuting):
        metabelian_cohomology(2, 1, act)


def test_codim1_against_orbit_oracle():
    assert codim1_classes(2, F3) == helpers.codim1_orbits(2, 3) == 17
    assert codim1_classes(2, F5) == helpers.codim1_orbits(2, 5)


def test_global_k0_f3_squared():
    A = fam.abelian(F3, 1)
    rep = global_h2_abelian(A, 2)
    assert len(rep.components) == 9
    assert rep.total_classes == K0_F3_SQUARED_CLASSES
    # oracle: pairwise cohomology decisions over every valid abelian-fiber system
    systems = []
    for action, _ in rep.components:
        for vec in product(range(3), repeat=2):
            D = CrossedData.build(A, 2, action.rho, {(0, 0): vec})
            if validate_crossed_system(D).valid:
                systems.append(D)
    reps = []
    for D in systems:
        if not any(are_cohomologous(D, R).status == "yes" for R in reps):
            reps.append(D)
    assert len(reps) == K0_F3_SQUARED_CLASSES


def test_global_h3_f3_trivial_only():
    rep = global_h2_abelian(fam.heisenberg(F3, 1), 1)
    assert len(rep.components) == 1
    action, h2 = rep.components[0]
    assert action.is_trivial() and h2 == 2


def test_global_nonabelian_k0_f3():
    rep = global_h2_abelian(fam.abelian(F3, 1), 1, nonabelian=True)
    assert rep.nonabelian
    for V, systems, classes in rep.nonabelian:
        assert not V.is_abelian()
        assert 0 < classes <= systems


def test_global_cap():
    with pytest.raises(CapExceeded):
        global_h2_abelian(fam.heisenberg(F5, 1), 2, cap=100)
