from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jjalg import GF, Algebra, Matrix
from jjalg import families as fam
from jjalg.corpus import family_samples, jj_algebras
from jjalg.errors import DimensionMismatch, NotJacobiJordan
from jjalg.modrep import (
    ActionData,
    canonical_actions,
    is_jj_module,
    module_defects,
    regular_kernel,
    to_representation,
)

F3, F5 = GF(3), GF(5)


def _module_brute(D):
    """The module identity on every pair of base vectors, not just basis pairs."""
    A = D.base
    F = A.field
    for u in product(F.elements(), repeat=A.dim):
        for v in product(F.elements(), repeat=A.dim):
            lhs = D.rho_of(A.multiply(u, v))
            ru, rv = D.rho_of(u), D.rho_of(v)
            if lhs != -(ru @ rv + rv @ ru):
                return False
    return True


def test_canonical_actions_on_corpus():
    for F in (F3, F5):
        for label, A in family_samples(F):
            if A.dim > 5:
                continue
            for name, D in canonical_actions(A).items():
                assert is_jj_module(D), (label, name)
    for A in jj_algebras(F3, 2):
        for D in canonical_actions(A).values():
            assert is_jj_module(D)


def test_canonical_actions_need_jj():
    A = Algebra.from_products(F5, 1, {(0, 0): (1,)})
    with pytest.raises(NotJacobiJordan):
        canonical_actions(A)


@given(st.lists(st.integers(0, 2), min_size=8, max_size=8), st.integers(0, 104))
def test_module_check_matches_brute_force(entries, k):
    A = list(jj_algebras(F3, 2))[k]
    rho = (Matrix(F3, [entries[0:2], entries[2:4]]), Matrix(F3, [entries[4:6], entries[6:8]]))
    D = ActionData(A, 2, rho)
    assert is_jj_module(D) == _module_brute(D)
    assert is_jj_module(D) == to_representation(D).jordan_morphism


def test_representation_is_negated_action():
    D = canonical_actions(fam.heisenberg(F5, 1))["regular"]
    R = to_representation(D)
    assert all(p == -r for p, r in zip(R.phi, D.rho))


def test_from_lambda_and_trivial():
    A = fam.a12(F5)
    assert is_jj_module(ActionData.trivial(A, 3))
    assert is_jj_module(ActionData.from_lambda(A, (0, 0)))
    bad = ActionData.from_lambda(A, (1, 0))
    assert module_defects(bad)


def test_action_shape_checks():
    A = fam.a12(F5)
    with pytest.raises(DimensionMismatch):
        ActionData(A, 2, (Matrix.zeros(F5, 2, 2),))
    with pytest.raises(DimensionMismatch):
        ActionData(A, 2, (Matrix.zeros(F5, 2, 2), Matrix.zeros(F5, 1, 1)))


def test_regular_kernel_is_center():
    for A in jj_algebras(F5, 2):
        assert regular_kernel(A) == A.center()
