import pytest

import helpers
from jjalg import GF, Matrix
from jjalg import families as fam
from jjalg.coflag import (
    AutElement,
    CoflagDatum,
    automorphism_group,
    build_coflag_algebra,
    check_group_axioms,
    coflag_census,
    compose,
    cp_equivalent,
    gh2_equivalent,
    identity_element,
    inverse,
    semidirect_classify,
)
from jjalg.cohomology import coflag_cohomology, coflag_lambdas, vec_to_map
from jjalg.errors import InvalidCoflagDatum
from jjalg.iso import automorphisms, isomorphic

F3, F5 = GF(3), GF(5)

# frozen after agreement with the isomorphism-class oracles below
CP_CLASSES_F5 = {"k0": 2, "k0^2": 4, "a12": 1}
CP_CLASSES_F3 = {"k0": 2, "k0^2": 4, "a12": 2}


def _all_data(A, allow_small_char=False):
    F = A.field
    for lam in coflag_lambdas(A, allow_small_char):
        for th in coflag_cohomology(A, lam).Z2.elements():
            yield CoflagDatum(A, lam, vec_to_map(F, th, A.dim, 1))


def _iso_classes(algebras, same):
    reps = []
    for E in algebras:
        if not any(same(E, R) for R in reps):
            reps.append(E)
    return len(reps)


def test_build_coflag_algebra():
    d = CoflagDatum(fam.abelian(F5, 1), (0,), [[1]])
    E = build_coflag_algebra(d)
    assert E.dim == 2 and E.is_jacobi_jordan()
    assert E.names[-1] == "y"
    assert isomorphic(E, fam.a12(F5))


def test_invalid_datum():
    d = CoflagDatum(fam.a12(F5), (1, 0), [[0, 0], [0, 0]])
    assert not d.is_valid()
    with pytest.raises(InvalidCoflagDatum):
        build_coflag_algebra(d)
    d = CoflagDatum(fam.heisenberg(F5, 1), (0, 0, 0), {(2, 2): 1})
    assert not d.is_valid()


@pytest.mark.parametrize("label", ["k0", "k0^2", "a12"])
def test_census_matches_iso_oracle_f5(label):
    A = {"k0": fam.abelian(F5, 1), "k0^2": fam.abelian(F5, 2), "a12": fam.a12(F5)}[label]
    rep = coflag_census(A)
    built = [build_coflag_algebra(d) for d in _all_data(A)]
    oracle = _iso_classes(built, lambda a, b: bool(isomorphic(a, b)))
    assert rep.count == oracle == CP_CLASSES_F5[label]


@pytest.mark.parametrize("label", ["k0", "k0^2", "a12"])
def test_census_matches_brute_force_f3(label):
    A = {"k0": fam.abelian(F3, 1), "k0^2": fam.abelian(F3, 2), "a12": fam.a12(F3)}[label]
    rep = coflag_census(A, allow_small_char=True)
    built = [build_coflag_algebra(d) for d in _all_data(A, True)]
    oracle = _iso_classes(built, helpers.brute_isomorphic)
    assert rep.count == oracle == CP_CLASSES_F3[label]


def test_cp_equivalent_witness_is_an_isomorphism():
    A = fam.abelian(F5, 2)
    d = CoflagDatum(A, (0, 0), [[1, 0], [0, 1]])
    dp = CoflagDatum(A, (0, 0), [[0, 1], [1, 0]])
    v = cp_equivalent(d, dp)
    assert v.status == "yes"
    g = v.witness
    assert isinstance(g, AutElement) and g.s0 != 0
    assert g.psi.T @ dp.gram() @ g.psi == d.gram().scale(g.s0)
    d0 = CoflagDatum(A, (0, 0), [[1, 0], [0, 0]])
    assert cp_equivalent(d, d0).status == "no"


def test_cp_equivalent_unknown_with_partial_auts():
    A = fam.abelian(F5, 2)
    d = CoflagDatum(A, (0, 0), [[1, 0], [0, 1]])
    dp = CoflagDatum(A, (0, 0), [[1, 0], [0, 0]])
    assert cp_equivalent(d, dp, auts=[Matrix.identity(F5, 2)]).status == "unknown"
    assert cp_equivalent(d, dp, auts=[Matrix.identity(F5, 2)], exhaustive=True).status == "no"


def test_gh2_equivalence():
    A = fam.a12(F5)
    d = CoflagDatum(A, (0, 0), [[0, 0], [0, 0]])
    # delta t(e1, e1) = -t(e2): shifting theta(e1, e1) is a coboundary
    dp = CoflagDatum(A, (0, 0), [[3, 0], [0, 0]])
    v = gh2_equivalent(d, dp)
    assert v.status == "yes"
    assert gh2_equivalent(d, CoflagDatum(A, (0, 0), [[0, 1], [1, 0]])).status == "no"


def test_a12_type_group():
    A = fam.abelian(F5, 1)
    d = CoflagDatum(A, (0,), [[2]])
    G = automorphism_group(d)
    assert G.order == 20 == helpers.brute_aut_order(build_coflag_algebra(d))
    assert not any(check_group_axioms(G.elements).values())


def test_group_elements_are_automorphisms_and_law_is_matrix_product():
    A = fam.abelian(F3, 2)
    d = CoflagDatum(A, (0, 0), [[1, 0], [0, 0]])
    E = build_coflag_algebra(d)
    G = automorphism_group(d)
    for g in G.elements:
        assert E.is_homomorphism_to(g.as_matrix(), E)
    for g in G.elements[:10]:
        for h in G.elements[-10:]:
            assert compose(g, h).as_matrix() == g.as_matrix() @ h.as_matrix()
        assert compose(g, inverse(g)) == identity_element(A)


@pytest.mark.parametrize("label", ["k0", "k0^2", "a12"])
def test_group_equals_stabilizer_of_new_line(label):
    # the group counts automorphisms of the built algebra that keep the new basis line
    A = {"k0": fam.abelian(F3, 1), "k0^2": fam.abelian(F3, 2), "a12": fam.a12(F3)}[label]
    auts = automorphisms(A).elements
    for d in _all_data(A, True):
        E = build_coflag_algebra(d)
        assert automorphism_group(d, auts).order == helpers.brute_stabilizer_order(E, E.dim - 1)


def test_group_can_be_smaller_than_full_automorphism_group():
    d = CoflagDatum(fam.abelian(F3, 1), (0,), [[0]])
    E = build_coflag_algebra(d)
    assert automorphism_group(d).order == 12
    assert helpers.brute_aut_order(E) == 48


def test_semidirect_classify():
    A = fam.abelian(F5, 1)
    assert semidirect_classify(A, (0,), (0,)).status == "yes"
