"""The permutation-group engine and the order-16 identification machinery."""

import random
from collections import Counter

import pytest

from pureoctic import groups
from pureoctic.groups import Perm


def test_perm_basics():
    p = Perm([1, 2, 0, 3])
    q = Perm([0, 1, 3, 2])
    assert (p * q).images == (1, 2, 3, 0)   # p after q
    assert p.inverse() * p == Perm.identity(4)
    assert p.cycle_type() == (3, 1)
    assert p.order() == 3
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_closure_examples():
    assert groups.closure([Perm.identity(5)]).order == 1
    c4 = groups.closure([Perm([1, 2, 3, 0])])
    assert c4.order == 4
    subs = c4.subgroups()
    assert [H.order for H, _ in subs] == [1, 2, 4]
    assert all(nrm for _, nrm in subs)
    with pytest.raises(ValueError):
        groups.closure([Perm([1, 0]), Perm([0, 2, 1])])


def test_pauli_matrix_closures():
    # two of the spin matrices only reach a dihedral half: the scalar i
    # needs the third generator (the group has rank 3)
    xy = groups._matrix_closure([groups.PAULI_X, groups.PAULI_Y])
    assert len(xy) == 8
    from_two = groups.from_multiplication(sorted(xy, key=lambda g: g.entries),
                                          lambda a, b: a * b)
    assert groups.identify(from_two) == "D8"
    xyz = groups._matrix_closure([groups.PAULI_X, groups.PAULI_Y, groups.PAULI_Z])
    assert len(xyz) == 16


def test_pauli_matrix_group_facts():
    P = groups.pauli_matrix_group()
    assert P.order == 16
    assert P.element_orders() == Counter({1: 1, 2: 7, 4: 8})
    center = P.center()
    assert groups.abelian_invariants(center) == (4,)
    conventions = groups.subgroup_count_conventions(P)
    assert conventions["proper_nontrivial"] == 21
    assert conventions["normal_proper_nontrivial"] == 15
    assert conventions["total"] == 23


def test_pauli_subgroup_lattice_structure():
    P = groups.pauli_matrix_group()
    subs = P.subgroups()
    by_order = Counter(H.order for H, _ in subs)
    assert by_order == Counter({1: 1, 2: 7, 4: 7, 8: 7, 16: 1})
    order8_types = Counter(groups.identify(H) for H, _ in subs if H.order == 8)
    assert order8_types == Counter({"Q8": 1, "D8": 3, "C4xC2": 3})
    # Lagrange across the lattice
    assert all(P.order % H.order == 0 for H, _ in subs)
    # the six non-normal subgroups all have order 2
    non_normal = [H for H, nrm in subs if not nrm]
    assert len(non_normal) == 6 and all(H.order == 2 for H in non_normal)


def test_pauli_quotients():
    P = groups.pauli_matrix_group()
    subs = P.subgroups()
    center = P.center()
    assert groups.quotient_type(P, center) == "V4"
    minus_e = next(H for H, nrm in subs if H.order == 2 and nrm)
    assert groups.quotient_type(P, minus_e) == "E8"
    assert groups.quotient_type(P, P) == "C1"
    # every nontrivial proper quotient is elementary abelian
    for H, nrm in subs:
        if nrm and 1 < H.order < 16:
            assert groups.quotient_type(P, H) in {"C2", "V4", "E8"}
    with pytest.raises(ValueError):
        q8 = next(H for H, _ in subs if groups._looks_like_q8(H))
        non_normal = next(H for H, nrm in subs if not nrm)
        groups.quotient_group(q8, non_normal)


def test_q8_all_subgroups_normal():
    Q8 = groups.quaternion_group()
    subs = Q8.subgroups()
    assert len(subs) == 6
    assert all(nrm for _, nrm in subs)
    assert groups.identify(Q8) == "Q8"


def test_stock_models_pairwise_distinct():
    models = groups.order16_stock_models()
    assert len(models) == 14
    fps = {groups.fingerprint(M) for M in models.values()}
    assert len(fps) == 14
    abelian = [n for n, M in models.items() if M.is_abelian()]
    assert sorted(abelian) == ["C16", "C4xC2xC2", "C4xC4", "C8xC2", "E16"]


def test_criteria_reject_all_thirteen_others():
    for name, M in groups.order16_stock_models().items():
        crit = groups.pauli_criteria(M)
        assert all(crit) == (name == "Pauli"), name


def test_identify_matches_construction_names():
    for name, M in groups.order16_stock_models().items():
        assert groups.identify(M) == name


def test_identify_small_groups():
    assert groups.identify(groups.cyclic(16)) == "C16"
    assert groups.identify(groups.cyclic(4)) == "C4"
    assert groups.identify(groups.direct_product(groups.cyclic(2), groups.cyclic(2))) == "V4"
    assert groups.identify(groups._dihedral8()) == "D8"
    with pytest.raises(ValueError):
        groups.identify(groups.cyclic(33))


def test_fingerprint_invariant_under_relabeling():
    rng = random.Random(2024)
    for M in (groups.pauli_matrix_group(), groups.order16_stock_models()["QD16"]):
        fp = groups.fingerprint(M)
        for _ in range(3):
            images = list(range(M.degree))
            rng.shuffle(images)
            assert groups.fingerprint(groups.relabel(M, Perm(images))) == fp


def test_hol_c8_model():
    hol = groups.hol_c8_model()
    assert hol.order == 32
    assert hol.is_transitive()
    assert groups.identify(hol) == "B32"
    sub_fps = {groups.fingerprint(H) for H, _ in hol.subgroups()}
    assert groups.fingerprint(groups.pauli_matrix_group()) in sub_fps
    assert groups.fingerprint(groups.pauli_affine_model()) == \
        groups.fingerprint(groups.pauli_matrix_group())


def test_regular_representation_preserves_fingerprint():
    qd = groups.order16_stock_models()["QD16"]
    assert groups.fingerprint(groups.regular_representation(qd)) == groups.fingerprint(qd)


def test_abelian_invariants():
    assert groups.abelian_invariants(groups.cyclic(8)) == (8,)
    prod = groups.direct_product(groups.cyclic(4), groups.cyclic(2))
    assert groups.abelian_invariants(prod) == (4, 2)
    assert groups.abelian_name((4, 2)) == "C4xC2"
    assert groups.abelian_name((2, 2, 2)) == "E8"
    with pytest.raises(ValueError):
        groups.abelian_invariants(groups._dihedral8())
