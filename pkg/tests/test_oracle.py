"""The mod-p factorization census and its comparison with group models."""

import random
from fractions import Fraction as F

import pytest

from pureoctic import binomial, groups, oracle


def test_factor_mod_p_frozen_example():
    # X^8 - 1 over F_3: (x-1)(x+1)(x^2+1) and x^4+1 splits into two quadratics
    assert oracle.factor_mod_p(F(-1), 3) == (2, 2, 2, 1, 1)


def test_factor_mod_p_split_case():
    # all eight roots exist mod p when p = 1 mod 8 and -c is an 8th power
    for p in (17, 41, 97, 113):
        assert oracle.factor_mod_p(F(-1), p) == (1,) * 8


def test_factor_mod_p_rejects_bad_primes():
    with pytest.raises(ValueError):
        oracle.factor_mod_p(F(9), 3)
    with pytest.raises(ValueError):
        oracle.factor_mod_p(F(5, 7), 7)
    with pytest.raises(ValueError):
        oracle.factor_mod_p(F(9), 2)
    with pytest.raises(ValueError):
        oracle.factor_mod_p(F(9), 15)


def test_factor_mod_p_against_brute_force():
    # independent oracle: exhaustive trial division over small fields
    rng = random.Random(303)
    cs = [F(9), F(2), F(-2), F(3), F(16), F(5, 7), F(-11, 3)]
    cs += [F(rng.randint(-40, 40) or 1, rng.randint(1, 10)) for _ in range(15)]
    for c in cs:
        for p in (3, 5, 7):
            if c.numerator % p == 0 or c.denominator % p == 0:
                continue
            assert oracle.factor_mod_p(c, p) == \
                oracle.brute_force_factor_degrees(c, p), (c, p)


def test_degrees_always_sum_to_eight():
    rng = random.Random(99)
    for _ in range(60):
        c = F(rng.randint(-99, 99) or 7, rng.randint(1, 9))
        p = random.Random(rng.random()).choice([5, 7, 11, 13, 19, 23])
        if c.numerator % p == 0 or c.denominator % p == 0:
            continue
        assert sum(oracle.factor_mod_p(c, p)) == 8


def test_group_cycle_types_regular_c8():
    c8 = groups.affine_group_mod8([(t, 1) for t in range(8)])
    types = oracle.group_cycle_types(c8)
    assert set(types) == {(1,) * 8, (2,) * 4, (4, 4), (8,)}
    assert types[(8,)] == F(4, 8)
    assert types[(1,) * 8] == F(1, 8)


def test_group_cycle_types_pauli_model():
    types = oracle.group_cycle_types(groups.pauli_affine_model())
    assert types == {
        (4, 4): F(8, 16),
        (2, 2, 2, 2): F(5, 16),
        (2, 2, 1, 1, 1, 1): F(2, 16),
        (1, 1, 1, 1, 1, 1, 1, 1): F(1, 16),
    }
    # the map m -> 3m+1 is a product of two 4-cycles
    assert groups.Perm([(3 * m + 1) % 8 for m in range(8)]).cycle_type() == (4, 4)


def test_group_cycle_types_wrong_degree():
    with pytest.raises(ValueError):
        oracle.group_cycle_types(groups.pauli_matrix_group())  # 16 points


def test_census_bookkeeping():
    cns = oracle.census(F(9), 200)
    from pureoctic.arith import primes_below
    good = [p for p in primes_below(200) if p not in (2, 3)]
    assert cns.total == len(good)
    assert cns.skipped == (2, 3)
    assert sum(n for _, n in cns.counts) == cns.total
    with pytest.raises(ValueError):
        oracle.census(F(9), 50)
    with pytest.raises(ValueError):
        oracle.census(F(0), 1000)


def test_census_deterministic():
    assert oracle.census(F(2), 1500) == oracle.census(F(2), 1500)


def test_consistent_requires_samples():
    cns = oracle.census(F(9), 1000)  # 167 good primes
    with pytest.raises(ValueError):
        oracle.consistent(cns, groups.pauli_affine_model(), F(1, 20))


def test_consistent_monotone_in_tolerance():
    cns = oracle.census(F(9), 10000)
    model = groups.pauli_affine_model()
    verdicts = [oracle.consistent(cns, model, t).passed
                for t in (F(1, 1000), F(1, 100), F(1, 20), F(1, 2))]
    assert verdicts == sorted(verdicts)  # False cannot follow True
    assert verdicts[-1]


def test_census_against_all_models():
    cns = oracle.census(F(9), 20000)
    models = oracle.stock_models()
    for name, model in models.items():
        if model is None:
            assert oracle.transitive_8pt_obstruction(name) is not None
            continue
        verdict = oracle.consistent(cns, model, F(1, 20))
        assert verdict.passed == (name == "Pauli"), name


def test_abelian_census_has_uniform_parts():
    cns = oracle.census(F(16), 10000)
    for t, _ in cns.counts:
        assert len(set(t)) == 1, t


def test_stock_models_fingerprints():
    models = oracle.stock_models()
    assert groups.identify(models["K8"]) == "C4xC2"
    assert groups.identify(models["D16"]) == "D16"
    assert groups.identify(models["QD16"]) == "QD16"
    assert groups.identify(models["Pauli"]) == "Pauli"
    assert groups.identify(models["B32"]) == "B32"
    for name in ("C16", "C8xC2", "Q8xC2"):
        assert models[name] is None


def test_model_for_tag():
    tag = binomial.classify_octic(F(2))
    assert groups.identify(oracle.model_for_tag(tag)) == "D16"
    with pytest.raises(ValueError):
        oracle.model_for_tag("Reducible")
