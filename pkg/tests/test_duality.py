import numpy as np
import pytest

from superpbw import (
    annihilator,
    annihilator_duality_check,
    balance_check,
    coind_duality_gram,
    coind_to_ind_dual_map,
    curried_gram,
    equivariance_probe,
    gram_factorization_check,
    gram_invariance_check,
    ind_to_coind_map,
    injectivity_witness_check,
    instance_pairs,
    level_raising_check,
    load_bundle,
    mu_product_check,
    phi_isomorphism_check,
    socle_character_check,
    socle_functional,
    socle_level,
    theta_equivariance_check,
    twisted_dual,
)
from superpbw.linalg import rank


def _pairs(*names):
    for name in names:
        bundle = load_bundle(name)
        for split in bundle.splits.values():
            for rep in bundle.representations.values():
                if rep.split is split:
                    yield bundle, split, rep


def test_socle_functional_support():
    split = load_bundle("abelian1-p3").splits["zero"]
    lam = socle_functional(split)
    assert set(lam) == {(2,)}
    he = load_bundle("heis-p3").splits["zline"]
    assert set(socle_functional(he)) == {(1, 1)}
    assert set(socle_level(load_bundle("abelian1-p3").splits["zero"], 1)) == {(8,)}


def test_socle_character_all_splits():
    for name, split_name in instance_pairs():
        split = load_bundle(name).splits[split_name]
        ok, msg = socle_character_check(split)
        assert ok, f"{name}/{split_name}: {msg}"
    ok, _ = socle_character_check(load_bundle("sl2-p3").splits["borel"], level=1)
    assert ok


def test_mu_product_all_splits():
    for name, split_name in instance_pairs():
        split = load_bundle(name).splits[split_name]
        ok, msg = mu_product_check(split)
        assert ok, f"{name}/{split_name}: {msg}"


# ------------------------------------------------------------------
# the comparison map
# ------------------------------------------------------------------


def test_phi_frozen_abelian():
    bundle = load_bundle("abelian1-p3")
    phi = ind_to_coind_map(bundle.splits["zero"], bundle.representations["triv"])
    # hand convolution: e^a hits the socle after (p-1-a) more letters, and
    # the normalization leaves binomial(2, a) on the antidiagonal
    assert phi.matrix.tolist() == [[0, 0, 2], [0, 2, 0], [2, 0, 0]]


def test_phi_isomorphism_small_instances():
    for bundle, split, rep in _pairs("abelian1-p3", "oddline-p3", "heis-p3", "gl11-p3"):
        ok, msg = phi_isomorphism_check(split, rep)
        assert ok, f"{rep.name}: {msg}"
        ok, msg = phi_isomorphism_check(split, twisted_dual(rep))
        assert ok, f"twisted dual of {rep.name}: {msg}"


def test_gram_frozen_oddline():
    bundle = load_bundle("oddline-p3")
    res = coind_duality_gram(bundle.splits["zero"], bundle.representations["triv"])
    assert res.matrix.tolist() == [[0, 1], [1, 0]]


def test_gram_routes_agree_and_invariance():
    for bundle, split, rep in _pairs("abelian1-p3", "oddline-p3", "heis-p3", "sl2-p3"):
        p = split.algebra.p
        res = coind_duality_gram(split, rep)
        direct_route = coind_duality_gram(split, rep, direct=True).matrix
        assert np.array_equal(res.matrix, direct_route), rep.name
        assert rank(res.matrix, p) == res.matrix.shape[0]
        ok, msg = gram_invariance_check(split, rep, res)
        assert ok, f"{rep.name}: {msg}"


def test_theta_frozen_abelian():
    bundle = load_bundle("abelian1-p3")
    theta = coind_to_ind_dual_map(bundle.splits["zero"], bundle.representations["triv"])
    # antipode sends e^a to (-1)^a e^a and the pairing is diagonal here
    assert theta.matrix.tolist() == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]


def test_theta_equivariance():
    for bundle, split, rep in _pairs("abelian1-p3", "heis-p3", "gl11-p3"):
        theta = coind_to_ind_dual_map(split, rep)
        ok, msg = theta_equivariance_check(split, rep, theta)
        assert ok, f"{rep.name}: {msg}"


def test_factorization_through_the_curried_gram():
    picked = ("abelian1-p3", "oddline-p3", "heis-p3", "gl11-p3", "abelian22-p3")
    for bundle, split, rep in _pairs(*picked):
        curried = curried_gram(coind_duality_gram(split, rep))
        assert rank(curried, split.algebra.p) == curried.shape[0]
        ok, msg = gram_factorization_check(split, rep)
        assert ok, f"{bundle.algebra.name}/{split.name}/{rep.name}: {msg}"


# ------------------------------------------------------------------
# annihilators
# ------------------------------------------------------------------


def test_annihilator_of_regular_module_is_zero():
    bundle = load_bundle("abelian1-p3")
    ann, labels = annihilator(bundle.splits["zero"], bundle.representations["triv"])
    assert ann.dim == 0
    assert len(labels) == 3  # the restricted monomial window


def test_annihilator_duality_small():
    for bundle, split, rep in _pairs("abelian1-p3", "oddline-p3", "heis-p3"):
        ok, msg = annihilator_duality_check(split, rep)
        assert ok, f"{rep.name}: {msg}"
        ok, msg = annihilator_duality_check(split, twisted_dual(rep))
        assert ok, f"twisted dual of {rep.name}: {msg}"


# ------------------------------------------------------------------
# truncated levels
# ------------------------------------------------------------------


@pytest.mark.parametrize("level", [0, 1])
def test_sampled_level_checks(level):
    for name in ("abelian1-p3", "sl2-p3"):
        bundle = load_bundle(name)
        for split in bundle.splits.values():
            for rep in bundle.representations.values():
                if rep.split is not split:
                    continue
                for check in (balance_check, level_raising_check, injectivity_witness_check):
                    ok, msg = check(split, rep, level=level, seed=0, samples=10)
                    assert ok, f"{check.__name__} on {name}/{rep.name}: {msg}"
                ok, msg = equivariance_probe(split, rep, level=level, seed=0, samples=5)
                assert ok
                assert "agree" in msg
