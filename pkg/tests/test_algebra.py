import numpy as np
import pytest

from superpbw import (
    Character,
    LieSuperAlgebra,
    StructureError,
    SubalgebraSplit,
    catalog_names,
    load_bundle,
)


def test_catalog_algebras_validate():
    for name in catalog_names():
        alg = load_bundle(name).algebra
        for prop, (ok, msg) in alg.validate().items():
            assert ok, f"{name} fails {prop}: {msg}"
        assert alg.is_valid()


def test_bracket_tables_sl2():
    alg = load_bundle("sl2-p3").algebra
    h, e, f = (alg.index_of(n) for n in "hef")
    assert alg.bracket_coords(h, e) == (0, 2, 0)
    assert alg.bracket_coords(e, h) == (0, 1, 0)  # -2e mod 3
    assert alg.bracket_coords(e, f) == (1, 0, 0)
    assert alg.bracket_coords(f, e) == (2, 0, 0)
    assert alg.p_map[h] == (1, 0, 0)
    ad_h = alg.ad(h)
    assert ad_h[e, e] == 2 and ad_h[f, f] == 1


def test_odd_self_bracket_clifford():
    alg = load_bundle("clifford-p3").algebra
    eps = alg.index_of("eps")
    # odd generators may square to something nonzero
    assert alg.bracket_coords(eps, eps) == (1, 0)


def test_bracket_vec_bilinear():
    alg = load_bundle("heis-p3").algebra
    rng = np.random.default_rng(3)
    for _ in range(20):
        x, y = rng.integers(0, 3, size=(2, alg.dim))
        lhs = alg.bracket_vec(x, y)
        cols = np.array([alg.bracket_vec(np.eye(alg.dim, dtype=int)[i], y) for i in range(alg.dim)])
        rhs = tuple(int(v) for v in x @ cols % 3)
        assert lhs == rhs


# ------------------------------------------------------------------
# negative fixtures: each axiom can actually fail
# ------------------------------------------------------------------


def test_antisymmetry_violation_detected():
    # conflicting two-sided brackets are refused outright
    with pytest.raises(StructureError):
        LieSuperAlgebra(3, ["x", "y"], [0, 0], {(0, 1): [0, 1], (1, 0): [0, 1]})
    with pytest.raises(StructureError):
        LieSuperAlgebra(3, ["x"], [0], {(0, 0): [1]})


def test_jacobi_violation_detected():
    alg = LieSuperAlgebra(
        3,
        ["x", "y", "z"],
        [0, 0, 0],
        {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (0, 2): [1, 0, 0]},
    )
    ok, msg = alg.validate()["jacobi"]
    assert not ok and "jacobi" in msg


def test_p_map_violation_detected():
    # so(3) shape with the default zero p-map: (ad x)^3 = -ad x != 0
    alg = LieSuperAlgebra(
        3,
        ["x", "y", "z"],
        [0, 0, 0],
        {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (2, 0): [0, 1, 0]},
    )
    ok, _ = alg.validate()["p-map"]
    assert not ok


def test_parity_violation_detected():
    alg = LieSuperAlgebra(3, ["x", "eps"], [0, 1], {(0, 1): [1, 0]})
    ok, msg = alg.validate()["parity-additive"]
    assert not ok and "parity" in msg


# ------------------------------------------------------------------
# splits and characters
# ------------------------------------------------------------------


def test_split_shape_counts():
    bundle = load_bundle("gl11-p3")
    split = bundle.splits["sborel"]
    assert split.h_indices == (0, 1, 2)
    assert split.c_indices == (3,)
    assert (split.n_even, split.m_odd) == (0, 1)


def test_split_requires_closure():
    alg = load_bundle("sl2-p3").algebra
    with pytest.raises(StructureError):
        SubalgebraSplit(alg, [alg.index_of("e"), alg.index_of("f")])


def test_supertrace_character_matches_catalog():
    sl2 = load_bundle("sl2-p3")
    assert sl2.splits["borel"].supertrace_character() == sl2.characters["wt1c"]
    gl11 = load_bundle("gl11-p3")
    strad = gl11.splits["sborel"].supertrace_character()
    assert strad.values == (1, 2, 0)
    assert strad == gl11.characters["sdet"]


def test_supertrace_character_full_split_is_zero():
    split = load_bundle("sl2-p3").splits["all"]
    assert all(v == 0 for v in split.supertrace_character().values)


def test_character_must_kill_brackets():
    split = load_bundle("sl2-p3").splits["borel"]
    with pytest.raises(StructureError):
        Character(split, [0, 1])  # e = [h, e]/2 forces chi(e) = 0
    chi = Character(split, [2, 0])
    assert chi.value(split.algebra.index_of("h")) == 2
    assert chi.scaled(2).values == (1, 0)
    assert chi.is_restricted()


def test_character_eval_coords():
    split = load_bundle("sl2-p3").splits["borel"]
    chi = split.supertrace_character()
    assert chi.eval_coords((2, 0, 0)) == 2
    assert chi.eval_coords((0, 1, 0)) == 0
