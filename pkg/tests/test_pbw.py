import numpy as np
import pytest

from superpbw import (
    UElement,
    antipode,
    coproduct,
    counit,
    filtration_degree,
    get_engine,
    load_bundle,
    monomials_of_degree_at_most,
    normal_order_split,
    primitive_space,
    restricted_monomials,
)
from superpbw.pbw import TensorSquare, simple_tensor


def _gen(alg, name):
    return UElement.generator(alg, alg.index_of(name))


def test_engine_is_cached_per_algebra():
    alg = load_bundle("sl2-p3").algebra
    assert get_engine(alg) is get_engine(alg)
    assert get_engine(alg, restricted=False) is not get_engine(alg)


def test_restricted_monomial_counts():
    for name, want in [("sl2-p3", 27), ("heis-p3", 12), ("gl11-p3", 36), ("sl2-p5", 125)]:
        alg = load_bundle(name).algebra
        assert len(restricted_monomials(alg)) == want


def test_monomials_of_degree_at_most():
    alg = load_bundle("heis-p3").algebra  # one even, two odd letters
    monos = monomials_of_degree_at_most(alg, 4)
    assert all(sum(m) <= 4 for m in monos)
    assert len(monos) == len(set(monos))
    # even exponent up to 4, odd exponents 0/1, total degree capped
    assert len(monos) == sum(1 for k in range(5) for a in (0, 1) for b in (0, 1) if k + a + b <= 4)


# ------------------------------------------------------------------
# straightening oracles
# ------------------------------------------------------------------


def test_sl2_straightening():
    alg = load_bundle("sl2-p3").algebra
    h, e, f = _gen(alg, "h"), _gen(alg, "e"), _gen(alg, "f")
    assert (e * f).terms == {(0, 1, 1): 1}
    # f e = e f - h, hand straightened
    assert (f * e).terms == {(0, 1, 1): 1, (1, 0, 0): 2}
    assert (f * h).terms == {(1, 0, 1): 1, (0, 0, 1): 2}  # f h = h f + 2f


def test_restricted_power_rule():
    alg = load_bundle("sl2-p3").algebra
    h, e = _gen(alg, "h"), _gen(alg, "e")
    h2 = UElement.monomial(alg, (2, 0, 0))
    assert (h2 * h).terms == {(1, 0, 0): 1}  # h^[3] = h
    e2 = UElement.monomial(alg, (0, 2, 0))
    assert (e2 * e).terms == {}  # e^[3] = 0


def test_odd_squares():
    cl = load_bundle("clifford-p3").algebra
    eps = _gen(cl, "eps")
    assert (eps * eps).terms == {(1, 0): 2}  # eps^2 = (1/2)[eps, eps] = 2z mod 3
    he = load_bundle("heis-p3").algebra
    e1, e2 = _gen(he, "e1"), _gen(he, "e2")
    assert (e1 * e1).terms == {}
    assert (e1 * e2 + e2 * e1).terms == {(1, 0, 0): 1}  # {e1, e2} = z


def test_unrestricted_words_raise_cap():
    alg = load_bundle("abelian1-p3").algebra
    a = UElement.monomial(alg, (5,), restricted=False)
    b = UElement.monomial(alg, (6,), restricted=False)
    assert (a * b).terms == {(11,): 1}


def test_uelement_arithmetic():
    alg = load_bundle("sl2-p3").algebra
    h, e = _gen(alg, "h"), _gen(alg, "e")
    u = 2 * h + e
    assert (u - u).terms == {}
    assert u.parity() == 0
    assert (u * UElement.one(alg)).terms == u.terms
    assert (UElement.zero(alg) * u).terms == {}
    assert u.degree() == 1
    x = _gen(load_bundle("heis-p3").algebra, "e1")
    assert x.parity() == 1


# ------------------------------------------------------------------
# Hopf structure
# ------------------------------------------------------------------


def test_coproduct_of_square():
    alg = load_bundle("sl2-p3").algebra
    hh = UElement.monomial(alg, (2, 0, 0))
    got = coproduct(hh)
    h = UElement.monomial(alg, (1, 0, 0))
    want = (
        simple_tensor(UElement.monomial(alg, (2, 0, 0)), UElement.one(alg))
        + simple_tensor(h.scale(2), h)
        + simple_tensor(UElement.one(alg), UElement.monomial(alg, (2, 0, 0)))
    )
    assert got == want


def test_coproduct_is_multiplicative():
    alg = load_bundle("gl11-p3").algebra
    rng = np.random.default_rng(11)
    monos = restricted_monomials(alg)
    for _ in range(15):
        m1 = monos[int(rng.integers(len(monos)))]
        m2 = monos[int(rng.integers(len(monos)))]
        u, v = UElement.monomial(alg, m1), UElement.monomial(alg, m2)
        assert coproduct(u) * coproduct(v) == coproduct(u * v)


def test_counit():
    alg = load_bundle("sl2-p3").algebra
    assert counit(UElement.one(alg)) == 1
    assert counit(_gen(alg, "h")) == 0
    u = UElement.one(alg) + _gen(alg, "e")
    v = UElement.one(alg).scale(2) + _gen(alg, "f")
    assert counit(u * v) == counit(u) * counit(v) % 3


def test_antipode_values():
    alg = load_bundle("sl2-p3").algebra
    e, f = _gen(alg, "e"), _gen(alg, "f")
    assert antipode(e).terms == {(0, 1, 0): 2}
    assert antipode(e * f).terms == (f * e).terms  # S(ef) = S(f)S(e) = fe
    # S is an involution on an enveloping algebra
    rng = np.random.default_rng(5)
    monos = restricted_monomials(load_bundle("gl11-p3").algebra)
    galg = load_bundle("gl11-p3").algebra
    for _ in range(10):
        m = monos[int(rng.integers(len(monos)))]
        u = UElement.monomial(galg, m)
        assert antipode(antipode(u)) == u


def test_antipode_convolution_identity():
    alg = load_bundle("heis-p3").algebra
    for m in restricted_monomials(alg):
        u = UElement.monomial(alg, m)
        acc = UElement.zero(alg)
        for (a, b), c in coproduct(u).terms.items():
            acc = acc + (antipode(UElement.monomial(alg, a)) * UElement.monomial(alg, b)).scale(c)
        want = UElement.one(alg).scale(counit(u))
        assert acc == want


# ------------------------------------------------------------------
# splitting and filtration
# ------------------------------------------------------------------


def _rebuild(alg, split, parts, side):
    total = UElement.zero(alg)
    for c_exps, inner in parts.items():
        cm = [0] * alg.dim
        for g, v in zip(split.c_indices, c_exps):
            cm[g] = v
        c_el = UElement.monomial(alg, tuple(cm))
        for h_exps, coeff in inner.items():
            hm = [0] * alg.dim
            for g, v in zip(split.h_indices, h_exps):
                hm[g] = v
            h_el = UElement.monomial(alg, tuple(hm))
            prod = h_el * c_el if side == "left" else c_el * h_el
            total = total + prod.scale(coeff)
    return total


@pytest.mark.parametrize("side", ["left", "right"])
def test_normal_order_split_roundtrip(side):
    bundle = load_bundle("sl2-p3")
    split = bundle.splits["borel"]
    alg = bundle.algebra
    rng = np.random.default_rng(17)
    monos = restricted_monomials(alg)
    for _ in range(10):
        u = UElement.zero(alg)
        for m in monos:
            c = int(rng.integers(0, 3))
            if c:
                u = u + UElement.monomial(alg, m).scale(c)
        parts = normal_order_split(u, split, side=side)
        assert _rebuild(alg, split, parts, side) == u


def test_normal_order_split_rejects_bad_side():
    bundle = load_bundle("sl2-p3")
    u = UElement.one(bundle.algebra)
    with pytest.raises(ValueError):
        normal_order_split(u, bundle.splits["borel"], side="up")


def test_filtration_degree():
    bundle = load_bundle("sl2-p3")
    split = bundle.splits["borel"]
    alg = bundle.algebra
    assert filtration_degree(UElement.one(alg), split) == -1
    assert filtration_degree(_gen(alg, "h"), split) == -1
    assert filtration_degree(_gen(alg, "f"), split) == 0
    f9 = UElement.monomial(alg, (0, 0, 9), restricted=False)
    assert filtration_degree(f9, split) == 2


# ------------------------------------------------------------------
# primitives
# ------------------------------------------------------------------


def test_restricted_primitives_are_the_generators():
    for name in ("sl2-p3", "heis-p3", "gl11-p3"):
        alg = load_bundle(name).algebra
        space, labels = primitive_space(alg)
        assert space.dim == alg.dim
        for i in range(alg.dim):
            vec = [0] * len(labels)
            gen = tuple(1 if k == i else 0 for k in range(alg.dim))
            vec[labels.index(gen)] = 1
            assert space.contains(vec)


def test_truncated_primitives_grow_with_window():
    alg = load_bundle("abelian1-p3").algebra
    # binom(3, k) and binom(9, k) vanish mod 3 away from the ends, so each
    # window [0, 3^(r+1)] contributes exactly the p-th power ladder
    space, _ = primitive_space(alg, restricted=False, degree_bound=2)
    assert space.dim == 1
    space, _ = primitive_space(alg, restricted=False, degree_bound=3)
    assert space.dim == 2
    space, labels = primitive_space(alg, restricted=False, degree_bound=9)
    assert space.dim == 3
    for exps in ((1,), (3,), (9,)):
        vec = [0] * len(labels)
        vec[labels.index(exps)] = 1
        assert space.contains(vec)
