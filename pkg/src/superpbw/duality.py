"""The induced/coinduced comparison maps and their exact certificates.

Everything here is phrased over a split g = h (+) c and a representation
pi of h.  The socle functional is the top dual monomial of the coordinate
algebra; convolving against it turns induced elements into coinduced ones.
The Gram matrix couples the coinduction of pi with the coinduction of the
twisted dual, and factors through the induced-dual map; annihilators of
the two coinductions match through the antipode.  Level-r variants widen
the window to even exponents below p^(r+1) inside the full enveloping
algebra.
"""

from __future__ import annotations

import random
from collections import namedtuple

import numpy as np

from .fp import koszul_sign
from .linalg import SubspaceBasis, matrix_from_columns, nullspace, rank, subspace_equal
from .pbw import (
    UElement,
    antipode,
    get_engine,
    normal_order_split,
    restricted_monomials,
)
from .modules import (
    CoinducedModule,
    CoordinateAlgebra,
    InducedModule,
    dual_action_matrix,
    twist,
    twisted_dual,
)

PhiResult = namedtuple("PhiResult", "matrix source target sigma")
GramResult = namedtuple("GramResult", "matrix left right")
ThetaResult = namedtuple("ThetaResult", "matrix source target sigma")


def socle_functional(split) -> dict:
    """Top dual monomial: the product of all (p-1)-st even duals and all
    odd duals, computed by honest convolution."""
    alg = CoordinateAlgebra(split)
    p = split.algebra.p
    factors = []
    for i in range(split.n_even):
        factors.extend([alg.eta(i)] * (p - 1))
    for s in range(split.m_odd):
        factors.append(alg.zeta(s))
    return alg.mul_many(factors)


def socle_level(split, level: int) -> dict:
    """Level widening of the socle: all base-p digit duals up to the level."""
    alg = CoordinateAlgebra(split, level=level)
    p = split.algebra.p
    factors = []
    for i in range(split.n_even):
        for j in range(level + 1):
            factors.extend([alg.eta_power(i, j)] * (p - 1))
    for s in range(split.m_odd):
        factors.append(alg.zeta(s))
    return alg.mul_many(factors)


def socle_character_check(split, level=None) -> tuple[bool, str]:
    """The socle line is killed by every positive dual monomial and scales
    by the supertrace character under the subalgebra action."""
    alg = CoordinateAlgebra(split, level=level)
    lam = socle_functional(split) if level is None else socle_level(split, level)
    top = max(alg.c_monomials, key=sum)
    if set(lam) != {top}:
        return False, f"socle support is {sorted(lam)} instead of the top monomial"
    for cm in alg.c_monomials:
        if not any(cm):
            continue
        if alg.mul({cm: 1}, lam):
            return False, f"dual monomial {cm} does not kill the socle"
    chi = split.supertrace_character()
    restricted = level is None
    for h in split.h_indices:
        u = UElement.generator(split.algebra, h, restricted=restricted)
        acted = alg.act(u, lam)
        want = alg.scale(chi.value(h), lam)
        if not alg.equal(acted, want):
            return False, f"subalgebra generator b_{h} scales the socle wrongly"
    return True, f"socle coefficient {lam[top]} at {top}"


def mu_product_check(split) -> tuple[bool, str]:
    """Convolution of dual monomials against the closed law: binomials on
    even letters, a sorting sign on odd letters, zero past the window."""
    import math

    alg = CoordinateAlgebra(split)
    p = split.algebra.p
    n, m = split.n_even, split.m_odd
    for cm1 in alg.c_monomials:
        for cm2 in alg.c_monomials:
            got = alg.mul({cm1: 1}, {cm2: 1})
            coeff = 1
            for i in range(n):
                if cm1[i] + cm2[i] > p - 1:
                    coeff = 0
                    break
                coeff = coeff * math.comb(cm1[i] + cm2[i], cm1[i]) % p
            if coeff and any(cm1[n + s] and cm2[n + s] for s in range(m)):
                coeff = 0
            if coeff:
                first = [s for s in range(m) if cm1[n + s]]
                second = [s for s in range(m) if cm2[n + s]]
                merged = first + second
                ranks = {v: r for r, v in enumerate(sorted(merged))}
                perm = [ranks[v] for v in merged]
                coeff = coeff * koszul_sign(perm, [1] * len(perm)) % p
                if len(first) % 2 and len(second) % 2:
                    coeff = (p - coeff) % p
            want = (
                {tuple(x + y for x, y in zip(cm1, cm2)): coeff} if coeff else {}
            )
            if not alg.equal(got, want):
                return False, f"product law fails at {cm1} * {cm2}"
    for i in range(n):
        if alg.power(alg.eta(i), p):
            return False, f"even dual {i} has nonzero p-th power"
    for s in range(m):
        if alg.power(alg.zeta(s), 2):
            return False, f"odd dual {s} has nonzero square"
    return True, f"{len(alg.c_monomials) ** 2} products checked"


def ind_to_coind_map(split, rep) -> PhiResult:
    """Matrix of the map sending cm tensor v to cm acting on (socle * v)."""
    p = split.algebra.p
    sigma = twist(rep, split.supertrace_character(), split.m_odd)
    source = InducedModule(split, sigma)
    target = CoinducedModule(split, rep)
    lam = socle_functional(split)
    sections = [
        target.smul(lam, target.delta((0,) * len(split.c_indices), k))
        for k in range(rep.dim)
    ]
    out = np.zeros((target.dim, source.dim), dtype=np.int64)
    for cm in source.c_monomials:
        u = source.c_element(cm)
        col0 = source.index[cm, 0]
        for k in range(rep.dim):
            out[:, col0 + k] = target.to_vector(target.act(u, sections[k]))
    return PhiResult(out % p, source, target, sigma)


def phi_isomorphism_check(split, rep) -> tuple[bool, str]:
    """The induced-to-coinduced map is invertible and commutes with the
    action of every generator."""
    p = split.algebra.p
    phi = ind_to_coind_map(split, rep)
    if rank(phi.matrix, p) != phi.matrix.shape[0]:
        return False, "comparison matrix is singular"
    for g in range(split.algebra.dim):
        a = phi.source.generator_matrix(g)
        b = phi.target.generator_matrix(g)
        if ((phi.matrix @ a - b @ phi.matrix) % p).any():
            return False, f"does not intertwine generator b_{g}"
    return True, f"bijective on dimension {phi.matrix.shape[0]}"


def _unshuffle_sign(split, cm1, cm2) -> int:
    """Koszul sign of splitting the odd top letters into cm1-first order."""
    m = split.m_odd
    n = split.n_even
    first = [s for s in range(m) if cm1[n + s]]
    second = [s for s in range(m) if cm2[n + s]]
    return koszul_sign(first + second, [1] * m)


def _direct_split_coeff(split, cm1, cm2) -> int:
    """Coefficient of (cm1, cm2) in the coproduct of the top monomial,
    computed combinatorially: binomials on even letters, an unshuffle
    sign on odd letters."""
    import math

    p = split.algebra.p
    n = split.n_even
    coeff = 1
    for i in range(n):
        if cm1[i] + cm2[i] != p - 1:
            return 0
        coeff = coeff * math.comb(p - 1, cm1[i]) % p
    for s in range(split.m_odd):
        if cm1[n + s] + cm2[n + s] != 1:
            return 0
    return coeff * _unshuffle_sign(split, cm1, cm2) % p


def coind_duality_gram(split, rep, direct=False) -> GramResult:
    """Gram matrix coupling the coinduction of rep with the coinduction of
    its twisted dual, normalized by the socle coefficient."""
    alg = split.algebra
    p = alg.p
    f = alg.field
    left = CoinducedModule(split, rep)
    right = CoinducedModule(split, twisted_dual(rep))
    n, m = split.n_even, split.m_odd
    norm = f.mul(
        -1 if (n * (n - 1) // 2) % 2 else 1,
        f.inv(pow(f.factorial(p - 1), n, p)),
    )
    top_local = (p - 1,) * n + (1,) * m
    out = np.zeros((left.dim, right.dim), dtype=np.int64)
    if direct:
        splits = {}
        for cm1 in left.c_monomials:
            cm2 = tuple(t - a for t, a in zip(top_local, cm1))
            if left.in_window(cm2):
                c = _direct_split_coeff(split, cm1, cm2)
                if c:
                    splits[cm1, cm2] = c
    else:
        eng = get_engine(alg, restricted=True)
        splits = {}
        for (m1, m2), coeff in eng.coproduct_mono(left.global_mono(top_local)).items():
            splits[left.local_of(m1), right.local_of(m2)] = coeff
    for (cm1, cm2), coeff in splits.items():
        i0 = left.index[cm1, 0]
        j0 = right.index[cm2, 0]
        par2 = (sum(cm2[n:]) ) % 2
        for k in range(rep.dim):
            lam_par = (left.c_mono_parity(cm1) + rep.parities[k]) % 2
            sign = -1 if lam_par and par2 else 1
            vp = -1 if rep.parities[k] else 1
            out[i0 + k, j0 + k] = f.mul(norm, f.mul(coeff, f.mul(sign, vp)))
    return GramResult(out, left, right)


def curried_gram(gram: GramResult) -> np.ndarray:
    """Reads the pairing as a map into the dual of the left slot.

    Feeding the left argument into the curried functional costs its own
    parity as a sign; reversing the m odd socle letters and undoing the
    even normalization sign contribute a global (-1)^(m(m+1)/2 + n(n-1)/2).
    """
    split = gram.left.split
    p = split.algebra.p
    n, m = split.n_even, split.m_odd
    global_sign = -1 if (m * (m + 1) // 2 + n * (n - 1) // 2) % 2 else 1
    row = np.array(
        [global_sign * (-1 if q else 1) for q in gram.left.basis_parities],
        dtype=np.int64,
    )
    return (gram.matrix * row[:, None]) % p


def gram_invariance_check(split, rep, gram: GramResult) -> tuple[bool, str]:
    """The pairing kills the diagonal action of every generator."""
    alg = split.algebra
    p = alg.p
    g_mat = gram.matrix
    for g in range(alg.dim):
        a = gram.left.generator_matrix(g)
        b = gram.right.generator_matrix(g)
        qg = alg.parities[g]
        d = np.diag([-1 if (qg * q) % 2 else 1 for q in gram.left.basis_parities])
        if ((a.T @ g_mat + d @ g_mat @ b) % p).any():
            return False, f"generator b_{g} breaks the pairing invariance"
    return True, ""


def coind_to_ind_dual_map(split, rep) -> ThetaResult:
    """Functionals on the induced module, obtained by antipoding the
    induced monomial into the coinduction of the twisted dual."""
    alg = split.algebra
    p = alg.p
    sigma = twist(rep, split.supertrace_character(), split.m_odd)
    sigma_dual = twisted_dual(rep)
    source = CoinducedModule(split, sigma_dual)
    ind = InducedModule(split, sigma)
    dv = rep.dim
    out = np.zeros((ind.dim, source.dim), dtype=np.int64)
    for cm in ind.c_monomials:
        s_cm = antipode(ind.c_element(cm))
        row0 = ind.index[cm, 0]
        cm_par = ind.c_mono_parity(cm)
        for c2, inner in normal_order_split(s_cm, split, side="left").items():
            col0 = source.index.get((c2, 0))
            if col0 is None:
                continue
            block = np.zeros((dv, dv), dtype=np.int64)
            for h_exps, coeff in inner.items():
                block = (block + coeff * sigma_dual.h_monomial_matrix(h_exps)) % p
            if cm_par:
                # arguments pass each other: functional parity times |cm|
                c2_par = source.c_mono_parity(c2)
                signs = np.array(
                    [-1 if (q + c2_par) % 2 else 1 for q in sigma_dual.parities],
                    dtype=np.int64,
                )
                block = block * signs[None, :]
            out[row0 : row0 + dv, col0 : col0 + dv] = (
                out[row0 : row0 + dv, col0 : col0 + dv] + block
            ) % p
    return ThetaResult(out, source, ind, sigma)


def theta_equivariance_check(split, rep, theta: ThetaResult) -> tuple[bool, str]:
    alg = split.algebra
    p = alg.p
    ind = theta.target
    for g in range(alg.dim):
        b = theta.source.generator_matrix(g)
        a = ind.generator_matrix(g)
        a_dual = dual_action_matrix(a, alg.parities[g], ind.basis_parities, p)
        if ((theta.matrix @ b - a_dual @ theta.matrix) % p).any():
            return False, f"generator b_{g} breaks the dual-map equivariance"
    return True, ""


def gram_factorization_check(split, rep) -> tuple[bool, str]:
    """The induced-dual map factors as transposed iso times curried Gram."""
    p = split.algebra.p
    phi = ind_to_coind_map(split, rep)
    gram = coind_duality_gram(split, rep)
    theta = coind_to_ind_dual_map(split, rep)
    lhs = (phi.matrix.T @ curried_gram(gram)) % p
    if not np.array_equal(lhs, theta.matrix % p):
        return False, "transpose(phi) @ curried gram differs from the dual map"
    return True, ""


def annihilator(split, rep, level=None) -> tuple[SubspaceBasis, list]:
    """Two-sided ideal of the restricted enveloping algebra killing the
    coinduction of rep, as coordinates over the monomial basis."""
    alg = split.algebra
    co = CoinducedModule(split, rep, level=level)
    monos = restricted_monomials(alg)
    cols = []
    for mono in monos:
        u = UElement(alg, True, {mono: 1})
        act = co.action_matrix(u)
        col = {}
        for i, j in zip(*np.nonzero(act)):
            col[int(i), int(j)] = int(act[i, j])
        cols.append(col)
    mat, _ = matrix_from_columns(cols, alg.p)
    return nullspace(mat, alg.p), monos


def annihilator_duality_check(split, rep) -> tuple[bool, str]:
    """ann Coind(rep) is the antipode image of ann Coind(twisted dual),
    and both are two-sided."""
    alg = split.algebra
    ideal_left, monos = annihilator(split, rep)
    ideal_right, _ = annihilator(split, twisted_dual(rep))
    index = {m: i for i, m in enumerate(monos)}

    def to_element(vec) -> UElement:
        return UElement(alg, True, {monos[i]: int(c) for i, c in enumerate(vec) if c})

    def to_vec(u: UElement):
        out = np.zeros(len(monos), dtype=np.int64)
        for mono, c in u.terms.items():
            out[index[mono]] = c
        return out

    antipoded = [to_vec(antipode(to_element(v))) for v in ideal_right.vectors]
    image = SubspaceBasis.from_vectors(antipoded, alg.p, len(monos)) if antipoded else SubspaceBasis(len(monos), alg.p)
    if not subspace_equal(ideal_left, image):
        return False, "antipode image of the right annihilator mismatches the left"
    for ideal in (ideal_left, ideal_right):
        for vec in ideal.vectors:
            u = to_element(vec)
            for g in range(alg.dim):
                x = UElement.generator(alg, g)
                if not ideal.contains(to_vec(x * u)) or not ideal.contains(to_vec(u * x)):
                    return False, f"annihilator is not two-sided at generator b_{g}"
    return True, f"annihilator dimension {ideal_left.dim} of {len(monos)}"


class LevelEvaluator:
    """Evaluates induced data against the level-r socle of the coinduction."""

    def __init__(self, split, rep, level: int) -> None:
        self.split = split
        self.rep = rep
        self.level = level
        self.module = CoinducedModule(split, rep, level=level)
        self.socle = socle_level(split, level)
        self._lam_cache: dict = {}

    def socle_section(self, vec) -> dict:
        key = tuple(int(x) % self.split.algebra.p for x in vec)
        hit = self._lam_cache.get(key)
        if hit is None:
            hit = self.module.smul(self.socle, self.module.vhat(vec))
            self._lam_cache[key] = hit
        return hit

    def eval(self, u: UElement, vec, w_exps) -> np.ndarray:
        """Value at the window monomial w of the functional built from u, vec."""
        w = self.module.c_element(tuple(w_exps))
        return self.module.pair_eval(w * u, self.socle_section(vec))


def _random_filtered_element(split, rng, level: int, terms=3) -> UElement:
    """Random element with complement exponents inside the level window."""
    alg = split.algebra
    p = alg.p
    bound = p ** (level + 1)
    out = {}
    for _ in range(terms):
        mono = [0] * alg.dim
        for h in split.h_indices:
            mono[h] = rng.randrange(2 if alg.parities[h] else p)
        for g in split.c_indices:
            if alg.parities[g]:
                mono[g] = rng.randrange(2)
            else:
                mono[g] = rng.randrange(bound)
        out[tuple(mono)] = rng.randrange(1, p)
    return UElement(alg, False, out)


def balance_check(split, rep, level=1, seed=0, samples=12) -> tuple[bool, str]:
    """Pushing a subalgebra generator through the evaluation costs the
    supertrace character plus the twisted module action."""
    alg = split.algebra
    p = alg.p
    rng = random.Random(seed)
    ev = LevelEvaluator(split, rep, level)
    chi = split.supertrace_character()
    m = split.m_odd
    for _ in range(samples):
        u = _random_filtered_element(split, rng, level)
        vec = np.array([rng.randrange(p) for _ in range(rep.dim)], dtype=np.int64)
        w = ev.module.c_monomials[rng.randrange(len(ev.module.c_monomials))]
        for h in split.h_indices:
            uh = u * UElement.generator(alg, h, restricted=False)
            lhs = ev.eval(uh, vec, w)
            sign = -1 if (m * alg.parities[h]) % 2 else 1
            rhs = (
                chi.value(h) * ev.eval(u, vec, w)
                + sign * ev.eval(u, (rep.matrices[h] @ vec) % p, w)
            ) % p
            if not np.array_equal(lhs, rhs % p):
                return False, f"balance fails at generator b_{h}"
    return True, ""


def level_raising_check(split, rep, level=1, seed=0, samples=8) -> tuple[bool, str]:
    """Raising the window by one digit is convolution by the next digit's
    (p-1)-st dual power."""
    alg = split.algebra
    p = alg.p
    rng = random.Random(seed)
    low = LevelEvaluator(split, rep, level)
    high = LevelEvaluator(split, rep, level + 1)
    raiser = CoordinateAlgebra(split, level=level + 1)
    factors = []
    for i in range(split.n_even):
        factors.extend([raiser.eta_power(i, level + 1)] * (p - 1))
    a_func = raiser.mul_many(factors)
    eng = high.module.engine
    for _ in range(samples):
        u = _random_filtered_element(split, rng, level)
        vec = np.array([rng.randrange(p) for _ in range(rep.dim)], dtype=np.int64)
        w = high.module.c_monomials[rng.randrange(len(high.module.c_monomials))]
        rhs = high.eval(u, vec, w)
        lhs = np.zeros(rep.dim, dtype=np.int64)
        for (m1, m2), coeff in eng.coproduct_mono(high.module.global_mono(w)).items():
            aval = a_func.get(high.module.local_of(m1))
            if not aval:
                continue
            lhs = (lhs + coeff * aval * low.eval(u, vec, high.module.local_of(m2))) % p
        if not np.array_equal(lhs, rhs):
            return False, f"level raise mismatch at window monomial {w}"
    return True, ""


def injectivity_witness_check(split, rep, level=1, seed=0, samples=10) -> tuple[bool, str]:
    """Every nonzero window element hits the top through a complementary
    witness monomial."""
    alg = split.algebra
    p = alg.p
    rng = random.Random(seed)
    ev = LevelEvaluator(split, rep, level)
    window = ev.module.c_monomials
    bound = p ** (level + 1)
    top = (bound - 1,) * split.n_even + (1,) * split.m_odd
    for _ in range(samples):
        picks = rng.sample(range(len(window)), k=min(3, len(window)))
        terms = {}
        for i in picks:
            cm = window[i]
            terms[ev.module.global_mono(cm)] = rng.randrange(1, p)
        u = UElement(alg, False, terms)
        support = [ev.module.local_of(mono) for mono in u.terms]
        lead = max(support, key=lambda cm: (sum(cm), cm))
        witness = tuple(t - a for t, a in zip(top, lead))
        vec = np.zeros(rep.dim, dtype=np.int64)
        vec[rng.randrange(rep.dim)] = rng.randrange(1, p)
        value = ev.eval(u, vec, witness)
        if not value.any():
            return False, f"witness {witness} fails for leading monomial {lead}"
    return True, ""


def equivariance_probe(split, rep, level=1, seed=0, samples=8) -> tuple[bool, str]:
    """Diagnostic only: compares raising after acting with acting after
    raising; window-edge samples may disagree, so this never fails."""
    alg = split.algebra
    p = alg.p
    rng = random.Random(seed)
    low = LevelEvaluator(split, rep, level)
    high = LevelEvaluator(split, rep, level + 1)
    raiser = CoordinateAlgebra(split, level=level + 1)
    factors = []
    for i in range(split.n_even):
        factors.extend([raiser.eta_power(i, level + 1)] * (p - 1))
    a_func = raiser.mul_many(factors)
    eng = high.module.engine
    agree = disagree = 0
    for _ in range(samples):
        u = _random_filtered_element(split, rng, level)
        vec = np.array([rng.randrange(p) for _ in range(rep.dim)], dtype=np.int64)
        g = rng.randrange(alg.dim)
        xu = UElement.generator(alg, g, restricted=False) * u
        w = high.module.c_monomials[rng.randrange(len(high.module.c_monomials))]
        rhs = high.eval(xu, vec, w)
        lhs = np.zeros(rep.dim, dtype=np.int64)
        for (m1, m2), coeff in eng.coproduct_mono(high.module.global_mono(w)).items():
            aval = a_func.get(high.module.local_of(m1))
            if not aval:
                continue
            lhs = (lhs + coeff * aval * low.eval(xu, vec, high.module.local_of(m2))) % p
        if np.array_equal(lhs, rhs):
            agree += 1
        else:
            disagree += 1
    return True, f"agree {agree} disagree {disagree}"
