"""Representations of a split subalgebra and the modules built from them.

A representation of the subalgebra h acts on a graded space V by matrices
over F_p.  From it we build the induced module (free complement monomials
tensor V, with the subalgebra pushed through the tensor sign) and the
coinduced module of h-linear functionals on U(g).

Coinduced elements are stored by their values on complement monomials:
a dict {local exponent tuple: length-dV vector}.  The two-sided pairing
pair(u, lam) below is the single primitive everything else reduces to:
subalgebra letters on the left act through the representation, letters in
the first slot multiply in, and products of functionals expand through the
coproduct with the Koszul sign of the two legs.
"""

from __future__ import annotations

import itertools

import numpy as np

from .fp import ODD
from .algebra import Character, StructureError
from .pbw import UElement, get_engine, normal_order_split


def _matpow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    for _ in range(e):
        out = (out @ a) % p
    return out


class Representation:
    """Restricted representation of the split subalgebra on a graded space.

    matrices maps each subalgebra generator's global index to its action;
    columns are images of basis vectors.  parities grades the module basis.
    """

    def __init__(self, split, parities, matrices, name="") -> None:
        self.split = split
        self.name = name
        self.parities = tuple(int(q) for q in parities)
        self.dim = len(self.parities)
        p = split.algebra.p
        self.matrices: dict[int, np.ndarray] = {}
        for h in split.h_indices:
            a = np.asarray(matrices[h], dtype=np.int64) % p
            if a.shape != (self.dim, self.dim):
                raise ValueError(f"action of b_{h} has shape {a.shape}")
            self.matrices[h] = a
        self._mono_cache: dict[tuple[int, ...], np.ndarray] = {}

    def h_monomial_matrix(self, h_exps) -> np.ndarray:
        """Action of the ordered subalgebra monomial with the given exponents."""
        hit = self._mono_cache.get(h_exps)
        if hit is None:
            p = self.split.algebra.p
            out = np.eye(self.dim, dtype=np.int64)
            for loc, e in enumerate(h_exps):
                if e:
                    out = (out @ _matpow(self.matrices[self.split.h_indices[loc]], e, p)) % p
            self._mono_cache[h_exps] = out
            hit = out
        return hit

    def validate(self) -> dict[str, tuple[bool, str]]:
        report: dict[str, tuple[bool, str]] = {}
        report["parity-pattern"] = self._check_parity_pattern()
        report["brackets"] = self._check_brackets()
        report["p-powers"] = self._check_p_powers()
        return report

    def is_valid(self) -> bool:
        return all(ok for ok, _ in self.validate().values())

    def _check_parity_pattern(self):
        alg = self.split.algebra
        for h, a in self.matrices.items():
            qh = alg.parities[h]
            for i in range(self.dim):
                for j in range(self.dim):
                    if a[i, j] and (self.parities[i] + self.parities[j]) % 2 != qh:
                        return False, f"action of b_{h} is not parity {qh}"
        return True, ""

    def _check_brackets(self):
        alg = self.split.algebra
        p = alg.p
        for i in self.split.h_indices:
            for j in self.split.h_indices:
                a, b = self.matrices[i], self.matrices[j]
                sign = -1 if alg.parities[i] * alg.parities[j] else 1
                lhs = (a @ b - sign * (b @ a)) % p
                rhs = np.zeros_like(lhs)
                for k, c in enumerate(alg.bracket_coords(i, j)):
                    if c:
                        rhs = (rhs + c * self.matrices[k]) % p
                if not np.array_equal(lhs, rhs):
                    return False, f"super commutator of b_{i}, b_{j} mismatches the bracket"
        return True, ""

    def _check_p_powers(self):
        alg = self.split.algebra
        p = alg.p
        for i in self.split.h_indices:
            if alg.parities[i] == ODD:
                continue
            lhs = _matpow(self.matrices[i], p, p)
            rhs = np.zeros((self.dim, self.dim), dtype=np.int64)
            for k, c in enumerate(alg.p_map[i]):
                if c:
                    rhs = (rhs + c * self.matrices[k]) % p
            if not np.array_equal(lhs, rhs):
                return False, f"action of b_{i}^p mismatches the p-map image"
        return True, ""

    def __repr__(self) -> str:
        tag = self.name or "rep"
        return f"<{tag} dim={self.dim} parities={self.parities}>"


def dual_action_matrix(a: np.ndarray, x_parity: int, parities, p: int) -> np.ndarray:
    """Matrix of the dual action: B[i, j] = -(-1)^(|X| k_j) A[j, i]."""
    signs = np.array([-1 if (x_parity * q) % 2 else 1 for q in parities], dtype=np.int64)
    return (-(a.T * signs[None, :])) % p


def contragredient(rep: Representation) -> Representation:
    p = rep.split.algebra.p
    mats = {
        h: dual_action_matrix(a, rep.split.algebra.parities[h], rep.parities, p)
        for h, a in rep.matrices.items()
    }
    return Representation(rep.split, rep.parities, mats, name=f"{rep.name}*" if rep.name else "")


def twist(rep: Representation, character: Character, m: int) -> Representation:
    """Tensor by the one-dimensional parity-m module with the given character.

    The twisting line sits on the left, so odd subalgebra generators pick
    up the Koszul sign of crossing it.
    """
    alg = rep.split.algebra
    m = int(m) % 2
    parities = tuple((q + m) % 2 for q in rep.parities)
    eye = np.eye(rep.dim, dtype=np.int64)
    mats = {}
    for h in rep.split.h_indices:
        sign = -1 if (m * alg.parities[h]) % 2 else 1
        mats[h] = (sign * rep.matrices[h] + character.value(h) * eye) % alg.p
    return Representation(rep.split, parities, mats, name=f"{rep.name}~" if rep.name else "")


def twisted_dual(rep: Representation) -> Representation:
    """Contragredient of the supertrace-character twist by the odd codimension."""
    split = rep.split
    out = contragredient(twist(rep, split.supertrace_character(), split.m_odd))
    out.name = f"{rep.name}^" if rep.name else ""
    return out


def rep_from_character(character: Character, m: int = 0, name="") -> Representation:
    split = character.split
    mats = {h: np.array([[character.value(h)]], dtype=np.int64) for h in split.h_indices}
    return Representation(split, (int(m) % 2,), mats, name=name)


def trivial_rep(split, name="triv") -> Representation:
    chi = Character(split, [0] * len(split.h_indices))
    return rep_from_character(chi, 0, name=name)


class ComplementWindow:
    """Shared exponent window over the complement generators of a split.

    level None means the restricted window (even exponents below p); level
    r means even exponents below p^(r+1) inside the unrestricted algebra.
    """

    def __init__(self, split, level=None) -> None:
        self.split = split
        self.level = level
        self.restricted = level is None
        alg = split.algebra
        p = alg.p
        self.even_bound = p if level is None else p ** (level + 1)
        ranges = [range(self.even_bound)] * split.n_even + [range(2)] * split.m_odd
        self.c_monomials = [tuple(t) for t in itertools.product(*ranges)]
        self.engine = get_engine(alg, restricted=self.restricted)
        if not self.restricted:
            top = split.n_even * (self.even_bound - 1) + split.m_odd
            self.engine.raise_cap(2 * top + alg.dim * p)

    def in_window(self, c_exps) -> bool:
        for loc, e in enumerate(c_exps):
            bound = self.even_bound if loc < self.split.n_even else 2
            if not 0 <= e < bound:
                return False
        return True

    def global_mono(self, c_exps) -> tuple[int, ...]:
        alg = self.split.algebra
        out = [0] * alg.dim
        for loc, e in enumerate(c_exps):
            out[self.split.c_indices[loc]] = e
        return tuple(out)

    def local_of(self, mono) -> tuple[int, ...]:
        """Complement exponents of a global monomial with no subalgebra letters."""
        return tuple(mono[g] for g in self.split.c_indices)

    def c_mono_parity(self, c_exps) -> int:
        return sum(c_exps[self.split.n_even :]) % 2

    def c_element(self, c_exps) -> UElement:
        return UElement.monomial(self.split.algebra, self.global_mono(c_exps), self.restricted)


class InducedModule(ComplementWindow):
    """U(g) tensor V over U(h), on the restricted complement window."""

    def __init__(self, split, rep: Representation) -> None:
        super().__init__(split, level=None)
        self.rep = rep
        self.basis = [(cm, k) for cm in self.c_monomials for k in range(rep.dim)]
        self.index = {bk: i for i, bk in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.basis_parities = tuple(
            (self.c_mono_parity(cm) + rep.parities[k]) % 2 for cm, k in self.basis
        )
        self._matrix_cache: dict = {}

    def action_matrix(self, u: UElement) -> np.ndarray:
        """Left multiplication by u in the monomial-tensor basis."""
        p = self.split.algebra.p
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        dv = self.rep.dim
        for cm in self.c_monomials:
            prod = u * self.c_element(cm)
            parts = normal_order_split(prod, self.split, side="right")
            col0 = self.index[cm, 0]
            for c2, inner in parts.items():
                if not self.in_window(c2):
                    continue
                block = np.zeros((dv, dv), dtype=np.int64)
                for h_exps, coeff in inner.items():
                    block = (block + coeff * self.rep.h_monomial_matrix(h_exps)) % p
                row0 = self.index[c2, 0]
                out[row0 : row0 + dv, col0 : col0 + dv] = (
                    out[row0 : row0 + dv, col0 : col0 + dv] + block
                ) % p
        return out

    def generator_matrix(self, g: int) -> np.ndarray:
        hit = self._matrix_cache.get(g)
        if hit is None:
            x = UElement.generator(self.split.algebra, g, restricted=True)
            hit = self.action_matrix(x)
            self._matrix_cache[g] = hit
        return hit


class CoinducedModule(ComplementWindow):
    """h-linear functionals on U(g), coordinatized on the complement window.

    With level=r the window widens to even exponents below p^(r+1) inside
    the unrestricted algebra; values on monomials outside the window read
    as zero.
    """

    def __init__(self, split, rep: Representation, level=None) -> None:
        super().__init__(split, level=level)
        self.rep = rep
        self.basis = [(cm, k) for cm in self.c_monomials for k in range(rep.dim)]
        self.index = {bk: i for i, bk in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.basis_parities = tuple(
            (self.c_mono_parity(cm) + rep.parities[k]) % 2 for cm, k in self.basis
        )
        self._matrix_cache: dict = {}

    # -- element helpers ------------------------------------------------

    def zero(self) -> dict:
        return {}

    def delta(self, c_exps, k: int) -> dict:
        vec = np.zeros(self.rep.dim, dtype=np.int64)
        vec[k] = 1
        return {tuple(c_exps): vec}

    def vhat(self, vec) -> dict:
        """The functional supported at the empty monomial with value vec."""
        v = np.asarray(vec, dtype=np.int64) % self.split.algebra.p
        if not v.any():
            return {}
        return {(0,) * len(self.split.c_indices): v}

    def add(self, lam, mu) -> dict:
        p = self.split.algebra.p
        out = {cm: v.copy() for cm, v in lam.items()}
        for cm, v in mu.items():
            w = (out.get(cm, 0) + v) % p
            if isinstance(w, np.ndarray) and w.any():
                out[cm] = w
            else:
                out.pop(cm, None)
        return out

    def scale(self, c: int, lam) -> dict:
        p = self.split.algebra.p
        out = {}
        for cm, v in lam.items():
            w = (c * v) % p
            if w.any():
                out[cm] = w
        return out

    def equal(self, lam, mu) -> bool:
        keys = set(lam) | set(mu)
        for cm in keys:
            a = lam.get(cm)
            b = mu.get(cm)
            if a is None:
                a = np.zeros(self.rep.dim, dtype=np.int64)
            if b is None:
                b = np.zeros(self.rep.dim, dtype=np.int64)
            if not np.array_equal(a % self.split.algebra.p, b % self.split.algebra.p):
                return False
        return True

    def to_vector(self, lam) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for cm, v in lam.items():
            i0 = self.index[cm, 0]
            out[i0 : i0 + self.rep.dim] = v % self.split.algebra.p
        return out

    def from_vector(self, vec) -> dict:
        out = {}
        dv = self.rep.dim
        for i, cm in enumerate(self.c_monomials):
            v = np.asarray(vec[i * dv : (i + 1) * dv], dtype=np.int64) % self.split.algebra.p
            if v.any():
                out[cm] = v
        return out

    # -- the two-sided pairing ------------------------------------------

    def pair_eval(self, u: UElement, lam) -> np.ndarray:
        """Value of lam on u: subalgebra letters on the left act through rep."""
        p = self.split.algebra.p
        out = np.zeros(self.rep.dim, dtype=np.int64)
        for c_exps, inner in normal_order_split(u, self.split, side="left").items():
            val = lam.get(c_exps)
            if val is None:
                continue
            for h_exps, coeff in inner.items():
                out = (out + coeff * (self.rep.h_monomial_matrix(h_exps) @ val)) % p
        return out

    def act(self, u: UElement, lam) -> dict:
        """(u . lam)(w) = lam(w u) on window monomials."""
        out = {}
        for cm in self.c_monomials:
            val = self.pair_eval(self.c_element(cm) * u, lam)
            if val.any():
                out[cm] = val
        return out

    def action_matrix(self, u: UElement) -> np.ndarray:
        p = self.split.algebra.p
        dv = self.rep.dim
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for cm in self.c_monomials:
            prod = self.c_element(cm) * u
            row0 = self.index[cm, 0]
            for c2, inner in normal_order_split(prod, self.split, side="left").items():
                col0 = self.index.get((c2, 0))
                if col0 is None:
                    continue
                block = np.zeros((dv, dv), dtype=np.int64)
                for h_exps, coeff in inner.items():
                    block = (block + coeff * self.rep.h_monomial_matrix(h_exps)) % p
                out[row0 : row0 + dv, col0 : col0 + dv] = (
                    out[row0 : row0 + dv, col0 : col0 + dv] + block
                ) % p
        return out

    def generator_matrix(self, g: int) -> np.ndarray:
        hit = self._matrix_cache.get(g)
        if hit is None:
            x = UElement.generator(self.split.algebra, g, restricted=self.restricted)
            hit = self.action_matrix(x)
            self._matrix_cache[g] = hit
        return hit

    # -- module structure over the coordinate algebra --------------------

    def smul(self, a: dict, lam: dict) -> dict:
        """Convolution product of a scalar functional with lam.

        The support of the product sits inside componentwise sums of the
        factor supports, so only those candidates are expanded.
        """
        f = self.split.algebra.field
        eng = self.engine
        cands = set()
        for ma in a:
            for mb in lam:
                cm = tuple(x + y for x, y in zip(ma, mb))
                if self.in_window(cm):
                    cands.add(cm)
        out = {}
        for cm in cands:
            total = np.zeros(self.rep.dim, dtype=np.int64)
            for (m1, m2), coeff in eng.coproduct_mono(self.global_mono(cm)).items():
                va = a.get(self.local_of(m1))
                if va is None:
                    continue
                vb = lam.get(self.local_of(m2))
                if vb is None:
                    continue
                sign = -1 if eng.mono_parity(m1) and eng.mono_parity(m2) else 1
                total = (total + f.mul(coeff, f.mul(sign, va)) * vb) % f.p
            if total.any():
                out[cm] = total
        return out


class CoordinateAlgebra:
    """Functions on the coinduced space of the trivial line: a convolution
    algebra spanned by duals of complement monomials.

    Elements are dicts {local exponent tuple: scalar}.  The polynomial
    chart writes the same elements in products of the degree-one duals;
    the two charts differ by a diagonal factor computed honestly from the
    convolution itself.
    """

    def __init__(self, split, level=None) -> None:
        self.split = split
        self.window = ComplementWindow(split, level=level)
        self.level = level
        self._diag_cache: dict[tuple[int, ...], int] = {}
        self._module = None

    @property
    def c_monomials(self):
        return self.window.c_monomials

    def unit(self) -> dict:
        return {(0,) * len(self.split.c_indices): 1}

    def eta(self, i: int) -> dict:
        """Dual of the i-th even complement generator."""
        return self.eta_power(i, 0)

    def eta_power(self, i: int, j: int) -> dict:
        """Dual of the p^j-th power of the i-th even complement generator."""
        if not 0 <= i < self.split.n_even:
            raise ValueError("even complement index out of range")
        e = self.split.algebra.p ** j
        cm = [0] * len(self.split.c_indices)
        cm[i] = e
        cm = tuple(cm)
        if not self.window.in_window(cm):
            raise ValueError("power leaves the window")
        return {cm: 1}

    def zeta(self, s: int) -> dict:
        """Dual of the s-th odd complement generator."""
        if not 0 <= s < self.split.m_odd:
            raise ValueError("odd complement index out of range")
        cm = [0] * len(self.split.c_indices)
        cm[self.split.n_even + s] = 1
        return {tuple(cm): 1}

    def mul(self, a: dict, b: dict) -> dict:
        f = self.split.algebra.field
        eng = self.window.engine
        cands = set()
        for ma in a:
            for mb in b:
                cm = tuple(x + y for x, y in zip(ma, mb))
                if self.window.in_window(cm):
                    cands.add(cm)
        out = {}
        for cm in cands:
            total = 0
            for (m1, m2), coeff in eng.coproduct_mono(self.window.global_mono(cm)).items():
                va = a.get(self.window.local_of(m1))
                if va is None:
                    continue
                vb = b.get(self.window.local_of(m2))
                if vb is None:
                    continue
                sign = -1 if eng.mono_parity(m1) and eng.mono_parity(m2) else 1
                total = f.add(total, f.mul(coeff, f.mul(sign, f.mul(va, vb))))
            if total:
                out[cm] = total
        return out

    def mul_many(self, factors) -> dict:
        out = self.unit()
        for a in factors:
            out = self.mul(out, a)
        return out

    def power(self, a: dict, e: int) -> dict:
        return self.mul_many([a] * e)

    def add(self, a: dict, b: dict) -> dict:
        f = self.split.algebra.field
        out = dict(a)
        for cm, c in b.items():
            v = f.add(out.get(cm, 0), c)
            if v:
                out[cm] = v
            else:
                out.pop(cm, None)
        return out

    def scale(self, c: int, a: dict) -> dict:
        f = self.split.algebra.field
        c = f.normalize(c)
        return {cm: f.mul(c, v) for cm, v in a.items()} if c else {}

    def equal(self, a: dict, b: dict) -> bool:
        f = self.split.algebra.field
        keys = set(a) | set(b)
        return all(f.normalize(a.get(k, 0)) == f.normalize(b.get(k, 0)) for k in keys)

    def module(self) -> CoinducedModule:
        """The same space as a module: coinduction of the trivial line."""
        if self._module is None:
            self._module = CoinducedModule(
                self.split, trivial_rep(self.split), level=self.level
            )
        return self._module

    def act(self, u: UElement, a: dict) -> dict:
        """Left action of the enveloping algebra on functions."""
        lam = {cm: np.array([v], dtype=np.int64) for cm, v in a.items()}
        out = self.module().act(u, lam)
        return {cm: int(v[0]) for cm, v in out.items() if int(v[0]) % self.split.algebra.p}

    # -- polynomial chart -------------------------------------------------

    def diag(self, cm) -> int:
        """Coordinate of the chart monomial at its own support.

        The product of degree-one duals with the exponents of cm is again
        supported at cm alone; this returns that coefficient.
        """
        cm = tuple(cm)
        hit = self._diag_cache.get(cm)
        if hit is None:
            factors = []
            for i in range(self.split.n_even):
                factors.extend([self.eta(i)] * cm[i])
            for s in range(self.split.m_odd):
                factors.extend([self.zeta(s)] * cm[self.split.n_even + s])
            prod = self.mul_many(factors)
            if set(prod) != {cm}:
                raise StructureError("chart monomial is not supported at its exponents")
            hit = prod[cm]
            self._diag_cache[cm] = hit
        return hit

    def to_poly(self, a: dict) -> dict:
        """Coordinates in the products-of-duals chart."""
        f = self.split.algebra.field
        return {cm: f.div(c, self.diag(cm)) for cm, c in a.items()}

    def from_poly(self, a: dict) -> dict:
        f = self.split.algebra.field
        return {cm: f.mul(c, self.diag(cm)) for cm, c in a.items()}

    def partial_even(self, i: int, poly: dict) -> dict:
        """d/d(eta_i) on the polynomial chart."""
        f = self.split.algebra.field
        out = {}
        for cm, c in poly.items():
            e = cm[i]
            if not e % f.p:
                continue
            key = cm[:i] + (cm[i] - 1,) + cm[i + 1 :]
            v = f.add(out.get(key, 0), f.mul(e, c))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out

    def partial_odd(self, s: int, poly: dict) -> dict:
        """Left derivative by zeta_s: the sign counts earlier odd factors."""
        f = self.split.algebra.field
        n = self.split.n_even
        out = {}
        for cm, c in poly.items():
            if not cm[n + s]:
                continue
            sign = -1 if sum(cm[n : n + s]) % 2 else 1
            key = cm[: n + s] + (0,) + cm[n + s + 1 :]
            v = f.add(out.get(key, 0), f.mul(sign, c))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out
