"""Volume forms on the coordinate algebra and their coinduced realization.

The derivation module of the coordinate algebra is free on the partial
derivatives; its berezinian is a free rank-one module with basis form
omega.  Each enveloping-algebra element acts by Lie derivative, and the
map recording the constant term of iterated Lie derivatives identifies
the sections with the coinduction of the one-dimensional module carrying
minus the supertrace character, with a parity shift by the number of odd
complement directions.
"""

from __future__ import annotations

import numpy as np

from .algebra import StructureError
from .linalg import rank
from .modules import CoinducedModule, CoordinateAlgebra, rep_from_character
from .pbw import UElement


class BerezinSections:
    """Sections a * omega of the berezinian, stored by their coefficient."""

    def __init__(self, split) -> None:
        self.split = split
        self.coords = CoordinateAlgebra(split)
        self._images: dict[int, tuple[list, list]] = {}
        self._div: dict[int, dict] = {}
        self._mats: dict[int, np.ndarray] = {}

    def coordinate_images(self, x: int):
        """Images of the coordinate duals under the derivation of x."""
        hit = self._images.get(x)
        if hit is None:
            u = UElement.generator(self.split.algebra, x)
            etas = [self.coords.act(u, self.coords.eta(i)) for i in range(self.split.n_even)]
            zetas = [self.coords.act(u, self.coords.zeta(s)) for s in range(self.split.m_odd)]
            hit = (etas, zetas)
            self._images[x] = hit
        return hit

    def expansion_check(self, x: int) -> None:
        """The derivation of x must be the image-weighted sum of partials."""
        a = self.coords
        u = UElement.generator(self.split.algebra, x)
        etas, zetas = self.coordinate_images(x)
        for cm in a.c_monomials:
            basis = {cm: 1}
            want = a.act(u, basis)
            got: dict = {}
            poly = a.to_poly(basis)
            for i, f in enumerate(etas):
                got = a.add(got, a.mul(f, a.from_poly(a.partial_even(i, poly))))
            for s, g in enumerate(zetas):
                got = a.add(got, a.mul(g, a.from_poly(a.partial_odd(s, poly))))
            if not a.equal(want, got):
                raise StructureError(
                    f"derivation of b_{x} is not spanned by the partials at {cm}"
                )

    def divergence(self, x: int) -> dict:
        """Signed trace of the coordinate images of the derivation of x."""
        hit = self._div.get(x)
        if hit is None:
            a = self.coords
            etas, zetas = self.coordinate_images(x)
            out: dict = {}
            for i, f in enumerate(etas):
                out = a.add(out, a.from_poly(a.partial_even(i, a.to_poly(f))))
            sign = 1 if self.split.algebra.parities[x] else -1
            for s, g in enumerate(zetas):
                out = a.add(out, a.scale(sign, a.from_poly(a.partial_odd(s, a.to_poly(g)))))
            self._div[x] = hit = out
        return hit

    def lie_derivative(self, x: int, section: dict) -> dict:
        """L_x(a * omega) = (d_x a) * omega + (-1)^(|x||a|) a * Div(d_x) * omega."""
        a = self.coords
        u = UElement.generator(self.split.algebra, x)
        out = a.act(u, section)
        if self.split.algebra.parities[x]:
            n = self.split.n_even
            signed = {
                cm: -c if sum(cm[n:]) % 2 else c for cm, c in section.items()
            }
        else:
            signed = section
        return a.add(out, a.mul(signed, self.divergence(x)))

    def lie_matrix(self, x: int) -> np.ndarray:
        hit = self._mats.get(x)
        if hit is None:
            p = self.split.algebra.p
            monos = self.coords.c_monomials
            idx = {cm: i for i, cm in enumerate(monos)}
            out = np.zeros((len(monos), len(monos)), dtype=np.int64)
            for j, cm in enumerate(monos):
                for cm2, c in self.lie_derivative(x, {cm: 1}).items():
                    out[idx[cm2], j] = c % p
            self._mats[x] = hit = out
        return hit


def volume_character_rep(split, negate=True):
    """One-dimensional target: minus the supertrace character, shifted by
    the odd complement parity."""
    chi = split.supertrace_character()
    if negate:
        chi = chi.scaled(-1)
    return rep_from_character(chi, m=split.m_odd)


def sections_to_coinduced_matrix(split, sections: BerezinSections) -> np.ndarray:
    """Matrix of the constant-term map from sections to the coinduction."""
    alg = split.algebra
    p = alg.p
    monos = sections.coords.c_monomials
    window = sections.coords.window
    eng = window.engine
    out = np.zeros((len(monos), len(monos)), dtype=np.int64)
    start = np.zeros(len(monos), dtype=np.int64)
    start[monos.index((0,) * len(split.c_indices))] = 1
    for i, cm_arg in enumerate(monos):
        row = start
        for letter in eng.word_of(window.global_mono(cm_arg)):
            row = row @ sections.lie_matrix(letter) % p
        out[i] = row
    return out


def socle_volume_killed(split) -> tuple[bool, str]:
    """No derivation feeds back into the socle component of the socle
    section: the top coefficient of every Lie derivative vanishes, and
    along the subalgebra the derivative vanishes outright (the socle
    character cancels the divergence there).  Complement directions may
    still translate the section below the top."""
    from .duality import socle_functional

    alg = split.algebra
    sections = BerezinSections(split)
    lam = socle_functional(split)
    top = max(lam, key=sum)
    for x in range(alg.dim):
        moved = sections.lie_derivative(x, lam)
        if moved.get(top, 0) % alg.p:
            return False, f"derivative of b_{x} keeps a socle component"
    for h in split.h_indices:
        if sections.lie_derivative(h, lam):
            return False, f"derivative of b_{h} moves the socle volume"
    return True, ""


def berezinian_coinduced_check(split) -> tuple[bool, str]:
    """The constant-term map is a bijective morphism for both the algebra
    and the module structures; flipping the character's sign must break
    it whenever the character is nonzero."""
    alg = split.algebra
    p = alg.p
    sections = BerezinSections(split)
    for x in range(alg.dim):
        sections.expansion_check(x)
    chi_mat = sections_to_coinduced_matrix(split, sections)
    if rank(chi_mat, p) != chi_mat.shape[0]:
        return False, "constant-term map is singular"
    target = CoinducedModule(split, volume_character_rep(split))
    for x in range(alg.dim):
        lhs = (chi_mat @ sections.lie_matrix(x)) % p
        rhs = (target.generator_matrix(x) @ chi_mat) % p
        if not np.array_equal(lhs, rhs):
            return False, f"constant-term map is not equivariant at b_{x}"
    coords = sections.coords
    monos = coords.c_monomials
    duals = [coords.eta(i) for i in range(split.n_even)]
    duals += [coords.zeta(s) for s in range(split.m_odd)]
    for a0 in duals:
        for j, cm in enumerate(monos):
            prod = coords.mul(a0, {cm: 1})
            vec = np.zeros(len(monos), dtype=np.int64)
            for cm2, c in prod.items():
                vec[monos.index(cm2)] = c
            lhs = (chi_mat @ vec) % p
            lam = target.from_vector(chi_mat[:, j])
            rhs = target.to_vector(target.smul(a0, lam)) % p
            if not np.array_equal(lhs, rhs):
                return False, "constant-term map is not linear over the functions"
    chi = split.supertrace_character()
    if any(chi.value(h) for h in split.h_indices):
        wrong = CoinducedModule(split, volume_character_rep(split, negate=False))
        if all(
            np.array_equal(
                (chi_mat @ sections.lie_matrix(x)) % p,
                (wrong.generator_matrix(x) @ chi_mat) % p,
            )
            for x in range(alg.dim)
        ):
            return False, "sign control: the unnegated character also intertwines"
        return True, "negative control rejected the unnegated character"
    return True, "character is zero; sign control skipped"
