"""Finite-dimensional restricted Lie superalgebras given by structure constants.

An algebra is described by a basis with parities, bracket coordinates on
generator pairs, and the p-th power map on even generators.  Everything is
exact over F_p with p an odd prime.
"""

from __future__ import annotations

import numpy as np

from .fp import EVEN, ODD, PrimeField
from .linalg import mat_pow_mod


class StructureError(ValueError):
    """Raised when structure constants violate a superalgebra axiom."""


class LieSuperAlgebra:
    """Lie superalgebra over F_p with a distinguished homogeneous basis.

    brackets maps index pairs (i, j) to the coordinate vector of
    [b_i, b_j]; omitted pairs are filled in by super antisymmetry or zero.
    p_map maps even generator indices to coordinates of the p-th power.
    """

    def __init__(self, p, names, parities, brackets, p_map=None, name="") -> None:
        self.field = PrimeField(p)
        self.p = self.field.p
        self.name = name
        self.names = tuple(names)
        self.parities = tuple(int(q) for q in parities)
        self.dim = len(self.names)
        if len(self.parities) != self.dim:
            raise ValueError("names and parities must have the same length")
        if any(q not in (EVEN, ODD) for q in self.parities):
            raise ValueError("parities must be 0 or 1")
        if len(set(self.names)) != self.dim:
            raise ValueError("generator names must be distinct")
        self.even_indices = tuple(i for i, q in enumerate(self.parities) if q == EVEN)
        self.odd_indices = tuple(i for i, q in enumerate(self.parities) if q == ODD)
        self._table = self._build_table(brackets or {})
        self.p_map = self._build_p_map(p_map or {})
        self._engine_cache: dict = {}
        self._word_cap = p**3

    def _build_table(self, brackets):
        f = self.field
        given: dict[tuple[int, int], tuple[int, ...]] = {}
        for (i, j), coords in brackets.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"bracket index pair {(i, j)} out of range")
            v = tuple(f.normalize(c) for c in coords)
            if len(v) != self.dim:
                raise ValueError(f"bracket ({i},{j}) has {len(v)} coordinates")
            given[i, j] = v
        table = [[None] * self.dim for _ in range(self.dim)]
        zero = (0,) * self.dim
        for i in range(self.dim):
            for j in range(self.dim):
                ij = given.get((i, j))
                ji = given.get((j, i))
                sign = -1 if self.parities[i] * self.parities[j] == 0 else 1
                if ij is None and ji is not None:
                    ij = tuple(f.mul(sign, c) for c in ji)
                elif ij is None:
                    ij = zero
                elif ji is not None and i != j:
                    flipped = tuple(f.mul(sign, c) for c in ji)
                    if flipped != ij:
                        raise StructureError(
                            f"brackets ({i},{j}) and ({j},{i}) are not super antisymmetric"
                        )
                if i == j and self.parities[i] == EVEN and any(ij):
                    raise StructureError(f"[b_{i}, b_{i}] must vanish for even b_{i}")
                table[i][j] = ij
        return table

    def _build_p_map(self, p_map):
        f = self.field
        out: dict[int, tuple[int, ...]] = {}
        for i, coords in p_map.items():
            if self.parities[i] != EVEN:
                raise StructureError(f"p-map is only defined on even generators, got b_{i}")
            v = tuple(f.normalize(c) for c in coords)
            if len(v) != self.dim:
                raise ValueError(f"p-map image of b_{i} has {len(v)} coordinates")
            if any(v[k] for k in self.odd_indices):
                raise StructureError(f"p-map image of b_{i} must be even")
            out[i] = v
        for i in self.even_indices:
            out.setdefault(i, (0,) * self.dim)
        return out

    def bracket_coords(self, i: int, j: int) -> tuple[int, ...]:
        return self._table[i][j]

    def bracket_vec(self, x, y) -> tuple[int, ...]:
        """Bracket of two coordinate vectors."""
        f = self.field
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi % self.p:
                continue
            for j, yj in enumerate(y):
                if not yj % self.p:
                    continue
                c = f.mul(xi, yj)
                for k, t in enumerate(self._table[i][j]):
                    if t:
                        out[k] = f.add(out[k], f.mul(c, t))
        return tuple(out)

    def ad(self, i: int) -> np.ndarray:
        """Matrix of ad(b_i) on the defining basis (columns are brackets)."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j in range(self.dim):
            out[:, j] = self._table[i][j]
        return out

    def ad_vec(self, coords) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, c in enumerate(coords):
            if c % self.p:
                out = (out + c * self.ad(i)) % self.p
        return out % self.p

    def validate(self) -> dict[str, tuple[bool, str]]:
        """Check the axioms on generators; returns {check: (ok, detail)}."""
        report: dict[str, tuple[bool, str]] = {}
        report["parity-additive"] = self._check_parity_additive()
        report["antisymmetry"] = self._check_antisymmetry()
        report["jacobi"] = self._check_jacobi()
        report["p-map"] = self._check_p_map()
        return report

    def is_valid(self) -> bool:
        return all(ok for ok, _ in self.validate().values())

    def _check_parity_additive(self):
        for i in range(self.dim):
            for j in range(self.dim):
                want = (self.parities[i] + self.parities[j]) % 2
                for k, c in enumerate(self._table[i][j]):
                    if c and self.parities[k] != want:
                        return False, f"[b_{i}, b_{j}] has a parity-{self.parities[k]} component"
        return True, ""

    def _check_antisymmetry(self):
        f = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                sign = -1 if self.parities[i] * self.parities[j] == 0 else 1
                lhs = self._table[i][j]
                rhs = tuple(f.mul(sign, c) for c in self._table[j][i])
                if lhs != rhs:
                    return False, f"[b_{i}, b_{j}] != -(-1)^(|i||j|) [b_{j}, b_{i}]"
        return True, ""

    def _check_jacobi(self):
        f = self.field
        basis = [tuple(1 if k == i else 0 for k in range(self.dim)) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                sign = 1 if self.parities[i] * self.parities[j] == 0 else -1
                for k in range(self.dim):
                    lhs = self.bracket_vec(basis[i], self._table[j][k])
                    rhs1 = self.bracket_vec(self._table[i][j], basis[k])
                    rhs2 = self.bracket_vec(basis[j], self._table[i][k])
                    rhs = tuple(f.add(a, f.mul(sign, b)) for a, b in zip(rhs1, rhs2))
                    if lhs != rhs:
                        return False, f"jacobi fails on (b_{i}, b_{j}, b_{k})"
        # at p = 3 the multilinear identity does not force [x,[x,x]] = 0
        for i in self.odd_indices:
            if any(self.bracket_vec(basis[i], self._table[i][i])):
                return False, f"[b_{i}, [b_{i}, b_{i}]] != 0"
        return True, ""

    def _check_p_map(self):
        for i in self.even_indices:
            lhs = mat_pow_mod(self.ad(i), self.p, self.p)
            rhs = self.ad_vec(self.p_map[i])
            if not np.array_equal(lhs, rhs):
                return False, f"(ad b_{i})^p != ad(b_{i}^[p])"
        return True, ""

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def __repr__(self) -> str:
        tag = self.name or "LieSuperAlgebra"
        return f"<{tag} dim={self.dim} p={self.p}>"


class SubalgebraSplit:
    """A vector-space split g = h (+) c with h spanned by chosen generators.

    h must be a restricted subalgebra.  The complement is ordered with even
    generators first, each block keeping the ambient order; that fixed order
    is what induced and coinduced bases are built on.
    """

    def __init__(self, algebra: LieSuperAlgebra, h_indices, name="") -> None:
        self.algebra = algebra
        self.name = name
        self.h_indices = tuple(sorted(set(h_indices)))
        for i in self.h_indices:
            if not (0 <= i < algebra.dim):
                raise ValueError(f"subalgebra index {i} out of range")
        rest = [i for i in range(algebra.dim) if i not in set(self.h_indices)]
        evens = [i for i in rest if algebra.parities[i] == EVEN]
        odds = [i for i in rest if algebra.parities[i] == ODD]
        self.c_indices = tuple(evens + odds)
        self.n_even = len(evens)
        self.m_odd = len(odds)
        self.h_parities = tuple(algebra.parities[i] for i in self.h_indices)
        self.c_parities = tuple(algebra.parities[i] for i in self.c_indices)
        self._h_local = {g: loc for loc, g in enumerate(self.h_indices)}
        self._c_local = {g: loc for loc, g in enumerate(self.c_indices)}
        self._check_closure()

    def _check_closure(self) -> None:
        alg = self.algebra
        hset = set(self.h_indices)
        for i in self.h_indices:
            for j in self.h_indices:
                coords = alg.bracket_coords(i, j)
                if any(c for k, c in enumerate(coords) if k not in hset):
                    raise StructureError(
                        f"[b_{i}, b_{j}] leaves the subalgebra; split is not closed"
                    )
        for i in self.h_indices:
            if alg.parities[i] == EVEN:
                coords = alg.p_map[i]
                if any(c for k, c in enumerate(coords) if k not in hset):
                    raise StructureError(f"b_{i}^[p] leaves the subalgebra")

    def h_local(self, global_index: int) -> int:
        return self._h_local[global_index]

    def c_local(self, global_index: int) -> int:
        return self._c_local[global_index]

    def adjoint_on_quotient(self, h_global: int) -> np.ndarray:
        """ad(H) on g/h in the complement basis, for H a subalgebra generator."""
        if h_global not in self._h_local:
            raise ValueError(f"b_{h_global} is not a subalgebra generator")
        alg = self.algebra
        size = len(self.c_indices)
        out = np.zeros((size, size), dtype=np.int64)
        for col, j in enumerate(self.c_indices):
            coords = alg.bracket_coords(h_global, j)
            for row, k in enumerate(self.c_indices):
                out[row, col] = coords[k]
        return out

    def supertrace_character(self) -> "Character":
        """The character H -> str(ad H on g/h); zero on odd generators."""
        alg = self.algebra
        values = []
        for i in self.h_indices:
            if alg.parities[i] == ODD:
                values.append(0)
                continue
            m = self.adjoint_on_quotient(i)
            total = 0
            for loc, q in enumerate(self.c_parities):
                d = int(m[loc, loc])
                total += -d if q else d
            values.append(total % alg.p)
        return Character(self, values, name="supertrace")

    def __repr__(self) -> str:
        tag = self.name or "split"
        return f"<{tag}: h={self.h_indices} c={self.c_indices} of {self.algebra!r}>"


class Character:
    """A one-dimensional even character of the split subalgebra.

    Stored as one value per subalgebra generator.  Must vanish on odd
    generators and on all brackets inside the subalgebra.
    """

    def __init__(self, split: SubalgebraSplit, values, name="") -> None:
        self.split = split
        self.name = name
        f = split.algebra.field
        self.values = tuple(f.normalize(v) for v in values)
        if len(self.values) != len(split.h_indices):
            raise ValueError("need one value per subalgebra generator")
        for loc, q in enumerate(split.h_parities):
            if q == ODD and self.values[loc]:
                raise ValueError("characters vanish on odd generators")
        self._check_vanishes_on_brackets()

    def _check_vanishes_on_brackets(self) -> None:
        alg = self.split.algebra
        for i in self.split.h_indices:
            for j in self.split.h_indices:
                coords = alg.bracket_coords(i, j)
                if self.eval_coords(coords):
                    raise StructureError(f"character does not kill [b_{i}, b_{j}]")

    def value(self, h_global: int) -> int:
        return self.values[self.split.h_local(h_global)]

    def eval_coords(self, coords) -> int:
        """Evaluate on a coordinate vector supported inside the subalgebra."""
        f = self.split.algebra.field
        total = 0
        for k, c in enumerate(coords):
            if not c % f.p:
                continue
            loc = self.split._h_local.get(k)
            if loc is None:
                raise ValueError("coordinate vector leaves the subalgebra")
            total = f.add(total, f.mul(c, self.values[loc]))
        return total

    def is_restricted(self) -> bool:
        """chi(H^[p]) == chi(H)^p on even subalgebra generators."""
        alg = self.split.algebra
        for i in self.split.h_indices:
            if alg.parities[i] == ODD:
                continue
            lhs = self.eval_coords(alg.p_map[i])
            rhs = pow(self.value(i), alg.p, alg.p)
            if lhs != rhs:
                return False
        return True

    def scaled(self, factor: int) -> "Character":
        f = self.split.algebra.field
        return Character(self.split, [f.mul(factor, v) for v in self.values], name=self.name)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Character)
            and self.split is other.split
            and self.values == other.values
        )

    def __repr__(self) -> str:
        tag = self.name or "character"
        return f"<{tag} {self.values} on h={self.split.h_indices}>"
