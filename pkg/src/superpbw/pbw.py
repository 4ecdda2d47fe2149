"""Ordered-basis straightening in enveloping superalgebras, plus Hopf maps.

Elements of U(g) and of its restricted quotient are stored as dicts from
exponent tuples to coefficients.  An exponent tuple is indexed by the
global generator index but is read as a product in an engine's priority
order; the default engine uses the ambient generator order.

Straightening rewrites words by the first rule violation found left to
right: an out-of-order adjacent pair swaps with a Koszul sign plus a
bracket term, an adjacent equal odd pair contracts to half its self
bracket, and in the restricted quotient a run of p equal even letters
contracts to the p-th power image.  Every rule shortens the word or
removes an inversion, so the rewriting terminates; a pending-dict keyed
by word merges parallel branches and keeps the blowup polynomial.
"""

from __future__ import annotations

import itertools

from .fp import EVEN, ODD
from .linalg import matrix_from_columns, nullspace


class PBWEngine:
    """Straightening engine for one generator priority and one quotient flag."""

    def __init__(self, algebra, priority=None, restricted=True, cap=None) -> None:
        self.algebra = algebra
        if priority is None:
            priority = tuple(range(algebra.dim))
        self.order = tuple(priority)
        if sorted(self.order) != list(range(algebra.dim)):
            raise ValueError("priority must be a permutation of the generators")
        self.rank = {g: pos for pos, g in enumerate(self.order)}
        self.restricted = bool(restricted)
        if cap is not None:
            algebra._word_cap = max(algebra._word_cap, int(cap))
        self._mul_cache: dict = {}
        self._letter_cache: dict = {}
        self._coprod_cache: dict = {}
        self._antipode_cache: dict = {}
        self._reorder_cache: dict = {}
        self._zero_mono = (0,) * algebra.dim

    @property
    def cap(self) -> int:
        """Word-length gate, shared by every engine over the same algebra so
        that cross-priority reordering never sees a narrower window."""
        return self.algebra._word_cap

    def raise_cap(self, cap: int) -> None:
        """Lift the word-length gate; cached results stay valid."""
        self.algebra._word_cap = max(self.algebra._word_cap, int(cap))

    def word_of(self, mono) -> tuple[int, ...]:
        out: list[int] = []
        for g in self.order:
            out.extend([g] * mono[g])
        return tuple(out)

    def mono_of_sorted(self, word) -> tuple[int, ...]:
        counts = [0] * self.algebra.dim
        for g in word:
            counts[g] += 1
        return tuple(counts)

    def mono_parity(self, mono) -> int:
        q = self.algebra.parities
        return sum(e * q[i] for i, e in enumerate(mono)) % 2

    def check_mono(self, mono) -> tuple[int, ...]:
        alg = self.algebra
        mono = tuple(int(e) for e in mono)
        if len(mono) != alg.dim:
            raise ValueError("exponent tuple has wrong length")
        for i, e in enumerate(mono):
            if e < 0:
                raise ValueError("negative exponent")
            if alg.parities[i] == ODD and e > 1:
                raise ValueError("odd exponents are at most 1")
            if self.restricted and alg.parities[i] == EVEN and e >= alg.p:
                raise ValueError("restricted even exponents are below p")
        if not self.restricted and sum(mono) > self.cap:
            raise ValueError(f"total degree {sum(mono)} above cap {self.cap}; raise_cap first")
        return mono

    def _find_violation(self, word):
        """Position and kind of the leftmost rewrite site, or None."""
        alg = self.algebra
        p = alg.p
        n = len(word)
        for i in range(n - 1):
            a, b = word[i], word[i + 1]
            if a == b:
                if alg.parities[a] == ODD:
                    return i, "odd-square"
                if self.restricted and i + p <= n and all(word[i + t] == a for t in range(p)):
                    return i, "p-run"
            elif self.rank[a] > self.rank[b]:
                return i, "swap"
        return None

    def straighten_word(self, word):
        """Expand a generator word into the ordered basis; {mono: coeff}.

        Folds the word one letter at a time; appending a single letter to
        an ordered monomial keeps every intermediate word ordered except
        for one dislocated letter, so the local rewriting stays small.
        """
        f = self.algebra.field
        word = tuple(word)
        if len(word) > self.cap and not self.restricted:
            raise ValueError(f"word length {len(word)} above cap {self.cap}; raise_cap first")
        current: dict[tuple[int, ...], int] = {self._zero_mono: 1}
        for g in word:
            nxt: dict[tuple[int, ...], int] = {}
            for m, c in current.items():
                for m2, t in self.mul_letter(m, g).items():
                    v = f.add(nxt.get(m2, 0), f.mul(c, t))
                    if v:
                        nxt[m2] = v
                    else:
                        nxt.pop(m2, None)
            current = nxt
            if not current:
                break
        return current

    def mul_letter(self, m, g: int):
        """Right multiplication of a basis monomial by one generator; memoized."""
        key = (m, g)
        hit = self._letter_cache.get(key)
        if hit is not None:
            return hit
        f = self.algebra.field
        p = self.algebra.p
        pending: dict[tuple[int, ...], int] = {self.word_of(m) + (g,): 1}
        out: dict[tuple[int, ...], int] = {}
        while pending:
            w, c = pending.popitem()
            hit2 = self._find_violation(w)
            if hit2 is None:
                mono = self.mono_of_sorted(w)
                v = f.add(out.get(mono, 0), c)
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
                continue
            i, kind = hit2
            if kind == "swap":
                a, b = w[i], w[i + 1]
                sign = -1 if self.algebra.parities[a] * self.algebra.parities[b] else 1
                self._push(pending, w[:i] + (b, a) + w[i + 2 :], f.mul(c, sign), p)
                for k, t in enumerate(self.algebra.bracket_coords(a, b)):
                    if t:
                        self._push(pending, w[:i] + (k,) + w[i + 2 :], f.mul(c, t), p)
            elif kind == "odd-square":
                a = w[i]
                for k, t in enumerate(self.algebra.bracket_coords(a, a)):
                    if t:
                        self._push(pending, w[:i] + (k,) + w[i + 2 :], f.mul(c, f.mul(f.half, t)), p)
            else:  # p-run
                a = w[i]
                for k, t in enumerate(self.algebra.p_map[a]):
                    if t:
                        self._push(pending, w[:i] + (k,) + w[i + p :], f.mul(c, t), p)
        self._letter_cache[key] = out
        return out

    @staticmethod
    def _push(pending, word, coeff, p) -> None:
        coeff %= p
        if not coeff:
            return
        v = (pending.get(word, 0) + coeff) % p
        if v:
            pending[word] = v
        else:
            del pending[word]

    def mul_mono(self, m1, m2):
        """Product of two basis monomials as {mono: coeff}; memoized."""
        key = (m1, m2)
        hit = self._mul_cache.get(key)
        if hit is None:
            f = self.algebra.field
            hit = {m1: 1}
            for g in self.word_of(m2):
                nxt: dict[tuple[int, ...], int] = {}
                for m, c in hit.items():
                    for m3, t in self.mul_letter(m, g).items():
                        v = f.add(nxt.get(m3, 0), f.mul(c, t))
                        if v:
                            nxt[m3] = v
                        else:
                            nxt.pop(m3, None)
                hit = nxt
                if not hit:
                    break
            self._mul_cache[key] = hit
        return hit

    def reorder_from_identity(self, m):
        """Expand a monomial written in the ambient order into this basis."""
        hit = self._reorder_cache.get(m)
        if hit is None:
            word: list[int] = []
            for g in range(self.algebra.dim):
                word.extend([g] * m[g])
            hit = self.straighten_word(tuple(word))
            self._reorder_cache[m] = hit
        return hit

    def coproduct_mono(self, m):
        """Tensor-square expansion of the coproduct; {(m1, m2): coeff}."""
        hit = self._coprod_cache.get(m)
        if hit is not None:
            return hit
        f = self.algebra.field
        q = self.algebra.parities
        zero = self._zero_mono
        terms: dict[tuple, int] = {(zero, zero): 1}
        for g in self.order:
            a = m[g]
            if a == 0:
                continue
            if q[g] == ODD:
                factors = [(1, 0, 1), (0, 1, 1)]
            else:
                factors = [(k, a - k, f.binomial(a, k)) for k in range(a + 1)]
            new: dict[tuple, int] = {}
            for (m1, m2), c in terms.items():
                p2 = self.mono_parity(m2)
                for kl, kr, bc in factors:
                    sign = -1 if (q[g] * kl) % 2 and p2 else 1
                    nm1 = m1[:g] + (m1[g] + kl,) + m1[g + 1 :]
                    nm2 = m2[:g] + (m2[g] + kr,) + m2[g + 1 :]
                    v = f.add(new.get((nm1, nm2), 0), f.mul(c, f.mul(bc, sign)))
                    if v:
                        new[nm1, nm2] = v
                    else:
                        new.pop((nm1, nm2), None)
            terms = new
        self._coprod_cache[m] = terms
        return terms

    def antipode_mono(self, m):
        """Antipode of a basis monomial; {mono: coeff}; memoized."""
        hit = self._antipode_cache.get(m)
        if hit is not None:
            return hit
        f = self.algebra.field
        if m == self._zero_mono:
            out = {m: 1}
        else:
            word = self.word_of(m)
            x = word[0]
            rest = self.mono_of_sorted(word[1:])
            s_rest = self.antipode_mono(rest)
            sign = -1 if self.algebra.parities[x] and self.mono_parity(rest) else 1
            coeff = f.mul(sign, -1)
            x_mono = self._zero_mono[:x] + (1,) + self._zero_mono[x + 1 :]
            out = {}
            for m2, c in s_rest.items():
                for m3, c3 in self.mul_mono(m2, x_mono).items():
                    v = f.add(out.get(m3, 0), f.mul(coeff, f.mul(c, c3)))
                    if v:
                        out[m3] = v
                    else:
                        out.pop(m3, None)
        self._antipode_cache[m] = out
        return out


def get_engine(algebra, restricted=True, priority=None) -> PBWEngine:
    key = (tuple(priority) if priority is not None else None, bool(restricted))
    eng = algebra._engine_cache.get(key)
    if eng is None:
        eng = PBWEngine(algebra, priority, restricted)
        algebra._engine_cache[key] = eng
    return eng


class UElement:
    """Element of U(g) (restricted=False) or of the restricted quotient.

    terms maps exponent tuples in the ambient generator order to nonzero
    coefficients.
    """

    __slots__ = ("algebra", "restricted", "terms")

    def __init__(self, algebra, restricted, terms=None) -> None:
        self.algebra = algebra
        self.restricted = bool(restricted)
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            f = algebra.field
            for m, c in terms.items():
                v = f.normalize(c)
                if v:
                    self.terms[tuple(m)] = v

    @classmethod
    def zero(cls, algebra, restricted=True) -> "UElement":
        return cls(algebra, restricted)

    @classmethod
    def one(cls, algebra, restricted=True) -> "UElement":
        return cls(algebra, restricted, {(0,) * algebra.dim: 1})

    @classmethod
    def generator(cls, algebra, index, restricted=True) -> "UElement":
        m = tuple(1 if i == index else 0 for i in range(algebra.dim))
        return cls(algebra, restricted, {m: 1})

    @classmethod
    def monomial(cls, algebra, exps, restricted=True) -> "UElement":
        eng = get_engine(algebra, restricted)
        return cls(algebra, restricted, {eng.check_mono(exps): 1})

    @classmethod
    def from_coords(cls, algebra, coords, restricted=True) -> "UElement":
        """Degree-one element with the given generator coordinates."""
        terms = {}
        for i, c in enumerate(coords):
            if c % algebra.p:
                m = tuple(1 if k == i else 0 for k in range(algebra.dim))
                terms[m] = c
        return cls(algebra, restricted, terms)

    def _engine(self) -> PBWEngine:
        return get_engine(self.algebra, self.restricted)

    def _compat(self, other: "UElement") -> None:
        if self.algebra is not other.algebra or self.restricted != other.restricted:
            raise ValueError("elements live in different algebras")

    def copy(self) -> "UElement":
        return UElement(self.algebra, self.restricted, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "UElement") -> "UElement":
        self._compat(other)
        f = self.algebra.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return UElement(self.algebra, self.restricted, out)

    def __neg__(self) -> "UElement":
        f = self.algebra.field
        return UElement(self.algebra, self.restricted, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def scale(self, c: int) -> "UElement":
        f = self.algebra.field
        c = f.normalize(c)
        if not c:
            return UElement.zero(self.algebra, self.restricted)
        return UElement(self.algebra, self.restricted, {m: f.mul(c, v) for m, v in self.terms.items()})

    def __rmul__(self, c: int) -> "UElement":
        if isinstance(c, int):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._compat(other)
        f = self.algebra.field
        eng = self._engine()
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = f.mul(c1, c2)
                for m, t in eng.mul_mono(m1, m2).items():
                    v = f.add(out.get(m, 0), f.mul(c, t))
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
        return UElement(self.algebra, self.restricted, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UElement)
            and self.algebra is other.algebra
            and self.restricted == other.restricted
            and self.terms == other.terms
        )

    def parity(self):
        """0 or 1 if homogeneous, None for mixed or zero."""
        eng = self._engine()
        seen = {eng.mono_parity(m) for m in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.algebra.names
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            facs = [f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(m) if e]
            body = "*".join(facs) if facs else "1"
            parts.append(f"{c}*{body}" if (c != 1 or not facs) else body)
        return " + ".join(parts)


def coproduct(u: UElement) -> "TensorSquare":
    eng = u._engine()
    f = u.algebra.field
    out: dict[tuple, int] = {}
    for m, c in u.terms.items():
        for key, t in eng.coproduct_mono(m).items():
            v = f.add(out.get(key, 0), f.mul(c, t))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return TensorSquare(u.algebra, u.restricted, out)


def antipode(u: UElement) -> UElement:
    eng = u._engine()
    f = u.algebra.field
    out: dict[tuple[int, ...], int] = {}
    for m, c in u.terms.items():
        for m2, t in eng.antipode_mono(m).items():
            v = f.add(out.get(m2, 0), f.mul(c, t))
            if v:
                out[m2] = v
            else:
                out.pop(m2, None)
    return UElement(u.algebra, u.restricted, out)


def counit(u: UElement) -> int:
    return u.terms.get((0,) * u.algebra.dim, 0)


class TensorSquare:
    """Element of U tensor U, stored as {(mono, mono): coeff}."""

    __slots__ = ("algebra", "restricted", "terms")

    def __init__(self, algebra, restricted, terms=None) -> None:
        self.algebra = algebra
        self.restricted = bool(restricted)
        self.terms: dict[tuple, int] = {}
        if terms:
            f = algebra.field
            for k, c in terms.items():
                v = f.normalize(c)
                if v:
                    self.terms[k] = v

    def __add__(self, other: "TensorSquare") -> "TensorSquare":
        f = self.algebra.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = f.add(out.get(k, 0), c)
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TensorSquare(self.algebra, self.restricted, out)

    def __neg__(self) -> "TensorSquare":
        f = self.algebra.field
        return TensorSquare(self.algebra, self.restricted, {k: f.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: "TensorSquare") -> "TensorSquare":
        return self + (-other)

    def __mul__(self, other: "TensorSquare") -> "TensorSquare":
        # componentwise product with the sign for moving the second left
        # leg past the first right leg
        eng = get_engine(self.algebra, self.restricted)
        f = self.algebra.field
        out: dict[tuple, int] = {}
        for (a1, a2), c1 in self.terms.items():
            pa2 = eng.mono_parity(a2)
            for (b1, b2), c2 in other.terms.items():
                c = f.mul(c1, c2)
                if pa2 and eng.mono_parity(b1):
                    c = f.neg(c)
                left = eng.mul_mono(a1, b1)
                right = eng.mul_mono(a2, b2)
                for m1, t1 in left.items():
                    ct1 = f.mul(c, t1)
                    for m2, t2 in right.items():
                        v = f.add(out.get((m1, m2), 0), f.mul(ct1, t2))
                        if v:
                            out[m1, m2] = v
                        else:
                            out.pop((m1, m2), None)
        return TensorSquare(self.algebra, self.restricted, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TensorSquare)
            and self.algebra is other.algebra
            and self.restricted == other.restricted
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"<TensorSquare with {len(self.terms)} terms>"


def simple_tensor(u: UElement, v: UElement) -> TensorSquare:
    u._compat(v)
    f = u.algebra.field
    out = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            out[m1, m2] = f.mul(c1, c2)
    return TensorSquare(u.algebra, u.restricted, out)


def normal_order_split(u: UElement, split, side="left"):
    """Rewrite u with subalgebra letters on one side of complement letters.

    Returns {complement_exps: {subalgebra_exps: coeff}} with both exponent
    tuples in the split's local orders.
    """
    alg = u.algebra
    if side == "left":
        priority = split.h_indices + split.c_indices
    elif side == "right":
        priority = split.c_indices + split.h_indices
    else:
        raise ValueError("side must be 'left' or 'right'")
    eng = get_engine(alg, u.restricted, priority)
    f = alg.field
    out: dict[tuple, dict[tuple, int]] = {}
    for m, c in u.terms.items():
        for m2, t in eng.reorder_from_identity(m).items():
            c_exps = tuple(m2[g] for g in split.c_indices)
            h_exps = tuple(m2[g] for g in split.h_indices)
            inner = out.setdefault(c_exps, {})
            v = f.add(inner.get(h_exps, 0), f.mul(c, t))
            if v:
                inner[h_exps] = v
            else:
                inner.pop(h_exps, None)
    return {k: v for k, v in out.items() if v}


def filtration_degree(u: UElement, split) -> int:
    """Smallest r with all complement even exponents below p^(r+1); -1 inside U(h)."""
    p = u.algebra.p
    parts = normal_order_split(u, split, side="left")
    even_count = split.n_even
    r = -1
    for c_exps in parts:
        if not any(c_exps):
            continue
        level = 0
        for e in c_exps[:even_count]:
            while e >= p ** (level + 1):
                level += 1
        r = max(r, level)
    return r


def restricted_monomials(algebra) -> list[tuple[int, ...]]:
    """All exponent tuples of the restricted basis, in lex order."""
    ranges = [
        range(algebra.p) if q == EVEN else range(2) for q in algebra.parities
    ]
    return [tuple(t) for t in itertools.product(*ranges)]


def monomials_of_degree_at_most(algebra, bound: int) -> list[tuple[int, ...]]:
    """Unrestricted basis exponent tuples with total degree at most bound."""
    ranges = [
        range(bound + 1) if q == EVEN else range(2) for q in algebra.parities
    ]
    return [t for t in itertools.product(*ranges) if sum(t) <= bound]


def primitive_space(algebra, restricted=True, degree_bound=None):
    """Solve coproduct(x) = x tensor 1 + 1 tensor x on a monomial window.

    Returns (kernel SubspaceBasis, monomial labels); coordinates of the
    kernel vectors follow the label order.
    """
    if restricted:
        monos = restricted_monomials(algebra)
    else:
        if degree_bound is None:
            raise ValueError("unrestricted primitives need a degree bound")
        monos = monomials_of_degree_at_most(algebra, degree_bound)
    eng = get_engine(algebra, restricted)
    if not restricted:
        eng.raise_cap(degree_bound)
    f = algebra.field
    zero = (0,) * algebra.dim
    cols = []
    for m in monos:
        col = dict(eng.coproduct_mono(m))
        for key in ((m, zero), (zero, m)):
            v = f.sub(col.get(key, 0), 1)
            if v:
                col[key] = v
            else:
                col.pop(key, None)
        cols.append(col)
    mat, _ = matrix_from_columns(cols, algebra.p)
    return nullspace(mat, algebra.p), monos
