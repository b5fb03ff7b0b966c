"""The quantum 2-sphere coordinate algebra with exact PBW arithmetic.

Generators x_{-1}, x_0, x_1 subject to

    x_{+1} x_0 = q^{-2} x_0 x_{+1},      x_{-1} x_0 = q^{+2} x_0 x_{-1},
    x_{+1} x_{-1} = q^{-2} x_0^2 + q^{-1} x_0,
    x_{-1} x_{+1} = q^{+2} x_0^2 + q^{+1} x_0.

The ordered monomials e_{ij} = x_0^i x_1^j (j >= 0) and x_0^i x_{-1}^{-j}
(j < 0) form a linear basis.  An ``AlgElem`` is a finitely supported map
from basis indices (i, j) to Q(q) scalars.

Two independent multiplication routes are provided: ``mul`` normal-orders
through closed-form single-generator moves, while ``mul_oracle`` rewrites
free words with the four defining relations until normally ordered.  The
test suite keeps both and checks they agree.
"""

from __future__ import annotations

from .qfield import ONE, Q, RatFunc, ZERO, q_power

# A basis index (i, j): i >= 0 counts x_0 factors, j > 0 counts x_1
# factors, j < 0 counts x_{-1} factors.
BasisIndex = tuple[int, int]

E00: BasisIndex = (0, 0)


class AlgElem:
    """A finitely supported Q(q)-linear combination of basis monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[BasisIndex, RatFunc] | None = None):
        clean: dict[BasisIndex, RatFunc] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0:
                raise ValueError(f"negative x0 exponent in basis index ({i}, {j})")
            if c:
                clean[(i, j)] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def basis(i: int, j: int) -> "AlgElem":
        return AlgElem({(i, j): ONE})

    @staticmethod
    def scalar(c) -> "AlgElem":
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        return AlgElem({E00: c})

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "AlgElem") -> "AlgElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return AlgElem(out)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + other.scale(RatFunc(-1))

    def __neg__(self) -> "AlgElem":
        return self.scale(RatFunc(-1))

    def scale(self, c) -> "AlgElem":
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        if not c:
            return AlgElem()
        return AlgElem({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "AlgElem") -> "AlgElem":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> RatFunc:
        return self.terms.get((i, j), ZERO)

    def __repr__(self) -> str:
        from .expr import render

        return f"AlgElem({render(self)})"


ZERO_ELEM = AlgElem()
ONE_ELEM = AlgElem.basis(0, 0)
X1 = AlgElem.basis(0, 1)
X0 = AlgElem.basis(1, 0)
XM1 = AlgElem.basis(0, -1)

GENERATORS = {-1: XM1, 0: X0, 1: X1}


def _rmul_gen(terms: dict[BasisIndex, RatFunc], g: int) -> dict[BasisIndex, RatFunc]:
    """Right-multiply a term dict by the generator x_g, g in {-1, 0, 1}."""
    out: dict[BasisIndex, RatFunc] = {}

    def put(key: BasisIndex, c: RatFunc) -> None:
        s = out.get(key, ZERO) + c
        if s:
            out[key] = s
        elif key in out:
            del out[key]

    for (i, j), c in terms.items():
        if g == 0:
            # the x-block commutes past x_0 with factor q^{-2j}
            put((i + 1, j), c * q_power(-2 * j))
        elif g == 1:
            if j >= 0:
                put((i, j + 1), c)
            else:
                # x_{-1}^{-j} x_1 = q^{-4j-2} x_0^2 x_{-1}^{-j-1} + q^{-2j-1} x_0 x_{-1}^{-j-1}
                put((i + 2, j + 1), c * q_power(-4 * j - 2))
                put((i + 1, j + 1), c * q_power(-2 * j - 1))
        elif g == -1:
            if j <= 0:
                put((i, j - 1), c)
            else:
                # x_1^j x_{-1} = q^{-4j+2} x_0^2 x_1^{j-1} + q^{-2j+1} x_0 x_1^{j-1}
                put((i + 2, j - 1), c * q_power(-4 * j + 2))
                put((i + 1, j - 1), c * q_power(-2 * j + 1))
        else:
            raise ValueError(f"unknown generator index {g}")
    return out


_BASIS_MUL_CACHE: dict[tuple[BasisIndex, BasisIndex], "AlgElem"] = {}


def basis_mul(a: BasisIndex, b: BasisIndex) -> AlgElem:
    """The normally ordered product e_a * e_b."""
    cached = _BASIS_MUL_CACHE.get((a, b))
    if cached is not None:
        return cached
    k, l = b
    terms: dict[BasisIndex, RatFunc] = {a: ONE}
    for _ in range(k):
        terms = _rmul_gen(terms, 0)
    g = 1 if l > 0 else -1
    for _ in range(abs(l)):
        terms = _rmul_gen(terms, g)
    result = AlgElem(terms)
    _BASIS_MUL_CACHE[(a, b)] = result
    return result


def mul(a: AlgElem, b: AlgElem) -> AlgElem:
    """Bilinear extension of basis_mul."""
    out: dict[BasisIndex, RatFunc] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            w = ca * cb
            for k, c in basis_mul(ka, kb).terms.items():
                s = out.get(k, ZERO) + w * c
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
    return AlgElem(out)


# -- independent route: free-word rewriting ---------------------------------

# Letters of free words: -1, 0, 1.  The four rewrite rules replace a
# two-letter window by a scalar multiple of a window (or a sum).
_REWRITES: dict[tuple[int, int], list[tuple[RatFunc, tuple[int, ...]]]] = {
    (1, 0): [(q_power(-2), (0, 1))],
    (-1, 0): [(q_power(2), (0, -1))],
    (1, -1): [(q_power(-2), (0, 0)), (q_power(-1), (0,))],
    (-1, 1): [(q_power(2), (0, 0)), (q_power(1), (0,))],
}


def _word_redex(word: tuple[int, ...]) -> int | None:
    for k in range(len(word) - 1):
        if (word[k], word[k + 1]) in _REWRITES:
            return k
    return None


def mul_oracle(word_a: tuple[int, ...] | list[int],
               word_b: tuple[int, ...] | list[int] = ()) -> AlgElem:
    """Multiply two free words in the generators, reducing exhaustively.

    Each letter is a generator index in {-1, 0, 1}.  The concatenated word
    is rewritten with the defining relations until every word is normally
    ordered, then read off as basis monomials.  This route shares no code
    with ``mul`` and serves as its independent arbiter.
    """
    pending: dict[tuple[int, ...], RatFunc] = {tuple(word_a) + tuple(word_b): ONE}
    normal: dict[BasisIndex, RatFunc] = {}
    while pending:
        word, coeff = pending.popitem()
        k = _word_redex(word)
        if k is None:
            i = sum(1 for g in word if g == 0)
            j = sum(1 for g in word if g == 1) - sum(1 for g in word if g == -1)
            key = (i, j)
            s = normal.get(key, ZERO) + coeff
            if s:
                normal[key] = s
            elif key in normal:
                del normal[key]
            continue
        for factor, window in _REWRITES[(word[k], word[k + 1])]:
            new_word = word[:k] + window + word[k + 2:]
            c = pending.get(new_word, ZERO) + coeff * factor
            if c:
                pending[new_word] = c
            elif new_word in pending:
                del pending[new_word]
    return AlgElem(normal)


def basis_word(i: int, j: int) -> tuple[int, ...]:
    """The defining word of the basis monomial e_{ij}."""
    return (0,) * i + ((1,) * j if j >= 0 else (-1,) * (-j))


# -- automorphisms -----------------------------------------------------------


class Automorphism:
    """The scaling automorphism determined by x_n -> lambda^n x_n."""

    __slots__ = ("lam",)

    def __init__(self, lam):
        lam = lam if isinstance(lam, RatFunc) else RatFunc(lam)
        if not lam:
            raise ValueError("automorphism parameter must be nonzero")
        self.lam = lam

    def __call__(self, a: AlgElem) -> AlgElem:
        return apply_aut(self, a)

    def compose(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(self.lam * other.lam)

    def inverse(self) -> "Automorphism":
        return Automorphism(ONE / self.lam)

    def __pow__(self, k: int) -> "Automorphism":
        return Automorphism(self.lam ** k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.lam == other.lam

    def __hash__(self):
        return hash(("Automorphism", self.lam))

    def __repr__(self) -> str:
        return f"Automorphism({self.lam})"


IDENTITY_AUT = Automorphism(ONE)
SIGMA_MOD = Automorphism(Q * Q)


def apply_aut(s: Automorphism, a: AlgElem) -> AlgElem:
    """Apply the automorphism: e_{ij} picks up lambda^j."""
    if s.lam == ONE:
        return a
    return AlgElem({k: c * s.lam ** k[1] for k, c in a.terms.items()})


def counit(a: AlgElem) -> RatFunc:
    """The character sending every generator to 0: the e_{00} coefficient."""
    return a.coeff(0, 0)


def is_sigma_central(a: AlgElem, s: Automorphism) -> bool:
    """Whether a * b = sigma(b) * a for all b (checked on generators)."""
    for g in (XM1, X0, X1):
        if mul(a, g) != mul(apply_aut(s, g), a):
            return False
    return True


def basis_indices(imax: int, jmax: int) -> list[BasisIndex]:
    """All basis indices with i <= imax and |j| <= jmax, in canonical order."""
    return [(i, j) for i in range(imax + 1) for j in range(-jmax, jmax + 1)]
