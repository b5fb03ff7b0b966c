"""Evaluatable twisted cochains and the cup and cap products.

The algebra is infinite dimensional, so cochains are closed evaluator
trees rather than value tables.  Four shapes cover everything needed:
twisted-central elements in degree 0, twisted derivations and inner
derivations in degree 1, and cup products of cochains.

Conventions, with sigma the twist of the left factor and tau of the right:

    (phi cup psi)(a_1, ..., a_{m+n}) = tau(phi(a_1, ..., a_m)) psi(a_{m+1}, ...)
    twist(phi cup psi) = tau o sigma      (parameters multiply)

    (a_0 (x) ... (x) a_n) cap phi = tau(a_0) phi(a_1, ..., a_m) (x) a_{m+1} ...
    twist(c cap phi) = twist(phi) o twist(c)
"""

from __future__ import annotations

from .algebra import (AlgElem, Automorphism, BasisIndex, GENERATORS,
                      IDENTITY_AUT, ONE_ELEM, X0, X1, XM1, ZERO_ELEM,
                      apply_aut, basis_indices, mul)
from .chains import Chain, Tensor
from .linalg import solve_linear
from .qfield import ONE, Q, RatFunc, ZERO, q_power

__all__ = [
    "Cochain", "Central", "TwistedDerivation", "InnerDerivation", "Cup",
    "make_derivation", "partial", "inner", "cup", "cap", "solve_inner",
    "central_x0_power", "parse_cochain_name",
]


class Cochain:
    """Base class: an evaluatable twisted multilinear map into the algebra."""

    degree: int
    twist: Automorphism

    def eval(self, args: list[AlgElem] | tuple[AlgElem, ...]) -> AlgElem:
        args = list(args)
        if len(args) != self.degree:
            raise ValueError(
                f"degree-{self.degree} cochain evaluated on {len(args)} arguments")
        return self._eval(args)

    def _eval(self, args: list[AlgElem]) -> AlgElem:
        raise NotImplementedError


class Central(Cochain):
    """A degree-0 cochain: a twisted-central element."""

    def __init__(self, element: AlgElem, twist: Automorphism):
        self.element = element
        self.twist = twist
        self.degree = 0

    def _eval(self, args: list[AlgElem]) -> AlgElem:
        return self.element

    def __repr__(self):
        return f"Central({self.element!r} @ {self.twist.lam})"


class TwistedDerivation(Cochain):
    """A degree-1 cochain obeying d(ab) = sigma(a) d(b) + d(a) b.

    Determined by its values on the three generators; evaluation peels one
    generator at a time from the left of each basis word.
    """

    def __init__(self, value_xm1: AlgElem, value_x0: AlgElem, value_x1: AlgElem,
                 twist: Automorphism):
        self.values = {-1: value_xm1, 0: value_x0, 1: value_x1}
        self.twist = twist
        self.degree = 1
        self._memo: dict[BasisIndex, AlgElem] = {}

    def _eval(self, args: list[AlgElem]) -> AlgElem:
        a = args[0]
        out = ZERO_ELEM
        for key, c in a.terms.items():
            out = out + self.on_basis(key).scale(c)
        return out

    def on_basis(self, key: BasisIndex) -> AlgElem:
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        i, j = key
        if i == 0 and j == 0:
            result = ZERO_ELEM  # derivations kill the unit
        elif i > 0:
            head, rest = 0, (i - 1, j)
            result = self._leibniz(head, rest)
        else:
            head = 1 if j > 0 else -1
            rest = (0, j - head)
            result = self._leibniz(head, rest)
        self._memo[key] = result
        return result

    def _leibniz(self, g: int, rest: BasisIndex) -> AlgElem:
        # d(x_g w) = sigma(x_g) d(w) + d(x_g) w
        sig_g = apply_aut(self.twist, GENERATORS[g])
        return mul(sig_g, self.on_basis(rest)) + mul(self.values[g], AlgElem.basis(*rest))

    def __repr__(self):
        return f"TwistedDerivation(@ {self.twist.lam})"


class InnerDerivation(Cochain):
    """The degree-1 coboundary a -> b a - sigma(a) b of an element b."""

    def __init__(self, element: AlgElem, twist: Automorphism):
        self.element = element
        self.twist = twist
        self.degree = 1

    def _eval(self, args: list[AlgElem]) -> AlgElem:
        a = args[0]
        return mul(self.element, a) - mul(apply_aut(self.twist, a), self.element)

    def __repr__(self):
        return f"InnerDerivation({self.element!r} @ {self.twist.lam})"


class Cup(Cochain):
    """The cup product node of two cochains."""

    def __init__(self, left: Cochain, right: Cochain):
        self.left = left
        self.right = right
        self.degree = left.degree + right.degree
        self.twist = right.twist.compose(left.twist)

    def _eval(self, args: list[AlgElem]) -> AlgElem:
        m = self.left.degree
        head = apply_aut(self.right.twist, self.left.eval(args[:m]))
        return mul(head, self.right.eval(args[m:]))

    def __repr__(self):
        return f"Cup({self.left!r}, {self.right!r})"


class DerivationRelationError(ValueError):
    """A candidate twisted derivation breaks a defining relation."""


# The defining relations as (left word, right-hand side builder):
# checking d(LHS) = d(RHS) for the Leibniz extension certifies that the
# extension is well defined on the whole algebra.
def _relation_checks(d: TwistedDerivation) -> list[tuple[str, AlgElem, AlgElem]]:
    sig = d.twist

    def d_word(*gs: int) -> AlgElem:
        # Leibniz value on a free word of generators
        if len(gs) == 1:
            return d.values[gs[0]]
        g, rest = gs[0], gs[1:]
        word = ONE_ELEM
        for h in rest:
            word = mul(word, GENERATORS[h])
        return mul(apply_aut(sig, GENERATORS[g]), d_word(*rest)) + mul(d.values[g], word)

    def d_elem(a: AlgElem) -> AlgElem:
        out = ZERO_ELEM
        for (i, j), c in a.terms.items():
            gs = [0] * i + ([1] * j if j >= 0 else [-1] * (-j))
            if gs:
                out = out + d_word(*gs).scale(c)
        return out

    checks = [
        ("x1*x0 = q^-2*x0*x1", d_word(1, 0), d_elem(mul(X1, X0))),
        ("xm1*x0 = q^2*x0*xm1", d_word(-1, 0), d_elem(mul(XM1, X0))),
        ("x1*xm1 = q^-2*x0^2 + q^-1*x0", d_word(1, -1), d_elem(mul(X1, XM1))),
        ("xm1*x1 = q^2*x0^2 + q*x0", d_word(-1, 1), d_elem(mul(XM1, X1))),
    ]
    return checks


def make_derivation(value_xm1: AlgElem, value_x0: AlgElem, value_x1: AlgElem,
                    twist: Automorphism) -> TwistedDerivation:
    """Build a twisted derivation from generator values, verifying that the
    Leibniz extension respects all four defining relations."""
    d = TwistedDerivation(value_xm1, value_x0, value_x1, twist)
    for name, lhs, rhs in _relation_checks(d):
        if lhs != rhs:
            raise DerivationRelationError(
                f"generator values are incompatible with the relation {name}")
    return d


def partial(i: int) -> TwistedDerivation:
    """The three distinguished twisted derivations (i in {-1, 0, 1})."""
    one_plus = ONE_ELEM + X0.scale(Q + ONE / Q)
    if i == 1:
        return make_derivation(ZERO_ELEM, XM1.scale(Q), one_plus, Automorphism(q_power(-2)))
    if i == 0:
        return make_derivation(-XM1, ZERO_ELEM, X1, IDENTITY_AUT)
    if i == -1:
        return make_derivation(one_plus, X1.scale(ONE / Q), ZERO_ELEM, Automorphism(q_power(-2)))
    raise ValueError("derivation index must be -1, 0 or 1")


def inner(element: AlgElem, twist: Automorphism) -> InnerDerivation:
    return InnerDerivation(element, twist)


def central_x0_power(i: int) -> Central:
    """x_0^i as a twisted-central degree-0 cochain (twist q^{2i})."""
    if i < 0:
        raise ValueError("x0 power must be >= 0")
    elem = AlgElem.basis(i, 0)
    return Central(elem, Automorphism(q_power(2 * i)))


def cup(phi: Cochain, psi: Cochain) -> Cup:
    return Cup(phi, psi)


def cap(c: Chain, phi: Cochain) -> Chain:
    """The cap product: the cochain eats the leading slots of the chain."""
    m = phi.degree
    if m > c.degree:
        raise ValueError(
            f"cannot cap a degree-{c.degree} chain with a degree-{m} cochain")
    out_twist = phi.twist.compose(c.twist)
    out: dict[Tensor, RatFunc] = {}
    for t, w in c.terms.items():
        head = mul(
            apply_aut(phi.twist, AlgElem.basis(*t[0])),
            phi.eval([AlgElem.basis(*k) for k in t[1:m + 1]]),
        )
        for k, hc in head.terms.items():
            key = (k,) + t[m + 1:]
            s = out.get(key, ZERO) + w * hc
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return Chain(c.degree - m, out_twist, out)


def solve_inner(target: Cochain, bound: tuple[int, int] = (6, 6)) -> AlgElem | None:
    """Search for b with  b a - sigma(a) b = target(a)  on the generators.

    The candidate b ranges over basis elements within the bound; matching
    coefficients gives an exact linear system over Q(q).  A None answer
    certifies there is no solution supported within the bound.
    """
    if target.degree != 1:
        raise ValueError("inner-derivation search needs a degree-1 target")
    sigma = target.twist
    unknowns = basis_indices(*bound)
    columns = {k: idx for idx, k in enumerate(unknowns)}
    row_keys: dict[tuple[int, BasisIndex], int] = {}
    rows: list[list[RatFunc]] = []
    rhs: list[RatFunc] = []

    def row_for(g: int, key: BasisIndex) -> int:
        idx = row_keys.get((g, key))
        if idx is None:
            idx = len(rows)
            row_keys[(g, key)] = idx
            rows.append([ZERO] * len(unknowns))
            rhs.append(ZERO)
        return idx

    for g, gen in GENERATORS.items():
        sig_gen = apply_aut(sigma, gen)
        for u in unknowns:
            eu = AlgElem.basis(*u)
            lhs = mul(eu, gen) - mul(sig_gen, eu)
            for key, c in lhs.terms.items():
                rows[row_for(g, key)][columns[u]] = c
        for key, c in target.eval([gen]).terms.items():
            rhs[row_for(g, key)] = c
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    b = AlgElem({u: solution[columns[u]] for u in unknowns})
    for g, gen in GENERATORS.items():
        if inner(b, sigma).eval([gen]) != target.eval([gen]):
            raise AssertionError("solver returned an invalid witness")
    return b


# -- names used by the command line -------------------------------------------


def parse_cochain_name(name: str) -> Cochain:
    """Resolve the CLI cochain syntax.

    Accepted forms: ``d1``, ``d0``, ``dm1``, ``x0``, ``x0^i``,
    ``inner:<expr>@<twist>`` and ``cup(<name>,<name>)``.
    """
    from .expr import parse, parse_scalar

    name = name.strip()
    if name in ("d1", "d0", "dm1"):
        return partial({"d1": 1, "d0": 0, "dm1": -1}[name])
    if name == "x0":
        return central_x0_power(1)
    if name.startswith("x0^"):
        return central_x0_power(int(name[3:]))
    if name.startswith("inner:"):
        body = name[len("inner:"):]
        if "@" not in body:
            raise ValueError("inner cochain syntax is inner:<expr>@<twist>")
        elem_text, twist_text = body.rsplit("@", 1)
        return inner(parse(elem_text), Automorphism(parse_scalar(twist_text)))
    if name.startswith("cup(") and name.endswith(")"):
        inside = name[4:-1]
        depth = 0
        for k, ch in enumerate(inside):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return cup(parse_cochain_name(inside[:k]),
                           parse_cochain_name(inside[k + 1:]))
        raise ValueError("cup syntax is cup(<name>,<name>)")
    raise ValueError(f"unknown cochain name {name!r}")
