"""Exact arithmetic in the scalar field Q(q).

Every coefficient in the library is a ``RatFunc``: a reduced fraction of
integer polynomials in the deformation parameter ``q``.  Working over Q(q)
with q transcendental makes every identity checked downstream an exact
Laurent-polynomial identity; there is no floating point anywhere.

Canonical form: numerator and denominator are integer polynomials, their
polynomial gcd is constant, the pair has coprime integer contents, and the
denominator has positive leading coefficient.  Two equal values therefore
have identical representations, so ``==`` is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

# Polynomials are tuples of int (or Fraction during normalisation),
# coefficient of q^k at index k, no trailing zeros.  () is the zero
# polynomial.

_ZERO: tuple[int, ...] = ()
_ONE: tuple[int, ...] = (1,)


def _trim(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] += v
    return _trim(out)


def _pneg(a: tuple) -> tuple:
    return tuple(-v for v in a)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return _ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def _pdivmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    """Euclidean division over Q (coefficients become Fractions)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(v) for v in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(rem) >= len(b):
        if not rem[-1]:
            rem.pop()
            continue
        k = len(rem) - len(b)
        f = rem[-1] / lead
        quo[k] = f
        for j, bj in enumerate(b):
            rem[k + j] -= f * bj
        rem.pop()
    return _trim(quo), _trim(rem)


def _content(a: tuple[int, ...]) -> int:
    g = 0
    for v in a:
        g = int_gcd(g, abs(v))
    return g


def _primitive(a: tuple) -> tuple[int, ...]:
    """Clear Fraction denominators and divide out the integer content."""
    if not a:
        return _ZERO
    den = 1
    for v in a:
        if isinstance(v, Fraction):
            den = den * v.denominator // int_gcd(den, v.denominator)
    ints = [int(v * den) for v in a]
    c = _content(tuple(ints))
    return tuple(v // c for v in ints)


def _pgcd(a: tuple, b: tuple) -> tuple[int, ...]:
    """Primitive gcd in Z[q] (Euclid over Q, then primitive part)."""
    a, b = _primitive(a), _primitive(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, _primitive(r)
    if not a:
        return _ZERO
    if a[-1] < 0:
        a = _pneg(a)
    return a


def _pdivexact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    q, r = _pdivmod(a, b)
    if r or any(v.denominator != 1 for v in q):
        raise ArithmeticError("inexact polynomial division")
    return tuple(int(v) for v in q)


def _peval(a: tuple[int, ...], x: Fraction) -> Fraction:
    out = Fraction(0)
    for v in reversed(a):
        out = out * x + v
    return out


def _pstr(a: tuple[int, ...]) -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        v = a[k]
        if not v:
            continue
        if k == 0:
            body = str(abs(v))
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if abs(v) == 1 else f"{abs(v)}*{mono}"
        if not parts:
            parts.append(body if v > 0 else "-" + body)
        else:
            parts.append(("+" if v > 0 else "-") + body)
    return "".join(parts)


class RatFunc:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            raise TypeError("use RatFunc arithmetic instead of nesting")
        n = self._coerce(num)
        d = self._coerce(den)
        if any(isinstance(v, Fraction) for v in n) or \
                any(isinstance(v, Fraction) for v in d):
            n, d = _primitive_pair(n, d)
        self.num, self.den = _normalise(n, d)

    @staticmethod
    def _coerce(v) -> tuple:
        if isinstance(v, tuple):
            return _trim(list(v))
        if isinstance(v, int):
            return (v,) if v else _ZERO
        if isinstance(v, Fraction):
            return (v,) if v else _ZERO  # denominators cleared in __init__
        raise TypeError(f"cannot build RatFunc from {type(v).__name__}")

    def __reduce__(self):
        return (_ratfunc_from_raw, (self.num, self.den))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        other = _as_rf(other)
        if self.den == _ONE and other.den == _ONE:
            return _ratfunc_from_raw(_padd(self.num, other.num), _ONE)
        return _raw(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                    _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return _ratfunc_from_raw(_pneg(self.num), self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RatFunc":
        return _as_rf(other) + (-self)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        other = _as_rf(other)
        if self.den == _ONE and other.den == _ONE:
            return _ratfunc_from_raw(_pmul(self.num, other.num), _ONE)
        return _raw(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        other = _as_rf(other)
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return _raw(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_rf(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def eval_at(self, q0) -> Fraction:
        """Exact evaluation at a rational point; raises PoleError at a pole."""
        q0 = Fraction(q0)
        d = _peval(self.den, q0)
        if not d:
            raise PoleError(f"pole at q = {q0}")
        return _peval(self.num, q0) / d

    def __str__(self) -> str:
        ns = _pstr(self.num)
        if self.den == _ONE:
            return ns
        ds = _pstr(self.den)
        if _needs_parens(ns):
            ns = f"({ns})"
        if _needs_parens(ds):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a zero of its denominator."""


def _needs_parens(s: str) -> bool:
    return any(ch in s[1:] for ch in "+-") or "*" in s


def _valuation(a: tuple) -> int:
    for k, v in enumerate(a):
        if v:
            return k
    return 0


def _is_monomial(a: tuple) -> bool:
    return bool(a) and all(v == 0 for v in a[:-1])


def _normalise(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    """Canonicalise a pair of integer-coefficient polynomials."""
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q)")
    if not num:
        return _ZERO, _ONE
    # fast path: monomial denominator c * q^k (the common case)
    if _is_monomial(den):
        s = min(_valuation(num), len(den) - 1)
        if s:
            num, den = num[s:], den[s:]
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        g = int_gcd(_content(num), den[-1])
        if g > 1:
            num = tuple(v // g for v in num)
            den = den[:-1] + (den[-1] // g,)
        return num, den
    # strip a common q power, then the full gcd
    s = min(_valuation(num), _valuation(den))
    if s:
        num, den = num[s:], den[s:]
    g = _pgcd(num, den)
    if len(g) > 1:
        num = _pdivexact(num, g)
        den = _pdivexact(den, g)
    c = int_gcd(_content(num), _content(den))
    if c > 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    if den[-1] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


def _primitive_pair(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    """Integer coefficients with gcd(content(num), content(den)) = 1."""
    scale = 1
    for v in list(num) + list(den):
        if isinstance(v, Fraction):
            scale = scale * v.denominator // int_gcd(scale, v.denominator)
    num = tuple(int(v * scale) for v in num)
    den = tuple(int(v * scale) for v in den)
    if not num:
        c = _content(den)
        return _ZERO, tuple(v // c for v in den)
    c = int_gcd(_content(num), _content(den))
    return tuple(v // c for v in num), tuple(v // c for v in den)


def _raw(num: tuple, den: tuple) -> RatFunc:
    obj = object.__new__(RatFunc)
    obj.num, obj.den = _normalise(num, den)
    return obj


def _ratfunc_from_raw(num: tuple, den: tuple) -> RatFunc:
    obj = object.__new__(RatFunc)
    obj.num, obj.den = num, den
    return obj


def _as_rf(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, Fraction):
        return _raw((v.numerator,) if v.numerator else _ZERO, (v.denominator,))
    if isinstance(v, int):
        return _ratfunc_from_raw((v,) if v else _ZERO, _ONE)
    raise TypeError(f"cannot coerce {type(v).__name__} to RatFunc")


ZERO = RatFunc(0)
ONE = RatFunc(1)


def from_fraction(v) -> RatFunc:
    return _as_rf(Fraction(v))


_QPOW_CACHE: dict[int, RatFunc] = {}


def q_power(i: int) -> RatFunc:
    """The monomial q^i for any integer i."""
    hit = _QPOW_CACHE.get(i)
    if hit is None:
        if i >= 0:
            hit = _ratfunc_from_raw((0,) * i + (1,), _ONE)
        else:
            hit = _ratfunc_from_raw(_ONE, (0,) * (-i) + (1,))
        _QPOW_CACHE[i] = hit
    return hit


Q = q_power(1)


def detect_q_power(v: RatFunc) -> int | None:
    """Return i if v equals q^i exactly, else None."""
    if not v.num:
        raise ValueError("zero is not a power of q")
    if v.den == _ONE:
        if v.num[-1] == 1 and _content(v.num) == 1 and all(c == 0 for c in v.num[:-1]):
            return len(v.num) - 1
        return None
    if v.num == _ONE and v.den[-1] == 1 and all(c == 0 for c in v.den[:-1]):
        return -(len(v.den) - 1)
    return None
