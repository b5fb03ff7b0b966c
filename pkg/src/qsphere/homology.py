"""The fundamental cycle, twisted traces, and reduction to homology bases.

The degree-2 fundamental cycle lives at twist q^2 and generates the only
nonvanishing second homology group.  Degree-0 homology at twist lambda has
the basis

    {[1]}
    u {[x_{+1}^j], [x_{-1}^j] : j >= 1}        when lambda = 1
    u {[x_0]}                                  when lambda != q^{2i} for i > 1
                                               (the lambda = q^2 case rides on
                                               the same trace formula)
    u {[x_0^i]}                                when lambda = q^{2i}, i > 1.

Each basis class carries a dual twisted trace; evaluating the applicable
traces reads off the homology class of any 0-cycle.  A second, independent
reduction rewrites modulo an explicit spanning set of the boundary image
and is kept as the oracle for the trace route.
"""

from __future__ import annotations

from .algebra import AlgElem, Automorphism, BasisIndex
from .chains import Chain, boundary, expand_tensor
from .qfield import ONE, Q, RatFunc, ZERO, detect_q_power, q_power

__all__ = [
    "fundamental_class", "TraceFunctional", "trace_eval", "h0_basis",
    "h0_reduce", "h0_reduce_oracle", "h2_class", "SIGMA_MOD_LAMBDA",
]

SIGMA_MOD_LAMBDA = q_power(2)


def fundamental_class() -> Chain:
    """The explicit degree-2 cycle at twist q^2 generating H_2."""
    one = AlgElem.basis(0, 0)
    x1 = AlgElem.basis(0, 1)
    x0 = AlgElem.basis(1, 0)
    xm1 = AlgElem.basis(0, -1)
    twist = Automorphism(SIGMA_MOD_LAMBDA)
    two = RatFunc(2)
    qq = Q

    def tens(c, a, b, d) -> Chain:
        return expand_tensor([a, b, d], twist).scale(c)

    parts = [
        tens(two, x1, xm1, x0),
        tens(-two * qq ** 2, x1, x0, xm1),
        tens(two * qq ** -2, xm1, x0, x1),
        tens(-two, xm1, x1, x0),
        tens(qq, one, x1, xm1),
        tens(-(ONE / qq), one, xm1, x1),
        tens(qq - ONE / qq, one, x0, x0),
        tens(two, x0, x1, xm1),
        tens(-two, x0, xm1, x1),
        tens(two * (qq ** 2 - qq ** -2), x0, x0, x0),
    ]
    acc = parts[0]
    for p in parts[1:]:
        acc = acc + p
    return acc


# -- twisted traces ------------------------------------------------------------


class TraceFunctional:
    """A twisted trace dual to one degree-0 homology basis class.

    kind is one of:
      * "unit"               -- the counit (valid at every twist)
      * ("xpower", s, j)     -- dual to [x_s^j], s = +1 or -1, j >= 1; twist 1
      * "x0"                 -- dual to [x_0]; twist not of the form q^{2i}, i > 1
      * ("x0power", i)       -- dual to [x_0^i], i > 1; twist exactly q^{2i}
    """

    __slots__ = ("kind", "twist")

    def __init__(self, kind, twist: Automorphism):
        self.kind = kind
        self.twist = twist
        i = detect_q_power(twist.lam) if twist.lam else None
        if kind == "unit":
            pass
        elif kind == "x0":
            if i is not None and i > 2 and i % 2 == 0:
                raise ValueError(
                    "the [x0] trace is undefined at twist q^{2i} for i > 1")
        elif isinstance(kind, tuple) and kind[0] == "xpower":
            _, s, j = kind
            if s not in (1, -1) or j < 1:
                raise ValueError("xpower trace needs sign +-1 and j >= 1")
            if twist.lam != ONE:
                raise ValueError("xpower traces require the trivial twist")
        elif isinstance(kind, tuple) and kind[0] == "x0power":
            _, ip = kind
            if ip <= 1:
                raise ValueError("x0power traces need exponent > 1")
            if twist.lam != q_power(2 * ip):
                raise ValueError("x0power trace exponent must match the twist")
        else:
            raise ValueError(f"unknown trace kind {kind!r}")

    def label(self) -> str:
        if self.kind == "unit":
            return "[1]"
        if self.kind == "x0":
            return "[x0]"
        tag, *rest = self.kind
        if tag == "xpower":
            s, j = rest
            gen = "x1" if s == 1 else "xm1"
            return f"[{gen}]" if j == 1 else f"[{gen}^{j}]"
        return f"[x0^{rest[0]}]"

    def on_basis(self, key: BasisIndex) -> RatFunc:
        k, l = key
        lam = self.twist.lam
        if self.kind == "unit":
            return ONE if (k, l) == (0, 0) else ZERO
        if self.kind == "x0":
            if l != 0 or k == 0:
                return ZERO
            if k == 1:
                return ONE
            sign = RatFunc(-1) ** (k + 1)
            return (sign * q_power(1 - k) * (ONE - lam * q_power(-2))
                    / (ONE - lam * q_power(-2 * k)))
        tag, *rest = self.kind
        if tag == "xpower":
            s, j = rest
            return ONE if (k == 0 and l == s * j) else ZERO
        ip = rest[0]
        return ONE if (k == ip and l == 0) else ZERO

    def __call__(self, a: AlgElem) -> RatFunc:
        return trace_eval(self, a)

    def __repr__(self):
        return f"TraceFunctional({self.label()} @ {self.twist.lam})"


def trace_eval(t: TraceFunctional, a: AlgElem) -> RatFunc:
    out = ZERO
    for key, c in a.terms.items():
        v = t.on_basis(key)
        if v:
            out = out + c * v
    return out


def _positive_even_power(lam: RatFunc) -> int | None:
    """Return i > 0 when lam = q^{2i}, else None."""
    k = detect_q_power(lam)
    if k is not None and k > 0 and k % 2 == 0:
        return k // 2
    return None


def h0_basis(twist: Automorphism, jmax: int = 3) -> list[str]:
    """Labels of the degree-0 homology basis at the given twist.

    At the trivial twist the x-power families are infinite; they are listed
    up to jmax.
    """
    labels = ["[1]"]
    i = _positive_even_power(twist.lam)
    if twist.lam == ONE:
        for j in range(1, jmax + 1):
            labels.append(f"[x1^{j}]" if j > 1 else "[x1]")
        for j in range(1, jmax + 1):
            labels.append(f"[xm1^{j}]" if j > 1 else "[xm1]")
        labels.append("[x0]")
    elif i is None or i == 1:
        labels.append("[x0]")
    else:
        labels.append(f"[x0^{i}]")
    return labels


def applicable_traces(twist: Automorphism, jmax: int) -> list[TraceFunctional]:
    traces = [TraceFunctional("unit", twist)]
    i = _positive_even_power(twist.lam)
    if twist.lam == ONE:
        for s in (1, -1):
            for j in range(1, jmax + 1):
                traces.append(TraceFunctional(("xpower", s, j), twist))
        traces.append(TraceFunctional("x0", twist))
    elif i is None or i == 1:
        traces.append(TraceFunctional("x0", twist))
    else:
        traces.append(TraceFunctional(("x0power", i), twist))
    return traces


def h0_reduce(a: AlgElem, twist: Automorphism) -> dict[str, RatFunc]:
    """Coordinates of [a] against the homology basis, via the dual traces."""
    jmax = max((abs(j) for (_, j) in a.terms), default=0)
    coords: dict[str, RatFunc] = {}
    for t in applicable_traces(twist, jmax):
        v = trace_eval(t, a)
        if v:
            coords[t.label()] = v
    return coords


def h0_reduce_oracle(a: AlgElem, twist: Automorphism) -> dict[str, RatFunc]:
    """Independent reduction modulo an explicit spanning set of im b.

    The boundary image is spanned by e_{i+1,j} (j != 0), by (lambda-1)e_{0j}
    (j != 0), and by the two-term ladder

        (lambda - q^{2i+4}) q^{-2i-2} e_{i+2,0}
        + (lambda - q^{2i+2}) q^{-2i-1} e_{i+1,0},   i >= 0,

    which is eliminated from the top down.
    """
    lam = twist.lam
    work: dict[BasisIndex, RatFunc] = dict(a.terms)

    # off-tower monomials
    for (i, j) in list(work):
        if j != 0:
            if i >= 1 or lam != ONE:
                del work[(i, j)]

    # the x0 ladder, top down; the row one above the top coordinate can
    # already kill it, so start there
    kmax = max((i for (i, j) in work if j == 0), default=0)
    killed: set[int] = set()
    for k in range(kmax + 1, 1, -1):
        if k in killed and (k, 0) in work:
            del work[(k, 0)]
        top = lam - q_power(2 * k)
        bottom = lam - q_power(2 * k - 2)
        if not top:
            # the ladder row is a multiple of e_{k-1,0}
            killed.add(k - 1)
        elif not bottom:
            # the ladder row is a multiple of e_{k,0}
            work.pop((k, 0), None)
        elif k in killed:
            killed.add(k - 1)
        else:
            c = work.pop((k, 0), None)
            if c is not None:
                ratio = -Q * bottom / top
                s = work.get((k - 1, 0), ZERO) + c * ratio
                if s:
                    work[(k - 1, 0)] = s
                else:
                    work.pop((k - 1, 0), None)
    if 1 in killed:
        work.pop((1, 0), None)

    coords: dict[str, RatFunc] = {}
    for (i, j), c in sorted(work.items()):
        if (i, j) == (0, 0):
            coords["[1]"] = c
        elif j != 0:
            gen = "x1" if j > 0 else "xm1"
            coords[f"[{gen}^{abs(j)}]" if abs(j) > 1 else f"[{gen}]"] = c
        elif i == 1:
            coords["[x0]"] = c
        else:
            coords[f"[x0^{i}]"] = c
    return coords


def h2_class(c: Chain) -> RatFunc:
    """The coordinate of a degree-2 cycle against the fundamental class."""
    from .volume import phi

    if c.degree != 2:
        raise ValueError("the second homology pairing needs a degree-2 chain")
    if c.twist.lam != SIGMA_MOD_LAMBDA:
        raise ValueError("the second homology pairing lives at twist q^2")
    if not boundary(c).is_zero():
        raise ValueError("not a cycle: the boundary is nonzero")
    return phi(c, "delta")
