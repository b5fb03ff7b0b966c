"""Twisted Hochschild chains, the boundary, the coboundary, and the cyclic
rotation.

A degree-n chain over the twisted bimodule is a finitely supported linear
combination of (n+1)-fold tensors of basis monomials, tagged with the
twisting automorphism.  The boundary multiplies adjacent slots and wraps
the twisted last factor around to the front:

    b(a_0 (x) ... (x) a_n) = sum_i (-1)^i a_0 (x) ... (x) a_i a_{i+1} (x) ...
                             + (-1)^n sigma(a_n) a_0 (x) ... (x) a_{n-1}.

Chains are always stored on basis tensors: any operation producing general
elements in a slot re-expands multilinearly right away, so equal chains
have identical term maps.
"""

from __future__ import annotations

import json

from .algebra import (AlgElem, Automorphism, BasisIndex, apply_aut, basis_mul,
                      mul)
from .expr import parse_scalar, render_scalar
from .qfield import RatFunc, ZERO

Tensor = tuple[BasisIndex, ...]


class Chain:
    """A twisted chain of fixed degree: map from basis tensors to Q(q)."""

    __slots__ = ("degree", "twist", "terms")

    def __init__(self, degree: int, twist: Automorphism,
                 terms: dict[Tensor, RatFunc] | None = None):
        if degree < 0:
            raise ValueError("chain degree must be >= 0")
        self.degree = degree
        self.twist = twist
        clean: dict[Tensor, RatFunc] = {}
        for t, c in (terms or {}).items():
            if len(t) != degree + 1:
                raise ValueError(
                    f"tensor {t} has {len(t)} slots, expected {degree + 1}")
            if c:
                clean[t] = c
        self.terms = clean

    def _compatible(self, other: "Chain") -> None:
        if self.degree != other.degree:
            raise ValueError("degree mismatch between chains")
        if self.twist != other.twist:
            raise ValueError("twist mismatch between chains")

    def __add__(self, other: "Chain") -> "Chain":
        self._compatible(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, ZERO) + c
        return Chain(self.degree, self.twist, out)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + other.scale(RatFunc(-1))

    def scale(self, c) -> "Chain":
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        return Chain(self.degree, self.twist,
                     {t: v * c for t, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return (self.degree == other.degree and self.twist == other.twist
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, self.twist, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, tensor: Tensor) -> RatFunc:
        return self.terms.get(tensor, ZERO)

    def __repr__(self) -> str:
        return f"Chain(degree={self.degree}, twist={self.twist.lam}, {len(self.terms)} terms)"


def expand_tensor(factors: list[AlgElem] | tuple[AlgElem, ...],
                  twist: Automorphism) -> Chain:
    """Multilinear expansion of a pure tensor of general elements."""
    if not factors:
        raise ValueError("a tensor needs at least one factor")
    terms: dict[Tensor, RatFunc] = {(): RatFunc(1)}
    for f in factors:
        nxt: dict[Tensor, RatFunc] = {}
        for t, c in terms.items():
            for k, v in f.terms.items():
                key = t + (k,)
                s = nxt.get(key, ZERO) + c * v
                if s:
                    nxt[key] = s
                elif key in nxt:
                    del nxt[key]
        terms = nxt
    return Chain(len(factors) - 1, twist, terms)


def _put(out: dict, key, val: RatFunc) -> None:
    s = out.get(key, ZERO) + val
    if s:
        out[key] = s
    elif key in out:
        del out[key]


_LAM_POW_CACHE: dict[tuple[RatFunc, int], RatFunc] = {}


def _lam_pow(lam: RatFunc, j: int) -> RatFunc:
    key = (lam, j)
    hit = _LAM_POW_CACHE.get(key)
    if hit is None:
        hit = lam ** j
        _LAM_POW_CACHE[key] = hit
    return hit


def boundary(c: Chain) -> Chain:
    """The twisted Hochschild boundary; degree drops by one."""
    if c.degree < 1:
        raise ValueError("boundary needs degree >= 1")
    n = c.degree
    lam = c.twist.lam
    out: dict[Tensor, RatFunc] = {}
    get = out.get
    for t, w in c.terms.items():
        for i in range(n):
            wi = w if i % 2 == 0 else -w
            for k, pc in basis_mul(t[i], t[i + 1]).terms.items():
                key = t[:i] + (k,) + t[i + 2:]
                s = get(key, ZERO) + wi * pc
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        # last face: the twist scales e_{ij} by lam^j
        wl = w * _lam_pow(lam, t[n][1])
        if n % 2:
            wl = -wl
        for k2, pc in basis_mul(t[n], t[0]).terms.items():
            key = (k2,) + t[1:n]
            s = get(key, ZERO) + wl * pc
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return Chain(n - 1, c.twist, out)


def cyclic_t(c: Chain) -> Chain:
    """Signed twisted rotation: a_0 (x) ... (x) a_n -> (-1)^n sigma(a_n) (x) a_0 ..."""
    n = c.degree
    sign = RatFunc(-1) ** n
    out: dict[Tensor, RatFunc] = {}
    for t, w in c.terms.items():
        moved = apply_aut(c.twist, AlgElem.basis(*t[n]))
        for k, mc in moved.terms.items():
            _put(out, (k,) + t[:n], w * sign * mc)
    return Chain(n, c.twist, out)


def coboundary_eval(psi, args: list[AlgElem] | tuple[AlgElem, ...]) -> AlgElem:
    """Evaluate the coboundary of a cochain on degree(psi)+1 arguments.

    ``psi`` is any object with ``degree``, ``twist`` and ``eval``:

        (b psi)(a_0, ..., a_n) = sigma(a_0) psi(a_1, ..., a_n)
                                 + sum_i (-1)^{i+1} psi(..., a_i a_{i+1}, ...)
                                 + (-1)^{n+1} psi(a_0, ..., a_{n-1}) a_n.
    """
    n = psi.degree
    if len(args) != n + 1:
        raise ValueError(f"coboundary of a degree-{n} cochain takes {n + 1} arguments")
    args = list(args)
    acc = mul(apply_aut(psi.twist, args[0]), psi.eval(args[1:]))
    for i in range(n):
        merged = args[:i] + [mul(args[i], args[i + 1])] + args[i + 2:]
        acc = acc + psi.eval(merged).scale(RatFunc(-1) ** (i + 1))
    acc = acc + mul(psi.eval(args[:n]), args[n]).scale(RatFunc(-1) ** (n + 1))
    return acc


def chain_to_elem(c: Chain) -> AlgElem:
    """Identify a degree-0 chain with the algebra element it carries."""
    if c.degree != 0:
        raise ValueError("only degree-0 chains are algebra elements")
    return AlgElem({t[0]: v for t, v in c.terms.items()})


def elem_to_chain(a: AlgElem, twist: Automorphism) -> Chain:
    return Chain(0, twist, {(k,): v for k, v in a.terms.items()})


# -- file format --------------------------------------------------------------


def chain_to_json(c: Chain) -> str:
    """Serialise to the canonical structured-text form."""
    terms = [
        {"coeff": render_scalar(c.terms[t]), "tensor": [list(k) for k in t]}
        for t in sorted(c.terms)
    ]
    doc = {"degree": c.degree, "twist": render_scalar(c.twist.lam), "terms": terms}
    return json.dumps(doc, indent=2)


def chain_from_json(text: str) -> Chain:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed chain file: {exc}") from exc
    for field in ("degree", "twist", "terms"):
        if field not in doc:
            raise ValueError(f"malformed chain file: missing field {field!r}")
    degree = doc["degree"]
    if not isinstance(degree, int) or degree < 0:
        raise ValueError("malformed chain file: degree must be a natural number")
    twist = Automorphism(parse_scalar(doc["twist"]))
    terms: dict[Tensor, RatFunc] = {}
    for k, entry in enumerate(doc["terms"]):
        if "coeff" not in entry or "tensor" not in entry:
            raise ValueError(f"malformed chain file: term {k} needs coeff and tensor")
        tensor = entry["tensor"]
        if len(tensor) != degree + 1:
            raise ValueError(
                f"malformed chain file: term {k} has {len(tensor)} slots, "
                f"degree {degree} needs {degree + 1}")
        key = tuple((int(i), int(j)) for i, j in tensor)
        coeff = parse_scalar(entry["coeff"])
        terms[key] = terms.get(key, ZERO) + coeff
    return Chain(degree, twist, terms)
