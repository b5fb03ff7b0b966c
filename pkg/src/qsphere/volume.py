"""The degree-2 volume functional, its variants, and the cyclic correction.

``phi`` pairs a twist-q^2 2-cycle with the fundamental class.  Three
evaluation routes are implemented and agree termwise:

  * ``delta`` -- the closed form: q^{-1} times the coefficient of
    1 (x) x_1 (x) x_{-1};
  * ``efd``   -- q^{-1} eps(a_0) F(a_1) E(a_2) with E, F the counit
    composed with the distinguished twisted derivations;
  * ``cap``   -- cap against d_1 cup d_{-1} followed by the counit trace.

``phi`` itself is not invariant under the cyclic rotation.  Adding the
coboundary pairing ``eta`` repairs this without moving the induced
functional on homology.  The pairing behind ``eta`` is supported on the
x_0 tower and on the balanced mixed pairs; its low entries are

    chi(1, x_0)    = 1/(1 - q^-2),
    chi(1, x_0^2)  = -1/(q - q^-1),
    chi(x_0, x_0)  = -1/(2(q - q^-1)),

and the higher entries are forced from these by the cyclicity constraints
(see ``counterterm_delta``).  Truncating the family to the three entries
above would repair the single witness 1 (x) x_1 (x) x_{-1} but break
cyclicity on longer words; the full family repairs all of them.
"""

from __future__ import annotations

from .algebra import (AlgElem, Automorphism, BasisIndex, basis_indices,
                      counit, mul)
from .chains import Chain, Tensor, boundary, chain_to_elem, cyclic_t
from .cochains import cap, cup, partial
from .homology import SIGMA_MOD_LAMBDA, TraceFunctional, trace_eval
from .qfield import ONE, Q, RatFunc, ZERO, q_power

__all__ = [
    "deriv_E", "deriv_F", "phi", "phi_pm", "eta", "eta_with_pairing",
    "cyclic_cocycle", "counterterm_delta", "counterterm_pairing",
    "FUNCTIONALS", "functional", "is_cyclic", "CyclicityReport",
]

_D1 = partial(1)
_DM1 = partial(-1)
_D0 = partial(0)
_CUP_D1_DM1 = cup(_D1, _DM1)
_CUP_D0_D1 = cup(_D0, _D1)
_CUP_D0_DM1 = cup(_D0, _DM1)

_WITNESS_TENSOR: Tensor = ((0, 0), (0, 1), (0, -1))


def deriv_E(a: AlgElem) -> RatFunc:
    """Counit of the lowering derivation value."""
    return counit(_DM1.eval([a]))


def deriv_F(a: AlgElem) -> RatFunc:
    """Counit of the raising derivation value."""
    return counit(_D1.eval([a]))


def _require_volume_chain(c: Chain) -> None:
    if c.degree != 2:
        raise ValueError("the volume functional takes degree-2 chains")
    if c.twist.lam != SIGMA_MOD_LAMBDA:
        raise ValueError("the volume functional lives at twist q^2")


_EF_MEMO: dict[BasisIndex, tuple[RatFunc, RatFunc]] = {}


def _ef(key: BasisIndex) -> tuple[RatFunc, RatFunc]:
    hit = _EF_MEMO.get(key)
    if hit is None:
        e = AlgElem.basis(*key)
        hit = (counit(_DM1.eval([e])), counit(_D1.eval([e])))
        _EF_MEMO[key] = hit
    return hit


def phi(c: Chain, variant: str = "delta") -> RatFunc:
    """Evaluate the volume functional through one of its three routes."""
    _require_volume_chain(c)
    if variant == "delta":
        return c.coeff(_WITNESS_TENSOR) / Q
    if variant == "efd":
        out = ZERO
        for (a0, a1, a2), w in c.terms.items():
            if a0 != (0, 0):
                continue
            f1 = _ef(a1)[1]
            if not f1:
                continue
            e2 = _ef(a2)[0]
            if e2:
                out = out + w * f1 * e2
        return out / Q
    if variant == "cap":
        reduced = cap(c, _CUP_D1_DM1)
        unit = TraceFunctional("unit", reduced.twist)
        return trace_eval(unit, chain_to_elem(reduced)) / Q
    raise ValueError(f"unknown variant {variant!r} (want delta, efd or cap)")


def phi_pm(sign: int, c: Chain) -> RatFunc:
    """The alternative volume representatives through the x_{-+1} traces.

    phi_plus  = q^{-1} int_[x_{-1}] ( c cap (d_0 cup d_1) ),
    phi_minus = q      int_[x_{+1}] ( c cap (d_0 cup d_{-1}) ).

    Both take the value 1 on the fundamental cycle and vanish on
    boundaries, so they agree with phi on homology but not on chains.
    """
    _require_volume_chain(c)
    if sign == 1:
        reduced = cap(c, _CUP_D0_D1)
        tr = TraceFunctional(("xpower", -1, 1), reduced.twist)
        return trace_eval(tr, chain_to_elem(reduced)) / Q
    if sign == -1:
        reduced = cap(c, _CUP_D0_DM1)
        tr = TraceFunctional(("xpower", 1, 1), reduced.twist)
        return Q * trace_eval(tr, chain_to_elem(reduced))
    raise ValueError("sign must be +1 or -1")


# -- the cyclic correction ---------------------------------------------------

_DELTA_MEMO: dict[int, RatFunc] = {}


def counterterm_delta(k: int) -> RatFunc:
    """The tower values chi(1, x_0^k).

    delta_1 is a normalisation convention; for k >= 2 cyclicity forces the
    recursion delta_{k+2} = -q delta_{k+1} (1-q^{2k})/(1-q^{2k+2}) from the
    balanced-pair constraints, whose closed form is
    (-1)^{k-1} / (q^{k-1} - q^{1-k}).
    """
    if k <= 0:
        return ZERO
    hit = _DELTA_MEMO.get(k)
    if hit is None:
        if k == 1:
            hit = ONE / (ONE - q_power(-2))
        else:
            hit = RatFunc(-1) ** (k - 1) / (q_power(k - 1) - q_power(1 - k))
        _DELTA_MEMO[k] = hit
    return hit


_TOWER_MEMO: dict[int, dict[int, RatFunc]] = {}


def _mixed_tower(j: int) -> dict[int, RatFunc]:
    """x_1^j x_{-1}^j as a polynomial in x_0: map power -> coefficient."""
    hit = _TOWER_MEMO.get(j)
    if hit is None:
        prod = mul(AlgElem.basis(0, j), AlgElem.basis(0, -j))
        hit = {i: c for (i, jj), c in prod.terms.items() if jj == 0}
        _TOWER_MEMO[j] = hit
    return hit


_PAIRING_MEMO: dict[tuple[BasisIndex, BasisIndex], RatFunc] = {}


def counterterm_pairing(u: BasisIndex, v: BasisIndex) -> RatFunc:
    """The bilinear pairing chi on basis pairs whose coboundary is eta."""
    hit = _PAIRING_MEMO.get((u, v))
    if hit is None:
        hit = _PAIRING_MEMO[(u, v)] = _pairing(u, v)
    return hit


def _pairing(u: BasisIndex, v: BasisIndex) -> RatFunc:
    (k, l), (m, n) = u, v
    if l == 0 and n == 0:
        if k == 0 and m == 0:
            return ZERO
        if k == 0:
            return counterterm_delta(m)
        if m == 0:
            return ZERO
        return counterterm_delta(k + m) / RatFunc(2)
    if l >= 1 and n == -l:
        acc = ZERO
        for c, w in _mixed_tower(l).items():
            d = counterterm_delta(k + m + c)
            if d:
                acc = acc + w * d
        acc = acc * q_power(-2 * l * m)
        if l == 1 and k == 0 and m == 0:
            acc = acc - ONE / Q
        return acc
    return ZERO


def eta_with_pairing(c: Chain, pairing) -> RatFunc:
    """Evaluate a coboundary functional: the pairing applied to b(c)."""
    _require_volume_chain(c)
    out = ZERO
    for (u, v), w in boundary(c).terms.items():
        p = pairing(u, v)
        if p:
            out = out + w * p
    return out


def eta(c: Chain) -> RatFunc:
    """The correction term: chi o b.  Vanishes on cycles and boundaries."""
    return eta_with_pairing(c, counterterm_pairing)


def cyclic_cocycle(c: Chain) -> RatFunc:
    """The cyclic representative phi + eta of the volume class."""
    return phi(c, "delta") + eta(c)


FUNCTIONALS = {
    "phi-delta": lambda c: phi(c, "delta"),
    "phi-efd": lambda c: phi(c, "efd"),
    "phi-cap": lambda c: phi(c, "cap"),
    "phi-plus": lambda c: phi_pm(1, c),
    "phi-minus": lambda c: phi_pm(-1, c),
    "eta": eta,
    "phi-plus-eta": cyclic_cocycle,
}


def functional(name: str):
    try:
        return FUNCTIONALS[name]
    except KeyError:
        raise ValueError(
            f"unknown functional {name!r}; choose from {sorted(FUNCTIONALS)}") from None


class CyclicityReport:
    """Outcome of the bounded cyclicity check of a degree-2 functional.

    Two characterisations are tested on the truncated basis: invariance
    under the cyclic rotation, and vanishing on chains with leading slot 1.
    """

    def __init__(self, name: str, truncation: tuple[int, int],
                 rotation_defects: list[tuple[Tensor, RatFunc]],
                 unit_values: list[tuple[Tensor, RatFunc]],
                 checked_rotations: int, checked_units: int,
                 rotation_violations: int, unit_violations: int):
        self.name = name
        self.truncation = truncation
        self.rotation_defects = rotation_defects
        self.unit_values = unit_values
        self.checked_rotations = checked_rotations
        self.checked_units = checked_units
        self.rotation_violations = rotation_violations
        self.unit_violations = unit_violations

    @property
    def is_cyclic(self) -> bool:
        return not self.rotation_violations and not self.unit_violations

    def witness(self) -> tuple[Tensor, RatFunc] | None:
        if self.rotation_defects:
            return self.rotation_defects[0]
        if self.unit_values:
            return self.unit_values[0]
        return None

    def __repr__(self):
        state = "cyclic" if self.is_cyclic else "not cyclic"
        return (f"CyclicityReport({self.name}: {state} on truncation "
                f"{self.truncation})")


def is_cyclic(name: str, truncation: tuple[int, int] = (3, 3),
              max_witnesses: int = 10) -> CyclicityReport:
    """Check both cyclicity characterisations on the truncated basis."""
    f = functional(name)
    twist = Automorphism(SIGMA_MOD_LAMBDA)
    idx = basis_indices(*truncation)
    one: BasisIndex = (0, 0)

    unit_values: list[tuple[Tensor, RatFunc]] = []
    checked_units = unit_violations = 0
    for u in idx:
        for v in idx:
            tensor: Tensor = (one, u, v)
            val = f(Chain(2, twist, {tensor: ONE}))
            checked_units += 1
            if val:
                unit_violations += 1
                if len(unit_values) < max_witnesses:
                    unit_values.append((tensor, val))

    rotation_defects: list[tuple[Tensor, RatFunc]] = []
    checked_rotations = rotation_violations = 0
    for a in idx:
        for b in idx:
            for d in idx:
                tensor = (a, b, d)
                c = Chain(2, twist, {tensor: ONE})
                defect = f(cyclic_t(c)) - f(c)
                checked_rotations += 1
                if defect:
                    rotation_violations += 1
                    if len(rotation_defects) < max_witnesses:
                        rotation_defects.append((tensor, defect))
    return CyclicityReport(name, truncation, rotation_defects, unit_values,
                           checked_rotations, checked_units,
                           rotation_violations, unit_violations)
