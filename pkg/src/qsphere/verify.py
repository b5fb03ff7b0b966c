"""The named identity suite: one machine-checkable assertion per result.

Every displayed identity of the underlying calculus is wired to a check
C1..C15.  Checks quantified over the infinite basis run on a truncation
and report ``bounded-pass``; finite exact instances report ``pass``.  The
recorded cap tables carry a curated reading-notes list: a recomputation
that disagrees with a recorded table is a failure unless the deviation is
recorded there.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass

from ._fastscan import double_boundary_failures
from .algebra import (AlgElem, Automorphism, basis_indices, basis_mul,
                      is_sigma_central, mul)
from .chains import (Chain, Tensor, boundary, chain_to_elem, elem_to_chain,
                     expand_tensor)
from .cochains import (DerivationRelationError, cap, central_x0_power, cup,
                       make_derivation, partial, solve_inner)
from .expr import parse, parse_scalar, render
from .homology import applicable_traces, fundamental_class, h0_reduce
from .qfield import ONE, Q, RatFunc, ZERO, q_power
from .volume import (FUNCTIONALS, cyclic_cocycle, eta, is_cyclic, phi, phi_pm)

DEFAULT_TRUNCATION = (3, 3)

SAMPLE_TWISTS = ("1", "q^2", "1/q^2", "q^4", "3")

#: Accepted deviations of a recomputation from the recorded cap tables,
#: keyed by table label.  Empty: every recorded value matches recomputation.
ACCEPTED_TABLE_DEVIATIONS: dict[str, str] = {}

#: Reading notes for the recorded tables (cosmetic, value-preserving).
TABLE_READING_NOTES = (
    "row '(dA cap d0) cap dm1': middle coefficient recorded as "
    "-2*q^2 + 1 + q^-2",
)


@dataclass
class CheckResult:
    name: str
    description: str
    status: str  # pass | fail | bounded-pass
    runtime_ms: float
    witness: str | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "status": self.status,
            "runtime_ms": round(self.runtime_ms, 1),
            "witness": self.witness,
            "note": self.note,
        }


def _twists() -> list[Automorphism]:
    return [Automorphism(parse_scalar(t)) for t in SAMPLE_TWISTS]


def _fmt_tensor(t: Tensor) -> str:
    return " (x) ".join(render(AlgElem.basis(*k)) for k in t)


# ---------------------------------------------------------------------------
# the individual checks; each returns (status, witness, note)


def _check_c1(trunc):
    """b o b = 0 on all basis chains of degrees 2 and 3 (formal twist)."""
    notes = []
    for degree in (2, 3):
        checked, failures = double_boundary_failures(degree, trunc)
        if failures:
            t, coeffs = failures[0]
            return "fail", f"degree {degree} tensor {_fmt_tensor(t)}: {coeffs}", None
        notes.append(f"degree {degree}: {checked} tensors")
    note = ("; ".join(notes) + "; the twist parameter is kept formal, so the "
            "identity holds for every twist value at once, in particular at "
            + ", ".join(SAMPLE_TWISTS))
    return "bounded-pass", None, note


def _check_c2(trunc):
    """The fundamental 2-cycle is closed."""
    d_a = fundamental_class()
    if not boundary(d_a).is_zero():
        return "fail", "boundary of the fundamental cycle is nonzero", None
    return "pass", None, None


def _check_c3(trunc):
    """x0^i is twisted-central for the twist q^{2i}."""
    imax = max(3, trunc[0])
    for i in range(1, imax + 1):
        if not is_sigma_central(AlgElem.basis(i, 0), Automorphism(q_power(2 * i))):
            return "fail", f"x0^{i} fails centrality at twist q^{2 * i}", None
    for lam in ("1", "q^2"):
        if is_sigma_central(AlgElem.basis(0, 1), Automorphism(parse_scalar(lam))):
            return "fail", f"x1 reported central at twist {lam}", None
    return "bounded-pass", None, f"exponents 1..{imax}; x1 correctly rejected"


def _closed_form_generator_boundary(i: int, j: int, k: int, lam: RatFunc) -> AlgElem:
    qp = q_power
    if k == -1:
        if j <= 0:
            return AlgElem({(i, j - 1): ONE - qp(2 * i) / lam})
        return AlgElem({
            (i + 2, j - 1): qp(-4 * j + 2) - qp(2 * i + 2) / lam,
            (i + 1, j - 1): qp(-2 * j + 1) - qp(2 * i + 1) / lam,
        })
    if k == 0:
        return AlgElem({(i + 1, j): qp(-2 * j) - ONE})
    if j >= 0:
        return AlgElem({(i, j + 1): ONE - lam * qp(-2 * i)})
    return AlgElem({
        (i + 2, j + 1): qp(-4 * j - 2) - lam * qp(-2 * i - 2),
        (i + 1, j + 1): qp(-2 * j - 1) - lam * qp(-2 * i - 1),
    })


def _check_c4(trunc):
    """Boundaries of e_{ij} (x) generator match their five closed forms."""
    count = 0
    for tw in _twists():
        lam = tw.lam
        for (i, j) in basis_indices(*trunc):
            for k, gen in ((-1, (0, -1)), (0, (1, 0)), (1, (0, 1))):
                got = chain_to_elem(boundary(Chain(1, tw, {((i, j), gen): ONE})))
                want = _closed_form_generator_boundary(i, j, k, lam)
                count += 1
                if got != want:
                    return ("fail",
                            f"e_{{{i},{j}}} (x) x_{k} at twist {lam}: "
                            f"{render(got)} != {render(want)}", None)
    return "bounded-pass", None, f"{count} instances over twists {', '.join(SAMPLE_TWISTS)}"


def _check_c5(trunc):
    """Trace laws: twisted trace property, vanishing on b, delta duality."""
    idx = basis_indices(*trunc)
    for tw in _twists():
        traces = applicable_traces(tw, trunc[1])
        for t in traces:
            # int(ab) = int(sigma(b) a) on basis pairs
            for a in idx:
                ea = AlgElem.basis(*a)
                for b in idx:
                    eb = AlgElem.basis(*b)
                    lhs = t(mul(ea, eb))
                    rhs = t(mul(tw(eb), ea))
                    if lhs != rhs:
                        return ("fail",
                                f"{t.label()} at twist {tw.lam}: trace law fails "
                                f"on ({render(ea)}, {render(eb)})", None)
            # vanishing on boundaries of e_{ij} (x) generator
            for (i, j) in idx:
                for gen in ((0, -1), (1, 0), (0, 1)):
                    img = chain_to_elem(boundary(Chain(1, tw, {((i, j), gen): ONE})))
                    if t(img):
                        return ("fail",
                                f"{t.label()} at twist {tw.lam} does not vanish "
                                f"on b(e_{{{i},{j}}} (x) {gen})", None)
        # duality against the basis representatives
        reps = [("[1]", AlgElem.basis(0, 0))]
        if tw.lam == ONE:
            for jj in range(1, trunc[1] + 1):
                reps.append((f"[x1^{jj}]" if jj > 1 else "[x1]", AlgElem.basis(0, jj)))
                reps.append((f"[xm1^{jj}]" if jj > 1 else "[xm1]", AlgElem.basis(0, -jj)))
            reps.append(("[x0]", AlgElem.basis(1, 0)))
        else:
            from .homology import _positive_even_power

            i = _positive_even_power(tw.lam)
            if i is None or i == 1:
                reps.append(("[x0]", AlgElem.basis(1, 0)))
            else:
                reps.append((f"[x0^{i}]", AlgElem.basis(i, 0)))
        for t in traces:
            for label, rep in reps:
                want = ONE if t.label() == label else ZERO
                if t(rep) != want:
                    return ("fail",
                            f"duality: {t.label()} on {label} at twist {tw.lam} "
                            f"gives {t(rep)}", None)
    return "bounded-pass", None, f"twists {', '.join(SAMPLE_TWISTS)}"


def _check_c6(trunc):
    """Cap action of x0 on degree-0 homology classes."""
    x0c = central_x0_power(1)

    def capped(elem: AlgElem, lam_text: str) -> dict[str, RatFunc]:
        src = elem_to_chain(elem, Automorphism(parse_scalar(lam_text)))
        out = cap(src, x0c)
        return h0_reduce(chain_to_elem(out), out.twist)

    for j in (1, 2, 3):
        for sgn in (1, -1):
            got = capped(AlgElem.basis(0, sgn * j), "1")
            if got:
                return "fail", f"[x^{j} sign {sgn}] cap x0 reduced to {got}", None
    for k in (1, 2, 3):
        got = capped(AlgElem.basis(0, 0), f"q^{2 * k}")
        if got:
            return "fail", f"[1] cap x0 at twist q^{2 * k} reduced to {got}", None
    for lam_text in ("1", "3", "1/q^2"):
        lam = parse_scalar(lam_text)
        got = capped(AlgElem.basis(1, 0), lam_text)
        val = -Q * (ONE - lam) / (Q * Q - lam)
        want = {} if not val else {"[x0]": val}
        if got != want:
            return ("fail",
                    f"[x0] cap x0 at twist {lam_text}: {got} != {want}", None)
    got = capped(AlgElem.basis(2, 0), "q^4")
    if got != {"[x0^3]": ONE}:
        return "fail", f"[x0^2] cap x0 at twist q^4 gave {got}", None
    return "pass", None, None


def _check_c7(trunc):
    """The three distinguished twisted derivations are well defined."""
    for i in (-1, 0, 1):
        partial(i)  # raises DerivationRelationError on failure
    try:
        d1 = partial(1)
        make_derivation(d1.values[-1], d1.values[0], d1.values[1],
                        Automorphism(ONE))
    except DerivationRelationError:
        return "pass", None, "untwisted variant correctly rejected"
    return "fail", "raising derivation accepted with the trivial twist", None


def _check_c8(trunc):
    """Cup with x0 is inner for the raising/lowering derivations only."""
    lower = AlgElem.basis(0, -1).scale(ONE / (Q - ONE / Q))
    raise_ = AlgElem.basis(0, 1).scale(-(ONE / (Q - ONE / Q)))
    b_plus = solve_inner(cup(partial(1), central_x0_power(1)), trunc)
    if b_plus != lower:
        return "fail", f"witness for d1 cup x0: {render(b_plus) if b_plus else None}", None
    b_minus = solve_inner(cup(partial(-1), central_x0_power(1)), trunc)
    if b_minus != raise_:
        return "fail", f"witness for dm1 cup x0: {render(b_minus) if b_minus else None}", None
    bound = (max(6, trunc[0]), max(6, trunc[1]))
    b_zero = solve_inner(cup(partial(0), central_x0_power(1)), bound)
    if b_zero is not None:
        return "fail", f"d0 cup x0 unexpectedly inner: {render(b_zero)}", None
    return ("bounded-pass", None,
            f"witnesses xm1/(q-1/q) and -x1/(q-1/q); no witness for d0 cup x0 "
            f"within bound {bound}")


# recorded cap tables: label -> (cochain indices, rows).  Degree-1 rows are
# (coefficient, left factor, right slot); degree-0 entries are expressions.
_TABLE_DEG1 = {
    "dA cap d0": (0, (
        ("2/q^2", "xm1*x0", "x1"), ("2*q^2", "x1*x0", "xm1"),
        ("-2*(q^2+1/q^2)", "x0^2", "x0"),
        ("1/q", "xm1", "x1"), ("q", "x1", "xm1"), ("-2*(q+1/q)", "x0", "x0"))),
    "dA cap dm1": (-1, (
        ("-2/q", "x1^2", "xm1"), ("-2/q", "x0^2", "x1"),
        ("2*(q^3+q^-3)", "x1*x0", "x0"),
        ("-(1+q^-2)", "x0", "x1"), ("1+q^-2", "x1", "x0"), ("-1/q", "1", "x1"))),
    "dA cap d1": (1, (
        ("2*q", "xm1^2", "x1"), ("2*q", "x0^2", "xm1"),
        ("-2*(q^3+q^-3)", "xm1*x0", "x0"),
        ("q^2+1", "x0", "xm1"), ("-q^2-1", "xm1", "x0"), ("q", "1", "xm1"))),
}

_TABLE_DEG0 = {
    "(dA cap d0) cap d0": ((0, 0), "2*(q^2-q^-2)*x0^3 + 3*(q-1/q)*x0^2"),
    "(dA cap d0) cap dm1": ((0, -1),
                            "2*(-q^5+1/q)*x1*x0^2 + (-2*q^2+1+q^-2)*x1*x0 + (1/q)*x1"),
    "(dA cap d0) cap d1": ((0, 1),
                           "2*(q-q^-5)*xm1*x0^2 + (q^2+1-2*q^-2)*xm1*x0 + q*xm1"),
    "(dA cap dm1) cap d0": ((-1, 0),
                            "2*(q^-3-q^3)*x1*x0^2 + (-q^2-1+2*q^-2)*x1*x0 - (1/q)*x1"),
    "(dA cap dm1) cap dm1": ((-1, -1),
                             "2*(q^2-q^-6)*x1^2*x0 + (q^-3-q^-5)*x1^2"),
    "(dA cap dm1) cap d1": ((-1, 1),
                            "2*(q^-8-1)*x0^3 + (-q-2/q+q^-5+2*q^-7)*x0^2 "
                            "+ (-2-q^-2+q^-4)*x0 - 1/q"),
    "(dA cap d1) cap d0": ((1, 0),
                           "2*(q^3-q^-3)*xm1*x0^2 + (2*q^2-1-q^-2)*xm1*x0 - q*xm1"),
    "(dA cap d1) cap dm1": ((1, -1),
                            "2*(1-q^8)*x0^3 + (-2*q^7-q^5+2*q+1/q)*x0^2 "
                            "+ (-q^4+q^2+2)*x0 + q"),
    "(dA cap d1) cap d1": ((1, 1),
                           "2*(q^6-q^-2)*xm1^2*x0 + (q^5-q^3)*xm1^2"),
}


def _iterated_cap(indices: tuple[int, ...]) -> Chain:
    c = fundamental_class()
    for i in indices:
        c = cap(c, partial(i))
    return c


def _check_c9(trunc):
    """Chain-level cap tables agree with the recorded displays."""
    deviations = []
    for label, (i, rows) in _TABLE_DEG1.items():
        computed = _iterated_cap((i,))
        recorded = None
        for coeff, a, b in rows:
            t = expand_tensor([parse(a).scale(parse_scalar(coeff)), parse(b)],
                              computed.twist)
            recorded = t if recorded is None else recorded + t
        if computed != recorded:
            deviations.append(label)
    for label, (pair, text) in _TABLE_DEG0.items():
        computed = chain_to_elem(_iterated_cap(pair))
        if computed != parse(text):
            deviations.append(label)
    unexpected = [d for d in deviations if d not in ACCEPTED_TABLE_DEVIATIONS]
    if unexpected:
        return "fail", f"unrecorded table deviations: {', '.join(unexpected)}", None
    note = "all 12 recorded tables reproduced exactly; " + TABLE_READING_NOTES[0]
    if deviations:
        note += "; accepted deviations: " + ", ".join(deviations)
    return "pass", None, note


_HOMOLOGY_TABLE = {
    (0, 0): {}, (1, 1): {}, (-1, -1): {},
    (0, -1): {"[x1]": "1/q"},
    (-1, 0): {"[x1]": "-1/q"},
    (0, 1): {"[xm1]": "q"},
    (1, 0): {"[xm1]": "-q"},
    (1, -1): {"[1]": "q", "[x0]": "q^2+1"},
    (-1, 1): {"[1]": "-1/q", "[x0]": "(-q^2-1)/q^2"},
}


def _check_c10(trunc):
    """Homology-level iterated cap table, including the -q^2 transpose."""
    for pair, want_text in _HOMOLOGY_TABLE.items():
        out = _iterated_cap(pair)
        got = h0_reduce(chain_to_elem(out), out.twist)
        want = {k: parse_scalar(v) for k, v in want_text.items()}
        if got != want:
            return ("fail",
                    f"cap pair {pair}: {_coords_str(got)} != {_coords_str(want)}",
                    None)
    return "pass", None, "all nine reductions match"


def _coords_str(coords: dict[str, RatFunc]) -> str:
    if not coords:
        return "0"
    return " + ".join(f"({v})*{k}" for k, v in sorted(coords.items()))


def _check_c11(trunc):
    """Anticommutation of the derivation classes against the fundamental cycle."""
    d_a = fundamental_class()
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            if i > j:
                continue
            left = cap(d_a, cup(partial(i), partial(j)))
            right = cap(d_a, cup(partial(j), partial(i))).scale(q_power(2 * i * j))
            total = left + right
            coords = h0_reduce(chain_to_elem(total), total.twist)
            if coords:
                return ("fail",
                        f"pair ({i},{j}) reduces to {_coords_str(coords)}", None)
    return "pass", None, "all six ordered pairs"


_VOLUME_WITNESS: Tensor = ((0, 0), (0, 1), (0, -1))

SIGMA_MOD_POWERS = {j: q_power(2 * j) for j in range(-12, 13)}


def _volume_on_boundaries_scan(trunc) -> tuple[int, Tensor | None]:
    """Exact full scan: the closed-form volume functional kills b(C_3)."""
    idx = basis_indices(*trunc)
    lam2 = SIGMA_MOD_POWERS
    checked = 0
    w0, w1, w2 = _VOLUME_WITNESS
    for t0 in idx:
        for t1 in idx:
            for t2 in idx:
                for t3 in idx:
                    val = ZERO
                    if t2 == w1 and t3 == w2:
                        val = val + _coeff_of(t0, t1, w0)
                    if t0 == w0 and t3 == w2:
                        val = val - _coeff_of(t1, t2, w1)
                    if t0 == w0 and t1 == w1:
                        val = val + _coeff_of(t2, t3, w2)
                    if t1 == w1 and t2 == w2:
                        c = _coeff_of(t3, t0, w0)
                        if c:
                            val = val - lam2[t3[1]] * c
                    checked += 1
                    if val:
                        return checked, (t0, t1, t2, t3)
    return checked, None


SIGMA_MOD_POWERS = {j: q_power(2 * j) for j in range(-12, 13)}


def _coeff_of(a, b, target) -> RatFunc:
    return basis_mul(a, b).terms.get(target, ZERO)


def _check_c12(trunc):
    """Volume functional: normalisation, variant agreement, boundary kernel."""
    d_a = fundamental_class()
    for variant in ("delta", "efd", "cap"):
        if phi(d_a, variant) != ONE:
            return "fail", f"phi({variant}) on the fundamental cycle != 1", None
    if phi_pm(1, d_a) != ONE or phi_pm(-1, d_a) != ONE:
        return "fail", "phi_pm on the fundamental cycle != 1", None

    idx = basis_indices(*trunc)
    tw = Automorphism(q_power(2))
    for a in idx:
        for b in idx:
            for d in idx:
                c = Chain(2, tw, {(a, b, d): ONE})
                v = phi(c, "delta")
                if phi(c, "efd") != v or phi(c, "cap") != v:
                    return ("fail",
                            f"variant disagreement at {_fmt_tensor((a, b, d))}",
                            None)

    checked, bad = _volume_on_boundaries_scan(trunc)
    if bad is not None:
        return "fail", f"phi does not kill b({_fmt_tensor(bad)})", None

    rng = random.Random(20240)
    for _ in range(200):
        t = tuple(rng.choice(idx) for _ in range(4))
        img = boundary(Chain(3, tw, {t: ONE}))
        for f_name in ("phi-efd", "phi-cap", "phi-plus", "phi-minus"):
            if FUNCTIONALS[f_name](img):
                return ("fail",
                        f"{f_name} does not kill b({_fmt_tensor(t)})", None)
    note = (f"variants agree on all basis 2-chains; closed form kills all "
            f"{checked} generator boundaries; prefactor of the minus variant "
            f"is q (with -q the value on the fundamental cycle is -1)")
    return "bounded-pass", None, note


def _check_c13(trunc):
    """The closed form of the volume pairing on basis tensors."""
    idx = basis_indices(*trunc)
    tw = Automorphism(q_power(2))
    for a in idx:
        for b in idx:
            for d in idx:
                t = (a, b, d)
                want = ONE / Q if t == _VOLUME_WITNESS else ZERO
                got = phi(Chain(2, tw, {t: ONE}), "efd")
                if got != want:
                    return "fail", f"{_fmt_tensor(t)} -> {got}, want {want}", None
    return "bounded-pass", None, f"{len(idx) ** 3} basis tensors"


def _check_c14(trunc):
    """phi is not cyclic; phi + eta is; eta alone is not."""
    rep_phi = is_cyclic("phi-delta", (1, 1))
    wit = rep_phi.rotation_defects[0] if rep_phi.rotation_defects else None
    if rep_phi.is_cyclic or wit is None:
        return "fail", "phi-delta unexpectedly cyclic", None
    if wit[0] != _VOLUME_WITNESS or wit[1] != -(ONE / Q):
        return ("fail",
                f"wrong witness for phi-delta: {_fmt_tensor(wit[0])}, "
                f"defect {wit[1]}", None)
    rep_eta = is_cyclic("eta", (1, 1))
    if rep_eta.is_cyclic:
        return "fail", "eta unexpectedly cyclic", None
    rep_sum = is_cyclic("phi-plus-eta", trunc)
    if not rep_sum.is_cyclic:
        w = rep_sum.witness()
        return ("fail",
                f"phi+eta violation at {_fmt_tensor(w[0])}: {w[1]}", None)
    note = (f"phi defect -1/q at 1 (x) x1 (x) xm1; phi+eta passes "
            f"{rep_sum.checked_rotations} rotation and {rep_sum.checked_units} "
            f"leading-unit checks; the full tower pairing is required: "
            f"truncating it to its three lowest entries leaves the defect "
            f"chain 1 (x) x1 (x) x0*xm1")
    return "bounded-pass", None, note


def _check_c15(trunc):
    """eta kills cycles and boundaries."""
    d_a = fundamental_class()
    if eta(d_a) or eta(d_a.scale(RatFunc(5))):
        return "fail", "eta does not kill the fundamental cycle", None
    if cyclic_cocycle(d_a) != ONE:
        return "fail", "phi+eta on the fundamental cycle != 1", None

    idx = basis_indices(*trunc)
    tw = Automorphism(q_power(2))
    rng = random.Random(77)
    for _ in range(200):
        t = tuple(rng.choice(idx) for _ in range(4))
        if eta(boundary(Chain(3, tw, {t: ONE}))):
            return "fail", f"eta does not kill b({_fmt_tensor(t)})", None
    return ("bounded-pass", None,
            "structural: eta = pairing o b, so eta o b vanishes with C1")


CHECKS = {
    "C1": ("double boundary vanishes", _check_c1),
    "C2": ("fundamental cycle is closed", _check_c2),
    "C3": ("x0 powers are twisted-central", _check_c3),
    "C4": ("closed forms of generator boundaries", _check_c4),
    "C5": ("twisted trace laws and duality", _check_c5),
    "C6": ("cap action of x0 on degree-0 homology", _check_c6),
    "C7": ("distinguished derivations are well defined", _check_c7),
    "C8": ("innerness of derivation cup x0", _check_c8),
    "C9": ("chain-level cap tables", _check_c9),
    "C10": ("homology-level cap table", _check_c10),
    "C11": ("q-anticommutation of derivation classes", _check_c11),
    "C12": ("volume functional: normalisation and variants", _check_c12),
    "C13": ("closed form of the volume pairing", _check_c13),
    "C14": ("cyclicity: phi fails, phi+eta passes", _check_c14),
    "C15": ("eta kills cycles and boundaries", _check_c15),
}


def run_suite(selection: set[str] | None = None,
              truncation: tuple[int, int] = DEFAULT_TRUNCATION) -> list[CheckResult]:
    """Run the selected checks (all by default) and return their results."""
    names = sorted(CHECKS, key=lambda n: int(n[1:])) if not selection \
        else sorted(selection, key=lambda n: int(n[1:]) if n[1:].isdigit() else 99)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    results = []
    for name in names:
        description, fn = CHECKS[name]
        t0 = time.perf_counter()
        try:
            status, witness, note = fn(truncation)
        except Exception as exc:  # a crashed check is a failed check
            status, witness, note = "fail", f"exception: {exc}", None
        ms = (time.perf_counter() - t0) * 1000.0
        results.append(CheckResult(name, description, status, ms, witness, note))
    return results


def emit_report(results: list[CheckResult], fmt: str = "markdown") -> str:
    """Render results deterministically as markdown or JSON."""
    passed = sum(1 for r in results if r.status != "fail")
    bounded = sum(1 for r in results if r.status == "bounded-pass")
    if fmt == "json":
        doc = {
            "results": [r.to_dict() for r in results],
            "summary": {
                "total": len(results),
                "passed": passed,
                "failed": len(results) - passed,
                "bounded": bounded,
            },
        }
        return json.dumps(doc, indent=2, sort_keys=True)
    if fmt != "markdown":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = ["# identity verification report", ""]
    if results:
        lines += ["| check | description | status | ms |",
                  "|-------|-------------|--------|----|"]
        for r in results:
            lines.append(f"| {r.name} | {r.description} | {r.status} "
                         f"| {r.runtime_ms:.0f} |")
        lines.append("")
        for r in results:
            if r.witness:
                lines.append(f"* {r.name} witness: {r.witness}")
            if r.note:
                lines.append(f"* {r.name} note: {r.note}")
        lines.append("")
    lines.append(f"summary: {passed}/{len(results)} passed"
                 + (f" ({bounded} bounded)" if bounded else ""))
    return "\n".join(lines) + "\n"


def suite_failed(results: list[CheckResult]) -> bool:
    return any(r.status == "fail" for r in results)
