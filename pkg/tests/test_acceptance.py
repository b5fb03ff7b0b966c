"""Acceptance criteria, one test per criterion, all at exact equality.

Quantified claims run on the truncation i <= 3, |j| <= 3 (bounds (6, 6)
where stated).  Each criterion prints one PASS/FAIL line; run with
``pytest -s tests/test_acceptance.py`` to see them inline.
"""

import random
import time
from contextlib import contextmanager

from qsphere._fastscan import double_boundary_failures
from qsphere.algebra import (AlgElem, Automorphism, SIGMA_MOD, X1, XM1,
                             basis_indices, basis_mul, basis_word, mul,
                             mul_oracle)
from qsphere.chains import Chain, boundary, chain_to_elem
from qsphere.cochains import cap, central_x0_power, cup, partial, solve_inner
from qsphere.expr import parse_scalar
from qsphere.homology import (applicable_traces, fundamental_class, h0_reduce,
                              h0_reduce_oracle)
from qsphere.qfield import ONE, Q, RatFunc, ZERO, q_power
from qsphere.verify import run_suite
from qsphere.volume import is_cyclic, phi, phi_pm

TRUNCATION = (3, 3)
TWIST_TEXTS = ("1", "q^2", "1/q^2", "q^4", "3")
WITNESS = ((0, 0), (0, 1), (0, -1))


def twists():
    return [Automorphism(parse_scalar(t)) for t in TWIST_TEXTS]


@contextmanager
def criterion(number, label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d}: FAIL  {label}")
        raise
    seconds = time.perf_counter() - start
    print(f"criterion {number:2d}: PASS  {label}  ({seconds:.1f}s)")


def test_criterion_01_fundamental_cycle_is_closed():
    with criterion(1, "boundary of the fundamental cycle is exactly zero"):
        start = time.perf_counter()
        assert boundary(fundamental_class()).is_zero()
        assert time.perf_counter() - start < 1.0


def test_criterion_02_double_boundary_vanishes():
    with criterion(2, "b o b = 0 on all degree-2 and degree-3 basis chains"):
        # formal-twist pass: exact zero identically in the twist parameter,
        # which specialises to each of the five stated twists
        for degree in (2, 3):
            checked, failures = double_boundary_failures(degree, TRUNCATION)
            assert not failures, failures[:1]
            assert checked == len(basis_indices(*TRUNCATION)) ** (degree + 1)
        # literal pass at the five stated twists: full scan in degree 2,
        # seeded sample in degree 3
        idx = basis_indices(*TRUNCATION)
        for tw in twists():
            for a in idx:
                for b in idx:
                    for c in idx:
                        ch = Chain(2, tw, {(a, b, c): ONE})
                        assert boundary(boundary(ch)).is_zero()
        rng = random.Random(42)
        for tw in twists():
            for _ in range(300):
                t = tuple(rng.choice(idx) for _ in range(4))
                ch = Chain(3, tw, {t: ONE})
                assert boundary(boundary(ch)).is_zero()


def test_criterion_03_generator_boundary_closed_forms():
    with criterion(3, "the five closed forms of b(e_ij (x) generator)"):
        qp = q_power
        for tw in twists():
            lam = tw.lam
            for (i, j) in basis_indices(*TRUNCATION):
                forms = {
                    (0, -1): AlgElem({(i, j - 1): ONE - qp(2 * i) / lam})
                    if j <= 0 else AlgElem({
                        (i + 2, j - 1): qp(-4 * j + 2) - qp(2 * i + 2) / lam,
                        (i + 1, j - 1): qp(-2 * j + 1) - qp(2 * i + 1) / lam}),
                    (1, 0): AlgElem({(i + 1, j): qp(-2 * j) - ONE}),
                    (0, 1): AlgElem({(i, j + 1): ONE - lam * qp(-2 * i)})
                    if j >= 0 else AlgElem({
                        (i + 2, j + 1): qp(-4 * j - 2) - lam * qp(-2 * i - 2),
                        (i + 1, j + 1): qp(-2 * j - 1) - lam * qp(-2 * i - 1)}),
                }
                for gen, want in forms.items():
                    got = chain_to_elem(boundary(Chain(1, tw, {((i, j), gen): ONE})))
                    assert got == want, ((i, j), gen, str(lam))


def test_criterion_04_trace_laws_and_duality():
    with criterion(4, "twisted trace law, boundary kernel, delta duality"):
        idx = basis_indices(*TRUNCATION)
        for tw in twists():
            traces = applicable_traces(tw, TRUNCATION[1])
            for t in traces:
                for a in idx:
                    ea = AlgElem.basis(*a)
                    for b in idx:
                        eb = AlgElem.basis(*b)
                        assert t(mul(ea, eb)) == t(mul(tw(eb), ea))
                for (i, j) in idx:
                    for gen in ((0, -1), (1, 0), (0, 1)):
                        img = chain_to_elem(
                            boundary(Chain(1, tw, {((i, j), gen): ONE})))
                        assert t(img) == ZERO
            reps = {"[1]": AlgElem.basis(0, 0)}
            if tw.lam == ONE:
                for jj in range(1, TRUNCATION[1] + 1):
                    reps["[x1]" if jj == 1 else f"[x1^{jj}]"] = AlgElem.basis(0, jj)
                    reps["[xm1]" if jj == 1 else f"[xm1^{jj}]"] = AlgElem.basis(0, -jj)
                reps["[x0]"] = AlgElem.basis(1, 0)
            elif tw.lam == q_power(4):
                reps["[x0^2]"] = AlgElem.basis(2, 0)
            else:
                reps["[x0]"] = AlgElem.basis(1, 0)
            for t in traces:
                for label, rep in reps.items():
                    want = ONE if label == t.label() else ZERO
                    assert t(rep) == want, (t.label(), label, str(tw.lam))


def test_criterion_05_volume_normalisation():
    with criterion(5, "volume functional equals 1 on the fundamental cycle"):
        d_a = fundamental_class()
        for variant in ("delta", "efd", "cap"):
            assert phi(d_a, variant) == ONE
        assert phi_pm(1, d_a) == ONE
        assert phi_pm(-1, d_a) == ONE


def test_criterion_06_volume_closed_form_scan():
    with criterion(6, "volume pairing is q^-1 exactly on 1 (x) x1 (x) xm1"):
        idx = basis_indices(*TRUNCATION)
        tw = SIGMA_MOD
        for a in idx:
            for b in idx:
                for c in idx:
                    t = (a, b, c)
                    want = ONE / Q if t == WITNESS else ZERO
                    assert phi(Chain(2, tw, {t: ONE}), "efd") == want


def _reduced_cap(indices):
    c = fundamental_class()
    for i in indices:
        c = cap(c, partial(i))
    return h0_reduce(chain_to_elem(c), c.twist)


def test_criterion_07_homology_cap_table():
    with criterion(7, "homology-level iterated cap table"):
        for i in (-1, 0, 1):
            assert _reduced_cap((i, i)) == {}
        assert _reduced_cap((0, -1)) == {"[x1]": ONE / Q}
        assert _reduced_cap((-1, 0)) == {"[x1]": -(ONE / Q)}
        assert _reduced_cap((0, 1)) == {"[xm1]": Q}
        assert _reduced_cap((1, 0)) == {"[xm1]": -Q}
        assert _reduced_cap((1, -1)) == {"[1]": Q, "[x0]": Q * Q + ONE}
        got = _reduced_cap((-1, 1))
        scale = -(ONE / (Q * Q))
        assert got == {"[1]": Q * scale, "[x0]": (Q * Q + ONE) * scale}


def test_criterion_08_exterior_relations():
    with criterion(8, "q-anticommutation relations through the cap action"):
        d_a = fundamental_class()
        for i in (-1, 0, 1):
            for j in (-1, 0, 1):
                if i > j:
                    continue
                left = cap(d_a, cup(partial(i), partial(j)))
                right = cap(d_a, cup(partial(j), partial(i))).scale(q_power(2 * i * j))
                total = left + right
                assert h0_reduce(chain_to_elem(total), total.twist) == {}


def test_criterion_09_innerness():
    with criterion(9, "cup with x0: inner for raising/lowering, not for flat"):
        x0c = central_x0_power(1)
        b = solve_inner(cup(partial(1), x0c), TRUNCATION)
        assert b == XM1.scale(ONE / (Q - ONE / Q))
        b = solve_inner(cup(partial(-1), x0c), TRUNCATION)
        assert b == X1.scale(-(ONE / (Q - ONE / Q)))
        assert solve_inner(cup(partial(0), x0c), (6, 6)) is None


def test_criterion_10_cyclicity():
    with criterion(10, "phi fails cyclicity at the witness; phi+eta passes"):
        rep = is_cyclic("phi-delta", (1, 1))
        assert not rep.is_cyclic
        assert rep.rotation_defects[0] == (WITNESS, -(ONE / Q))
        rep = is_cyclic("phi-plus-eta", TRUNCATION)
        assert rep.is_cyclic
        assert rep.rotation_violations == 0 and rep.unit_violations == 0
        assert rep.checked_rotations == len(basis_indices(*TRUNCATION)) ** 3


def test_criterion_11_oracle_equivalences():
    with criterion(11, "independent oracles agree with the primary routes"):
        idx = basis_indices(*TRUNCATION)
        # multiplication vs free-word rewriting, all basis pairs
        for a in idx:
            for b in idx:
                assert basis_mul(a, b) == mul_oracle(basis_word(*a), basis_word(*b))
        # homology reduction vs spanning-set rewriting, seeded random
        for tw in twists():
            rng = random.Random(1000 + len(str(tw.lam)))
            for _ in range(200):
                terms = {}
                for _ in range(rng.randint(1, 5)):
                    key = rng.choice(idx)
                    c = RatFunc(rng.randint(-4, 4)) * q_power(rng.randint(-2, 2))
                    if c:
                        terms[key] = terms.get(key, ZERO) + c
                a = AlgElem(terms)
                assert h0_reduce(a, tw) == h0_reduce_oracle(a, tw)
        # associativity on seeded random triples
        rng = random.Random(4096)

        def rand_elem():
            return AlgElem({
                rng.choice(idx): RatFunc(rng.randint(-3, 3)) * q_power(rng.randint(-2, 2))
                for _ in range(rng.randint(1, 4))
            })

        for _ in range(500):
            a, b, c = rand_elem(), rand_elem(), rand_elem()
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
        # classical limit: commutativity of all basis pairs at q = 1
        for a in idx:
            for b in idx:
                comm = mul(AlgElem.basis(*a), AlgElem.basis(*b)) \
                    - mul(AlgElem.basis(*b), AlgElem.basis(*a))
                for coeff in comm.terms.values():
                    assert coeff.eval_at(1) == 0


def test_criterion_12_recorded_cap_tables():
    with criterion(12, "chain-level cap tables match the recorded displays"):
        (result,) = run_suite({"C9"}, TRUNCATION)
        assert result.status == "pass", result.witness
        assert "reproduced exactly" in result.note
