"""Exhaustive exact scans for the verification suite.

The double-boundary sweep touches millions of basis tensors, so it runs on
a stripped representation: every coefficient is an integer Laurent
polynomial in q and in the twist parameter, stored as a
``{(q_exp, twist_exp): int}`` dict.  The twist stays formal, so one pass
proves the identity for every twist specialisation at once; a failure is
reported with the offending tensor and its surviving coefficient.
"""

from __future__ import annotations

from itertools import product as iter_product

from .algebra import BasisIndex, basis_indices, basis_mul

# coefficient of a basis product as ((q_exp, int), ...) relative to q only
_FLAT_CACHE: dict[tuple[BasisIndex, BasisIndex], tuple] = {}


def _flat_product(a: BasisIndex, b: BasisIndex) -> tuple:
    hit = _FLAT_CACHE.get((a, b))
    if hit is not None:
        return hit
    out = []
    for key, c in basis_mul(a, b).terms.items():
        num, den = c.num, c.den
        if any(v for v in den[:-1]) or den[-1] != 1:
            raise AssertionError("basis product coefficient is not Laurent")
        shift = -(len(den) - 1)
        mono = tuple((e + shift, v) for e, v in enumerate(num) if v)
        out.append((key, mono))
    hit = tuple(out)
    _FLAT_CACHE[(a, b)] = hit
    return hit


def _boundary_terms(terms: list) -> dict:
    """One boundary step on [(tensor, {(q_exp, lam_exp): int})] entries."""
    acc: dict = {}
    for t, coeff in terms:
        n = len(t) - 1
        for i in range(n):
            sign = 1 if i % 2 == 0 else -1
            pre, post = t[:i], t[i + 2:]
            for key, mono in _flat_product(t[i], t[i + 1]):
                new = pre + (key,) + post
                slot = acc.get(new)
                if slot is None:
                    slot = acc[new] = {}
                for (qe, le), v in coeff.items():
                    for me, mv in mono:
                        k2 = (qe + me, le)
                        s = slot.get(k2, 0) + sign * v * mv
                        if s:
                            slot[k2] = s
                        else:
                            del slot[k2]
        sign = 1 if n % 2 == 0 else -1
        lam_exp = t[n][1]
        for key, mono in _flat_product(t[n], t[0]):
            new = (key,) + t[1:n]
            slot = acc.get(new)
            if slot is None:
                slot = acc[new] = {}
            for (qe, le), v in coeff.items():
                for me, mv in mono:
                    k2 = (qe + me, le + lam_exp)
                    s = slot.get(k2, 0) + sign * v * mv
                    if s:
                        slot[k2] = s
                    else:
                        del slot[k2]
    return acc


def double_boundary_failures(degree: int, truncation: tuple[int, int],
                             limit: int = 5) -> tuple[int, list]:
    """Scan b(b(t)) over every basis tensor of the given degree.

    Returns (number of tensors checked, failures) where each failure is the
    tensor together with its surviving bivariate coefficient dict.  An empty
    failure list proves b o b = 0 on the truncation for every twist at once.
    """
    idx = basis_indices(*truncation)
    failures: list = []
    checked = 0
    one: dict = {(0, 0): 1}
    for t in iter_product(idx, repeat=degree + 1):
        checked += 1
        first = _boundary_terms([(t, one)])
        second = _boundary_terms(list(first.items()))
        bad = {k: v for k, v in second.items() if v}
        if bad and len(failures) < limit:
            failures.append((t, bad))
    return checked, failures


def boundary_of_tensor(t: tuple) -> dict:
    """Boundary of a single basis tensor in the stripped representation."""
    return _boundary_terms([(t, {(0, 0): 1})])
