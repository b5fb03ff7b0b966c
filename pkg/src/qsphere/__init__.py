"""Exact calculus on the quantum 2-sphere.

The package computes, over the exact scalar field Q(q):

  * the coordinate algebra with its ordered-monomial basis;
  * twisted Hochschild chains, boundaries and the cyclic rotation;
  * evaluatable twisted cochains with cup and cap products;
  * the fundamental 2-cycle, twisted traces and homology reductions;
  * the volume functional and its cyclic representative;
  * a named suite of machine-checked identities (module ``verify``).
"""

from .algebra import (AlgElem, Automorphism, BasisIndex, GENERATORS,
                      IDENTITY_AUT, ONE_ELEM, SIGMA_MOD, X0, X1, XM1,
                      ZERO_ELEM, apply_aut, basis_indices, basis_mul,
                      basis_word, counit, is_sigma_central, mul, mul_oracle)
from .chains import (Chain, boundary, chain_from_json, chain_to_elem,
                     chain_to_json, coboundary_eval, cyclic_t, elem_to_chain,
                     expand_tensor)
from .cochains import (Central, Cochain, Cup, DerivationRelationError,
                       InnerDerivation, TwistedDerivation, cap,
                       central_x0_power, cup, inner, make_derivation,
                       parse_cochain_name, partial, solve_inner)
from .expr import ExprError, parse, parse_scalar, render, render_scalar
from .homology import (TraceFunctional, fundamental_class, h0_basis,
                       h0_reduce, h0_reduce_oracle, h2_class, trace_eval)
from .qfield import ONE, PoleError, Q, RatFunc, ZERO, detect_q_power, q_power
from .volume import (CyclicityReport, FUNCTIONALS, counterterm_delta,
                     counterterm_pairing, cyclic_cocycle, deriv_E, deriv_F,
                     eta, eta_with_pairing, is_cyclic, phi, phi_pm)

__version__ = "0.1.0"
