"""Exact real-root counting on (0, oo) via Sturm sequences.

Everything runs over Fraction coefficients, so the counts are certificates
rather than numerics.  Laurent inputs are canonicalized first; stripping
the unit t^k never changes roots away from 0.
"""

from __future__ import annotations

import warnings

from .laurent import poly_divmod, poly_gcd, squarefree_part


def _sign(x):
    return (x > 0) - (x < 0)


def _sign_changes(values):
    signs = [_sign(v) for v in values if v]
    changes = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            changes += 1
    return changes


def _sturm_chain(p):
    """Sturm chain of a square-free polynomial with order 0."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        _, r = poly_divmod(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero]


def sturm_positive_root_count(p):
    """Number of distinct real roots of p in the open interval (0, oo).

    Multiplicities are ignored; the square-free part is used internally.
    Raises on the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has every point as a root")
    q = p.canonicalize()
    if q.degree == 0:
        return 0
    q = squarefree_part(q)
    if q.degree == 0:
        return 0
    chain = _sturm_chain(q)
    # canonical form has order 0, hence q(0) != 0, so 0 is a valid endpoint
    at_zero = [f.coefficient(0) for f in chain]
    at_inf = [f.leading_coefficient for f in chain]
    return _sign_changes(at_zero) - _sign_changes(at_inf)


def all_roots_real_positive(p):
    """True when every complex root of p is a positive real number.

    Constant nonzero polynomials have no roots; the claim is then vacuous
    and reported as True with a RuntimeWarning.  Raises on zero input.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial does not have a root set")
    q = p.canonicalize()
    if q.degree == 0:
        warnings.warn(
            "all_roots_real_positive on a constant polynomial is vacuous",
            RuntimeWarning,
            stacklevel=2,
        )
        return True
    s = squarefree_part(q)
    # distinct roots of p = roots of s; all real positive iff the positive
    # real count reaches deg s
    return sturm_positive_root_count(s) == s.degree


def common_positive_root_count(p, q):
    """Number of distinct positive real roots shared by p and q."""
    g = poly_gcd(squarefree_part(p), squarefree_part(q))
    if g.degree == 0:
        return 0
    return sturm_positive_root_count(g)


__all__ = [
    "sturm_positive_root_count",
    "all_roots_real_positive",
    "common_positive_root_count",
]
