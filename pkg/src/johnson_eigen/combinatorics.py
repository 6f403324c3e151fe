"""Exact integer combinatorics for the Johnson scheme.

Everything here is plain Python ``int`` arithmetic; no floats.
"""
from math import comb


class ParameterError(ValueError):
    """Raised when arguments fall outside an operation's domain."""


def binom(n, k):
    """C(n, k) with the zero-extension C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ParameterError(f"binom: negative top argument n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _check_index(i, n, w):
    # J(n, w) and J(n, n - w) are isomorphic, so indices run up to min(w, n - w).
    if not 0 <= w <= n:
        raise ParameterError(f"need 0 <= w <= n, got n={n}, w={w}")
    if not 0 <= i <= min(w, n - w):
        raise ParameterError(f"eigen-index i={i} out of range for J({n},{w})")


def eigenvalue(i, n, w):
    """lambda_i = (w - i)(n - w - i) - i, the i-th adjacency eigenvalue of J(n, w)."""
    _check_index(i, n, w)
    return (w - i) * (n - w - i) - i


def multiplicity(i, n):
    """Dimension C(n, i) - C(n, i - 1) of the i-th eigenspace."""
    if not 0 <= i <= n:
        raise ParameterError(f"multiplicity: need 0 <= i <= n, got i={i}, n={n}")
    return binom(n, i) - binom(n, i - 1)


def eberlein(k, i, w, n):
    """Eberlein polynomial E_k(i, w, n).

    The sum of a lambda_i-eigenfunction over the distance-k sphere around x
    equals f(x) * E_k(i, w, n).  Accepts any 0 <= w <= n (the reduced graphs
    met inside the sphere criterion may have w > n/2); k > min(w, n - w)
    simply gives 0.
    """
    if k < 0:
        raise ParameterError(f"eberlein: negative distance k={k}")
    _check_index(i, n, w)
    return sum(
        (-1) ** j * binom(i, j) * binom(w - i, k - j) * binom(n - w - i, k - j)
        for j in range(k + 1)
    )


def sphere_size(r, w, n):
    """|S_r(x)| in J(n, w)."""
    return binom(w, r) * binom(n - w, r)
