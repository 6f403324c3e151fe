"""Eigenfunctions of J(n, w): representation, verification and constructions.

A :class:`VertexFunction` stores exact values indexed by the colex rank of
the vertex.  Constructions:

* :func:`radial` -- spherical function around a center,
* :func:`f0` -- the minimal-support eigenfunction on paired coordinates,
* :func:`difference` -- f(..1..0..) - f(..0..1..), J(n,w) -> J(n-2,w-1),
* :func:`lift` -- the signed embedding J(n,w) -> J(n+2,w+1),
* :func:`induce` -- summing over sub- or super-supports, J(n,j) -> J(n,w).
"""
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .combinatorics import ParameterError, binom, eberlein, eigenvalue, multiplicity
from .graph import JohnsonParams, Vertex, distance, graph, sphere
from .linalg import ZERO, RationalMatrix, Unique, nullspace, solve


class EigenspaceError(RuntimeError):
    """Computed eigenspace dimension disagrees with the multiplicity formula."""


class ZeroInputError(ValueError):
    pass


class NotProportionalError(RuntimeError):
    pass


def rank_support(support):
    """Colex rank of a sorted 1-based support tuple."""
    return sum(binom(c - 1, j) for j, c in enumerate(support, 1))


@dataclass(frozen=True, eq=True)
class VertexFunction:
    params: JohnsonParams
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.params.order:
            raise ParameterError(
                f"{self.params} has {self.params.order} vertices, got {len(self.values)} values"
            )

    @classmethod
    def from_values(cls, params, values):
        return cls(params, tuple(v if type(v) is Fraction else Fraction(v) for v in values))

    @classmethod
    def from_callable(cls, params, fn):
        return cls.from_values(params, [fn(v) for v in graph(params).vertices])

    @classmethod
    def zero(cls, params):
        return cls(params, (ZERO,) * params.order)

    @classmethod
    def constant(cls, params, c=1):
        return cls(params, (Fraction(c),) * params.order)

    def __call__(self, v):
        if v.n != self.params.n or v.w != self.params.w:
            raise ParameterError(f"vertex {v} is not in {self.params}")
        return self.values[rank_support(v.support)]

    def is_zero(self):
        return not any(self.values)

    def support(self):
        vs = graph(self.params).vertices
        return [vs[k] for k, x in enumerate(self.values) if x]

    def restrict(self, vertices):
        return [self(v) for v in vertices]

    def _compatible(self, other):
        if self.params != other.params:
            raise ParameterError(f"cannot combine functions on {self.params} and {other.params}")

    def __add__(self, other):
        self._compatible(other)
        return VertexFunction(self.params, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._compatible(other)
        return VertexFunction(self.params, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return VertexFunction(self.params, tuple(-a for a in self.values))

    def scale(self, c):
        c = Fraction(c)
        return VertexFunction(self.params, tuple(c * a for a in self.values))

    def to_json(self):
        return {"n": self.params.n, "w": self.params.w, "values": [str(x) for x in self.values]}

    @classmethod
    def from_json(cls, obj):
        try:
            n, w, values = obj["n"], obj["w"], obj["values"]
        except (KeyError, TypeError) as exc:
            raise ParameterError(f"malformed VertexFunction JSON: {exc}") from None
        if not isinstance(n, int) or not isinstance(w, int) or not isinstance(values, list):
            raise ParameterError("VertexFunction JSON needs integer n, w and a values list")
        try:
            vals = [Fraction(str(x)) for x in values]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"bad rational in values: {exc}") from None
        return cls(JohnsonParams(n, w), tuple(vals))

    def dumps(self):
        return json.dumps(self.to_json())


def load_function(path):
    with open(path) as fh:
        return VertexFunction.from_json(json.load(fh))


def combination(basis, coeffs):
    """sum_k coeffs[k] * basis[k] as a VertexFunction."""
    params = basis[0].params
    acc = [ZERO] * params.order
    for c, b in zip(coeffs, basis):
        if c:
            for k, x in enumerate(b.values):
                if x:
                    acc[k] += c * x
    return VertexFunction(params, tuple(acc))


# ---------------------------------------------------------------- verification

def is_eigenfunction(f, i):
    """Check lambda_i f(x) = sum of f over the neighbours of x, at every x.

    The zero function passes for every index.
    """
    params = f.params
    lam = eigenvalue(i, params.n, params.w)
    vals = f.values
    for k, nbrs in enumerate(graph(params).adjacency):
        if lam * vals[k] != sum((vals[m] for m in nbrs), ZERO):
            return False
    return True


def sphere_sum_check(f, i, x, k):
    total = sum((f(y) for y in sphere(x, k)), ZERO)
    return total == f(x) * eberlein(k, i, f.params.w, f.params.n)


@dataclass(frozen=True)
class EigenspaceBasis:
    params: JohnsonParams
    index: int
    basis: tuple

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, k):
        return self.basis[k]


def adjacency_shift(params, lam):
    """A - lam * I as a RationalMatrix."""
    g = graph(params)
    size = len(g)
    rows = []
    for k, nbrs in enumerate(g.adjacency):
        row = [0] * size
        for m in nbrs:
            row[m] = 1
        row[k] = -lam
        rows.append(row)
    return RationalMatrix.from_rows(rows, size)


@lru_cache(maxsize=None)
def _eigenspace(n, w, i, allow_upper):
    params = JohnsonParams(n, w, allow_upper=allow_upper)
    lam = eigenvalue(i, n, w)
    kernel = nullspace(adjacency_shift(params, lam))
    expected = multiplicity(i, n)
    if len(kernel) != expected:
        raise EigenspaceError(
            f"{params}, i={i}: nullity {len(kernel)} but multiplicity formula gives {expected}"
        )
    return EigenspaceBasis(params, i, tuple(VertexFunction(params, tuple(v)) for v in kernel))


def eigenspace_basis(params, i):
    """Exact basis of the lambda_i-eigenspace, from the kernel of A - lambda_i I.

    Raises :class:`EigenspaceError` if the dimension differs from
    C(n, i) - C(n, i - 1).  Results are cached per (n, w, i).
    """
    if not 0 <= i <= params.max_index:
        raise ParameterError(f"eigen-index {i} out of range for {params}")
    return _eigenspace(params.n, params.w, i, params.allow_upper)


def eigen_decomposition(f):
    """Split f into its eigenspace components; returns {i: coefficients}."""
    params = f.params
    columns = []
    owner = []
    for i in range(params.max_index + 1):
        for b in eigenspace_basis(params, i):
            columns.append(b.values)
            owner.append(i)
    m = RationalMatrix.from_rows([[col[k] for col in columns] for k in range(params.order)])
    res = solve(m, list(f.values))
    if not isinstance(res, Unique):
        raise EigenspaceError("eigenspaces do not span the vertex space")
    out = {}
    for c, i in zip(res.x, owner):
        out.setdefault(i, []).append(c)
    return out


# ---------------------------------------------------------------- constructions

def radial(center, i, params=None):
    """Spherical eigenfunction: x -> E_d(i, w, n) / (C(w, d) C(n - w, d)), d = d(x, center).

    Normalized so the value at the center is 1.
    """
    if params is None:
        params = JohnsonParams(center.n, center.w)
    n, w = params.n, params.w
    if center.n != n or center.w != w:
        raise ParameterError(f"center {center} is not a vertex of {params}")
    if not 0 <= i <= params.max_index:
        raise ParameterError(f"eigen-index {i} out of range for {params}")
    profile = [
        Fraction(eberlein(d, i, w, n), binom(w, d) * binom(n - w, d)) for d in range(params.max_index + 1)
    ]
    return VertexFunction.from_callable(params, lambda x: profile[distance(x, center)])


def f0(i, params):
    """(-1)^(x_1 + ... + x_i) where x_j + x_{j+i} = 1 for all j <= i, else 0."""
    if i < 0 or 2 * i > params.n or i > params.w:
        raise ParameterError(f"f0 needs 0 <= i <= w and 2i <= n, got i={i} on {params}")

    def value(x):
        b = x.bits
        if all(b[j] + b[j + i] == 1 for j in range(i)):
            return -1 if sum(b[:i]) % 2 else 1
        return 0

    return VertexFunction.from_callable(params, value)


def _check_coordinate(c, n):
    if not 1 <= c <= n:
        raise ParameterError(f"coordinate {c} outside 1..{n}")


def difference(f, j1, j2):
    """f_{j1,j2}(y) = f(y with 1 at j1, 0 at j2) - f(y with 0 at j1, 1 at j2).

    The result lives on J(n - 2, w - 1) over the remaining coordinates in
    their original order.  j1 > j2 is accepted and gives -f_{j2,j1}.
    """
    n, w = f.params.n, f.params.w
    _check_coordinate(j1, n)
    _check_coordinate(j2, n)
    if j1 == j2:
        raise ParameterError("difference needs two distinct coordinates")
    if w == 0 or w == n:
        raise ParameterError(f"difference is undefined on {f.params}")
    out = JohnsonParams(n - 2, w - 1, allow_upper=f.params.allow_upper)
    lo, hi = sorted((j1, j2))

    def expand(y, a, b):
        bits = list(y.bits)
        bits.insert(lo - 1, a)
        bits.insert(hi - 1, b)
        return Vertex(tuple(bits))

    def value(y):
        if j1 < j2:
            return f(expand(y, 1, 0)) - f(expand(y, 0, 1))
        return f(expand(y, 0, 1)) - f(expand(y, 1, 0))

    return VertexFunction.from_callable(out, value)


def lift(f, at=None):
    """Signed embedding into J(n + 2, w + 1).

    With new coordinates (a, b) -- by default (n + 1, n + 2) -- the result is
    f(rest) when (y_a, y_b) = (1, 0), -f(rest) when (0, 1), and 0 otherwise.
    """
    n, w = f.params.n, f.params.w
    a, b = at if at is not None else (n + 1, n + 2)
    if not 1 <= a < b <= n + 2:
        raise ParameterError(f"lift positions must satisfy 1 <= a < b <= {n + 2}, got {(a, b)}")
    out = JohnsonParams(n + 2, w + 1, allow_upper=f.params.allow_upper)

    def value(y):
        pa, pb = y.bits[a - 1], y.bits[b - 1]
        if pa == pb:
            return 0
        rest = Vertex(tuple(y.bits[k] for k in range(n + 2) if k not in (a - 1, b - 1)))
        return f(rest) if pa else -f(rest)

    return VertexFunction.from_callable(out, value)


def induce(f, target_w):
    """I^{j,w}(f): sum f over weight-j words contained in (j <= w) or containing (j >= w) x."""
    n, j = f.params.n, f.params.w
    upper = f.params.allow_upper
    out = JohnsonParams(n, target_w, allow_upper=upper)
    vals = f.values
    coords = range(1, n + 1)

    def value(x):
        s = x.support
        if j <= target_w:
            return sum((vals[rank_support(t)] for t in combinations(s, j)), ZERO)
        ss = set(s)
        zeros = [c for c in coords if c not in ss]
        return sum(
            (vals[rank_support(tuple(sorted(s + extra)))] for extra in combinations(zeros, j - target_w)),
            ZERO,
        )

    return VertexFunction.from_callable(out, value)


def induce_chain(f, target_w):
    """The composition of one-step inducing maps from weight j to ``target_w``."""
    j = f.params.w
    step = 1 if target_w >= j else -1
    g = f
    for k in range(j + step, target_w + step, step):
        g = induce(g, k)
    return g


def induce_scale(j, w):
    """(|w - j|)!, the factor relating I^{j,w} to the one-step chain."""
    return factorial(abs(w - j))


def relabel(f, mapping):
    """Move coordinate c of f to position mapping[c] (1-based permutation dict)."""
    n = f.params.n
    if sorted(mapping) != list(range(1, n + 1)) or sorted(mapping.values()) != list(range(1, n + 1)):
        raise ParameterError("mapping must be a permutation of 1..n")

    def value(y):
        return f(Vertex(tuple(y.bits[mapping[c] - 1] for c in range(1, n + 1))))

    return VertexFunction.from_callable(f.params, value)


@dataclass(frozen=True)
class ProportionalityWitness:
    alpha: Fraction

    def __post_init__(self):
        if self.alpha == 0:
            raise NotProportionalError("alpha must be nonzero")


def proportionality_alpha(f, i, w_prime):
    """Return alpha with alpha * f = I^{w',w}(I^{w,w'}(f)), checked at every vertex."""
    params = f.params
    if f.is_zero():
        raise ZeroInputError("proportionality_alpha needs a nonzero function")
    if i > w_prime or params.n < 2 * w_prime or w_prime < 0:
        raise ParameterError(f"need i <= w' and n >= 2w', got i={i}, w'={w_prime} on {params}")
    if not is_eigenfunction(f, i):
        raise ParameterError(f"input is not a lambda_{i}-eigenfunction")
    g = induce(induce(f, w_prime), params.w)
    k = next(k for k, x in enumerate(f.values) if x)
    alpha = g.values[k] / f.values[k]
    if alpha == 0 or any(gv != alpha * fv for gv, fv in zip(g.values, f.values)):
        raise NotProportionalError(f"I(I(f)) is not a nonzero multiple of f on {params}, w'={w_prime}")
    return ProportionalityWitness(alpha)
