"""Vertices, colex ranking and the metric structure of J(n, w).

Coordinates are numbered from 1 in supports; a vertex serializes as a
length-n string over {0,1} whose leftmost character is coordinate 1.
"""
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations

from .combinatorics import ParameterError, binom


@dataclass(frozen=True)
class JohnsonParams:
    n: int
    w: int
    # J(n, w) and J(n, n - w) are isomorphic; the upper half is only needed
    # for intermediate graphs built by the sphere-criterion constructions.
    allow_upper: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.w <= self.n:
            raise ParameterError(f"J({self.n},{self.w}): need 0 <= w <= n")
        if not self.allow_upper and self.n < 2 * self.w:
            raise ParameterError(f"J({self.n},{self.w}): need n >= 2w")

    @property
    def order(self):
        return binom(self.n, self.w)

    @property
    def max_index(self):
        return min(self.w, self.n - self.w)

    def __str__(self):
        return f"J({self.n},{self.w})"


def johnson(n, w):
    """Parameters for J(n, w), accepting w > n/2 as well."""
    return JohnsonParams(n, w, allow_upper=True)


@dataclass(frozen=True)
class Vertex:
    bits: tuple

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ParameterError(f"vertex bits must be 0/1, got {self.bits!r}")

    @classmethod
    def from_bits(cls, text):
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ParameterError(f"not a bitstring: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_support(cls, n, support):
        s = set(support)
        if any(not 1 <= c <= n for c in s):
            raise ParameterError(f"support {sorted(s)} not inside 1..{n}")
        return cls(tuple(1 if c in s else 0 for c in range(1, n + 1)))

    @property
    def n(self):
        return len(self.bits)

    @property
    def w(self):
        return sum(self.bits)

    @cached_property
    def support(self):
        return tuple(c for c, b in enumerate(self.bits, 1) if b)

    def __str__(self):
        return "".join(map(str, self.bits))


def canonical_center(params):
    """x_0 = (1,...,1,0,...,0) with w ones."""
    return Vertex((1,) * params.w + (0,) * (params.n - params.w))


def rank(v):
    """Colex rank sum_j C(c_j - 1, j) of the support c_1 < ... < c_w."""
    return sum(binom(c - 1, j) for j, c in enumerate(v.support, 1))


def unrank(params, idx):
    n, w = params.n, params.w
    if not 0 <= idx < params.order:
        raise ParameterError(f"rank {idx} out of range for {params}")
    support = []
    c = n
    for j in range(w, 0, -1):
        # largest c with C(c - 1, j) <= idx
        while binom(c - 1, j) > idx:
            c -= 1
        support.append(c)
        idx -= binom(c - 1, j)
        c -= 1
    return Vertex.from_support(n, support)


def _same_graph(x, y):
    if x.n != y.n or x.w != y.w:
        raise ParameterError(f"vertices {x} and {y} live in different graphs")


def distance(x, y):
    """Half the Hamming weight of x + y (mod 2)."""
    _same_graph(x, y)
    return sum(a != b for a, b in zip(x.bits, y.bits)) // 2


def _swap(bits, out, into):
    b = list(bits)
    for c in out:
        b[c - 1] = 0
    for c in into:
        b[c - 1] = 1
    return Vertex(tuple(b))


def _check_radius(v, radius):
    if not 0 <= radius <= v.w:
        raise ParameterError(f"radius {radius} outside 0..w={v.w}")


def neighbors(x):
    """All w(n - w) vertices sharing exactly w - 1 ones with x."""
    return sphere(x, 1) if x.w else []


def sphere(center, radius):
    """S_r(center), ordered by colex rank."""
    _check_radius(center, radius)
    return list(_sphere(center, radius))


@lru_cache(maxsize=4096)
def _sphere(center, radius):
    ones = center.support
    zeros = tuple(c for c in range(1, center.n + 1) if center.bits[c - 1] == 0)
    out = [
        _swap(center.bits, drop, add)
        for drop in combinations(ones, radius)
        for add in combinations(zeros, radius)
    ]
    return tuple(sorted(out, key=rank))


def ball(center, radius):
    """B_r(center) as the concatenation of spheres of radius 0..r."""
    _check_radius(center, radius)
    return [v for d in range(radius + 1) for v in sphere(center, d)]


@dataclass(frozen=True)
class SphereSpec:
    center: Vertex
    radius: int

    def __post_init__(self):
        _check_radius(self.center, self.radius)

    def sphere(self):
        return sphere(self.center, self.radius)

    def ball(self):
        return ball(self.center, self.radius)


class Graph:
    """Dense enumeration of J(n, w) with neighbor lists by rank."""

    def __init__(self, params):
        self.params = params
        self.vertices = [
            Vertex.from_support(params.n, [c + 1 for c in s])
            for s in combinations(range(params.n), params.w)
        ]
        # itertools yields lexicographic order; re-sort into colex.
        self.vertices.sort(key=rank)
        self.index = {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self):
        return [[self.index[u] for u in neighbors(v)] for v in self.vertices]

    def __len__(self):
        return len(self.vertices)


@lru_cache(maxsize=None)
def _graph(n, w):
    return Graph(johnson(n, w))


def graph(params):
    """Cached :class:`Graph` for ``params``."""
    return _graph(params.n, params.w)


def vertices(params):
    return graph(params).vertices
