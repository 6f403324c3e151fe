"""Reconstructing eigenfunctions of J(n, w) from values on a sphere or a ball.

Two independent routes answer "is a lambda_i-eigenfunction determined by its
values on S_r(x_0)?":

* :func:`criterion` -- the closed-form test: i <= r <= w - i and the
  nonvanishing of the rational sums :func:`F1` / :func:`F2`;
* :func:`oracle_sphere` -- brute force: restrict an exact eigenspace basis to
  the sphere and test the kernel.

:func:`counterexample_sphere` builds an explicit nonzero eigenfunction
vanishing on the sphere whenever the criterion fails.
"""
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .combinatorics import ParameterError, binom, eberlein
from .eigenfunctions import (
    VertexFunction,
    combination,
    eigenspace_basis,
    f0,
    induce,
    is_eigenfunction,
    lift,
    radial,
    relabel,
)
from .graph import JohnsonParams, Vertex, ball, canonical_center, johnson, sphere

REC = "Reconstructible"
NOT_REC = "NotReconstructible"


class IllPosedError(ValueError):
    """A term of F1/F2 divides by a vanishing binomial."""


class CounterexampleError(RuntimeError):
    pass


def hypothesis_holds(i, r, w, n):
    return n >= max(w + r + i, 2 * w, w + 2 * r + 2)


def _f_sum(terms, k1, k2, i, w, n):
    # terms: iterable of (count, d); each contributes count * E_d / |S_d| on the
    # reduced graph J(n - 2(k1 + k2), w - 2k1) at reduced index i - k1 - k2.
    ri, rw, rn = i - (k1 + k2), w - 2 * k1, n - 2 * (k1 + k2)
    total = Fraction(0)
    for count, d in terms:
        if count == 0:
            continue
        den = binom(rw, d) * binom(rn - rw, d)
        if den == 0:
            raise IllPosedError(f"zero denominator at distance {d} on J({rn},{rw})")
        try:
            e = eberlein(d, ri, rw, rn)
        except ParameterError as exc:
            raise IllPosedError(str(exc)) from None
        total += Fraction(count * e, den)
    return total


def F1(k1, k2, i, r, w, n):
    """Sum over s = 0..k2-k1 of C(r-k1, s) C(n-w-k2-r, k2-k1-s) E_{r-k1-s} / |S_{r-k1-s}|.

    E and |S| are taken on J(n - 2(k1+k2), w - 2k1) at index i - (k1+k2).
    Terms whose counting coefficient vanishes are skipped.
    """
    if not 0 <= k1 <= k2:
        raise ParameterError(f"F1 needs 0 <= k1 <= k2, got k1={k1}, k2={k2}")
    try:
        terms = [
            (binom(r - k1, s) * binom(n - w - k2 - r, k2 - k1 - s), r - k1 - s)
            for s in range(k2 - k1 + 1)
        ]
    except ParameterError as exc:
        raise IllPosedError(str(exc)) from None
    return _f_sum(terms, k1, k2, i, w, n)


def F2(k1, k2, i, r, w, n):
    """Sum over s = 0..k1-k2 of C(w-r-k1, s) C(r-k2, k1-k2-s) E_{r-k1+s} / |S_{r-k1+s}|."""
    if not 0 <= k2 <= k1:
        raise ParameterError(f"F2 needs 0 <= k2 <= k1, got k1={k1}, k2={k2}")
    try:
        terms = [
            (binom(w - r - k1, s) * binom(r - k2, k1 - k2 - s), r - k1 + s)
            for s in range(k1 - k2 + 1)
        ]
    except ParameterError as exc:
        raise IllPosedError(str(exc)) from None
    return _f_sum(terms, k1, k2, i, w, n)


@dataclass(frozen=True)
class Evaluation:
    k1: int
    k2: int
    which: str
    value: Fraction | None
    note: str = ""


def evaluation_grid(i):
    """(k1, k2, which) in criterion order: per t = k1 + k2 < i, F1 for k1 <= t/2 then F2 for k1 >= t/2."""
    out = []
    for t in range(i):
        out += [(k1, t - k1, "F1") for k1 in range(t // 2 + 1)]
        out += [(k1, t - k1, "F2") for k1 in range((t + 1) // 2, t + 1)]
    return out


@dataclass(frozen=True)
class CriterionReport:
    n: int
    w: int
    i: int
    r: int
    radius_window_ok: bool
    hypothesis_ok: bool
    evaluations: tuple
    verdict: str
    reason: str = ""
    failing: Evaluation | None = None

    @property
    def reconstructible(self):
        return self.verdict == REC

    @property
    def advisory(self):
        # Outside the n-window the closed form makes no claim.
        return not self.hypothesis_ok

    def to_json(self):
        return {
            "n": self.n,
            "w": self.w,
            "i": self.i,
            "r": self.r,
            "radius_window_ok": self.radius_window_ok,
            "hypothesis_ok": self.hypothesis_ok,
            "advisory": self.advisory,
            "verdict": self.verdict,
            "reason": self.reason,
            "evaluations": [
                {
                    "k1": e.k1,
                    "k2": e.k2,
                    "which": e.which,
                    "value": None if e.value is None else str(e.value),
                    **({"note": e.note} if e.note else {}),
                }
                for e in self.evaluations
            ],
        }


def criterion(i, r, params):
    """Closed-form sphere-reconstruction verdict for lambda_i on J(n, w), radius r.

    Raises :class:`IllPosedError` if the radius window holds but some F value
    cannot be evaluated.
    """
    n, w = params.n, params.w
    if not 0 <= i <= w:
        raise ParameterError(f"eigen-index {i} out of range 0..{w}")
    if not 0 <= r <= w:
        raise ParameterError(f"radius {r} out of range 0..{w}")
    window = i <= r <= w - i
    evaluations = []
    for k1, k2, which in evaluation_grid(i):
        fn = F1 if which == "F1" else F2
        try:
            evaluations.append(Evaluation(k1, k2, which, fn(k1, k2, i, r, w, n)))
        except IllPosedError as exc:
            if window:
                raise IllPosedError(f"{which}({k1},{k2}) for i={i}, r={r} on {params}: {exc}") from None
            evaluations.append(Evaluation(k1, k2, which, None, note=f"ill-posed: {exc}"))
    failing = next((e for e in evaluations if e.value == 0), None)
    if not window:
        verdict, reason = NOT_REC, f"radius window {i} <= {r} <= {w - i} fails"
    elif failing is not None:
        verdict, reason = NOT_REC, f"{failing.which}({failing.k1},{failing.k2}) = 0"
    else:
        verdict, reason = REC, ""
    return CriterionReport(
        n, w, i, r, window, hypothesis_holds(i, r, w, n), tuple(evaluations), verdict, reason,
        failing if window else None,
    )


# ---------------------------------------------------------------- brute force

@dataclass(frozen=True)
class OracleVerdict:
    unique: bool
    witness: VertexFunction | None = None
    kernel_dim: int = 0


def _restriction_matrix(basis, region):
    # rows indexed by region vertices, columns by basis functions
    cols = [b.restrict(region) for b in basis]
    return linalg.RationalMatrix.from_rows(
        [[c[k] for c in cols] for k in range(len(region))], len(cols)
    )


def _oracle(i, params, region):
    basis = eigenspace_basis(params, i)
    kernel = linalg.nullspace(_restriction_matrix(basis, region))
    if not kernel:
        return OracleVerdict(True)
    return OracleVerdict(False, combination(basis.basis, kernel[0]), len(kernel))


def _center(params, center):
    if center is None:
        return canonical_center(params)
    if center.n != params.n or center.w != params.w:
        raise ParameterError(f"center {center} is not a vertex of {params}")
    return center


def oracle_sphere(i, r, params, center=None):
    """Does some nonzero lambda_i-eigenfunction vanish on S_r(center)?  Exact rank test."""
    return _oracle(i, params, sphere(_center(params, center), r))


def oracle_ball(i, r, params, center=None):
    return _oracle(i, params, ball(_center(params, center), r))


# ---------------------------------------------------------------- reconstruction

@dataclass(frozen=True)
class Unique:
    function: VertexFunction


@dataclass(frozen=True)
class NotUnique:
    witness: VertexFunction
    particular: VertexFunction = field(default=None, compare=False)


@dataclass(frozen=True)
class Inconsistent:
    pass


def _given_values(region, given):
    if isinstance(given, VertexFunction):
        return given.restrict(region)
    if not isinstance(given, Mapping):
        raise ParameterError("given values must be a mapping Vertex -> value or a VertexFunction")
    keys = set(given)
    wanted = set(region)
    if keys != wanted:
        missing = len(wanted - keys)
        extra = len(keys - wanted)
        raise ParameterError(f"given values do not cover the region: {missing} missing, {extra} extra")
    return [Fraction(given[v]) for v in region]


def _reconstruct(i, params, region, given):
    b = _given_values(region, given)
    basis = eigenspace_basis(params, i)
    res = linalg.solve(_restriction_matrix(basis, region), b)
    if isinstance(res, linalg.Inconsistent):
        return Inconsistent()
    if isinstance(res, linalg.Unique):
        return Unique(combination(basis.basis, res.x))
    return NotUnique(combination(basis.basis, res.kernel[0]), combination(basis.basis, res.particular))


def _spec_params(spec):
    return JohnsonParams(spec.center.n, spec.center.w)


def reconstruct_from_ball(i, spec, given):
    """Recover a lambda_i-eigenfunction from its values on B_r(center).

    ``given`` maps every ball vertex to its value (extra or missing vertices
    are an error).
    """
    return _reconstruct(i, _spec_params(spec), spec.ball(), given)


def reconstruct_from_sphere(i, spec, given):
    return _reconstruct(i, _spec_params(spec), spec.sphere(), given)


# ---------------------------------------------------------------- counterexamples

def _moved_to_canonical(f, x):
    """Relabel coordinates so that vertex x becomes (1..1 0..0)."""
    ones = [c for c in range(1, x.n + 1) if x.bits[c - 1]]
    zeros = [c for c in range(1, x.n + 1) if not x.bits[c - 1]]
    mapping = {c: p for p, c in enumerate(ones + zeros, 1)}
    return relabel(f, mapping)


def f0_ball_center(i, r, params):
    """Vertex with zeros at 1..r+1 and i+1..i+r+1, ones on the first free positions."""
    n, w = params.n, params.w
    if not (i > r and n >= w + 2 * r + 2):
        raise ParameterError(f"ball-vanishing placement needs i > r and n >= w + 2r + 2 (i={i}, r={r}, {params})")
    blocked = set(range(1, r + 2)) | set(range(i + 1, i + r + 2))
    free = [c for c in range(1, n + 1) if c not in blocked]
    return Vertex.from_support(n, free[:w])


def f0_sphere_center(i, r, params):
    """Vertex with ones at 1..w-r+1 and i+1..i+w-r+1, remaining ones on the first free positions."""
    n, w = params.n, params.w
    m = w - r + 1
    forced = set(range(1, m + 1)) | set(range(i + 1, i + m + 1))
    if not (i <= r and r > w - i) or len(forced) != 2 * m or 2 * m > w or max(forced) > n:
        raise ParameterError(f"sphere-vanishing placement infeasible for i={i}, r={r} on {params}")
    free = [c for c in range(1, n + 1) if c not in forced]
    return Vertex.from_support(n, sorted(forced) + free[: w - 2 * m])


def reduced_counterexample(k1, k2, i, r, params):
    """Eigenfunction built from a vanishing F1/F2 value at (k1, k2).

    A spherical function h of index i - (k1+k2) on J(n - 2(k1+k2), w - 2k1),
    centred on the first w - 2k1 coordinates, is induced to weight
    w - k1 - k2 and lifted k1 times on the left block and k2 times on the
    right block.  The lifted pairs occupy coordinates (j, k1 + j) and
    (w + j, w + k2 + j).
    """
    n, w = params.n, params.w
    t = k1 + k2
    rn, rw = n - 2 * t, w - 2 * k1
    hp = johnson(rn, rw)
    h = radial(canonical_center(hp), i - t, hp)
    g = induce(h, w - t)
    for _ in range(t):
        g = lift(g)
    # current layout: A block (rw coords), B block (rn - rw), then t appended pairs
    mapping = {a: 2 * k1 + a for a in range(1, rw + 1)}
    mapping.update({rw + b: w + 2 * k2 + b for b in range(1, rn - rw + 1)})
    for p in range(1, t + 1):
        first, second = rn + 2 * p - 1, rn + 2 * p
        if p <= k1:
            mapping[first], mapping[second] = p, k1 + p
        else:
            q = p - k1
            mapping[first], mapping[second] = w + q, w + k2 + q
    g = VertexFunction(JohnsonParams(n, w), g.values)
    return relabel(g, mapping)


def check_counterexample(f, i, r, params):
    """Nonzero, lambda_i-eigenfunction, zero on S_r(x_0)."""
    x0 = canonical_center(params)
    return (
        f.params == params
        and not f.is_zero()
        and is_eigenfunction(f, i)
        and not any(f.restrict(sphere(x0, r)))
    )


def counterexample_sphere(i, r, params):
    """Nonzero lambda_i-eigenfunction vanishing on S_r(x_0) when the criterion fails.

    Tries, in order: f0 placed so it vanishes on the whole ball (i > r), f0
    placed so it vanishes on the sphere (r > w - i), and the reduced
    spherical construction for every vanishing F1/F2 value.  Every candidate
    is checked; :class:`CounterexampleError` if none passes.
    """
    report = criterion(i, r, params)
    if report.reconstructible:
        raise CounterexampleError(f"criterion holds for i={i}, r={r} on {params}; no counterexample")
    candidates = []
    if i > r:
        candidates.append(lambda: _moved_to_canonical(f0(i, params), f0_ball_center(i, r, params)))
    if i <= r and r > params.w - i:
        candidates.append(lambda: _moved_to_canonical(f0(i, params), f0_sphere_center(i, r, params)))
    for e in report.evaluations:
        if e.value == 0:
            candidates.append(lambda e=e: reduced_counterexample(e.k1, e.k2, i, r, params))
    for build in candidates:
        try:
            f = build()
        except ParameterError:
            continue
        if check_counterexample(f, i, r, params):
            return f
    raise CounterexampleError(f"no construction route produced a counterexample for i={i}, r={r} on {params}")
