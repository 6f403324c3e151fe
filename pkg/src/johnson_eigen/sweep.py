"""Grid sweeps cross-checking every construction against brute force.

Each sweep task covers one graph J(n, w) and returns plain row tuples, so
tasks can run in worker processes and be merged in sorted order.
"""
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .combinatorics import binom, eberlein, eigenvalue
from .eigenfunctions import (
    eigenspace_basis,
    difference,
    induce,
    induce_chain,
    induce_scale,
    is_eigenfunction,
    lift,
    f0,
    proportionality_alpha,
    sphere_sum_check,
)
from .graph import JohnsonParams, Vertex, ball, canonical_center, graph, sphere
from .reconstruction import (
    CounterexampleError,
    IllPosedError,
    check_counterexample,
    counterexample_sphere,
    criterion,
    hypothesis_holds,
    oracle_ball,
    oracle_sphere,
    f0_ball_center,
    f0_sphere_center,
)

VERDICT_HEADER = ("n", "w", "i", "r", "criterion_verdict", "oracle_verdict", "agreement",
                  "failing_k1", "failing_k2", "which_F")
PROPERTY_HEADER = ("check", "n", "w", "i", "r", "passed", "detail")

# Operator-map and sphere-sum checks over every vertex get expensive beyond this.
EXHAUSTIVE_MAX_ORDER = 70


def sample_centers(params, count=3):
    """Up to ``count`` distinct deterministic centers, starting with x_0."""
    n, w = params.n, params.w
    interleaved = (list(range(1, n + 1, 2)) + list(range(2, n + 1, 2)))[:w]
    cands = [
        canonical_center(params),
        Vertex((0,) * (n - w) + (1,) * w),
        Vertex.from_support(n, interleaved),
        Vertex.from_support(n, range(2, w + 2)) if w < n else None,
    ]
    out = []
    for v in cands:
        if v is not None and v not in out:
            out.append(v)
    return out[:count]


def graphs_up_to(n_max, n_min=0):
    return [(n, w) for n in range(n_min, n_max + 1) for w in range(n // 2 + 1)]


def admissible_instances(n, w):
    return [(i, r) for i in range(w + 1) for r in range(w + 1) if hypothesis_holds(i, r, w, n)]


@dataclass(frozen=True)
class VerdictRow:
    n: int
    w: int
    i: int
    r: int
    criterion_verdict: str
    oracle_verdict: str
    agreement: bool | None
    failing_k1: int | None = None
    failing_k2: int | None = None
    which_F: str = ""

    def csv(self):
        def cell(x):
            if x is None:
                return ""
            if isinstance(x, bool):
                return "true" if x else "false"
            return str(x)

        return [cell(getattr(self, h)) for h in VERDICT_HEADER]


def verdict_row(i, r, params, center=None):
    """Criterion vs oracle on one instance; advisory outside the n-window."""
    n, w = params.n, params.w
    oracle = oracle_sphere(i, r, params, center)
    oracle_verdict = "Reconstructible" if oracle.unique else "NotReconstructible"
    try:
        rep = criterion(i, r, params)
    except IllPosedError:
        return VerdictRow(n, w, i, r, "IllPosed", oracle_verdict, None)
    verdict = rep.verdict if not rep.advisory else f"Advisory:{rep.verdict}"
    fail = rep.failing
    return VerdictRow(
        n, w, i, r, verdict, oracle_verdict, rep.reconstructible == oracle.unique,
        fail.k1 if fail else None, fail.k2 if fail else None, fail.which if fail else "",
    )


# ---------------------------------------------------------------- individual checks

def check_multiplicities(params):
    rows = []
    for i in range(params.w + 1):
        try:
            eigenspace_basis(params, i)
            rows.append(("multiplicity", params.n, params.w, i, "", True, ""))
        except Exception as exc:  # EigenspaceError
            rows.append(("multiplicity", params.n, params.w, i, "", False, str(exc)))
    return rows


def check_sphere_sums(params, centers=None):
    if centers is None:
        centers = graph(params).vertices if params.order <= EXHAUSTIVE_MAX_ORDER else sample_centers(params)
    rows = []
    for i in range(params.w + 1):
        ok = all(
            sphere_sum_check(f, i, x, k)
            for f in eigenspace_basis(params, i)
            for x in centers
            for k in range(params.w + 1)
        )
        rows.append(("sphere_sum", params.n, params.w, i, "", ok, f"{len(centers)} centers"))
    return rows


def check_eberlein_identities(params):
    n, w = params.n, params.w
    rows = []
    for i in range(w + 1):
        e1 = eberlein(1, i, w, n) == eigenvalue(i, n, w)
        total = sum(eberlein(k, i, w, n) for k in range(w + 1))
        tot_ok = total == (binom(n, w) if i == 0 else 0)
        rows.append(("eberlein_identities", n, w, i, "", e1 and tot_ok, ""))
    return rows


def check_operator_maps(params, pairs=None):
    """difference i -> i-1, lift i -> i+1, induce i -> i for every basis element."""
    n, w = params.n, params.w
    if pairs is None:
        pairs = list(itertools.combinations(range(1, n + 1), 2))
    rows = []
    for i in range(w + 1):
        basis = eigenspace_basis(params, i)
        if w >= 1:
            ok = all(
                is_eigenfunction(difference(f, a, b), i - 1) if i >= 1 else difference(f, a, b).is_zero()
                for f in basis for a, b in pairs
            )
            rows.append(("difference_index", n, w, i, "", ok, f"{len(pairs)} pairs"))
        ok = all(is_eigenfunction(lift(f), i + 1) for f in basis)
        rows.append(("lift_index", n, w, i, "", ok, ""))
        for target in range(n // 2 + 1):
            if target == w or i > target:
                continue
            ok = all(is_eigenfunction(induce(f, target), i) for f in basis)
            rows.append(("induce_index", n, w, i, "", ok, f"target w={target}"))
    return rows


def check_induce_composition(params, target_w):
    """(|w-j|)! I^{j,w} equals the chain of one-step inducing maps."""
    n, j = params.n, params.w
    scale = induce_scale(j, target_w)
    rows = []
    for i in range(j + 1):
        ok = all(
            induce(f, target_w).scale(scale) == induce_chain(f, target_w)
            for f in eigenspace_basis(params, i)
        )
        rows.append(("induce_composition", n, j, i, "", ok, f"target w={target_w}"))
    return rows


def check_induce_kernel(params):
    """I^{w,w-1}(f) = 0 exactly on eigenspace w, nonzero on other basis elements."""
    n, w = params.n, params.w
    rows = []
    if w == 0:
        return rows
    for i in range(w + 1):
        zeros = [induce(f, w - 1).is_zero() for f in eigenspace_basis(params, i)]
        ok = all(zeros) if i == w else not any(zeros)
        rows.append(("induce_kernel", n, w, i, "", ok, ""))
    return rows


def check_proportionality(params, w_primes=None):
    n, w = params.n, params.w
    if w_primes is None:
        w_primes = [v for v in range(n // 2 + 1) if v != w]
    rows = []
    for wp in w_primes:
        for i in range(min(w, wp) + 1):
            alphas = set()
            ok = True
            detail = ""
            for f in eigenspace_basis(params, i):
                try:
                    alphas.add(proportionality_alpha(f, i, wp).alpha)
                except Exception as exc:
                    ok, detail = False, str(exc)
                    break
            # one alpha for the whole eigenspace
            ok = ok and len(alphas) == 1
            if ok:
                detail = f"w'={wp} alpha={alphas.pop()}"
            rows.append(("proportionality", n, w, i, "", ok, detail or f"w'={wp}"))
    return rows


def check_ball_uniqueness(params, centers=None):
    n, w = params.n, params.w
    centers = centers or sample_centers(params)
    rows = []
    for r in range(w):
        for i in range(r + 1):
            ok = all(oracle_ball(i, r, params, c).unique for c in centers)
            rows.append(("ball_uniqueness", n, w, i, r, ok, f"{len(centers)} centers"))
    return rows


def _f0_centers(params, i, r, case):
    w = params.w
    vs = graph(params).vertices
    if case == 1:
        return [x for x in vs if not any(x.bits[c - 1] for c in range(1, r + 2))
                and not any(x.bits[c - 1] for c in range(i + 1, i + r + 2))]
    m = w - r + 1
    return [x for x in vs if all(x.bits[c - 1] for c in range(1, m + 1))
            and all(x.bits[c - 1] for c in range(i + 1, i + m + 1))]


def check_f0_vanishing(params, all_centers=True):
    """f0 vanishes on B_r(x) (i > r, n >= w+2r+2) and on S_r(x) (i <= r, r > w-i)."""
    n, w = params.n, params.w
    rows = []
    for i in range(w + 1):
        if 2 * i > n:
            continue
        f = f0(i, params)
        for r in range(w + 1):
            if i > r and n >= w + 2 * r + 2:
                centers = _f0_centers(params, i, r, 1) if all_centers else [f0_ball_center(i, r, params)]
                ok = bool(centers) and all(not any(f.restrict(ball(x, r))) for x in centers)
                rows.append(("f0_ball", n, w, i, r, ok, f"{len(centers)} centers"))
            elif i <= r and r > w - i:
                if 2 * (w - r + 1) > w:
                    rows.append(("f0_sphere_infeasible", n, w, i, r, True, "no admissible center"))
                    continue
                centers = _f0_centers(params, i, r, 2) if all_centers else [f0_sphere_center(i, r, params)]
                ok = bool(centers) and all(not any(f.restrict(sphere(x, r))) for x in centers)
                rows.append(("f0_sphere", n, w, i, r, ok, f"{len(centers)} centers"))
    return rows


def check_counterexamples(params):
    n, w = params.n, params.w
    rows = []
    for i, r in admissible_instances(n, w):
        rep = criterion(i, r, params)
        if rep.reconstructible:
            continue
        try:
            f = counterexample_sphere(i, r, params)
            ok = check_counterexample(f, i, r, params)
            rows.append(("counterexample", n, w, i, r, ok, rep.reason))
        except CounterexampleError as exc:
            rows.append(("counterexample", n, w, i, r, False, str(exc)))
    return rows


def check_center_independence(params):
    rows = []
    centers = sample_centers(params)
    for i, r in admissible_instances(params.n, params.w):
        verdicts = {oracle_sphere(i, r, params, c).unique for c in centers}
        rows.append(("center_independence", params.n, params.w, i, r, len(verdicts) == 1, f"{len(centers)} centers"))
    return rows


# ---------------------------------------------------------------- driver

def graph_task(args):
    """All checks for one J(n, w); returns (verdict rows, property rows)."""
    n, w = args
    params = JohnsonParams(n, w)
    props = []
    props += check_multiplicities(params)
    props += check_eberlein_identities(params)
    props += check_sphere_sums(params)
    if params.order <= EXHAUSTIVE_MAX_ORDER:
        props += check_operator_maps(params)
        props += check_induce_kernel(params)
        props += check_proportionality(params)
    props += check_ball_uniqueness(params)
    props += check_f0_vanishing(params, all_centers=params.order <= EXHAUSTIVE_MAX_ORDER)
    props += check_counterexamples(params)
    props += check_center_independence(params)
    verdicts = [verdict_row(i, r, params) for i, r in admissible_instances(n, w)]
    return verdicts, props


def run_verify(n_max, jobs=1):
    tasks = graphs_up_to(n_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(graph_task, tasks))
    else:
        results = [graph_task(t) for t in tasks]
    verdicts = sorted((v for vs, _ in results for v in vs), key=lambda v: (v.n, v.w, v.i, v.r))
    props = sorted((p for _, ps in results for p in ps), key=lambda p: (p[1], p[2], p[0], str(p[3]), str(p[4])))
    return verdicts, props


def table_rows(w, i, r_min, r_max, n_min, n_max):
    rows = []
    for n in range(max(n_min, 2 * w), n_max + 1):
        params = JohnsonParams(n, w)
        for r in range(max(r_min, 0), min(r_max, w) + 1):
            rows.append(verdict_row(i, r, params))
    return rows
