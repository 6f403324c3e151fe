"""Probe the instances w odd, i = r = (w+1)/2, where r > w - i.

The radius-window test rejects these, but no f0-style witness centre exists
(it would need w >= 2(w - r + 1) = w + 1). This prints the exact kernel
dimension of the sphere restriction for a few centres, together with
whether any F1/F2 value vanishes (which gives a witness by another route).

    python scripts/odd_weight_gap.py --w-max 5 --n-max 13
"""
import argparse
import sys
from dataclasses import dataclass

from johnson_eigen.combinatorics import ParameterError
from johnson_eigen.graph import JohnsonParams
from johnson_eigen.reconstruction import criterion, hypothesis_holds, oracle_sphere, f0_sphere_center
from johnson_eigen.sweep import sample_centers


@dataclass(frozen=True)
class Config:
    w_max: int = 5
    n_max: int = 13
    centers: int = 2


def run(cfg):
    rows = []
    for w in range(1, cfg.w_max + 1, 2):
        i = r = (w + 1) // 2
        for n in range(2 * w, cfg.n_max + 1):
            if not hypothesis_holds(i, r, w, n):
                continue
            p = JohnsonParams(n, w)
            try:
                f0_sphere_center(i, r, p)
                centre = "exists"
            except ParameterError:
                centre = "none"
            dims = [oracle_sphere(i, r, p, c).kernel_dim for c in sample_centers(p, cfg.centers)]
            rep = criterion(i, r, p)
            f_zero = any(e.value == 0 for e in rep.evaluations)
            rows.append((n, w, i, r, rep.verdict, dims, centre, f_zero))
            print(f"n={n:>2} w={w} i=r={i}: criterion {rep.verdict:<18} kernel dims {dims} "
                  f"witness centre {centre:<6} some F = 0: {f_zero}", flush=True)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--w-max", type=int, default=Config.w_max)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--centers", type=int, default=Config.centers)
    a = ap.parse_args()
    sys.exit(0 if run(Config(a.w_max, a.n_max, a.centers)) else 1)
