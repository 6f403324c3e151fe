"""Empirical constant alpha with I^{w',w} I^{w,w'} f = alpha f on each eigenspace.

    python scripts/alpha_table.py --n-max 8 --out alpha.csv
"""
import argparse
import csv
import sys
from dataclasses import dataclass

from johnson_eigen.eigenfunctions import eigenspace_basis, proportionality_alpha
from johnson_eigen.graph import JohnsonParams
from johnson_eigen.sweep import graphs_up_to


@dataclass(frozen=True)
class Config:
    n_max: int = 8
    out: str | None = None


def alpha_rows(cfg):
    rows = []
    for n, w in graphs_up_to(cfg.n_max, n_min=1):
        p = JohnsonParams(n, w)
        for wp in range(n // 2 + 1):
            if wp == w:
                continue
            for i in range(min(w, wp) + 1):
                alphas = {proportionality_alpha(f, i, wp).alpha for f in eigenspace_basis(p, i)}
                # one value per eigenspace, or the run is worth a look
                alpha = alphas.pop() if len(alphas) == 1 else "mixed"
                rows.append((n, w, wp, i, alpha))
    return rows


def run(cfg):
    rows = alpha_rows(cfg)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(("n", "w", "w_prime", "i", "alpha"))
    writer.writerows(rows)
    if cfg.out:
        fh.close()
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--out")
    a = ap.parse_args()
    run(Config(a.n_max, a.out))
