"""Criterion vs brute-force oracle over the full admissible grid.

    python scripts/agreement_table.py --n-max 12 --jobs 4 --out agreement.csv
"""
import argparse
import csv
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from johnson_eigen.graph import JohnsonParams
from johnson_eigen.sweep import VERDICT_HEADER, graphs_up_to, admissible_instances, verdict_row


@dataclass(frozen=True)
class Config:
    n_max: int = 12
    jobs: int = 4
    out: str | None = None


def rows_for(nw):
    n, w = nw
    p = JohnsonParams(n, w)
    return [verdict_row(i, r, p) for i, r in admissible_instances(n, w)]


def run(cfg):
    with ProcessPoolExecutor(cfg.jobs) as pool:
        rows = [r for rs in pool.map(rows_for, graphs_up_to(cfg.n_max)) for r in rs]
    rows.sort(key=lambda v: (v.n, v.w, v.i, v.r))
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(VERDICT_HEADER)
    writer.writerows(v.csv() for v in rows)
    if cfg.out:
        fh.close()
    tally = Counter((v.criterion_verdict, v.oracle_verdict) for v in rows)
    print(f"{len(rows)} instances", file=sys.stderr)
    for (c, o), k in sorted(tally.items()):
        print(f"  criterion {c:<20} oracle {o:<20} {k}", file=sys.stderr)
    for v in rows:
        if v.agreement is not True:
            print(f"  disagreement at n={v.n} w={v.w} i={v.i} r={v.r}", file=sys.stderr)
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--jobs", type=int, default=Config.jobs)
    ap.add_argument("--out")
    a = ap.parse_args()
    run(Config(a.n_max, a.jobs, a.out))
