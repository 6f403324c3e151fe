"""Command-line interface.

Exit status: 0 success, 1 verification/invariant failure, 2 usage error.
Rationals are printed as "p/q", never as decimals.
"""
import argparse
import csv
import json
import sys
from fractions import Fraction

from . import combinatorics as comb
from . import eigenfunctions as ef
from . import reconstruction as rec
from . import sweep
from .graph import JohnsonParams, SphereSpec, Vertex, canonical_center


class UsageError(Exception):
    pass


def _params(args):
    return JohnsonParams(args.n, args.w)


def _vertex(text, params):
    v = Vertex.from_bits(text)
    if v.n != params.n or v.w != params.w:
        raise UsageError(f"center {text} is not a vertex of {params}")
    return v


def _emit_text(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_json(obj, out):
    _emit_text(json.dumps(obj, indent=1), out)


def _emit_csv(header, rows, out):
    fh = open(out, "w", newline="") if out else sys.stdout
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if out:
            fh.close()


# ---------------------------------------------------------------- subcommands

def cmd_eberlein(args):
    print(comb.eberlein(args.k, args.i, args.w, args.n))
    return 0


def cmd_eigenvalue(args):
    print(comb.eigenvalue(args.i, args.n, args.w))
    return 0


def cmd_multiplicity(args):
    print(comb.multiplicity(args.i, args.n))
    return 0


def cmd_criterion(args):
    rep = rec.criterion(args.i, args.r, _params(args))
    if args.json:
        _emit_json(rep.to_json(), args.out)
        return 0
    lines = [rep.verdict + (" (advisory: outside n >= max(w+r+i, 2w, w+2r+2))" if rep.advisory else "")]
    if rep.reason:
        lines.append(f"reason: {rep.reason}")
    if rep.failing is not None:
        lines.append(f"failing: {rep.failing.which} at ({rep.failing.k1},{rep.failing.k2})")
    lines.append(f"radius window i <= r <= w-i: {rep.radius_window_ok}")
    for e in rep.evaluations:
        val = "ill-posed" if e.value is None else str(e.value)
        lines.append(f"{e.which}({e.k1},{e.k2}) = {val}")
    _emit_text("\n".join(lines), args.out)
    return 0


def cmd_oracle(args):
    params = _params(args)
    center = _vertex(args.center, params) if args.center else canonical_center(params)
    run = rec.oracle_ball if args.ball else rec.oracle_sphere
    verdict = run(args.i, args.r, params, center)
    if args.witness_out and verdict.witness is not None:
        _emit_json(verdict.witness.to_json(), args.witness_out)
    if args.json:
        _emit_json({
            "unique": verdict.unique,
            "kernel_dim": verdict.kernel_dim,
            "witness": verdict.witness.to_json() if verdict.witness else None,
        }, args.out)
    else:
        _emit_text("unique" if verdict.unique else f"not unique (kernel dimension {verdict.kernel_dim})", args.out)
    return 0


def _load_values(path):
    with open(path) as fh:
        obj = json.load(fh)
    if isinstance(obj, dict) and "values" in obj and "n" in obj:
        return ef.VertexFunction.from_json(obj)
    if not isinstance(obj, dict):
        raise UsageError("values file must be a JSON object")
    try:
        return {Vertex.from_bits(k): Fraction(str(v)) for k, v in obj.items()}
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad entry in values file: {exc}") from None


def cmd_reconstruct(args):
    params = _params(args)
    spec = SphereSpec(_vertex(args.center, params), args.r)
    given = _load_values(args.values)
    run = rec.reconstruct_from_ball if args.ball else rec.reconstruct_from_sphere
    res = run(args.i, spec, given)
    if isinstance(res, rec.Unique):
        out = {"status": "unique", "function": res.function.to_json()}
    elif isinstance(res, rec.NotUnique):
        out = {"status": "not_unique", "witness": res.witness.to_json(), "particular": res.particular.to_json()}
    else:
        out = {"status": "inconsistent"}
    _emit_json(out, args.out)
    return 0


def cmd_counterexample(args):
    f = rec.counterexample_sphere(args.i, args.r, _params(args))
    _emit_json(f.to_json(), args.out)
    return 0


def cmd_construct(args):
    kind = args.kind
    if kind in ("radial", "f0"):
        if args.n is None or args.w is None or args.i is None:
            raise UsageError(f"construct {kind} needs --n, --w and --i")
        params = _params(args)
        if kind == "radial":
            center = _vertex(args.center, params) if args.center else canonical_center(params)
            f = ef.radial(center, args.i)
        else:
            f = ef.f0(args.i, params)
    else:
        if not args.input:
            raise UsageError(f"construct {kind} needs --input FILE")
        g = ef.load_function(args.input)
        if kind == "lift":
            f = ef.lift(g)
        elif kind == "difference":
            if args.j1 is None or args.j2 is None:
                raise UsageError("construct difference needs --j1 and --j2")
            f = ef.difference(g, args.j1, args.j2)
        else:
            if args.target_w is None:
                raise UsageError("construct induce needs --target-w")
            f = ef.induce(g, args.target_w)
    _emit_json(f.to_json(), args.out)
    return 0


def cmd_verify(args):
    verdicts, props = sweep.run_verify(args.n_max, args.jobs)
    _emit_csv(sweep.VERDICT_HEADER, [v.csv() for v in verdicts], args.out)
    prop_rows = [[*p[:5], "true" if p[5] else "false", p[6]] for p in props]
    if args.properties_out:
        _emit_csv(sweep.PROPERTY_HEADER, prop_rows, args.properties_out)
    failures = [v for v in verdicts if v.agreement is not True]
    failed_props = [p for p in props if not p[5]]
    for v in failures:
        print(f"DISAGREE n={v.n} w={v.w} i={v.i} r={v.r}: criterion {v.criterion_verdict}, "
              f"oracle {v.oracle_verdict}", file=sys.stderr)
    for p in failed_props:
        print(f"FAIL {p[0]} n={p[1]} w={p[2]} i={p[3]} r={p[4]}: {p[6]}", file=sys.stderr)
    print(f"{len(verdicts)} criterion instances, {len(props)} property checks, "
          f"{len(failures) + len(failed_props)} failures", file=sys.stderr)
    return 1 if failures or failed_props else 0


def cmd_table(args):
    rows = sweep.table_rows(args.w, args.i, args.r_min, args.r_max, args.n_min, args.n_max)
    _emit_csv(sweep.VERDICT_HEADER, [v.csv() for v in rows], args.out)
    return 0


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="johnson-eigen", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, *params, out=True):
        sp = sub.add_parser(name, help=help)
        for flag in params:
            sp.add_argument(f"--{flag}", type=int, required=True)
        if out:
            sp.add_argument("--out", help="write output here instead of stdout")
        sp.set_defaults(func=fn)
        return sp

    add("eberlein", cmd_eberlein, "Eberlein polynomial E_k(i, w, n)", "k", "i", "w", "n", out=False)
    add("eigenvalue", cmd_eigenvalue, "eigenvalue lambda_i of J(n, w)", "i", "n", "w", out=False)
    add("multiplicity", cmd_multiplicity, "multiplicity of lambda_i", "i", "n", out=False)

    sp = add("criterion", cmd_criterion, "closed-form sphere reconstruction test", "i", "r", "w", "n")
    sp.add_argument("--json", action="store_true")

    sp = add("oracle", cmd_oracle, "brute-force reconstruction test", "i", "r", "w", "n")
    sp.add_argument("--ball", action="store_true", help="use B_r instead of S_r")
    sp.add_argument("--center", help="center bitstring (default 1..10..0)")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--witness-out", help="save a kernel witness as VertexFunction JSON")

    sp = add("counterexample", cmd_counterexample, "eigenfunction vanishing on S_r(x_0)", "i", "r", "w", "n")

    sp = sub.add_parser("construct", help="build an eigenfunction (VertexFunction JSON)")
    sp.add_argument("kind", choices=["radial", "f0", "lift", "difference", "induce"])
    for flag in ("n", "w", "i", "j1", "j2", "target-w"):
        sp.add_argument(f"--{flag}", type=int)
    sp.add_argument("--center")
    sp.add_argument("--input", help="input VertexFunction JSON (lift, difference, induce)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = add("reconstruct", cmd_reconstruct, "recover an eigenfunction from sphere/ball values",
             "i", "r", "w", "n")
    sp.add_argument("--ball", action="store_true")
    sp.add_argument("--center", required=True)
    sp.add_argument("--values", required=True,
                    help='JSON {"bitstring": "p/q", ...} or a VertexFunction JSON')

    sp = add("verify", cmd_verify, "full property sweep; verdict CSV", "n-max")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--properties-out", help="per-check CSV")

    add("table", cmd_table, "criterion/oracle agreement CSV", "w", "i", "r-min", "r-max", "n-min", "n-max")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, comb.ParameterError, ef.ZeroInputError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (rec.CounterexampleError, rec.IllPosedError, ef.EigenspaceError, ef.NotProportionalError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
