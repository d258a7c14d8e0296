"""Command line front end.

Coefficients are given in the order f_0,...,f_n, i.e. ``--form 1,2,3,4`` is
x^3 + 2 x^2 y + 3 x y^2 + 4 y^3.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__, kernels
from .exactalg import ZZ, ContextError, Integers, parse_context
from .forms import BinaryForm, disc_form, is_primitive, parse_form, universal_form
from .pairs import BinaryPair, PairError, validate_pair
from .ringmod import (build_module, build_ring, is_gorenstein, is_invertible_family,
                      ring_disc)
from .suites import check_roundtrip, random_form, run_suite

RECORD_VERSION = 1


class UsageError(Exception):
    pass


def _default_seed():
    env = os.environ.get("FORMRING_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"FORMRING_SEED must be an integer, got {env!r}") from None


def _form_from_args(args, need_form=True):
    if getattr(args, "universal", False):
        if args.n is None:
            raise UsageError("--universal needs --n")
        return universal_form(args.n)
    if args.form is None:
        if need_form:
            raise UsageError("give --form f0,...,fn or --universal")
        return None
    ctx = parse_context(args.context)
    try:
        return parse_form(args.form, args.n, ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, data, text):
    if args.format == "json":
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


def _zname(l):
    return "1" if l == 0 else f"z{l}"


def cmd_ring(args):
    f = _form_from_args(args)
    R = build_ring(f)
    _emit(args, R.to_json(), _ring_text(R))
    return 0


def _ring_text(R):
    ctx, n = R.ctx, R.n
    lines = []
    for i in range(1, n):
        for j in range(i, n):
            terms = [f"({ctx.format(c)})*{_zname(l)}" for l, c in enumerate(R.c[i][j]) if c]
            lines.append(f"z{i}*z{j} = " + (" + ".join(terms) or "0"))
    return "\n".join(lines)


def cmd_ideal(args):
    f = _form_from_args(args)
    if args.k is None:
        raise UsageError("ideal needs --k")
    try:
        T = build_module(f, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ctx, n = f.ctx, f.n
    lines = []
    for i in range(1, n):
        for b in range(n):
            terms = [f"({ctx.format(c)})*e{a}" for a, c in enumerate(T.d[i][b]) if c]
            lines.append(f"z{i}*e{b} = " + (" + ".join(terms) or "0"))
    _emit(args, T.to_json(), "\n".join(lines))
    return 0


def cmd_disc(args):
    f = _form_from_args(args)
    ctx = f.ctx
    a, b = disc_form(f), ring_disc(build_ring(f))
    eq = a == b
    _emit(args, {"disc_form": ctx.to_json(a), "ring_disc": ctx.to_json(b), "equal": eq},
          f"disc_form: {ctx.format(a)}\nring_disc: {ctx.format(b)}\nequal: {str(eq).lower()}")
    return 0 if eq else 1


def props(f):
    """Invariants of an integer form as a dict (None where not defined)."""
    out = {"primitive": None, "invertible": None, "gorenstein": None}
    if isinstance(f.ctx, Integers) and not f.is_zero():
        out["primitive"] = is_primitive(f)
        out["invertible"] = is_invertible_family(f)
        if f.n >= 3:
            out["gorenstein"] = is_gorenstein(f)
    elif isinstance(f.ctx, Integers):
        out["primitive"] = False
    return out


def cmd_props(args):
    f = _form_from_args(args)
    if not isinstance(f.ctx, Integers):
        raise UsageError("props needs an integer form")
    p = props(f)
    p["disc"] = disc_form(f)

    def show(v):
        return "n/a" if v is None else str(v).lower()

    _emit(args, p, "\n".join(f"{k}:{show(v)}" for k, v in p.items()))
    return 0


def cmd_roundtrip(args):
    if args.n is None:
        raise UsageError("roundtrip needs --n")
    if args.n < 3:
        raise UsageError("roundtrip needs n >= 3")
    seed = args.seed if args.seed is not None else _default_seed()
    if args.random:
        rng = random.Random(seed)
        forms = [random_form(args.n, rng) for _ in range(args.trials)]
    else:
        forms = [_form_from_args(args)]
    failures = []
    for f in forms:
        failures += check_roundtrip(f, seed)
    summary = {"trials": len(forms), "failures": failures, "pass": not failures}
    text = f"{len(forms)} trials, {len(failures)} failures: {'pass' if not failures else 'FAIL'}"
    if failures:
        text += "\n" + "\n".join(failures[:20])
    _emit(args, summary, text)
    return 0 if not failures else 1


def cmd_verify(args):
    if args.n is None:
        raise UsageError("verify needs --n")
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        count, failures = run_suite(args.suite, args.n, args.trials, seed)
    except (ValueError, ContextError) as exc:
        raise UsageError(str(exc)) from None
    report = {"suite": args.suite, "n": args.n, "trials": count, "seed": seed,
              "failures": failures, "pass": not failures}
    text = (f"suite {args.suite} n={args.n}: {count} trials, {len(failures)} failures: "
            f"{'pass' if not failures else 'FAIL'}")
    if failures:
        text += "\n" + "\n".join(failures[:20])
    _emit(args, report, text)
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# tabulate


def _nth_form(n, height, idx):
    """The idx-th coefficient vector in lexicographic order over [-H, H]^(n+1)."""
    base = 2 * height + 1
    coeffs = []
    for _ in range(n + 1):
        idx, r = divmod(idx, base)
        coeffs.append(r - height)
    return tuple(reversed(coeffs))


def run_record(coeffs, n, seed=0, timing=False):
    t0 = time.perf_counter()
    f = BinaryForm(n, coeffs)
    rec = {"v": RECORD_VERSION, "form": list(coeffs), "n": n, "context": ZZ.descriptor,
           "disc": disc_form(f) if n >= 2 else None}
    rec.update(props(f))
    if n >= 3:
        rec["roundtrip"] = not check_roundtrip(f, seed)
    if timing:
        rec["ms"] = round(1000 * (time.perf_counter() - t0), 3)
    return rec


def _tabulate_range(path, n, height, indices, seed, timing):
    """Write records for ``indices`` to path, resuming from path.cursor."""
    cursor = path + ".cursor"
    done = 0
    if os.path.exists(cursor):
        with open(cursor) as fh:
            done = int(fh.read().strip() or 0)
    _truncate_to(path, done)
    with open(path, "a") as out:
        for pos, idx in enumerate(indices):
            if pos < done:
                continue
            rec = run_record(_nth_form(n, height, idx), n, seed, timing)
            rec["index"] = idx
            out.write(json.dumps(rec) + "\n")
            out.flush()
            with open(cursor, "w") as fh:
                fh.write(str(pos + 1))
    return path


def _truncate_to(path, lines):
    """Drop any partial trailing records beyond the committed count."""
    if not os.path.exists(path):
        return
    if lines == 0:
        open(path, "w").close()
        return
    with open(path) as fh:
        keep = fh.readlines()[:lines]
    keep = [ln for ln in keep if ln.endswith("\n")]
    with open(path, "w") as fh:
        fh.writelines(keep)


def _shard_job(job):
    path, n, height, shard, shards, total, seed, timing = job
    return _tabulate_range(path, n, height, list(range(shard, total, shards)), seed, timing)


def cmd_tabulate(args):
    if args.n is None or args.height is None or args.out is None:
        raise UsageError("tabulate needs --n, --height and --out")
    if args.height < 0:
        raise UsageError("--height must be nonnegative")
    seed = args.seed if args.seed is not None else _default_seed()
    total = (2 * args.height + 1) ** (args.n + 1)
    try:
        if args.workers <= 1:
            _tabulate_range(args.out, args.n, args.height, list(range(total)), seed, args.timing)
        else:
            jobs = [(f"{args.out}.shard{s}", args.n, args.height, s, args.workers, total, seed,
                     args.timing) for s in range(args.workers)]
            with ProcessPoolExecutor(max_workers=args.workers) as ex:
                paths = list(ex.map(_shard_job, jobs))
            records = []
            for p in paths:
                with open(p) as fh:
                    records += [json.loads(ln) for ln in fh if ln.strip()]
            records.sort(key=lambda r: r["index"])
            with open(args.out, "w") as fh:
                for r in records:
                    fh.write(json.dumps(r) + "\n")
            with open(args.out + ".cursor", "w") as fh:
                fh.write(str(len(records)))
            for p in paths:
                os.remove(p)
                os.remove(p + ".cursor")
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    _emit(args, {"out": args.out, "records": total},
          f"wrote {total} records to {args.out}")
    return 0


def cmd_pair(args):
    """Validate a pair given as JSON (file path or '-' for stdin)."""
    try:
        if args.path == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.path) as fh:
                data = json.load(fh)
        P = BinaryPair.from_json(data)
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad pair JSON: {exc}") from None
    try:
        rep = validate_pair(P)
    except PairError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"ok": rep.ok, "zeros_ones": rep.zeros_ones, "exact": rep.exact,
                 "failures": rep.failures},
          "\n".join([f"valid: {str(rep.ok).lower()}"] + rep.failures))
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="formring", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version",
                   version=f"%(prog)s {__version__} ({kernels.BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, form=True):
        sp.add_argument("--n", type=int, help="degree of the form")
        if form:
            sp.add_argument("--form", help="coefficients f0,...,fn")
            sp.add_argument("--universal", action="store_true",
                            help="use the universal form over Z[f0..fn]")
            sp.add_argument("--context", default="ZZ",
                            help="coefficient ring: ZZ, ZZ/m, or ZZ[a,b,...]")
        sp.add_argument("--format", choices=["json", "text"], default="text")
        return sp

    common(sub.add_parser("ring", help="multiplication table of R_f")).set_defaults(fn=cmd_ring)
    sp = common(sub.add_parser("ideal", help="action table of I_f^k"))
    sp.add_argument("--k", type=int)
    sp.set_defaults(fn=cmd_ideal)
    common(sub.add_parser("disc", help="both discriminants")).set_defaults(fn=cmd_disc)
    common(sub.add_parser("props", help="primitive / invertible / Gorenstein")).set_defaults(
        fn=cmd_props)
    sp = common(sub.add_parser("roundtrip", help="form -> pair -> form"))
    sp.add_argument("--random", action="store_true")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(fn=cmd_roundtrip)
    sp = common(sub.add_parser("verify", help="run a verification suite"), form=False)
    sp.add_argument("--suite", choices=["universal", "random", "oracle"], required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(fn=cmd_verify)
    sp = common(sub.add_parser("tabulate", help="JSONL records for all small forms"),
                form=False)
    sp.add_argument("--height", type=int)
    sp.add_argument("--out")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--timing", action="store_true", help="add per-record milliseconds")
    sp.set_defaults(fn=cmd_tabulate)
    sp = sub.add_parser("pair", help="validate a binary pair from JSON")
    sp.add_argument("path")
    sp.add_argument("--format", choices=["json", "text"], default="text")
    sp.set_defaults(fn=cmd_pair)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ContextError) as exc:
        print(f"formring: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
