"""Command-line front end.

Verbs: E, P, f, F, count, word, inv, fillings, walks, cst, verify.
Output is byte-deterministic for a fixed command; JSON documents carry
the schema tag "macdonald-lab/1".  Exit codes: 0 success, 1 verification
failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import affine, diagrams, macdonald, verify
from . import permutations as fperm
from .errors import MacLabError

SCHEMA = "macdonald-lab/1"


def _thread_cap() -> int:
    """Honor MACLAB_THREADS as an upper bound on parallelism.

    All computation is currently serial and deterministic, so any
    positive cap is satisfied trivially; the variable is validated here
    so misconfiguration fails fast.
    """
    raw = os.environ.get("MACLAB_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise MacLabError(f"MACLAB_THREADS must be a positive integer, got {raw!r}")
    if cap < 1:
        raise MacLabError(f"MACLAB_THREADS must be a positive integer, got {raw!r}")
    return 1


def _parse_ints(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit_poly(args, verb, mu, poly, extra=None):
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": verb, "n": len(mu), "mu": list(mu)}
        if extra:
            doc.update(extra)
        doc["terms"] = poly.to_json_obj()
        print(json.dumps(doc, separators=(",", ":")))
    elif args.format == "latex":
        print(poly.to_string(latex=True))
    else:
        print(poly.to_string())
    return 0


def _check_n(args, vec, what):
    if len(vec) != args.n:
        raise MacLabError(f"{what} must have length n = {args.n}")
    return vec


def cmd_E(args):
    mu = _check_n(args, args.mu, "--mu")
    if args.z is not None:
        z = _check_n(args, args.z, "--z")
        res = macdonald.compute_E_rel(mu, z)
        return _emit_poly(args, "E", mu, res.poly, {"z": list(z)})
    return _emit_poly(args, "E", mu, macdonald.compute_E(mu).poly)


def cmd_P(args):
    lam = _check_n(args, args.mu, "--lam")
    method = args.method or "sum-rel"
    if method == "cst":
        res = diagrams.cst_expand(tuple(x for x in lam if x), args.n)
        return _emit_poly(args, "P", lam, res.poly, {"method": "cst"})
    res = macdonald.compute_P(lam, method)
    return _emit_poly(args, "P", lam, res.poly, {"method": method})


def cmd_f(args):
    mu = _check_n(args, args.mu, "--mu")
    return _emit_poly(args, "f", mu, macdonald.compute_f(mu).poly)


def cmd_F(args):
    mu = _check_n(args, args.mu, "--mu")
    res = macdonald.compute_F(mu)
    c = macdonald.symmetrization_constant(mu)
    return _emit_poly(args, "F", mu, res.poly, {"symmetrization_constant": c.to_json_obj()})


def cmd_count(args):
    mu = _check_n(args, args.mu, "--mu")
    val = diagrams.count(mu, args.what)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "command": "count",
                    "n": args.n,
                    "mu": list(mu),
                    "what": args.what,
                    "value": str(val),
                },
                separators=(",", ":"),
            )
        )
    else:
        print(val)
    return 0


def cmd_word(args):
    mu = _check_n(args, args.mu, "--mu")
    word = (
        affine.box_greedy_word(mu)
        if args.kind == "box"
        else affine.column_greedy_word(mu)
    )
    el, reduced = affine.word_eval(word, args.n)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "word",
            "n": args.n,
            "mu": list(mu),
            "kind": args.kind,
            "word": list(word),
            "window": list(el.window),
            "reduced": reduced,
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(" ".join(word))
    return 0


def cmd_inv(args):
    mu = _check_n(args, args.mu, "--mu")
    u = affine.u_element(mu)
    roots = u.inversions()
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "inv",
            "n": args.n,
            "mu": list(mu),
            "window": list(u.window),
            "length": u.length(),
            "inversions": [
                {"i": r.i, "j": r.j, "level": r.level}
                for r in sorted(roots, key=lambda r: (r.i, r.j, r.level))
            ],
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        for r in sorted(roots, key=lambda r: (r.i, r.j, r.level)):
            print(r)
    return 0


def cmd_fillings(args):
    mu = _check_n(args, args.mu, "--mu")
    z = _check_n(args, args.z, "--z") if args.z else fperm.identity(args.n)
    fills = diagrams.enumerate_fillings(mu, z, args.kind)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "fillings",
            "n": args.n,
            "mu": list(mu),
            "z": list(z),
            "kind": args.kind,
            "count": len(fills),
            "fillings": [T.to_json_obj() for T in fills],
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        for T in fills:
            print(" ".join(str(v) for v in T.values))
    return 0


def cmd_walks(args):
    mu = _check_n(args, args.mu, "--mu")
    z = _check_n(args, args.z, "--z") if args.z else fperm.identity(args.n)
    walks = diagrams.enumerate_walks(mu, z)
    if args.format == "json":
        body = []
        for w in walks:
            geo = diagrams.walk_geometry(w)
            body.append(
                {
                    "shorthand": w.shorthand(),
                    "folds": [bool(b) for b in w.folds],
                    "path": geo.to_json_obj(),
                }
            )
        doc = {
            "schema": SCHEMA,
            "command": "walks",
            "n": args.n,
            "mu": list(mu),
            "z": list(z),
            "count": len(walks),
            "walks": body,
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        for w in walks:
            print(w.shorthand())
    return 0


def cmd_cst(args):
    lam = _check_n(args, args.mu, "--lam")
    res = diagrams.cst_expand(tuple(x for x in lam if x), args.n)
    return _emit_poly(args, "cst", lam, res.poly)


def cmd_verify(args):
    try:
        results = verify.run_suite(args.suite, args.n)
    except KeyError:
        print(f"unknown suite {args.suite!r}", file=sys.stderr)
        return 2
    failed = 0
    for name, ok, detail in results:
        if not ok:
            failed += 1
            msg = f"FAIL {name}" + (f": {detail}" if detail else "")
            print(msg, file=sys.stderr)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="maclab",
        description="Type GL_n Macdonald polynomials in exact arithmetic",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, mu_flag="--mu", with_z=False):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument(mu_flag, dest="mu", type=_parse_ints, required=True)
        if with_z:
            sp.add_argument("--z", type=_parse_ints, default=None)
        sp.add_argument(
            "--format", choices=("json", "latex", "plain"), default="plain"
        )

    sp = sub.add_parser("E", help="nonsymmetric E_mu (optionally relative E_mu^z)")
    common(sp, with_z=True)
    sp.set_defaults(func=cmd_E)

    sp = sub.add_parser("P", help="symmetric P_lambda")
    common(sp, mu_flag="--lam")
    sp.add_argument("--method", choices=("sum-rel", "symmetrize", "cst"))
    sp.set_defaults(func=cmd_P)

    sp = sub.add_parser("f", help="KZ-family member f_mu")
    common(sp)
    sp.set_defaults(func=cmd_f)

    sp = sub.add_parser("F", help="symmetrization F_mu = 1_0 E_mu")
    common(sp)
    sp.set_defaults(func=cmd_F)

    sp = sub.add_parser("count", help="exact counts (aw, naf, cst, t, c, r)")
    common(sp)
    sp.add_argument(
        "--what", choices=("aw", "naf", "cst", "t", "c", "r"), required=True
    )
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("word", help="reduced word for u_mu")
    common(sp)
    sp.add_argument("--kind", choices=("box", "column"), default="box")
    sp.set_defaults(func=cmd_word)

    sp = sub.add_parser("inv", help="inversions of u_mu")
    common(sp)
    sp.set_defaults(func=cmd_inv)

    sp = sub.add_parser("fillings", help="nonattacking fillings / queue tableaux")
    common(sp, with_z=True)
    sp.add_argument(
        "--kind", choices=("nonattacking", "queue"), default="nonattacking"
    )
    sp.set_defaults(func=cmd_fillings)

    sp = sub.add_parser("walks", help="alcove walks over the box-greedy word")
    common(sp, with_z=True)
    sp.set_defaults(func=cmd_walks)

    sp = sub.add_parser("cst", help="column-strict-tableau expansion of P_lambda")
    common(sp, mu_flag="--lam")
    sp.set_defaults(func=cmd_cst)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument(
        "--suite",
        choices=("eigen", "kz", "haction", "counts", "golden", "all"),
        required=True,
    )
    sp.add_argument("--n", type=int, default=3)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_cap()
        return args.func(args)
    except MacLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
