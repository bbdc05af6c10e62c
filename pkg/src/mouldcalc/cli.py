"""Command-line front end.

Exit status: 0 on success or a passing check, 1 when a predicate or an
identity suite fails (the witness is printed as JSON), 2 on usage, parse
or I/O errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import dihedral as dih
from .exceptions import MouldError
from .flexions import ari, preari
from .groups import parse_group
from .kv import is_KV1, is_KV2, is_LKV1, is_LKV2, krv_member, lkrv_member, ma
from .lie import is_lie
from .moulds import Check, Mould, mantar, mu, neg, push, set_max_depth, swap, teru
from .parsing import parse_lie
from .serialization import (basis_document, collection_to_json, load_document,
                            mould_to_json)
from .spaces import SpaceSpec, ambient_dimension, monomials, space_basis, space_dimension
from .symmetries import (is_alternal, is_bialternal, is_mantar_invariant, is_neg_invariant,
                         is_pus_neutral, is_push_invariant, satisfies_distribution, satisfies_senary)
from .verify import SUITES, verify_suite

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


MOULD_CHECKS = {
    "alternal": is_alternal,
    "bialternal": is_bialternal,
    "push": lambda M: is_push_invariant(M if M.side == "u" else swap(M)),
    "pusnu": lambda M: is_pus_neutral(M if M.side == "v" else swap(M)),
    "senary": lambda M: satisfies_senary(M if M.side == "u" else swap(M)),
    "distribution": lambda M: satisfies_distribution(M if M.side == "u" else swap(M)),
    "mantar": is_mantar_invariant,
    "neg": is_neg_invariant,
}

COLLECTION_CHECKS = {
    "harmonic": dih.check_harmonic,
    "shuffle": dih.check_shuffle,
    "distribution": dih.check_distribution,
    "dihedral": dih.check_dihedral,
}

LIE_CHECKS = {"lie", "kv1", "kv2", "krv", "lkv1", "lkv2", "lkrv"}

UNARY = {"swap": swap, "push": push, "teru": teru, "mantar": mantar, "neg": neg}
BINARY = {"ari": ari, "mu": mu, "preari": preari}


def _parser():
    p = argparse.ArgumentParser(prog="mouldcalc", description="Exact mould calculus.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="trivial", help="c<N>, c<N>x<M>, ... or trivial")
    common.add_argument("--weight", help="weight, or a range a:b")
    common.add_argument("--depth", help="depth, or a range a:b")
    common.add_argument("--space", default="ALAL")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=20)
    common.add_argument("--max-depth", type=int, dest="max_depth")
    common.add_argument("--out")
    common.add_argument("--format", choices=("json", "table"), default="json")
    sub = p.add_subparsers(dest="verb", required=True)

    for verb in ("ari", "mu"):
        s = sub.add_parser(verb, parents=[common], help=f"{verb} of two moulds")
        s.add_argument("files", nargs=2)
    for verb in ("swap", "push", "teru"):
        s = sub.add_parser(verb, parents=[common], help=f"{verb} of a mould")
        s.add_argument("files", nargs=1)

    s = sub.add_parser("check", parents=[common], help="membership predicate")
    s.add_argument("predicate", choices=sorted(set(MOULD_CHECKS) | set(COLLECTION_CHECKS) | LIE_CHECKS))
    s.add_argument("target", help="JSON file, or a Lie expression for Lie predicates")

    sub.add_parser("dim", parents=[common], help="dimension of a space slot")
    sub.add_parser("basis", parents=[common], help="basis of a space slot")

    s = sub.add_parser("ma", parents=[common], help="mould of a Lie expression")
    s.add_argument("expression")

    s = sub.add_parser("dihedral", parents=[common], help="dihedral collections")
    s.add_argument("action", nargs="?", default="basis",
                   choices=("basis", "dim", "to-mould", "from-mould"))
    s.add_argument("file", nargs="?")
    s.add_argument("--distribution", action="store_true", help="add the distribution relations")
    s.add_argument("--double-shuffle", action="store_true", dest="double_shuffle",
                   help="harmonic and shuffle relations only")

    s = sub.add_parser("verify", parents=[common], help="identity suite")
    s.add_argument("suite", choices=sorted(SUITES))
    return p


def _range(text, name, required=True):
    if text is None:
        if required:
            raise UsageError(f"--{name} is required")
        return None
    try:
        if ":" in text:
            a, b = text.split(":")
            return list(range(int(a), int(b) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"--{name} must be an integer or a range a:b") from None


def _single(text, name):
    vals = _range(text, name)
    if len(vals) != 1:
        raise UsageError(f"--{name} must be a single integer here")
    return vals[0]


def _read(path):
    try:
        with open(path) as fh:
            return load_document(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None


def _read_mould(path):
    obj = _read(path)
    if not isinstance(obj, Mould):
        raise UsageError(f"{path} does not hold a single mould")
    return obj


class _Out:
    def __init__(self, args, stream):
        self.path = args.out
        self.stream = stream
        self.fmt = args.format
        self.chunks = []

    def json(self, obj):
        self.chunks.append(json.dumps(obj, indent=2, default=str))

    def line(self, text):
        self.chunks.append(text)

    def flush(self):
        text = "\n".join(self.chunks) + ("\n" if self.chunks else "")
        if self.path:
            try:
                with open(self.path, "w") as fh:
                    fh.write(text)
            except OSError as exc:
                raise UsageError(f"cannot write {self.path}: {exc.strerror}") from None
        else:
            self.stream.write(text)


def _report_check(out, name, chk):
    if out.fmt == "table":
        out.line(f"{name}: {'pass' if chk else 'FAIL'}")
        if not chk:
            out.line(json.dumps(chk.witness, default=str))
    else:
        doc = {"check": name, "passed": bool(chk)}
        if chk.witness is not None:
            doc["witness"] = chk.witness
        out.json(doc)
    return 0 if chk else 1


def _lie_check(pred, F, depth):
    if pred == "lie":
        return Check(is_lie(F), None)
    if pred == "kv1":
        return is_KV1(F)
    if pred == "kv2":
        return is_KV2(F)
    if pred == "krv":
        return Check(krv_member(F), None)
    if depth is None:
        depth = F.min_depth()
    if pred == "lkv1":
        return is_LKV1(F, depth)
    if pred == "lkv2":
        return is_LKV2(F, depth)
    return Check(lkrv_member(F, depth), None)


def _do_check(args, out):
    pred = args.predicate
    if pred in LIE_CHECKS:
        G = parse_group(args.group)
        text = args.target
        if os.path.isfile(text):
            with open(text) as fh:
                text = fh.read()
        F = parse_lie(text, G)
        depth = _single(args.depth, "depth") if args.depth else None
        return _report_check(out, pred, _lie_check(pred, F, depth))
    obj = _read(args.target)
    if isinstance(obj, dih.DihedralCollection):
        if pred not in COLLECTION_CHECKS:
            raise UsageError(f"{pred!r} does not apply to dihedral collections")
        return _report_check(out, pred, COLLECTION_CHECKS[pred](obj))
    if not isinstance(obj, Mould):
        raise UsageError("check needs a single mould or collection")
    if pred not in MOULD_CHECKS:
        raise UsageError(f"{pred!r} does not apply to moulds")
    return _report_check(out, pred, MOULD_CHECKS[pred](obj))


def _do_dim(args, out):
    G = parse_group(args.group)
    weights = _range(args.weight, "weight")
    depths = _range(args.depth, "depth")
    rows = []
    for w in weights:
        for d in depths:
            if d < 1 or w < d:
                continue
            spec = SpaceSpec(args.space, G, w, d)
            rows.append((w, d, space_dimension(spec), ambient_dimension(spec)))
    if out.fmt == "table":
        out.line(f"{'w':>4} {'d':>4} {'dim':>6} {'ambient':>8}")
        for w, d, n, a in rows:
            out.line(f"{w:>4} {d:>4} {n:>6} {a:>8}")
    elif len(rows) == 1:
        out.line(str(rows[0][2]))
    else:
        out.json([{"weight": w, "depth": d, "dimension": n, "ambient_dimension": a}
                  for w, d, n, a in rows])
    return 0


def _do_basis(args, out):
    G = parse_group(args.group)
    spec = SpaceSpec(args.space, G, _single(args.weight, "weight"), _single(args.depth, "depth"))
    basis = space_basis(spec)
    out.json(basis_document(spec.to_json(), len(basis), ambient_dimension(spec), basis))
    return 0


def _do_dihedral(args, out):
    G = parse_group(args.group)
    if args.action in ("to-mould", "from-mould"):
        if not args.file:
            raise UsageError(f"dihedral {args.action} needs a JSON file")
        obj = _read(args.file)
        if args.action == "to-mould":
            if not isinstance(obj, dih.DihedralCollection):
                raise UsageError("to-mould needs a dihedral collection")
            out.json(mould_to_json(dih.to_mould(obj)))
        else:
            if not isinstance(obj, Mould):
                raise UsageError("from-mould needs a mould")
            w, m = _single(args.weight, "weight"), _single(args.depth, "depth")
            out.json(collection_to_json(dih.from_mould(obj, w, m)))
        return 0
    w, m = _single(args.weight, "weight"), _single(args.depth, "depth")
    if args.double_shuffle:
        basis = dih.double_shuffle_basis(w, m, G)
    else:
        basis = dih.dihedral_space_basis(w, m, G, args.distribution)
    ambient = G.order ** m * len(monomials(m, w - m)) if w >= m else 0
    if args.action == "dim":
        out.line(str(len(basis)))
        return 0
    header = {"space": "double_shuffle" if args.double_shuffle else "dihedral",
              "group": G.to_json(), "weight": w, "depth": m, "distribution": bool(args.distribution)}
    out.json(basis_document(header, len(basis), ambient, basis))
    return 0


def _do_verify(args, out):
    params = {}
    if args.max_depth is not None:
        params["max_depth"] = args.max_depth
    if args.weight is not None:
        params["weight"] = _single(args.weight, "weight")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = verify_suite(args.suite, parse_group(args.group), trials=args.trials, seed=args.seed, **params)
    if out.fmt == "table":
        out.line(f"{rep.name}: {'pass' if rep.passed else 'FAIL'} ({rep.trials} checks, {rep.failures} failures)")
        if rep.witness is not None:
            out.line(json.dumps(rep.witness, default=str))
    else:
        out.json(rep.to_json())
    for w in rep.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return 0 if rep.passed else 1


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args, stdout)
    try:
        if args.max_depth is not None and args.verb != "verify":
            set_max_depth(args.max_depth)
        if args.verb in BINARY:
            A, B = (_read_mould(f) for f in args.files)
            out.json(mould_to_json(BINARY[args.verb](A, B)))
            code = 0
        elif args.verb in UNARY:
            out.json(mould_to_json(UNARY[args.verb](_read_mould(args.files[0]))))
            code = 0
        elif args.verb == "check":
            code = _do_check(args, out)
        elif args.verb == "dim":
            code = _do_dim(args, out)
        elif args.verb == "basis":
            code = _do_basis(args, out)
        elif args.verb == "ma":
            G = parse_group(args.group)
            h = parse_lie(args.expression, G)
            out.json(mould_to_json(ma(h)))
            code = 0
        elif args.verb == "dihedral":
            code = _do_dihedral(args, out)
        else:
            code = _do_verify(args, out)
        out.flush()
        return code
    except (UsageError, ValueError, KeyError) as exc:
        print(f"mouldcalc: error: {exc}", file=sys.stderr)
        return 2
    except MouldError as exc:
        print(f"mouldcalc: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
