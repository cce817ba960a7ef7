"""Command-line front end.

Every subcommand is a thin shell over the library: parse wire-format
arguments, run one computation or verification, emit deterministic output.
Partitions travel as comma-separated decreasing part lists ("" for the
empty partition), wreath class labels as `k1:c1,k2:c2,...` with each c a
partition of p, and irreducible labels for the wreath product as
`kappa1:mu1;kappa2:mu2;...` (omitted kappas receive the empty partition).

Computation commands (core, quotient, sign, gamma, char, wchar) print one
JSON object.  Table-like commands (table, isometry, decomp, mu) print CSV
or JSON Lines.  Verification commands print a JSON Lines report: a meta
line carrying the guard limits and the canonical orderings used, then one
record per checked identity with fields check / parameters / status /
witness.  Exit codes: 0 all checks pass, 1 a verification failed, 2
invalid arguments, 3 a guard limit was exceeded.

Composite p is accepted exactly where the mathematics never needs
primality: core, quotient, sign, gamma, isometry, and `verify main`.
Everything block-theoretic (heights, modular data, bicharacter work)
insists on a prime.  --jobs is accepted for interface stability but the
evaluators are single-process; determinism is unaffected.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import abacus, isometry, modular, partitions, perfect, symchar, wreath
from .partitions import (
    GuardExceeded,
    Partition,
    enumerate_partitions,
    format_partition,
    is_prime,
    parse_partition,
)
from .reporting import Report

# Subcommands (verify verbs count separately) that accept composite p.
COMPOSITE_OK = {"core", "quotient", "sign", "gamma", "isometry"}
COMPOSITE_OK_VERIFY = {"main"}

VERIFY_VERBS = (
    "main",
    "val",
    "heights",
    "unique",
    "centp",
    "diagram",
    "lemmaf",
    "sep",
    "type",
    "perfproj",
    "probe",
    "orth",
    "transfer",
)


def _plain(obj):
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return obj.numerator
        return str(obj)
    raise TypeError(f"not JSON serializable: {obj!r}")


def _json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=_plain)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list, rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} must be prime for this command")


def parse_class_label(text: str, p: int, w: int) -> wreath.ClassLabel:
    """Parse `k1:c1,k2:c2,...`; the empty string means the identity."""
    if text == "":
        return wreath.identity_label(p, w)
    pairs: list[tuple[int, Partition]] = []
    k: int | None = None
    parts: list[int] = []
    for token in text.split(","):
        if ":" in token:
            if k is not None:
                pairs.append((k, tuple(parts)))
            head, tail = token.split(":", 1)
            k = int(head)
            parts = [int(tail)] if tail else []
        else:
            if k is None:
                raise ValueError(f"label must start with 'k:part': {text!r}")
            parts.append(int(token))
    if k is not None:
        pairs.append((k, tuple(parts)))
    label = wreath.canonical_label(pairs)
    for kk, c in label:
        if kk < 1 or sum(c) != p or any(c[i] < c[i + 1] for i in range(len(c) - 1)) or min(c) < 1:
            raise ValueError(f"bad pair ({kk}, {c}) in label {text!r}")
    if sum(kk for kk, _ in label) != w:
        raise ValueError(f"label top lengths must sum to w={w}: {text!r}")
    return label


def format_class_label(label: wreath.ClassLabel) -> str:
    return ",".join(f"{k}:{format_partition(c)}" for k, c in label)


def parse_pmap(text: str, p: int, w: int) -> wreath.PMapLabel:
    """Parse `kappa:mu;...` into the dense assignment tuple."""
    kappas = enumerate_partitions(p)
    spot: dict[Partition, Partition] = {}
    if text:
        for item in text.split(";"):
            if ":" not in item:
                raise ValueError(f"assignment item needs 'kappa:mu': {item!r}")
            head, tail = item.split(":", 1)
            kappa = parse_partition(head)
            if sum(kappa) != p:
                raise ValueError(f"base label {head!r} is not a partition of {p}")
            if kappa in spot:
                raise ValueError(f"base label repeated: {head!r}")
            spot[kappa] = parse_partition(tail)
    phi = tuple(spot.get(kappa, ()) for kappa in kappas)
    if sum(sum(mu) for mu in phi) != w:
        raise ValueError(f"assignment sizes must sum to w={w}: {text!r}")
    return phi


def format_pmap(phi: wreath.PMapLabel, p: int) -> str:
    kappas = enumerate_partitions(p)
    return ";".join(
        f"{format_partition(kappa)}:{format_partition(mu)}"
        for kappa, mu in zip(kappas, phi)
        if mu
    )


def _gibr_col_text(psi, p: int) -> str:
    items = []
    for label, mu in zip(modular.brauer_labels(p), psi):
        if not mu:
            continue
        kind, data = label
        name = f"leg{data}" if kind == "leg" else f"d0[{format_partition(data)}]"
        items.append(f"{name}:{format_partition(mu)}")
    return ";".join(items)


def _guards(max_group_order: int) -> dict:
    return {
        "max_enum_n": partitions.MAX_ENUM_N,
        "max_table_n": symchar.MAX_TABLE_N,
        "max_wreath_p": wreath.MAX_P,
        "max_wreath_w": wreath.MAX_W,
        "max_group_order": max_group_order,
    }


def _report_text(rep: Report, params: dict, orderings: dict, max_group_order: int) -> str:
    meta = {
        "check": rep.check,
        "parameters": params,
        "status": "meta",
        "witness": {"guards": _guards(max_group_order), "orderings": orderings},
    }
    lines = [_json_line(meta)]
    lines.extend(_json_line(r) for r in rep.records)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands


def cmd_core(args) -> int:
    lam = parse_partition(args.partition)
    out = {
        "p": args.p,
        "partition": format_partition(lam),
        "core": format_partition(abacus.p_core(lam, args.p)),
        "weight": abacus.block_weight(lam, args.p),
    }
    _emit(_json_line(out) + "\n", args.out)
    return 0


def cmd_quotient(args) -> int:
    lam = parse_partition(args.partition)
    quot = abacus.p_quotient(lam, args.p)
    out = {
        "p": args.p,
        "partition": format_partition(lam),
        "quotient": [format_partition(q) for q in quot],
    }
    _emit(_json_line(out) + "\n", args.out)
    return 0


def cmd_sign(args) -> int:
    lam = parse_partition(args.partition)
    mu = parse_partition(args.over) if args.over is not None else abacus.p_core(lam, args.p)
    if not abacus.contains_p(lam, mu, args.p):
        raise ValueError("the first partition must p-contain the second")
    out = {
        "p": args.p,
        "partition": format_partition(lam),
        "over": format_partition(mu),
        "sign": abacus.p_sign(lam, mu, args.p),
    }
    _emit(_json_line(out) + "\n", args.out)
    return 0


def cmd_gamma(args) -> int:
    rho = parse_partition(args.core)
    if not abacus.is_core(rho, args.p):
        raise ValueError(f"{args.core!r} is not a {args.p}-core")
    out = {
        "p": args.p,
        "core": format_partition(rho),
        "gamma": list(abacus.runner_permutation(rho, args.p)),
        "circular_start": abacus.circularly_nondecreasing(rho, args.p),
    }
    _emit(_json_line(out) + "\n", args.out)
    return 0


def cmd_char(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu) if args.mu is not None else ()
    tau = parse_partition(args.cls)
    if sum(lam) != args.n:
        raise ValueError(f"--lambda must be a partition of n={args.n}")
    out = {
        "n": args.n,
        "lambda": format_partition(lam),
        "mu": format_partition(mu),
        "class": format_partition(tau),
        "value": symchar.mn_value(lam, mu, tau),
    }
    _emit(_json_line(out) + "\n", args.out)
    return 0


def cmd_table(args) -> int:
    n = args.n
    if n > symchar.MAX_TABLE_N:
        raise GuardExceeded(f"table guard: n={n} beyond {symchar.MAX_TABLE_N}")
    classes = enumerate_partitions(n)
    if args.p is not None:
        _require_prime(args.p)
        rho = parse_partition(args.core)
        if not abacus.is_core(rho, args.p):
            raise ValueError(f"{args.core!r} is not a {args.p}-core")
        if (n - sum(rho)) % args.p:
            raise ValueError("n minus the core size must be divisible by p")
        rows = abacus.partitions_with_core(n, rho, args.p)
    else:
        rows = enumerate_partitions(n)
    table = [[symchar.character_value(lam, tau) for tau in classes] for lam in rows]
    if args.format == "json":
        lines = [_json_line({"n": n, "classes": [format_partition(t) for t in classes]})]
        lines.extend(
            _json_line({"lambda": format_partition(lam), "values": vals})
            for lam, vals in zip(rows, table)
        )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        header = ["lambda"] + [format_partition(t) for t in classes]
        body = [[format_partition(lam)] + vals for lam, vals in zip(rows, table)]
        _emit(_csv_text(header, body), args.out)
    return 0


def cmd_wchar(args) -> int:
    _require_prime(args.p)
    phi = parse_pmap(args.phi, args.p, args.w)
    label = parse_class_label(args.cls, args.p, args.w)
    xi = wreath.zeta_irr(args.p, args.w, phi)
    out = {
        "p": args.p,
        "w": args.w,
        "phi": format_pmap(phi, args.p),
        "class": format_class_label(label),
        "value": xi.value(label),
    }
    _emit(_json_line(out) + "\n", args.out)
    return 0


def cmd_isometry(args) -> int:
    rho = parse_partition(args.core)
    rows = isometry.build_isometry(args.p, args.w, rho)
    lines = [
        _json_line(
            {
                "lambda": format_partition(lam),
                "sign": sign,
                "psi": [format_partition(q) for q in psi],
            }
        )
        for lam, sign, psi in rows
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_decomp(args) -> int:
    _require_prime(args.p)
    gibr = modular.enumerate_gibr(args.p, args.w)
    matrix = modular.decomposition_matrix(args.p, args.w)
    all_irr = wreath.enumerate_irr_wreath(args.p, args.w)
    principal = set(wreath.principal_block_filter(all_irr, args.p))
    cols = [_gibr_col_text(psi, args.p) for psi in gibr]
    pri_rows = [
        (format_pmap(phi, args.p), row)
        for phi, row in zip(all_irr, matrix)
        if phi in principal
    ]
    if args.format == "json":
        lines = [_json_line({"p": args.p, "w": args.w, "gibr": cols})]
        lines.extend(
            _json_line({"phi": name, "numbers": row}) for name, row in pri_rows
        )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        header = ["phi"] + cols
        body = [[name] + row for name, row in pri_rows]
        _emit(_csv_text(header, body), args.out)
    return 0


def cmd_mu(args) -> int:
    _require_prime(args.p)
    rho = parse_partition(args.core)
    if not abacus.is_core(rho, args.p):
        raise ValueError(f"{args.core!r} is not a {args.p}-core")
    rows = perfect.build_mu(args.p, args.w, rho)
    n = args.p * args.w + sum(rho)
    classes = enumerate_partitions(n)
    labels = wreath.enumerate_wreath_classes(args.p, args.w)
    if args.format == "json":
        lines = [
            _json_line(
                {
                    "p": args.p,
                    "w": args.w,
                    "core": format_partition(rho),
                    "classes": [format_partition(t) for t in classes],
                    "labels": [format_class_label(l) for l in labels],
                }
            )
        ]
        lines.extend(
            _json_line({"class": format_partition(tau), "values": row})
            for tau, row in zip(classes, rows)
        )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        header = ["class"] + [format_class_label(l) for l in labels]
        body = [[format_partition(tau)] + row for tau, row in zip(classes, rows)]
        _emit(_csv_text(header, body), args.out)
    return 0


def _verify_orderings(what: str, args, rho: Partition) -> dict:
    p, w = args.p, args.w
    n = p * w + sum(rho)
    orderings: dict = {}
    if what in {"main", "val", "heights", "unique", "diagram", "lemmaf", "sep", "type", "perfproj", "probe", "transfer"}:
        orderings["block"] = [
            format_partition(lam) for lam in symchar.irr_in_block(n, p, rho)
        ]
    if what in {"sep", "type", "perfproj", "probe", "transfer"}:
        orderings["sn_classes"] = [format_partition(t) for t in enumerate_partitions(n)]
    if what not in {"heights"}:
        orderings["wreath_classes"] = [
            format_class_label(l) for l in wreath.enumerate_wreath_classes(p, w)
        ]
    if what in {"orth"}:
        orderings["gibr"] = [
            _gibr_col_text(psi, p) for psi in modular.enumerate_gibr(p, w)
        ]
        orderings["regular_classes"] = [
            format_class_label(l) for l in modular.regular_wreath_classes(p, w)
        ]
    return orderings


def cmd_verify(args) -> int:
    what = args.what
    if what not in COMPOSITE_OK_VERIFY:
        _require_prime(args.p)
    rho = parse_partition(args.core)
    p, w, e = args.p, args.w, args.e
    if what == "main":
        rep = isometry.verify_main(p, w, rho)
    elif what == "val":
        rep = isometry.verify_val(p, w)
    elif what == "heights":
        rep = isometry.verify_heights(p, w, rho)
    elif what == "unique":
        rep = isometry.verify_uniqueness(p, w)
    elif what == "centp":
        rep = isometry.verify_centp(p, w, e, args.max_group_order)
    elif what == "diagram":
        rep = isometry.verify_diagram(p, w, rho)
    elif what == "lemmaf":
        rep = isometry.verify_lemma_f(p, w)
    elif what == "sep":
        rep = perfect.verify_sep(p, w, rho)
    elif what == "type":
        rep = perfect.verify_type(p, w, rho)
    elif what == "perfproj":
        rep = perfect.verify_perfproj(p, w, rho)
    elif what == "probe":
        rep = perfect.perfectness_probe(p, w, rho)
    elif what == "orth":
        rep = modular.verify_orth(p, w)
    elif what == "transfer":
        rep = perfect.verify_transfer(p, w, rho)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown verification: {what}")
    params = {"p": p, "w": w, "e": e, "core": format_partition(rho)}
    if what == "centp":
        orderings = {
            "wreath_classes": [
                format_class_label(l) for l in wreath.enumerate_wreath_classes(p, w)
            ]
        }
    else:
        orderings = _verify_orderings(what, args, rho)
    _emit(_report_text(rep, params, orderings, args.max_group_order), args.out)
    return 0 if rep.ok else 1


# ------------------------------------------------------------------ parser


def _add_common(sub, *names):
    if "p" in names:
        sub.add_argument("--p", type=int, required=True, help="base cycle length / characteristic")
    if "w" in names:
        sub.add_argument("--w", type=int, required=True, help="top degree / block weight")
    if "out" in names:
        sub.add_argument("--out", help="write output to this file instead of stdout")
    if "format" in names:
        sub.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockiso",
        description="Exact block/wreath character computations and verifications.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("core", help="p-core of a partition")
    _add_common(s, "p", "out")
    s.add_argument("--partition", required=True, help="partition wire format")
    s.set_defaults(func=cmd_core)

    s = subs.add_parser("quotient", help="p-quotient of a partition")
    _add_common(s, "p", "out")
    s.add_argument("--partition", required=True)
    s.set_defaults(func=cmd_quotient)

    s = subs.add_parser("sign", help="bead-push sign between p-compatible partitions")
    _add_common(s, "p", "out")
    s.add_argument("--partition", required=True)
    s.add_argument("--over", help="inner partition (default: the p-core)")
    s.set_defaults(func=cmd_sign)

    s = subs.add_parser("gamma", help="runner permutation of a p-core")
    _add_common(s, "p", "out")
    s.add_argument("--core", required=True)
    s.set_defaults(func=cmd_gamma)

    s = subs.add_parser("char", help="one symmetric-group (skew) character value")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", dest="mu")
    s.add_argument("--class", dest="cls", required=True)
    _add_common(s, "out")
    s.set_defaults(func=cmd_char)

    s = subs.add_parser("table", help="symmetric-group character table, optionally one block")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, help="restrict rows to the block of --core")
    s.add_argument("--core", default="", help="block core (with --p)")
    _add_common(s, "out", "format")
    s.set_defaults(func=cmd_table)

    s = subs.add_parser("wchar", help="one wreath-product irreducible character value")
    _add_common(s, "p", "w", "out")
    s.add_argument("--phi", required=True, help="assignment kappa:mu;... over base labels")
    s.add_argument("--class", dest="cls", required=True, help="label k1:c1,k2:c2,...")
    s.set_defaults(func=cmd_wchar)

    s = subs.add_parser("isometry", help="signed bijection table for one block")
    _add_common(s, "p", "w", "out")
    s.add_argument("--core", default="", help="block core")
    s.set_defaults(func=cmd_isometry)

    s = subs.add_parser("verify", help="run one verification suite")
    s.add_argument("what", choices=VERIFY_VERBS)
    _add_common(s, "p", "w", "out")
    s.add_argument("--e", type=int, default=0, help="extra points fixed by the top group")
    s.add_argument("--core", default="", help="block core")
    s.add_argument(
        "--max-group-order",
        type=int,
        default=isometry.MAX_GROUP_ORDER,
        help="brute-force guard for permutation scans",
    )
    s.add_argument("--jobs", type=int, default=1, help="accepted; evaluation is sequential")
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("decomp", help="decomposition matrix of the wreath principal block")
    _add_common(s, "p", "w", "out", "format")
    s.set_defaults(func=cmd_decomp)

    s = subs.add_parser("mu", help="bicharacter matrix of the block bijection")
    _add_common(s, "p", "w", "out", "format")
    s.add_argument("--core", default="", help="block core")
    s.set_defaults(func=cmd_mu)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
