"""Command-line front end.

Subcommands: tau, perm, enumerate, count, verify, lr, spherical.
Exit codes: 0 success, 1 verification failure, 2 parse error, 3 invalid
chain set, 4 rank bound exceeded.  Weights are printed in doubled
coordinates wherever the standard value could be half-integral; halve to
recover the standard scale.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .chains import (
    ChainSet,
    OverlappingChainsError,
    extract_involution,
    involves_all_simple_reflections,
    is_interlaced,
    is_involution,
    lambda_doubled,
)
from .lr import lr_coefficient
from .scattered import build_record, count, display_order, generate, spherical_family
from .spin import SpinResult, lowest_k_type, spin_lowest_k_type, verify_spin_identity
from .verify import batch_multiplicities, default_workers, run_verification
from .weights import to_fundamental

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_INVALID_CHAINS = 3
EXIT_BOUND = 4

ENUM_CAP = 16
ENUM_MULT_CAP = 8
VERIFY_CAP = 12


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_chains(cs: ChainSet) -> str:
    return " ".join("{" + ",".join(str(e) for e in c.entries()) + "}" for c in cs.chains)


def _fmt_trace(res: SpinResult) -> str:
    if not res.trace:
        return "none"
    parts = []
    for app in sorted(res.trace):
        letter = "q" if app.kind == "c" else "p"
        parts.append(f"({app.kind}) T{app.i},T{app.j} {letter}={app.param}")
    return "; ".join(parts)


def _load_chain_set(path: str) -> ChainSet | int:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return ChainSet.from_json(text)
    except OverlappingChainsError as exc:
        print(f"error: invalid chain set: {exc}", file=sys.stderr)
        return EXIT_INVALID_CHAINS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def _cmd_tau(args) -> int:
    cs = _load_chain_set(args.file)
    if isinstance(cs, int):
        return cs
    res = spin_lowest_k_type(cs)
    print(f"chains (canonical order): {_fmt_chains(res.chains)}")
    print(f"2*lambda = {_fmt_vec(lambda_doubled(cs))}")
    print(f"lowest K-type = {_fmt_vec(x // 2 for x in lowest_k_type(cs))}")
    print(f"rules: {_fmt_trace(res)}")
    print(f"tau = {_fmt_vec(x // 2 for x in res.tau)}")
    print(f"2*{{tau-rho}} = {_fmt_vec(res.gamma)}")
    verdict = "PASS" if verify_spin_identity(res) else "FAIL"
    print(f"identity {{tau-rho}} = 2*lambda - rho: {verdict}")
    return EXIT_OK if verdict == "PASS" else EXIT_VERIFY_FAIL


def _cmd_perm(args) -> int:
    cs = _load_chain_set(args.file)
    if isinstance(cs, int):
        return cs
    s = extract_involution(cs)
    print(f"s = {_fmt_vec(s)}")
    print(f"involution: {'yes' if is_involution(s) else 'no'}")
    print(f"involves all simple reflections: {'yes' if involves_all_simple_reflections(s) else 'no'}")
    print(f"interlaced: {'yes' if is_interlaced(cs) else 'no'}")
    return EXIT_OK


def _records(n: int, with_multiplicity: bool):
    sets = [display_order(cs) for cs in generate(n)]
    sets.sort(key=lambda cs: cs.to_lists())
    records = [build_record(cs) for cs in sets]
    if with_multiplicity:
        mults = batch_multiplicities(sets, default_workers())
        records = [dataclasses.replace(r, multiplicity=m) for r, m in zip(records, mults)]
    return records


def _cmd_enumerate(args) -> int:
    cap = ENUM_MULT_CAP if args.with_multiplicity else ENUM_CAP
    if not 2 <= args.n <= cap:
        print(f"error: n must satisfy 2 <= n <= {cap}", file=sys.stderr)
        return EXIT_BOUND
    records = _records(args.n, args.with_multiplicity)
    if args.json:
        for rec in records:
            print(json.dumps(rec.as_dict()))
        return EXIT_OK
    print("n | chains | 2lambda' | s | tau | 2gamma | u-small | mult")
    print("(fundamental coefficients of 2lambda' and the vector 2gamma are doubled; halve for standard scale)")
    for rec in records:
        mult = "-" if rec.multiplicity is None else str(rec.multiplicity)
        print(
            f"{rec.n} | {_fmt_chains(rec.chains)} | {list(rec.lambda2_fund)} | "
            f"{_fmt_vec(rec.s)} | {list(rec.tau_fund)} | {_fmt_vec(rec.gamma)} | "
            f"{'yes' if rec.u_small else 'no'} | {mult}"
        )
    return EXIT_OK


def _cmd_count(args) -> int:
    if not 2 <= args.n <= ENUM_CAP:
        print(f"error: n must satisfy 2 <= n <= {ENUM_CAP}", file=sys.stderr)
        return EXIT_BOUND
    print(count(args.n))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if not 2 <= args.n <= VERIFY_CAP:
        print(f"error: n must satisfy 2 <= n <= {VERIFY_CAP}", file=sys.stderr)
        return EXIT_BOUND
    lines, ok = run_verification(args.n, default_workers())
    for line in lines:
        print(line)
    print(f"RESULT: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _parse_partition(text: str):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc


def _cmd_lr(args) -> int:
    try:
        outer = _parse_partition(args.outer)
        inner = _parse_partition(args.inner)
        weight = _parse_partition(args.weight)
        value = lr_coefficient(outer, inner, weight)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(value)
    return EXIT_OK


def _cmd_spherical(args) -> int:
    try:
        cs = spherical_family(args.a, args.b)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    res = spin_lowest_k_type(cs)
    print(f"chains: {_fmt_chains(display_order(cs))}")
    print(f"2*lambda = {_fmt_vec(lambda_doubled(cs))}")
    print(f"2lambda' fundamental = {list(to_fundamental(lambda_doubled(cs)))}")
    print(f"lowest K-type = {_fmt_vec(x // 2 for x in lowest_k_type(cs))}")
    print(f"tau = {_fmt_vec(x // 2 for x in res.tau)}")
    print(f"s = {_fmt_vec(extract_involution(cs))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinchains", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", help="spin-lowest K-type of a chain set")
    p.add_argument("-f", "--file", required=True, help="JSON file {\"chains\": [[...], ...]}")
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("perm", help="involution carried by a chain set")
    p.add_argument("-f", "--file", required=True)
    p.set_defaults(func=_cmd_perm)

    p = sub.add_parser("enumerate", help="all scattered parameters of SL(n)")
    p.add_argument("-n", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="one JSON record per line")
    fmt.add_argument("--table", action="store_true", help="human-readable table (default)")
    p.add_argument("--with-multiplicity", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="number of scattered parameters of SL(n)")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="run the invariant suite up to rank n")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--weight", required=True)
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("spherical", help="the two-chain family with trivial lowest K-type")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.set_defaults(func=_cmd_spherical)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
