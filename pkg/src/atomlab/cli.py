"""Command-line front end.

Subcommands: `atom` and `lengths` answer questions about one target element,
`verify` runs the registered claim suites, and `experiment` runs the sampling
studies.  Output is line-delimited JSON by default, a plain table with
--table.  Exit codes: 0 conclusive/pass, 1 usage or parse error, 2
inconclusive (a search budget ran out), 3 verification failure.

Targets are set literals like "{0,1,2}", ideal literals like
"<X^2, X Y, Y^2>", or family names:

    a_5  b_3  c_7                     ideal families (also "a5", "b3", "c4")
    I_B --minimal 2                   ideal built from a seed sequence
    I_C --seq 1,3,9,22
    tilde_b --minimal 3 --r 3
    A --minimal 2   B --seq 1,3,7   C --minimal 3     set-level families

Seed sequences come either from --minimal n (the smallest valid sequence
for that n) or from an explicit --seq a1,a2,...,a{n+1}.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import shlex
import sys
from fractions import Fraction
from typing import Optional

from . import claims, families, monideal, natset
from .engine import (Budget, SearchBudgetExceeded, monomial_engine,
                     sumset_engine)
from .monideal import MonIdeal
from .natset import NatSet

__all__ = ["entry", "main"]


class _UsageError(Exception):
    pass


# Direct queries get a finite default budget so an oversized target answers
# "inconclusive" instead of running unattended; verify defers to per-claim
# defaults.  Override with --budget-nodes (0 lifts the cap).
_DEFAULT_NODES = 1_000_000


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# -- target mini-language ----------------------------------------------------

_IDEAL_FAMILY = re.compile(r"([abc])_?([0-9]+)\Z")


def _parse_target_opts(tokens: list[str]) -> dict:
    opts: dict = {}
    i = 0
    while i < len(tokens):
        flag = tokens[i]
        if flag not in ("--minimal", "--seq", "--r"):
            raise _UsageError(f"unexpected token {flag!r} in target")
        if i + 1 >= len(tokens):
            raise _UsageError(f"{flag} needs a value")
        value = tokens[i + 1]
        try:
            if flag == "--seq":
                opts["seq"] = [int(p) for p in value.split(",") if p.strip()]
            else:
                opts[flag[2:]] = int(value)
        except ValueError:
            raise _UsageError(f"bad value {value!r} for {flag}") from None
        i += 2
    return opts


def _resolve_sequence(opts: dict) -> families.SumSequence:
    has_minimal = "minimal" in opts
    has_seq = "seq" in opts
    if has_minimal == has_seq:
        raise _UsageError("give exactly one of --minimal n or --seq a1,a2,...")
    try:
        if has_minimal:
            return families.minimal_sequence(opts["minimal"])
        return families.SumSequence(tuple(opts["seq"]))
    except (ValueError, OverflowError) as exc:
        raise _UsageError(str(exc)) from None


def parse_target(text: str):
    """Parse a target string into ("set", NatSet) or ("ideal", MonIdeal)."""
    try:
        tokens = shlex.split(text)
    except ValueError as exc:
        raise _UsageError(f"cannot tokenize target: {exc}") from None
    if not tokens:
        raise _UsageError("empty target")
    head, rest = tokens[0], tokens[1:]
    if head.startswith("{"):
        try:
            return "set", NatSet.from_text(" ".join(tokens))
        except (ValueError, TypeError, OverflowError) as exc:
            raise _UsageError(str(exc)) from None
    if head.startswith("<") or "X" in head or "Y" in head:
        try:
            return "ideal", MonIdeal.from_text(" ".join(tokens))
        except (ValueError, TypeError, OverflowError) as exc:
            raise _UsageError(str(exc)) from None
    opts = _parse_target_opts(rest)
    match = _IDEAL_FAMILY.fullmatch(head)
    if match:
        if opts:
            raise _UsageError(f"{head} takes no options")
        kind, index = match.group(1), int(match.group(2))
        builder = {"a": monideal.build_a, "b": monideal.build_b,
                   "c": monideal.build_c}[kind]
        try:
            return "ideal", builder(index)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    if head in ("I_B", "I_C", "tilde_b", "A", "B", "C"):
        if head == "tilde_b":
            if "r" not in opts:
                raise _UsageError("tilde_b needs --r k")
            r = opts.pop("r")
        elif "r" in opts:
            raise _UsageError(f"{head} does not take --r")
        seq = _resolve_sequence(opts)
        try:
            if head == "I_B":
                return "ideal", monideal.build_i_b(seq)
            if head == "I_C":
                return "ideal", monideal.build_i_c(seq)
            if head == "tilde_b":
                return "ideal", monideal.build_tilde_b(seq, r)
            builder = {"A": families.build_A, "B": families.build_B,
                       "C": families.build_C}[head]
            return "set", builder(seq)
        except (ValueError, IndexError) as exc:
            raise _UsageError(str(exc)) from None
    raise _UsageError(f"cannot parse target {head!r}")


def _pick_monoid(kind: str, flag: Optional[str], target) -> str:
    if flag is None:
        if kind == "ideal":
            return "mon"
        return "pfin0" if target.min == 0 else "pfin"
    if kind == "ideal" and flag != "mon":
        raise _UsageError(f"monoid {flag!r} expects a set target")
    if kind == "set" and flag == "mon":
        raise _UsageError("monoid 'mon' expects an ideal target")
    if flag == "pfin0" and target.min != 0:
        raise _UsageError("monoid 'pfin0' needs a set containing 0")
    return flag


# -- output helpers ----------------------------------------------------------


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    else:
        for k, v in payload.items():
            print(f"{k}: {v if isinstance(v, str) else json.dumps(v)}")


def _budget_from(args) -> Optional[Budget]:
    nodes = args.budget_nodes
    if nodes is not None and nodes <= 0:
        nodes = None
    seconds = args.budget_seconds
    if seconds is not None and seconds <= 0:
        seconds = None
    if nodes is None and seconds is None:
        return None
    return Budget(max_nodes=nodes, max_seconds=seconds)


def _budget_payload(exc: SearchBudgetExceeded) -> dict:
    return {"nodes": exc.nodes, "elapsed": round(exc.elapsed, 3)}


def _rho_text(value) -> str:
    return str(value) if isinstance(value, Fraction) else "inf"


# -- subcommands -------------------------------------------------------------


def _cmd_atom(args) -> int:
    kind, target = parse_target(args.target)
    monoid = _pick_monoid(kind, args.monoid, target)
    budget = _budget_from(args)
    try:
        if monoid == "mon":
            eng = monomial_engine(budget, args.parallelism)
            pair = eng.find_split(target) if not target.is_unit else None
            atom = not target.is_unit and pair is None
        elif monoid == "pfin0":
            eng = sumset_engine(budget, args.parallelism)
            unit = target.elements == (0,)
            pair = eng.find_split(target) if not unit else None
            atom = not unit and pair is None
        else:
            tick = budget.tick if budget is not None else None
            atom = natset.is_atom(target, tick=tick)
            pair = None
            if not atom and target.max > 0:
                if target.min > 0:
                    pair = (NatSet([1]), target.shifted(-1))
                else:
                    eng = sumset_engine(budget, args.parallelism)
                    pair = eng.find_split(target)
    except SearchBudgetExceeded as exc:
        _emit({"atom": "inconclusive", "budget": _budget_payload(exc)},
              args.fmt)
        return 2
    witness = None
    if pair is not None:
        witness = [pair[0].to_json(), pair[1].to_json()]
    _emit({"atom": atom, "witness": witness}, args.fmt)
    return 0


def _cmd_lengths(args) -> int:
    kind, target = parse_target(args.target)
    monoid = _pick_monoid(kind, args.monoid, target)
    budget = _budget_from(args)
    try:
        if monoid == "mon":
            got = monomial_engine(budget, args.parallelism).lengths(target)
        elif monoid == "pfin0":
            got = sumset_engine(budget, args.parallelism).lengths(target)
        else:
            tick = budget.tick if budget is not None else None
            got = natset.lengths(target, tick=tick)
    except SearchBudgetExceeded as exc:
        _emit({"lengths": "inconclusive", "budget": _budget_payload(exc)},
              args.fmt)
        return 2
    _emit({"lengths": list(got),
           "delta": list(natset.delta_set(got)),
           "rho": _rho_text(natset.elasticity(got))}, args.fmt)
    return 0


def _print_verify_table(results) -> None:
    width = max(len(r.claim_id) for r in results)
    for r in results:
        print(f"{r.claim_id:<{width}}  {r.status:<12}  {r.elapsed:8.2f}s")
        if r.witness is not None:
            print(f"{'':<{width}}  witness: {json.dumps(r.witness)}")


def _cmd_verify(args) -> int:
    if args.list:
        ids = claims.claim_ids()
        if args.fmt == "json":
            print(json.dumps({"claims": ids}))
        else:
            for claim_id in ids:
                print(claim_id)
        return 0
    ctx = claims.ClaimContext(budget_nodes=args.budget_nodes,
                              budget_seconds=args.budget_seconds,
                              parallelism=args.parallelism)
    try:
        results = claims.run_suite(suite=args.suite, only=args.only or None,
                                   ctx=ctx)
    except KeyError as exc:
        raise _UsageError(exc.args[0]) from None
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for r in results:
        counts[r.status] += 1
    if args.fmt == "json":
        for r in results:
            print(json.dumps(r.to_json()))
        print(json.dumps({"suite": args.suite or "all", **counts}))
    else:
        _print_verify_table(results)
        print(f"pass {counts['pass']}  fail {counts['fail']}  "
              f"inconclusive {counts['inconclusive']}")
    if counts["fail"]:
        return 3
    if counts["inconclusive"]:
        return 2
    return 0


def _cmd_experiment(args) -> int:
    budget = _budget_from(args)
    tick = budget.tick if budget is not None else None
    if args.name == "atom-density":
        if args.samples < 1:
            raise _UsageError("atom-density needs --samples >= 1")
        if args.max < 1:
            raise _UsageError("atom-density needs --max >= 1")
        rng = random.Random(args.seed)
        atoms = 0
        try:
            for _ in range(args.samples):
                mask = rng.randrange(1 << args.max)
                a = NatSet([0] + [i + 1 for i in range(args.max)
                                  if mask >> i & 1])
                if natset.is_atom_reduced(a, tick=tick):
                    atoms += 1
        except SearchBudgetExceeded as exc:
            _emit({"experiment": "atom-density", "status": "inconclusive",
                   "budget": _budget_payload(exc)}, args.fmt)
            return 2
        _emit({"experiment": "atom-density", "max": args.max,
               "samples": args.samples, "seed": args.seed, "atoms": atoms,
               "fraction": atoms / args.samples}, args.fmt)
        return 0
    # phi-transport: compare atomicity on the two sides of the set-to-ideal
    # map, exhaustively over 0-containing subsets of [0,max].
    if args.max < 1 or args.max > 16:
        raise _UsageError("phi-transport needs 1 <= --max <= 16")
    eng = monomial_engine(budget, args.parallelism)
    found = []
    checked = 0
    try:
        for mask in range(1 << args.max):
            a = NatSet([0] + [i + 1 for i in range(args.max)
                              if mask >> i & 1])
            checked += 1
            set_atom = natset.is_atom_reduced(a, tick=tick)
            ideal_atom = eng.is_atom(monideal.phi(a))
            if set_atom != ideal_atom:
                found.append({"set": a.to_json(), "set_atom": set_atom,
                              "ideal_atom": ideal_atom})
    except SearchBudgetExceeded as exc:
        _emit({"experiment": "phi-transport", "status": "inconclusive",
               "checked": checked, "budget": _budget_payload(exc)}, args.fmt)
        return 2
    _emit({"experiment": "phi-transport", "max": args.max,
           "checked": checked, "counterexamples": found}, args.fmt)
    return 0


# -- parser ------------------------------------------------------------------


def _add_common(sub, monoid: bool = True,
                default_nodes: Optional[int] = None) -> None:
    if monoid:
        sub.add_argument("--monoid", choices=("pfin", "pfin0", "mon"),
                         default=None,
                         help="ambient monoid (default: inferred from the "
                              "target)")
    nodes_help = "abort searches after N explored candidates"
    if default_nodes is not None:
        nodes_help += f" (default {default_nodes}; 0 means unlimited)"
    sub.add_argument("--budget-nodes", type=int, default=default_nodes,
                     metavar="N", help=nodes_help)
    sub.add_argument("--budget-seconds", type=float, default=None,
                     metavar="S", help="abort searches after S seconds")
    sub.add_argument("--parallelism", type=int, default=1, metavar="W",
                     help="worker threads for candidate scans")
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const",
                     const="json", help="line-delimited JSON (default)")
    fmt.add_argument("--table", dest="fmt", action="store_const",
                     const="table", help="human-readable text")
    sub.set_defaults(fmt="json")


def _build_parser() -> _Parser:
    parser = _Parser(prog="atomlab",
                     description="Factorization queries in the reduced "
                                 "sumset monoid and the monoid of nonzero "
                                 "monomial ideals of K[X,Y].")
    subs = parser.add_subparsers(dest="command", required=True)

    atom = subs.add_parser("atom", help="decide whether a target is an atom",
                           description=__doc__,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    atom.add_argument("target", help='e.g. "c_4", "{0,1,2}", '
                                     '"I_B --minimal 2"')
    _add_common(atom, default_nodes=_DEFAULT_NODES)
    atom.set_defaults(func=_cmd_atom)

    lengths = subs.add_parser("lengths",
                              help="set of factorization lengths of a target",
                              description=__doc__,
                              formatter_class=argparse.RawDescriptionHelpFormatter)
    lengths.add_argument("target", help='e.g. "a_5", "C --minimal 3"')
    _add_common(lengths, default_nodes=_DEFAULT_NODES)
    lengths.set_defaults(func=_cmd_lengths)

    verify = subs.add_parser("verify", help="run the registered claim suites")
    verify.add_argument("--suite", choices=("core", "stretch"), default=None,
                        help="restrict to one suite (default: all claims)")
    verify.add_argument("--only", action="append", metavar="CLAIM-ID",
                        help="run only this claim (repeatable)")
    verify.add_argument("--list", action="store_true",
                        help="list claim ids and exit")
    _add_common(verify, monoid=False)
    verify.set_defaults(func=_cmd_verify)

    exp = subs.add_parser("experiment", help="sampling studies")
    exp.add_argument("name", choices=("atom-density", "phi-transport"))
    exp.add_argument("--max", type=int, default=14, metavar="M",
                     help="sets live inside [0,M] (default 14)")
    exp.add_argument("--samples", type=int, default=500, metavar="K",
                     help="sample size for atom-density (default 500)")
    exp.add_argument("--seed", type=int, default=7,
                     help="RNG seed (default 7)")
    _add_common(exp, monoid=False, default_nodes=_DEFAULT_NODES)
    exp.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
