"""
Command line front end.

Subcommands cover single-permutation queries (dist, sort, bonds, toric,
witness), pair queries, table management (diameter, table, distribution),
and the self-check suites (verify).  Exit code 0 means success, 1 means
the input was rejected, 2 means an internal verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .distance import (
    distance_table,
    exact_distance,
    pair_distance,
    sort_permutation,
)
from .errors import (
    CapabilityError,
    ContractError,
    InputError,
    VerificationError,
)
from .moves import three_bond_witness
from .perm_core import (
    Permutation,
    circular_bonds,
    extend,
    format_permutation,
    linear_bonds,
    parse_permutation,
)
from .suites import SUITES
from .toric import toric_class_linearized


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation, independent of argparse plumbing."""

    command: str
    perm_arg: str | None = None
    other_arg: str | None = None
    n_arg: int | None = None
    cache_path: str | None = None
    suite: str | None = None
    json: bool = False
    max_n: int | None = None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="btdist",
        description="Block transposition distances, sorting words, and toric classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def perm_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument(
            "perm",
            nargs="+",
            help="permutation of 1..n, space or comma separated (quotes optional)",
        )
        sp.add_argument("--json", action="store_true", help="emit a JSON object")
        return sp

    perm_command("dist", "exact distance from the identity")
    perm_command("sort", "sorting word, with a certified bound when available")
    perm_command("bonds", "linear and circular bond counts")
    perm_command("toric", "all linearized members of the toric class")
    perm_command("witness", "three-bond witness for a bondless, non-reverse input")

    pair = sub.add_parser("pair", help="exact distance between two permutations")
    pair.add_argument("perm", help="first permutation, quoted")
    pair.add_argument("other", help="second permutation, quoted")
    pair.add_argument("--json", action="store_true", help="emit a JSON object")

    diameter = sub.add_parser("diameter", help="diameter of the distance table for n")
    diameter.add_argument("n", type=int)
    diameter.add_argument("--cache", metavar="PATH", help="table cache file to reuse or create")

    table = sub.add_parser("table", help="build the full distance table and cache it")
    table.add_argument("n", type=int)
    table.add_argument("--cache", metavar="PATH", required=True)

    distribution = sub.add_parser("distribution", help="distance histogram for Sym_n")
    distribution.add_argument("n", type=int)
    distribution.add_argument("--json", action="store_true", help="emit a JSON object")

    verify = sub.add_parser("verify", help="run one self-check suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--max-n", type=int, default=None, dest="max_n")

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    perm_arg = None
    other_arg = None
    if hasattr(args, "perm"):
        raw = args.perm
        perm_arg = " ".join(raw) if isinstance(raw, list) else raw
    if hasattr(args, "other"):
        other_arg = args.other
    return CliConfig(
        command=args.command,
        perm_arg=perm_arg,
        other_arg=other_arg,
        n_arg=getattr(args, "n", None),
        cache_path=getattr(args, "cache", None),
        suite=getattr(args, "suite", None),
        json=getattr(args, "json", False),
        max_n=getattr(args, "max_n", None),
    )


def _emit(cfg: CliConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_dist(cfg: CliConfig) -> int:
    p = parse_permutation(cfg.perm_arg)
    d = exact_distance(p)
    _emit(cfg, {"n": p.n, "perm": list(p.values), "distance": d}, [str(d)])
    return 0


def _cmd_pair(cfg: CliConfig) -> int:
    p = parse_permutation(cfg.perm_arg)
    q = parse_permutation(cfg.other_arg)
    d = pair_distance(p, q)
    _emit(
        cfg,
        {"n": p.n, "perm": list(p.values), "other": list(q.values), "distance": d},
        [str(d)],
    )
    return 0


def _cmd_sort(cfg: CliConfig) -> int:
    p = parse_permutation(cfg.perm_arg)
    sw = sort_permutation(p)
    moves = [[cp.i, cp.j, cp.k] for cp in sw.word.moves]
    lines = [" ".join(str(c) for c in move) for move in moves]
    lines.append(f"length {len(moves)}")
    if sw.certified_bound is not None:
        lines.append(f"certified bound {sw.certified_bound}")
    _emit(
        cfg,
        {
            "n": p.n,
            "perm": list(p.values),
            "word": moves,
            "certified_bound": sw.certified_bound,
        },
        lines,
    )
    return 0


def _cmd_bonds(cfg: CliConfig) -> int:
    p = parse_permutation(cfg.perm_arg)
    lin = int(linear_bonds(p))
    circ = int(circular_bonds(extend(p)))
    _emit(
        cfg,
        {"n": p.n, "perm": list(p.values), "linear": lin, "circular": circ},
        [f"linear {lin}", f"circular {circ}"],
    )
    return 0


def _cmd_toric(cfg: CliConfig) -> int:
    p = parse_permutation(cfg.perm_arg)
    members = toric_class_linearized(p)
    _emit(
        cfg,
        {"n": p.n, "perm": list(p.values), "members": [list(q.values) for q in members]},
        [format_permutation(q) for q in members],
    )
    return 0


def _cmd_witness(cfg: CliConfig) -> int:
    p = parse_permutation(cfg.perm_arg)
    w = three_bond_witness(p)
    sigma = list(w.sigma.as_tuple())
    tau = list(w.tau.as_tuple())
    _emit(
        cfg,
        {
            "n": p.n,
            "perm": list(p.values),
            "rho": list(w.rho.values),
            "r": w.toric_r,
            "sigma": sigma,
            "tau": tau,
            "placement": w.placement.value,
            "bonds": w.achieved_bonds,
        },
        [
            f"rho {format_permutation(w.rho)}",
            f"r {w.toric_r}",
            f"sigma {' '.join(str(c) for c in sigma)}",
            f"tau {' '.join(str(c) for c in tau)}",
            f"placement {w.placement.value}",
            f"bonds {w.achieved_bonds}",
        ],
    )
    return 0


def _cmd_diameter(cfg: CliConfig) -> int:
    table = distance_table(cfg.n_arg, cache_path=cfg.cache_path)
    print(table.diameter())
    return 0


def _cmd_table(cfg: CliConfig) -> int:
    table = distance_table(cfg.n_arg, cache_path=cfg.cache_path)
    print(f"table for n={cfg.n_arg} ({table.distances.size} entries) at {cfg.cache_path}")
    return 0


def _cmd_distribution(cfg: CliConfig) -> int:
    hist = distance_table(cfg.n_arg).histogram()
    pairs = sorted(hist.items())
    _emit(
        cfg,
        {"n": cfg.n_arg, "distribution": [[d, c] for d, c in pairs]},
        [f"{d} {c}" for d, c in pairs],
    )
    return 0


def _cmd_verify(cfg: CliConfig) -> int:
    suite = SUITES[cfg.suite]
    kwargs = {} if cfg.max_n is None else {"max_n": cfg.max_n}
    ok, detail = suite(**kwargs)
    print(f"suite {cfg.suite}: {'ok' if ok else 'FAIL'} ({detail})")
    return 0 if ok else 2


_COMMANDS = {
    "dist": _cmd_dist,
    "pair": _cmd_pair,
    "sort": _cmd_sort,
    "bonds": _cmd_bonds,
    "toric": _cmd_toric,
    "witness": _cmd_witness,
    "diameter": _cmd_diameter,
    "table": _cmd_table,
    "distribution": _cmd_distribution,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv (sys.argv[1:] when None) and execute one subcommand."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; fold usage
        # errors into the invalid-input code.
        return 0 if not exc.code else 1
    cfg = _config_from_args(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except (VerificationError, ContractError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except (InputError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(run())
