"""Command-line front end.

    deltawitt [--config NAME|PATH] ring info
    deltawitt witt add|sub|mul X Y | neg|ghost|unghost|frob|verschiebung X | teich A --n N
    deltawitt witt universal --n N --op add|mul
    deltawitt delta apply X | exp|taylor|terms X --n N | constants --bounds t=8,u=2
    deltawitt verify SUITE|all [--seed S] [--trials T] [--n N] [--json]

Exit status: 0 on success, 1 when a suite fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .config import DEFAULT_RING_SET, PRESETS, resolve_setup
from .delta import enumerate_constants, exp_delta, taylor_expand, term_decomposition
from .errors import ParseError, WittError
from .witt import (
    GhostVec,
    WittVec,
    frobenius_F,
    ghost,
    parse_vector,
    teichmuller,
    unghost,
    universal_polys,
    verschiebung,
    witt_arith,
)

DEFAULT_CONFIG = "f2t"


class UsageError(Exception):
    pass


def _poly_json(f) -> dict:
    return {"schema": 1, "kind": "poly", "value": str(f)}


def _parse_poly(alg, text, op):
    try:
        return alg.parse(text)
    except ParseError as exc:
        raise ParseError(f"{op}: {exc.message}", exc.position, text) from None


def _parse_vec(alg, text, op, kind=WittVec):
    try:
        return parse_vector(text, alg, kind)
    except ParseError as exc:
        raise ParseError(f"{op}: {exc.message}", exc.position, text) from None


def _need(args, count, op):
    if len(args.values) != count:
        raise UsageError(f"{op} takes {count} argument{'s' if count != 1 else ''}, got {len(args.values)}")


def _need_n(args, op):
    if args.n is None:
        raise UsageError(f"{op} needs --n")
    if args.n < 0:
        raise UsageError(f"{op}: --n must be >= 0")
    return args.n


def cmd_ring(args, setup):
    if args.action != "info":
        raise UsageError(f"unknown ring action {args.action!r}")
    info = setup.to_dict()
    info["q"] = setup.ring.q
    info["algebra"] = setup.alg.describe()
    if args.json:
        return dict({"schema": 1, "kind": "ring"}, **info)
    lines = [f"{k}: {v}" for k, v in info.items()]
    return "\n".join(lines)


WITT_BINARY = {"add", "sub", "mul"}
WITT_UNARY = {"neg", "ghost", "unghost", "frob", "verschiebung"}


def cmd_witt(args, setup):
    alg, op = setup.alg, args.action
    name = f"witt {op}"
    if op in WITT_BINARY:
        _need(args, 2, name)
        x = _parse_vec(alg, args.values[0], name)
        y = _parse_vec(alg, args.values[1], name)
        out = witt_arith(x, y, op)
    elif op in WITT_UNARY:
        _need(args, 1, name)
        kind = GhostVec if op == "unghost" else WittVec
        x = _parse_vec(alg, args.values[0], name, kind)
        out = {
            "neg": lambda v: -v,
            "ghost": ghost,
            "unghost": unghost,
            "frob": frobenius_F,
            "verschiebung": verschiebung,
        }[op](x)
    elif op == "teich":
        _need(args, 1, name)
        out = teichmuller(_parse_poly(alg, args.values[0], name), _need_n(args, name))
    elif op == "universal":
        _need(args, 0, name)
        n = _need_n(args, name)
        if args.op not in ("add", "mul"):
            raise UsageError(f"{name} needs --op add|mul")
        polys = universal_polys(setup.ring, n, args.op)
        label = "S" if args.op == "add" else "M"
        if args.json:
            return {"schema": 1, "kind": "universal", "op": args.op, "n": n, "polys": [str(f) for f in polys]}
        return "\n".join(f"{label}_{i} = {f}" for i, f in enumerate(polys))
    else:
        raise UsageError(f"unknown witt action {op!r}")
    return out.to_json() if args.json else str(out)


def _parse_bounds(text, setup):
    out = {}
    for piece in filter(None, (p.strip() for p in text.split(","))):
        key, sep, val = piece.partition("=")
        key = key.strip()
        if not sep or not val.strip().isdigit():
            raise UsageError(f"delta constants: bad bound {piece!r}, expected name=degree")
        if key != "t" and key not in setup.generators:
            raise UsageError(f"delta constants: unknown variable {key!r} in --bounds")
        out[key] = int(val)
    return out


def cmd_delta(args, setup):
    alg, ctx, op = setup.alg, setup.ctx, args.action
    name = f"delta {op}"
    if op == "apply":
        _need(args, 1, name)
        out = ctx.delta(_parse_poly(alg, args.values[0], name))
        return _poly_json(out) if args.json else str(out)
    if op in ("exp", "taylor"):
        _need(args, 1, name)
        x = _parse_poly(alg, args.values[0], name)
        n = _need_n(args, name)
        out = exp_delta(ctx, x, n) if op == "exp" else taylor_expand(ctx, x, n)
        return out.to_json() if args.json else str(out)
    if op == "terms":
        _need(args, 1, name)
        x = _parse_poly(alg, args.values[0], name)
        n = _need_n(args, name)
        if n < 1:
            raise UsageError(f"{name}: --n must be >= 1")
        table = term_decomposition(ctx, x, n)
        rows = table.rows()
        if args.json:
            return {
                "schema": 1,
                "kind": "terms",
                "n": n,
                "rows": [{"i": i, "j": j, "valuation": v, "value": s} for i, j, v, s in rows],
                "total": str(table.total()),
            }
        lines = []
        for i, j, v, s in rows:
            tag = f"L_{i},{j}" if j is not None else f"S_{i}"
            lines.append(f"{tag} [v={v}] = {s}")
        lines.append(f"P_{n} = {table.total()}")
        return "\n".join(lines)
    if op == "constants":
        _need(args, 0, name)
        if not args.bounds:
            raise UsageError(f"{name} needs --bounds, e.g. t=8,u=2")
        found = enumerate_constants(ctx, _parse_bounds(args.bounds, setup))
        if args.json:
            return {"schema": 1, "kind": "constants", "count": len(found), "values": [str(c) for c in found]}
        return "\n".join(str(c) for c in found)
    raise UsageError(f"unknown delta action {op!r}")


def cmd_verify(args, setup_name):
    """Returns (payload, exit status)."""
    target = args.action
    if target == "all":
        rings = [setup_name] if setup_name is not None else list(DEFAULT_RING_SET)
        reports = harness.run_all(rings, seed=args.seed, trials=args.trials, n_max=args.n, workers=args.workers)
    else:
        harness.get_suite(target)
        setup = resolve_setup(setup_name or DEFAULT_CONFIG)
        cfg = harness.SuiteConfig(target, setup, seed=args.seed, trials=args.trials or harness.DEFAULT_TRIALS,
                                  n_max=args.n)
        reports = [harness.run_suite(cfg, workers=args.workers)]
    status = 0 if all(r.ok for r in reports) else 1
    if args.json:
        return [r.to_json() for r in reports], status
    return harness.format_table(reports), status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltawitt", description="Witt vectors, pi-derivations and arithmetic Taylor expansions.")
    p.add_argument("--config", help=f"preset ({', '.join(PRESETS)}) or TOML file; default {DEFAULT_CONFIG}")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--n", type=int, default=None, help="truncation level")
    p.add_argument("--op", default=None, help="add or mul (witt universal)")
    p.add_argument("--bounds", default=None, help="degree bounds for delta constants, e.g. t=8,u=2")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("group", choices=["ring", "witt", "delta", "verify"])
    p.add_argument("action")
    p.add_argument("values", nargs="*")
    return p


def _reorder(argv):
    """Allow flags after the positional arguments (``delta exp --n 2 t``)."""
    flags, positional = [], []
    takes_value = {"--config", "--seed", "--trials", "--n", "--op", "--bounds", "--workers"}
    it = iter(argv)
    for a in it:
        if a in takes_value:
            flags.append(a)
            flags.append(next(it, ""))
        elif a.startswith("--") and "=" in a and a.split("=", 1)[0] in takes_value or a in ("--json", "-h", "--help"):
            flags.append(a)
        else:
            positional.append(a)
    return flags + ["--"] + positional if positional else flags


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_reorder(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    op = f"{args.group} {args.action}"
    try:
        if args.trials is not None and args.trials < 1:
            raise UsageError("--trials must be >= 1")
        if args.group == "verify":
            payload, status = cmd_verify(args, args.config)
        else:
            setup = resolve_setup(args.config or DEFAULT_CONFIG)
            payload = {"ring": cmd_ring, "witt": cmd_witt, "delta": cmd_delta}[args.group](args, setup)
            status = 0
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, WittError, FileNotFoundError, ValueError, ArithmeticError, KeyError) as exc:
        msg = str(exc.args[0] if isinstance(exc, KeyError) and exc.args else exc)
        if not msg.startswith(op):
            msg = f"{op}: {msg}"
        print(f"error: {msg}", file=sys.stderr)
        return 2
    if isinstance(payload, (dict, list)):
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write(payload + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
