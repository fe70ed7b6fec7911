"""Command-line front end.

Exit codes: 0 = a verdict or report was produced (UNKNOWN counts — the open
cases are open, not errors); 1 = the input failed validation or an analysis
precondition; 2 = usage error.  All randomness flows from the single --seed;
sub-operations derive child seeds by fixed offsets, so reports are
byte-deterministic given the same inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import analysis, constructions, finite
from .errors import UalieError
from .liecore import StructureConstantAlgebra
from .rng import DEFAULT_SEED
from .scalars import parse_field_flag


@dataclass
class RunConfig:
    seed: int = DEFAULT_SEED
    trials: int = 64
    bound: int = 1024
    samples: int = 100
    as_json: bool = True


def _config(args) -> RunConfig:
    cfg = RunConfig(
        seed=args.seed,
        trials=args.trials,
        bound=args.B,
        samples=args.samples,
        as_json=not args.text,
    )
    if cfg.trials < 1 or cfg.bound < 1 or cfg.samples < 1:
        raise _Usage("--trials, --B and --samples must be at least 1")
    return cfg


class _Usage(Exception):
    pass


class _InputError(Exception):
    pass


def _emit(payload: dict, cfg: RunConfig):
    if cfg.as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in _text_lines(payload, ""):
            print(line)


def _text_lines(value, prefix):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _text_lines(v, f"{prefix}{k}." if prefix else f"{k}.")
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, v in enumerate(value):
            yield from _text_lines(v, f"{prefix}{i}.")
    else:
        yield f"{prefix[:-1]}: {value}"


# ---------------------------------------------------------------------------
# input loading


def _load_algebra(path: str) -> StructureConstantAlgebra:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path} is not valid JSON: {exc}") from exc
    try:
        return StructureConstantAlgebra.from_json_dict(data)
    except UalieError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _builtin_algebra(args, field) -> StructureConstantAlgebra:
    params = {}
    for key in ("n", "k", "d"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    try:
        return constructions.build_catalog(args.builtin, field, **params)
    except UalieError as exc:
        raise _Usage(str(exc)) from exc


def _resolve_algebra(args, field) -> StructureConstantAlgebra:
    if getattr(args, "builtin", None):
        return _builtin_algebra(args, field)
    if getattr(args, "file", None):
        return _load_algebra(args.file)
    raise _Usage("provide an input file or --builtin NAME")


_FINITE_BUILTINS = ("klein", "z<m>", "heisenberg_f2", "heisenberg_f3")


def _load_ring(source: str) -> finite.FiniteLieRing:
    if source == "klein":
        return finite.klein_ring()
    if source.startswith("z") and source[1:].isdigit():
        return finite.cyclic_ring(int(source[1:]))
    if source in ("heisenberg_f2", "heisenberg_f3"):
        p = 2 if source.endswith("2") else 3
        from .scalars import PrimeField

        return finite.from_algebra(
            constructions.build_heisenberg(PrimeField(p), 1))
    try:
        with open(source) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputError(
            f"cannot read {source} (builtins: {', '.join(_FINITE_BUILTINS)}): {exc}"
        ) from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{source} is not valid JSON: {exc}") from exc
    try:
        ring = finite.FiniteLieRing.from_json_dict(data, name=source)
    except UalieError as exc:
        raise _InputError(f"{source}: {exc}") from exc
    rep = ring.validate()
    if not rep.ok:
        raise _InputError(f"{source}: {rep.failures[0]}")
    return ring


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args, cfg: RunConfig) -> int:
    g = _load_algebra(args.file)
    rep = g.validate()
    payload = {
        "file": args.file,
        "algebra": g.name,
        "field": g.field.to_json(),
        "dim": g.dim,
        "ok": rep.ok,
        "first_failure": None,
    }
    if not rep.ok:
        i, j, k, defect = rep.first_failure()
        payload["first_failure"] = {
            "triple": [i, j, k],
            "basis": [g.basis_names[i], g.basis_names[j], g.basis_names[k]],
            "defect": [g.field.format(c) for c in defect],
        }
        _emit(payload, cfg)
        print(
            f"Jacobi identity fails at basis triple "
            f"({g.basis_names[i]}, {g.basis_names[j]}, {g.basis_names[k]})",
            file=sys.stderr,
        )
        return 1
    _emit(payload, cfg)
    return 0


def _cmd_analyze(args, cfg: RunConfig) -> int:
    field = parse_field_flag(args.field)
    g = _resolve_algebra(args, field)
    rep = g.validate()
    if not rep.ok:
        i, j, k, _ = rep.first_failure()
        raise _InputError(f"Jacobi identity fails at basis triple ({i},{j},{k})")
    report = analysis.verdict(g, trials=cfg.trials, seed=cfg.seed, bound=cfg.bound)
    _emit(report.to_json_dict(), cfg)
    return 0


def _parse_composition(text: str):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise _Usage(f"bad composition {text!r}: comma-separated integers") from exc
    return parts


def _cmd_seaweed(args, cfg: RunConfig) -> int:
    field = parse_field_flag(args.field)
    top = _parse_composition(args.top)
    bottom = _parse_composition(args.bottom)
    try:
        spec = constructions.SeaweedSpec(args.n, top, bottom)
        report = analysis.seaweed_verdict(spec, field, trials=cfg.trials,
                                          seed=cfg.seed, bound=cfg.bound)
    except UalieError as exc:
        raise _InputError(str(exc)) from exc
    _emit(report.to_json_dict(), cfg)
    return 0


def _cmd_catalog(args, cfg: RunConfig) -> int:
    if args.action != "list":
        raise _Usage("catalog supports: list")
    entries = []
    for name in sorted(constructions.CATALOG):
        _, params = constructions.CATALOG[name]
        entries.append({
            "name": name,
            "params": list(params),
            "example": constructions.CATALOG_EXAMPLES.get(name, {}),
        })
    _emit({"catalog": entries}, cfg)
    return 0


def _cmd_finite(args, cfg: RunConfig) -> int:
    if args.mode == "wua":
        ring = _load_ring(args.ring)
        wua, counterexample = finite.is_wua(ring)
        payload = {
            "ring": ring.name,
            "order": ring.order,
            "wua": wua,
            "counterexample": counterexample,
        }
        _emit(payload, cfg)
        return 0
    if args.mode == "against":
        r = _load_ring(args.ring)
        s = _load_ring(args.target)
        ok, evidence = finite.ua_against(r, s)
        payload = {
            "ring": r.name,
            "target": s.name,
            "order": r.order,
            "all_additive": ok,
            "evidence": evidence,
            "note": ("non-additive bijection certifies the ring is not UA"
                     if not ok else
                     "no counterexample against this target; proves nothing global"),
        }
        _emit(payload, cfg)
        return 0
    if args.mode == "field":
        if args.p is None or args.fn is None:
            raise _Usage("finite field needs --p and --n")
        try:
            rep = finite.semigroup_aut_report(args.p, args.fn)
        except UalieError as exc:
            raise _InputError(str(exc)) from exc
        payload = {
            "q": rep.q,
            "p": rep.p,
            "n": rep.n,
            "brute_count": rep.brute_count,
            "phi_q_minus_1": rep.phi_q_minus_1,
            "field_aut_count": rep.field_aut_count,
            "additive_count": rep.additive_count,
            "nonadditive": rep.nonadditive,
        }
        _emit(payload, cfg)
        return 0
    raise _Usage("finite supports: wua, against, field")


def _cmd_counterexample(args, cfg: RunConfig) -> int:
    field = parse_field_flag(args.field)
    g = _resolve_algebra(args, field)
    rep = g.validate()
    if not rep.ok:
        raise _InputError("input algebra fails the Jacobi identity")
    if args.kind == "negcrit":
        try:
            res = analysis.negative_criterion(g)
        except UalieError as exc:
            raise _InputError(str(exc)) from exc
        if res is None:
            payload = {
                "algebra": g.name,
                "applicable": False,
                "case": None,
                "bijection": None,
                "note": "negative-criterion hypotheses do not hold",
            }
        else:
            payload = {
                "algebra": g.name,
                "applicable": True,
                "case": res.case,
                "bijection": res.description.to_json_dict(g.field),
                "note": None,
            }
        _emit(payload, cfg)
        return 0
    if args.kind == "injection":
        try:
            res = analysis.central_extension_injection(
                g, samples=cfg.samples, seed=cfg.seed, bound=cfg.bound)
        except UalieError as exc:
            raise _InputError(str(exc)) from exc
        F = g.field
        payload = {
            "algebra": g.name,
            "extended": res.extended.name,
            "extended_dim": res.extended.dim,
            "functional": [F.format(c) for c in res.functional],
            "x1": [F.format(c) for c in res.x1],
            "witness_pair": [[F.format(c) for c in w] for w in res.witness_pair],
            "checked_pairs": res.checked_pairs,
            "obligations": [{"check": t, "ok": ok} for t, ok in res.obligations],
            "all_ok": res.all_ok,
        }
        _emit(payload, cfg)
        return 0
    raise _Usage("counterexample supports: negcrit, injection")


# ---------------------------------------------------------------------------
# argument parsing


def _add_run_flags(parser, suppress: bool):
    """The global flags, attachable before or after the subcommand.

    The after-subcommand copies default to SUPPRESS so they only override
    the root values when actually given.
    """
    sup = argparse.SUPPRESS

    def dflt(v):
        return sup if suppress else v

    parser.add_argument("--seed", type=lambda s: int(s, 0), default=dflt(DEFAULT_SEED),
                        help="64-bit master seed (default 0x5EED5EED5EED5EED)")
    parser.add_argument("--trials", type=int, default=dflt(64),
                        help="random trials for probabilistic searches")
    parser.add_argument("--B", type=int, default=dflt(1024),
                        help="coordinate sampling bound")
    parser.add_argument("--samples", type=int, default=dflt(100),
                        help="verification sample count")
    out = parser.add_mutually_exclusive_group()
    out.add_argument("--json", dest="text", action="store_false", default=dflt(False),
                     help="JSON output (default)")
    out.add_argument("--text", dest="text", action="store_true", default=sup,
                     help="flat key: value lines instead of JSON")
    parser.add_argument("--field", default=dflt("Q"),
                        help="Q | Fp:<p> | Fq:<p>,<n> (for builtins)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ualie",
        description="Decide (or report as open) the unique-addition property "
                    "for Lie algebras and small finite Lie rings.",
    )
    _add_run_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_run_flags(common, suppress=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check a structure-constant file")
    p.add_argument("file")

    p = sub.add_parser("analyze", parents=[common], help="full verdict for an algebra")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--builtin", default=None, help="catalog name (see: catalog list)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--d", type=int, default=None)

    p = sub.add_parser("seaweed", parents=[common],
                       help="verdict for a seaweed subalgebra of sl_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", required=True, help="composition, e.g. 2,2")
    p.add_argument("--bottom", required=True, help="composition, e.g. 4")

    p = sub.add_parser("catalog", parents=[common], help="list builtin algebras")
    p.add_argument("action", choices=["list"])

    p = sub.add_parser("finite", help="brute force on finite Lie rings")
    fsub = p.add_subparsers(dest="mode", required=True)
    f = fsub.add_parser("wua", parents=[common],
                        help="is every self-bijection additive?")
    f.add_argument("ring", help=f"file or builtin ({', '.join(_FINITE_BUILTINS)})")
    f = fsub.add_parser("against", parents=[common],
                        help="test against one explicit target ring")
    f.add_argument("ring")
    f.add_argument("target")
    f = fsub.add_parser("field", parents=[common],
                        help="multiplicative semigroup automorphisms of F_q")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--n", dest="fn", type=int, default=1)

    p = sub.add_parser("counterexample", parents=[common],
                       help="explicit non-additive constructions")
    p.add_argument("kind", choices=["negcrit", "injection"])
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--builtin", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--d", type=int, default=None)

    return parser


_COMMANDS = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "seaweed": _cmd_seaweed,
    "catalog": _cmd_catalog,
    "finite": _cmd_finite,
    "counterexample": _cmd_counterexample,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        return _COMMANDS[args.command](args, cfg)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except UalieError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
