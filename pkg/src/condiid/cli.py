"""Command line entry point: ``python -m condiid <command> --config FILE``."""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import harness
from .bounds import reports_csv, erm_bounds, vc_bounds
from .config import ExperimentConfig, validate
from .data_model import generate, occupancy_prob
from .errors import CondIIDError, InvalidConfig

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

# subcommands that are a fixed experiment kind
FORCED_KIND = {"evaluate": "consistency", "tolerance": "tolerance", "counterexample": "counterexample"}


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="condiid", description="Conditionally i.i.d. pattern recognition experiments.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("generate", "draw one labelled sample per n and write it"),
        ("evaluate", "error curve of a classifier (consistency experiment)"),
        ("tolerance", "tail probability of the tolerance to data"),
        ("bounds", "closed-form bound right-hand sides"),
        ("counterexample", "the negative examples"),
        ("experiment", "run any experiment kind from a config"),
        ("validate", "print configuration diagnostics"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", required=True, type=Path)
        p.add_argument("--out", type=Path)
        p.add_argument("--seed", type=int, help="override the master seed")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
    return ap


def _load(args, kind: str | None = None) -> ExperimentConfig:
    try:
        d = json.loads(args.config.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidConfig([f"config: {exc}"]) from exc
    if isinstance(d, dict):
        if args.seed is not None:
            d["seed"] = args.seed
        if kind is not None:
            d["kind"] = kind
    return ExperimentConfig.from_dict(d)


def _out_dir(args, cfg) -> Path:
    out = args.out or Path(cfg.out or "results")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _generate(args, cfg) -> int:
    out = _out_dir(args, cfg)
    proc, pair = cfg.label_process(), cfg.class_pair()
    for n in cfg.n_list:
        s = generate(proc, pair, n, cfg.seed)
        rows = [[*map(float, x), int(y)] for x, y in zip(s.x, s.y)]
        header = [f"x{j}" for j in range(s.d)] + ["y"]
        text = harness._csv(header, rows) if args.format == "csv" else harness._json_rows(header, rows)
        (out / f"sample_n{n}.{args.format}").write_text(text, encoding="utf-8")
    return EXIT_OK


def _bounds(args, cfg) -> int:
    out = _out_dir(args, cfg)
    spec = cfg.classifier_spec()
    S = harness.shatter_function(spec)
    realizable = cfg.realizable
    if realizable is None and cfg.pair is not None:
        realizable = bool(harness.eta_in_class(spec, cfg.class_pair()))
    reports = []
    for n in cfg.n_list:
        C_n, tail = 1.0, 0.0
        if cfg.process is not None:
            occ = occupancy_prob(cfg.label_process(), cfg.delta, n, seed=cfg.seed)
            C_n, tail = occ.value, occ.complement
        for eps in cfg.eps_list:
            reports.extend(vc_bounds(S(n), n, eps).values())
            try:
                reports.extend(erm_bounds(S, n, cfg.delta, eps, C_n, bool(realizable), bool(cfg.indicator), tail).values())
            except CondIIDError as exc:
                print(f"n={n}, eps={eps}: {exc}", file=sys.stderr)
    if args.format == "csv":
        text = reports_csv(reports)
    else:
        text = json.dumps([r.to_dict() for r in reports], indent=1, sort_keys=True) + "\n"
    (out / f"bounds.{args.format}").write_text(text, encoding="utf-8")
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "validate":
            try:
                d = json.loads(args.config.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                print(f"config: {exc}")
                return EXIT_CONFIG
            if isinstance(d, dict) and args.seed is not None:
                d["seed"] = args.seed
            diags = validate(d)
            for line in diags:
                print(line)
            return EXIT_CONFIG if diags else EXIT_OK
        cfg = _load(args, FORCED_KIND.get(args.command))
        if args.command == "generate":
            return _generate(args, cfg)
        if args.command == "bounds":
            return _bounds(args, cfg)
        if args.out is not None:
            cfg = dataclasses.replace(cfg, out=str(args.out))
        summary = harness.run(cfg, cfg.out, args.threads, args.format)
    except InvalidConfig as exc:
        for line in exc.diagnostics:
            print(line, file=sys.stderr)
        return EXIT_CONFIG
    except CondIIDError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    for ch in summary["checks"]:
        print(f"{'PASS' if ch['passed'] else 'FAIL'}  {ch['check']}")
    return EXIT_FAIL if summary["passed"] is False else EXIT_OK
