"""Run every config in configs/ through the harness and print the predicate lines.

    python scripts/run_all.py [--out results] [--threads 2] [names ...]
"""
import argparse
import sys
from pathlib import Path

from condiid.config import load
from condiid.harness import run

ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("names", nargs="*", help="config stems; default all")
    ap.add_argument("--out", type=Path, default=ROOT / "results")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    paths = sorted((ROOT / "configs").glob("*.json"))
    if args.names:
        paths = [p for p in paths if p.stem in args.names]
    failed = False
    for p in paths:
        summary = run(load(p), args.out / p.stem, args.threads)
        verdict = {True: "PASS", False: "FAIL", None: "----"}[summary["passed"]]
        print(f"{verdict}  {p.stem}")
        for ch in summary["checks"]:
            print(f"        {'ok ' if ch['passed'] else 'BAD'} {ch['check']}")
        failed |= summary["passed"] is False
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
