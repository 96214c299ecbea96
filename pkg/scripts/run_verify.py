"""Run the full law registry over the built-in corpus and write the report.

    python scripts/run_verify.py [--max-n 7] [--workers 1] [--out verify_report.json]
"""

import argparse
import sys

from graphboundary.laws import VerifyConfig, verify_laws


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="verify_report.json")
    args = p.parse_args()

    report = verify_laws(VerifyConfig(max_n=args.max_n, workers=args.workers))
    with open(args.out, "w") as fh:
        fh.write(report.to_json() + "\n")
    for r in report.laws:
        status = "ok" if r.passed else f"{len(r.violations)} violations"
        print(f"{r.id:<20} checked {r.checked:>6}  filtered {r.filtered:>5}  {status}"
              + (f"  ({len(r.notes)} notes)" if r.notes else ""))
    print(f"{report.graph_count} graphs, {report.wall_time:.1f} s -> {args.out}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
