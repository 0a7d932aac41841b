"""Run every verification suite, print a per-suite summary and save the JSON report.

    python3 scripts/run_verification.py --out verify_report.json
"""

import argparse
import sys

from rderange.verify import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=8)
    ap.add_argument("--out", default="verify_report.json")
    args = ap.parse_args()
    report = run_suite("all", max_size=args.max_size)
    print(report.to_text())
    with open(args.out, "w") as fh:
        fh.write(report.to_json())
    print(f"report written to {args.out}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
