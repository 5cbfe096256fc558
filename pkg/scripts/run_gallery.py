#!/usr/bin/env python3
"""Run every gallery entry and print its full analysis report.

Usage: python scripts/run_gallery.py [--format json|table]
"""
import argparse
import json
import sys

from algnorm import gallery
from algnorm.cli import _emit_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("table", "json"), default="table")
    args = ap.parse_args()
    reports = [gallery.run_entry(e.id) for e in gallery.list_entries()]
    if args.format == "json":
        print(json.dumps(reports, indent=2, sort_keys=True))
        return 0
    for report in reports:
        print("=" * 72)
        print(report["id"], "-", report["summary"])
        print("-" * 72)
        _emit_table({k: v for k, v in report.items() if k not in ("id", "summary")})
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
