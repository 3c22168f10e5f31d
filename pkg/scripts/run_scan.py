#!/usr/bin/env python3
"""Run the group/topology scan and dump the JSON report.

Equivalent to `topogames group scan`, kept as a script for notebook-free
experiment runs.
"""

import argparse
import json
import sys

from topogames.topo_groups import theorem1_harness


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=4)
    parser.add_argument("--all-labeled", action="store_true")
    parser.add_argument("--out", default=None, help="write the JSON report here")
    args = parser.parse_args()
    report = theorem1_harness(args.max_order, all_labeled_groups=args.all_labeled)
    payload = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
    print(
        f"instances={report.instances} paratopological={report.paratopological} "
        f"topological={report.topological} witnesses={report.witnesses_checked} "
        f"violations={len(report.violations)}"
    )
    for v in report.violations:
        print(f"  VIOLATION {v['kind']}", file=sys.stderr)
    return 1 if report.violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
