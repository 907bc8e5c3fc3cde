"""Run every verification suite and print a one-line summary per suite."""

import argparse
import json
import sys
import time

from artifact.verify import SUITES


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", default="2,3")
    ap.add_argument("--max-reach", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="dump full reports")
    a = ap.parse_args(argv)
    qs = tuple(int(x) for x in a.q.split(","))
    kw = {
        "appendixA": {"qs": qs, "max_reach": a.max_reach},
        "sl2": {"qs": qs, "max_reach": a.max_reach},
        "gl2gl2": {"qs": qs, "max_reach": a.max_reach},
        "gsp4-regions": {},
        "relative": {"qs": qs, "max_reach": a.max_reach},
    }
    bad = 0
    for name, fn in SUITES.items():
        t0 = time.perf_counter()
        rep = fn(**kw[name])
        bad += rep.failed
        print(f"{name:14s} passed={rep.passed:5d} failed={rep.failed} ({time.perf_counter() - t0:.1f}s)")
        if a.json:
            print(json.dumps(rep.summary(), indent=2))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
