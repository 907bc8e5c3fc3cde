"""Write (or check) the archive of gsp4 residuals and T4 partial sums.

    python3 scripts/gsp4_discrepancy.py            # rewrite artifacts/gsp4_residuals.json
    python3 scripts/gsp4_discrepancy.py --check    # exit 1 if a fresh run differs
"""

import argparse
import json
import sys
from pathlib import Path

from artifact.verify import verify_gsp4_regions

ARCHIVE = Path(__file__).resolve().parent.parent / "artifacts" / "gsp4_residuals.json"


def build(max_n: int) -> dict:
    rep = verify_gsp4_regions(max_n)
    if not rep.ok:
        raise SystemExit(f"hard gsp4 checks failed: {rep.summary()['failures'][:3]}")
    return {"max_n": max_n, **rep.summary()["artifacts"]}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--out", type=Path, default=ARCHIVE)
    ap.add_argument("--check", action="store_true")
    a = ap.parse_args(argv)
    data = build(a.max_n)
    if a.check:
        same = json.loads(a.out.read_text()) == data
        print("archive matches" if same else "archive differs")
        return 0 if same else 1
    a.out.parent.mkdir(parents=True, exist_ok=True)
    a.out.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    print(f"wrote {a.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
