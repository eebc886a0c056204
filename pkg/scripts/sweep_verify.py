"""Run the full verifier over the seeded random corpus and summarize.

    python scripts/sweep_verify.py --count 200 --max-degree 10 --out sweep.json
"""

import argparse
import collections
import json
import time

from ufna.corpus import random_corpus
from ufna.verify import VerifyConfig, run_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--m-max", type=int, default=None)
    ap.add_argument("--out", default=None, help="write per-presentation rows as JSON")
    args = ap.parse_args()

    rows = []
    failed_checks = collections.Counter()
    t_start = time.perf_counter()
    for i, p in enumerate(random_corpus(args.count, seed=args.seed)):
        t0 = time.perf_counter()
        report = run_verify(p, VerifyConfig(max_degree=args.max_degree, m_max=args.m_max, seed=i))
        elapsed = time.perf_counter() - t0
        bad = [k for k, ok in report["checks"].items() if not ok]
        failed_checks.update(bad)
        certs = report["certificates"]
        rows.append({
            "index": i,
            "presentation": report["presentation"],
            "growth": report["growth"],
            "verdict": report["verdict"],
            "failed": bad,
            "max_kernel_m": max((c["m"] or 0) for c in certs if c["kind"] == "Kernel"),
            "max_cokernel_m": max((c["m"] or 0) for c in certs if c["kind"] == "Cokernel"),
            "seconds": round(elapsed, 3),
        })

    total = time.perf_counter() - t_start
    passed = sum(r["verdict"] == "pass" for r in rows)
    print(f"{passed}/{len(rows)} presentations pass ({total:.1f}s total)")
    print("growth classes:", dict(collections.Counter(r["growth"] for r in rows)))
    print("largest kernel bound m:", max(r["max_kernel_m"] for r in rows))
    print("largest cokernel bound m:", max(r["max_cokernel_m"] for r in rows))
    slowest = max(rows, key=lambda r: r["seconds"])
    print(f"slowest: #{slowest['index']} at {slowest['seconds']}s")
    if failed_checks:
        print("failed checks:", dict(failed_checks))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
