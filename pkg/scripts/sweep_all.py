"""Run every case at its default size and summarise; optionally write the full JSON report.

    python scripts/sweep_all.py [report.json]
"""

import sys
import time
from collections import Counter

from invbinom.identities.registry import CASES
from invbinom.report import render

all_records = []
print(f"{'case':<9} {'records':>8} {'equal':>6} {'failed':>6} {'skipped':>8} {'seconds':>8}")
for cid, case in CASES.items():
    t0 = time.perf_counter()
    records = case.sweep()
    elapsed = time.perf_counter() - t0
    tally = Counter("skipped" if r.skipped else ("equal" if r.equal else "failed") for r in records)
    print(f"{cid:<9} {len(records):>8} {tally['equal']:>6} {tally['failed']:>6} {tally['skipped']:>8} {elapsed:>8.2f}")
    reasons = Counter(r.skipped_reason.split(" at ")[0] for r in records if r.skipped)
    for reason, count in reasons.most_common(3):
        print(f"{'':<9} skipped {count:>5}: {reason}")
    all_records.extend(records)

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(render(all_records, "json"))
    print(f"wrote {len(all_records)} records to {sys.argv[1]}")
