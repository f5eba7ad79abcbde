"""Show where the quadratic tail coefficient of the squared-reciprocal certificate breaks.

    python scripts/erratum_t1.py [n_max]
"""

import sys

from invbinom.identities import families as th
from invbinom.recurrence import unroll
from invbinom.wz import reconcile, t1_fixture

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 30
rec = reconcile(t1_fixture(), n_max)

print(f"certificate cells checked per variant: {rec.printed.checked}")
for name, report in [("printed", rec.printed), *rec.candidates.items()]:
    print(f"  {name:<11} passed={report.passed}  mismatches={len(report.mismatches)}")
print("first printed mismatches (n, k, lhs, rhs):")
for m in rec.printed.mismatches[:5]:
    print(f"  ({m.n}, {m.k})  {m.lhs}  {m.rhs}")
print(f"accepted: {rec.accepted}")
print(f"note: {rec.note}")

brute = [th.t1_lhs(n) for n in range(1, 8)]
for power in (2, 3):
    got = unroll(th.t1_recurrence(tail_power=power), 7)[1:]
    print(f"tail -(n+2)^{power}: recurrence reproduces the sums for n <= 7: {got == brute}")
