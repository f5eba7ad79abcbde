"""Wall time and operation counts: brute-force sums against incremental evaluation.

    python scripts/bench_incremental.py
"""

from invbinom.bench import bench_case

print(f"{'case':<8} {'N':>5} {'agree':>6} {'naive s':>9} {'incr s':>8} {'resum ops':>10} {'incr ops':>9} {'ops/N':>6}")
for case, n_max in (("rockett", 500), ("t1", 200), ("t2", 30), ("t1", 800)):
    row = bench_case(case, n_max)
    print(
        f"{case:<8} {n_max:>5} {str(row.agree):>6} {row.naive_seconds:>9.3f} {row.incremental_seconds:>8.3f}"
        f" {row.naive_resum_ops:>10} {row.incremental_ops:>9} {row.incremental_ops / n_max:>6.2f}"
    )
