"""Covariation need not exist: an exact two-function counterexample.

Take x = all_plus and y = alt_m.  Both have quadratic variation t along
the dyadic partitions.  Their sum doubles exactly the even-generation
wedges and cancels the odd ones, and its level-n quadratic variation
splits into two convergent subsequences with DIFFERENT limits:

    even levels -> 4/3 t        odd levels -> 8/3 t

Equivalently (polarization) the covariation flips between -t/3 and +t/3,
so neither limit exists along the full sequence.  The per-level numbers
below are exact rationals.
"""

from pathlib import Path

from takagiqv import counterexample_series
from takagiqv.cli import main as cli_main

OUT = Path(__file__).parent / "output"


def run() -> None:
    OUT.mkdir(exist_ok=True)
    study = counterexample_series(16, 1)
    print("qv of the sum at t=1 (exact value, distance to subsequence limit):")
    for name, series in zip(study._fields, study):
        print(f"  {name}:")
        for row in series.rows:
            print(f"    n={row.level:2d}  {str(row.value):>12s}"
                  f"   dist {row.distance.decimal(8)}")

    gaps = []
    all_rows = sorted(
        [r for s in (study.even_qv, study.odd_qv) for r in s.rows],
        key=lambda r: r.level,
    )
    for a, b in zip(all_rows, all_rows[1:]):
        gaps.append(abs(float(b.value - a.value)))
    print(f"\nconsecutive-level gaps of the qv-of-sum stay above 1 "
          f"(min over n>=4: {min(gaps[3:]):.4f}) -- the sequence is not Cauchy")

    out = OUT / "counterexample_t1.csv"
    cli_main(["counterexample", "--levels", "16", "--t", "1", "--out", str(out)])
    print(f"wrote {out}")


if __name__ == "__main__":
    run()
