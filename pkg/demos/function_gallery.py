"""Gallery of wedge-series functions: sample them exactly and export CSV.

Every member of the class is a uniform limit of +/-1-weighted triangular
wedges.  Different coefficient patterns give wildly different shapes:

* all_plus      -- the pointwise-maximal function, peak (2+sqrt2)/3 at 1/3, 2/3
* alt_m         -- generation signs alternate; a jagged self-affine profile
* alt_mk        -- checkerboard signs
* block:5       -- signs flip every five generations
* half_split    -- the oscillation extremizer: rises like all_plus on
                   [0, 1/2], then mirrors downward
* bernoulli:p:s -- seeded random draws; at p = 1/2 the profile resembles a
                   Brownian-bridge path (same wedge expansion, coin-flip
                   coefficients instead of Gaussians)

Writes one CSV per scheme (grid 2**-10) into demos/output/ and prints the
exact peak of each sampled function.
"""

from pathlib import Path

from takagiqv import TakagiFunction, grid_extrema, parse_scheme
from takagiqv.cli import main as cli_main

SCHEMES = [
    "all_plus",
    "alt_m",
    "alt_mk",
    "block:5",
    "half_split",
    "bernoulli:1/2:42",
    "bernoulli:1/4:42",
]

GRID = 10
OUT = Path(__file__).parent / "output"


def run() -> None:
    OUT.mkdir(exist_ok=True)
    for spec in SCHEMES:
        fname = OUT / f"gallery_{spec.replace(':', '_').replace('/', '-')}.csv"
        cli_main(["sample", "--scheme", spec, "--grid", str(GRID), "--out", str(fname)])
        rep = grid_extrema(TakagiFunction(parse_scheme(spec)), GRID)
        print(f"{spec:18s} max {rep.max.decimal(6)} at {rep.argmax[0]}"
              f"   min {rep.min.decimal(6)} at {rep.argmin[0]}   -> {fname.name}")
    print(f"\nwrote {len(SCHEMES)} files to {OUT}/ "
          "(columns: t, value_decimal, value_a, value_b)")


if __name__ == "__main__":
    run()
