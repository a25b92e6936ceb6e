"""How continuous are these functions? Exactly sqrt(h)-continuous.

The envelope omega(h) = (1 + 1/sqrt2) h 2**(nu/2) + (1/3)(sqrt8 + 2) 2**(-nu/2)
with nu = floor(-log2 h) dominates every increment of the all-plus
function, and sqrt2 * omega dominates every increment of every member of
the class.  Both constants are sharp: along h_n = (2/3) 2**-n the
all-plus increment from 0 equals omega(h_n) - (1 + sqrt2) h_n exactly,
and the negated half-split increment across the middle equals
sqrt2 omega(h_n) - (sqrt2 + 2) h_n exactly.

Prints the exact scan/envelope ratios on a grid and the witness table.
"""

from fractions import Fraction

from takagiqv import TakagiFunction, modulus_scan, parse_scheme, witness_ratios

GRID = 12


def run() -> None:
    hat = TakagiFunction(parse_scheme("all_plus"))
    low = TakagiFunction(parse_scheme("neg_half_split"))
    print(f"largest increment / omega(h) at grid 2**-{GRID}:")
    print("  h            all_plus    neg_half_split")
    for j in (1, 2, 4, 16, 64, 256, 1365):
        h = Fraction(j, 1 << GRID)
        ra = modulus_scan(hat, GRID, h).ratio_decimal
        rb = modulus_scan(low, GRID, h).ratio_decimal
        print(f"  {str(h):12s} {ra}  {rb}")
    print("  (all_plus stays <= 1; the class bound is sqrt2 = 1.41421356)")

    print("\nwitness rows (ratio -> 1 and -> sqrt2):")
    part_a = witness_ratios("part_a", 1, 12)
    part_b = witness_ratios("part_b", 1, 12)
    for ra, rb in zip(part_a, part_b):
        print(f"  n={ra.n:2d}   from 0: {ra.ratio_decimal}   across 1/2: {rb.ratio_decimal}")


if __name__ == "__main__":
    run()
