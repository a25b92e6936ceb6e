"""Using the class as exact test integrators for pathwise calculus.

Because qv_t = t holds for every member, the second-order expansion

    f(x(1)) - f(x(0))  =  sum f'(x(s)) dx  +  (1/2) sum f''(x(s)) ds  +  R_n

should close as the partition refines.  For linear f the residual is zero
at every level (telescoping); for f = u**2 it equals qv_n(1) - 1 = -2**-n
exactly; for higher degrees no closed form is claimed and we just watch
|R_n| fall.  Every residual below is computed in exact field arithmetic.
"""

from takagiqv import RationalPolynomial, TakagiFunction, ito_residual, parse_scheme

POLYS = {
    "u^2": "0,0,1",
    "u^3": "0,0,0,1",
    "u^4 - u": "0,-1,0,0,1",
}
SCHEMES = ["all_plus", "alt_m", "half_split", "bernoulli:1/2:42"]
LEVELS = range(8, 19, 2)


def run() -> None:
    for spec in SCHEMES:
        fn = TakagiFunction(parse_scheme(spec))
        print(f"scheme {spec}:")
        for label, coeffs in POLYS.items():
            poly = RationalPolynomial.parse(coeffs)
            mags = [abs(float(ito_residual(poly, fn, n, 1))) for n in LEVELS]
            cells = "  ".join(f"{m:.6f}" for m in mags)
            print(f"  {label:8s} |R_n| for n={LEVELS.start}..{LEVELS.stop - 1}:2: {cells}")
        print()


if __name__ == "__main__":
    run()
