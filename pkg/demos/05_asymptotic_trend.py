"""Exact invariant counts against the leading-term prediction.

For a fixed semilinear element the number of fixed monic irreducibles of
degree D*s approaches euler_phi(D) * q**s / (D * s) as s grows over
integers coprime to everything that matters.  This prints the exact
counts next to the prediction so the convergence is visible.
"""

from fractions import Fraction

from galois_moebius import Mat2, Semilinear, asymptotic_report, build_tower


def main():
    tower = build_tower(2, 1, 2)
    g = Semilinear(Mat2(tower, 0, 1, 1, 0), 1)
    print(f"element: antidiagonal matrix, one Frobenius twist, over F_4")
    print(f"{'s':>3} {'degree':>7} {'count':>6} {'predicted':>10} {'ratio':>8}")
    for point in asymptotic_report(g, (3, 5, 7, 9), cap=1 << 20):
        print(
            f"{point.s:>3} {point.degree:>7} {point.count:>6} "
            f"{point.predicted:>10.3f} {point.ratio:>8.4f}"
        )
        assert point.ratio_exact == Fraction(point.count * point.s, 2**point.s)

    print("\nthe ratio climbs toward 1, never reaching it for finite s")


if __name__ == "__main__":
    main()
