"""Acting on polynomials with matrices and Frobenius twists.

A group element is a pair (invertible 2x2 matrix, Frobenius power).  The
matrix part substitutes a fractional linear change of variable and
rescales to a monic result; the Frobenius part maps coefficients through
x -> x**(q**i).
"""

from galois_moebius import (
    Mat2,
    Poly,
    Semilinear,
    build_tower,
    moebius_act,
    proj_order,
    semilinear_order,
)


def main():
    tower = build_tower(2, 1, 2)
    top = tower.top

    f = Poly(top, [1, 1, 0, 1])  # x^3 + x + 1 over F_4
    shift = Mat2(tower, 1, 1, 0, 1)  # x -> x + 1
    print(f"f = {f!r}")
    print(f"substituting x+1:  {moebius_act(shift, f)!r}")

    flip = Mat2(tower, 0, 1, 1, 0)  # x -> 1/x, the reciprocal up to scaling
    print(f"substituting 1/x:  {moebius_act(flip, f)!r}")

    g = Semilinear(flip, 1)
    print(f"\nelement g = (antidiagonal, frob 1), order {semilinear_order(g)}")
    print(f"g acting on f: {g.act(f)!r}")
    print(f"g twice:       {(g * g).act(f)!r}  (matrix part has projective "
          f"order {proj_order(flip)})")

    # degree can only drop for linear polynomials, where the root may be
    # sent to the pole of the substitution
    A = Mat2(tower, 3, 1, 1, 0)
    linear = Poly(top, [3, 1])
    print(f"\n{linear!r} has its root at the pole of one substitution:")
    print(f"  non-strict image: {moebius_act(A, linear, strict=False)!r}")

    quartic = build_tower(2, 1, 4)
    h = Semilinear(Mat2(quartic, 0, 1, 1, 0), 2)
    print(f"\nover F_16 with frob 2: order of (antidiagonal, 2) is "
          f"{semilinear_order(h)}")
    print(f"inverse: {h.inverse()!r}")
    print(f"g * g**-1 projectively trivial: "
          f"{(h * h.inverse()).is_projective_identity()}")


if __name__ == "__main__":
    main()
