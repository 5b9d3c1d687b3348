"""The two classical families as fixed polynomials.

Over F_(q**2), the polynomials whose monic reciprocal equals their
coefficientwise conjugate are exactly the ones fixed by the antidiagonal
matrix with one Frobenius twist.  Over F_q the analogous untwisted family
is the self-reciprocal one, and the two are related two-to-one.
"""

from galois_moebius import (
    Mat2,
    Poly,
    build_tower,
    construct_scrim,
    involution_ratio_check,
    scrim_count,
    scrim_count_divisor_sum,
    scrim_polynomials,
    srim_count,
    srim_polynomials,
)


def main():
    print("conjugate self-reciprocal counts, closed form vs divisor sum:")
    for q in (2, 3, 4, 5):
        row = []
        for degree in (3, 5, 7):
            a = scrim_count(q, degree)
            assert a == scrim_count_divisor_sum(q, degree)
            row.append(f"deg {degree}: {a}")
        print(f"  q={q}: " + ", ".join(row))

    tower = build_tower(2, 1, 2)
    fam = scrim_polynomials(tower, 3)
    print(f"\nthe degree-3 family over F_4 ({len(fam)} members):")
    for f in fam:
        print(f"  {f!r}")

    first, conj = construct_scrim(tower, 3)
    product = first * conj
    lift = Poly(tower.mid, product.coeffs)
    print(f"conjugate pair multiplies down to F_2: {lift!r}")
    print(f"self-reciprocal sextics over F_2: "
          f"{[repr(f) for f in srim_polynomials(tower.mid, 6)]}")
    print(f"srim_count(2, 3) = {srim_count(2, 3)}")

    print("\ntwisted-to-classical 2:1 ratio for the antidiagonal involution:")
    for q in (2, 3):
        tw = build_tower(q, 1, 2)
        for m in (3, 5):
            res = involution_ratio_check(tw, Mat2(tw, 0, 1, 1, 0), m)
            print(f"  q={q}, degree {m}: twisted {res.twisted_count}, "
                  f"classical {res.classical_count}, holds {res.ratio_holds}")


if __name__ == "__main__":
    main()
