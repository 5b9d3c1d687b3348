"""Tour of the two-storey field towers.

Shows how elements are encoded as plain integers, how the middle and top
levels relate, and what the Frobenius does to individual elements.
"""

from galois_moebius import build_tower, multiplicative_order
from galois_moebius.textio import format_element


def main():
    tower = build_tower(2, 1, 2)
    print("tower F_2 <= F_2 <= F_4:", tower.describe())

    top = tower.top
    u = 2  # the generator adjoined by the top modulus
    print("\narithmetic in F_4 (codes are base-p digit vectors):")
    print(f"  u         -> {format_element(top, u)}")
    print(f"  u + 1     -> {format_element(top, top.add(u, 1))}")
    print(f"  u * (u+1) -> {format_element(top, top.mul(u, top.add(u, 1)))}")
    print(f"  u**-1     -> {format_element(top, top.inv(u))}")

    print("\nmultiplicative orders in F_4:")
    for x in range(1, top.size):
        print(f"  ord({format_element(top, x)}) = {multiplicative_order(top, x)}")

    quartic = build_tower(2, 1, 4)
    big = quartic.top
    print("\ntower F_2 <= F_2 <= F_16:", quartic.describe())
    print("Frobenius orbit and subfield degree of a few elements:")
    for x in (1, 2, 6):
        orbit = []
        y = x
        for _ in range(quartic.n):
            orbit.append(format_element(big, y))
            y = big.frob(y, 1)
        print(
            f"  {format_element(big, x)}: orbit {orbit}, "
            f"lives in the degree-{quartic.subfield_degree(x)} subfield"
        )

    nested = build_tower(2, 2, 2)
    print("\nnested tower F_2 <= F_4 <= F_16:", nested.describe())
    w = nested.element(3, "mid")
    print(f"  mid element {w!r} embeds into the top as the same code")


if __name__ == "__main__":
    main()
