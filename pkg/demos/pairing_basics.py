"""The homology classes of loops and their intersection pairing.

A loop in the n-times punctured plane, written as a word in the loops
x_1 .. x_n around the punctures, has a homology class with group-ring
coefficients; loops based at the second basepoint use the companion basis
y_i.  The pairing of a y-based class with an x-based class lands in the
matrix ring, and its vanishing certifies that the two loops can be pulled
apart.

Run:  python demos/pairing_basics.py
"""

from braidmoves import (
    BraidWord,
    FreeWord,
    MagnusElement,
    fox_x,
    fox_y,
    pair,
    star_x_to_y,
    tau,
    y_basis_word,
)


def main():
    n = 4

    print("Fox expansion of a conjugate loop:")
    w = FreeWord.parse("x2 x4 x2^-1", n)
    print(f"  [{w}]_x = {fox_x(w)}")
    print()

    print("The companion basis is y_i = x_1 .. x_{i-1} x_i^-1 x_{i-1}^-1 .. x_1^-1:")
    for i in (1, 2, 3):
        print(f"  y_{i} = {y_basis_word(i, n)}")
    print()

    print("Pairing values live in the 5 x 5 matrix ring; on basis classes")
    print("only the diagonal survives:")
    y3 = fox_y(y_basis_word(3, n))
    x3 = fox_x(FreeWord.generator(n, 3))
    value = pair(y3, x3)
    print(f"  <[y_3], [x_3]> symbolically: {value.symbolic}")
    print("  equals tau(x1 x2 x3) - tau(x1 x2):",
          value.evaluated == tau(FreeWord.parse("x1 x2 x3", n)) - tau(FreeWord.parse("x1 x2", n)))
    off = pair(fox_y(y_basis_word(1, n)), x3)
    print(f"  <[y_1], [x_3]> = {off.symbolic}  (zero: {off.is_zero()})")
    print()

    print("Every simple loop (an embedded loop around one puncture) obeys")
    print("the necessary condition <v*, v> = tau(word) - 1:")
    for text in ("x3", "x2 x4 x2^-1"):
        w = FreeWord.parse(text, n)
        v = fox_x(w)
        value = pair(star_x_to_y(v), v)
        ok = value.evaluated == tau(w) - MagnusElement.identity(n + 1)
        print(f"  {text:>12}: {ok}")
    print()

    print("Braids act on classes through their action on loop words:")
    braid = BraidWord.parse("-2 -2 -1 -2 -3 2 2 2 1 2 3", n)
    print(f"  the example braid sends x_3 to {braid(FreeWord.generator(n, 3))},")
    print(f"  so it sends the class e_3 to {fox_x(braid(FreeWord.generator(n, 3)))}")


if __name__ == "__main__":
    main()
