"""Tour of the matrix representations.

Builds the generator matrices over Z[q^±1, t^±1], checks the defining
relations, peels off the Burau block, and decides a word problem through
the faithful block representation.

Run:  python demos/representations.py
"""

from braidmoves import (
    BraidWord,
    FreeWord,
    is_identity,
    rho_sigma,
    rho_x,
    tau,
    tau_plus,
    unreduced_burau,
)


def show(title, matrix):
    print(f"{title}:")
    for row in matrix.rows():
        print("   [" + ", ".join(str(p) for p in row) + "]")
    print()


def main():
    n = 4

    print("=" * 72)
    print("Generator matrices of the strand-0 representation, n = 4")
    print("=" * 72)
    show("rho(sigma_1)  (5 x 5, Burau block at rows/cols 1, 2)", rho_sigma(n, 1))
    show("rho(x_2)      (rows 0 and 2 carry the twist data)", rho_x(n, 2))

    print("The x-generator matrices are exactly invertible over the ring;")
    print("for example rho(x_2) rho(x_2^-1) = 1:")
    print("  product is identity:", (rho_x(n, 2) * rho_x(n, 2, -1)).is_identity())
    print()

    print("Defining relations, as exact matrix identities under tau:")
    lhs = tau(BraidWord.parse("1 2 1", n))
    rhs = tau(BraidWord.parse("2 1 2", n))
    print("  sigma_1 sigma_2 sigma_1 == sigma_2 sigma_1 sigma_2:", lhs == rhs)
    s1 = BraidWord.generator(n, 1)
    conj = tau(s1) * tau(FreeWord.generator(n, 1)) * tau(s1.inverse())
    print("  sigma_1 x_1 sigma_1^-1 == x_2:", conj == tau(FreeWord.generator(n, 2)))
    print()

    print("The lower-right n x n block of tau on braid words is the")
    print("unreduced Burau matrix, and multiplies homomorphically:")
    a, b = BraidWord.parse("1 -2", n), BraidWord.parse("3 3 2", n)
    print(
        "  burau(ab) == burau(a) burau(b):",
        unreduced_burau(a * b) == unreduced_burau(a) * unreduced_burau(b),
    )
    print()

    print("The block representation has rank n(n+1) = 20 and is faithful,")
    print("so comparing with the identity decides the word problem:")
    relator = BraidWord.parse("1 2 1 -2 -1 -2", 3)
    print("  sigma_1 sigma_2 sigma_1 sigma_2^-1 sigma_1^-1 sigma_2^-1 trivial:",
          is_identity(relator))
    print("  sigma_1^2 trivial:", is_identity(BraidWord.parse("1 1", 3)))
    print("  full block matrix of the identity braid is the block identity:",
          tau_plus(BraidWord.identity(3)).is_identity())


if __name__ == "__main__":
    main()
