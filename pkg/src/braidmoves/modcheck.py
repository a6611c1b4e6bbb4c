"""Fast nonzero certificates via an evaluation homomorphism.

Sending q, t to fixed units of Z/p (p prime) is a ring homomorphism from
Z[q^±1, t^±1], so a pairing value whose image is nonzero is exactly
certified nonzero.  The detectors use this as a screen: only candidates
whose image vanishes go on to the full exact evaluation, which alone
decides zero.  The evaluation points are fixed constants, so detection
output is deterministic; a nonzero value that happens to vanish at the
points only costs time, never correctness.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentPoly
from .magnus import rho_sigma, rho_x
from .words import FreeWord, y_basis_word

P = (1 << 61) - 1
Q0 = 1234567891
T0 = 987654323

IntMatrix = tuple[tuple[int, ...], ...]


def poly_mod(p: LaurentPoly) -> int:
    total = 0
    for (a, b), c in p.terms():
        total = (total + c * pow(Q0, a, P) * pow(T0, b, P)) % P
    return total


def matrix_mod(m) -> IntMatrix:
    return tuple(tuple(poly_mod(p) for p in row) for row in m.entries)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % P for col in cols) for row in a
    )


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple((x + y) % P for x, y in zip(r1, r2)) for r1, r2 in zip(a, b))


def mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(tuple((x - y) % P for x, y in zip(r1, r2)) for r1, r2 in zip(a, b))


def mat_zero(size: int) -> IntMatrix:
    return tuple((0,) * size for _ in range(size))


def mat_identity(size: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def is_zero_mod(a: IntMatrix) -> bool:
    return all(x == 0 for row in a for x in row)


@lru_cache(maxsize=None)
def sigma_mod(n: int, i: int, sign: int) -> IntMatrix:
    return matrix_mod(rho_sigma(n, i, sign))


@lru_cache(maxsize=None)
def x_mod(n: int, j: int, sign: int) -> IntMatrix:
    # tau(x_j^sign) = q^sign rho(x_j^sign)
    scale = pow(Q0, sign, P)
    return tuple(
        tuple(scale * v % P for v in row) for row in matrix_mod(rho_x(n, j, sign))
    )


@lru_cache(maxsize=None)
def y_mod(n: int, idx: int, sign: int) -> IntMatrix:
    word = y_basis_word(idx, n)
    return word_mod(word if sign == 1 else word.inverse())


def word_mod(w: FreeWord) -> IntMatrix:
    acc = mat_identity(w.n + 1)
    for idx, sign in w.letters:
        acc = mat_mul(acc, x_mod(w.n, idx, sign))
    return acc


@lru_cache(maxsize=None)
def t_mod(n: int, i: int) -> IntMatrix:
    pre = [mat_identity(n + 1)]
    for k in range(1, n + 1):
        pre.append(mat_mul(pre[-1], x_mod(n, k, 1)))
    return mat_sub(pre[i], pre[i - 1])


def components_x_mod(w: FreeWord) -> tuple[IntMatrix, ...]:
    n = w.n
    comps = [mat_zero(n + 1)] * n
    suffix = mat_identity(n + 1)
    for idx, sign in reversed(w.letters):
        if sign == 1:
            comps[idx - 1] = mat_add(comps[idx - 1], suffix)
            suffix = mat_mul(x_mod(n, idx, 1), suffix)
        else:
            suffix = mat_mul(x_mod(n, idx, -1), suffix)
            comps[idx - 1] = mat_sub(comps[idx - 1], suffix)
    return tuple(comps)


def components_y_mod(w: FreeWord) -> tuple[IntMatrix, ...]:
    from .homology import _y_letters_of

    n = w.n
    comps = [mat_zero(n + 1)] * n
    prefix = mat_identity(n + 1)
    for idx, sign in _y_letters_of(w):
        if sign == 1:
            comps[idx - 1] = mat_add(comps[idx - 1], prefix)
            prefix = mat_mul(prefix, y_mod(n, idx, 1))
        else:
            prefix = mat_mul(prefix, y_mod(n, idx, -1))
            comps[idx - 1] = mat_sub(comps[idx - 1], prefix)
    return tuple(comps)


def group_ring_mod(g) -> IntMatrix:
    acc = mat_zero(g.n + 1)
    for word, coeff in g.tau_terms():
        m = word_mod(word)
        acc = tuple(
            tuple((x + coeff * y) % P for x, y in zip(r1, r2))
            for r1, r2 in zip(acc, m)
        )
    return acc


def _paired_mod(n: int, ymats, xmats) -> IntMatrix:
    acc = mat_zero(n + 1)
    for i in range(1, n + 1):
        c, m = ymats[i - 1], xmats[i - 1]
        if is_zero_mod(c) or is_zero_mod(m):
            continue
        acc = mat_add(acc, mat_mul(mat_mul(c, t_mod(n, i)), m))
    return acc


def pairing_certainly_nonzero(yc, xc) -> bool:
    """True only when the pairing value is exactly nonzero."""
    if yc.loop is not None:
        ymats = components_y_mod(yc.loop)
    else:
        ymats = tuple(group_ring_mod(c) for c in yc.coeffs)
    if xc.loop is not None:
        xmats = components_x_mod(xc.loop)
    else:
        xmats = tuple(group_ring_mod(c) for c in xc.coeffs)
    return not is_zero_mod(_paired_mod(yc.n, ymats, xmats))


def loop_pairing_certainly_nonzero(yloop: FreeWord, xloop: FreeWord) -> bool:
    """Screen <[yloop]_y, [xloop]_x> without building the classes at all."""
    return not is_zero_mod(
        _paired_mod(yloop.n, components_y_mod(yloop), components_x_mod(xloop))
    )
