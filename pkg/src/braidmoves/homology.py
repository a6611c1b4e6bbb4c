"""Homology classes of based loops in the punctured plane, via Fox calculus.

Two relative first-homology modules appear, one for each of two basepoints
on the boundary.  Both are free of rank n over the matrix ring, but here
coefficients are kept in the integral group ring ZF_n for as long as
possible: the * anti-involution is explicit there (reverse the word and
invert it), and evaluation through tau happens only when a pairing is
tested for zero.

* The x-based module has basis e_1 .. e_n with e_i = [x_i]; the class of a
  loop word w is d(w), where d is the derivation

      d(x_i) = e_i,    d(uv) = d(u) v + d(v),    d(u^-1) = -d(u) u^-1,

  with coefficients multiplying the basis on the right.

* The y-based module has basis f_1 .. f_n with f_i = [y_i], where
  y_i = x_1 .. x_{i-1} x_i^-1 x_{i-1}^-1 .. x_1^-1; the class of a loop
  word is e(w) for the derivation

      e(y_i) = f_i,    e(uv) = u e(v) + e(u),

  with coefficients on the left.  Input in the x-basis is rewritten
  through the involution that swaps the two bases.

Classes built from a loop word carry that word as provenance; the star
correspondence and the braid action use it ([w]^* = [w^-1] in the other
module, and beta.[w] = [beta(w)]).  The matrix-level generator actions are
implemented as well, but only so the tests can check the two routes
against each other; detection always goes through the free-group route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .magnus import MagnusElement, tau
from .words import (
    BraidWord,
    FreeWord,
    WordError,
    _reduce,
    x_in_y_letters,
    y_basis_word,
)


class GroupRingElement:
    """A finite Z-linear combination of free words: an element of ZF_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[FreeWord, int] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def zero(n: int) -> GroupRingElement:
        return GroupRingElement(n)

    @staticmethod
    def one(n: int) -> GroupRingElement:
        return GroupRingElement(n, {FreeWord.identity(n): 1})

    @staticmethod
    def from_word(w: FreeWord, coeff: int = 1) -> GroupRingElement:
        return GroupRingElement(w.n, {w: coeff})

    def _check(self, other: GroupRingElement):
        if self.n != other.n:
            raise WordError(f"puncture count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        res = GroupRingElement(self.n)
        res.terms = out
        return res

    def __neg__(self) -> GroupRingElement:
        res = GroupRingElement(self.n)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other) -> GroupRingElement:
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, FreeWord):
            other = GroupRingElement.from_word(other)
        self._check(other)
        out: dict[FreeWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        res = GroupRingElement(self.n)
        res.terms = out
        return res

    def __rmul__(self, other) -> GroupRingElement:
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, FreeWord):
            return GroupRingElement.from_word(other) * self
        return NotImplemented

    def scale(self, c: int) -> GroupRingElement:
        res = GroupRingElement(self.n)
        res.terms = {} if c == 0 else {w: c * v for w, v in self.terms.items()}
        return res

    def star(self) -> GroupRingElement:
        """The anti-involution of ZF_n: each word is inverted."""
        out: dict[FreeWord, int] = {}
        for w, c in self.terms.items():
            wi = w.inverse()
            out[wi] = out.get(wi, 0) + c
        return GroupRingElement(self.n, out)

    def augmentation(self) -> int:
        """Sum of integer coefficients (image under F_n -> 1)."""
        return sum(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def tau_terms(self):
        """(word, coefficient) pairs; hook for the Z-linear extension of tau."""
        return self.terms.items()

    def sorted_terms(self) -> list[tuple[FreeWord, int]]:
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0].letters))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for w, c in self.sorted_terms():
            body = str(w) if abs(c) == 1 else f"{abs(c)}*{w}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"GroupRingElement({self.n}, {self})"


def _format_class(prefix: str, coeffs: tuple[GroupRingElement, ...]) -> str:
    parts = [
        f"{prefix}{i}*({c})" for i, c in enumerate(coeffs, start=1) if not c.is_zero()
    ]
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyClassX:
    """An element of the x-based module, written sum_i e_i c_i."""

    n: int
    coeffs: tuple[GroupRingElement, ...]
    loop: FreeWord | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise WordError(f"expected {self.n} coefficients, got {len(self.coeffs)}")

    def coefficient(self, i: int) -> GroupRingElement:
        return self.coeffs[i - 1]

    def __add__(self, other: HomologyClassX) -> HomologyClassX:
        if self.n != other.n:
            raise WordError("puncture count mismatch")
        return HomologyClassX(
            self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> HomologyClassX:
        return HomologyClassX(self.n, tuple(-c for c in self.coeffs))

    def right_mul(self, r: GroupRingElement | FreeWord | int) -> HomologyClassX:
        """Componentwise right multiplication; drops loop provenance."""
        return HomologyClassX(self.n, tuple(c * r for c in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __str__(self) -> str:
        return _format_class("e", self.coeffs)


@dataclass(frozen=True)
class HomologyClassY:
    """An element of the y-based module, written sum_i c_i f_i."""

    n: int
    coeffs: tuple[GroupRingElement, ...]
    loop: FreeWord | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise WordError(f"expected {self.n} coefficients, got {len(self.coeffs)}")

    def coefficient(self, i: int) -> GroupRingElement:
        return self.coeffs[i - 1]

    def __add__(self, other: HomologyClassY) -> HomologyClassY:
        if self.n != other.n:
            raise WordError("puncture count mismatch")
        return HomologyClassY(
            self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> HomologyClassY:
        return HomologyClassY(self.n, tuple(-c for c in self.coeffs))

    def left_mul(self, r: GroupRingElement | FreeWord | int) -> HomologyClassY:
        """Componentwise left multiplication; drops loop provenance."""
        if isinstance(r, int):
            return HomologyClassY(self.n, tuple(c.scale(r) for c in self.coeffs))
        if isinstance(r, FreeWord):
            r = GroupRingElement.from_word(r)
        return HomologyClassY(self.n, tuple(r * c for c in self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __str__(self) -> str:
        return _format_class("f", self.coeffs)


# -- the derivations ----------------------------------------------------


def fox_x(w: FreeWord) -> HomologyClassX:
    """[w]_x = d(w), with w carried as provenance."""
    n = w.n
    coeffs: list[dict[FreeWord, int]] = [{} for _ in range(n)]
    # d(l_1 .. l_m) = sum_k d(l_k) * (l_{k+1} .. l_m)
    suffix: tuple = ()
    for idx, sign in reversed(w.letters):
        if sign == 1:
            word = FreeWord(n, suffix)
            c = 1
        else:
            word = FreeWord(n, ((idx, -1),) + suffix)
            c = -1
        bucket = coeffs[idx - 1]
        s = bucket.get(word, 0) + c
        if s:
            bucket[word] = s
        elif word in bucket:
            del bucket[word]
        suffix = _reduce(((idx, sign),) + suffix)
    return HomologyClassX(n, tuple(GroupRingElement(n, b) for b in coeffs), loop=w)


def _y_letters_of(w: FreeWord) -> tuple:
    out: list = []
    for idx, sign in w.letters:
        out.extend(x_in_y_letters(idx, sign))
    return _reduce(tuple(out))


def _y_word_to_x(n: int, yletters: tuple) -> FreeWord:
    out: list = []
    for idx, sign in yletters:
        piece = y_basis_word(idx, n)
        out.extend(piece.letters if sign == 1 else piece.inverse().letters)
    return FreeWord(n, tuple(out))


def fox_y(w: FreeWord) -> HomologyClassY:
    """[w]_y = e(w), with w carried as provenance.

    The input is an x-basis word; it is rewritten in the y-basis, expanded
    by the left Leibniz rule, and the coefficients are converted back to
    the x-basis.
    """
    n = w.n
    yletters = _y_letters_of(w)
    coeffs: list[dict[FreeWord, int]] = [{} for _ in range(n)]
    # e(l_1 .. l_m) = sum_k (l_1 .. l_{k-1}) e(l_k)
    prefix: tuple = ()
    for idx, sign in yletters:
        if sign == 1:
            word = _y_word_to_x(n, prefix)
            c = 1
        else:
            word = _y_word_to_x(n, _reduce(prefix + ((idx, -1),)))
            c = -1
        bucket = coeffs[idx - 1]
        s = bucket.get(word, 0) + c
        if s:
            bucket[word] = s
        elif word in bucket:
            del bucket[word]
        prefix = _reduce(prefix + ((idx, sign),))
    return HomologyClassY(n, tuple(GroupRingElement(n, b) for b in coeffs), loop=w)


# -- the star correspondence and the braid action -----------------------


class ProvenanceError(ValueError):
    """An operation needed the defining loop word, but none was carried."""


def star_x_to_y(v: HomologyClassX) -> HomologyClassY:
    """[w]_x^* = [w^-1]_y.  Requires loop provenance."""
    if v.loop is None:
        raise ProvenanceError(
            "star of an x-class needs its loop word; "
            "a basis-expansion form exists only at the group-ring level "
            "(see star_x_components)"
        )
    return fox_y(v.loop.inverse())


def star_y_to_x(w: HomologyClassY) -> HomologyClassX:
    """[w]_y^* = [w^-1]_x.  Requires loop provenance."""
    if w.loop is None:
        raise ProvenanceError("star of a y-class needs its loop word")
    return fox_x(w.loop.inverse())


@lru_cache(maxsize=None)
def _e_star(n: int, i: int) -> HomologyClassY:
    return fox_y(FreeWord.generator(n, i, -1))


def star_x_components(v: HomologyClassX) -> HomologyClassY:
    """Star computed from the basis expansion: sum e_i r_i |-> sum r_i^* e_i^*.

    Valid because the coefficients live in ZF_n, where * is word
    inversion; agrees with star_x_to_y on classes of loops (tested).
    """
    acc = HomologyClassY(v.n, tuple(GroupRingElement.zero(v.n) for _ in range(v.n)))
    for i in range(1, v.n + 1):
        r = v.coefficient(i)
        if not r.is_zero():
            acc = acc + _e_star(v.n, i).left_mul(r.star())
    return acc


def left_action(b: BraidWord, v: HomologyClassX) -> HomologyClassX:
    """[beta gamma]_x from [gamma]_x, via the free-group route."""
    if v.loop is None:
        raise ProvenanceError("braid action on an x-class needs its loop word")
    if b.n != v.n:
        raise WordError("strand count mismatch")
    return fox_x(b(v.loop))


def left_action_y(b: BraidWord, w: HomologyClassY) -> HomologyClassY:
    """[beta delta]_y from [delta]_y, via the free-group route."""
    if w.loop is None:
        raise ProvenanceError("braid action on a y-class needs its loop word")
    if b.n != w.n:
        raise WordError("strand count mismatch")
    return fox_y(b(w.loop))


# -- tau-evaluated components, computed in one sweep ----------------------


def tau_components_x(w: FreeWord) -> tuple[MagnusElement, ...]:
    """tau of each coefficient of [w]_x, without materializing ZF_n values.

    One right-to-left sweep maintains tau of the running suffix, so the
    cost is linear in len(w).  Agrees with evaluate_x(fox_x(w)); the tests
    hold the two routes against each other.
    """
    n = w.n
    comps = [MagnusElement.zero(n + 1)] * n
    suffix = MagnusElement.identity(n + 1)
    for idx, sign in reversed(w.letters):
        if sign == 1:
            comps[idx - 1] = comps[idx - 1] + suffix
            suffix = tau(FreeWord.generator(n, idx)) * suffix
        else:
            suffix = tau(FreeWord.generator(n, idx, -1)) * suffix
            comps[idx - 1] = comps[idx - 1] - suffix
    return tuple(comps)


@lru_cache(maxsize=None)
def _tau_y(n: int, idx: int, sign: int) -> MagnusElement:
    word = y_basis_word(idx, n)
    return tau(word if sign == 1 else word.inverse())


def tau_components_y(w: FreeWord) -> tuple[MagnusElement, ...]:
    """tau of each coefficient of [w]_y, by one sweep over the y-letters."""
    n = w.n
    comps = [MagnusElement.zero(n + 1)] * n
    prefix = MagnusElement.identity(n + 1)
    for idx, sign in _y_letters_of(w):
        if sign == 1:
            comps[idx - 1] = comps[idx - 1] + prefix
            prefix = prefix * _tau_y(n, idx, 1)
        else:
            prefix = prefix * _tau_y(n, idx, -1)
            comps[idx - 1] = comps[idx - 1] - prefix
    return tuple(comps)


# -- matrix-level actions (cross-validation only) ------------------------
#
# These realize the generator actions on tau-evaluated coefficient
# vectors.  Detection never calls them; the tests use them to check the
# free-group route against the matrix route.

XVector = tuple[MagnusElement, ...]
YVector = tuple[MagnusElement, ...]


def evaluate_x(v: HomologyClassX) -> XVector:
    return tuple(tau(c) if c else MagnusElement.zero(v.n + 1) for c in v.coeffs)


def evaluate_y(w: HomologyClassY) -> YVector:
    return tuple(tau(c) if c else MagnusElement.zero(w.n + 1) for c in w.coeffs)


def _tau_sigma(n: int, i: int, sign: int) -> MagnusElement:
    return tau(BraidWord.generator(n, i, sign))


def _tau_x(n: int, j: int, sign: int = 1) -> MagnusElement:
    return tau(FreeWord.generator(n, j, sign))


def x_vector_apply_sigma(n: int, i: int, sign: int, vec: XVector) -> XVector:
    """Left action of sigma_i^sign on an x-side coefficient vector."""
    out = list(vec)
    ts = _tau_sigma(n, i, sign)
    one = MagnusElement.identity(n + 1)
    if sign == 1:
        ri, rj = vec[i - 1], vec[i]
        out[i - 1] = ts * _tau_x(n, i) * rj
        out[i] = ts * ri + ts * (one - _tau_x(n, i + 1)) * rj
    else:
        ri, rj = vec[i - 1], vec[i]
        back = _tau_x(n, i, -1) * ts  # tau(x_i^-1 sigma_i^-1)
        out[i - 1] = ts * rj - (one - _tau_x(n, i + 1)) * back * ri
        out[i] = back * ri
    for k in range(n):
        if k not in (i - 1, i):
            out[k] = ts * vec[k]
    return tuple(out)


def x_vector_act(b: BraidWord, vec: XVector) -> XVector:
    """Left action of a braid word (rightmost letter first)."""
    for i, sign in reversed(b.letters):
        vec = x_vector_apply_sigma(b.n, i, sign, vec)
    return vec


def x_vector_right_mul(vec: XVector, m: MagnusElement) -> XVector:
    return tuple(r * m for r in vec)


def y_vector_apply_sigma(n: int, i: int, sign: int, vec: YVector) -> YVector:
    """Right action of sigma_i^sign on a y-side coefficient vector."""
    out = list(vec)
    ts = _tau_sigma(n, i, sign)
    one = MagnusElement.identity(n + 1)
    yi = tau(y_basis_word(i, n))
    if sign == -1:
        ci, cj = vec[i - 1], vec[i]
        yj = tau(y_basis_word(i + 1, n))
        out[i - 1] = ci * (one - yi) * ts + cj * ts
        out[i] = ci * yj * ts
    else:
        ci, cj = vec[i - 1], vec[i]
        fwd = ts * tau(y_basis_word(i + 1, n).inverse())  # tau(sigma_i y_{i+1}^-1)
        out[i - 1] = cj * fwd
        out[i] = ci * ts - cj * fwd * (one - yi)
    for k in range(n):
        if k not in (i - 1, i):
            out[k] = vec[k] * ts
    return tuple(out)


def y_vector_act(vec: YVector, b: BraidWord) -> YVector:
    """Right action of a braid word: v . (gh) = (v . g) . h."""
    for i, sign in b.letters:
        vec = y_vector_apply_sigma(b.n, i, sign, vec)
    return vec


def y_vector_left_mul(m: MagnusElement, vec: YVector) -> YVector:
    return tuple(m * c for c in vec)
