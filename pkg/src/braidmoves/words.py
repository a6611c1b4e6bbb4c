"""Braid words, free-group words, and the braid action on the free group.

Conventions, fixed once and used everywhere:

* A braid word lives in B_n, with Artin generators sigma_1 .. sigma_{n-1}.
  Letters are (index, sign) pairs; words are stored freely reduced
  (adjacent sigma_i sigma_i^-1 pairs cancelled).

* A free word lives in F_n, free on x_1 .. x_n (the loops around the n
  punctures of the plane, all based at a common point).  Words are stored
  freely reduced, so equality is plain sequence equality.

* B_n acts on F_n by the generator rules

      sigma_i:  x_i |-> x_{i+1},   x_{i+1} |-> x_{i+1}^-1 x_i x_{i+1},

  all other generators fixed, and a braid word g_1 g_2 ... g_k acts
  *functionally*: the rightmost letter acts first, so
  (g_1 ... g_k)(w) = g_1(g_2(... g_k(w))).  This orientation is pinned by
  anchors in the test suite, e.g. the 4-braid
  sigma_2^-2 sigma_1^-1 sigma_2^-1 sigma_3^-1 sigma_2^3 sigma_1 sigma_2 sigma_3
  must send x_3 to x_1.

Every value carries its strand/puncture count n, and binary operations
check it: the generator rules depend on n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

Letter = tuple[int, int]  # (index, sign) with sign in {+1, -1}


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for idx, sign in letters:
        if out and out[-1][0] == idx and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((idx, sign))
    return tuple(out)


def _inverse(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    return tuple((i, -s) for i, s in reversed(letters))


class WordError(ValueError):
    """Malformed word text or out-of-range generator index."""


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in x_1 .. x_n and their inverses."""

    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.n < 1:
            raise WordError(f"puncture count must be >= 1, got {self.n}")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.n:
                raise WordError(f"x{idx} out of range 1..{self.n}")
            if sign not in (1, -1):
                raise WordError(f"bad sign {sign}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @staticmethod
    def identity(n: int) -> FreeWord:
        return FreeWord(n, ())

    @staticmethod
    def generator(n: int, i: int, sign: int = 1) -> FreeWord:
        return FreeWord(n, ((i, sign),))

    @staticmethod
    def parse(text: str, n: int) -> FreeWord:
        """Parse whitespace-separated tokens "xK" / "xK^-1"."""
        letters: list[Letter] = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"x(\d+)(\^(-?\d+))?", tok)
            if not m:
                raise WordError(f"bad free-word token {tok!r}")
            idx = int(m.group(1))
            exp = int(m.group(3)) if m.group(3) else 1
            if exp == 0:
                continue
            sign = 1 if exp > 0 else -1
            letters.extend([(idx, sign)] * abs(exp))
        return FreeWord(n, tuple(letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.n != other.n:
            raise WordError(f"puncture count mismatch: {self.n} vs {other.n}")
        return FreeWord(self.n, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.n, _inverse(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sum(self, i: int | None = None) -> int:
        """Net exponent of x_i, or of all letters if i is None."""
        return sum(s for idx, s in self.letters if i is None or idx == i)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{i}" if s == 1 else f"x{i}^-1" for i, s in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({self.n}, {self})"


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in sigma_1 .. sigma_{n-1} and their inverses."""

    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        if self.n < 1:
            raise WordError(f"strand count must be >= 1, got {self.n}")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.n - 1:
                raise WordError(f"sigma_{idx} out of range 1..{self.n - 1}")
            if sign not in (1, -1):
                raise WordError(f"bad sign {sign}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @staticmethod
    def identity(n: int) -> BraidWord:
        return BraidWord(n, ())

    @staticmethod
    def generator(n: int, i: int, sign: int = 1) -> BraidWord:
        return BraidWord(n, ((i, sign),))

    @staticmethod
    def parse(text: str, n: int) -> BraidWord:
        """Parse a braid word.

        Accepts whitespace/comma-separated signed integers (k for sigma_k,
        -k for sigma_k^-1) or symbolic tokens "sK" / "sK^-1".
        """
        letters: list[Letter] = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"s(\d+)(\^(-?\d+))?", tok)
            if m:
                idx = int(m.group(1))
                exp = int(m.group(3)) if m.group(3) else 1
                if exp == 0:
                    continue
                sign = 1 if exp > 0 else -1
                letters.extend([(idx, sign)] * abs(exp))
                continue
            try:
                k = int(tok)
            except ValueError:
                raise WordError(f"bad braid token {tok!r}") from None
            if k == 0:
                raise WordError("0 is not a braid generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return BraidWord(n, tuple(letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise WordError(f"strand count mismatch: {self.n} vs {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, _inverse(self.letters))

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def is_trivial_word(self) -> bool:
        """True iff the reduced word is empty (not a solution of the word problem)."""
        return not self.letters

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Image of strand positions 1..n under the underlying permutation."""
        perm = list(range(self.n + 1))  # perm[k] = where position k ends up
        for i, _ in reversed(self.letters):
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm[1:])

    def __call__(self, w: FreeWord) -> FreeWord:
        """Apply the braid automorphism to a free word (rightmost letter first)."""
        if self.n != w.n:
            raise WordError(f"strand count mismatch: {self.n} vs {w.n}")
        letters = w.letters
        for i, sign in reversed(self.letters):
            letters = _apply_sigma(i, sign, letters)
        return FreeWord(self.n, letters)

    def __str__(self) -> str:
        if not self.letters:
            return ""
        return " ".join(str(i * s) for i, s in self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({self.n}, {str(self) or '1'})"


def _apply_sigma(i: int, sign: int, letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    if sign == 1:
        images = {i: ((i + 1, 1),), i + 1: ((i + 1, -1), (i, 1), (i + 1, 1))}
    else:
        images = {i + 1: ((i, 1),), i: ((i, 1), (i + 1, 1), (i, -1))}
    for idx, s in letters:
        img = images.get(idx, ((idx, 1),))
        out.extend(img if s == 1 else _inverse(img))
    return _reduce(out)


def act_braid_on_free(b: BraidWord, w: FreeWord) -> FreeWord:
    """The automorphism image b(w); see the module docstring for orientation."""
    return b(w)


def y_basis_word(i: int, n: int) -> FreeWord:
    """The second basis element y_i = x_1 ... x_{i-1} x_i^-1 x_{i-1}^-1 ... x_1^-1."""
    if not 1 <= i <= n:
        raise WordError(f"y{i} out of range 1..{n}")
    pre = [(k, 1) for k in range(1, i)]
    post = [(k, -1) for k in range(i - 1, 0, -1)]
    return FreeWord(n, tuple(pre + [(i, -1)] + post))


def x_in_y_letters(i: int, sign: int) -> tuple[Letter, ...]:
    """x_i^sign rewritten in the y-basis (the involution swapping the bases).

    x_i = y_1 ... y_{i-1} y_i^-1 y_{i-1}^-1 ... y_1^-1, mirroring the
    definition of y_i in the x-basis.  Letters here are (index, sign) pairs
    read as y-generators.
    """
    pre = [(k, 1) for k in range(1, i)]
    post = [(k, -1) for k in range(i - 1, 0, -1)]
    word = tuple(pre + [(i, -1)] + post)
    return word if sign == 1 else _inverse(word)
