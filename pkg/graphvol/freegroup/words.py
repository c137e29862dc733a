"""Words in finitely generated free groups.

A :class:`Word` is always freely reduced: construction checks every letter
against the alphabet and cancels inverse pairs, so the invariant holds for
every value in circulation. Letters are ``(generator, sign)`` pairs over an explicitly
declared alphabet.
"""

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import overload

from graphvol.core.config import settings
from graphvol.core.errors import GraphVolError


class UnknownGeneratorError(GraphVolError):
    """A letter names a generator outside the declared alphabet."""

    code = "unknown-generator"


class WordSyntaxError(GraphVolError):
    """Word text could not be tokenized."""

    code = "word-syntax"

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True, order=True)
class Letter:
    """A signed generator."""

    generator: str
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def __invert__(self) -> "Letter":
        return self.inverse()

    def __str__(self) -> str:
        return self.generator if self.sign == 1 else f"{self.generator}'"


def default_alphabet() -> tuple[str, ...]:
    """Alphabet used when none is declared (``x, y, z`` unless configured)."""
    return tuple(settings.default_alphabet)


def _cancels(a: Letter, b: Letter) -> bool:
    return a.generator == b.generator and a.sign == -b.sign


def _free_reduce(raw: Iterable[Letter], alphabet: Sequence[str]) -> tuple[Letter, ...]:
    known = set(alphabet)
    stack: list[Letter] = []
    for letter in raw:
        if letter.generator not in known:
            raise UnknownGeneratorError(
                f"generator {letter.generator!r} is not in alphabet {{{', '.join(alphabet)}}}"
            )
        if stack and _cancels(stack[-1], letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; unreduced letters are reduced on construction.

    Raises:
        UnknownGeneratorError: a letter is not drawn from ``alphabet``
    """

    letters: tuple[Letter, ...] = ()
    alphabet: tuple[str, ...] = ("x", "y", "z")

    def __post_init__(self) -> None:
        letters = _free_reduce(self.letters, self.alphabet)
        if letters != self.letters:
            object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @overload
    def __getitem__(self, index: int) -> Letter: ...

    @overload
    def __getitem__(self, index: slice) -> "Word": ...

    def __getitem__(self, index: int | slice) -> "Letter | Word":
        if isinstance(index, slice):
            # a contiguous piece of a reduced word is reduced
            return Word(self.letters[index], self.alphabet)
        return self.letters[index]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters) if self.letters else "1"

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + other.letters, self._joint_alphabet(other))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        result = identity(self.alphabet)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __invert__(self) -> "Word":
        return self.inverse()

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)), self.alphabet)

    def conjugate_by(self, c: "Word") -> "Word":
        """Return ``c w c^-1``."""
        return c * self * c.inverse()

    def rotate(self, k: int) -> "Word":
        """Cyclic rotation by ``k`` letters; reduced only for cyclically reduced words."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return reduce(self.letters[k:] + self.letters[:k], self.alphabet)

    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or not _cancels(self.letters[-1], self.letters[0])

    def _joint_alphabet(self, other: "Word") -> tuple[str, ...]:
        if other.alphabet == self.alphabet:
            return self.alphabet
        extra = tuple(g for g in other.alphabet if g not in self.alphabet)
        return self.alphabet + extra


def identity(alphabet: Sequence[str] | None = None) -> Word:
    """The empty word."""
    return Word((), tuple(alphabet) if alphabet is not None else default_alphabet())


def reduce(raw: Iterable[Letter], alphabet: Sequence[str] | None = None) -> Word:
    """Freely reduce a letter sequence.

    Raises:
        UnknownGeneratorError: a letter is not drawn from ``alphabet``
    """
    gens = tuple(alphabet) if alphabet is not None else default_alphabet()
    return Word(tuple(raw), gens)


def cyclic_reduce(w: Word) -> Word:
    """Strip matching first/last letters until the word is cyclically reduced."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and _cancels(letters[i], letters[j]):
        i += 1
        j -= 1
    return Word(letters[i : j + 1], w.alphabet)


def conjugate_test(u: Word, v: Word) -> bool:
    """Decide conjugacy by matching cyclic reductions up to rotation.

    The cyclic reduction of ``u`` is conjugate to ``v``'s iff one is a rotation
    of the other; rotations are found by searching the doubled word.
    """
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = cu.letters + cu.letters
    n = len(cv)
    return any(doubled[k : k + n] == cv.letters for k in range(n))


def abelianize(w: Word) -> dict[str, int]:
    """Exponent sum of each generator (the image in the abelianization)."""
    sums = {g: 0 for g in w.alphabet}
    for letter in w.letters:
        sums[letter.generator] += letter.sign
    return sums


_TOKEN = re.compile(r"\s*(?:(\*)|([A-Za-z])(\^-1|\^1|')?)")


def parse_word(text: str, alphabet: Sequence[str] | None = None) -> Word:
    """Parse the word syntax ``x y' x^-1 * z`` (whitespace ignored).

    Raises:
        WordSyntaxError: unrecognised characters
        UnknownGeneratorError: letters outside ``alphabet``
    """
    if text.strip() in ("", "1"):
        return identity(alphabet)
    letters: list[Letter] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if match is None or match.end() == pos:
            bad = len(stripped) - len(stripped[pos:].lstrip())
            raise WordSyntaxError(f"unexpected character {stripped[bad]!r}", bad)
        if match.group(2):
            sign = -1 if match.group(3) in ("'", "^-1") else 1
            letters.append(Letter(match.group(2), sign))
        pos = match.end()
    return reduce(letters, alphabet)
