"""Braid words on n strands as signed generator sequences.

A word is a tuple of nonzero ints: letter +i stands for the i-th Artin
generator (strand i crosses over strand i+1), letter -i for its inverse.
Words are kept freely reduced; adjacent cancelling letters never survive
construction.  Letters act left-to-right: the first letter is the topmost
crossing, and every homomorphic image multiplies in word order,
rho(ab) = rho(a) rho(b).
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _free_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    stack: list[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """Freely reduced braid word in B(strands)."""

    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.strands}")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"letter {g} out of range for B({self.strands})")
        object.__setattr__(self, "letters", _free_reduce(tuple(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __pow__(self, n: int) -> "BraidWord":
        if n < 0:
            return inverse(self) ** (-n)
        w = BraidWord(self.strands)
        for _ in range(n):
            w = concat(w, self)
        return w


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse a whitespace-separated word like "1 -2 2" into a BraidWord.

    Raises ValueError on non-integer tokens, zero letters, or letters
    outside 1..strands-1 in absolute value.
    """
    tokens = text.split()
    letters = []
    for tok in tokens:
        try:
            g = int(tok)
        except ValueError as exc:
            raise ValueError(f"bad braid letter {tok!r}") from exc
        letters.append(g)
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(g) for g in w.letters)


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise ValueError("cannot concatenate words on different strand counts")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-g for g in reversed(w.letters)))


def conjugate(w: BraidWord, by: BraidWord) -> BraidWord:
    # by * w * by^-1
    return concat(concat(by, w), inverse(by))


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Underlying permutation as an image tuple: strand starting at
    position i (0-based) ends at position permutation(w)[i].

    Composition is left-to-right, so permutation(a*b)[i] applies a first;
    this matches the representation convention rho(ab) = rho(a) rho(b).
    """
    img = list(range(w.strands))
    for g in w.letters:
        i = abs(g) - 1
        # transposition of positions i, i+1 applied after what we have
        for s in range(w.strands):
            if img[s] == i:
                img[s] = i + 1
            elif img[s] == i + 1:
                img[s] = i
    return tuple(img)


def closure_components(w: BraidWord) -> int:
    """Number of link components of the braid closure = cycles of the
    underlying permutation."""
    img = permutation(w)
    seen = [False] * w.strands
    count = 0
    for s in range(w.strands):
        if seen[s]:
            continue
        count += 1
        j = s
        while not seen[j]:
            seen[j] = True
            j = img[j]
    return count


def writhe(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)
