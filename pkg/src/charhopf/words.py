"""Words over the ordered alphabet x_1 < ... < x_theta.

A word is a tuple of 1-based letter indices; ``()`` is the empty word.
Python's tuple ordering is exactly the lexicographic order used here
(a proper prefix is smaller), so ``u < v`` on tuples is ``lex_lt``.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from . import kernels

Word = tuple


class ShirshovPair(NamedTuple):
    v: Word
    w: Word


def lex_lt(u: Word, v: Word) -> bool:
    return tuple(u) < tuple(v)


def is_lyndon(u: Word) -> bool:
    return kernels.is_lyndon(tuple(u))


def enumerate_lyndon(theta: int, max_len: int) -> list:
    """All Lyndon words of length <= max_len in lexicographic order (Duval)."""
    return kernels.lyndon_words(theta, max_len)


def shirshov(u: Word) -> ShirshovPair:
    """Split ``u`` at its lexicographically minimal proper ending."""
    u = tuple(u)
    if len(u) < 2:
        raise ValueError("Shirshov decomposition needs a word of length >= 2")
    k = kernels.min_suffix_start(u)
    return ShirshovPair(u[:k], u[k:])


def is_shirshov_closed(L: Iterable[Word], theta: int) -> bool:
    L = {tuple(u) for u in L}
    for u in L:
        if not is_lyndon(u):
            raise ValueError(f"{format_word(u)} is not a Lyndon word")
    if any((i,) not in L for i in range(1, theta + 1)):
        return False
    for u in L:
        if len(u) >= 2:
            v, w = shirshov(u)
            if v not in L or w not in L:
                return False
    return True


def shirshov_close(L: Iterable[Word], theta: int) -> set:
    """Smallest Shirshov-closed set containing ``L`` and the alphabet."""
    todo = [tuple(u) for u in L] + [(i,) for i in range(1, theta + 1)]
    out = set()
    while todo:
        u = todo.pop()
        if u in out:
            continue
        if not is_lyndon(u):
            raise ValueError(f"{format_word(u)} is not a Lyndon word")
        out.add(u)
        if len(u) >= 2:
            todo.extend(shirshov(u))
    return out


def reversed_word(u: Word) -> Word:
    return tuple(reversed(u))


def length(u: Word) -> int:
    return len(u)


# -- text format --------------------------------------------------------------------

def format_word(u: Word) -> str:
    """Dot-separated indices; the empty word is the empty string."""
    return ".".join(str(i) for i in u)


_COMPACT = re.compile(r"^(x\d+)+$")


def parse_word(text: str, theta: int | None = None) -> Word:
    """Read ``"1.1.2"``, a single index ``"2"``, or compact ``"x1x1x2"``.

    In compact form every ``x`` starts a new letter, so ``x12`` is letter 12.
    """
    s = text.strip().replace(" ", "")
    if not s:
        return ()
    if _COMPACT.match(s):
        letters = tuple(int(t) for t in s[1:].split("x"))
    else:
        try:
            letters = tuple(int(t) for t in s.split("."))
        except ValueError:
            raise ValueError(f"cannot read word {text!r}") from None
    if any(i < 1 for i in letters) or (theta is not None and any(i > theta for i in letters)):
        raise ValueError(f"letter index out of range in {text!r}")
    return letters
