"""Reduced words in a finitely generated free group.

Letters are pairs (generator index >= 1, sign +1/-1).  Words reduce on
construction, so every FreeWord in circulation is freely reduced.

Text form: lowercase letters are generators, uppercase their inverses.
The letter t is reserved for the distinguished stable generator of a
mapping torus, so fiber generators run a, b, c, ..., s, u, v, ...
"""

from __future__ import annotations

from .errors import WordParseError

# lowercase alphabet with t removed; fiber generator i prints as FIBER_ALPHABET[i-1]
FIBER_ALPHABET = "abcdefghijklmnopqrsuvwxyz"


def _free_reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


class FreeWord:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        ls = []
        for item in letters:
            g, s = item
            g = int(g)
            s = int(s)
            if g < 1 or s not in (1, -1):
                raise ValueError(f"bad letter {item!r}")
            ls.append((g, s))
        object.__setattr__(self, "letters", _free_reduce(ls))

    @classmethod
    def generator(cls, g, sign=1):
        return cls([(g, sign)])

    @classmethod
    def empty(cls):
        return cls()

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self.letters + other.letters)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        w = FreeWord.empty()
        for _ in range(k):
            w = w * self
        return w

    def inverse(self):
        return FreeWord([(g, -s) for g, s in reversed(self.letters)])

    def conjugated_by(self, w):
        """w * self * w^-1."""
        return w * self * w.inverse()

    def exponent_sum(self, gen):
        return sum(s for g, s in self.letters if g == gen)

    def max_generator(self):
        return max((g for g, _ in self.letters), default=0)

    def __repr__(self):
        return f"FreeWord({format_word(self)!r})"


def reduce_word(letters):
    """Freely reduce a raw letter sequence."""
    return FreeWord(letters)


def commutator(u, v):
    """[u, v] = u^-1 v^-1 u v."""
    return u.inverse() * v.inverse() * u * v


def parse_word(s, fiber_rank, allow_stable=False):
    """Parse a word string.

    Lowercase letters map to fiber generators 1..fiber_rank through
    FIBER_ALPHABET; 't'/'T' map to the stable generator fiber_rank+1 when
    allow_stable is set.  Whitespace is ignored.
    """
    letters = []
    stable = fiber_rank + 1
    for pos, ch in enumerate(s):
        if ch.isspace():
            continue
        low = ch.lower()
        sign = 1 if ch.islower() else -1
        if low == "t":
            if not allow_stable:
                raise WordParseError(
                    f"stable letter 't' not allowed here (position {pos})"
                )
            letters.append((stable, sign))
            continue
        idx = FIBER_ALPHABET.find(low)
        if idx < 0 or not ch.isalpha():
            raise WordParseError(f"unknown letter {ch!r} (position {pos})")
        if idx + 1 > fiber_rank:
            raise WordParseError(
                f"letter {ch!r} exceeds fiber rank {fiber_rank} (position {pos})"
            )
        letters.append((idx + 1, sign))
    return FreeWord(letters)


def format_word(w, stable_index=None):
    """Inverse of parse_word; the empty word renders as the empty string."""
    chars = []
    for g, s in w.letters:
        if stable_index is not None and g == stable_index:
            ch = "t"
        else:
            if g > len(FIBER_ALPHABET):
                raise ValueError(f"generator {g} out of printable range")
            ch = FIBER_ALPHABET[g - 1]
        chars.append(ch if s > 0 else ch.upper())
    return "".join(chars)
