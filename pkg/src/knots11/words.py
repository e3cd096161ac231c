"""Free-group words over Dehn-twist generators and over the kernel generators.

A word ``g1 g2 ... gn`` denotes the composite in which ``gn`` acts first on
the surface, so images under homomorphisms multiply in the same left-to-right
order.  Relations of the mapping class group are not modelled: words are
compared as free words.

Text syntax: whitespace-separated tokens ``ta tb tc tm tl``, each optionally
followed by ``^<int>``, e.g. ``ta^-2 tb tc^3``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import ClassVar, Iterable, Iterator

from .errors import WordSyntaxError

Letter = tuple[str, int]

TWIST_GENERATORS = ("ta", "tb", "tc")
KERNEL_GENERATORS = ("tm", "tl")

_TOKEN = re.compile(r"^([A-Za-z]+)(?:\^([+-]?\d+))?$")


def _reduced(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            if merged:
                out[-1] = (gen, merged)
            else:
                out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True, init=False)
class FreeWord:
    """Reduced word in a free group; always stored in normal form."""

    letters: tuple[Letter, ...]
    ALPHABET: ClassVar[tuple[str, ...]] = ()

    def __init__(self, letters: Iterable[Letter] = ()):
        raw = [(str(g), int(e)) for g, e in letters]
        for gen, _ in raw:
            if gen not in self.ALPHABET:
                raise ValueError(f"{gen!r} is not a generator of {type(self).__name__}")
        object.__setattr__(self, "letters", _reduced(raw))

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def gen(cls, name: str, exp: int = 1):
        return cls(((name, exp),))

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self.letters + other.letters)

    def inverse(self):
        return type(self)((g, -e) for g, e in reversed(self.letters))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return type(self)(self.letters * k)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        """Number of syllables (maximal runs of one generator)."""
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def length(self) -> int:
        """Word length counted with multiplicity."""
        return sum(abs(e) for _, e in self.letters)

    def exponent_sum(self, gen: str) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class TwistWord(FreeWord):
    """Word in the twists ``ta, tb, tc`` about the curves alpha, beta, gamma."""

    ALPHABET = TWIST_GENERATORS


class KernelWord(FreeWord):
    """Word in the kernel generators ``tm`` (meridian slide) and ``tl`` (longitude slide)."""

    ALPHABET = KERNEL_GENERATORS


TA = TwistWord.gen("ta")
TB = TwistWord.gen("tb")
TC = TwistWord.gen("tc")
TM = KernelWord.gen("tm")
TL = KernelWord.gen("tl")

# tm = tb tc^-1 and tl = tm^-1 ta tm ta^-1, written out in twists.
KERNEL_EXPANSION: dict[str, TwistWord] = {
    "tm": TB * TC.inverse(),
    "tl": (TB * TC.inverse()).inverse() * TA * (TB * TC.inverse()) * TA.inverse(),
}


def reduce(letters: Iterable[Letter]) -> TwistWord:
    return TwistWord(letters)


def compose(u: TwistWord, v: TwistWord) -> TwistWord:
    return u * v


def invert(u: TwistWord) -> TwistWord:
    return u.inverse()


def expand_kernel(w: KernelWord) -> TwistWord:
    """Rewrite a kernel word in the twist alphabet."""
    out: list[Letter] = []
    for gen, exp in w:
        piece = KERNEL_EXPANSION[gen] if exp > 0 else KERNEL_EXPANSION[gen].inverse()
        out.extend(piece.letters * abs(exp))
    return TwistWord(out)


def _tokens(text: str) -> Iterator[tuple[int, str]]:
    for i, tok in enumerate(text.split()):
        yield i, tok


def _parse(text: str, allowed: tuple[str, ...]) -> list[Letter]:
    letters: list[Letter] = []
    for pos, tok in _tokens(text):
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise WordSyntaxError("malformed token", tok, pos)
        gen, exp = m.group(1), m.group(2)
        if gen not in allowed:
            raise WordSyntaxError("unknown generator", tok, pos)
        e = 1 if exp is None else int(exp)
        if e == 0:
            raise WordSyntaxError("zero exponent", tok, pos)
        letters.append((gen, e))
    return letters


def parse_word(text: str) -> TwistWord:
    """Parse twist syntax; kernel tokens ``tm``/``tl`` are expanded in place."""
    out: list[Letter] = []
    for gen, exp in _parse(text, TWIST_GENERATORS + KERNEL_GENERATORS):
        if gen in KERNEL_GENERATORS:
            out.extend(expand_kernel(KernelWord.gen(gen, exp)).letters)
        else:
            out.append((gen, exp))
    return TwistWord(out)


def parse_kernel_word(text: str) -> KernelWord:
    return KernelWord(_parse(text, KERNEL_GENERATORS))
