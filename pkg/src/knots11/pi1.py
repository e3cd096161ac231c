"""Action of twist words on pi_1 of the twice-punctured torus and the E-membership test.

Free generators ``a, b, c`` stand for the loops alpha-bar, beta-bar, gamma-bar.
The twist images below are one frozen choice: alpha meets beta and gamma once
each, beta and gamma are disjoint.  They pass the calibration in
``calibration_report``; base-point choices only change images up to conjugation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import ConsistencyError, DomainError
from .omega import Sl2Matrix, omega
from .words import FreeWord, TwistWord, parse_word

LOOP_GENERATORS = ("a", "b", "c")


class LoopWord(FreeWord):
    """Reduced word in alpha-bar (``a``), beta-bar (``b``), gamma-bar (``c``)."""

    ALPHABET = LOOP_GENERATORS


A = LoopWord.gen("a")
B = LoopWord.gen("b")
C = LoopWord.gen("c")
ONE = LoopWord.identity()


@dataclass(frozen=True)
class TwistEndo:
    """Endomorphism of the free group given by the images of a, b, c."""

    a: LoopWord
    b: LoopWord
    c: LoopWord

    @classmethod
    def identity(cls) -> "TwistEndo":
        return cls(A, B, C)

    def image(self, gen: str) -> LoopWord:
        return {"a": self.a, "b": self.b, "c": self.c}[gen]

    def apply(self, w: LoopWord) -> LoopWord:
        letters = []
        for gen, exp in w:
            img = self.image(gen)
            piece = img.letters if exp > 0 else img.inverse().letters
            letters.extend(piece * abs(exp))
        return LoopWord(letters)

    def __matmul__(self, other: "TwistEndo") -> "TwistEndo":
        """``self @ other`` is self after other: x -> self(other(x))."""
        return TwistEndo(self.apply(other.a), self.apply(other.b), self.apply(other.c))

    def images(self) -> dict[str, str]:
        return {g: str(self.image(g)) for g in LOOP_GENERATORS}

    def abelianized(self) -> list[list[int]]:
        """3x3 integer matrix on H_1 of the punctured surface; column j = image of generator j."""
        cols = [[w.exponent_sum(g) for g in LOOP_GENERATORS] for w in (self.a, self.b, self.c)]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def torus_matrix(self) -> Sl2Matrix:
        """Induced map on H_1(T) in the ordered base (beta, alpha); beta and gamma coincide there."""

        def coords(w: LoopWord) -> tuple[int, int]:
            return w.exponent_sum("b") + w.exponent_sum("c"), w.exponent_sum("a")

        (q, p), (s, r) = coords(self.b), coords(self.a)
        return Sl2Matrix(q, s, p, r)


_FORWARD: Mapping[str, TwistEndo] = {
    "ta": TwistEndo(A, A * B, A * C),
    "tb": TwistEndo(A * B.inverse(), B, C),
    "tc": TwistEndo(C.inverse() * A, B, C),
}
_BACKWARD: Mapping[str, TwistEndo] = {
    "ta": TwistEndo(A, A.inverse() * B, A.inverse() * C),
    "tb": TwistEndo(A * B, B, C),
    "tc": TwistEndo(C * A, B, C),
}

# i_#: pi_1(T - {P1, P2}) -> pi_1(H - A) = F(a, c); the image of beta-bar.
I_SHARP_BETA_IMAGE = ONE


def generator_action(g: str, inverse: bool = False) -> TwistEndo:
    table = _BACKWARD if inverse else _FORWARD
    if g not in table:
        raise DomainError(f"unknown twist generator {g!r}")
    return table[g]


def _power(e: TwistEndo, k: int) -> TwistEndo:
    out = TwistEndo.identity()
    for _ in range(k):
        out = out @ e
    return out


def word_action(w: TwistWord | str) -> TwistEndo:
    """psi_# for psi = g1 ... gn, i.e. g1_# after ... after gn_#."""
    if isinstance(w, str):
        w = parse_word(w)
    out = TwistEndo.identity()
    for gen, exp in w:
        out = out @ _power(generator_action(gen, exp < 0), abs(exp))
    return out


def i_sharp(w: LoopWord) -> LoopWord:
    letters = []
    for gen, exp in w:
        piece = I_SHARP_BETA_IMAGE if gen == "b" else LoopWord.gen(gen)
        letters.extend((piece if exp > 0 else piece.inverse()).letters * abs(exp))
    return LoopWord(letters)


def in_E(w: TwistWord | str) -> bool:
    """True iff i_#(psi_#(beta-bar)) is trivial."""
    return not i_sharp(word_action(w).b)


# Facts the frozen formulas must reproduce.
E_MEMBERSHIP_FACTS: tuple[tuple[str, bool], ...] = (
    ("tb", True),
    ("tc", True),
    ("tb ta tb tb ta tb", True),
    ("ta", False),
    ("1", True),
)


def calibration_report() -> list[str]:
    """Failures of the calibration suite (empty when the frozen choice is consistent)."""
    problems = []
    for text, expected in E_MEMBERSHIP_FACTS:
        if in_E(text) != expected:
            problems.append(f"in_E({text}) != {expected}")
    for g in ("ta", "tb", "tc"):
        word = TwistWord.gen(g)
        if word_action(word).torus_matrix() != omega(word):
            problems.append(f"abelianized {g} disagrees with omega")
        if generator_action(g) @ generator_action(g, True) != TwistEndo.identity():
            problems.append(f"{g} action is not inverted by its inverse")
    return problems


def check_calibration() -> None:
    problems = calibration_report()
    if problems:
        raise ConsistencyError("pi_1 action failed calibration: " + "; ".join(problems))
