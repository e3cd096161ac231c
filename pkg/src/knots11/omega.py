"""The homomorphism to SL(2,Z), lens-space readout and trivial-knot words."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import DomainError
from .words import TA, TB, TwistWord


@dataclass(frozen=True)
class Sl2Matrix:
    """Integer matrix ``[[q, s], [p, r]]`` of determinant one.

    Columns are the images of beta and alpha in the ordered basis (beta, alpha)
    of H1 of the torus.
    """

    q: int
    s: int
    p: int
    r: int

    def __post_init__(self):
        if self.q * self.r - self.s * self.p != 1:
            raise DomainError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def identity(cls) -> "Sl2Matrix":
        return cls(1, 0, 0, 1)

    def __matmul__(self, o: "Sl2Matrix") -> "Sl2Matrix":
        return Sl2Matrix(
            self.q * o.q + self.s * o.p,
            self.q * o.s + self.s * o.r,
            self.p * o.q + self.r * o.p,
            self.p * o.s + self.r * o.r,
        )

    def inverse(self) -> "Sl2Matrix":
        return Sl2Matrix(self.r, -self.s, -self.p, self.q)

    def rows(self) -> list[list[int]]:
        return [[self.q, self.s], [self.p, self.r]]

    def __str__(self) -> str:
        return f"[[{self.q},{self.s}],[{self.p},{self.r}]]"


GENERATOR_MATRICES = {
    "ta": Sl2Matrix(1, 0, 1, 1),
    "tb": Sl2Matrix(1, -1, 0, 1),
    "tc": Sl2Matrix(1, -1, 0, 1),
}


def omega(w: TwistWord) -> Sl2Matrix:
    # Omega(ta^k) = [[1,0],[k,1]] and Omega(tb^k) = Omega(tc^k) = [[1,-k],[0,1]]
    q, s, p, r = 1, 0, 0, 1
    for gen, k in w:
        if gen == "ta":
            q, p = q + s * k, p + r * k
        else:
            s, r = s - q * k, r - p * k
    return Sl2Matrix(q, s, p, r)


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with 0 <= q < p; (1, 0) is S^3 and (0, 1) is S^1 x S^2."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0:
            raise DomainError("p must be non-negative")
        if p == 0 and q != 1:
            raise DomainError("the only lens space with p = 0 is L(0,1)")
        if p == 1 and q != 0:
            raise DomainError("L(1,q) is written L(1,0)")
        if p > 1 and not (0 < q < p and gcd(p, q) == 1):
            raise DomainError(f"L({p},{q}) needs 0 < q < p coprime")

    def homeomorphic(self, other: "LensSpace") -> bool:
        """L(p,q) ~ L(p,q') iff q' = +-q^{+-1} mod p."""
        if self.p != other.p:
            return False
        p = self.p
        if p <= 1:
            return True
        qi = pow(self.q, -1, p)
        return other.q % p in {self.q % p, -self.q % p, qi, -qi % p}

    def __str__(self) -> str:
        if (self.p, self.q) == (1, 0):
            return "L(1,0) = S^3"
        if (self.p, self.q) == (0, 1):
            return "L(0,1) = S^1 x S^2"
        return f"L({self.p},{self.q})"


def lens_space(p: int, q: int) -> LensSpace:
    """Normalise |p|, |q| into a LensSpace."""
    p, q = abs(p), abs(q)
    if p == 0:
        return LensSpace(0, 1)
    if p == 1:
        return LensSpace(1, 0)
    return LensSpace(p, q % p)


def lens_space_of(w: TwistWord) -> LensSpace:
    m = omega(w)
    return lens_space(m.p, m.q)


def continued_fraction(p: int, q: int) -> list[int]:
    """Regular expansion p/q = a1 + 1/(a2 + ...); last term >= 2 when there are several."""
    terms = []
    while q:
        a, rem = divmod(p, q)
        terms.append(a)
        p, q = q, rem
    return terms


def trivial_knot_word(p: int, q: int) -> TwistWord:
    """A word representing the trivial knot in L(p, q).

    ``(1, 0)`` gives ``tb ta tb`` and ``(0, 1)`` the empty word.
    """
    if (p, q) == (1, 0):
        return TB * TA * TB
    if (p, q) == (0, 1):
        return TwistWord.identity()
    if not 0 < q < p:
        raise DomainError(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise DomainError(f"gcd({p},{q}) != 1")
    terms = continued_fraction(p, q)
    letters = [("ta", a) if i % 2 == 0 else ("tb", -a) for i, a in enumerate(terms)]
    w = TwistWord(letters)
    if len(terms) % 2 == 0:
        w = w * TB * TA * TB
    return w


def is_kernel(w: TwistWord) -> bool:
    return omega(w) == Sl2Matrix.identity()


def factor_off_trivial(w: TwistWord, p: int, q: int) -> Optional[TwistWord]:
    """Return the kernel word w' with ``w = w' * trivial_knot_word(p, q)``.

    None when ``omega(w) != omega(trivial_knot_word(p, q))``; another
    representative of the same knot may still factor.
    """
    prefix = w * trivial_knot_word(p, q).inverse()
    return prefix if is_kernel(prefix) else None
