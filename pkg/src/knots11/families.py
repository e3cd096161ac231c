"""Explicit representations of torus knots, two-bridge knots and trivial knots."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import DomainError
from .params import ParamKnot, normalize
from .words import TA, TB, TL, TM, KernelWord, TwistWord, expand_kernel

PSI_10 = TB * TA * TB


@dataclass(frozen=True)
class TorusKnot:
    k: int
    h: int

    def __post_init__(self):
        if not 0 < self.k < self.h:
            raise DomainError(f"torus knot t({self.k},{self.h}) needs 0 < k < h")
        if gcd(self.k, self.h) != 1:
            raise DomainError(f"torus knot t({self.k},{self.h}) needs gcd(k,h) = 1")

    def __str__(self) -> str:
        return f"t({self.k},{self.h})"


def torus_epsilon(t: TorusKnot) -> tuple[int, ...]:
    """(eps_1, ..., eps_h); eps_{h-j} = floor((j+1)k/h) - floor((j+2)k/h)."""
    k, h = t.k, t.h
    eps = [0] * h
    for j in range(h):
        eps[h - j - 1] = (j + 1) * k // h - (j + 2) * k // h
    return tuple(eps)


def torus_kernel_word(t: TorusKnot) -> KernelWord:
    eps = torus_epsilon(t)
    w = KernelWord.identity()
    for j in range(t.h):
        w = w * TL.inverse() * TM ** eps[t.h - j - 1]
    return w


def torus_word(t: TorusKnot) -> tuple[KernelWord, TwistWord]:
    """(kernel prefix, full twist word); the full word ends in ``tb ta tb``."""
    prefix = torus_kernel_word(t)
    return prefix, expand_kernel(prefix) * PSI_10


@dataclass(frozen=True)
class ConwayEven:
    """Conway parameters [2a1, 2b1, ..., 2an, 2bn] stored as pairs (ai, bi)."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise DomainError("at least one pair of Conway parameters is required")
        for a, b in self.pairs:
            if a == 0 or b == 0:
                raise DomainError("Conway parameters must be nonzero")

    @classmethod
    def from_parameters(cls, params: Sequence[int]) -> "ConwayEven":
        if len(params) % 2 or not params:
            raise DomainError("need an even, nonzero number of Conway parameters")
        if any(x % 2 for x in params):
            raise DomainError("all Conway parameters must be even")
        halves = [x // 2 for x in params]
        return cls(tuple(zip(halves[::2], halves[1::2])))

    def parameters(self) -> list[int]:
        return [2 * x for pair in self.pairs for x in pair]


T_EPS = TL.inverse() * TM * TL * TM.inverse()


def twobridge_kernel_word(c: ConwayEven) -> KernelWord:
    """tm^-bn teps^an ... tm^-b1 teps^a1 with teps = tl^-1 tm tl tm^-1."""
    w = KernelWord.identity()
    for a, b in reversed(c.pairs):
        w = w * TM ** (-b) * T_EPS ** a
    return w


def twobridge_word(c: ConwayEven) -> TwistWord:
    return PSI_10 * expand_kernel(twobridge_kernel_word(c))


def trivial_param(p: int, q: int) -> ParamKnot:
    if p < 0:
        raise DomainError("p must be non-negative")
    if (p, q) not in {(1, 0), (0, 0)} and not 0 <= q < p:
        raise DomainError(f"need 0 <= q < p, got ({p},{q})")
    return ParamKnot(0, 0, p, q)


def twobridge_param(a: int, r: int) -> ParamKnot:
    """The two-bridge knot of type (2a+1, 2r)."""
    if a < 1:
        raise DomainError("a must be positive")
    if gcd(2 * a + 1, 2 * r) != 1:
        raise DomainError(f"gcd({2 * a + 1},{2 * r}) != 1")
    return normalize(a, 0, 1, r)


def family_qk_plus_1(k: int, q: int) -> ParamKnot:
    """t(k, qk+1), k > 1, q > 0."""
    return normalize(1, k - 2, (k - 1) * (2 * q - 1), k)


def family_qk_minus_1(k: int, q: int) -> ParamKnot:
    """t(k, qk-1), k > 1, q > 1."""
    return normalize(1, k - 2, (k - 1) * (2 * q - 1) - 2, (k - 1) * (2 * q - 3))


def family_sq1(s: int, q: int, q1: int) -> ParamKnot:
    """t(s q1 + 1, (s q1 + 1) q + s), s > 1, q, q1 > 0."""
    return normalize(
        q1,
        q1 * (2 * q * q1 * (s - 1) + 2 * q + s - 2),
        1 + (s - 2) * q1,
        2 * q1 * q1 * (s - 1) + s * q1 + 1,
    )


def closed_form_candidates(t: TorusKnot) -> list[tuple[str, ParamKnot]]:
    """Every closed-form family covering t, in priority order."""
    k, h = t.k, t.h
    out: list[tuple[str, ParamKnot]] = []
    if k > 1 and (h - 1) % k == 0:
        out.append(("qk+1", family_qk_plus_1(k, (h - 1) // k)))
    if k > 1 and (h + 1) % k == 0 and (h + 1) // k > 1:
        out.append(("qk-1", family_qk_minus_1(k, (h + 1) // k)))
    # k = s q1 + 1 with s > 1, q1 > 0; then h = k q + s with q > 0.
    for s in range(2, k):
        if (k - 1) % s == 0 and h > s and (h - s) % k == 0:
            out.append(("sq'+1", family_sq1(s, (h - s) // k, (k - 1) // s)))
    return out


def torus_param_closed_form(t: TorusKnot) -> Optional[tuple[str, ParamKnot]]:
    """Highest-priority closed form (family tag, tuple), or None if not covered."""
    cands = closed_form_candidates(t)
    return cands[0] if cands else None
