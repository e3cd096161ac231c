"""Parametric representation K(a, b, c, r) and its equivalence moves."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError


@dataclass(frozen=True, order=True)
class ParamKnot:
    a: int
    b: int
    c: int
    r: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise DomainError(f"a, b, c must be non-negative: {self.astuple()}")
        d = self.d
        if d == 0 and self.r != 0:
            raise DomainError("r must be 0 when d = 0")
        if d > 0 and not 0 <= self.r < d:
            raise DomainError(f"r={self.r} not reduced mod d={d}; use normalize()")

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.r)

    def __str__(self) -> str:
        return "K({},{},{},{})".format(*self.astuple())


def normalize(a: int, b: int, c: int, r: int) -> ParamKnot:
    if min(a, b, c) < 0:
        raise DomainError(f"a, b, c must be non-negative: {(a, b, c)}")
    d = 2 * a + b + c
    return ParamKnot(a, b, c, r % d if d else 0)


def move_a(k: ParamKnot) -> ParamKnot:
    """K(a,b,c,r) -> K(a,c,b,-r)."""
    return normalize(k.a, k.c, k.b, -k.r)


def move_b(k: ParamKnot) -> Optional[ParamKnot]:
    """K(a,0,c,r) <-> K(a,c,0,r); None when neither b nor c vanishes."""
    if k.b == 0:
        return ParamKnot(k.a, k.c, 0, k.r)
    if k.c == 0:
        return ParamKnot(k.a, 0, k.b, k.r)
    return None


def neighbours(k: ParamKnot) -> list[ParamKnot]:
    out = [move_a(k)]
    mb = move_b(k)
    if mb is not None:
        out.append(mb)
    return out


def equivalent_under_moves(k1: ParamKnot, k2: ParamKnot, depth: int) -> bool:
    """True if k2 is reached from k1 by at most ``depth`` moves.

    False only means "not within depth"; it says nothing about inequivalence.
    """
    return move_path(k1, k2, depth) is not None


def move_path(k1: ParamKnot, k2: ParamKnot, depth: int) -> Optional[list[ParamKnot]]:
    """Shortest chain of tuples from k1 to k2 using at most ``depth`` moves."""
    if depth < 0:
        raise DomainError("depth must be non-negative")
    parent: dict[ParamKnot, Optional[ParamKnot]] = {k1: None}
    queue = deque([(k1, 0)])
    while queue:
        cur, dist = queue.popleft()
        if cur == k2:
            path = [cur]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        if dist == depth:
            continue
        for nxt in neighbours(cur):
            if nxt not in parent:
                parent[nxt] = cur
                queue.append((nxt, dist + 1))
    return None


def orbit(k: ParamKnot) -> set[ParamKnot]:
    """All tuples reachable from k by the two moves (a finite set)."""
    seen = {k}
    stack = [k]
    while stack:
        for nxt in neighbours(stack.pop()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def known_invalid_reason(k: ParamKnot) -> Optional[str]:
    if k.a > 1 and k.b == 0 and k.c == k.a and k.r == k.a:
        return "(a,0,a,a) with a > 1 does not determine a knot"
    if k.a == 1 and k.b == 0 and k.c % 2 == 0 and k.r == 2 % k.d:
        return "(1,0,c,2) with c even does not determine a knot"
    return None


def is_known_invalid(k: ParamKnot) -> bool:
    return known_invalid_reason(k) is not None
