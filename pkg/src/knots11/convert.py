"""Integer state machine turning a torus-knot word into its K(a,b,c,r) tuple."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .families import TorusKnot, torus_epsilon
from .params import ParamKnot, normalize


@dataclass(frozen=True)
class ConversionState:
    a: int
    b: int
    c: int
    r: int
    z: int

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def knot(self) -> ParamKnot:
        return normalize(self.a, self.b, self.c, self.r)

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.r, self.z)


INITIAL_STATE = ConversionState(0, 0, 1, 0, 0)


def step(s: ConversionState, eps: int) -> ConversionState:
    """Consume one factor ``tl^-1 tm^eps``."""
    if eps not in (0, -1):
        raise DomainError(f"eps must be 0 or -1, got {eps}")
    a, b, c, r, z = s.astuple()
    d = 2 * a + b + c
    if d <= 0:
        raise ConsistencyError(f"d = {d} in state {s}")
    pivot = -1 - eps
    if z < pivot:
        w = a + b + c
        v = -(b + c) * (z + 1 + eps) - b
    elif z == pivot:
        w = a + c
        v = 0
    else:
        w = a
        v = (b + c) * (z + 1 + eps) - c
    u = (r - 2 * w) // d  # floor toward -inf
    b_new = r - 2 * w - u * d
    if not 0 <= b_new <= d:
        raise ConsistencyError(f"b = {b_new} outside [0, {d}] after {s}, eps={eps}")
    new = ConversionState(a + v, b_new, d - b_new, a + v + w, u - eps)
    if min(new.a, new.c) < 0:
        raise ConsistencyError(f"negative parameter in {new}")
    return new


def trace_convert(t: TorusKnot) -> list[ConversionState]:
    """All h + 1 states, starting from (0,0,1,0), z = 0."""
    states = [INITIAL_STATE]
    for eps in torus_epsilon(t):
        states.append(step(states[-1], eps))
    return states


def convert_torus(t: TorusKnot) -> ParamKnot:
    return trace_convert(t)[-1].knot()
