"""Smith normal form of integer matrices (diagonal only) on Python ints."""
from __future__ import annotations

from typing import Sequence


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal d1 | d2 | ... of the Smith form, length min(rows, cols), zeros last."""
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = _find_pivot(m, t, rows, cols)
        if pivot is None:
            break
        i, j = pivot
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        while True:
            _clear(m, t, rows, cols)
            bad = _non_divisible(m, t, rows, cols)
            if bad is None:
                break
            # fold an offending row into the pivot row and reduce again
            m[t] = [x + y for x, y in zip(m[t], m[bad])]
        diag.append(abs(m[t][t]))
        t += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def _find_pivot(m, t, rows, cols):
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                best = (i, j)
    return best


def _clear(m, t, rows, cols):
    """Zero row t and column t outside the pivot using Euclidean steps."""
    while True:
        done = True
        for i in range(t + 1, rows):
            if m[i][t]:
                done = False
                if abs(m[i][t]) < abs(m[t][t]):
                    m[t], m[i] = m[i], m[t]
                f = m[i][t] // m[t][t]
                m[i] = [x - f * y for x, y in zip(m[i], m[t])]
        for j in range(t + 1, cols):
            if m[t][j]:
                done = False
                if abs(m[t][j]) < abs(m[t][t]):
                    for row in m:
                        row[t], row[j] = row[j], row[t]
                f = m[t][j] // m[t][t]
                for row in m:
                    row[j] -= f * row[t]
        if done:
            return


def _non_divisible(m, t, rows, cols):
    p = m[t][t]
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if m[i][j] % p:
                return i
    return None


def abelian_group(factors: Sequence[int]) -> list[int]:
    """Drop unit factors: the remaining list presents the group (0 means Z)."""
    return [f for f in factors if f != 1]


def group_str(factors: Sequence[int]) -> str:
    fs = abelian_group(factors)
    if not fs:
        return "0"
    free = sum(1 for f in fs if f == 0)
    parts = [f"Z_{f}" for f in fs if f]
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    return " + ".join(parts)
