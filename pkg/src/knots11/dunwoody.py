"""Dunwoody diagrams D(a,b,c,n,r,s): construction, curve tracing and homology.

Layout convention
-----------------
The diagram lives in the plane with cyclic symmetry of order n about a centre
point.  Internal circles C'_1..C'_n sit on an inner ring, external circles
C''_1..C''_n on an outer ring.  Each circle has d = 2a+b+c vertices at
positions 0..d-1, counted counter-clockwise.  Around each circle the arc
endpoints come in four consecutive blocks (counter-clockwise from position 0):

    C'_i :  a arcs to C'_{i+1} | a arcs to C'_{i-1} | b arcs to C''_{i-1} | c arcs to C''_i
    C''_i:  b arcs to C'_{i+1} | c arcs to C'_i | a arcs to C''_{i-1} | a arcs to C''_{i+1}

Parallel arcs join block positions in reversed order.  The vertex at position
x of C'_i carries label x; the vertex at position x of C''_i carries label
(-1-x) mod d, i.e. external labels run clockwise.  C'_i is glued to
C''_{i+s} identifying label j with label j+r.  This is orientation reversing
on the circles, so the glued surface is orientable of genus n.

Admissible means the arcs close up into exactly n curves whose complement in
the genus-n surface is connected (a genuine Heegaard diagram).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import ConsistencyError, DomainError
from .params import ParamKnot
from .snf import abelian_group, group_str, invariant_factors

INTERNAL, EXTERNAL = 0, 1

# (block name, target side, target index offset), counter-clockwise from position 0
INTERNAL_BLOCKS = (("a", INTERNAL, +1), ("a", INTERNAL, -1), ("b", EXTERNAL, -1), ("c", EXTERNAL, 0))
EXTERNAL_BLOCKS = (("b", INTERNAL, +1), ("c", INTERNAL, 0), ("a", EXTERNAL, -1), ("a", EXTERNAL, +1))

Relator = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DunwoodyParams:
    a: int
    b: int
    c: int
    n: int
    r: int
    s: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise DomainError("a, b, c must be non-negative")
        if self.n <= 0:
            raise DomainError("n must be positive")
        if self.d <= 0:
            raise DomainError("d = 2a+b+c must be positive")
        if not 0 <= self.r < self.d or not 0 <= self.s < self.n:
            raise DomainError("r and s must be reduced; use DunwoodyParams.of()")

    @classmethod
    def of(cls, a: int, b: int, c: int, n: int, r: int, s: int) -> "DunwoodyParams":
        d = 2 * a + b + c
        if d <= 0:
            raise DomainError("d = 2a+b+c must be positive")
        if n <= 0:
            raise DomainError("n must be positive")
        return cls(a, b, c, n, r % d, s % n)

    @classmethod
    def from_knot(cls, k: ParamKnot, n: int = 1, s: int = 0) -> "DunwoodyParams":
        return cls.of(k.a, k.b, k.c, n, k.r, s)

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def astuple(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.n, self.r, self.s)

    def __str__(self) -> str:
        return "D({},{},{},{},{},{})".format(*self.astuple())


@dataclass(frozen=True)
class DunwoodyDiagram:
    """Vertices are integers ``(side * n + i) * d + pos``."""

    params: DunwoodyParams
    arcs: tuple[int, ...]
    gluing: tuple[int, ...]

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def n(self) -> int:
        return self.params.n

    def vid(self, side: int, i: int, pos: int) -> int:
        n, d = self.n, self.d
        return (side * n + i % n) * d + pos % d

    def vertex(self, v: int) -> tuple[int, int, int]:
        circle, pos = divmod(v, self.d)
        side, i = divmod(circle, self.n)
        return side, i, pos

    def label(self, v: int) -> int:
        side, _, pos = self.vertex(v)
        return pos if side == INTERNAL else (-1 - pos) % self.d

    def circle_name(self, side: int, i: int) -> str:
        return ("C'" if side == INTERNAL else "C''") + str(i + 1)

    @cached_property
    def curves(self) -> list[Relator]:
        return _trace(self)

    def to_dict(self) -> dict:
        circles = []
        for side in (INTERNAL, EXTERNAL):
            for i in range(self.n):
                circles.append({
                    "name": self.circle_name(side, i),
                    "side": "internal" if side == INTERNAL else "external",
                    "index": i + 1,
                    "vertices": [self.vid(side, i, x) for x in range(self.d)],
                    "labels": [self.label(self.vid(side, i, x)) for x in range(self.d)],
                })
        arcs = sorted((v, w) for v, w in enumerate(self.arcs) if v < w)
        glue = sorted((v, w) for v, w in enumerate(self.gluing) if v < w)
        return {
            "params": dict(zip("abcnrs", self.params.astuple())),
            "d": self.d,
            "circles": circles,
            "arcs": [list(x) for x in arcs],
            "gluing": [list(x) for x in glue],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_svg(self, size: int = 600) -> str:
        return _svg(self, size)


def build_diagram(p: DunwoodyParams) -> DunwoodyDiagram:
    n, d = p.n, p.d
    size = {"a": p.a, "b": p.b, "c": p.c}
    arcs = [-1] * (2 * n * d)

    def vid(side, i, pos):
        return (side * n + i % n) * d + pos % d

    def block_start(blocks, idx):
        return sum(size[blocks[k][0]] for k in range(idx))

    # Each band is added from the side that lists it with offset +1 or 0 (internal c).
    bands = [
        (INTERNAL, 0, INTERNAL, 1, +1),  # C'_i a-block -> C'_{i+1} second a-block
        (EXTERNAL, 3, EXTERNAL, 2, +1),  # C''_i a+-block -> C''_{i+1} a- block
        (INTERNAL, 3, EXTERNAL, 1, 0),   # c arcs C'_i -- C''_i
        (INTERNAL, 2, EXTERNAL, 0, -1),  # b arcs C'_i -- C''_{i-1}
    ]
    for side_x, bx, side_y, by, offset in bands:
        bx_blocks = INTERNAL_BLOCKS if side_x == INTERNAL else EXTERNAL_BLOCKS
        by_blocks = INTERNAL_BLOCKS if side_y == INTERNAL else EXTERNAL_BLOCKS
        m = size[bx_blocks[bx][0]]
        sx, sy = block_start(bx_blocks, bx), block_start(by_blocks, by)
        for i in range(n):
            for k in range(m):
                v = vid(side_x, i, sx + k)
                w = vid(side_y, i + offset, sy + m - 1 - k)
                if arcs[v] != -1 or arcs[w] != -1:
                    raise ConsistencyError(f"vertex used twice while building {p}")
                arcs[v], arcs[w] = w, v
    if -1 in arcs:
        raise ConsistencyError(f"vertex without an arc in {p}")

    gluing = [-1] * (2 * n * d)
    for i in range(n):
        for j in range(d):
            v = vid(INTERNAL, i, j)
            w = vid(EXTERNAL, i + p.s, -1 - (j + p.r))
            gluing[v], gluing[w] = w, v
    return DunwoodyDiagram(p, tuple(arcs), tuple(gluing))


def _trace(D: DunwoodyDiagram) -> list[Relator]:
    nv = len(D.arcs)
    seen = [False] * nv
    curves = []
    for start in range(nv):
        if seen[start]:
            continue
        word = []
        v = start
        while True:
            if seen[v]:
                raise ConsistencyError("arc/gluing traversal is not a permutation")
            w = D.arcs[v]
            seen[v] = seen[w] = True
            g = D.gluing[w]
            side, i, _ = D.vertex(w)
            if side == INTERNAL:
                word.append((i, 1))
            else:
                word.append((D.vertex(g)[1], -1))
            v = g
            if v == start:
                break
        curves.append(tuple(word))
    return curves


def trace_curves(D: DunwoodyDiagram) -> list[Relator]:
    """Closed curves as cyclic words; letter (i, e) is x_{i+1}^e."""
    return list(D.curves)


def relator_str(rel: Relator) -> str:
    out: list[list[int]] = []
    for i, e in rel:
        if out and out[-1][0] == i:
            out[-1][1] += e
        else:
            out.append([i, e])
    return " ".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in out if e) or "1"


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


_NEXT, _PREV, _ARC = 0, 1, 2


def _segment_faces(D: DunwoodyDiagram) -> tuple[list[int], int]:
    """Face id on the exterior side of each circle segment (pos, pos+1).

    Faces come from the rotation system (next, prev, arc) counter-clockwise at
    each vertex.  Also checks Euler's formula for the planar graph.
    """
    d = D.d
    nv = len(D.arcs)

    def head(v, kind):
        side_i, pos = divmod(v, d)
        if kind == _NEXT:
            return side_i * d + (pos + 1) % d, _PREV
        if kind == _PREV:
            return side_i * d + (pos - 1) % d, _NEXT
        return D.arcs[v], _ARC

    face = [[-1] * 3 for _ in range(nv)]
    disk = []
    nfaces = 0
    for v in range(nv):
        for kind in (_NEXT, _PREV, _ARC):
            if face[v][kind] != -1:
                continue
            kinds = set()
            cur = (v, kind)
            while face[cur[0]][cur[1]] == -1:
                face[cur[0]][cur[1]] = nfaces
                kinds.add(cur[1])
                w, back = head(*cur)
                cur = (w, (back - 1) % 3)
            disk.append(_ARC not in kinds)
            nfaces += 1

    uf = _UnionFind(nv)
    for v in range(nv):
        uf.union(v, D.arcs[v])
        side_i, pos = divmod(v, d)
        uf.union(v, side_i * d + (pos + 1) % d)
    components = len({uf.find(v) for v in range(nv)})
    edges = nv + nv // 2
    # faces are traced per component, so each component contributes chi = 2
    if nv - edges + nfaces != 2 * components:
        raise ConsistencyError(f"{D.params}: arc system is not planar")

    seg = []
    for v in range(nv):
        side_i, pos = divmod(v, d)
        v1 = side_i * d + (pos + 1) % d
        cand = [f for f in (face[v][_NEXT], face[v1][_PREV]) if not disk[f]]
        if len(cand) != 1:
            raise ConsistencyError(f"{D.params}: segment without a unique outer face")
        seg.append(cand[0])
    return seg, components


def complement_connected(D: DunwoodyDiagram) -> bool:
    """Whether the traced curves leave the closed genus-n surface connected."""
    seg, components = _segment_faces(D)
    nfaces = max(seg) + 1
    uf = _UnionFind(nfaces)
    n, d = D.n, D.d
    for i in range(n):
        for x in range(d):
            v = D.vid(INTERNAL, i, x)
            w = D.gluing[D.vid(INTERNAL, i, x + 1)]
            uf.union(seg[v], seg[w])
    if components > 1:
        # Only a = 0 (radial spokes) or b = c = 0 (two rings) disconnect the
        # arcs; in both layouts segment (d-1, 0) of every circle faces the one
        # region the pieces share.
        shared = [seg[D.vid(side, i, d - 1)] for side in (INTERNAL, EXTERNAL) for i in range(n)]
        for f in shared[1:]:
            uf.union(f, shared[0])
    return len({uf.find(f) for f in set(seg)}) == 1


def _diagram(p) -> DunwoodyDiagram:
    return p if isinstance(p, DunwoodyDiagram) else build_diagram(p)


def is_admissible(p: DunwoodyParams) -> bool:
    D = _diagram(p)
    return len(D.curves) == D.n and complement_connected(D)


def relation_matrix(D: DunwoodyDiagram) -> list[list[int]]:
    rows = []
    for rel in D.curves:
        row = [0] * D.n
        for i, e in rel:
            row[i] += e
        rows.append(row)
    return rows


def homology(p: DunwoodyParams) -> list[int]:
    """Invariant factors of H1 other than 1; a 0 stands for a copy of Z."""
    D = _diagram(p)
    if not is_admissible(D):
        raise DomainError(f"{D.params} is not admissible")
    return abelian_group(invariant_factors(relation_matrix(D)))


def homology_str(factors) -> str:
    return group_str(factors)


def _order(factors: list[int]) -> int:
    return 0 if 0 in factors else math.prod(factors)


def ambient_order(k: ParamKnot) -> int:
    """|H1| of the ambient lens space: 1 is S^3, 0 is S^1 x S^2."""
    if k.d == 0:
        return 0  # K(0,0,0,0), the trivial knot in S^1 x S^2
    p = DunwoodyParams.from_knot(k)
    if not is_admissible(p):
        raise DomainError(f"{k} is not admissible")
    return _order(homology(p))


def coverings(k: ParamKnot, n: int) -> list[tuple[int, list[int]]]:
    """Admissible s in Z_n for D(a,b,c,n,r,s), each with its H1."""
    if n <= 0:
        raise DomainError("n must be positive")
    if k.d == 0:
        raise DomainError("K(0,0,0,0) has no Dunwoody diagram")
    out = []
    for s in range(n):
        D = build_diagram(DunwoodyParams.from_knot(k, n, s))
        if is_admissible(D):
            out.append((s, homology(D)))
    return out


def _svg(D: DunwoodyDiagram, size: int) -> str:
    n, d = D.n, D.d
    cx = cy = size / 2
    r_in, r_out = size * 0.2, size * 0.4
    rad = min(size * 0.08, math.pi * r_in / max(n, 1) * 0.6)

    def centre(side, i):
        ang = 2 * math.pi * i / n - math.pi / 2
        rr = r_in if side == INTERNAL else r_out
        return cx + rr * math.cos(ang), cy + rr * math.sin(ang)

    def point(v):
        side, i, pos = D.vertex(v)
        x0, y0 = centre(side, i)
        # position 0 of an internal circle faces the next circle on the ring
        ang = 2 * math.pi * i / n - math.pi / 2
        base = ang + (math.pi / 2 if side == INTERNAL else -math.pi / 2)
        t = base + 2 * math.pi * (pos + 0.5) / d
        return x0 + rad * math.cos(t), y0 + rad * math.sin(t)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    for side in (INTERNAL, EXTERNAL):
        for i in range(n):
            x0, y0 = centre(side, i)
            parts.append(f'<circle cx="{x0:.1f}" cy="{y0:.1f}" r="{rad:.1f}" fill="none" stroke="black"/>')
            parts.append(f'<text x="{x0:.1f}" y="{y0:.1f}" font-size="10" text-anchor="middle">'
                         f'{D.circle_name(side, i)}</text>')
    for v, w in enumerate(D.arcs):
        if v < w:
            (x1, y1), (x2, y2) = point(v), point(w)
            parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="steelblue"/>')
    for v in range(len(D.arcs)):
        x, y = point(v)
        parts.append(f'<text x="{x:.1f}" y="{y:.1f}" font-size="7">{D.label(v)}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
