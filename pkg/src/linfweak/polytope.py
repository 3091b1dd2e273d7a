"""Exact vertex enumeration for bounded H-polytopes over the rationals.

Incremental halfspace insertion (the vertex side of the double-description
method): start from a bounding box whose vertices are known, then cut with
one halfspace at a time.  New vertices arise on edges between a kept and a
cut vertex; edges are recognized algebraically, two vertices being adjacent
iff their common active constraints span a rank-(d-1) space.  Active sets
are recomputed from scratch after every insertion, which keeps degenerate
intersections (like cross-polytope vertices with many tight facets) correct
at the price of a little arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def _dot(a: Vector, x: Vector) -> Fraction:
    return sum(ai * xi for ai, xi in zip(a, x))


def _rank(rows: list[Vector]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, len(m)):
            if m[r][col] != 0:
                f = m[r][col] / pv
                for c in range(col, cols):
                    m[r][c] -= f * m[row][c]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def vertex_enumeration(constraints: Sequence[tuple[Sequence, Fraction]],
                       box: Fraction = Fraction(2)) -> list[Vector]:
    """Vertices of { x : a.x <= b for all (a,b) } intersected with [-box, box]^d.

    The box must strictly contain the polytope so that no box facet is tight
    at a true vertex.
    """
    if not constraints:
        raise ValueError("need at least one constraint")
    d = len(constraints[0][0])
    normals: list[Vector] = []
    bounds: list[Fraction] = []
    for i in range(d):
        e = [Fraction(0)] * d
        e[i] = Fraction(1)
        normals.append(tuple(e))
        bounds.append(box)
        e2 = [Fraction(0)] * d
        e2[i] = Fraction(-1)
        normals.append(tuple(e2))
        bounds.append(box)

    # box corners
    vertices: list[Vector] = []
    for mask in range(2 ** d):
        vertices.append(tuple(box if (mask >> i) & 1 else -box for i in range(d)))

    def active_sets(verts):
        out = []
        for v in verts:
            out.append(frozenset(j for j in range(len(normals))
                                 if _dot(normals[j], v) == bounds[j]))
        return out

    actives = active_sets(vertices)

    for a, b in constraints:
        a = tuple(Fraction(x) for x in a)
        b = Fraction(b)
        slack = [b - _dot(a, v) for v in vertices]
        if all(s >= 0 for s in slack):
            normals.append(a)
            bounds.append(b)
            actives = active_sets(vertices)
            continue
        keep = [i for i, s in enumerate(slack) if s > 0]
        on = [i for i, s in enumerate(slack) if s == 0]
        cut = [i for i, s in enumerate(slack) if s < 0]
        new_pts: list[Vector] = []
        for i in keep:
            for j in cut:
                common = actives[i] & actives[j]
                if len(common) < d - 1:
                    continue
                if _rank([normals[c] for c in common]) != d - 1:
                    continue
                t = slack[i] / (slack[i] - slack[j])
                p = tuple(vi + t * (vj - vi)
                          for vi, vj in zip(vertices[i], vertices[j]))
                new_pts.append(p)
        survivors = [vertices[i] for i in keep] + [vertices[i] for i in on]
        seen = set(survivors)
        for p in new_pts:
            if p not in seen:
                survivors.append(p)
                seen.add(p)
        normals.append(a)
        bounds.append(b)
        vertices = survivors
        actives = active_sets(vertices)

    return sorted(set(vertices))
