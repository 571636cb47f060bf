"""Planar simplicial complexes with exact rational vertex coordinates:
strict file parsing, interior-edge statistics, and the projective
normalization that sends a one-totally-interior-edge configuration to the
standard position (v1 -> [0,1,0], v2 -> [1,0,0], shared edge -> {z = 0}).

Orientation convention: triangles are stored counterclockwise with the
smallest vertex index first; edges are ordered by ascending vertex index.
Slopes are compared exactly on coprime integer direction vectors.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    AlphaUndefined,
    DegenerateTriangle,
    ExtraInteriorVertex,
    NonzeroGenus,
    NotConnected,
    NotOneEdge,
    ParseError,
    SlopeClashAssumption,
)

Point = tuple[Fraction, Fraction]

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _canonical_int_vector(vec):
    """Scale a rational vector to coprime integers, first nonzero positive."""
    den = 1
    for v in vec:
        den = lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def slope_key(p: Point, q: Point) -> tuple[int, int]:
    return _canonical_int_vector((q[0] - p[0], q[1] - p[1]))


@dataclass(frozen=True)
class LinearForm:
    """A x + B y + C z with coprime integer coefficients, first nonzero
    positive; vanishes on the cone over the line it came from."""

    a: int
    b: int
    c: int

    @classmethod
    def through(cls, p: Point, q: Point) -> "LinearForm":
        raw = (p[1] - q[1], q[0] - p[0], p[0] * q[1] - q[0] * p[1])
        v = _canonical_int_vector(raw)
        if v == (0, 0, 0):
            raise DegenerateTriangle(f"points {p} and {q} coincide")
        return cls(*v)

    def vector(self):
        return (self.a, self.b, self.c)

    def evaluate(self, p: Point) -> Fraction:
        return self.a * p[0] + self.b * p[1] + self.c


class SimplicialComplex:
    """Validated pure 2-dimensional, connected, genus-0 planar complex."""

    def __init__(self, vertices, triangles):
        self.vertices: tuple[Point, ...] = tuple(
            (Fraction(x), Fraction(y)) for x, y in vertices
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("duplicate vertex coordinates")
        n = len(self.vertices)
        canon = []
        for tri in triangles:
            tri = tuple(tri)
            if len(tri) != 3 or len(set(tri)) != 3:
                raise ParseError(f"triangle {tri} does not have three distinct vertices")
            if any(not (0 <= i < n) for i in tri):
                raise ParseError(f"triangle {tri} references a missing vertex")
            a, b, c = (self.vertices[i] for i in tri)
            area2 = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if area2 == 0:
                raise DegenerateTriangle(f"triangle {tri} is collinear")
            if area2 < 0:
                tri = (tri[0], tri[2], tri[1])
            k = tri.index(min(tri))
            canon.append(tri[k:] + tri[:k])
        if len({frozenset(t) for t in canon}) != len(canon):
            raise ParseError("triangle listed twice")
        self.triangles: tuple[tuple[int, int, int], ...] = tuple(canon)

        used = {i for t in canon for i in t}
        if used != set(range(n)):
            raise ParseError("vertex not contained in any triangle (complex not pure)")

        edge_tris: dict[tuple[int, int], list[int]] = {}
        for t_idx, tri in enumerate(canon):
            for u, v in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])):
                e = (min(u, v), max(u, v))
                edge_tris.setdefault(e, []).append(t_idx)
        for e, ts in edge_tris.items():
            if len(ts) > 2:
                raise ParseError(f"edge {e} lies in more than two triangles")
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edge_tris))
        self.edge_triangles: dict[tuple[int, int], tuple[int, ...]] = {
            e: tuple(ts) for e, ts in edge_tris.items()
        }

        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for u, v in self.edges:
            parent[find(u)] = find(v)
        if len({find(i) for i in range(n)}) != 1:
            raise NotConnected("complex is not connected")

        if n - len(self.edges) + len(canon) != 1:
            raise NonzeroGenus(
                f"V - E + F = {n - len(self.edges) + len(canon)} (expected 1)"
            )

        self.boundary_edges = tuple(e for e in self.edges if len(edge_tris[e]) == 1)
        self.interior_edges = tuple(e for e in self.edges if len(edge_tris[e]) == 2)
        boundary_vs = {i for e in self.boundary_edges for i in e}
        self.boundary_vertices = frozenset(boundary_vs)
        self.interior_vertices = tuple(i for i in range(n) if i not in boundary_vs)

    def edge_form(self, e) -> LinearForm:
        return LinearForm.through(self.vertices[e[0]], self.vertices[e[1]])

    def edge_slope(self, e) -> tuple[int, int]:
        return slope_key(self.vertices[e[0]], self.vertices[e[1]])

    def to_json(self) -> str:
        data = {
            "vertices": [[_fmt(x), _fmt(y)] for x, y in self.vertices],
            "triangles": [list(t) for t in self.triangles],
        }
        return json.dumps(data, sort_keys=True)


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_complex(text: str) -> SimplicialComplex:
    """Strict JSON reader: exactly the keys `vertices` and `triangles`,
    coordinates as "p/q" or integer strings."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or set(data) != {"vertices", "triangles"}:
        raise ParseError("top level must be an object with exactly 'vertices' and 'triangles'")
    verts = []
    if not isinstance(data["vertices"], list):
        raise ParseError("'vertices' must be a list")
    for entry in data["vertices"]:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ParseError(f"vertex {entry!r} is not a coordinate pair")
        pair = []
        for coord in entry:
            if not isinstance(coord, str) or not _RATIONAL_RE.match(coord):
                raise ParseError(f"coordinate {coord!r} is not a 'p/q' or integer string")
            pair.append(Fraction(coord))
        verts.append(tuple(pair))
    if not isinstance(data["triangles"], list):
        raise ParseError("'triangles' must be a list")
    tris = []
    for entry in data["triangles"]:
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(i, int) for i in entry)):
            raise ParseError(f"triangle {entry!r} is not a triple of vertex indices")
        tris.append(tuple(entry))
    return SimplicialComplex(verts, tris)


# ---------------------------------------------------------------------------
# interior statistics


@dataclass(frozen=True)
class VertexStats:
    f1: int
    k: int
    f1_00: int
    k_00: int
    f1_0b: int
    k_0b: int
    alpha: int | None  # floor((r+1)/k_0b) when k_0b > 0


@dataclass(frozen=True)
class InteriorData:
    r: int
    per_vertex: dict[int, VertexStats]
    interior_edges: tuple[tuple[int, int], ...]
    totally_interior: tuple[tuple[int, int], ...]
    partially_interior: tuple[tuple[int, int], ...]
    interior_blocks: int

    def alpha(self, v: int) -> int:
        st = self.per_vertex[v]
        if st.k_0b == 0:
            raise AlphaUndefined(f"vertex {v} has no partially interior edge")
        assert st.alpha is not None
        return st.alpha

    def to_json_dict(self):
        return {
            "r": self.r,
            "interior_vertices": {
                str(v): {
                    "f1": st.f1,
                    "k": st.k,
                    "f1_00": st.f1_00,
                    "k_00": st.k_00,
                    "f1_0b": st.f1_0b,
                    "k_0b": st.k_0b,
                    "alpha": st.alpha,
                }
                for v, st in sorted(self.per_vertex.items())
            },
            "interior_edges": [list(e) for e in self.interior_edges],
            "totally_interior_edges": [list(e) for e in self.totally_interior],
            "partially_interior_edges": [list(e) for e in self.partially_interior],
            "interior_blocks": self.interior_blocks,
        }


def interior_stats(c: SimplicialComplex, r: int) -> InteriorData:
    """Classify interior edges, count slopes per interior vertex, and check
    the standing assumption that partially and totally interior edges never
    share a slope at a vertex."""
    interior = set(c.interior_vertices)
    totally = tuple(e for e in c.interior_edges if e[0] in interior and e[1] in interior)
    partially = tuple(
        e for e in c.interior_edges if (e[0] in interior) != (e[1] in interior)
    )
    per_vertex = {}
    for v in c.interior_vertices:
        incident = [e for e in c.edges if v in e]
        assert all(e in c.interior_edges for e in incident)
        tot = [e for e in incident if e in totally]
        part = [e for e in incident if e in partially]
        assert len(tot) + len(part) == len(incident)
        slopes_all = {c.edge_slope(e) for e in incident}
        slopes_tot = {c.edge_slope(e) for e in tot}
        slopes_part = {c.edge_slope(e) for e in part}
        clash = slopes_tot & slopes_part
        if clash:
            raise SlopeClashAssumption(
                f"vertex {v}: slope {sorted(clash)[0]} is shared by a totally and a "
                "partially interior edge"
            )
        k_0b = len(slopes_part)
        per_vertex[v] = VertexStats(
            f1=len(incident),
            k=len(slopes_all),
            f1_00=len(tot),
            k_00=len(slopes_tot),
            f1_0b=len(part),
            k_0b=k_0b,
            alpha=(r + 1) // k_0b if k_0b > 0 else None,
        )
    blocks = _interior_blocks(c.interior_vertices, totally)
    return InteriorData(
        r=r,
        per_vertex=per_vertex,
        interior_edges=tuple(c.interior_edges),
        totally_interior=totally,
        partially_interior=partially,
        interior_blocks=blocks,
    )


def _interior_blocks(interior_vertices, totally) -> int:
    parent = {v: v for v in interior_vertices}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for u, v in totally:
        parent[find(u)] = find(v)
    return len({find(v) for v in interior_vertices})


# ---------------------------------------------------------------------------
# one-edge normalization


@dataclass(frozen=True)
class OneEdgeNormalization:
    matrix: tuple[tuple[Fraction, ...], ...]  # sends v1 -> [0,1,0], v2 -> [1,0,0]
    v1: int
    v2: int
    a: int
    b: int
    slopes1: tuple[Fraction, ...]  # forms x + c z at v1; contains 0
    slopes2: tuple[Fraction, ...]  # forms y + c z at v2; contains 0
    swapped: bool


def _mat_inverse(m):
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise DegenerateTriangle("projective frame is singular")
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(Fraction(x, 1) / det for x in row) for row in adj)


def _mat_mul(m1, m2):
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _row_times(row, m):
    return tuple(sum(row[k] * m[k][j] for k in range(3)) for j in range(3))


def normalize_one_edge(c: SimplicialComplex, r: int) -> OneEdgeNormalization:
    """Projective change of coordinates for a complex with exactly one
    totally interior edge: its endpoints go to [0,1,0] and [1,0,0], the edge
    line to {z=0}, and one slope on each side is sheared to 0."""
    stats = interior_stats(c, r)
    if len(stats.totally_interior) != 1:
        raise NotOneEdge(
            f"complex has {len(stats.totally_interior)} totally interior edges, need exactly 1"
        )
    eps = stats.totally_interior[0]
    if len(c.interior_vertices) != 2:
        raise ExtraInteriorVertex(
            f"interior vertices {c.interior_vertices} beyond the edge {eps}"
        )
    v1, v2 = eps
    swapped = stats.per_vertex[v1].k > stats.per_vertex[v2].k
    if swapped:
        v1, v2 = v2, v1
    a = stats.per_vertex[v1].k
    b = stats.per_vertex[v2].k

    p1, p2 = c.vertices[v1], c.vertices[v2]
    h1 = (p1[0], p1[1], Fraction(1))
    h2 = (p2[0], p2[1], Fraction(1))
    normal = (
        h1[1] * h2[2] - h1[2] * h2[1],
        h1[2] * h2[0] - h1[0] * h2[2],
        h1[0] * h2[1] - h1[1] * h2[0],
    )
    frame = tuple(
        (h2[i], h1[i], normal[i]) for i in range(3)
    )  # columns v2_hat, v1_hat, normal
    m = _mat_inverse(frame)

    def transformed(form: LinearForm):
        # forms transform by the inverse, i.e. by multiplying with `frame`
        return _row_times((Fraction(form.a), Fraction(form.b), Fraction(form.c)), frame)

    eps_t = transformed(c.edge_form(eps))
    assert eps_t[0] == 0 and eps_t[1] == 0 and eps_t[2] != 0

    def side_slopes(v, component):
        slopes = set()
        for e in c.edges:
            if v not in e or e == eps:
                continue
            vec = transformed(c.edge_form(e))
            assert vec[1 if component == 0 else 0] == 0
            if vec[component] == 0:
                raise SlopeClashAssumption(
                    f"edge {e} at vertex {v} is parallel to the totally interior edge"
                )
            slopes.add(vec[2] / vec[component])
        return sorted(slopes)

    raw1 = side_slopes(v1, 0)
    raw2 = side_slopes(v2, 1)
    assert len(raw1) == a - 1 and len(raw2) == b - 1
    alpha0, beta0 = raw1[0], raw2[0]
    shear = (
        (Fraction(1), Fraction(0), alpha0),
        (Fraction(0), Fraction(1), beta0),
        (Fraction(0), Fraction(0), Fraction(1)),
    )
    matrix = _mat_mul(shear, m)
    slopes1 = tuple(s - alpha0 for s in raw1)
    slopes2 = tuple(s - beta0 for s in raw2)
    assert slopes1[0] == 0 and slopes2[0] == 0
    return OneEdgeNormalization(matrix, v1, v2, a, b, slopes1, slopes2, swapped)


# ---------------------------------------------------------------------------
# constructed complexes used by tests, scripts and the docs


def single_triangle() -> SimplicialComplex:
    return SimplicialComplex([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])


def two_triangles() -> SimplicialComplex:
    return SimplicialComplex(
        [(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 1, 2), (1, 3, 2)]
    )


def star_complex(ring=None) -> SimplicialComplex:
    """Fan around one interior vertex at the origin; default ring has 6
    boundary vertices and 3 distinct slopes."""
    if ring is None:
        ring = [(1, 0), (1, 1), (-1, 1), (-1, 0), (-1, -1), (1, -1)]
    verts = [(0, 0)] + list(ring)
    tris = [(0, i, i % len(ring) + 1) for i in range(1, len(ring) + 1)]
    return SimplicialComplex(verts, tris)


def square_with_diagonals() -> SimplicialComplex:
    """Center vertex with only two distinct slopes (k = 2)."""
    verts = [(0, 0), (1, 1), (-1, 1), (-1, -1), (1, -1)]
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1)]
    return SimplicialComplex(verts, tris)


_LEFT_MENU = [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(-3, 2)]
_RIGHT_MENU = [Fraction(-1), Fraction(1), Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]


def one_edge_complex(a: int, b: int) -> SimplicialComplex:
    """Exactly one totally interior edge [v1 v2] with k(v1) = a, k(v2) = b.

    v1 = (0,0) and v2 = (1,0); the vertical pair U = (0,1), D = (0,-1) gives
    one slope at v1, the left fan on x = -2 adds a-2 more; on the right the
    extreme vertices (3,-2), (3,2) reuse the U/D slopes seen from v2 and the
    middle ones on x = 3 add b-3 new slopes.
    """
    if a < 3 or b < 3 or a > 8 or b > 8:
        raise ValueError("one_edge_complex supports 3 <= a, b <= 8")
    lefts = sorted(_LEFT_MENU[: a - 2], reverse=True)  # ccw from U down to D
    mids = sorted(_RIGHT_MENU[: b - 3])
    right_s = [Fraction(-2)] + mids + [Fraction(2)]
    verts: list[tuple[Fraction, Fraction]] = [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(-1)),
    ]
    left_idx = []
    for s in lefts:
        left_idx.append(len(verts))
        verts.append((Fraction(-2), s))
    right_idx = []
    for s in right_s:
        right_idx.append(len(verts))
        verts.append((Fraction(3), s))
    U, D = 2, 3
    tris = [(0, 1, U)]
    chain = [U] + left_idx + [D]
    for p, q in zip(chain, chain[1:]):
        tris.append((0, p, q))
    tris.append((0, D, 1))
    rchain = [D] + right_idx + [U]
    for p, q in zip(rchain, rchain[1:]):
        tris.append((1, p, q))
    return SimplicialComplex(verts, tris)


def ce1_complex() -> SimplicialComplex:
    """Two totally interior edges through a middle vertex; the combinatorics
    match the two-edge configuration discussed alongside the one-edge case:
    f1_00(v1) = f1_00(v2) = 1, f1_00(v0) = 2, and v1 has four partially
    interior edges carrying only two distinct slopes (so alpha(v1) =
    alpha(v2) = floor((r+1)/2)).

    The two totally interior edges are not collinear and every partially
    interior slope appears as a pair of opposite rays, which keeps the
    homology module nonzero at small r.
    """
    verts = [
        (-2, 0),   # 0: v1
        (0, 0),    # 1: v0
        (2, 2),    # 2: v2
        (0, 1),    # 3: UM
        (0, -1),   # 4: DM
        (-4, 1),   # 5: L2
        (-4, -1),  # 6: L1
        (4, 3),    # 7: R1
        (4, 5),    # 8: R2
    ]
    tris = [
        (0, 1, 3), (0, 3, 5), (0, 5, 6), (0, 6, 4), (0, 4, 1),
        (1, 2, 3), (1, 4, 2),
        (2, 8, 3), (2, 7, 8), (2, 4, 7),
    ]
    return SimplicialComplex(verts, tris)
