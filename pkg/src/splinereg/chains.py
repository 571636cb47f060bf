"""The two-term ideal chain complex of a planar complex and the exact
brute-force dimension oracles built on it.

dim H0 in degree d is computed literally as sum_v dim J(v)_d minus the rank
of the degree-d boundary map.  For tractability the boundary matrix is
assembled in per-vertex adapted coordinates: each vertex block uses the
monomial basis in two incident edge forms plus z, and each edge's multiplier
monomials live in the frame of its home endpoint.  Block-wise changes of
basis are invertible, so the rank equals the naive monomial-basis rank
(cross-checked in the tests against dense elimination).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from ._echelon import SparseIntEchelon
from .errors import CapExceeded
from .geometry import LinearForm, SimplicialComplex, interior_stats
from .monomials import count_degree
from .ratlinalg import RatMatrix, rank


# ---------------------------------------------------------------------------
# chain-complex description


@dataclass(frozen=True)
class EdgeGroup:
    """One column group of the boundary map: an edge form with exponent r+1
    times all degree-(d-r-1) multipliers.  Partially interior edges at the
    same vertex with the same slope give identical columns and are merged."""

    edge: tuple[int, int]
    form: LinearForm
    home: int                 # interior endpoint whose frame hosts the multipliers
    far: int | None           # second interior endpoint for totally interior edges
    merged_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IdealComplexData:
    r: int
    groups: tuple[EdgeGroup, ...]
    vertex_forms: dict[int, tuple[LinearForm, ...]]  # slope-deduped, totally-interior first


def ideal_complex(c: SimplicialComplex, r: int) -> IdealComplexData:
    interior = set(c.interior_vertices)
    vpos = {v: i for i, v in enumerate(c.interior_vertices)}
    totally = [e for e in c.interior_edges if e[0] in interior and e[1] in interior]
    groups: list[EdgeGroup] = []
    for e in sorted(totally):
        home, far = sorted(e, key=lambda v: vpos[v])
        groups.append(EdgeGroup(e, c.edge_form(e), home, far, (e,)))
    partial_by_key: dict[tuple[int, tuple[int, int]], list[tuple[int, int]]] = {}
    for e in c.interior_edges:
        ends_in = [v for v in e if v in interior]
        if len(ends_in) != 1:
            continue
        partial_by_key.setdefault((ends_in[0], c.edge_slope(e)), []).append(e)
    for (v, _slope), es in sorted(partial_by_key.items()):
        es.sort()
        groups.append(EdgeGroup(es[0], c.edge_form(es[0]), v, None, tuple(es)))

    vertex_forms = {}
    totally_set = set(totally)
    for v in c.interior_vertices:
        incident = [e for e in c.interior_edges if v in e]
        # totally interior forms first, so shared edges become frame coordinates
        ordered = sorted(e for e in incident if e in totally_set)
        ordered += sorted(e for e in incident if e not in totally_set)
        seen = {}
        for e in ordered:
            key = c.edge_slope(e)
            if key not in seen:
                seen[key] = c.edge_form(e)
        vertex_forms[v] = tuple(seen.values())
    return IdealComplexData(r, tuple(groups), vertex_forms)


# ---------------------------------------------------------------------------
# exact two-variable slice ranks (generator-times-monomial columns)


@lru_cache(maxsize=None)
def _two_var_dim(pairs, r: int, e: int) -> int:
    """dim of sum_i (c_i u + d_i w)^{r+1} * k[u,w]_{e-r-1} inside k[u,w]_e."""
    if e < r + 1:
        return 0
    rows = e + 1
    cols = []
    for c1, c2 in pairs:
        base = [comb(r + 1, m) * c1 ** (r + 1 - m) * c2**m for m in range(r + 2)]
        for k in range(e - r):
            col = [Fraction(0)] * rows
            for m in range(r + 2):
                col[m + k] = base[m]
            cols.append(col)
    ent = tuple(cols[j][i] for i in range(rows) for j in range(len(cols)))
    return rank(RatMatrix(rows, len(cols), ent))


def _solve_frame_pair(form: LinearForm, f1: LinearForm, f2: LinearForm):
    """Coefficients (c1, c2) with form = c1 f1 + c2 f2 (all three vanish at
    the same vertex, so the 2-dimensional solve is always consistent)."""
    rows = list(zip(f1.vector(), f2.vector(), form.vector()))
    for (a1, b1, t1), (a2, b2, t2) in (
        (rows[0], rows[1]),
        (rows[0], rows[2]),
        (rows[1], rows[2]),
    ):
        det = a1 * b2 - a2 * b1
        if det:
            c1 = Fraction(t1 * b2 - t2 * b1, det)
            c2 = Fraction(a1 * t2 - a2 * t1, det)
            break
    else:
        raise ValueError("frame forms are proportional")
    assert all(
        c1 * a + c2 * b == t for a, b, t in rows
    ), "form is not in the span of the frame"
    return c1, c2


class _Frame:
    """Coordinates (u, w, t) = (f1, f2, z) at an interior vertex."""

    def __init__(self, v: int, forms):
        f1 = forms[0]
        f2 = next(
            (
                f
                for f in forms[1:]
                if _cross3(f1.vector(), f.vector()) != (0, 0, 0)
            ),
            None,
        )
        if f2 is None:
            raise ValueError(f"vertex {v} has fewer than two distinct slopes")
        self.v = v
        self.f1, self.f2 = f1, f2
        self.rows = (
            tuple(Fraction(x) for x in f1.vector()),
            tuple(Fraction(x) for x in f2.vector()),
            (Fraction(0), Fraction(0), Fraction(1)),
        )
        self.inv = _frame_inverse(self.rows)

    def coords_of_form(self, form: LinearForm):
        row = tuple(Fraction(x) for x in form.vector())
        return tuple(
            sum(row[k] * self.inv[k][j] for k in range(3)) for j in range(3)
        )


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _frame_inverse(rows):
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    assert det != 0
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(x / det for x in row) for row in adj)


def _poly_mul(p, q):
    out = {}
    for (a1, b1, c1), v1 in p.items():
        for (a2, b2, c2), v2 in q.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            nv = out.get(key, 0) + v1 * v2
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def _linear_poly(coeffs):
    out = {}
    for key, v in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), coeffs):
        if v:
            out[key] = v
    return out


def _poly_pow(p, n):
    out = {(0, 0, 0): Fraction(1)}
    for _ in range(n):
        out = _poly_mul(out, p)
    return out


def _mono_index(e_first: int, e_second: int, d: int) -> int:
    k = d - e_first
    return k * (k + 1) // 2 + (k - e_second)


def _column_int(col):
    den = 1
    for v in col.values():
        den = lcm(den, v.denominator)
    return {k: int(v * den) for k, v in col.items() if v}


def boundary_rank(c: SimplicialComplex, r: int, d: int, data: IdealComplexData | None = None) -> int:
    """Exact rank of the degree-d boundary map of the ideal complex."""
    if data is None:
        data = ideal_complex(c, r)
    if d < r + 1 or not c.interior_vertices:
        return 0
    vpos = {v: i for i, v in enumerate(c.interior_vertices)}
    frames = {v: _Frame(v, data.vertex_forms[v]) for v in c.interior_vertices}
    ech = SparseIntEchelon()
    big = d - r - 1
    for group in data.groups:
        hf = frames[group.home]
        c1, c2, c3 = hf.coords_of_form(group.form)
        assert c3 == 0
        home_base = [
            comb(r + 1, m) * c1 ** (r + 1 - m) * c2**m for m in range(r + 2)
        ]
        hblock = vpos[group.home]
        # the edge is oriented by ascending vertex index; its differential is
        # (+1) at the head block and (-1) at the tail block
        hsign = 1 if group.home == max(group.edge) else -1
        far_polys = None
        if group.far is not None:
            ff = frames[group.far]
            e1, e2, e3 = ff.coords_of_form(group.form)
            assert e3 == 0
            lpow = _poly_pow(_linear_poly((e1, e2, e3)), r + 1)
            a_lin = _linear_poly(ff.coords_of_form(hf.f1))
            b_lin = _linear_poly(ff.coords_of_form(hf.f2))
            far_polys = (lpow, a_lin, b_lin)
            fblock = vpos[group.far]
        p_alpha = far_polys[0] if far_polys else None
        for alpha in range(big + 1):
            if far_polys and alpha > 0:
                p_alpha = _poly_mul(p_alpha, far_polys[1])
            q_ab = p_alpha
            for beta in range(big - alpha + 1):
                if far_polys and beta > 0:
                    q_ab = _poly_mul(q_ab, far_polys[2])
                gamma = big - alpha - beta
                col: dict = {}
                for m in range(r + 2):
                    key = (hblock, _mono_index(r + 1 - m + alpha, m + beta, d))
                    col[key] = col.get(key, Fraction(0)) + hsign * home_base[m]
                if far_polys:
                    # far-frame exponents are (eu, ew, et + gamma); the index
                    # only needs the first two at fixed total degree d
                    for (eu, ew, _et), v in q_ab.items():
                        key = (fblock, _mono_index(eu, ew, d))
                        col[key] = col.get(key, Fraction(0)) - hsign * v
                ech.insert(_column_int(col))
    return ech.rank


def vertex_ideal_dimension(c: SimplicialComplex, r: int, d: int, v: int) -> int:
    """dim J(v)_d by exact rank on two-variable slices times powers of z."""
    return _vertex_dim(ideal_complex(c, r), r, d, v)


def _vertex_dim(data: IdealComplexData, r, d, v) -> int:
    forms = data.vertex_forms[v]
    frame = _Frame(v, forms)
    pairs = tuple(_solve_frame_pair(f, frame.f1, frame.f2) for f in forms)
    return sum(_two_var_dim(pairs, r, e) for e in range(r + 1, d + 1))


def h0_hilbert_oracle(c: SimplicialComplex, r: int, d: int) -> int:
    """dim H0 of the ideal complex in degree d: total vertex dimension minus
    the boundary rank, everything by exact elimination."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    data = ideal_complex(c, r)
    total = sum(_vertex_dim(data, r, d, v) for v in c.interior_vertices)
    return total - boundary_rank(c, r, d, data)


def h0_regularity_oracle(c: SimplicialComplex, r: int):
    """Largest d in [r+1, 4r+2] with nonzero H0, or None when the module is
    zero on the whole window; errors if the cap degree is still nonzero."""
    top = None
    for d in range(r + 1, 4 * r + 3):
        value = h0_hilbert_oracle(c, r, d)
        if value:
            top = d
    if top == 4 * r + 2:
        raise CapExceeded(f"H0 nonzero at degree {top} = 4r+2")
    return top


# ---------------------------------------------------------------------------
# spline dimensions


@dataclass(frozen=True)
class LocalResolution:
    """Free resolution data of a vertex star with k distinct slopes."""

    k: int
    r: int
    alpha_star: int
    a1: int
    a2: int

    def hilbert(self, d: int) -> int:
        return (
            count_degree(d)
            - self.k * count_degree(d - self.r - 1)
            + self.a1 * count_degree(d - self.r - 1 - self.alpha_star)
            + self.a2 * count_degree(d - self.r - 2 - self.alpha_star)
        )


def schumaker_local(k: int, r: int) -> LocalResolution:
    if k < 2:
        raise ValueError("a vertex star needs at least two distinct slopes")
    alpha_star = (r + 1) // (k - 1)
    a1 = (k - 1) * alpha_star + k - r - 2
    a2 = r + 1 - (k - 1) * alpha_star
    assert a1 + a2 == k - 1 and a1 >= 0 and a2 >= 0
    return LocalResolution(k, r, alpha_star, a1, a2)


def spline_dim_formula(c: SimplicialComplex, r: int, d: int) -> int:
    """Dimension of the degree-d smooth spline space from local data plus
    the homology correction term."""
    stats = interior_stats(c, r)
    f2 = len(c.triangles)
    total = f2 * count_degree(d)
    total -= len(c.interior_edges) * (count_degree(d) - count_degree(d - r - 1))
    for v, st in stats.per_vertex.items():
        total += schumaker_local(st.k, r).hilbert(d)
    total += h0_hilbert_oracle(c, r, d)
    return total


def spline_dim_oracle(c: SimplicialComplex, r: int, d: int) -> int:
    """Brute force: one unknown polynomial of degree <= d per triangle; for
    each interior edge the difference of the two sides must be divisible by
    the edge form to the (r+1)-st power, imposed as the vanishing of all
    low-order coefficients in a sheared coordinate system."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    ech = SparseIntEchelon()
    n_unknowns = len(c.triangles) * count_degree(d)
    for e in c.interior_edges:
        t1, t2 = c.edge_triangles[e]
        form = c.edge_form(e)
        expansions = _shear_expansions(form, r, d)
        rows: dict[tuple[int, int], dict] = {}
        for (p, q), coeffs in expansions.items():
            for (a_exp, k_exp), cf in coeffs.items():
                row = rows.setdefault((k_exp, a_exp), {})
                row[(t1, p, q)] = row.get((t1, p, q), Fraction(0)) + cf
                row[(t2, p, q)] = row.get((t2, p, q), Fraction(0)) - cf
        for key in sorted(rows):
            ech.insert(_column_int(rows[key]))
    return n_unknowns - ech.rank


def _shear_expansions(form: LinearForm, r: int, d: int):
    """For each monomial x^p y^q (p+q <= d), its coefficients on u^a t^k with
    k <= r after the affine change with t = form(x, y), as a dict."""
    A, B, C = form.a, form.b, form.c
    if B != 0:
        x_poly = {(1, 0): Fraction(1)}
        y_poly = {
            (0, 1): Fraction(1, B),
            (1, 0): Fraction(-A, B),
            (0, 0): Fraction(-C, B),
        }
    else:
        x_poly = {(0, 1): Fraction(1, A), (0, 0): Fraction(-C, A)}
        y_poly = {(1, 0): Fraction(1)}
    x_poly = {k: v for k, v in x_poly.items() if v}
    y_poly = {k: v for k, v in y_poly.items() if v}

    def mul(p1, p2):
        out = {}
        for (a1, k1), v1 in p1.items():
            for (a2, k2), v2 in p2.items():
                if k1 + k2 > r:
                    continue
                key = (a1 + a2, k1 + k2)
                nv = out.get(key, Fraction(0)) + v1 * v2
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    xp = [{(0, 0): Fraction(1)}]
    for _ in range(d):
        xp.append(mul(xp[-1], x_poly))
    yp = [{(0, 0): Fraction(1)}]
    for _ in range(d):
        yp.append(mul(yp[-1], y_poly))
    out = {}
    for p in range(d + 1):
        for q in range(d + 1 - p):
            out[(p, q)] = mul(xp[p], yp[q])
    return out
