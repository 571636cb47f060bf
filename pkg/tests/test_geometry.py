import json
from fractions import Fraction

import pytest

from splinereg.errors import (
    AlphaUndefined,
    DegenerateTriangle,
    ExtraInteriorVertex,
    NonzeroGenus,
    NotConnected,
    NotOneEdge,
    ParseError,
    SlopeClashAssumption,
)
from splinereg.geometry import (
    LinearForm,
    SimplicialComplex,
    ce1_complex,
    interior_stats,
    normalize_one_edge,
    one_edge_complex,
    parse_complex,
    single_triangle,
    square_with_diagonals,
    star_complex,
    two_triangles,
)


def test_parse_two_triangles():
    text = json.dumps(
        {
            "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]],
            "triangles": [[0, 1, 2], [1, 3, 2]],
        }
    )
    c = parse_complex(text)
    assert c.interior_vertices == ()
    assert len(c.interior_edges) == 1


def test_parse_accepts_fraction_strings():
    text = json.dumps(
        {
            "vertices": [["0", "0"], ["1/2", "0"], ["0", "3/7"]],
            "triangles": [[0, 1, 2]],
        }
    )
    c = parse_complex(text)
    assert c.vertices[1] == (Fraction(1, 2), Fraction(0))


def test_parse_roundtrip_ce1():
    c = ce1_complex()
    again = parse_complex(c.to_json())
    assert again.vertices == c.vertices
    assert again.triangles == c.triangles
    assert len(again.interior_vertices) == 3


def test_parse_rejects_duplicate_triangle():
    text = json.dumps(
        {
            "vertices": [["0", "0"], ["1", "0"], ["0", "1"]],
            "triangles": [[0, 1, 2], [2, 0, 1]],
        }
    )
    with pytest.raises(ParseError):
        parse_complex(text)


def test_parse_rejects_bad_json():
    with pytest.raises(ParseError):
        parse_complex("{not json")


def test_parse_rejects_unknown_keys():
    text = json.dumps({"vertices": [], "triangles": [], "extra": 1})
    with pytest.raises(ParseError):
        parse_complex(text)


def test_parse_rejects_float_coordinates():
    text = json.dumps(
        {"vertices": [["0.5", "0"], ["1", "0"], ["0", "1"]], "triangles": [[0, 1, 2]]}
    )
    with pytest.raises(ParseError):
        parse_complex(text)


def test_degenerate_triangle():
    with pytest.raises(DegenerateTriangle):
        SimplicialComplex([(0, 0), (1, 1), (2, 2)], [(0, 1, 2)])


def test_not_connected():
    with pytest.raises(NotConnected):
        SimplicialComplex(
            [(0, 0), (1, 0), (0, 1), (5, 5), (6, 5), (5, 6)],
            [(0, 1, 2), (3, 4, 5)],
        )


def test_nonzero_genus_annulus():
    outer = [(0, 0), (4, 0), (4, 4), (0, 4)]
    inner = [(1, 1), (3, 1), (3, 3), (1, 3)]
    verts = outer + inner
    tris = [
        (0, 1, 5), (0, 5, 4), (1, 2, 6), (1, 6, 5),
        (2, 3, 7), (2, 7, 6), (3, 0, 4), (3, 4, 7),
    ]
    with pytest.raises(NonzeroGenus):
        SimplicialComplex(verts, tris)


def test_edge_in_three_triangles_rejected():
    verts = [(0, 0), (1, 0), (0, 1), (0, -1), (1, 1)]
    tris = [(0, 1, 2), (0, 1, 3), (0, 1, 4)]
    with pytest.raises(ParseError):
        SimplicialComplex(verts, tris)


def test_unused_vertex_rejected():
    with pytest.raises(ParseError):
        SimplicialComplex([(0, 0), (1, 0), (0, 1), (9, 9)], [(0, 1, 2)])


def test_linear_form_vanishes_on_edge():
    f = LinearForm.through((Fraction(1, 2), Fraction(3)), (Fraction(-2), Fraction(1)))
    assert f.evaluate((Fraction(1, 2), Fraction(3))) == 0
    assert f.evaluate((Fraction(-2), Fraction(1))) == 0


def test_interior_stats_one_edge(complex_one33):
    st = interior_stats(complex_one33, 2)
    assert len(st.totally_interior) == 1
    v1 = st.per_vertex[0]
    assert (v1.f1_00, v1.k_00, v1.k_0b, v1.k) == (1, 1, 2, 3)
    assert st.alpha(0) == (2 + 1) // 2
    assert st.interior_blocks == 1


def test_interior_stats_ce1(complex_ce1):
    st = interior_stats(complex_ce1, 3)
    v1, v0, v2 = st.per_vertex[0], st.per_vertex[1], st.per_vertex[2]
    assert v1.f1_00 == 1 and v2.f1_00 == 1 and v0.f1_00 == 2
    assert v1.f1_0b == 4 and v1.k_0b == 2 and v1.k == 3
    assert st.alpha(0) == st.alpha(2) == (3 + 1) // 2
    assert len(st.totally_interior) == 2


def test_interior_stats_star(complex_star):
    st = interior_stats(complex_star, 1)
    assert st.totally_interior == ()
    assert st.per_vertex[0].k == 3


def test_square_with_diagonals_k2():
    st = interior_stats(square_with_diagonals(), 1)
    assert st.per_vertex[0].k == 2


def test_alpha_undefined(complex_wheel):
    st = interior_stats(complex_wheel, 1)
    assert st.per_vertex[0].f1_0b == 0
    with pytest.raises(AlphaUndefined):
        st.alpha(0)


def test_slope_clash_detected():
    # the left vertex sits on the line of the totally interior edge
    verts = [(0, 0), (1, 0), (0, 1), (0, -1), (-1, 0), (3, -2), (3, 2)]
    tris = [(0, 1, 2), (0, 2, 4), (0, 4, 3), (0, 3, 1), (1, 3, 5), (1, 5, 6), (1, 6, 2)]
    c = SimplicialComplex(verts, tris)
    with pytest.raises(SlopeClashAssumption):
        interior_stats(c, 1)


def test_normalize_one_edge_symmetric(complex_one33):
    norm = normalize_one_edge(complex_one33, 2)
    assert (norm.a, norm.b) == (3, 3)
    assert norm.slopes1[0] == 0 and norm.slopes2[0] == 0
    assert len(set(norm.slopes1)) == 2 and len(set(norm.slopes2)) == 2
    # v1 goes to [0,1,0], v2 to [1,0,0]
    m = norm.matrix
    for v, target in ((norm.v1, (0, 1, 0)), (norm.v2, (1, 0, 0))):
        p = complex_one33.vertices[v]
        image = tuple(
            m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] for i in range(3)
        )
        nz = [x for x in image if x != 0]
        assert len(nz) == 1
        assert tuple(x / nz[0] for x in image) == target


def test_normalize_sends_edge_form_to_z(complex_one33):
    from splinereg.geometry import _mat_inverse, _row_times

    norm = normalize_one_edge(complex_one33, 1)
    eps = (min(norm.v1, norm.v2), max(norm.v1, norm.v2))
    form = complex_one33.edge_form(eps)
    inv = _mat_inverse(norm.matrix)
    image = _row_times(tuple(map(Fraction, form.vector())), inv)
    assert image[0] == 0 and image[1] == 0 and image[2] != 0


def test_normalize_34(complex_one34):
    norm = normalize_one_edge(complex_one34, 8)
    assert (norm.a, norm.b) == (3, 4)
    assert len(norm.slopes2) == 3


def test_normalize_rejects_ce1(complex_ce1):
    with pytest.raises(NotOneEdge):
        normalize_one_edge(complex_ce1, 2)


def test_normalize_rejects_extra_interior_vertex(complex_one33):
    # subdivide a pocket hung off the boundary edge [U, L]: the new vertex is
    # interior but touches only boundary vertices
    verts = [tuple(p) for p in complex_one33.vertices]
    tris = list(complex_one33.triangles)
    u, l = 2, 4
    m = len(verts)
    verts.append((Fraction(-3), Fraction(3)))   # far corner
    verts.append((Fraction(-4, 3), Fraction(4, 3)))  # inside the pocket
    w = m + 1
    tris += [(u, verts.index((Fraction(-3), Fraction(3))), w)[:3]]
    tris[-1] = (u, m, w)
    tris += [(m, l, w), (l, u, w)]
    c = SimplicialComplex(verts, tris)
    assert len(c.interior_vertices) == 3
    with pytest.raises(ExtraInteriorVertex):
        normalize_one_edge(c, 2)


def test_builders_are_valid():
    for c in (
        single_triangle(),
        two_triangles(),
        star_complex(),
        square_with_diagonals(),
        ce1_complex(),
    ):
        v, e, f = len(c.vertices), len(c.edges), len(c.triangles)
        assert v - e + f == 1


@pytest.mark.parametrize("a,b", [(3, 3), (3, 4), (4, 4), (3, 8), (5, 6), (8, 8)])
def test_one_edge_builder_slope_counts(a, b):
    c = one_edge_complex(a, b)
    st = interior_stats(c, 1)
    ks = sorted(vs.k for vs in st.per_vertex.values())
    assert ks == sorted((a, b))
    assert len(st.totally_interior) == 1
    assert len(c.interior_vertices) == 2
