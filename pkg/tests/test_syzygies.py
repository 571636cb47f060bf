import pytest

from splinereg.errors import NonMonotone, TrivialIdeal, TwoChainRequired
from splinereg.monomials import Monomial, hilbert_function, max_socle_degree, minimalize
from splinereg.staircase import build_q
from splinereg.syzygies import (
    BuchGraph,
    betti_oracle,
    bottom_face,
    buchberger_graph,
    euler_hilbert_check,
    regularity_from_bottom_face,
    syz2_closed_form,
    syz3_closed_form,
)


def M(ex=0, ey=0, ez=0):
    return Monomial(ex, ey, ez)


def renders(ms):
    return [m.render() for m in ms]


KOSZUL = minimalize([M(1), M(0, 1), M(0, 0, 1)])


def test_graph_koszul():
    g = buchberger_graph(KOSZUL)
    assert sorted(renders(g.edge_lcms())) == ["x y", "x z", "y z"]
    assert renders(g.face_lcms()) == ["x y z"]


def test_graph_two_generators():
    g = buchberger_graph(minimalize([M(1), M(0, 1)]))
    assert renders(g.edge_lcms()) == ["x y"]
    assert g.faces == ()


def test_graph_worked_example():
    g = buchberger_graph(build_q(3, 4, 8).in_q)
    assert sorted(renders(g.edge_lcms())) == sorted(
        ["x^4 z^2", "x^3 z^4", "y^3 z", "y^2 z^2", "y z^4",
         "x^4 y^3", "x^4 y^2 z", "x^3 y z^2"]
    )
    assert sorted(renders(g.face_lcms())) == sorted(
        ["x^4 y^3 z", "x^4 y^2 z^2", "x^3 y z^4"]
    )


def test_graph_planarity_euler():
    for a, b, r in [(3, 3, 2), (3, 4, 8), (4, 5, 9), (3, 8, 12), (5, 5, 11)]:
        q = build_q(a, b, r)
        g = buchberger_graph(q.in_q)
        assert len(g.nodes) - len(g.edges) + len(g.faces) == 1


def test_graph_rejects_mixed_generators():
    with pytest.raises(TwoChainRequired):
        buchberger_graph(minimalize([M(1, 1, 0), M(0, 0, 1)]))


def test_syz2_worked_example():
    got = syz2_closed_form(build_q(3, 4, 8))
    assert got == (
        M(4, 3, 0), M(4, 2, 1), M(4, 0, 2), M(3, 1, 2), M(3, 0, 4),
        M(0, 3, 1), M(0, 2, 2), M(0, 1, 4),
    )


def test_syz2_33_r2():
    assert set(syz2_closed_form(build_q(3, 3, 2))) == {M(1, 1, 0), M(1, 0, 2), M(0, 1, 2)}


def test_syz2_trivial_raises():
    with pytest.raises(TrivialIdeal):
        syz2_closed_form(build_q(5, 5, 0))


@pytest.mark.parametrize(
    "a,b", [(a, b) for a in range(3, 8) for b in range(a, 8)]
)
def test_syz2_matches_graph_edges(a, b):
    for r in range(1, 11, 2):
        q = build_q(a, b, r)
        if q.is_trivial:
            continue
        g = buchberger_graph(q.in_q)
        assert set(syz2_closed_form(q)) == set(g.edge_lcms())


def test_syz3_worked_example():
    g = buchberger_graph(build_q(3, 4, 8).in_q)
    assert renders(syz3_closed_form(g)) == ["x^4 y^3 z", "x^4 y^2 z^2", "x^3 y z^4"]


def test_syz3_koszul_single_face():
    assert renders(syz3_closed_form(buchberger_graph(KOSZUL))) == ["x y z"]


def test_syz3_33_r2():
    g = buchberger_graph(build_q(3, 3, 2).in_q)
    assert renders(syz3_closed_form(g)) == ["x y z^2"]


def test_syz3_rejects_bad_orders():
    shared_z = BuchGraph((), (), (((0, 1, 2), M(2, 1, 1)), ((0, 1, 3), M(1, 2, 1))))
    with pytest.raises(NonMonotone):
        syz3_closed_form(shared_z)
    degree_up = BuchGraph((), (), (((0, 1, 2), M(1, 1, 1)), ((0, 1, 3), M(3, 3, 2))))
    with pytest.raises(NonMonotone):
        syz3_closed_form(degree_up)


def test_betti_koszul():
    t = betti_oracle(KOSZUL)
    assert renders(t.multidegrees(0)) == ["x", "y", "z"]
    assert sorted(renders(t.multidegrees(1))) == ["x y", "x z", "y z"]
    assert renders(t.multidegrees(2)) == ["x y z"]


def test_betti_principal():
    t = betti_oracle(minimalize([M(2)]))
    assert renders(t.multidegrees(0)) == ["x^2"]
    assert t.multidegrees(1) == () and t.multidegrees(2) == ()


def test_betti_worked_example():
    q = build_q(3, 4, 8)
    t = betti_oracle(q.in_q)
    assert t.multidegrees(0) == q.in_q.gens
    assert t.multidegrees(1) == syz2_closed_form(q)
    assert set(t.multidegrees(2)) == set(syz3_closed_form(buchberger_graph(q.in_q)))
    assert all(mult == 1 for _, _, mult in t.entries)


def test_euler_hilbert_consistency():
    for ideal in (KOSZUL, build_q(3, 4, 8).in_q, build_q(4, 4, 6).in_q,
                  minimalize([M(2), M(0, 3), M(1, 1, 1)])):
        t = betti_oracle(ideal)
        for d in range(0, 12):
            assert euler_hilbert_check(ideal, t, d)


def test_regularity_from_bottom_face_values():
    assert regularity_from_bottom_face(build_q(3, 4, 8)) == 14
    assert regularity_from_bottom_face(build_q(3, 3, 2)) == 4
    assert regularity_from_bottom_face(build_q(3, 3, 3)) == 6


def test_bottom_face_witness():
    q = build_q(3, 4, 8)
    assert bottom_face(q) == M(4, 3, 1)
    assert bottom_face(q).ez in (1, 2)


def test_regularity_trivial_raises():
    with pytest.raises(TrivialIdeal):
        regularity_from_bottom_face(build_q(5, 5, 0))


def test_socle_shift_identity_on_sample():
    for a, b, r in [(3, 3, 5), (3, 6, 9), (4, 7, 12), (6, 6, 10)]:
        q = build_q(a, b, r)
        reg = regularity_from_bottom_face(q)
        assert reg == max_socle_degree(q.in_q) + r + 1
        # the socle degree really is the top nonzero degree
        assert hilbert_function(q.in_q, reg - r - 1) != 0
        assert hilbert_function(q.in_q, reg - r) == 0
