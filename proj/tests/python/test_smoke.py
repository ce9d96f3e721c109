from fractions import Fraction

import pytest

import pnspanner as pn


def test_counterexample_pair_ratio_is_harmonic():
    g, space = pn.build_counterexample_graph(10, Fraction(1, 2000))
    assert g.edge_count() == 11
    route = pn.proximity_path(g, space, 0, space.infinity_id)
    assert route["reached"]
    assert route["total_length"] / space.distance(0, space.infinity_id) == pn.harmonic(11)


def test_counterexample_stretch_is_exact():
    g, space = pn.build_counterexample_graph(10, "1/2000")
    report = pn.stretch(g, space)
    assert isinstance(report["stretch"], Fraction)
    assert report["argmax"] == (2, 10)
    assert not pn.is_t_spanner(g, space, Fraction(31, 10))
    assert pn.is_t_spanner(g, space, report["stretch"])


def test_min_counterexample_index():
    assert pn.min_counterexample_index(3) == 10
    assert pn.min_counterexample_index(2) == 3


def test_closed_form_table_values():
    eps = Fraction(1, 100)
    assert pn.dx_closed_form(0, 1, eps) == Fraction(1, 2) + eps
    assert pn.dx_closed_form(2, None, eps) == 1 - 2 * eps
    assert pn.dx_closed_form(0, None, eps) == 1


def test_hsp_equals_chain_after_symmetrizing():
    g, space = pn.build_counterexample_graph(6)
    assert pn.symmetrize(pn.build_hsp(space)) == g


def test_euclidean_hsp_is_pn_graph():
    space = pn.EuclideanSpace([[0, 0], [1, 0], [0, 1], [1, 1], [0.5, 0.4]])
    g, traces = pn.build_hsp(space, trace=True)
    assert g.directed
    assert len(traces) == len(space)
    assert pn.is_pn_graph(g, space) == (True, None)
    assert pn.check_lune(g, space)[0]
    assert pn.stretch(pn.build_complete(space), space)["stretch"] == 1.0


def test_delaunay_interior_point_has_six_edges():
    space = pn.EuclideanSpace([[0, 0], [2, 0], [1, 1], [1, 3]])
    assert pn.build_delaunay(space).edge_count() == 6


def test_graph_text_round_trip():
    g, _ = pn.build_counterexample_graph(4)
    assert pn.read_graph(g.to_text()) == g


def test_non_pn_graph_reports_witness():
    space = pn.HammingSpace(["000", "001", "011"])
    g = pn.FloatGraph(3)
    g.add_edge(0, 2, 2.0)
    g.add_edge(1, 2, 1.0)
    holds, witness = pn.is_pn_graph(g, space)
    assert not holds and witness is not None


def test_broken_table_has_triangle_violation():
    report = pn.check_metric_axioms(pn.TableSpace([[0, 1, 5], [1, 0, 1], [5, 1, 0]]))
    assert not report["holds"]
    assert report["violations"][0]["axiom"] == "triangle"


def test_verify_family_small():
    assert pn.verify_family(4)["passed"]


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        pn.EuclideanSpace([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        pn.build_counterexample_graph(3, Fraction(1, 2))
