import _cwhom as cw


def test_triangle_invariants():
    g = cw.parse_graph6("Bw")
    inv = cw.invariants(g)
    assert (inv["depth"], inv["reg"], inv["dim"], inv["degh"]) == (1, 1, 1, 1)


def test_graph_roundtrip():
    g = cw.Graph(4)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 3)
    assert cw.parse_graph6(g.graph6()).edges() == g.edges()


def test_shape_literal_and_recognition():
    lit = "cw m=2 p=2 s=1,1 t=1,0 bip=1-1,1-2,2-2"
    g = cw.build_shape(lit)
    assert cw.recognize(g) == lit
    formulas = cw.cw_invariants(lit)
    oracle = cw.invariants(g)
    for key in ("depth", "reg", "dim", "degh"):
        assert formulas[key] == oracle[key]


def test_closed_form_tuple4_n8():
    assert cw.closed_form_set("cw-tuple4", 8) == {
        (2, 2, 5, 5),
        (2, 2, 6, 6),
        (3, 3, 3, 3),
        (3, 3, 4, 4),
        (3, 3, 5, 5),
    }


def test_cw_sets_match_closed_forms():
    pairs, tuples = cw.enumerate_cw_sets(9)
    assert pairs == cw.closed_form_set("cw-dd", 9)
    assert tuples == cw.closed_form_set("cw-tuple4", 9)


def test_graph_pair_enumeration_small():
    assert cw.enumerate_graph_pair_set(5) == cw.closed_form_set("c-minus", 5)


def test_witness():
    g = cw.witness_for_point("cw-pair", 9, [4, 4])
    inv = cw.invariants(g)
    assert (inv["depth"], inv["dim"]) == (4, 4)


def test_convexity():
    assert cw.is_convex(cw.closed_form_set("cw-dd", 8))
    assert not cw.is_convex(cw.closed_form_set("cw-dd", 9))
