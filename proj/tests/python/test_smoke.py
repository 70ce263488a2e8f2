"""Smoke tests for the Python bindings: one happy path per operation group."""

import math

import pytest

import hymcg


def test_surface_types():
    s = hymcg.make_surface(2, 0, 0)
    assert s.euler_characteristic == -2
    assert s.hyperbolic
    h = hymcg.make_hyperelliptic(s, 6, 0, 0)
    q = hymcg.quotient_surface(h)
    assert q.quotient.genus == 0
    assert q.branch_points == 6
    with pytest.raises(hymcg.Error):
        hymcg.make_surface(-1, 0, 0)
    with pytest.raises(hymcg.Error):
        hymcg.make_hyperelliptic(s, 5, 0, 0)


def test_words_and_point_action():
    w = hymcg.parse_word(2, "t1 t1^-1 t2")
    assert str(hymcg.reduce(w)) == "t2"
    word = hymcg.involution_word(2)
    assert str(word) == "t1 t2 t3 t4 t5^2 t4 t3 t2 t1"
    assert word.length() == 10
    assert hymcg.rho_w(word).is_identity()
    assert hymcg.rho_w(hymcg.parse_word(2, "t1")).cycles() == "(1 2)"
    assert hymcg.perm_group_order(2) == math.factorial(6)


def test_homology_action():
    for g in (1, 2, 3):
        m = hymcg.evaluate(hymcg.involution_word(g))
        assert m.is_minus_identity()
        assert m.is_symplectic()
    assert hymcg.level_membership(hymcg.parse_word(2, "t1^2"), 2)
    assert not hymcg.level_membership(hymcg.parse_word(2, "t1"), 2)
    assert hymcg.braid_relations_hold(3)
    # Huge exponents stay exact through the integer bridge.
    big = hymcg.evaluate(hymcg.parse_word(1, "t1^%d" % 2**70))
    assert max(abs(v) for row in big.rows() for v in row) >= 2**70


def test_closures():
    c = hymcg.group_closure(hymcg.chain_transvections(2, 2))
    assert c.order == 720 == hymcg.sp_order(2, 2)
    sq = hymcg.group_closure(hymcg.chain_transvections(2, 3, squares=True))
    assert sq.order == hymcg.sp_order(2, 3) == 51840
    assert sq.contains(hymcg.identity_matrix(4, 3).negated())
    with pytest.raises(hymcg.Error):
        hymcg.group_closure(hymcg.chain_transvections(2, 3), cap=10)


def test_strata():
    assert hymcg.count_vertex_orbits(6, "full", "pure") == 25
    assert hymcg.count_vertex_orbits(6, "b", "pure") == 15
    assert hymcg.complex_dimension(7, "b") == 2
    h = hymcg.homology(5, "full")
    assert h["f_vector"] == [10, 15]
    assert h["betti"] == [1, 6]
    f = hymcg.parse_family(6, "[[2,3],[2,3,4,5]]")
    tree = hymcg.family_to_tree(f)
    assert tree.stable()
    assert hymcg.tree_to_family(tree) == f
    assert "graph stable_tree" in tree.dot()


def test_dictionary():
    c = hymcg.classify_curve([3, 4, 5], 2)
    assert c.kind == "separatingInvariant"
    assert (c.genus_left, c.genus_right) == (1, 1)

    p = hymcg.cut_profile(hymcg.LaminarFamily(6, [[2, 3]]), 2)
    assert len(p.components) == 1
    comp = p.components[0]
    assert (comp.genus, comp.boundary, comp.branch) == (1, 2, 4)
    assert comp.action == "invariant"

    stab = hymcg.stabilizer_profile(hymcg.LaminarFamily(6, [[2, 3]]), 2, "pure")
    assert stab.twists[0].lattice == "2Z"
    assert stab.symmetry_part == 2

    f = hymcg.random_laminar_family(10, seed=11)
    chi = sum(
        2 - 2 * comp.genus - comp.boundary
        for comp in hymcg.cut_profile(f, 4).components
    )
    assert chi == 2 - 2 * 4


def test_json_round_trip():
    f = hymcg.LaminarFamily(6, [[2, 3], [4, 5]])
    assert f.to_json() == '{"members":[[2,3],[4,5]],"n":6}'
    m = hymcg.evaluate(hymcg.involution_word(1))
    assert '"rows":[[-1,0],[0,-1]]' in m.to_json()
