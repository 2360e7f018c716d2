"""Relation calculus: composition, transposition, products."""

import itertools

import pytest
from hypothesis import given, strategies as st

from groupoids.errors import UniverseMismatch, UnknownElement
from groupoids.relation import (
    FinRel,
    Universe,
    compose,
    domain,
    flip,
    identity,
    image,
    is_mapping,
    mapping_rel,
    pair_name,
    product,
    product_universe,
    transpose,
    unitor_left,
    unitor_right,
)

A = Universe("A", ("a", "b"))
B = Universe("B", ("c", "d"))
C = Universe("C", ("e", "f"))
D = Universe("D", ("g", "h"))


def rel(src, tgt, pairs):
    return FinRel(src, tgt, pairs)


def test_universe_rejects_duplicates():
    with pytest.raises(ValueError):
        Universe("U", ("a", "a"))


def test_universe_keeps_elements_sorted():
    u = Universe("U", ("b", "a", "c"))
    assert u.elements == ("a", "b", "c")


def test_graph_pairs_are_output_input():
    r = rel(A, B, [("c", "a")])
    assert r.outputs("a") == ("c",)
    assert r.outputs("b") == ()


def test_graph_rejects_unknown_elements():
    with pytest.raises(UnknownElement):
        rel(A, B, [("c", "zz")])
    with pytest.raises(UnknownElement):
        rel(A, B, [("zz", "a")])


def test_compose_single_step():
    r = rel(A, B, [("c", "a")])
    s = rel(B, C, [("e", "c")])
    assert compose(s, r).graph == (("e", "a"),)


def test_compose_identity_neutral():
    r = rel(A, B, [("c", "a"), ("d", "b")])
    assert compose(identity(B), r) == r
    assert compose(r, identity(A)) == r


def test_compose_two_pair_example():
    x = Universe("X", ("a", "b"))
    r = rel(x, x, [("a", "a"), ("a", "b")])
    s = rel(x, x, [("b", "a")])
    assert compose(s, r).graph == (("b", "a"), ("b", "b"))


def test_compose_requires_matching_universes():
    r = rel(A, B, [("c", "a")])
    with pytest.raises(UniverseMismatch):
        compose(r, r)


def test_transpose_swaps_and_involutes():
    r = rel(A, B, [("c", "a"), ("c", "b")])
    assert transpose(r).graph == (("a", "c"), ("b", "c"))
    assert transpose(transpose(r)) == r
    assert transpose(identity(A)) == identity(A)


def test_product_of_singletons():
    r = rel(A, B, [("c", "a")])
    r1 = rel(C, D, [("g", "e")])
    p = product(r, r1)
    assert p.graph == ((pair_name("c", "g"), pair_name("a", "e")),)
    assert len(p.graph) == len(r.graph) * len(r1.graph)


def test_product_of_identities():
    assert product(identity(A), identity(B)) == identity(product_universe(A, B))


def test_domain_image_mapping():
    r = rel(A, B, [("c", "a")])
    assert domain(r) == ("a",)
    assert image(r) == ("c",)
    assert is_mapping(identity(A))
    x = Universe("X", ("a", "b"))
    assert not is_mapping(rel(x, x, [("a", "a"), ("b", "a")]))


def test_mapping_rel_requires_totality():
    with pytest.raises(UnknownElement):
        mapping_rel(A, B, {"a": "c"})
    m = mapping_rel(A, B, {"a": "c", "b": "c"})
    assert is_mapping(m)


def test_flip_involution():
    assert compose(flip(B, A), flip(A, B)) == identity(product_universe(A, B))


def test_unitors_are_bijections():
    assert is_mapping(unitor_left(A))
    assert is_mapping(unitor_right(A))
    assert image(unitor_left(A)) == A.elements


def test_empty_graphs_are_legal():
    r = rel(A, B, [])
    assert compose(rel(B, C, []), r).graph == ()
    assert domain(r) == ()


def test_product_universe_rejects_name_collisions():
    left = Universe("L", ("x", "x,y"))
    right = Universe("R", ("y,z", "z"))
    with pytest.raises(ValueError):
        product_universe(left, right)


def _all_relations(src, tgt):
    cells = [(y, x) for y in tgt for x in src]
    for k in range(len(cells) + 1):
        for combo in itertools.combinations(cells, k):
            yield FinRel(src, tgt, combo)


def test_associativity_exhaustive_on_two_point_universes():
    rs = list(_all_relations(A, B))
    ss = list(_all_relations(B, C))
    ts = list(_all_relations(C, D))
    for r, s, t in itertools.product(rs, ss, ts):
        assert compose(t, compose(s, r)) == compose(compose(t, s), r)


X3 = Universe("X3", ("a", "b", "c"))
Y3 = Universe("Y3", ("d", "e", "f"))
Z3 = Universe("Z3", ("g", "h", "i"))
W3 = Universe("W3", ("j", "k", "l"))


def rel_strategy(src, tgt):
    cells = [(y, x) for y in tgt for x in src]
    return st.sets(st.sampled_from(cells)).map(lambda g: FinRel(src, tgt, g))


@given(rel_strategy(X3, Y3), rel_strategy(Y3, Z3), rel_strategy(Z3, W3))
def test_associativity_sampled_on_three_point_universes(r, s, t):
    assert compose(t, compose(s, r)) == compose(compose(t, s), r)


@given(rel_strategy(X3, Y3), rel_strategy(Y3, Z3))
def test_transpose_antihomomorphism(r, s):
    assert transpose(compose(s, r)) == compose(transpose(r), transpose(s))


@given(
    rel_strategy(X3, Y3),
    rel_strategy(Y3, Z3),
    rel_strategy(X3, Y3),
    rel_strategy(Y3, Z3),
)
def test_product_interchange(r, s, r1, s1):
    lhs = product(compose(s, r), compose(s1, r1))
    rhs = compose(product(s, s1), product(r, r1))
    assert lhs == rhs
