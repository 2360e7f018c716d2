"""Groupoid validation, named axiom failures, and structural queries."""

import itertools

import pytest

from groupoids.builders import (
    cyclic_table,
    group_groupoid,
    pair_groupoid,
    set_groupoid,
    symmetric_table,
)
from groupoids.errors import AxiomViolation, PreconditionFailed
from groupoids.groupoid import (
    Groupoid,
    SubgroupoidRef,
    cartesian_product,
    disjoint_union,
    validate_groupoid,
)
from groupoids.relation import Universe
from groupoids.search import find_groupoid_isomorphism

Z2_ELEMENTS = ("0", "1")
Z2_UNITS = ("0",)
Z2_INVERSE = {"0": "0", "1": "1"}
Z2_TABLE = (("0", "0", "0"), ("1", "0", "1"), ("1", "1", "0"), ("0", "1", "1"))


def z2_data():
    return list(Z2_ELEMENTS), list(Z2_UNITS), dict(Z2_INVERSE), list(Z2_TABLE)


def test_catalog_groupoids_validate(catalog):
    for g in catalog.values():
        assert validate_groupoid(
            g.name, tuple(g.elements), g.units, g.inverse, g.table
        ).same_structure(g)


def test_dropped_product_row_fails_inverse_law():
    elements, units, inverse, table = z2_data()
    table.remove(("0", "1", "1"))
    with pytest.raises(AxiomViolation) as err:
        Groupoid("Z2", elements, units, inverse, table)
    assert err.value.law == "m(s(g),g)-in-units"
    assert err.value.offender == "1"


def test_broken_involution_fails_s2():
    elements, units, inverse, table = z2_data()
    inverse["1"] = "0"
    with pytest.raises(AxiomViolation) as err:
        Groupoid("Z2", elements, units, inverse, table)
    assert err.value.law == "s2=id"


def test_stray_unit_fails_left_unit_law():
    elements, units, inverse, table = z2_data()
    units.append("1")
    with pytest.raises(AxiomViolation) as err:
        Groupoid("Z2", elements, units, inverse, table)
    assert err.value.law == "m(exid)=id"


def test_stray_product_row_fails_associativity():
    elements, units, inverse, table = z2_data()
    table.append(("1", "0", "0"))
    with pytest.raises(AxiomViolation) as err:
        Groupoid("Z2", elements, units, inverse, table)
    assert err.value.law == "m(mxid)=m(idxm)"


def test_removed_unit_fails_unit_law():
    s2 = set_groupoid(Universe("S", ("p", "q")))
    with pytest.raises(AxiomViolation) as err:
        Groupoid("S2", tuple(s2.elements), ("p",), s2.inverse, s2.table)
    assert err.value.law == "m(exid)=id"


def test_constant_involution_reported_at_s2():
    # s(g) = e also breaks the antihomomorphism law, but the involution
    # check runs first
    elements, units, inverse, table = z2_data()
    inverse["1"] = "0"
    inverse["0"] = "0"
    with pytest.raises(AxiomViolation) as err:
        Groupoid("Z2", elements, units, inverse, table)
    assert err.value.law == "s2=id"


def test_identity_involution_on_s3_isolates_antihomomorphism():
    # the identity is an involution fixing the unit, and every unit and
    # associativity law still holds, so the first failure is the
    # antihomomorphism axiom
    s3 = group_groupoid(symmetric_table(3))
    with pytest.raises(AxiomViolation) as err:
        Groupoid(
            "S3id",
            tuple(s3.elements),
            s3.units,
            {g: g for g in s3.elements},
            s3.table,
        )
    assert err.value.law == "sm=m.flip(sxs)"


def test_identity_involution_on_z4_isolates_inverse_law():
    # on an abelian group the identity involution keeps s(ab)=s(b)s(a)
    # true, so the failure surfaces at m(s(g),g)
    z4 = group_groupoid(cyclic_table(4))
    with pytest.raises(AxiomViolation) as err:
        Groupoid(
            "Z4id",
            tuple(z4.elements),
            z4.units,
            {g: g for g in z4.elements},
            z4.table,
        )
    assert err.value.law == "m(s(g),g)-in-units"


def test_partial_operation_matches_axioms(catalog):
    """The table, read as a partial operation, satisfies the elementwise laws."""
    for g in catalog.values():
        mult = {}
        for c, a, b in g.table:
            assert (a, b) not in mult, "double-valued product"
            mult[(a, b)] = c
        for a in g.elements:
            for b in g.elements:
                defined = (a, b) in mult
                assert defined == (g.e_right(a) == g.e_left(b))
        for a in g.elements:
            assert mult[(g.e_left(a), a)] == a
            assert mult[(a, g.e_right(a))] == a
            assert mult[(g.inverse[a], a)] == g.e_right(a)
            assert mult[(a, g.inverse[a])] == g.e_left(a)
        for (a, b), c in mult.items():
            assert g.inverse[c] == mult[(g.inverse[b], g.inverse[a])]
        for a, b, c in itertools.product(g.elements, repeat=3):
            ab, bc = mult.get((a, b)), mult.get((b, c))
            left = mult.get((ab, c)) if ab is not None else None
            right = mult.get((a, bc)) if bc is not None else None
            assert left == right


def test_composable_pairs(catalog):
    assert set(catalog["S2"].composable()) == {("p", "p"), ("q", "q")}
    assert len(catalog["Z2"].composable()) == 4
    assert len(catalog["P2"].composable()) == 8


def test_orbits(catalog):
    assert catalog["P2"].orbits() == (("x,x", "y,y"),)
    assert catalog["BD"].orbits() == (("0:0",), ("1:0",))
    assert len(catalog["TR"].orbits()) == 1
    assert catalog["EQ"].orbits() == (("1,1", "2,2"), ("3,3",))


def test_isotropy(catalog):
    p2 = catalog["P2"]
    assert catalog["P2"].isotropy("x,x").members == frozenset(("x,x",))
    z2 = catalog["Z2"]
    assert z2.isotropy("0").members == frozenset(z2.elements)
    tr = catalog["TR"]
    unit = min(tr.units)
    assert tr.isotropy(unit).members == frozenset((unit,))
    bundle = p2.isotropy_bundle()
    assert bundle.members == frozenset(("x,x", "y,y"))
    assert bundle.is_wide


def test_transitive_components(catalog):
    du = disjoint_union(catalog["P2"], catalog["Z2"])
    assert len(du.transitive_components()) == 2
    assert len(catalog["PF"].transitive_components()) == 1
    assert len(catalog["BD"].transitive_components()) == 2


def test_restrict_pair_groupoid():
    p3 = pair_groupoid(Universe("X", ("1", "2", "3")))
    small = p3.restrict(("1,1", "2,2"))
    assert small.same_structure(pair_groupoid(Universe("Y", ("1", "2"))))


def test_restrict_to_all_units_is_identity(catalog):
    for g in catalog.values():
        assert g.restrict(g.units) == g


def test_restrict_to_orbit_gives_component(catalog):
    eq = catalog["EQ"]
    block = eq.orbits()[0]
    component = eq.restrict(block)
    refs = eq.transitive_components()
    matching = [r for r in refs if set(r.units) == set(block)]
    assert len(matching) == 1
    assert component.same_structure(matching[0].as_groupoid())


def test_restrict_rejects_non_units(catalog):
    with pytest.raises(PreconditionFailed):
        catalog["Z2"].restrict(("1",))


def test_empty_restriction_is_valid(catalog):
    empty = catalog["Z2"].restrict(())
    assert len(empty.elements) == 0
    assert empty.orbits() == ()


def test_disjoint_union_size(catalog):
    du = disjoint_union(catalog["P2"], catalog["Z2"])
    assert len(du.elements) == 6
    assert {g[:2] for g in du.elements} == {"L:", "R:"}


def test_product_of_z2s_is_klein(catalog):
    prod = cartesian_product(catalog["Z2"], catalog["Z2"])
    assert find_groupoid_isomorphism(prod, catalog["V4"]) is not None


def test_product_with_two_point_base_doubles(catalog):
    prod = cartesian_product(catalog["S2"], catalog["Z2"])
    doubled = disjoint_union(catalog["Z2"], catalog["Z2"])
    assert find_groupoid_isomorphism(prod, doubled) is not None


def test_subgroupoid_predicates(catalog):
    z2 = catalog["Z2"]
    assert z2.is_subgroupoid(z2.units)
    assert z2.is_wide(z2.units)
    assert not z2.is_subgroupoid(("1",))
    p2 = catalog["P2"]
    assert p2.is_subgroupoid(("x,x", "y,y"))
    assert not p2.is_wide(("x,x",))


def test_orbit_relation(catalog):
    p2 = catalog["P2"]
    assert p2.orbit_relation().same_structure(
        pair_groupoid(Universe("U", tuple(p2.units)))
    )
    bd = catalog["BD"]
    assert find_groupoid_isomorphism(
        bd.orbit_relation(), set_groupoid(Universe("U", tuple(bd.units)))
    ) is not None
    eq = catalog["EQ"]
    assert find_groupoid_isomorphism(eq.orbit_relation(), eq) is not None


def _set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1 :]
        yield [[head]] + part


def test_partition_into_subgroupoids_respects_components(catalog):
    """Blocks of a subgroupoid partition are unions of transitive components."""
    for g in catalog.values():
        if len(g.elements) > 8:
            continue
        components = [frozenset(r.members) for r in g.transitive_components()]
        for part in _set_partitions(g.elements):
            if not all(g.is_subgroupoid(block) for block in part):
                continue
            for block in part:
                covered = {c for c in components if c & set(block)}
                assert set(block) == set().union(*covered) if covered else not block


def test_decompose_transitive_round_trip(catalog):
    for key in ("Z2", "P2", "P3", "TR", "PF"):
        g = catalog[key]
        base, table, phi = g.decompose_transitive()
        assert set(phi.values()) == set(g.elements)
        assert len(phi) == len(g.elements)
        keys = [
            (x, a, y)
            for x in base
            for a in table.elements
            for y in base
        ]
        for (x1, g1, y1), (x2, g2, y2) in itertools.product(keys, repeat=2):
            a = phi[f"{x1}|{g1}|{y1}"]
            b = phi[f"{x2}|{g2}|{y2}"]
            if y1 != x2:
                assert g.e_right(a) != g.e_left(b)
                continue
            assert g.mult(a, b) == phi[f"{x1}|{table.mult(g1, g2)}|{y2}"]


def test_decompose_transitive_shapes(catalog):
    base, table, phi = catalog["TR"].decompose_transitive()
    assert len(base) == 2 and len(table) == 1
    base, table, phi = catalog["Z4"].decompose_transitive()
    assert len(base) == 1 and len(table) == 4
    base, table, phi = catalog["P2"].decompose_transitive()
    assert len(base) == 2 and len(table) == 1


def test_decompose_requires_transitive(catalog):
    with pytest.raises(PreconditionFailed):
        catalog["BD"].decompose_transitive()


def test_subgroupoid_ref_as_groupoid(catalog):
    z4 = catalog["Z4"]
    ref = SubgroupoidRef(z4, frozenset(("0", "2")))
    sub = ref.as_groupoid()
    assert sorted(sub.elements) == ["0", "2"]
    assert sub.mult("2", "2") == "0"
