"""Finite groupoids presented by relational data.

A groupoid is a quadruple (elements, units, inverse, table).  The table
is the graph of the multiplication relation m : G x G -> G and is kept
as (product, left, right) triples, output first.  Construction runs the
full validation pipeline: structural checks, then the relational axioms

    m(m x id) = m(id x m)
    m(e x id) = m(id x e) = id
    s s = id
    s m = m flip (s x s)
    for every g:  m(s(g), g) is nonempty and lands in the units,

then the derived category-style laws (single-valued multiplication,
composability exactly on matching units, unit/inverse laws, partial
associativity).  A validation failure raises AxiomViolation carrying a
stable law name and the first offending element in sorted order.

Equality of groupoids is structural and ignores the display name.
"""

from __future__ import annotations

from functools import cached_property

from .errors import AxiomViolation, PreconditionFailed, UnknownElement
from .relation import (
    FinRel,
    ONE,
    Universe,
    compose,
    first_difference as _first_difference,
    flip,
    identity,
    pair_name,
    product,
    product_universe,
    unitor_left,
    unitor_right,
)


class Groupoid:
    def __init__(self, name, elements, units, inverse, table):
        if not isinstance(elements, Universe):
            elements = Universe(str(name), elements)
        self.name = name
        self.elements = elements
        self.units = tuple(sorted(set(units)))
        self.inverse = dict(inverse)
        self.table = tuple(sorted(set(table)))
        self._unit_set = frozenset(self.units)
        self._check_structure()
        self._raw_mult = {}
        for c, a, b in self.table:
            self._raw_mult.setdefault((a, b), set()).add(c)
        self._check_relational_axioms()
        self._check_derived_laws()
        self._mult = {k: min(v) for k, v in self._raw_mult.items()}
        self._eL = {g: self._mult[(g, self.inverse[g])] for g in self.elements}
        self._eR = {g: self._mult[(self.inverse[g], g)] for g in self.elements}

    # -- validation -------------------------------------------------

    def _check_structure(self):
        for e in self.units:
            if e not in self.elements:
                raise UnknownElement(e, f"units of {self.name!r}")
        for g in self.elements:
            if g not in self.inverse:
                raise AxiomViolation("inverse-total", g)
        for g, h in self.inverse.items():
            if g not in self.elements:
                raise UnknownElement(g, f"inverse map of {self.name!r}")
            if h not in self.elements:
                raise UnknownElement(h, f"inverse map of {self.name!r}")
        for c, a, b in self.table:
            for x in (c, a, b):
                if x not in self.elements:
                    raise UnknownElement(x, f"table of {self.name!r}")

    @cached_property
    def m_rel(self) -> FinRel:
        u = self.elements
        return FinRel(
            product_universe(u, u),
            u,
            ((c, pair_name(a, b)) for c, a, b in self.table),
        )

    @cached_property
    def s_rel(self) -> FinRel:
        u = self.elements
        return FinRel(u, u, ((self.inverse[g], g) for g in u))

    @cached_property
    def e_rel(self) -> FinRel:
        return FinRel(ONE, self.elements, ((e, "1") for e in self.units))

    def _check_relational_axioms(self):
        u = self.elements
        m, s, e = self.m_rel, self.s_rel, self.e_rel
        idu = identity(u)

        lhs = compose(m, product(m, idu))
        rhs = compose(m, product(idu, m))
        if lhs != rhs:
            raise AxiomViolation("m(mxid)=m(idxm)", _first_difference(lhs, rhs))

        left_unit = compose(m, product(e, idu))
        if left_unit != unitor_left(u):
            raise AxiomViolation(
                "m(exid)=id", _first_difference(left_unit, unitor_left(u))
            )
        right_unit = compose(m, product(idu, e))
        if right_unit != unitor_right(u):
            raise AxiomViolation(
                "m(idxe)=id", _first_difference(right_unit, unitor_right(u))
            )

        ss = compose(s, s)
        if ss != idu:
            raise AxiomViolation("s2=id", _first_difference(ss, idu))

        sm = compose(s, m)
        msxs = compose(m, compose(flip(u, u), product(s, s)))
        if sm != msxs:
            raise AxiomViolation("sm=m.flip(sxs)", _first_difference(sm, msxs))

        for g in u:
            outs = self._raw_mult.get((self.inverse[g], g), set())
            if not outs:
                raise AxiomViolation("m(s(g),g)-in-units", g, "product undefined")
            stray = sorted(outs - self._unit_set)
            if stray:
                raise AxiomViolation(
                    "m(s(g),g)-in-units", g, f"{stray[0]!r} is not a unit"
                )

    def _check_derived_laws(self):
        # everything below follows from the axioms; failures here flag
        # inconsistent input that slipped through or an internal bug
        for key in sorted(self._raw_mult):
            if len(self._raw_mult[key]) > 1:
                raise AxiomViolation("derived:m-single-valued", key)
        mult = {k: min(v) for k, v in self._raw_mult.items()}
        inv = self.inverse
        eL = {g: mult[(g, inv[g])] for g in self.elements}
        eR = {g: mult[(inv[g], g)] for g in self.elements}

        defined = set(mult)
        matching = {
            (a, b)
            for a in self.elements
            for b in self.elements
            if eR[a] == eL[b]
        }
        if defined != matching:
            off = min(defined ^ matching)
            raise AxiomViolation("derived:composable-iff-units-match", off)

        for g in self.elements:
            if mult[(eL[g], g)] != g:
                raise AxiomViolation("derived:left-unit-law", g)
            if mult[(g, eR[g])] != g:
                raise AxiomViolation("derived:right-unit-law", g)
            if mult[(inv[g], g)] != eR[g]:
                raise AxiomViolation("derived:left-inverse-law", g)
            if mult[(g, inv[g])] != eL[g]:
                raise AxiomViolation("derived:right-inverse-law", g)
        for e in self.units:
            if inv[e] != e or eL[e] != e or eR[e] != e:
                raise AxiomViolation("derived:units-fixed", e)
        for c, a, b in self.table:
            if mult[(inv[b], inv[a])] != inv[c]:
                raise AxiomViolation("derived:inverse-antihomomorphism", (a, b))
            if eL[c] != eL[a] or eR[c] != eR[b]:
                raise AxiomViolation("derived:product-units", (a, b))
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    ab = mult.get((a, b))
                    bc = mult.get((b, c))
                    left = mult.get((ab, c)) if ab is not None else None
                    right = mult.get((a, bc)) if bc is not None else None
                    if left != right:
                        raise AxiomViolation("derived:associativity", (a, b, c))

    # -- basic queries ----------------------------------------------

    def mult(self, a, b):
        """Product of a and b, or None when not composable."""
        return self._mult.get((a, b))

    def inv(self, g):
        if g not in self.elements:
            raise UnknownElement(g, self.name)
        return self.inverse[g]

    def e_left(self, g):
        if g not in self.elements:
            raise UnknownElement(g, self.name)
        return self._eL[g]

    def e_right(self, g):
        if g not in self.elements:
            raise UnknownElement(g, self.name)
        return self._eR[g]

    def composable(self) -> tuple:
        """All composable pairs, sorted."""
        return tuple(sorted(self._mult))

    @cached_property
    def _orbit_of(self) -> dict:
        seen = {}
        for block in self.orbits():
            for e in block:
                seen[e] = block
        return seen

    def orbits(self) -> tuple:
        """Partition of the units into orbits."""
        neighbours: dict = {e: set() for e in self.units}
        for g in self.elements:
            neighbours[self._eL[g]].add(self._eR[g])
            neighbours[self._eR[g]].add(self._eL[g])
        remaining = set(self.units)
        blocks = []
        while remaining:
            start = min(remaining)
            block, frontier = {start}, [start]
            while frontier:
                e = frontier.pop()
                for f in neighbours[e]:
                    if f not in block:
                        block.add(f)
                        frontier.append(f)
            remaining -= block
            blocks.append(tuple(sorted(block)))
        return tuple(sorted(blocks))

    def isotropy(self, e) -> "SubgroupoidRef":
        """The group of elements with both units equal to e."""
        if e not in self._unit_set:
            raise UnknownElement(e, f"units of {self.name!r}")
        members = {g for g in self.elements if self._eL[g] == e and self._eR[g] == e}
        return SubgroupoidRef(self, members)

    def isotropy_bundle(self) -> "SubgroupoidRef":
        members = {g for g in self.elements if self._eL[g] == self._eR[g]}
        return SubgroupoidRef(self, members)

    def transitive_components(self) -> tuple:
        out = []
        for block in self.orbits():
            blockset = set(block)
            members = {g for g in self.elements if self._eR[g] in blockset}
            out.append(SubgroupoidRef(self, members))
        return tuple(out)

    def units_universe(self) -> Universe:
        return Universe(f"{self.elements.name}.units", self.units)

    # -- constructions ----------------------------------------------

    def restrict(self, unit_subset) -> "Groupoid":
        """Full subgroupoid over a subset of the units."""
        fs = set(unit_subset)
        stray = sorted(fs - self._unit_set)
        if stray:
            raise PreconditionFailed(
                f"restrict: {stray[0]!r} is not a unit of {self.name!r}"
            )
        members = {
            g for g in self.elements if self._eL[g] in fs and self._eR[g] in fs
        }
        name = self.name
        if fs != self._unit_set:
            name = f"{self.name}|{'+'.join(sorted(fs))}"
        return Groupoid(
            name,
            Universe(self.elements.name, members),
            sorted(fs),
            {g: self.inverse[g] for g in members},
            [t for t in self.table if t[1] in members and t[2] in members],
        )

    def same_structure(self, other: "Groupoid") -> bool:
        """Equality of element names, units, inverse, and table.

        Ignores display and universe names, so groupoids read back from
        documents compare equal to freshly built ones.
        """
        return (
            set(self.elements) == set(other.elements)
            and self._unit_set == set(other.units)
            and self.inverse == other.inverse
            and set(self.table) == set(other.table)
        )

    def is_subgroupoid(self, members) -> bool:
        ms = set(members)
        if not ms <= set(self.elements):
            return False
        for g in ms:
            if self.inverse[g] not in ms:
                return False
        for a in ms:
            for b in ms:
                c = self._mult.get((a, b))
                if c is not None and c not in ms:
                    return False
        return True

    def is_wide(self, members) -> bool:
        return self.is_subgroupoid(members) and self._unit_set <= set(members)

    def orbit_relation(self) -> "Groupoid":
        """The orbit equivalence relation as a groupoid over the units."""
        from .builders import equivalence_groupoid

        return equivalence_groupoid(self.units_universe(), self.orbits())

    def decompose_transitive(self, base_unit=None):
        """Present a transitive groupoid as units x isotropy x units.

        Returns (units universe, isotropy group table, phi) where phi
        maps each product-form element name "x|g|y" to s(p(x)) g p(y)
        for the sorted-least section p of e_right with p(base) = base.
        """
        from .builders import group_table_of, product_form

        if len(self.orbits()) != 1:
            raise PreconditionFailed(f"{self.name!r} is not transitive")
        e0 = min(self.units) if base_unit is None else base_unit
        if e0 not in self._unit_set:
            raise UnknownElement(e0, f"units of {self.name!r}")
        section = {}
        for y in self.units:
            if y == e0:
                section[y] = e0
                continue
            section[y] = min(
                g for g in self.elements if self._eL[g] == e0 and self._eR[g] == y
            )
        g0 = group_table_of(self, self.isotropy(e0).members, f"{self.name}@{e0}")
        base = self.units_universe()
        form = product_form(base, g0)
        phi = {}
        for x in self.units:
            for g in g0.elements:
                for y in self.units:
                    value = self.mult(
                        self.mult(self.inverse[section[x]], g), section[y]
                    )
                    phi[f"{x}|{g}|{y}"] = value
        values = list(phi.values())
        if sorted(values) != list(self.elements.elements):
            raise AxiomViolation("derived:decomposition-bijective", e0)
        for a in form.elements:
            if phi[form.inv(a)] != self.inverse[phi[a]]:
                raise AxiomViolation("derived:decomposition-inverse", a)
            for b in form.elements:
                c = form.mult(a, b)
                image = self.mult(phi[a], phi[b])
                if (c is None) != (image is None):
                    raise AxiomViolation("derived:decomposition-domain", (a, b))
                if c is not None and phi[c] != image:
                    raise AxiomViolation("derived:decomposition-product", (a, b))
        for e in form.units:
            if phi[e] not in self._unit_set:
                raise AxiomViolation("derived:decomposition-units", e)
        return base, g0, phi

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Groupoid)
            and self.elements == other.elements
            and self.units == other.units
            and self.inverse == other.inverse
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash(
            (self.elements, self.units, tuple(sorted(self.inverse.items())), self.table)
        )

    def __repr__(self) -> str:
        return (
            f"Groupoid({self.name!r}, {len(self.elements)} elements, "
            f"{len(self.units)} units)"
        )


def validate_groupoid(name, elements, units, inverse, table) -> Groupoid:
    """Build a groupoid, raising AxiomViolation on the first bad law."""
    return Groupoid(name, elements, units, inverse, table)


class SubgroupoidRef(object):
    """A subset of a groupoid closed under inverse and multiplication."""

    def __init__(self, parent: Groupoid, members):
        ms = frozenset(members)
        for g in sorted(ms):
            if g not in parent.elements:
                raise UnknownElement(g, f"elements of {parent.name!r}")
            if parent.inverse[g] not in ms:
                raise PreconditionFailed(
                    f"not closed under inverse at {g!r} in {parent.name!r}"
                )
        for a in sorted(ms):
            for b in sorted(ms):
                c = parent.mult(a, b)
                if c is not None and c not in ms:
                    raise PreconditionFailed(
                        f"not closed under multiplication at ({a!r}, {b!r})"
                    )
        self.parent = parent
        self.members = ms

    @property
    def units(self) -> tuple:
        return tuple(e for e in self.parent.units if e in self.members)

    @property
    def is_wide(self) -> bool:
        return set(self.parent.units) <= self.members

    def as_groupoid(self, name=None) -> Groupoid:
        parent = self.parent
        label = name or f"{parent.name}[{'+'.join(sorted(self.members))}]"
        return Groupoid(
            label,
            Universe(parent.elements.name, self.members),
            self.units,
            {g: parent.inverse[g] for g in self.members},
            [t for t in parent.table if t[0] in self.members and t[1] in self.members],
        )

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupoidRef)
            and self.parent == other.parent
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.parent, self.members))

    def __repr__(self):
        return f"SubgroupoidRef({self.parent.name!r}, {len(self.members)} members)"


def disjoint_union(g1: Groupoid, g2: Groupoid) -> Groupoid:
    """Disjoint union; elements are tagged "L:x" and "R:y"."""
    left = {g: f"L:{g}" for g in g1.elements}
    right = {g: f"R:{g}" for g in g2.elements}
    elements = Universe(
        f"{g1.elements.name}+{g2.elements.name}",
        list(left.values()) + list(right.values()),
    )
    units = [left[e] for e in g1.units] + [right[e] for e in g2.units]
    inverse = {left[g]: left[h] for g, h in g1.inverse.items()}
    inverse.update({right[g]: right[h] for g, h in g2.inverse.items()})
    table = [(left[c], left[a], left[b]) for c, a, b in g1.table]
    table += [(right[c], right[a], right[b]) for c, a, b in g2.table]
    return Groupoid(f"{g1.name}+{g2.name}", elements, units, inverse, table)


def cartesian_product(g1: Groupoid, g2: Groupoid) -> Groupoid:
    """Product groupoid; multiplication is computed relationally."""
    u1, u2 = g1.elements, g2.elements
    pu = product_universe(u1, u2)
    shuffle = product(product(identity(u1), flip(u2, u1)), identity(u2))
    m = compose(product(g1.m_rel, g2.m_rel), shuffle)
    # decode pair inputs by matching against known element pairs
    triples = []
    for x in pu:
        for y in pu:
            for c in m.outputs(pair_name(x, y)):
                triples.append((c, x, y))
    units = [pair_name(e1, e2) for e1 in g1.units for e2 in g2.units]
    inverse = {
        pair_name(a, b): pair_name(g1.inverse[a], g2.inverse[b])
        for a in u1
        for b in u2
    }
    return Groupoid(f"{g1.name}x{g2.name}", pu, units, inverse, triples)
