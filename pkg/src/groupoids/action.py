"""Groupoid actions as relations, with the constructions they carry.

An action of a groupoid on a set X is a relation from Γ×X to X
subject to two exact equalities, mirroring how the groupoid itself is
axiomatized.  Validation recovers the classical picture: a base map
rho on X, a domain {(γ,x): e_R(γ)=rho(x)}, and a single-valued
partial map.  On top of that the module builds action groupoids,
coset spaces and quotient groupoids, homogeneous-space identification
for transitive groupoids, induced actions along a subgroupoid, and
the normal form of transitive actions.
"""

from __future__ import annotations

from .errors import (
    AxiomViolation,
    PreconditionFailed,
    UniverseMismatch,
    UnknownElement,
)
from .relation import (
    FinRel,
    Universe,
    compose,
    first_difference,
    identity,
    mapping_rel,
    pair_name,
    product,
    product_universe,
    unitor_left,
)
from .groupoid import Groupoid, SubgroupoidRef
from .builders import GroupTable, check_group_action, pair_groupoid, product_form
from .morphism import Morphism, _as_member_set, fiber_map_right, to_orbit_pair


class Action:
    """A validated relational action, stored as triples (y, g, x)."""

    def __init__(self, groupoid: Groupoid, carrier: Universe, triples):
        self.groupoid = groupoid
        self.carrier = carrier
        self.triples = tuple(sorted(set(triples)))
        source = product_universe(groupoid.elements, carrier)
        self.rel = FinRel(
            source, carrier, ((y, pair_name(g, x)) for y, g, x in self.triples)
        )
        self._check_axioms()
        self._derive()

    def _check_axioms(self):
        g, x = self.groupoid, self.carrier
        lhs = compose(self.rel, product(g.m_rel, identity(x)))
        rhs = compose(self.rel, product(identity(g.elements), self.rel))
        if lhs != rhs:
            raise AxiomViolation(
                "phi(mxid)=phi(idxphi)", first_difference(lhs, rhs)
            )
        lhs = compose(self.rel, product(g.e_rel, identity(x)))
        rhs = unitor_left(x)
        if lhs != rhs:
            raise AxiomViolation("phi(exid)=id", first_difference(lhs, rhs))

    def _derive(self):
        g, x = self.groupoid, self.carrier
        triple_set = set(self.triples)
        rho = {}
        for point in x:
            hits = [e for e in g.units if (point, e, point) in triple_set]
            if len(hits) != 1:
                raise AxiomViolation("derived:action-base-map", point)
            rho[point] = hits[0]
        self.base_map = rho

        seen = {(gamma, point) for _, gamma, point in self.triples}
        expected = {
            (gamma, point)
            for gamma in g.elements
            for point in x
            if g.e_right(gamma) == rho[point]
        }
        if seen != expected:
            raise AxiomViolation("derived:action-domain", min(seen ^ expected))
        self.domain = frozenset(seen)

        table = {}
        for y, gamma, point in self.triples:
            if rho[y] != g.e_left(gamma):
                raise AxiomViolation("derived:action-left-unit", (y, gamma, point))
            if (point, g.inverse[gamma], y) not in triple_set:
                raise AxiomViolation("derived:action-symmetry", (y, gamma, point))
            if (gamma, point) in table:
                raise AxiomViolation(
                    "derived:action-single-valued", (gamma, point)
                )
            table[(gamma, point)] = y
        self._table = table

    def apply(self, gamma, point):
        """The moved point, or None outside the domain."""
        return self._table.get((gamma, point))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Action)
            and self.groupoid == other.groupoid
            and self.carrier == other.carrier
            and self.triples == other.triples
        )

    def __hash__(self) -> int:
        return hash((self.groupoid, self.carrier, self.triples))

    def __repr__(self) -> str:
        return (
            f"Action({self.groupoid.name!r} on {self.carrier.name!r}, "
            f"{len(self.triples)} triples)"
        )


def validate_action(groupoid: Groupoid, carrier: Universe, triples) -> Action:
    """Build an action, raising AxiomViolation on the first bad law."""
    return Action(groupoid, carrier, triples)


class GammaSet:
    """A carrier together with a validated action on it."""

    def __init__(self, carrier: Universe, action: Action):
        if carrier != action.carrier:
            raise PreconditionFailed("carrier does not match the action")
        self.carrier = carrier
        self.action = action

    def __eq__(self, other) -> bool:
        return isinstance(other, GammaSet) and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    def __repr__(self) -> str:
        return f"GammaSet({self.action!r})"


def left_mult_action(groupoid: Groupoid) -> Action:
    """The groupoid acting on itself by left multiplication."""
    return Action(
        groupoid, groupoid.elements, ((c, a, b) for c, a, b in groupoid.table)
    )


def unit_action(groupoid: Groupoid) -> Action:
    """The action on units moving e_R(g) to e_L(g)."""
    carrier = groupoid.units_universe()
    triples = (
        (groupoid.e_left(g), g, groupoid.e_right(g)) for g in groupoid.elements
    )
    return Action(groupoid, carrier, triples)


def conjugation_action(groupoid: Groupoid) -> Action:
    """The action on the isotropy bundle by conjugation."""
    bundle = sorted(groupoid.isotropy_bundle().members)
    carrier = Universe(f"{groupoid.elements.name}.iso", bundle)
    triples = []
    for g in groupoid.elements:
        for k in bundle:
            if groupoid.e_right(g) == groupoid.e_left(k):
                moved = groupoid.mult(groupoid.mult(g, k), groupoid.inverse[g])
                triples.append((moved, g, k))
    return Action(groupoid, carrier, triples)


def classical_to_relational(groupoid: Groupoid, carrier: Universe, rho, act) -> Action:
    """Validate base map plus partial action and re-express as triples."""
    rho = dict(rho)
    act = dict(act)
    unit_set = set(groupoid.units)
    for x in carrier:
        if x not in rho:
            raise PreconditionFailed(f"base map undefined at {x!r}")
        if rho[x] not in unit_set:
            raise PreconditionFailed(f"base map value {rho[x]!r} is not a unit")
    expected = {
        (g, x)
        for g in groupoid.elements
        for x in carrier
        if groupoid.e_right(g) == rho[x]
    }
    if set(act) != expected:
        raise PreconditionFailed(
            f"action domain differs from the base-map fiber product at "
            f"{min(set(act) ^ expected)!r}"
        )
    for (g, x), y in act.items():
        if y not in carrier:
            raise UnknownElement(y, carrier.name)
    for x in carrier:
        if act[(rho[x], x)] != x:
            raise PreconditionFailed(f"unit law fails at {x!r}")
    for g1 in groupoid.elements:
        for (g2, x), y in act.items():
            lhs = act.get((g1, y))
            prod = groupoid.mult(g1, g2)
            rhs = act.get((prod, x)) if prod is not None else None
            if lhs != rhs:
                raise PreconditionFailed(
                    f"compatibility fails at ({g1!r}, {g2!r}, {x!r})"
                )
    return Action(groupoid, carrier, ((y, g, x) for (g, x), y in act.items()))


def as_mapping(action: Action):
    """The classical picture: base map and partial action map."""
    return dict(action.base_map), dict(action._table)


def action_to_pair_morphism(action: Action) -> Morphism:
    """The morphism into the pair groupoid over the carrier."""
    target = pair_groupoid(action.carrier)
    graph = [(pair_name(y, x), g) for y, g, x in action.triples]
    return Morphism(action.groupoid, target, graph)


def morphism_to_action(h: Morphism, carrier: Universe) -> Action:
    """Read a morphism into the pair groupoid back as an action."""
    if not h.target.same_structure(pair_groupoid(carrier)):
        raise PreconditionFailed(
            f"{h.target.name!r} is not the pair groupoid over {carrier.name!r}"
        )
    decode = {
        pair_name(x1, x2): (x1, x2) for x1 in carrier for x2 in carrier
    }
    triples = []
    for d, g in h.graph:
        x1, x2 = decode[d]
        triples.append((x1, g, x2))
    return Action(h.source, carrier, triples)


def right_commuting_to_morphism(action: Action, delta: Groupoid) -> Morphism:
    """Turn an action on a groupoid commuting with right multiplication
    into a morphism onto that groupoid."""
    if tuple(action.carrier) != tuple(delta.elements):
        raise UniverseMismatch(action.carrier, delta.elements, "carrier")
    if action.carrier != delta.elements:
        action = Action(action.groupoid, delta.elements, action.triples)
    lhs = compose(
        action.rel, product(identity(action.groupoid.elements), delta.m_rel)
    )
    rhs = compose(delta.m_rel, product(action.rel, identity(delta.elements)))
    if lhs != rhs:
        raise PreconditionFailed(
            "action does not commute with right multiplication"
        )
    unit_set = set(delta.units)
    graph = {
        (action.apply(g, f), g) for g, f in action.domain if f in unit_set
    }
    return Morphism(action.groupoid, delta, graph)


def pullback_action(h: Morphism, space: GammaSet) -> GammaSet:
    """Precompose an action with a morphism into its groupoid."""
    if space.action.groupoid != h.target:
        raise PreconditionFailed("the action does not belong to the target")
    carrier = space.carrier
    rel = compose(space.action.rel, product(h.rel, identity(carrier)))
    triples = []
    for g in h.source.elements:
        for x in carrier:
            for y in rel.outputs(pair_name(g, x)):
                triples.append((y, g, x))
    return GammaSet(carrier, Action(h.source, carrier, triples))


def is_equivariant(func, first: GammaSet, second: GammaSet) -> bool:
    """Whether a map of carriers intertwines two actions."""
    if first.action.groupoid != second.action.groupoid:
        raise PreconditionFailed("actions of different groupoids")
    f_rel = mapping_rel(first.carrier, second.carrier, dict(func))
    lhs = compose(f_rel, first.action.rel)
    rhs = compose(
        second.action.rel,
        product(identity(first.action.groupoid.elements), f_rel),
    )
    return lhs == rhs


def action_groupoid(action: Action) -> Groupoid:
    """The groupoid of moves (g, x) with multiplication over matching x."""
    g, rho = action.groupoid, action.base_map
    members = sorted(action.domain)
    elements = Universe(
        f"{g.elements.name}*{action.carrier.name}",
        tuple(pair_name(gamma, x) for gamma, x in members),
    )
    units = [pair_name(rho[x], x) for x in action.carrier]
    inverse = {
        pair_name(gamma, x): pair_name(g.inverse[gamma], action.apply(gamma, x))
        for gamma, x in members
    }
    table = []
    for gamma2, x in members:
        moved = action.apply(gamma2, x)
        for gamma1 in g.elements:
            prod = g.mult(gamma1, gamma2)
            if prod is not None:
                table.append(
                    (
                        pair_name(prod, x),
                        pair_name(gamma1, moved),
                        pair_name(gamma2, x),
                    )
                )
    return Groupoid(
        f"Act({g.name},{action.carrier.name})", elements, units, inverse, table
    )


def action_groupoid_functor(h: Morphism):
    """The unit action of a morphism plus its fiber-map functor."""
    target_units = h.target.units_universe()
    composite = Morphism(
        h.source,
        pair_groupoid(target_units),
        compose(to_orbit_pair(h.target).rel, h.rel).graph,
    )
    phi = morphism_to_action(composite, target_units)
    functor = {}
    for f in h.target.units:
        fiber = fiber_map_right(h, f)
        for gamma, delta in fiber.items():
            functor[(gamma, f)] = delta
    return phi, functor


def functor_to_zm(phi: Action, functor, target: Groupoid) -> Morphism:
    """Rebuild the morphism from a functor on the action groupoid."""
    functor = dict(functor)
    if set(functor) != set(phi.domain):
        raise PreconditionFailed(
            "functor domain differs from the action groupoid"
        )
    gamma0 = phi.groupoid
    unit_set = set(gamma0.units)
    target_units = set(target.units)
    for (gamma, f), delta in functor.items():
        if delta not in target.elements:
            raise UnknownElement(delta, target.name)
        if gamma in unit_set and delta != f:
            raise PreconditionFailed(f"functor moves the unit over {f!r}")
    for gamma, f in phi.domain:
        moved = phi.apply(gamma, f)
        image = functor[(gamma, f)]
        if functor[(gamma0.inverse[gamma], moved)] != target.inverse[image]:
            raise PreconditionFailed(f"functor breaks inverses at {(gamma, f)!r}")
        for gamma1 in gamma0.elements:
            prod = gamma0.mult(gamma1, gamma)
            if prod is None:
                continue
            left = functor[(gamma1, moved)]
            if target.mult(left, image) != functor[(prod, f)]:
                raise PreconditionFailed(
                    f"functor breaks products at {(gamma1, gamma, f)!r}"
                )
    graph = {(delta, gamma) for (gamma, _), delta in functor.items()}
    return Morphism(gamma0, target, graph)


def _class_partition(items, related):
    """Partition under an equivalence given as a pairwise predicate."""
    parent = {item: item for item in items}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    ordered = sorted(items)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if related(a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    blocks = {}
    for item in ordered:
        blocks.setdefault(find(item), []).append(item)
    return [tuple(block) for _, block in sorted(blocks.items())]


class CosetSpace:
    """Classes of gamma1 ~ gamma2 iff s(gamma1)gamma2 lies in G."""

    def __init__(self, groupoid, members, classes, projection, action):
        self.groupoid = groupoid
        self.members = members
        self.classes = classes
        self.projection = projection
        self.action = action

    @property
    def carrier(self) -> Universe:
        return self.action.carrier

    def __repr__(self) -> str:
        return f"CosetSpace({self.groupoid.name!r}, {len(self.classes)} classes)"


def coset_space(groupoid: Groupoid, part) -> CosetSpace:
    """Quotient of a groupoid by a wide subgroupoid, with its action."""
    members = _as_member_set(groupoid, part)
    ref = SubgroupoidRef(groupoid, members)
    if not ref.is_wide:
        raise PreconditionFailed("coset space needs a wide subgroupoid")

    def related(a, b):
        prod = groupoid.mult(groupoid.inverse[a], b)
        return prod is not None and prod in members

    classes = _class_partition(groupoid.elements, related)
    projection = {}
    for block in classes:
        label = f"[{block[0]}]"
        for gamma in block:
            projection[gamma] = label
    carrier = Universe(
        f"{groupoid.elements.name}/~", tuple(projection[b[0]] for b in classes)
    )
    triples = {
        (projection[c], a, projection[b]) for c, a, b in groupoid.table
    }
    action = Action(groupoid, carrier, triples)
    return CosetSpace(groupoid, members, tuple(classes), projection, action)


def quotient_groupoid(groupoid: Groupoid, part):
    """Quotient by a normal-per-unit wide subgroupoid of the isotropy
    bundle, together with the projection morphism."""
    members = _as_member_set(groupoid, part)
    ref = SubgroupoidRef(groupoid, members)
    if not ref.is_wide:
        raise PreconditionFailed("quotient needs a wide subgroupoid")
    for g in members:
        if groupoid.e_left(g) != groupoid.e_right(g):
            raise PreconditionFailed(
                f"{g!r} is outside the isotropy bundle"
            )
    for e in groupoid.units:
        fiber = groupoid.isotropy(e).members
        sub = fiber & members
        for g in fiber:
            for n in sub:
                conj = groupoid.mult(groupoid.mult(g, n), groupoid.inverse[g])
                if conj not in sub:
                    raise PreconditionFailed(
                        f"subgroup is not normal at unit {e!r}"
                    )

    space = coset_space(groupoid, members)
    projection = space.projection
    classes = space.classes
    table = {
        (projection[c], projection[a], projection[b])
        for c, a, b in groupoid.table
    }
    inverse = {}
    for block in classes:
        values = {projection[groupoid.inverse[gamma]] for gamma in block}
        if len(values) != 1:
            raise AxiomViolation("derived:quotient-inverse", block[0])
        inverse[projection[block[0]]] = values.pop()
    units = sorted({projection[e] for e in groupoid.units})
    elements = Universe(
        f"{groupoid.elements.name}/G",
        tuple(projection[block[0]] for block in classes),
    )
    quotient = Groupoid(
        f"{groupoid.name}/G", elements, units, inverse, table
    )
    pi = Morphism(
        groupoid, quotient, ((projection[g], g) for g in groupoid.elements)
    )
    from .morphism import is_surjective

    if not is_surjective(pi):
        raise AxiomViolation("derived:quotient-projection", None)
    return quotient, pi


def homogeneous_identification(action: Action, section):
    """Express a saturating transitive action as a coset-space action.

    Takes the section p of the base map explicitly and fails loudly
    when it does not saturate the carrier.
    """
    groupoid = action.groupoid
    section = dict(section)
    if len(groupoid.orbits()) != 1:
        raise PreconditionFailed("groupoid is not transitive")
    for e in groupoid.units:
        if e not in section:
            raise PreconditionFailed(f"section undefined at {e!r}")
        if section[e] not in action.carrier:
            raise UnknownElement(section[e], action.carrier.name)
        if action.base_map[section[e]] != e:
            raise PreconditionFailed(f"not a section of the base map at {e!r}")
    reached = {
        action.apply(gamma, section[groupoid.e_right(gamma)])
        for gamma in groupoid.elements
    }
    if reached != set(action.carrier):
        raise PreconditionFailed(
            f"section does not saturate the carrier; {min(set(action.carrier) - reached)!r} unreached"
        )

    triple_set = set(action.triples)
    wide = {
        gamma
        for gamma in groupoid.elements
        if (
            section[groupoid.e_left(gamma)],
            gamma,
            section[groupoid.e_right(gamma)],
        )
        in triple_set
    }
    ref = SubgroupoidRef(groupoid, wide)
    space = coset_space(groupoid, wide)
    psi = {}
    for x in action.carrier:
        markers = [
            gamma
            for gamma in groupoid.elements
            if (x, gamma, section[groupoid.e_right(gamma)]) in triple_set
        ]
        psi[x] = space.projection[min(markers)]
    if not len(set(psi.values())) == len(action.carrier) == len(space.classes):
        raise AxiomViolation("derived:homogeneous-bijective", None)
    psi_rel = mapping_rel(action.carrier, space.carrier, psi)
    lhs = compose(
        space.action.rel, product(identity(groupoid.elements), psi_rel)
    )
    rhs = compose(psi_rel, action.rel)
    if lhs != rhs:
        raise AxiomViolation(
            "derived:homogeneous-intertwine", first_difference(lhs, rhs)
        )
    return ref, psi


def induced_action(groupoid: Groupoid, part, action: Action):
    """Extend an action of a subgroupoid to the whole groupoid.

    Returns the class universe and the action on it.
    """
    members = _as_member_set(groupoid, part)
    ref = SubgroupoidRef(groupoid, members)
    delta = ref.as_groupoid()
    if not action.groupoid.same_structure(delta):
        raise PreconditionFailed("the action does not live on the subgroupoid")
    base_units = set(ref.units)
    if set(action.base_map.values()) != base_units:
        raise PreconditionFailed("base map is not onto the subgroupoid units")

    pre_carrier = sorted(
        (gamma, x)
        for gamma in groupoid.elements
        for x in action.carrier
        if groupoid.e_right(gamma) == action.base_map[x]
    )
    triple_set = set(action.triples)

    def related(a, b):
        gamma, x = a
        gamma1, x1 = b
        for delta_el in members:
            if groupoid.mult(gamma1, groupoid.inverse[delta_el]) == gamma and (
                (x, delta_el, x1) in triple_set
            ):
                return True
        return False

    classes = _class_partition(pre_carrier, related)
    projection = {}
    for block in classes:
        label = f"[{pair_name(*block[0])}]"
        for item in block:
            projection[item] = label
    carrier = Universe(
        f"{groupoid.elements.name}*{action.carrier.name}.induced",
        tuple(projection[b[0]] for b in classes),
    )
    triples = set()
    for gamma, x in pre_carrier:
        for gamma1 in groupoid.elements:
            prod = groupoid.mult(gamma1, gamma)
            if prod is not None:
                triples.add(
                    (projection[(prod, x)], gamma1, projection[(gamma, x)])
                )
    return carrier, Action(groupoid, carrier, triples)


def product_form_action(space: Universe, table: GroupTable, carrier: Universe, act) -> Action:
    """The standard action of a product-form groupoid built from a
    group action on a fiber."""
    act = check_group_action(table, carrier, act)
    groupoid = product_form(space, table)
    triples = []
    for e1 in space:
        for e2 in space:
            for g in table.elements:
                for z in carrier:
                    triples.append(
                        (
                            pair_name(e1, act[(g, z)]),
                            f"{e1}|{g}|{e2}",
                            pair_name(e2, z),
                        )
                    )
    product_carrier = product_universe(space, carrier)
    return Action(groupoid, product_carrier, triples)


def classify_transitive_action(space: Universe, table: GroupTable, action: Action, z0=None):
    """Normal form of an action of a product-form transitive groupoid:
    a fiber universe, a group action on it, and the matching bijection."""
    if len(action.carrier) == 0:
        raise PreconditionFailed("empty carrier")
    if not action.groupoid.same_structure(product_form(space, table)):
        raise PreconditionFailed("action groupoid is not the given product form")
    groupoid = action.groupoid
    if z0 is None:
        z0 = min(action.carrier.elements)
    elif z0 not in action.carrier:
        raise UnknownElement(z0, action.carrier.name)
    unit_of = {e: f"{e}|{table.unit}|{e}" for e in space}
    base_of = {unit_of[e]: e for e in space}
    e0 = base_of[action.base_map[z0]]
    fiber = Universe(
        f"{action.carrier.name}@{e0}",
        tuple(
            sorted(
                z for z in action.carrier if action.base_map[z] == unit_of[e0]
            )
        ),
    )
    fiber_act = {
        (g, z): action.apply(f"{e0}|{g}|{e0}", z)
        for g in table.elements
        for z in fiber
    }
    fiber_act = check_group_action(table, fiber, fiber_act)

    psi = {}
    triple_set = set(action.triples)
    for e in space:
        for z in fiber:
            hits = [
                y
                for y in action.carrier
                if (y, f"{e}|{table.unit}|{e0}", z) in triple_set
            ]
            if len(hits) != 1:
                raise AxiomViolation("derived:classification-bijective", (e, z))
            psi[pair_name(e, z)] = hits[0]
    if not len(set(psi.values())) == len(psi) == len(action.carrier):
        raise AxiomViolation("derived:classification-bijective", None)

    model = product_form_action(space, table, fiber, fiber_act)
    model = Action(groupoid, model.carrier, model.triples)
    psi_rel = mapping_rel(model.carrier, action.carrier, psi)
    lhs = compose(action.rel, product(identity(groupoid.elements), psi_rel))
    rhs = compose(psi_rel, model.rel)
    if lhs != rhs:
        raise AxiomViolation(
            "derived:classification-intertwine", first_difference(lhs, rhs)
        )
    return fiber, fiber_act, psi
