"""Morphisms of groupoids in the relational sense.

A morphism h from Gamma to Delta is a relation whose graph lives in
Delta x Gamma and which satisfies

    h m = m' (h x h),   h s = s' h,   h e = e'

as exact relation equalities.  Validation computes the derived data
every theorem downstream consumes: the base map on units (here rho,
mapping units of the target to units of the source), the domain (a
union of transitive components), the image (a wide subgroupoid of the
target), the per-unit fiber maps, and the kernel.

Monomorphisms are decided by the kernel criterion; failed candidates
come with explicit cancellation witnesses built from the classical
proof shapes.  Epimorphisms have no known finite decision procedure,
so the API offers surjectivity, a constructive refutation for proper
images (separating_pair) and a bounded witness search.
"""

from __future__ import annotations

from .errors import (
    AxiomViolation,
    IsMonomorphism,
    PreconditionFailed,
    UniverseMismatch,
)
from .groupoid import Groupoid, SubgroupoidRef
from .builders import (
    check_group_action,
    group_groupoid,
    group_table_of,
    pair_groupoid,
    quotient_group_table,
    set_groupoid,
)
from .relation import (
    FinRel,
    Universe,
    compose,
    first_difference,
    pair_name,
    product,
)


class Morphism:
    def __init__(self, source: Groupoid, target: Groupoid, graph):
        self.source = source
        self.target = target
        self.rel = FinRel(source.elements, target.elements, graph)
        self._check_axioms()
        self._derive()

    @property
    def graph(self) -> tuple:
        return self.rel.graph

    def outputs(self, gamma) -> tuple:
        return self.rel.outputs(gamma)

    def _check_axioms(self):
        src, tgt, h = self.source, self.target, self.rel
        lhs = compose(h, src.m_rel)
        rhs = compose(tgt.m_rel, product(h, h))
        if lhs != rhs:
            raise AxiomViolation("hm=m'(hxh)", first_difference(lhs, rhs))
        lhs = compose(h, src.s_rel)
        rhs = compose(tgt.s_rel, h)
        if lhs != rhs:
            raise AxiomViolation("hs=s'h", first_difference(lhs, rhs))
        lhs = compose(h, src.e_rel)
        if lhs != tgt.e_rel:
            raise AxiomViolation("he=e'", first_difference(lhs, tgt.e_rel))

    def _derive(self):
        src, tgt = self.source, self.target
        src_units = set(src.units)
        tgt_units = set(tgt.units)
        rho = {}
        for f in tgt.units:
            cands = [e for d, e in self.rel.graph if d == f and e in src_units]
            if len(cands) != 1:
                raise AxiomViolation("derived:base-map", f)
            rho[f] = cands[0]
        self.base_map = rho

        dom = {e for _, e in self.rel.graph}
        im_rho = set(rho.values())
        expected = {g for g in src.elements if src.e_right(g) in im_rho}
        if dom != expected:
            raise AxiomViolation("derived:domain-components", min(dom ^ expected))
        self.domain_elements = frozenset(dom)

        image = {d for d, _ in self.rel.graph}
        if not tgt_units <= image:
            raise AxiomViolation(
                "derived:image-wide", min(tgt_units - image)
            )
        for d in image:
            if tgt.inverse[d] not in image:
                raise AxiomViolation("derived:image-wide", d)
        for d1 in image:
            for d2 in image:
                c = tgt.mult(d1, d2)
                if c is not None and c not in image:
                    raise AxiomViolation("derived:image-wide", (d1, d2))
        self.image_elements = frozenset(image)

        for f in tgt.units:
            e = rho[f]
            for g in src.elements:
                if src.e_right(g) == e:
                    hits = [
                        d for d in self.rel.outputs(g) if tgt.e_right(d) == f
                    ]
                    if len(hits) != 1:
                        raise AxiomViolation("derived:fiber-right", (f, g))
                if src.e_left(g) == e:
                    hits = [
                        d for d in self.rel.outputs(g) if tgt.e_left(d) == f
                    ]
                    if len(hits) != 1:
                        raise AxiomViolation("derived:fiber-left", (f, g))

        self.kernel_members = frozenset(
            g
            for g in dom
            if all(d in tgt_units for d in self.rel.outputs(g))
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.rel == other.rel
        )

    def __hash__(self) -> int:
        return hash((self.rel.source, self.rel.target, self.rel.graph))

    def __repr__(self) -> str:
        return (
            f"Morphism({self.source.name!r} -> {self.target.name!r}, "
            f"{len(self.rel.graph)} pairs)"
        )


def validate_morphism(source: Groupoid, target: Groupoid, graph) -> Morphism:
    """Build a morphism, raising AxiomViolation on the first bad law."""
    return Morphism(source, target, graph)


class Kernel:
    """Kernel of a morphism, with its subgroupoid laws re-checked."""

    def __init__(self, morphism: Morphism):
        self.morphism = morphism
        self.members = morphism.kernel_members
        src = morphism.source
        units = set(src.units)
        for e in morphism.domain_elements & units:
            if e not in self.members:
                raise AxiomViolation("derived:kernel-units", e)
        for g in self.members:
            if src.e_left(g) != src.e_right(g):
                raise AxiomViolation("derived:kernel-isotropy", g)
            if src.inverse[g] not in self.members:
                raise AxiomViolation("derived:kernel-inverse", g)
        for g1 in self.members:
            for g2 in self.members:
                c = src.mult(g1, g2)
                if c is not None and c not in self.members:
                    raise AxiomViolation("derived:kernel-product", (g1, g2))
            for g2 in src.elements:
                if src.mult(g2, g1) is not None:
                    conj = src.mult(src.mult(g2, g1), src.inverse[g2])
                    if conj not in self.members:
                        raise AxiomViolation("derived:kernel-conjugation", (g2, g1))

    def __repr__(self) -> str:
        return f"Kernel({len(self.members)} members)"


class CancellationWitness:
    """A probe groupoid and two distinct morphisms proving non-cancellation.

    side "mono": w1, w2 map the probe into the analyzed morphism's
    source and the composites h.w1 = h.w2 agree.  side "epi": w1, w2
    map the target into the probe and w1.h = w2.h agree.
    """

    def __init__(self, probe: Groupoid, w1: Morphism, w2: Morphism, side: str):
        if side not in ("mono", "epi"):
            raise PreconditionFailed(f"unknown witness side {side!r}")
        if w1 == w2:
            raise PreconditionFailed("witness morphisms must differ")
        self.probe = probe
        self.w1 = w1
        self.w2 = w2
        self.side = side

    def verify(self, h: Morphism) -> bool:
        if self.side == "mono":
            return compose_morphisms(h, self.w1) == compose_morphisms(h, self.w2)
        return compose_morphisms(self.w1, h) == compose_morphisms(self.w2, h)

    def __repr__(self) -> str:
        return f"CancellationWitness({self.side}, probe={self.probe.name!r})"


def compose_morphisms(k: Morphism, h: Morphism) -> Morphism:
    """The composite k after h; revalidated on construction."""
    if h.target != k.source:
        raise UniverseMismatch(
            h.target.elements, k.source.elements, "compose_morphisms"
        )
    return Morphism(h.source, k.target, compose(k.rel, h.rel).graph)


def identity_morphism(groupoid: Groupoid) -> Morphism:
    return Morphism(groupoid, groupoid, ((g, g) for g in groupoid.elements))


def base_map(h: Morphism) -> dict:
    """The map from target units to source units determined by h."""
    return dict(h.base_map)


def fiber_map_right(h: Morphism, f) -> dict:
    """Right-fiber map at the target unit f."""
    if f not in set(h.target.units):
        raise PreconditionFailed(f"{f!r} is not a unit of {h.target.name!r}")
    e = h.base_map[f]
    out = {}
    for g in h.source.elements:
        if h.source.e_right(g) == e:
            hits = [d for d in h.outputs(g) if h.target.e_right(d) == f]
            out[g] = hits[0]
    return out


def fiber_map_left(h: Morphism, f) -> dict:
    """Left-fiber map at the target unit f."""
    if f not in set(h.target.units):
        raise PreconditionFailed(f"{f!r} is not a unit of {h.target.name!r}")
    e = h.base_map[f]
    out = {}
    for g in h.source.elements:
        if h.source.e_left(g) == e:
            hits = [d for d in h.outputs(g) if h.target.e_left(d) == f]
            out[g] = hits[0]
    return out


def kernel(h: Morphism) -> Kernel:
    return Kernel(h)


def is_mono(h: Morphism) -> bool:
    """Monomorphism test: the kernel is exactly the source units."""
    return h.kernel_members == frozenset(h.source.units)


def is_surjective(h: Morphism) -> bool:
    return h.image_elements == frozenset(h.target.elements)


def mono_witness(h: Morphism) -> CancellationWitness:
    """Two probe morphisms demonstrating that h is not mono."""
    if is_mono(h):
        raise IsMonomorphism(f"{h!r} is a monomorphism")
    src = h.source
    units = tuple(src.units)
    if h.domain_elements != frozenset(src.elements):
        covered = {src.e_right(g) for g in h.domain_elements}
        missing = next(o for o in src.orbits() if o[0] not in covered)
        rest = sorted(set(units) - set(missing))
        if rest:
            probe = set_groupoid(src.units_universe())
            e0 = rest[0]
            f2 = {e: (e0 if e in set(missing) else e) for e in units}
            w1 = Morphism(probe, src, ((e, e) for e in units))
            w2 = Morphism(probe, src, ((e, f2[e]) for e in units))
        else:
            # the whole unit set is one missing orbit; any two distinct
            # constant probes compose with h to the empty relation
            fresh = Universe(f"{src.elements.name}.probe", ("p0", "p1"))
            probe = set_groupoid(fresh)
            w1 = Morphism(probe, src, ((e, "p0") for e in units))
            w2 = Morphism(probe, src, ((e, "p1") for e in units))
        witness = CancellationWitness(probe, w1, w2, "mono")
    else:
        gamma0 = min(h.kernel_members - set(units))
        e0 = src.e_left(gamma0)
        iso = src.isotropy(e0).members
        h0 = sorted(iso & h.kernel_members)
        probe = group_groupoid(
            group_table_of(src, h0, f"{src.name}.ker@{e0}")
        )
        psi1 = [(e, k) for e in units for k in h0]
        psi2 = [(e, k) for e in units if e != e0 for k in h0]
        psi2 += [(k, k) for k in h0]
        w1 = Morphism(probe, src, psi1)
        w2 = Morphism(probe, src, psi2)
        witness = CancellationWitness(probe, w1, w2, "mono")
    if not witness.verify(h):
        raise AxiomViolation("derived:mono-witness", None, "composites differ")
    return witness


def left_regular(groupoid: Groupoid) -> Morphism:
    """Left translations, as a morphism into the pair groupoid on Γ."""
    target = pair_groupoid(groupoid.elements)
    graph = [(pair_name(c, b), a) for c, a, b in groupoid.table]
    return Morphism(groupoid, target, graph)


def _as_member_set(groupoid: Groupoid, part) -> frozenset:
    if isinstance(part, SubgroupoidRef):
        if part.parent != groupoid:
            raise PreconditionFailed("subgroupoid belongs to another groupoid")
        return part.members
    if isinstance(part, Groupoid):
        return frozenset(part.elements)
    return frozenset(part)


def component_projection(groupoid: Groupoid, part) -> Morphism:
    """Transposed inclusion of a union of transitive components."""
    members = _as_member_set(groupoid, part)
    base = {groupoid.e_right(g) for g in members}
    full = {g for g in groupoid.elements if groupoid.e_right(g) in base}
    if members != full:
        raise PreconditionFailed(
            f"{min(members ^ full)!r} breaks the transitive-component condition"
        )
    sub = SubgroupoidRef(groupoid, members).as_groupoid()
    return Morphism(groupoid, sub, ((g, g) for g in members))


def wide_inclusion(groupoid: Groupoid, part) -> Morphism:
    """Inclusion of a wide subgroupoid as a morphism."""
    members = _as_member_set(groupoid, part)
    ref = SubgroupoidRef(groupoid, members)
    if not ref.is_wide:
        raise PreconditionFailed("subgroupoid is not wide")
    sub = ref.as_groupoid()
    return Morphism(sub, groupoid, ((g, g) for g in members))


def to_orbit_pair(groupoid: Groupoid) -> Morphism:
    """γ ↦ (left unit, right unit) into the pair groupoid on units."""
    target = pair_groupoid(groupoid.units_universe())
    graph = [
        (pair_name(groupoid.e_left(g), groupoid.e_right(g)), g)
        for g in groupoid.elements
    ]
    return Morphism(groupoid, target, graph)


def to_orbit_relation(groupoid: Groupoid) -> Morphism:
    """Same unit-pair map, onto the orbit equivalence relation."""
    target = groupoid.orbit_relation()
    graph = [
        (pair_name(groupoid.e_left(g), groupoid.e_right(g)), g)
        for g in groupoid.elements
    ]
    return Morphism(groupoid, target, graph)


def restrict_to_domain(h: Morphism) -> Morphism:
    """The same relation viewed from the full subgroupoid on D(h)."""
    sub = SubgroupoidRef(h.source, h.domain_elements).as_groupoid()
    return Morphism(sub, h.target, h.graph)


def product_injections(g1: Groupoid, g2: Groupoid):
    """The two canonical morphisms into the cartesian product."""
    from .groupoid import cartesian_product

    prod = cartesian_product(g1, g2)
    i1 = Morphism(
        g1, prod, ((pair_name(a, e2), a) for a in g1.elements for e2 in g2.units)
    )
    i2 = Morphism(
        g2, prod, ((pair_name(e1, b), b) for b in g2.elements for e1 in g1.units)
    )
    return i1, i2


def union_projections(g1: Groupoid, g2: Groupoid):
    """Disjoint union with its two projection morphisms."""
    from .groupoid import disjoint_union

    union = disjoint_union(g1, g2)
    p1 = Morphism(union, g1, ((g, f"L:{g}") for g in g1.elements))
    p2 = Morphism(union, g2, ((g, f"R:{g}") for g in g2.elements))
    return union, p1, p2


def product_pairing(p1: Morphism, p2: Morphism) -> Morphism:
    """The morphism into the disjoint union determined by p1 and p2."""
    if p1.source != p2.source:
        raise PreconditionFailed("pairing requires a common source")
    union, q1, q2 = union_projections(p1.target, p2.target)
    graph = [(f"L:{d}", g) for d, g in p1.graph]
    graph += [(f"R:{d}", g) for d, g in p2.graph]
    paired = Morphism(p1.source, union, graph)
    if compose_morphisms(q1, paired) != p1 or compose_morphisms(q2, paired) != p2:
        raise AxiomViolation("derived:pairing-projections", None)
    return paired


def functor_to_morphism(source: Groupoid, target: Groupoid, mapping) -> Morphism:
    """Graph of a functor, accepted only when units map bijectively."""
    mapping = dict(mapping)
    for g in source.elements:
        if g not in mapping:
            raise PreconditionFailed(f"functor undefined at {g!r}")
        if mapping[g] not in target.elements:
            raise PreconditionFailed(f"functor value {mapping[g]!r} unknown")
    for e in source.units:
        if mapping[e] not in set(target.units):
            raise PreconditionFailed(f"functor maps unit {e!r} to a non-unit")
    for g in source.elements:
        if mapping[source.inverse[g]] != target.inverse[mapping[g]]:
            raise PreconditionFailed(f"functor breaks inverse at {g!r}")
    for c, a, b in source.table:
        if target.mult(mapping[a], mapping[b]) != mapping[c]:
            raise PreconditionFailed(f"functor breaks product at ({a!r}, {b!r})")
    unit_values = [mapping[e] for e in source.units]
    if len(set(unit_values)) != len(unit_values) or set(unit_values) != set(
        target.units
    ):
        raise PreconditionFailed("functor is not a bijection on units")
    return Morphism(source, target, ((mapping[g], g) for g in source.elements))


def group_action_morphism(table, space: Universe, act) -> Morphism:
    """The morphism into the pair groupoid defined by a group action."""
    act = check_group_action(table, space, act)
    src = group_groupoid(table)
    tgt = pair_groupoid(space)
    graph = [
        (pair_name(act[(g, x)], x), g) for g in table.elements for x in space
    ]
    return Morphism(src, tgt, graph)


def has_unique_fixed_point_property(table, space: Universe, act) -> bool:
    """Transitive, and every point is the unique fixed point of some g.

    This is a sufficient condition for the associated morphism into
    the pair groupoid to be an epimorphism.
    """
    act = check_group_action(table, space, act)
    x0 = min(space.elements) if len(space) else None
    if x0 is not None:
        orbit = {act[(g, x0)] for g in table.elements}
        if orbit != set(space.elements):
            return False
    for x in space:
        if not any(
            {y for y in space if act[(g, y)] == y} == {x}
            for g in table.elements
        ):
            return False
    return True


def classify_into_group(h: Morphism):
    """Present a morphism into a group as (one-point orbit, group hom)."""
    if len(h.target.units) != 1:
        raise PreconditionFailed(f"{h.target.name!r} is not a group")
    f = h.target.units[0]
    e0 = h.base_map[f]
    iso = h.source.isotropy(e0).members
    hom = {}
    for g in sorted(iso):
        outs = h.outputs(g)
        if len(outs) != 1:
            raise AxiomViolation("derived:group-classification", g)
        hom[g] = outs[0]
    rebuilt = sorted((hom[g], g) for g in hom)
    if tuple(rebuilt) != h.graph:
        raise AxiomViolation("derived:group-classification", e0)
    return e0, hom


def quotient_by_kernel(h: Morphism):
    """Factor a full-domain morphism through its kernel quotient."""
    from .action import quotient_groupoid

    if h.domain_elements != frozenset(h.source.elements):
        raise PreconditionFailed("morphism domain must be the whole groupoid")
    quotient, pi = quotient_groupoid(h.source, h.kernel_members)
    cls = {g: pi.outputs(g)[0] for g in h.source.elements}
    reduced = Morphism(quotient, h.target, {(d, cls[g]) for d, g in h.graph})
    if not is_mono(reduced):
        raise AxiomViolation("derived:kernel-quotient-mono", None)
    if compose_morphisms(reduced, pi) != h:
        raise AxiomViolation("derived:kernel-quotient-factor", None)
    return pi, reduced


def epi_mono_factorization(h: Morphism):
    """Write h as a surjection onto a quotient followed by a mono."""
    if h.domain_elements == frozenset(h.source.elements):
        proj = identity_morphism(h.source)
        inner = h
    else:
        proj = component_projection(h.source, h.domain_elements)
        inner = restrict_to_domain(h)
    pi, reduced = quotient_by_kernel(inner)
    h1 = compose_morphisms(pi, proj)
    if not is_surjective(h1):
        raise AxiomViolation("derived:factorization-epi", None)
    if compose_morphisms(reduced, h1) != h:
        raise AxiomViolation("derived:factorization-composite", None)
    return h1, reduced


def separating_pair(groupoid: Groupoid, part):
    """Two morphisms equal on a proper wide subgroupoid but not globally.

    Returns (probe, k1, k2).  Existence is the contrapositive step in
    showing epimorphisms are surjective.
    """
    from .bisection import Bisection, ad

    members = _as_member_set(groupoid, part)
    ref = SubgroupoidRef(groupoid, members)
    if not ref.is_wide:
        raise PreconditionFailed("separating_pair needs a wide subgroupoid")
    outside = sorted(set(groupoid.elements) - members)
    if not outside:
        raise PreconditionFailed("subgroupoid must be proper")

    moved = [g for g in outside if groupoid.inverse[g] != g]
    if moved:
        gamma0 = min(moved)
        e0 = groupoid.e_left(gamma0)
        h_set = sorted(g for g in members if groupoid.e_right(g) == e0)
        sigma = {g: g for g in groupoid.elements}
        for g in h_set:
            sigma[g] = groupoid.mult(g, gamma0)
        for g in h_set:
            shifted = groupoid.mult(g, gamma0)
            sigma[shifted] = groupoid.mult(shifted, groupoid.inverse[gamma0])
        probe = pair_groupoid(groupoid.elements)
        twist = Bisection(
            probe, {pair_name(sigma[g], g) for g in groupoid.elements}
        )
        k1 = left_regular(groupoid)
        k2 = compose_morphisms(ad(twist), k1)
    else:
        gamma0 = min(outside)
        e0 = groupoid.e_right(gamma0)
        if groupoid._orbit_of[e0] != (e0,):
            raise AxiomViolation("derived:separating-orbit", e0)
        iso = sorted(groupoid.isotropy(e0).members)
        table = group_table_of(groupoid, iso, f"{groupoid.name}@{e0}")
        sub = sorted(set(iso) & members)
        ktable, proj = quotient_group_table(table, sub)
        probe = group_groupoid(ktable)
        k1 = Morphism(groupoid, probe, ((ktable.unit, g) for g in iso))
        k2 = Morphism(groupoid, probe, ((proj[g], g) for g in iso))

    if k1 == k2:
        raise AxiomViolation("derived:separating-distinct", gamma0)
    inside1 = {p for p in k1.graph if p[1] in members}
    inside2 = {p for p in k2.graph if p[1] in members}
    if inside1 != inside2:
        raise AxiomViolation("derived:separating-agreement", gamma0)
    return probe, k1, k2


def find_non_epi_witness(h: Morphism):
    """A verified right-cancellation witness, or None when none is found.

    None is not a proof that h is an epimorphism.
    """
    from .bisection import ad, all_bisections

    if not is_surjective(h):
        probe, k1, k2 = separating_pair(h.target, h.image_elements)
        witness = CancellationWitness(probe, k1, k2, "epi")
        if not witness.verify(h):
            raise AxiomViolation("derived:epi-witness", None, "composites differ")
        return witness
    ident = identity_morphism(h.target)
    unit_set = frozenset(h.target.units)
    for b in all_bisections(h.target):
        if b.members == unit_set:
            continue
        twisted = ad(b)
        if twisted == ident:
            continue
        if compose_morphisms(twisted, h) == h:
            return CancellationWitness(h.target, twisted, ident, "epi")
    return None
