"""The comparison functors between twisted family categories.

Three constructions and their composite:

  * flatten_iso          -- (A*_K S)*_G T  ≅  A*_{KxG}(S x T), a strict
                            isomorphism rebracketing nested families
  * quotient_collapse    -- A*_G T  ->  A*_{G/N}(N\\T) for N acting trivially
                            on A and freely on T; full and faithful
  * induction_functor    -- (res_H A)*_H T  ->  A*_G (G x_H T) induced by
                            t -> [1, t]
  * induced_restriction_equivalence
                         -- (ind A along phi)*_G T  ~  A*_K (res_phi T),
                            the composite of the first two plus a relabeling
"""

from __future__ import annotations

from .functors import FunctorData, compose_functors
from .gcategory import PullbackActionCategory, QuotientActionCategory, \
    validate_trivial_action
from .groups import (
    GroupHom,
    ValidationError,
    gset_over_quotient,
    induced_gset,
    orbit_gset,
    product_biset_gset,
    quotient_group,
    restrict_gset,
    restriction_biset,
)
from .star import StarCategory, push_forward, star_morphism, star_object


def flatten_iso(base, biset, t):
    """The strict isomorphism (A*_K S)*_G T -> A*_{KxG}(S x T).

    The product group acts on the base through the projection to K and on
    S x T by (k,g)(s,x) = (k·s·g^{-1}, g·x); an object entry at (s, x) is
    the s-entry of the x-entry, and morphism components re-key the same way.
    Returns (functor, inverse).
    """
    inner = StarCategory(base, biset)
    source = StarCategory(inner, t)
    prod, st = product_biset_gset(biset, t)
    proj_left = GroupHom(
        prod, base.group,
        [kg // biset.right_group.order for kg in prod.elements()],
        validate=False,
    )
    flat_base = PullbackActionCategory(base, proj_left)
    target = StarCategory(flat_base, st)
    t_size = t.size
    g_order = biset.right_group.order

    def enc_point(s, x):
        return s * t_size + x

    def obj_map(a):
        entries = []
        for x, fam in a:
            for s, v in fam:
                entries.append((enc_point(s, x), v))
        return star_object(target, entries)

    def mor_map(f):
        entries = []
        for (g, x), comp in f.data:
            for (k, s), m in comp.data:
                entries.append(((k * g_order + g, enc_point(s, x)), m))
        return star_morphism(target, obj_map(f.src), obj_map(f.tgt), entries)

    def inv_obj_map(a):
        nested = {}
        for p, v in a:
            s, x = divmod(p, t_size)
            nested.setdefault(x, []).append((s, v))
        entries = [
            (x, star_object(inner, fam)) for x, fam in nested.items()
        ]
        return star_object(source, entries)

    def inv_mor_map(f):
        src, tgt = inv_obj_map(f.src), inv_obj_map(f.tgt)
        nested = {}
        for (kg, p), m in f.data:
            k, g = divmod(kg, g_order)
            s, x = divmod(p, t_size)
            nested.setdefault((g, x), []).append(((k, s), m))
        src_d, tgt_d = dict(src), dict(tgt)
        entries = []
        for (g, x), comps in nested.items():
            inner_src = src_d[x]
            inner_tgt = inner.act_obj(g, tgt_d[t.act(g, x)])
            entries.append(
                ((g, x),
                 star_morphism(inner, inner_src, inner_tgt, comps))
            )
        return star_morphism(source, src, tgt, entries)

    fwd = FunctorData(source, target, obj_map, mor_map, name="flatten")
    back = FunctorData(target, source, inv_obj_map, inv_mor_map,
                       name="unflatten")
    return fwd, back


def quotient_collapse(base, t, normal_subset, bound=1):
    """A*_G T -> A*_{G/N}(N\\T): push families down the orbit projection,
    then sum morphism components over each coset of N.

    Preconditions are validated eagerly: N must act trivially on the base
    (exactly, on the bounded universe) and freely on T.
    """
    group = base.group
    normal = tuple(sorted(set(normal_subset)))
    witness = validate_trivial_action(base, normal, bound=bound)
    if witness is not None:
        raise ValidationError(
            "normal subgroup does not act trivially on the base",
            witness=witness,
        )
    for n in normal:
        if n == 0:
            continue
        for x in t.points():
            if t.act(n, x) == x:
                raise ValidationError(
                    "normal subgroup does not act freely on the index set",
                    witness=(n, x),
                )
    quot, proj, section = quotient_group(group, normal)
    t_orb, orbit_proj = orbit_gset(t, normal)
    t_quot = gset_over_quotient(t_orb, quot, section)

    source = StarCategory(base, t)
    mid = StarCategory(base, t_orb)
    qbase = QuotientActionCategory(base, quot, section)
    target = StarCategory(qbase, t_quot)
    push = push_forward(source, mid, orbit_proj)

    def collapse_mor(f):
        acc = {}
        for (g, x), m in f.data:
            key = (proj(g), x)
            if key in acc:
                acc[key] = base.add(acc[key], m)
            else:
                acc[key] = m
        return star_morphism(target, f.src, f.tgt, acc.items())

    collapse = FunctorData(
        mid, target, lambda x: x, collapse_mor, name="coset-sum"
    )
    return compose_functors(collapse, push, name="quotient-collapse")


def induction_functor(base, sub, incl, t_sub):
    """(res_H A)*_H T -> A*_G (G x_H T): place the family on the embedded
    copy of T and keep the components, which live over H inside G."""
    group = base.group
    res_base = PullbackActionCategory(base, incl)
    source = StarCategory(res_base, t_sub)
    t_ind, embed = induced_gset(group, sub, incl, t_sub)
    target = StarCategory(base, t_ind)

    def obj_map(a):
        return star_object(target, ((embed[x], v) for x, v in a))

    def mor_map(f):
        entries = [
            ((incl(h), embed[x]), m) for (h, x), m in f.data
        ]
        return star_morphism(target, obj_map(f.src), obj_map(f.tgt), entries)

    return FunctorData(source, target, obj_map, mor_map, name="induction")


def relabel_star(source, target, group_map, point_map):
    """Transport along a group isomorphism and a compatible point bijection;
    base objects and morphisms are carried unchanged."""
    point_map = tuple(point_map)

    def obj_map(a):
        return star_object(target, ((point_map[x], v) for x, v in a))

    def mor_map(f):
        entries = [
            ((group_map(g), point_map[x]), m) for (g, x), m in f.data
        ]
        return star_morphism(target, obj_map(f.src), obj_map(f.tgt), entries)

    return FunctorData(source, target, obj_map, mor_map, name="relabel")


def induced_restriction_equivalence(base, phi, t, bound=1):
    """(ind_phi A)*_G T -> A*_K (res_phi T) as the flatten isomorphism, the
    quotient collapse along {e} x G, and a final relabeling.

    Returns (composite functor, list of constituent functors).
    """
    k_group, g_group = phi.source, phi.target
    if t.group is not g_group:
        raise ValidationError("index set must be a G-set for the target group")
    biset = restriction_biset(phi)
    fwd, _ = flatten_iso(base, biset, t)
    flat = fwd.target                       # A*_{KxG}(S x T)
    prod = flat.index.group
    normal = tuple(range(g_group.order))    # {e} x G under the encoding
    collapse = quotient_collapse(flat.base, flat.index, normal, bound=bound)

    quot = collapse.target.base.group
    section = collapse.target.base.section
    omega = GroupHom(
        quot, k_group,
        [section[q] // g_group.order for q in quot.elements()],
        validate=False,
    )
    if not GroupHom(quot, k_group, omega.mapping).is_isomorphism():
        raise ValidationError("quotient does not identify with the source group")

    # orbit representatives of (s, x) map to the point s·x of res_phi T
    t_res = restrict_gset(t, phi)
    t_size = t.size
    reps = _orbit_representatives(flat.index, normal)
    point_map = [t.act(r // t_size, r % t_size) for r in reps]
    target = StarCategory(base, t_res)
    relabel = relabel_star(collapse.target, target, omega, point_map)
    composite = compose_functors(
        relabel, compose_functors(collapse, fwd),
        name="induced-restriction",
    )
    return composite, [fwd, collapse, relabel]


def _orbit_representatives(gset, subgroup_elements):
    seen = set()
    reps = []
    for x in gset.points():
        if x in seen:
            continue
        orb = sorted(gset.act(n, x) for n in subgroup_elements)
        reps.append(orb[0])
        seen.update(orb)
    return sorted(reps)
