"""From rigidified crossed pairs to free modules over the crossed product.

A single-component morphism (phi, g) between identity-indexed families maps
to the module map  x ⊗ v  ->  x·g^{-1}·tau(g,g^{-1})^{-1} ⊗ phi(v);  the
tau-correction is what makes the map well defined on the tensor product,
and functoriality of the assignment is re-verified numerically over all
composable component pairs.
"""

from __future__ import annotations

from .crossed import crossed_product_ring, validate_crossed_data
from .functors import FunctorData, audit_functor, check_equivariant, \
    compose_functors
from .gcategory import CheckResult, FullSubcategory, Mor, \
    PullbackActionCategory, RigidCrossedCat, TrivialRingCat
from .groups import ValidationError, group_by_name, point_gset, \
    subgroup_embedding
from .star import StarCategory, map_category, star_morphism

from .comparisons import induction_functor


def rigid_star_category(data, max_rank=3):
    """The one-point family category over the rigidified pairs."""
    rigid = RigidCrossedCat(data, max_rank=max_rank)
    return StarCategory(rigid, point_gset(data.group))


def identity_indexed_subcategory(star):
    """Families whose values all sit at the identity group index."""
    return FullSubcategory(
        star,
        lambda x: all(v[1] == 0 for _, v in x),
        name=f"{star.name}|e",
    )


def module_category(data, max_rank=3):
    ring = crossed_product_ring(data)
    return TrivialRingCat(ring, group_by_name("C1"), max_rank=max_rank,
                          name=f"{ring.name}-free")


def _component_unit(data, cp, g):
    """g^{-1}·tau(g,g^{-1})^{-1} as an element of the crossed product."""
    ginv = data.group.inv(g)
    return cp.mul(
        cp.basis(data.ring.one, ginv),
        cp.scalar(data.tau_inverse[g][ginv]),
    )


def crossed_module_functor(data, max_rank=3):
    """The additive functor from identity-indexed families to finitely
    generated free modules over R_(alpha,tau)G."""
    star = rigid_star_category(data, max_rank=max_rank)
    source = identity_indexed_subcategory(star)
    target = module_category(data, max_rank=max_rank)
    cp = target.ring
    units = {g: _component_unit(data, cp, g) for g in data.group.elements()}

    def obj_map(x):
        if not x:
            return 0
        return x[0][1][0]

    def mor_map(f):
        m, n = obj_map(f.src), obj_map(f.tgt)
        total = [[cp.zero] * n for _ in range(m)]
        for (g, _), comp in f.data:
            w = units[g]
            a = comp.data
            for j in range(m):
                for i in range(n):
                    term = cp.mul(w, cp.scalar(a[j][i]))
                    total[j][i] = cp.add(total[j][i], term)
        return Mor(m, n, tuple(tuple(row) for row in total))

    return FunctorData(source, target, obj_map, mor_map,
                       name="crossed-modules")


def well_definedness_check(data):
    """x·r·g^{-1}·tau(g,g^{-1})^{-1} = x·g^{-1}·tau(g,g^{-1})^{-1}·alpha_g(r)
    for every x in the crossed product (basis lines when the ring is large),
    r in R and g in G."""
    cp = crossed_product_ring(data, validate=False)
    ring, group = data.ring, data.group
    if cp.size <= 256:
        xs = list(cp.elements())
        mode = "exhaustive"
    else:
        xs = [
            cp.basis(r, g) for r in ring.elements() for g in group.elements()
        ]
        mode = "exhaustive-basis"
    for g in group.elements():
        w = _component_unit(data, cp, g)
        for r in ring.elements():
            ar = cp.scalar(data.alpha[g](r))
            sr = cp.scalar(r)
            for x in xs:
                lhs = cp.mul(cp.mul(x, sr), w)
                rhs = cp.mul(cp.mul(x, w), ar)
                if lhs != rhs:
                    return CheckResult(
                        "module-functor-well-defined", False,
                        {"x": cp.label(x), "r": ring.label(r),
                         "g": group.label(g)}, mode,
                    )
    return CheckResult("module-functor-well-defined", True, None, mode)


def functoriality_check(data, rank=1):
    """F(psi,h) ∘ F(phi,g) = F((psi,h)∘(phi,g)) over all single-component
    pairs at the given rank: an independent machine re-proof of the
    composition computation."""
    functor = crossed_module_functor(data, max_rank=rank)
    star = functor.source.base
    rigid = star.base
    ring, group = data.ring, data.group
    target = functor.target
    x = ((0, (rank, 0)),)
    for g in group.elements():
        for h in group.elements():
            for a in _matrices(ring, rank):
                phi = star_morphism(
                    star, x, x, [((g, 0), Mor((rank, 0), (rank, g), a))]
                )
                for b in _matrices(ring, rank):
                    psi = star_morphism(
                        star, x, x, [((h, 0), Mor((rank, 0), (rank, h), b))]
                    )
                    lhs = target.compose(
                        functor.mor_map(psi), functor.mor_map(phi)
                    )
                    rhs = functor.mor_map(star.compose(psi, phi))
                    if lhs != rhs:
                        return CheckResult(
                            "module-functor-composition", False,
                            {"g": group.label(g), "h": group.label(h),
                             "phi": rigid.mor_label(Mor(0, 0, a)),
                             "psi": rigid.mor_label(Mor(0, 0, b))},
                            "exhaustive",
                        )
    return CheckResult("module-functor-composition", True, None, "exhaustive")


def untwisted_component_check(data, rank=1):
    """With tau ≡ 1 the component map must reduce to x ⊗ v -> x·g^{-1} ⊗
    phi(v), with no correction factor."""
    if any(
        data.tau[g][h] != data.ring.one
        for g in data.group.elements()
        for h in data.group.elements()
    ):
        return CheckResult("module-functor-untwisted-form", True, None,
                           "skipped")
    cp = crossed_product_ring(data, validate=False)
    for g in data.group.elements():
        w = _component_unit(data, cp, g)
        plain = cp.basis(data.ring.one, data.group.inv(g))
        if w != plain:
            return CheckResult(
                "module-functor-untwisted-form", False,
                {"g": data.group.label(g)}, "exhaustive",
            )
    return CheckResult("module-functor-untwisted-form", True, None,
                       "exhaustive")


def _matrices(ring, rank):
    from .rings import enumerate_matrices

    return list(enumerate_matrices(ring, rank, rank))


def module_equivalence_audit(data, bound=1, seed=0):
    """Audit the module functor as an equivalence at the given bound."""
    functor = crossed_module_functor(data, max_rank=bound)
    return audit_functor(functor, bound=bound, seed=seed)


def inclusion_functor(data, max_rank=3):
    """Inclusion of the identity-indexed families into the full one-point
    family category; essentially surjective since (M,g) ≅ (res M, e)."""
    star = rigid_star_category(data, max_rank=max_rank)
    source = identity_indexed_subcategory(star)
    return FunctorData(source, star, lambda x: x, lambda f: f,
                       name="identity-index-inclusion")


# ---------------------------------------------------------------------------
# the coset equivalence chain

class CosetEquivalenceChain:
    """The three functors relating families over G/H to free modules over
    the restricted crossed product, with their audits."""

    def __init__(self, data, subgroup_subset, bound=1, seed=0):
        group = data.group
        subset = tuple(sorted(set(subgroup_subset)))
        self.sub, self.incl = subgroup_embedding(group, subset)
        self.data_sub = data.restrict(self.sub, self.incl)
        self.restricted_validation = validate_crossed_data(self.data_sub)

        rigid_g = RigidCrossedCat(data, max_rank=bound)
        rigid_h = RigidCrossedCat(self.data_sub, max_rank=bound)
        res_g = PullbackActionCategory(rigid_g, self.incl)

        def include_obj(x):
            return (x[0], self.incl(x[1]))

        def include_mor(f):
            return Mor(include_obj(f.src), include_obj(f.tgt), f.data)

        base_inclusion = FunctorData(
            rigid_h, res_g, include_obj, include_mor,
            name="restricted-pairs-inclusion",
        )
        witness = check_equivariant(base_inclusion, bound=bound)
        if witness is not None:
            raise ValidationError(
                "restricted-pair inclusion is not equivariant", witness=witness
            )

        pt = point_gset(self.sub)
        star_h = StarCategory(rigid_h, pt)
        star_res = StarCategory(res_g, pt)
        self.star_inclusion = map_category(
            base_inclusion, star_h, star_res, validate=False
        )
        self.induction = induction_functor(rigid_g, self.sub, self.incl, pt)
        self.to_cosets = compose_functors(
            self.induction, self.star_inclusion, name="coset-fibers"
        )
        self.module_functor = crossed_module_functor(
            self.data_sub, max_rank=bound
        )
        self.inclusion_0 = inclusion_functor(self.data_sub, max_rank=bound)

        self.coset_audit = audit_functor(self.to_cosets, bound=bound,
                                         seed=seed)
        self.module_audit = audit_functor(self.module_functor, bound=bound,
                                          seed=seed)
        self.inclusion_audit = audit_functor(self.inclusion_0, bound=bound,
                                             seed=seed)

    @property
    def is_equivalence_chain(self):
        return (
            all(c.ok for c in self.restricted_validation)
            and self.coset_audit.is_equivalence
            and self.module_audit.is_equivalence
            and self.inclusion_audit.is_equivalence
        )

    def check_results(self):
        out = [
            CheckResult(f"restricted-{c.name}", c.ok, c.witness, c.mode)
            for c in self.restricted_validation
        ]
        out.extend(self.coset_audit.check_results("coset-fibers-"))
        out.extend(self.inclusion_audit.check_results("identity-index-"))
        out.extend(self.module_audit.check_results("module-functor-"))
        return out
