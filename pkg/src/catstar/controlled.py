"""Controlled modules over a free G-space.

Objects are finitely supported families over the space; morphisms are
matrices of base morphisms phi[y,x]: A_x -> B_y composed in matrix style.
The action is (g*A)_x = g*(A_{g·x}), (g*phi)[y,x] = g*(phi[g·y, g·x]), so
supports shift by g^{-1}.  Support conditions are explicit families of
subsets; the fixed category enumerates its objects from one point per
G-orbit and expands by the invariance equations.

The comparison functor embeds the family category over T into the fixed
controlled category over T x G, where the morphism condition only allows
components between points with the same T-coordinate.
"""

from __future__ import annotations

from itertools import product

from .functors import FunctorData
from .gcategory import AdditiveCategory, Biproduct, CheckResult, GCategory, Mor
from .groups import GSet, ValidationError
from .star import StarCategory


def _freeze(entries):
    return tuple(sorted(entries))


class SupportCondition:
    """A family of subsets of X (object kind) or of X x X (morphism kind),
    closed under finite union, and for morphism conditions under relation
    composition, up to containment in a member."""

    def __init__(self, kind, family, space, g_invariant=False, validate=True):
        if kind not in ("object", "morphism"):
            raise ValidationError("support condition kind must be object|morphism")
        self.kind = kind
        self.family = tuple(frozenset(s) for s in family)
        self.space = space
        self.g_invariant = g_invariant
        if validate:
            self._validate()

    def _validate(self):
        for a in self.family:
            for b in self.family:
                union = a | b
                if not any(union <= c for c in self.family):
                    raise ValidationError(
                        "condition not closed under union", witness=(a, b)
                    )
                if self.kind == "morphism":
                    comp = {
                        (z, x)
                        for (z, y1) in a
                        for (y2, x) in b
                        if y1 == y2
                    }
                    if not any(comp <= c for c in self.family):
                        raise ValidationError(
                            "condition not closed under composition",
                            witness=(a, b),
                        )
        if self.g_invariant:
            grp = self.space.group
            for g in grp.elements():
                for a in self.family:
                    if self.kind == "object":
                        moved = frozenset(self.space.act(g, x) for x in a)
                    else:
                        moved = frozenset(
                            (self.space.act(g, y), self.space.act(g, x))
                            for (y, x) in a
                        )
                    if moved not in self.family and not any(
                        moved <= c for c in self.family
                    ):
                        raise ValidationError(
                            "condition not invariant", witness=(g, a)
                        )

    def admits(self, support):
        s = frozenset(support)
        return any(s <= a for a in self.family)

    def allowed_pairs(self):
        out = set()
        for a in self.family:
            out |= a
        return out


def all_points_condition(space):
    return SupportCondition(
        "object", [frozenset(space.points())], space, g_invariant=True
    )


def diagonal_pullback_condition(space, coordinate):
    """Pairs of points with equal image under `coordinate` (component maps
    are confined to a fiber of the control map)."""
    pairs = frozenset(
        (y, x)
        for y in space.points()
        for x in space.points()
        if coordinate(y) == coordinate(x)
    )
    return SupportCondition("morphism", [pairs], space, g_invariant=True)


class ControlledCat(GCategory):
    """C(X; A) for a finite free G-space X, restricted to the given support
    conditions."""

    def __init__(self, base, space, mor_condition=None, obj_condition=None,
                 max_rank=None, name=None, check_free=True):
        if space.group is not base.group:
            raise ValidationError("space must be a set over the base group")
        if check_free and not space.is_free():
            raise ValidationError("controlled space must be a free G-set")
        self.base = base
        self.space = space
        self.group = base.group
        self.mor_condition = mor_condition
        self.obj_condition = obj_condition
        self.max_rank = base.max_rank if max_rank is None else max_rank
        self.name = name or f"C({space.size} pts; {base.name})"

    # --- objects, as in the family category ---

    def objects(self, bound=None):
        bound = self.max_rank if bound is None else bound
        nonzero = [
            x for x in self.base.objects(bound)
            if not self.base.is_zero_object(x)
        ]
        out = [()]

        def extend(point, budget, acc):
            for nxt in range(point, self.space.size):
                for v in nonzero:
                    size = self.base.obj_size(v)
                    if size > budget:
                        continue
                    cand = acc + [(nxt, v)]
                    out.append(_freeze(cand))
                    extend(nxt + 1, budget - size, cand)

        extend(0, bound, [])
        if self.obj_condition is not None:
            out = [
                o for o in out
                if self.obj_condition.admits(t for t, _ in o)
            ]
        return out

    def obj_size(self, x):
        return sum(self.base.obj_size(v) for _, v in x)

    def zero_object(self):
        return ()

    def is_zero_object(self, x):
        return len(x) == 0

    def support(self, x):
        return tuple(t for t, _ in x)

    def mor_support(self, f):
        return tuple(k for k, _ in f.data)

    # --- morphisms: entries keyed by (target point, source point) ---

    def _slots(self, x, y):
        allowed = (
            self.mor_condition.allowed_pairs()
            if self.mor_condition is not None
            else None
        )
        slots = []
        for xs, xv in x:
            for ys, yv in y:
                if allowed is not None and (ys, xs) not in allowed:
                    continue
                slots.append(((ys, xs), xv, yv))
        slots.sort(key=lambda s: s[0])
        return slots

    def hom(self, x, y):
        slots = self._slots(x, y)
        factors = [self.base.hom(xv, yv) for (_, xv, yv) in slots]
        out = []
        for combo in product(*factors):
            entries = [
                (key, m)
                for (key, _, _), m in zip(slots, combo)
                if not self.base.is_zero_mor(m)
            ]
            out.append(Mor(x, y, _freeze(entries)))
        return out

    def zero_hom(self, x, y):
        return Mor(x, y, ())

    def identity(self, x):
        return Mor(x, x, _freeze(((t, t), self.base.identity(v)) for t, v in x))

    def add(self, f, g):
        if f.src != g.src or f.tgt != g.tgt:
            raise ValidationError("controlled addition endpoint mismatch")
        acc = dict(f.data)
        for key, m in g.data:
            if key in acc:
                s = self.base.add(acc[key], m)
                if self.base.is_zero_mor(s):
                    del acc[key]
                else:
                    acc[key] = s
            else:
                acc[key] = m
        return Mor(f.src, f.tgt, _freeze(acc.items()))

    def neg(self, f):
        return Mor(f.src, f.tgt,
                   _freeze((k, self.base.neg(m)) for k, m in f.data))

    def compose(self, g, f):
        if f.tgt != g.src:
            raise ValidationError("controlled composition endpoint mismatch")
        by_src = {}
        for (z, y), m in g.data:
            by_src.setdefault(y, []).append((z, m))
        acc = {}
        for (y, x), m1 in f.data:
            for z, m2 in by_src.get(y, ()):
                key = (z, x)
                term = self.base.compose(m2, m1)
                if key in acc:
                    acc[key] = self.base.add(acc[key], term)
                else:
                    acc[key] = term
        entries = [(k, m) for k, m in acc.items()
                   if not self.base.is_zero_mor(m)]
        return Mor(f.src, g.tgt, _freeze(entries))

    def biproduct(self, x, y):
        xd, yd = dict(x), dict(y)
        points = sorted(set(xd) | set(yd))
        obj_entries, i1e, i2e, p1e, p2e = [], [], [], [], []
        for t in points:
            xt = xd.get(t, self.base.zero_object())
            yt = yd.get(t, self.base.zero_object())
            bp = self.base.biproduct(xt, yt)
            if not self.base.is_zero_object(bp.obj):
                obj_entries.append((t, bp.obj))
            if t in xd:
                i1e.append(((t, t), bp.inj1))
                p1e.append(((t, t), bp.proj1))
            if t in yd:
                i2e.append(((t, t), bp.inj2))
                p2e.append(((t, t), bp.proj2))
        obj = _freeze(obj_entries)
        return Biproduct(
            obj,
            Mor(x, obj, _freeze(i1e)),
            Mor(y, obj, _freeze(i2e)),
            Mor(obj, x, _freeze(p1e)),
            Mor(obj, y, _freeze(p2e)),
        )

    # --- the action ---

    def act_obj(self, g, x):
        g_inv = self.group.inv(g)
        return _freeze(
            (self.space.act(g_inv, t), self.base.act_obj(g, v))
            for t, v in x
        )

    def act_mor(self, g, f):
        g_inv = self.group.inv(g)
        act = self.space.act
        return Mor(
            self.act_obj(g, f.src),
            self.act_obj(g, f.tgt),
            _freeze(
                ((act(g_inv, y), act(g_inv, x)), self.base.act_mor(g, m))
                for (y, x), m in f.data
            ),
        )

    def obj_label(self, x):
        if not x:
            return "0"
        return "{" + ", ".join(
            f"{self.space.label(t)}:{self.base.obj_label(v)}" for t, v in x
        ) + "}"

    def mor_label(self, f):
        if not f.data:
            return "0"
        return "{" + ", ".join(
            f"({self.space.label(y)}<-{self.space.label(x)}):"
            f"{self.base.mor_label(m)}"
            for (y, x), m in f.data
        ) + "}"


def controlled_object(cat, entries):
    return _freeze(
        (t, v) for t, v in entries if not cat.base.is_zero_object(v)
    )


def controlled_morphism(cat, src, tgt, entries):
    return Mor(src, tgt, _freeze(
        (k, m) for k, m in entries if not cat.base.is_zero_mor(m)
    ))


def is_invariant_object(cat, x):
    d = dict(x)
    base, space = cat.base, cat.space
    for g in cat.group.elements():
        for t in space.points():
            here = d.get(t, base.zero_object())
            gt = space.act(g, t)
            there = d.get(gt, base.zero_object())
            if here != base.act_obj(g, there):
                return False
    return True


def is_invariant_morphism(cat, f):
    d = dict(f.data)
    base, space = cat.base, cat.space
    keys = set(d)
    for g in cat.group.elements():
        for (y, x) in keys | {
            (space.act(g, y), space.act(g, x)) for (y, x) in keys
        }:
            here = d.get((y, x))
            moved = d.get((space.act(g, y), space.act(g, x)))
            if here is None and moved is None:
                continue
            if here is None or moved is None:
                return False
            if here != base.act_mor(g, moved):
                return False
    return True


class FixedControlledCat(AdditiveCategory):
    """The fixed category of a controlled category with G-action: objects
    and morphisms satisfying A_x = g*(A_{g·x}) and phi[y,x] =
    g*(phi[g·y, g·x]).  The universe is generated from one point per orbit
    and expanded by the invariance equations."""

    def __init__(self, ambient, name=None):
        self.ambient = ambient
        self.base = ambient.base
        self.space = ambient.space
        self.group = ambient.group
        self.max_rank = ambient.max_rank
        self.name = name or f"{ambient.name}^G"
        self.orbit_reps = tuple(orb[0] for orb in self.space.orbits())
        # the unique gamma with x = gamma · rep(x); the space is free
        self._decomp = {}
        for r in self.orbit_reps:
            for g in self.group.elements():
                self._decomp[self.space.act(g, r)] = (g, r)

    def expand_object(self, rep_values):
        """Family from values on orbit representatives: the value at
        gamma·r is (gamma^{-1})* of the value at r."""
        entries = []
        vals = dict(rep_values)
        for x in self.space.points():
            gamma, r = self._decomp[x]
            v = vals.get(r)
            if v is None or self.base.is_zero_object(v):
                continue
            entries.append((x, self.base.act_obj(self.group.inv(gamma), v)))
        return _freeze(entries)

    def objects(self, bound=None):
        bound = self.max_rank if bound is None else bound
        nonzero = [
            v for v in self.base.objects(bound)
            if not self.base.is_zero_object(v)
        ]
        out = [()]
        reps = self.orbit_reps

        def extend(i, budget, acc):
            for nxt in range(i, len(reps)):
                for v in nonzero:
                    size = self.base.obj_size(v)
                    if size > budget:
                        continue
                    cand = acc + [(reps[nxt], v)]
                    out.append(self.expand_object(cand))
                    extend(nxt + 1, budget - size, cand)

        extend(0, bound, [])
        if self.ambient.obj_condition is not None:
            out = [
                o for o in out
                if self.ambient.obj_condition.admits(t for t, _ in o)
            ]
        return out

    def obj_size(self, x):
        # size counted over orbit representatives
        d = dict(x)
        return sum(
            self.base.obj_size(d[r]) for r in self.orbit_reps if r in d
        )

    def zero_object(self):
        return ()

    def is_zero_object(self, x):
        return len(x) == 0

    def expand_morphism(self, src, tgt, rep_entries):
        """Morphism from components on pairs whose source point is an orbit
        representative."""
        entries = {}
        src_d = dict(src)
        for (y, r), m in rep_entries:
            if self.base.is_zero_mor(m):
                continue
            for g in self.group.elements():
                g_inv = self.group.inv(g)
                key = (self.space.act(g_inv, y), self.space.act(g_inv, r))
                entries[key] = self.base.act_mor(g_inv, m)
        return Mor(src, tgt, _freeze(entries.items()))

    def hom(self, x, y):
        xd, yd = dict(x), dict(y)
        allowed = (
            self.ambient.mor_condition.allowed_pairs()
            if self.ambient.mor_condition is not None
            else None
        )
        slots = []
        for r in self.orbit_reps:
            if r not in xd:
                continue
            for ys, yv in y:
                if allowed is not None and (ys, r) not in allowed:
                    continue
                slots.append(((ys, r), xd[r], yv))
        slots.sort(key=lambda s: s[0])
        factors = [self.base.hom(xv, yv) for (_, xv, yv) in slots]
        out = []
        for combo in product(*factors):
            entries = [
                (key, m) for (key, _, _), m in zip(slots, combo)
                if not self.base.is_zero_mor(m)
            ]
            out.append(self.expand_morphism(x, y, entries))
        return out

    def zero_hom(self, x, y):
        return Mor(x, y, ())

    def identity(self, x):
        return self.ambient.identity(x)

    def add(self, f, g):
        return self.ambient.add(f, g)

    def neg(self, f):
        return self.ambient.neg(f)

    def compose(self, g, f):
        return self.ambient.compose(g, f)

    def biproduct(self, x, y):
        return self.ambient.biproduct(x, y)

    def obj_label(self, x):
        return self.ambient.obj_label(x)

    def mor_label(self, f):
        return self.ambient.mor_label(f)


# ---------------------------------------------------------------------------
# the comparison functor: families over T into the fixed category over T x G

def orbit_product_space(t):
    """T x G with the diagonal-translation action g'(t, g) = (g't, g'g);
    free because the group factor is."""
    grp = t.group
    size = t.size * grp.order

    def enc(x, g):
        return x * grp.order + g

    table = [
        [
            enc(t.act(gp, x), grp.mul(gp, g))
            for x in t.points()
            for g in grp.elements()
        ]
        for gp in grp.elements()
    ]
    labels = [
        f"({t.label(x)},{grp.label(g)})"
        for x in t.points()
        for g in grp.elements()
    ]
    return GSet(grp, table, labels)


def forget_control_target(base, t, max_rank=None):
    """The fixed controlled category over T x G with components confined to
    equal T-coordinates and finite (G-compact) object supports."""
    space = orbit_product_space(t)
    grp = base.group
    mor_cond = diagonal_pullback_condition(space, lambda p: p // grp.order)
    obj_cond = all_points_condition(space)
    ambient = ControlledCat(base, space, mor_cond, obj_cond,
                            max_rank=max_rank)
    return FixedControlledCat(ambient)


def forget_control_functor(base, t, max_rank=None):
    """A *_G T -> C(T x G)^G with F(A) at (t, gamma) equal to
    (gamma^{-1})*(A_{gamma^{-1}·t}) and the matching component formula."""
    source = StarCategory(base, t, max_rank=max_rank)
    target = forget_control_target(base, t, max_rank=max_rank)
    grp = base.group
    n_g = grp.order

    def enc(x, g):
        return x * n_g + g

    def obj_map(a):
        d = dict(a)
        entries = []
        for x in t.points():
            for gamma in grp.elements():
                gi = grp.inv(gamma)
                v = d.get(t.act(gi, x))
                if v is None:
                    continue
                entries.append((enc(x, gamma), base.act_obj(gi, v)))
        return _freeze(entries)

    def mor_map(f):
        entries = {}
        for (h, u), m in f.data:
            for gamma in grp.elements():
                gi = grp.inv(gamma)
                x = t.act(gamma, u)
                key = (enc(x, grp.mul(gamma, grp.inv(h))), enc(x, gamma))
                val = base.act_mor(gi, m)
                if key in entries:
                    entries[key] = base.add(entries[key], val)
                else:
                    entries[key] = val
        return Mor(obj_map(f.src), obj_map(f.tgt), _freeze(entries.items()))

    return FunctorData(source, target, obj_map, mor_map, name="forget-control")


def fullness_witness_check(base, t, bound=1):
    """The preimage formula: for an invariant f, phi[k, u] = f at the pair
    ((u, k^{-1}), (u, e)) recovers a star morphism with F(phi) = f."""
    functor = forget_control_functor(base, t, max_rank=bound)
    source, target = functor.source, functor.target
    grp = base.group
    n_g = grp.order

    def enc(x, g):
        return x * n_g + g

    fobj = {x: functor.obj_map(x) for x in source.objects(bound)}
    preimage_of_tgt = {}
    for x, fx in fobj.items():
        preimage_of_tgt.setdefault(fx, x)
    for x in source.objects(bound):
        for y in source.objects(bound):
            for f in target.hom(fobj[x], fobj[y]):
                d = dict(f.data)
                entries = []
                for u in t.points():
                    for k in grp.elements():
                        m = d.get((enc(u, grp.inv(k)), enc(u, 0)))
                        if m is not None:
                            entries.append(((k, u), m))
                phi = Mor(x, y, _freeze(entries))
                if functor.mor_map(phi) != f:
                    return CheckResult(
                        "fullness-witness-formula", False,
                        {"f": target.mor_label(f)}, "exhaustive",
                    )
    return CheckResult("fullness-witness-formula", True, None, "exhaustive")


def image_support_check(base, t, bound=1):
    """Image objects satisfy the invariance equations and image morphisms
    the equal-coordinate support condition."""
    functor = forget_control_functor(base, t, max_rank=bound)
    source, target = functor.source, functor.target
    ambient = target.ambient
    grp = base.group
    for x in source.objects(bound):
        fx = functor.obj_map(x)
        if not is_invariant_object(ambient, fx):
            return CheckResult(
                "image-objects-invariant", False,
                {"object": source.obj_label(x)}, "exhaustive",
            )
        if not ambient.obj_condition.admits(p for p, _ in fx):
            return CheckResult(
                "image-objects-invariant", False,
                {"object support": source.obj_label(x)}, "exhaustive",
            )
    for x in source.objects(bound):
        for y in source.objects(bound):
            for f in source.hom(x, y):
                ff = functor.mor_map(f)
                if not is_invariant_morphism(ambient, ff):
                    return CheckResult(
                        "image-morphisms-invariant", False,
                        {"morphism": source.mor_label(f)}, "exhaustive",
                    )
                if not ambient.mor_condition.admits(k for k, _ in ff.data):
                    return CheckResult(
                        "image-morphisms-invariant", False,
                        {"support": source.mor_label(f)}, "exhaustive",
                    )
    return CheckResult("image-morphisms-invariant", True, None, "exhaustive")


def controlled_push_forward(src_cat, dst_cat, point_map):
    """Pushforward along an equivariant map of spaces, with fiber orderings
    transported from orbit representatives so invariant families stay
    invariant."""
    base = src_cat.base
    grp = src_cat.group
    point_map = tuple(point_map)
    src_space, dst_space = src_cat.space, dst_cat.space
    for g in grp.elements():
        for x in src_space.points():
            if point_map[src_space.act(g, x)] != dst_space.act(
                g, point_map[x]
            ):
                raise ValidationError("point map is not equivariant",
                                      witness=(g, x))

    # transported fiber order: order the fiber over gamma·rep by gamma
    # applied to the sorted fiber over the representative
    rep_decomp = {}
    for orb in dst_space.orbits():
        r = orb[0]
        for g in grp.elements():
            rep_decomp[dst_space.act(g, r)] = (g, r)
    fiber_order = {}
    for y in dst_space.points():
        gamma, r = rep_decomp[y]
        rep_fiber = sorted(
            x for x in src_space.points() if point_map[x] == r
        )
        fiber_order[y] = [src_space.act(gamma, x) for x in rep_fiber]

    cache = {}

    def pushed(a):
        if a in cache:
            return cache[a]
        d = dict(a)
        family, injs, projs = [], {}, {}
        for y in dst_space.points():
            pts = [x for x in fiber_order[y] if x in d]
            if not pts:
                continue
            vals = [d[x] for x in pts]
            obj, i_list, p_list = base.biproduct_list(vals)
            if not base.is_zero_object(obj):
                family.append((y, obj))
            injs[y] = dict(zip(pts, i_list))
            projs[y] = dict(zip(pts, p_list))
        out = (_freeze(family), injs, projs)
        cache[a] = out
        return out

    def obj_map(a):
        return pushed(a)[0]

    def mor_map(f):
        src_fam, _, src_projs = pushed(f.src)
        tgt_fam, tgt_injs, _ = pushed(f.tgt)
        acc = {}
        for (y, x), m in f.data:
            py, px = point_map[y], point_map[x]
            term = base.compose(
                tgt_injs[py][y], base.compose(m, src_projs[px][x])
            )
            key = (py, px)
            if key in acc:
                acc[key] = base.add(acc[key], term)
            else:
                acc[key] = term
        return controlled_morphism(dst_cat, src_fam, tgt_fam, acc.items())

    return FunctorData(src_cat, dst_cat, obj_map, mor_map,
                       name="controlled-pushforward")


def naturality_check(base, t_src, t_tgt, point_map, bound=1):
    """The comparison functor commutes with pushing forward along a G-map of
    index sets; with rep-transported fiber orderings and a strictly additive
    base action the square commutes on the nose."""
    f_src = forget_control_functor(base, t_src, max_rank=bound)
    f_tgt = forget_control_functor(base, t_tgt, max_rank=bound)
    star_src, star_tgt = f_src.source, f_tgt.source
    from .star import push_forward

    star_push = push_forward(star_src, star_tgt, point_map)
    grp = base.group
    n_g = grp.order
    prod_map = [
        point_map[p // n_g] * n_g + (p % n_g)
        for p in f_src.target.space.points()
    ]
    ctrl_push = controlled_push_forward(
        f_src.target.ambient, f_tgt.target.ambient, prod_map
    )
    for x in star_src.objects(bound):
        lhs = f_tgt.obj_map(star_push.obj_map(x))
        rhs = ctrl_push.obj_map(f_src.obj_map(x))
        if lhs != rhs:
            return CheckResult(
                "naturality-in-index-set", False,
                {"object": star_src.obj_label(x)}, "exhaustive",
            )
    for x in star_src.objects(bound):
        for y in star_src.objects(bound):
            for f in star_src.hom(x, y):
                lhs = f_tgt.mor_map(star_push.mor_map(f))
                rhs = ctrl_push.mor_map(f_src.mor_map(f))
                if lhs != rhs:
                    return CheckResult(
                        "naturality-in-index-set", False,
                        {"morphism": star_src.mor_label(f)}, "exhaustive",
                    )
    return CheckResult("naturality-in-index-set", True, None, "exhaustive")
