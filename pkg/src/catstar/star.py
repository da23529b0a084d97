"""Twisted family categories over a G-set.

An object is a finitely supported family (A_t) of base objects; a morphism
is a finitely supported family of components phi[g,t]: A_t -> g*(B_{g·t}).
Composition convolves over factorizations:

    (phi' ∘ phi)[g,t] = sum over g = k·h of  h*(phi'[k, h·t]) ∘ phi[h,t]

Zero entries are never stored, so equality of objects and morphisms is
equality of their sorted entry tuples.  Indexing over a biset instead of a
plain G-set equips the construction with a right action of the biset's
right group: (g*A)_s = A_{s·g^{-1}} and (g*phi)[k,s] = phi[k, s·g^{-1}].
"""

from __future__ import annotations

from itertools import product

from .gcategory import AdditiveCategory, Biproduct, GCategory, Mor
from .groups import BiSet, GSet, ValidationError


def _freeze_obj(entries):
    return tuple(sorted(entries))

def _freeze_mor(entries):
    return tuple(sorted(entries))


class StarCategory(GCategory):
    """Finitely supported base-object families over a G-set or biset."""

    def __init__(self, base, index, max_rank=None, name=None):
        self.base = base
        if isinstance(index, BiSet):
            if base.group is not index.left_group:
                raise ValidationError(
                    "biset left group must match the base action group"
                )
            self.index = index
            self.group = index.right_group
            self.acting_group = base.group
            self._act = index.left
            self.point_count = index.size
            self._point_label = index.label
        elif isinstance(index, GSet):
            if base.group is not index.group:
                raise ValidationError(
                    "index set must be a set over the base action group"
                )
            self.index = index
            self.group = None
            self.acting_group = base.group
            self._act = index.act
            self.point_count = index.size
            self._point_label = index.label
        else:
            raise ValidationError("index must be a GSet or BiSet")
        self.max_rank = base.max_rank if max_rank is None else max_rank
        self.name = name or f"{base.name} * T[{self.point_count}]"

    # --- objects ---

    def objects(self, bound=None):
        bound = self.max_rank if bound is None else bound
        nonzero = [
            x for x in self.base.objects(bound)
            if not self.base.is_zero_object(x)
        ]
        by_size = {}
        for x in nonzero:
            by_size.setdefault(self.base.obj_size(x), []).append(x)
        out = []

        def extend(point, budget, acc):
            out.append(_freeze_obj(acc))
            if point >= self.point_count:
                return
            for nxt in range(point, self.point_count):
                for size, xs in sorted(by_size.items()):
                    if size > budget:
                        continue
                    for x in xs:
                        extend(nxt + 1, budget - size, acc + [(nxt, x)])

        extend(0, bound, [])
        # dedupe while preserving first-seen order
        seen = set()
        uniq = []
        for o in out:
            if o not in seen:
                seen.add(o)
                uniq.append(o)
        return uniq

    def obj_size(self, x):
        return sum(self.base.obj_size(v) for _, v in x)

    def zero_object(self):
        return ()

    def is_zero_object(self, x):
        return len(x) == 0

    def entry(self, x, t):
        for point, value in x:
            if point == t:
                return value
        return self.base.zero_object()

    def support(self, x):
        return tuple(t for t, _ in x)

    # --- morphisms ---

    def _slots(self, x, y):
        """The (g, t) pairs where a component can be nonzero, with its
        base hom endpoints."""
        ydict = dict(y)
        slots = []
        for t, xt in x:
            for g in self.acting_group.elements():
                gt = self._act(g, t)
                if gt in ydict:
                    target = self.base.act_obj(g, ydict[gt])
                    if not self.base.is_zero_object(target):
                        slots.append(((g, t), xt, target))
        slots.sort(key=lambda s: s[0])
        return slots

    def hom(self, x, y):
        slots = self._slots(x, y)
        factor_lists = [
            self.base.hom(xt, target) for (_, xt, target) in slots
        ]
        out = []
        for combo in product(*factor_lists):
            entries = [
                (key, m)
                for (key, _, _), m in zip(slots, combo)
                if not self.base.is_zero_mor(m)
            ]
            out.append(Mor(x, y, _freeze_mor(entries)))
        return out

    def zero_hom(self, x, y):
        return Mor(x, y, ())

    def identity(self, x):
        entries = [((0, t), self.base.identity(v)) for t, v in x]
        return Mor(x, x, _freeze_mor(entries))

    def add(self, f, g):
        if f.src != g.src or f.tgt != g.tgt:
            raise ValidationError("star morphism addition endpoint mismatch")
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
        return Mor(f.src, f.tgt, _freeze_mor(acc.items()))

    def neg(self, f):
        return Mor(
            f.src, f.tgt,
            _freeze_mor((key, self.base.neg(m)) for key, m in f.data),
        )

    def compose(self, g, f):
        if f.tgt != g.src:
            raise ValidationError("star composition endpoint mismatch")
        by_point = {}
        for (k, s), m in g.data:
            by_point.setdefault(s, []).append((k, m))
        acc = {}
        grp = self.acting_group
        for (h, t), m1 in f.data:
            ht = self._act(h, t)
            for k, m2 in by_point.get(ht, ()):
                key = (grp.mul(k, h), t)
                term = self.base.compose(self.base.act_mor(h, m2), m1)
                if key in acc:
                    acc[key] = self.base.add(acc[key], term)
                else:
                    acc[key] = term
        entries = [
            (key, m) for key, m in acc.items()
            if not self.base.is_zero_mor(m)
        ]
        return Mor(f.src, g.tgt, _freeze_mor(entries))

    # --- biproducts, entrywise ---

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
                i1e.append(((0, t), bp.inj1))
                p1e.append(((0, t), bp.proj1))
            if t in yd:
                i2e.append(((0, t), bp.inj2))
                p2e.append(((0, t), bp.proj2))
        obj = _freeze_obj(obj_entries)
        return Biproduct(
            obj,
            Mor(x, obj, _freeze_mor(i1e)),
            Mor(y, obj, _freeze_mor(i2e)),
            Mor(obj, x, _freeze_mor(p1e)),
            Mor(obj, y, _freeze_mor(p2e)),
        )

    # --- right action through the biset ---

    def act_obj(self, g, x):
        if self.group is None:
            raise ValidationError("no right action: index is a plain G-set")
        right = self.index.right
        return _freeze_obj((right(s, g), v) for s, v in x)

    def act_mor(self, g, f):
        if self.group is None:
            raise ValidationError("no right action: index is a plain G-set")
        right = self.index.right
        return Mor(
            self.act_obj(g, f.src),
            self.act_obj(g, f.tgt),
            _freeze_mor((((k, right(s, g)), m) for (k, s), m in f.data)),
        )

    # --- labels ---

    def obj_label(self, x):
        if not x:
            return "0"
        return "{" + ", ".join(
            f"{self._point_label(t)}:{self.base.obj_label(v)}" for t, v in x
        ) + "}"

    def mor_label(self, f):
        if not f.data:
            return "0"
        return "{" + ", ".join(
            f"({self.acting_group.label(g)},{self._point_label(t)}):"
            f"{self.base.mor_label(m)}"
            for (g, t), m in f.data
        ) + "}"


def star_object(cat, entries):
    """Build a family object, dropping zero values."""
    return _freeze_obj(
        (t, v) for t, v in entries if not cat.base.is_zero_object(v)
    )


def star_morphism(cat, src, tgt, entries):
    return Mor(
        src, tgt,
        _freeze_mor(
            (key, m) for key, m in entries if not cat.base.is_zero_mor(m)
        ),
    )


def single_component(cat, src, tgt, g, t, m):
    """The morphism with one possibly nonzero component at (g, t)."""
    return star_morphism(cat, src, tgt, [((g, t), m)])


def induced_category(base, hom):
    """Coefficient induction along a homomorphism: the family category over
    the target group viewed as a biset through the homomorphism."""
    from .groups import restriction_biset

    return StarCategory(base, restriction_biset(hom))


def map_category(base_functor, source_star, target_star, validate=True,
                 bound=1):
    """Apply an equivariant additive functor of base categories entrywise.

    If the base functor is an equivalence, so is the induced functor (the
    audit confirms this at desk scale)."""
    if validate:
        from .functors import check_equivariant

        witness = check_equivariant(base_functor, bound=bound)
        if witness is not None:
            raise ValidationError("base functor is not equivariant",
                                  witness=witness)

    from .functors import FunctorData

    def obj_map(x):
        return star_object(
            target_star, ((t, base_functor.obj_map(v)) for t, v in x)
        )

    def mor_map(f):
        return star_morphism(
            target_star, obj_map(f.src), obj_map(f.tgt),
            ((key, base_functor.mor_map(m)) for key, m in f.data),
        )

    return FunctorData(source_star, target_star, obj_map, mor_map,
                       name=f"{base_functor.name}*T")


class _PushedObject:
    __slots__ = ("family", "injs", "projs")

    def __init__(self, family, injs, projs):
        self.family = family
        self.injs = injs    # {target point: {source point: inj}}
        self.projs = projs  # {target point: {source point: proj}}


def push_forward(source_star, target_star, point_map):
    """Cover a G-map of index sets: object entries become the ordered
    biproducts over fibers; morphism components are assembled blockwise
    through the biproduct structure maps, so no strictness of the base
    action is assumed."""
    base = source_star.base
    point_map = tuple(point_map)
    grp = source_star.acting_group
    # equivariance of the point map
    for g in grp.elements():
        for t in range(source_star.point_count):
            if point_map[source_star._act(g, t)] != target_star._act(
                g, point_map[t]
            ):
                raise ValidationError(
                    "point map is not equivariant", witness=(g, t)
                )

    from .functors import FunctorData

    cache = {}

    def pushed(x):
        if x in cache:
            return cache[x]
        fibers = {}
        for t, v in x:
            fibers.setdefault(point_map[t], []).append((t, v))
        family, injs, projs = [], {}, {}
        for tp in sorted(fibers):
            pts = [t for t, _ in fibers[tp]]
            vals = [v for _, v in fibers[tp]]
            obj, i_list, p_list = base.biproduct_list(vals)
            if not base.is_zero_object(obj):
                family.append((tp, obj))
            injs[tp] = dict(zip(pts, i_list))
            projs[tp] = dict(zip(pts, p_list))
        out = _PushedObject(_freeze_obj(family), injs, projs)
        cache[x] = out
        return out

    def obj_map(x):
        return pushed(x).family

    def mor_map(f):
        px, py = pushed(f.src), pushed(f.tgt)
        acc = {}
        for (g, t), m in f.data:
            tp = point_map[t]
            gt = source_star._act(g, t)
            gtp = point_map[gt]
            inj = py.injs[gtp][gt]
            proj = px.projs[tp][t]
            term = base.compose(
                base.act_mor(g, inj), base.compose(m, proj)
            )
            key = (g, tp)
            if key in acc:
                acc[key] = base.add(acc[key], term)
            else:
                acc[key] = term
        return star_morphism(
            target_star, px.family, py.family, acc.items()
        )

    return FunctorData(source_star, target_star, obj_map, mor_map,
                       name="pushforward")
