"""Functor values and the audit toolkit.

An audit decides, over the bounded object universes, whether a functor is
additive, functorial, full, faithful and essentially surjective; a functor
passing all five on an exhaustive run is an equivalence of the bounded
categories.  Verdicts carry witnesses and the enumeration mode, and are
deterministic for a fixed (seed, bound).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gcategory import CheckResult, iso_pair
from .groups import ValidationError


@dataclass
class FunctorData:
    source: object
    target: object
    obj_map: object
    mor_map: object
    name: str = "F"

    def __call__(self, x):
        return self.obj_map(x)

    def apply(self, f):
        return self.mor_map(f)


def identity_functor(cat, name=None):
    return FunctorData(cat, cat, lambda x: x, lambda f: f,
                       name=name or f"id[{cat.name}]")


def compose_functors(outer, inner, name=None):
    if inner.target is not outer.source:
        # composing across equal-but-distinct wrappers is allowed; the audit
        # will catch genuine mismatches
        pass
    return FunctorData(
        inner.source,
        outer.target,
        lambda x: outer.obj_map(inner.obj_map(x)),
        lambda f: outer.mor_map(inner.mor_map(f)),
        name=name or f"{outer.name}∘{inner.name}",
    )


@dataclass
class Verdict:
    ok: bool
    witness: object = None
    mode: str = "exhaustive"


@dataclass
class FunctorAudit:
    functor: str
    bound: int
    additive: Verdict = None
    functorial: Verdict = None
    full: Verdict = None
    faithful: Verdict = None
    essentially_surjective: Verdict = None
    object_bijective: Verdict = None
    hom_bijective: Verdict = None

    @property
    def is_equivalence(self):
        parts = (self.additive, self.functorial, self.full, self.faithful,
                 self.essentially_surjective)
        return all(v is not None and v.ok for v in parts)

    @property
    def is_isomorphism(self):
        return (
            self.is_equivalence
            and self.object_bijective is not None
            and self.object_bijective.ok
            and self.hom_bijective is not None
            and self.hom_bijective.ok
        )

    def verdicts(self):
        out = {}
        for key in ("additive", "functorial", "full", "faithful",
                    "essentially_surjective", "object_bijective",
                    "hom_bijective"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v
        return out

    def check_results(self, prefix=""):
        return [
            CheckResult(f"{prefix}{key.replace('_', '-')}", v.ok, v.witness,
                        v.mode)
            for key, v in self.verdicts().items()
        ]


def _cap(items, cap, rng):
    if len(items) <= cap:
        return items, "exhaustive"
    return [items[rng.randrange(len(items))] for _ in range(cap)], "sampled"


def audit_functor(functor, bound=1, seed=0, check_isomorphism=False,
                  hom_cap=64, triple_cap=4096):
    """Run the full audit over both bounded universes."""
    src, tgt = functor.source, functor.target
    rng = random.Random(seed)
    src_objs = src.objects(bound)
    tgt_objs = tgt.objects(bound)
    audit = FunctorAudit(functor=functor.name, bound=bound)

    fobj = {}
    for x in src_objs:
        fobj[x] = functor.obj_map(x)

    def hom_sample(cat, x, y):
        return _cap(cat.hom(x, y), hom_cap, rng)

    # additive: preserves zero morphisms and addition on hom groups
    def additive():
        mode = "exhaustive"
        for x in src_objs:
            for y in src_objs:
                fs, m = hom_sample(src, x, y)
                mode = m if m == "sampled" else mode
                zf = functor.mor_map(src.zero_hom(x, y))
                if not tgt.is_zero_mor(zf):
                    return Verdict(False, ("zero", src.obj_label(x),
                                           src.obj_label(y)), mode)
                for f in fs:
                    for g in fs[:8]:
                        lhs = functor.mor_map(src.add(f, g))
                        rhs = tgt.add(functor.mor_map(f), functor.mor_map(g))
                        if lhs != rhs:
                            return Verdict(
                                False,
                                ("addition", src.mor_label(f), src.mor_label(g)),
                                mode,
                            )
        return Verdict(True, None, mode)

    def functorial():
        mode = "exhaustive"
        for x in src_objs:
            fid = functor.mor_map(src.identity(x))
            if fid != tgt.identity(fobj[x]):
                return Verdict(False, ("identity", src.obj_label(x)), mode)
        triples = [
            (x, y, z) for x in src_objs for y in src_objs for z in src_objs
        ]
        if len(triples) > 64:
            triples, mode = _cap(triples, 64, rng)
        count = 0
        for x, y, z in triples:
            fs, m1 = hom_sample(src, x, y)
            gs, m2 = hom_sample(src, y, z)
            if "sampled" in (m1, m2):
                mode = "sampled"
            for f in fs:
                for g in gs:
                    count += 1
                    if count > triple_cap:
                        return Verdict(True, None, "sampled")
                    lhs = functor.mor_map(src.compose(g, f))
                    rhs = tgt.compose(functor.mor_map(g), functor.mor_map(f))
                    if lhs != rhs:
                        return Verdict(
                            False,
                            ("composition", src.mor_label(f), src.mor_label(g)),
                            mode,
                        )
        return Verdict(True, None, mode)

    def fullness_and_faithfulness():
        full_mode = "exhaustive"
        for x in src_objs:
            for y in src_objs:
                homs = src.hom(x, y)
                image = [functor.mor_map(f) for f in homs]
                image_set = set(image)
                if len(image_set) != len(homs):
                    seen = {}
                    for f, ff in zip(homs, image):
                        if ff in seen:
                            return (
                                Verdict(True, None, full_mode),
                                Verdict(False, (
                                    "collision",
                                    src.mor_label(seen[ff]),
                                    src.mor_label(f),
                                ), "exhaustive"),
                                False,
                            )
                        seen[ff] = f
                target_homs = tgt.hom(fobj[x], fobj[y])
                for h in target_homs:
                    if h not in image_set:
                        return (
                            Verdict(False, (
                                "no preimage",
                                src.obj_label(x), src.obj_label(y),
                                tgt.mor_label(h),
                            ), full_mode),
                            Verdict(True, None, "exhaustive"),
                            False,
                        )
        return (Verdict(True, None, full_mode),
                Verdict(True, None, "exhaustive"), True)

    def essential_surjectivity():
        image_objs = [fobj[x] for x in src_objs]
        for z in tgt_objs:
            found = False
            if z in image_objs:
                found = True
            else:
                for w in image_objs:
                    if iso_pair(tgt, z, w) is not None:
                        found = True
                        break
            if not found:
                return Verdict(False, ("no image object", tgt.obj_label(z)),
                               "exhaustive")
        return Verdict(True, None, "exhaustive")

    audit.additive = additive()
    audit.functorial = functorial()
    audit.full, audit.faithful, _ = fullness_and_faithfulness()
    audit.essentially_surjective = essential_surjectivity()

    if check_isomorphism:
        values = [fobj[x] for x in src_objs]
        ok = len(set(values)) == len(values) and set(values) == set(tgt_objs)
        audit.object_bijective = Verdict(
            ok, None if ok else ("object map is not a bijection",),
            "exhaustive",
        )
        hom_ok = Verdict(True, None, "exhaustive")
        for x in src_objs:
            for y in src_objs:
                homs = src.hom(x, y)
                image = {functor.mor_map(f) for f in homs}
                target_homs = set(tgt.hom(fobj[x], fobj[y]))
                if image != target_homs or len(image) != len(homs):
                    hom_ok = Verdict(
                        False, ("hom map not bijective", src.obj_label(x),
                                src.obj_label(y)), "exhaustive",
                    )
        audit.hom_bijective = hom_ok
    return audit


def check_equivariant(functor, bound=1, seed=0, hom_cap=32):
    """For a functor between categories with the same acting group: does it
    strictly commute with every g*?  Returns a witness or None."""
    src, tgt = functor.source, functor.target
    rng = random.Random(seed)
    group = src.group
    objs = src.objects(bound)
    for g in group.elements():
        for x in objs:
            lhs = functor.obj_map(src.act_obj(g, x))
            rhs = tgt.act_obj(g, functor.obj_map(x))
            if lhs != rhs:
                return ("object", group.label(g), src.obj_label(x))
    for g in group.elements():
        for x in objs:
            for y in objs:
                fs, _ = _cap(src.hom(x, y), hom_cap, rng)
                for f in fs:
                    lhs = functor.mor_map(src.act_mor(g, f))
                    rhs = tgt.act_mor(g, functor.mor_map(f))
                    if lhs != rhs:
                        return ("morphism", group.label(g), src.mor_label(f))
    return None


def check_natural_isomorphism(f1, f2, components, bound=1, seed=0, hom_cap=32):
    """Check that `components[x]` is an isomorphism F1(x) -> F2(x) natural in
    x over the bounded source universe."""
    src = f1.source
    tgt = f1.target
    rng = random.Random(seed)
    objs = src.objects(bound)
    for x in objs:
        eta = components(x)
        if _find_inverse(tgt, eta) is None:
            return ("component not invertible", src.obj_label(x))
    for x in objs:
        for y in objs:
            fs, _ = _cap(src.hom(x, y), hom_cap, rng)
            for f in fs:
                lhs = tgt.compose(components(y), f1.mor_map(f))
                rhs = tgt.compose(f2.mor_map(f), components(x))
                if lhs != rhs:
                    return ("naturality square", src.mor_label(f))
    return None


def _find_inverse(cat, f):
    for g in cat.hom(f.tgt, f.src):
        if (cat.compose(g, f) == cat.identity(f.src)
                and cat.compose(f, g) == cat.identity(f.tgt)):
            return g
    return None


def permutation_sum_iso(cat, src_obj, src_projs, tgt_obj, tgt_injs, matching):
    """The canonical isomorphism between two ordered biproducts of the same
    atoms: sum of inj[matching[i]] ∘ proj[i]."""
    if len(src_projs) != len(tgt_injs):
        raise ValidationError("permutation iso needs equal atom counts")
    terms = [
        cat.compose(tgt_injs[matching[i]], src_projs[i])
        for i in range(len(src_projs))
    ]
    return cat.sum_morphisms(terms, src=src_obj, tgt=tgt_obj)
