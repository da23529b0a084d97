"""Additive categories with a right group action.

A right action assigns to every group element g an additive endofunctor g*
with 1* = id and g* ∘ h* = (hg)*.  Morphisms are immutable `Mor` values
(source, target, payload) interpreted by their category; equality is value
equality of the normalized payload, which makes hom-set membership decidable.

Concrete instances:
  * TrivialRingCat   -- free modules over a ring, every g* the identity
  * TwistedModuleCat -- free modules twisted by ring automorphisms,
                        g* restricts scalars along alpha(g)
  * RigidCrossedCat  -- pairs (module, group element) over crossed-product
                        data, with the action rigidified by cocycle units
"""

from __future__ import annotations

import random
from collections import namedtuple
from dataclasses import dataclass
from itertools import product

from .groups import ValidationError
from .rings import (
    ENUM_LIMIT,
    compose_automorphisms,
    enumerate_matrices,
    identity_automorphism,
    mat_add,
    mat_identity,
    mat_label,
    mat_map,
    mat_mul,
    mat_neg,
    mat_scale_left,
    mat_zero,
)


@dataclass(frozen=True)
class Mor:
    src: object
    tgt: object
    data: object

    def __repr__(self):
        return f"Mor({self.src}->{self.tgt}: {self.data})"


Biproduct = namedtuple("Biproduct", "obj inj1 inj2 proj1 proj2")

CheckResult = namedtuple("CheckResult", "name ok witness mode")


class AdditiveCategory:
    """Interface for a finite-scale additive category.

    `objects(bound)` enumerates a deterministic bounded universe; hom(X, Y)
    enumerates the full finite abelian group of morphisms.
    """

    name = "additive"
    max_rank = 3

    def objects(self, bound=None):
        raise NotImplementedError

    def obj_size(self, x):
        raise NotImplementedError

    def zero_object(self):
        raise NotImplementedError

    def is_zero_object(self, x):
        return self.obj_size(x) == 0

    def biproduct(self, x, y):
        raise NotImplementedError

    def hom(self, x, y):
        raise NotImplementedError

    def zero_hom(self, x, y):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def add(self, f, g):
        raise NotImplementedError

    def neg(self, f):
        raise NotImplementedError

    def compose(self, g, f):
        """g ∘ f; f is applied first."""
        raise NotImplementedError

    def is_zero_mor(self, f):
        return f == self.zero_hom(f.src, f.tgt)

    def obj_label(self, x):
        return str(x)

    def mor_label(self, f):
        return repr(f.data)

    # n-ary ordered biproduct, folded left; returns (object, injections,
    # projections) aligned with the input list.
    def biproduct_list(self, objs):
        if not objs:
            z = self.zero_object()
            return z, [], []
        total = objs[0]
        injs = [self.identity(objs[0])]
        projs = [self.identity(objs[0])]
        for x in objs[1:]:
            bp = self.biproduct(total, x)
            injs = [self.compose(bp.inj1, i) for i in injs]
            projs = [self.compose(p, bp.proj1) for p in projs]
            injs.append(bp.inj2)
            projs.append(bp.proj2)
            total = bp.obj
        return total, injs, projs

    def sum_morphisms(self, fs, src=None, tgt=None):
        if not fs:
            return self.zero_hom(src, tgt)
        out = fs[0]
        for f in fs[1:]:
            out = self.add(out, f)
        return out


class GCategory(AdditiveCategory):
    """Additive category with a right action of `group`."""

    group = None

    def act_obj(self, g, x):
        raise NotImplementedError

    def act_mor(self, g, f):
        raise NotImplementedError


def iso_pair(cat, x, y):
    """Search hom(x,y) x hom(y,x) for a mutually inverse pair."""
    idx, idy = cat.identity(x), cat.identity(y)
    homs_xy = cat.hom(x, y)
    homs_yx = cat.hom(y, x)
    for f in homs_xy:
        for g in homs_yx:
            if cat.compose(g, f) == idx and cat.compose(f, g) == idy:
                return f, g
    return None


# ---------------------------------------------------------------------------
# concrete instance: trivial action on free modules over a ring

class TrivialRingCat(GCategory):
    """Objects are ranks; hom(m, n) is all m x n matrices over the ring
    (row-vector convention); every g* is the identity functor."""

    def __init__(self, ring, group, max_rank=3, name=None):
        self.ring = ring
        self.group = group
        self.max_rank = max_rank
        self.name = name or f"{ring.name}-free[{group.name} trivial]"

    def objects(self, bound=None):
        bound = self.max_rank if bound is None else bound
        return list(range(bound + 1))

    def obj_size(self, x):
        return x

    def zero_object(self):
        return 0

    def biproduct(self, x, y):
        ring = self.ring
        obj = x + y
        i1 = Mor(x, obj, _block_row(ring, x, y, first=True))
        i2 = Mor(y, obj, _block_row(ring, x, y, first=False))
        p1 = Mor(obj, x, _block_col(ring, x, y, first=True))
        p2 = Mor(obj, y, _block_col(ring, x, y, first=False))
        return Biproduct(obj, i1, i2, p1, p2)

    def hom(self, x, y):
        return [Mor(x, y, m) for m in enumerate_matrices(self.ring, x, y)]

    def zero_hom(self, x, y):
        return Mor(x, y, mat_zero(self.ring, x, y))

    def identity(self, x):
        return Mor(x, x, mat_identity(self.ring, x))

    def add(self, f, g):
        _same_endpoints(f, g)
        return Mor(f.src, f.tgt, mat_add(self.ring, f.data, g.data))

    def neg(self, f):
        return Mor(f.src, f.tgt, mat_neg(self.ring, f.data))

    def compose(self, g, f):
        _composable(g, f)
        return Mor(f.src, g.tgt, mat_mul(self.ring, f.data, g.data, cols=g.tgt))

    def act_obj(self, g, x):
        return x

    def act_mor(self, g, f):
        return f

    def mor_label(self, f):
        return mat_label(self.ring, f.data)


def _block_row(ring, m, n, first):
    # inj: rank->rank m+n as an (m or n) x (m+n) matrix
    if first:
        return tuple(
            tuple(ring.one if j == i else ring.zero for j in range(m + n))
            for i in range(m)
        )
    return tuple(
        tuple(ring.one if j == m + i else ring.zero for j in range(m + n))
        for i in range(n)
    )


def _block_col(ring, m, n, first):
    if first:
        return tuple(
            tuple(ring.one if j == i else ring.zero for j in range(m))
            for i in range(m + n)
        )
    return tuple(
        tuple(ring.one if i == m + j else ring.zero for j in range(n))
        for i in range(m + n)
    )


def _same_endpoints(f, g):
    if f.src != g.src or f.tgt != g.tgt:
        raise ValidationError("morphism addition endpoint mismatch")


def _composable(g, f):
    if f.tgt != g.src:
        raise ValidationError(
            "composition endpoint mismatch", witness=(f.tgt, g.src)
        )


# ---------------------------------------------------------------------------
# concrete instance: restriction of scalars along ring automorphisms

class TwistedModuleCat(GCategory):
    """Small model of twisted free modules.

    An object is a tuple of twist indices, one per basis line: the formal sum
    of the lines res_phi(R).  g* post-composes every twist with alpha(g), so
    the model is closed under the action and under biproducts.  A morphism
    X -> Y is a matrix over R evaluated with the entrywise twists
    psi_j ∘ phi_i^{-1}.
    """

    def __init__(self, ring, group, alpha, max_rank=3, name=None):
        if len(alpha) != group.order:
            raise ValidationError("alpha must assign an automorphism to each g")
        self.ring = ring
        self.group = group
        self.alpha = tuple(alpha)
        self.max_rank = max_rank
        self.name = name or f"{ring.name}-twisted[{group.name}]"
        self.twists = self._twist_closure()
        self._twist_idx = {t.perm: i for i, t in enumerate(self.twists)}

    def _twist_closure(self):
        seen = {}
        order = []

        def push(a):
            if a.perm not in seen:
                seen[a.perm] = a
                order.append(a)

        push(identity_automorphism(self.ring))
        for a in self.alpha:
            push(a)
        frontier = list(order)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(order):
                    for c in (compose_automorphisms(a, b),
                              compose_automorphisms(b, a)):
                        if c.perm not in seen:
                            push(c)
                            nxt.append(c)
            frontier = nxt
        return tuple(order)

    def twist_index(self, autom):
        i = self._twist_idx.get(autom.perm)
        if i is None:
            raise ValidationError("twist not in the generated closure")
        return i

    def objects(self, bound=None):
        bound = self.max_rank if bound is None else bound
        out = [()]
        for rank in range(1, bound + 1):
            out.extend(product(range(len(self.twists)), repeat=rank))
        return out

    def obj_size(self, x):
        return len(x)

    def zero_object(self):
        return ()

    def biproduct(self, x, y):
        ring = self.ring
        m, n = len(x), len(y)
        obj = x + y
        i1 = Mor(x, obj, _block_row(ring, m, n, True))
        i2 = Mor(y, obj, _block_row(ring, m, n, False))
        p1 = Mor(obj, x, _block_col(ring, m, n, True))
        p2 = Mor(obj, y, _block_col(ring, m, n, False))
        return Biproduct(obj, i1, i2, p1, p2)

    def hom(self, x, y):
        return [
            Mor(x, y, m) for m in enumerate_matrices(self.ring, len(x), len(y))
        ]

    def zero_hom(self, x, y):
        return Mor(x, y, mat_zero(self.ring, len(x), len(y)))

    def identity(self, x):
        return Mor(x, x, mat_identity(self.ring, len(x)))

    def add(self, f, g):
        _same_endpoints(f, g)
        return Mor(f.src, f.tgt, mat_add(self.ring, f.data, g.data))

    def neg(self, f):
        return Mor(f.src, f.tgt, mat_neg(self.ring, f.data))

    def compose(self, g, f):
        # c_ik = sum_j chi_k(psi_j^{-1}(a_ij)) · b_jk  with psi the middle
        # twists and chi the target twists
        _composable(g, f)
        ring = self.ring
        x, y, z = f.src, f.tgt, g.tgt
        a, b = f.data, g.data
        mid_inv = [self.twists[j].inverse_perm for j in y]
        tgt = [self.twists[k] for k in z]
        rows = []
        for i in range(len(x)):
            row = []
            for k in range(len(z)):
                chi = tgt[k]
                acc = ring.zero
                for j in range(len(y)):
                    twisted = chi(mid_inv[j][a[i][j]])
                    acc = ring.add(acc, ring.mul(twisted, b[j][k]))
                row.append(acc)
            rows.append(tuple(row))
        return Mor(x, z, tuple(rows))

    def evaluate(self, f, v):
        """Apply the semilinear map to a row vector, entrywise twists."""
        ring = self.ring
        x, y = f.src, f.tgt
        src_inv = [self.twists[i].inverse_perm for i in x]
        tgt_tw = [self.twists[j] for j in y]
        out = []
        for j in range(len(y)):
            acc = ring.zero
            for i in range(len(x)):
                s = tgt_tw[j](src_inv[i][v[i]])
                acc = ring.add(acc, ring.mul(s, f.data[i][j]))
            out.append(acc)
        return tuple(out)

    def act_obj(self, g, x):
        a = self.alpha[g]
        return tuple(
            self.twist_index(compose_automorphisms(self.twists[i], a))
            for i in x
        )

    def act_mor(self, g, f):
        return Mor(self.act_obj(g, f.src), self.act_obj(g, f.tgt), f.data)

    def mor_label(self, f):
        return mat_label(self.ring, f.data)


# ---------------------------------------------------------------------------
# concrete instance: rigidified crossed-product modules

class RigidCrossedCat(GCategory):
    """Objects are pairs (rank, g); hom((m,g),(n,h)) is the linear maps
    between the alpha_g- and alpha_h-twisted free modules, stored as m x n
    matrices (the implicit twist alpha_h ∘ alpha_g^{-1} is determined by the
    endpoints).  gamma acts by (m,g) -> (m, g·gamma) and conjugates morphisms
    by the left-multiplication units L_tau.
    """

    def __init__(self, data, max_rank=3, strict_biproducts=False, name=None):
        self.data = data
        self.ring = data.ring
        self.group = data.group
        self.max_rank = max_rank
        self.strict_biproducts = strict_biproducts
        self.name = name or f"crossed-pairs[{data.name}]"

    def objects(self, bound=None):
        bound = self.max_rank if bound is None else bound
        out = [(0, 0)]
        for rank in range(1, bound + 1):
            for g in self.group.elements():
                out.append((rank, g))
        return out

    def obj_size(self, x):
        return x[0]

    def zero_object(self):
        return (0, 0)

    def is_zero_object(self, x):
        return x[0] == 0

    def hom(self, x, y):
        return [
            Mor(x, y, m) for m in enumerate_matrices(self.ring, x[0], y[0])
        ]

    def zero_hom(self, x, y):
        return Mor(x, y, mat_zero(self.ring, x[0], y[0]))

    def identity(self, x):
        return Mor(x, x, mat_identity(self.ring, x[0]))

    def add(self, f, g):
        _same_endpoints(f, g)
        return Mor(f.src, f.tgt, mat_add(self.ring, f.data, g.data))

    def neg(self, f):
        return Mor(f.src, f.tgt, mat_neg(self.ring, f.data))

    def _twist(self, g, h):
        """alpha_h ∘ alpha_g^{-1}, the evaluation twist of hom((.,g),(.,h))."""
        return compose_automorphisms(
            self.data.alpha[h], self.data.alpha[g].inverse()
        )

    def compose(self, g, f):
        _composable(g, f)
        chi = self._twist(f.tgt[1], g.tgt[1])
        return Mor(
            f.src, g.tgt,
            mat_mul(self.ring, mat_map(chi, f.data), g.data, cols=g.tgt[0]),
        )

    def evaluate(self, f, v):
        chi = self._twist(f.src[1], f.tgt[1])
        from .rings import vec_mat

        return vec_mat(
            self.ring, tuple(chi(x) for x in v), f.data, cols=f.tgt[0]
        )

    def act_obj(self, gamma, x):
        rank, g = x
        return (rank, self.group.mul(g, gamma))

    def act_mor(self, gamma, f):
        # gamma* f = L_{tau(h,gamma)}^{-1} ∘ f ∘ L_{tau(g,gamma)}, realized as
        # the left scalar tau(h,gamma)^{-1} · chi(tau(g,gamma)) on the matrix
        ring = self.ring
        g, h = f.src[1], f.tgt[1]
        chi = self._twist(g, h)
        u = ring.mul(
            ring.unit_inverse(self.data.tau[h][gamma]),
            chi(self.data.tau[g][gamma]),
        )
        return Mor(
            self.act_obj(gamma, f.src),
            self.act_obj(gamma, f.tgt),
            mat_scale_left(ring, u, f.data),
        )

    def iso_to_identity_index(self, x):
        """The chosen isomorphism (m, g) ≅ (m, e) and its inverse."""
        rank, g = x
        ident = mat_identity(self.ring, rank)
        fwd = Mor(x, (rank, 0), ident)
        back = Mor((rank, 0), x, ident)
        return fwd, back

    def biproduct(self, x, y):
        ring = self.ring
        if x[1] == y[1] or self.is_zero_object(x) or self.is_zero_object(y):
            idx = y[1] if self.is_zero_object(x) else x[1]
            m, n = x[0], y[0]
            obj = (m + n, idx)
            i1 = Mor(x, obj, _block_row(ring, m, n, True))
            i2 = Mor(y, obj, _block_row(ring, m, n, False))
            p1 = Mor(obj, x, _block_col(ring, m, n, True))
            p2 = Mor(obj, y, _block_col(ring, m, n, False))
            return Biproduct(obj, i1, i2, p1, p2)
        if self.strict_biproducts:
            raise ValidationError(
                "mixed group indices in strict biproduct mode",
                witness=(x, y),
            )
        fx, bx = self.iso_to_identity_index(x)
        fy, by = self.iso_to_identity_index(y)
        inner = self.biproduct(fx.tgt, fy.tgt)
        return Biproduct(
            inner.obj,
            self.compose(inner.inj1, fx),
            self.compose(inner.inj2, fy),
            self.compose(bx, inner.proj1),
            self.compose(by, inner.proj2),
        )

    def obj_label(self, x):
        return f"(R^{x[0]},{self.group.label(x[1])})"

    def mor_label(self, f):
        return mat_label(self.ring, f.data)


# ---------------------------------------------------------------------------
# action wrappers

class PullbackActionCategory(GCategory):
    """The same category with the action pulled back along a homomorphism
    (restriction to a subgroup is the case of an inclusion)."""

    def __init__(self, base, via, name=None):
        self.base = base
        self.via = via
        self.group = via.source
        self.max_rank = base.max_rank
        self.name = name or f"{base.name} via {via.source.name}"

    def objects(self, bound=None):
        return self.base.objects(bound)

    def obj_size(self, x):
        return self.base.obj_size(x)

    def zero_object(self):
        return self.base.zero_object()

    def is_zero_object(self, x):
        return self.base.is_zero_object(x)

    def biproduct(self, x, y):
        return self.base.biproduct(x, y)

    def hom(self, x, y):
        return self.base.hom(x, y)

    def zero_hom(self, x, y):
        return self.base.zero_hom(x, y)

    def identity(self, x):
        return self.base.identity(x)

    def add(self, f, g):
        return self.base.add(f, g)

    def neg(self, f):
        return self.base.neg(f)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def act_obj(self, g, x):
        return self.base.act_obj(self.via(g), x)

    def act_mor(self, g, f):
        return self.base.act_mor(self.via(g), f)

    def obj_label(self, x):
        return self.base.obj_label(x)

    def mor_label(self, f):
        return self.base.mor_label(f)


class QuotientActionCategory(PullbackActionCategory):
    """A category on which a normal subgroup acts trivially, reread as a
    category with an action of the quotient through chosen representatives."""

    def __init__(self, base, quotient, section, name=None):
        self.base = base
        self.group = quotient
        self.section = tuple(section)
        self.max_rank = base.max_rank
        self.name = name or f"{base.name}//{quotient.name}"

    def act_obj(self, q, x):
        return self.base.act_obj(self.section[q], x)

    def act_mor(self, q, f):
        return self.base.act_mor(self.section[q], f)


def validate_trivial_action(cat, subgroup_elements, bound=1):
    """Check that every listed element acts as the identity on the bounded
    universe and its hom-sets; returns a witness or None."""
    objs = cat.objects(bound)
    for n in subgroup_elements:
        for x in objs:
            if cat.act_obj(n, x) != x:
                return ("object moved", n, x)
        for x in objs:
            for y in objs:
                for f in cat.hom(x, y):
                    if cat.act_mor(n, f) != f:
                        return ("morphism moved", n, f)
    return None


class FullSubcategory(AdditiveCategory):
    """Full subcategory on the objects passing a predicate."""

    def __init__(self, base, obj_filter, name=None):
        self.base = base
        self.obj_filter = obj_filter
        self.max_rank = base.max_rank
        self.name = name or f"{base.name}|sub"

    def objects(self, bound=None):
        return [x for x in self.base.objects(bound) if self.obj_filter(x)]

    def obj_size(self, x):
        return self.base.obj_size(x)

    def zero_object(self):
        z = self.base.zero_object()
        if not self.obj_filter(z):
            raise ValidationError("subcategory does not contain zero")
        return z

    def is_zero_object(self, x):
        return self.base.is_zero_object(x)

    def biproduct(self, x, y):
        bp = self.base.biproduct(x, y)
        if not self.obj_filter(bp.obj):
            raise ValidationError("subcategory not closed under biproducts")
        return bp

    def hom(self, x, y):
        return self.base.hom(x, y)

    def zero_hom(self, x, y):
        return self.base.zero_hom(x, y)

    def identity(self, x):
        return self.base.identity(x)

    def add(self, f, g):
        return self.base.add(f, g)

    def neg(self, f):
        return self.base.neg(f)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def obj_label(self, x):
        return self.base.obj_label(x)

    def mor_label(self, f):
        return self.base.mor_label(f)


# ---------------------------------------------------------------------------
# axiom checks

def _capped_pairs(objs, limit, rng):
    pairs = [(x, y) for x in objs for y in objs]
    if len(pairs) <= limit:
        return pairs, "exhaustive"
    return [pairs[rng.randrange(len(pairs))] for _ in range(limit)], "sampled"


def check_additive_category(cat, bound=None, seed=0, hom_cap=ENUM_LIMIT):
    """Abelian hom-groups, bilinear composition, unit laws and biproduct
    identities over the bounded universe.  Returns CheckResults."""
    rng = random.Random(seed)
    objs = cat.objects(bound)
    results = []

    def run(name, fn):
        try:
            witness = fn()
        except ValidationError as err:
            witness = (str(err), err.witness)
        results.append(CheckResult(name, witness is None, witness, "exhaustive"))

    def hom_sample(x, y):
        homs = cat.hom(x, y)
        if len(homs) > 64:
            homs = [homs[rng.randrange(len(homs))] for _ in range(64)]
        return homs

    def abelian():
        for x in objs:
            for y in objs:
                homs = hom_sample(x, y)
                z = cat.zero_hom(x, y)
                for f in homs:
                    if cat.add(f, z) != f:
                        return ("zero law", cat.mor_label(f))
                    if cat.add(f, cat.neg(f)) != z:
                        return ("negation", cat.mor_label(f))
                    for g in homs:
                        if cat.add(f, g) != cat.add(g, f):
                            return ("commutativity", f, g)
        return None

    def units():
        for x in objs:
            for y in objs:
                for f in hom_sample(x, y):
                    if cat.compose(f, cat.identity(x)) != f:
                        return ("right unit", f)
                    if cat.compose(cat.identity(y), f) != f:
                        return ("left unit", f)
        return None

    def bilinear():
        for x in objs:
            for y in objs:
                for z in objs:
                    fs = hom_sample(x, y)[:4]
                    gs = hom_sample(y, z)[:4]
                    for f1 in fs:
                        for f2 in fs:
                            for g in gs:
                                lhs = cat.compose(g, cat.add(f1, f2))
                                rhs = cat.add(
                                    cat.compose(g, f1), cat.compose(g, f2)
                                )
                                if lhs != rhs:
                                    return ("right bilinearity", f1, f2, g)
                    for g1 in gs:
                        for g2 in gs:
                            for f in fs[:2]:
                                lhs = cat.compose(cat.add(g1, g2), f)
                                rhs = cat.add(
                                    cat.compose(g1, f), cat.compose(g2, f)
                                )
                                if lhs != rhs:
                                    return ("left bilinearity", g1, g2, f)
        return None

    def associative():
        quads = [
            (w, x, y, z) for w in objs for x in objs for y in objs for z in objs
        ]
        if len(quads) > 256:
            quads = [quads[rng.randrange(len(quads))] for _ in range(256)]
        for w, x, y, z in quads:
            fs = hom_sample(w, x)[:3]
            gs = hom_sample(x, y)[:3]
            hs = hom_sample(y, z)[:3]
            for f in fs:
                for g in gs:
                    for h in hs:
                        lhs = cat.compose(cat.compose(h, g), f)
                        rhs = cat.compose(h, cat.compose(g, f))
                        if lhs != rhs:
                            return ("associativity", f, g, h)
        return None

    def biproducts():
        for x in objs:
            for y in objs:
                bp = cat.biproduct(x, y)
                if cat.compose(bp.proj1, bp.inj1) != cat.identity(x):
                    return ("p1 i1 != id", x, y)
                if cat.compose(bp.proj2, bp.inj2) != cat.identity(y):
                    return ("p2 i2 != id", x, y)
                mixed = cat.add(
                    cat.compose(bp.inj1, bp.proj1),
                    cat.compose(bp.inj2, bp.proj2),
                )
                if mixed != cat.identity(bp.obj):
                    return ("i1p1 + i2p2 != id", x, y)
        return None

    run("hom-abelian-group", abelian)
    run("identity-units", units)
    run("composition-bilinear", bilinear)
    run("composition-associative", associative)
    run("biproduct-identities", biproducts)
    return results


def verify_g_action(cat, bound=None, seed=0, hom_cap=64):
    """Action axioms for a category with group action: 1* = id,
    g* ∘ h* = (hg)*, and additivity/functoriality of every g*.
    Failures are reported with witnesses, not raised."""
    rng = random.Random(seed)
    group = cat.group
    objs = cat.objects(bound)
    results = []

    def hom_sample(x, y):
        homs = cat.hom(x, y)
        if len(homs) > hom_cap:
            homs = [homs[rng.randrange(len(homs))] for _ in range(hom_cap)]
        return homs

    mor_pool = []
    for x in objs:
        for y in objs:
            mor_pool.extend(hom_sample(x, y)[:8])

    def unit_action():
        for x in objs:
            if cat.act_obj(0, x) != x:
                return ("object", cat.obj_label(x))
        for f in mor_pool:
            if cat.act_mor(0, f) != f:
                return ("morphism", cat.mor_label(f))
        return None

    def composition():
        for g in group.elements():
            for h in group.elements():
                hg = group.mul(h, g)
                for x in objs:
                    lhs = cat.act_obj(g, cat.act_obj(h, x))
                    rhs = cat.act_obj(hg, x)
                    if lhs != rhs:
                        return (group.label(g), group.label(h),
                                cat.obj_label(x))
                for f in mor_pool:
                    lhs = cat.act_mor(g, cat.act_mor(h, f))
                    rhs = cat.act_mor(hg, f)
                    if lhs != rhs:
                        return (group.label(g), group.label(h),
                                cat.mor_label(f))
        return None

    def additivity():
        for g in group.elements():
            if not cat.is_zero_object(cat.act_obj(g, cat.zero_object())):
                return ("zero object moved", group.label(g))
            for x in objs:
                for y in objs:
                    fs = hom_sample(x, y)[:4]
                    for f1 in fs:
                        for f2 in fs:
                            lhs = cat.act_mor(g, cat.add(f1, f2))
                            rhs = cat.add(
                                cat.act_mor(g, f1), cat.act_mor(g, f2)
                            )
                            if lhs != rhs:
                                return ("addition", group.label(g))
                    bp = cat.biproduct(x, y)
                    gx = cat.act_obj(g, x)
                    gp = cat.act_obj(g, bp.obj)
                    i1, p1 = cat.act_mor(g, bp.inj1), cat.act_mor(g, bp.proj1)
                    i2, p2 = cat.act_mor(g, bp.inj2), cat.act_mor(g, bp.proj2)
                    if cat.compose(p1, i1) != cat.identity(gx):
                        return ("biproduct", group.label(g), cat.obj_label(x))
                    mixed = cat.add(cat.compose(i1, p1), cat.compose(i2, p2))
                    if mixed != cat.identity(gp):
                        return ("biproduct sum", group.label(g))
        return None

    def functoriality():
        for g in group.elements():
            for x in objs:
                if cat.act_mor(g, cat.identity(x)) != cat.identity(
                    cat.act_obj(g, x)
                ):
                    return ("identity", group.label(g), cat.obj_label(x))
            for x in objs:
                for y in objs:
                    for z in objs:
                        fs = hom_sample(x, y)[:3]
                        gs = hom_sample(y, z)[:3]
                        for f in fs:
                            for h in gs:
                                lhs = cat.act_mor(g, cat.compose(h, f))
                                rhs = cat.compose(
                                    cat.act_mor(g, h), cat.act_mor(g, f)
                                )
                                if lhs != rhs:
                                    return ("composition", group.label(g))
        return None

    for name, fn in (
        ("unit-action", unit_action),
        ("action-composition", composition),
        ("action-additivity", additivity),
        ("action-functoriality", functoriality),
    ):
        witness = fn()
        results.append(CheckResult(name, witness is None, witness, "exhaustive"))
    return results
