"""Finite groups, G-sets, bisets, homomorphisms and extensions.

Elements of a group are the indices 0..order-1, with 0 the identity.
Everything is validated exhaustively at construction; all values are
immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class ValidationError(ValueError):
    """Construction-time axiom violation; `witness` holds the failing data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FiniteGroup:
    """Finite group given by a multiplication table over indices 0..n-1."""

    def __init__(self, name, mul_table, labels=None, validate=True):
        self.name = str(name)
        self.mul_table = tuple(tuple(int(x) for x in row) for row in mul_table)
        self.order = len(self.mul_table)
        if labels is None:
            labels = [f"g{i}" for i in range(self.order)]
        self.labels = tuple(str(x) for x in labels)
        if len(self.labels) != self.order:
            raise ValidationError("label count does not match group order")
        if validate:
            self._validate()
        self.inv_table = self._build_inverses()

    def _validate(self):
        n = self.order
        if n == 0:
            raise ValidationError("empty group")
        for i, row in enumerate(self.mul_table):
            if len(row) != n or any(x < 0 or x >= n for x in row):
                raise ValidationError(f"mul table row {i} malformed")
        for a in range(n):
            if self.mul(0, a) != a or self.mul(a, 0) != a:
                raise ValidationError("index 0 is not an identity", witness=a)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValidationError(
                            "associativity fails", witness=(a, b, c)
                        )
        for a in range(n):
            if not any(self.mul(a, b) == 0 for b in range(n)):
                raise ValidationError("no inverse", witness=a)

    def _build_inverses(self):
        inv = []
        for a in range(self.order):
            b = next(b for b in range(self.order) if self.mul(a, b) == 0)
            if self.mul(b, a) != 0:
                raise ValidationError("one-sided inverse", witness=a)
            inv.append(b)
        return tuple(inv)

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        return self.inv_table[a]

    def elements(self):
        return range(self.order)

    @property
    def identity(self):
        return 0

    def label(self, a):
        return self.labels[a]

    def order_of(self, a):
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    def subgroup_closure(self, generators):
        """Smallest subgroup containing the generators, as a sorted tuple."""
        els = {0}
        frontier = [0] + [int(g) for g in generators]
        for g in frontier:
            els.add(g)
        changed = True
        while changed:
            changed = False
            for a in list(els):
                for b in list(els):
                    c = self.mul(a, b)
                    if c not in els:
                        els.add(c)
                        changed = True
        return tuple(sorted(els))

    def is_subgroup(self, subset):
        s = set(subset)
        if 0 not in s:
            return False
        return all(
            self.mul(a, b) in s and self.inv(a) in s for a in s for b in s
        )

    def is_normal(self, subset):
        s = set(subset)
        return self.is_subgroup(s) and all(
            self.mul(self.mul(g, n), self.inv(g)) in s
            for g in self.elements()
            for n in s
        )

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def cyclic(n, name=None):
    """Cyclic group of order n, written multiplicatively with generator u."""
    if n < 1:
        raise ValidationError("cyclic order must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    if n == 1:
        labels = ["e"]
    elif n == 2:
        labels = ["e", "u"]
    else:
        labels = ["e", "u"] + [f"u{k}" for k in range(2, n)]
    return FiniteGroup(name or f"C{n}", table, labels)


def direct_product(g1, g2, name=None):
    """Direct product; element a*|G2| + b encodes the pair (a, b)."""
    n1, n2 = g1.order, g2.order
    table = [
        [
            g1.mul(a1, b1) * n2 + g2.mul(a2, b2)
            for b1 in range(n1)
            for b2 in range(n2)
        ]
        for a1 in range(n1)
        for a2 in range(n2)
    ]
    labels = [
        f"({g1.label(a)},{g2.label(b)})" for a in range(n1) for b in range(n2)
    ]
    return FiniteGroup(name or f"{g1.name}x{g2.name}", table, labels)


def symmetric3():
    """S3 as permutations of three letters."""
    perms = [
        (0, 1, 2),
        (1, 0, 2),  # (12)
        (2, 1, 0),  # (13)
        (0, 2, 1),  # (23)
        (1, 2, 0),  # (123)
        (2, 0, 1),  # (132)
    ]
    index = {p: i for i, p in enumerate(perms)}
    # a*b acts as "first b, then a" on letters
    table = [
        [index[tuple(a[b[i]] for i in range(3))] for b in perms] for a in perms
    ]
    labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    return FiniteGroup("S3", table, labels)


def quaternion8():
    """Q8 with elements 1,-1,i,-i,j,-j,k,-k in that order."""
    # encode x as (sign, axis) with axes 1,i,j,k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    axis = {0: 0, 1: 0, 2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 3}
    sign = {i: (1 if i % 2 == 0 else -1) for i in range(8)}
    # axis multiplication table for 1,i,j,k: value (sign, axis)
    ax_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def enc(s, a):
        return 2 * a + (0 if s == 1 else 1)

    table = []
    for x in range(8):
        row = []
        for y in range(8):
            s, a = ax_mul[(axis[x], axis[y])]
            row.append(enc(s * sign[x] * sign[y], a))
        table.append(row)
    return FiniteGroup("Q8", table, names)


def dihedral4():
    """D4: symmetries of the square, rotations r^k and reflections r^k s."""
    # element 2*k + f with k rotation amount, f reflection flag
    def mul(x, y):
        kx, fx = divmod(x, 2)
        ky, fy = divmod(y, 2)
        if fx == 0:
            return 2 * ((kx + ky) % 4) + fy
        return 2 * ((kx - ky) % 4) + (1 - fy)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    labels = ["e", "s", "r", "rs", "r2", "r2s", "r3", "r3s"]
    return FiniteGroup("D4", table, labels)


@lru_cache(maxsize=None)
def group_by_name(name):
    builders = {
        "C1": lambda: cyclic(1),
        "C2": lambda: cyclic(2),
        "C3": lambda: cyclic(3),
        "C4": lambda: cyclic(4),
        "C2xC2": lambda: direct_product(cyclic(2), cyclic(2), name="C2xC2"),
        "S3": symmetric3,
        "Q8": quaternion8,
        "D4": dihedral4,
    }
    if name not in builders:
        raise ValidationError(f"unknown group name {name!r}")
    return builders[name]()


GROUP_CATALOG = ("C1", "C2", "C3", "C4", "C2xC2", "S3", "Q8", "D4")


class GroupHom:
    """Group homomorphism given by its value on every source element."""

    def __init__(self, source, target, mapping, validate=True):
        self.source = source
        self.target = target
        self.mapping = tuple(int(x) for x in mapping)
        if len(self.mapping) != source.order:
            raise ValidationError("hom mapping has wrong length")
        if validate:
            if self.mapping[0] != 0:
                raise ValidationError("hom does not preserve identity")
            for a in source.elements():
                for b in source.elements():
                    lhs = self.mapping[source.mul(a, b)]
                    rhs = target.mul(self.mapping[a], self.mapping[b])
                    if lhs != rhs:
                        raise ValidationError(
                            "not a homomorphism", witness=(a, b)
                        )

    def __call__(self, a):
        return self.mapping[a]

    def is_injective(self):
        return len(set(self.mapping)) == self.source.order

    def is_surjective(self):
        return len(set(self.mapping)) == self.target.order

    def is_isomorphism(self):
        return self.is_injective() and self.is_surjective()


def identity_hom(group):
    return GroupHom(group, group, range(group.order), validate=False)


def compose_homs(outer, inner):
    if inner.target is not outer.source:
        raise ValidationError("hom composition endpoint mismatch")
    return GroupHom(
        inner.source,
        outer.target,
        [outer(inner(a)) for a in inner.source.elements()],
        validate=False,
    )


def subgroup_embedding(group, subset):
    """Subgroup on the sorted subset as a standalone group, with inclusion."""
    subset = tuple(sorted(set(subset)))
    if not group.is_subgroup(subset):
        raise ValidationError("subset is not a subgroup", witness=subset)
    pos = {g: i for i, g in enumerate(subset)}
    table = [[pos[group.mul(a, b)] for b in subset] for a in subset]
    labels = [group.label(g) for g in subset]
    sub = FiniteGroup(f"{group.name}|{{{','.join(labels)}}}", table, labels)
    incl = GroupHom(sub, group, subset, validate=False)
    return sub, incl


def quotient_group(group, kernel_subset):
    """Quotient by a normal subgroup; cosets are represented by their
    smallest element index, which also serves as the default section."""
    kernel = tuple(sorted(set(kernel_subset)))
    if not group.is_normal(kernel):
        raise ValidationError("subset is not normal", witness=kernel)
    coset_of = {}
    reps = []
    for g in group.elements():
        if g in coset_of:
            continue
        coset = sorted(group.mul(g, n) for n in kernel)
        rep = coset[0]
        reps.append(rep)
        for x in coset:
            coset_of[x] = rep
    reps.sort()
    idx = {rep: i for i, rep in enumerate(reps)}
    table = [
        [idx[coset_of[group.mul(a, b)]] for b in reps] for a in reps
    ]
    labels = [f"[{group.label(r)}]" for r in reps]
    quot = FiniteGroup(f"{group.name}/{len(kernel)}", table, labels)
    proj = GroupHom(group, quot, [idx[coset_of[g]] for g in group.elements()])
    section = tuple(reps)
    return quot, proj, section


class GSet:
    """Left G-set given by an action table act[g][t]."""

    def __init__(self, group, act_table, labels=None, validate=True):
        self.group = group
        self.act_table = tuple(tuple(int(x) for x in row) for row in act_table)
        if len(self.act_table) != group.order:
            raise ValidationError("action table has wrong number of rows")
        self.size = len(self.act_table[0]) if self.act_table else 0
        if labels is None:
            labels = [f"t{i}" for i in range(self.size)]
        self.labels = tuple(str(x) for x in labels)
        if validate:
            self._validate()

    def _validate(self):
        g = self.group
        for row in self.act_table:
            if len(row) != self.size or any(
                x < 0 or x >= self.size for x in row
            ):
                raise ValidationError("action table row malformed")
        for t in range(self.size):
            if self.act(0, t) != t:
                raise ValidationError("identity does not fix", witness=t)
        for a in g.elements():
            for b in g.elements():
                for t in range(self.size):
                    if self.act(a, self.act(b, t)) != self.act(g.mul(a, b), t):
                        raise ValidationError(
                            "action is not compatible", witness=(a, b, t)
                        )

    def act(self, g, t):
        return self.act_table[g][t]

    def points(self):
        return range(self.size)

    def label(self, t):
        return self.labels[t]

    def is_free(self):
        return all(
            self.act(g, t) != t
            for g in self.group.elements()
            if g != 0
            for t in self.points()
        )

    def is_transitive(self):
        if self.size == 0:
            return False
        orbit = {self.act(g, 0) for g in self.group.elements()}
        return len(orbit) == self.size

    def orbits(self):
        seen = set()
        out = []
        for t in self.points():
            if t in seen:
                continue
            orb = sorted({self.act(g, t) for g in self.group.elements()})
            seen.update(orb)
            out.append(tuple(orb))
        return out

    def __repr__(self):
        return f"GSet({self.group.name}, size={self.size})"


def point_gset(group):
    return GSet(group, [[0]] * group.order, labels=["pt"], validate=False)


def regular_gset(group):
    """G acting on itself by left translation."""
    return GSet(group, group.mul_table, labels=group.labels)


def coset_gset(group, subgroup_subset):
    """Left cosets gH with the translation action; cosets are ordered and
    labelled by their smallest member."""
    h = tuple(sorted(set(subgroup_subset)))
    if not group.is_subgroup(h):
        raise ValidationError("subset is not a subgroup", witness=h)
    coset_of = {}
    reps = []
    for g in group.elements():
        if g in coset_of:
            continue
        coset = sorted(group.mul(g, x) for x in h)
        reps.append(coset[0])
        for x in coset:
            coset_of[x] = coset[0]
    reps.sort()
    idx = {rep: i for i, rep in enumerate(reps)}
    table = [
        [idx[coset_of[group.mul(g, rep)]] for rep in reps]
        for g in group.elements()
    ]
    labels = [f"{group.label(r)}H" for r in reps]
    return GSet(group, table, labels)


def union_gset(t1, t2):
    """Disjoint union of two G-sets over the same group."""
    if t1.group is not t2.group:
        raise ValidationError("union of G-sets over different groups")
    g = t1.group
    table = [
        [t1.act(a, t) for t in t1.points()]
        + [t1.size + t2.act(a, t) for t in t2.points()]
        for a in g.elements()
    ]
    labels = [f"L.{x}" for x in t1.labels] + [f"R.{x}" for x in t2.labels]
    return GSet(g, table, labels, validate=False)


def restrict_gset(t, hom):
    """The same points with the source group of `hom` acting through it."""
    if hom.target is not t.group:
        raise ValidationError("restriction hom targets the wrong group")
    table = [
        [t.act(hom(k), x) for x in t.points()]
        for k in hom.source.elements()
    ]
    return GSet(hom.source, table, t.labels, validate=False)


def orbit_gset(t, subgroup_subset):
    """Orbit space N\\T for N normal, as a G-set, with the projection map."""
    group = t.group
    n = tuple(sorted(set(subgroup_subset)))
    if not group.is_normal(n):
        raise ValidationError("orbit space needs a normal subgroup", witness=n)
    orbit_of = {}
    reps = []
    for x in t.points():
        if x in orbit_of:
            continue
        orb = sorted(t.act(g, x) for g in n)
        reps.append(orb[0])
        for y in orb:
            orbit_of[y] = orb[0]
    reps.sort()
    idx = {rep: i for i, rep in enumerate(reps)}
    table = [
        [idx[orbit_of[t.act(g, rep)]] for rep in reps]
        for g in group.elements()
    ]
    labels = [f"N{t.label(r)}" for r in reps]
    quot = GSet(group, table, labels)
    proj = tuple(idx[orbit_of[x]] for x in t.points())
    return quot, proj


def gset_over_quotient(t, quot, proj_hom_section):
    """Reread a G-set on which the kernel acts trivially as a set over the
    quotient group, acting through the chosen section representatives."""
    section = proj_hom_section
    table = [
        [t.act(section[q], x) for x in t.points()]
        for q in quot.elements()
    ]
    return GSet(quot, table, t.labels)


def induced_gset(group, sub, incl, t):
    """G ×_H T: classes of (g, t) under (g·h, t) ~ (g, h·t), with the left
    translation action and the embedding t -> [1, t]."""
    if incl.source is not sub or incl.target is not group:
        raise ValidationError("inclusion does not match the subgroup")
    if t.group is not sub:
        raise ValidationError("index set is not a set over the subgroup")
    n = group.order * t.size

    def key(g, x):
        return g * t.size + x

    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for g in group.elements():
        for h in sub.elements():
            for x in t.points():
                union(key(group.mul(g, incl(h)), x), key(g, t.act(h, x)))
    reps = sorted({find(a) for a in range(n)})
    idx = {r: i for i, r in enumerate(reps)}

    def cls(g, x):
        return idx[find(key(g, x))]

    table = [
        [cls(group.mul(a, r // t.size), r % t.size) for r in reps]
        for a in group.elements()
    ]
    labels = [f"[{group.label(r // t.size)},{t.label(r % t.size)}]" for r in reps]
    out = GSet(group, table, labels)
    embed = tuple(cls(0, x) for x in t.points())
    if len(set(embed)) != t.size:
        raise ValidationError("induction embedding failed to be injective")
    index = group.order // sub.order
    if out.size != index * t.size:
        raise ValidationError(
            "induced set has wrong size", witness=(out.size, index * t.size)
        )
    return out, embed


class BiSet:
    """Set with commuting left K-action and right G-action."""

    def __init__(self, left_group, right_group, left_table, right_table,
                 labels=None, validate=True):
        self.left_group = left_group
        self.right_group = right_group
        self.left_table = tuple(tuple(r) for r in left_table)
        self.right_table = tuple(tuple(r) for r in right_table)
        self.size = len(self.left_table[0]) if self.left_table else 0
        if labels is None:
            labels = [f"s{i}" for i in range(self.size)]
        self.labels = tuple(labels)
        if validate:
            self._validate()

    def _validate(self):
        GSet(self.left_group, self.left_table, self.labels)
        # right action via the opposite group axioms: s·(gh) = (s·g)·h
        for t in range(self.size):
            if self.right(t, 0) != t:
                raise ValidationError("right identity fails", witness=t)
        for a in self.right_group.elements():
            for b in self.right_group.elements():
                for t in range(self.size):
                    if self.right(self.right(t, a), b) != self.right(
                        t, self.right_group.mul(a, b)
                    ):
                        raise ValidationError(
                            "right action incompatible", witness=(a, b, t)
                        )
        for k in self.left_group.elements():
            for g in self.right_group.elements():
                for t in range(self.size):
                    if self.right(self.left(k, t), g) != self.left(
                        k, self.right(t, g)
                    ):
                        raise ValidationError(
                            "left and right actions do not commute",
                            witness=(k, t, g),
                        )

    def left(self, k, s):
        return self.left_table[k][s]

    def right(self, s, g):
        return self.right_table[g][s]

    def points(self):
        return range(self.size)

    def label(self, s):
        return self.labels[s]


def restriction_biset(hom):
    """The target group as a (source, target)-biset: k·s = hom(k)s, s·g = sg."""
    k_group, g_group = hom.source, hom.target
    left = [
        [g_group.mul(hom(k), s) for s in g_group.elements()]
        for k in k_group.elements()
    ]
    right = [
        [g_group.mul(s, g) for s in g_group.elements()]
        for g in g_group.elements()
    ]
    return BiSet(k_group, g_group, left, right, labels=g_group.labels)


def group_biset(group):
    """The group as a biset over itself by left and right translation."""
    return restriction_biset(identity_hom(group))


def product_biset_gset(biset, t):
    """S × T as a left (K x G)-set: (k,g)(s,t) = (k·s·g^{-1}, g·t)."""
    k_group, g_group = biset.left_group, biset.right_group
    prod = direct_product(k_group, g_group)
    size = biset.size * t.size

    def enc(s, x):
        return s * t.size + x

    table = []
    for kg in prod.elements():
        k, g = divmod(kg, g_group.order)
        row = []
        for s in biset.points():
            for x in t.points():
                s2 = biset.right(biset.left(k, s), g_group.inv(g))
                row.append(enc(s2, t.act(g, x)))
        table.append(row)
    labels = [
        f"({biset.label(s)},{t.label(x)})"
        for s in biset.points()
        for x in t.points()
    ]
    return prod, GSet(prod, table, labels)


@dataclass(frozen=True)
class GroupExtension:
    """Extension data: total group, normal kernel, quotient, projection and a
    set-theoretic section with s(1) = 1."""

    total: FiniteGroup
    kernel: tuple
    quotient: FiniteGroup
    projection: GroupHom
    section: tuple

    def validate(self):
        g = self.total
        if not g.is_normal(self.kernel):
            raise ValidationError("kernel is not normal")
        if not self.projection.is_surjective():
            raise ValidationError("projection is not surjective")
        ker = tuple(
            sorted(x for x in g.elements() if self.projection(x) == 0)
        )
        if ker != tuple(sorted(self.kernel)):
            raise ValidationError("kernel mismatch", witness=ker)
        for q in self.quotient.elements():
            if self.projection(self.section[q]) != q:
                raise ValidationError("section fails p∘s = id", witness=q)
        if self.section[0] != 0:
            raise ValidationError("section does not send 1 to 1")


def extension_from_groups(total, kernel_generators, section=None):
    """Build the extension with quotient on canonical coset representatives.

    The default section picks the smallest element index in each coset, so
    cocycle values are reproducible across runs.
    """
    kernel = total.subgroup_closure(kernel_generators)
    quot, proj, default_section = quotient_group(total, kernel)
    sect = tuple(section) if section is not None else default_section
    ext = GroupExtension(total, kernel, quot, proj, sect)
    ext.validate()
    return ext
