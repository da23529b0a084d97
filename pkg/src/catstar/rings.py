"""Computable finite rings, their automorphisms, and semilinear matrices.

Ring elements are canonical indices into an element list, so equality is
index equality.  Rings with at most TABLE_LIMIT elements precompute dense
add/mul tables; larger rings (big group rings, crossed products) compute
operations structurally with memoisation.

Modules are finitely generated free *left* modules written as row vectors,
so a linear map is "multiply by a matrix on the right" and a semilinear map
with twist φ sends v to φ(v)·A with φ applied entrywise.  This convention
keeps left scalars outside the matrix product, which is what makes the
twisted-module formulas work over noncommutative coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .groups import FiniteGroup, ValidationError

TABLE_LIMIT = 256
ENUM_LIMIT = 10_000
SAMPLE_COUNT = 10_000


class FiniteRing:
    """Finite unital ring on element indices 0..size-1."""

    def __init__(self, name, size, add_fn, mul_fn, neg_fn, zero, one,
                 labels=None, char_p=None):
        self.name = str(name)
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.char_p = char_p
        self._labels = labels
        if self.size <= TABLE_LIMIT:
            self._add = tuple(
                tuple(add_fn(a, b) for b in range(size)) for a in range(size)
            )
            self._mul = tuple(
                tuple(mul_fn(a, b) for b in range(size)) for a in range(size)
            )
            self._neg = tuple(neg_fn(a) for a in range(size))
            self._add_fn = None
        else:
            self._add_fn, self._mul_fn, self._neg_fn = add_fn, mul_fn, neg_fn
            self._add_cache, self._mul_cache = {}, {}
            self._add = self._mul = self._neg = None
        self._units = None
        self._unit_inv = None
        if self.size <= TABLE_LIMIT:
            self._compute_units()

    # --- arithmetic ---

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        key = (a, b)
        v = self._add_cache.get(key)
        if v is None:
            v = self._add_fn(a, b)
            self._add_cache[key] = v
        return v

    def mul(self, a, b):
        if self._mul is not None:
            return self._mul[a][b]
        key = (a, b)
        v = self._mul_cache.get(key)
        if v is None:
            v = self._mul_fn(a, b)
            self._mul_cache[key] = v
        return v

    def neg(self, a):
        if self._neg is not None:
            return self._neg[a]
        return self._neg_fn(a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def elements(self):
        return range(self.size)

    def label(self, a):
        if self._labels is not None:
            return self._labels[a]
        return str(a)

    # --- units ---

    def _compute_units(self):
        units = []
        inv = {}
        for a in self.elements():
            for b in self.elements():
                if a in inv:
                    break
                if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                    units.append(a)
                    inv[a] = b
        self._units = tuple(units)
        self._unit_inv = inv

    @property
    def units(self):
        if self._units is None:
            self._compute_units()
        return self._units

    def is_unit(self, a):
        if self._unit_inv is not None:
            return a in self._unit_inv
        return self._find_inverse(a) is not None

    def unit_inverse(self, a):
        if self._unit_inv is not None:
            inv = self._unit_inv.get(a)
        else:
            inv = self._find_inverse(a)
        if inv is None:
            raise ValidationError(f"{self.label(a)} is not a unit in {self.name}")
        return inv

    def _find_inverse(self, a):
        for b in self.elements():
            if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                return b
        return None

    def is_central(self, a):
        return all(self.mul(a, b) == self.mul(b, a) for b in self.elements())

    def is_commutative(self):
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in self.elements()
            for b in self.elements()
        )

    def __repr__(self):
        return f"FiniteRing({self.name}, size={self.size})"


def check_ring_axioms(ring, seed=0, samples=SAMPLE_COUNT):
    """Associativity, distributivity and unit laws; exhaustive when the triple
    space is at most ENUM_LIMIT, otherwise a seeded sample.  Raises with the
    failing triple."""
    n = ring.size
    rng = random.Random(seed)
    if n**3 <= ENUM_LIMIT:
        triples = product(range(n), repeat=3)
    else:
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(samples)
        )
    singles = ring.elements() if n <= ENUM_LIMIT else (
        rng.randrange(n) for _ in range(samples)
    )
    for a in singles:
        if ring.add(a, ring.zero) != a or ring.mul(a, ring.one) != a \
                or ring.mul(ring.one, a) != a:
            raise ValidationError("unit law fails", witness=(a,))
        if ring.add(a, ring.neg(a)) != ring.zero:
            raise ValidationError("negation fails", witness=(a,))
    if n**2 <= ENUM_LIMIT:
        pairs = product(range(n), repeat=2)
    else:
        pairs = (
            (rng.randrange(n), rng.randrange(n)) for _ in range(samples)
        )
    for a, b in pairs:
        if ring.add(a, b) != ring.add(b, a):
            raise ValidationError("addition not commutative", witness=(a, b))
    for a, b, c in triples:
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
            raise ValidationError("addition not associative", witness=(a, b, c))
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
            raise ValidationError("multiplication not associative",
                                  witness=(a, b, c))
        lhs = ring.mul(a, ring.add(b, c))
        rhs = ring.add(ring.mul(a, b), ring.mul(a, c))
        if lhs != rhs:
            raise ValidationError("left distributivity fails", witness=(a, b, c))
        lhs = ring.mul(ring.add(a, b), c)
        rhs = ring.add(ring.mul(a, c), ring.mul(b, c))
        if lhs != rhs:
            raise ValidationError("right distributivity fails", witness=(a, b, c))
    if ring.size > 1 and ring.zero == ring.one:
        raise ValidationError("zero equals one in a nontrivial ring")


# --- constructors ---

def zmod(n):
    if n < 1:
        raise ValidationError("modulus must be >= 1")
    ring = FiniteRing(
        f"Z/{n}", n,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        lambda a: (-a) % n,
        zero=0, one=1 % n,
        labels=[str(i) for i in range(n)],
        char_p=None,
    )
    check_ring_axioms(ring)
    return ring


_GF_POLYS = {4: (2, 2, (1, 1)), 8: (2, 3, (1, 1, 0)), 9: (3, 2, (1, 0))}
# q -> (p, k, low coefficients of a monic irreducible x^k + c_{k-1}x^{k-1}+..+c_0)


def gf(q):
    """Galois field of order q for q prime or in {4, 8, 9}.  Elements are
    polynomials in a root `a` of the chosen irreducible."""
    if q >= 2 and all(q % d for d in range(2, q)):
        ring = zmod(q)
        ring.char_p = q
        return ring
    if q not in _GF_POLYS:
        raise ValidationError(f"unsupported field order {q}")
    p, k, low = _GF_POLYS[q]

    def decode(i):
        out = []
        for _ in range(k):
            i, r = divmod(i, p)
            out.append(r)
        return out  # coefficient of x^j at position j

    def encode(cs):
        i = 0
        for c in reversed(cs):
            i = i * p + (c % p)
        return i

    def add_fn(a, b):
        return encode([(x + y) % p for x, y in zip(decode(a), decode(b))])

    def neg_fn(a):
        return encode([(-x) % p for x in decode(a)])

    def mul_fn(a, b):
        da, db = decode(a), decode(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j, cj in enumerate(low):
                    prod[deg - k + j] = (prod[deg - k + j] - c * cj) % p
        return encode(prod[:k])

    def name_of(i):
        cs = decode(i)
        terms = []
        for j in range(k - 1, -1, -1):
            c = cs[j]
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                var = "a" if j == 1 else f"a{j}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms) if terms else "0"

    ring = FiniteRing(
        f"GF({q})", q, add_fn, mul_fn, neg_fn,
        zero=0, one=1, labels=[name_of(i) for i in range(q)], char_p=p,
    )
    check_ring_axioms(ring)
    return ring


def group_ring(base, group):
    """S[K]: functions K -> S with convolution product.  Element indices are
    mixed-radix over the coefficient vector."""
    if not isinstance(group, FiniteGroup):
        raise ValidationError("group ring needs a FiniteGroup")
    n, s = group.order, base.size
    size = s**n

    def decode(i):
        out = []
        for _ in range(n):
            i, r = divmod(i, s)
            out.append(r)
        return out

    def encode(cs):
        i = 0
        for c in reversed(cs):
            i = i * s + c
        return i

    def add_fn(a, b):
        return encode([base.add(x, y) for x, y in zip(decode(a), decode(b))])

    def neg_fn(a):
        return encode([base.neg(x) for x in decode(a)])

    def mul_fn(a, b):
        da, db = decode(a), decode(b)
        out = [base.zero] * n
        for g, x in enumerate(da):
            if x == base.zero:
                continue
            for h, y in enumerate(db):
                if y == base.zero:
                    continue
                gh = group.mul(g, h)
                out[gh] = base.add(out[gh], base.mul(x, y))
        return encode(out)

    def name_of(i):
        cs = decode(i)
        terms = []
        for g, c in enumerate(cs):
            if c == base.zero:
                continue
            cl, gl = base.label(c), group.label(g)
            if g == 0:
                terms.append(cl)
            elif c == base.one:
                terms.append(gl)
            else:
                terms.append(f"{cl}{gl}")
        return "+".join(terms) if terms else "0"

    one = encode([base.one] + [base.zero] * (n - 1))
    labels = [name_of(i) for i in range(size)] if size <= TABLE_LIMIT else None
    ring = FiniteRing(
        f"{base.name}[{group.name}]", size, add_fn, mul_fn, neg_fn,
        zero=0, one=one, labels=labels, char_p=base.char_p,
    )
    ring.group = group
    ring.base = base
    ring.basis_element = lambda g: encode(
        [base.one if h == g else base.zero for h in range(n)]
    )
    ring.coefficients = decode
    if size <= TABLE_LIMIT:
        check_ring_axioms(ring)
    else:
        check_ring_axioms(ring, seed=0, samples=1000)
    return ring


def matrix_ring(k, base):
    """k x k matrices over a base ring, as an indexed ring."""
    cells = k * k
    s = base.size
    size = s**cells

    def decode(i):
        out = []
        for _ in range(cells):
            i, r = divmod(i, s)
            out.append(r)
        return tuple(tuple(out[r * k + c] for c in range(k)) for r in range(k))

    def encode(m):
        flat = [m[r][c] for r in range(k) for c in range(k)]
        i = 0
        for c in reversed(flat):
            i = i * s + c
        return i

    def add_fn(a, b):
        ma, mb = decode(a), decode(b)
        return encode([
            [base.add(ma[r][c], mb[r][c]) for c in range(k)] for r in range(k)
        ])

    def neg_fn(a):
        ma = decode(a)
        return encode([[base.neg(x) for x in row] for row in ma])

    def mul_fn(a, b):
        ma, mb = decode(a), decode(b)
        out = []
        for r in range(k):
            row = []
            for c in range(k):
                acc = base.zero
                for j in range(k):
                    acc = base.add(acc, base.mul(ma[r][j], mb[j][c]))
                row.append(acc)
            out.append(row)
        return encode(out)

    ident = encode([
        [base.one if r == c else base.zero for c in range(k)] for r in range(k)
    ])

    def name_of(i):
        m = decode(i)
        return "[" + ";".join(
            ",".join(base.label(x) for x in row) for row in m
        ) + "]"

    labels = [name_of(i) for i in range(size)] if size <= TABLE_LIMIT else None
    ring = FiniteRing(
        f"M{k}({base.name})", size, add_fn, mul_fn, neg_fn,
        zero=0, one=ident, labels=labels, char_p=base.char_p,
    )
    ring.matrix_decode = decode
    ring.matrix_encode = encode
    if size <= TABLE_LIMIT:
        check_ring_axioms(ring)
    else:
        check_ring_axioms(ring, seed=0, samples=1000)
    return ring


def ring_from_tables(name, add_table, mul_table, zero, one, labels=None):
    """Hand-supplied ring; rejected with the failing triple on any axiom
    violation."""
    size = len(add_table)
    add = [list(map(int, row)) for row in add_table]
    mul = [list(map(int, row)) for row in mul_table]
    neg = []
    for a in range(size):
        b = next((b for b in range(size) if add[a][b] == zero), None)
        if b is None:
            raise ValidationError("no additive inverse", witness=(a,))
        neg.append(b)
    ring = FiniteRing(
        name, size,
        lambda a, b: add[a][b], lambda a, b: mul[a][b], lambda a: neg[a],
        zero=zero, one=one, labels=labels,
    )
    check_ring_axioms(ring)
    return ring


def make_ring(desc):
    """Build a ring from a description dict (the instance-file schema)."""
    kind = desc.get("type")
    if kind == "Zmod":
        return zmod(int(desc["n"]))
    if kind == "GF":
        return gf(int(desc["q"]))
    if kind == "Matrix":
        return matrix_ring(int(desc["k"]), make_ring(desc["base"]))
    if kind == "GroupRing":
        from .groups import group_by_name

        grp = desc["group"]
        group = group_by_name(grp) if isinstance(grp, str) else grp
        return group_ring(make_ring(desc["base"]), group)
    if kind == "Tables":
        return ring_from_tables(
            desc.get("name", "R"), desc["add"], desc["mul"],
            int(desc["zero"]), int(desc["one"]), desc.get("labels"),
        )
    raise ValidationError(f"unknown ring description {desc!r}")


# --- automorphisms ---

class RingAutomorphism:
    """Ring automorphism as a permutation of element indices."""

    def __init__(self, ring, perm, validate=True, name="phi"):
        self.ring = ring
        self.perm = tuple(int(x) for x in perm)
        self.name = name
        if len(self.perm) != ring.size:
            raise ValidationError("automorphism permutation has wrong length")
        if validate:
            self._validate()
        inv = [0] * ring.size
        for i, j in enumerate(self.perm):
            inv[j] = i
        self.inverse_perm = tuple(inv)

    def _validate(self):
        ring = self.ring
        if sorted(self.perm) != list(range(ring.size)):
            raise ValidationError("not a bijection")
        if self.perm[ring.one] != ring.one:
            raise ValidationError("does not fix 1")
        if ring.size**2 <= ENUM_LIMIT:
            pairs = product(ring.elements(), repeat=2)
        else:
            rng = random.Random(1)
            pairs = (
                (rng.randrange(ring.size), rng.randrange(ring.size))
                for _ in range(SAMPLE_COUNT)
            )
        for a, b in pairs:
            if self.perm[ring.add(a, b)] != ring.add(self.perm[a], self.perm[b]):
                raise ValidationError("does not preserve addition",
                                      witness=(a, b))
            if self.perm[ring.mul(a, b)] != ring.mul(self.perm[a], self.perm[b]):
                raise ValidationError("does not preserve multiplication",
                                      witness=(a, b))

    def __call__(self, a):
        return self.perm[a]

    def inverse(self):
        return RingAutomorphism(
            self.ring, self.inverse_perm, validate=False,
            name=f"{self.name}^-1",
        )

    def is_identity(self):
        return all(self.perm[i] == i for i in range(self.ring.size))

    def __eq__(self, other):
        return (
            isinstance(other, RingAutomorphism)
            and self.ring is other.ring
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash(self.perm)


def identity_automorphism(ring):
    return RingAutomorphism(ring, range(ring.size), validate=False, name="id")


def compose_automorphisms(outer, inner):
    """(outer ∘ inner)(r) = outer(inner(r))."""
    if outer.ring is not inner.ring:
        raise ValidationError("automorphism composition over different rings")
    return RingAutomorphism(
        outer.ring,
        [outer(inner(a)) for a in outer.ring.elements()],
        validate=False,
        name=f"{outer.name}∘{inner.name}",
    )


def conjugation_automorphism(ring, unit):
    """r -> u r u^{-1}."""
    u_inv = ring.unit_inverse(unit)
    perm = [ring.mul(ring.mul(unit, r), u_inv) for r in ring.elements()]
    return RingAutomorphism(ring, perm, name=f"conj({ring.label(unit)})")


def frobenius_automorphism(ring):
    """r -> r^p over a ring of prime characteristic p."""
    p = ring.char_p
    if p is None:
        raise ValidationError("ring has no recorded prime characteristic")
    perm = []
    for r in ring.elements():
        x = ring.one
        for _ in range(p):
            x = ring.mul(x, r)
        perm.append(x)
    return RingAutomorphism(ring, perm, name="frob")


def automorphism_from_desc(ring, desc):
    if isinstance(desc, str):
        desc = {"kind": desc}
    kind = desc.get("kind")
    if kind == "identity":
        return identity_automorphism(ring)
    if kind == "frobenius":
        return frobenius_automorphism(ring)
    if kind == "conjugation":
        return conjugation_automorphism(ring, int(desc["unit"]))
    if kind == "perm":
        return RingAutomorphism(ring, desc["perm"])
    raise ValidationError(f"unknown automorphism description {desc!r}")


# --- matrices over a ring (row-vector convention) ---

def mat_zero(ring, rows, cols):
    return tuple((ring.zero,) * cols for _ in range(rows))

def mat_identity(ring, n):
    return tuple(
        tuple(ring.one if i == j else ring.zero for j in range(n))
        for i in range(n)
    )

def mat_add(ring, a, b):
    return tuple(
        tuple(ring.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )

def mat_neg(ring, a):
    return tuple(tuple(ring.neg(x) for x in row) for row in a)

def mat_mul(ring, a, b, cols=None):
    """(m x n)·(n x p); entries multiply in the given order.  `cols` recovers
    p when b has no rows (tuples-of-rows lose the column count at n = 0)."""
    if a and b and len(a[0]) != len(b):
        raise ValidationError("matrix shape mismatch")
    p = len(b[0]) if b else (0 if cols is None else cols)
    out = []
    for row in a:
        orow = []
        for c in range(p):
            acc = ring.zero
            for j, x in enumerate(row):
                acc = ring.add(acc, ring.mul(x, b[j][c]))
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)

def mat_scale_left(ring, r, a):
    return tuple(tuple(ring.mul(r, x) for x in row) for row in a)

def mat_map(fn, a):
    return tuple(tuple(fn(x) for x in row) for row in a)

def vec_mat(ring, v, a, cols=None):
    if not a:
        return (ring.zero,) * (0 if cols is None else cols)
    return tuple(
        _dot(ring, v, tuple(row[c] for row in a)) for c in range(len(a[0]))
    )

def _dot(ring, v, col):
    acc = ring.zero
    for x, y in zip(v, col):
        acc = ring.add(acc, ring.mul(x, y))
    return acc

def enumerate_matrices(ring, rows, cols):
    """All rows x cols matrices, in a fixed lexicographic order."""
    if rows * cols == 0:
        yield tuple(() for _ in range(rows))
        return
    for flat in product(ring.elements(), repeat=rows * cols):
        yield tuple(
            tuple(flat[r * cols + c] for c in range(cols)) for r in range(rows)
        )

def mat_label(ring, a):
    return "[" + ";".join(
        ",".join(ring.label(x) for x in row) for row in a
    ) + "]"


@dataclass(frozen=True)
class FreeModule:
    """Finitely generated free module, known by its rank."""

    ring: FiniteRing
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValidationError("rank must be >= 0")


@dataclass(frozen=True)
class SemilinearMap:
    """Additive f with f(r·v) = twist(r)·f(v); evaluates as twist(v)·matrix.

    matrix has source.rank rows and target.rank columns.
    """

    source: FreeModule
    target: FreeModule
    twist: RingAutomorphism
    matrix: tuple

    def __post_init__(self):
        if self.source.ring is not self.target.ring:
            raise ValidationError("semilinear map between different rings")
        if len(self.matrix) != self.source.rank or any(
            len(row) != self.target.rank for row in self.matrix
        ):
            raise ValidationError("semilinear matrix has the wrong shape")

    @property
    def ring(self):
        return self.source.ring

    def apply(self, v):
        tv = tuple(self.twist(x) for x in v)
        return vec_mat(self.ring, tv, self.matrix)


def semilinear_identity(module):
    return SemilinearMap(
        module, module, identity_automorphism(module.ring),
        mat_identity(module.ring, module.rank),
    )


def compose_semilinear(outer, inner):
    """outer ∘ inner; twist composes, matrix is outer.twist(inner.matrix)
    times outer.matrix."""
    if inner.target != outer.source:
        raise ValidationError("semilinear composition endpoint mismatch")
    ring = inner.ring
    twisted = mat_map(outer.twist, inner.matrix)
    return SemilinearMap(
        inner.source, outer.target,
        compose_automorphisms(outer.twist, inner.twist),
        mat_mul(ring, twisted, outer.matrix, cols=outer.target.rank),
    )
