"""Instance descriptions: named algebra objects plus suite selections.

An instance file is a JSON document naming rings, groups, G-sets, crossed
data, categories and Swan modules, then selecting suites that run over
them.  The built-in catalog covers the worked examples: a trivial-action
baseline, a cyclic extension, the quaternion central extension, a symmetric
coset action, a Frobenius-twisted field, and supporting orbit data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .crossed import crossed_data_from_tables, from_extension, \
    twisted_group_data
from .gcategory import RigidCrossedCat, TrivialRingCat, TwistedModuleCat
from .groups import (
    BiSet,
    GSet,
    FiniteGroup,
    GroupHom,
    ValidationError,
    coset_gset,
    extension_from_groups,
    group_biset,
    group_by_name,
    point_gset,
    regular_gset,
    restriction_biset,
    union_gset,
)
from .rings import automorphism_from_desc, make_ring
from .swan import SwanModule, swan_from_generators, swan_regular, \
    swan_sign, swan_trivial


@dataclass
class ResolvedInstance:
    name: str
    seed: int
    bounds: dict
    rings: dict = field(default_factory=dict)
    groups: dict = field(default_factory=dict)
    gsets: dict = field(default_factory=dict)
    crossed: dict = field(default_factory=dict)
    extensions: dict = field(default_factory=dict)
    categories: dict = field(default_factory=dict)
    swan_modules: dict = field(default_factory=dict)
    suites: list = field(default_factory=list)

    @property
    def max_rank(self):
        return self.bounds.get("max_rank", 1)

    @property
    def samples(self):
        return self.bounds.get("samples", 10_000)


def resolve_instance(doc):
    """Build every named object in dependency order; unresolved references
    and malformed entries raise ValidationError."""
    if not isinstance(doc, dict):
        raise ValidationError("instance document must be a JSON object")
    inst = ResolvedInstance(
        name=str(doc.get("name", "instance")),
        seed=int(doc.get("seed", 0)),
        bounds={
            "max_rank": int(doc.get("bounds", {}).get("max_rank", 1)),
            "samples": int(doc.get("bounds", {}).get("samples", 10_000)),
        },
    )
    for name, spec in doc.get("groups", {}).items():
        inst.groups[name] = _resolve_group(spec)
    for name, spec in doc.get("rings", {}).items():
        inst.rings[name] = make_ring(_deref_ring(spec, inst))
    for name, spec in doc.get("gsets", {}).items():
        inst.gsets[name] = _resolve_gset(spec, inst)
    for name, spec in doc.get("crossed", {}).items():
        inst.crossed[name], ext = _resolve_crossed(spec, inst)
        if ext is not None:
            inst.extensions[name] = ext
    for name, spec in doc.get("categories", {}).items():
        inst.categories[name] = _resolve_category(spec, inst)
    for name, spec in doc.get("swan", {}).items():
        inst.swan_modules[name] = _resolve_swan(spec, inst)
    suites = doc.get("suites", [])
    if not isinstance(suites, list):
        raise ValidationError("suites must be a list")
    for entry in suites:
        if isinstance(entry, str):
            entry = {"suite": entry}
        if "suite" not in entry:
            raise ValidationError(f"suite entry without a name: {entry!r}")
        inst.suites.append(dict(entry))
    return inst


def _resolve_group(spec):
    if isinstance(spec, str):
        return group_by_name(spec)
    if isinstance(spec, dict) and "table" in spec:
        return FiniteGroup(
            spec.get("name", "G"), spec["table"], spec.get("labels")
        )
    raise ValidationError(f"unknown group description {spec!r}")


def _deref_ring(spec, inst):
    if isinstance(spec, dict) and isinstance(spec.get("group"), str):
        spec = dict(spec)
        if spec["group"] in inst.groups:
            spec["group"] = inst.groups[spec["group"]]
        else:
            spec["group"] = group_by_name(spec["group"])
    return spec


def _group_ref(name, inst):
    if name in inst.groups:
        return inst.groups[name]
    return group_by_name(name)


def _resolve_gset(spec, inst):
    kind = spec.get("kind")
    group = _group_ref(spec["group"], inst)
    if kind == "point":
        return point_gset(group)
    if kind == "regular":
        return regular_gset(group)
    if kind == "coset":
        subgroup = group.subgroup_closure(spec["subgroup"])
        return coset_gset(group, subgroup)
    if kind == "union":
        parts = [_resolve_gset(p, inst) for p in spec["parts"]]
        out = parts[0]
        for p in parts[1:]:
            out = union_gset(out, p)
        return out
    if kind == "table":
        return GSet(group, spec["table"], spec.get("labels"))
    raise ValidationError(f"unknown gset description {spec!r}")


def _resolve_crossed(spec, inst):
    if "fromExtension" in spec:
        body = spec["fromExtension"]
        gamma = _group_ref(body["gamma"], inst)
        ext = extension_from_groups(
            gamma, body["kernel"], body.get("section")
        )
        base = make_ring(_deref_ring(body["base"], inst))
        return from_extension(ext, base), (ext, base)
    ring = make_ring(_deref_ring(spec["ring"], inst))
    group = _group_ref(spec["group"], inst)
    if "tau" in spec:
        alpha = [
            automorphism_from_desc(ring, a) for a in spec["alpha"]
        ]
        return crossed_data_from_tables(
            ring, group, alpha, spec["tau"], name=spec.get("name", "crossed")
        ), None
    alpha = [automorphism_from_desc(ring, a) for a in spec["alpha"]]
    return twisted_group_data(ring, group, alpha), None


def _resolve_category(spec, inst):
    kind = spec.get("category")
    max_rank = int(spec.get("max_rank", 3))
    if kind == "TrivialRing":
        ring = (
            inst.rings[spec["ring"]]
            if isinstance(spec["ring"], str)
            else make_ring(spec["ring"])
        )
        group = _group_ref(spec["group"], inst)
        return TrivialRingCat(ring, group, max_rank=max_rank)
    if kind == "TwistedModule":
        ring = (
            inst.rings[spec["ring"]]
            if isinstance(spec["ring"], str)
            else make_ring(spec["ring"])
        )
        group = _group_ref(spec["group"], inst)
        alpha = [automorphism_from_desc(ring, a) for a in spec["alpha"]]
        return TwistedModuleCat(ring, group, alpha, max_rank=max_rank)
    if kind == "RigidCrossed":
        data = inst.crossed[spec["crossed"]]
        return RigidCrossedCat(data, max_rank=max_rank)
    raise ValidationError(f"unknown category description {spec!r}")


def _resolve_swan(spec, inst):
    group = _group_ref(spec["group"], inst)
    kind = spec.get("kind")
    if kind == "trivial":
        return swan_trivial(group, int(spec.get("rank", 1)))
    if kind == "regular":
        return swan_regular(group)
    if kind == "sign":
        return swan_sign(group)
    generators = {
        _element_index(group, k): v for k, v in spec["action"].items()
    }
    return SwanModule(
        group, int(spec["rank"]),
        _close_generators(group, int(spec["rank"]), generators),
        name=spec.get("name", "M"),
    )


def _element_index(group, key):
    if isinstance(key, int) or key.isdigit():
        return int(key)
    for i, lab in enumerate(group.labels):
        if lab == key:
            return i
    raise ValidationError(f"unknown group element {key!r}")


def _close_generators(group, rank, generators):
    return swan_from_generators(group, rank, generators).mats


def resolve_biset(spec, inst):
    kind = spec.get("kind")
    if kind == "group":
        return group_biset(_group_ref(spec["group"], inst))
    if kind == "restriction":
        hom = resolve_hom(spec["hom"], inst)
        return restriction_biset(hom)
    if kind == "left-regular-trivial":
        group = _group_ref(spec["group"], inst)
        trivial_right = [
            [s for s in range(group.order)] for _ in group.elements()
        ]
        return BiSet(group, group, group.mul_table, trivial_right,
                     labels=group.labels)
    raise ValidationError(f"unknown biset description {spec!r}")


def resolve_hom(spec, inst):
    source = _group_ref(spec["source"], inst)
    target = _group_ref(spec["target"], inst)
    return GroupHom(source, target, spec["mapping"])


def load_instance(path_or_name):
    """A built-in name, or a path to a JSON instance file."""
    if path_or_name in BUILTIN_INSTANCES:
        return resolve_instance(BUILTIN_INSTANCES[path_or_name])
    try:
        with open(path_or_name, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as err:
        raise ValidationError(
            f"no built-in instance or readable file {path_or_name!r}: {err}"
        )
    except json.JSONDecodeError as err:
        raise ValidationError(f"malformed instance file: {err}")
    return resolve_instance(doc)


# ---------------------------------------------------------------------------
# built-in catalog

BUILTIN_INSTANCES = {
    "c2-trivial": {
        "name": "c2-trivial",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "rings": {"F2": {"type": "Zmod", "n": 2}},
        "groups": {"G": "C2"},
        "gsets": {
            "pt": {"kind": "point", "group": "G"},
            "reg": {"kind": "regular", "group": "G"},
        },
        "categories": {
            "A": {"category": "TrivialRing", "ring": "F2", "group": "G",
                  "max_rank": 2},
        },
        "swan": {
            "ZG": {"kind": "regular", "group": "G"},
            "Z": {"kind": "trivial", "group": "G"},
        },
        "suites": [
            {"suite": "g-action", "category": "A"},
            {"suite": "star-axioms", "category": "A", "gset": "pt",
             "convolution_oracle": True},
            {"suite": "star-axioms", "category": "A", "gset": "reg"},
            {"suite": "comparison-functors", "category": "A",
             "flatten": {"biset": {"kind": "left-regular-trivial",
                                   "group": "G"}, "gset": "pt"},
             "quotient": {"gset": "reg", "normal": [1]},
             "induction": {"subgroup": [0, 1], "index_set": "point"}},
            {"suite": "controlled", "category": "A", "space": "reg"},
            {"suite": "forget-control", "category": "A",
             "gsets": ["pt", "reg"],
             "naturality": [{"source": "reg", "target": "pt",
                             "map": [0, 0]}]},
            {"suite": "swan", "category": "A", "modules": ["Z", "ZG"],
             "augmentation": True},
        ],
    },
    "c4-orbits": {
        "name": "c4-orbits",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "rings": {"F2": {"type": "Zmod", "n": 2}},
        "groups": {"G": "C4", "K": "C2"},
        "gsets": {
            "pt": {"kind": "point", "group": "G"},
            "reg": {"kind": "regular", "group": "G"},
            "halves": {"kind": "coset", "group": "G", "subgroup": [2]},
        },
        "categories": {
            "A": {"category": "TrivialRing", "ring": "F2", "group": "G",
                  "max_rank": 1},
        },
        "suites": [
            {"suite": "star-axioms", "category": "A", "gset": "pt",
             "convolution_oracle": True},
            {"suite": "star-axioms", "category": "A", "gset": "reg"},
            {"suite": "star-axioms", "category": "A", "gset": "halves"},
            {"suite": "comparison-functors", "category": "A",
             "quotient": {"gset": "reg", "normal": [2]},
             "induction": {"subgroup": [0, 2], "index_set": "point"}},
            {"suite": "induced-restriction",
             "hom": {"source": "K", "target": "G", "mapping": [0, 2]},
             "gset": "halves"},
        ],
    },
    "s3-coset": {
        "name": "s3-coset",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "rings": {"F2": {"type": "Zmod", "n": 2}},
        "groups": {"G": "S3"},
        "gsets": {
            "cosets": {"kind": "coset", "group": "G", "subgroup": [1]},
            "pt": {"kind": "point", "group": "G"},
        },
        "categories": {
            "A": {"category": "TrivialRing", "ring": "F2", "group": "G",
                  "max_rank": 1},
        },
        "suites": [
            {"suite": "star-axioms", "category": "A", "gset": "cosets"},
            {"suite": "star-axioms", "category": "A", "gset": "pt",
             "convolution_oracle": True},
            {"suite": "comparison-functors", "category": "A",
             "induction": {"subgroup": [0, 4, 5], "index_set": "point"}},
        ],
    },
    "f4-frobenius": {
        "name": "f4-frobenius",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "rings": {"F4": {"type": "GF", "q": 4}},
        "groups": {"G": "C2"},
        "gsets": {"pt": {"kind": "point", "group": "G"}},
        "crossed": {
            "D": {"ring": {"type": "GF", "q": 4}, "group": "G",
                  "alpha": ["identity", "frobenius"]},
        },
        "categories": {
            "A": {"category": "TwistedModule", "ring": "F4", "group": "G",
                  "alpha": ["identity", "frobenius"], "max_rank": 1},
        },
        "suites": [
            {"suite": "g-action", "category": "A"},
            {"suite": "star-axioms", "category": "A", "gset": "pt"},
            {"suite": "crossed-identities", "crossed": "D"},
            {"suite": "crossed-modules", "crossed": "D"},
        ],
    },
    "c4-extension": {
        "name": "c4-extension",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "groups": {"Gamma": "C4"},
        "crossed": {
            "D": {"fromExtension": {"gamma": "Gamma", "kernel": [2],
                                    "base": {"type": "Zmod", "n": 2}}},
        },
        "categories": {
            "R": {"category": "RigidCrossed", "crossed": "D", "max_rank": 1},
        },
        "suites": [
            {"suite": "crossed-identities", "crossed": "D"},
            {"suite": "g-action", "category": "R"},
            {"suite": "crossed-modules", "crossed": "D"},
            {"suite": "coset-modules", "crossed": "D",
             "subgroups": [[0], [0, 1]]},
        ],
    },
    "q8-center": {
        "name": "q8-center",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "groups": {"Gamma": "Q8"},
        "crossed": {
            "D": {"fromExtension": {"gamma": "Gamma", "kernel": [1],
                                    "base": {"type": "Zmod", "n": 3}}},
        },
        "categories": {
            "R": {"category": "RigidCrossed", "crossed": "D", "max_rank": 1},
        },
        "suites": [
            {"suite": "crossed-identities", "crossed": "D"},
            {"suite": "g-action", "category": "R"},
        ],
    },
    "v4-split": {
        "name": "v4-split",
        "seed": 7,
        "bounds": {"max_rank": 1, "samples": 10000},
        "groups": {"Gamma": "C2xC2"},
        "crossed": {
            "D": {"fromExtension": {"gamma": "Gamma", "kernel": [2],
                                    "base": {"type": "Zmod", "n": 2}}},
        },
        "suites": [
            {"suite": "crossed-identities", "crossed": "D",
             "expect_trivial_cocycle": True},
        ],
    },
}


INSTANCE_DESCRIPTIONS = {
    "c2-trivial": "order-2 group with trivial coefficients: family axioms, "
                  "comparison functors, controlled modules, Swan action",
    "c4-orbits": "cyclic order-4 orbit data: quotient and induction "
                 "functors, induced-restriction equivalence",
    "s3-coset": "symmetric group coset action and induction from the "
                "3-cycle subgroup",
    "f4-frobenius": "four-element field twisted by Frobenius: twisted "
                    "module category and twisted group ring",
    "c4-extension": "cyclic extension data over the two-element field: "
                    "cocycle identities, crossed modules, coset equivalence",
    "q8-center": "quaternion central extension over three elements: "
                 "cocycle identities and rigidified pairs",
    "v4-split": "split Klein-four extension: the cocycle collapses to 1",
}
