"""Random small models for law sweeps.

Every generator takes a ``random.Random`` so sweeps are reproducible.  The
"valid" generators build their outputs so that the defining conditions hold
by construction; they compute memberships directly from the definitions and
never call the checkers or the fiber passages.
"""

from __future__ import annotations

import random
from collections import defaultdict

from .classification import Classification, Infomorphism
from .structure import Structure, StructureMorphism

MAX_NAMES = 8


def _subset(rng: random.Random, pool, p: float = 0.5) -> list:
    return [x for x in pool if rng.random() < p]


def _names(rng: random.Random, prefix: str, lo: int = 0, hi: int = MAX_NAMES) -> list[str]:
    return [f"{prefix}{i}" for i in range(rng.randint(lo, hi))]


def random_classification(rng: random.Random, tprefix: str = "t", iprefix: str = "y",
                          max_names: int = MAX_NAMES) -> Classification:
    types = _names(rng, tprefix, 0, max_names)
    insts = _names(rng, iprefix, 0, max_names)
    density = rng.random()
    pairs = [(t, y) for t in types for y in insts if rng.random() < density]
    return Classification(types, insts, pairs)


def random_infomorphism(rng: random.Random) -> Infomorphism:
    """Arbitrary total maps between two random classifications; usually invalid."""
    while True:
        c2 = random_classification(rng, "a", "p")
        c1 = random_classification(rng, "b", "q")
        if (c1.types or not c2.types) and (c2.instances or not c1.instances):
            break
    t1, i2 = sorted(c1.types), sorted(c2.instances)
    f = {x: rng.choice(t1) for x in sorted(c2.types)}
    g = {y: rng.choice(i2) for y in sorted(c1.instances)}
    return Infomorphism(c2, c1, f, g)


def valid_infomorphism(rng: random.Random) -> Infomorphism:
    """Choose ``C2`` and ``g`` freely, then define ``f`` and ``C1`` to satisfy the condition."""
    c2 = random_classification(rng, "a", "p")
    inst1 = _names(rng, "q", 0, MAX_NAMES)
    if inst1 and not c2.instances:
        c2 = Classification(c2.types, ["p0"], [])
    i2 = sorted(c2.instances)
    g = {y: rng.choice(i2) for y in inst1}
    # types of C2 with the same pulled-back extent may share an f-image
    pulled = {x: frozenset(y for y in inst1 if (x, g[y]) in c2.incidence) for x in c2.types}
    by_extent = defaultdict(list)
    for x in sorted(c2.types):
        by_extent[pulled[x]].append(x)
    f, ext1, n = {}, {}, 0
    for ext, xs in sorted(by_extent.items(), key=lambda kv: kv[1]):
        labels = [f"b{n + j}" for j in range(rng.randint(1, len(xs)))]
        n += len(labels)
        for x in xs:
            f[x] = rng.choice(labels)
        for lab in labels:
            ext1[lab] = ext
    for j in range(rng.randint(0, 2)):
        ext1[f"b{n + j}"] = frozenset(_subset(rng, inst1))
    c1 = Classification(ext1, inst1, [(t, y) for t, ys in ext1.items() for y in ys])
    return Infomorphism(c2, c1, f, g)


# -- structures ------------------------------------------------------------

ENTITY_POOL = ("P", "Q", "U", "V")
SORT_POOL = ("P", "Q", "S", "W", "Z")
KEY_POOL = ("k0", "k1", "k2", "k3", "k4")
VALUE_POOL = ("k0", "k1", "v0", "v1", "v2", "v3", "v4")
INDEX_POOL = ("a", "b", "c")


def _classifies(incidence, sig: dict, tup: dict) -> bool:
    return sig.keys() == tup.keys() and all((sig[i], tup[i]) in incidence for i in sig)


def random_structure(rng: random.Random, *, tuple_bias: float = 0.8) -> Structure:
    """A valid structure over small, possibly overlapping, name pools.

    Entity types and sorts may share names, as may keys and values, so
    mixed models (foreign keys) occur.  Duplicate descriptors occur too.
    """
    ents = _subset(rng, ENTITY_POOL, 0.6)
    sorts = _subset(rng, SORT_POOL, 0.6)
    keys = _subset(rng, KEY_POOL, 0.6)
    values = _subset(rng, VALUE_POOL, 0.6)
    density = rng.uniform(0.2, 0.9)
    attr = {(x, y) for x in sorts for y in values if rng.random() < density}
    sigs = {}
    for r in ents:
        idx = _subset(rng, INDEX_POOL, 0.5) if sorts else []
        sigs[r] = {i: rng.choice(sorts) for i in idx}
    tuples = {}
    for k in keys:
        home = rng.choice(ents) if ents and rng.random() < tuple_bias else None
        if home is not None and all(any((s, y) in attr for y in values) for s in sigs[home].values()):
            tuples[k] = {i: rng.choice([y for y in values if (s, y) in attr])
                         for i, s in sigs[home].items()}
        elif keys and rng.random() < 0.3 and tuples:
            tuples[k] = dict(tuples[rng.choice(sorted(tuples))])  # duplicate descriptor
        else:
            idx = _subset(rng, INDEX_POOL, 0.5) if values else []
            tuples[k] = {i: rng.choice(values) for i in idx}
    p = rng.uniform(0.3, 1.0)
    ent = [(r, k) for r in ents for k in keys
           if _classifies(attr, sigs[r], tuples[k]) and rng.random() < p]
    return Structure.build(entity_types=ents, keys=keys, ent_incidence=ent,
                           sorts=sorts, values=values, attr_incidence=attr,
                           signatures=sigs, tuples=tuples)


def _partition(rng: random.Random, items: list, prefix: str, counter: list[int]) -> dict:
    """Map ``items`` onto 1..len(items) fresh names."""
    labels = []
    for _ in range(rng.randint(1, len(items))):
        labels.append(f"{prefix}{counter[0]}")
        counter[0] += 1
    out = {x: labels[j] for j, x in enumerate(items[:len(labels)])}
    out.update({x: rng.choice(labels) for x in items[len(labels):]})
    return out


def valid_structure_morphism(rng: random.Random, target: Structure | None = None) -> StructureMorphism:
    """Build a source ``M2`` and ``⟨r, k, f, g⟩`` into ``target`` (random if omitted).

    ``f`` and ``r`` are drawn first and ``σ2`` chosen among the ``Σ_f``
    preimages of ``σ1 · r``; ``g`` and ``k`` may only merge instances whose
    pulled-back classification rows (and, for keys, ``Σ_g`` tuples) agree.
    """
    m1 = target if target is not None else random_structure(rng)
    x1, r1 = sorted(m1.attr.types), sorted(m1.ent.types)
    y1, k1 = sorted(m1.attr.instances), sorted(m1.ent.instances)

    # schema side: every target sort gets at least one preimage
    f, preimages = {}, defaultdict(list)
    for j, x in enumerate(x1):
        for c in range(rng.randint(1, 2)):
            f[f"X{j}_{c}"] = x
            preimages[x].append(f"X{j}_{c}")
    for j in range(rng.randint(0, 1) if x1 else 0):
        f[f"Xe{j}"] = rng.choice(x1)
    r = {f"R{j}": rng.choice(r1) for j in range(rng.randint(0, 4) if r1 else 0)}
    sigma2 = {r2: {i: rng.choice(preimages[s]) for i, s in m1.sigma(r1_).pairs}
              for r2, r1_ in r.items()}
    x2 = sorted(f)

    # pulled-back rows over the source types
    attr_row = {y: frozenset(x for x in x2 if m1.attr.holds(y, f[x])) for y in y1}
    ent_row = {k: frozenset(t for t in r if m1.ent.holds(k, r[t])) for k in k1}

    counter = [0]
    g = {}
    groups = defaultdict(list)
    for y in y1:
        groups[attr_row[y]].append(y)
    attr2 = set()
    for row, ys in groups.items():
        block = _partition(rng, ys, "Y", counter)
        g.update(block)
        attr2 |= {(x, v) for v in set(block.values()) for x in row}
    extra_vals = [f"Ye{j}" for j in range(rng.randint(0, 2))]
    attr2 |= {(x, v) for v in extra_vals for x in x2 if rng.random() < 0.5}
    y2 = sorted(set(g.values()) | set(extra_vals))

    k = {}
    kgroups = defaultdict(list)
    for key in k1:
        pushed = tuple(sorted((i, g[t]) for i, t in m1.tau(key).pairs))
        kgroups[(ent_row[key], pushed)].append(key)
    tau2, ent2 = {}, set()
    counter = [0]
    for (row, pushed), ks in kgroups.items():
        block = _partition(rng, ks, "K", counter)
        k.update(block)
        for key2 in set(block.values()):
            tau2[key2] = dict(pushed)
            ent2 |= {(t, key2) for t in row}
    for j in range(rng.randint(0, 2)):
        key2 = f"Ke{j}"
        idx = _subset(rng, INDEX_POOL, 0.5) if y2 else []
        tau2[key2] = {i: rng.choice(y2) for i in idx}
        ent2 |= {(t, key2) for t in r if _classifies(attr2, sigma2[t], tau2[key2]) and rng.random() < 0.7}

    m2 = Structure.build(entity_types=r, keys=tau2, ent_incidence=ent2,
                         sorts=x2, values=y2, attr_incidence=attr2,
                         signatures=sigma2, tuples=tau2)
    return StructureMorphism(m2, m1, r=r, k=k, f=f, g=g)
