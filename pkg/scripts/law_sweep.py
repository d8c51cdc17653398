"""Sweep the law checkers over random models and print a summary table.

    python3 scripts/law_sweep.py                  # 2000 cases, seed 0
    python3 scripts/law_sweep.py --cases 500 --seed 7 --json

For each experiment the script counts how often each law fails.  Models
built by the ``valid_*`` generators must never fail; perturbed morphisms
(one map entry rerouted) show which laws catch which kind of damage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from fole.classification import check_infomorphism, factorize_infomorphism
from fole.fibration import factorize_structure_morphism
from fole.generate import (
    random_infomorphism,
    random_structure,
    valid_infomorphism,
    valid_structure_morphism,
)
from fole.structure import (
    StructureMorphism,
    check_structure,
    check_structure_morphism,
    is_extensive,
    key_embed,
)


@dataclass
class SweepConfig:
    cases: int = 2000
    seed: int = 0


@dataclass
class Tally:
    name: str
    cases: int = 0
    failing: int = 0
    laws: Counter = field(default_factory=Counter)
    seconds: float = 0.0

    def add(self, verdict) -> None:
        self.cases += 1
        self.failing += not verdict.ok
        self.laws.update({v.law for v in verdict.violations})


def perturb(rng: random.Random, phi: StructureMorphism) -> StructureMorphism:
    """Reroute one entry of one of the four maps to another target name."""
    maps = {"r": phi.r, "k": phi.k, "f": phi.f, "g": phi.g}
    codomains = {"r": phi.target.ent.types, "k": phi.source.ent.instances,
                 "f": phi.target.attr.types, "g": phi.source.attr.instances}
    choices = [name for name, fn in maps.items() if fn and len(codomains[name]) > 1]
    if not choices:
        return phi
    name = rng.choice(choices)
    fn = dict(maps[name])
    x = rng.choice(sorted(fn))
    fn[x] = rng.choice(sorted(set(codomains[name]) - {fn[x]}))
    maps[name] = fn
    return StructureMorphism(phi.source, phi.target, **maps)


def sweep(cfg: SweepConfig) -> list[Tally]:
    rng = random.Random(cfg.seed)
    tallies = {name: Tally(name) for name in
               ("infomorphism/random", "infomorphism/valid", "infomorphism/factorized legs",
                "structure/random", "structure/key-embedded",
                "morphism/valid", "morphism/perturbed", "morphism/factorized legs")}
    extensive = 0

    def timed(name, fn):
        start = time.perf_counter()
        fn()
        tallies[name].seconds += time.perf_counter() - start

    for _ in range(cfg.cases):
        m = random_infomorphism(rng)
        timed("infomorphism/random", lambda: tallies["infomorphism/random"].add(check_infomorphism(m)))
        v = valid_infomorphism(rng)
        timed("infomorphism/valid", lambda: tallies["infomorphism/valid"].add(check_infomorphism(v)))
        fac = factorize_infomorphism(v)
        for leg in (fac.leg_g, fac.leg_f):
            tallies["infomorphism/factorized legs"].add(check_infomorphism(leg))

        s = random_structure(rng)
        tallies["structure/random"].add(check_structure(s))
        tallies["structure/key-embedded"].add(check_structure(key_embed(s)))
        extensive += is_extensive(s)

        phi = valid_structure_morphism(rng)
        timed("morphism/valid", lambda: tallies["morphism/valid"].add(check_structure_morphism(phi)))
        bad = perturb(rng, phi)
        timed("morphism/perturbed", lambda: tallies["morphism/perturbed"].add(check_structure_morphism(bad)))
        w = factorize_structure_morphism(phi)
        for leg in (w.schema_leg, w.schema_bridge, w.universe_bridge, w.universe_leg):
            tallies["morphism/factorized legs"].add(check_structure_morphism(leg))

    print(f"extensive random structures: {extensive}/{cfg.cases}", file=sys.stderr)
    return list(tallies.values())


def render(tallies: list[Tally]) -> str:
    rows = [("experiment", "cases", "failing", "laws hit", "check s")]
    for t in tallies:
        laws = ", ".join(f"{law}:{n}" for law, n in sorted(t.laws.items())) or "-"
        secs = f"{t.seconds:.2f}" if t.seconds else "-"
        rows.append((t.name, str(t.cases), str(t.failing), laws, secs))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cases", type=int, default=SweepConfig.cases)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--json", action="store_true", help="print tallies as JSON")
    args = parser.parse_args(argv)
    tallies = sweep(SweepConfig(args.cases, args.seed))
    if args.json:
        print(json.dumps([dict(asdict(t), laws=dict(t.laws)) for t in tallies], indent=2, sort_keys=True))
    else:
        print(render(tallies))
    may_fail = {"infomorphism/random", "morphism/perturbed"}
    must_hold = [t for t in tallies if t.name not in may_fail]
    return 0 if all(t.failing == 0 for t in must_hold) else 1


if __name__ == "__main__":
    sys.exit(main())
