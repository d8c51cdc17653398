"""Write the model and morphism documents used by the CLI tests, and
optionally refresh the golden outputs.

    python3 scripts/build_test_data.py            # data files only
    python3 scripts/build_test_data.py --golden   # also rewrite tests/golden/

Golden files are frozen once reviewed; rerun with ``--golden`` only after a
deliberate output change, then diff them.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from fole.fixtures import EXTENTS, TUPLES, company
from fole.io import MorphismDocument, emit_model, emit_morphism_document
from fole.linearization import unify

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
GOLDEN = ROOT / "tests" / "golden"

sys.path.insert(0, str(ROOT / "tests"))
from cli_cases import GOLDEN_CASES, run  # noqa: E402

RENAME = {"Alice": "A", "Houston": "HOU"}


def renamed():
    tuples = {k: {i: RENAME.get(y, y) for i, y in t.items()} for k, t in TUPLES.items()}
    extents = {x: [RENAME.get(y, y) for y in ys] for x, ys in EXTENTS.items()}
    return company(tuples=tuples, extents=extents)


def identity(names):
    return {n: n for n in names}


def write_data() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    m = company()
    models = {
        "company.fole": m,
        "company_renamed.fole": renamed(),
        "company_arity_drop.fole": company(tuples=dict(
            TUPLES, a1={i: v for i, v in TUPLES["a1"].items() if i != "project"})),
        "company_stray.fole": company(extents=dict(EXTENTS, Dept=["d1", "d9"])),
        "company_unified.fole": unify(m),
    }
    for name, model in models.items():
        (DATA / name).write_bytes(emit_model(model))
    # a pair outside the carriers and a truncated document
    text = emit_model(m).decode().replace('["Act", "a1"]', '["Act", "a9"]')
    (DATA / "company_dangling.fole").write_text(text, encoding="utf-8")
    (DATA / "malformed.fole").write_text(emit_model(m).decode()[:120], encoding="utf-8")

    maps = {"r": identity(m.ent.types), "k": identity(m.ent.instances),
            "f": identity(m.attr.types), "g": {y: RENAME.get(y, y) for y in m.attr.instances}}
    docs = {
        "renaming.json": maps,
        "broken.json": {"r": dict(maps["r"], Emp="Dept"), "k": dict(maps["k"], a1="e1"),
                        "f": maps["f"], "g": dict(maps["g"], Alice="7")},
        "partial.json": {name: fn for name, fn in maps.items() if name != "g"},
    }
    for name, fns in docs.items():
        doc = MorphismDocument("company_renamed.fole", "company.fole",
                               {f: fns.get(f) for f in "rkfg"})
        (DATA / name).write_bytes(emit_morphism_document(doc))


def write_golden() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in GOLDEN_CASES:
        code, out = run(argv)
        (GOLDEN / name).write_bytes(out)
        print(f"{code}  {name}")


def cli() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--golden", action="store_true", help="also rewrite golden outputs")
    args = parser.parse_args()
    write_data()
    if args.golden:
        write_golden()
    return 0


if __name__ == "__main__":
    sys.exit(cli())
