"""Command-line interface.

Exit codes: 0 when every checked condition holds, 1 when a law or
precondition of the model fails (the report goes to standard output), 2 for
usage errors, unreadable files and malformed documents.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import io as fio
from .errors import (
    FoleError,
    InvalidInput,
    InvalidMorphism,
    InvalidStructure,
    NotUnifiedModel,
    ParseError,
    PartialMap,
    ReferentialViolation,
    UnknownType,
    ValidationError,
)
from .fibration import factorize_structure_morphism, image_along_universe, reduct_along_schema
from .interpretation import key_embedded_table, tabular_interpretation
from .linearization import export_eav, export_ntriples, linearize, olog_instance, olog_schema, unify
from .schema import SchemaMorphism, UniverseMorphism
from .structure import (
    check_integrity,
    check_overlap_coherence,
    check_structure,
    check_structure_morphism,
    key_embed,
)
from .verdict import Verdict

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

# precondition failures of a well-formed model count as violations
VIOLATION_ERRORS = (InvalidStructure, InvalidMorphism, InvalidInput, NotUnifiedModel,
                    ReferentialViolation, ValidationError)
USAGE_ERRORS = (ParseError, UnknownType, PartialMap, OSError)


class _Output:
    def __init__(self, as_json: bool, command: str):
        self.as_json = as_json
        self.command = command

    def data(self, payload: bytes) -> None:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()

    def verdict(self, verdict: Verdict, **sections: Verdict) -> int:
        ok = verdict.ok and all(v.ok for v in sections.values())
        if self.as_json:
            body = {"command": self.command, **verdict.to_json()}
            if sections:
                body["verdict"] = "ok" if ok else "violation"
                body.update({name: v.to_json() for name, v in sections.items()})
            self.data((json.dumps(body, ensure_ascii=False, sort_keys=True) + "\n").encode())
        else:
            lines = []
            for name, v in [("", verdict), *sections.items()]:
                prefix = f"{name}: " if name else ""
                if name:
                    lines.append(f"{prefix}{'ok' if v.ok else 'violation'}")
                for viol in v.violations:
                    detail = f" ({viol.detail})" if viol.detail else ""
                    lines.append(f"{prefix}violation {viol.law} {' '.join(viol.names)}{detail}".rstrip())
            if not sections:
                lines.insert(0, "ok" if ok else "violation")
            self.data(("\n".join(lines) + "\n").encode())
        return EXIT_OK if ok else EXIT_VIOLATION

    def error(self, err: Exception, code: int) -> int:
        kind = type(err).__name__
        if self.as_json:
            body = {"command": self.command, "verdict": "error" if code == EXIT_USAGE else "violation",
                    "error": kind, "message": str(err)}
            offending = getattr(err, "offending", None)
            if offending:
                body["offending"] = [list(o) if isinstance(o, tuple) else o for o in offending]
            self.data((json.dumps(body, ensure_ascii=False, sort_keys=True) + "\n").encode())
        elif code == EXIT_VIOLATION:
            self.data(f"violation {kind}: {err}\n".encode())
        else:
            print(f"fole {self.command}: {kind}: {err}", file=sys.stderr)
        return code


def _model(path: str, **kwargs):
    return fio.load_model(path, **kwargs)


def cmd_validate(args, out: _Output) -> int:
    return out.verdict(check_structure(_model(args.model)))


def cmd_check_morphism(args, out: _Output) -> int:
    doc, src, tgt = fio.load_morphism(args.morphism)
    return out.verdict(check_structure_morphism(fio.structure_morphism(doc, src, tgt)))


def _maps(doc, names):
    missing = [n for n in names if doc.maps[n] is None]
    if missing:
        raise ParseError(f"morphism document lacks maps {missing}")
    return [doc.maps[n] for n in names]


def cmd_reduct(args, out: _Output) -> int:
    doc, src, tgt = fio.load_morphism(args.morphism)
    r, f = _maps(doc, "rf")
    out.data(fio.emit_model(reduct_along_schema(tgt, SchemaMorphism(src.schema, tgt.schema, r, f))))
    return EXIT_OK


def cmd_image(args, out: _Output) -> int:
    doc, src, tgt = fio.load_morphism(args.morphism)
    k, g = _maps(doc, "kg")
    out.data(fio.emit_model(image_along_universe(src, UniverseMorphism(src.universe, tgt.universe, k, g))))
    return EXIT_OK


def cmd_embed_keys(args, out: _Output) -> int:
    out.data(fio.emit_model(key_embed(_model(args.model))))
    return EXIT_OK


def cmd_interpret(args, out: _Output) -> int:
    m = _model(args.model)
    table = key_embedded_table(m, args.type) if args.embed else tabular_interpretation(m, args.type)
    out.data(fio.emit_csv(table))
    return EXIT_OK


def cmd_extent(args, out: _Output) -> int:
    m = _model(args.model)
    cls = m.ent if args.side == "ent" else m.attr
    out.data("".join(f"{y}\n" for y in sorted(cls.extent(args.type))).encode("utf-8"))
    return EXIT_OK


def cmd_integrity(args, out: _Output) -> int:
    m = _model(args.model)
    report = check_integrity(m)
    return out.verdict(Verdict(), entity=report.entity, domain=report.domain,
                       referential=report.referential, overlap=check_overlap_coherence(m))


def cmd_factorize(args, out: _Output) -> int:
    doc, src, tgt = fio.load_morphism(args.morphism)
    w = factorize_structure_morphism(fio.structure_morphism(doc, src, tgt))
    legs = {"schemaLeg": w.schema_leg, "schemaBridge": w.schema_bridge,
            "universeBridge": w.universe_bridge, "universeLeg": w.universe_leg}
    body = {
        "midpointsEqual": fio.emit_model(w.schema_mid) == fio.emit_model(w.universe_mid),
        "schemaRouteRecomposes": w.schema_composite() == w.original,
        "universeRouteRecomposes": w.universe_composite() == w.original,
        "legsValid": {name: check_structure_morphism(leg).ok for name, leg in legs.items()},
        "legs": {name: fio.morphism_maps(leg) for name, leg in legs.items()},
        "schemaMid": fio.model_document(w.schema_mid),
        "universeMid": fio.model_document(w.universe_mid),
    }
    out.data(fio.dump_json(body))
    return EXIT_OK


def cmd_linearize(args, out: _Output) -> int:
    m = _model(args.model)
    quads = linearize(m)
    if args.format == "eav":
        out.data(export_eav(quads))
    else:
        out.data(export_ntriples(quads, m.universe.keys))
    return EXIT_OK


def cmd_olog(args, out: _Output) -> int:
    m = _model(args.model)
    if args.format == "dot":
        olog_instance(m)  # enforce the full precondition, not just the graph shape
        out.data(fio.emit_dot(olog_schema(m)))
    else:
        inst = olog_instance(m)
        body = {
            "nodes": {n: sorted(inst.node_sets[n]) for n in sorted(inst.graph.nodes)},
            "edges": [{"source": e.source, "index": e.index, "target": e.target,
                       "function": dict(sorted(inst.edge_fns[e].items()))}
                      for e in sorted(inst.graph.edges)],
        }
        out.data(fio.dump_json(body))
    return EXIT_OK


def cmd_unify(args, out: _Output) -> int:
    out.data(fio.emit_model(unify(_model(args.model))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fole", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, arg="model"):
        p = sub.add_parser(name, help=help_)
        p.add_argument(arg)
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "check the designation condition")
    add("check-morphism", cmd_check_morphism, "check the four structure-morphism laws", "morphism")
    add("reduct", cmd_reduct, "reduct of the target model along the schema part (r, f)", "morphism")
    add("image", cmd_image, "image of the source model along the universe part (k, g)", "morphism")
    add("embed-keys", cmd_embed_keys, "emit the key-embedding model")
    p = add("interpret", cmd_interpret, "emit the table of an entity type as CSV")
    p.add_argument("--type", required=True)
    p.add_argument("--embed", action="store_true", help="key-embedded table (self column first)")
    p = add("extent", cmd_extent, "list the extent of a type, one name per line")
    p.add_argument("--type", required=True)
    p.add_argument("--side", choices=("ent", "attr"), default="ent")
    add("integrity", cmd_integrity, "entity, domain, referential and overlap constraints")
    add("factorize", cmd_factorize, "both fiber factorizations of a structure morphism", "morphism")
    p = add("linearize", cmd_linearize, "emit the linearization")
    p.add_argument("--format", choices=("eav", "ntriples"), default="eav")
    p = add("olog", cmd_olog, "emit the olog graph (unified models only)")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    add("unify", cmd_unify, "emit the unified form of a model")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Output(args.json, args.command)
    try:
        return args.fn(args, out)
    except VIOLATION_ERRORS as err:
        return out.error(err, EXIT_VIOLATION)
    except USAGE_ERRORS as err:
        return out.error(err, EXIT_USAGE)
    except FoleError as err:
        return out.error(err, EXIT_VIOLATION)


cli_dispatch = main

if __name__ == "__main__":
    sys.exit(main())
