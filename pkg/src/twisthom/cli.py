"""Command-line front end.

Subcommands::

    homology          twisted homology summaries of a space + abelian twist
    verify            space/twist validation, d^2 = 0, identity suites
    verify-identities word-model Delta/simplicial identity suites
    mv-check          Mayer-Vietoris set identity and degreewise exactness
    cone-check        regular extension, contraction, vanishing homology
    bundle-check      fibre-bundle local triviality via untwisting maps
    smash             twisted smash product cell counts and validation

Exit codes: 0 every requested verdict passed, 1 a verification failed,
2 the inputs could not be parsed or are inconsistent.

Input documents are JSON. Spaces::

    {"schema": "twisthom.space/1", "type": "complex",
     "vertices": ["a", "b"], "facets": [["a", "b"]]}

    {"schema": "twisthom.space/1", "type": "category",
     "objects": ["a", "b"],
     "morphisms": [{"name": "f", "src": "a", "tgt": "b"}],
     "compose": [["g", "f", "gf"]]}

Twists carry a "kind" of "abelian", "finite" or "slice"; see the README
for the full field list.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .abelian import FgAbelianGroup, IntegerMatrix
from .chains import (
    cone_null_homotopy,
    mayer_vietoris_check,
    twisted_group_chains,
    verify_boundary_squared,
    verify_cone_face_relations,
    verify_null_homotopy,
)
from .groups import FiniteGroupTable
from .groupwords import TwistedFreeConstruction, abelianized_structure, check_simplicial_identities
from .products import twisted_smash, verify_bundle_local_triviality
from .spaces import (
    FiniteCategory,
    OrderedComplex,
    nerve_slice,
    standard_simplex_slice,
    validate_category,
    validate_complex,
    validate_slice,
)
from .twist import (
    TwistedAbelianStructure,
    TwistedFiniteGroupStructure,
    TwistedSliceStructure,
    is_nonsingular,
    nerve_relabel_map,
    regular_extension,
    validate_twist,
)

REPORT_SCHEMA = "twisthom.report/1"


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def load_space(doc: dict):
    kind = doc.get("type")
    if kind == "complex":
        try:
            return OrderedComplex.from_facets(doc["vertices"],
                                              [tuple(f) for f in doc.get("facets", [])])
        except (KeyError, ValueError, TypeError) as e:
            raise InputError(f"bad complex document: {e}") from None
    if kind == "category":
        try:
            morphisms = [(m["name"], m["src"], m["tgt"]) for m in doc.get("morphisms", [])]
            compose = {(g, f): r for g, f, r in doc.get("compose", [])}
            return FiniteCategory(doc["objects"], morphisms, compose)
        except (KeyError, ValueError, TypeError) as e:
            raise InputError(f"bad category document: {e}") from None
    raise InputError(f"space type must be 'complex' or 'category', got {kind!r}")


def _space_valid(space):
    if isinstance(space, OrderedComplex):
        return validate_complex(space)
    return validate_category(space)


def load_group(doc: dict) -> FgAbelianGroup:
    try:
        return FgAbelianGroup.from_invariants(doc.get("free_rank", 0),
                                              doc.get("torsion", []))
    except (ValueError, TypeError) as e:
        raise InputError(f"bad group document: {e}") from None


def load_abelian_twist(doc: dict, space) -> TwistedAbelianStructure:
    group = load_group(doc.get("group", {}))
    delta = doc.get("delta", {})
    assignment = {}
    for v, rows in delta.items():
        try:
            assignment[v] = IntegerMatrix.from_rows(rows, cols=group.generators)
        except (ValueError, TypeError) as e:
            raise InputError(f"bad matrix for vertex {v!r}: {e}") from None
    return TwistedAbelianStructure(space, group, assignment)


def load_finite_group(doc: dict) -> FiniteGroupTable:
    if "cyclic" in doc:
        return FiniteGroupTable.cyclic(int(doc["cyclic"]))
    try:
        elements = doc["elements"]
        index = {e: i for i, e in enumerate(elements)}
        table = [[index[x] for x in row] for row in doc["table"]]
        return FiniteGroupTable(elements, table)
    except (KeyError, ValueError, TypeError) as e:
        raise InputError(f"bad finite group document: {e}") from None


def load_finite_twist(doc: dict, space) -> TwistedFiniteGroupStructure:
    group = load_finite_group(doc.get("group", {}))
    assignment = {}
    for v, entry in doc.get("delta", {}).items():
        if "scale" in entry:
            if "cyclic" not in doc.get("group", {}):
                raise InputError("'scale' twists need a cyclic group")
            n = group.order
            k = int(entry["scale"])
            assignment[v] = tuple((k * g) % n for g in range(n))
        elif "table" in entry:
            try:
                assignment[v] = tuple(group.index(entry["table"][e])
                                      for e in group.elements)
            except KeyError as e:
                raise InputError(f"twist table at {v!r} misses element {e}") from None
        else:
            raise InputError(f"twist at {v!r} needs 'scale' or 'table'")
    return TwistedFiniteGroupStructure(space, group, assignment)


def _cyclic_category(n: int) -> FiniteCategory:
    arrows = [(f"g{k}", "w", "w") for k in range(1, n)]
    compose = {}
    for a in range(1, n):
        for b in range(1, n):
            s = (a + b) % n
            compose[(f"g{a}", f"g{b}")] = f"g{s}" if s else "id_w"
    return FiniteCategory(["w"], arrows, compose)


def load_slice_twist(doc: dict, space, cap: int):
    """Returns (fibre slice, structure). The fibre is always pointed."""
    fib = doc.get("fibre", {})
    builtin = fib.get("builtin")
    if builtin == "standard_simplex":
        Y = standard_simplex_slice(int(fib.get("n", 1)), cap)
        base_cat = None
    elif builtin == "cyclic_nerve":
        base_cat = _cyclic_category(int(fib["order"]))
        Y = nerve_slice(base_cat, cap, basepoint="w")
    elif builtin == "nerve":
        base_cat = load_space(fib["space"])
        Y = nerve_slice(base_cat, cap, basepoint=fib.get("basepoint"))
    else:
        raise InputError("fibre.builtin must be standard_simplex, cyclic_nerve or nerve")

    assignment = {}
    for v, entry in doc.get("delta", {}).items():
        if entry.get("identity"):
            assignment[v] = tuple({c: c for c in Y.cells(n)} for n in range(cap + 1))
        elif "scale" in entry:
            if builtin != "cyclic_nerve":
                raise InputError("'scale' slice twists need the cyclic_nerve fibre")
            n = int(fib["order"])
            u = int(entry["scale"])
            arrow_map = {f"g{k}": (f"g{(u * k) % n}" if (u * k) % n else "id_w")
                         for k in range(1, n)}
            assignment[v] = nerve_relabel_map(base_cat, Y, {}, arrow_map)
        elif "vertex_map" in entry or "arrow_map" in entry:
            if base_cat is None:
                raise InputError("relabel twists need a nerve fibre")
            assignment[v] = nerve_relabel_map(base_cat, Y,
                                              entry.get("vertex_map", {}),
                                              entry.get("arrow_map", {}))
        else:
            raise InputError(f"slice twist at {v!r} needs identity/scale/vertex_map")
    return Y, TwistedSliceStructure(space, Y, assignment)


def _emit(report: dict, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _finish(report: dict, args, started: float) -> int:
    report["schema"] = REPORT_SCHEMA
    report["elapsed_s"] = round(time.perf_counter() - started, 3)
    _emit(report, getattr(args, "out", None))
    return 0 if report.get("ok") else 1


def cmd_homology(args) -> int:
    started = time.perf_counter()
    space = load_space(_load_json(args.space))
    twist_doc = _load_json(args.twist)
    if twist_doc.get("kind", "abelian") != "abelian":
        raise InputError("homology needs an abelian twist document")
    rep = _space_valid(space)
    if not rep.ok:
        raise InputError("invalid space: " + rep.violations[0])
    structure = load_abelian_twist(twist_doc, space)
    trep = validate_twist(structure)
    if not trep.ok:
        raise InputError("invalid twist: " + trep.violations[0])
    basepoint = args.basepoint
    C = twisted_group_chains(space, structure, args.cap,
                             reduced=args.reduced, basepoint=basepoint,
                             check_twist=False)
    summaries = {n: C.homology(n) for n in range(args.cap)}
    for n in range(args.cap):
        print(f"{n}: {summaries[n]}")
    report = {
        "command": "homology",
        "ok": True,
        "reduced": args.reduced,
        "basepoint": C.basepoint,
        "cap": args.cap,
        "homology": {str(n): str(s) for n, s in summaries.items()},
        "chain_ranks": {str(n): len(C.basis(n)) for n in range(args.cap + 1)},
    }
    if args.emit_matrices:
        report["boundaries"] = {str(n): C.boundary(n).to_rows()
                                for n in range(1, args.cap + 1)}
    return _finish(report, args, started)


def cmd_verify(args) -> int:
    started = time.perf_counter()
    space = load_space(_load_json(args.space))
    twist_doc = _load_json(args.twist)
    verdicts = {}
    witnesses = []

    srep = _space_valid(space)
    verdicts["space"] = srep.ok
    witnesses.extend(srep.violations)

    kind = twist_doc.get("kind", "abelian")
    mode_note = None
    if srep.ok:
        if kind == "abelian":
            structure = load_abelian_twist(twist_doc, space)
            trep = validate_twist(structure)
            verdicts["twist"] = trep.ok
            witnesses.extend(trep.violations)
            if trep.ok:
                C = twisted_group_chains(space, structure, args.cap,
                                         reduced=args.reduced,
                                         basepoint=args.basepoint,
                                         check_twist=False)
                brep = verify_boundary_squared(C)
                verdicts["boundary_squared"] = brep.ok
                witnesses.extend(brep.violations)
        elif kind == "finite":
            structure = load_finite_twist(twist_doc, space)
            trep = validate_twist(structure)
            verdicts["twist"] = trep.ok
            witnesses.extend(trep.violations)
            if trep.ok:
                F = TwistedFreeConstruction(space, structure,
                                            args.basepoint or space.vertex_list()[0],
                                            args.cap, check=False)
                irep = check_simplicial_identities(F, max_degree=min(3, args.cap),
                                                   samples=args.samples, seed=args.seed)
                verdicts["identities"] = irep.ok
                if irep.mode == "delta":
                    mode_note = ("twist is singular: Delta-identity suite only "
                                 "(degeneracy identities skipped)")
                witnesses.extend(f"{name} at degree {deg} {idx}"
                                 for name, deg, idx, _ in irep.failures)
                ab = abelianized_structure(structure)
                C = twisted_group_chains(space, ab.structure, args.cap,
                                         reduced=args.reduced,
                                         basepoint=args.basepoint,
                                         check_twist=False)
                brep = verify_boundary_squared(C)
                verdicts["boundary_squared"] = brep.ok
                witnesses.extend(brep.violations)
        else:
            raise InputError("verify accepts abelian or finite twists")

    ok = all(verdicts.values())
    for name, value in verdicts.items():
        print(f"{name}: {'pass' if value else 'FAIL'}")
    if mode_note:
        print(f"note: {mode_note}")
    report = {"command": "verify", "ok": ok, "verdicts": verdicts,
              "witnesses": witnesses[:50]}
    if mode_note:
        report["note"] = mode_note
    return _finish(report, args, started)


def cmd_verify_identities(args) -> int:
    started = time.perf_counter()
    space = load_space(_load_json(args.space))
    twist_doc = _load_json(args.twist)
    if twist_doc.get("kind") != "finite":
        raise InputError("verify-identities needs a finite-group twist")
    structure = load_finite_twist(twist_doc, space)
    trep = validate_twist(structure)
    if not trep.ok:
        raise InputError("invalid twist: " + trep.violations[0])
    F = TwistedFreeConstruction(space, structure,
                                args.basepoint or space.vertex_list()[0],
                                args.cap, check=False)
    rep = check_simplicial_identities(F, max_degree=min(3, args.cap),
                                      samples=args.samples, seed=args.seed)
    print(f"mode: {rep.mode}")
    print(f"cases: {rep.cases}")
    print(f"failures: {len(rep.failures)}")
    report = {"command": "verify-identities", "ok": rep.ok, "mode": rep.mode,
              "cases": rep.cases, "seed": args.seed,
              "witnesses": [f"{name} degree {deg} idx {idx}"
                            for name, deg, idx, _ in rep.failures]}
    return _finish(report, args, started)


def cmd_mv_check(args) -> int:
    started = time.perf_counter()
    K1 = load_space(_load_json(args.space1))
    K2 = load_space(_load_json(args.space2))
    if not isinstance(K1, OrderedComplex) or not isinstance(K2, OrderedComplex):
        raise InputError("mv-check works on simplicial complexes")
    twist_doc = _load_json(args.twist)
    from .spaces import union as complex_union

    try:
        K = complex_union(K1, K2)
    except ValueError as e:
        raise InputError(str(e)) from None
    structure = load_abelian_twist(twist_doc, K)
    trep = validate_twist(structure)
    if not trep.ok:
        raise InputError("invalid twist: " + trep.violations[0])
    try:
        rep = mayer_vietoris_check(K1, K2, structure, args.cap, args.basepoint,
                                   check_twist=False)
    except ValueError as e:
        raise InputError(str(e)) from None
    print(f"set level degrees: {list(rep.set_level_degrees)}")
    print(f"exactness degrees: {list(rep.exactness_degrees)}")
    print("exact" if rep.ok else "NOT exact")
    report = {"command": "mv-check", "ok": rep.ok,
              "set_level_degrees": list(rep.set_level_degrees),
              "exactness_degrees": list(rep.exactness_degrees),
              "witnesses": list(rep.violations)}
    return _finish(report, args, started)


def cmd_cone_check(args) -> int:
    started = time.perf_counter()
    base = load_space(_load_json(args.space))
    twist_doc = _load_json(args.twist)
    srep = _space_valid(base)
    if not srep.ok:
        raise InputError("invalid base space: " + srep.violations[0])
    if args.basepoint is not None and args.basepoint != args.apex:
        raise InputError("cone reduction happens at the apex; do not pass "
                         "a different basepoint")
    delta = dict(twist_doc.get("delta", {}))
    if args.apex not in delta:
        raise InputError(f"twist document carries no map for the apex {args.apex!r}")
    base_doc = dict(twist_doc)
    base_doc["delta"] = {v: m for v, m in delta.items() if v != args.apex}
    structure = load_abelian_twist(base_doc, base)
    trep = validate_twist(structure)
    if not trep.ok:
        raise InputError("invalid twist: " + trep.violations[0])
    apex_doc = {"group": twist_doc.get("group", {}), "delta": {args.apex: delta[args.apex]}}
    apex_matrix = load_abelian_twist(apex_doc, base).assignment[args.apex]
    try:
        ext = regular_extension(structure, args.apex, apex_matrix)
    except ValueError as e:
        raise InputError(str(e)) from None
    phi = cone_null_homotopy(ext.space, ext, args.apex, args.cap, check_twist=False)
    C = phi.complex
    hrep = verify_null_homotopy(C, phi)
    frep = verify_cone_face_relations(C, phi)
    homology = {n: C.homology(n) for n in range(args.cap)}
    vanishes = all(s.is_trivial for s in homology.values())
    ok = hrep.ok and frep.ok and vanishes
    print(f"contraction identity: {'pass' if hrep.ok else 'FAIL'}")
    print(f"face relations: {'pass' if frep.ok else 'FAIL'}")
    for n, s in homology.items():
        print(f"H~{n} = {s}")
    report = {"command": "cone-check", "ok": ok,
              "homotopy": hrep.ok, "face_relations": frep.ok,
              "homology": {str(n): str(s) for n, s in homology.items()},
              "witnesses": list(hrep.violations + frep.violations)}
    return _finish(report, args, started)


def cmd_bundle_check(args) -> int:
    started = time.perf_counter()
    space = load_space(_load_json(args.space))
    twist_doc = _load_json(args.twist)
    if twist_doc.get("kind") != "slice":
        raise InputError("bundle-check needs a slice twist document")
    Y, structure = load_slice_twist(twist_doc, space, args.cap)
    trep = validate_twist(structure)
    if not trep.ok:
        raise InputError("invalid twist: " + trep.violations[0])
    if is_nonsingular(structure) is None:
        raise InputError("bundle-check needs a non-singular twist")
    rep = verify_bundle_local_triviality(space, Y, structure, args.cap,
                                         base_max=args.base_max, check_twist=False)
    print(f"base paths checked: {rep.base_paths_checked}")
    print(f"cells checked: {rep.cells_checked}")
    print("locally trivial" if rep.ok else "NOT locally trivial")
    report = {"command": "bundle-check", "ok": rep.ok,
              "base_paths_checked": rep.base_paths_checked,
              "cells_checked": rep.cells_checked,
              "witnesses": list(rep.violations)}
    return _finish(report, args, started)


def cmd_smash(args) -> int:
    started = time.perf_counter()
    space = load_space(_load_json(args.space))
    twist_doc = _load_json(args.twist)
    if twist_doc.get("kind") != "slice":
        raise InputError("smash needs a slice twist document")
    Y, structure = load_slice_twist(twist_doc, space, args.cap)
    trep = validate_twist(structure)
    if not trep.ok:
        raise InputError("invalid twist: " + trep.violations[0])
    basepoint = args.basepoint or space.vertex_list()[0]
    try:
        sm = twisted_smash(Y, space, structure, basepoint, args.cap,
                           check_twist=False)
    except ValueError as e:
        raise InputError(str(e)) from None
    vrep = validate_slice(sm)
    print(f"cell counts: {list(sm.counts())}")
    print("valid slice" if vrep.ok else "INVALID slice")
    report = {"command": "smash", "ok": vrep.ok,
              "cells": list(sm.counts()),
              "witnesses": list(vrep.violations)}
    return _finish(report, args, started)


def _add_common(p, twist=True, basepoint=True):
    p.add_argument("--space", required=True, help="space document (JSON)")
    if twist:
        p.add_argument("--twist", required=True, help="twist document (JSON)")
    p.add_argument("--cap", type=int, required=True, help="degree cap (>= 1)")
    if basepoint:
        p.add_argument("--basepoint", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twisthom",
                                     description="twisted simplicial structures, exactly verified")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="twisted homology summaries")
    _add_common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--reduced", dest="reduced", action="store_true", default=True)
    g.add_argument("--unreduced", dest="reduced", action="store_false")
    p.add_argument("--emit-matrices", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", help="validations, d^2 = 0, identity suites")
    _add_common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--reduced", dest="reduced", action="store_true", default=True)
    g.add_argument("--unreduced", dest="reduced", action="store_false")
    p.add_argument("--samples", type=int, default=500)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-identities", help="word-model identity suites")
    _add_common(p)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("mv-check", help="Mayer-Vietoris exactness")
    p.add_argument("--space1", required=True)
    p.add_argument("--space2", required=True)
    p.add_argument("--twist", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--basepoint", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_mv_check)

    p = sub.add_parser("cone-check", help="cone contraction certificate")
    _add_common(p)
    p.add_argument("--apex", required=True)
    p.set_defaults(func=cmd_cone_check)

    p = sub.add_parser("bundle-check", help="fibre bundle local triviality")
    _add_common(p, basepoint=False)
    p.add_argument("--base-max", type=int, default=None,
                   help="largest base path degree to check (default cap-1)")
    p.set_defaults(func=cmd_bundle_check)

    p = sub.add_parser("smash", help="twisted smash product")
    _add_common(p)
    p.set_defaults(func=cmd_smash)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        print("error: --cap must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
