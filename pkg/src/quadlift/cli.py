"""Command-line driver: validate, links, matrix, classify, verify, snf.

Exit codes: 0 success / Normal, 2 SpunNormal, 3 NotNormal, 1 input error
(bad coordinate data), 64 unknown subcommand, 65 invalid triangulation,
66 unreadable file.  Output is deterministic: identical input gives
byte-identical output.
"""

import argparse
import json
import sys

from . import chains, solver
from .intlinalg import IntMatrix, smith_normal_form
from .triangulation import Triangulation, TriangulationError

EX_OK = 0
EX_INPUT = 1
EX_SPUN = 2
EX_NOT_NORMAL = 3
EX_USAGE = 64
EX_DATA = 65
EX_NOINPUT = 66

_EXIT_BY_CLASS = {
    solver.NORMAL: EX_OK,
    solver.SPUN_NORMAL: EX_SPUN,
    solver.NOT_NORMAL: EX_NOT_NORMAL,
}

COMMANDS = ("validate", "links", "matrix", "classify", "verify", "snf")


class _InputError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_text(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc.strerror or exc),
                          EX_NOINPUT) from exc


def _load_triangulation(path):
    text = _read_text(path)
    try:
        return Triangulation(text)
    except TriangulationError as exc:
        raise _InputError("invalid triangulation %s: %s" % (path, exc),
                          EX_DATA) from exc


def _load_json(path, what):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError("malformed %s document %s: %s" % (what, path, exc),
                          EX_INPUT) from exc


def _parser(cmd, *, tri=True, quads=False, coords=False, matrix=False,
            with_json=False):
    p = argparse.ArgumentParser(prog="quadlift %s" % cmd, add_help=True)
    if tri:
        p.add_argument("--tri", required=True, help="triangulation JSON file")
    if quads:
        p.add_argument("--quads", required=True,
                       help="quadrilateral coordinates JSON file")
    if coords:
        p.add_argument("--coords", required=True,
                       help="normal coordinates JSON file")
    if matrix:
        p.add_argument("--matrix", required=True,
                       help="matrix file in 'rows cols nnz' triplet format")
    if with_json:
        p.add_argument("--json", action="store_true", dest="as_json",
                       help="machine-readable JSON output")
    return p


def _emit_json(payload, out):
    json.dump(payload, out, indent=2, sort_keys=True)
    out.write("\n")


def _cmd_validate(args, out):
    tri = _load_triangulation(args.tri)
    if args.as_json:
        _emit_json({
            "valid": True,
            "tets": tri.tet_count,
            "vertex_classes": len(tri.vertex_classes),
            "edge_classes": len(tri.edge_classes),
            "face_classes": len(tri.face_classes),
            "orientations": list(tri.tet_orientation),
            "links": [{"vertex": link.vertex,
                       "triangles": len(link.triangles),
                       "chi": link.euler_characteristic,
                       "genus": link.genus,
                       "sphere": link.is_sphere} for link in tri.links],
        }, out)
        return EX_OK
    out.write("valid\n")
    out.write("tets %d\n" % tri.tet_count)
    out.write("vertex classes %d\n" % len(tri.vertex_classes))
    out.write("edge classes %d\n" % len(tri.edge_classes))
    out.write("face classes %d\n" % len(tri.face_classes))
    for i, sign in enumerate(tri.tet_orientation):
        out.write("orientation tet %d: %+d\n" % (i, sign))
    for e in tri.edge_classes:
        out.write("edge %d: tet %d %d->%d valence %d\n"
                  % (e.index, e.rep[0], e.tail_local, e.head_local, e.valence))
    return EX_OK


def _cmd_links(args, out):
    tri = _load_triangulation(args.tri)
    if args.as_json:
        _emit_json([{"vertex": link.vertex,
                     "triangles": len(link.triangles),
                     "chi": link.euler_characteristic,
                     "genus": link.genus,
                     "sphere": link.is_sphere} for link in tri.links], out)
        return EX_OK
    for link in tri.links:
        out.write("vertex %d triangles %d chi %d genus %d sphere %s\n"
                  % (link.vertex, len(link.triangles),
                     link.euler_characteristic, link.genus,
                     "true" if link.is_sphere else "false"))
    return EX_OK


def _cmd_matrix(args, out):
    tri = _load_triangulation(args.tri)
    matrix = chains.boundary_matrix(tri)
    triplets = matrix.triplets()
    out.write("%d %d %d\n" % (matrix.nrows, matrix.ncols, len(triplets)))
    for r, c, v in triplets:
        out.write("%d %d %d\n" % (r, c, v))
    return EX_OK


def _cmd_classify(args, out):
    tri = _load_triangulation(args.tri)
    doc = _load_json(args.quads, "quads")
    try:
        q = solver.load_quads(doc, tri.tet_count)
    except ValueError as exc:
        raise _InputError(str(exc), EX_INPUT) from exc
    if not solver.check_admissible(q, tri.tet_count).ok:
        raise _InputError("inadmissible quadrilateral coordinates in %s"
                          % args.quads, EX_INPUT)
    result = solver.lift(tri, q)
    if args.as_json:
        payload = {
            "classification": result.classification,
            "coords": (solver.normal_coords_doc(result.canonical_lift)["coords"]
                       if result.canonical_lift is not None else None),
            "shifts": {str(v): m for v, m in sorted(result.per_vertex_shift.items())},
            "cycle_failures": [
                {"vertex": v,
                 "cells": [{"cell": tri.cell_name(cell), "sum": s}
                           for cell, s in items]}
                for v, items in result.cycle_failures],
            "boundary_failures": [{"vertex": v, "reason": reason}
                                  for v, reason in result.boundary_failures],
        }
        _emit_json(payload, out)
        return _EXIT_BY_CLASS[result.classification]

    out.write("classification %s\n" % result.classification)
    if result.classification == solver.NORMAL:
        rows = solver.normal_coords_doc(result.canonical_lift)["coords"]
        for tet, row in enumerate(rows):
            out.write("canonical tet %d: %s\n" % (tet, " ".join(map(str, row))))
        for v, m in sorted(result.per_vertex_shift.items()):
            out.write("shift vertex %d: %d\n" % (v, m))
    for v, items in result.cycle_failures:
        for cell, s in items:
            out.write("vertex %d cycle failure at %s: sum %d\n"
                      % (v, tri.cell_name(cell), s))
    for v, reason in result.boundary_failures:
        out.write("vertex %d boundary failure: %s\n" % (v, reason))
    return _EXIT_BY_CLASS[result.classification]


def _cmd_verify(args, out):
    tri = _load_triangulation(args.tri)
    doc = _load_json(args.coords, "coordinates")
    try:
        coords = solver.load_normal_coords(doc, tri.tet_count)
    except ValueError as exc:
        raise _InputError(str(exc), EX_INPUT) from exc
    report = solver.verify_normal(tri, coords)
    if args.as_json:
        _emit_json({
            "valid": report.ok,
            "negatives": [{"disc": d, "value": v} for d, v in report.negatives],
            "quad_conflicts": [{"tet": t, "types": list(types)}
                               for t, types in report.admissibility.conflicts],
            "violated_arcs": [{"arc": tri.arc_name(a), "value": v}
                              for a, v in report.violated_arcs],
        }, out)
        return EX_OK if report.ok else EX_INPUT
    if report.ok:
        out.write("valid normal coordinates\n")
        return EX_OK
    for disc, value in report.negatives:
        out.write("negative coordinate at disc %d: %d\n" % (disc, value))
    for tet, types in report.admissibility.conflicts:
        out.write("tet %d carries quad types %s\n"
                  % (tet, " ".join(map(str, types))))
    for arc, value in report.violated_arcs:
        out.write("violated equation at %s: %d\n" % (tri.arc_name(arc), value))
    return EX_INPUT


def _cmd_snf(args, out):
    text = _read_text(args.matrix)
    try:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        nrows, ncols, nnz = map(int, lines[0].split())
        rows = [[0] * ncols for _ in range(nrows)]
        for ln in lines[1:nnz + 1]:
            r, c, v = map(int, ln.split())
            rows[r][c] = v
    except (ValueError, IndexError) as exc:
        raise _InputError("malformed matrix file %s" % args.matrix,
                          EX_INPUT) from exc
    dec = smith_normal_form(IntMatrix(rows))
    out.write("invariant_factors %s\n"
              % " ".join(map(str, dec.invariant_factors)))
    return EX_OK


_HANDLERS = {
    "validate": (_cmd_validate, dict(with_json=True)),
    "links": (_cmd_links, dict(with_json=True)),
    "matrix": (_cmd_matrix, dict()),
    "classify": (_cmd_classify, dict(quads=True, with_json=True)),
    "verify": (_cmd_verify, dict(coords=True, with_json=True)),
    "snf": (_cmd_snf, dict(tri=False, matrix=True)),
}


def run(argv, out=None, err=None):
    """Dispatch one CLI invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    if not argv or argv[0] in ("-h", "--help"):
        out.write("usage: quadlift {%s} ...\n" % ",".join(COMMANDS))
        return EX_OK if argv else EX_USAGE
    cmd = argv[0]
    if cmd not in COMMANDS:
        err.write("unknown subcommand: %s\n" % cmd)
        return EX_USAGE
    handler, opts = _HANDLERS[cmd]
    args = _parser(cmd, **opts).parse_args(argv[1:])
    if not hasattr(args, "as_json"):
        args.as_json = False
    try:
        return handler(args, out)
    except _InputError as exc:
        err.write("error: %s\n" % exc)
        return exc.code


def main(argv=None):
    return run(list(sys.argv[1:]) if argv is None else list(argv))


def entry():
    sys.exit(main())
