"""Command-line front end: ``freebycyclic <command> <file> [options]``.

Exit status is 0 on success, 2 when the input or a requested class is
invalid, and 3 when an exact identity fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from . import dsl
from .cones import (
    ClassReport,
    ConeOfSections,
    class_report,
    cone_of_sections,
    newton_dual_cone_check,
)
from .errors import FreeByCyclicError, TheoryViolation, ValidationError
from .graph_core import (
    geometric_stretch,
    homological_stretch,
    irreducibility_report,
    is_train_track,
    transition_matrix,
    whitehead_graphs_connected,
)
from .invariants import InvariantBundle, compute_invariants, verify_relations, verify_specializations
from .laurent import LaurentPoly, apply_inv
from .oracle import run_oracles
from .orientation import Orientability, OrientabilityClass, classify_orientability, verify_theorem_A
from .torus import TorusPresentation, compute_presentation, lifted_matrices

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_THEORY = 3

COMMANDS = (
    "validate",
    "orient",
    "stretch",
    "homology",
    "alexander",
    "mcmullen",
    "vertexpoly",
    "cone",
    "specialize",
    "classify",
    "verify",
    "plot-cone",
)


def fmt(x: float | None) -> float | None:
    """Round to 6 significant digits."""
    return None if x is None else float(f"{x:.6g}")


def poly_records(p: LaurentPoly) -> list[dict[str, Any]]:
    return [{"coeff": c, "exp": list(e)} for e, c in p.items()]


@dataclass
class Pipeline:
    """Lazily computed stages for one document."""

    doc: dsl.GraphMapDocument
    basepoint: str | None = None
    tree: list[str] | None = None

    def __post_init__(self):
        self._cache: dict[str, Any] = {}

    def _get(self, key: str, fn: Callable[[], Any]):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def f(self):
        return self.doc.graph_map

    @property
    def orient(self) -> OrientabilityClass:
        return self._get("orient", lambda: classify_orientability(self.f))

    @property
    def pres(self) -> TorusPresentation:
        return self._get("pres", lambda: compute_presentation(self.f, self.basepoint, self.tree))

    @property
    def lifted(self):
        return self._get("lifted", lambda: lifted_matrices(self.pres))

    @property
    def bundle(self) -> InvariantBundle:
        return self._get("bundle", lambda: compute_invariants(self.pres, self.lifted))

    @property
    def cone(self) -> ConeOfSections:
        return self._get("cone", lambda: cone_of_sections(self.bundle.mcmullen_normalized))

    def cone_record(self) -> dict[str, Any]:
        rays = [list(r) for r in self.cone.rays()] if self.cone.rank == 2 else []
        return {"inequalities": [list(s) for s in self.cone.inequalities], "rays": rays}

    def class_record(self, rep: ClassReport) -> dict[str, Any]:
        return {
            "class": list(rep.u),
            "in_cone": rep.in_cone,
            "lambda": fmt(rep.lam),
            "rho": fmt(rep.rho),
            "orientability": rep.orientability,
            "spec_m": poly_records(rep.spec_m),
            "spec_delta": poly_records(rep.spec_delta),
        }

    def skeleton(self) -> dict[str, Any]:
        b = self.bundle
        return {
            "vars": list(b.variables),
            "polynomials": {
                "alexander": poly_records(b.alexander),
                "mcmullen": poly_records(b.mcmullen),
                "vertex": poly_records(b.vertex_poly),
            },
            "cone": self.cone_record(),
            "classes": [],
        }


def parse_class(text: str | None, rank: int) -> tuple[int, ...]:
    if text is None:
        raise ValidationError("--class is required for this command")
    try:
        u = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"--class must be comma-separated integers, got {text!r}") from None
    if len(u) != rank:
        raise ValidationError(f"--class needs {rank} entries (variables in order), got {len(u)}")
    return u


# ---------------------------------------------------------------------------
# Commands: each returns (json payload, text lines, exit status)
# ---------------------------------------------------------------------------


def cmd_validate(pl: Pipeline, args):
    f = pl.f
    tt, witness = is_train_track(f)
    rep = irreducibility_report(transition_matrix(f))
    wh, _ = whitehead_graphs_connected(f)
    payload = {
        "vertices": list(f.graph.vertices),
        "edges": list(f.graph.edges),
        "train_track": tt,
        "train_track_witness": list(witness) if witness else None,
        "irreducible": rep.irreducible,
        "primitive": rep.primitive,
        "period": rep.period,
        "whitehead_connected": wh,
    }
    text = [
        f"graph: {len(f.graph.vertices)} vertices, {len(f.graph.edges)} edges, rank {f.graph.rank}",
        f"train track: {'yes' if tt else 'no'}" + (f" (witness {witness})" if witness else ""),
        f"transition matrix: irreducible={rep.irreducible} primitive={rep.primitive} period={rep.period}",
        f"whitehead graphs connected: {wh}",
    ]
    return payload, text, EXIT_OK


def cmd_orient(pl: Pipeline, args):
    o = pl.orient
    payload = {"orientability": o.kind.value, "assignment": dict(o.assignment) if o.assignment else None}
    text = [f"orientability: {o.kind.value}"]
    if o.assignment:
        flips = [e for e, s in o.assignment.items() if s < 0]
        text.append("reverse edges: " + (", ".join(flips) if flips else "none"))
    return payload, text, EXIT_OK


def cmd_stretch(pl: Pipeline, args):
    rep = verify_theorem_A(pl.f, tol=args.tolerance)
    lam, rho = geometric_stretch(pl.f), homological_stretch(pl.f)
    payload = {
        "lambda": fmt(lam),
        "rho": fmt(rho),
        "orientability": rep.kind.value,
        "spectral_identity": rep.passed,
    }
    text = [
        f"geometric stretch lambda = {fmt(lam)}",
        f"homological stretch rho = {fmt(rho)}",
        f"orientability {rep.kind.value}; spectral identity {'holds' if rep.passed else 'FAILS'}",
    ]
    return payload, text, EXIT_OK if rep.passed else EXIT_THEORY


def cmd_homology(pl: Pipeline, args):
    p = pl.pres
    payload = {
        "rank": p.rank,
        "vars": list(p.variables),
        "basepoint": p.basepoint,
        "spanning_tree": sorted(p.spanning_tree),
        "cocycle": {e: list(c) for e, c in p.cocycle.items()},
        "potentials": {v: list(c) for v, c in p.potentials.items()},
        "homology_action": p.homology_action.tolist(),
    }
    text = [
        f"b = {p.rank}; variables {', '.join(p.variables)}",
        f"basepoint {p.basepoint}; spanning tree {{{', '.join(sorted(p.spanning_tree))}}}",
        "cocycle: " + ", ".join(f"{e}={list(c)}" for e, c in p.cocycle.items()),
        "potentials: " + ", ".join(f"{v}={list(c)}" for v, c in p.potentials.items()),
    ]
    return payload, text, EXIT_OK


def _poly_cmd(key: str, label: str):
    def run(pl: Pipeline, args):
        p = getattr(pl.bundle, key)
        payload = {"vars": list(pl.bundle.variables), "terms": poly_records(p), "text": str(p)}
        return payload, [str(p)], EXIT_OK

    run.__doc__ = label
    return run


def cmd_cone(pl: Pipeline, args):
    rec = pl.cone_record()
    text = ["cone: " + " and ".join(f"u.{tuple(s)} > 0" for s in rec["inequalities"])]
    if rec["rays"]:
        text.append("extreme rays: " + ", ".join(str(tuple(r)) for r in rec["rays"]))
    return rec, text, EXIT_OK


def _class_report(pl: Pipeline, args) -> ClassReport:
    u = parse_class(args.cls, pl.pres.rank)
    return class_report(pl.bundle, pl.cone, pl.orient, pl.pres.dual_class, u)


def cmd_specialize(pl: Pipeline, args):
    rep = _class_report(pl, args)
    rec = pl.class_record(rep)
    if not rep.in_cone:
        return rec, [f"class {rep.u} is not in the cone of sections"], EXIT_INVALID
    text = [
        f"class {rep.u}",
        f"lambda = {fmt(rep.lam)}",
        f"rho = {fmt(rep.rho)}",
        f"verdict {rep.orientability}",
        f"m^u = {rep.spec_m}",
        f"(1-t)^p Delta^u = {rep.spec_delta}",
    ]
    return rec, text, EXIT_OK


def cmd_classify(pl: Pipeline, args):
    rep = _class_report(pl, args)
    if not rep.in_cone:
        return {"class": list(rep.u), "in_cone": False}, [f"class {rep.u} is not in the cone of sections"], EXIT_INVALID
    return {"class": list(rep.u), "orientability": rep.orientability}, [rep.orientability], EXIT_OK


def cmd_verify(pl: Pipeline, args):
    checks: dict[str, bool] = {}
    rel = verify_relations(pl.bundle, pl.pres, pl.orient)
    if rel.pos is not None:
        checks["relation_pos"] = rel.pos
    if rel.neg is not None:
        checks["relation_neg"] = rel.neg
    checks["relation_mod2"] = rel.mod2
    spec = verify_specializations(pl.f, pl.pres, pl.bundle)
    checks["specialize_mcmullen"] = spec.mcmullen_ok
    checks["specialize_alexander"] = spec.alexander_ok
    checks["theorem_A"] = verify_theorem_A(pl.f, tol=args.tolerance).passed
    checks["u0_in_cone"] = pl.cone.contains(pl.pres.dual_class)
    if pl.orient.kind is not Orientability.NONE:
        checks["newton_dual_cone"] = newton_dual_cone_check(
            pl.bundle.alexander, pl.cone, pl.pres.dual_class, pl.orient
        ).agrees
    for rep in run_oracles(pl.f, pl.pres, pl.lifted):
        checks[f"oracle_{rep.name}"] = rep.passed
    ok = all(checks.values())
    payload = {"passed": ok, "checks": checks, "witnesses": rel.witnesses}
    text = [f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()]
    return payload, text, EXIT_OK if ok else EXIT_THEORY


def cone_svg(pl: Pipeline, size: int = 400) -> str:
    """Support points of inv(m') and the boundary rays of the cone."""
    b = pl.bundle
    if b.rank != 2:
        raise ValidationError("plot-cone needs b = 2")
    pts = [tuple(e) for e in apply_inv(b.mcmullen_normalized).support()]
    rays = pl.cone.rays()
    extent = max([1] + [abs(x) for p in pts for x in p]) + 1
    half = size / 2
    scale = (half - 30) / extent

    def xy(p):
        return half + p[0] * scale, half - p[1] * scale

    x_name, y_name = b.variables
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="10" y1="{half}" x2="{size - 10}" y2="{half}" stroke="#888"/>',
        f'<line x1="{half}" y1="10" x2="{half}" y2="{size - 10}" stroke="#888"/>',
        f'<text x="{size - 20}" y="{half - 6}" font-size="14">{x_name}</text>',
        f'<text x="{half + 6}" y="20" font-size="14">{y_name}</text>',
    ]
    for r in rays:
        norm = max(abs(r[0]), abs(r[1]))
        end = xy((r[0] * extent / norm, r[1] * extent / norm))
        out.append(f'<line x1="{half}" y1="{half}" x2="{end[0]:.1f}" y2="{end[1]:.1f}" stroke="#c33" stroke-width="2"/>')
    for p in pts:
        cx, cy = xy(p)
        out.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="4" fill="#236"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_plot_cone(pl: Pipeline, args):
    svg = cone_svg(pl)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
        return {"written": args.out}, [f"wrote {args.out}"], EXIT_OK
    return {"svg": svg}, [svg.rstrip("\n")], EXIT_OK


HANDLERS = {
    "validate": cmd_validate,
    "orient": cmd_orient,
    "stretch": cmd_stretch,
    "homology": cmd_homology,
    "alexander": _poly_cmd("alexander", "Alexander polynomial"),
    "mcmullen": _poly_cmd("mcmullen", "McMullen polynomial"),
    "vertexpoly": _poly_cmd("vertex_poly", "vertex polynomial"),
    "cone": cmd_cone,
    "specialize": cmd_specialize,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "plot-cone": cmd_plot_cone,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freebycyclic", description="Invariants of free-by-cyclic groups from graph maps.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", help="graph-map file, or a bundled fixture name")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--class", dest="cls", help="cohomology class as comma-separated integers")
    parser.add_argument("--out", help="write output to this path")
    parser.add_argument("--tolerance", type=float, default=1e-6, help="numeric report tolerance")
    parser.add_argument("--basepoint", help="basepoint vertex for the splitting")
    parser.add_argument("--tree", help="comma-separated spanning-tree edges (empty string for none)")
    return parser


def _load(spec: str) -> dsl.GraphMapDocument:
    path = Path(spec)
    if path.exists():
        return dsl.load(path)
    if spec in dsl.FIXTURES:
        return dsl.load_fixture_document(spec)
    raise ValidationError(f"no such file or fixture: {spec}")


def run(argv: list[str] | None = None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    stdout = sys.stdout if stdout is None else stdout
    error = None
    try:
        doc = _load(args.file)
        basepoint = args.basepoint if args.basepoint is not None else doc.basepoint
        if args.tree is not None:
            tree = [e for e in args.tree.split(",") if e]
        else:
            tree = list(doc.tree) if doc.tree is not None else None
        pl = Pipeline(doc, basepoint, tree)
        payload, text, status = HANDLERS[args.command](pl, args)
    except (ValidationError, ValueError) as err:
        error, status = ("invalid", err), EXIT_INVALID
    except (TheoryViolation, ArithmeticError) as err:
        error, status = ("theory_violation", err), EXIT_THEORY
    except FreeByCyclicError as err:
        error, status = ("invalid", err), EXIT_INVALID
    if error is not None:
        code, err = error
        if args.format == "json":
            stdout.write(json.dumps({"command": args.command, "error": {"code": code, "type": type(err).__name__, "message": str(err)}}, indent=2) + "\n")
        else:
            print(f"error ({type(err).__name__}): {err}", file=sys.stderr)
        return status
    if args.format == "json":
        doc = {"command": args.command, "name": pl.doc.name}
        if args.command not in ("validate", "orient"):
            doc.update(pl.skeleton())
            if args.command in ("specialize", "classify"):
                doc["classes"] = [payload]
        doc["result"] = payload
        rendered = json.dumps(doc, indent=2) + "\n"
    else:
        rendered = "\n".join(text) + "\n"
    if args.out and args.command != "plot-cone":
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        stdout.write(rendered)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
