"""Command-line interface with deterministic JSON, DOT and text output.

Exit codes: 0 success; 2 invalid input (bad arguments, singular
basis, scalar constraints violated, enumeration guards); 3 admissibility
or existence failure (inadmissible basis, missing cut, wrong
divisibility); 4 internal invariant violation; 5 oracle discrepancy.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cuts import (
    Cut,
    build_cut,
    cut_exists,
    cut_type,
    enumerate_cuts,
    invariant_cut,
    realized_types,
    validate_cut,
    DEFAULT_ENUMERATION_LIMIT,
)
from .errors import (
    CriterionFailed,
    DecompositionFailure,
    Divisible,
    ExplosionGuard,
    GeneratorNotSpecialLinear,
    InternalInvariantViolation,
    IsoSearchExhausted,
    McKayError,
    NotAdmissible,
    NotDivisible,
    NotInvariant,
    SingularMatrix,
    TooLarge,
)
from .lattice import (
    AbelianQuotient,
    LatticeBasis,
    admissible_bases,
    check_admissible,
    hermite_normal_form,
)
from .mckay_quiver import (
    TypedQuiver,
    build_quiver,
    commutativity_squares,
    elementary_cycles,
    k_action,
)
from .monomial_group import (
    FiniteMatrixGroup,
    MonomialMatrix,
    conjugacy_classes,
    diagonal_subgroup,
    group_from_basis,
    semidirect_check,
)
from .skew import (
    detect_loops,
    dual_twist_action,
    loop_witness,
    skew_quiver,
    transport_cut,
    unskew_round_trip,
)

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INADMISSIBLE = 3
EXIT_INTERNAL = 4
EXIT_DISCREPANCY = 5


def _parse_basis(text: str) -> LatticeBasis:
    try:
        rows = [
            [int(x) for x in row.split(",")] for row in text.strip().split(";")
        ]
    except ValueError:
        raise ValueError(f"cannot parse basis {text!r}; expected 'a,b;c,d'") from None
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError(f"basis {text!r} is not a 2x2 integer matrix")
    return hermite_normal_form([(rows[0][0], rows[1][0]), (rows[0][1], rows[1][1])])


def _parse_triple(text: str, what: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.strip().split(","))
    except ValueError:
        raise ValueError(f"cannot parse {what} {text!r}") from None
    if len(parts) != 3:
        raise ValueError(f"{what} needs exactly three integers, got {text!r}")
    return parts  # type: ignore[return-value]


def _coset_label(v: tuple[int, int]) -> str:
    return f"({v[0]},{v[1]})"


def _element_doc(g: MonomialMatrix) -> dict:
    return {"perm": list(g.perm), "exps": list(g.exps)}


def _metadata(basis: LatticeBasis, **extra) -> dict:
    meta = {
        "basis": [list(r) for r in basis.rows],
        "det": basis.det,
        "invariant_factors": list(basis.smith_invariants()),
    }
    meta.update({k: v for k, v in extra.items() if v is not None})
    return meta


def _quiver_doc(q: TypedQuiver, cut: Cut | None = None) -> dict:
    quotient = q.quotient
    vertices = [
        {"id": quotient.index_of(v), "label": _coset_label(v), "dimension": 1}
        for v in q.vertices
    ]
    arrows = []
    for a in q.arrows:
        entry = {
            "id": q.arrow_index(a),
            "source": quotient.index_of(a.source),
            "target": quotient.index_of(q.target(a)),
            "type": a.type,
            "degree": cut.degree(a) if cut is not None else None,
        }
        arrows.append(entry)
    return {"vertices": vertices, "arrows": arrows}


def _skew_doc(s) -> dict:
    vertices = [
        {
            "id": i,
            "label": f"{_coset_label(v.orbit_rep)}/{v.irrep}"
            if isinstance(v.orbit_rep, tuple)
            else f"{v.orbit_rep}/{v.irrep}",
            "irrep": v.irrep,
            "orbit_rep": list(v.orbit_rep)
            if isinstance(v.orbit_rep, tuple)
            else v.orbit_rep,
            "orbit_size": v.orbit_size,
            "dimension": v.dimension,
        }
        for i, v in enumerate(s.vertices)
    ]
    arrows = []
    for k, ((i, j), m) in enumerate(sorted(s.mult.items())):
        arrows.append(
            {
                "id": k,
                "source": i,
                "target": j,
                "mult": m,
                "degree": None if s.degrees is None else s.degrees.get((i, j)),
            }
        )
    loops = [{"vertex": i, "mult": m} for i, m in s.loops()]
    return {
        "vertices": vertices,
        "arrows": arrows,
        "loops": loops,
        "group_order": s.group_size,
    }


# ---------------------------------------------------------------------------
# Command implementations.  Each returns a JSON-serializable document.


def _cmd_group_info(args) -> dict:
    basis = _parse_basis(args.basis)
    kind = args.kind
    if kind in ("C", "D"):
        check_admissible(basis, kind)
    scalars = _parse_triple(args.scalars, "scalars") if args.scalars else None
    group = group_from_basis(basis, kind, root_order=args.root_order, scalars=scalars)
    diag = diagonal_subgroup(group)
    classes = conjugacy_classes(group)
    doc = {
        "schema": 1,
        "command": "group-info",
        "metadata": _metadata(
            basis,
            kind=kind,
            root_order=group.root_order,
            scalars=list(scalars) if scalars else None,
        ),
        "group": {
            "order": group.order,
            "diagonal_order": diag.order,
            "class_count": len(classes),
            "class_sizes": sorted(len(c) for c in classes),
            "generators": [_element_doc(g) for g in group.generators],
        },
    }
    if kind in ("C", "D"):
        report = semidirect_check(group, kind)
        comp = {
            "order": report.complement.order,
            "elements": [_element_doc(g) for g in report.complement.elements],
        }
        if report.i1 is not None:
            comp["i1"] = _element_doc(report.i1)
            comp["i2"] = _element_doc(report.i2)
            comp["t_diagonal_factor"] = _element_doc(report.t_factorization[0])
            comp["r_diagonal_factor"] = _element_doc(report.r_factorization[0])
        doc["group"]["complement"] = comp
    return doc


def _cmd_quiver(args) -> dict:
    basis = _parse_basis(args.basis)
    q = build_quiver(AbelianQuotient(basis))
    doc = {
        "schema": 1,
        "command": "quiver",
        "metadata": _metadata(basis),
        "cycle_count": len(elementary_cycles(q)),
        "square_count": len(commutativity_squares(q)),
    }
    doc.update(_quiver_doc(q))
    return doc


def _cmd_cut_exists(args) -> dict:
    basis = _parse_basis(args.basis)
    gamma = _parse_triple(args.gamma, "gamma")
    return {
        "schema": 1,
        "command": "cut-exists",
        "metadata": _metadata(basis),
        "gamma": list(gamma),
        "verdict": cut_exists(basis, gamma),
    }


def _cmd_cut_build(args) -> dict:
    basis = _parse_basis(args.basis)
    gamma = _parse_triple(args.gamma, "gamma")
    cut = build_cut(basis, gamma)
    q = build_quiver(AbelianQuotient(basis))
    report = validate_cut(q, cut)
    doc = {
        "schema": 1,
        "command": "cut-build",
        "metadata": _metadata(basis),
        "cut": {
            "arrow_ids": [q.arrow_index(a) for a in cut.arrows],
            "type": list(cut_type(cut)),
            "validation": {
                "squares_balanced": report.squares_balanced,
                "cycles_unit_degree": report.cycles_unit_degree,
                "degree_zero_acyclic": report.degree_zero_acyclic,
                "passed": report.passed,
                "witnesses": list(report.witnesses),
            },
        },
    }
    doc.update(_quiver_doc(q, cut))
    return doc


def _cmd_cut_validate(args) -> dict:
    basis = _parse_basis(args.basis)
    q = build_quiver(AbelianQuotient(basis))
    if args.arrow_ids is not None:
        try:
            ids = sorted(
                {int(x) for x in args.arrow_ids.split(",")} if args.arrow_ids else set()
            )
        except ValueError:
            raise ValueError(f"cannot parse arrow ids {args.arrow_ids!r}") from None
        by_id = {q.arrow_index(a): a for a in q.arrows}
        missing = [i for i in ids if i not in by_id]
        if missing:
            raise ValueError(f"arrow ids {missing} do not exist")
        cut = Cut.of(by_id[i] for i in ids)
    elif args.gamma:
        cut = build_cut(basis, _parse_triple(args.gamma, "gamma"))
    else:
        raise ValueError("cut-validate needs --gamma or --arrow-ids")
    report = validate_cut(q, cut)
    doc = {
        "schema": 1,
        "command": "cut-validate",
        "metadata": _metadata(basis),
        "cut": {
            "arrow_ids": [q.arrow_index(a) for a in cut.arrows],
            "type": list(cut_type(cut)),
        },
        "validation": {
            "squares_balanced": report.squares_balanced,
            "cycles_unit_degree": report.cycles_unit_degree,
            "degree_zero_acyclic": report.degree_zero_acyclic,
            "passed": report.passed,
            "witnesses": list(report.witnesses),
        },
    }
    doc.update(_quiver_doc(q, cut))
    return doc


def _cmd_cut_enumerate(args) -> dict:
    basis = _parse_basis(args.basis)
    q = build_quiver(AbelianQuotient(basis))
    cuts = enumerate_cuts(q, limit=args.limit)
    return {
        "schema": 1,
        "command": "cut-enumerate",
        "metadata": _metadata(basis),
        "count": len(cuts),
        "cuts": [
            {
                "arrow_ids": [q.arrow_index(a) for a in c.arrows],
                "type": list(cut_type(c)),
            }
            for c in cuts
        ],
        "realized_types": sorted(list(t) for t in {cut_type(c) for c in cuts}),
    }


def _build_action(args, basis: LatticeBasis):
    q = build_quiver(AbelianQuotient(basis))
    scalars = _parse_triple(args.scalars, "scalars") if args.scalars else None
    act = k_action(q, args.kind, scalars=scalars, root_order=args.root_order)
    return q, act


def _action_meta(act) -> dict:
    meta = {
        "kind": act.kind,
        "root_order": act.root_order,
        "scalars": list(act.scalars) if act.scalars else None,
    }
    if act.kind == "D":
        # convention: rotation acts scalar-free, the involution acts on
        # arrow types 1, 2, 3 with these root-of-unity exponents
        meta["involution_type_scalars"] = list(act.element("s").type_scalars)
    return meta


def _cmd_skew(args) -> dict:
    basis = _parse_basis(args.basis)
    q, act = _build_action(args, basis)
    s = skew_quiver(q, act)
    doc = {
        "schema": 1,
        "command": "skew",
        "metadata": _metadata(basis, **_action_meta(act)),
    }
    doc.update(_skew_doc(s))
    return doc


def _cmd_classify(args) -> dict:
    basis = _parse_basis(args.basis)
    if args.kind not in ("C", "D"):
        raise ValueError("classify needs kind C or D")
    q, act = _build_action(args, basis)
    n = basis.det
    doc = {
        "schema": 1,
        "command": "classify",
        "metadata": _metadata(basis, **_action_meta(act)),
        "divisible_by_3": n % 3 == 0,
    }
    s = skew_quiver(q, act)
    if n % 3 == 0:
        cut = invariant_cut(basis, args.kind)
        s = transport_cut(s, q, act, cut)
        doc["verdict"] = "cut-exists"
        doc["witness"] = {
            "invariant_cut_arrow_ids": [q.arrow_index(a) for a in cut.arrows],
            "invariant_cut_type": list(cut_type(cut)),
        }
    else:
        witness = loop_witness(basis, args.kind)
        loops = detect_loops(s)
        if not loops:
            raise InternalInvariantViolation(
                "no loops on the skew quiver although 3 does not divide |N|"
            )
        doc["verdict"] = "no-cut"
        doc["witness"] = {
            "k": witness.k,
            "coset": list(witness.vertex),
            "orbit": [list(v) for v in witness.orbit],
            "orbit_size": witness.orbit_size,
            "special_c2xc2": witness.special_c2xc2,
        }
    doc.update(_skew_doc(s))
    return doc


def _cmd_unskew_roundtrip(args) -> dict:
    basis = _parse_basis(args.basis)
    report = unskew_round_trip(basis)
    q = build_quiver(AbelianQuotient(basis))
    return {
        "schema": 1,
        "command": "unskew-roundtrip",
        "metadata": _metadata(basis, kind="C"),
        "skew_vertex_count": report.skew_vertex_count,
        "double_skew_vertex_count": report.double_skew_vertex_count,
        "isomorphism": list(report.isomorphism),
        "cut_recovered": report.cut_recovered,
        "original_cut_arrow_ids": [
            q.arrow_index(a) for a in report.original_cut.arrows
        ],
        "recovered_cut_arrow_ids": [
            q.arrow_index(a) for a in report.recovered_cut.arrows
        ],
    }


def _cmd_oracle_compare(args) -> dict:
    kind = args.kind or "C"
    cases = []
    discrepancies = []
    for basis in admissible_bases(args.max_det, kind):
        q = build_quiver(AbelianQuotient(basis))
        realized = realized_types(q, limit=max(DEFAULT_ENUMERATION_LIMIT, 3 * basis.det))
        n = basis.det
        predicted = {
            (g1, g2, n - g1 - g2)
            for g1 in range(1, n)
            for g2 in range(1, n - g1)
            if cut_exists(basis, (g1, g2, n - g1 - g2))
        }
        case = {
            "basis": [list(r) for r in basis.rows],
            "det": n,
            "realized_types": sorted(list(t) for t in realized),
            "predicted_types": sorted(list(t) for t in predicted),
            "match": realized == predicted,
        }
        cases.append(case)
        if realized != predicted:
            discrepancies.append(case)
    return {
        "schema": 1,
        "command": "oracle-compare",
        "max_det": args.max_det,
        "kind": kind,
        "cases": cases,
        "discrepancies": discrepancies,
    }


# ---------------------------------------------------------------------------
# Rendering.


def _to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _to_dot(doc: dict) -> str:
    if "vertices" not in doc or "arrows" not in doc:
        raise ValueError(f"command {doc.get('command')} has no DOT rendering")
    lines = ["digraph mckay {", "  rankdir=LR;"]
    for v in doc["vertices"]:
        label = v.get("label", str(v["id"]))
        if v.get("dimension", 1) != 1:
            label += f" [{v['dimension']}]"
        lines.append(f'  v{v["id"]} [label="{label}"];')
    for a in doc["arrows"]:
        attrs = []
        if "type" in a and a.get("type") is not None:
            attrs.append(f'label="{a["type"]}"')
        elif "mult" in a:
            attrs.append(f'label="x{a["mult"]}"')
        degree = a.get("degree")
        attrs.append("style=dashed" if degree == 1 else "style=solid")
        lines.append(
            f'  v{a["source"]} -> v{a["target"]} [{", ".join(attrs)}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    meta = doc.get("metadata", {})
    if meta:
        basis = meta.get("basis")
        if basis:
            lines.append(f"basis: {basis[0]} / {basis[1]}  det={meta.get('det')}")
        for key in ("kind", "root_order", "scalars"):
            if key in meta:
                lines.append(f"{key}: {meta[key]}")
    skip = {"schema", "command", "metadata", "vertices", "arrows", "cuts", "cases"}
    for key in sorted(doc):
        if key in skip:
            continue
        lines.append(f"{key}: {doc[key]}")
    if "vertices" in doc:
        lines.append(f"vertices: {len(doc['vertices'])}")
    if "arrows" in doc:
        lines.append(f"arrows: {len(doc['arrows'])}")
    if "cuts" in doc:
        for c in doc["cuts"]:
            lines.append(f"cut type={c['type']} arrows={c['arrow_ids']}")
    if "cases" in doc:
        for c in doc["cases"]:
            lines.append(
                f"basis {c['basis']} det={c['det']} match={c['match']}"
            )
    return "\n".join(lines) + "\n"


_COMMANDS = {
    "group-info": _cmd_group_info,
    "quiver": _cmd_quiver,
    "cut-exists": _cmd_cut_exists,
    "cut-build": _cmd_cut_build,
    "cut-validate": _cmd_cut_validate,
    "cut-enumerate": _cmd_cut_enumerate,
    "skew": _cmd_skew,
    "classify": _cmd_classify,
    "unskew-roundtrip": _cmd_unskew_roundtrip,
    "oracle-compare": _cmd_oracle_compare,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mckay",
        description="Exact McKay quivers, cuts and skew-group quivers for "
        "monomial subgroups of SL(3).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, basis=True):
        if basis:
            p.add_argument(
                "--basis",
                "-B",
                required=True,
                help="2x2 integer matrix, row-major, e.g. '3,2;0,1'",
            )
        p.add_argument(
            "--format",
            choices=("json", "dot", "text"),
            default="json",
            help="output format (default json)",
        )

    p = sub.add_parser("group-info", help="group order, classes, complement")
    common(p)
    p.add_argument("--kind", choices=("A", "C", "D"), required=True)
    p.add_argument("--root-order", type=int, default=None)
    p.add_argument("--scalars", default=None, help="p,q,s exponents for kind D")

    p = sub.add_parser("quiver", help="the McKay quiver of Z^2/B")
    common(p)

    p = sub.add_parser("cut-exists", help="closed-form cut criterion")
    common(p)
    p.add_argument("--gamma", required=True, help="type vector g1,g2,g3")

    p = sub.add_parser("cut-build", help="construct the cut of a given type")
    common(p)
    p.add_argument("--gamma", required=True, help="type vector g1,g2,g3")

    p = sub.add_parser("cut-validate", help="check the weak-cut axioms")
    common(p)
    p.add_argument("--gamma", default=None, help="build and validate this type")
    p.add_argument("--arrow-ids", default=None, help="validate these arrow ids")

    p = sub.add_parser("cut-enumerate", help="exhaustively enumerate cuts")
    common(p)
    p.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT)

    p = sub.add_parser("skew", help="the skew-group quiver Q_N * K")
    common(p)
    p.add_argument("--kind", choices=("C", "D"), required=True)
    p.add_argument("--root-order", type=int, default=None)
    p.add_argument("--scalars", default=None, help="p,q,s exponents for kind D")

    p = sub.add_parser("classify", help="cut existence verdict with witness")
    common(p)
    p.add_argument("--kind", choices=("C", "D"), required=True)
    p.add_argument("--root-order", type=int, default=None)
    p.add_argument("--scalars", default=None, help="p,q,s exponents for kind D")

    p = sub.add_parser("unskew-roundtrip", help="skew by C3, unskew by its dual")
    common(p)

    p = sub.add_parser("oracle-compare", help="enumeration vs criterion sweep")
    common(p, basis=False)
    p.add_argument("--max-det", type=int, default=9)
    p.add_argument("--kind", choices=("A", "C", "D"), default="C")

    return parser


def run(args: argparse.Namespace) -> tuple[dict, int]:
    """Dispatch a parsed job; returns (document, exit code)."""
    doc = _COMMANDS[args.command](args)
    code = EXIT_OK
    if args.command == "oracle-compare" and doc["discrepancies"]:
        code = EXIT_DISCREPANCY
    return doc, code


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else EXIT_INVALID
    try:
        doc, code = run(args)
        if args.format == "json":
            out = _to_json(doc)
        elif args.format == "dot":
            out = _to_dot(doc)
        else:
            out = _to_text(doc)
    except (NotAdmissible, NotDivisible, Divisible, CriterionFailed, DecompositionFailure) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (InternalInvariantViolation, NotInvariant, IsoSearchExhausted) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (
        SingularMatrix,
        GeneratorNotSpecialLinear,
        ExplosionGuard,
        TooLarge,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except McKayError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
