"""Command-line front end.

Every command emits a deterministic report in one of three formats:
a plain table (default), a schema-versioned JSON envelope, or flat CSV.
Exit codes: 0 success, 2 usage error, 3 dimension budget exceeded,
4 internal invariant violation (including selftest failures).

No color is ever emitted, so NO_COLOR is honored trivially; no network
access and no environment variables are required.
"""

from __future__ import annotations

import argparse
import sys

from . import acceptance
from .dga import cohomology
from .frames import certify_projective_family, certify_sphere_family, \
    projective_base_model, sphere_base_model
from .models import independence_certificate
from .reporting import FORMATS, envelope, rat, render
from .weil import spherical_rigid_classes, vey_basis, weil_complex

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

DEFAULT_MAX_DIM = 10 ** 6


class BudgetExceeded(RuntimeError):
    pass


def _check_budget(dimension: int, max_dim: int, what: str):
    if dimension > max_dim:
        raise BudgetExceeded(
            f"{what} has {dimension} monomials, over the budget of {max_dim}; "
            f"raise --max-dim to proceed")


def cmd_vey(args) -> str:
    classes = vey_basis(args.q, args.min_degree, args.max_degree)
    if args.rigid_only:
        classes = [v for v in classes if v.is_rigid(args.q)]
    rows = [{
        "class": v.label(),
        "degree": v.degree,
        "rigid": v.is_rigid(args.q),
        "I": " ".join(map(str, v.I)),
        "J": " ".join(map(str, v.J)),
    } for v in classes]
    results = {
        "count": len(rows),
        "unit_class": "excluded from the listing; contributes 1 in degree 0",
        "classes": [{**r, "I": list(v.I), "J": list(v.J)}
                    for r, v in zip(rows, classes)],
    }
    params = {"q": args.q, "rigid_only": args.rigid_only,
              "min_degree": args.min_degree, "max_degree": args.max_degree}
    env = envelope("vey", params, results)
    title = f"Vey basis, codimension {args.q}" + \
        (" (rigid only)" if args.rigid_only else "")
    return render(args.format, env, title,
                  ["class", "degree", "rigid", "I", "J"], rows,
                  [f"{len(rows)} classes (unit class excluded)"])


def cmd_cohomology(args) -> str:
    gens, d = weil_complex(args.q, framed=args.framed)
    _check_budget(gens.dimension(), args.max_dim,
                  f"the codimension-{args.q} complex")
    report = cohomology(gens, d, args.max_degree)
    rows = []
    for n in range(report.max_degree + 1):
        s = report.by_degree[n]
        row = {"degree": n, "chain_dim": s.chain_dim, "dim": s.dim}
        if args.representatives:
            row["representatives"] = "; ".join(str(r) for r in s.representatives)
        rows.append(row)
    results = {
        "total_dimension": gens.dimension(),
        "max_degree": report.max_degree,
        "dims": {str(n): s.dim for n, s in sorted(report.by_degree.items()) if s.dim},
        "by_degree": [
            {"degree": n, "chain_dim": s.chain_dim, "dim": s.dim,
             **({"representatives": [str(r) for r in s.representatives]}
                if args.representatives else {})}
            for n, s in sorted(report.by_degree.items())
        ],
    }
    params = {"q": args.q, "framed": args.framed, "max_degree": args.max_degree,
              "representatives": args.representatives, "max_dim": args.max_dim}
    env = envelope("cohomology", params, results)
    kind = "framed" if args.framed else "unframed"
    columns = ["degree", "chain_dim", "dim"]
    if args.representatives:
        columns.append("representatives")
    nonzero = {n: s.dim for n, s in report.by_degree.items() if s.dim}
    return render(args.format, env,
                  f"Cohomology of the {kind} codimension-{args.q} complex",
                  columns, rows, [f"nonzero dims: {nonzero}"])


def cmd_pontrjagin(args) -> str:
    report = independence_certificate(args.q)
    rows = []
    for b in report.blocks:
        for cls, matrix_row in zip(b.classes, b.matrix):
            for cyc, value in zip(b.cycles, matrix_row):
                rows.append({"kind": "entry", "degree": b.degree, "class": cls,
                             "cycle": cyc, "value": rat(value)})
        rows.append({"kind": "block", "degree": b.degree, "class": "",
                     "cycle": "", "value": "",
                     "rank": b.rank, "full": b.full})
    results = {
        "monomials": list(report.monomials),
        "blocks": [{
            "degree": b.degree,
            "classes": list(b.classes),
            "cycles": list(b.cycles),
            "matrix": [[rat(v) for v in row] for row in b.matrix],
            "rank": b.rank,
            "full_rank": b.full,
        } for b in report.blocks],
        "passed": report.passed,
        "normalization": report.note,
    }
    env = envelope("pontrjagin", {"q": args.q}, results)
    notes = [f"degree {b.degree}: rank {b.rank}/{len(b.classes)}"
             + ("" if b.full else "  RANK DEFICIENT") for b in report.blocks]
    notes.append("PASS" if report.passed else "FAIL")
    notes.append(report.note)
    return render(args.format, env,
                  f"Pontrjagin independence certificate, q = {args.q}",
                  ["kind", "degree", "class", "cycle", "value", "rank", "full"],
                  rows, notes)


def cmd_frame(args) -> str:
    if args.case == "2k":
        model = projective_base_model(args.k)
    else:
        model = sphere_base_model(args.k)
    _check_budget(model.dimension(), args.max_dim, "the frame model")
    cert = (certify_projective_family(args.k) if args.case == "2k"
            else certify_sphere_family(args.k))
    rows = [{
        "class": c.source,
        "degree": "" if c.degree is None else c.degree,
        "image": c.image,
        "nonzero": c.nonzero,
        "expected_zero": c.expected_zero,
    } for c in cert.classes]
    results = {
        "q": cert.q,
        "base": cert.model_label,
        "model_dimension": cert.model_dimension,
        "classes": [{
            "class": c.source,
            "degree": c.degree,
            "image": c.image,
            "nonzero": c.nonzero,
            "expected_zero": c.expected_zero,
        } for c in cert.classes],
        "jointly_independent": cert.jointly_independent,
        "passed": cert.passed,
    }
    params = {"case": args.case, "k": args.k, "max_dim": args.max_dim}
    env = envelope("frame", params, results)
    notes = [f"base {cert.model_label}, model dimension {cert.model_dimension}",
             f"jointly independent: {cert.jointly_independent}",
             "PASS" if cert.passed else "FAIL"]
    return render(args.format, env,
                  f"Frame-model certificate, case {args.case}, k = {args.k}",
                  ["class", "degree", "image", "nonzero", "expected_zero"],
                  rows, notes)


def cmd_catalog(args) -> str:
    entries = [e for e in spherical_rigid_classes(args.q) if e.degree == args.dim]
    entries.sort(key=lambda e: (e.degree, e.label()))
    rows = []
    for idx, e in enumerate(entries, start=1):
        rows.append({
            "class": e.label(),
            "family": e.family,
            "degree": e.degree,
            "pairing": f"l{idx} * <{e.label()}, [S^{args.dim}]>",
        })
    rank = len(entries)
    note = (f"Z^{rank}-indexed family: each pairing scales linearly in its "
            "integer parameter, so distinct parameters give distinct "
            "(non-homotopic) foliations" if rank else
            "no spherically supported rigid classes in this degree")
    results = {
        "classes": [dict(r) for r in rows],
        "family_rank": rank,
        "note": note,
    }
    params = {"q": args.q, "dim": args.dim}
    env = envelope("catalog", params, results)
    return render(args.format, env,
                  f"Distinguishing catalog: codimension {args.q}, "
                  f"manifold dimension {args.dim}",
                  ["class", "family", "degree", "pairing"], rows, [note])


def cmd_selftest(args) -> tuple[str, int]:
    results = acceptance.run_all()
    lines = []
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    passed = all(ok for _, ok, _ in results)
    lines.append(f"{sum(ok for _, ok, _ in results)}/{len(results)} criteria passed")
    text = "\n".join(lines) + "\n"
    if args.format == "json":
        env = envelope("selftest", {}, {
            "criteria": [{"name": n, "passed": ok, "detail": d}
                         for n, ok, d in results],
            "passed": passed,
        })
        text = render("json", env, "", [], [])
    return text, EXIT_OK if passed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secclasses",
        description="Exact secondary characteristic classes of foliations")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="table",
                       help="output format (default: table)")

    p = sub.add_parser("vey", help="enumerate the Vey basis")
    p.add_argument("--q", type=int, required=True, help="codimension, >= 1")
    p.add_argument("--rigid-only", action="store_true")
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    add_format(p)

    p = sub.add_parser("cohomology", help="exact cohomology of a complex")
    p.add_argument("--q", type=int, required=True, help="codimension, >= 1")
    p.add_argument("--framed", action=argparse.BooleanOptionalAction,
                   default=True, help="framed complex (default) or unframed")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--representatives", action="store_true")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help="largest admissible total monomial count")
    add_format(p)

    p = sub.add_parser("pontrjagin", help="independence certificate")
    p.add_argument("--q", type=int, required=True, help="codimension, >= 2")
    add_format(p)

    p = sub.add_parser("frame", help="frame-model certificates")
    p.add_argument("--case", choices=("2k", "4k2"), required=True,
                   help="2k: (CP^2)^k base, q = 2k; 4k2: S^{4k} base, q = 4k-2")
    p.add_argument("--k", type=int, required=True, help="family parameter, >= 2")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    add_format(p)

    p = sub.add_parser("catalog", help="distinguishing classes by dimension")
    p.add_argument("--q", type=int, required=True, help="even codimension >= 4")
    p.add_argument("--dim", type=int, required=True, help="manifold dimension")
    add_format(p)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    add_format(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "vey":
            if args.q < 1:
                parser.error("--q must be >= 1")
            sys.stdout.write(cmd_vey(args))
        elif args.command == "cohomology":
            if args.q < 1:
                parser.error("--q must be >= 1")
            sys.stdout.write(cmd_cohomology(args))
        elif args.command == "pontrjagin":
            if args.q < 2:
                parser.error("--q must be >= 2")
            sys.stdout.write(cmd_pontrjagin(args))
        elif args.command == "frame":
            if args.k < 2:
                parser.error("--k must be >= 2")
            sys.stdout.write(cmd_frame(args))
        elif args.command == "catalog":
            if args.q < 4 or args.q % 2:
                parser.error("--q must be even and >= 4")
            if args.dim < 1:
                parser.error("--dim must be >= 1")
            sys.stdout.write(cmd_catalog(args))
        elif args.command == "selftest":
            text, code = cmd_selftest(args)
            sys.stdout.write(text)
            return code
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except Exception as exc:  # internal invariant violation
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
