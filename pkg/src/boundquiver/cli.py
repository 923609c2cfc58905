"""Command-line interface.

Exit codes: 0 success / confirmed, 1 check failed / not confirmed,
2 input error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import decomp, dsl, homology
from .algebra import MonomialAlgebra
from .errors import (
    DSLError,
    InconclusiveDecomposition,
    InconclusiveIsomorphism,
    InvalidRelation,
    RelationViolation,
)
from .repmod import Representation
from .verify import verify_counterexample

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def module_summary(m: Representation) -> dict[str, Any]:
    return {"algebra": m.algebra.name, "dims": list(m.dims), "arrows": {k: v.tolist() for k, v in m.action.items()}}


def _format_module(m: Representation) -> str:
    lines = [f"module over {m.algebra.name}, dims {list(m.dims)}"]
    for label, mat in m.action.items():
        a = m.algebra.quiver.arrow[label]
        lines.append(f"  {label} ({a.source}->{a.target}): {mat.tolist()}")
    return "\n".join(lines)


def _decomposition_summary(d: decomp.Decomposition) -> list[dict[str, Any]]:
    return [dict(module_summary(r), multiplicity=k) for r, k in d.summands]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="boundquiver",
        description="Homological algebra over monomial quiver algebras over GF(p).",
    )
    ap.add_argument("--algebra", metavar="FILE", help="algebra description file (default: the built-in example algebra)")
    ap.add_argument("--field", type=int, metavar="P", help="override the field GF(P)")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--seed", type=int, default=None, help="seed for randomized fallbacks (default 0)")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("info", help="algebra summary")
    p = sub.add_parser("eval", help="evaluate a module expression")
    p.add_argument("expr")
    p = sub.add_parser("syzygy", help="n-th syzygy")
    p.add_argument("expr")
    p.add_argument("n", type=int)
    p = sub.add_parser("tau", help="Auslander-Reiten translate")
    p.add_argument("expr")
    p = sub.add_parser("transpose", help="Auslander-Bridger transpose (a module over the opposite algebra)")
    p.add_argument("expr")
    p = sub.add_parser("ext", help="Ext^1(X, Y) with the middle terms of a basis of extensions")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("decompose", help="Krull-Schmidt decomposition")
    p.add_argument("expr")
    p = sub.add_parser("is-nth-syzygy", help="is the module a summand of an n-th syzygy?")
    p.add_argument("expr")
    p.add_argument("n", type=int)
    p = sub.add_parser("in-tau-omega", help="membership in tau(Omega^i(mod A))")
    p.add_argument("expr")
    p.add_argument("i", type=int)
    p = sub.add_parser("verify-counterexample", help="check that Tr(Omega^2(mod A)) is not extension-closed")
    p.add_argument("--m1", help="override the left end term expression")
    p.add_argument("--m2", help="override the right end term expression")
    return ap


def _load_algebra(args) -> MonomialAlgebra:
    if args.algebra:
        with open(args.algebra, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = dsl.EXAMPLE_ALGEBRA
    return dsl.parse_algebra(text, field=args.field)


def _positive(value: int, what: str) -> None:
    if value < 1:
        raise DSLError(f"{what} must be >= 1, got {value}")


def _emit(args, payload: dict[str, Any], text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _run(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("BOUNDQUIVER_SEED", "0"))
    A = _load_algebra(args)
    cmd = args.command

    if cmd == "info":
        payload = {
            "name": A.name,
            "field": f"GF({A.p})",
            "vertices": A.vertex_count,
            "arrows": [[a.label, a.source, a.target] for a in A.quiver.arrows],
            "relations": [str(r) for r in A.relations],
            "dimension": A.dimension,
            "basis": [str(b) for b in A.basis],
        }
        text = dsl.format_algebra(A) + f"# dimension {A.dimension}: " + ", ".join(payload["basis"])
        _emit(args, payload, text)
        return EXIT_OK

    if cmd == "verify-counterexample":
        report = verify_counterexample(A, seed, args.m1, args.m2)
        print(report.to_json() if args.json else report.to_text())
        return report.exit_code()

    if cmd == "ext":
        x, y = dsl.eval_module(A, args.x), dsl.eval_module(A, args.y)
        classes = homology.ext1_basis(x, y)
        seqs = [homology.extension_from_class(x, y, c) for c in classes]
        payload = {
            "dim": len(classes),
            "extensions": [
                {"middle": module_summary(s.middle), "split": s.is_split(), "exact": s.is_exact()} for s in seqs
            ],
        }
        lines = [f"dim Ext^1 = {len(classes)}"]
        for k, s in enumerate(seqs, start=1):
            lines.append(f"extension {k}: split={s.is_split()}")
            lines.append(_format_module(s.middle))
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK

    m = dsl.eval_module(A, args.expr)
    if cmd == "eval":
        _emit(args, module_summary(m), _format_module(m))
    elif cmd == "syzygy":
        _positive(args.n, "n")
        r = homology.syzygy(m, args.n)
        _emit(args, module_summary(r), _format_module(r))
    elif cmd == "tau":
        r = homology.tau(m)
        _emit(args, module_summary(r), _format_module(r))
    elif cmd == "transpose":
        r = homology.transpose(m)
        _emit(args, module_summary(r), _format_module(r))
    elif cmd == "decompose":
        d = decomp.decompose(m, seed)
        text = "\n".join(f"multiplicity {k}: " + _format_module(r) for r, k in d.summands) or "zero module"
        _emit(args, {"dims": list(m.dims), "summands": _decomposition_summary(d)}, text)
    elif cmd == "is-nth-syzygy":
        _positive(args.n, "n")
        t = homology.nth_syzygy_test(m, args.n, seed)
        payload = {
            "result": t.holds,
            "witness": {"dims": list(t.witness.dims), "summands": _decomposition_summary(t.witness_decomposition)},
        }
        parts = " + ".join(f"{list(r.dims)}^{k}" for r, k in t.witness_decomposition.summands) or "0"
        _emit(args, payload, f"{t.holds}\nwitness Omega^{args.n}(Omega^-{args.n}(X)) = {parts}")
        return EXIT_OK if t.holds else EXIT_FAIL
    elif cmd == "in-tau-omega":
        _positive(args.i, "i")
        t = homology.tau_omega_test(m, args.i, seed)
        payload = {
            "result": t.holds,
            "summands": [{"dims": list(r.dims), "reason": why, "member": ok} for r, why, ok in t.summands],
        }
        lines = [str(t.holds)] + [f"  {list(r.dims)}: {ok} ({why})" for r, why, ok in t.summands]
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK if t.holds else EXIT_FAIL
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (DSLError, InvalidRelation, RelationViolation, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InconclusiveDecomposition, InconclusiveIsomorphism) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
