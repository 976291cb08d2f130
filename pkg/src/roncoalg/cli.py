"""Command-line front end.

One subcommand per library operation; all output is deterministic.  Exit
codes: 0 on success, 1 when a verification/precondition check fails (the
violations are printed), 2 on input errors (bad flags, bad JSON, syntax
errors, degree overflows).  The degree cap for bracket computations
defaults to 8 and can be overridden with the RONCO_MAX_DEGREE variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import homology as homology_mod
from . import jsonio, leibniz, ronco
from .errors import NotInVarietyError, RoncoError
from .freelie import DEFAULT_MAX_DEGREE, format_word, lyndon_words, witt_dim, word_sort_key
from .lincomb import format_lincomb
from .linalg import format_rational
from .structure import MuAlgebra, StructureAlgebra, free_nil2, verify_mu, verify_variety
from .terms import parse_term


def _max_degree() -> int:
    raw = os.environ.get("RONCO_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise RoncoError(f"RONCO_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise RoncoError(f"RONCO_MAX_DEGREE must be >= 1, got {value}")
    return value


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_algebra(path: str) -> StructureAlgebra | MuAlgebra:
    return jsonio.loads_algebra(Path(path).read_text())


def _print_violations(violations):
    for v in violations:
        indices = ",".join(str(i) for i in v.indices)
        residual = " ".join(
            f"e{k + 1}:{format_rational(c)}" for k, c in enumerate(v.residual) if c
        )
        print(f"violation: {v.axiom} at ({indices}): {residual}")
    print(f"{len(violations)} violation(s)")


def _cmd_lyndon(args) -> int:
    for word in lyndon_words(args.gens, args.length):
        print(format_word(word, args.gens))
    return 0


def _cmd_witt(args) -> int:
    if args.max < 1:
        raise RoncoError(f"--max must be >= 1, got {args.max}")
    for n in range(1, args.max + 1):
        print(f"{n}\t{witt_dim(args.gens, n)}")
    return 0


def _cmd_leib_bracket(args) -> int:
    x = leibniz.eval_term(parse_term(args.expr), args.gens, _max_degree())
    print(format_lincomb(x, lambda w: format_word(w, args.gens), word_sort_key))
    return 0


def _cmd_ronco_eval(args) -> int:
    x = ronco.eval_term(parse_term(args.expr), args.gens, _max_degree())
    print(format_lincomb(x, lambda k: ronco.format_key(k, args.gens), ronco.key_sort_key))
    return 0


def _cmd_ronco_dims(args) -> int:
    if args.max < 1:
        raise RoncoError(f"--max must be >= 1, got {args.max}")
    for n in range(1, args.max + 1):
        print(f"{n}\t{ronco.graded_dim(args.gens, n)}")
    return 0


def _cmd_graded_kernel(args) -> int:
    basis = ronco.graded_kernel_basis(args.gens, args.deg, _max_degree())
    obj = {
        "degree": args.deg,
        "dimension": len(basis),
        "basis": [jsonio.ronco_element_to_obj(x, args.gens) for x in basis],
    }
    sys.stdout.write(jsonio.dumps_canonical(obj))
    return 0


def _cmd_ronco_truncate(args) -> int:
    algebra = ronco.truncate_to_structure(args.gens, args.max, _max_degree())
    _emit(jsonio.dumps_algebra(algebra), args.output)
    return 0


def _cmd_free_nil2(args) -> int:
    _emit(jsonio.dumps_algebra(free_nil2(args.dim)), args.output)
    return 0


def _cmd_verify(args) -> int:
    x = _load_algebra(args.file)
    if args.variety in ("mu", "mu-symmetric"):
        if not isinstance(x, MuAlgebra):
            raise RoncoError(f'--variety {args.variety} needs a kind "mu" algebra')
        report = verify_mu(x, symmetric=args.variety == "mu-symmetric")
        label = args.variety
    else:
        label = "symmetric-leibniz" if args.variety == "symmetric" else args.variety
        if not isinstance(x, StructureAlgebra):
            raise RoncoError(f'--variety {args.variety} needs a kind "leibniz" algebra')
        report = verify_variety(x, label)
    if report.ok:
        print(f"OK: {label} verified, no violations")
        return 0
    _print_violations(report.violations)
    return 1


def _cmd_convert(args) -> int:
    from .structure import mu_to_ronco, ronco_to_mu

    x = _load_algebra(args.file)
    if args.to == "mu":
        if not isinstance(x, StructureAlgebra):
            raise RoncoError('convert --to mu needs a kind "leibniz" algebra')
        result = ronco_to_mu(x)
    else:
        if not isinstance(x, MuAlgebra):
            raise RoncoError('convert --to ronco needs a kind "mu" algebra')
        result = mu_to_ronco(x)
    _emit(jsonio.dumps_algebra(result), args.output)
    return 0


def _cmd_homology(args) -> int:
    x = _load_algebra(args.file)
    if not isinstance(x, StructureAlgebra):
        raise RoncoError('homology needs a kind "leibniz" algebra')
    op = {
        "hl1": homology_mod.hl1,
        "hl2": homology_mod.hl2,
        "hr0": homology_mod.hr0,
        "h1ad": homology_mod.h1_adjoint,
    }[args.which]
    report = op(x)
    sys.stdout.write(jsonio.dumps_canonical(jsonio.report_to_obj(report)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roncoalg",
        description="Exact calculator for free Leibniz/Ronco algebras and their homology.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("lyndon", help="list Lyndon words of a given length")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--len", dest="length", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_lyndon)

    p = sub.add_parser("witt", help="free Lie graded dimensions up to a degree")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_witt)

    p = sub.add_parser("leib-bracket", help="evaluate a bracket term in the free Leibniz algebra")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--expr", required=True, metavar="TERM")
    p.set_defaults(func=_cmd_leib_bracket)

    p = sub.add_parser("ronco-eval", help="evaluate a bracket term in the free square-identity algebra")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--expr", required=True, metavar="TERM")
    p.set_defaults(func=_cmd_ronco_eval)

    p = sub.add_parser("ronco-dims", help="graded dimensions of the free square-identity algebra")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_ronco_dims)

    p = sub.add_parser("graded-kernel", help="kernel of the degree-n bracket-to-Lie map")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--deg", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_graded_kernel)

    p = sub.add_parser("ronco-truncate", help="truncated free algebra as JSON structure constants")
    p.add_argument("--gens", type=int, required=True, metavar="D")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_ronco_truncate)

    p = sub.add_parser("free-nil2", help="free 2-step nilpotent Lie algebra as JSON")
    p.add_argument("--dim", type=int, required=True, metavar="D")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_free_nil2)

    p = sub.add_parser("verify", help="check variety identities of a JSON algebra")
    p.add_argument("--variety", required=True,
                   choices=["leibniz", "lie", "ronco", "symmetric", "mu", "mu-symmetric"])
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("convert", help="convert between bracket and bracket/product presentations")
    p.add_argument("--to", required=True, choices=["mu", "ronco"])
    p.add_argument("file", metavar="FILE")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("homology", help="homology of a JSON algebra")
    p.add_argument("--which", required=True, choices=["hl1", "hl2", "hr0", "h1ad"])
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=_cmd_homology)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotInVarietyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _print_violations(exc.report.violations)
        return 1
    except ValueError as exc:  # RoncoError, bad JSON, bad numbers
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
