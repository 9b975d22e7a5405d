"""Command-line interface.

Exit codes: 0 all checks passed / command succeeded, 1 a check failed (or no
antipode exists), 2 parse or usage error, 3 inconclusive (the polynomial
solver hit a cap).  Output ordering is deterministic (witnesses are listed
in basis-index lexicographic order).
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import (
    HomAlgebra,
    check_G_hom_associative,
    check_hom_associative,
    check_module,
    check_unital,
)
from .bialgebra import (
    HomBialgebra,
    HomHopf,
    antipode_defect,
    check_bialgebra_strict,
    check_bialgebra_weak,
    check_convolution_hom_associative,
    generalized_primitive_subspace,
    primitive_subspace,
    solve_antipode,
)
from .coalgebra import (
    HomCoalgebra,
    check_counital,
    check_G_hom_coalgebra,
    check_hom_coassociative,
    check_hom_lie_admissible,
    check_comodule,
    coassociator_expansion_check,
    lemma_identities_check,
    admissibility_defects,
)
from .duality import dual_algebra_of_coalgebra, dual_coalgebra_of_algebra
from .polysolve import search_bialgebra_extension
from .rational import rat, rat_str
from .reports import DefectReport
from .sampling import random_comul_tensor, random_linear_map
from .structio import (
    ParseError,
    registry,
    parse_structure,
    serialize_structure,
)
from .tensors import SUBGROUPS

CHECK_SUITES = (
    "hom-assoc", "coassoc", "G1", "G2", "G3", "G4", "G5", "G6",
    "lie-admissible", "bialgebra-weak", "bialgebra-strict", "module", "comodule",
)


class _Failure(Exception):
    """Usage-level failure; message printed to stderr, exit code attached."""

    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Failure(f"cannot read {path}: {exc}") from exc
    try:
        return parse_structure(text)
    except ParseError as exc:
        raise _Failure(f"{path}: {exc}") from exc


def _sides(structure):
    """(algebra side, coalgebra side), either possibly None."""
    if isinstance(structure, HomHopf):
        b = structure.bialgebra
        return b.algebra, b.coalgebra
    if isinstance(structure, HomBialgebra):
        return structure.algebra, structure.coalgebra
    if isinstance(structure, HomAlgebra):
        return structure, None
    return None, structure


def _print_report(name: str, report: DefectReport) -> bool:
    status = "PASS" if report.ok else "FAIL"
    print(f"[{status}] {name}: {report.render(limit=8)}")
    return report.ok


def _print_bool(name: str, check: str, value: bool | None, skip_reason: str = "") -> bool:
    if value is None:
        print(f"[SKIP] {name}: {check}{f' ({skip_reason})' if skip_reason else ''}")
        return True
    print(f"[{'PASS' if value else 'FAIL'}] {name}: {check}: "
          f"{'ok' if value else 'violated'}")
    return value


def _self_module_ok(algebra: HomAlgebra) -> bool:
    gamma = [[list(algebra.mul.c[i][m]) for m in range(algebra.dim)]
             for i in range(algebra.dim)]
    return check_module(algebra, algebra.dim, algebra.alpha, gamma)


def _self_comodule_ok(coalgebra: HomCoalgebra) -> bool:
    # rho[m][q][i]: coefficient of u_q (x) e_i in Delta(e_m)
    rho = [[[coalgebra.comul.d[m][q][i] for i in range(coalgebra.dim)]
            for q in range(coalgebra.dim)] for m in range(coalgebra.dim)]
    return check_comodule(coalgebra, coalgebra.dim, coalgebra.beta, rho)


def _run_suite(name: str, structure, suite: str | None) -> bool:
    algebra, coalgebra = _sides(structure)
    ok = True
    suites = [suite] if suite else _default_suites(structure)
    for s in suites:
        if s == "hom-assoc":
            if algebra is None:
                raise _Failure(f"suite {s} needs an algebra side")
            ok &= _print_report(name, check_hom_associative(algebra))
            if algebra.unit is not None:
                ok &= _print_bool(name, "unital", check_unital(algebra))
        elif s == "coassoc":
            if coalgebra is None:
                raise _Failure(f"suite {s} needs a coalgebra side")
            ok &= _print_report(name, check_hom_coassociative(coalgebra))
            ok &= _print_bool(name, "counital", check_counital(coalgebra),
                              skip_reason="no counit declared")
        elif s in SUBGROUPS:
            if algebra is not None:
                ok &= _print_report(name, check_G_hom_associative(algebra, s))
            if coalgebra is not None:
                ok &= _print_report(name, check_G_hom_coalgebra(coalgebra, s))
        elif s == "lie-admissible":
            if coalgebra is not None:
                rep = check_hom_lie_admissible(coalgebra)
                ok &= _print_report(name, rep.cyclic)
                ok &= _print_report(name, rep.alternating)
                ok &= _print_bool(name, "admissibility methods agree",
                                  rep.methods_agree)
            if algebra is not None:
                ok &= _print_report(name, check_G_hom_associative(algebra, "G6"))
        elif s == "bialgebra-weak":
            if not isinstance(structure, (HomBialgebra, HomHopf)):
                raise _Failure(f"suite {s} needs a bialgebra or hopf structure")
            b = structure.bialgebra if isinstance(structure, HomHopf) else structure
            ok &= _print_report(name, check_bialgebra_weak(b))
        elif s == "bialgebra-strict":
            if not isinstance(structure, (HomBialgebra, HomHopf)):
                raise _Failure(f"suite {s} needs a bialgebra or hopf structure")
            b = structure.bialgebra if isinstance(structure, HomHopf) else structure
            ok &= _print_report(name, check_bialgebra_strict(b))
        elif s == "module":
            if algebra is None:
                raise _Failure(f"suite {s} needs an algebra side")
            ok &= _print_bool(name, "self-module (M=V, f=alpha, gamma=mu)",
                              _self_module_ok(algebra))
        elif s == "comodule":
            if coalgebra is None:
                raise _Failure(f"suite {s} needs a coalgebra side")
            ok &= _print_bool(name, "self-comodule (M=V, g=beta, rho=Delta)",
                              _self_comodule_ok(coalgebra))
        else:
            raise _Failure(f"unknown suite {s!r}")
    if isinstance(structure, HomHopf):
        bad = antipode_defect(structure.bialgebra, structure.antipode)
        ok &= _print_bool(name, "antipode equations", not bad)
    return bool(ok)


def _default_suites(structure) -> list[str]:
    if isinstance(structure, HomAlgebra):
        return ["hom-assoc", "module"]
    if isinstance(structure, HomCoalgebra):
        return ["coassoc", "lie-admissible", "comodule"]
    return ["hom-assoc", "coassoc", "bialgebra-weak"]


def _cmd_check(args) -> int:
    structure = _load(args.file)
    return 0 if _run_suite(args.file, structure, args.suite) else 1


def _cmd_dualize(args) -> int:
    structure = _load(args.file)
    if isinstance(structure, HomHopf):
        from .bialgebra import dual_hopf

        dual = dual_hopf(structure)
    elif isinstance(structure, HomBialgebra):
        dual = HomBialgebra(
            algebra=dual_algebra_of_coalgebra(structure.coalgebra),
            coalgebra=dual_coalgebra_of_algebra(structure.algebra),
        )
    elif isinstance(structure, HomAlgebra):
        dual = dual_coalgebra_of_algebra(structure)
    else:
        dual = dual_algebra_of_coalgebra(structure)
    text = serialize_structure(dual)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_antipode(args) -> int:
    structure = _load(args.file)
    if isinstance(structure, HomHopf):
        structure = structure.bialgebra
    if not isinstance(structure, HomBialgebra):
        raise _Failure("antipode needs a bialgebra or hopf structure file")
    result = solve_antipode(structure)
    if result.status == "unique":
        print("unique antipode:")
        for row in result.antipode.entries:
            print("  [" + ", ".join(rat_str(v) for v in row) + "]")
        print(f"fixes unit: {result.unit_fixed}; counit-compatible: "
              f"{result.counit_compatible}")
        return 0
    if result.status == "family":
        print(f"affine family of antipodes (kernel dimension {result.kernel_dim}); "
              "one solution:")
        for row in result.antipode.entries:
            print("  [" + ", ".join(rat_str(v) for v in row) + "]")
        return 0
    print("no antipode")
    return 1


def _cmd_subspace(args, generalized: bool) -> int:
    structure = _load(args.file)
    if isinstance(structure, HomHopf):
        structure = structure.bialgebra
    if not isinstance(structure, HomBialgebra):
        raise _Failure("primitive subspaces need a bialgebra or hopf structure file")
    basis = (generalized_primitive_subspace if generalized else primitive_subspace)(
        structure
    )
    label = "generalized primitive" if generalized else "primitive"
    if not basis:
        print(f"{label} subspace: zero")
    else:
        print(f"{label} subspace basis ({len(basis)} vector(s)):")
        for v in basis:
            print(f"  {v}")
    return 0


def _cmd_convolution_test(args) -> int:
    structure = _load(args.file)
    if isinstance(structure, HomHopf):
        structure = structure.bialgebra
    if not isinstance(structure, HomBialgebra):
        raise _Failure("convolution-test needs a bialgebra or hopf structure file")
    verdict = check_convolution_hom_associative(
        structure, samples=args.samples, seed=args.seed
    )
    if verdict is None:
        print("premises not met: the structure must be Hom-associative and "
              "Hom-coassociative")
        return 1
    print(f"convolution Hom-associativity ({args.samples} random triples"
          f"{' + all basis-matrix triples' if structure.dim == 2 else ''}): "
          f"{'ok' if verdict else 'violated'}")
    return 0 if verdict else 1


def _cmd_identities(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.samples):
        coalg = HomCoalgebra(
            comul=random_comul_tensor(args.dim, rng),
            beta=random_linear_map(args.dim, rng),
        )
        lemmas = lemma_identities_check(coalg)
        expansions = coassociator_expansion_check(coalg)
        cyclic, alternating = admissibility_defects(coalg)
        factor_two = all(
            (cyc - 2 * alt).is_zero() for cyc, alt in zip(cyclic, alternating)
        )
        agree = all(c.is_zero() for c in cyclic) == all(a.is_zero() for a in alternating)
        if not (all(lemmas) and all(expansions) and factor_two and agree):
            failures += 1
    print(f"identity suite: dim={args.dim} samples={args.samples} seed={args.seed} "
          f"failures={failures}")
    return 0 if failures == 0 else 1


def _cmd_search_extension(args) -> int:
    structure = _load(args.file)
    if not isinstance(structure, HomAlgebra):
        raise _Failure("search-extension expects an algebra structure file")
    try:
        verdict = search_bialgebra_extension(
            structure,
            degree_cap=args.degree_cap,
            pair_cap=args.pair_cap,
            strict_alpha=args.strict_alpha,
        )
    except ValueError as exc:
        raise _Failure(str(exc)) from exc
    if verdict.status == "inconclusive":
        print(f"inconclusive: {verdict.reason}")
        return 3
    if verdict.status == "inconsistent":
        print("inconsistent: no Hom-bialgebra extension exists")
        assert verdict.certificate is not None
        print("certificate cofactors (recombine with the generators to 1):")
        for gen, cof in zip(verdict.generators, verdict.certificate):
            if not cof.is_zero():
                print(f"  ({cof}) * ({gen})")
        return 0
    if verdict.positive_dimensional:
        print("solutions exist (positive-dimensional); not enumerated")
        return 0
    print(f"solutions: {len(verdict.points)} rational point(s)")
    for pt in verdict.points:
        rendered = ", ".join(f"{k}={rat_str(pt[k])}" for k in sorted(pt))
        print(f"  {rendered}")
    return 0


def _cmd_examples(args) -> int:
    entries = registry()
    if not args.name:
        for name in sorted(entries):
            e = entries[name]
            required = ", ".join(e.required)
            defaults = ", ".join(f"{k}={rat_str(v)}" for k, v in e.defaults)
            params = required + (f" [optional: {defaults}]" if defaults else "")
            print(f"{name} ({e.kind}; params: {params or 'none'})")
            print(f"  {e.description}")
        return 0
    if args.name not in entries:
        raise _Failure(f"unknown example {args.name!r}; run `examples` to list")
    bindings: dict[str, Fraction] = {}
    for item in args.param or []:
        if "=" not in item:
            raise _Failure(f"--param expects name=value, got {item!r}")
        key, _, value = item.partition("=")
        try:
            bindings[key.strip()] = rat(value.strip())
        except ValueError as exc:
            raise _Failure(f"--param {item!r}: {exc}") from exc
    try:
        structure = entries[args.name].build(bindings)
    except ValueError as exc:
        raise _Failure(str(exc)) from exc
    text = serialize_structure(structure, params=bindings)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homalg",
        description="Exact checks and transforms for finite-dimensional "
                    "Hom-algebraic structures.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run a check suite on a structure file")
    p.add_argument("file")
    p.add_argument("--suite", choices=CHECK_SUITES, default=None)

    p = sub.add_parser("dualize", help="write the dual structure file")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("antipode", help="solve the antipode equations")
    p.add_argument("file")

    p = sub.add_parser("primitives", help="print the primitive subspace basis")
    p.add_argument("file")

    p = sub.add_parser("gprimitives",
                       help="print the generalized primitive subspace basis")
    p.add_argument("file")

    p = sub.add_parser("convolution-test",
                       help="verify twisted associativity of the convolution product")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("identities",
                       help="run the universal identity suites on random structures")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("search-extension",
                       help="certify (non)existence of a bialgebra extension")
    p.add_argument("file")
    p.add_argument("--degree-cap", type=int, default=6)
    p.add_argument("--pair-cap", type=int, default=10000)
    p.add_argument("--strict-alpha", action="store_true")

    p = sub.add_parser("examples", help="list or emit built-in structures")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--param", action="append", default=[])
    p.add_argument("-o", "--output", default=None)

    return parser


_COMMANDS = {
    "check": _cmd_check,
    "dualize": _cmd_dualize,
    "antipode": _cmd_antipode,
    "primitives": lambda args: _cmd_subspace(args, generalized=False),
    "gprimitives": lambda args: _cmd_subspace(args, generalized=True),
    "convolution-test": _cmd_convolution_test,
    "identities": _cmd_identities,
    "search-extension": _cmd_search_extension,
    "examples": _cmd_examples,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
