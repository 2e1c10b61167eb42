"""Command-line interface: `twolift <subcommand> ...`

Exit status is 0 on success, 1 when a certificate does not pass, and 2 for usage
errors, malformed input files and exceeded budgets.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import networkx as nx
import traitlets

from twolift._bounds import custom_bound
from twolift._config import Settings
from twolift._errors import CertificationError, TwoliftError
from twolift._expectation import (
    EdgeProbabilities,
    conditional_expectation,
    expected_charpoly_bruteforce,
)
from twolift._family import FamilyBase, run_family
from twolift._graph import (
    PartialSigning,
    complete_bipartite,
    double_cover,
    from_networkx,
    two_lift,
)
from twolift._matching import matching_counts, matching_polynomial
from twolift._path_tree import (
    build_path_tree,
    divisibility_check,
    tree_spectral_radius,
)
from twolift._search import (
    certify_ramanujan,
    exhaustive_best_signing,
    find_good_signing,
)
from twolift._serialization import (
    certificate_to_json,
    format_edge_list,
    format_path_labels,
    format_polynomial,
    format_signing,
    matching_counts_to_json,
    read_edge_list,
    read_polynomial,
    read_signing,
)
from twolift._version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

STDOUT = "-"


def _emit(text: str, path: str) -> None:
    if path == STDOUT:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _settings(args: argparse.Namespace) -> Settings:
    changes = {
        "oracle": args.oracle,
        "check_interlacing": args.check_interlacing,
        "shuffle_seed": args.shuffle,
    }
    if args.prec is not None:
        changes["precision"] = args.prec
    if args.budget_vertices is not None:
        changes["max_vertices"] = args.budget_vertices
    if args.budget_edges is not None:
        changes["max_edges"] = args.budget_edges
        changes["bruteforce_max_edges"] = min(args.budget_edges, 30)
        changes["exhaustive_max_edges"] = min(args.budget_edges, 30)
        # an explicit budget lifts the cap on family steps
        if getattr(args, "steps", None) is not None:
            changes["max_family_steps"] = max(args.steps, Settings().max_family_steps)
    return Settings(**changes)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _gen(args: argparse.Namespace, settings: Settings) -> int:
    if args.bipartite:
        g = complete_bipartite(*args.bipartite)
    elif args.regular:
        g = FamilyBase.regular(args.regular).graph
    elif args.biregular:
        g = FamilyBase.biregular(*args.biregular).graph
    elif args.cycle:
        g = from_networkx(nx.cycle_graph(args.cycle))
    else:
        g = from_networkx(nx.petersen_graph())

    if args.double_cover:
        g = double_cover(g)
    _emit(format_edge_list(g), args.output)
    return EXIT_OK


def _matching(args: argparse.Namespace, settings: Settings) -> int:
    g = read_edge_list(args.graph)
    counts = matching_counts(g)
    if args.json:
        _emit(matching_counts_to_json(counts) + "\n", args.output)
        return EXIT_OK
    comment = "matching counts: " + " ".join(str(c) for c in counts.counts)
    _emit(format_polynomial(matching_polynomial(g, counts), comment), args.output)
    return EXIT_OK


def _pathtree(args: argparse.Namespace, settings: Settings) -> int:
    g = read_edge_list(args.graph)
    t = build_path_tree(g, args.vertex, settings=settings)
    _emit(format_edge_list(t.tree), args.output)
    if args.labels:
        Path(args.labels).write_text(format_path_labels(t))
    if logger.isEnabledFor(logging.INFO):
        logger.info("path tree spectral radius %.6f", float(tree_spectral_radius(t)))

    if args.check:
        divisible = divisibility_check(g, args.vertex, settings=settings)
        print(f"divisible: {str(divisible).lower()}", file=sys.stderr)
        return EXIT_OK if divisible else EXIT_FAILED
    return EXIT_OK


def _expect(args: argparse.Namespace, settings: Settings) -> int:
    g = read_edge_list(args.graph)
    if args.probability is not None:
        p = EdgeProbabilities.uniform(g.edge_count, args.probability)
        f = expected_charpoly_bruteforce(g, p, settings=settings)
        _emit(format_polynomial(f, "expected characteristic polynomial"), args.output)
        return EXIT_OK

    partial = PartialSigning.unset(g.edge_count)
    if args.partial:
        partial = read_signing(args.partial, partial=True)
    f = conditional_expectation(g, partial, settings=settings)
    comment = f"sum over completions of {partial.fixed_count} fixed signs"
    _emit(format_polynomial(f, comment), args.output)
    return EXIT_OK


def _sign(args: argparse.Namespace, settings: Settings) -> int:
    g = read_edge_list(args.graph)
    if args.exhaustive:
        signing, certificate = exhaustive_best_signing(g, settings=settings)
    else:
        signing, certificate = find_good_signing(g, settings=settings)
    _emit(format_signing(signing), args.output)
    if args.certificate:
        Path(args.certificate).write_text(certificate_to_json(certificate) + "\n")
    print(f"verdict: {certificate.verdict.value}", file=sys.stderr)
    return EXIT_OK if certificate.passed else EXIT_FAILED


def _lift(args: argparse.Namespace, settings: Settings) -> int:
    g = read_edge_list(args.graph)
    signing = read_signing(args.signing)
    _emit(format_edge_list(two_lift(g, signing)), args.output)
    return EXIT_OK


def _certify(args: argparse.Namespace, settings: Settings) -> int:
    g = read_edge_list(args.graph)
    bound = None
    if args.bound:
        bound = custom_bound(read_polynomial(args.bound), args.interval)
    certificate = certify_ramanujan(g, bound, settings=settings)
    _emit(certificate_to_json(certificate) + "\n", args.output)
    print(f"verdict: {certificate.verdict.value}", file=sys.stderr)
    return EXIT_OK if certificate.passed else EXIT_FAILED


def _family(args: argparse.Namespace, settings: Settings) -> int:
    if args.regular:
        base = FamilyBase.regular(args.regular)
    elif args.biregular:
        base = FamilyBase.biregular(*args.biregular)
    else:
        base = FamilyBase.from_graph(read_edge_list(args.base), Path(args.base).stem)

    run = run_family(base, args.steps, args.out_dir, settings=settings)
    for step in run.steps:
        print(
            f"step {step.index}: {step.graph.vertex_count} vertices, "
            f"{step.graph.edge_count} edges, {step.certificate.verdict.value}"
        )
    return EXIT_OK if run.passed else EXIT_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twolift",
        description="Bipartite Ramanujan graphs by interlacing 2-lifts.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        "-v", "--verbose", action="count", default=0, help="INFO, or DEBUG if repeated"
    )
    verbosity.add_argument(
        "-q", "--quiet", action="store_true", help="only log warnings and errors"
    )
    parser.add_argument(
        "--prec", type=_fraction, help="width of certified eigenvalue intervals"
    )
    parser.add_argument(
        "--budget-edges", type=int, metavar="M", help="raise the edge budget to M"
    )
    parser.add_argument(
        "--budget-vertices",
        type=int,
        metavar="N",
        help="raise the vertex budget of the descent to N",
    )
    parser.add_argument(
        "--shuffle", type=int, metavar="SEED", help="random edge order for the descent"
    )
    parser.add_argument(
        "--oracle", action="store_true", help="force brute-force enumeration"
    )
    parser.add_argument(
        "--check-interlacing",
        action="store_true",
        help="record common interlacing of every sibling pair",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, summary: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(
            name, help=summary, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )
        sub.add_argument("-o", "--output", default=STDOUT, help="output file")
        return sub

    gen = add("gen", "write a named graph as an edge list")
    which = gen.add_mutually_exclusive_group(required=True)
    which.add_argument("--bipartite", type=int, nargs=2, metavar=("P", "Q"))
    which.add_argument("--regular", type=int, metavar="D", help="K_{D,D}")
    which.add_argument("--biregular", type=int, nargs=2, metavar=("C", "D"))
    which.add_argument("--cycle", type=int, metavar="N")
    which.add_argument("--petersen", action="store_true")
    gen.add_argument(
        "--double-cover", action="store_true", help="emit the bipartite double cover"
    )
    gen.set_defaults(run=_gen)

    matching = add("matching", "matching polynomial of a graph")
    matching.add_argument("graph")
    matching.add_argument("--json", action="store_true", help="emit counts as JSON")
    matching.set_defaults(run=_matching)

    pathtree = add("pathtree", "path tree of a graph at a vertex")
    pathtree.add_argument("graph")
    pathtree.add_argument("vertex", type=int)
    pathtree.add_argument("--labels", help="write the vertex to path map here")
    pathtree.add_argument(
        "--check", action="store_true", help="check the divisibility theorem"
    )
    pathtree.set_defaults(run=_pathtree)

    expect = add("expect", "expected characteristic polynomial of signed matrices")
    expect.add_argument("graph")
    expect.add_argument("--partial", help="signing file with 0 for unset edges")
    expect.add_argument(
        "--probability",
        type=_fraction,
        metavar="P",
        help="sign each edge +1 with probability P instead",
    )
    expect.set_defaults(run=_expect)

    sign = add("sign", "find a signing with small new eigenvalues")
    sign.add_argument("graph")
    sign.add_argument("--certificate", help="write the certificate JSON here")
    sign.add_argument("--exhaustive", action="store_true", help="try every signing")
    sign.set_defaults(run=_sign)

    lift = add("lift", "2-lift of a graph by a signing")
    lift.add_argument("graph")
    lift.add_argument("signing")
    lift.set_defaults(run=_lift)

    certify = add("certify", "certify that a graph is Ramanujan")
    certify.add_argument("graph")
    certify.add_argument("--bound", help="polynomial file whose root is the bound")
    certify.add_argument(
        "--interval",
        type=_fraction,
        nargs=2,
        metavar=("LO", "HI"),
        help="pick the root of --bound in (LO, HI] instead of the largest",
    )
    certify.set_defaults(run=_certify)

    family = subparsers.add_parser(
        "family",
        help="tower of certified bipartite Ramanujan graphs",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    base = family.add_mutually_exclusive_group(required=True)
    base.add_argument("--regular", type=int, metavar="D", help="start from K_{D,D}")
    base.add_argument("--biregular", type=int, nargs=2, metavar=("C", "D"))
    base.add_argument("--base", help="start from this edge-list file")
    family.add_argument("--steps", type=int, default=2)
    family.add_argument("--out-dir", required=True)
    family.set_defaults(run=_family)

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.quiet:
        level = logging.WARNING
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)

    try:
        settings = _settings(args)
        return args.run(args, settings)
    except CertificationError as e:
        if e.certificate is not None:
            print(certificate_to_json(e.certificate), file=sys.stderr)
        print(f"twolift: certification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (TwoliftError, ValueError, OSError, traitlets.TraitError) as e:
        print(f"twolift: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
