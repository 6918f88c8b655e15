"""The command line interface: one verb per invocation."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence

from . import __version__, adapters
from .adapters import TextFormat
from .entities.bitword import BinaryWord, distance_bfs, gap
from .entities.gilbreath import psi, psi_inv
from .entities.listing import Listing
from .entities.permutations import Permutation, enumerate_avoiders
from .use_cases import configuring
from .use_cases.listing_cycle import cycle_listing
from .use_cases.listing_path import path_listing
from .use_cases.perm_listing import Variant, perm_listing
from .use_cases.verify import (
    BINARY_SETS,
    PERM_SETS,
    InvariantError,
    PropertyId,
    PropertyReport,
    PropertySet,
    all_passed,
    gap_profile,
    run_checks,
    run_perm_checks,
)

_logger = logging.getLogger(__name__)

_VERIFY_VARIANTS = ("cycle", "path", "perm-cycle", "perm-path")
_DEFAULT_SETS = {
    "cycle": PropertySet.L,
    "path": PropertySet.C,
    "perm-cycle": PropertySet.P,
    "perm-path": PropertySet.Q,
}


def _binary_listing(variant: str, length: int) -> Listing:
    if Variant(variant) is Variant.CYCLE:
        return cycle_listing(length)
    return path_listing(length)


def _check_guardrail(length: int, force: bool) -> None:
    if length > (limit := configuring.get_max_n_without_force()) and not force:
        raise ValueError(
            f"refusing to generate words of length {length} > {limit}, use --force"
        )


def _gen_binary(args: argparse.Namespace) -> int:
    _check_guardrail(args.n, args.force)
    listing = _binary_listing(args.variant, args.n)
    if args.format is TextFormat.JSON:
        print(adapters.listing_to_text(listing, args.variant, args.format))
    else:
        for chunk in adapters.iter_listing_lines(listing):
            sys.stdout.write(chunk)
    return 0


def _gen_perm(args: argparse.Namespace) -> int:
    _check_guardrail(args.n - 1, args.force)
    perms = perm_listing(args.n, args.variant)
    print(adapters.perms_to_text(perms, args.variant, args.format, args.compact))
    return 0


def _shown(reports: Sequence[PropertyReport]) -> list[PropertyReport]:
    # coverage is only reported when it fails
    return [
        report
        for report in reports
        if report.property_id is not PropertyId.COVERAGE or not report.passed
    ]


def _check_property_set(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> None:
    allowed = PERM_SETS if args.variant.startswith("perm-") else BINARY_SETS
    if args.set and PropertySet(args.set) not in allowed:
        parser.error(f"--set {args.set} does not apply to --variant {args.variant}")


def _verify(args: argparse.Namespace) -> int:
    prop_set = PropertySet(args.set) if args.set else _DEFAULT_SETS[args.variant]
    is_perm = args.variant.startswith("perm-")
    if args.stdin:
        text = sys.stdin.read()
    elif args.n is None:
        raise ValueError("verify needs --n or --stdin")
    else:
        text = None

    if is_perm:
        if text is not None:
            perms = adapters.perms_from_text(text, args.format)
        else:
            _check_guardrail(args.n - 1, args.force)
            perms = perm_listing(args.n, args.variant.removeprefix("perm-"))
        reports = run_perm_checks(perms, prop_set, verbose=args.all)
    else:
        if text is not None:
            listing = adapters.listing_from_text(text, args.format)
        else:
            _check_guardrail(args.n, args.force)
            variant = Variant(args.variant)
            listing = (
                cycle_listing(args.n, check=False)
                if variant is Variant.CYCLE
                else path_listing(args.n, check=False)
            )
        reports = run_checks(listing, prop_set, args.unordered, verbose=args.all)

    print(adapters.reports_to_text(_shown(reports), args.format))
    return 0 if all_passed(reports) else 1


def _psi(args: argparse.Namespace) -> int:
    print(psi(BinaryWord.parse(args.word)))
    return 0


def _psi_inv(args: argparse.Namespace) -> int:
    perm = Permutation.parse(args.perm)
    print(psi_inv(perm, cap=configuring.get_avoiders_cap()))
    return 0


def _avoiders(args: argparse.Namespace) -> int:
    patterns = [Permutation.parse(part) for part in args.patterns.split(",") if part]
    perms = enumerate_avoiders(args.size, patterns, cap=configuring.get_avoiders_cap())
    print(adapters.perms_to_text(perms, "avoiders", args.format, args.compact))
    return 0


def _distance(args: argparse.Namespace) -> int:
    first, second = BinaryWord.parse(args.u), BinaryWord.parse(args.v)
    print(f"distance {distance_bfs(first, second, cap=configuring.get_oracle_cap())}")
    print(f"gap {gap(first, second)}")
    return 0


def _gap_profile(args: argparse.Namespace) -> int:
    if args.stdin:
        listing = adapters.listing_from_text(sys.stdin.read(), args.format)
    elif args.n is None or args.variant is None:
        raise ValueError("gap-profile needs --variant and --n, or --stdin")
    else:
        _check_guardrail(args.n, args.force)
        listing = _binary_listing(args.variant, args.n)
    print("\n".join(str(value) for value in gap_profile(listing)))
    return 0


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=TextFormat,
        choices=list(TextFormat),
        default=TextFormat.LINES,
        help="output (and --stdin input) format, defaults to lines",
    )
    common.add_argument(
        "--force",
        action="store_true",
        help="allow word lengths above the configured guardrail",
    )
    return common


def _variant_choices() -> list[str]:
    return [str(variant) for variant in Variant]


def build_parser() -> argparse.ArgumentParser:
    """Return the parser for all verbs."""
    parser = argparse.ArgumentParser(
        prog="graycode",
        description="Gray codes on the augmentation graph and for the permutations "
        "avoiding 132 and 312.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log debug output to stderr"
    )
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    common = _common_parser()

    def add_verb(
        name: str, handler: Callable[[argparse.Namespace], int], help_text: str
    ) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add_verb("gen-binary", _gen_binary, "list all binary words of length n")
    sub.add_argument("--variant", choices=_variant_choices(), required=True)
    sub.add_argument("--n", type=int, required=True, help="word length")

    sub = add_verb("gen-perm", _gen_perm, "list the Gilbreath permutations of size n")
    sub.add_argument("--variant", choices=_variant_choices(), required=True)
    sub.add_argument("--n", type=int, required=True, help="permutation size")
    sub.add_argument("--compact", action="store_true", help="digit strings (n <= 9)")

    sub = add_verb("verify", _verify, "check the properties of a listing")
    sub.add_argument("--variant", choices=_VERIFY_VARIANTS, required=True)
    sub.add_argument("--n", type=int, help="word length or permutation size")
    sub.add_argument("--set", choices=[str(value.value) for value in PropertySet])
    sub.add_argument("--stdin", action="store_true", help="read the listing from stdin")
    sub.add_argument(
        "--unordered", action="store_true", help="accept A3/B3 pairs in either order"
    )
    sub.add_argument(
        "--all", action="store_true", help="report every counterexample"
    )

    sub = add_verb("psi", _psi, "map a binary word to its permutation")
    sub.add_argument("--word", required=True)

    sub = add_verb("psi-inv", _psi_inv, "map a permutation back to its binary word")
    sub.add_argument("--perm", required=True)

    sub = add_verb("avoiders", _avoiders, "enumerate pattern avoiding permutations")
    sub.add_argument("--size", type=int, required=True)
    sub.add_argument("--patterns", default="132,312", help="comma separated patterns")
    sub.add_argument("--compact", action="store_true", help="digit strings (n <= 9)")

    sub = add_verb("distance", _distance, "breadth-first distance in G(n)")
    sub.add_argument("--u", required=True)
    sub.add_argument("--v", required=True)

    sub = add_verb("gap-profile", _gap_profile, "gap class of every consecutive pair")
    sub.add_argument("--variant", choices=_variant_choices())
    sub.add_argument("--n", type=int, help="word length")
    sub.add_argument("--stdin", action="store_true", help="read the listing from stdin")

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one verb and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb == "verify":
            _check_property_set(parser, args)
    except SystemExit as ex:
        return int(ex.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
    )
    try:
        return int(args.handler(args))
    except (ValueError, InvariantError) as ex:
        _logger.debug("verb %s failed", args.verb, exc_info=True)
        print(f"error: {ex}", file=sys.stderr)
        return 1
