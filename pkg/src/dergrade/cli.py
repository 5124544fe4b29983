"""Command-line front door.

    dergrade <decompose|bracket|apply|character|verify|info>
        --group <heisenberg|zn:<n>|perm:<name>>
        [--quotient derived|<spec.json>] [--in <file|->] [--out <file|->]
        [--seed <int>] [--samples N] [--word-len L]

Exit codes: 0 success, 2 spec/parse error, 3 setup rejection, 4 property
failure.  All randomness is seeded, so identical jobs produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Optional

from .algebra import AlgebraElement
from .derivations import DerivationTableError
from .grading import GradingSetup, TrivialGradingError, decompose
from .groups import (
    CapabilityError,
    CentralityError,
    CompositionError,
    Group,
    GroupMismatchError,
    PermutationGroup,
    QuotientError,
    QuotientSpec,
    group_from_name,
)
from .serialization import (
    SpecError,
    arrow_from_json,
    decomposition_to_json,
    derivation_from_json,
    derivation_to_json,
    dumps,
)
from .verification import run_all

EXIT_OK = 0
EXIT_SPEC = 2
EXIT_SETUP = 3
EXIT_PROPERTY = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dergrade",
        description="Compute with derivations of group algebras and their grading",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("decompose", "bracket", "apply", "character", "verify", "info"):
        p = sub.add_parser(name)
        p.add_argument("--group", required=True, help="heisenberg | zn:<n> | perm:<sN|aN>")
        p.add_argument(
            "--quotient",
            default="derived",
            help="'derived' or a JSON file with {'subgroup': [elements]}",
        )
        p.add_argument("--in", dest="infile", default="-", help="input file or '-'")
        p.add_argument("--out", dest="outfile", default="-", help="output file or '-'")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=25)
        p.add_argument("--word-len", type=int, default=4)
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".dergrade-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"input is not valid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from exc


def _resolve_quotient(group: Group, selector: str) -> QuotientSpec:
    if selector == "derived":
        return group.derived_quotient()
    data = _load_json(_read_input(selector))
    if not isinstance(data, dict) or "subgroup" not in data:
        raise SpecError("quotient spec must be an object with a 'subgroup' list")
    if not isinstance(group, PermutationGroup):
        raise SpecError("explicit subgroup quotients are only supported for perm groups")
    return group.quotient_by([tuple(p) for p in data["subgroup"]])


def _cmd_decompose(args, group: Group) -> int:
    setup = GradingSetup(group, _resolve_quotient(group, args.quotient))
    d = derivation_from_json(_load_json(_read_input(args.infile)), group)
    dec = decompose(d, setup)
    _write_output(args.outfile, dumps(decomposition_to_json(dec)))
    for key in dec.keys():
        n_terms = sum(len(img) for img in dec.components[key].images.values())
        print(
            f"component {setup.quotient.key_name(key)}: {n_terms} generator-image terms",
            file=sys.stderr,
        )
    if not dec.components:
        print("zero derivation: no components", file=sys.stderr)
    return EXIT_OK


def _cmd_bracket(args, group: Group) -> int:
    data = _load_json(_read_input(args.infile))
    if not isinstance(data, dict) or "left" not in data or "right" not in data:
        raise SpecError("bracket input must be {'left': <spec>, 'right': <spec>}")
    d = derivation_from_json(data["left"], group)
    p = derivation_from_json(data["right"], group)
    _write_output(args.outfile, dumps(derivation_to_json(d.bracket(p))))
    return EXIT_OK


def _cmd_apply(args, group: Group) -> int:
    data = _load_json(_read_input(args.infile))
    if not isinstance(data, dict) or "derivation" not in data or "element" not in data:
        raise SpecError("apply input must be {'derivation': <spec>, 'element': <algebra>}")
    d = derivation_from_json(data["derivation"], group)
    x = AlgebraElement.from_json(group, data["element"])
    _write_output(args.outfile, dumps(d.apply(x).to_json()))
    return EXIT_OK


def _cmd_character(args, group: Group) -> int:
    data = _load_json(_read_input(args.infile))
    if not isinstance(data, dict) or "derivation" not in data or "arrow" not in data:
        raise SpecError("character input must be {'derivation': <spec>, 'arrow': {'u','v'}}")
    d = derivation_from_json(data["derivation"], group)
    arrow = arrow_from_json(group, data["arrow"])
    _write_output(args.outfile, dumps(d.character(arrow).to_json()))
    return EXIT_OK


def _cmd_verify(args, group: Group) -> int:
    quotient = _resolve_quotient(group, args.quotient)
    results = run_all(
        group,
        quotient,
        seed=args.seed,
        samples=args.samples,
        word_len=args.word_len,
    )
    lines = []
    any_failed = False
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        lines.append(
            f"{status} {result.name} ({result.passed} passed, {result.failed} failed)"
        )
        any_failed = any_failed or not result.ok
    _write_output(args.outfile, "".join(line + "\n" for line in lines))
    return EXIT_PROPERTY if any_failed else EXIT_OK


def _cmd_info(args, group: Group) -> int:
    lines = [f"group: {group.name}"]
    for name, s in zip(group.generator_names(), group.generators()):
        lines.append(f"generator {name}: {group.element_to_json(s)}")
    lines.append(f"center: {group.center_description()}")
    lines.append(f"commutator subgroup: {group.commutator_description()}")
    lines.append(f"stem group: {'yes' if group.is_stem() else 'no'}")
    _write_output(args.outfile, "".join(line + "\n" for line in lines))
    return EXIT_OK


_COMMANDS = {
    "decompose": _cmd_decompose,
    "bracket": _cmd_bracket,
    "apply": _cmd_apply,
    "character": _cmd_character,
    "verify": _cmd_verify,
    "info": _cmd_info,
}


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        group = group_from_name(args.group)
        return _COMMANDS[args.command](args, group)
    except (QuotientError, TrivialGradingError) as exc:
        print(f"setup rejected: {exc}", file=sys.stderr)
        diagnostic = getattr(exc, "diagnostic", None)
        if diagnostic:
            print(
                f"counterexample element {diagnostic['element']}: "
                f"conjugacy class {diagnostic['conjugacy_class']} is not contained "
                f"in its coset {diagnostic['coset']}",
                file=sys.stderr,
            )
        return EXIT_SETUP
    except (
        SpecError,
        DerivationTableError,
        GroupMismatchError,
        CompositionError,
        CentralityError,
        CapabilityError,
        ValueError,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
