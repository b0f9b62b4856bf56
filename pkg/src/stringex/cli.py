"""Command-line front end.

Every command reads one instance file (or, with ``--dir``, every ``*.json``
file in a directory, in sorted order) and prints JSON with sorted keys.
Exit status: 0 on success, 1 on a domain error (payload
``{"error": code, "detail": message}``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Any, Callable

from .core import ShuffleWord, make_word, validate_cartan
from .diagram import ClosedStringId, build_diagram, render_ascii
from .errors import InvalidInstance, StringexError
from .exchange import (
    ExchangeMatrix,
    coloured_quiver,
    coloured_quiver_dot,
    exchange_matrix,
    usual_quiver,
    usual_quiver_dot,
)
from .generators import random_instance
from .moves import ReductionKind, flip, reduce, reduce_to_bottom
from .mutation import SearchStats, apply_in_order, apply_seq, search_reddening
from .oracle import check_entry_ranges, disagreements
from .pprime import Certificate, certify_pprime, check_certificate


class CertificateRejected(StringexError):
    pass


class UsageError(Exception):
    pass


# -- input ----------------------------------------------------------------------


def _read_json(path: Path) -> Any:
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance(f"{path}: malformed JSON ({exc})") from None


def parse_instance(data: Any) -> ShuffleWord:
    if not isinstance(data, dict):
        raise InvalidInstance("instance must be a JSON object")
    missing = {"cartan", "bottom"} - data.keys()
    if missing:
        raise InvalidInstance(f"instance is missing {sorted(missing)}")
    cartan = data["cartan"]
    if not isinstance(cartan, list) or not all(isinstance(r, list) for r in cartan):
        raise InvalidInstance("'cartan' must be a list of rows")
    top, bottom = data.get("top", []), data["bottom"]
    if not isinstance(top, list) or not isinstance(bottom, list):
        raise InvalidInstance("'top' and 'bottom' must be lists")
    origins = data.get("origins")
    if origins is None:
        if top:
            raise InvalidInstance("'origins' is required when 'top' is non-empty")
        origins = "B" * len(bottom)
    if not isinstance(origins, str) or set(origins) - {"T", "B"}:
        raise InvalidInstance("'origins' must be a string of 'T'/'B' characters")
    return make_word(top, bottom, origins, validate_cartan(cartan))


def load_matrix(path: Path) -> ExchangeMatrix:
    """A matrix file, or an instance file whose exchange matrix is built."""
    data = _read_json(path)
    if isinstance(data, dict) and "labels" in data and "rows" in data:
        try:
            return ExchangeMatrix.from_json(data)
        except (TypeError, ValueError) as exc:
            raise InvalidInstance(f"{path}: bad matrix ({exc})") from None
    return exchange_matrix(parse_instance(data))


def parse_seq(text: str) -> list[ClosedStringId]:
    tokens = [t for t in text.replace(" ", "").split(",") if t]
    try:
        return [ClosedStringId.parse(t) for t in tokens]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands -------------------------------------------------------------------
# Each takes (args, word) and returns a JSON value or, for text formats, a str.


def cmd_build(args, word: ShuffleWord):
    return exchange_matrix(word).to_json()


def cmd_render(args, word: ShuffleWord):
    return render_ascii(build_diagram(word))


def cmd_dot(args, word: ShuffleWord):
    matrix = exchange_matrix(word)
    if args.kind == "coloured":
        return coloured_quiver_dot(coloured_quiver(matrix, word.cartan), word.cartan)
    return usual_quiver_dot(usual_quiver(matrix))


def cmd_mutate(args, word: ShuffleWord):
    seq = parse_seq(args.seq)
    matrix = exchange_matrix(word)
    out = apply_in_order(matrix, seq) if args.apply_order else apply_seq(matrix, seq)
    return out.to_json()


def cmd_flip(args, word: ShuffleWord):
    new, effect = flip(word, args.pos)
    return {"effect": effect.to_json(), "word": new.to_json()}


def cmd_reduce(args, word: ShuffleWord):
    return {"word": reduce(word, ReductionKind.parse(args.kind)).to_json()}


def cmd_reduce_to_bottom(args, word: ShuffleWord):
    return reduce_to_bottom(word).to_json()


def cmd_certify(args, word: ShuffleWord):
    return certify_pprime(word).to_json()


def cmd_redden(args, word: ShuffleWord):
    stats = SearchStats()
    seq = search_reddening(exchange_matrix(word), args.max_depth, allow_large=args.allow_large, stats=stats)
    return {
        "explored": stats.explored,
        "sequence": None if seq is None else [str(x) for x in seq],
    }


def cmd_build_ascii(args, word: ShuffleWord):
    return str(exchange_matrix(word))


INSTANCE_COMMANDS: dict[str, Callable] = {
    "build": cmd_build,
    "render": cmd_render,
    "dot": cmd_dot,
    "mutate": cmd_mutate,
    "flip": cmd_flip,
    "reduce": cmd_reduce,
    "reduce-to-bottom": cmd_reduce_to_bottom,
    "certify": cmd_certify,
    "redden": cmd_redden,
}

# (command, format) pairs beyond each command's default format
ALTERNATE_FORMATS: dict[tuple[str, str], Callable] = {
    ("build", "dot"): cmd_dot,
    ("build", "ascii"): cmd_build_ascii,
}


def cmd_verify(args) -> Any:
    try:
        cert = Certificate.from_json(_read_json(Path(args.certificate)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInstance(f"bad certificate: {exc}") from None
    target = args.matrix or args.input
    if target is None:
        raise UsageError("verify needs --matrix FILE or an instance file")
    result = check_certificate(cert, load_matrix(Path(target)))
    if not result.ok:
        step = "" if result.failed_step is None else f"step {result.failed_step}: "
        raise CertificateRejected(step + result.reason)
    return {"verified": True}


def resolve_seed(seed: int | None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get("STRINGEX_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"STRINGEX_SEED={env!r} is not an integer") from None


def oracle_check(count: int, seed: int) -> dict:
    rng = random.Random(seed)
    mismatched = 0
    out_of_range = 0
    for _ in range(count):
        word = random_instance(rng)
        matrix = exchange_matrix(word)
        mismatched += bool(disagreements(word, matrix))
        out_of_range += not check_entry_ranges(matrix, word.cartan)
    return {"checked": count, "disagreements": mismatched, "range_failures": out_of_range, "seed": seed}


# -- driver ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stringex", description="String-diagram exchange matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_cmd(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("input", nargs="?", help="instance JSON file")
        p.add_argument("--dir", help="process every *.json file in this directory")
        p.add_argument("--format", choices=["json", "dot", "ascii"], default=None)
        return p

    p = instance_cmd("build", "exchange matrix (JSON; dot gives the usual quiver)")
    p.add_argument("--kind", choices=["usual", "coloured"], default="usual")
    instance_cmd("render", "ASCII string diagram")
    p = instance_cmd("dot", "quiver as Graphviz DOT")
    p.add_argument("--kind", choices=["usual", "coloured"], default="usual")
    p = instance_cmd("mutate", "mutate the exchange matrix")
    p.add_argument("--seq", required=True, help='comma-separated labels, e.g. "1:2,1:3" (rightmost applied first)')
    p.add_argument("--apply-order", action="store_true", help="apply --seq left to right instead")
    p = instance_cmd("flip", "flip the diagonal after triangle POS")
    p.add_argument("--pos", type=int, required=True)
    p = instance_cmd("reduce", "toggle the first/last letter")
    p.add_argument("--kind", required=True, choices=["Ld", "Lu", "Rd", "Ru"])
    instance_cmd("reduce-to-bottom", "reduce to an all-bottom word")
    instance_cmd("certify", "P' membership certificate")
    p = instance_cmd("redden", "search for a reddening sequence")
    p.add_argument("--max-depth", type=int, default=12)
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("verify", help="replay a certificate against a matrix")
    p.add_argument("input", nargs="?", help="instance JSON file (alternative to --matrix)")
    p.add_argument("--certificate", required=True)
    p.add_argument("--matrix", help="matrix JSON file or instance file")

    p = sub.add_parser("oracle", help="cross-check against the brute-force oracle")
    p.add_argument("action", choices=["check"])
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None, help="defaults to $STRINGEX_SEED, then 0")
    return parser


TEXT_COMMANDS = {"render": "ascii", "dot": "dot"}


def _emit(value: Any) -> str:
    if isinstance(value, str):
        return value if value.endswith("\n") else value + "\n"
    return json.dumps(value, sort_keys=True) + "\n"


def _error_payload(exc: StringexError) -> dict:
    return {"detail": str(exc), "error": exc.code}


def _run_instance(args) -> tuple[str, int]:
    default = TEXT_COMMANDS.get(args.command, "json")
    fmt = args.format or default
    if fmt == default:
        handler = INSTANCE_COMMANDS[args.command]
    elif (args.command, fmt) in ALTERNATE_FORMATS:
        handler = ALTERNATE_FORMATS[args.command, fmt]
    else:
        raise UsageError(f"--format {fmt} is not available for {args.command}")
    if args.dir:
        if args.input:
            raise UsageError("give either an input file or --dir, not both")
        folder = Path(args.dir)
        if not folder.is_dir():
            raise UsageError(f"{folder} is not a directory")
        results, status = {}, 0
        for path in sorted(folder.glob("*.json")):
            try:
                results[path.name] = handler(args, parse_instance(_read_json(path)))
            except StringexError as exc:
                results[path.name] = _error_payload(exc)
                status = 1
        if fmt == "json":
            return _emit(results), status
        chunks = []
        for name, value in results.items():
            body = value if isinstance(value, str) else _emit(value)
            chunks.append(f"# {name}\n{body}")
        return "".join(chunks), status
    if not args.input:
        raise UsageError(f"{args.command} needs an input file or --dir")
    return _emit(handler(args, parse_instance(_read_json(Path(args.input))))), 0


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            text, status = _emit(cmd_verify(args)), 0
        elif args.command == "oracle":
            report = oracle_check(args.count, resolve_seed(args.seed))
            bad = report["disagreements"] or report["range_failures"]
            text, status = _emit(report), 1 if bad else 0
        else:
            text, status = _run_instance(args)
    except UsageError as exc:
        print(f"stringex: error: {exc}", file=sys.stderr)
        return 2
    except StringexError as exc:
        out.write(_emit(_error_payload(exc)))
        return 1
    except (TypeError, ValueError, KeyError) as exc:
        out.write(_emit({"detail": str(exc), "error": "InvalidInstance"}))
        return 1
    out.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
