# phasentropy/cli/main.py

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from phasentropy.cli.commands import COMMANDS
from phasentropy.core.config import (
    DEFAULT_PAIRS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    EXIT_INVARIANT,
    EXIT_IO,
    EXIT_PARSE,
)
from phasentropy.core.errors import (
    DomainError,
    SamplingConfigError,
    StateValidationError,
)
from phasentropy.core.schema import RunConfig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasentropy",
        description=(
            "Wehrl entropies, subentropies and Renyi-type entanglement monotones "
            "from spectra, density matrices and bipartite pure states."
        ),
    )
    parser.add_argument(
        "--command",
        choices=sorted(COMMANDS),
        help="what to run",
    )
    parser.add_argument("--input", dest="input_path", help="state or pair JSON (fsspec URL)")
    parser.add_argument("--output", dest="output_path", default="-", help="output URL, '-' for stdout")
    parser.add_argument("--format", default="json", choices=["json", "csv"])
    parser.add_argument(
        "--q", dest="q_grid", action="append", type=float, help="moment order (repeatable)"
    )
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument(
        "--dims", action="append", type=int, help="dimension N (repeatable)"
    )
    parser.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    parser.add_argument(
        "--show-versions",
        action="store_true",
        help="print the installed dependency versions and exit",
    )
    return parser


def _format_validation_error(err: ValidationError) -> str:
    lines = []
    for e in err.errors():
        field = ".".join(str(p) for p in e["loc"]) or "config"
        lines.append(f"  {field}: {e['msg']}")
    return "invalid input:\n" + "\n".join(lines)


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """Parse command-line arguments into a validated RunConfig.

    Raises ``SystemExit(2)`` on unknown flags and pydantic's
    ``ValidationError`` on invalid values.
    """
    args = vars(build_parser().parse_args(argv))
    args.pop("show_versions")
    return RunConfig.model_validate({k: v for k, v in args.items() if v is not None})


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.show_versions:
        from phasentropy.utils.print_versions import show_versions

        show_versions()
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("phasentropy: error: --command is required", file=sys.stderr)
        return EXIT_PARSE

    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.command](cfg)
    except ValidationError as err:
        print(_format_validation_error(err), file=sys.stderr)
        return EXIT_PARSE
    except json.JSONDecodeError as err:
        print(f"input is not valid JSON: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, SamplingConfigError) as err:
        print(f"invalid parameter: {err}", file=sys.stderr)
        return EXIT_PARSE
    except StateValidationError as err:
        print(f"invalid state: {err}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as err:
        print(f"I/O error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
