import argparse
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

from muskat import __version__
from muskat.config import RunManifest
from muskat.harness import cmd_weights
from muskat.harness.commands import WEIGHT_KINDS


def parse_arguments(argv=None):
    parser = argparse.ArgumentParser(description="Tabulate phi for a weight and validate the weight.")
    parser.add_argument("--kind", choices=WEIGHT_KINDS, default="power-log")
    parser.add_argument("--a", type=float, default=1.0 / 3.0, help="log exponent of the power-log weight")
    parser.add_argument("--lambda-max", type=float, default=1e6, help="upper end of the table")
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.add_argument("--verbose", action="store_true")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_arguments(argv)
    load_dotenv()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    print("\n=== Weight table ===")
    print(f"Kind: {args.kind}" + (f" (a={args.a:g})" if args.kind == "power-log" else ""))
    manifest = RunManifest("weights", args.out, version=__version__)
    return cmd_weights(manifest, args.kind, args.a, args.lambda_max)


if __name__ == "__main__":
    sys.exit(main())
