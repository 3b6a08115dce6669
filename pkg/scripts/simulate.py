import argparse
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

from muskat import __version__
from muskat.config import RunManifest
from muskat.harness import cmd_simulate


def parse_arguments(argv=None):
    parser = argparse.ArgumentParser(description="Simulate the truncated Muskat problem from a config document.")
    parser.add_argument("--config", type=Path, required=True, help="YAML or JSON configuration")
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.add_argument("--seed", type=int, default=None, help="override the configured seed")
    parser.add_argument("--verbose", action="store_true")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_arguments(argv)
    load_dotenv()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    print("\n=== Muskat simulation ===")
    print(f"Config: {args.config}")
    print(f"Output: {args.out}")
    try:
        manifest = RunManifest("simulate", args.out, args.config, args.seed, __version__)
    except ValueError as e:
        print(f"Error: {e}")
        return 2
    return cmd_simulate(manifest)


if __name__ == "__main__":
    sys.exit(main())
