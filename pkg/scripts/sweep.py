import argparse
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

from muskat import __version__
from muskat.config import RunManifest
from muskat.harness import cmd_sweep


def parse_arguments(argv=None):
    parser = argparse.ArgumentParser(description="Run an amplitude x cutoff x dt sweep from a config document.")
    parser.add_argument("--config", type=Path, required=True, help="config with a sweep section")
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.add_argument("--workers", type=int, default=None, help="default: MUSKAT_WORKERS or the CPU count")
    parser.add_argument("--seed", type=int, default=None, help="override the configured seed")
    parser.add_argument("--verbose", action="store_true")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_arguments(argv)
    load_dotenv()  # MUSKAT_WORKERS may come from .env
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    print("\n=== Muskat sweep ===")
    print(f"Config: {args.config}")
    print(f"Output: {args.out}")
    try:
        manifest = RunManifest("sweep", args.out, args.config, args.seed, __version__, args.workers)
        print(f"Workers: {manifest.worker_count()}")
    except ValueError as e:
        print(f"Error: {e}")
        return 2
    return cmd_sweep(manifest)


if __name__ == "__main__":
    sys.exit(main())
