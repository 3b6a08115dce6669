import argparse
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

from muskat import __version__
from muskat.config import RunManifest
from muskat.harness import VerifySettings, cmd_verify


def parse_arguments(argv=None):
    parser = argparse.ArgumentParser(
        description="Run the inequality checks and hard invariants; baselines come from "
                    "MUSKAT_BASELINES or <out>/baselines.json.")
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.add_argument("--seed", type=int, default=0, help="seed of the random ensembles")
    parser.add_argument("--ensemble-size", type=int, default=VerifySettings.ensemble_size,
                        help="fields or pairs per ratio check")
    parser.add_argument("--equivalence-size", type=int, default=VerifySettings.equivalence_size,
                        help="fields in the norm-equivalence check")
    parser.add_argument("--runs", type=int, default=VerifySettings.runs, help="seeded small-data runs")
    parser.add_argument("--verbose", action="store_true")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_arguments(argv)
    load_dotenv()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    print("\n=== Verification ===")
    print(f"Output: {args.out}")
    print(f"Seed: {args.seed}, ensemble size: {args.ensemble_size}, "
          f"equivalence size: {args.equivalence_size}, runs: {args.runs}")
    try:
        manifest = RunManifest("verify", args.out, seed=args.seed, version=__version__)
        settings = VerifySettings(seed=args.seed, ensemble_size=args.ensemble_size,
                                  equivalence_size=args.equivalence_size, runs=args.runs)
    except ValueError as e:
        print(f"Error: {e}")
        return 2
    return cmd_verify(manifest, settings)


if __name__ == "__main__":
    sys.exit(main())
