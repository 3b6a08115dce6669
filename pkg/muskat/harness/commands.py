"""
Command implementations behind the scripts.

Exit codes: 0 success, 2 configuration error, 3 runtime or step failure,
4 verification failure.
"""
import logging
import math
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, Optional

from ..config import ConfigReader, RunManifest, SweepCell, SweepSpec
from ..errors import ConfigError
from ..lab import BaselineStore
from ..reporting import (
    HtmlReporter,
    JsonReporter,
    PhiTableCsvReporter,
    SweepCsvReporter,
    TraceChartReporter,
    TraceCsvReporter,
)
from ..solver import (
    SimConfig,
    TerminationReason,
    WeightKind,
    build_context,
    config_digest,
    is_nonincreasing,
    local_existence_time,
    simulate,
    smallness_check,
)
from ..spectral import project_Jn
from ..weights import degenerate_constant_kappa, kappa_power_log, tabulate_phi, validate_kappa
from .verification import VerifySettings, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3
EXIT_VERIFY = 4

MONOTONE_TOLERANCE = 1e-8
WEIGHT_KINDS = ("power-log", "constant")


def load_sim_config(manifest: RunManifest):
    """The document named by the manifest with its seed override applied."""
    document = ConfigReader(str(manifest.config_path)).load_config()
    sim = document.sim
    if manifest.seed is not None:
        sim = sim.with_changes(seed=manifest.seed)
    return sim, document.sweep


def run_summary(cfg: SimConfig, trace, f0) -> Dict[str, Any]:
    """Termination, final monitors, smallness and, for data-adapted weights, T0."""
    smallness = smallness_check(f0, cfg.constants.c0)
    summary: Dict[str, Any] = {
        "termination": trace.termination.value,
        "failure": trace.failure,
        "records": len(trace),
        "final": trace.final.to_dict() if trace.final else None,
        "smallness": {"pass": smallness.passed, "margin": smallness.margin, "c0": cfg.constants.c0},
        "config": cfg.to_dict(),
    }
    if cfg.weight_kind is WeightKind.DATA_ADAPTED:
        context = build_context(cfg, f0)
        existence = local_existence_time(f0, context.kappa, cfg.constants.C1, cfg.constants.C2, context.phi)
        summary["predicted_T0"] = {
            "T0": existence.T0,
            "M0": existence.M0,
            "envelope": existence.envelope,
            "degenerate": existence.degenerate,
            "at_mesh_edge": existence.at_mesh_edge,
        }
    return summary


def cmd_simulate(manifest: RunManifest) -> int:
    """Trace CSV, SVG plot and summary JSON for one configuration."""
    try:
        cfg, _ = load_sim_config(manifest)
        f0 = project_Jn(cfg.initial_data(), cfg.n)
    except (OSError, ValueError) as e:
        print(f"Error loading configuration: {e}")
        return EXIT_CONFIG

    out_dir = manifest.prepare_output()
    digest = cfg.digest()
    try:
        trace = simulate(cfg)
    except (ArithmeticError, RuntimeError, ValueError) as e:
        logger.exception("simulation aborted")
        print(f"Error: simulation aborted: {e}")
        return EXIT_RUNTIME

    TraceCsvReporter().generate_report(trace, out_dir / "trace.csv", digest)
    TraceChartReporter().generate_report(trace, out_dir / "trace.svg", digest)
    summary = run_summary(cfg, trace, f0)
    summary["version"] = manifest.version
    JsonReporter().generate_report(summary, out_dir / "summary.json", digest)

    print(f"Trace written to {out_dir / 'trace.csv'} ({len(trace)} records)")
    print(f"Termination: {trace.termination.value}")
    if trace.termination is not TerminationReason.REACHED_T:
        print(f"Error: {trace.failure}")
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_verify(manifest: RunManifest, settings: Optional[VerifySettings] = None) -> int:
    """Run the verification suite and write JSON and HTML summaries."""
    settings = settings or VerifySettings(seed=manifest.seed or 0)
    out_dir = manifest.prepare_output()
    digest = config_digest(settings.to_dict())
    store = BaselineStore.from_env(out_dir / "baselines.json")

    try:
        summary = run_verification(settings, store)
    except (ArithmeticError, RuntimeError, ValueError) as e:
        logger.exception("verification aborted")
        print(f"Error: verification aborted: {e}")
        return EXIT_RUNTIME

    json_reporter = JsonReporter()
    for report in summary.ratios:
        json_reporter.generate_report(report.to_dict(), out_dir / "reports" / f"{report.identifier}.json", digest)
    data = summary.to_dict()
    data["version"] = manifest.version
    data["settings"] = settings.to_dict()
    json_reporter.generate_report(data, out_dir / "verify_summary.json", digest)
    HtmlReporter().generate_report(data, out_dir / "verify_summary.html", digest)
    store.save()

    print(f"Checks: {len(summary.checks)}, ratio reports: {len(summary.ratios)}")
    if not summary.passed:
        print(f"FAILED: {', '.join(summary.failing)}")
        return EXIT_VERIFY
    print("All checks passed")
    return EXIT_OK


def run_cell(base: SimConfig, sweep: SweepSpec, cell: SweepCell, out_dir: Path) -> Dict[str, Any]:
    """Simulate one sweep cell into its own directory and return its summary row."""
    row: Dict[str, Any] = {"cell": cell.label, "amplitude": cell.amplitude, "cutoff": cell.cutoff, "dt": cell.dt}
    try:
        cfg = sweep.cell_config(base, cell)
        f0 = project_Jn(cfg.initial_data(), cfg.n)
        trace = simulate(cfg)
    except (ArithmeticError, OSError, RuntimeError, ValueError) as e:
        row.update(termination="error", failure=str(e))
        return row

    cell_dir = out_dir / "cells" / cell.label
    TraceCsvReporter().generate_report(trace, cell_dir / "trace.csv", cfg.digest())
    final = trace.final
    row.update(
        termination=trace.termination.value,
        t_final=final.t,
        l2=final.l2,
        A=final.A,
        B=final.B,
        smallness_pass=smallness_check(f0, cfg.constants.c0).passed,
        l2_nonincreasing=is_nonincreasing(trace.column("l2"), MONOTONE_TOLERANCE),
        A_nonincreasing=is_nonincreasing(trace.column("A"), MONOTONE_TOLERANCE),
    )
    return row


def _executor(workers: int) -> Executor:
    if workers <= 1:
        return ThreadPoolExecutor(max_workers=1)
    return ProcessPoolExecutor(max_workers=workers)


def cmd_sweep(manifest: RunManifest) -> int:
    """One trace per amplitude x cutoff x dt cell plus a summary CSV."""
    try:
        base, sweep = load_sim_config(manifest)
        if sweep is None:
            raise ConfigError("sweep section required", "sweep")
        cells = list(sweep.cells())
        for cell in cells:
            sweep.cell_config(base, cell)
    except (ConfigError, OSError) as e:
        print(f"Error loading configuration: {e}")
        return EXIT_CONFIG
    except ValueError as e:
        print(f"Error loading configuration: sweep: {e}")
        return EXIT_CONFIG

    out_dir = manifest.prepare_output()
    workers = manifest.worker_count()
    logger.info("sweep of %d cells on %d workers", len(cells), workers)
    with _executor(workers) as executor:
        futures = [executor.submit(run_cell, base, sweep, cell, out_dir) for cell in cells]
        rows = [future.result() for future in futures]

    digest = base.digest()
    SweepCsvReporter().generate_report(rows, out_dir / "summary.csv", digest)
    failures = [row["cell"] for row in rows if row["termination"] != TerminationReason.REACHED_T.value]
    print(f"Sweep finished: {len(rows)} cells, {len(failures)} failed")
    if failures:
        print(f"Failed cells: {', '.join(failures)}")
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_weights(manifest: RunManifest, kind: str, a: float = 1.0 / 3.0,
                lambda_max: float = 1e6) -> int:
    """phi table CSV and the weight's validation report."""
    if kind not in WEIGHT_KINDS:
        print(f"Error: kind must be one of {', '.join(WEIGHT_KINDS)}, got {kind!r}")
        return EXIT_CONFIG
    try:
        kappa = kappa_power_log(a) if kind == "power-log" else degenerate_constant_kappa(1.0)
    except ValueError as e:
        print(f"Error: {e}")
        return EXIT_CONFIG

    out_dir = manifest.prepare_output()
    validation = validate_kappa(kappa)
    try:
        phi = tabulate_phi(kappa, lambda_range=(1e-3, lambda_max), allow_degenerate=not validation.passed)
    except (ArithmeticError, RuntimeError) as e:
        print(f"Error: phi tabulation failed: {e}")
        return EXIT_RUNTIME

    settings = {"kind": kind, "a": a if kind == "power-log" else None, "lambda_max": lambda_max}
    digest = config_digest(settings)
    PhiTableCsvReporter().generate_report(phi, out_dir / "phi_table.csv", digest)
    report = {"settings": settings, "validation": validation.to_dict(), "phi": phi.summary(),
              "version": manifest.version}
    JsonReporter().generate_report(report, out_dir / "weights_report.json", digest)

    print(f"phi table for {kappa.label}: {phi.lambdas.size} nodes, "
          f"phi/kappa in [{phi.c_lower:.4f}, {phi.c_upper:.4f}]")
    if not validation.passed:
        print("Warning: weight fails the growth hypotheses (table built anyway)")
    return EXIT_OK if math.isfinite(phi.c_upper) else EXIT_RUNTIME
