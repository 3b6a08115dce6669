"""
Integrating-factor time stepping for d_t f + Lambda f = J_n(T(f) f).

The linear part is propagated exactly by exp(-|xi| dt); the projected
nonlinearity is advanced by the explicit midpoint rule under that factor.
All stages are kept in Fourier space so the cutoff holds exactly.
"""
import logging
from typing import Optional

import numpy as np

from ..errors import StepFailure
from ..nonlinearity import T_apply
from ..spectral import GridFunction, cutoff_mask, project_Jn
from .energy import EnergyTrace, SolverContext, TerminationReason, build_context, monitors
from .sim_config import SimConfig

logger = logging.getLogger(__name__)


def nonlinear_term(f: GridFunction, cfg: SimConfig, context: SolverContext) -> np.ndarray:
    """Spectrum of J_n(T(f) f), or zeros when the nonlinearity is switched off."""
    if not cfg.nonlinear:
        return np.zeros_like(f.spectrum)
    return project_Jn(T_apply(f, f, context.quad), context.n).spectrum


def step(f: GridFunction, dt: float, cfg: SimConfig, context: Optional[SolverContext] = None,
         t: float = 0.0) -> GridFunction:
    """
    One integrating-factor midpoint step of size dt from time t.

    Raises:
        ValueError: if dt is not positive
        StepFailure: if the new state is not finite
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    context = context or build_context(cfg)
    grid = f.grid
    k = grid.half_wavenumbers
    mask = cutoff_mask(f, context.n)
    half_decay = np.exp(-k * 0.5 * dt)
    decay = np.exp(-k * dt)

    spectrum = f.spectrum
    first = nonlinear_term(f, cfg, context)
    midpoint = GridFunction.from_spectrum(grid, np.where(mask, half_decay * (spectrum + 0.5 * dt * first), 0.0))
    second = nonlinear_term(midpoint, cfg, context)
    updated = np.where(mask, decay * spectrum + dt * half_decay * second, 0.0)

    if not np.all(np.isfinite(updated)):
        raise StepFailure("non-finite state after step", t + dt,
                          {"dt": dt, "max_abs_before": f.max_abs(),
                           "finite_modes": int(np.sum(np.isfinite(updated)))})
    return GridFunction.from_spectrum(grid, updated)


def simulate(cfg: SimConfig, context: Optional[SolverContext] = None) -> EnergyTrace:
    """
    Run cfg from J_n f0 to T.

    Step failures and monitor blow-up end the run early; the partial trace is
    returned with the termination reason set.
    """
    f = project_Jn(cfg.initial_data(), cfg.n)
    context = context or build_context(cfg, f)
    f0_l2 = f.l2_norm()
    dt = cfg.time_step
    steps = cfg.step_count
    trace = EnergyTrace(config_digest=cfg.digest(), f0_l2=f0_l2)

    trace.append(monitors(f, cfg, f0_l2, 0.0, context), f if cfg.keep_states else None)
    logger.info("simulating %d steps of dt=%.4g on %s (n=%g)", steps, dt, context.grid, context.n)

    for index in range(1, steps + 1):
        t_prev = (index - 1) * dt
        try:
            f = step(f, dt, cfg, context, t_prev)
        except StepFailure as e:
            trace.termination = TerminationReason.STEP_FAILURE
            trace.failure = str(e)
            logger.warning("step failure at t=%.6g: %s", e.t, e.diagnostics)
            break
        if index % cfg.cadence == 0 or index == steps:
            record = monitors(f, cfg, f0_l2, index * dt, context)
            trace.append(record, f if cfg.keep_states else None)
            if not record.is_finite() or record.A > cfg.blowup_threshold:
                trace.termination = TerminationReason.MONITOR_BLOWUP
                trace.failure = f"monitors left the finite range at t={record.t:.6g}"
                logger.warning(trace.failure)
                break

    logger.info("simulation finished: %s after %d records", trace.termination.value, len(trace))
    return trace


def final_state(cfg: SimConfig, context: Optional[SolverContext] = None) -> GridFunction:
    """State at T without monitors."""
    f = project_Jn(cfg.initial_data(), cfg.n)
    context = context or build_context(cfg, f)
    dt = cfg.time_step
    for index in range(cfg.step_count):
        f = step(f, dt, cfg, context, index * dt)
    return f
