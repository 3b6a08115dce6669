"""
Self-convergence in time by Richardson's order estimate.
"""
import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .energy import build_context
from .integrator import final_state
from .sim_config import SimConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvergenceStudy:
    dts: Tuple[float, ...]
    differences: Tuple[float, ...]
    order: float


def self_convergence_order(cfg: SimConfig, dts: Sequence[float]) -> ConvergenceStudy:
    """
    Order p from three step sizes in a fixed ratio r:
    p = log(|f_1 - f_2| / |f_2 - f_3|) / log r.

    Raises:
        ValueError: if the step sizes are not three decreasing values in a fixed ratio
    """
    if len(dts) != 3:
        raise ValueError(f"need exactly three step sizes, got {len(dts)}")
    dt1, dt2, dt3 = (float(dt) for dt in dts)
    if not dt1 > dt2 > dt3 > 0:
        raise ValueError(f"step sizes must be positive and decreasing, got {tuple(dts)}")
    ratio = dt1 / dt2
    if not math.isclose(ratio, dt2 / dt3, rel_tol=1e-9):
        raise ValueError("step sizes must share one refinement ratio")

    context = build_context(cfg)
    states = [final_state(cfg.with_changes(dt=dt), context) for dt in (dt1, dt2, dt3)]
    coarse = (states[0] - states[1]).l2_norm()
    fine = (states[1] - states[2]).l2_norm()
    order = math.log(coarse / fine) / math.log(ratio) if coarse > 0 and fine > 0 else math.nan
    logger.info("self-convergence: differences %.3g, %.3g -> order %.3f", coarse, fine, order)
    return ConvergenceStudy((dt1, dt2, dt3), (coarse, fine), order)
