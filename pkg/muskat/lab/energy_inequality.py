"""
Per-step slack of the parabolic energy estimate

    dA/dt + int |<D>^{2,phi} f|^2 / (1 + f_x^2) dx <= C Q(f) ||<D>^{2,phi} f||

and of its monitor form dA/dt + C1 delta B <= C2 (sqrt(A) + A) mu B, along a
trace recorded at every step with its states.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..norms import sobolev_norm, weighted_norm
from ..spectral import GridFunction, derivative
from ..solver import EnergyTrace, SimConfig, build_context, dissipation
from ..weights import Phi

logger = logging.getLogger(__name__)


def energy_Q(f: GridFunction, phi: Phi) -> float:
    """
    Q(f) = (||f||_{2} + ||f||_{7/4}^2) ||<D>^{3/2,phi} f|| + ||<D>^{7/4,phi} f|| ||f||_{H^{7/4}}
           + (||f||_{H^{19/12}}^{3/2} + ||f||_{7/4}^{1/2}) ||<D>^{7/4,phi^2} f||^{1/2} ||f||_{7/4}
    with dotted norms homogeneous and H^s inhomogeneous.
    """
    h2 = sobolev_norm(f, 2.0)
    h74 = sobolev_norm(f, 1.75)
    return ((h2 + h74 ** 2) * weighted_norm(f, 1.5, phi)
            + weighted_norm(f, 1.75, phi) * sobolev_norm(f, 1.75, homogeneous=False)
            + (sobolev_norm(f, 19.0 / 12.0, homogeneous=False) ** 1.5 + h74 ** 0.5)
            * weighted_norm(f, 1.75, phi, 2) ** 0.5 * h74)


@dataclass
class EnergyInequalityReport:
    constant: float
    slacks: List[float] = field(default_factory=list)
    monitor_slacks: List[float] = field(default_factory=list)
    dissipations: List[float] = field(default_factory=list)
    dissipation_floor: List[float] = field(default_factory=list)
    calibrated_constant: float = 0.0

    @property
    def min_slack(self) -> float:
        return min(self.slacks) if self.slacks else 0.0

    @property
    def min_monitor_slack(self) -> float:
        return min(self.monitor_slacks) if self.monitor_slacks else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "constant": self.constant,
            "calibrated_constant": self.calibrated_constant,
            "min_slack": self.min_slack,
            "min_monitor_slack": self.min_monitor_slack,
            "slacks": list(self.slacks),
            "monitor_slacks": list(self.monitor_slacks),
        }


def check_energy_inequality(trace: EnergyTrace, cfg: SimConfig, constant: Optional[float] = None,
                            phi: Optional[Phi] = None) -> EnergyInequalityReport:
    """
    Slack per step (right side minus left side; nonnegative means the estimate holds).

    dA/dt is the forward difference of consecutive records; the remaining terms
    are averaged over the two ends of the step. The calibrated constant is the
    smallest C >= 0 making every slack nonnegative. The estimate's C defaults
    to cfg.constants.C2.

    Raises:
        ValueError: if the trace was not recorded at every step with its states
    """
    if cfg.cadence != 1:
        raise ValueError(f"energy inequality needs cadence 1, got {cfg.cadence}")
    if len(trace.states) != len(trace.records):
        raise ValueError("trace carries no states; simulate with keep_states=True")
    if phi is None:
        phi = build_context(cfg, trace.states[0] if trace.states else None).phi
    C = cfg.constants.C2 if constant is None else float(constant)
    C1, C2 = cfg.constants.C1, cfg.constants.C2
    report = EnergyInequalityReport(constant=C)

    diss = [dissipation(f, phi) for f in trace.states]
    drive = [energy_Q(f, phi) * math.sqrt(r.B) for f, r in zip(trace.states, trace.records)]
    report.dissipations = diss
    report.dissipation_floor = [r.B / (1.0 + derivative(f).max_abs() ** 2)
                                for f, r in zip(trace.states, trace.records)]

    needed = 0.0
    records = trace.records
    for i in range(len(records) - 1):
        dt = records[i + 1].t - records[i].t
        rate = (records[i + 1].A - records[i].A) / dt
        left = rate + 0.5 * (diss[i] + diss[i + 1])
        right = 0.5 * (drive[i] + drive[i + 1])
        report.slacks.append(C * right - left)
        if right > 0:
            needed = max(needed, left / right)

        monitor_left = rate + C1 * 0.5 * (records[i].delta * records[i].B + records[i + 1].delta * records[i + 1].B)
        monitor_right = C2 * 0.5 * sum((math.sqrt(r.A) + r.A) * r.mu * r.B for r in (records[i], records[i + 1]))
        report.monitor_slacks.append(monitor_right - monitor_left)

    report.calibrated_constant = needed
    logger.info("energy inequality: min slack %.4g with C=%g, calibrated C=%.4g",
                report.min_slack, C, needed)
    return report
