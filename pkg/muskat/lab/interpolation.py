"""
Interpolation inequalities bounding the norms in Q(f) by the energy
monitors A, B and mu:

    ||f||_{H^s}             <= C mu A^(2-s) B^(s-3/2),            7/4 <= s <= 2
    ||<D>^{7/4,phi^2} f||   <= mu^-1 A^(1/4) B^(1/4)
    ||f_x||_inf             <= C log(4 + B/(A + ||f||^2))^((1-2a)/2) (A^(1/2) + ||f||)
"""
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from ..norms import sobolev_norm, weighted_norm
from ..spectral import GridFunction, derivative
from ..weights import Kappa, KappaFamily, Phi, tabulate_phi
from ..solver.energy import frequency_ratio, phi_range_for
from .ensemble import Ensemble
from .ratio_report import RatioReport, build_ratio_report


@dataclass(frozen=True)
class InterpolationRecord:
    s: float
    sobolev_ratio: float
    weighted_ratio: float
    linf_ratio: float
    excluded: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _log_exponent(kappa: Kappa) -> float:
    if kappa.family is KappaFamily.POWER_LOG:
        return float(kappa.param("a"))
    return 1.0 / 3.0


def check_interpolation(f: GridFunction, kappa: Kappa, s: float = 2.0,
                        phi: Optional[Phi] = None) -> InterpolationRecord:
    """
    The three left/right ratios for f, with ||f0||_{L2} taken as ||f||_{L2}.

    Raises:
        ValueError: if s lies outside [7/4, 2]
    """
    if not 1.75 <= s <= 2.0:
        raise ValueError(f"s must lie in [7/4, 2], got {s}")
    phi = phi or tabulate_phi(kappa, lambda_range=phi_range_for(f.grid), allow_degenerate=True)
    A = weighted_norm(f, 1.5, phi) ** 2
    B = weighted_norm(f, 2.0, phi) ** 2
    if A == 0 and B == 0:
        return InterpolationRecord(s, math.nan, math.nan, math.nan, excluded=True)
    mu = 1.0 / float(kappa(frequency_ratio(A, B)))
    l2 = f.l2_norm()
    a = _log_exponent(kappa)

    sobolev_ratio = sobolev_norm(f, s) / (mu * A ** (2.0 - s) * B ** (s - 1.5))
    weighted_ratio = weighted_norm(f, 1.75, phi, 2) / (A ** 0.25 * B ** 0.25 / mu)
    log_factor = math.log(4.0 + B / (A + l2 ** 2)) ** ((1.0 - 2.0 * a) / 2.0)
    linf_ratio = derivative(f).max_abs() / (log_factor * (math.sqrt(A) + l2))
    return InterpolationRecord(s, sobolev_ratio, weighted_ratio, linf_ratio)


INTERPOLATION_RATIOS = ("sobolev", "weighted", "linf")


def check_interpolation_ensemble(ensemble: Ensemble, kappa: Kappa, s: float = 2.0,
                                 phi: Optional[Phi] = None) -> List[RatioReport]:
    """One report per inequality, identified as interpolation_<name>; zero fields are excluded."""
    phi = phi or tabulate_phi(kappa, lambda_range=phi_range_for(ensemble.grid), allow_degenerate=True)
    records = [check_interpolation(f, kappa, s, phi) for f in ensemble.fields()]
    describe = dict(ensemble.describe(), kappa=kappa.label, s=s)
    reports = []
    for name in INTERPOLATION_RATIOS:
        # ratios are stored over a unit right side
        pairs = [(math.nan, math.nan) if r.excluded else (getattr(r, f"{name}_ratio"), 1.0) for r in records]
        reports.append(build_ratio_report(f"interpolation_{name}", pairs, describe))
    return reports
