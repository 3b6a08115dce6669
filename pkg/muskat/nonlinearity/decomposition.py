"""
Cross-check of the paralinearization T(f)g = f_x^2/(1+f_x^2) Lambda g + V g_x + R(f, g).
"""
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict

from ..spectral import GridFunction, derivative
from .alpha_quadrature import AlphaQuadrature
from .muskat_operator import T_apply, fraction_coefficient, quadrature_lambda, remainder_R, transport_coeff_V

logger = logging.getLogger(__name__)

DEFAULT_CONSISTENCY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DecompositionReport:
    t_norm: float
    fraction_lambda_norm: float
    transport_norm: float
    remainder_norm: float
    residual_norm: float
    scale: float
    tolerance: float
    quadrature: Dict[str, Any] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.residual_norm <= self.tolerance * self.scale

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["consistent"] = self.consistent
        return data


def paralinearization_residual(f: GridFunction, g: GridFunction, quad: AlphaQuadrature,
                               tolerance: float = DEFAULT_CONSISTENCY_TOLERANCE) -> DecompositionReport:
    """
    Evaluate all four terms independently and the L2 norm of the identity's residual.

    The scale is 1 plus the sum of the term norms, so the tolerance is relative
    to the size of what is being compared.
    """
    t_term = T_apply(f, g, quad)
    fraction_term = fraction_coefficient(f) * quadrature_lambda(g, quad)
    transport_term = transport_coeff_V(f, quad) * derivative(g)
    remainder = remainder_R(f, g, quad)
    residual = t_term - (fraction_term + transport_term + remainder)

    norms = [term.l2_norm() for term in (t_term, fraction_term, transport_term, remainder)]
    report = DecompositionReport(
        t_norm=norms[0],
        fraction_lambda_norm=norms[1],
        transport_norm=norms[2],
        remainder_norm=norms[3],
        residual_norm=residual.l2_norm(),
        scale=1.0 + sum(norms),
        tolerance=tolerance,
        quadrature=quad.describe(),
    )
    if not report.consistent:
        logger.warning("paralinearization residual %.3g exceeds %.3g", report.residual_norm,
                       tolerance * report.scale)
    return report
