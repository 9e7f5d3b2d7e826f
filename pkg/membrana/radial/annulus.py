## Membrana anular entre dos elipses homofocales

import logging
import math
from fractions import Fraction as F
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from membrana.angular.schemas import AngularKind
from membrana.exceptions import InvalidParameterError
from membrana.integrator import TaylorSolution, annulus_potential, series_coefficients, solve

from .schemas import AnnulusParam, RadialTaylor
from .taylor import _check_overflow

logger = logging.getLogger(__name__)


def annulus_from_radius(c: float, rho_inner: float, lam: float) -> AnnulusParam:
    """
    Parametros del anillo a partir del semieje mayor ρ_in del contorno interior.

    a es la raiz + de a + c²/(4a) = ρ_in; con c = 0 queda el anillo circular.
    """
    if c < 0 or lam < 0 or not (math.isfinite(c) and math.isfinite(rho_inner) and math.isfinite(lam)):
        raise InvalidParameterError("c y λ deben ser finitos y ≥ 0", code="INVALID_PARAMETER")
    if rho_inner < c or rho_inner <= 0:
        raise InvalidParameterError(
            f"El contorno interior debe tener ρ ≥ c (ρ={rho_inner}, c={c})", code="RHO_BELOW_FOCAL"
        )
    a = rho_inner / 2 + math.sqrt(rho_inner * rho_inner - c * c) / 2
    theta = math.acosh(rho_inner / c) if c > 0 else None
    return AnnulusParam(
        c=c,
        theta_inner=theta,
        lambda_=lam,
        a=a,
        q_ann=min(1.0, c * c / (4 * a * a)),
        f=2 * lam * a,
        eps0=math.log(2 * a / c) if c > 0 else None,
    )


def annulus_from_geometry(c: float, theta_inner: float, lam: float) -> AnnulusParam:
    """
    Igual que annulus_from_radius con ρ_in = c·cosh ϑ_in.

    ϑ_in = 0 (segmento focal como contorno interior) da a = c/2, q_ann = 1.
    """
    if c <= 0:
        raise InvalidParameterError(f"c debe ser > 0 (c={c})", code="DEGENERATE_FRAME")
    if not math.isfinite(theta_inner) or theta_inner < 0:
        raise InvalidParameterError(f"ϑ_in debe ser ≥ 0 (ϑ_in={theta_inner})", code="INVALID_THETA")
    param = annulus_from_radius(c, c * math.cosh(theta_inner), lam)
    return param.model_copy(update={"theta_inner": theta_inner, "eps0": theta_inner})


def annulus_terms(f, q, R, n: int, one=1.0) -> List:
    """Coeficientes de V = f²(e^{2ε} + q·e^{−2ε}) − R, en la aritmetica de f, q, R."""
    v = []
    for k in range(n):
        term = f * f * one * 2 ** k * (1 + (-1) ** k * q) / math.factorial(k)
        v.append(term - R if k == 0 else term)
    return v


def annulus_taylor(f: float, q_ann: float, R: float, n: int = 12) -> RadialTaylor:
    """
    Q en potencias de ε, nula en ε = 0 y con (dQ/dε)₀ = B = 1, para
    d²Q/dε² = [R − f²(e^{2ε} + q_ann²·e^{−2ε})]Q.

    Recibe q_ann (AnnulusParam.q_ann) y lo eleva al cuadrado, igual que
    annulus_eval. Las dos especies comparten esta forma y solo difieren en R.
    """
    if not 0.0 <= q_ann <= 1.0:
        raise InvalidParameterError(f"q_ann debe estar en [0, 1] (q={q_ann})", code="INVALID_Q")
    if n < 2:
        raise InvalidParameterError(f"Se requieren al menos 2 coeficientes (n={n})", code="INVALID_TERMS")
    coeffs = [float(c) for c in series_coefficients(annulus_terms(f, q_ann ** 2, R, n), 0.0, 1.0, n)]
    _check_overflow(coeffs, "la serie del anillo")
    return RadialTaylor(kind=AngularKind.ODD, coeffs=tuple(coeffs), norm=1.0)


def annulus_derivatives(f, q, R, n: int = 12) -> List:
    """(1/B)(dᵏQ/dεᵏ)₀ para k < n, en aritmetica exacta si f, q, R son Fraction."""
    one = F(1) if isinstance(f, F) else 1.0
    coeffs = series_coefficients(annulus_terms(f, q, R, n, one=one), 0 * one, one, n)
    return [c * math.factorial(k) for k, c in enumerate(coeffs)]


def annulus_eval(param: AnnulusParam, R: float, eps, steps: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    (Q, dQ/dε) de la solucion nula en el contorno interior, con B = 1.

    El coeficiente de e^{−2ε} que corresponde a la geometria es q_ann².
    """
    eps = np.atleast_1d(np.asarray(eps, dtype=float))
    if np.any(eps < 0):
        raise InvalidParameterError("ε debe ser ≥ 0 (entre los dos contornos)", code="INVALID_EPS")
    sol = annulus_solution(param, R, float(eps.max()) if eps.size else 0.0, steps)
    return sol(eps)


def annulus_solution(param: AnnulusParam, R: float, eps_max: float, steps: Optional[int] = None) -> TaylorSolution:
    q = param.potential_q
    omega = math.sqrt(abs(R) + param.f ** 2 * (math.exp(2 * eps_max) + q) + 1.0)
    span = max(eps_max, 1e-12)
    return solve(annulus_potential(R, param.f, q), 0.0, span, 0.0, 1.0, omega, steps=steps)


# Tabla impresa de (1/B)(dⁿQ/dεⁿ)₀, n = 3..11
PrintedEntry = Callable[[F, F, F], F]
PRINTED_ANNULUS: Dict[int, PrintedEntry] = {
    3: lambda f, q, R: -f ** 2 * (1 + q) + R,
    4: lambda f, q, R: -4 * f ** 2 * (1 - q),
    5: lambda f, q, R: f ** 4 * (1 + q) ** 2 - 2 * f ** 2 * (R + 6) * (1 + q) + R ** 2,
    6: lambda f, q, R: 12 * f ** 4 * (1 + q) ** 2 - 4 * f ** 2 * (1 - q) * (3 * R + 8),
    7: lambda f, q, R: (
        -f ** 6 * (1 + q) ** 3
        + f ** 4 * (3 * R * (1 + q) ** 2 + 4 * (23 + 6 * q + 23 * q ** 2))
        - f ** 2 * (1 + q) * (3 * R ** 2 + 52 * R + 80)
        + R ** 3
    ),
    8: lambda f, q, R: (
        -24 * f ** 6 * (1 - q) * (1 + q) ** 2
        + 48 * f ** 4 * (1 - q ** 2) * (R + 12)
        - 24 * f ** 2 * (1 - q) * (R ** 2 + 8 * R + 8)
    ),
    9: lambda f, q, R: (
        f ** 8 * (1 + q) ** 4
        - 4 * f ** 6 * (1 + q) * (R * (1 + q) ** 2 + 86 - 36 * q + 86 * q ** 2)
        + f ** 4 * (
            6 * R ** 2 * (1 + q) ** 2
            + 32 * R * (15 + 4 * q + 15 * q ** 2)
            + 16 * (201 + 10 * q + 201 * q ** 2)
        )
        - 4 * f ** 2 * (1 + q) * (R ** 3 + 34 * R ** 2 + 160 * R + 112)
        + R ** 4
    ),
    10: lambda f, q, R: (
        40 * f ** 8 * (1 - q) * (1 + q) ** 3
        - f ** 6 * (1 - q) * (1 + q) ** 2 * (120 * R + 3200 + 640 * ((1 - q) / (1 + q)) ** 2)
        + f ** 4 * (1 - q ** 2) * (120 * R ** 2 + 3840 * R + 16704)
        - f ** 2 * (1 - q) * (40 * R ** 3 + 640 * R ** 2 + 1984 * R + 1024)
    ),
    11: lambda f, q, R: (
        -f ** 10 * (1 + q) ** 5
        + 5 * f ** 8 * (1 + q) ** 2 * (R * (1 + q) ** 2 + 184 - 144 * q + 184 * q ** 2)
        - f ** 6 * (1 + q) * (
            10 * R ** 2 * (1 + q) ** 2
            + 40 * R * (53 - 22 * q + 53 * q ** 2)
            + 36912 - 29216 * q + 36912 * q ** 2
        )
        + f ** 4 * (
            10 * R * (1 + q) ** 2
            + R ** 2 * (1480 + 400 * q + 1480 * q ** 2)
            + R * (26896 + 1440 * q + 26896 * q ** 2)
            + 82624 + 896 * q + 82624 * q ** 2
        )
        - f ** 2 * (1 + q) * (5 * R ** 4 + 280 * R ** 3 + 2656 * R ** 2 + 5824 * R + 2304)
        + R ** 5
    ),
}


def audit_annulus_table(f, q, R) -> List[int]:
    """
    Ordenes en los que la tabla impresa difiere de las derivadas generadas.

    Los argumentos se convierten a Fraction: la comparacion es exacta.
    """
    f, q, R = F(f), F(q), F(R)
    generated = annulus_derivatives(f, q, R, 12)
    mismatched = []
    for order, entry in sorted(PRINTED_ANNULUS.items()):
        printed = entry(f, q, R)
        if printed != generated[order]:
            logger.warning(
                "tabla del anillo, derivada %s: impreso %s, generado %s (f=%s, q=%s, R=%s)",
                order, float(printed), float(generated[order]), f, q, R,
            )
            mismatched.append(order)
    return mismatched
