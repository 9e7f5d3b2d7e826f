from .functions import (
    AngularFunction,
    MatchReport,
    angular_eval,
    build_angular,
    count_roots,
    find_roots,
    match_factor,
    match_report,
)
from .power import evaluate_power, power_coeffs, recurrence_residual, sign_variations
from .schemas import (
    AngularKind,
    CharacteristicValue,
    PowerSeriesRep,
    SpectralParam,
    TaylorAlphaRep,
    TrigSeriesRep,
)
from .series import (
    charval_series,
    generic_charval_terms,
    series_terms,
    trig_coefficient,
    trig_eval,
    trig_series,
)
from .shooting import boundary_mismatch, charval_shoot
from .tables import PRINTED_CHARVAL, TableDiscrepancy, audit_printed_tables
from .taylor import (
    TaylorDiscrepancy,
    audit_printed_taylor,
    periodicity_residual,
    taylor_alpha,
    taylor_coefficients,
    taylor_eval,
)


def charval(g: int, kind, h: float, potential_sign: int = 1) -> CharacteristicValue:
    """R por tiro (metodo de produccion)."""
    return charval_shoot(g, kind, h, potential_sign=potential_sign)


__all__ = [
    "AngularFunction",
    "AngularKind",
    "CharacteristicValue",
    "MatchReport",
    "PRINTED_CHARVAL",
    "PowerSeriesRep",
    "SpectralParam",
    "TableDiscrepancy",
    "TaylorAlphaRep",
    "TaylorDiscrepancy",
    "TrigSeriesRep",
    "angular_eval",
    "audit_printed_tables",
    "audit_printed_taylor",
    "boundary_mismatch",
    "build_angular",
    "charval",
    "charval_series",
    "charval_shoot",
    "count_roots",
    "evaluate_power",
    "find_roots",
    "generic_charval_terms",
    "match_factor",
    "match_report",
    "periodicity_residual",
    "power_coeffs",
    "recurrence_residual",
    "series_terms",
    "sign_variations",
    "taylor_alpha",
    "taylor_coefficients",
    "taylor_eval",
    "trig_coefficient",
    "trig_eval",
    "trig_series",
]
