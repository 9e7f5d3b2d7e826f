## Tablas impresas de R y R′ (g = 1..4) y su auditoria

import logging
from fractions import Fraction as F
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from .schemas import AngularKind
from .series import series_terms

logger = logging.getLogger(__name__)

# (g, especie) -> {potencia de h: coeficiente}, tal como aparecen impresas
PRINTED_CHARVAL: Dict[Tuple[int, AngularKind], Dict[int, F]] = {
    (1, AngularKind.EVEN): {2: F(1), 4: F(-1, 8), 6: F(-1, 64), 8: F(-1, 1536), 10: F(11, 36864)},
    (1, AngularKind.ODD): {2: F(-1), 4: F(-1, 8), 6: F(1, 64), 8: F(-1, 1536), 10: F(-11, 36864)},
    (2, AngularKind.EVEN): {4: F(5, 12), 8: F(-763, 13824), 12: F(1002419, 79626240)},
    (2, AngularKind.ODD): {4: F(-1, 12), 8: F(5, 13824), 12: F(-289, 79626240)},
    (3, AngularKind.EVEN): {4: F(1, 16), 6: F(1, 64), 8: F(59, 61440), 10: F(-3, 16384)},
    (3, AngularKind.ODD): {4: F(1, 16), 6: F(-1, 64), 8: F(59, 61440), 10: F(3, 16384)},
    (4, AngularKind.EVEN): {4: F(1, 30), 8: F(433, 864000), 12: F(-189983, 21772800000)},
    (4, AngularKind.ODD): {4: F(1, 30), 8: F(-317, 864000), 12: F(4507, 1360800000)},
}


class TableDiscrepancy(BaseModel):
    model_config = ConfigDict(frozen=True)

    g: int
    kind: AngularKind
    h_power: int
    printed: str
    generated: str


def audit_printed_tables() -> List[TableDiscrepancy]:
    """
    Compara las tablas impresas con la recurrencia exacta.

    Cada discrepancia se registra con WARNING; la recurrencia manda.
    """
    found: List[TableDiscrepancy] = []
    for (g, kind), printed in sorted(PRINTED_CHARVAL.items(), key=lambda kv: (kv[0][0], kv[0][1].value)):
        depth = max(printed) // 2
        generated = series_terms(g, kind, depth)
        for power in range(2, 2 * depth + 1, 2):
            expected = generated[power // 2 - 1]
            shown = printed.get(power, F(0))
            if shown != expected:
                item = TableDiscrepancy(
                    g=g, kind=kind, h_power=power,
                    printed=str(shown), generated=str(expected),
                )
                logger.warning(
                    "tabla impresa g=%s %s h^%s: impreso %s, recurrencia %s",
                    g, kind.value, power, shown, expected,
                )
                found.append(item)
    return found
