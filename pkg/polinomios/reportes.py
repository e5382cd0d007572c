"""
Reporte de crecimiento: filas (n, sup, θ*, comparador) listas para JSON, CSV o xlsx.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from polinomios.constants import COLUMNAS_REPORTE

logger = logging.getLogger(__name__)


@dataclass
class FilaCrecimiento:
    n: int
    epsilon: float
    sup_norm: float
    argmax_theta: float
    comparator: float
    steklov_delta: float

    @property
    def cociente(self) -> float:
        return self.sup_norm / self.comparator if self.comparator else float('inf')

    def a_dict(self) -> Dict[str, Any]:
        return {clave: _escalar(valor) for clave, valor in asdict(self).items()}


@dataclass
class ReporteCrecimiento:
    """
    Filas de crecimiento más metadatos de la construcción
    (tipo, comparador simbólico y diagnósticos adicionales por n).
    """
    construccion: str
    comparador: str
    filas: List[FilaCrecimiento] = field(default_factory=list)
    extras: Dict[str, Any] = field(default_factory=dict)

    def agregar(self, fila: FilaCrecimiento) -> None:
        self.filas.append(fila)
        self.filas.sort(key=lambda f: f.n)

    def __len__(self):
        return len(self.filas)

    def cocientes(self) -> np.ndarray:
        return np.array([f.cociente for f in self.filas])

    def banda_cocientes(self) -> Dict[str, float]:
        cocientes = self.cocientes()
        if cocientes.size == 0:
            return {'minimo': float('nan'), 'maximo': float('nan'), 'amplitud': float('nan')}
        return {
            'minimo': float(cocientes.min()),
            'maximo': float(cocientes.max()),
            'amplitud': float(cocientes.max() / cocientes.min()),
        }

    def a_dataframe(self) -> pd.DataFrame:
        df = pd.DataFrame([f.a_dict() for f in self.filas], columns=COLUMNAS_REPORTE)
        return df.astype({'n': 'int64'})

    def a_dict(self) -> Dict[str, Any]:
        return {
            'construction': self.construccion,
            'comparator_expression': self.comparador,
            'rows': [f.a_dict() for f in self.filas],
            'extras': self.extras,
        }

    @classmethod
    def desde_dict(cls, datos: Dict[str, Any]) -> 'ReporteCrecimiento':
        filas = [FilaCrecimiento(**{c: fila[c] for c in COLUMNAS_REPORTE}) for fila in datos.get('rows', [])]
        return cls(datos['construction'], datos['comparator_expression'], filas, dict(datos.get('extras', {})))

    def resumen(self) -> str:
        banda = self.banda_cocientes()
        return (
            f"{self.construccion}: {len(self)} filas, "
            f"sup/({self.comparador}) en [{banda['minimo']:.4f}, {banda['maximo']:.4f}]"
        )


def _escalar(valor):
    if isinstance(valor, (np.integer,)):
        return int(valor)
    if isinstance(valor, (np.floating,)):
        return float(valor)
    return valor
