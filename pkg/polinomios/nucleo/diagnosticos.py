"""
Registro de diagnóstico común a todas las verificaciones que no lanzan excepción.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Condicion:
    nombre: str
    aprobado: bool
    valor: Any = None
    umbral: Any = None
    descripcion: str = ''

    def a_dict(self) -> Dict[str, Any]:
        return {
            'nombre': self.nombre,
            'aprobado': bool(self.aprobado),
            'valor': serializable(self.valor),
            'umbral': serializable(self.umbral),
            'descripcion': self.descripcion,
        }


@dataclass
class Diagnostico:
    """
    Resultado de una verificación: condiciones con su valor medido y el umbral
    usado, más mediciones auxiliares que no son condiciones de paso/falla.
    """
    operacion: str
    condiciones: List[Condicion] = field(default_factory=list)
    mediciones: Dict[str, Any] = field(default_factory=dict)

    def agregar(self, nombre: str, aprobado: bool, valor=None, umbral=None, descripcion: str = '') -> bool:
        self.condiciones.append(Condicion(nombre, bool(aprobado), valor, umbral, descripcion))
        return bool(aprobado)

    def medir(self, nombre: str, valor) -> None:
        self.mediciones[nombre] = valor

    @property
    def aprobado(self) -> bool:
        return all(c.aprobado for c in self.condiciones)

    def condicion(self, nombre: str) -> Optional[Condicion]:
        for c in self.condiciones:
            if c.nombre == nombre:
                return c
        return None

    def fallidas(self) -> List[Condicion]:
        return [c for c in self.condiciones if not c.aprobado]

    def a_dict(self) -> Dict[str, Any]:
        return {
            'operacion': self.operacion,
            'aprobado': self.aprobado,
            'condiciones': [c.a_dict() for c in self.condiciones],
            'mediciones': {k: serializable(v) for k, v in self.mediciones.items()},
        }


def serializable(valor):
    """Convierte escalares numpy y complejos a tipos JSON"""
    if valor is None or isinstance(valor, (bool, str, int)):
        return valor
    if isinstance(valor, complex):
        return [valor.real, valor.imag]
    if isinstance(valor, (list, tuple)):
        return [serializable(v) for v in valor]
    if isinstance(valor, dict):
        return {k: serializable(v) for k, v in valor.items()}
    if hasattr(valor, 'tolist'):
        return serializable(valor.tolist())
    try:
        return float(valor)
    except (TypeError, ValueError):
        return str(valor)
