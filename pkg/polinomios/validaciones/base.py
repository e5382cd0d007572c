"""
Clase base de las suites de aceptación: acumula errores con formato estándar.
"""

import logging
from typing import Any, Dict, List

from polinomios.excepciones import ErrorLaboratorio
from polinomios.nucleo.diagnosticos import Diagnostico

logger = logging.getLogger(__name__)


class SuiteBase:
    """
    Cada suite agrega errores como diccionarios
    {'suite', 'criterio', 'descripcion', 'valor', 'umbral'} y nunca lanza
    por un criterio fallido; las excepciones del laboratorio también se registran.
    """

    categoria = 'general'

    def __init__(self, rapido: bool = False, semilla: int = 20240611):
        self.rapido = rapido
        self.semilla = semilla
        self.errores: List[Dict[str, Any]] = []
        self.mediciones: Dict[str, Any] = {}

    def _agregar_error(self, suite: str, criterio: str, descripcion: str, valor=None, umbral=None) -> None:
        """Agrega un error a la lista de errores con formato estándar"""
        error = {
            'categoria': self.categoria,
            'suite': suite,
            'criterio': criterio,
            'descripcion': descripcion,
            'valor': valor,
            'umbral': umbral,
        }
        self.errores.append(error)
        logger.warning(f"⚠️ {suite}/{criterio}: {descripcion} (valor {valor}, umbral {umbral})")

    def _comprobar(self, suite: str, criterio: str, aprobado: bool, descripcion: str, valor=None, umbral=None) -> bool:
        if not aprobado:
            self._agregar_error(suite, criterio, descripcion, _flotante(valor), _flotante(umbral))
        return bool(aprobado)

    def _registrar_diagnostico(self, suite: str, diagnostico: Diagnostico, contexto: str = '') -> bool:
        """Vuelca las condiciones fallidas de un diagnóstico como errores"""
        for condicion in diagnostico.fallidas():
            descripcion = condicion.descripcion or condicion.nombre
            if contexto:
                descripcion = f"{descripcion} [{contexto}]"
            self._agregar_error(suite, condicion.nombre, descripcion,
                                _flotante(condicion.valor), _flotante(condicion.umbral))
        return diagnostico.aprobado

    def _registrar_excepcion(self, suite: str, error: ErrorLaboratorio, contexto: str = '') -> None:
        errores = getattr(error, 'errores', None)
        if errores:
            for detalle in errores:
                self._agregar_error(suite, detalle.get('criterio', 'excepcion'),
                                    f"{detalle.get('descripcion', str(error))} [{contexto}]",
                                    detalle.get('valor'), detalle.get('umbral'))
            return
        self._agregar_error(suite, type(error).__name__, f"{error} [{contexto}]")

    def limpiar_errores(self) -> None:
        self.errores = []
        self.mediciones = {}


def _flotante(valor):
    if valor is None or isinstance(valor, (bool, str, dict, list)):
        return valor
    if isinstance(valor, complex):
        return abs(valor)
    try:
        return float(valor)
    except (TypeError, ValueError):
        return str(valor)
