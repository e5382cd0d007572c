"""
Verificador maestro que orquesta todas las suites de aceptación.
Punto de entrada único para `manage.py verify`.
"""

import csv
import io
import logging
import time
from typing import Any, Dict, List, Sequence

from polinomios.constants import SUITES_ACEPTACION
from polinomios.excepciones import ErrorParametros
from polinomios.validaciones.validaciones_algebra import ValidacionesAlgebra
from polinomios.validaciones.validaciones_rakhmanov import ValidacionesRakhmanov
from polinomios.validaciones.validaciones_recta_real import ValidacionesRectaReal
from polinomios.validaciones.validaciones_steklov import ValidacionesSteklov

logger = logging.getLogger(__name__)

# Suite -> categoría (validador que la ejecuta)
CATEGORIAS = {
    'recursion_oraculo': 'algebra',
    'matrices_transferencia': 'algebra',
    'ida_vuelta_pegado': 'algebra',
    'formula_rakhmanov': 'rakhmanov',
    'condicion_kernel': 'rakhmanov',
    'crecimiento_rakhmanov': 'rakhmanov',
    'crecimiento_steklov': 'steklov',
    'denominador_cerrado': 'steklov',
    'violacion_sec1': 'steklov',
    'cociente_szego': 'steklov',
    'recta_real': 'recta_real',
}


class VerificadorMaestro:
    """
    Coordina las suites algebraicas, de Rakhmanov, de Steklov y de la recta real.
    Consolida los errores y genera reportes en texto o CSV.
    """

    def __init__(self, rapido: bool = False, semilla: int = 20240611):
        self.rapido = rapido
        self.validadores = {
            'algebra': ValidacionesAlgebra(rapido, semilla),
            'rakhmanov': ValidacionesRakhmanov(rapido, semilla),
            'steklov': ValidacionesSteklov(rapido, semilla),
            'recta_real': ValidacionesRectaReal(rapido, semilla),
        }
        self.errores_consolidados: List[Dict[str, Any]] = []
        self.tiempos: Dict[str, float] = {}

    def ejecutar_verificaciones_completas(self, suites: Sequence[str] = None) -> Dict[str, Any]:
        """
        Ejecuta las suites pedidas (todas por defecto) en orden fijo.

        Returns:
            Diccionario con errores por categoría, errores totales, resumen y mediciones
        """
        suites = list(suites or SUITES_ACEPTACION)
        desconocidas = [s for s in suites if s not in SUITES_ACEPTACION]
        if desconocidas:
            raise ErrorParametros(f"Suites desconocidas: {', '.join(desconocidas)}")

        resultado = {
            'errores_por_categoria': {categoria: [] for categoria in self.validadores},
            'errores_totales': [],
            'verificacion_exitosa': True,
            'modo': 'rapido' if self.rapido else 'completo',
            'resumen': {
                'total_errores': 0,
                'errores_por_suite': {},
                'suites_ejecutadas': suites,
            },
            'mediciones': {},
        }

        for suite in SUITES_ACEPTACION:
            if suite not in suites:
                continue
            validador = self.validadores[CATEGORIAS[suite]]
            previos = len(validador.errores)
            inicio = time.perf_counter()
            logger.info(f"Ejecutando suite {suite}: {SUITES_ACEPTACION[suite]}")
            getattr(validador, f'ejecutar_{suite}')()
            self.tiempos[suite] = time.perf_counter() - inicio
            nuevos = len(validador.errores) - previos
            resultado['resumen']['errores_por_suite'][suite] = nuevos
            if nuevos:
                logger.warning(f"❌ {suite}: {nuevos} errores ({self.tiempos[suite]:.1f} s)")
            else:
                logger.info(f"✅ {suite} ({self.tiempos[suite]:.1f} s)")

        for categoria, validador in self.validadores.items():
            resultado['errores_por_categoria'][categoria] = list(validador.errores)
            resultado['errores_totales'].extend(validador.errores)
            resultado['mediciones'].update(validador.mediciones)

        resultado['resumen']['total_errores'] = len(resultado['errores_totales'])
        resultado['resumen']['tiempos'] = dict(self.tiempos)
        resultado['verificacion_exitosa'] = resultado['resumen']['total_errores'] == 0
        self.errores_consolidados = resultado['errores_totales']
        return resultado

    def obtener_errores_consolidados(self) -> List[Dict[str, Any]]:
        return self.errores_consolidados.copy()

    def obtener_resumen_errores(self) -> Dict[str, Any]:
        """Conteo de errores por categoría, por suite y por criterio"""
        resumen = {
            'total_errores': len(self.errores_consolidados),
            'por_categoria': {categoria: 0 for categoria in self.validadores},
            'por_suite': {},
            'por_criterio': {},
        }
        for error in self.errores_consolidados:
            categoria = error.get('categoria', 'general')
            resumen['por_categoria'][categoria] = resumen['por_categoria'].get(categoria, 0) + 1
            suite = error.get('suite', 'desconocida')
            resumen['por_suite'][suite] = resumen['por_suite'].get(suite, 0) + 1
            criterio = f"{suite}/{error.get('criterio', '')}"
            resumen['por_criterio'][criterio] = resumen['por_criterio'].get(criterio, 0) + 1
        return resumen

    def limpiar_verificaciones(self) -> None:
        for validador in self.validadores.values():
            validador.limpiar_errores()
        self.errores_consolidados = []
        self.tiempos = {}

    def generar_reporte_errores(self, formato: str = 'texto') -> str:
        """
        Genera un reporte formateado de todos los errores.

        Args:
            formato: 'texto' o 'csv'
        """
        if formato == 'csv':
            return self._generar_reporte_csv()
        return self._generar_reporte_texto()

    def _generar_reporte_texto(self) -> str:
        if not self.errores_consolidados:
            return "No se encontraron errores de verificación."

        reporte = f"REPORTE DE VERIFICACIÓN\n{'=' * 50}\n\n"
        reporte += f"Total de errores encontrados: {len(self.errores_consolidados)}\n\n"

        por_suite: Dict[str, List[Dict[str, Any]]] = {}
        for error in self.errores_consolidados:
            por_suite.setdefault(error.get('suite', 'general'), []).append(error)

        for suite, errores in por_suite.items():
            reporte += f"{suite.upper()} ({len(errores)} errores)\n{'-' * 30}\n"
            for i, error in enumerate(errores, 1):
                criterio = error.get('criterio', 'N/A')
                reporte += (
                    f"{i:2d}. {criterio:<24} {error.get('descripcion', 'Error desconocido')}"
                    f" (valor: {error.get('valor')}, umbral: {error.get('umbral')})\n"
                )
            reporte += "\n"
        return reporte

    def _generar_reporte_csv(self) -> str:
        salida = io.StringIO()
        escritor = csv.writer(salida, lineterminator='\n')
        escritor.writerow(['Categoria', 'Suite', 'Criterio', 'Descripcion', 'Valor', 'Umbral'])
        if not self.errores_consolidados:
            escritor.writerow(['N/A', 'N/A', 'N/A', 'No se encontraron errores de verificación', '', ''])
        for error in self.errores_consolidados:
            escritor.writerow([
                error.get('categoria', ''),
                error.get('suite', ''),
                error.get('criterio', ''),
                error.get('descripcion', ''),
                error.get('valor', ''),
                error.get('umbral', ''),
            ])
        return salida.getvalue()
