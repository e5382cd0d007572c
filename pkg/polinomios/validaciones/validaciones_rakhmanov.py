"""
Suites de la construcción de Rakhmanov: forma cerrada, condición del kernel
y crecimiento logarítmico.
"""

import logging

import numpy as np

from polinomios.constants import PARAMETROS_POR_DEFECTO, TOLERANCIAS
from polinomios.excepciones import ErrorLaboratorio
from polinomios.nucleo.medida_circular import MallaUnitaria, MedidaCircular
from polinomios.nucleo.opuc import monic_gram_schmidt, tolerancia_oraculo
from polinomios.nucleo.rakhmanov import (
    ColocacionMasas,
    d_coefficients,
    d_coefficients_directo,
    growth_table,
    kernel_roots,
    lebesgue_construction,
    mass_monotonicity,
    rakhmanov_update,
    verify_kernel_condition,
)
from polinomios.repositories.constantes_repository import RepositorioConstantes
from polinomios.validaciones.base import SuiteBase

logger = logging.getLogger(__name__)


class ValidacionesRakhmanov(SuiteBase):
    categoria = 'rakhmanov'

    def ejecutar_formula_rakhmanov(self) -> None:
        """Forma cerrada contra el oráculo y contra la fórmula de actualización"""
        suite = 'formula_rakhmanov'
        lista_n = (4, 8) if self.rapido else (4, 8, 16, 32)
        for n in lista_n:
            m = n // 2
            diferencia_d = float(np.max(np.abs(d_coefficients(n) - d_coefficients_directo(n))))
            self._comprobar(suite, 'vector_d', diferencia_d <= TOLERANCIAS['VECTOR_D'] * n,
                            f'd por fórmula y por suma directa (n = {n})', diferencia_d, TOLERANCIAS['VECTOR_D'] * n)
            for epsilon in (0.1, 0.3, 0.7):
                contexto = f'n = {n}, ε = {epsilon}'
                try:
                    polinomio, eta = lebesgue_construction(n, epsilon)
                    oraculo = monic_gram_schmidt(eta, n)[n]
                    tolerancia = tolerancia_oraculo(eta, n)
                    error = polinomio.Phi.distancia(oraculo)
                    self._comprobar(suite, 'oraculo', error <= tolerancia,
                                    f'Φ_n cerrado vs Gram-Schmidt sobre η [{contexto}]', error, tolerancia)

                    fondo = MedidaCircular.lebesgue(eta.malla)
                    colocacion = ColocacionMasas.en_raices_de_la_unidad(n, range(m), epsilon / m, fondo)
                    actualizado = rakhmanov_update(colocacion, n)
                    error = polinomio.Phi.distancia(actualizado.Phi)
                    self._comprobar(suite, 'actualizacion', error <= TOLERANCIAS['COEFICIENTES'],
                                    f'Φ_n cerrado vs fórmula de actualización [{contexto}]',
                                    error, TOLERANCIAS['COEFICIENTES'])
                    self._registrar_diagnostico(suite, mass_monotonicity(colocacion, n), contexto)
                except ErrorLaboratorio as e:
                    self._registrar_excepcion(suite, e, contexto)

    def ejecutar_condicion_kernel(self) -> None:
        """K_{n-1}(ξ_j, ξ_l) = 0 en raíces de la unidad distintas y raíces de K(·, 1)"""
        suite = 'condicion_kernel'
        lista_n = (8, 16, 32) if self.rapido else (8, 16, 32, 64, 128, 256, 512, 1024)
        peores = {}
        for n in lista_n:
            fondo = MedidaCircular.lebesgue(MallaUnitaria.para_grado(n))
            colocacion = ColocacionMasas.en_raices_de_la_unidad(n, range(n), 0.0, fondo)
            desvio = verify_kernel_condition(colocacion, n)
            peores[n] = desvio
            umbral = TOLERANCIAS['KERNEL_POR_N'] * n
            self._comprobar(suite, 'fuera_de_diagonal', desvio < umbral,
                            f'max |K_(n-1)(ξ_j, ξ_l)| (n = {n})', desvio, umbral)
            if n <= 32:
                try:
                    raices = kernel_roots(1.0, n, fondo)
                    esperadas = np.exp(2j * np.pi * np.arange(1, n) / n)
                    error = float(np.max(np.abs(raices - esperadas)))
                    self._comprobar(suite, 'raices_kernel', error <= TOLERANCIAS['RAIZ_KERNEL'],
                                    f'Raíces de K_(n-1)(·, 1) = raíces de la unidad (n = {n})',
                                    error, TOLERANCIAS['RAIZ_KERNEL'])
                except ErrorLaboratorio as e:
                    self._registrar_excepcion(suite, e, f'n = {n}')
        self.mediciones[suite] = peores

    def ejecutar_crecimiento_rakhmanov(self) -> None:
        """sup |Φ_n| / (1 + ε log n) dentro de la banda congelada"""
        suite = 'crecimiento_rakhmanov'
        constantes = RepositorioConstantes.cargar()['rakhmanov']
        c1, c2 = constantes['c1'], constantes['c2']
        self._comprobar(suite, 'ancho_banda', c2 / c1 <= 3.0, 'c2/c1 <= 3', c2 / c1, 3.0)
        lista_n = PARAMETROS_POR_DEFECTO['LISTA_N_RAPIDA'] if self.rapido else PARAMETROS_POR_DEFECTO['LISTA_N_RAKHMANOV']
        try:
            reporte = growth_table(constantes['epsilon'], lista_n)
        except ErrorLaboratorio as e:
            self._registrar_excepcion(suite, e)
            return
        self.mediciones[suite] = reporte.a_dict()
        supremos = [f.sup_norm for f in reporte.filas]
        self._comprobar(suite, 'crecimiento', all(np.diff(supremos) > 0),
                        'sup |Φ_n| crece con n', supremos, None)
        if self.rapido:
            return
        for fila in reporte.filas:
            self._comprobar(suite, 'banda', c1 <= fila.cociente <= c2,
                            f'sup |Φ_n| / (1 + ε log n) en [c1, c2] (n = {fila.n})', fila.cociente, [c1, c2])
            distancia = min(abs(fila.argmax_theta), abs(np.pi - abs(fila.argmax_theta)))
            umbral = constantes['C_maximizador'] / fila.n
            self._comprobar(suite, 'maximizador', distancia <= umbral,
                            f'Maximizador cerca de θ ∈ {{0, π}} (n = {fila.n})', distancia, umbral)
