"""
Suites algebraicas: recursión contra oráculo, matrices de transferencia y
ida y vuelta del pegado de parámetros de Schur.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorLaboratorio
from polinomios.nucleo.opuc import (
    FuncionCaratheodory,
    SecuenciaSchur,
    bernstein_szego_measure,
    monic_gram_schmidt,
    star_consistency,
    szego_recursion,
    tolerancia_oraculo,
    wronskian_check,
)
from polinomios.nucleo.pegado import (
    EntradaPegado,
    glue_session_report,
    glued_phi_star,
    glued_weight,
    transfer_identities,
    transfer_matrices,
)
from polinomios.nucleo.polinomio import PolinomioComplejo
from polinomios.validaciones.base import SuiteBase

logger = logging.getLogger(__name__)

# Cabezas del pegado: |γ| <= 0.5
RADIO_CABEZA = 0.5


def secuencia_aleatoria(rng: np.random.Generator, largo: int, radio: float = 0.9) -> SecuenciaSchur:
    """γ uniformes en el disco de radio `radio`"""
    modulos = radio * np.sqrt(rng.random(largo))
    fases = np.exp(2j * np.pi * rng.random(largo))
    return SecuenciaSchur(modulos * fases)


def caratheodory_aleatoria(rng: np.random.Generator, grado: int, masa: float = 0.5) -> FuncionCaratheodory:
    """F = 1 + Σ c_k z^k con Σ|c_k| = masa < 1, así Re F >= 1 − masa"""
    coefs = rng.normal(size=grado) + 1j * rng.normal(size=grado)
    coefs *= masa / max(float(np.sum(np.abs(coefs))), 1e-300)
    return FuncionCaratheodory(PolinomioComplejo(np.concatenate([[1.0 + 0j], coefs]), grado))


class ValidacionesAlgebra(SuiteBase):
    """Identidades exactas de la teoría de OPUC"""

    categoria = 'algebra'

    def ejecutar_recursion_oraculo(self) -> None:
        """Mónicos de la recursión contra Gram-Schmidt sobre la medida de Bernstein-Szegő"""
        suite = 'recursion_oraculo'
        rng = np.random.default_rng(self.semilla)
        cantidad, largo_maximo = (20, 16) if self.rapido else (100, 32)
        peor = 0.0
        for i in range(cantidad):
            largo = int(rng.integers(1, largo_maximo + 1))
            gamma = secuencia_aleatoria(rng, largo)
            try:
                pares = szego_recursion(gamma, largo)
                medida = bernstein_szego_measure(pares[largo])
                oraculo = monic_gram_schmidt(medida, largo)
                escala = max(1.0, max(float(np.max(np.abs(Phi.coeficientes))) for Phi in oraculo))
                tolerancia = tolerancia_oraculo(medida, largo) * escala
                error = max(par.monico().distancia(Phi) for par, Phi in zip(pares, oraculo))
                peor = max(peor, error / tolerancia)
                self._comprobar(suite, 'coeficientes', error <= tolerancia,
                                f'Φ_k recursión vs oráculo (muestra {i}, n = {largo})', error, tolerancia)
                estrella = star_consistency(pares)
                self._comprobar(suite, 'estrella', estrella <= TOLERANCIAS['RECURSION_ESTRELLA'],
                                f'φ_k* = star(φ_k) (muestra {i})', estrella, TOLERANCIAS['RECURSION_ESTRELLA'])
                self._registrar_diagnostico(suite, wronskian_check(gamma, largo), f'muestra {i}')
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'muestra {i}')
        self.mediciones[suite] = {'muestras': cantidad, 'peor_error_relativo_a_tolerancia': peor}

    def ejecutar_matrices_transferencia(self) -> None:
        """Entradas de la matriz de transferencia, determinante z^m y el caso m = 0 del producto"""
        suite = 'matrices_transferencia'
        rng = np.random.default_rng(self.semilla + 1)
        cantidad = 20 if self.rapido else 100
        tolerancia = TOLERANCIAS['IDENTIDAD_ALGEBRAICA']
        peor = 0.0
        for i in range(cantidad):
            m = int(rng.integers(1, 17))
            cola = secuencia_aleatoria(rng, m)
            z = np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
            residuos = transfer_identities(cola, m, z)
            escala = max(1.0, cola.kappa(m) ** 2)
            for nombre, residuo in residuos.items():
                peor = max(peor, residuo / escala)
                self._comprobar(suite, nombre, residuo <= tolerancia * escala,
                                f'Identidad {nombre} (muestra {i}, m = {m})', residuo, tolerancia * escala)

            identidad = transfer_matrices(cola, 0, z)
            desvio = float(np.max(np.abs(identidad - np.eye(2))))
            self._comprobar(suite, 'identidad_m_cero', desvio == 0.0,
                            f'Matriz de transferencia con m = 0 (muestra {i})', desvio, 0.0)

            n = int(rng.integers(1, 9))
            pares = szego_recursion(secuencia_aleatoria(rng, n, RADIO_CABEZA), n)
            entrada = EntradaPegado(pares[n], caratheodory_aleatoria(rng, 2))
            try:
                directo = glued_phi_star(entrada, cola, 0)
                desvio = directo.distancia(pares[n].phi_estrella)
                self._comprobar(suite, 'producto_m_cero', desvio <= tolerancia,
                                f'φ*_(n+0) = φ_n* (muestra {i})', desvio, tolerancia)
                glued_phi_star(entrada, cola, m)
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'muestra {i}')
        self.mediciones[suite] = {'muestras': cantidad, 'peor_residuo_escalado': peor}

    def ejecutar_ida_vuelta_pegado(self) -> None:
        """Parámetros extraídos del peso pegado = cabeza ++ cola, y masa total 1"""
        suite = 'ida_vuelta_pegado'
        rng = np.random.default_rng(self.semilla + 2)
        cantidad = 10 if self.rapido else 50
        reportes: List[Dict[str, Any]] = []
        for i in range(cantidad):
            n = int(rng.integers(1, 17))
            largo_cola = int(rng.integers(1, 17))
            pares = szego_recursion(secuencia_aleatoria(rng, n, RADIO_CABEZA), n)
            entrada = EntradaPegado(pares[n], caratheodory_aleatoria(rng, int(rng.integers(1, 5))))
            try:
                medida = glued_weight(entrada, largo_cola=largo_cola)
                reporte = glue_session_report(medida, largo_cola)
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'muestra {i}')
                continue
            reportes.append(reporte)
            self._comprobar(suite, 'parametros', reporte['roundtrip_error'] <= TOLERANCIAS['IDA_VUELTA_MEDIDA'],
                            f'Verblunsky del peso pegado (muestra {i}, n = {n}, cola = {largo_cola})',
                            reporte['roundtrip_error'], TOLERANCIAS['IDA_VUELTA_MEDIDA'])
            masa = reporte['normalization_residuals']['sigma_mass']
            self._comprobar(suite, 'masa', masa <= TOLERANCIAS['PROBABILIDAD'],
                            f'∫ σ′ = 1 (muestra {i})', masa, TOLERANCIAS['PROBABILIDAD'])
        self.mediciones[suite] = {
            'muestras': cantidad,
            'peor_ida_vuelta': max((r['roundtrip_error'] for r in reportes), default=0.0),
        }
