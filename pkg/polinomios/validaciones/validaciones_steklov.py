"""
Suites de la construcción de clase Steklov: pertenencia, crecimiento ε log n,
denominador cerrado, cociente de desacople y cota de Szegő.
"""

import logging
from typing import Dict, Tuple

import numpy as np

from polinomios.constants import PARAMETROS_POR_DEFECTO, TOLERANCIAS
from polinomios.excepciones import ErrorLaboratorio
from polinomios.nucleo.medida_circular import steklov_check
from polinomios.nucleo.opuc import schur_from_orthonormal, szego_ratio_check, verblunsky_from_measure
from polinomios.nucleo.steklov import (
    ConstruccionSteklov,
    bounded_sine_sum,
    build_construction,
    desviacion_steklov,
    epsilon_sweep,
    pendiente_crecimiento,
    rakhmanov_variant,
    sec1_violation_demo,
    verify_growth,
)
from polinomios.reportes import ReporteCrecimiento
from polinomios.repositories.constantes_repository import RepositorioConstantes
from polinomios.validaciones.base import SuiteBase

logger = logging.getLogger(__name__)


class ValidacionesSteklov(SuiteBase):
    categoria = 'steklov'

    def __init__(self, rapido: bool = False, semilla: int = 20240611):
        super().__init__(rapido, semilla)
        self.constantes = RepositorioConstantes.cargar()
        self._construcciones: Dict[Tuple[int, float], ConstruccionSteklov] = {}

    @property
    def epsilon(self) -> float:
        return float(self.constantes['steklov']['epsilon'])

    @property
    def lista_n(self):
        if self.rapido:
            return PARAMETROS_POR_DEFECTO['LISTA_N_RAPIDA']
        return PARAMETROS_POR_DEFECTO['LISTA_N_STEKLOV']

    @property
    def delta(self) -> float:
        return 1.0 - self.constantes['steklov']['C_desviacion'] * self.epsilon

    def _construccion(self, n: int, epsilon: float = None) -> ConstruccionSteklov:
        clave = (int(n), self.epsilon if epsilon is None else float(epsilon))
        if clave not in self._construcciones:
            self._construcciones[clave] = build_construction(*clave)
        return self._construcciones[clave]

    def _construcciones_validas(self, suite: str):
        for n in self.lista_n:
            try:
                yield self._construccion(n)
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'n = {n}')

    def ejecutar_crecimiento_steklov(self) -> None:
        suite = 'crecimiento_steklov'
        constantes = self.constantes['steklov']
        epsilon = self.epsilon
        reporte = ReporteCrecimiento('steklov', 'eps*log(n)')
        for c in self._construcciones_validas(suite):
            n = c.n
            try:
                desviacion = desviacion_steklov(c)
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'n = {n}')
                continue
            umbral = constantes['C_desviacion'] * epsilon
            self._comprobar(suite, 'desviacion', desviacion['desviacion_maxima'] <= umbral,
                            f'sup |2πσ′ − 1| <= Cε (n = {n})', desviacion['desviacion_maxima'], umbral)
            certificado = steklov_check(c.sigma, self.delta)
            self._comprobar(suite, 'clase_steklov', certificado.valido,
                            f'min 2πσ′ >= 1 − Cε (n = {n})', 2 * np.pi * certificado.peso_minimo, self.delta)
            masa = abs(desviacion['masa'] - 1.0)
            self._comprobar(suite, 'probabilidad', masa <= TOLERANCIAS['PROBABILIDAD'],
                            f'σ de probabilidad (n = {n})', masa, TOLERANCIAS['PROBABILIDAD'])
            umbral = constantes['C_a'] * epsilon
            self._comprobar(suite, 'constante_a', c.mediciones['desvio_a'] <= umbral,
                            f'|a − 1| <= C_a ε (n = {n})', c.mediciones['desvio_a'], umbral)
            margen = TOLERANCIAS['MARGEN_RE_M']
            rango_D = (c.mediciones['re_D_min'] >= c.b - 1.0 - margen
                       and c.mediciones['re_D_max'] <= c.b + 1.0 + margen)
            self._comprobar(suite, 're_D', rango_D, f'Re D_n en [b − 1, b + 1] (n = {n})',
                            [c.mediciones['re_D_min'], c.mediciones['re_D_max']], [c.b - 1.0, c.b + 1.0])
            self._registrar_diagnostico(suite, c.M.verificar(c.malla), f'n = {n}')

            if n <= 64:
                try:
                    extraidos = verblunsky_from_measure(c.sigma, n)
                    esperados = schur_from_orthonormal(c.phi)
                    error = float(np.max(np.abs(extraidos.gamma - esperados.gamma)))
                    self._comprobar(suite, 'ortonormalidad', error <= TOLERANCIAS['IDA_VUELTA_MEDIDA'],
                                    f'φ_n ortonormal para σ (n = {n})', error, TOLERANCIAS['IDA_VUELTA_MEDIDA'])
                except ErrorLaboratorio as e:
                    self._registrar_excepcion(suite, e, f'n = {n}')

            fila, extras = verify_growth(c)
            reporte.agregar(fila)
            reporte.extras[str(n)] = extras

        self.mediciones[suite] = reporte.a_dict()
        self._ejecutar_variante(suite)
        if self.rapido or len(reporte) < 2:
            return

        c1, c2 = constantes['c1'], constantes['c2']
        for fila in reporte.filas:
            self._comprobar(suite, 'banda', c1 <= fila.cociente <= c2,
                            f'sup |φ_n| / (ε log n) en [c1, c2] (n = {fila.n})', fila.cociente, [c1, c2])
            distancia = min(abs(fila.argmax_theta), abs(np.pi - abs(fila.argmax_theta)))
            umbral = constantes['C_maximizador'] / fila.n
            self._comprobar(suite, 'maximizador', distancia <= umbral,
                            f'Maximizador cerca de θ ∈ {{0, π}} (n = {fila.n})', distancia, umbral)
        pendiente = pendiente_crecimiento(reporte)
        referencia = constantes['pendiente_por_epsilon'] * epsilon
        self.mediciones[f'{suite}_pendiente'] = pendiente
        self._comprobar(suite, 'pendiente', 0.5 * referencia <= pendiente <= 2.0 * referencia,
                        'Pendiente de sup |φ_n| contra log n en [s/2, 2s]', pendiente,
                        [0.5 * referencia, 2.0 * referencia])
        self._ejecutar_barrido_epsilon(suite)

    def _ejecutar_barrido_epsilon(self, suite: str) -> None:
        """Pendiente/ε y desviación/ε dentro de la banda congelada para varios ε"""
        constantes = self.constantes['steklov']
        try:
            barrido = epsilon_sweep(PARAMETROS_POR_DEFECTO['LISTA_EPSILON_BARRIDO'],
                                    PARAMETROS_POR_DEFECTO['LISTA_N_BARRIDO_EPSILON'])
        except ErrorLaboratorio as e:
            self._registrar_excepcion(suite, e, 'barrido en ε')
            return
        referencia = constantes['pendiente_por_epsilon']
        for epsilon, fila in barrido.items():
            self._comprobar(suite, 'barrido_desviacion', fila['desviacion_sobre_epsilon'] <= constantes['C_desviacion'],
                            f'sup |2πσ′ − 1| / ε <= C (ε = {epsilon})', fila['desviacion_sobre_epsilon'],
                            constantes['C_desviacion'])
            self._comprobar(suite, 'barrido_pendiente',
                            0.5 * referencia <= fila['pendiente_sobre_epsilon'] <= 2.0 * referencia,
                            f'Pendiente / ε en [s/2, 2s] (ε = {epsilon})', fila['pendiente_sobre_epsilon'],
                            [0.5 * referencia, 2.0 * referencia])
        self.mediciones[f'{suite}_barrido_epsilon'] = {str(e): fila for e, fila in barrido.items()}

    def _ejecutar_variante(self, suite: str) -> None:
        """Variante sobre el polinomio de Rakhmanov y la suma de senos acotada"""
        constantes = self.constantes['variante']
        lista_N = (16, 256) if self.rapido else (16, 256, 4096)
        sumas = bounded_sine_sum(lista_N)
        peor = max(sumas.values())
        self._comprobar(suite, 'suma_senos', peor < constantes['cota_seno'],
                        '|Σ sin(jθ)/j| acotada uniformemente', peor, constantes['cota_seno'])
        n = 16 if self.rapido else 64
        try:
            variante = rakhmanov_variant(n, self.epsilon, constantes['C_prima'], cota_re_M=constantes['cota_re_M'])
        except ErrorLaboratorio as e:
            self._registrar_excepcion(suite, e, f'variante n = {n}')
            return
        self._registrar_diagnostico(suite, variante.diagnostico, f'variante n = {n}')
        self.mediciones[f'{suite}_variante'] = {
            'mejor_candidato': variante.mejor_candidato(),
            'constante_exacta': variante.constante_exacta,
            're_M_sup': variante.diagnostico.mediciones['re_M_sup'],
        }

    def ejecutar_denominador_cerrado(self) -> None:
        """Corchete pegado contra 2a(1 + εb(1 + z^n) + 2εz^n Re M_n)"""
        suite = 'denominador_cerrado'
        tolerancia = TOLERANCIAS['DENOMINADOR_CERRADO']
        desvios = {}
        for c in self._construcciones_validas(suite):
            try:
                c.sigma
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'n = {c.n}')
                continue
            directo = c.entrada_pegado.corchete_en_malla()
            cerrado = c.denominador_cerrado()
            desvio = float(np.max(np.abs(directo - cerrado)) / np.max(np.abs(cerrado)))
            desvios[c.n] = desvio
            self._comprobar(suite, 'dos_evaluaciones', desvio <= tolerancia,
                            f'Denominador directo contra cerrado (n = {c.n})', desvio, tolerancia)
        self.mediciones[suite] = desvios

    def ejecutar_violacion_sec1(self) -> None:
        """El supremo del cociente de desacople crece con n"""
        suite = 'violacion_sec1'
        factor_minimo = self.constantes['sec1']['factor_minimo']
        n_chico, n_grande = (8, 32) if self.rapido else (64, 4096)
        try:
            chico = sec1_violation_demo(self._construccion(n_chico))
            grande = sec1_violation_demo(self._construccion(n_grande))
            trivial = sec1_violation_demo(self._construccion(n_chico, 0.0))
        except ErrorLaboratorio as e:
            self._registrar_excepcion(suite, e)
            return
        for diagnostico, contexto in ((chico, f'n = {n_chico}'), (grande, f'n = {n_grande}'), (trivial, 'ε = 0')):
            self._registrar_diagnostico(suite, diagnostico, contexto)
        factor = grande.mediciones['sup_cociente_sec1'] / chico.mediciones['sup_cociente_sec1']
        self._comprobar(suite, 'tendencia', factor >= factor_minimo,
                        f'sup del cociente en n = {n_grande} sobre n = {n_chico}', factor, factor_minimo)
        sup_trivial = trivial.mediciones['sup_cociente_sec1']
        self._comprobar(suite, 'acotado_sin_perturbacion', sup_trivial <= 3.0 + TOLERANCIAS['IDENTIDAD_ALGEBRAICA'],
                        'Con ε = 0 el cociente es 1 + |1 − z^n| <= 3', sup_trivial, 3.0)
        self.mediciones[suite] = {'factor': factor, 'cociente_cerca_de_uno': grande.mediciones['cociente_cerca_de_uno']}

    def ejecutar_cociente_szego(self) -> None:
        """√δ <= 1/κ_n <= 1 para cada medida construida"""
        suite = 'cociente_szego'
        for c in self._construcciones_validas(suite):
            try:
                gamma = schur_from_orthonormal(c.phi)
                diagnostico = szego_ratio_check(c.sigma, c.n, self.delta, gamma=gamma)
            except ErrorLaboratorio as e:
                self._registrar_excepcion(suite, e, f'n = {c.n}')
                continue
            self._registrar_diagnostico(suite, diagnostico, f'n = {c.n}')

    def limpiar_errores(self) -> None:
        super().limpiar_errores()
        self._construcciones = {}
