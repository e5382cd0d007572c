"""
Medidas en la circunferencia unidad: parte absolutamente continua muestreada
en una malla angular uniforme (con evaluador cerrado opcional) más átomos.

La cuadratura es la regla del rectángulo en la malla uniforme, exacta para
polinomios trigonométricos de grado < N. Los átomos se suman exactamente.
"""

import json
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, Optional, Tuple, Union

import numpy as np
import pandas as pd

from polinomios.configuracion import ConfiguracionLaboratorio
from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorMalla, ErrorMedida
from polinomios.nucleo.polinomio import PolinomioComplejo
from polinomios.nucleo.precision import momentos_bernstein_szego

logger = logging.getLogger(__name__)

DOS_PI = 2.0 * np.pi

Integrando = Union[PolinomioComplejo, Callable[[np.ndarray], np.ndarray], np.ndarray]


def suma_compensada(valores: np.ndarray) -> complex:
    """Suma en orden ascendente con compensación (partes real e imaginaria por separado)"""
    valores = np.asarray(valores)
    if np.iscomplexobj(valores):
        return complex(math.fsum(valores.real), math.fsum(valores.imag))
    return complex(math.fsum(valores), 0.0)


@dataclass(frozen=True)
class MallaUnitaria:
    """Ángulos θ_k = 2πk/N, k = 0..N-1"""
    tamano: int

    def __post_init__(self):
        if int(self.tamano) < 4:
            raise ErrorMalla(f"La malla requiere N >= 4 (N = {self.tamano})")
        object.__setattr__(self, 'tamano', int(self.tamano))

    @classmethod
    def para_grado(cls, n_max: int, sobremuestreo: int = None, minimo: int = None) -> 'MallaUnitaria':
        """N = max(minimo, sobremuestreo·(n_max + 1))"""
        config = ConfiguracionLaboratorio.obtener()
        sobremuestreo = sobremuestreo or config['SOBREMUESTREO']
        minimo = config['MALLA_MINIMA'] if minimo is None else minimo
        return cls(max(int(minimo), int(sobremuestreo) * (int(n_max) + 1)))

    @cached_property
    def angulos(self) -> np.ndarray:
        return DOS_PI * np.arange(self.tamano) / self.tamano

    @cached_property
    def puntos(self) -> np.ndarray:
        return np.exp(1j * self.angulos)

    @property
    def paso(self) -> float:
        return DOS_PI / self.tamano

    def soporta_grado(self, grado: int) -> bool:
        return self.tamano > 2 * int(grado)

    def verificar_grado(self, grado: int) -> None:
        if not self.soporta_grado(grado):
            raise ErrorMalla(
                f"Malla insuficiente: N = {self.tamano} debe superar 2·grado = {2 * int(grado)}"
            )


@dataclass(frozen=True)
class Atomo:
    angulo: float
    masa: float

    def __post_init__(self):
        object.__setattr__(self, 'angulo', float(np.mod(self.angulo, DOS_PI)))
        object.__setattr__(self, 'masa', float(self.masa))

    @classmethod
    def en_punto(cls, xi: complex, masa: float) -> 'Atomo':
        return cls(float(np.angle(xi)), masa)

    @property
    def punto(self) -> complex:
        return complex(np.exp(1j * self.angulo))


@dataclass(frozen=True, eq=False)
class MedidaCircular:
    """
    σ = σ′(θ)dθ + Σ m_j δ_{θ_j}.

    pesos: muestras de σ′ (densidad respecto de dθ) sobre la malla.
    densidad: evaluador cerrado θ -> σ′(θ); tiene prioridad en consultas puntuales.
    generador: Q con σ′ = 1/(2π|Q|²) exacto; momentos y masa salen de Q y no de la malla.
    """
    malla: MallaUnitaria
    pesos: np.ndarray
    atomos: Tuple[Atomo, ...] = ()
    densidad: Optional[Callable[[np.ndarray], np.ndarray]] = None
    probabilidad: bool = False
    etiqueta: str = ''
    generador: Optional[PolinomioComplejo] = None

    def __post_init__(self):
        pesos = np.asarray(self.pesos, dtype=float).copy()
        if pesos.shape != (self.malla.tamano,):
            raise ErrorMalla(
                f"Las muestras del peso ({pesos.shape}) no coinciden con la malla ({self.malla.tamano})"
            )
        if pesos.size and pesos.min() < 0:
            raise ErrorMedida(f"Peso negativo en la malla (mínimo {pesos.min():.3e})")
        pesos.setflags(write=False)
        object.__setattr__(self, 'pesos', pesos)

        atomos = tuple(self.atomos)
        for atomo in atomos:
            if atomo.masa < 0:
                raise ErrorMedida(f"Masa negativa {atomo.masa} en θ = {atomo.angulo}")
        angulos = sorted(a.angulo for a in atomos)
        for previo, siguiente in zip(angulos, angulos[1:]):
            if siguiente - previo <= 1e-14:
                raise ErrorMedida(f"Átomos repetidos en θ = {siguiente}")
        if len(angulos) > 1 and angulos[0] + DOS_PI - angulos[-1] <= 1e-14:
            raise ErrorMedida(f"Átomos repetidos en θ = {angulos[0]}")
        object.__setattr__(self, 'atomos', atomos)

        if self.probabilidad and abs(self.masa_total - 1.0) > TOLERANCIAS['PROBABILIDAD']:
            raise ErrorMedida(f"Medida marcada como probabilidad con masa total {self.masa_total!r}")

    # ------------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------------
    @classmethod
    def lebesgue(cls, malla: MallaUnitaria, masa: float = 1.0) -> 'MedidaCircular':
        """masa·dθ/2π"""
        valor = masa / DOS_PI
        return cls(
            malla,
            np.full(malla.tamano, valor),
            densidad=lambda theta: np.full(np.shape(theta), valor),
            probabilidad=(masa == 1.0),
            etiqueta='lebesgue',
        )

    @classmethod
    def desde_densidad(cls, malla: MallaUnitaria, densidad: Callable[[np.ndarray], np.ndarray],
                       atomos: Iterable[Atomo] = (), probabilidad: bool = False,
                       etiqueta: str = '') -> 'MedidaCircular':
        pesos = np.asarray(densidad(malla.angulos), dtype=float)
        return cls(malla, pesos, tuple(atomos), densidad, probabilidad, etiqueta)

    @classmethod
    def solo_atomos(cls, malla: MallaUnitaria, atomos: Iterable[Atomo]) -> 'MedidaCircular':
        return cls(malla, np.zeros(malla.tamano), tuple(atomos), lambda theta: np.zeros(np.shape(theta)),
                   etiqueta='atomica')

    def con_atomos(self, atomos: Iterable[Atomo]) -> 'MedidaCircular':
        return MedidaCircular(self.malla, self.pesos, self.atomos + tuple(atomos), self.densidad,
                              False, self.etiqueta)

    def escalada(self, alfa: float) -> 'MedidaCircular':
        densidad = None
        if self.densidad is not None:
            original = self.densidad
            densidad = lambda theta: original(theta) * alfa  # noqa: E731
        atomos = tuple(Atomo(a.angulo, a.masa * alfa) for a in self.atomos)
        generador = None if self.generador is None else self.generador / np.sqrt(alfa)
        return MedidaCircular(self.malla, self.pesos * alfa, atomos, densidad, False, self.etiqueta, generador)

    def sobre_malla(self, malla: MallaUnitaria) -> 'MedidaCircular':
        """Remuestrea la parte continua (requiere evaluador cerrado)"""
        if self.densidad is None:
            raise ErrorMalla("No se puede remuestrear una medida sin evaluador cerrado")
        return MedidaCircular(malla, self.densidad(malla.angulos), self.atomos, self.densidad,
                              self.probabilidad, self.etiqueta, self.generador)

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------
    @property
    def es_bernstein_szego(self) -> bool:
        """σ = dθ/(2π|Q|²) sin átomos, con Q conocido"""
        return self.generador is not None and not self.atomos

    @cached_property
    def masa_total(self) -> float:
        if self.es_bernstein_szego:
            return float(momentos_bernstein_szego(self.generador.coeficientes, 0)[0].real)
        continua = self.malla.paso * suma_compensada(self.pesos).real
        return continua + math.fsum(a.masa for a in self.atomos)

    @property
    def angulos_atomos(self) -> np.ndarray:
        return np.array([a.angulo for a in self.atomos], dtype=float)

    @property
    def masas_atomos(self) -> np.ndarray:
        return np.array([a.masa for a in self.atomos], dtype=float)

    @property
    def puntos_atomos(self) -> np.ndarray:
        return np.exp(1j * self.angulos_atomos)

    def peso_en(self, theta):
        """σ′(θ): evaluador cerrado si existe, si no interpolación periódica de las muestras"""
        if self.densidad is not None:
            return self.densidad(np.asarray(theta, dtype=float))
        return np.interp(np.mod(theta, DOS_PI), self.malla.angulos, self.pesos, period=DOS_PI)

    # ------------------------------------------------------------------
    # Serialización
    # ------------------------------------------------------------------
    def a_json(self) -> Dict[str, Any]:
        return {
            'grid_size': self.malla.tamano,
            'weight_samples': [float(w) for w in self.pesos],
            'atoms': [{'theta': a.angulo, 'mass': a.masa} for a in self.atomos],
            'probability': bool(self.probabilidad),
        }

    @classmethod
    def desde_json(cls, datos: Union[str, Dict[str, Any]]) -> 'MedidaCircular':
        if isinstance(datos, str):
            datos = json.loads(datos)
        malla = MallaUnitaria(int(datos['grid_size']))
        atomos = tuple(Atomo(a['theta'], a['mass']) for a in datos.get('atoms', []))
        return cls(malla, np.asarray(datos['weight_samples'], dtype=float), atomos,
                   probabilidad=bool(datos.get('probability', False)))

    def volcar_pesos_csv(self, ruta) -> str:
        """CSV con columnas theta, weight"""
        df = pd.DataFrame({'theta': self.malla.angulos, 'weight': self.pesos})
        df.to_csv(ruta, index=False, float_format='%.17g')
        logger.info(f"📁 Pesos volcados en {ruta}")
        return str(ruta)


@dataclass(frozen=True)
class CertificadoSteklov:
    delta: float
    peso_minimo: float
    desviacion_maxima: float

    @property
    def valido(self) -> bool:
        return self.peso_minimo >= self.delta / DOS_PI

    def a_dict(self) -> Dict[str, Any]:
        return {
            'delta': self.delta,
            'min_weight': self.peso_minimo,
            'max_deviation': self.desviacion_maxima,
            'valid': self.valido,
        }


# ----------------------------------------------------------------------
# Operaciones
# ----------------------------------------------------------------------

def _valores(f: Integrando, mu: MedidaCircular) -> Tuple[np.ndarray, np.ndarray, Optional[int]]:
    """Valores de f en la malla y en los átomos, más su grado si es polinomio"""
    puntos_atomos = mu.puntos_atomos
    if isinstance(f, PolinomioComplejo):
        en_atomos = np.asarray(f.evaluar(puntos_atomos)) if mu.atomos else np.zeros(0, dtype=complex)
        return f.en_malla(mu.malla.tamano), en_atomos, f.grado
    if isinstance(f, np.ndarray):
        if f.shape != (mu.malla.tamano,):
            raise ErrorMalla(f"Muestras de longitud {f.shape} sobre una malla de {mu.malla.tamano}")
        if mu.atomos:
            raise ErrorMalla("Una función muestreada no tiene valores en los átomos; use un evaluador")
        return f.astype(complex), np.zeros(0, dtype=complex), None
    en_malla = np.asarray(f(mu.malla.puntos), dtype=complex)
    en_atomos = np.asarray(f(puntos_atomos), dtype=complex) if mu.atomos else np.zeros(0, dtype=complex)
    return en_malla, en_atomos, None


def quad_inner(f: Integrando, g: Integrando, mu: MedidaCircular) -> complex:
    """∫ f ḡ σ′ dθ + Σ m_j f(ξ_j) ḡ(ξ_j)"""
    f_malla, f_atomos, grado_f = _valores(f, mu)
    g_malla, g_atomos, grado_g = _valores(g, mu)
    grados = [d for d in (grado_f, grado_g) if d is not None]
    if grados:
        mu.malla.verificar_grado(max(grados))
    continua = mu.malla.paso * suma_compensada(f_malla * np.conj(g_malla) * mu.pesos)
    discreta = suma_compensada(mu.masas_atomos * f_atomos * np.conj(g_atomos)) if mu.atomos else 0j
    return continua + discreta


def moment(mu: MedidaCircular, k: int) -> complex:
    """c_k = ∫ e^{-ikθ} dµ; c_{-k} se obtiene conjugando c_k"""
    k = int(k)
    if k < 0:
        return moment(mu, -k).conjugate()
    if mu.es_bernstein_szego:
        return complex(momentos_bernstein_szego(mu.generador.coeficientes, k)[k])
    if 2 * k >= mu.malla.tamano:
        raise ErrorMalla(f"|k| = {k} demasiado grande para N = {mu.malla.tamano}")
    fase = np.exp(-1j * k * mu.malla.angulos)
    continua = mu.malla.paso * suma_compensada(fase * mu.pesos)
    discreta = suma_compensada(mu.masas_atomos * np.exp(-1j * k * mu.angulos_atomos)) if mu.atomos else 0j
    return continua + discreta


def momentos(mu: MedidaCircular, K: int) -> np.ndarray:
    """c_0..c_K de una vez (FFT; reproducible a nivel de tolerancia, no de bits)"""
    if mu.es_bernstein_szego:
        return np.array([complex(c) for c in momentos_bernstein_szego(mu.generador.coeficientes, K)])
    if 2 * int(K) >= mu.malla.tamano:
        raise ErrorMalla(f"K = {K} demasiado grande para N = {mu.malla.tamano}")
    continua = mu.malla.paso * np.fft.fft(mu.pesos)[:K + 1]
    if mu.atomos:
        k = np.arange(K + 1)
        continua = continua + np.exp(-1j * np.outer(k, mu.angulos_atomos)) @ mu.masas_atomos
    return continua


def normalize(mu: MedidaCircular) -> Tuple[MedidaCircular, float]:
    """Devuelve (µ/α, α) con α = masa total"""
    alfa = mu.masa_total
    if not alfa > 0:
        raise ErrorMedida("Medida de masa total nula")
    normalizada = mu.escalada(1.0 / alfa)
    return MedidaCircular(normalizada.malla, normalizada.pesos, normalizada.atomos,
                          normalizada.densidad, True, mu.etiqueta, normalizada.generador), alfa


def steklov_check(mu: MedidaCircular, delta: float) -> CertificadoSteklov:
    pesos = mu.pesos
    return CertificadoSteklov(
        delta=float(delta),
        peso_minimo=float(pesos.min()),
        desviacion_maxima=float(np.max(np.abs(pesos - 1.0 / DOS_PI))),
    )
