"""
Reducción circunferencia <-> segmento [−1, 1].

Medidas: σ′(θ) = ρ(cos θ)|sin θ| (masa total 2∫ρ).
Polinomios: P_k = (φ_2k + φ_2k*) z^{-k} / √(2π(1 + Φ_2k(0))), x = (z + 1/z)/2,
con σ normalizada a probabilidad. Así P_k resulta ortonormal respecto de
2π dψ_σ, es decir respecto de (π / ∫ρ) ρ dx.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd
from numpy.polynomial import Polynomial
from numpy.polynomial import chebyshev as Ch
from scipy import integrate, linalg

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorMedida, ErrorOraculo, ErrorParametros
from polinomios.nucleo.medida_circular import DOS_PI, Atomo, MallaUnitaria, MedidaCircular, normalize
from polinomios.nucleo.opuc import szego_recursion, verblunsky_from_measure

logger = logging.getLogger(__name__)

TAMANO_FEJER = 512


def _nodos_fejer(K: int):
    """Primera regla de Fejér: nodos de Chebyshev de primera especie y sus pesos"""
    k = np.arange(K)
    theta = (2 * k + 1) * np.pi / (2 * K)
    j = np.arange(1, K // 2 + 1)
    suma = np.cos(2.0 * np.outer(theta, j)) / (4.0 * j ** 2 - 1.0)
    pesos = (2.0 / K) * (1.0 - 2.0 * suma.sum(axis=1))
    return np.cos(theta), pesos


@dataclass(frozen=True, eq=False)
class MedidaSegmento:
    """
    ρ dx en (−1, 1). Si `factor_arcoseno` está definido, ρ = r(x)/√(1 − x²)
    y la cuadratura usa x = cos θ sobre la malla uniforme.
    """
    densidad: Callable[[np.ndarray], np.ndarray]
    factor_arcoseno: Optional[Callable[[np.ndarray], np.ndarray]] = None
    tamano: int = TAMANO_FEJER
    etiqueta: str = ''

    def __post_init__(self):
        if np.any(self.pesos < 0):
            raise ErrorMedida(f"Peso negativo en el segmento ({self.etiqueta})")

    @classmethod
    def arcoseno(cls, r: Callable = None, tamano: int = 4096, etiqueta: str = 'arcoseno') -> 'MedidaSegmento':
        r = r or (lambda x: np.full(np.shape(x), 1.0 / np.pi))
        return cls(lambda x: r(x) / np.sqrt(1.0 - np.asarray(x) ** 2), r, tamano, etiqueta)

    @classmethod
    def chebyshev_u(cls, tamano: int = 4096) -> 'MedidaSegmento':
        """(2/π)√(1 − x²) = r(x)/√(1 − x²) con r = (2/π)(1 − x²)"""
        return cls.arcoseno(lambda x: (2.0 / np.pi) * (1.0 - np.asarray(x) ** 2), tamano, 'chebyshev_u')

    @classmethod
    def suave(cls, densidad: Callable, tamano: int = TAMANO_FEJER, etiqueta: str = 'suave') -> 'MedidaSegmento':
        return cls(densidad, None, tamano, etiqueta)

    @classmethod
    def legendre(cls) -> 'MedidaSegmento':
        return cls.suave(lambda x: np.full(np.shape(x), 0.5), etiqueta='legendre')

    @cached_property
    def _cuadratura(self):
        if self.factor_arcoseno is not None:
            malla = MallaUnitaria(self.tamano)
            nodos = np.cos(malla.angulos)
            # ∫ f ρ dx = (1/2) ∫_0^{2π} f(cos θ) r(cos θ) dθ
            return nodos, np.full(self.tamano, np.pi / self.tamano), self.factor_arcoseno(nodos)
        nodos, pesos = _nodos_fejer(self.tamano)
        return nodos, pesos, self.densidad(nodos)

    @property
    def nodos(self) -> np.ndarray:
        return self._cuadratura[0]

    @property
    def pesos(self) -> np.ndarray:
        """Muestras del factor integrable (r para arcoseno, ρ para suave)"""
        return np.asarray(self._cuadratura[2], dtype=float)

    def integrar(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        nodos, pesos, muestras = self._cuadratura
        return float(np.sum(pesos * muestras * f(nodos)))

    @cached_property
    def masa_total(self) -> float:
        return self.integrar(lambda x: np.ones_like(x))

    def distribucion(self, x: float) -> float:
        """ψ(x) = ∫_{-1}^{x} ρ, con ψ(−1) = 0"""
        if x <= -1.0:
            return 0.0
        x = min(float(x), 1.0)
        if self.factor_arcoseno is not None:
            r = self.factor_arcoseno
            valor, _ = integrate.quad(lambda t: float(r(np.cos(t))), np.arccos(x), np.pi)
            return float(valor)
        valor, _ = integrate.quad(lambda t: float(self.densidad(t)), -1.0, x)
        return float(valor)

    def densidad_circular(self, theta):
        """σ′(θ) = ρ(cos θ)|sin θ|"""
        theta = np.asarray(theta, dtype=float)
        c = np.cos(theta)
        if self.factor_arcoseno is not None:
            return self.factor_arcoseno(c)
        return self.densidad(c) * np.abs(np.sin(theta))


@dataclass(frozen=True, eq=False)
class MedidaCircularSimetrica:
    medida: MedidaCircular

    def __post_init__(self):
        asimetria = asimetria_medida(self.medida)
        if asimetria > TOLERANCIAS['SIMETRIA']:
            raise ErrorMedida(f"Medida no simétrica respecto del eje real (desvío {asimetria:.3e})")

    @property
    def malla(self) -> MallaUnitaria:
        return self.medida.malla


def asimetria_medida(mu: MedidaCircular) -> float:
    """Desvío relativo entre σ′(θ) y σ′(2π − θ), más átomos sin pareja"""
    pesos = mu.pesos
    reflejados = np.roll(pesos[::-1], 1)
    escala = max(float(pesos.max()), 1e-300)
    desvio = float(np.max(np.abs(pesos - reflejados))) / escala
    for atomo in mu.atomos:
        if min(atomo.angulo, abs(atomo.angulo - np.pi)) <= 1e-14 or DOS_PI - atomo.angulo <= 1e-14:
            continue
        pareja = [a for a in mu.atomos if abs(np.angle(np.exp(1j * (a.angulo + atomo.angulo)))) <= 1e-12]
        if not pareja:
            return float('inf')
        desvio = max(desvio, abs(pareja[0].masa - atomo.masa) / max(atomo.masa, 1e-300))
    return desvio


def simetrizar(mu: MedidaCircular) -> MedidaCircularSimetrica:
    """(µ + µ reflejada)/2"""
    pesos = 0.5 * (mu.pesos + np.roll(mu.pesos[::-1], 1))
    masas: Dict[float, float] = {}
    for atomo in mu.atomos:
        angulo = round(atomo.angulo, 14)
        reflejado = round(float(np.mod(-atomo.angulo, DOS_PI)), 14)
        if reflejado >= round(DOS_PI, 14):
            reflejado = 0.0
        for clave in (angulo, reflejado):
            masas[clave] = masas.get(clave, 0.0) + 0.5 * atomo.masa
    densidad = None
    if mu.densidad is not None:
        original = mu.densidad

        def densidad(theta):
            return 0.5 * (original(theta) + original(-np.asarray(theta)))

    atomos = tuple(Atomo(angulo, masa) for angulo, masa in sorted(masas.items()))
    return MedidaCircularSimetrica(MedidaCircular(mu.malla, pesos, atomos, densidad, False, f'{mu.etiqueta}_sim'))


def segment_to_circle(rho: MedidaSegmento, malla: MallaUnitaria = None) -> MedidaCircularSimetrica:
    """σ′(θ) = ρ(cos θ)|sin θ|"""
    malla = malla or MallaUnitaria(max(4096, rho.tamano))
    medida = MedidaCircular.desde_densidad(malla, rho.densidad_circular, etiqueta=f'circulo_{rho.etiqueta}')
    return MedidaCircularSimetrica(medida)


def _chebyshev_desde_laurent(q: np.ndarray, k: int) -> np.ndarray:
    """Q(z) z^{-k} con Q de grado 2k simétrico -> serie de Chebyshev en x"""
    c = np.zeros(k + 1)
    c[0] = q[k].real
    c[1:] = 2.0 * q[k + 1:2 * k + 1].real
    return c


def circle_to_segment_polys(sigma: MedidaCircularSimetrica, K: int) -> List[Polynomial]:
    """P_0..P_K en la variable x"""
    if K < 0:
        raise ErrorParametros("K debe ser >= 0")
    probabilidad, _ = normalize(sigma.medida)
    gamma = verblunsky_from_measure(probabilidad, 2 * K)
    imaginaria = float(np.max(np.abs(gamma.gamma.imag))) if len(gamma) else 0.0
    if imaginaria > TOLERANCIAS['SIMETRIA']:
        raise ErrorMedida(f"Parámetros de Verblunsky no reales ({imaginaria:.3e}) para una medida simétrica")
    pares = szego_recursion(gamma, 2 * K)
    polinomios = []
    for k in range(K + 1):
        par = pares[2 * k]
        q = (par.phi + par.phi_estrella).coeficientes
        Phi_cero = par.phi.coeficiente(0).real / par.kappa if k else 1.0
        denominador = np.sqrt(DOS_PI * (1.0 + Phi_cero))
        serie = _chebyshev_desde_laurent(q, k) / denominador
        polinomios.append(Polynomial(Ch.cheb2poly(serie)))
    return polinomios


def normalizacion_oraculo(rho: MedidaSegmento) -> float:
    """Factor que lleva los P_k de la reducción a ortonormales respecto de ρ dx"""
    return float(np.sqrt(np.pi / rho.masa_total))


def segment_polys_via_circle(rho: MedidaSegmento, K: int) -> List[Polynomial]:
    factor = normalizacion_oraculo(rho)
    return [P * factor for P in circle_to_segment_polys(segment_to_circle(rho), K)]


def segment_gram_schmidt_oracle(rho: MedidaSegmento, K: int) -> List[Polynomial]:
    """Ortonormalización de T_0..T_K contra ρ dx con reortogonalización"""
    nodos, pesos, muestras = rho._cuadratura
    raiz = np.sqrt(pesos * muestras)
    base = np.array([Ch.chebval(nodos, np.eye(K + 1)[j]) for j in range(K + 1)]) * raiz
    gram = base @ base.T
    try:
        linalg.cholesky(gram, lower=True)
    except linalg.LinAlgError as exc:
        raise ErrorOraculo(f"Gram del segmento no definida positiva hasta grado {K}: {exc}") from exc

    vectores = np.zeros_like(base)
    coefs = np.zeros((K + 1, K + 1))
    for k in range(K + 1):
        v = base[k].copy()
        c = np.zeros(K + 1)
        c[k] = 1.0
        for _ in range(2):
            for j in range(k):
                h = float(vectores[j] @ v)
                v -= h * vectores[j]
                c -= h * coefs[j]
        norma = float(np.sqrt(v @ v))
        if norma <= 1e-14:
            raise ErrorOraculo(f"Gram-Schmidt del segmento degenerado en el grado {k}")
        vectores[k] = v / norma
        coefs[k] = c / norma

    residuo = float(np.max(np.abs(vectores @ vectores.T - np.eye(K + 1))))
    if residuo > 1e-9:
        raise ErrorOraculo(f"Residuo de Gram del segmento {residuo:.3e}")
    return [Polynomial(Ch.cheb2poly(coefs[k, :k + 1])) for k in range(K + 1)]


def boundedness_transfer(sigma: MedidaCircularSimetrica, K: int, delta_prima: float = 0.1,
                         tamano: int = 2001) -> pd.DataFrame:
    """sup_{|x| <= 1−δ′} |P_k| frente a la cota 2 sup|φ_2k| / √(2π(1 + Φ_2k(0)))"""
    probabilidad, _ = normalize(sigma.medida)
    gamma = verblunsky_from_measure(probabilidad, 2 * K)
    pares = szego_recursion(gamma, 2 * K)
    polinomios = circle_to_segment_polys(sigma, K)
    x = np.linspace(-1.0 + delta_prima, 1.0 - delta_prima, tamano)
    filas = []
    for k, P in enumerate(polinomios):
        par = pares[2 * k]
        Phi_cero = par.phi.coeficiente(0).real / par.kappa if k else 1.0
        sup_circulo = float(np.max(np.abs(par.phi.en_malla(sigma.malla.tamano))))
        filas.append({
            'k': k,
            'sup_segmento': float(np.max(np.abs(P(x)))),
            'sup_circulo': sup_circulo,
            'cota': 2.0 * sup_circulo / np.sqrt(DOS_PI * (1.0 + Phi_cero)),
        })
    return pd.DataFrame(filas, columns=['k', 'sup_segmento', 'sup_circulo', 'cota'])


def polinomios_a_json(polinomios: List[Polynomial]) -> List[Dict[str, Any]]:
    return [{'k': k, 'coeffs_in_x': [float(c) for c in P.coef]} for k, P in enumerate(polinomios)]


def volcar_tabla_csv(polinomios: List[Polynomial], ruta, puntos: int = 201) -> str:
    """Tabla (x, P_0(x), ..., P_K(x))"""
    x = np.linspace(-1.0, 1.0, puntos)
    df = pd.DataFrame({'x': x})
    for k, P in enumerate(polinomios):
        df[f'P_{k}'] = P(x)
    df.to_csv(ruta, index=False, float_format='%.17g')
    logger.info(f"📁 Tabla de polinomios del segmento en {ruta}")
    return str(ruta)
