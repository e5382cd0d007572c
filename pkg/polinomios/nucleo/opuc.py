"""
Núcleo OPUC: recursiones de Szegő, extracción de parámetros de Verblunsky,
polinomios de segunda especie, núcleos de Christoffel-Darboux, medidas de
Bernstein-Szegő, funciones de Carathéodory y de Szegő, y el oráculo de
Gram-Schmidt independiente de la recursión.

Convención de signo:
    φ_{k+1}  = ρ_k^{-1} (z φ_k − γ̄_k φ_k*)
    φ*_{k+1} = ρ_k^{-1} (φ_k* − γ_k z φ_k)
con lo cual Φ_{k+1}(0) = −γ̄_k para los mónicos.
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import linalg

from polinomios.constants import PARAMETROS_POR_DEFECTO, TOLERANCIAS
from polinomios.excepciones import ErrorMedida, ErrorOraculo, ErrorParametros
from polinomios.nucleo.diagnosticos import Diagnostico
from polinomios.nucleo.medida_circular import (
    DOS_PI,
    MallaUnitaria,
    MedidaCircular,
    momentos,
    steklov_check,
)
from polinomios.nucleo.polinomio import PolinomioComplejo, star
from polinomios.nucleo.precision import (
    integral_inversa_cuadrado,
    momentos_bernstein_szego,
    monicos_por_cholesky,
    pulir_raiz,
)

logger = logging.getLogger(__name__)


# ======================================================================
# Tipos
# ======================================================================

@dataclass(frozen=True, eq=False)
class SecuenciaSchur:
    gamma: np.ndarray

    def __post_init__(self):
        gamma = np.atleast_1d(np.asarray(self.gamma, dtype=complex)).copy()
        if gamma.size and np.max(np.abs(gamma)) >= 1.0:
            indice = int(np.argmax(np.abs(gamma)))
            raise ErrorParametros(
                f"Parámetro de Schur fuera del disco: |γ_{indice}| = {abs(gamma[indice])!r}"
            )
        gamma.setflags(write=False)
        object.__setattr__(self, 'gamma', gamma)

    @property
    def rho(self) -> np.ndarray:
        return np.sqrt(1.0 - np.abs(self.gamma) ** 2)

    def __len__(self):
        return int(self.gamma.size)

    def prefijo(self, n: int) -> 'SecuenciaSchur':
        return SecuenciaSchur(self.gamma[:n])

    def negada(self) -> 'SecuenciaSchur':
        return SecuenciaSchur(-self.gamma)

    def concatenar(self, otra: 'SecuenciaSchur') -> 'SecuenciaSchur':
        return SecuenciaSchur(np.concatenate([self.gamma, otra.gamma]))

    def kappa(self, n: int = None) -> float:
        """Coeficiente principal de φ_n: Π_{j<n} ρ_j^{-1}"""
        n = len(self) if n is None else n
        return float(np.prod(1.0 / self.rho[:n]))

    def a_json(self) -> List[List[float]]:
        return [[float(g.real), float(g.imag)] for g in self.gamma]

    @classmethod
    def desde_json(cls, datos: Union[str, Sequence]) -> 'SecuenciaSchur':
        if isinstance(datos, str):
            datos = json.loads(datos)
        return cls(np.array([complex(re, im) for re, im in datos], dtype=complex))

    @classmethod
    def nula(cls, n: int) -> 'SecuenciaSchur':
        return cls(np.zeros(n, dtype=complex))


@dataclass(frozen=True, eq=False)
class ParOrtonormal:
    """φ_n, φ_n* y κ_n = coeficiente principal de φ_n"""
    phi: PolinomioComplejo
    phi_estrella: PolinomioComplejo
    kappa: float

    @property
    def grado(self) -> int:
        return self.phi.grado_nominal

    def monico(self) -> PolinomioComplejo:
        return self.phi / self.kappa

    def a_json(self) -> Dict[str, Any]:
        return {
            'phi': self.phi.a_json(),
            'phi_star': self.phi_estrella.a_json(),
            'kappa': self.kappa,
        }


@dataclass(frozen=True, eq=False)
class FuncionCaratheodory:
    """F analítica en el disco con Re F >= 0, representada por un polinomio"""
    poli: PolinomioComplejo

    def __call__(self, z):
        return self.poli.evaluar(z)

    def parte_real_en_malla(self, malla: MallaUnitaria) -> np.ndarray:
        return self.poli.en_malla(malla.tamano).real

    def media_parte_real(self, malla: MallaUnitaria) -> float:
        """(1/2π) ∫ Re F dθ"""
        return float(np.mean(self.parte_real_en_malla(malla)))

    def es_valida(self, malla: MallaUnitaria, estricta: bool = False) -> bool:
        minimo = float(self.parte_real_en_malla(malla).min())
        return minimo > 0 if estricta else minimo >= -TOLERANCIAS['IDENTIDAD_ALGEBRAICA']


@dataclass(frozen=True)
class RaicesUbicadas:
    dentro: int
    sobre: int
    fuera: int
    metodo: str
    modulo_minimo: float


# ======================================================================
# Recursiones
# ======================================================================

def _paso_recursion(phi: np.ndarray, phi_e: np.ndarray, g: complex, r: float) -> Tuple[np.ndarray, np.ndarray]:
    z_phi = np.concatenate([[0j], phi])
    phi_e_ext = np.concatenate([phi_e, [0j]])
    return (z_phi - np.conj(g) * phi_e_ext) / r, (phi_e_ext - g * z_phi) / r


def szego_recursion(gamma: SecuenciaSchur, n: int) -> List[ParOrtonormal]:
    """Pares (φ_k, φ_k*) para k = 0..n"""
    if n > len(gamma):
        raise ErrorParametros(f"Se piden {n} pasos con solo {len(gamma)} parámetros")
    rho = gamma.rho
    phi = np.array([1.0 + 0j])
    phi_e = np.array([1.0 + 0j])
    kappa = 1.0
    pares = [ParOrtonormal(PolinomioComplejo(phi, 0), PolinomioComplejo(phi_e, 0), 1.0)]
    for k in range(n):
        phi, phi_e = _paso_recursion(phi, phi_e, gamma.gamma[k], rho[k])
        kappa /= rho[k]
        pares.append(ParOrtonormal(
            PolinomioComplejo(phi, k + 1),
            PolinomioComplejo(phi_e, k + 1),
            kappa,
        ))
    return pares


def second_kind(gamma: SecuenciaSchur, n: int) -> List[ParOrtonormal]:
    """(ψ_k, ψ_k*): misma recursión con −γ"""
    return szego_recursion(gamma.negada(), n)


def evaluate_recursion(gamma: SecuenciaSchur, n: int, z) -> Tuple[np.ndarray, np.ndarray]:
    """
    Valores de φ_k(z) y φ_k*(z) para k = 0..n, sin construir coeficientes.
    Devuelve dos arreglos de forma (n+1, len(z)).
    """
    if n > len(gamma):
        raise ErrorParametros(f"Se piden {n} pasos con solo {len(gamma)} parámetros")
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    rho = gamma.rho
    phi = np.empty((n + 1, z.size), dtype=complex)
    phi_e = np.empty((n + 1, z.size), dtype=complex)
    phi[0] = 1.0
    phi_e[0] = 1.0
    for k in range(n):
        g = gamma.gamma[k]
        phi[k + 1] = (z * phi[k] - np.conj(g) * phi_e[k]) / rho[k]
        phi_e[k + 1] = (phi_e[k] - g * z * phi[k]) / rho[k]
    return phi, phi_e


def schur_from_orthonormal(phi: PolinomioComplejo, n: int = None) -> SecuenciaSchur:
    """
    Recursión inversa: z φ_k = ρ_k^{-1} (φ_{k+1} + γ̄_k φ*_{k+1}).
    Recupera γ_0..γ_{n-1} a partir de φ_n.
    """
    n = phi.grado_nominal if n is None else n
    actual = PolinomioComplejo(phi.coeficientes, n).coeficientes.copy()
    gamma = np.zeros(n, dtype=complex)
    for k in range(n - 1, -1, -1):
        kappa = actual[k + 1]
        if abs(kappa) == 0:
            raise ErrorParametros(f"Coeficiente principal nulo en el grado {k + 1}")
        g = -np.conj(actual[0] / kappa)
        if abs(g) >= 1.0:
            raise ErrorParametros(f"Recursión inversa con |γ_{k}| = {abs(g)!r} >= 1")
        r = np.sqrt(1.0 - abs(g) ** 2)
        estrella = np.conj(actual[::-1])
        z_phi = (actual + np.conj(g) * estrella) / r
        gamma[k] = g
        actual = z_phi[1:]
    return SecuenciaSchur(gamma)


def wronskian_check(gamma: SecuenciaSchur, n: int) -> Diagnostico:
    """φ_n ψ_n* + φ_n* ψ_n = 2 z^n (coeficiente a coeficiente)"""
    par = szego_recursion(gamma, n)[n]
    segunda = second_kind(gamma, n)[n]
    suma = par.phi * segunda.phi_estrella + par.phi_estrella * segunda.phi
    esperado = PolinomioComplejo.monomio(n, 2.0, suma.grado_nominal)
    residuo = suma.distancia(esperado)
    umbral = TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * max(1.0, gamma.kappa(n) ** 2) * (n + 1)
    diagnostico = Diagnostico('wronskiano')
    diagnostico.agregar('identidad_wronskiano', residuo <= umbral, residuo, umbral,
                        'φ_n ψ_n* + φ_n* ψ_n = 2 z^n')
    return diagnostico


# ======================================================================
# Oráculo de Gram-Schmidt
# ======================================================================

def _gram_toeplitz(mu: MedidaCircular, n: int) -> np.ndarray:
    """G_{ij} = ∫ z^i z̄^j dµ = c_{j-i}"""
    c = momentos(mu, n)
    return linalg.toeplitz(np.conj(c), c)


def _gram_schmidt(mu: MedidaCircular, n: int) -> Tuple[List[PolinomioComplejo], np.ndarray]:
    """
    Gram-Schmidt modificado con reortogonalización sobre las muestras de la
    medida (malla con pesos y átomos como filas con peso √m). Cada nuevo
    vector parte de z·Φ_{k-1}, que es mónico de grado k.

    Para una medida de Bernstein-Szegő con generador conocido se ortogonaliza
    en precisión extendida sobre los momentos exactos.
    """
    if mu.es_bernstein_szego:
        coeficientes, normas = monicos_por_cholesky(momentos_bernstein_szego(mu.generador.coeficientes, n), n)
        logger.debug(f"Oráculo de Cholesky en precisión extendida n={n}")
        return [PolinomioComplejo(c, k) for k, c in enumerate(coeficientes)], normas

    mu.malla.verificar_grado(n)
    gram = _gram_toeplitz(mu, n)
    try:
        linalg.cholesky(gram, lower=True)
    except linalg.LinAlgError as exc:
        raise ErrorOraculo(f"Matriz de Gram no definida positiva hasta grado {n}: {exc}") from exc
    condicion = float(np.linalg.cond(gram))

    raiz_pesos = np.sqrt(mu.pesos * mu.malla.paso)
    puntos = mu.malla.puntos
    if mu.atomos:
        raiz_pesos = np.concatenate([raiz_pesos, np.sqrt(mu.masas_atomos)])
        puntos = np.concatenate([puntos, mu.puntos_atomos])

    vectores = np.zeros((n + 1, raiz_pesos.size), dtype=complex)
    coeficientes = np.zeros((n + 1, n + 1), dtype=complex)
    normas = np.zeros(n + 1)
    vectores[0] = raiz_pesos
    coeficientes[0, 0] = 1.0
    normas[0] = float(np.vdot(raiz_pesos, raiz_pesos).real)
    if not normas[0] > 0:
        raise ErrorOraculo("Medida de masa nula")

    for k in range(1, n + 1):
        v = puntos * vectores[k - 1]
        c = np.roll(coeficientes[k - 1], 1)
        for _ in range(2):
            for j in range(k):
                h = np.vdot(vectores[j], v) / normas[j]
                v = v - h * vectores[j]
                c = c - h * coeficientes[j]
        norma = float(np.vdot(v, v).real)
        if norma <= TOLERANCIAS['ESCALA_CONDICION'] * normas[0] * 10:
            raise ErrorOraculo(f"Gram-Schmidt degenerado en el grado {k} (norma {norma:.3e})")
        c[k] = 1.0
        vectores[k] = v
        coeficientes[k] = c
        normas[k] = norma

    producto = vectores.conj() @ vectores.T
    escala = np.sqrt(np.outer(normas, normas))
    fuera_diagonal = np.abs(producto / escala - np.eye(n + 1))
    umbral = 1e-9 * np.sqrt(condicion)
    if fuera_diagonal.max() > umbral:
        raise ErrorOraculo(
            f"Ortogonalidad insuficiente: {fuera_diagonal.max():.3e} > {umbral:.3e} (cond {condicion:.3e})"
        )
    logger.debug(f"Oráculo Gram-Schmidt n={n}, cond={condicion:.3e}")
    monicos = [PolinomioComplejo(coeficientes[k, :k + 1], k) for k in range(n + 1)]
    return monicos, normas


def monic_gram_schmidt(mu: MedidaCircular, n: int) -> List[PolinomioComplejo]:
    """Φ_0..Φ_n mónicos y ortogonales en L²(µ)"""
    monicos, _ = _gram_schmidt(mu, n)
    return monicos


def orthonormal_gram_schmidt(mu: MedidaCircular, n: int) -> List[PolinomioComplejo]:
    """φ_k = Φ_k / ‖Φ_k‖_{L²(µ)}"""
    monicos, normas = _gram_schmidt(mu, n)
    return [Phi / np.sqrt(norma) for Phi, norma in zip(monicos, normas)]


def gram_condition(mu: MedidaCircular, n: int) -> float:
    return float(np.linalg.cond(_gram_toeplitz(mu, n)))


def tolerancia_oraculo(mu: MedidaCircular, n: int, base: float = None) -> float:
    """
    base · max(1, ESCALA_CONDICION · cond(Gram)) sobre la malla. Con generador
    exacto el oráculo no pierde dígitos y sólo queda el redondeo de la
    recursión en doble precisión, de orden ε κ_N² (n + 1) con κ_N² = |Q(0)|² / masa.
    """
    base = TOLERANCIAS['COEFICIENTES'] if base is None else base
    if mu.es_bernstein_szego:
        kappa2 = abs(mu.generador.coeficiente(0)) ** 2 / mu.masa_total
        return max(base, TOLERANCIAS['ESCALA_CONDICION'] * kappa2 * (n + 1))
    return base * max(1.0, TOLERANCIAS['ESCALA_CONDICION'] * gram_condition(mu, n))


def verblunsky_from_measure(mu: MedidaCircular, n: int) -> SecuenciaSchur:
    """γ_k = −conj(Φ_{k+1}(0)), k = 0..n-1"""
    monicos = monic_gram_schmidt(mu, n)
    gamma = np.array([-np.conj(Phi.coeficiente(0)) for Phi in monicos[1:]], dtype=complex)
    if gamma.size and np.max(np.abs(gamma)) >= 1.0:
        raise ErrorOraculo(f"Extracción con |γ| = {np.max(np.abs(gamma))!r} >= 1")
    return SecuenciaSchur(gamma)


# ======================================================================
# Núcleos, raíces y medidas de Bernstein-Szegő
# ======================================================================

def cd_kernel(pares: Sequence[ParOrtonormal], xi: complex, z, n: int):
    """K_n(ξ, z) = Σ_{j<=n} conj(φ_j(ξ)) φ_j(z)"""
    if n >= len(pares):
        raise ErrorParametros(f"cd_kernel: se requieren φ_0..φ_{n}")
    total = 0j if np.ndim(z) == 0 else np.zeros(np.shape(z), dtype=complex)
    for par in pares[:n + 1]:
        total = total + np.conj(par.phi.evaluar(xi)) * par.phi.evaluar(z)
    return total


def kernel_matrix(gamma: SecuenciaSchur, n: int, puntos) -> np.ndarray:
    """Matriz K_n(p_a, p_b) vía la recursión puntual"""
    valores, _ = evaluate_recursion(gamma, n, puntos)
    return valores.conj().T @ valores


def locate_roots(Q: PolinomioComplejo) -> RaicesUbicadas:
    """
    Ubica las raíces de Q respecto de la circunferencia. Para grado pequeño
    decide la compañera (autovalores, con Newton en precisión extendida para
    los que quedan a menos de RAIZ_AMBIGUA de |z| = 1); si no, el número de
    vueltas de Q sobre una malla refinada.
    """
    n = Q.grado
    if n == 0:
        return RaicesUbicadas(0, 0, 0, 'constante', 1.0)
    coefs = Q.coeficientes[:n + 1]
    if n <= PARAMETROS_POR_DEFECTO['GRADO_MAXIMO_COMPANERA']:
        raices = P.polyroots(coefs)
        distancias = np.abs(raices) - 1.0
        for k in np.nonzero(np.abs(distancias) < TOLERANCIAS['RAIZ_AMBIGUA'])[0]:
            distancias[k] = pulir_raiz(coefs, raices[k])
        umbral = TOLERANCIAS['RAIZ_EN_CIRCUNFERENCIA']
        sobre = int(np.sum(np.abs(distancias) < umbral))
        dentro = int(np.sum(distancias <= -umbral))
        return RaicesUbicadas(dentro, sobre, n - dentro - sobre, 'companera',
                              float(np.min(np.abs(distancias))))
    tamano = PARAMETROS_POR_DEFECTO['REFINAMIENTO_VUELTAS'] * MallaUnitaria.para_grado(n).tamano
    valores = Q.en_malla(tamano)
    modulo = np.abs(valores)
    modulo_minimo = float(modulo.min() / modulo.max())
    incrementos = np.angle(np.roll(valores, -1) / valores)
    dentro = int(round(float(np.sum(incrementos)) / DOS_PI))
    sobre = 1 if modulo_minimo < 1e-12 else 0
    return RaicesUbicadas(dentro, sobre, n - dentro - sobre, 'vueltas', modulo_minimo)


def bernstein_szego_measure(par: ParOrtonormal, malla: MallaUnitaria = None) -> MedidaCircular:
    """dµ_N = dθ / (2π |φ_N*|²)"""
    N = par.grado
    raices = locate_roots(par.phi)
    if raices.dentro != N:
        raise ErrorMedida(
            f"φ_{N}* se anula en el disco cerrado ({raices.dentro} de {N} raíces de φ_{N} dentro)"
        )
    malla = malla or MallaUnitaria.para_grado(N)
    estrella = par.phi_estrella

    def densidad(theta):
        return 1.0 / (DOS_PI * np.abs(estrella.evaluar(np.exp(1j * np.asarray(theta)))) ** 2)

    pesos = 1.0 / (DOS_PI * np.abs(estrella.en_malla(malla.tamano)) ** 2)
    generador = estrella if N <= PARAMETROS_POR_DEFECTO['GRADO_MAXIMO_EXACTO'] else None
    return MedidaCircular(malla, pesos, (), densidad, etiqueta=f'bernstein_szego_{N}', generador=generador)


def integral_inversa(Q: PolinomioComplejo, malla: MallaUnitaria) -> float:
    """
    (1/2π) ∫ dθ / |Q|². Exacta por paso descendente cuando Q tiene sus raíces
    en el disco abierto y grado <= GRADO_MAXIMO_EXACTO; si no, en la malla.
    """
    n = Q.grado
    if n <= PARAMETROS_POR_DEFECTO['GRADO_MAXIMO_EXACTO'] and abs(Q.coeficiente(n)) > 0:
        integral = integral_inversa_cuadrado(Q.coeficientes[:n + 1])
        if integral is not None:
            return integral
    modulo2 = np.abs(Q.en_malla(malla.tamano)) ** 2
    return float('inf') if np.any(modulo2 == 0) else float(np.mean(1.0 / modulo2))


def validate_orthonormal_candidate(Q: PolinomioComplejo) -> Diagnostico:
    """
    Tres condiciones: raíces en el disco abierto, ∫ dθ/(2π|Q|²) = 1 y
    coeficiente principal positivo. Registra el factor que corrige la normalización.
    """
    n = Q.grado
    if n < 1:
        raise ErrorParametros("El candidato debe tener grado >= 1")
    diagnostico = Diagnostico('candidato_ortonormal')
    raices = locate_roots(Q)
    diagnostico.agregar('raices_en_disco', raices.dentro == n, raices.dentro, n,
                        f'Raíces dentro del disco abierto ({raices.metodo})')
    diagnostico.medir('raices_fuera', raices.fuera)
    diagnostico.medir('raices_sobre', raices.sobre)

    integral = integral_inversa(Q, MallaUnitaria.para_grado(n))
    umbral = TOLERANCIAS['INTEGRAL']
    diagnostico.agregar('normalizacion', abs(integral - 1.0) <= umbral, integral, umbral,
                        '∫ dθ / (2π |P|²) = 1')
    diagnostico.medir('factor_reescala', float(np.sqrt(integral)))

    principal = Q.coeficiente(n)
    diagnostico.agregar('coeficiente_principal',
                        abs(principal.imag) <= TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * abs(principal)
                        and principal.real > 0,
                        principal, 0.0, 'Coeficiente principal real y positivo')
    return diagnostico


# ======================================================================
# Carathéodory y Szegő
# ======================================================================

def caratheodory_from_measure(mu: MedidaCircular, z):
    """F(z) = ∫ (e^{iθ} + z) / (e^{iθ} − z) dµ(θ), |z| < 1"""
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(np.abs(z_arr) >= 1.0):
        raise ErrorParametros("caratheodory_from_measure requiere |z| < 1")
    puntos = mu.malla.puntos
    kernel = (puntos[None, :] + z_arr[:, None]) / (puntos[None, :] - z_arr[:, None])
    valores = mu.malla.paso * (kernel @ mu.pesos)
    if mu.atomos:
        xi = mu.puntos_atomos
        valores = valores + ((xi[None, :] + z_arr[:, None]) / (xi[None, :] - z_arr[:, None])) @ mu.masas_atomos
    return complex(valores[0]) if np.ndim(z) == 0 else valores


def _log_peso_analitico(mu: MedidaCircular) -> np.ndarray:
    """Coeficientes de h analítica con Re h = log(2πσ′) en la frontera"""
    pesos = mu.pesos
    if pesos.min() <= 0:
        raise ErrorMedida("La función de Szegő requiere peso positivo en toda la malla")
    N = mu.malla.tamano
    a = np.fft.fft(np.log(DOS_PI * pesos)) / N
    h = np.zeros(N // 2 + 1, dtype=complex)
    h[0] = a[0].real
    h[1:N // 2] = 2.0 * a[1:N // 2]
    h[N // 2] = a[N // 2] if N % 2 == 0 else 2.0 * a[N // 2]
    return h


def szego_function(mu: MedidaCircular, z):
    """
    Función exterior Π con |Π|^{-2} = 2πσ′ en la frontera y Π(0) > 0:
    Π = exp(−h/2), h analítica con Re h = log(2πσ′).
    """
    z_arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(z_arr) >= 1.0):
        raise ErrorParametros("szego_function requiere |z| < 1; use szego_boundary en la frontera")
    valores = np.exp(-0.5 * P.polyval(z_arr, _log_peso_analitico(mu)))
    return complex(valores) if np.ndim(valores) == 0 else valores


def szego_boundary(mu: MedidaCircular) -> np.ndarray:
    """Valores de frontera de Π sobre la malla de µ"""
    h = _log_peso_analitico(mu)
    return np.exp(-0.5 * mu.malla.tamano * np.fft.ifft(h, n=mu.malla.tamano))


def szego_ratio_check(mu: MedidaCircular, n: int, delta: float,
                      gamma: Optional[SecuenciaSchur] = None) -> Diagnostico:
    """√δ <= |Φ_n / φ_n| = 1/κ_n <= 1"""
    diagnostico = Diagnostico('cociente_szego')
    certificado = steklov_check(mu, delta)
    diagnostico.medir('certificado_steklov', certificado.a_dict())
    if gamma is None:
        gamma = verblunsky_from_measure(mu, n)
    cociente = 1.0 / gamma.kappa(n)
    tol = TOLERANCIAS['INTEGRAL']
    diagnostico.agregar('cota_superior', cociente <= 1.0 + tol, cociente, 1.0, '1/κ_n <= 1')
    diagnostico.agregar('cota_inferior', cociente >= np.sqrt(delta) - tol, cociente, float(np.sqrt(delta)),
                        '1/κ_n >= √δ')
    return diagnostico


def star_consistency(pares: Sequence[ParOrtonormal]) -> float:
    """Máxima distancia relativa entre star(φ_k, k) y el φ_k* de la recursión"""
    return max(star(par.phi, par.grado).distancia_relativa(par.phi_estrella) for par in pares)
