"""
Fórmula de Rakhmanov para agregar masas puntuales y la construcción sobre
raíces de la unidad con fondo de Lebesgue.

Todo se expresa con polinomios mónicos Φ_n; las versiones ortonormales se
obtienen dividiendo por la norma (o multiplicando por κ_n).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from polinomios.configuracion import ConfiguracionLaboratorio
from polinomios.constants import COMPARADORES, PARAMETROS_POR_DEFECTO, TOLERANCIAS
from polinomios.excepciones import ErrorParametros, ErrorRaices, ErrorVerificacion
from polinomios.nucleo.diagnosticos import Diagnostico
from polinomios.nucleo.medida_circular import DOS_PI, Atomo, MallaUnitaria, MedidaCircular, normalize
from polinomios.nucleo.opuc import (
    SecuenciaSchur,
    evaluate_recursion,
    szego_recursion,
    verblunsky_from_measure,
)
from polinomios.nucleo.polinomio import PolinomioComplejo, maximo_en_circunferencia, star
from polinomios.reportes import FilaCrecimiento, ReporteCrecimiento

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ColocacionMasas:
    puntos: np.ndarray
    masas: np.ndarray
    fondo: MedidaCircular

    def __post_init__(self):
        puntos = np.atleast_1d(np.asarray(self.puntos, dtype=complex)).copy()
        masas = np.atleast_1d(np.asarray(self.masas, dtype=float)).copy()
        if puntos.shape != masas.shape:
            raise ErrorParametros(f"{puntos.size} puntos y {masas.size} masas")
        if np.any(np.abs(np.abs(puntos) - 1.0) > 1e-12):
            raise ErrorParametros("Los puntos de masa deben estar en la circunferencia unidad")
        if np.any(masas < 0):
            raise ErrorParametros("Masas negativas")
        for j in range(puntos.size):
            if np.any(np.abs(puntos[j + 1:] - puntos[j]) <= 1e-14):
                raise ErrorParametros(f"Punto repetido: {puntos[j]}")
        object.__setattr__(self, 'puntos', puntos)
        object.__setattr__(self, 'masas', masas)

    @classmethod
    def en_raices_de_la_unidad(cls, n: int, indices: Iterable[int], masas, fondo: MedidaCircular) -> 'ColocacionMasas':
        indices = np.asarray(list(indices))
        puntos = np.exp(2j * np.pi * indices / n)
        masas = np.broadcast_to(np.asarray(masas, dtype=float), puntos.shape)
        return cls(puntos, masas, fondo)

    def __len__(self):
        return int(self.puntos.size)

    def medida_perturbada(self) -> MedidaCircular:
        """η = µ + Σ m_k δ_{ξ_k}"""
        atomos = [Atomo.en_punto(xi, m) for xi, m in zip(self.puntos, self.masas)]
        return self.fondo.con_atomos(atomos)


@dataclass(frozen=True, eq=False)
class PolinomioRakhmanov:
    Phi: PolinomioComplejo
    Phi_estrella: PolinomioComplejo
    d: Optional[np.ndarray] = None
    epsilon: Optional[float] = None

    @property
    def grado(self) -> int:
        return self.Phi.grado_nominal


# ----------------------------------------------------------------------
# Polinomios del fondo
# ----------------------------------------------------------------------

def _parametros_fondo(fondo: MedidaCircular, n: int) -> Tuple[SecuenciaSchur, float]:
    """γ de µ/‖µ‖ y la masa ‖µ‖"""
    if fondo.etiqueta == 'lebesgue' and not fondo.atomos:
        return SecuenciaSchur.nula(n), fondo.masa_total
    normalizada, alfa = normalize(fondo)
    return verblunsky_from_measure(normalizada, n), alfa


def _kernel_en(gamma: SecuenciaSchur, alfa: float, n: int, xi, z) -> np.ndarray:
    """K_{n-1}(ξ_a, z_b; µ) con K(µ) = K(µ/α)/α"""
    valores_xi, _ = evaluate_recursion(gamma, n - 1, xi)
    valores_z, _ = evaluate_recursion(gamma, n - 1, z)
    return (valores_xi.conj().T @ valores_z) / alfa


def verify_kernel_condition(colocacion: ColocacionMasas, n: int) -> float:
    """max_{j != l} |K_{n-1}(ξ_j, ξ_l)|"""
    if len(colocacion) < 2:
        return 0.0
    gamma, alfa = _parametros_fondo(colocacion.fondo, n)
    kernel = _kernel_en(gamma, alfa, n, colocacion.puntos, colocacion.puntos)
    fuera = kernel - np.diag(np.diag(kernel))
    return float(np.max(np.abs(fuera)))


def colocacion_admisible(colocacion: ColocacionMasas, n: int) -> bool:
    return verify_kernel_condition(colocacion, n) <= TOLERANCIAS['KERNEL_POR_N'] * n


def kernel_roots(z_gorro: complex, n: int, mu: MedidaCircular) -> np.ndarray:
    """
    Las n−1 raíces de ξ -> K_{n-1}(ξ, ẑ; µ) sobre la circunferencia.
    Barrido en 64·n ángulos, refinamiento acotado de los mínimos locales de |K|²
    y aceptación si |K(ξ, ẑ)| / K(ẑ, ẑ) < tolerancia.
    """
    if n < 2:
        raise ErrorParametros("kernel_roots requiere n >= 2")
    gamma, alfa = _parametros_fondo(mu, n)
    z_gorro = complex(z_gorro)
    base, _ = evaluate_recursion(gamma, n - 1, [z_gorro])
    base = base[:, 0]
    diagonal = float(np.vdot(base, base).real)

    def modulo(theta):
        valores, _ = evaluate_recursion(gamma, n - 1, np.exp(1j * np.atleast_1d(theta)))
        return np.abs(valores.conj().T @ base) / diagonal

    tamano = PARAMETROS_POR_DEFECTO['BARRIDO_RAICES_POR_N'] * n
    angulos = DOS_PI * np.arange(tamano) / tamano + float(np.angle(z_gorro))
    barrido = modulo(angulos)
    paso = DOS_PI / tamano
    minimos = np.nonzero((barrido <= np.roll(barrido, 1)) & (barrido <= np.roll(barrido, -1)))[0]

    raices: List[float] = []
    tolerancia = TOLERANCIAS['RAIZ_KERNEL']
    for k in minimos:
        if k == 0:
            continue
        resultado = optimize.minimize_scalar(
            lambda t: float(modulo(t)[0] ** 2),
            bounds=(angulos[k] - paso, angulos[k] + paso),
            method='bounded', options={'xatol': 1e-14},
        )
        theta = float(resultado.x)
        if np.sqrt(resultado.fun) >= tolerancia:
            continue
        if any(abs(np.angle(np.exp(1j * (theta - previo)))) < paso / 2 for previo in raices):
            continue
        raices.append(theta)

    if len(raices) != n - 1:
        raise ErrorRaices(f"Se esperaban {n - 1} raíces de K_{n - 1}(·, ẑ) y se encontraron {len(raices)}")
    relativos = np.mod(np.array(raices) - float(np.angle(z_gorro)), DOS_PI)
    orden = np.argsort(relativos)
    logger.debug(f"kernel_roots: {n - 1} raíces localizadas (barrido {tamano})")
    return np.exp(1j * np.array(raices)[orden])


# ----------------------------------------------------------------------
# Fórmula de Rakhmanov
# ----------------------------------------------------------------------

def rakhmanov_update(colocacion: ColocacionMasas, n: int) -> PolinomioRakhmanov:
    """
    Φ_n(z, η) = Φ_n(z, µ) − Σ_k m_k Φ_n(ξ_k, µ) K_{n-1}(ξ_k, z) / (1 + m_k K_{n-1}(ξ_k, ξ_k))
    """
    if len(colocacion) >= n:
        raise ErrorParametros(f"Se requieren menos masas ({len(colocacion)}) que el grado ({n})")
    desvio = verify_kernel_condition(colocacion, n)
    if desvio > TOLERANCIAS['KERNEL_POR_N'] * n:
        raise ErrorParametros(f"Condición del kernel violada: max |K_{n - 1}(ξ_j, ξ_l)| = {desvio:.3e}")

    gamma, alfa = _parametros_fondo(colocacion.fondo, n)
    pares = szego_recursion(gamma, n)
    Phi_mu = pares[n].monico()
    # Filas: coeficientes de φ_j(µ/α), j = 0..n-1, a longitud n
    coefs = np.array([PolinomioComplejo(p.phi.coeficientes, n - 1).coeficientes for p in pares[:n]])
    valores_xi, _ = evaluate_recursion(gamma, n - 1, colocacion.puntos)

    correccion = np.zeros(n, dtype=complex)
    for k, (xi, m) in enumerate(zip(colocacion.puntos, colocacion.masas)):
        if m == 0:
            continue
        kernel_z = valores_xi[:, k].conj() @ coefs / alfa
        kernel_diag = float(np.vdot(valores_xi[:, k], valores_xi[:, k]).real) / alfa
        correccion += m * Phi_mu.evaluar(xi) * kernel_z / (1.0 + m * kernel_diag)

    Phi = Phi_mu - PolinomioComplejo(correccion, n)
    return PolinomioRakhmanov(Phi, star(Phi, n))


def mass_monotonicity(colocacion: ColocacionMasas, n: int) -> Diagnostico:
    """|Φ_n(ξ_k, η)| <= |Φ_n(ξ_k, µ)| en cada punto con masa"""
    gamma, _ = _parametros_fondo(colocacion.fondo, n)
    Phi_mu = szego_recursion(gamma, n)[n].monico()
    Phi_eta = rakhmanov_update(colocacion, n).Phi
    antes = np.abs(Phi_mu.evaluar(colocacion.puntos))
    despues = np.abs(Phi_eta.evaluar(colocacion.puntos))
    exceso = float(np.max(despues - antes * (1.0 + TOLERANCIAS['IDENTIDAD_ALGEBRAICA'])))
    diagnostico = Diagnostico('monotonia_masa')
    diagnostico.agregar('monotonia', exceso <= TOLERANCIAS['IDENTIDAD_ALGEBRAICA'], exceso, 0.0,
                        '|Φ_n(ξ_k, η)| <= |Φ_n(ξ_k, µ)|')
    diagnostico.medir('antes', antes)
    diagnostico.medir('despues', despues)
    return diagnostico


# ----------------------------------------------------------------------
# Construcción sobre raíces de la unidad
# ----------------------------------------------------------------------

def d_coefficients(n: int) -> np.ndarray:
    """
    d_1..d_n para m = n/2 masas en ξ_j = e^{2πij/n}, j < m.
    d_l = −i e^{iπl/n} / sin(πl/n) para l impar, 0 para l par < n, d_n = m.
    Se calcula la mitad l <= n/2 y se completa con d_{n-l} = conj(d_l).
    """
    if n < 2 or n % 2:
        raise ErrorParametros(f"d_coefficients requiere n par >= 2 (n = {n})")
    m = n // 2
    d = np.zeros(n + 1, dtype=complex)
    l = np.arange(1, m + 1, 2)
    d[l] = -1j * np.exp(1j * np.pi * l / n) / np.sin(np.pi * l / n)
    if m % 2:
        d[m] = d[m].real
    d[n - l[l < m]] = np.conj(d[l[l < m]])
    d[n] = m
    return d[1:]


def d_coefficients_directo(n: int) -> np.ndarray:
    """d_l = Σ_{j<m} ξ_j^{-l} por FFT del indicador de las m primeras raíces"""
    if n < 2 or n % 2:
        raise ErrorParametros(f"d_coefficients requiere n par >= 2 (n = {n})")
    indicador = np.zeros(n)
    indicador[:n // 2] = 1.0
    transformada = np.fft.fft(indicador)
    return np.concatenate([transformada[1:], transformada[:1]])


def lebesgue_construction(n: int, epsilon: float, malla: MallaUnitaria = None) -> Tuple[PolinomioRakhmanov, MedidaCircular]:
    """
    η = dθ/2π + Σ_{k<m} (ε/m) δ_{ξ_k} y la forma cerrada
    Φ_n* = 1 − (ε/m)/(1 + 2ε) · Σ d_l z^l.
    """
    if not 0 < epsilon < 1:
        raise ErrorParametros(f"ε debe estar en (0, 1) (ε = {epsilon})")
    d = d_coefficients(n)
    m = n // 2
    c = (epsilon / m) / (1.0 + 2.0 * epsilon)
    coefs = np.concatenate([[1.0 + 0j], -c * d])
    Phi_estrella = PolinomioComplejo(coefs, n)
    Phi = star(Phi_estrella, n)

    diferencia = Phi_estrella - Phi
    constante = (1.0 + 3.0 * epsilon) / (1.0 + 2.0 * epsilon)
    esperado = PolinomioComplejo.constante(constante, n) - PolinomioComplejo.monomio(n, constante, n)
    residuo = diferencia.distancia(esperado)
    if residuo > TOLERANCIAS['IDENTIDAD_ALGEBRAICA']:
        raise ErrorVerificacion(
            f"Φ_n* − Φ_n difiere de {constante:.6f}(1 − z^n) en {residuo:.3e}",
            [{'suite': 'formula_rakhmanov', 'criterio': 'diferencia_cerrada',
              'descripcion': 'Φ_n* − Φ_n', 'valor': residuo,
              'umbral': TOLERANCIAS['IDENTIDAD_ALGEBRAICA']}],
        )

    malla = malla or MallaUnitaria.para_grado(n)
    atomos = [Atomo(DOS_PI * k / n, epsilon / m) for k in range(m)]
    eta = MedidaCircular.lebesgue(malla).con_atomos(atomos)
    return PolinomioRakhmanov(Phi, Phi_estrella, d, epsilon), eta


def _fila_rakhmanov(epsilon: float, n: int) -> Tuple[FilaCrecimiento, dict]:
    polinomio, _ = lebesgue_construction(n, epsilon, MallaUnitaria(4 * (n + 1)))
    config = ConfiguracionLaboratorio.obtener()
    tamano = max(config['BARRIDO_MINIMO'], config['BARRIDO_FACTOR'] * n)
    ventana = 10.0 / n
    supremo, theta = maximo_en_circunferencia(polinomio.Phi, tamano, ((0.0, ventana), (np.pi, ventana)))
    fila = FilaCrecimiento(
        n=n,
        epsilon=epsilon,
        sup_norm=supremo,
        argmax_theta=theta,
        comparator=1.0 + epsilon * np.log(n),
        steklov_delta=1.0 / (1.0 + epsilon),
    )
    extras = {
        'valor_en_uno': abs(polinomio.Phi.evaluar(1.0)),
        'distancia_maximizador_por_n': n * min(abs(theta), abs(np.pi - abs(theta))),
    }
    return fila, extras


def growth_table(epsilon: float, lista_n: Sequence[int], trabajadores: int = None) -> ReporteCrecimiento:
    """sup |Φ_n| contra 1 + ε log n; filas independientes en paralelo"""
    impares = [n for n in lista_n if n % 2]
    if impares:
        raise ErrorParametros(f"growth_table requiere n pares: {impares}")
    trabajadores = trabajadores or ConfiguracionLaboratorio.valor('TRABAJADORES')
    reporte = ReporteCrecimiento('rakhmanov', COMPARADORES['rakhmanov'])
    with ThreadPoolExecutor(max_workers=max(1, int(trabajadores))) as pool:
        resultados = list(pool.map(lambda n: _fila_rakhmanov(epsilon, n), lista_n))
    for fila, extras in resultados:
        reporte.agregar(fila)
        reporte.extras[str(fila.n)] = extras
        logger.info(f"rakhmanov n={fila.n}: sup={fila.sup_norm:.6f}, θ*={fila.argmax_theta:.3e}")
    return reporte
