"""
Construcción de medidas de clase Steklov con ‖φ_n‖_∞ ∼ ε log n.

    l      : símbolo escalón (+1 en (0, π), −1 en (π, 2π))
    L      : transformada de Cauchy de l, L(z) = Σ_{k impar} 4/(iπk) z^k
    M_n    : suavizado de Fejér de L (grado n−1)
    D_n    : M_n + b
    F̃      : 1 − 2εM_n
    φ_n*   : a(1 + ε(D_n + D_n*)),  φ_n = a(z^n + ε(D_n + D_n*))

El peso se obtiene pegando φ_n con F̃ y se contrasta con la forma cerrada
del denominador 2a(1 + εb(1 + z^n) + 2εz^n Re M_n).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import special

from polinomios.configuracion import ConfiguracionLaboratorio
from polinomios.constants import COMPARADORES, PARAMETROS_POR_DEFECTO, TOLERANCIAS
from polinomios.excepciones import ErrorParametros, ErrorVerificacion
from polinomios.nucleo.diagnosticos import Diagnostico
from polinomios.nucleo.medida_circular import DOS_PI, MallaUnitaria, MedidaCircular
from polinomios.nucleo.opuc import FuncionCaratheodory, ParOrtonormal, locate_roots
from polinomios.nucleo.pegado import EntradaPegado, decoupling_diagnostics, glued_weight
from polinomios.nucleo.polinomio import PolinomioComplejo, maximo_en_circunferencia, star
from polinomios.nucleo.rakhmanov import d_coefficients, lebesgue_construction
from polinomios.reportes import FilaCrecimiento, ReporteCrecimiento

logger = logging.getLogger(__name__)


# ======================================================================
# Símbolo escalón, transformada de Cauchy y suavizado de Fejér
# ======================================================================

def step_symbol(theta):
    """l(θ); vale 0 en los saltos θ ∈ {0, π}"""
    theta = np.mod(np.asarray(theta, dtype=float), DOS_PI)
    valores = np.where((theta > 0) & (theta < np.pi), 1.0, np.where(theta > np.pi, -1.0, 0.0))
    return float(valores) if valores.ndim == 0 else valores


def coeficientes_L(K: int) -> np.ndarray:
    """Coeficientes de Taylor 0..K de L: 4/(iπk) para k impar, 0 en otro caso"""
    coefs = np.zeros(K + 1, dtype=complex)
    k = np.arange(1, K + 1, 2)
    coefs[k] = 4.0 / (1j * np.pi * k)
    return coefs


def cauchy_transform_step(z, frontera: bool = False):
    """
    L(z) = (1/2π) ∫ C(z, e^{iθ}) l(θ) dθ = −(4i/π) arctanh(z).
    Con frontera=True acepta |z| = 1 (límite radial, z != ±1).
    """
    z_arr = np.asarray(z, dtype=complex)
    modulo = np.abs(z_arr)
    if np.any(modulo > 1.0) or (not frontera and np.any(modulo >= 1.0)):
        raise ErrorParametros("cauchy_transform_step requiere |z| < 1")
    valores = -4j / np.pi * np.arctanh(z_arr)
    return complex(valores) if valores.ndim == 0 else valores


def cauchy_transform_numerico(z, malla: MallaUnitaria):
    """Cuadratura directa de la integral de Cauchy sobre la malla"""
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    puntos = malla.puntos
    simbolo = step_symbol(malla.angulos)
    kernel = (puntos[None, :] + z_arr[:, None]) / (puntos[None, :] - z_arr[:, None])
    valores = (kernel @ simbolo) / malla.tamano
    return complex(valores[0]) if np.ndim(z) == 0 else valores


@dataclass(frozen=True, eq=False)
class PolinomioExplosionLog:
    """M_n: M_n(0) = 0, media de Re M_n nula, ‖Re M_n‖_∞ <= cota_re"""
    M: PolinomioComplejo
    n: int
    cota_re: float = 1.0

    def re_en_malla(self, malla: MallaUnitaria) -> np.ndarray:
        return self.M.en_malla(malla.tamano).real

    def im_en(self, theta) -> np.ndarray:
        return np.imag(self.M.evaluar(np.exp(1j * np.asarray(theta))))

    def verificar(self, malla: MallaUnitaria) -> Diagnostico:
        re_M = self.re_en_malla(malla)
        diagnostico = Diagnostico('polinomio_explosion_log')
        tol = TOLERANCIAS['IDENTIDAD_ALGEBRAICA']
        diagnostico.agregar('anula_en_cero', abs(self.M.coeficiente(0)) <= tol, abs(self.M.coeficiente(0)), tol,
                            'M_n(0) = 0')
        media = float(np.mean(re_M))
        diagnostico.agregar('media_re_nula', abs(media) <= tol, media, tol, '(1/2π) ∫ Re M_n dθ = 0')
        cota = self.cota_re + TOLERANCIAS['MARGEN_RE_M']
        sup = float(np.max(np.abs(re_M)))
        diagnostico.agregar('re_acotada', sup <= cota, sup, cota, '‖Re M_n‖_∞ <= C')
        diagnostico.medir('im_en_pi_sobre_n', float(np.abs(self.im_en(np.pi / self.n))))
        diagnostico.medir('im_en_uno_sobre_n', float(np.abs(self.im_en(1.0 / self.n))))
        return diagnostico


def fejer_smooth(coefs_L: np.ndarray, n: int) -> PolinomioExplosionLog:
    """coeff(M_n, k) = (1 − k/n) coeff(L, k), 1 <= k <= n−1"""
    if n < 2:
        raise ErrorParametros(f"fejer_smooth requiere n >= 2 (n = {n})")
    coefs = np.zeros(n, dtype=complex)
    k = np.arange(1, n)
    L = np.concatenate([np.asarray(coefs_L, dtype=complex), np.zeros(max(0, n - len(coefs_L)), dtype=complex)])
    coefs[1:] = (1.0 - k / n) * L[1:n]
    return PolinomioExplosionLog(PolinomioComplejo(coefs, n - 1), n)


def fejer_smooth_numerico(n: int, malla: MallaUnitaria) -> np.ndarray:
    """Re M_n = F_n ∗ l sobre la malla, por convolución discreta (FFT del símbolo)"""
    N = malla.tamano
    espectro = np.fft.fft(step_symbol(malla.angulos))
    k = np.fft.fftfreq(N, d=1.0 / N)
    fejer = np.clip(1.0 - np.abs(k) / n, 0.0, None)
    return np.fft.ifft(espectro * fejer).real


def bounded_sine_sum(lista_N: Sequence[int], tamano: int = None) -> Dict[int, float]:
    """sup_θ |Σ_{j<=N} sin(jθ)/j| por N sobre una malla"""
    resultado = {}
    for N in lista_N:
        tamano_malla = tamano or max(ConfiguracionLaboratorio.valor('BARRIDO_MINIMO'), 32 * N)
        j = np.arange(1, N + 1)
        coefs = np.concatenate([[0.0], 1.0 / j])
        valores = PolinomioComplejo(coefs, N).en_malla(tamano_malla).imag
        resultado[int(N)] = float(np.max(np.abs(valores)))
    return resultado


def cota_seno_clasica() -> float:
    """Si(π), supremo de las sumas parciales de Σ sin(jθ)/j"""
    si, _ = special.sici(np.pi)
    return float(si)


# ======================================================================
# Construcción principal
# ======================================================================

@dataclass(frozen=True, eq=False)
class ConstruccionSteklov:
    n: int
    epsilon: float
    b: float
    M: PolinomioExplosionLog
    D: PolinomioComplejo
    F: FuncionCaratheodory
    phi_estrella: PolinomioComplejo
    phi: PolinomioComplejo
    a: float
    malla: MallaUnitaria
    mediciones: Dict[str, Any] = field(default_factory=dict)

    @property
    def par(self) -> ParOrtonormal:
        return ParOrtonormal(self.phi, self.phi_estrella, float(self.phi.coeficiente(self.n).real))

    @property
    def entrada_pegado(self) -> EntradaPegado:
        return EntradaPegado(self.par, self.F, self.malla)

    @cached_property
    def sigma(self) -> MedidaCircular:
        return closed_form_weight(self)

    def denominador_cerrado(self, z=None) -> np.ndarray:
        """2a(1 + εb(1 + z^n) + 2εz^n Re M_n) sobre la malla o en z"""
        if z is None:
            z = self.malla.puntos
            re_M = self.M.re_en_malla(self.malla)
        else:
            z = np.asarray(z, dtype=complex)
            re_M = np.real(self.M.M.evaluar(z))
        zn = z ** self.n
        return 2.0 * self.a * (1.0 + self.epsilon * self.b * (1.0 + zn) + 2.0 * self.epsilon * zn * re_M)

    def a_json(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'epsilon': self.epsilon,
            'b': self.b,
            'a': self.a,
            'phi_star': self.phi_estrella.a_json(),
            'measure': self.sigma.a_json(),
            'measurements': self.mediciones,
        }


def malla_steklov(n: int) -> MallaUnitaria:
    config = ConfiguracionLaboratorio.obtener()
    return MallaUnitaria.para_grado(n, sobremuestreo=config['SOBREMUESTREO_STEKLOV'])


def build_construction(n: int, epsilon: float, b: float = None, malla: MallaUnitaria = None) -> ConstruccionSteklov:
    """Ensambla M_n, D_n, F̃, φ_n*, φ_n y fija a con ∫|φ_n*|^{-2} dθ = 2π"""
    b = PARAMETROS_POR_DEFECTO['B'] if b is None else float(b)
    epsilon_maximo = PARAMETROS_POR_DEFECTO['EPSILON_MAXIMO']
    if n < 2:
        raise ErrorParametros(f"build_construction requiere n >= 2 (n = {n})")
    if not 0 <= epsilon <= epsilon_maximo:
        raise ErrorParametros(f"ε = {epsilon} fuera de [0, {epsilon_maximo}]")
    if b <= 1:
        raise ErrorParametros(f"b = {b} debe ser > 1 para que Re D_n > 0")
    malla = malla or malla_steklov(n)

    M = fejer_smooth(coeficientes_L(n - 1), n)
    D = (M.M + b).con_grado_nominal(n)
    S = D + star(D, n)
    base = 1.0 + epsilon * S
    base_malla = base.en_malla(malla.tamano)
    integral = float(np.mean(1.0 / np.abs(base_malla) ** 2))
    a = float(np.sqrt(integral))

    phi_estrella = base * a
    phi = star(phi_estrella, n)
    esperado = (PolinomioComplejo.monomio(n, 1.0, n) + epsilon * S) * a
    residuo = phi.distancia(esperado)
    if residuo > TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * max(1.0, a * (1 + epsilon * abs(b))):
        raise ErrorVerificacion(f"φ_n = a(z^n + ε(D_n + D_n*)) falla por {residuo:.3e}")

    raices = locate_roots(phi_estrella)
    if raices.dentro or raices.sobre:
        raise ErrorVerificacion(f"φ_n* tiene {raices.dentro + raices.sobre} raíces en el disco cerrado")

    F = FuncionCaratheodory(PolinomioComplejo.constante(1.0, n - 1) - M.M * (2.0 * epsilon))
    parte_real = F.parte_real_en_malla(malla)
    if parte_real.min() <= 0:
        raise ErrorParametros(f"Re F̃ <= 0 en la malla (mínimo {parte_real.min():.3e})")

    re_D = D.en_malla(malla.tamano).real
    mediciones = {
        'integral_normalizacion': DOS_PI * integral,
        'integral_D_cuadrado': DOS_PI * float(np.mean(np.abs(D.en_malla(malla.tamano)) ** 2)),
        're_D_min': float(re_D.min()),
        're_D_max': float(re_D.max()),
        're_F_min': float(parte_real.min()),
        'desvio_a': abs(a - 1.0),
    }
    logger.debug(f"Construcción Steklov n={n}, ε={epsilon}, b={b}: a={a:.12f}")
    return ConstruccionSteklov(n, float(epsilon), b, M, D, F, phi_estrella, phi, a, malla, mediciones)


def closed_form_weight(c: ConstruccionSteklov) -> MedidaCircular:
    """
    σ′ = 2 Re F̃ / (π |2a(1 + εb(1 + z^n) + 2εz^n Re M_n)|²), contrastado con
    el peso pegado de (φ_n, F̃) punto a punto.
    """
    parte_real = c.F.parte_real_en_malla(c.malla)
    pesos = 2.0 * parte_real / (np.pi * np.abs(c.denominador_cerrado()) ** 2)

    pegada = glued_weight(c.entrada_pegado, largo_cola=1)
    desvio = float(np.max(np.abs(pegada.sigma.pesos - pesos)) / np.max(pesos))
    c.mediciones['desvio_denominador'] = desvio
    if desvio > TOLERANCIAS['DENOMINADOR_CERRADO']:
        raise ErrorVerificacion(
            f"Denominador cerrado y peso pegado difieren en {desvio:.3e}",
            [{'suite': 'denominador_cerrado', 'criterio': 'dos_caminos',
              'descripcion': 'peso cerrado contra peso pegado', 'valor': desvio,
              'umbral': TOLERANCIAS['DENOMINADOR_CERRADO']}],
        )

    def densidad(theta):
        z = np.exp(1j * np.asarray(theta))
        return 2.0 * np.real(c.F(z)) / (np.pi * np.abs(c.denominador_cerrado(z)) ** 2)

    return MedidaCircular(c.malla, pesos, (), densidad, etiqueta=f'steklov_{c.n}')


def desviacion_steklov(c: ConstruccionSteklov) -> Dict[str, float]:
    """sup |2πσ′ − 1|, min 2πσ′ y la masa total"""
    escalado = DOS_PI * c.sigma.pesos
    return {
        'desviacion_maxima': float(np.max(np.abs(escalado - 1.0))),
        'minimo': float(escalado.min()),
        'masa': float(c.sigma.masa_total),
    }


def verify_growth(c: ConstruccionSteklov) -> Tuple[FilaCrecimiento, Dict[str, Any]]:
    """|φ_n(z̃_n)| con z̃_n = e^{iπ/n} y el supremo de |φ_n| frente a ε log n"""
    n = c.n
    z_tilde = np.exp(1j * np.pi / n)
    config = ConfiguracionLaboratorio.obtener()
    tamano = max(config['BARRIDO_MINIMO'], config['BARRIDO_FACTOR'] * n)
    ventana = 10.0 / n
    supremo, theta = maximo_en_circunferencia(c.phi, tamano, ((0.0, ventana), (np.pi, ventana)))
    M_tilde = c.M.M.evaluar(z_tilde)
    fila = FilaCrecimiento(
        n=n,
        epsilon=c.epsilon,
        sup_norm=supremo,
        argmax_theta=theta,
        comparator=c.epsilon * np.log(n),
        steklov_delta=min(1.0, float(DOS_PI * c.sigma.pesos.min())),
    )
    extras = {
        'phi_en_z_tilde': abs(c.phi.evaluar(z_tilde)),
        'combinacion_M': abs(M_tilde + z_tilde ** n * np.conj(M_tilde)),
        'im_M_en_z_tilde': abs(M_tilde.imag),
        'a': c.a,
        'distancia_maximizador_por_n': n * min(abs(theta), abs(np.pi - abs(theta))),
        'desvio_denominador': c.mediciones.get('desvio_denominador'),
    }
    return fila, extras


def growth_sweep(epsilon: float, lista_n: Sequence[int], b: float = None, trabajadores: int = None) -> ReporteCrecimiento:
    trabajadores = trabajadores or ConfiguracionLaboratorio.valor('TRABAJADORES')
    reporte = ReporteCrecimiento('steklov', COMPARADORES['steklov'])

    def fila(n):
        return verify_growth(build_construction(n, epsilon, b))

    with ThreadPoolExecutor(max_workers=max(1, int(trabajadores))) as pool:
        resultados = list(pool.map(fila, lista_n))
    for f, extras in resultados:
        reporte.agregar(f)
        reporte.extras[str(f.n)] = extras
        logger.info(f"steklov n={f.n}: sup={f.sup_norm:.6f}, ε log n={f.comparator:.6f}")
    return reporte


def pendiente_crecimiento(reporte: ReporteCrecimiento) -> float:
    """Pendiente por mínimos cuadrados de sup |φ_n| contra log n"""
    log_n = np.log([f.n for f in reporte.filas])
    sup = np.array([f.sup_norm for f in reporte.filas])
    pendiente, _ = np.polyfit(log_n, sup, 1)
    return float(pendiente)


def epsilon_sweep(lista_epsilon: Sequence[float], lista_n: Sequence[int], b: float = None,
                  trabajadores: int = None) -> Dict[float, Dict[str, float]]:
    """
    Para cada ε: pendiente de sup |φ_n| contra log n y sup_n |2πσ′ − 1|,
    también divididas por ε. Ambos cocientes deben quedar estables al variar ε.
    """
    barrido = {}
    for epsilon in lista_epsilon:
        epsilon = float(epsilon)
        reporte = growth_sweep(epsilon, lista_n, b, trabajadores)
        pendiente = pendiente_crecimiento(reporte)
        desviacion = max(desviacion_steklov(build_construction(n, epsilon, b))['desviacion_maxima']
                         for n in lista_n)
        barrido[epsilon] = {
            'pendiente': pendiente,
            'pendiente_sobre_epsilon': pendiente / epsilon,
            'desviacion_maxima': desviacion,
            'desviacion_sobre_epsilon': desviacion / epsilon,
        }
        logger.info(f"barrido ε={epsilon}: pendiente/ε={pendiente / epsilon:.4f}, "
                    f"desviación/ε={desviacion / epsilon:.4f}")
    return barrido


# ======================================================================
# Variante de Rakhmanov
# ======================================================================

@dataclass(frozen=True, eq=False)
class VarianteRakhmanov:
    n: int
    epsilon: float
    b: float
    M: PolinomioComplejo
    Phi_estrella: PolinomioComplejo
    phi_estrella: PolinomioComplejo
    a: float
    malla: MallaUnitaria
    candidatos: Dict[str, Dict[str, Any]]
    diagnostico: Diagnostico

    @property
    def constante_exacta(self) -> float:
        return 2.0 * (1.0 + 2.0 * self.epsilon) / (1.0 + 3.0 * self.epsilon)

    def mejor_candidato(self) -> Optional[str]:
        validos = {k: v for k, v in self.candidatos.items() if v['valido']}
        if not validos:
            return None
        return max(validos, key=lambda k: validos[k]['minimo_2pi_sigma'])


def _evaluar_candidato(C: float, variante_base: Dict[str, Any], delta: float) -> Dict[str, Any]:
    n, epsilon, malla = variante_base['n'], variante_base['epsilon'], variante_base['malla']
    M, phi_e = variante_base['M'], variante_base['phi_estrella']
    F = FuncionCaratheodory(PolinomioComplejo.constante(1.0, n) + M * (C * epsilon))
    resultado = {'C': C, 're_F_min': float(F.parte_real_en_malla(malla).min())}
    if resultado['re_F_min'] <= 0:
        resultado.update(valido=False, motivo='Re F̃ <= 0')
        return resultado
    par = ParOrtonormal(star(phi_e, n), phi_e, float(np.real(phi_e.coeficiente(0))))
    pegada = glued_weight(EntradaPegado(par, F, malla), largo_cola=1)
    escalado = DOS_PI * pegada.sigma.pesos
    resultado.update(
        masa=float(pegada.sigma.masa_total),
        minimo_2pi_sigma=float(escalado.min()),
        desviacion_maxima=float(np.max(np.abs(escalado - 1.0))),
        valido=bool(escalado.min() >= delta),
        motivo='',
    )
    return resultado


def rakhmanov_variant(n: int, epsilon: float, constante_steklov: float = None,
                      malla: MallaUnitaria = None, cota_re_M: float = 1.0) -> VarianteRakhmanov:
    """
    Φ_n* = 1 + ε/(1+2ε) − ε(b + bz^n + M_n + M_n*), b = 1/(1+2ε),
    M_n = (1/m)/(2(1+2ε)) Σ_{l<n} d_l z^l, y F̃ = 1 + CεM_n para C en los candidatos
    más la constante exacta 2(1+2ε)/(1+3ε).

    Lanza ErrorVerificacion si sup |Re M_n| en la malla supera `cota_re_M`.
    """
    if n % 2 or n < 2:
        raise ErrorParametros(f"rakhmanov_variant requiere n par (n = {n})")
    if not 0 < epsilon < 1:
        raise ErrorParametros(f"ε debe estar en (0, 1) (ε = {epsilon})")
    malla = malla or malla_steklov(n)
    m = n // 2
    b = 1.0 / (1.0 + 2.0 * epsilon)
    d = d_coefficients(n)
    coefs_M = np.concatenate([[0j], d[:n - 1] / (m * 2.0 * (1.0 + 2.0 * epsilon))])
    M = PolinomioComplejo(coefs_M, n)
    uno_mas_zn = PolinomioComplejo.constante(1.0, n) + PolinomioComplejo.monomio(n, 1.0, n)
    Phi_estrella = (PolinomioComplejo.constante(1.0 + epsilon / (1.0 + 2.0 * epsilon), n)
                    - (uno_mas_zn * b + M + star(M, n)) * epsilon)

    diagnostico = Diagnostico('variante_rakhmanov')
    cerrado, _ = lebesgue_construction(n, epsilon, MallaUnitaria(4 * (n + 1)))
    coincidencia = Phi_estrella.distancia(cerrado.Phi_estrella)
    diagnostico.agregar('coincide_forma_cerrada', coincidencia <= TOLERANCIAS['IDENTIDAD_ALGEBRAICA'],
                        coincidencia, TOLERANCIAS['IDENTIDAD_ALGEBRAICA'], 'Φ_n* coincide con la forma de Rakhmanov')

    re_M = M.en_malla(malla.tamano).real
    valores = Phi_estrella.en_malla(malla.tamano)
    re_M_sup = float(np.max(np.abs(re_M)))
    diagnostico.medir('re_M_sup', re_M_sup)
    diagnostico.agregar('cota_re_M', re_M_sup <= cota_re_M + TOLERANCIAS['MARGEN_RE_M'], re_M_sup, cota_re_M,
                        '‖Re M_n‖_∞ <= cota')
    if not diagnostico.condicion('cota_re_M').aprobado:
        raise ErrorVerificacion(
            f"‖Re M_{n}‖_∞ = {re_M_sup:.6f} supera la cota {cota_re_M}",
            [{'suite': 'variante_rakhmanov', 'criterio': 'cota_re_M',
              'descripcion': '‖Re M_n‖_∞ <= cota', 'valor': re_M_sup, 'umbral': cota_re_M}],
        )
    diagnostico.medir('re_Phi_estrella_desvio_sobre_eps', float(np.max(np.abs(valores.real - 1.0))) / epsilon)

    integral = DOS_PI * float(np.mean(1.0 / np.abs(valores) ** 2))
    tol = TOLERANCIAS['INTEGRAL']
    diagnostico.agregar('integral_inferior', integral >= DOS_PI * (1.0 - tol), integral, DOS_PI,
                        '∫ |Φ_n*|^{-2} dθ >= 2π')
    diagnostico.agregar('integral_superior', integral <= DOS_PI * (1.0 + epsilon) * (1.0 + tol), integral,
                        DOS_PI * (1.0 + epsilon), '∫ |Φ_n*|^{-2} dθ <= 2π(1 + ε)')

    a = float(np.sqrt(integral / DOS_PI))
    phi_estrella = Phi_estrella * a

    constante_steklov = 12.0 if constante_steklov is None else constante_steklov
    delta = 1.0 - constante_steklov * epsilon
    base = {'n': n, 'epsilon': epsilon, 'malla': malla, 'M': M, 'phi_estrella': phi_estrella}
    exacta = 2.0 * (1.0 + 2.0 * epsilon) / (1.0 + 3.0 * epsilon)
    candidatos = {}
    for C in tuple(PARAMETROS_POR_DEFECTO['CANDIDATOS_C_VARIANTE']) + (exacta,):
        clave = 'exacta' if C == exacta else f'{C:g}'
        candidatos[clave] = _evaluar_candidato(C, base, delta)

    # Con la constante exacta el corchete es a(2 − 2εz^n(b + 2 Re M_n))
    F_exacta = FuncionCaratheodory(PolinomioComplejo.constante(1.0, n) + M * (exacta * epsilon))
    par = ParOrtonormal(star(phi_estrella, n), phi_estrella, a)
    corchete = EntradaPegado(par, F_exacta, malla).corchete_en_malla()
    zn = malla.puntos ** n
    cerrada = a * (2.0 - 2.0 * epsilon * zn * (b + 2.0 * re_M))
    desvio = float(np.max(np.abs(corchete - cerrada)))
    diagnostico.agregar('denominador_exacto', desvio <= TOLERANCIAS['DENOMINADOR_CERRADO'], desvio,
                        TOLERANCIAS['DENOMINADOR_CERRADO'], 'corchete = a(2 − 2εz^n(b + 2 Re M_n))')
    diagnostico.agregar('algun_candidato_steklov', any(c['valido'] for c in candidatos.values()),
                        {k: c.get('minimo_2pi_sigma') for k, c in candidatos.items()}, delta,
                        'min 2πσ′ >= 1 − C′ε para algún C')
    return VarianteRakhmanov(n, epsilon, b, M, Phi_estrella, phi_estrella, a, malla, candidatos, diagnostico)


# ======================================================================
# Violación de la condición de desacople
# ======================================================================

def sec1_violation_demo(c: ConstruccionSteklov) -> Diagnostico:
    """Cociente (|φ_n*| + |F̃(φ_n* − φ_n)|)/√Re F̃ de la construcción"""
    diagnostico = decoupling_diagnostics(c.entrada_pegado, None)
    diagnostico.operacion = 'violacion_sec1'
    diferencia = c.phi_estrella - c.phi
    esperado = (PolinomioComplejo.constante(1.0, c.n) - PolinomioComplejo.monomio(c.n, 1.0, c.n)) * c.a
    residuo = diferencia.distancia(esperado)
    diagnostico.agregar('diferencia_a_uno_menos_zn', residuo <= TOLERANCIAS['IDENTIDAD_ALGEBRAICA'], residuo,
                        TOLERANCIAS['IDENTIDAD_ALGEBRAICA'], 'φ_n* − φ_n = a(1 − z^n)')
    return diagnostico


def sec1_trend(epsilon: float, lista_n: Sequence[int], b: float = None) -> Dict[int, float]:
    """Supremo del cociente de desacople por n"""
    return {
        int(n): float(sec1_violation_demo(build_construction(n, epsilon, b)).mediciones['sup_cociente_sec1'])
        for n in lista_n
    }
