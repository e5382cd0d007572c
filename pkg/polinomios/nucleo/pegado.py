"""
Pegado de parámetros de Schur: la cabeza γ_0..γ_{n-1} de una medida de
Bernstein-Szegő seguida de la cola γ̃ de una medida suave dσ̃ = Re F̃ dθ/2π.

El peso resultante tiene la forma cerrada
    σ′ = 2 Re F̃ / (π |φ_n + φ_n* + F̃(φ_n* − φ_n)|²)
y se verifica con matrices de transferencia y con la factorización de Szegő.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Optional

import numpy as np
from numpy.polynomial import polynomial as P

from polinomios.constants import PARAMETROS_POR_DEFECTO, TOLERANCIAS
from polinomios.excepciones import ErrorMedida, ErrorParametros, ErrorVerificacion
from polinomios.nucleo.diagnosticos import Diagnostico
from polinomios.nucleo.medida_circular import DOS_PI, MallaUnitaria, MedidaCircular
from polinomios.nucleo.opuc import (
    FuncionCaratheodory,
    ParOrtonormal,
    SecuenciaSchur,
    integral_inversa,
    locate_roots,
    schur_from_orthonormal,
    second_kind,
    szego_boundary,
    szego_recursion,
    verblunsky_from_measure,
)
from polinomios.nucleo.polinomio import PolinomioComplejo, star

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EntradaPegado:
    phi_n: ParOrtonormal
    F: FuncionCaratheodory
    malla: Optional[MallaUnitaria] = None

    def __post_init__(self):
        if self.malla is None:
            object.__setattr__(self, 'malla', self._malla_adaptada())

    def _malla_adaptada(self) -> MallaUnitaria:
        """
        para_grado(n + grado F̃), refinada a RESOLUCION_PEGADO / d puntos cuando
        φ_n* o el corchete tienen raíces a distancia d de la circunferencia.
        """
        grado = self.phi_n.grado + self.F.poli.grado_nominal
        base = MallaUnitaria.para_grado(grado)
        if grado > PARAMETROS_POR_DEFECTO['GRADO_MAXIMO_COMPANERA']:
            return base
        distancias = [
            distancia_a_circunferencia(Q)
            for Q in (self.phi_n.phi_estrella, self.corchete_polinomio())
        ]
        d = min(distancias)
        if not d > 0:
            return base
        objetivo = PARAMETROS_POR_DEFECTO['RESOLUCION_PEGADO'] / d
        if objetivo <= base.tamano:
            return base
        tamano = min(PARAMETROS_POR_DEFECTO['MALLA_MAXIMA_PEGADO'], 1 << int(np.ceil(np.log2(objetivo))))
        logger.debug(f"Malla de pegado refinada a {tamano} (raíz a distancia {d:.3e})")
        return MallaUnitaria(max(tamano, base.tamano))

    @property
    def n(self) -> int:
        return self.phi_n.grado

    def corchete_polinomio(self) -> PolinomioComplejo:
        """φ_n + φ_n* + F̃(φ_n* − φ_n) como polinomio de grado n + grado F̃"""
        phi, phi_e = self.phi_n.phi, self.phi_n.phi_estrella
        return phi + phi_e + self.F.poli * (phi_e - phi)

    def corchete_en_malla(self) -> np.ndarray:
        """φ_n + φ_n* + F̃(φ_n* − φ_n) sobre la malla"""
        N = self.malla.tamano
        phi = self.phi_n.phi.en_malla(N)
        phi_e = self.phi_n.phi_estrella.en_malla(N)
        return phi + phi_e + self.F.poli.en_malla(N) * (phi_e - phi)

    def corchete(self, z):
        phi = self.phi_n.phi.evaluar(z)
        phi_e = self.phi_n.phi_estrella.evaluar(z)
        return phi + phi_e + self.F(z) * (phi_e - phi)

    def medida_tilde(self) -> MedidaCircular:
        """dσ̃ = Re F̃ dθ / 2π"""
        F = self.F

        def densidad(theta):
            return F(np.exp(1j * np.asarray(theta))).real / DOS_PI

        return MedidaCircular.desde_densidad(self.malla, densidad, etiqueta='tilde')


@dataclass(frozen=True, eq=False)
class MedidaPegada:
    sigma: MedidaCircular
    entrada: EntradaPegado
    gamma_cabeza: SecuenciaSchur
    largo_cola: int

    @cached_property
    def gamma_cola(self) -> SecuenciaSchur:
        return tail_from_caratheodory(self.entrada, self.largo_cola)

    @cached_property
    def glued_gamma(self) -> SecuenciaSchur:
        return glue_schur(self.gamma_cabeza, self.gamma_cola, self.entrada.n)


def distancia_a_circunferencia(Q: PolinomioComplejo) -> float:
    """min ||z| − 1| sobre las raíces de Q (compañera); inf para constantes"""
    raices = P.polyroots(Q.coeficientes[:Q.grado + 1]) if Q.grado else np.zeros(0)
    return float(np.min(np.abs(np.abs(raices) - 1.0))) if raices.size else float('inf')


def validate_glue_input(entrada: EntradaPegado) -> Diagnostico:
    diagnostico = Diagnostico('entrada_pegado')
    malla = entrada.malla
    phi_e = entrada.phi_n.phi_estrella

    raices = locate_roots(phi_e)
    diagnostico.agregar('estrella_sin_ceros', raices.dentro == 0 and raices.sobre == 0,
                        raices.dentro + raices.sobre, 0, 'φ_n* sin raíces en el disco cerrado')

    # |φ_n*| = |φ_n| en la circunferencia y φ_n tiene sus raíces dentro
    integral = integral_inversa(star(phi_e, entrada.n), malla)
    tol = TOLERANCIAS['INTEGRAL']
    diagnostico.agregar('normalizacion_estrella', abs(integral - 1.0) <= tol, DOS_PI * integral, DOS_PI,
                        '∫ |φ_n*|^{-2} dθ = 2π')
    en_cero = phi_e.coeficiente(0)
    diagnostico.agregar('estrella_en_cero', en_cero.real > 0 and abs(en_cero.imag) <= tol,
                        en_cero, 0.0, 'φ_n*(0) > 0')

    parte_real = entrada.F.parte_real_en_malla(malla)
    diagnostico.agregar('re_F_positiva', parte_real.min() > 0, float(parte_real.min()), 0.0,
                        'Re F̃ > 0 en la circunferencia')
    media = float(np.mean(parte_real))
    diagnostico.agregar('normalizacion_F', abs(media - 1.0) <= tol, media, 1.0,
                        '(1/2π) ∫ Re F̃ dθ = 1')
    return diagnostico


def tail_from_caratheodory(entrada: EntradaPegado, largo: int) -> SecuenciaSchur:
    """γ̃_0..γ̃_{largo-1} de dσ̃ = Re F̃ dθ/2π por el oráculo"""
    cola = verblunsky_from_measure(entrada.medida_tilde(), largo)
    logger.debug(f"Cola de Schur: {largo} términos, Σ|γ̃| = {np.sum(np.abs(cola.gamma)):.6f}")
    return cola


def glued_weight(entrada: EntradaPegado, largo_cola: int = None) -> MedidaPegada:
    """σ′ = 2 Re F̃ / (π |φ_n + φ_n* + F̃(φ_n* − φ_n)|²) sobre la malla de la entrada"""
    diagnostico = validate_glue_input(entrada)
    if not diagnostico.aprobado:
        fallidas = ', '.join(c.nombre for c in diagnostico.fallidas())
        raise ErrorParametros(f"Entrada de pegado inválida: {fallidas}")

    malla = entrada.malla
    corchete = entrada.corchete_en_malla()
    modulo2 = np.abs(corchete) ** 2
    if modulo2.min() <= 0:
        raise ErrorMedida("El denominador del peso pegado se anula en la malla")
    parte_real = entrada.F.parte_real_en_malla(malla)
    pesos = 2.0 * parte_real / (np.pi * modulo2)

    # Forma equivalente con σ̃′ = Re F̃ / 2π
    pesos_tilde = 4.0 * entrada.medida_tilde().pesos / modulo2
    desvio = float(np.max(np.abs(pesos - pesos_tilde)))
    if desvio > TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * max(1.0, float(pesos.max())):
        raise ErrorVerificacion(f"Las dos formas del peso pegado difieren en {desvio:.3e}")

    def densidad(theta):
        z = np.exp(1j * np.asarray(theta))
        return 2.0 * entrada.F(z).real / (np.pi * np.abs(entrada.corchete(z)) ** 2)

    sigma = MedidaCircular(malla, pesos, (), densidad, etiqueta=f'pegada_{entrada.n}')
    masa = sigma.masa_total
    if abs(masa - 1.0) > TOLERANCIAS['PROBABILIDAD']:
        logger.warning(f"⚠️ Masa del peso pegado {masa:.12f} (se esperaba 1)")
    if largo_cola is None:
        largo_cola = min(PARAMETROS_POR_DEFECTO['LARGO_COLA_MAXIMO'], malla.tamano // 2 - 1)
    cabeza = schur_from_orthonormal(entrada.phi_n.phi)
    return MedidaPegada(sigma, entrada, cabeza, int(largo_cola))


def glue_schur(cabeza: SecuenciaSchur, cola: SecuenciaSchur, n: int = None) -> SecuenciaSchur:
    """γ_0, …, γ_{n-1}, γ̃_0, γ̃_1, …"""
    if n is not None and len(cabeza) != n:
        raise ErrorParametros(f"La cabeza tiene {len(cabeza)} parámetros y se declaró n = {n}")
    return cabeza.concatenar(cola)


def transfer_matrices(cola: SecuenciaSchur, m: int, z) -> np.ndarray:
    """
    (A_m B_m; C_m D_m) = (ρ̃_0…ρ̃_{m-1})^{-1} Π_j (z, −conj γ̃_j; −z γ̃_j, 1), j = 0 a la derecha.
    Para z arreglo devuelve forma (2, 2, len(z)).
    """
    if m > len(cola):
        raise ErrorParametros(f"Se piden {m} factores con una cola de {len(cola)}")
    z_arr = np.asarray(z, dtype=complex)
    uno = np.ones_like(z_arr)
    A, B, C, D = uno.copy(), np.zeros_like(z_arr), np.zeros_like(z_arr), uno.copy()
    for g, r in zip(cola.gamma[:m], cola.rho[:m]):
        A, B, C, D = (
            (z_arr * A - np.conj(g) * C) / r,
            (z_arr * B - np.conj(g) * D) / r,
            (C - g * z_arr * A) / r,
            (D - g * z_arr * B) / r,
        )
    return np.array([[A, B], [C, D]])


def transfer_identities(cola: SecuenciaSchur, m: int, z) -> Dict[str, float]:
    """Residuos de A = (φ̃+ψ̃)/2, B = (φ̃−ψ̃)/2, C = (φ̃*−ψ̃*)/2, D = (φ̃*+ψ̃*)/2 y det = z^m"""
    T = transfer_matrices(cola, m, z)
    phi = szego_recursion(cola, m)[m]
    psi = second_kind(cola, m)[m]
    f, fe = phi.phi.evaluar(z), phi.phi_estrella.evaluar(z)
    p, pe = psi.phi.evaluar(z), psi.phi_estrella.evaluar(z)
    determinante = T[0, 0] * T[1, 1] - T[0, 1] * T[1, 0]
    return {
        'A': float(np.max(np.abs(T[0, 0] - (f + p) / 2))),
        'B': float(np.max(np.abs(T[0, 1] - (f - p) / 2))),
        'C': float(np.max(np.abs(T[1, 0] - (fe - pe) / 2))),
        'D': float(np.max(np.abs(T[1, 1] - (fe + pe) / 2))),
        'determinante': float(np.max(np.abs(determinante - np.asarray(z, dtype=complex) ** m))),
    }


def glued_phi_star(entrada: EntradaPegado, cola: SecuenciaSchur, m: int) -> PolinomioComplejo:
    """
    φ*_{n+m} de la secuencia pegada por recursión directa, contrastado con
    2φ*_{n+m} = φ_n(φ̃_m* − ψ̃_m*) + φ_n*(φ̃_m* + ψ̃_m*).
    """
    if m > len(cola):
        raise ErrorParametros(f"m = {m} excede la cola ({len(cola)})")
    n = entrada.n
    cabeza = schur_from_orthonormal(entrada.phi_n.phi)
    directo = szego_recursion(glue_schur(cabeza, cola.prefijo(m), n), n + m)[n + m].phi_estrella

    phi_t = szego_recursion(cola, m)[m].phi_estrella
    psi_t = second_kind(cola, m)[m].phi_estrella
    producto = (entrada.phi_n.phi * (phi_t - psi_t) + entrada.phi_n.phi_estrella * (phi_t + psi_t)) / 2.0
    producto = PolinomioComplejo(producto.coeficientes, n + m)

    desvio = directo.distancia_relativa(producto)
    if desvio > TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * (n + m + 1):
        raise ErrorVerificacion(
            f"φ*_{n + m} por recursión y por producto difieren en {desvio:.3e}",
            [{'suite': 'ida_vuelta_pegado', 'criterio': 'producto_transferencia',
              'descripcion': 'φ*_{n+m} directo contra producto', 'valor': desvio,
              'umbral': TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * (n + m + 1)}],
        )
    return directo


def factorization_residual(entrada: EntradaPegado, cola: SecuenciaSchur, m: int) -> float:
    """‖2φ*_{n+m}/φ̃_m* − (φ_n + φ_n* + F̃(φ_n* − φ_n))‖_∞ sobre la malla"""
    N = entrada.malla.tamano
    directo = glued_phi_star(entrada, cola, m).en_malla(N)
    phi_t = szego_recursion(cola, m)[m].phi_estrella.en_malla(N)
    return float(np.max(np.abs(2.0 * directo / phi_t - entrada.corchete_en_malla())))


def szego_factorization_check(medida: MedidaPegada) -> Diagnostico:
    """2Π = Π̃(φ_n + φ_n* + F̃(φ_n* − φ_n)) y |Π|^{-2} = 2πσ′ en la frontera"""
    entrada = medida.entrada
    Pi = szego_boundary(medida.sigma)
    Pi_tilde = szego_boundary(entrada.medida_tilde())
    residuo = float(np.max(np.abs(2.0 * Pi - Pi_tilde * entrada.corchete_en_malla())))
    modulo = float(np.max(np.abs(np.abs(Pi) ** -2 - DOS_PI * medida.sigma.pesos)))
    tol = TOLERANCIAS['FRONTERA_SZEGO']
    diagnostico = Diagnostico('factorizacion_szego')
    diagnostico.agregar('factorizacion', residuo <= tol * max(1.0, float(np.max(np.abs(Pi)))), residuo, tol,
                        '2Π = Π̃(φ_n + φ_n* + F̃(φ_n* − φ_n))')
    diagnostico.agregar('modulo_frontera', modulo <= tol * max(1.0, float(DOS_PI * medida.sigma.pesos.max())),
                        modulo, tol, '|Π|^{-2} = 2πσ′')
    return diagnostico


def decoupling_diagnostics(entrada: EntradaPegado, medida: Optional[MedidaPegada] = None,
                           cota_sec1: float = None) -> Diagnostico:
    """
    |φ_n(1)|/√n y el cociente (|φ_n*| + |F̃(φ_n* − φ_n)|) / √(Re F̃) con su supremo
    y su máximo cerca de z = 1.
    """
    n = entrada.n
    malla = entrada.malla
    N = malla.tamano
    phi = entrada.phi_n.phi.en_malla(N)
    phi_e = entrada.phi_n.phi_estrella.en_malla(N)
    F = entrada.F.poli.en_malla(N)
    cociente = (np.abs(phi_e) + np.abs(F * (phi_e - phi))) / np.sqrt(F.real)
    angulos = np.angle(malla.puntos)
    cerca = np.abs(angulos) <= np.pi / max(n, 1)

    diagnostico = Diagnostico('desacople')
    en_uno = abs(entrada.phi_n.phi.evaluar(1.0))
    diagnostico.medir('phi_en_uno', en_uno)
    diagnostico.medir('phi_en_uno_sobre_raiz_n', en_uno / np.sqrt(n))
    diagnostico.medir('sup_cociente_sec1', float(cociente.max()))
    diagnostico.medir('theta_sup_cociente', float(angulos[int(np.argmax(cociente))]))
    diagnostico.medir('cociente_cerca_de_uno', float(cociente[cerca].max()))
    if medida is not None:
        masa = medida.sigma.masa_total
        diagnostico.agregar('probabilidad', abs(masa - 1.0) <= TOLERANCIAS['PROBABILIDAD'], masa, 1.0,
                            'σ es de probabilidad')
    if cota_sec1 is not None:
        diagnostico.agregar('sec1_acotada', float(cociente.max()) <= cota_sec1, float(cociente.max()),
                            cota_sec1, 'sup (|φ_n*| + |F̃(φ_n* − φ_n)|)/√Re F̃ <= C')
    return diagnostico


def glue_session_report(medida: MedidaPegada, largo_verificacion: int = 16) -> Dict[str, Any]:
    """{n, gamma_head, gamma_tail_prefix, normalization_residuals, roundtrip_error}"""
    entrada = medida.entrada
    n = entrada.n
    k = min(largo_verificacion, medida.largo_cola)
    esperado = glue_schur(medida.gamma_cabeza, medida.gamma_cola.prefijo(k), n)
    extraido = verblunsky_from_measure(medida.sigma, n + k)
    validacion = validate_glue_input(entrada)
    return {
        'n': n,
        'gamma_head': medida.gamma_cabeza.a_json(),
        'gamma_tail_prefix': medida.gamma_cola.prefijo(k).a_json(),
        'normalization_residuals': {
            'phi_star_norm': abs(validacion.condicion('normalizacion_estrella').valor - DOS_PI),
            'F_mean': abs(validacion.condicion('normalizacion_F').valor - 1.0),
            'sigma_mass': abs(medida.sigma.masa_total - 1.0),
        },
        'roundtrip_error': float(np.max(np.abs(extraido.gamma - esperado.gamma))),
        'tail_l1': float(np.sum(np.abs(medida.gamma_cola.gamma))),
    }
