"""
Precisión extendida (mpmath) para medidas de Bernstein-Szegő dµ = dθ/(2π|Q|²).

Los momentos salen de las ecuaciones de Yule-Walker de Q, sin malla; el
oráculo de Gram-Schmidt se resuelve por Cholesky sobre esos momentos. Con
raíces de Q a distancia ~1e-6 de la circunferencia el peso tiene picos de
orden 1e12 que ninguna malla razonable resuelve.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import mpmath as mp
import numpy as np

from polinomios.excepciones import ErrorOraculo, ErrorParametros

logger = logging.getLogger(__name__)

DIGITOS = 40


def _recortar(coeficientes: Sequence[complex]) -> np.ndarray:
    coefs = np.trim_zeros(np.atleast_1d(np.asarray(coeficientes, dtype=complex)), 'b')
    if coefs.size == 0:
        raise ErrorParametros("Polinomio nulo")
    return coefs


# ======================================================================
# Paso descendente (Schur-Cohn)
# ======================================================================

def paso_descendente(coeficientes: Sequence[complex]) -> Optional[List[mp.mpc]]:
    """
    γ_0..γ_{n-1} del mónico Φ_n = P/p_n por la recursión inversa.
    None si algún |γ_k| >= 1, es decir si P tiene raíces fuera del disco abierto.
    """
    coefs = _recortar(coeficientes)
    with mp.workdps(DIGITOS):
        actual = [mp.mpc(c) for c in coefs]
        principal = actual[-1]
        actual = [c / principal for c in actual]
        gamma: List[mp.mpc] = [mp.mpc(0)] * (len(actual) - 1)
        for k in range(len(actual) - 2, -1, -1):
            g = -mp.conj(actual[0])
            rho2 = 1 - abs(g) ** 2
            if rho2 <= 0:
                return None
            estrella = [mp.conj(c) for c in reversed(actual)]
            actual = [(a + mp.conj(g) * e) / rho2 for a, e in zip(actual[1:], estrella[1:])]
            gamma[k] = g
    return gamma


def integral_inversa_cuadrado(coeficientes: Sequence[complex]) -> Optional[float]:
    """
    (1/2π) ∫ dθ / |P(e^{iθ})|² = 1 / (|p_n|² Π (1 − |γ_k|²)) para P con
    todas sus raíces en el disco abierto. None si no es así.
    """
    coefs = _recortar(coeficientes)
    gamma = paso_descendente(coefs)
    if gamma is None:
        return None
    with mp.workdps(DIGITOS):
        producto = mp.fprod([1 - abs(g) ** 2 for g in gamma])
        return float(1 / (abs(mp.mpc(coefs[-1])) ** 2 * producto))


# ======================================================================
# Momentos exactos
# ======================================================================

@lru_cache(maxsize=128)
def _yule_walker(clave: Tuple[complex, ...]) -> Tuple[mp.mpc, ...]:
    """
    c_0..c_N de dθ/(2π|Q|²) con Q(0) != 0 y sin raíces en el disco cerrado:
    Σ_j q_j c_{l-j} = δ_{l0} / conj(q_0), l = 0..N, con c_{-m} = conj(c_m).

    Incógnitas reales x_0..x_N, y_1..y_N (c_m = x_m + i y_m). La parte
    imaginaria de la ecuación l = 0 es redundante cuando q_0 es real.
    """
    N = len(clave) - 1
    with mp.workdps(DIGITOS):
        q = [mp.mpc(c) for c in clave]
        fase = abs(q[0]) / q[0]
        q = [c * fase for c in q]
        A = mp.zeros(2 * N + 1, 2 * N + 1)
        b = mp.zeros(2 * N + 1, 1)
        b[0, 0] = 1 / mp.re(q[0])
        for l in range(N + 1):
            fila_re, fila_im = (0, None) if l == 0 else (2 * l - 1, 2 * l)
            for j in range(N + 1):
                m = l - j
                s = 1 if m >= 0 else -1
                a, bi = mp.re(q[j]), mp.im(q[j])
                A[fila_re, abs(m)] += a
                if fila_im is not None:
                    A[fila_im, abs(m)] += bi
                if m:
                    A[fila_re, N + abs(m)] += -s * bi
                    if fila_im is not None:
                        A[fila_im, N + abs(m)] += s * a
        try:
            x = mp.lu_solve(A, b)
        except ZeroDivisionError as exc:
            raise ErrorOraculo(f"Sistema de Yule-Walker singular (N = {N})") from exc
        momentos = [mp.mpc(x[0], 0)] + [mp.mpc(x[m], x[N + m]) for m in range(1, N + 1)]
    logger.debug(f"Momentos de Bernstein-Szegő por Yule-Walker: N={N}")
    return tuple(momentos)


def momentos_bernstein_szego(coeficientes: Sequence[complex], K: int) -> List[mp.mpc]:
    """c_0..c_K de dθ/(2π|Q|²); más allá de N sigue la recurrencia homogénea"""
    coefs = _recortar(coeficientes)
    if coefs[0] == 0:
        raise ErrorParametros("Q(0) = 0: Q tiene una raíz en el disco")
    momentos = list(_yule_walker(tuple(complex(c) for c in coefs)))
    N = coefs.size - 1
    with mp.workdps(DIGITOS):
        q = [mp.mpc(c) for c in coefs]
        while len(momentos) <= K:
            l = len(momentos)
            momentos.append(-mp.fsum(q[j] * momentos[l - j] for j in range(1, N + 1)) / q[0])
    return momentos[:K + 1]


# ======================================================================
# Oráculo por Cholesky
# ======================================================================

def monicos_por_cholesky(momentos: Sequence[mp.mpc], n: int) -> Tuple[List[np.ndarray], np.ndarray]:
    """
    Φ_0..Φ_n mónicos y ‖Φ_k‖² a partir de c_0..c_n.

    T[i, j] = ⟨z^j, z^i⟩ = c_{i-j} = L L^H; las columnas de L^{-H} escaladas
    por L_kk son los coeficientes de Φ_k y ‖Φ_k‖² = L_kk².
    """
    if len(momentos) <= n:
        raise ErrorParametros(f"Se requieren c_0..c_{n} ({len(momentos)} momentos)")
    with mp.workdps(DIGITOS):
        escala = mp.re(momentos[0])
        if not escala > 0:
            raise ErrorOraculo("Medida de masa nula")
        T = mp.matrix(n + 1, n + 1)
        for i in range(n + 1):
            T[i, i] = mp.mpf(1)
            for j in range(i):
                T[i, j] = momentos[i - j] / escala
                T[j, i] = mp.conj(T[i, j])
        try:
            L = mp.cholesky(T)
        except ValueError as exc:
            raise ErrorOraculo(f"Matriz de Gram no definida positiva hasta grado {n}: {exc}") from exc

        # X = L^{-1} por sustitución hacia adelante
        X = mp.matrix(n + 1, n + 1)
        for i in range(n + 1):
            X[i, i] = 1 / L[i, i]
            for j in range(i):
                X[i, j] = -mp.fsum(L[i, k] * X[k, j] for k in range(j, i)) / L[i, i]

        monicos = []
        for k in range(n + 1):
            coefs = np.array([complex(mp.conj(X[k, i]) * L[k, k]) for i in range(k + 1)], dtype=complex)
            coefs[k] = 1.0
            monicos.append(coefs)
        # mp.cholesky deja la diagonal como mpc con parte imaginaria nula
        normas = np.array([float(mp.re(L[k, k]) ** 2 * escala) for k in range(n + 1)])
    return monicos, normas


# ======================================================================
# Raíces cerca de la circunferencia
# ======================================================================

def pulir_raiz(coeficientes: Sequence[complex], z0: complex, iteraciones: int = 200) -> float:
    """Newton en precisión extendida desde z0; devuelve |z| − 1 de la raíz pulida"""
    coefs = _recortar(coeficientes)
    with mp.workdps(DIGITOS):
        descendentes = [mp.mpc(c) for c in coefs[::-1]]
        z = mp.mpc(z0)
        umbral = mp.mpf(10) ** (-DIGITOS + 5)
        for _ in range(iteraciones):
            valor, derivada = mp.polyval(descendentes, z, derivative=True)
            if derivada == 0:
                break
            paso = valor / derivada
            z -= paso
            if abs(paso) <= umbral:
                break
        return float(abs(z) - 1)
