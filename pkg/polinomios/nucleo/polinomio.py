"""
Polinomios complejos con grado nominal y la operación (∗).

El grado nominal n fija la longitud de la inversión conjugada:
Q*(z) = z^n conj(Q(1/conj z)), es decir q̄_n + q̄_{n-1} z + ... + q̄_0 z^n.
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import optimize

from polinomios.excepciones import ErrorParametros

Escalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class PolinomioComplejo:
    """Vector de coeficientes c_0..c_n almacenado a longitud grado_nominal + 1"""
    coeficientes: np.ndarray
    grado_nominal: int

    def __post_init__(self):
        coefs = np.atleast_1d(np.asarray(self.coeficientes, dtype=complex)).copy()
        n = int(self.grado_nominal)
        if n < 0:
            raise ErrorParametros(f"Grado nominal negativo: {n}")
        if coefs.size > n + 1:
            if np.any(coefs[n + 1:] != 0):
                raise ErrorParametros(
                    f"El grado real ({coefs.size - 1}) supera el grado nominal ({n})"
                )
            coefs = coefs[:n + 1]
        elif coefs.size < n + 1:
            coefs = np.concatenate([coefs, np.zeros(n + 1 - coefs.size, dtype=complex)])
        coefs.setflags(write=False)
        object.__setattr__(self, 'coeficientes', coefs)
        object.__setattr__(self, 'grado_nominal', n)

    # ------------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------------
    @classmethod
    def monomio(cls, k: int, coef: Escalar = 1.0, grado_nominal: int = None) -> 'PolinomioComplejo':
        coefs = np.zeros(k + 1, dtype=complex)
        coefs[k] = coef
        return cls(coefs, k if grado_nominal is None else grado_nominal)

    @classmethod
    def constante(cls, valor: Escalar, grado_nominal: int = 0) -> 'PolinomioComplejo':
        return cls(np.array([valor], dtype=complex), grado_nominal)

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------
    @property
    def grado(self) -> int:
        """Grado real (0 para el polinomio nulo)"""
        no_nulos = np.nonzero(self.coeficientes)[0]
        return int(no_nulos[-1]) if no_nulos.size else 0

    def coeficiente(self, j: int) -> complex:
        if 0 <= j <= self.grado_nominal:
            return complex(self.coeficientes[j])
        return 0j

    def evaluar(self, z):
        """Horner sobre los coeficientes; acepta escalares o arreglos"""
        valores = P.polyval(np.asarray(z, dtype=complex), self.coeficientes)
        return complex(valores) if np.ndim(valores) == 0 else valores

    __call__ = evaluar

    def en_malla(self, tamano: int) -> np.ndarray:
        """
        Valores en e^{2πik/N}, k = 0..N-1, vía FFT.
        Los coeficientes de grado >= N se pliegan módulo N (exacto sobre la malla).
        """
        coefs = self.coeficientes
        if coefs.size > tamano:
            plegados = np.zeros(tamano, dtype=complex)
            np.add.at(plegados, np.arange(coefs.size) % tamano, coefs)
            coefs = plegados
        return tamano * np.fft.ifft(coefs, n=tamano)

    # ------------------------------------------------------------------
    # Transformaciones
    # ------------------------------------------------------------------
    def estrella(self, n: int = None) -> 'PolinomioComplejo':
        return star(self, self.grado_nominal if n is None else n)

    def con_grado_nominal(self, n: int) -> 'PolinomioComplejo':
        return PolinomioComplejo(self.coeficientes, n)

    def multiplicar_z(self, k: int = 1) -> 'PolinomioComplejo':
        coefs = np.concatenate([np.zeros(k, dtype=complex), self.coeficientes])
        return PolinomioComplejo(coefs, self.grado_nominal + k)

    def conjugado(self) -> 'PolinomioComplejo':
        """Coeficientes conjugados (no es la operación estrella)"""
        return PolinomioComplejo(np.conj(self.coeficientes), self.grado_nominal)

    def __add__(self, otro):
        if not isinstance(otro, PolinomioComplejo):
            otro = PolinomioComplejo.constante(otro)
        n = max(self.grado_nominal, otro.grado_nominal)
        a = PolinomioComplejo(self.coeficientes, n).coeficientes
        b = PolinomioComplejo(otro.coeficientes, n).coeficientes
        return PolinomioComplejo(a + b, n)

    __radd__ = __add__

    def __neg__(self):
        return PolinomioComplejo(-self.coeficientes, self.grado_nominal)

    def __sub__(self, otro):
        if not isinstance(otro, PolinomioComplejo):
            otro = PolinomioComplejo.constante(otro)
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        if isinstance(otro, PolinomioComplejo):
            return PolinomioComplejo(
                np.convolve(self.coeficientes, otro.coeficientes),
                self.grado_nominal + otro.grado_nominal,
            )
        return PolinomioComplejo(self.coeficientes * complex(otro), self.grado_nominal)

    __rmul__ = __mul__

    def __truediv__(self, escalar):
        return PolinomioComplejo(self.coeficientes / complex(escalar), self.grado_nominal)

    def __repr__(self):
        return f"PolinomioComplejo(grado_nominal={self.grado_nominal}, grado={self.grado})"

    def distancia(self, otro: 'PolinomioComplejo') -> float:
        """Máxima diferencia coeficiente a coeficiente"""
        n = max(self.grado_nominal, otro.grado_nominal)
        a = PolinomioComplejo(self.coeficientes, n).coeficientes
        b = PolinomioComplejo(otro.coeficientes, n).coeficientes
        return float(np.max(np.abs(a - b)))

    def distancia_relativa(self, otro: 'PolinomioComplejo') -> float:
        escala = max(float(np.max(np.abs(self.coeficientes))), float(np.max(np.abs(otro.coeficientes))), 1e-300)
        return self.distancia(otro) / escala

    # ------------------------------------------------------------------
    # Serialización JSON {nominal_degree, coeffs: [[re, im], ...]}
    # ------------------------------------------------------------------
    def a_json(self) -> Dict[str, Any]:
        return {
            'nominal_degree': self.grado_nominal,
            'coeffs': [[float(c.real), float(c.imag)] for c in self.coeficientes],
        }

    @classmethod
    def desde_json(cls, datos: Dict[str, Any]) -> 'PolinomioComplejo':
        coefs = [complex(re, im) for re, im in datos['coeffs']]
        return cls(np.array(coefs, dtype=complex), int(datos['nominal_degree']))


def star(Q: PolinomioComplejo, n: int) -> PolinomioComplejo:
    """Inversión conjugada a longitud n + 1: q̄_0 z^n + ... + q̄_n"""
    if Q.grado > n:
        raise ErrorParametros(f"star: grado {Q.grado} mayor que n = {n}")
    coefs = PolinomioComplejo(Q.coeficientes, max(n, Q.grado_nominal)).coeficientes[:n + 1]
    return PolinomioComplejo(np.conj(coefs[::-1]), n)


def maximo_en_circunferencia(Q: PolinomioComplejo, tamano: int, ventanas=()) -> Tuple[float, float]:
    """
    sup |Q(e^{iθ})| por barrido en `tamano` ángulos y refinamiento acotado
    alrededor del máximo global y de los máximos dentro de cada ventana (centro, radio).
    Devuelve (supremo, θ*) con θ* en (−π, π].
    """
    angulos = 2.0 * np.pi * np.arange(tamano) / tamano
    modulo = np.abs(Q.en_malla(tamano))
    paso = 2.0 * np.pi / tamano
    candidatos = {int(np.argmax(modulo))}
    for centro, radio in ventanas:
        distancia = np.abs(np.angle(np.exp(1j * (angulos - centro))))
        dentro = np.nonzero(distancia <= max(radio, paso))[0]
        if dentro.size:
            candidatos.add(int(dentro[np.argmax(modulo[dentro])]))

    def negativo(theta):
        return -abs(Q.evaluar(np.exp(1j * theta)))

    mejor, theta_mejor = float(modulo.max()), float(angulos[int(np.argmax(modulo))])
    for k in sorted(candidatos):
        resultado = optimize.minimize_scalar(
            negativo, bounds=(angulos[k] - paso, angulos[k] + paso),
            method='bounded', options={'xatol': 1e-12},
        )
        valor = -float(resultado.fun)
        if valor > mejor:
            mejor, theta_mejor = valor, float(resultado.x)
    theta_mejor = float(np.angle(np.exp(1j * theta_mejor)))
    return mejor, theta_mejor
