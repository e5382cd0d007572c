"""
Jerarquía de excepciones del laboratorio.

Las operaciones de diagnóstico nunca lanzan: devuelven registros de diagnóstico.
Las demás señalan entradas inválidas (ErrorParametros, código de salida 2)
o identidades verificadas que fallan (ErrorVerificacion, código de salida 1).
"""


class ErrorLaboratorio(Exception):
    """Raíz de todos los errores del laboratorio"""

    codigo_salida = 1


class ErrorParametros(ErrorLaboratorio, ValueError):
    """Parámetros fuera de dominio o entrada inválida"""

    codigo_salida = 2


class ErrorMalla(ErrorParametros):
    """Malla incompatible o insuficiente para los grados pedidos"""


class ErrorMedida(ErrorParametros):
    """Medida inválida: pesos o masas negativas, átomos repetidos, masa nula"""


class ErrorOraculo(ErrorLaboratorio):
    """Gram-Schmidt no aplicable: matriz de Gram no definida positiva o |γ| ≥ 1"""


class ErrorRaices(ErrorLaboratorio):
    """No se localizó el número esperado de raíces"""


class ErrorVerificacion(ErrorLaboratorio):
    """Una identidad o criterio de aceptación no se cumple"""

    def __init__(self, mensaje: str, errores=None):
        super().__init__(mensaje)
        self.errores = list(errores or [])
