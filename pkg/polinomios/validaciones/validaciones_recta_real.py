"""
Suite de la reducción circunferencia -> segmento contra el oráculo en [−1, 1].
"""

import logging

import numpy as np
from numpy.polynomial import chebyshev as Ch

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorLaboratorio
from polinomios.nucleo.medida_circular import MallaUnitaria, MedidaCircular
from polinomios.nucleo.rakhmanov import lebesgue_construction
from polinomios.nucleo.recta_real import (
    MedidaCircularSimetrica,
    MedidaSegmento,
    boundedness_transfer,
    circle_to_segment_polys,
    segment_gram_schmidt_oracle,
    segment_polys_via_circle,
    simetrizar,
)
from polinomios.validaciones.base import SuiteBase

logger = logging.getLogger(__name__)


def chebyshev_ortonormales(K: int):
    """P_0 = 1/√π, P_k = √(2/π) T_k"""
    polinomios = []
    for k in range(K + 1):
        serie = np.zeros(k + 1)
        serie[k] = 1.0 / np.sqrt(np.pi) if k == 0 else np.sqrt(2.0 / np.pi)
        polinomios.append(Ch.cheb2poly(serie))
    return polinomios


def distancia_coeficientes(P, Q) -> float:
    p, q = np.asarray(P.coef if hasattr(P, 'coef') else P), np.asarray(Q.coef if hasattr(Q, 'coef') else Q)
    largo = max(p.size, q.size)
    return float(np.max(np.abs(np.pad(p, (0, largo - p.size)) - np.pad(q, (0, largo - q.size)))))


class ValidacionesRectaReal(SuiteBase):
    categoria = 'recta_real'

    def ejecutar_recta_real(self) -> None:
        suite = 'recta_real'
        K = 8 if self.rapido else 16
        tolerancia = TOLERANCIAS['SEGMENTO']
        try:
            lebesgue = MedidaCircularSimetrica(MedidaCircular.lebesgue(MallaUnitaria(4096)))
            reduccion = circle_to_segment_polys(lebesgue, K)
            for k, (P, esperado) in enumerate(zip(reduccion, chebyshev_ortonormales(K))):
                error = distancia_coeficientes(P, esperado)
                self._comprobar(suite, 'chebyshev_t', error <= tolerancia,
                                f'Lebesgue -> Chebyshev-T ortonormal (k = {k})', error, tolerancia)

            for rho in (MedidaSegmento.arcoseno(), MedidaSegmento.chebyshev_u()):
                oraculo = segment_gram_schmidt_oracle(rho, K)
                via_circulo = segment_polys_via_circle(rho, K)
                error = max(distancia_coeficientes(P, Q) for P, Q in zip(via_circulo, oraculo))
                self._comprobar(suite, 'oraculo_segmento', error <= tolerancia,
                                f'Reducción contra Gram-Schmidt en el segmento ({rho.etiqueta})', error, tolerancia)
                principales = [P.coef[-1] for P in via_circulo]
                self._comprobar(suite, 'coeficiente_principal', min(principales) > 0,
                                f'Coeficientes principales positivos ({rho.etiqueta})', min(principales), 0.0)

            # Medida de Rakhmanov simetrizada y transferencia de cotas
            _, eta = lebesgue_construction(16, 0.5, MallaUnitaria(4096))
            tabla = boundedness_transfer(simetrizar(eta), 4)
            # la cota toma el supremo sobre la malla; los x del segmento caen entre nodos
            exceso = float((tabla['sup_segmento'] - tabla['cota'] * (1.0 + 1e-3)).max())
            self._comprobar(suite, 'transferencia_cota', exceso <= 0.0,
                            'sup_x |P_k| <= 2 sup|φ_2k| / √(2π(1 + Φ_2k(0)))', exceso, 0.0)
            self.mediciones[suite] = tabla.to_dict(orient='records')
        except ErrorLaboratorio as e:
            self._registrar_excepcion(suite, e)
