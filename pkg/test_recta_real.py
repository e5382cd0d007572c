#!/usr/bin/env python3
"""
Pruebas de la reducción x = cos θ: medidas simétricas, polinomios
ortonormales en [−1, 1] y transferencia de cotas.
"""
import os
import sys
import django

# Configurar Django
sys.path.append(os.path.dirname(os.path.abspath(__file__)))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'laboratorio.settings')
django.setup()

import numpy as np
import pytest
from numpy.polynomial import chebyshev as Ch
from numpy.polynomial import legendre as Le

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorMedida
from polinomios.nucleo.medida_circular import DOS_PI, Atomo, MallaUnitaria, MedidaCircular
from polinomios.nucleo.recta_real import (
    MedidaCircularSimetrica,
    MedidaSegmento,
    asimetria_medida,
    boundedness_transfer,
    circle_to_segment_polys,
    polinomios_a_json,
    segment_gram_schmidt_oracle,
    segment_polys_via_circle,
    segment_to_circle,
    simetrizar,
)
from polinomios.validaciones.validaciones_recta_real import chebyshev_ortonormales, distancia_coeficientes


def test_lebesgue_da_chebyshev_de_primera_especie():
    lebesgue = MedidaCircularSimetrica(MedidaCircular.lebesgue(MallaUnitaria(4096)))
    for P, esperado in zip(circle_to_segment_polys(lebesgue, 8), chebyshev_ortonormales(8)):
        assert distancia_coeficientes(P, esperado) <= TOLERANCIAS['SEGMENTO']


def test_arcoseno_contra_oraculo():
    rho = MedidaSegmento.arcoseno()
    via_circulo = segment_polys_via_circle(rho, 10)
    oraculo = segment_gram_schmidt_oracle(rho, 10)
    for P, Q in zip(via_circulo, oraculo):
        assert distancia_coeficientes(P, Q) <= TOLERANCIAS['SEGMENTO']
    # ρ = 1/(π√(1 − x²)): P_0 = 1 y P_k = √2 T_k
    assert distancia_coeficientes(via_circulo[2], np.sqrt(2.0) * Ch.cheb2poly([0, 0, 1])) <= TOLERANCIAS['SEGMENTO']


def test_chebyshev_segunda_especie():
    rho = MedidaSegmento.chebyshev_u()
    assert abs(rho.masa_total - 1.0) < 1e-10
    via_circulo = segment_polys_via_circle(rho, 6)
    # U_2 = 4x² − 1, U_3 = 8x³ − 4x
    assert distancia_coeficientes(via_circulo[2], [-1.0, 0.0, 4.0]) <= TOLERANCIAS['SEGMENTO']
    assert distancia_coeficientes(via_circulo[3], [0.0, -4.0, 0.0, 8.0]) <= TOLERANCIAS['SEGMENTO']
    for P in via_circulo:
        assert P.coef[-1] > 0


def test_legendre_con_tolerancia_suave():
    rho = MedidaSegmento.legendre()
    via_circulo = segment_polys_via_circle(rho, 5)
    for k, P in enumerate(via_circulo):
        serie = np.zeros(k + 1)
        serie[k] = np.sqrt(2 * k + 1)
        assert distancia_coeficientes(P, Le.leg2poly(serie)) <= TOLERANCIAS['SEGMENTO_SUAVE']


def test_distribucion():
    rho = MedidaSegmento.arcoseno()
    assert rho.distribucion(-2.0) == 0.0
    assert abs(rho.distribucion(0.0) - 0.5) < 1e-10
    assert abs(rho.distribucion(1.0) - rho.masa_total) < 1e-8


def test_medida_no_simetrica():
    malla = MallaUnitaria(256)
    torcida = MedidaCircular.desde_densidad(malla, lambda t: (1 + 0.5 * np.sin(t)) / DOS_PI)
    assert asimetria_medida(torcida) > TOLERANCIAS['SIMETRIA']
    with pytest.raises(ErrorMedida):
        MedidaCircularSimetrica(torcida)
    simetrica = simetrizar(torcida)
    assert np.max(np.abs(simetrica.medida.pesos - 1.0 / DOS_PI)) < 1e-15


def test_simetrizar_duplica_atomos():
    mu = MedidaCircular.lebesgue(MallaUnitaria(64), 0.8).con_atomos([Atomo(1.0, 0.2)])
    simetrica = simetrizar(mu).medida
    assert sorted(round(a.angulo, 12) for a in simetrica.atomos) == sorted([1.0, round(DOS_PI - 1.0, 12)])
    assert all(abs(a.masa - 0.1) < 1e-15 for a in simetrica.atomos)


def test_transferencia_de_cotas():
    tabla = boundedness_transfer(segment_to_circle(MedidaSegmento.chebyshev_u()), 4)
    assert list(tabla.columns) == ['k', 'sup_segmento', 'sup_circulo', 'cota']
    assert len(tabla) == 5
    assert (tabla['sup_segmento'] <= tabla['cota'] * (1 + 1e-3)).all()


def test_json_de_polinomios():
    datos = polinomios_a_json(segment_polys_via_circle(MedidaSegmento.arcoseno(), 2))
    assert [d['k'] for d in datos] == [0, 1, 2]
    assert len(datos[2]['coeffs_in_x']) == 3


if __name__ == "__main__":
    print("🧪 PRUEBAS DE LA RECTA REAL")
    print("=" * 50)
    fallidas = 0
    for nombre, prueba in list(globals().items()):
        if nombre.startswith('test_') and callable(prueba):
            try:
                prueba()
                print(f"✅ {nombre}")
            except Exception as e:
                fallidas += 1
                print(f"❌ {nombre}: {e}")
    sys.exit(1 if fallidas else 0)
