#!/usr/bin/env python3
"""
Pruebas de medidas en la circunferencia: productos internos, momentos,
normalización y certificado de Steklov.
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
from hypothesis import given, settings, strategies as st

from polinomios.excepciones import ErrorMalla, ErrorMedida
from polinomios.nucleo.medida_circular import (
    DOS_PI,
    Atomo,
    MallaUnitaria,
    MedidaCircular,
    moment,
    momentos,
    normalize,
    quad_inner,
    steklov_check,
)
from polinomios.nucleo.polinomio import PolinomioComplejo, star


def test_monomios_ortonormales_en_lebesgue():
    mu = MedidaCircular.lebesgue(MallaUnitaria(64))
    for j in range(5):
        for k in range(5):
            valor = quad_inner(PolinomioComplejo.monomio(j), PolinomioComplejo.monomio(k), mu)
            assert abs(valor - (1.0 if j == k else 0.0)) < 1e-14


def test_momento_con_atomo():
    malla = MallaUnitaria(64)
    mu = MedidaCircular.lebesgue(malla, masa=0.7).con_atomos([Atomo(np.pi / 2, 0.3)])
    assert abs(moment(mu, 0) - 1.0) < 1e-14
    assert abs(moment(mu, 1) - (-0.3j)) < 1e-14
    assert abs(moment(mu, -1) - 0.3j) < 1e-14
    assert abs(mu.masa_total - 1.0) < 1e-14


def test_grado_mayor_que_la_malla():
    mu = MedidaCircular.lebesgue(MallaUnitaria(8))
    with pytest.raises(ErrorMalla):
        quad_inner(PolinomioComplejo.monomio(4), PolinomioComplejo.constante(1.0), mu)
    with pytest.raises(ErrorMalla):
        moment(mu, 4)


def test_medidas_invalidas():
    malla = MallaUnitaria(16)
    with pytest.raises(ErrorMedida):
        MedidaCircular(malla, -np.ones(16))
    with pytest.raises(ErrorMedida):
        MedidaCircular.solo_atomos(malla, [Atomo(0.5, 0.1), Atomo(0.5, 0.2)])
    with pytest.raises(ErrorMedida):
        MedidaCircular.solo_atomos(malla, [Atomo(0.5, -0.1)])
    with pytest.raises(ErrorMedida):
        normalize(MedidaCircular(malla, np.zeros(16)))


def test_normalize_devuelve_probabilidad():
    mu = MedidaCircular.lebesgue(MallaUnitaria(32), masa=3.0).con_atomos([Atomo(1.0, 0.5)])
    normalizada, alfa = normalize(mu)
    assert abs(alfa - 3.5) < 1e-13
    assert normalizada.probabilidad
    assert abs(normalizada.masa_total - 1.0) < 1e-14


def test_certificado_steklov_lebesgue():
    certificado = steklov_check(MedidaCircular.lebesgue(MallaUnitaria(32)), 1.0)
    assert certificado.valido
    assert abs(certificado.peso_minimo - 1.0 / DOS_PI) < 1e-15
    assert certificado.desviacion_maxima < 1e-15
    assert not steklov_check(MedidaCircular.lebesgue(MallaUnitaria(32), masa=0.5), 1.0).valido


def test_json_conserva_pesos_y_atomos():
    mu = MedidaCircular.desde_densidad(MallaUnitaria(16), lambda t: (1 + 0.5 * np.cos(t)) / DOS_PI)
    mu = mu.con_atomos([Atomo(2.0, 0.25)])
    copia = MedidaCircular.desde_json(mu.a_json())
    assert np.array_equal(copia.pesos, mu.pesos)
    assert copia.atomos == mu.atomos


def test_star_invierte_coeficientes():
    Q = PolinomioComplejo([1.0, 2j, 3.0], 2)
    assert np.allclose(star(Q, 2).coeficientes, [3.0, -2j, 1.0])
    assert np.allclose(star(Q, 4).coeficientes, [0, 0, 3.0, -2j, 1.0])
    assert star(star(Q, 3), 3).distancia(PolinomioComplejo(Q.coeficientes, 3)) == 0.0


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=-0.9, max_value=0.9), st.floats(min_value=-0.9, max_value=0.9))
def test_momentos_de_densidad_trigonometrica(a, b):
    """(1 + a cos θ + b sin θ)/2π tiene c_1 = (a − ib)/2 y c_k = 0 para k >= 2"""
    mu = MedidaCircular.desde_densidad(
        MallaUnitaria(64), lambda t: (1 + a * np.cos(t) + b * np.sin(t)) / DOS_PI
    )
    c = momentos(mu, 4)
    assert abs(c[0] - 1.0) < 1e-13
    assert abs(c[1] - (a - 1j * b) / 2) < 1e-13
    assert np.max(np.abs(c[2:])) < 1e-13
    assert abs(moment(mu, 1) - c[1]) < 1e-13


def test_generador_exacto_sobrevive_a_la_normalizacion():
    # σ′ = 1/(2π|1 − z/2|²): masa 4/3 y, normalizada, el núcleo de Poisson con c_k = 2^{-k}
    Q = PolinomioComplejo(np.array([1.0, -0.5]), 1)
    malla = MallaUnitaria(64)
    pesos = 1.0 / (DOS_PI * np.abs(Q.en_malla(malla.tamano)) ** 2)
    mu = MedidaCircular(malla, pesos, generador=Q)
    assert mu.es_bernstein_szego
    assert abs(mu.masa_total - 4.0 / 3.0) < 1e-14
    normalizada, alfa = normalize(mu)
    assert normalizada.es_bernstein_szego
    assert abs(alfa - 4.0 / 3.0) < 1e-14
    assert np.max(np.abs(momentos(normalizada, 5) - 0.5 ** np.arange(6))) < 1e-14
    assert abs(moment(normalizada, -2) - 0.25) < 1e-14
    assert not MedidaCircular(malla, pesos, (Atomo(0.0, 0.1),), generador=Q).es_bernstein_szego


if __name__ == "__main__":
    print("🧪 PRUEBAS DE MEDIDAS EN LA CIRCUNFERENCIA")
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
