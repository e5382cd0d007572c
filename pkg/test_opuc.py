#!/usr/bin/env python3
"""
Pruebas de la recursión de Szegő, la recursión inversa, el oráculo de
Gram-Schmidt y las funciones de Carathéodory y Szegő.
"""
import os
import sys
import django

# Configurar Django
sys.path.append(os.path.dirname(os.path.abspath(__file__)))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'laboratorio.settings')
django.setup()

import numpy as np
import numpy.polynomial.polynomial as P
import pytest
from hypothesis import given, settings, strategies as st

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorMedida, ErrorParametros
from polinomios.nucleo.medida_circular import MallaUnitaria, MedidaCircular, moment, momentos
from polinomios.nucleo.opuc import (
    SecuenciaSchur,
    bernstein_szego_measure,
    caratheodory_from_measure,
    cd_kernel,
    evaluate_recursion,
    kernel_matrix,
    locate_roots,
    monic_gram_schmidt,
    schur_from_orthonormal,
    second_kind,
    star_consistency,
    szego_function,
    szego_ratio_check,
    szego_recursion,
    tolerancia_oraculo,
    validate_orthonormal_candidate,
    verblunsky_from_measure,
    wronskian_check,
)
from polinomios.nucleo.polinomio import PolinomioComplejo
from polinomios.validaciones.validaciones_algebra import ValidacionesAlgebra, secuencia_aleatoria


def gamma_de_prueba(largo=6, semilla=7, radio=0.6):
    return secuencia_aleatoria(np.random.default_rng(semilla), largo, radio)


def test_parametros_nulos_dan_monomios():
    pares = szego_recursion(SecuenciaSchur.nula(5), 5)
    for k, par in enumerate(pares):
        assert par.phi.distancia(PolinomioComplejo.monomio(k)) == 0.0
        assert par.phi_estrella.distancia(PolinomioComplejo.constante(1.0, k)) == 0.0
        assert par.kappa == 1.0


def test_parametro_fuera_del_disco():
    with pytest.raises(ErrorParametros):
        SecuenciaSchur([0.2, 1.0])
    with pytest.raises(ErrorParametros):
        szego_recursion(SecuenciaSchur([0.1, 0.2]), 3)


def test_recursion_y_estrella_coinciden():
    pares = szego_recursion(gamma_de_prueba(12), 12)
    assert star_consistency(pares) <= TOLERANCIAS['RECURSION_ESTRELLA']


def test_gamma_desde_phi_cero():
    gamma = gamma_de_prueba(8)
    pares = szego_recursion(gamma, 8)
    for k in range(8):
        monico = pares[k + 1].monico()
        assert abs(-np.conj(monico.coeficiente(0)) - gamma.gamma[k]) < 1e-12


def test_evaluacion_puntual_coincide_con_coeficientes():
    gamma = gamma_de_prueba(6)
    z = np.exp(1j * np.linspace(0, 2 * np.pi, 7)) * 0.9
    phi, phi_e = evaluate_recursion(gamma, 6, z)
    pares = szego_recursion(gamma, 6)
    for k, par in enumerate(pares):
        assert np.max(np.abs(phi[k] - par.phi.evaluar(z))) < 1e-12
        assert np.max(np.abs(phi_e[k] - par.phi_estrella.evaluar(z))) < 1e-12


def test_wronskiano():
    assert wronskian_check(gamma_de_prueba(10), 10).aprobado


def test_segunda_especie_es_recursion_negada():
    gamma = gamma_de_prueba(4)
    psi = second_kind(gamma, 4)[4]
    directo = szego_recursion(SecuenciaSchur(-gamma.gamma), 4)[4]
    assert psi.phi.distancia(directo.phi) == 0.0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.floats(0.0, 0.9), st.floats(0.0, 2 * np.pi)), min_size=1, max_size=12))
def test_recursion_inversa_recupera_gamma(polares):
    gamma = SecuenciaSchur([r * np.exp(1j * t) for r, t in polares])
    n = len(gamma)
    recuperada = schur_from_orthonormal(szego_recursion(gamma, n)[n].phi)
    escala = gamma.kappa(n) ** 2 * (n + 1)
    assert np.max(np.abs(recuperada.gamma - gamma.gamma)) <= 1e-12 * escala


def test_oraculo_lebesgue_da_monomios():
    monicos = monic_gram_schmidt(MedidaCircular.lebesgue(MallaUnitaria(64)), 6)
    for k, Phi in enumerate(monicos):
        assert Phi.distancia(PolinomioComplejo.monomio(k)) < 1e-13


def test_oraculo_sobre_bernstein_szego():
    N = 6
    gamma = gamma_de_prueba(N)
    par = szego_recursion(gamma, N)[N]
    mu = bernstein_szego_measure(par)
    extraida = verblunsky_from_measure(mu, N)
    assert np.max(np.abs(extraida.gamma - gamma.gamma)) <= tolerancia_oraculo(mu, N)
    assert abs(mu.masa_total - 1.0) <= TOLERANCIAS['PROBABILIDAD']
    # Más allá de N los parámetros de Bernstein-Szegő se anulan
    assert np.max(np.abs(verblunsky_from_measure(mu, N + 3).gamma[N:])) <= tolerancia_oraculo(mu, N + 3)


def test_momentos_exactos_coinciden_con_la_malla():
    par = szego_recursion(gamma_de_prueba(6), 6)[6]
    mu = bernstein_szego_measure(par)
    assert mu.es_bernstein_szego
    en_malla = MedidaCircular(mu.malla, mu.pesos)
    assert np.max(np.abs(momentos(mu, 10) - momentos(en_malla, 10))) < 1e-12
    assert abs(moment(mu, -3) - np.conj(moment(en_malla, 3))) < 1e-12


@pytest.mark.parametrize('semilla', [1, 2, 3, 5, 8])
def test_oraculo_exacto_con_parametros_cerca_del_borde(semilla):
    N = 32
    gamma = secuencia_aleatoria(np.random.default_rng(semilla), N, 0.9)
    pares = szego_recursion(gamma, N)
    mu = bernstein_szego_measure(pares[N])
    oraculo = monic_gram_schmidt(mu, N)
    escala = max(1.0, max(float(np.max(np.abs(Phi.coeficientes))) for Phi in oraculo))
    error = max(par.monico().distancia(Phi) for par, Phi in zip(pares, oraculo))
    assert error <= tolerancia_oraculo(mu, N) * escala
    # c_0 exacto de φ_N* redondeado a doble precisión
    assert abs(mu.masa_total - 1.0) <= 1e-6


def test_suite_recursion_oraculo_rapida_sin_errores():
    suite = ValidacionesAlgebra(rapido=True)
    suite.ejecutar_recursion_oraculo()
    assert suite.errores == []


def test_raices_a_un_paso_de_la_circunferencia():
    fase = np.exp(0.3j)
    dentro = PolinomioComplejo(P.polyfromroots([(1 - 1e-10) * fase, 0.5j, -0.7]), 3)
    ubicadas = locate_roots(dentro)
    assert (ubicadas.dentro, ubicadas.sobre, ubicadas.fuera) == (3, 0, 0)
    assert ubicadas.modulo_minimo < 1e-9

    fuera = PolinomioComplejo(P.polyfromroots([(1 + 1e-10) * fase, 0.2]), 2)
    ubicadas = locate_roots(fuera)
    assert (ubicadas.dentro, ubicadas.sobre, ubicadas.fuera) == (1, 0, 1)

    raices_de_uno = PolinomioComplejo(np.array([-1.0, 0.0, 0.0, 1.0]), 3)
    assert locate_roots(raices_de_uno).sobre == 3


def test_bernstein_szego_con_estrella_singular():
    par = szego_recursion(SecuenciaSchur.nula(3), 3)[3]
    invertido = type(par)(par.phi_estrella, par.phi, 1.0)
    with pytest.raises(ErrorMedida):
        bernstein_szego_measure(invertido)


def test_candidato_ortonormal():
    par = szego_recursion(gamma_de_prueba(5), 5)[5]
    assert validate_orthonormal_candidate(par.phi).aprobado
    doble = validate_orthonormal_candidate(par.phi * 2.0)
    assert not doble.condicion('normalizacion').aprobado
    assert doble.condicion('raices_en_disco').aprobado
    assert abs(doble.mediciones['factor_reescala'] - 0.5) < 1e-10
    assert not validate_orthonormal_candidate(par.phi_estrella).condicion('raices_en_disco').aprobado


def test_kernel_hermitiano_y_reproductor():
    gamma = gamma_de_prueba(5)
    pares = szego_recursion(gamma, 5)
    puntos = np.exp(1j * np.array([0.1, 1.3, 2.9]))
    K = kernel_matrix(gamma, 4, puntos)
    assert np.max(np.abs(K - K.conj().T)) < 1e-12
    assert abs(cd_kernel(pares, puntos[0], puntos[1], 4) - K[0, 1]) < 1e-12
    assert np.all(np.diag(K).real > 0)


def test_caratheodory_y_szego():
    lebesgue = MedidaCircular.lebesgue(MallaUnitaria(256))
    assert abs(caratheodory_from_measure(lebesgue, 0.3 + 0.2j) - 1.0) < 1e-12
    assert abs(szego_function(lebesgue, 0.5) - 1.0) < 1e-12

    par = szego_recursion(gamma_de_prueba(4), 4)[4]
    mu = bernstein_szego_measure(par, MallaUnitaria(1024))
    z = np.array([0.0, 0.3, -0.2 + 0.4j])
    assert np.max(np.abs(szego_function(mu, z) - par.phi_estrella.evaluar(z))) < 1e-8
    with pytest.raises(ErrorParametros):
        szego_function(mu, 1.0)


def test_cociente_szego_en_lebesgue():
    diagnostico = szego_ratio_check(MedidaCircular.lebesgue(MallaUnitaria(64)), 8, 1.0)
    assert diagnostico.aprobado


if __name__ == "__main__":
    print("🧪 PRUEBAS DE POLINOMIOS ORTOGONALES EN LA CIRCUNFERENCIA")
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
