#!/usr/bin/env python3
"""
Pruebas del pegado de parámetros de Schur: validación de la entrada, peso
pegado, ida y vuelta, matrices de transferencia y factorización de Szegő.
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

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorParametros
from polinomios.nucleo.opuc import FuncionCaratheodory, ParOrtonormal, SecuenciaSchur, szego_recursion
from polinomios.nucleo.pegado import (
    EntradaPegado,
    decoupling_diagnostics,
    glue_schur,
    glue_session_report,
    glued_phi_star,
    glued_weight,
    szego_factorization_check,
    transfer_identities,
    transfer_matrices,
    validate_glue_input,
)
from polinomios.nucleo.polinomio import PolinomioComplejo
from polinomios.validaciones.validaciones_algebra import (
    RADIO_CABEZA,
    ValidacionesAlgebra,
    caratheodory_aleatoria,
    secuencia_aleatoria,
)


def entrada_de_prueba(n=6, grado_F=4, semilla=3):
    rng = np.random.default_rng(semilla)
    cabeza = secuencia_aleatoria(rng, n, 0.5)
    return EntradaPegado(szego_recursion(cabeza, n)[n], caratheodory_aleatoria(rng, grado_F)), cabeza


def test_entrada_valida():
    entrada, _ = entrada_de_prueba()
    diagnostico = validate_glue_input(entrada)
    assert diagnostico.aprobado, [c.nombre for c in diagnostico.fallidas()]


def test_entrada_con_F_no_normalizada():
    entrada, _ = entrada_de_prueba()
    mal = EntradaPegado(entrada.phi_n, FuncionCaratheodory(PolinomioComplejo.constante(2.0, 3)), entrada.malla)
    diagnostico = validate_glue_input(mal)
    assert not diagnostico.condicion('normalizacion_F').aprobado
    with pytest.raises(ErrorParametros):
        glued_weight(mal)


def test_entrada_con_phi_no_normalizado():
    entrada, _ = entrada_de_prueba()
    par = entrada.phi_n
    escalado = ParOrtonormal(par.phi * 2.0, par.phi_estrella * 2.0, 2.0 * par.kappa)
    diagnostico = validate_glue_input(EntradaPegado(escalado, entrada.F, entrada.malla))
    assert not diagnostico.condicion('normalizacion_estrella').aprobado


def test_peso_pegado_es_probabilidad_y_recupera_la_cabeza():
    entrada, cabeza = entrada_de_prueba()
    medida = glued_weight(entrada, largo_cola=8)
    assert abs(medida.sigma.masa_total - 1.0) <= TOLERANCIAS['PROBABILIDAD']
    assert np.max(np.abs(medida.gamma_cabeza.gamma - cabeza.gamma)) < 1e-10
    sesion = glue_session_report(medida, 8)
    assert sesion['roundtrip_error'] <= TOLERANCIAS['IDA_VUELTA_MEDIDA']
    assert len(sesion['gamma_head']) == 6
    assert len(sesion['gamma_tail_prefix']) == 8
    assert sesion['normalization_residuals']['sigma_mass'] <= TOLERANCIAS['PROBABILIDAD']


def test_pegado_con_F_constante_no_agrega_cola():
    """F̃ = 1 da σ̃ de Lebesgue y la cola pegada es nula"""
    entrada, _ = entrada_de_prueba()
    uno = EntradaPegado(entrada.phi_n, FuncionCaratheodory(PolinomioComplejo.constante(1.0, 0)), entrada.malla)
    medida = glued_weight(uno, largo_cola=4)
    assert np.max(np.abs(medida.gamma_cola.gamma)) < 1e-12


def test_largo_de_cabeza_declarado():
    cabeza = SecuenciaSchur([0.1, 0.2])
    cola = SecuenciaSchur([0.3])
    assert len(glue_schur(cabeza, cola, 2)) == 3
    with pytest.raises(ErrorParametros):
        glue_schur(cabeza, cola, 3)


def test_identidades_de_transferencia():
    cola = secuencia_aleatoria(np.random.default_rng(11), 6, 0.6)
    z = np.exp(1j * np.linspace(0.0, 2 * np.pi, 9))
    for m in (1, 3, 6):
        residuos = transfer_identities(cola, m, z)
        umbral = TOLERANCIAS['IDENTIDAD_ALGEBRAICA'] * cola.kappa(m) ** 2 * (m + 1)
        assert max(residuos.values()) <= umbral, residuos
    assert np.allclose(transfer_matrices(cola, 0, 0.5), np.eye(2))
    with pytest.raises(ErrorParametros):
        transfer_matrices(cola, 7, 0.5)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_determinante_de_transferencia(m, semilla):
    cola = secuencia_aleatoria(np.random.default_rng(semilla), m, 0.8)
    z = np.exp(1j * np.array([0.2, 1.7, -2.4]))
    T = transfer_matrices(cola, m, z)
    determinante = T[0, 0] * T[1, 1] - T[0, 1] * T[1, 0]
    assert np.max(np.abs(determinante - z ** m)) <= 1e-12 * cola.kappa(m) ** 2 * (m + 1)


def test_phi_estrella_pegado():
    entrada, _ = entrada_de_prueba()
    medida = glued_weight(entrada, largo_cola=5)
    assert glued_phi_star(entrada, medida.gamma_cola, 0).distancia(entrada.phi_n.phi_estrella) < 1e-10
    directo = glued_phi_star(entrada, medida.gamma_cola, 5)
    assert directo.grado_nominal == entrada.n + 5
    with pytest.raises(ErrorParametros):
        glued_phi_star(entrada, medida.gamma_cola, 6)


def test_factorizacion_de_szego():
    entrada, _ = entrada_de_prueba()
    diagnostico = szego_factorization_check(glued_weight(entrada, largo_cola=4))
    assert diagnostico.aprobado, [c.a_dict() for c in diagnostico.fallidas()]


def test_diagnostico_de_desacople():
    entrada, _ = entrada_de_prueba()
    medida = glued_weight(entrada, largo_cola=4)
    diagnostico = decoupling_diagnostics(entrada, medida, cota_sec1=1e6)
    assert diagnostico.aprobado
    for clave in ('phi_en_uno', 'phi_en_uno_sobre_raiz_n', 'sup_cociente_sec1', 'cociente_cerca_de_uno'):
        assert clave in diagnostico.mediciones
    assert diagnostico.mediciones['sup_cociente_sec1'] >= diagnostico.mediciones['cociente_cerca_de_uno']
    assert not decoupling_diagnostics(entrada, None, cota_sec1=1e-3).aprobado


def test_suite_ida_vuelta_rapida_sin_errores():
    suite = ValidacionesAlgebra(rapido=True)
    suite.ejecutar_ida_vuelta_pegado()
    assert suite.errores == []
    assert suite.mediciones['ida_vuelta_pegado']['peor_ida_vuelta'] <= TOLERANCIAS['IDA_VUELTA_MEDIDA']


@pytest.mark.parametrize('semilla', [0, 4, 9])
def test_normalizacion_exacta_de_cabezas_en_todo_el_radio(semilla):
    rng = np.random.default_rng(semilla)
    cabeza = secuencia_aleatoria(rng, 16, RADIO_CABEZA)
    entrada = EntradaPegado(szego_recursion(cabeza, 16)[16], caratheodory_aleatoria(rng, 3))
    assert validate_glue_input(entrada).condicion('normalizacion_estrella').aprobado


def test_malla_refinada_por_raiz_cercana():
    par = szego_recursion(SecuenciaSchur([0.999]), 1)[1]
    entrada = EntradaPegado(par, FuncionCaratheodory(PolinomioComplejo.constante(1.0)))
    # φ_1* = (1 − 0.999 z)/ρ se anula a distancia ~1e-3 de la circunferencia
    assert entrada.malla.tamano == 2 ** 16
    medida = glued_weight(entrada, largo_cola=1)
    assert abs(medida.sigma.masa_total - 1.0) <= TOLERANCIAS['PROBABILIDAD']


if __name__ == "__main__":
    print("🧪 PRUEBAS DEL PEGADO DE PARÁMETROS DE SCHUR")
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
