#!/usr/bin/env python3
"""
Pruebas de la fórmula de actualización por masas puntuales y de la
construcción con n/2 masas en raíces de la unidad.
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

from polinomios.constants import TOLERANCIAS
from polinomios.excepciones import ErrorParametros
from polinomios.nucleo.medida_circular import MallaUnitaria, MedidaCircular
from polinomios.nucleo.opuc import monic_gram_schmidt, tolerancia_oraculo
from polinomios.nucleo.polinomio import PolinomioComplejo
from polinomios.nucleo.rakhmanov import (
    ColocacionMasas,
    colocacion_admisible,
    d_coefficients,
    d_coefficients_directo,
    growth_table,
    kernel_roots,
    lebesgue_construction,
    mass_monotonicity,
    rakhmanov_update,
    verify_kernel_condition,
)


def colocacion_lebesgue(n, epsilon, malla=None):
    m = n // 2
    fondo = MedidaCircular.lebesgue(malla or MallaUnitaria.para_grado(n))
    return ColocacionMasas.en_raices_de_la_unidad(n, range(m), epsilon / m, fondo)


def test_vector_d_dos_representaciones():
    for n in (4, 6, 8, 16, 32):
        diferencia = np.max(np.abs(d_coefficients(n) - d_coefficients_directo(n)))
        assert diferencia <= TOLERANCIAS['VECTOR_D'] * n


def test_vector_d_valores():
    n = 16
    d = d_coefficients(n)
    for l in (1, 3, 5, 7):
        assert abs(d[l - 1] - (1 - 1j / np.tan(np.pi * l / n))) < 1e-12
    for l in (2, 4, 6, 8):
        assert abs(d[l - 1]) < 1e-12
    assert d[n - 1] == n // 2
    with pytest.raises(ErrorParametros):
        d_coefficients(7)


def test_forma_cerrada_contra_actualizacion():
    for n, epsilon in ((4, 0.1), (8, 0.3), (16, 0.7)):
        cerrado, _ = lebesgue_construction(n, epsilon)
        actualizado = rakhmanov_update(colocacion_lebesgue(n, epsilon), n)
        assert cerrado.Phi.distancia(actualizado.Phi) <= 1e-10


def test_forma_cerrada_contra_oraculo():
    n, epsilon = 8, 0.5
    cerrado, eta = lebesgue_construction(n, epsilon)
    oraculo = monic_gram_schmidt(eta, n)[n]
    assert cerrado.Phi.distancia(oraculo) <= tolerancia_oraculo(eta, n)


def test_diferencia_estrella():
    n, epsilon = 16, 0.5
    cerrado, _ = lebesgue_construction(n, epsilon)
    constante = (1 + 3 * epsilon) / (1 + 2 * epsilon)
    esperado = PolinomioComplejo.constante(constante, n) - PolinomioComplejo.monomio(n, constante, n)
    assert (cerrado.Phi_estrella - cerrado.Phi).distancia(esperado) <= 1e-12


def test_condicion_kernel_en_raices():
    for n in (8, 32, 128):
        fondo = MedidaCircular.lebesgue(MallaUnitaria.para_grado(n))
        colocacion = ColocacionMasas.en_raices_de_la_unidad(n, range(n), 0.0, fondo)
        assert verify_kernel_condition(colocacion, n) < TOLERANCIAS['KERNEL_POR_N'] * n


def test_colocacion_no_admisible():
    fondo = MedidaCircular.lebesgue(MallaUnitaria(64))
    colocacion = ColocacionMasas(np.exp(1j * np.array([0.0, 0.3])), [0.1, 0.1], fondo)
    assert not colocacion_admisible(colocacion, 4)
    with pytest.raises(ErrorParametros):
        rakhmanov_update(colocacion, 4)


def test_demasiadas_masas():
    fondo = MedidaCircular.lebesgue(MallaUnitaria(64))
    colocacion = ColocacionMasas.en_raices_de_la_unidad(4, range(4), 0.1, fondo)
    with pytest.raises(ErrorParametros):
        rakhmanov_update(colocacion, 4)


def test_colocacion_invalida():
    fondo = MedidaCircular.lebesgue(MallaUnitaria(64))
    with pytest.raises(ErrorParametros):
        ColocacionMasas([1.0, 1.0], [0.1, 0.1], fondo)
    with pytest.raises(ErrorParametros):
        ColocacionMasas([1.5], [0.1], fondo)
    with pytest.raises(ErrorParametros):
        ColocacionMasas([1.0], [-0.1], fondo)


def test_raices_del_kernel_son_raices_de_la_unidad():
    n = 8
    raices = kernel_roots(1.0, n, MedidaCircular.lebesgue(MallaUnitaria(256)))
    esperadas = np.exp(2j * np.pi * np.arange(1, n) / n)
    assert raices.size == n - 1
    assert np.max(np.abs(raices - esperadas)) < 1e-8


def test_monotonia_en_los_puntos_de_masa():
    diagnostico = mass_monotonicity(colocacion_lebesgue(16, 0.5), 16)
    assert diagnostico.aprobado
    assert np.all(diagnostico.mediciones['despues'] <= diagnostico.mediciones['antes'] + 1e-12)


def test_tabla_de_crecimiento():
    epsilon = 0.5
    reporte = growth_table(epsilon, [32, 8, 16], trabajadores=2)
    assert [f.n for f in reporte.filas] == [8, 16, 32]
    for fila in reporte.filas:
        assert abs(fila.comparator - (1 + epsilon * np.log(fila.n))) < 1e-15
        assert fila.sup_norm >= 1.0
        assert abs(fila.steklov_delta - 1 / (1 + epsilon)) < 1e-15
    supremos = [f.sup_norm for f in reporte.filas]
    assert supremos == sorted(supremos)


def test_tabla_requiere_n_par():
    with pytest.raises(ErrorParametros):
        growth_table(0.5, [8, 9])
    with pytest.raises(ErrorParametros):
        lebesgue_construction(8, 1.5)


if __name__ == "__main__":
    print("🧪 PRUEBAS DE LA CONSTRUCCIÓN DE RAKHMANOV")
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
