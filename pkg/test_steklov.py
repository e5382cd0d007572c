#!/usr/bin/env python3
"""
Pruebas de la construcción de clase Steklov con crecimiento ε log n,
su denominador cerrado, la variante sobre raíces de la unidad y la
suma de senos acotada.
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
from polinomios.excepciones import ErrorParametros, ErrorVerificacion
from polinomios.nucleo.medida_circular import DOS_PI, MallaUnitaria
from polinomios.nucleo.opuc import schur_from_orthonormal, verblunsky_from_measure
from polinomios.nucleo.steklov import (
    bounded_sine_sum,
    build_construction,
    cauchy_transform_numerico,
    cauchy_transform_step,
    closed_form_weight,
    cota_seno_clasica,
    desviacion_steklov,
    epsilon_sweep,
    fejer_smooth,
    coeficientes_L,
    growth_sweep,
    malla_steklov,
    pendiente_crecimiento,
    rakhmanov_variant,
    sec1_trend,
    sec1_violation_demo,
    step_symbol,
    verify_growth,
)
from polinomios.repositories.constantes_repository import RepositorioConstantes

EPSILON = 0.05


def test_polinomio_de_explosion_logaritmica():
    for n in (8, 64, 256):
        M = fejer_smooth(coeficientes_L(n - 1), n)
        diagnostico = M.verificar(malla_steklov(n))
        assert diagnostico.aprobado, [c.a_dict() for c in diagnostico.fallidas()]
    with pytest.raises(ErrorParametros):
        fejer_smooth(coeficientes_L(1), 1)


def test_imaginaria_crece_cerca_de_uno():
    pequeno = fejer_smooth(coeficientes_L(15), 16).verificar(malla_steklov(16))
    grande = fejer_smooth(coeficientes_L(1023), 1024).verificar(malla_steklov(1024))
    assert grande.mediciones['im_en_pi_sobre_n'] > pequeno.mediciones['im_en_pi_sobre_n']


def test_simbolo_escalon():
    assert step_symbol(1.0) == 1.0
    assert step_symbol(4.0) == -1.0
    assert step_symbol(0.0) == 0.0 and step_symbol(np.pi) == 0.0
    assert list(step_symbol([0.5, -0.5])) == [1.0, -1.0]


def test_transformada_de_cauchy_del_escalon():
    z = np.array([0.0, 0.3 + 0.2j, -0.5j])
    cerrada = cauchy_transform_step(z)
    numerica = cauchy_transform_numerico(z, MallaUnitaria(8192))
    assert np.max(np.abs(cerrada - numerica)) < 1e-4
    assert abs(cauchy_transform_step(np.exp(1j), frontera=True).real - 1.0) < 1e-12
    with pytest.raises(ErrorParametros):
        cauchy_transform_step(0.99 + 0.5j)
    with pytest.raises(ErrorParametros):
        cauchy_transform_step(1j)


def test_peso_en_forma_cerrada():
    c = build_construction(16, EPSILON)
    cerrado = closed_form_weight(c)
    assert c.mediciones['desvio_denominador'] <= TOLERANCIAS['DENOMINADOR_CERRADO']
    assert abs(cerrado.masa_total - 1.0) < 1e-6
    theta = c.malla.angulos[5]
    assert abs(cerrado.peso_en(theta) - cerrado.pesos[5]) <= 1e-12 * cerrado.pesos[5]


def test_construccion_normalizada():
    c = build_construction(32, EPSILON)
    desviacion = desviacion_steklov(c)
    assert abs(desviacion['masa'] - 1.0) <= TOLERANCIAS['PROBABILIDAD']
    assert desviacion['desviacion_maxima'] <= RepositorioConstantes.obtener('steklov', 'C_desviacion') * EPSILON
    assert abs(c.a - 1.0) <= RepositorioConstantes.obtener('steklov', 'C_a') * EPSILON
    assert c.mediciones["re_D_min"] >= 1.0 - 1e-10
    assert abs(DOS_PI * np.mean(1.0 / np.abs(c.phi_estrella.en_malla(c.malla.tamano)) ** 2) - DOS_PI) < 1e-10


def test_diferencia_phi_estrella_menos_phi():
    c = build_construction(16, EPSILON)
    diagnostico = sec1_violation_demo(c)
    assert diagnostico.condicion('diferencia_a_uno_menos_zn').aprobado


def test_denominador_cerrado_contra_corchete():
    c = build_construction(16, EPSILON)
    corchete = c.entrada_pegado.corchete_en_malla()
    cerrado = c.denominador_cerrado()
    assert np.max(np.abs(corchete - cerrado)) / np.max(np.abs(cerrado)) <= TOLERANCIAS['DENOMINADOR_CERRADO']
    z = np.exp(1j * np.array([0.01, 1.0, 3.0]))
    assert np.max(np.abs(c.entrada_pegado.corchete(z) - c.denominador_cerrado(z))) <= 1e-10


def test_medida_reproduce_los_parametros():
    n = 16
    c = build_construction(n, EPSILON)
    extraidos = verblunsky_from_measure(c.sigma, n)
    esperados = schur_from_orthonormal(c.phi)
    assert np.max(np.abs(extraidos.gamma - esperados.gamma)) <= TOLERANCIAS['IDA_VUELTA_MEDIDA']


def test_parametros_invalidos():
    with pytest.raises(ErrorParametros):
        build_construction(1, EPSILON)
    with pytest.raises(ErrorParametros):
        build_construction(16, 0.5)
    with pytest.raises(ErrorParametros):
        build_construction(16, EPSILON, b=1.0)


def test_fila_de_crecimiento():
    c = build_construction(64, EPSILON)
    fila, extras = verify_growth(c)
    assert fila.n == 64
    assert abs(fila.comparator - EPSILON * np.log(64)) < 1e-15
    assert fila.sup_norm >= extras['phi_en_z_tilde'] - 1e-12
    assert 0 < fila.steklov_delta <= 1.0


def test_barrido_y_pendiente():
    reporte = growth_sweep(EPSILON, [16, 64, 256], trabajadores=2)
    assert [f.n for f in reporte.filas] == [16, 64, 256]
    assert set(reporte.extras) == {'16', '64', '256'}
    assert pendiente_crecimiento(reporte) > 0


def test_cociente_de_desacople_crece():
    tendencia = sec1_trend(EPSILON, [16, 256])
    assert tendencia[256] > tendencia[16]


def test_variante_de_rakhmanov():
    variante = rakhmanov_variant(16, 0.1, RepositorioConstantes.obtener('variante', 'C_prima'))
    assert variante.diagnostico.condicion('coincide_forma_cerrada').aprobado
    assert variante.diagnostico.condicion('denominador_exacto').aprobado
    assert variante.diagnostico.condicion('integral_inferior').aprobado
    assert abs(variante.constante_exacta - 2 * 1.2 / 1.3) < 1e-12
    assert set(variante.candidatos) == {'1', '2', '4', 'exacta'}
    with pytest.raises(ErrorParametros):
        rakhmanov_variant(15, 0.1)


def test_variante_acota_la_parte_real_de_M():
    variante = rakhmanov_variant(16, EPSILON, cota_re_M=RepositorioConstantes.obtener('variante', 'cota_re_M'))
    assert variante.diagnostico.condicion('cota_re_M').aprobado
    # En los nodos e^{iθ_j}, j < m, Re M_n vale 1/(2(1+2ε)) ≈ 0.4545
    assert variante.diagnostico.mediciones['re_M_sup'] >= 0.45
    with pytest.raises(ErrorVerificacion) as error:
        rakhmanov_variant(16, EPSILON, cota_re_M=0.3)
    assert error.value.errores[0]['criterio'] == 'cota_re_M'


def test_barrido_en_epsilon_escala_con_epsilon():
    barrido = epsilon_sweep((0.0125, 0.025, 0.05), [64, 256, 1024])
    assert sorted(barrido) == [0.0125, 0.025, 0.05]
    referencia = RepositorioConstantes.obtener('steklov', 'pendiente_por_epsilon')
    C_desviacion = RepositorioConstantes.obtener('steklov', 'C_desviacion')
    for epsilon, fila in barrido.items():
        assert fila['desviacion_sobre_epsilon'] <= C_desviacion, epsilon
        assert 0.5 * referencia <= fila['pendiente_sobre_epsilon'] <= 2.0 * referencia, epsilon


def test_suma_de_senos_acotada():
    cota = cota_seno_clasica()
    assert abs(cota - 1.8519370519824662) < 1e-12
    sumas = bounded_sine_sum([1, 4, 64, 1024])
    assert abs(sumas[1] - 1.0) < 1e-6
    assert all(valor < RepositorioConstantes.obtener('variante', 'cota_seno') for valor in sumas.values())
    assert sumas[1024] <= cota + 1e-6


if __name__ == "__main__":
    print("🧪 PRUEBAS DE LA CONSTRUCCIÓN DE STEKLOV")
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
