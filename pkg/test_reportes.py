#!/usr/bin/env python3
"""
Pruebas de reportes de crecimiento (JSON, CSV, xlsx), nombres indexados
de artefactos y configuración de corridas.
"""
import json
import os
import sys
import tempfile
from pathlib import Path

import django

# Configurar Django
sys.path.append(os.path.dirname(os.path.abspath(__file__)))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'laboratorio.settings')
django.setup()

import openpyxl
import pandas as pd
import pytest
import yaml

from polinomios.constants import CODIGOS_SALIDA, COLUMNAS_REPORTE, TOLERANCIAS
from polinomios.excepciones import ErrorParametros
from polinomios.generadores.emisor_reportes import (
    CAMPO_MARCA_TIEMPO,
    EmisorReportes,
    contenido_determinista,
    emit_report,
    leer_reporte_json,
)
from polinomios.reportes import FilaCrecimiento, ReporteCrecimiento
from polinomios.services import ConfiguracionCorrida, parsear_lista_n, run, tolerancias_temporales


def reporte_de_prueba():
    reporte = ReporteCrecimiento('steklov', 'eps*log(n)')
    reporte.agregar(FilaCrecimiento(256, 0.05, 1.31, 0.012, 0.05 * 5.545, 0.97))
    reporte.agregar(FilaCrecimiento(64, 0.05, 1.22, -0.049, 0.05 * 4.159, 0.98))
    reporte.extras['64'] = {'a': 1.01}
    return reporte


def test_filas_ordenadas_y_banda():
    reporte = reporte_de_prueba()
    assert [f.n for f in reporte.filas] == [64, 256]
    banda = reporte.banda_cocientes()
    assert banda['minimo'] <= banda['maximo']
    assert abs(banda['amplitud'] - banda['maximo'] / banda['minimo']) < 1e-15


def test_csv_con_columnas_fijas():
    with tempfile.TemporaryDirectory() as directorio:
        ruta = emit_report(reporte_de_prueba(), 'csv', directorio=directorio)
        primera = Path(ruta).read_text(encoding='utf-8').splitlines()[0]
        assert primera == ','.join(COLUMNAS_REPORTE)
        df = pd.read_csv(ruta)
        assert list(df['n']) == [64, 256]
        assert df['sup_norm'].iloc[1] == 1.31


def test_json_determinista_salvo_marca_de_tiempo():
    with tempfile.TemporaryDirectory() as directorio:
        primera = emit_report(reporte_de_prueba(), 'json', directorio=directorio)
        segunda = emit_report(reporte_de_prueba(), 'json', directorio=directorio)
        assert primera != segunda
        assert contenido_determinista(primera) == contenido_determinista(segunda)
        with open(primera, encoding='utf-8') as archivo:
            assert CAMPO_MARCA_TIEMPO in json.load(archivo)
        leido = leer_reporte_json(primera)
        assert [f.a_dict() for f in leido.filas] == [f.a_dict() for f in reporte_de_prueba().filas]
        assert leido.construccion == 'steklov'


def test_xlsx_con_dos_hojas():
    with tempfile.TemporaryDirectory() as directorio:
        ruta = emit_report(reporte_de_prueba(), 'xlsx', directorio=directorio)
        libro = openpyxl.load_workbook(ruta)
        assert libro.sheetnames == ['crecimiento', 'diagnosticos']
        encabezado = [celda.value for celda in libro['crecimiento'][1]]
        assert encabezado == COLUMNAS_REPORTE


def test_formato_desconocido():
    with tempfile.TemporaryDirectory() as directorio:
        with pytest.raises(ErrorParametros):
            emit_report(reporte_de_prueba(), 'parquet', directorio=directorio)


def test_nombres_indexados():
    with tempfile.TemporaryDirectory() as directorio:
        emisor = EmisorReportes(directorio)
        primera = emisor.emitir_texto('a', 'verify_errores')
        segunda = emisor.emitir_texto('b', 'verify_errores')
        assert primera.name.endswith('_001.txt')
        assert segunda.name.endswith('_002.txt')
        explicita = emisor.emitir_json({'x': 1}, 'glue', Path(directorio) / 'sub' / 'sesion.json')
        assert explicita.exists()


def test_configuracion_invalida():
    with pytest.raises(ErrorParametros):
        ConfiguracionCorrida('desconocido')
    with pytest.raises(ErrorParametros):
        ConfiguracionCorrida('steklov')
    with pytest.raises(ErrorParametros):
        ConfiguracionCorrida('rakhmanov', n=0)
    with pytest.raises(ErrorParametros):
        ConfiguracionCorrida('rakhmanov', formato='pdf')
    with pytest.raises(ErrorParametros):
        ConfiguracionCorrida('verify', tolerancias={'INVENTADA': 1.0})
    with pytest.raises(ErrorParametros):
        parsear_lista_n('64,abc')
    assert parsear_lista_n('64, 256,1024') == [64, 256, 1024]


def test_configuracion_desde_yaml():
    with tempfile.TemporaryDirectory() as directorio:
        ruta = Path(directorio) / 'corrida.yaml'
        ruta.write_text(yaml.safe_dump({
            'subcommand': 'steklov', 'action': 'sweep', 'n_list': '64,256', 'eps': 0.05, 'format': 'csv',
        }), encoding='utf-8')
        config = ConfiguracionCorrida.desde_yaml(ruta, formato='json', epsilon=None)
        assert config.accion == 'sweep'
        assert config.lista_n == [64, 256]
        assert config.formato == 'json'
        assert config.epsilon == 0.05

        ruta.write_text('subcommand: steklov\nfoo: 1\n', encoding='utf-8')
        with pytest.raises(ErrorParametros):
            ConfiguracionCorrida.desde_yaml(ruta)


def test_tolerancias_temporales():
    original = TOLERANCIAS['COEFICIENTES']
    with tolerancias_temporales({'COEFICIENTES': 1e-3}):
        assert TOLERANCIAS['COEFICIENTES'] == 1e-3
    assert TOLERANCIAS['COEFICIENTES'] == original


def test_corrida_recta_real():
    with tempfile.TemporaryDirectory() as directorio:
        config = ConfiguracionCorrida('realline', K=4, peso='chebyshev_u', salida=str(Path(directorio) / 'p.json'))
        resultado = run(config, directorio)
        assert resultado.codigo_salida == CODIGOS_SALIDA['EXITO']
        datos = contenido_determinista(resultado.artefactos['json'])
        assert len(datos['polynomials']) == 5
        assert datos['max_coefficient_difference'] <= TOLERANCIAS['SEGMENTO']


def test_corrida_pegado_con_cabeza_invalida():
    with tempfile.TemporaryDirectory() as directorio:
        archivo = Path(directorio) / 'gamma.json'
        archivo.write_text(json.dumps([[0.2, 0.0], [1.0, 0.5]]), encoding='utf-8')
        resultado = run(ConfiguracionCorrida('glue', archivo_gamma=str(archivo)), directorio)
        assert resultado.codigo_salida == CODIGOS_SALIDA['ENTRADA_INVALIDA']
        assert not resultado.artefactos


def test_corrida_pegado_con_semilla():
    with tempfile.TemporaryDirectory() as directorio:
        resultado = run(ConfiguracionCorrida('glue', n=4, largo_cola=6, semilla=5), directorio)
        assert resultado.exitosa, resultado.mensaje
        datos = contenido_determinista(resultado.artefactos['json'])
        assert datos['roundtrip_error'] <= TOLERANCIAS['IDA_VUELTA_MEDIDA']
        assert datos['szego_factorization']['aprobado']


def test_corrida_rakhmanov_con_masas_arbitrarias():
    with tempfile.TemporaryDirectory() as directorio:
        config = ConfiguracionCorrida('rakhmanov', n=16, masas=[0.1, 0.2, 0.05], formato='csv')
        resultado = run(config, directorio)
        assert resultado.exitosa, resultado.mensaje
        df = pd.read_csv(resultado.artefactos['csv'])
        assert list(df.columns) == COLUMNAS_REPORTE
        assert df['steklov_delta'].iloc[0] == pytest.approx(1 / 1.35)


if __name__ == "__main__":
    print("🧪 PRUEBAS DE REPORTES Y CORRIDAS")
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
