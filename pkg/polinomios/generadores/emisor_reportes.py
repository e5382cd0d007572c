"""
Emisión de reportes de crecimiento y de documentos JSON de las corridas.

JSON: claves ordenadas, campo `generated_at` fuera del contrato de determinismo.
CSV: cabecera fija n,epsilon,sup_norm,argmax_theta,comparator,steklov_delta.
xlsx: hojas 'crecimiento' y 'diagnosticos' (openpyxl).
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Union

import pandas as pd

from polinomios.constants import FORMATOS_REPORTE
from polinomios.excepciones import ErrorParametros
from polinomios.generadores.generador_base import GeneradorBase
from polinomios.nucleo.diagnosticos import serializable
from polinomios.reportes import ReporteCrecimiento

logger = logging.getLogger(__name__)

CAMPO_MARCA_TIEMPO = 'generated_at'


def volcar_json(datos: Dict[str, Any]) -> str:
    return json.dumps(serializable(datos), indent=2, sort_keys=True, ensure_ascii=False) + '\n'


class EmisorReportes(GeneradorBase):

    def emitir_crecimiento(self, reporte: ReporteCrecimiento, formato: str = 'json',
                           ruta: Union[str, Path, None] = None) -> Path:
        formato = formato.lower()
        if formato not in FORMATOS_REPORTE:
            raise ErrorParametros(f"Formato de reporte desconocido: {formato} (use {', '.join(FORMATOS_REPORTE)})")
        destino = self.ruta_salida(reporte.construccion, formato, ruta)
        if formato == 'json':
            contenido = dict(reporte.a_dict())
            contenido[CAMPO_MARCA_TIEMPO] = datetime.now().isoformat(timespec='seconds')
            destino.write_text(volcar_json(contenido), encoding='utf-8')
        elif formato == 'csv':
            reporte.a_dataframe().to_csv(destino, index=False, float_format='%.17g', lineterminator='\n')
        else:
            with pd.ExcelWriter(destino, engine='openpyxl') as escritor:
                reporte.a_dataframe().to_excel(escritor, sheet_name='crecimiento', index=False)
                extras = pd.DataFrame.from_dict(serializable(reporte.extras), orient='index')
                extras.index.name = 'n'
                extras.to_excel(escritor, sheet_name='diagnosticos')
        logger.info(f"📁 Reporte {reporte.construccion} ({formato}, {len(reporte)} filas) en {destino}")
        return destino

    def emitir_json(self, datos: Dict[str, Any], tipo_archivo: str, ruta: Union[str, Path, None] = None) -> Path:
        destino = self.ruta_salida(tipo_archivo, 'json', ruta)
        contenido = dict(datos)
        contenido[CAMPO_MARCA_TIEMPO] = datetime.now().isoformat(timespec='seconds')
        destino.write_text(volcar_json(contenido), encoding='utf-8')
        logger.info(f"📁 {tipo_archivo} en {destino}")
        return destino

    def emitir_texto(self, texto: str, tipo_archivo: str, extension: str = 'txt',
                     ruta: Union[str, Path, None] = None) -> Path:
        destino = self.ruta_salida(tipo_archivo, extension, ruta)
        destino.write_text(texto, encoding='utf-8')
        logger.info(f"📁 {tipo_archivo} en {destino}")
        return destino


def emit_report(reporte: ReporteCrecimiento, formato: str = 'json', ruta: Union[str, Path, None] = None,
                directorio: Union[str, Path, None] = None) -> Path:
    """Escribe el reporte de crecimiento y devuelve la ruta del archivo"""
    return EmisorReportes(directorio).emitir_crecimiento(reporte, formato, ruta)


def leer_reporte_json(ruta: Union[str, Path]) -> ReporteCrecimiento:
    with open(ruta, encoding='utf-8') as archivo:
        datos = json.load(archivo)
    datos.pop(CAMPO_MARCA_TIEMPO, None)
    return ReporteCrecimiento.desde_dict(datos)


def contenido_determinista(ruta: Union[str, Path]) -> Dict[str, Any]:
    """Contenido de un JSON emitido sin la marca de tiempo"""
    with open(ruta, encoding='utf-8') as archivo:
        datos = json.load(archivo)
    datos.pop(CAMPO_MARCA_TIEMPO, None)
    return datos
