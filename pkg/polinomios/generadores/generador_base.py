"""
Generador base con la lógica común de nombres y rutas de los artefactos de una corrida.
"""

import glob
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Union

from polinomios.configuracion import ConfiguracionLaboratorio

logger = logging.getLogger(__name__)


class GeneradorBase:
    """
    Clase base para los generadores de reportes.
    Los archivos sin ruta explícita van a DIRECTORIO_REPORTES con índice incremental.
    """

    def __init__(self, directorio: Union[str, Path, None] = None):
        self.base_path = str(directorio or ConfiguracionLaboratorio.valor('DIRECTORIO_REPORTES'))
        os.makedirs(self.base_path, exist_ok=True)

    def generar_nombre_archivo_con_indice(self, tipo_archivo: str, extension: str) -> str:
        """
        Formato: {tipo}_{YYYYMMDD}_{###}.{extension}
        Ejemplos:
            - rakhmanov_20261018_001.json
            - steklov_sweep_20261018_002.csv
        """
        timestamp = datetime.now().strftime("%Y%m%d")
        patron = os.path.join(self.base_path, f"{tipo_archivo}_{timestamp}_*.{extension}")

        indices_existentes = []
        for archivo in glob.glob(patron):
            partes = os.path.basename(archivo)[:-len(extension) - 1].split('_')
            try:
                indices_existentes.append(int(partes[-1]))
            except (ValueError, IndexError):
                continue

        siguiente_indice = max(indices_existentes) + 1 if indices_existentes else 1
        nombre_archivo = f"{tipo_archivo}_{timestamp}_{siguiente_indice:03d}.{extension}"
        logger.info(f"📁 Generando archivo: {nombre_archivo}")
        return nombre_archivo

    def ruta_salida(self, tipo_archivo: str, extension: str, ruta: Union[str, Path, None] = None) -> Path:
        """La ruta pedida (creando su carpeta) o un nombre indexado en el directorio base"""
        if ruta:
            ruta = Path(ruta)
            ruta.parent.mkdir(parents=True, exist_ok=True)
            return ruta
        return Path(self.base_path) / self.generar_nombre_archivo_con_indice(tipo_archivo, extension)
