"""
Módulo: repositories/constantes_repository.py
Gestiona el archivo de constantes congeladas (bandas de crecimiento, constantes de Steklov).
"""

import json
import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict

from polinomios.configuracion import ConfiguracionLaboratorio
from polinomios.excepciones import ErrorParametros

logger = logging.getLogger(__name__)

# Usadas cuando el archivo no existe (primera corrida, antes de --refreeze)
CONSTANTES_INICIALES = {
    'rakhmanov': {
        'epsilon': 0.5,
        'c1': 0.25,
        'c2': 0.75,
        'C_maximizador': 10.0,
    },
    'steklov': {
        'epsilon': 0.05,
        'C_desviacion': 9.2,
        'C_a': 4.0,
        'c1': 1.8,
        'c2': 8.0,
        'C_maximizador': 10.0,
        'pendiente_por_epsilon': 0.72,
    },
    'variante': {
        'C_prima': 12.0,
        'cota_seno': 1.852,
        'cota_re_M': 1.0,
    },
    'sec1': {
        'factor_minimo': 1.05,
    },
}


class RepositorioConstantes:
    """
    Helper para leer y escribir las constantes de regresión.
    La ruta sale de settings.LABORATORIO_OPUC['RUTA_CONSTANTES'],
    que a su vez respeta la variable de entorno OPUC_CONSTANTES.
    """

    @classmethod
    def ruta(cls) -> Path:
        ruta = os.environ.get('OPUC_CONSTANTES') or ConfiguracionLaboratorio.valor('RUTA_CONSTANTES')
        return Path(ruta)

    @classmethod
    def cargar(cls) -> Dict[str, Any]:
        """
        Lee el archivo de constantes. Si no existe devuelve las iniciales.

        Returns:
            Dict por sección ('rakhmanov', 'steklov', 'variante', 'sec1')
        """
        ruta = cls.ruta()
        if not ruta.exists():
            logger.warning(f"⚠️ No existe {ruta}; se usan las constantes iniciales")
            return json.loads(json.dumps(CONSTANTES_INICIALES))
        try:
            with open(ruta, encoding='utf-8') as archivo:
                datos = json.load(archivo)
        except json.JSONDecodeError as e:
            raise ErrorParametros(f"Archivo de constantes ilegible ({ruta}): {e}") from e
        # Secciones faltantes se completan con las iniciales
        for seccion, valores in CONSTANTES_INICIALES.items():
            datos.setdefault(seccion, {})
            for clave, valor in valores.items():
                datos[seccion].setdefault(clave, valor)
        return datos

    @classmethod
    def obtener(cls, seccion: str, clave: str) -> float:
        datos = cls.cargar()
        try:
            return float(datos[seccion][clave])
        except KeyError as e:
            raise ErrorParametros(f"Constante desconocida: {seccion}.{clave}") from e

    @classmethod
    def guardar(cls, datos: Dict[str, Any]) -> Path:
        """
        Escribe las constantes con orden de claves estable.
        El campo 'congelado_en' queda fuera de las comparaciones de regresión.
        """
        ruta = cls.ruta()
        ruta.parent.mkdir(parents=True, exist_ok=True)
        contenido = dict(datos)
        contenido['congelado_en'] = datetime.now().isoformat(timespec='seconds')
        with open(ruta, 'w', encoding='utf-8') as archivo:
            json.dump(contenido, archivo, indent=2, sort_keys=True, ensure_ascii=False)
            archivo.write('\n')
        logger.info(f"📁 Constantes congeladas en {ruta}")
        return ruta
