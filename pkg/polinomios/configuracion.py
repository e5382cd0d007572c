"""
Acceso a la configuración del laboratorio (settings.LABORATORIO_OPUC).
"""

from typing import Any, Dict

from django.conf import settings

VALORES_POR_DEFECTO = {
    'MALLA_MINIMA': 4096,
    'SOBREMUESTREO': 8,
    'SOBREMUESTREO_STEKLOV': 32,
    'BARRIDO_MINIMO': 8192,
    'BARRIDO_FACTOR': 32,
    'TRABAJADORES': 4,
    'DIRECTORIO_REPORTES': 'media/reportes',
    'RUTA_CONSTANTES': 'polinomios/datos/constantes_congeladas.json',
}


class ConfiguracionLaboratorio:
    """
    Lee LABORATORIO_OPUC desde Django settings.
    Si settings no está configurado (uso como librería), aplica los valores por defecto.
    """

    @classmethod
    def obtener(cls) -> Dict[str, Any]:
        config = dict(VALORES_POR_DEFECTO)
        if settings.configured:
            config.update(getattr(settings, 'LABORATORIO_OPUC', {}) or {})
        return config

    @classmethod
    def valor(cls, clave: str) -> Any:
        return cls.obtener()[clave]
