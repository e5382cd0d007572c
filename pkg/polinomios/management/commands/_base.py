"""
Base común de los comandos del laboratorio: flags compartidos, construcción
de ConfiguracionCorrida (flags sobre YAML) y traducción del código de salida.
"""

from django.core.management.base import BaseCommand, CommandError

from polinomios.constants import CODIGOS_SALIDA, FORMATOS_REPORTE
from polinomios.excepciones import ErrorParametros
from polinomios.services import ConfiguracionCorrida, parsear_lista_n, run


def parsear_tolerancias(valores):
    """['COEFICIENTES=1e-9', ...] -> {'COEFICIENTES': 1e-9}"""
    tolerancias = {}
    for valor in valores or []:
        clave, _, numero = valor.partition('=')
        try:
            tolerancias[clave.strip().upper()] = float(numero)
        except ValueError as e:
            raise ErrorParametros(f"Tolerancia inválida: {valor} (use NOMBRE=valor)") from e
    return tolerancias


class ComandoLaboratorio(BaseCommand):
    subcomando = None
    # Opciones propias del subcomando que pasan tal cual a ConfiguracionCorrida
    campos_propios = ()

    def add_arguments(self, parser):
        parser.add_argument('--config', help='Archivo YAML con la configuración de la corrida')
        parser.add_argument('--out', dest='salida', help='Ruta del artefacto principal')
        parser.add_argument('--format', dest='formato', choices=FORMATOS_REPORTE, help='Formato del reporte')
        parser.add_argument('--grid-oversample', dest='sobremuestreo', type=int,
                            help='Puntos de malla por grado')
        parser.add_argument('--tolerance', dest='tolerancias', action='append', metavar='NOMBRE=VALOR',
                            help='Sobrescribe una tolerancia (repetible)')
        parser.add_argument('--workers', dest='trabajadores', type=int, help='Hilos para los barridos')
        parser.add_argument('--seed', dest='semilla', type=int, help='Semilla de los generadores aleatorios')
        parser.add_argument('--register', dest='registrar', action='store_true', default=None,
                            help='Guarda la corrida en la base de datos')
        self.agregar_argumentos(parser)

    def agregar_argumentos(self, parser):
        """Opciones propias del subcomando"""

    def configuracion(self, opciones) -> ConfiguracionCorrida:
        valores = {campo: opciones.get(campo) for campo in (
            'salida', 'formato', 'sobremuestreo', 'trabajadores', 'semilla', 'registrar',
        ) + tuple(self.campos_propios)}
        if opciones.get('lista_n'):
            valores['lista_n'] = parsear_lista_n(opciones['lista_n'])
        if opciones.get('tolerancias'):
            valores['tolerancias'] = parsear_tolerancias(opciones['tolerancias'])
        valores['subcomando'] = self.subcomando
        if opciones.get('config'):
            return ConfiguracionCorrida.desde_yaml(opciones['config'], **valores)
        return ConfiguracionCorrida(**{k: v for k, v in valores.items() if v is not None})

    def handle(self, *args, **opciones):
        try:
            config = self.configuracion(opciones)
        except ErrorParametros as e:
            raise CommandError(str(e), returncode=CODIGOS_SALIDA['ENTRADA_INVALIDA'])

        resultado = run(config)
        for tipo, ruta in resultado.artefactos.items():
            self.stdout.write(f"📁 {tipo}: {ruta}")
        if not resultado.exitosa:
            raise CommandError(resultado.mensaje or 'La corrida falló', returncode=resultado.codigo_salida)
        self.stdout.write(self.style.SUCCESS(f"✅ {self.subcomando} completado"))
