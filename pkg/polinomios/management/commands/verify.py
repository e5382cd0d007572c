from polinomios.constants import SUITES_ACEPTACION
from polinomios.management.commands._base import ComandoLaboratorio


class Command(ComandoLaboratorio):
    help = 'Ejecuta las suites de aceptación; --refreeze vuelve a medir las constantes congeladas'
    subcomando = 'verify'
    campos_propios = ('rapido', 'refreeze', 'suites')

    def agregar_argumentos(self, parser):
        parser.add_argument('--quick', dest='rapido', action='store_true', default=None,
                            help='Tamaños reducidos')
        parser.add_argument('--refreeze', action='store_true', default=None)
        parser.add_argument('--suites', help=f"Subconjunto separado por coma de: {', '.join(SUITES_ACEPTACION)}")
