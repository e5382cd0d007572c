from polinomios.management.commands._base import ComandoLaboratorio
from polinomios.services import PESOS_SEGMENTO


class Command(ComandoLaboratorio):
    help = 'Polinomios ortonormales en [−1, 1] vía la circunferencia, contrastados con Gram-Schmidt'
    subcomando = 'realline'
    campos_propios = ('K', 'peso')

    def agregar_argumentos(self, parser):
        parser.add_argument('--K', type=int, help='Grado máximo')
        parser.add_argument('--weight', dest='peso', choices=tuple(PESOS_SEGMENTO))
