from polinomios.constants import ACCIONES_STEKLOV
from polinomios.management.commands._base import ComandoLaboratorio


class Command(ComandoLaboratorio):
    help = 'Construcción de clase Steklov: build | sweep | variant'
    subcomando = 'steklov'
    campos_propios = ('accion', 'n', 'epsilon', 'b')

    def agregar_argumentos(self, parser):
        parser.add_argument('accion', choices=ACCIONES_STEKLOV)
        parser.add_argument('--n', type=int, help='Grado (build, variant)')
        parser.add_argument('--n-list', dest='lista_n', help='Grados del barrido separados por coma')
        parser.add_argument('--eps', dest='epsilon', type=float)
        parser.add_argument('--b', type=float, help='Constante de D_n = M_n + b (> 1)')
