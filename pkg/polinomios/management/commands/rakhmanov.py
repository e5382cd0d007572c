from polinomios.management.commands._base import ComandoLaboratorio


class Command(ComandoLaboratorio):
    help = 'Tabla de crecimiento de la construcción de Rakhmanov (masas en raíces de la unidad)'
    subcomando = 'rakhmanov'
    campos_propios = ('n', 'epsilon', 'm', 'masas')

    def agregar_argumentos(self, parser):
        parser.add_argument('--n', type=int, help='Grado único')
        parser.add_argument('--n-list', dest='lista_n', help='Grados separados por coma, p. ej. 64,256,1024')
        parser.add_argument('--eps', dest='epsilon', type=float, help='Masa total ε')
        parser.add_argument('--m', type=int, help='Número de masas (por defecto n/2)')
        parser.add_argument('--masses', dest='masas', type=float, nargs='+', help='Masas individuales')
