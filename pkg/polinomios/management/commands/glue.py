from polinomios.management.commands._base import ComandoLaboratorio


class Command(ComandoLaboratorio):
    help = 'Pega una cabeza de parámetros de Schur con la cola inducida por F̃ y verifica la ida y vuelta'
    subcomando = 'glue'
    campos_propios = ('n', 'epsilon', 'archivo_gamma', 'largo_cola')

    def agregar_argumentos(self, parser):
        parser.add_argument('--gamma-file', dest='archivo_gamma',
                            help='JSON con la cabeza [[re, im], ...]; si falta se sortea con --seed')
        parser.add_argument('--n', type=int, help='Largo de la cabeza sorteada')
        parser.add_argument('--eps', dest='epsilon', type=float, help='F̃ = 1 − 2εM')
        parser.add_argument('--tail', dest='largo_cola', type=int, help='Parámetros de la cola a verificar')
