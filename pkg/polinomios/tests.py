import io
import tempfile
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from polinomios.constants import CODIGOS_SALIDA
from polinomios.models import CorridaLaboratorio


class ComandoMixin:

    def setUp(self):
        super().setUp()
        self._directorio = tempfile.TemporaryDirectory()
        self.directorio = Path(self._directorio.name)
        laboratorio = dict(settings.LABORATORIO_OPUC, DIRECTORIO_REPORTES=str(self.directorio))
        self._override = override_settings(LABORATORIO_OPUC=laboratorio)
        self._override.enable()

    def tearDown(self):
        self._override.disable()
        self._directorio.cleanup()
        super().tearDown()

    def ejecutar(self, *args, **opciones):
        salida = io.StringIO()
        call_command(*args, stdout=salida, stderr=io.StringIO(), **opciones)
        return salida.getvalue()


class ComandosTest(ComandoMixin, SimpleTestCase):

    def test_verify_rapido_por_suite(self):
        salida = self.ejecutar('verify', rapido=True, suites='matrices_transferencia')
        self.assertIn('✅ verify completado', salida)
        self.assertTrue(list(self.directorio.glob('verify_*.json')))

    def test_suite_desconocida_sale_con_2(self):
        with self.assertRaises(CommandError) as contexto:
            self.ejecutar('verify', rapido=True, suites='inexistente')
        self.assertEqual(contexto.exception.returncode, CODIGOS_SALIDA['ENTRADA_INVALIDA'])

    def test_rakhmanov_con_n_impar_sale_con_2(self):
        with self.assertRaises(CommandError) as contexto:
            self.ejecutar('rakhmanov', lista_n='8,9')
        self.assertEqual(contexto.exception.returncode, CODIGOS_SALIDA['ENTRADA_INVALIDA'])

    def test_steklov_build_sin_n(self):
        with self.assertRaises(CommandError) as contexto:
            self.ejecutar('steklov', 'build')
        self.assertEqual(contexto.exception.returncode, CODIGOS_SALIDA['ENTRADA_INVALIDA'])

    def test_steklov_build_csv(self):
        destino = self.directorio / 'pesos.csv'
        self.ejecutar('steklov', 'build', n=8, formato='csv', salida=str(destino))
        self.assertEqual(destino.read_text(encoding='utf-8').splitlines()[0], 'theta,weight')

    def test_rakhmanov_tabla_json(self):
        salida = self.ejecutar('rakhmanov', lista_n='8,16', epsilon=0.5)
        self.assertIn('📁 json', salida)

    def test_tolerancia_mal_escrita(self):
        with self.assertRaises(CommandError) as contexto:
            self.ejecutar('realline', K=2, tolerancias=['SEGMENTO'])
        self.assertEqual(contexto.exception.returncode, CODIGOS_SALIDA['ENTRADA_INVALIDA'])

    def test_configuracion_yaml(self):
        config = self.directorio / 'realline.yaml'
        config.write_text('subcommand: realline\nK: 3\nweight: arcoseno\n', encoding='utf-8')
        salida = self.ejecutar('realline', config=str(config))
        self.assertIn('✅ realline completado', salida)


class RegistroCorridasTest(ComandoMixin, TestCase):

    def test_corrida_exitosa_registrada(self):
        self.ejecutar('realline', K=3, registrar=True)
        corrida = CorridaLaboratorio.objects.get()
        self.assertEqual(corrida.estado, 'COMPLETADA')
        self.assertTrue(corrida.exitosa)
        self.assertIn('json', corrida.archivos_generados)
        self.assertEqual(corrida.configuracion['K'], 3)
        self.assertEqual(str(corrida), 'Corrida realline - COMPLETADA')

    def test_corrida_invalida_registrada(self):
        with self.assertRaises(CommandError):
            self.ejecutar('glue', archivo_gamma=str(self.directorio / 'no_existe.json'), registrar=True)
        corrida = CorridaLaboratorio.objects.get()
        self.assertEqual(corrida.estado, 'ERROR')
        self.assertEqual(corrida.codigo_salida, CODIGOS_SALIDA['ENTRADA_INVALIDA'])
        self.assertEqual(corrida.total_errores, 1)

    def test_sin_registro_no_crea_filas(self):
        self.ejecutar('realline', K=2)
        self.assertFalse(CorridaLaboratorio.objects.exists())
