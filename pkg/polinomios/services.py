"""
Orquestación de corridas: configuración (flags o YAML), ejecución de cada
subcomando, emisión de artefactos y registro opcional en CorridaLaboratorio.
"""

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional

import numpy as np
import yaml

from polinomios.configuracion import ConfiguracionLaboratorio
from polinomios.constants import (
    ACCIONES_STEKLOV,
    CODIGOS_SALIDA,
    FORMATOS_REPORTE,
    PARAMETROS_POR_DEFECTO,
    SUBCOMANDOS,
    TOLERANCIAS,
)
from polinomios.excepciones import ErrorLaboratorio, ErrorParametros, ErrorVerificacion
from polinomios.generadores.emisor_reportes import EmisorReportes
from polinomios.nucleo.medida_circular import MallaUnitaria, MedidaCircular, steklov_check
from polinomios.nucleo.opuc import FuncionCaratheodory, SecuenciaSchur, szego_recursion
from polinomios.nucleo.pegado import (
    EntradaPegado,
    decoupling_diagnostics,
    glue_session_report,
    glued_weight,
    szego_factorization_check,
    validate_glue_input,
)
from polinomios.nucleo.polinomio import PolinomioComplejo, maximo_en_circunferencia
from polinomios.nucleo.rakhmanov import (
    ColocacionMasas,
    growth_table,
    rakhmanov_update,
    verify_kernel_condition,
)
from polinomios.nucleo.recta_real import (
    MedidaSegmento,
    boundedness_transfer,
    polinomios_a_json,
    segment_gram_schmidt_oracle,
    segment_polys_via_circle,
    segment_to_circle,
    volcar_tabla_csv,
)
from polinomios.nucleo.steklov import (
    build_construction,
    coeficientes_L,
    desviacion_steklov,
    fejer_smooth,
    growth_sweep,
    pendiente_crecimiento,
    rakhmanov_variant,
    sec1_trend,
    verify_growth,
)
from polinomios.reportes import FilaCrecimiento, ReporteCrecimiento
from polinomios.repositories.constantes_repository import RepositorioConstantes

logger = logging.getLogger(__name__)

PESOS_SEGMENTO = {
    'arcoseno': MedidaSegmento.arcoseno,
    'chebyshev_u': MedidaSegmento.chebyshev_u,
    'legendre': MedidaSegmento.legendre,
}

# Claves aceptadas en YAML con el nombre de su flag
ALIAS_YAML = {
    'subcommand': 'subcomando',
    'action': 'accion',
    'eps': 'epsilon',
    'n_list': 'lista_n',
    'n-list': 'lista_n',
    'masses': 'masas',
    'grid_oversample': 'sobremuestreo',
    'tolerances': 'tolerancias',
    'out': 'salida',
    'format': 'formato',
    'quick': 'rapido',
    'tail': 'largo_cola',
    'seed': 'semilla',
    'workers': 'trabajadores',
    'weight': 'peso',
    'gamma_file': 'archivo_gamma',
    'register': 'registrar',
    'tail_length': 'largo_cola',
}


@dataclass
class ConfiguracionCorrida:
    subcomando: str
    accion: Optional[str] = None
    n: Optional[int] = None
    lista_n: List[int] = field(default_factory=list)
    epsilon: Optional[float] = None
    b: Optional[float] = None
    m: Optional[int] = None
    masas: Optional[List[float]] = None
    sobremuestreo: Optional[int] = None
    tolerancias: Dict[str, float] = field(default_factory=dict)
    salida: Optional[str] = None
    formato: str = 'json'
    largo_cola: int = 16
    K: int = 8
    peso: str = 'arcoseno'
    archivo_gamma: Optional[str] = None
    semilla: int = 20240611
    rapido: bool = False
    refreeze: bool = False
    registrar: bool = False
    trabajadores: Optional[int] = None
    suites: Optional[List[str]] = None

    def __post_init__(self):
        self.validar()

    @classmethod
    def desde_yaml(cls, ruta, **sobrescritos) -> 'ConfiguracionCorrida':
        """Valores del YAML; los flags explícitos (no None) tienen prioridad"""
        try:
            with open(ruta, encoding='utf-8') as archivo:
                datos = yaml.safe_load(archivo) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ErrorParametros(f"No se pudo leer la configuración {ruta}: {e}") from e
        if not isinstance(datos, dict):
            raise ErrorParametros(f"La configuración {ruta} debe ser un mapeo")
        validos = {f.name for f in fields(cls)}
        valores = {}
        for clave, valor in datos.items():
            clave = ALIAS_YAML.get(clave, clave)
            if clave not in validos:
                raise ErrorParametros(f"Clave desconocida en {ruta}: {clave}")
            valores[clave] = valor
        valores.update({k: v for k, v in sobrescritos.items() if v is not None})
        return cls(**valores)

    def validar(self) -> None:
        if self.subcomando not in SUBCOMANDOS:
            raise ErrorParametros(f"Subcomando desconocido: {self.subcomando}")
        if self.subcomando == 'steklov' and self.accion not in ACCIONES_STEKLOV:
            raise ErrorParametros(f"steklov requiere una acción: {', '.join(ACCIONES_STEKLOV)}")
        if self.formato not in FORMATOS_REPORTE:
            raise ErrorParametros(f"Formato desconocido: {self.formato}")
        if isinstance(self.lista_n, str):
            self.lista_n = parsear_lista_n(self.lista_n)
        self.lista_n = [int(n) for n in self.lista_n or []]
        for n in ([self.n] if self.n is not None else []) + self.lista_n:
            if n < 1:
                raise ErrorParametros(f"n debe ser positivo (n = {n})")
        if self.epsilon is not None and self.epsilon < 0:
            raise ErrorParametros(f"ε debe ser no negativo (ε = {self.epsilon})")
        if self.masas is not None and self.m is None:
            self.m = len(self.masas)
        if self.m is not None and self.m < 1:
            raise ErrorParametros(f"m debe ser positivo (m = {self.m})")
        if self.sobremuestreo is not None and self.sobremuestreo < 2:
            raise ErrorParametros("El sobremuestreo de la malla debe ser >= 2")
        desconocidas = [t for t in self.tolerancias if t not in TOLERANCIAS]
        if desconocidas:
            raise ErrorParametros(f"Tolerancias desconocidas: {', '.join(desconocidas)}")
        if self.peso not in PESOS_SEGMENTO:
            raise ErrorParametros(f"Peso desconocido: {self.peso} (use {', '.join(PESOS_SEGMENTO)})")
        if self.K < 0:
            raise ErrorParametros(f"K debe ser no negativo (K = {self.K})")
        if not 1 <= self.largo_cola <= PARAMETROS_POR_DEFECTO['LARGO_COLA_MAXIMO']:
            raise ErrorParametros(f"Largo de cola fuera de [1, {PARAMETROS_POR_DEFECTO['LARGO_COLA_MAXIMO']}]")
        if isinstance(self.suites, str):
            self.suites = [s for s in self.suites.replace(' ', '').split(',') if s]

    def lista(self, por_defecto: List[int]) -> List[int]:
        if self.lista_n:
            return self.lista_n
        if self.n is not None:
            return [self.n]
        return list(por_defecto)

    def a_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ResultadoCorrida:
    codigo_salida: int
    artefactos: Dict[str, str] = field(default_factory=dict)
    resumen: Dict[str, Any] = field(default_factory=dict)
    errores: List[Dict[str, Any]] = field(default_factory=list)
    mensaje: str = ''

    @property
    def exitosa(self) -> bool:
        return self.codigo_salida == CODIGOS_SALIDA['EXITO']


def parsear_lista_n(texto: str) -> List[int]:
    """'64,256,1024' -> [64, 256, 1024]"""
    try:
        return [int(parte) for parte in str(texto).replace(' ', '').split(',') if parte]
    except ValueError as e:
        raise ErrorParametros(f"Lista de n inválida: {texto}") from e


@contextmanager
def tolerancias_temporales(sobrescritas: Dict[str, float]):
    originales = {clave: TOLERANCIAS[clave] for clave in sobrescritas}
    TOLERANCIAS.update({clave: float(valor) for clave, valor in sobrescritas.items()})
    try:
        yield
    finally:
        TOLERANCIAS.update(originales)


# ----------------------------------------------------------------------
# Subcomandos
# ----------------------------------------------------------------------

def _corrida_rakhmanov(config: ConfiguracionCorrida, emisor: EmisorReportes) -> ResultadoCorrida:
    epsilon = PARAMETROS_POR_DEFECTO['EPSILON_RAKHMANOV'] if config.epsilon is None else config.epsilon
    lista_n = config.lista(PARAMETROS_POR_DEFECTO['LISTA_N_RAKHMANOV'])
    if config.masas is None and (config.m is None or all(config.m == n // 2 for n in lista_n)):
        reporte = growth_table(epsilon, lista_n, config.trabajadores)
    else:
        reporte = ReporteCrecimiento('rakhmanov', '1 + eps*log(n)')
        for n in lista_n:
            fila, extras = _fila_rakhmanov_general(n, epsilon, config)
            reporte.agregar(fila)
            reporte.extras[str(n)] = extras
    ruta = emisor.emitir_crecimiento(reporte, config.formato, config.salida)
    return ResultadoCorrida(CODIGOS_SALIDA['EXITO'], {config.formato: str(ruta)},
                            {'filas': len(reporte), 'banda': reporte.banda_cocientes()})


def _fila_rakhmanov_general(n: int, epsilon: float, config: ConfiguracionCorrida):
    """m masas arbitrarias en las primeras m raíces de la unidad, por la fórmula de actualización"""
    m = config.m
    if m >= n:
        raise ErrorParametros(f"Se requieren menos masas ({m}) que el grado ({n})")
    masas = config.masas if config.masas is not None else [epsilon / m] * m
    if len(masas) != m:
        raise ErrorParametros(f"Se dieron {len(masas)} masas para m = {m}")
    malla = MallaUnitaria.para_grado(n, config.sobremuestreo)
    colocacion = ColocacionMasas.en_raices_de_la_unidad(n, range(m), masas, MedidaCircular.lebesgue(malla))
    polinomio = rakhmanov_update(colocacion, n)
    config_lab = ConfiguracionLaboratorio.obtener()
    tamano = max(config_lab['BARRIDO_MINIMO'], config_lab['BARRIDO_FACTOR'] * n)
    ventana = 10.0 / n
    supremo, theta = maximo_en_circunferencia(polinomio.Phi, tamano, ((0.0, ventana), (np.pi, ventana)))
    fila = FilaCrecimiento(n, epsilon, supremo, theta, 1.0 + epsilon * np.log(n), 1.0 / (1.0 + sum(masas)))
    return fila, {'condicion_kernel': verify_kernel_condition(colocacion, n), 'masas': list(masas)}


def _corrida_steklov(config: ConfiguracionCorrida, emisor: EmisorReportes) -> ResultadoCorrida:
    epsilon = PARAMETROS_POR_DEFECTO['EPSILON_STEKLOV'] if config.epsilon is None else config.epsilon
    if config.accion == 'sweep':
        reporte = growth_sweep(epsilon, config.lista(PARAMETROS_POR_DEFECTO['LISTA_N_STEKLOV']),
                               config.b, config.trabajadores)
        ruta = emisor.emitir_crecimiento(reporte, config.formato, config.salida)
        resumen = {'filas': len(reporte), 'banda': reporte.banda_cocientes()}
        if len(reporte) >= 2:
            resumen['pendiente'] = pendiente_crecimiento(reporte)
        return ResultadoCorrida(CODIGOS_SALIDA['EXITO'], {config.formato: str(ruta)}, resumen)

    if config.n is None:
        raise ErrorParametros(f"steklov {config.accion} requiere --n")

    if config.accion == 'variant':
        variante = rakhmanov_variant(config.n, epsilon, RepositorioConstantes.obtener('variante', 'C_prima'),
                                     cota_re_M=RepositorioConstantes.obtener('variante', 'cota_re_M'))
        datos = {
            'n': variante.n,
            'epsilon': variante.epsilon,
            'b': variante.b,
            'a': variante.a,
            'exact_constant': variante.constante_exacta,
            'best_candidate': variante.mejor_candidato(),
            'candidates': variante.candidatos,
            'phi_star': variante.phi_estrella.a_json(),
            'diagnostic': variante.diagnostico.a_dict(),
        }
        ruta = emisor.emitir_json(datos, 'steklov_variant', config.salida)
        if not variante.diagnostico.aprobado:
            fallidas = [c.a_dict() for c in variante.diagnostico.fallidas()]
            return ResultadoCorrida(CODIGOS_SALIDA['VERIFICACION_FALLIDA'], {'json': str(ruta)},
                                    {'mejor_candidato': variante.mejor_candidato()},
                                    fallidas, 'La variante no cumple todas sus condiciones')
        return ResultadoCorrida(CODIGOS_SALIDA['EXITO'], {'json': str(ruta)},
                                {'mejor_candidato': variante.mejor_candidato()})

    c = build_construction(config.n, epsilon, config.b)
    fila, extras = verify_growth(c)
    delta = 1.0 - RepositorioConstantes.obtener('steklov', 'C_desviacion') * epsilon
    certificado = steklov_check(c.sigma, delta)
    resumen = {'growth_row': fila.a_dict(), 'deviation': desviacion_steklov(c), 'certificate': certificado.a_dict()}
    if config.formato == 'csv':
        ruta = c.sigma.volcar_pesos_csv(emisor.ruta_salida('steklov_build', 'csv', config.salida))
        artefactos = {'csv': str(ruta)}
    else:
        datos = dict(c.a_json())
        datos.update(resumen)
        datos['extras'] = extras
        artefactos = {'json': str(emisor.emitir_json(datos, 'steklov_build', config.salida))}
    return ResultadoCorrida(CODIGOS_SALIDA['EXITO'], artefactos, resumen)


def entrada_pegado_desde_config(config: ConfiguracionCorrida) -> EntradaPegado:
    """Cabeza desde archivo (o aleatoria con semilla) y F̃ = 1 − 2εM de la construcción de Steklov"""
    if config.archivo_gamma:
        try:
            with open(config.archivo_gamma, encoding='utf-8') as archivo:
                cabeza = SecuenciaSchur.desde_json(json.load(archivo))
        except (OSError, json.JSONDecodeError) as e:
            raise ErrorParametros(f"No se pudo leer {config.archivo_gamma}: {e}") from e
    else:
        n = 8 if config.n is None else config.n
        rng = np.random.default_rng(config.semilla)
        cabeza = SecuenciaSchur(0.5 * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n)))
    n = len(cabeza)
    epsilon = PARAMETROS_POR_DEFECTO['EPSILON_STEKLOV'] if config.epsilon is None else config.epsilon
    if not 0 <= epsilon <= PARAMETROS_POR_DEFECTO['EPSILON_MAXIMO']:
        raise ErrorParametros(f"ε = {epsilon} fuera de [0, {PARAMETROS_POR_DEFECTO['EPSILON_MAXIMO']}]")
    grado_F = max(n, 2)
    M = fejer_smooth(coeficientes_L(grado_F - 1), grado_F)
    F = FuncionCaratheodory(PolinomioComplejo.constante(1.0, grado_F - 1) - M.M * (2.0 * epsilon))
    malla = MallaUnitaria.para_grado(n + grado_F, config.sobremuestreo)
    return EntradaPegado(szego_recursion(cabeza, n)[n], F, malla)


def _corrida_pegado(config: ConfiguracionCorrida, emisor: EmisorReportes) -> ResultadoCorrida:
    entrada = entrada_pegado_desde_config(config)
    validacion = validate_glue_input(entrada)
    if not validacion.aprobado:
        raise ErrorParametros(
            f"Entrada de pegado inválida: {', '.join(c.nombre for c in validacion.fallidas())}"
        )
    medida = glued_weight(entrada, config.largo_cola)
    sesion = glue_session_report(medida, config.largo_cola)
    sesion['szego_factorization'] = szego_factorization_check(medida).a_dict()
    sesion['decoupling'] = decoupling_diagnostics(entrada, medida).a_dict()
    ruta = emisor.emitir_json(sesion, 'glue', config.salida)
    artefactos = {'json': str(ruta)}
    if sesion['roundtrip_error'] > TOLERANCIAS['IDA_VUELTA_MEDIDA']:
        error = {'suite': 'glue', 'criterio': 'ida_vuelta', 'descripcion': 'head ++ tail recuperados',
                 'valor': sesion['roundtrip_error'], 'umbral': TOLERANCIAS['IDA_VUELTA_MEDIDA']}
        return ResultadoCorrida(CODIGOS_SALIDA['VERIFICACION_FALLIDA'], artefactos, {}, [error],
                                f"Ida y vuelta del pegado con error {sesion['roundtrip_error']:.3e}")
    return ResultadoCorrida(CODIGOS_SALIDA['EXITO'], artefactos,
                            {'roundtrip_error': sesion['roundtrip_error'], 'n': sesion['n']})


def _corrida_recta_real(config: ConfiguracionCorrida, emisor: EmisorReportes) -> ResultadoCorrida:
    rho = PESOS_SEGMENTO[config.peso]()
    K = config.K
    via_circulo = segment_polys_via_circle(rho, K)
    oraculo = segment_gram_schmidt_oracle(rho, K)
    diferencia = max(
        float(np.max(np.abs(np.pad(P.coef, (0, K + 1 - P.coef.size)) - np.pad(Q.coef, (0, K + 1 - Q.coef.size)))))
        for P, Q in zip(via_circulo, oraculo)
    )
    tolerancia = TOLERANCIAS['SEGMENTO'] if rho.factor_arcoseno is not None else TOLERANCIAS['SEGMENTO_SUAVE']
    resumen = {'weight': config.peso, 'K': K, 'max_coefficient_difference': diferencia, 'tolerance': tolerancia}
    if config.formato == 'csv':
        ruta = volcar_tabla_csv(via_circulo, emisor.ruta_salida('realline', 'csv', config.salida))
        artefactos = {'csv': str(ruta)}
    else:
        transferencia = boundedness_transfer(segment_to_circle(rho), min(K, 8))
        datos = dict(resumen)
        datos['polynomials'] = polinomios_a_json(via_circulo)
        datos['oracle'] = polinomios_a_json(oraculo)
        datos['boundedness_transfer'] = transferencia.to_dict(orient='records')
        artefactos = {'json': str(emisor.emitir_json(datos, 'realline', config.salida))}
    if diferencia > tolerancia:
        error = {'suite': 'realline', 'criterio': 'oraculo_segmento', 'descripcion': 'reducción contra oráculo',
                 'valor': diferencia, 'umbral': tolerancia}
        return ResultadoCorrida(CODIGOS_SALIDA['VERIFICACION_FALLIDA'], artefactos, resumen, [error],
                                f"La reducción difiere del oráculo en {diferencia:.3e}")
    return ResultadoCorrida(CODIGOS_SALIDA['EXITO'], artefactos, resumen)


def _corrida_verificacion(config: ConfiguracionCorrida, emisor: EmisorReportes) -> ResultadoCorrida:
    from polinomios.validaciones.verificador_maestro import VerificadorMaestro

    artefactos = {}
    if config.refreeze:
        congeladas = congelar_constantes(config.trabajadores)
        artefactos['constantes'] = str(RepositorioConstantes.guardar(congeladas))

    verificador = VerificadorMaestro(rapido=config.rapido, semilla=config.semilla)
    resultado = verificador.ejecutar_verificaciones_completas(config.suites)
    datos = {
        'mode': resultado['modo'],
        'success': resultado['verificacion_exitosa'],
        'summary': resultado['resumen'],
        'errors': resultado['errores_totales'],
        'measurements': resultado['mediciones'],
    }
    artefactos['json'] = str(emisor.emitir_json(datos, 'verify', config.salida))
    formato_texto = 'csv' if config.formato == 'csv' else 'texto'
    reporte = verificador.generar_reporte_errores(formato_texto)
    extension = 'csv' if formato_texto == 'csv' else 'txt'
    artefactos[extension] = str(emisor.emitir_texto(reporte, 'verify_errores', extension))

    codigo = CODIGOS_SALIDA['EXITO'] if resultado['verificacion_exitosa'] else CODIGOS_SALIDA['VERIFICACION_FALLIDA']
    mensaje = '' if resultado['verificacion_exitosa'] else reporte
    return ResultadoCorrida(codigo, artefactos, resultado['resumen'], resultado['errores_totales'], mensaje)


CORRIDAS = {
    'rakhmanov': _corrida_rakhmanov,
    'steklov': _corrida_steklov,
    'glue': _corrida_pegado,
    'realline': _corrida_recta_real,
    'verify': _corrida_verificacion,
}


# ----------------------------------------------------------------------
# Constantes congeladas
# ----------------------------------------------------------------------

def congelar_constantes(trabajadores: Optional[int] = None) -> Dict[str, Any]:
    """
    Mide las constantes de regresión a tamaño completo. Las bandas se ensanchan
    un 25% a cada lado de lo medido.
    """
    constantes = RepositorioConstantes.cargar()
    holgura = 1.25

    rakhmanov = constantes['rakhmanov']
    reporte = growth_table(rakhmanov['epsilon'], PARAMETROS_POR_DEFECTO['LISTA_N_RAKHMANOV'], trabajadores)
    banda = reporte.banda_cocientes()
    rakhmanov.update(c1=banda['minimo'] / holgura, c2=banda['maximo'] * holgura)

    steklov = constantes['steklov']
    epsilon = steklov['epsilon']
    reporte = growth_sweep(epsilon, PARAMETROS_POR_DEFECTO['LISTA_N_STEKLOV'], trabajadores=trabajadores)
    banda = reporte.banda_cocientes()
    desviaciones = [desviacion_steklov(build_construction(n, epsilon)) for n in (64, 1024)]
    desviacion_maxima = max(d['desviacion_maxima'] for d in desviaciones)
    steklov.update(
        c1=banda['minimo'] / holgura,
        c2=banda['maximo'] * holgura,
        pendiente_por_epsilon=pendiente_crecimiento(reporte) / epsilon,
        C_desviacion=float(np.ceil(10.0 * holgura * desviacion_maxima / epsilon) / 10.0),
    )

    tendencia = sec1_trend(epsilon, [64, 4096])
    factor = tendencia[4096] / tendencia[64]
    constantes['sec1']['factor_minimo'] = 1.0 + (factor - 1.0) / 2.0
    logger.info(f"Constantes medidas: Rakhmanov [{rakhmanov['c1']:.4f}, {rakhmanov['c2']:.4f}], "
                f"Steklov [{steklov['c1']:.4f}, {steklov['c2']:.4f}], sec1 {factor:.4f}")
    return constantes


# ----------------------------------------------------------------------
# Punto de entrada
# ----------------------------------------------------------------------

def _registrar_inicio(config: ConfiguracionCorrida):
    from polinomios.models import CorridaLaboratorio

    return CorridaLaboratorio.objects.create(
        subcomando=config.subcomando,
        accion=config.accion or '',
        estado='EJECUTANDO',
        configuracion=json.loads(json.dumps(config.a_dict(), default=str)),
    )


def _registrar_fin(corrida, resultado: ResultadoCorrida, duracion: float) -> None:
    if resultado.exitosa:
        corrida.estado = 'COMPLETADA'
    elif resultado.codigo_salida == CODIGOS_SALIDA['VERIFICACION_FALLIDA']:
        corrida.estado = 'VERIFICACION_FALLIDA'
    else:
        corrida.estado = 'ERROR'
    corrida.codigo_salida = resultado.codigo_salida
    corrida.resumen = json.loads(json.dumps(resultado.resumen, default=str))
    corrida.archivos_generados = resultado.artefactos
    corrida.errores = json.loads(json.dumps(resultado.errores or ([resultado.mensaje] if resultado.mensaje else []),
                                            default=str))
    corrida.duracion_segundos = duracion
    corrida.save()


def run(config: ConfiguracionCorrida, directorio: Optional[str] = None) -> ResultadoCorrida:
    """
    Ejecuta el subcomando. Código 0 si todo pasa, 1 si falla una verificación,
    2 si la entrada es inválida. No lanza excepciones del laboratorio.
    """
    inicio = time.perf_counter()
    corrida = _registrar_inicio(config) if config.registrar else None
    logger.info(f"Iniciando corrida {config.subcomando} {config.accion or ''}".rstrip())
    try:
        with tolerancias_temporales(config.tolerancias):
            emisor = EmisorReportes(directorio)
            resultado = CORRIDAS[config.subcomando](config, emisor)
    except ErrorParametros as e:
        logger.error(f"❌ Entrada inválida: {e}")
        resultado = ResultadoCorrida(CODIGOS_SALIDA['ENTRADA_INVALIDA'], mensaje=str(e),
                                     errores=[{'descripcion': str(e)}])
    except ErrorVerificacion as e:
        logger.error(f"❌ Verificación fallida: {e}")
        resultado = ResultadoCorrida(CODIGOS_SALIDA['VERIFICACION_FALLIDA'], mensaje=str(e),
                                     errores=e.errores or [{'descripcion': str(e)}])
    except ErrorLaboratorio as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        resultado = ResultadoCorrida(e.codigo_salida, mensaje=str(e), errores=[{'descripcion': str(e)}])

    duracion = time.perf_counter() - inicio
    if corrida is not None:
        _registrar_fin(corrida, resultado, duracion)
    if resultado.exitosa:
        logger.info(f"✅ Corrida {config.subcomando} completada en {duracion:.1f} s")
    return resultado
