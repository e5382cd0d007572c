# LABORATORIO OPUC - CONSTANTES NUMÉRICAS Y DE REPORTE
# Archivo de configuración central para tolerancias, valores por defecto y formatos
# Las constantes de regresión medidas (c1, c2, C, C') viven en datos/constantes_congeladas.json

# =============================================================================
# SECCIÓN 1: TOLERANCIAS
# =============================================================================

TOLERANCIAS = {
    # Álgebra pura (recursiones, estrella, matrices de transferencia)
    'IDENTIDAD_ALGEBRAICA': 1e-12,
    'RECURSION_ESTRELLA': 1e-12,
    # Comparación de coeficientes contra el oráculo de Gram-Schmidt (n <= 64)
    'COEFICIENTES': 1e-8,
    # Identidades integrales y normalización de probabilidad
    'INTEGRAL': 1e-8,
    'PROBABILIDAD': 1e-8,
    'RENORMALIZACION': 1e-12,
    # Ida y vuelta medida -> parámetros de Verblunsky (limitado por cuadratura)
    'IDA_VUELTA_MEDIDA': 1e-6,
    # Dos caminos para el denominador cerrado de la construcción de Steklov
    'DENOMINADOR_CERRADO': 1e-10,
    # |K_{n-1}(xi_j, xi_l)| < TOL * n
    'KERNEL_POR_N': 1e-10,
    # Representaciones duales del vector d
    'VECTOR_D': 1e-12,
    # |K(xi, z)| / K(z, z) en las raíces refinadas
    'RAIZ_KERNEL': 1e-6,
    # ||Re M_n||_inf <= 1 + margen
    'MARGEN_RE_M': 1e-10,
    'SIMETRIA': 1e-10,
    'SEGMENTO': 1e-7,
    # Pesos suaves en el segmento: |sin θ| tiene quiebres en 0 y π
    'SEGMENTO_SUAVE': 1e-5,
    'FRONTERA_SZEGO': 1e-6,
    # Escala del oráculo: tol * max(1, ESCALA_CONDICION * cond(Gram))
    'ESCALA_CONDICION': 1e-15,
    # Autovalores de la compañera con ||z| - 1| por debajo de esto se pulen con Newton
    'RAIZ_AMBIGUA': 1e-6,
    # Raíz pulida considerada sobre la circunferencia
    'RAIZ_EN_CIRCUNFERENCIA': 1e-12,
}

# =============================================================================
# SECCIÓN 2: PARÁMETROS POR DEFECTO DE LAS CONSTRUCCIONES
# =============================================================================

PARAMETROS_POR_DEFECTO = {
    'B': 2.0,                      # D_n = M_n + b
    'EPSILON_MAXIMO': 0.4,         # Re F = 1 - 2 eps Re M_n >= 1 - 2 eps > 0
    'EPSILON_RAKHMANOV': 0.5,
    'EPSILON_STEKLOV': 0.05,
    'LISTA_N_RAKHMANOV': [2 ** 6, 2 ** 8, 2 ** 10, 2 ** 12, 2 ** 14],
    'LISTA_N_STEKLOV': [2 ** k for k in range(6, 15)],
    'LISTA_N_RAPIDA': [8, 16, 32],
    # Barrido de la construcción de Steklov en ε (cocientes por ε contra la banda congelada)
    'LISTA_EPSILON_BARRIDO': (0.0125, 0.025, 0.05),
    'LISTA_N_BARRIDO_EPSILON': [2 ** 6, 2 ** 8, 2 ** 10, 2 ** 12],
    'CANDIDATOS_C_VARIANTE': (1.0, 2.0, 4.0),
    # Puntos de barrido por grado para raíces del kernel
    'BARRIDO_RAICES_POR_N': 64,
    # Sobremuestreo de la refinación de raíces (conteo por número de vueltas)
    'REFINAMIENTO_VUELTAS': 8,
    # Grado máximo para usar autovalores de la compañera como árbitro
    'GRADO_MAXIMO_COMPANERA': 64,
    # Grado máximo para momentos y normalizaciones exactas en precisión extendida
    'GRADO_MAXIMO_EXACTO': 64,
    # Malla del pegado: al menos RESOLUCION_PEGADO / d puntos, d = distancia de las raíces a la circunferencia
    'RESOLUCION_PEGADO': 40,
    'MALLA_MAXIMA_PEGADO': 2 ** 17,
    'LARGO_COLA_MAXIMO': 256,
}

# =============================================================================
# SECCIÓN 3: REPORTES Y CLI
# =============================================================================

# Orden fijo de columnas del CSV de crecimiento
COLUMNAS_REPORTE = ['n', 'epsilon', 'sup_norm', 'argmax_theta', 'comparator', 'steklov_delta']

FORMATOS_REPORTE = ('json', 'csv', 'xlsx')

CODIGOS_SALIDA = {
    'EXITO': 0,
    'VERIFICACION_FALLIDA': 1,
    'ENTRADA_INVALIDA': 2,
}

SUBCOMANDOS = ('rakhmanov', 'steklov', 'glue', 'realline', 'verify')

ACCIONES_STEKLOV = ('build', 'sweep', 'variant')

# Comparadores registrados por fila del reporte
COMPARADORES = {
    'rakhmanov': '1 + eps*log(n)',
    'steklov': 'eps*log(n)',
}

# =============================================================================
# SECCIÓN 4: SUITES DE ACEPTACIÓN
# =============================================================================

SUITES_ACEPTACION = {
    'recursion_oraculo': 'Recursión de Szegő contra Gram-Schmidt sobre Bernstein-Szegő',
    'formula_rakhmanov': 'Forma cerrada de Rakhmanov contra el oráculo',
    'condicion_kernel': 'Kernel de Christoffel-Darboux en raíces de la unidad',
    'crecimiento_rakhmanov': 'Crecimiento logarítmico de ||Phi_n||',
    'ida_vuelta_pegado': 'Pegado de parámetros de Schur y extracción',
    'matrices_transferencia': 'Identidades de las matrices de transferencia',
    'crecimiento_steklov': 'Construcción de clase Steklov con crecimiento eps log n',
    'denominador_cerrado': 'Dos evaluaciones del denominador cerrado',
    'violacion_sec1': 'Crecimiento del cociente de desacople',
    'recta_real': 'Reducción circunferencia-segmento contra el oráculo',
    'cociente_szego': 'Cota sqrt(delta) <= 1/kappa_n <= 1',
}
