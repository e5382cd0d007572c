"""
Django settings for laboratorio project.

Laboratorio numérico de polinomios ortogonales en la circunferencia unidad.
Django aporta la configuración central, los comandos de gestión (CLI)
y el registro de corridas en base de datos.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'OPUC_SECRET_KEY',
    'django-insecure-lab-opuc-7f#q1v!2c0m8k$z3r@x9w%t6y^u4p&s5n*e(b)d',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('OPUC_DEBUG', '1') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'polinomios',  # App del laboratorio OPUC
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'laboratorio.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'laboratorio.wsgi.application'


# Database
# Solo se usa para el registro de corridas (CorridaLaboratorio)

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    },
}


# Internationalization

LANGUAGE_CODE = 'es-co'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (CSS, JavaScript, Images)

STATIC_URL = 'static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'

# Media files (reportes generados)
MEDIA_URL = '/media/'
MEDIA_ROOT = BASE_DIR / 'media'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# =============================================================================
# CONFIGURACIÓN DEL LABORATORIO OPUC
# =============================================================================

LABORATORIO_OPUC = {
    # Malla uniforme: N = max(MALLA_MINIMA, SOBREMUESTREO * (n_max + 1))
    'MALLA_MINIMA': 4096,
    'SOBREMUESTREO': 8,
    # Las medidas de Steklov tienen estructura a escala 1/n
    'SOBREMUESTREO_STEKLOV': 32,
    # Barrido de normas sup: max(BARRIDO_MINIMO, BARRIDO_FACTOR * n)
    'BARRIDO_MINIMO': 8192,
    'BARRIDO_FACTOR': 32,
    # Hilos para barridos (filas independientes)
    'TRABAJADORES': int(os.environ.get('OPUC_TRABAJADORES', '4')),
    'DIRECTORIO_REPORTES': MEDIA_ROOT / 'reportes',
    'RUTA_CONSTANTES': os.environ.get(
        'OPUC_CONSTANTES',
        str(BASE_DIR / 'polinomios' / 'datos' / 'constantes_congeladas.json'),
    ),
}


# =============================================================================
# LOGGING
# =============================================================================

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'detallado': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'consola': {
            'class': 'logging.StreamHandler',
            'formatter': 'detallado',
        },
    },
    'loggers': {
        'polinomios': {
            'handlers': ['consola'],
            'level': os.environ.get('OPUC_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'django': {
            'handlers': ['consola'],
            'level': 'WARNING',
        },
    },
}
