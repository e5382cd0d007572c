"""
WSGI config for laboratorio project.

Usado por `runserver` para navegar el admin de corridas.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'laboratorio.settings')

application = get_wsgi_application()
