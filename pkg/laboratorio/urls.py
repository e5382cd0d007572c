"""
URL configuration for laboratorio project.

Solo se expone el admin de Django para consultar las corridas registradas;
el laboratorio se opera desde los comandos de gestión.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
