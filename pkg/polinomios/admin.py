from django.contrib import admin
from .models import CorridaLaboratorio


@admin.register(CorridaLaboratorio)
class CorridaLaboratorioAdmin(admin.ModelAdmin):
    list_display = ['id', 'descripcion', 'estado', 'codigo_salida', 'errores_registrados', 'duracion', 'created_at']
    list_filter = ['subcomando', 'estado', 'created_at']
    readonly_fields = ['id', 'created_at', 'updated_at', 'configuracion', 'resumen', 'archivos_generados', 'errores']
    search_fields = ['id', 'subcomando', 'accion']

    def descripcion(self, obj):
        return f"{obj.subcomando} {obj.accion}".strip()
    descripcion.short_description = "Corrida"

    def errores_registrados(self, obj):
        return obj.total_errores
    errores_registrados.short_description = "Errores"

    def duracion(self, obj):
        return f"{obj.duracion_segundos:.1f} s"
    duracion.short_description = "Duración"
