from django.db import models
import uuid


class CorridaLaboratorio(models.Model):
    ESTADOS = [
        ('INICIADA', 'Iniciada'),
        ('EJECUTANDO', 'Ejecutando'),
        ('COMPLETADA', 'Completada'),
        ('VERIFICACION_FALLIDA', 'Verificación Fallida'),
        ('ERROR', 'Error'),
    ]

    SUBCOMANDOS = [
        ('rakhmanov', 'Rakhmanov'),
        ('steklov', 'Steklov'),
        ('glue', 'Pegado'),
        ('realline', 'Recta Real'),
        ('verify', 'Verificación'),
    ]

    id = models.UUIDField(primary_key=True, default=uuid.uuid4, editable=False)
    subcomando = models.CharField(max_length=20, choices=SUBCOMANDOS)
    accion = models.CharField(max_length=20, blank=True)
    estado = models.CharField(max_length=25, choices=ESTADOS, default='INICIADA')

    # Parámetros de la corrida tal como se ejecutaron
    configuracion = models.JSONField(default=dict, blank=True)
    # Resultados
    resumen = models.JSONField(default=dict, blank=True)
    archivos_generados = models.JSONField(default=dict, blank=True)  # {'json': 'ruta', 'csv': 'ruta'}
    errores = models.JSONField(default=list, blank=True)
    codigo_salida = models.IntegerField(null=True, blank=True)
    duracion_segundos = models.FloatField(default=0.0)

    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        verbose_name = "Corrida de Laboratorio"
        verbose_name_plural = "Corridas de Laboratorio"
        ordering = ['-created_at']

    def __str__(self):
        etiqueta = f"{self.subcomando} {self.accion}".strip()
        return f"Corrida {etiqueta} - {self.estado}"

    @property
    def exitosa(self) -> bool:
        return self.codigo_salida == 0

    @property
    def total_errores(self) -> int:
        return len(self.errores or [])
