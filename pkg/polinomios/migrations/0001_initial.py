import uuid
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CorridaLaboratorio',
            fields=[
                ('id', models.UUIDField(default=uuid.uuid4, editable=False, primary_key=True, serialize=False)),
                ('subcomando', models.CharField(choices=[('rakhmanov', 'Rakhmanov'), ('steklov', 'Steklov'), ('glue', 'Pegado'), ('realline', 'Recta Real'), ('verify', 'Verificación')], max_length=20)),
                ('accion', models.CharField(blank=True, max_length=20)),
                ('estado', models.CharField(choices=[('INICIADA', 'Iniciada'), ('EJECUTANDO', 'Ejecutando'), ('COMPLETADA', 'Completada'), ('VERIFICACION_FALLIDA', 'Verificación Fallida'), ('ERROR', 'Error')], default='INICIADA', max_length=25)),
                ('configuracion', models.JSONField(blank=True, default=dict)),
                ('resumen', models.JSONField(blank=True, default=dict)),
                ('archivos_generados', models.JSONField(blank=True, default=dict)),
                ('errores', models.JSONField(blank=True, default=list)),
                ('codigo_salida', models.IntegerField(blank=True, null=True)),
                ('duracion_segundos', models.FloatField(default=0.0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name': 'Corrida de Laboratorio',
                'verbose_name_plural': 'Corridas de Laboratorio',
                'ordering': ['-created_at'],
            },
        ),
    ]
