# -*- coding: utf-8 -*-
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ExperimentTask',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('status', models.CharField(choices=[('RUNNING', 'Procesando experimento'), ('FINISHED', 'Finalizada')], max_length=20)),
                ('created', models.DateTimeField(auto_now_add=True)),
                ('finished', models.DateTimeField(null=True)),
                ('logs', models.TextField(blank=True, default='')),
                ('kind', models.CharField(choices=[('consistency', 'consistency'), ('rate_check', 'rate_check'), ('bracket', 'bracket'), ('fcurve', 'fcurve'), ('boxdim', 'boxdim')], max_length=20)),
                ('config', models.TextField()),
                ('config_format', models.CharField(choices=[('ini', 'INI'), ('yaml', 'YAML')], default='ini', max_length=4)),
                ('parameters', models.TextField(blank=True, default='{}')),
                ('output_dir', models.CharField(blank=True, default='', max_length=500)),
                ('acceptance_passed', models.BooleanField(blank=True, null=True)),
            ],
            options={
                'verbose_name': 'Experiment task',
            },
        ),
    ]
