#! coding: utf-8
import json

from django.db import models, transaction
from django.utils import timezone

from django_vorobev.harness.plan import KINDS


class AbstractTask(models.Model):

    DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
    RUNNING = "RUNNING"
    FINISHED = "FINISHED"

    STATUS_CHOICES = (
        (RUNNING, "Procesando experimento"),
        (FINISHED, "Finalizada"),
    )

    status = models.CharField(max_length=20, choices=STATUS_CHOICES)
    created = models.DateTimeField(auto_now_add=True)
    finished = models.DateTimeField(null=True)
    logs = models.TextField(blank=True, default='')

    def save(self, force_insert=False, force_update=False, using=None,
             update_fields=None):
        if not self.pk:  # first time only
            self.status = self.RUNNING

        super(AbstractTask, self).save(force_insert, force_update,
                                       using, update_fields)

    def __str__(self):
        return "Task at %s" % self._format_date(self.created)

    def _format_date(self, date):
        return timezone.localtime(date).strftime(self.DATE_FORMAT)

    @classmethod
    def info(cls, task, msg):
        with transaction.atomic():
            task = cls.objects.select_for_update().get(id=task.id)
            task.logs += msg + '\n'
            task.save()

    def close(self):
        self.status = self.FINISHED
        self.finished = timezone.now()
        self.save()

    class Meta:
        abstract = True


class ExperimentTask(AbstractTask):
    """Corrida asincrónica de un experimento del arnés. `config` guarda el
    texto de la configuración del modelo (INI o YAML, según `config_format`)
    y `parameters` un JSON con los argumentos explícitos del plan"""

    class Meta:
        verbose_name = 'Experiment task'

    INI = 'ini'
    YAML = 'yaml'
    FORMAT_CHOICES = (
        (INI, 'INI'),
        (YAML, 'YAML'),
    )

    kind = models.CharField(max_length=20, choices=[(kind, kind) for kind in KINDS])
    config = models.TextField()
    config_format = models.CharField(max_length=4, choices=FORMAT_CHOICES, default=INI)
    parameters = models.TextField(blank=True, default='{}')
    output_dir = models.CharField(max_length=500, blank=True, default='')
    acceptance_passed = models.BooleanField(null=True, blank=True)

    def plan_parameters(self):
        return json.loads(self.parameters or '{}')
