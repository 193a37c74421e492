#! coding: utf-8
from django.contrib import messages, admin

from django_vorobev.models import ExperimentTask
from django_vorobev.strings import TASK_ALREADY_RUNNING
from django_vorobev.tasks import run_experiment_task


class AbstractTaskAdmin(admin.ModelAdmin):
    readonly_fields = ('status', 'created', 'finished', 'logs',)
    list_display = ('__str__', 'status')

    # Clase del modelo asociado
    model = None

    # Task (callable) a correr asincrónicamente. Recibe solo la instancia
    # del AbstractTask asociado a este admin
    task = None

    def save_model(self, request, obj, form, change):
        super(AbstractTaskAdmin, self).save_model(request, obj, form, change)
        if not change:
            self.task.delay(obj)

    def add_view(self, request, form_url='', extra_context=None):
        # Bloqueo la creación de nuevos modelos cuando está corriendo la tarea
        if self.model.objects.filter(status=self.model.RUNNING):
            messages.error(request, TASK_ALREADY_RUNNING)
            return super(AbstractTaskAdmin, self).changelist_view(request, None)

        return super(AbstractTaskAdmin, self).add_view(request, form_url, extra_context)


@admin.register(ExperimentTask)
class ExperimentTaskAdmin(AbstractTaskAdmin):
    model = ExperimentTask
    task = run_experiment_task
    list_display = ('__str__', 'kind', 'status', 'acceptance_passed')
    list_filter = ('kind', 'status')

    def get_readonly_fields(self, request, obj=None):
        if obj:
            return self.readonly_fields + ('kind', 'config', 'config_format', 'parameters',
                                           'output_dir', 'acceptance_passed')

        return self.readonly_fields + ('acceptance_passed',)
