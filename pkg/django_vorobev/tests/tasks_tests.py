#!coding=utf8
import json
import os
import shutil
import tempfile

from django.contrib.auth.models import User
from django.core.management import call_command
from django.test import TestCase, override_settings
from django.urls import reverse
from freezegun import freeze_time
from mock import patch

from django_vorobev.models import ExperimentTask
from django_vorobev.tasks import run_experiment_task

MODEL = """
[model]
kind = atoms

[atoms]
centers = 0.5,0.5
q = 0.0
radius = 0.2

[grid]
d = 2
K = 7
"""


class ExperimentTaskTestCase(TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)


class RunExperimentTaskTests(ExperimentTaskTestCase):

    def create_task(self, **kwargs):
        values = {'kind': 'fcurve', 'config': MODEL,
                  'parameters': json.dumps({'n_schedule': [3], 'mesh_levels': [4]})}
        values.update(kwargs)
        return ExperimentTask.objects.create(**values)

    def test_closes_task(self):
        with override_settings(VOROBEV_OUTPUT_ROOT=self.directory):
            task = self.create_task()
            run_experiment_task(task)
        task.refresh_from_db()
        self.assertEqual(task.status, ExperimentTask.FINISHED)
        self.assertEqual(task.output_dir, os.path.join(self.directory, str(task.id)))
        self.assertTrue(os.path.isfile(os.path.join(task.output_dir, 'fcurve.csv')))
        self.assertTrue(os.path.isfile(os.path.join(task.output_dir, 'run_metadata.json')))
        self.assertIn('fcurve.csv', task.logs)
        self.assertIsNone(task.acceptance_passed)

    def test_finished_date(self):
        with freeze_time('2026-03-01 12:00:00'):
            task = self.create_task(output_dir=self.directory)
            run_experiment_task(task)
        task.refresh_from_db()
        self.assertEqual(task.finished.strftime('%Y-%m-%d %H:%M'), '2026-03-01 12:00')

    def test_acceptance_recorded(self):
        model = MODEL.replace('q = 0.0', 'q = 1.0')
        task = self.create_task(kind='bracket', config=model, output_dir=self.directory,
                                parameters=json.dumps({'n_schedule': [2], 'mesh_levels': [7],
                                                       'trials': 2}))
        run_experiment_task(task)
        task.refresh_from_db()
        self.assertTrue(task.acceptance_passed)

    def test_yaml_config(self):
        model = 'model:\n  kind: atoms\natoms:\n  centers: [[0.5, 0.5]]\n  q: [0.0]\n' \
                '  radius: 0.2\ngrid:\n  d: 2\n  K: 7\n'
        task = self.create_task(config=model, config_format=ExperimentTask.YAML,
                                output_dir=self.directory)
        run_experiment_task(task)
        self.assertTrue(os.path.isfile(os.path.join(self.directory, 'fcurve.csv')))

    def test_xlsx_parameter(self):
        task = self.create_task(output_dir=self.directory,
                                parameters=json.dumps({'n_schedule': [2], 'xlsx': True}))
        run_experiment_task(task)
        self.assertTrue(os.path.isfile(os.path.join(self.directory, 'fcurve.xlsx')))

    def test_invalid_config_is_logged(self):
        task = self.create_task(config=MODEL.replace('kind = atoms', ''), output_dir=self.directory)
        run_experiment_task(task)
        task.refresh_from_db()
        self.assertEqual(task.status, ExperimentTask.FINISHED)
        self.assertIn('model.kind', task.logs)
        self.assertIsNone(task.acceptance_passed)

    def test_unknown_parameter_is_logged(self):
        task = self.create_task(output_dir=self.directory, parameters=json.dumps({'window': 3}))
        run_experiment_task(task)
        task.refresh_from_db()
        self.assertEqual(task.status, ExperimentTask.FINISHED)
        self.assertIn('window', task.logs)

    def test_malformed_schedule_closes_task(self):
        task = self.create_task(output_dir=self.directory, parameters=json.dumps({'schedule': [[25]]}))
        run_experiment_task(task)
        task.refresh_from_db()
        self.assertEqual(task.status, ExperimentTask.FINISHED)
        self.assertIn('experiment.schedule', task.logs)

    @patch('django_vorobev.tasks.run_plan', side_effect=RuntimeError('sin memoria'))
    def test_unexpected_error_closes_task(self, _):
        task = self.create_task(output_dir=self.directory)
        run_experiment_task(task)
        task.refresh_from_db()
        self.assertEqual(task.status, ExperimentTask.FINISHED)
        self.assertIn('sin memoria', task.logs)
        self.assertIsNone(task.acceptance_passed)


class RunExperimentTaskCommandTests(ExperimentTaskTestCase):

    def setUp(self):
        super(RunExperimentTaskCommandTests, self).setUp()
        self.config = os.path.join(self.directory, 'model.cfg')
        with open(self.config, 'w') as f:
            f.write(MODEL)

    def test_creates_task(self):
        with override_settings(VOROBEV_OUTPUT_ROOT=self.directory):
            call_command('run_experiment_task', kind='fcurve', config=self.config,
                         parameters='{"n_schedule": [2]}')
        task = ExperimentTask.objects.get()
        self.assertEqual(task.status, ExperimentTask.FINISHED)
        self.assertEqual(task.config, MODEL)
        self.assertEqual(task.config_format, ExperimentTask.INI)

    def test_existing_task(self):
        task = ExperimentTask.objects.create(kind='fcurve', config=MODEL, output_dir=self.directory,
                                             parameters='{"n_schedule": [2]}')
        call_command('run_experiment_task', id=task.id)
        task.refresh_from_db()
        self.assertEqual(task.status, ExperimentTask.FINISHED)

    def test_while_running(self):
        ExperimentTask.objects.create(kind='fcurve', config=MODEL)
        # Esperado: no se crea una segunda tarea
        call_command('run_experiment_task', kind='fcurve', config=self.config)
        self.assertEqual(ExperimentTask.objects.count(), 1)


@patch('django_vorobev.admin.tasks.ExperimentTaskAdmin.task')
class ExperimentTaskAdminTests(TestCase):

    def setUp(self):
        self.client.force_login(User.objects.create(username='test_user', is_staff=True,
                                                    is_superuser=True))
        self.url = reverse('admin:django_vorobev_experimenttask_add')

    def test_add_schedules_task(self, task):
        self.client.post(self.url, {'kind': 'fcurve', 'config': MODEL, 'config_format': 'ini',
                                    'parameters': '{}', 'output_dir': ''})
        self.assertEqual(ExperimentTask.objects.count(), 1)
        task.delay.assert_called_once()

    def test_add_blocked_while_running(self, task):
        ExperimentTask.objects.create(kind='fcurve', config=MODEL)
        self.client.post(self.url, {'kind': 'fcurve', 'config': MODEL, 'config_format': 'ini',
                                    'parameters': '{}', 'output_dir': ''})
        self.assertEqual(ExperimentTask.objects.count(), 1)
        task.delay.assert_not_called()
