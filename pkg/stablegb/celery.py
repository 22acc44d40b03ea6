"""
Celery app for corpus verification. Only imported for real workers; in eager
mode verify_member_task runs in-process through `.apply()`.
"""
import os

from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'stablegb.settings')

import django  # noqa: E402

django.setup()
from django.conf import settings  # noqa: E402

if settings.CELERY_TASK_ALWAYS_EAGER:
    app = Celery('stablegb', broker='memory://', backend='cache://')
else:
    app = Celery('stablegb')

app.config_from_object('django.conf:settings', namespace='CELERY')

# one corpus member per task can take minutes; never prefetch a second one
app.conf.worker_prefetch_multiplier = 1
app.conf.task_acks_late = True
app.conf.task_routes = {'apps.harness.tasks.verify_member_task': {'queue': 'corpus'}}
app.conf.result_expires = settings.STABLEGB_CACHE_TIMEOUT

if settings.CELERY_TASK_ALWAYS_EAGER:
    app.conf.task_always_eager = True
    app.conf.task_eager_propagates = True

app.autodiscover_tasks(['apps.harness'])
