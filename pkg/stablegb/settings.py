import os
import sys
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'stablegb-insecure-default-key')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'apps.algebra',
    'apps.harness',
]

# No models; the test runner never touches a database.
DATABASES = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Bound values are printed in full.
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'console': {'class': 'logging.StreamHandler', 'formatter': 'plain'},
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': os.getenv('STABLEGB_LOG_LEVEL', 'WARNING'),
        },
    },
}

# Celery Configuration
CELERY_TASK_ALWAYS_EAGER = os.getenv('STABLEGB_CELERY_EAGER', 'True') == 'True'

# When CELERY_TASK_ALWAYS_EAGER is True, tasks run synchronously and don't need a broker
if CELERY_TASK_ALWAYS_EAGER:
    CELERY_BROKER_URL = 'memory://'
    CELERY_RESULT_BACKEND = 'cache://'
else:
    CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379/0')
    CELERY_RESULT_BACKEND = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379/0')

CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'UTC'

if CELERY_TASK_ALWAYS_EAGER:
    CELERY_BROKER_CONNECTION_RETRY_ON_STARTUP = False
    CELERY_BROKER_CONNECTION_RETRY = False

# Basis cache - Redis when reachable, local memory otherwise
REDIS_URL = os.getenv('STABLEGB_REDIS_URL')
CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
        "LOCATION": "stablegb-bases",
    }
}
if REDIS_URL:
    try:
        import redis
        redis_client = redis.from_url(REDIS_URL, socket_connect_timeout=1)
        redis_client.ping()
        CACHES = {
            "default": {
                "BACKEND": "django_redis.cache.RedisCache",
                "LOCATION": REDIS_URL,
                "OPTIONS": {
                    "CLIENT_CLASS": "django_redis.client.DefaultClient",
                }
            }
        }
    except (ImportError, Exception):
        pass

# Algebra Config
STABLEGB_BIT_CAP = int(os.getenv('STABLEGB_BIT_CAP', 1_000_000))
STABLEGB_DEGREE_CAP = int(os.getenv('STABLEGB_DEGREE_CAP', 64))
STABLEGB_COEFF_BOUND = int(os.getenv('STABLEGB_COEFF_BOUND', 1000))
STABLEGB_CORPUS_COEFF_BOUND = int(os.getenv('STABLEGB_CORPUS_COEFF_BOUND', 10))
STABLEGB_GIN_TRIALS = int(os.getenv('STABLEGB_GIN_TRIALS', 2))
STABLEGB_GIN_RETRIES = int(os.getenv('STABLEGB_GIN_RETRIES', 3))
STABLEGB_TRANSFORM_RETRIES = int(os.getenv('STABLEGB_TRANSFORM_RETRIES', 5))
STABLEGB_HF_CHECK_DEGREE = int(os.getenv('STABLEGB_HF_CHECK_DEGREE', 6))
STABLEGB_CACHE_TIMEOUT = int(os.getenv('STABLEGB_CACHE_TIMEOUT', 3600))
