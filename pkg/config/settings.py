"""
Django settings for the pjj project.

There is no database and no HTTP surface: Django provides the app registry,
the settings layer, the management-command framework and the test runner.
Every tunable is read from the environment (loaded from a .env file when
present) and has a default, so nothing has to be set.

For learning:
- INSTALLED_APPS: the seven computational apps
- PJJ_*: limits and samples read by the library through django.conf.settings
- LOGGING: everything goes to stderr; stdout is reserved for reports
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Django refuses to start without one; nothing is signed
SECRET_KEY = os.getenv('SECRET_KEY', 'pjj-local-only')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'apps.ratlinalg',
    'apps.algebras',
    'apps.representations',
    'apps.derivations',
    'apps.cohomology',
    'apps.deformations',
    'apps.cli',
]

DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


def _list(name, default):
    return [item.strip() for item in os.getenv(name, default).split(',') if item.strip()]


# Computation limits
PJJ_MAX_DEGREE = int(os.getenv('PJJ_MAX_DEGREE', 4))
PJJ_WITNESS_CAP = int(os.getenv('PJJ_WITNESS_CAP', 16))  # 0 = keep every witness
PJJ_ASSEMBLY_JOBS = int(os.getenv('PJJ_ASSEMBLY_JOBS', 1))

# Rational t-samples for deformation spot checks and the bounded operator searches
PJJ_DEFORMATION_SAMPLES = _list('PJJ_DEFORMATION_SAMPLES', '1,-1,1/2,7/3')
PJJ_SEARCH_ENTRIES = _list('PJJ_SEARCH_ENTRIES', '-1,0,1')
PJJ_SEARCH_LIMIT = int(os.getenv('PJJ_SEARCH_LIMIT', 20000))

# Logging
LOG_LEVEL = os.getenv('PJJ_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
