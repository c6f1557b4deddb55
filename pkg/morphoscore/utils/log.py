# Copyright 2021 MorphoScore Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ============================================================================
"""Log module."""

import os
import stat
import sys
import logging
from logging.handlers import RotatingFileHandler

from morphoscore.conf import settings
from morphoscore.utils.exceptions import MorphoScoreException
from morphoscore.utils.constant import GeneralErrors

_OWNER_RW = stat.S_IRUSR | stat.S_IWUSR


class OwnerOnlyRotatingFileHandler(RotatingFileHandler):
    """Rotating file handler whose log files are readable by their owner only."""

    def _open(self):
        stream = super()._open()
        os.chmod(self.baseFilename, _OWNER_RW)
        return stream

    def rotate(self, source, dest):
        super().rotate(source, dest)
        if os.path.exists(dest):
            os.chmod(dest, stat.S_IRUSR)


class MorphoScoreFormatter(logging.Formatter):
    """
    Formatter adding `sub_module` and a package-relative `filepath` to every record.

    Messages are flattened to a single line so that one record is one line of the
    log file, whatever the treebank text quoted in it contains.
    """

    default_msec_format = '%s.%03d'

    def __init__(self, sub_module, fmt=None, **kwargs):
        super().__init__(fmt=fmt, **kwargs)
        self.sub_module = sub_module.upper()

    def formatMessage(self, record):
        record.message = ' '.join(record.message.split())
        return super().formatMessage(record)

    def format(self, record):
        package_index = record.pathname.rfind('morphoscore')
        record.filepath = record.pathname[package_index:] if package_index >= 0 else record.pathname
        record.sub_module = self.sub_module
        return super().format(record)


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise MorphoScoreException(GeneralErrors.PARAM_VALUE_ERROR,
                                   '{} should be int type and > 0.'.format(name))
    return value


def _file_handler(sub_module, log_name, formatter, max_bytes, backup_count):
    """Create the rotating handler writing `<workspace>/log/<sub_module>/<log_name>.log`."""
    logfile_dir = os.path.join(settings.WORKSPACE, 'log', sub_module)
    os.makedirs(logfile_dir, mode=stat.S_IRWXU, exist_ok=True)

    handler = OwnerOnlyRotatingFileHandler(
        filename=os.path.join(logfile_dir, '{}.log'.format(log_name)),
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding='utf8')
    handler.setFormatter(MorphoScoreFormatter(sub_module, formatter))
    return handler


def get_logger(sub_module, log_name):
    """
    Get logger by name and sub module.

    Args:
        sub_module (str): Sub module name.
        log_name (str): Log file name.

    Returns:
        Logger, logger instance named by sub_module and log_name.
    """
    return logging.getLogger(name='{}.{}'.format(sub_module, log_name))


def setup_logger(sub_module, log_name, console=False, logfile=None, **kwargs):
    """
    Setup logger with sub module name and log file name.

    A logger that already has its own handlers is returned as it is, so library modules
    and commands can call this at import time.

    Args:
        sub_module (str): Sub module name, also for sub directory under the log root.
        log_name (str): Log name, also for log filename.
        console (bool): Whether to output log to stderr. Default: False.
        logfile (bool): Whether to output log to disk. Default: settings.LOG_FILE_ENABLED.
        level (int): Log level. Default: settings.LOG_LEVEL.
        formatter (str): Log format. Default: settings.LOG_FORMAT.
        propagate (bool): Whether to enable propagate feature. Default: False.
        maxBytes (int): Rotating max bytes. Default: settings.LOG_ROTATING_MAXBYTES.
        backupCount (int): Rotating backup count. Default: settings.LOG_ROTATING_BACKUPCOUNT.

    Returns:
        Logger, well-configured logger instance.

    Examples:
        >>> from morphoscore.utils.log import setup_logger
        >>> logger = setup_logger('rules', 'extraction', level=logging.DEBUG)
    """
    logger = get_logger(sub_module, log_name)
    if logger.handlers:
        return logger

    if logfile is None:
        logfile = settings.LOG_FILE_ENABLED
    formatter = kwargs.get('formatter') or settings.LOG_FORMAT

    logger.setLevel(kwargs.get('level', settings.LOG_LEVEL))
    logger.propagate = kwargs.get('propagate', False)

    if console:
        # stdout carries the JSON reports.
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(MorphoScoreFormatter(sub_module, formatter))
        logger.addHandler(console_handler)

    if logfile:
        max_bytes = _positive_int('maxBytes', kwargs.get('maxBytes', settings.LOG_ROTATING_MAXBYTES))
        backup_count = _positive_int('backupCount',
                                     kwargs.get('backupCount', settings.LOG_ROTATING_BACKUPCOUNT))
        logger.addHandler(_file_handler(sub_module, log_name, formatter, max_bytes, backup_count))

    if not logger.handlers:
        logger.addHandler(logging.NullHandler())

    return logger
