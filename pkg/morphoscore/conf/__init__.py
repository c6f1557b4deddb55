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
"""Conf module."""

import os
import json
from importlib import import_module, util

from morphoscore.utils.exceptions import ParamValueError

_PREFIX = 'MORPHOSCORE_'
_CONFIG_ENV = 'MORPHOSCORE_CONFIG'


def _upper_names(module):
    return [name for name in dir(module) if name.isupper()]


def _load_config_module(config_path):
    """
    Load the module named by MORPHOSCORE_CONFIG.

    `python:package.module` imports a module, `file:/path/config.py` executes a file.
    """
    if config_path.startswith('python:'):
        try:
            return import_module(config_path[len('python:'):])
        except ImportError as error:
            raise ParamValueError('{} {!r} cannot be imported: {}'.format(_CONFIG_ENV, config_path, error))

    if config_path.startswith('file:'):
        path = config_path[len('file:'):]
        if not os.path.isfile(path):
            raise ParamValueError('{} {!r} is not a file.'.format(_CONFIG_ENV, config_path))
        module_spec = util.spec_from_file_location('__morphoscoreconfig__', path)
        config_module = util.module_from_spec(module_spec)
        module_spec.loader.exec_module(config_module)
        return config_module

    raise ParamValueError("{} must start with 'python:' or 'file:', got {!r}.".format(_CONFIG_ENV, config_path))


def _coerce(name, text, current):
    """Convert an environment string to the type of the setting it overrides."""
    try:
        if isinstance(current, bool):
            if text not in ('True', 'False'):
                raise ValueError(text)
            return text == 'True'
        if isinstance(current, (int, float)):
            return type(current)(text)
        if isinstance(current, (list, dict)):
            return json.loads(text)
    except ValueError:
        raise ParamValueError('{}{}={!r} does not match the type of the default {!r}.'.format(
            _PREFIX, name, text, current))
    return text


class Settings:
    """
    Layered settings.

    `conf.defaults` holds the tunable thresholds, `conf.constants` the fixed
    formats. Defaults can be overridden by the module named by
    `MORPHOSCORE_CONFIG`, then by `MORPHOSCORE_<NAME>` environment variables.
    Command line options are applied on top by the commands themselves.

    Examples:
        >>> from morphoscore.conf import settings
        >>> print(settings.AGREE_THRESHOLD)
    """

    def __init__(self):
        self._overridable = set()
        self._overridden = set()

        defaults = import_module('morphoscore.conf.defaults')
        for name in _upper_names(defaults):
            setattr(self, name, getattr(defaults, name))
            self._overridable.add(name)

        constants = import_module('morphoscore.conf.constants')
        for name in _upper_names(constants):
            setattr(self, name, getattr(constants, name))

        self.refresh()

    def _override(self, name, value):
        setattr(self, name, value)
        self._overridden.add(name)

    def refresh(self):
        """Apply the config module, then the environment."""
        config_path = os.environ.get(_CONFIG_ENV, '')
        if config_path:
            config_module = _load_config_module(config_path)
            for name in _upper_names(config_module):
                if name in self._overridable:
                    self._override(name, getattr(config_module, name))

        for key, text in os.environ.items():
            name = key[len(_PREFIX):]
            if key.startswith(_PREFIX) and key != _CONFIG_ENV and name in self._overridable:
                self._override(name, _coerce(name, text, getattr(self, name)))

    def is_overridden(self, name):
        """
        Check if specified setting is overridden.

        Args:
            name (str): Setting name to be checked.

        Returns:
            bool, whether a config module or the environment set it.
        """
        return name in self._overridden


settings = Settings()
