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
"""
Function:
    Test layered settings.
Usage:
    pytest tests/ut/utils
"""
import os
import tempfile

import pytest

from morphoscore.conf import Settings
from morphoscore.utils.exceptions import ParamValueError


class TestSettings:
    """Test Settings."""

    def test_defaults_and_constants(self):
        """Defaults and constants are both loaded."""
        settings = Settings()
        assert settings.AGREE_THRESHOLD == 0.9
        assert settings.KL_EPSILON == 1e-9
        assert settings.RULE_FILE_VERSION == 1
        assert settings.MAD_CONSISTENCY == 1.483

    def test_env_override(self, monkeypatch):
        """Prefixed environment variables override defaults with the default's type."""
        monkeypatch.setenv('MORPHOSCORE_MIN_RELATION_COUNT', '25')
        monkeypatch.setenv('MORPHOSCORE_LOG_FILE_ENABLED', 'False')
        settings = Settings()
        assert settings.MIN_RELATION_COUNT == 25
        assert settings.LOG_FILE_ENABLED is False
        assert settings.is_overridden('MIN_RELATION_COUNT')
        assert not settings.is_overridden('KL_THRESHOLD')

    def test_constants_not_overridable(self, monkeypatch):
        """Constants ignore environment variables."""
        monkeypatch.setenv('MORPHOSCORE_RULE_FILE_VERSION', '7')
        assert Settings().RULE_FILE_VERSION == 1

    def test_config_file(self, monkeypatch):
        """A config module given by path overrides defaults."""
        path = os.path.join(tempfile.mkdtemp(), 'config.py')
        with open(path, 'w') as file:
            file.write('KL_THRESHOLD = 1.5\nUNKNOWN_SETTING = 3\n')
        monkeypatch.setenv('MORPHOSCORE_CONFIG', 'file:' + path)
        settings = Settings()
        assert settings.KL_THRESHOLD == 1.5
        assert not hasattr(settings, 'UNKNOWN_SETTING')

    def test_workspace_from_env(self):
        """The test session points the workspace at a temporary directory."""
        settings = Settings()
        assert settings.WORKSPACE == os.environ['MORPHOSCORE_WORKSPACE']
        assert settings.is_overridden('WORKSPACE')

    @pytest.mark.parametrize('name, value', [
        ('MORPHOSCORE_KL_THRESHOLD', 'high'),
        ('MORPHOSCORE_LOG_FILE_ENABLED', 'yes'),
        ('MORPHOSCORE_CONFIG', 'config.py'),
        ('MORPHOSCORE_CONFIG', 'file:/nonexistent/config.py'),
        ('MORPHOSCORE_CONFIG', 'python:morphoscore_no_such_module'),
    ])
    def test_bad_override(self, monkeypatch, name, value):
        """Unusable overrides are reported instead of ignored."""
        monkeypatch.setenv(name, value)
        with pytest.raises(ParamValueError):
            Settings()
