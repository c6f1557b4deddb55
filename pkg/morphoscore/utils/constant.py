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
"""Constant module."""


from enum import Enum


class MorphoScoreModules(Enum):
    """
    Enum definition for MorphoScore error types.

    Note:
        Each enum value, excluding GENERAL, has an Errors class name starting with the enum value
        in Camel-Case referring to specific module.
    """
    GENERAL = 0
    TREEBANK = 1
    RULES = 2
    SCORING = 3
    NOISE = 4
    GEI = 5
    STATS = 6


class GeneralErrors(Enum):
    """Enum definition for general errors."""
    UNKNOWN_ERROR = 0
    PARAM_TYPE_ERROR = 1
    PARAM_VALUE_ERROR = 2
    PATH_NOT_EXISTS_ERROR = 4
    FILE_SYSTEM_PERMISSION_ERROR = 8


class TreebankErrors(Enum):
    """Enum definition for treebank errors."""


class RulesErrors(Enum):
    """Enum definition for rules errors."""


class ScoringErrors(Enum):
    """Enum definition for scoring errors."""


class NoiseErrors(Enum):
    """Enum definition for noise errors."""


class GeiErrors(Enum):
    """Enum definition for gei errors."""


class StatsErrors(Enum):
    """Enum definition for stats errors."""
