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
"""Enums."""

from enum import Enum


class BaseEnum(Enum):

    @classmethod
    def list_members(cls):
        """List all members."""
        return [member.value for member in cls]


class RuleKind(BaseEnum):
    """Rule kinds, also the label prefix of their keys."""
    AGREEMENT = 'agree'
    ASSIGNMENT = 'as'


class RuleKindFilter(BaseEnum):
    """Rule subsets selectable on the command line."""
    ALL = 'all'
    AGREEMENT = 'agree'
    ASSIGNMENT = 'as'


class Side(BaseEnum):
    """Which end of a dependency an assignment rule constrains."""
    DEPENDENT = 'dependent'
    HEAD = 'head'
