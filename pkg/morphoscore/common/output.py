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
"""Report output shared by the commands."""
import sys

import morphoscore
from morphoscore.rules.rulefile import rule_hash
from morphoscore.utils.tools import write_text

TOOL_NAME = 'morphoscore'


def provenance(rule_set=None):
    """
    Tool and rule identification embedded in every report.

    Args:
        rule_set (RuleSet): Rules the report was computed with, if any.

    Returns:
        dict, `tool`, `version` and, with rules, `rules_sha256`.
    """
    data = {'tool': TOOL_NAME, 'version': morphoscore.__version__}
    if rule_set is not None:
        data['rules_sha256'] = rule_hash(rule_set)
    return data


def emit(text, path=None):
    """Write text to a file, or to standard output when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        write_text(path, text)
