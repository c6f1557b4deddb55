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
"""System-level correlation with human judgments."""
from morphoscore.stats.table import SystemScore, SystemScoreTable, load_score_table, load_score_file
from morphoscore.stats.correlation import CorrelationReport, pearson_r, remove_outliers, \
    correlate_systems, correlation_report_to_dict

__all__ = [
    'SystemScore', 'SystemScoreTable', 'load_score_table', 'load_score_file',
    'CorrelationReport', 'pearson_r', 'remove_outliers', 'correlate_systems', 'correlation_report_to_dict',
]
