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
"""Grammar-error identification evaluation."""
from morphoscore.gei.gold import GOLD_MISC_KEY, GoldErrors, load_gold_tsv, load_gold_file, gold_from_misc
from morphoscore.gei.evaluation import PRReport, violating_neighbors, evaluate_gei

__all__ = [
    'GOLD_MISC_KEY', 'GoldErrors', 'load_gold_tsv', 'load_gold_file', 'gold_from_misc',
    'PRReport', 'violating_neighbors', 'evaluate_gei',
]
