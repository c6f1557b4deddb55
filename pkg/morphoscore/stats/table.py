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
"""System-level score tables."""
import math
from collections import namedtuple

from morphoscore.common.exceptions.exceptions import ScoreTableError
from morphoscore.utils.tools import read_text

SystemScore = namedtuple('SystemScore', ['system_id', 'metric_score', 'judgment_score'])


class SystemScoreTable(namedtuple('SystemScoreTable', ['rows'])):
    """Metric and judgment scores of several systems, system ids unique."""

    __slots__ = ()

    def __new__(cls, rows=()):
        rows = tuple(SystemScore(*row) for row in rows)
        seen = set()
        for row in rows:
            if row.system_id in seen:
                raise ScoreTableError('duplicate system id {}'.format(row.system_id))
            seen.add(row.system_id)
        return super(SystemScoreTable, cls).__new__(cls, rows)

    def __len__(self):
        return len(self.rows)

    @property
    def metric_scores(self):
        return [row.metric_score for row in self.rows]

    @property
    def judgment_scores(self):
        return [row.judgment_score for row in self.rows]


def _to_float(text):
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(text)
    return value


def load_score_table(stream):
    """
    Read `system_id<TAB>metric_score<TAB>judgment_score` rows.

    The first line is a header when its second column is not a number.

    Args:
        stream (Union[str, TextIO]): TSV text or readable stream.

    Returns:
        SystemScoreTable, loaded rows.

    Raises:
        ScoreTableError: If a row is malformed or a system id repeats.
    """
    text = stream.read() if hasattr(stream, 'read') else stream
    rows = []
    first = True
    for line_no, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip():
            continue
        columns = line.split('\t')
        if len(columns) != 3:
            raise ScoreTableError('line {}: expected 3 columns, found {}'.format(line_no, len(columns)))
        is_first, first = first, False
        try:
            metric_score = _to_float(columns[1])
        except ValueError:
            if is_first:
                continue
            raise ScoreTableError('line {}: metric score {!r} is not a number'.format(line_no, columns[1]))
        try:
            judgment_score = _to_float(columns[2])
        except ValueError:
            raise ScoreTableError('line {}: judgment score {!r} is not a number'.format(line_no, columns[2]))
        rows.append((columns[0], metric_score, judgment_score))
    return SystemScoreTable(rows)


def load_score_file(path):
    return load_score_table(read_text(path))
