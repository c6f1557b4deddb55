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
"""Metric and human-judgment correlation."""
from collections import namedtuple

import numpy as np
from scipy.stats import pearsonr

from morphoscore.common.exceptions.exceptions import StatsParamError
from morphoscore.common.log import logger
from morphoscore.conf import settings
from morphoscore.stats.table import SystemScoreTable
from morphoscore.utils.tools import to_json_number

CorrelationReport = namedtuple('CorrelationReport', ['n_used', 'n_removed', 'removed', 'r'])


def pearson_r(xs, ys):
    """
    Sample Pearson correlation.

    Args:
        xs (Sequence[float]): First series.
        ys (Sequence[float]): Second series, same length.

    Returns:
        float, coefficient in [-1, 1], None when either series is constant.

    Raises:
        StatsParamError: If lengths differ or fewer than 2 values are given.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise StatsParamError('series lengths differ: {} and {}'.format(xs.size, ys.size))
    if xs.size < 2:
        raise StatsParamError('at least 2 values are needed, got {}'.format(xs.size))
    if np.ptp(xs) == 0 or np.ptp(ys) == 0:
        return None
    r = float(pearsonr(xs, ys)[0])
    return min(1.0, max(-1.0, r))


def _robust_z(values):
    median = np.median(values)
    mad = np.median(np.abs(values - median))
    if mad == 0:
        return None
    return np.abs(values - median) / (settings.MAD_CONSISTENCY * mad)


def remove_outliers(table, cutoff=None):
    """
    Drop systems whose judgment score is a robust-z outlier.

    The robust z-score is |x - median| / (1.483 * MAD). Removal repeats until
    no row exceeds the cutoff, so applying it twice changes nothing.

    Args:
        table (SystemScoreTable): Systems.
        cutoff (float): Largest kept robust z-score. Default: settings.OUTLIER_CUTOFF.

    Returns:
        SystemScoreTable, remaining rows in input order.
    """
    if cutoff is None:
        cutoff = settings.OUTLIER_CUTOFF
    if cutoff <= 0:
        raise StatsParamError('cutoff should be positive, got {}'.format(cutoff))
    rows = list(table.rows)
    if len(rows) < 3:
        logger.warning('Outlier removal needs at least 3 systems, got %d; table left unchanged.', len(rows))
        return table

    while len(rows) >= 3:
        z_scores = _robust_z(np.array([row.judgment_score for row in rows]))
        if z_scores is None:
            logger.warning('Judgment scores have zero MAD; no outlier removed.')
            break
        kept = [row for row, z in zip(rows, z_scores) if z <= cutoff]
        if len(kept) == len(rows):
            break
        rows = kept
    return SystemScoreTable(rows)


def correlate_systems(table, drop_outliers=False, cutoff=None):
    """
    Pearson's r between metric and judgment scores.

    Args:
        table (SystemScoreTable): Systems.
        drop_outliers (bool): Drop judgment-score outliers first. Default: False.
        cutoff (float): Outlier cutoff. Default: settings.OUTLIER_CUTOFF.

    Returns:
        CorrelationReport, rows used and removed, and r (None when fewer
        than 2 rows remain or a series is constant).
    """
    used = remove_outliers(table, cutoff) if drop_outliers else table
    used_ids = {row.system_id for row in used.rows}
    removed = [row.system_id for row in table.rows if row.system_id not in used_ids]

    r = None
    if len(used) >= 2:
        r = pearson_r(used.metric_scores, used.judgment_scores)
    else:
        logger.warning('Fewer than 2 systems left; correlation is undefined.')
    logger.info('Correlation over %d systems (%d removed): %s', len(used), len(removed), r)
    return CorrelationReport(len(used), len(removed), removed, r)


def correlation_report_to_dict(report):
    return {
        'n_used': report.n_used,
        'n_removed': report.n_removed,
        'removed': list(report.removed),
        'r': to_json_number(report.r),
    }
