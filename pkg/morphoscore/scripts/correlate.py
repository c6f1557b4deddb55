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
"""Correlate system-level metric scores with human judgments."""

import argparse

from morphoscore.common.output import emit, provenance
from morphoscore.conf import settings
from morphoscore.stats.correlation import correlate_systems, correlation_report_to_dict
from morphoscore.stats.table import load_score_file
from morphoscore.utils.command import BaseCommand, ExistingPathAction
from morphoscore.utils.tools import dump_json


class CutoffAction(argparse.Action):
    """Cutoff action class definition."""

    def __call__(self, parser, namespace, values, option_string=None):
        if values <= 0:
            parser.error(f'{option_string} should be positive')

        setattr(namespace, self.dest, values)


class Command(BaseCommand):
    """Correlate command."""
    name = 'correlate'
    description = "Pearson's r between metric and human judgment scores"

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): Specify parser to which arguments are added.
        """
        parser.add_argument('table', action=ExistingPathAction,
                            help='TSV of system_id, metric_score, judgment_score.')
        parser.add_argument('--remove-outliers', action='store_true',
                            help='Drop systems whose judgment score is a robust-z outlier.')
        parser.add_argument(
            '--cutoff',
            type=float,
            action=CutoffAction,
            default=settings.OUTLIER_CUTOFF,
            help='Robust z-score cutoff. Default value is %s.' % settings.OUTLIER_CUTOFF)
        parser.add_argument('--output', '-o', help='JSON report path. Default: standard output.')

    def run(self, args):
        """
        Run to correlate.

        Args:
            args (Namespace): Parsed arguments to hold customized parameters.
        """
        table = load_score_file(args.table)
        report = correlate_systems(table, drop_outliers=args.remove_outliers, cutoff=args.cutoff)
        data = correlation_report_to_dict(report)
        data.update(provenance())
        emit(dump_json(data), args.output)
