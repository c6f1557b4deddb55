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
"""Command module."""

import sys
import os
import argparse
from importlib import import_module

import morphoscore
from morphoscore.conf import settings
from morphoscore.utils.log import setup_logger
from morphoscore.utils.exceptions import MorphoScoreException


class ExistingPathAction(argparse.Action):
    """Reject input paths that do not exist."""

    def __call__(self, parser, namespace, values, option_string=None):
        """
        Inherited __call__ method from argparse.Action.

        Args:
            parser (ArgumentParser): Passed-in argument parser.
            namespace (Namespace): Namespace object to hold arguments.
            values (object): Argument values with type depending on argument definition.
            option_string (str): Optional string for specific argument name. Default: None.
        """
        path = os.path.realpath(os.path.expanduser(values))
        if not os.path.isfile(path):
            parser.error(f'{option_string or self.dest} path {values} does not exist')

        setattr(namespace, self.dest, path)


class PositiveIntAction(argparse.Action):
    """Positive integer action class definition."""

    def __call__(self, parser, namespace, values, option_string=None):
        if values < 1:
            parser.error(f'{option_string} should be a positive integer')

        setattr(namespace, self.dest, values)


class NonNegativeIntAction(argparse.Action):
    """Reject negative integers."""

    def __call__(self, parser, namespace, values, option_string=None):
        if values < 0:
            parser.error(f'{option_string} should be a non-negative integer')

        setattr(namespace, self.dest, values)


class UnitIntervalAction(argparse.Action):
    """Reject reals outside (0, 1]."""

    def __call__(self, parser, namespace, values, option_string=None):
        if not 0 < values <= 1:
            parser.error(f'{option_string} should be in (0, 1]')

        setattr(namespace, self.dest, values)


def add_jobs_argument(parser):
    parser.add_argument(
        '--jobs',
        type=int,
        action=PositiveIntAction,
        default=settings.DEFAULT_JOBS,
        help='Number of worker threads for per-sentence work. Default value is %s.' % settings.DEFAULT_JOBS)


class BaseCommand:
    """Base command class."""

    name = ''
    description = ''

    logger = None

    def add_arguments(self, parser):
        """
        Add arguments to parser.

        Args:
            parser (ArgumentParser): specify parser to which arguments are added.
        """

    def update_settings(self, args):
        """
        Update settings.

        Args:
            args (Namespace): parsed arguments to hold customized parameters.
        """

    def run(self, args):
        """
        Implementation of command logic.

        Args:
            args (Namespace): parsed arguments to hold customized parameters.
        """
        raise NotImplementedError('subclasses of BaseCommand must provide a run() method')

    def invoke(self, args):
        """
        Invocation of command.

        Args:
            args (Namespace): parsed arguments to hold customized parameters.

        Returns:
            int, process exit code.
        """
        try:
            self.update_settings(args)
            self.logger = setup_logger('scripts', self.name, console=getattr(args, 'log_console', False))
            self.run(args)
        except MorphoScoreException as error:
            if self.logger is not None:
                self.logger.error('%s failed: [%s] %s', self.name, error.error_code, error.message)
            print(error.message, file=sys.stderr)
            return error.exit_code
        return 0


def build_parser():
    """Build the CLI parser with every command found under morphoscore/scripts."""
    parser = argparse.ArgumentParser(
        prog='morphoscore',
        description='MorphoScore CLI entry point (version: {})'.format(morphoscore.__version__))

    parser.add_argument(
        '--version',
        action='version',
        version='%(prog)s ({})'.format(morphoscore.__version__))

    subparsers = parser.add_subparsers(
        dest='cli',
        title='subcommands',
        description='the following subcommands are supported',
    )

    commands = {}
    scripts_path = os.path.realpath(os.path.join(__file__, os.pardir, os.pardir, 'scripts'))
    files = os.listdir(scripts_path)
    files.sort()
    for file in files:
        if file.startswith('_') or not file.endswith('.py'):
            continue

        module = import_module('morphoscore.scripts.{}'.format(file[:-len('.py')]))
        command_cls = getattr(module, 'Command', None)
        if command_cls is None or not issubclass(command_cls, BaseCommand):
            continue

        command = command_cls()
        command_parser = subparsers.add_parser(command.name, help=command.description)
        command.add_arguments(command_parser)
        command_parser.add_argument(
            '--log-console',
            action='store_true',
            help='Also write log records to standard error.')
        commands[command.name] = command

    return parser, commands


def main(argv=None):
    """
    Entry point for morphoscore CLI.

    Args:
        argv (list[str]): Arguments without the program name. Default: sys.argv[1:].

    Returns:
        int, 0 on success, 1 on a domain error. Usage errors exit with 2.
    """
    parser, commands = build_parser()

    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] == 'help':
        argv = ['-h']

    args = parser.parse_args(argv)
    cli = args.__dict__.pop('cli')
    command = commands[cli]
    return command.invoke(args)
