# Copyright 2021 MorphoScore Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Setup."""

import sys
import os
import shutil
import platform
from importlib import util
from setuptools import setup, find_packages
from setuptools.command.egg_info import egg_info


def get_version():
    """Get version from morphoscore/_version.py without importing the package."""
    version_path = os.path.join(os.path.dirname(__file__), 'morphoscore', '_version.py')
    module_spec = util.spec_from_file_location('__morphoscoreversion__', version_path)
    version_module = util.module_from_spec(module_spec)
    module_spec.loader.exec_module(version_module)
    return version_module.VERSION


def get_os():
    """Get OS."""
    os_system = platform.system().lower()
    return os_system


def get_long_description():
    """Get long description."""
    with open(os.path.join(os.path.dirname(__file__), 'README.md'), encoding='utf8') as file:
        return file.read()


def get_install_requires():
    """Get install requirements."""
    with open(os.path.join(os.path.dirname(__file__), 'requirements.txt')) as file:
        return [line for line in file.read().splitlines() if line.strip()]


class EggInfo(egg_info):
    """Egg info."""
    def run(self):
        egg_info_dir = os.path.join(os.path.dirname(__file__), 'morphoscore.egg-info')
        shutil.rmtree(egg_info_dir, ignore_errors=True)

        super().run()


if __name__ == '__main__':
    version_info = sys.version_info
    if (version_info.major, version_info.minor) < (3, 7):
        sys.stderr.write('Python version should be at least 3.7\r\n')
        sys.exit(1)

    setup(name='morphoscore',
          version=get_version(),
          author='MorphoScore Team',
          description='Rule-based morphosyntactic well-formedness metric for parsed text',
          long_description=get_long_description(),
          long_description_content_type='text/markdown',
          license='Apache 2.0',
          keywords='morphoscore treebank morphosyntax evaluation',
          install_requires=get_install_requires(),
          python_requires='>=3.7',
          packages=find_packages(include=['morphoscore', 'morphoscore.*']),
          package_data={'morphoscore.noise': ['data/*.tsv']},
          platforms=[get_os()],
          include_package_data=True,
          cmdclass={
              'egg_info': EggInfo,
          },
          entry_points={
              'console_scripts': [
                  'morphoscore=morphoscore.utils.command:main',
              ],
          })
