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
"""Defaults module for morphoscore settings."""
import os

####################################
# Global default settings.
####################################
WORKSPACE = os.path.join(os.path.expanduser('~'), 'morphoscore')

# Set to False to keep library use free of log files.
LOG_FILE_ENABLED = True

####################################
# Rule extraction default settings.
####################################
AGREE_THRESHOLD = 0.9
AGREE_COVERAGE = 0.8
KL_THRESHOLD = 0.9
MIN_RELATION_COUNT = 100
VALUE_INCLUSION_THRESHOLD = 0.05
KL_EPSILON = 1e-9

####################################
# Statistics default settings.
####################################
OUTLIER_CUTOFF = 2.5

####################################
# Pipeline default settings.
####################################
DEFAULT_SEED = 0
DEFAULT_JOBS = 1
