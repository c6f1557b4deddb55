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
"""Constants module for morphoscore settings."""
import logging

####################################
# Global default settings.
####################################
LOG_FORMAT = '[%(levelname)s] MS(%(process)d:%(thread)d,%(processName)s):%(asctime)s ' \
             '[%(filepath)s:%(lineno)d][%(sub_module)s] %(message)s'

LOG_LEVEL = logging.INFO
# rotating max bytes, default is 50M
LOG_ROTATING_MAXBYTES = 52428800

# rotating backup count, default is 30
LOG_ROTATING_BACKUPCOUNT = 30

####################################
# File format settings.
####################################
RULE_FILE_VERSION = 1
FLOAT_DECIMALS = 6

# Placeholder for undefined scores in TSV and JSON reports.
NOT_AVAILABLE = 'NA'

ALTERED_SENT_ID_SUFFIX = '-alt'

####################################
# Statistics settings.
####################################
# Scales MAD to the standard deviation of a normal distribution.
MAD_CONSISTENCY = 1.483
