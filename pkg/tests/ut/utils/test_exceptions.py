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
"""
Function:
    Test exception error codes.
Usage:
    pytest tests/ut/utils
"""
from morphoscore.common.exceptions.exceptions import TreebankParseError, StatsParamError, ScoringPairingError
from morphoscore.utils.exceptions import MorphoScoreException, PathNotExistError, ParamValueError
from morphoscore.utils.constant import GeneralErrors


class TestErrorCode:
    """Test MorphoScoreException.error_code."""

    def test_general_error(self):
        """General errors use module 0."""
        assert PathNotExistError('/x').error_code == '50560004'

    def test_module_error(self):
        """Domain errors carry their module and error class in the code."""
        error = TreebankParseError(3, 'expected 10 columns, found 9')
        assert error.error_code == '50561100'
        assert error.message == 'CoNLL-U parse error at line 3: expected 10 columns, found 9'
        assert error.exit_code == 1

    def test_stats_error(self):
        """Parameter errors of the stats module."""
        assert StatsParamError('x').error_code == '50566080'

    def test_scoring_error(self):
        """Pairing errors are the data errors of the scoring module."""
        assert ScoringPairingError('no original').error_code == '50563180'

    def test_message_whitespace_collapsed(self):
        """Whitespace in messages is collapsed."""
        error = MorphoScoreException(GeneralErrors.UNKNOWN_ERROR, 'a\n  b')
        assert error.message == 'a b'
        assert str(error) == '[MorphoScoreException] code: 50560000, msg: a b'

    def test_param_value_error(self):
        """ParamValueError prefixes its detail."""
        assert ParamValueError('seed').message == 'Invalid parameter value. seed'
