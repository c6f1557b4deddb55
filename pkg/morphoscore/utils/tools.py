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
"""Common Tools."""
import hashlib
import json
import math
import os

from numbers import Number

from morphoscore.conf import settings
from morphoscore.utils import exceptions


def read_text(path):
    """
    Read a UTF-8 text file.

    Args:
        path (str): File path.

    Returns:
        str, file content.

    Raises:
        PathNotExistError: If the file does not exist.
        FileSystemPermissionError: If the file can not be read.
    """
    if not os.path.isfile(path):
        raise exceptions.PathNotExistError(path)
    try:
        with open(path, encoding='utf-8') as file:
            return file.read()
    except (OSError, UnicodeDecodeError) as error:
        raise exceptions.FileSystemPermissionError('{}: {}'.format(path, error))


def write_text(path, text):
    """
    Write text to a UTF-8 file, creating parent directories.

    Args:
        path (str): File path.
        text (str): Content.
    """
    parent = os.path.dirname(os.path.abspath(path))
    try:
        os.makedirs(parent, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as file:
            file.write(text)
    except OSError as error:
        raise exceptions.FileSystemPermissionError('{}: {}'.format(path, error))


def sha256_text(text):
    """Hex sha256 digest of the UTF-8 encoding of text."""
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def round_float(value, decimals=None):
    """
    Round a number for file output, keeping None as None.

    Args:
        value (Number): A number to round, or None.
        decimals (int): Decimal places. Default: settings.FLOAT_DECIMALS.

    Returns:
        float, rounded value, or None.
    """
    if value is None:
        return None
    if not isinstance(value, Number):
        raise exceptions.ParamTypeError('value', 'number')
    if decimals is None:
        decimals = settings.FLOAT_DECIMALS
    rounded = round(float(value), decimals)
    # -0.0 and 0.0 must serialize the same.
    return rounded + 0.0


def format_number(value, decimals=None):
    """
    Format a number for TSV output, `NA` when undefined.

    Args:
        value (Number): A number or None.
        decimals (int): Decimal places. Default: settings.FLOAT_DECIMALS.

    Returns:
        str, fixed-point text or settings.NOT_AVAILABLE.
    """
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return settings.NOT_AVAILABLE
    if decimals is None:
        decimals = settings.FLOAT_DECIMALS
    return '{:.{}f}'.format(round_float(value, decimals), decimals)


def to_json_number(value):
    """Rounded number for JSON output, `NA` when undefined."""
    if value is None:
        return settings.NOT_AVAILABLE
    return round_float(value)


def dump_json(data):
    """
    Serialize data as stable JSON text.

    Args:
        data (dict): JSON-compatible data.

    Returns:
        str, indented JSON with sorted keys and a trailing newline.
    """
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + '\n'
