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
    Test shard splitting and mapping.
Usage:
    pytest tests/ut/utils
"""
import pytest

from morphoscore.common.sharding import split_shards, map_shards
from morphoscore.utils.exceptions import ParamValueError


class TestSharding:
    """Test split_shards and map_shards."""

    def test_split(self):
        """Shards are contiguous with their offsets."""
        assert split_shards(range(5), 2) == [(0, [0, 1, 2]), (3, [3, 4])]
        assert split_shards([], 3) == []
        assert split_shards([1], 4) == [(0, [1])]

    @pytest.mark.parametrize('jobs', [0, -1, 1.5, True])
    def test_bad_jobs(self, jobs):
        """jobs must be a positive integer."""
        with pytest.raises(ParamValueError):
            split_shards([1, 2], jobs)

    @pytest.mark.parametrize('jobs', [1, 2, 3, 8])
    def test_order_preserved(self, jobs):
        """Results come back in input order for any number of jobs."""
        items = list(range(17))
        results = map_shards(lambda offset, shard: [offset + i for i, _ in enumerate(shard)], items, jobs)
        assert [value for shard in results for value in shard] == items
