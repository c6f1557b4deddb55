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
"""Per-sentence work split across threads."""
from concurrent.futures import ThreadPoolExecutor, wait, ALL_COMPLETED

from morphoscore.utils.exceptions import ParamValueError


def split_shards(items, jobs):
    """
    Split a sequence into at most `jobs` contiguous shards.

    Args:
        items (Sequence): Items to split.
        jobs (int): Number of shards wanted, >= 1.

    Returns:
        list[tuple], (offset, shard) pairs in input order.
    """
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise ParamValueError('jobs should be a positive integer.')
    items = list(items)
    size = max(1, -(-len(items) // jobs))
    return [(start, items[start:start + size]) for start in range(0, len(items), size)]


def map_shards(func, items, jobs=1):
    """
    Apply `func(offset, shard)` to every shard.

    Results come back in shard order, so callers that merge them in order get
    the same output whatever the number of jobs.

    Args:
        func (Callable): Worker taking the shard offset and the shard items.
        items (Sequence): Items to split.
        jobs (int): Number of worker threads. Default: 1.

    Returns:
        list, one result per shard.
    """
    shards = split_shards(items, jobs)
    if jobs == 1 or len(shards) <= 1:
        return [func(offset, shard) for offset, shard in shards]

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(func, offset, shard) for offset, shard in shards]
        wait(futures, return_when=ALL_COMPLETED)
    return [future.result() for future in futures]
