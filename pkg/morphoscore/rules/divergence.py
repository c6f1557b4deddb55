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
"""KL divergence between value distributions."""
import numpy as np

from morphoscore.conf import settings
from morphoscore.rules.model import Distribution


def _masses(distribution):
    if isinstance(distribution, Distribution):
        return distribution.mass
    return dict(distribution)


def kl_divergence(local, global_, epsilon=None):
    """
    KL(local || global) with natural log and additive smoothing.

    The sum runs over the union of both supports:
    sum_v L(v) * ln((L(v) + eps) / (G(v) + eps)), clamped at 0.

    Args:
        local (Union[Distribution, dict]): Local distribution L.
        global_ (Union[Distribution, dict]): Global distribution G.
        epsilon (float): Smoothing constant, > 0. Default: settings.KL_EPSILON.

    Returns:
        float, divergence >= 0.

    Examples:
        >>> kl_divergence({'A': 1.0}, {'A': 0.5, 'B': 0.5})
        0.6931471...
    """
    if epsilon is None:
        epsilon = settings.KL_EPSILON
    local_mass = _masses(local)
    global_mass = _masses(global_)
    values = sorted(set(local_mass) | set(global_mass))
    if not values:
        return 0.0

    local_p = np.array([float(local_mass.get(value, 0)) for value in values], dtype=np.float64)
    global_p = np.array([float(global_mass.get(value, 0)) for value in values], dtype=np.float64)
    terms = local_p * np.log((local_p + epsilon) / (global_p + epsilon))
    return max(0.0, float(np.sum(terms)))
