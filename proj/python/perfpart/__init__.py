# Copyright 2026 The perfpart Authors
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

"""Perfect partitions of L(r, m) into one-factorizations.

Certificates are returned as JSON text by the native module; the helpers
here decode them.
"""

import json

from ._perfpart import (  # noqa: F401
    build_l61 as _build_l61,
    build_l82 as _build_l82,
    check_extendability,
    count_matchings,
    cycle_string,
    enumerate,
    knn_partition as _knn_partition,
    l2nn_partition as _l2nn_partition,
    necessary_condition,
    parse_cycles,
    permanent,
    search,
    verify as _verify,
)


def build_l61(y0=5, seed="(1 3 2)(4 5 6)", pattern="(1 3 2)(4 6 5)"):
    return json.loads(_build_l61(y0, seed, pattern))


def build_l82():
    return json.loads(_build_l82())


def knn_partition(n):
    return json.loads(_knn_partition(n))


def l2nn_partition(n):
    return json.loads(_l2nn_partition(n))


def verify(certificate):
    """Checks a certificate given as a dict or as JSON text."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return _verify(certificate)
