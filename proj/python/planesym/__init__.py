# Copyright 2026 The planesym Authors
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

"""Exact enumeration of symmetric plane partitions."""

from ._planesym import (
    count,
    enumerate_partitions,
    export_graph,
    hyperfactorial,
    n_class,
    n_class_via_ratios,
    q_count,
    q_sum,
    staggered_factorial,
    staggered_hyperfactorial,
    verify,
)

__all__ = [
    "count",
    "enumerate_partitions",
    "export_graph",
    "hyperfactorial",
    "n_class",
    "n_class_via_ratios",
    "q_count",
    "q_sum",
    "staggered_factorial",
    "staggered_hyperfactorial",
    "verify",
]
