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

import json

import pytest

import planesym


def test_counts_agree():
    assert planesym.n_class(1, (2, 2, 2)) == 20
    for method in ("formula", "matrix", "oracle"):
        assert planesym.count(3, (2, 2, 2), method) == 5
    assert planesym.count(9, (4, 4, 4), "ratios") == 4


def test_big_values_are_python_ints():
    value = planesym.n_class(1, (10, 10, 10))
    assert isinstance(value, int)
    assert value > 2**63


def test_q_enumeration():
    assert planesym.q_count((1, 1, 1)) == [1, 1]
    assert planesym.q_count((2, 2, 2)) == planesym.q_sum((2, 2, 2))
    assert sum(planesym.q_sum((2, 2, 2))) == 20


def test_hyperfactorials():
    assert planesym.hyperfactorial(4) == 1 * 1 * 2 * 6
    assert planesym.n_class_via_ratios(1, (3, 3, 3)) == 980


def test_partitions_and_export():
    parts = planesym.enumerate_partitions((1, 1, 1))
    assert parts == [[[0]], [[1]]]
    graph = json.loads(planesym.export_graph("z", 1, (1, 1, 1)))
    assert len(graph["edges"]) == 6
    assert "graph" in planesym.export_graph("quotient", 3, (2, 2, 2), "dot")


def test_verify():
    ok, csv = planesym.verify(2, [1, 3])
    assert ok
    assert csv.startswith("class,a,b,c,method,value,micros\n")


def test_errors():
    with pytest.raises(ValueError):
        planesym.count(1, (2, 2, 2), "guess")
    with pytest.raises(ValueError):
        planesym.n_class(11, (1, 1, 1))
    with pytest.raises(ValueError):
        planesym.export_graph("cube", 1, (1, 1, 1))
