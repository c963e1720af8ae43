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

import json
import math

import pytest

import perfpart

EXAMPLE1 = ["11100", "01110", "00111", "10011", "11001"]


def test_counts():
    assert perfpart.count_matchings(1, 6) == 265
    assert perfpart.count_matchings(2, 4) == 4752
    assert perfpart.count_matchings(0, 7) == math.factorial(7)
    report = perfpart.necessary_condition(r=1, m=6, oracle=True)
    assert report["rook_count"] == report["oracle_count"] == 265
    assert report["degree"] == 5 and report["divisible"]


def test_big_count_is_python_int():
    value = perfpart.count_matchings(1, 30)
    assert isinstance(value, int) and value > 2**64


def test_example_matrix():
    assert perfpart.permanent(EXAMPLE1) == 13
    report = perfpart.necessary_condition(rows=EXAMPLE1)
    assert report["rook_count"] is None
    assert not report["divisible"]
    assert perfpart.search(rows=EXAMPLE1)["outcome"] == "none"


def test_cycles_round_trip():
    images = perfpart.parse_cycles("(1 3 2 4)", 4)
    assert images == [3, 4, 2, 1]
    assert perfpart.cycle_string(images) == "(1 3 2 4)"
    with pytest.raises(ValueError):
        perfpart.parse_cycles("(1 1)", 3)


def test_enumerate():
    assert perfpart.enumerate(r=1, m=3) == ["(1 2 3)", "(1 3 2)"]


def test_constructions_verify():
    l61 = perfpart.build_l61()
    assert len(l61["parts"]) == 53
    assert perfpart.verify(l61)["ok"]
    assert perfpart.verify(perfpart.build_l61(y0=3))["ok"]
    assert perfpart.verify(perfpart.knn_partition(4))["ok"]
    assert perfpart.verify(perfpart.l2nn_partition(3))["ok"]


def test_l82():
    cert = perfpart.build_l82()
    assert len(cert["parts"]) == 792
    assert perfpart.verify(cert)["ok"]


def test_tampered_certificate_fails():
    cert = perfpart.knn_partition(3)
    cert["parts"][1][0] = cert["parts"][0][0]
    report = perfpart.verify(cert)
    assert not report["ok"]
    kinds = {kind for kind, _ in report["violations"]}
    assert "overlap" in kinds


def test_search_l41():
    result = perfpart.search(r=1, m=4, find_all=True)
    assert result["outcome"] == "found"
    assert len(result["partitions"]) == 1
    cert = json.loads(result["partitions"][0])
    assert len(cert["parts"]) == 3
    assert perfpart.verify(cert)["ok"]


def test_extendability():
    ok, checked, counterexample = perfpart.check_extendability(r=0, m=4)
    assert ok and checked == 24 and counterexample is None
