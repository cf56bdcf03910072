# Copyright 2026 The holevo-gauss Authors
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
"""Holevo Cramer-Rao bounds for Gaussian displacement estimation."""
"""Smoke tests for the Python bindings."""

import json
import math

import numpy as np
import pytest

import holevo_gauss as hg


def closed(v, r):
    if r < 0.5 * math.log(2 * v):
        return (4 * v * v - 1) / (2 * v * math.cosh(2 * r) - 1)
    return 4 * v * math.exp(-2 * r)


@pytest.mark.parametrize("v,r", [(0.75, 0.5), (1.0, 0.1), (2.0, 0.0), (0.5, 0.3)])
def test_bound_matches_closed_form(v, r):
    res = hg.holevo_bound(hg.symmetric_tmst_probe(v, r))
    assert res["sigma_star"] == pytest.approx(closed(v, r), abs=1e-7)
    assert hg.holevo_bound_closed(v, r) == pytest.approx(closed(v, r), rel=1e-14)
    assert res["sigma_star"] >= max(res["sld"], res["rld"]) - 1e-7
    assert res["achieved_mse"] == pytest.approx(res["sigma_star"], abs=1e-7)


def test_plan_circuit_below_threshold():
    res = hg.holevo_bound(hg.symmetric_tmst_probe(1.0, 0.1))
    assert res["circuit"] == "double_unbalanced_heterodyne"
    assert res["t"] == pytest.approx(hg.heterodyne_transmission(1.0, 0.1), abs=1e-8)


def test_probe_round_trip():
    model = hg.ProbeModel(np.eye(2) * 0.5, np.eye(2))
    again = hg.parse_probe(model.to_json())
    assert again.n_modes == 1
    np.testing.assert_array_equal(again.covariance, model.covariance)
    doc = json.loads(model.to_json())
    assert doc["ordering"] == "yx-interleaved"


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        hg.ProbeModel(np.eye(2) * 0.1, np.eye(2))
    with pytest.raises(ValueError):
        hg.parse_probe("{")
    with pytest.raises(hg.UnidentifiableParameterError):
        hg.ProbeModel(np.eye(2), np.array([[1.0, 0.0], [2.0, 0.0]]))


def test_certificate_and_threshold():
    hi = hg.c0_upper(0.75, 0.1)
    for c0 in (0.0, 0.5 * hi, hi):
        rep = hg.verify_closed_form(0.75, 0.1, c0)
        assert rep["optimal"]
    r0 = hg.entanglement_threshold(0.75)
    assert r0 == pytest.approx(0.5 * math.log(1.5))
    assert not hg.is_entangled(0.75, r0)
    assert hg.is_entangled(0.75, r0 + 1e-6)


def test_realify_and_trabs():
    h = np.array([[1.0, 1j], [-1j, 1.0]])
    assert np.linalg.eigvalsh(hg.realify(h)).min() == pytest.approx(0.0, abs=1e-14)
    assert hg.trabs(h) == pytest.approx(2.0)


def test_simulate_is_reproducible():
    args = ("double_homodyne", 0.75, 0.5, 1.0, (0.3, -0.2), 20000, 42)
    a = hg.simulate(*args)
    b = hg.simulate(*args)
    assert a["empirical_mse_sum"] == b["empirical_mse_sum"]
    assert a["expected_mse"] == pytest.approx(3 * math.exp(-1), rel=1e-12)
    assert abs(a["empirical_mse_sum"] - a["expected_mse"]) < 4 * a["standard_error"]
