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

from ._core import (
    HolevoError,
    InputError,
    InvalidStateError,
    ProbeModel,
    UnidentifiableParameterError,
    c0_upper,
    entanglement_threshold,
    heterodyne_transmission,
    holevo_bound,
    holevo_bound_closed,
    is_entangled,
    load_probe,
    parse_probe,
    realify,
    simulate,
    symmetric_tmst_probe,
    trabs,
    verify_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "HolevoError",
    "InputError",
    "InvalidStateError",
    "ProbeModel",
    "UnidentifiableParameterError",
    "c0_upper",
    "entanglement_threshold",
    "heterodyne_transmission",
    "holevo_bound",
    "holevo_bound_closed",
    "is_entangled",
    "load_probe",
    "parse_probe",
    "realify",
    "simulate",
    "symmetric_tmst_probe",
    "trabs",
    "verify_closed_form",
]
