# Copyright 2026 The symrestore Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Entanglement asymmetry dynamics in symmetric random circuits."""

from ._symrestore import (
    asymmetry,
    initial_state,
    oracle,
    parse_angle,
    parse_subsystem,
    read_rdm_dump,
    reduced_density_matrix,
    run_dynamics,
)

__all__ = [
    "asymmetry",
    "initial_state",
    "oracle",
    "parse_angle",
    "parse_subsystem",
    "read_rdm_dump",
    "reduced_density_matrix",
    "run_dynamics",
]
