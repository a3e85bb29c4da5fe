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


import math

import numpy as np
import pytest

import symrestore
from symrestore import oracle


def test_parse_helpers():
    assert symrestore.parse_angle("0.2pi") == pytest.approx(0.2 * math.pi)
    assert symrestore.parse_subsystem("0..4", 8) == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        symrestore.parse_angle("nope")


def test_oracle_values():
    ds = oracle.u1_late_asymmetry_exact(16, 4, math.pi / 2)
    assert ds == pytest.approx(0.0028311, abs=5e-7)
    exact, stirling = oracle.nonsym_late_asymmetry(16, 4)
    value, valid = oracle.u1_late_asymmetry_gaussian(16, 4, math.pi / 2)
    assert valid
    assert value == pytest.approx(stirling, abs=1e-12)
    p = oracle.u1_late_purities(16, 4, theta=math.pi / 2)
    assert p["dS2"] == pytest.approx(ds, rel=1e-12)
    assert oracle.nonsym_late_purity(8, 4) == pytest.approx(32 / 257)


def test_theta_scan_and_fit():
    scan = oracle.theta_scan(16)
    assert scan["a"] == 4
    assert scan["theta_max"] / math.pi == pytest.approx(0.14, abs=0.003)
    assert scan["theta_c"] == pytest.approx(2 * scan["theta_max"])
    c, gamma = oracle.fit_power_law([1.0, 4.0], [2.0, 1.0])
    assert gamma == pytest.approx(0.5)
    assert c == pytest.approx(2.0)


def test_state_rdm_asymmetry():
    psi = symrestore.initial_state("ferro", 4, theta=math.pi / 2)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    rho = symrestore.reduced_density_matrix(psi, [0, 1])
    assert rho.shape == (4, 4)
    assert np.trace(rho).real == pytest.approx(1.0)
    res = symrestore.asymmetry(rho, "u1", renyi2=True)
    # Product of two |+> states: charge distribution (1/4, 1/2, 1/4).
    assert res["delta"] == pytest.approx(-math.log(0.375))
    zero = symrestore.initial_state("ferro", 4)
    assert symrestore.asymmetry(symrestore.reduced_density_matrix(zero, [0, 1]))["delta"] == pytest.approx(0.0)


def test_run_dynamics_deterministic():
    kwargs = dict(n=6, subsystem="0..2", theta=0.3 * math.pi, depth=4, shots=5, seed=3)
    a = symrestore.run_dynamics(**kwargs)
    b = symrestore.run_dynamics(workers=1, **kwargs)
    assert a["csv"] == b["csv"]
    assert a["csv"].splitlines()[0] == "t,mean_dS,stderr,n_shots,N,a,theta,symmetry,mode,init,seed"
    assert a["t"] == [0, 1, 2, 3, 4]
    assert all(x >= 0 for x in a["mean_dS"])


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        symrestore.run_dynamics(n=5, shots=1)
    with pytest.raises(MemoryError):
        symrestore.run_dynamics(n=26, shots=16, depth=1)
