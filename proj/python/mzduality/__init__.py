# Copyright 2026 The mzduality Authors
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
"""Asymmetric Mach-Zehnder interferometer with a which-path detector."""

import json as _json

from . import _core
from ._core import (
    DegeneratePortError,
    InterferometerConfig,
    InvalidObservableError,
    MzdError,
    Strategy,
    UnsharpObservable,
    UnsupportedRegimeError,
    a_priori_visibility,
    beam_splitter_unitary,
    coupling_unitary,
    detection_probability,
    detection_probability_closed_form,
    distinguishability,
    eta_values,
    final_state,
    fringe_visibility,
    gamma_term,
    guess_likelihood,
    guess_observable,
    helstrom_bound,
    interference_observable,
    jm_closed_form,
    jm_oracle,
    optimize_strategy,
    path_weights,
    predictability,
)


def run_suite(seed, n_trials, dim_min=2, dim_max=2, pure_states=False,
              optimal_strategy=False, threads=1):
    """Runs the randomized duality suite and returns its summary as a dict."""
    return _json.loads(_core.run_suite(seed, n_trials, dim_min, dim_max, pure_states,
                                       optimal_strategy, threads))
