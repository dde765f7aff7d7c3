# Copyright 2026 The jonesnmr Authors
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
"""Jones polynomial of closed 3-braids and NMR trace-estimation simulation."""

from ._core import (
    BraidWord,
    bracket_state_sum,
    build_u,
    compile_controlled_s,
    delta_from_theta,
    estimate_trace,
    evaluate,
    exponent_sum,
    invert,
    is_admissible,
    kl_correspondence_check,
    parse_braid,
    preset,
    pulse_angles,
    render,
    rho_word,
    run_sweep,
    simulate_program,
    sweep_csv,
    trace_error_bound,
)

__all__ = [
    "BraidWord",
    "bracket_state_sum",
    "build_u",
    "compile_controlled_s",
    "delta_from_theta",
    "estimate_trace",
    "evaluate",
    "exponent_sum",
    "invert",
    "is_admissible",
    "kl_correspondence_check",
    "parse_braid",
    "preset",
    "pulse_angles",
    "render",
    "rho_word",
    "run_sweep",
    "simulate_program",
    "sweep_csv",
    "trace_error_bound",
]
