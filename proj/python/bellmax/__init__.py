# Copyright 2026 The bellmax Authors
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
"""Maximal Bell violations, mixedness frontiers and distillability surveys."""

from bellmax._core import (
    BellmaxError,
    bell_expectation,
    chsh_frontier_lambda,
    chsh_frontier_R,
    chsh_max_bell_diagonal,
    chsh_max_from_correlators,
    chsh_max_mems,
    classify,
    concurrence,
    ghz_violation_leading,
    ghz_violation_threshold,
    mabk_bound_diagonal,
    mabk_conjecture_bound,
    maximize_violation,
    mems_state,
    mermin_bound_diagonal,
    mermin_bound_from_correlators,
    mermin_frontier_R,
    mixedness,
    mnms_state,
    partial_transpose,
    solve_mermin_angles,
    survey,
    validate_density,
    werner2,
    werner3,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
