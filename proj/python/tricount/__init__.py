# Copyright 2026 The tricount Authors.
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
"""Exact and approximate triangle counting."""

from ._tricount import (
    CapExceededError,
    ContractError,
    Estimate,
    ExactResult,
    Graph,
    IoError,
    MemoryReport,
    OutOfRangeError,
    ParameterError,
    ParseError,
    ProjectionReport,
    StreamResult,
    TricountError,
    bernoulli_subset,
    closed_walks_6,
    condition_check,
    count_brute,
    count_exact,
    project_count,
    recommend_p,
    required_samples,
    sample,
    sparsify,
    stream_estimate,
    stream_file,
    sufficient_p,
    universe_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]
