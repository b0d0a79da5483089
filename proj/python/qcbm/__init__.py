# Copyright 2026 The qcbm Authors
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

"""Quantum circuit Born machines: simulation, gradients and training."""

from ._core import (
    IngestionError,
    Layout,
    NonFiniteGradient,
    RunRecord,
    Spectrum,
    Target,
    TargetKind,
    born_distribution,
    bounds_report,
    d_c,
    depth_to_bound,
    dla_dim,
    gradient,
    hessian,
    hessian_spectrum,
    jsd,
    jsd_grad_q,
    kld,
    loss,
    make_target,
    param_count,
    qfi_matrix,
    qfi_rank,
    quartiles,
    sparsity,
    train,
)

__all__ = [
    "IngestionError",
    "Layout",
    "NonFiniteGradient",
    "RunRecord",
    "Spectrum",
    "Target",
    "TargetKind",
    "born_distribution",
    "bounds_report",
    "d_c",
    "depth_to_bound",
    "dla_dim",
    "gradient",
    "hessian",
    "hessian_spectrum",
    "jsd",
    "jsd_grad_q",
    "kld",
    "loss",
    "make_target",
    "param_count",
    "qfi_matrix",
    "qfi_rank",
    "quartiles",
    "sparsity",
    "train",
]
