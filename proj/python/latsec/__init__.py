# Copyright 2026 The latsec Authors.
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

"""Lattice wiretap coding over fading channels."""

from latsec._latsec import (
    InvalidLattice,
    InvalidSpec,
    Lattice,
    LatsecError,
    NestingError,
    NotSmoothEnough,
    UnknownReference,
    achievable_rates,
    banaszczyk_constant,
    catalog_lattice,
    catalog_manifest_json,
    conway_thompson_gap,
    db_to_linear,
    dual,
    field_names,
    flatness_factor,
    flatness_factor_correlated,
    hermite_invariant,
    lln_diagnostic,
    min_distance,
    nats_to_bits,
    product_distance,
    rate_constants,
    rayleigh_capacity,
    sample_discrete_gaussian,
    set_default_threads,
    simulate,
    smoothing_parameter,
)

__version__ = "0.1.0"
