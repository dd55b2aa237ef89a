# Copyright 2026 The ctk Authors
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

"""Python face of the ctk workbench.

Every query returns a plain dict, decoded from the core's JSON report.
"""

import json

from . import _ctk
from ._ctk import Model, load_model, parse_model

__all__ = [
    "Model",
    "load_model",
    "parse_model",
    "distinguish",
    "clone_check",
    "info_var",
    "observable",
    "measure",
    "superinfo",
    "theorem",
    "check_principle",
    "falsify",
    "capacity",
]


def distinguish(model, variable, seed=None):
    return json.loads(_ctk.distinguish_json(model, variable, seed))


def clone_check(model, variable, blank="", seed=None):
    return json.loads(_ctk.clone_check_json(model, variable, blank, seed))


def info_var(model, variable, blank="", seed=None):
    return json.loads(_ctk.info_var_json(model, variable, blank, seed))


def observable(model, variable, seed=None):
    return json.loads(_ctk.observable_json(model, variable, seed))


def measure(model, variable, seed=None):
    return json.loads(_ctk.measure_json(model, variable, seed))


def superinfo(model, blank="", seed=None):
    return json.loads(_ctk.superinfo_json(model, blank, seed))


def theorem(section, seed=None):
    return json.loads(_ctk.theorem_json(section, seed))


def check_principle(principle, seed=None):
    return json.loads(_ctk.principle_json(principle, seed))


def falsify(max_states, budget=4):
    return json.loads(_ctk.falsify_json(max_states, budget))


def capacity(model, substrate="", seed=None):
    return json.loads(_ctk.capacity_json(model, substrate, seed))
