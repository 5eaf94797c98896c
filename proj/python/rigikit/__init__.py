# Copyright 2026 The rigikit Authors.
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


"""Rigidity of graphs and bar-joint frameworks.

Graph-level queries take a :class:`Graph`; framework-level queries take the
same JSON documents as the command line tool and the HTTP service, given as
plain dictionaries.
"""

import json

from ._core import (
    Graph,
    RigikitError,
    __version__,
    cone,
    is_globally_rigid,
    is_kl_sparse,
    is_kl_tight,
    is_min_rigid,
    is_rigid,
    k_extension,
    nac_colorings,
    named_graph,
    pebble_components,
    rd_closure,
    rigid_components,
)
from . import _core

__all__ = [
    "Graph",
    "RigikitError",
    "__version__",
    "analyze_framework",
    "analyze_graph",
    "approximate_motion",
    "cone",
    "db",
    "flexes",
    "is_globally_rigid",
    "is_kl_sparse",
    "is_kl_tight",
    "is_min_rigid",
    "is_rigid",
    "k_extension",
    "nac_colorings",
    "named_graph",
    "pebble_components",
    "rd_closure",
    "rigid_components",
]


def analyze_graph(request):
    """{graph, dim, properties, ...} -> {results}"""
    return json.loads(_core._analyze_graph(json.dumps(request)))


def analyze_framework(request):
    """{framework, properties, numerical?, tol?} -> {results}"""
    return json.loads(_core._analyze_framework(json.dumps(request)))


def flexes(request):
    return json.loads(_core._flexes(json.dumps(request)))


def approximate_motion(request):
    return json.loads(_core._motion(json.dumps(request)))


def db(name, params=(), variant=""):
    """Database entry: {name, graph, framework}."""
    return json.loads(_core._db(name, ",".join(str(p) for p in params), variant))
