# Copyright 2026 The cheegerlab Authors
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

"""Cheeger constants, honeycomb certificates and partition bounds."""

import json

from . import _core
from ._core import Error, SolverError, ValidationError, hexagon_constant, set_threads

__all__ = [
    "Error",
    "SolverError",
    "ValidationError",
    "asymptotic_report",
    "canonical_graph",
    "certificate",
    "chain_bound",
    "cheeger",
    "dumps",
    "hales",
    "hexagon_constant",
    "honeycomb",
    "optimize",
    "polygon",
    "random_chain",
    "render_svg",
    "set_threads",
    "structure",
]


def _text(artifact):
    return artifact if isinstance(artifact, str) else json.dumps(artifact)


def dumps(artifact):
    """JSON text for a dict artifact; strings pass through."""
    return _text(artifact)


def polygon(vertices):
    """Polygon artifact from an iterable of (x, y) pairs."""
    return {"schema": 1, "kind": "polygon", "vertices": [[float(x), float(y)] for x, y in vertices]}


def cheeger(poly, tol=1e-13):
    return json.loads(_core.cheeger(_text(poly), tol))


def structure(domain):
    return json.loads(_core.structure(_text(domain)))


def hales(geometry, clamp="scaled"):
    return json.loads(_core.hales(_text(geometry), clamp))


def certificate(cluster, clamp="scaled"):
    return json.loads(_core.certificate(_text(cluster), clamp))


def honeycomb(l=None, cells=None):
    return json.loads(_core.honeycomb(l, None if cells is None else [tuple(c) for c in cells]))


def canonical_graph(cluster):
    return json.loads(_core.canonical_graph(_text(cluster)))


def chain_bound(chain, samples=10_000_000, seed=1, monte_carlo=False):
    return json.loads(_core.chain_bound(_text(chain), samples, seed, monte_carlo))


def random_chain(flavor, m, seed):
    return json.loads(_core.random_chain(flavor, m, seed))


def optimize(k, budget=20000, seed=1, restarts=8, container=None):
    c = None if container is None else _text(container)
    return json.loads(_core.optimize(k, budget, seed, restarts, c))


def asymptotic_report(ks, budget=20000, seed=1, restarts=8):
    return json.loads(_core.asymptotic_report(list(ks), budget, seed, restarts))["rows"]


def render_svg(geometry):
    return _core.render_svg(_text(geometry))
