"""Exact index iteration, common index jumps and case elimination for closed geodesics."""

import json as _json

from . import _core
from ._core import FormatError, PrecisionError, SCHEMA, __version__, backend, classify_case as _classify

__all__ = [
    "FormatError",
    "PrecisionError",
    "SCHEMA",
    "alternating_sum",
    "betti",
    "classify_case",
    "constant_B",
    "eliminate",
    "find_jump",
    "index_at",
    "index_profile",
    "mean_index",
    "mean_index_identity",
    "minimal_period",
    "nullity_at",
    "sweep",
    "validate",
]


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def betti(n, q):
    return _core.betti(n, str(q))


def alternating_sum(n, q_max):
    return int(_core.alternating_sum(n, str(q_max)))


def constant_B(n):
    """B(n, 1) as an exact string such as "-2/3"."""
    return _core.constant_B(n)


def validate(model):
    return _core.validate(_dump(model))


def index_at(model, m):
    return int(_core.index_at(_dump(model), str(m)))


def nullity_at(model, m):
    return _core.nullity_at(_dump(model), str(m))


def mean_index(model):
    return _core.mean_index(_dump(model))


def minimal_period(model):
    return int(_core.minimal_period(_dump(model)))


def index_profile(model, m_max):
    return _json.loads(_core.index_profile(_dump(model), m_max))


def classify_case(model):
    return _classify(_dump(model))


def mean_index_identity(config):
    return _json.loads(_core.mean_index_identity(_dump(config)))


def find_jump(config, eps="", n_bound=10**6):
    return _json.loads(_core.find_jump(_dump(config), eps, str(n_bound)))


def eliminate(c1, c2, eps=""):
    return _json.loads(_core.eliminate(_dump(c1), _dump(c2), eps))


def sweep(grid_toml, jobs=1, details=False):
    return _json.loads(_core.sweep(grid_toml, jobs, details))
