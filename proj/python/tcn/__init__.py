"""Bounds on higher topological complexity and the odd-sphere motion planner."""

import json

from ._core import (
    Error,
    FieldError,
    InputError,
    MetadataError,
    SizeLimitError,
    domain_count,
    domain_index,
    parse_space,
    run_cli,
    zcl,
)
from . import _core


def bounds(space, n, field="Q", certificate=False):
    """Lower/upper bounds on TC_n as a dict (same keys as `tcn bounds --json`)."""
    return json.loads(_core.bounds_json(space, n, field, certificate))


def plan(config, samples=64, antipode_tol=1e-8):
    """Geodesic plan for a configuration of points on an odd sphere, as a dict."""
    return json.loads(_core.plan_json(config, samples, antipode_tol))


__all__ = [
    "Error",
    "FieldError",
    "InputError",
    "MetadataError",
    "SizeLimitError",
    "bounds",
    "domain_count",
    "domain_index",
    "parse_space",
    "plan",
    "run_cli",
    "zcl",
]
