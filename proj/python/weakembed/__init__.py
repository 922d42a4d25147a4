"""Decide weak embeddability of a graph map into an embedded host graph."""

import json as _json
import os as _os

from ._weakembed import WeakEmbedError
from . import _weakembed as _core

# wheels ship the fixtures next to the module; build trees use the source copy
_bundled = _os.path.join(_os.path.dirname(__file__), "fixtures")
fixture_dir = _bundled if _os.path.isdir(_bundled) else _core.fixture_dir


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def check(instance, trace=False):
    if trace:
        return _json.loads(_core.check_traced(_dump(instance)))
    return _json.loads(_core.check(_dump(instance)))


def z2(instance):
    return _json.loads(_core.z2(_dump(instance)))


def oracle(instance, budget=1e6):
    return _json.loads(_core.oracle(_dump(instance), budget))


def derivative(instance):
    return _json.loads(_core.derivative(_dump(instance)))


def reduce_pl_map(plmap):
    return _json.loads(_core.reduce_pl_map(_dump(plmap)))


def reduce_flat_clustered(clustered):
    return _json.loads(_core.reduce_flat_clustered(_dump(clustered)))


def load_fixture(name):
    with open(_os.path.join(fixture_dir, name + ".json")) as f:
        return _json.load(f)


__all__ = ["WeakEmbedError", "check", "z2", "oracle", "derivative", "reduce_pl_map",
           "reduce_flat_clustered", "load_fixture", "fixture_dir"]
