"""Python wrapper over the native curvature-operator core.

Structured values cross the native boundary as JSON text; this module
decodes them into plain dicts.
"""

import json

from curv4._core import (  # noqa: F401
    model_names,
    run_cli,
    version,
)
from curv4 import _core

__all__ = [
    "version",
    "run_cli",
    "model_names",
    "decompose",
    "classify",
    "model_tensor",
]


def decompose(doc):
    """Tensor or operator document (dict or JSON text) -> operator dict."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return json.loads(_core.decompose_json(text))


def classify(doc):
    """Tensor or operator document (dict or JSON text) -> verdict dict."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return json.loads(_core.classify_json(text))


def model_tensor(name):
    """Curvature tensor of a catalog model, as a tensor document dict."""
    return json.loads(_core.model_tensor_json(name))
