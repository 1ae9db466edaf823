"""Python interface to the module category classifier.

Thin wrappers over the compiled core: data go in and come out as plain
dicts, serialized through JSON at the boundary.
"""

import json

from scx._core import (  # noqa: F401
    ParseError,
    ValidationError,
    group_order_cap,
    set_group_order_cap,
)
from scx import _core

__all__ = [
    "ParseError",
    "ValidationError",
    "validate",
    "classify",
    "classify_text",
    "fusion",
    "character",
    "quotient",
    "group_order_cap",
    "set_group_order_cap",
]


def _dump(datum):
    return datum if isinstance(datum, str) else json.dumps(datum)


def validate(datum):
    """Check a datum (dict or JSON string); returns a summary dict."""
    return json.loads(_core.validate(_dump(datum)))


def classify(datum):
    """Full classification report as a dict."""
    return json.loads(_core.classify(_dump(datum)))


def classify_text(datum):
    """Full classification report as deterministic plain text."""
    return _core.classify_text(_dump(datum))


def fusion(datum, n1, n2, n3):
    """Fusion dimension of a stable module triple, with per-alpha summands."""
    return json.loads(_core.fusion(_dump(datum), n1, n2, n3))


def character(datum, module_id, characters, truncate):
    """Truncated graded character of a module.

    `characters` maps each component label to a list of (exponent, coefficient)
    pairs with exact rational exponents given as strings, e.g. "1/2".
    """
    chars = characters if isinstance(characters, str) else json.dumps(characters)
    return json.loads(_core.character(_dump(datum), module_id, chars, str(truncate)))


def quotient(datum, orbit_rep):
    """Datum of the orbit quotient for a non-stable orbit, as a dict."""
    return json.loads(_core.quotient(_dump(datum), orbit_rep))
