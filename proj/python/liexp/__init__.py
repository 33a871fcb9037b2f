"""Exact Lie algebra and enveloping-algebra arithmetic for kinematical algebras."""

import json as _json

from ._core import (
    Algebra,
    Element,
    Error,
    JacobiError,
    ParseError,
    appendix_identities,
    catalog,
    catalog_names,
    contract,
    load_algebra,
    parse_algebra,
)
from ._core import expand_json as _expand_json

__all__ = [
    "Algebra",
    "Element",
    "Error",
    "JacobiError",
    "ParseError",
    "appendix_identities",
    "catalog",
    "catalog_names",
    "contract",
    "expand",
    "load_algebra",
    "parse_algebra",
]


def expand(driver, witness=None, formal=False, timing=False):
    """Run an expansion driver and return the report as a dict.

    ``witness`` maps parameter names to rational strings, e.g. ``{"a2": "-1"}``.
    """
    text = _expand_json(driver, {k: str(v) for k, v in (witness or {}).items()}, formal, timing)
    return _json.loads(text)
