"""Python access to the wh3 verification engine."""

import json

from ._core import (
    ParseError,
    PresentationError,
    Scalar,
    check_ids,
    is_member,
    normalize,
    omega,
    run_cli,
)
from . import _core


def verify(check, errata="on", mode=None, set="", mutations=()):
    """Runs one check and returns its report as a dict (timing omitted)."""
    return json.loads(_core.verify_json(check, errata, mode, set, list(mutations)))


def export(algebra, errata="on"):
    """Algebra-definition dict for a catalog family or presentation."""
    return json.loads(_core.export_json(algebra, errata))


__all__ = [
    "ParseError",
    "PresentationError",
    "Scalar",
    "check_ids",
    "export",
    "is_member",
    "normalize",
    "omega",
    "run_cli",
    "verify",
]
